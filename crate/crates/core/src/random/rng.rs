//! Reproducible random streams.
//!
//! Every trial draws from its own ChaCha8 keystream. The 256-bit key is the
//! SHA-256 digest of
//!
//! ```text
//! "randcomplex/v1" 0x00 purpose 0x00 n 0x00 p 0x00 trial 0x00 seed
//! ```
//!
//! with integers in decimal ASCII and `p` in its canonical decimal form
//! (shortest round-trip representation). Uniforms on `[0, 1)` are
//! `(w >> 11) * 2^-53` for successive 64-bit keystream words `w`, and
//! logarithms come from the pure-Rust `libm`, so streams are bit-identical
//! on every platform. Changing any of this invalidates committed snapshots.

use std::fmt;
use std::str::FromStr;

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};
use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};

/// A probability carried with its canonical decimal text.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Probability {
    value: f64,
    text: String,
}

impl Probability {
    pub fn new(value: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&value) {
            return Err(Error::BadProbability(value.to_string()));
        }
        // Display for f64 is the shortest string that round-trips.
        Ok(Probability { value, text: format!("{value}") })
    }

    pub fn value(&self) -> f64 {
        self.value
    }

    pub fn as_str(&self) -> &str {
        &self.text
    }

    pub fn zero() -> Self {
        Self::new(0.0).unwrap()
    }

    pub fn one() -> Self {
        Self::new(1.0).unwrap()
    }
}

impl FromStr for Probability {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let v: f64 = t.parse().map_err(|_| Error::BadProbability(s.to_string()))?;
        if !v.is_finite() {
            return Err(Error::BadProbability(s.to_string()));
        }
        Probability::new(v).map_err(|_| Error::BadProbability(s.to_string()))
    }
}

impl fmt::Display for Probability {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.text)
    }
}

/// Labels identifying one reproducible random stream.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RngSpec {
    pub seed: u64,
    pub purpose: String,
    pub n: u64,
    /// Canonical decimal text of `p`, empty for p-independent streams.
    pub p: String,
    pub trial: u64,
}

impl RngSpec {
    pub fn new(seed: u64, purpose: &str, n: u64, p: &Probability, trial: u64) -> Self {
        RngSpec { seed, purpose: purpose.to_string(), n, p: p.as_str().to_string(), trial }
    }

    /// A stream that does not depend on `p`, used for monotone coupling.
    pub fn p_free(seed: u64, purpose: &str, n: u64, trial: u64) -> Self {
        RngSpec { seed, purpose: purpose.to_string(), n, p: String::new(), trial }
    }

    pub fn with_trial(&self, trial: u64) -> Self {
        RngSpec { trial, ..self.clone() }
    }

    pub fn key(&self) -> [u8; 32] {
        let mut h = Sha256::new();
        for part in [
            "randcomplex/v1",
            &self.purpose,
            &self.n.to_string(),
            &self.p,
            &self.trial.to_string(),
            &self.seed.to_string(),
        ] {
            h.update(part.as_bytes());
            h.update([0u8]);
        }
        let mut key = [0u8; 32];
        key.copy_from_slice(&h.finalize());
        key
    }

    pub fn stream(&self) -> Stream {
        Stream { rng: ChaCha8Rng::from_seed(self.key()) }
    }
}

/// A keyed ChaCha8 stream with the fixed derivations above.
pub struct Stream {
    rng: ChaCha8Rng,
}

impl Stream {
    pub fn next_u64(&mut self) -> u64 {
        self.rng.next_u64()
    }

    /// Uniform on `[0, 1)` with 53 random bits.
    pub fn uniform(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Number of failures before the first success of a Bernoulli(p)
    /// sequence, for `0 < p < 1`. Saturates at `u64::MAX`.
    pub fn geometric(&mut self, log_q: f64) -> u64 {
        // 1 - u lies in (0, 1], so the log is finite and nonpositive.
        let u = 1.0 - self.uniform();
        let g = libm::floor(libm::log(u) / log_q);
        if g >= u64::MAX as f64 {
            u64::MAX
        } else {
            g as u64
        }
    }

    /// Uniform index in `0..bound` by rejection.
    pub fn below(&mut self, bound: u64) -> u64 {
        assert!(bound > 0);
        let zone = u64::MAX - (u64::MAX % bound);
        loop {
            let x = self.next_u64();
            if x < zone {
                return x % bound;
            }
        }
    }
}
