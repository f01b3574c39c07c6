//! Boundary matrices, Betti numbers over GF(2), GF(q) and Q, and integral
//! `H_1` via Smith normal form.
//!
//! Orientation: simplices are ordered by sorted vertices; the face `abc`
//! has boundary `bc - ac + ab` and the edge `ab` has boundary `b - a`.

pub mod gf2;
pub mod gfq;
pub mod rational;
pub mod snf;
pub mod sparse;

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::complex::{boundary_edges, Complex2};
use crate::error::{Error, Result};

pub use gf2::{rank_gf2, rank_gf2_capped, Gf2Basis};
pub use gfq::{is_prime, rank_gfq};
pub use rational::{rank_rational, rank_rational_big};
pub use snf::{lattice_basis, prime_power_parts, smith_normal_form, SnfResult};
pub use sparse::SparseMatrix;

/// Default cap on `f_1` for Smith normal form computations.
pub const SNF_DEFAULT_CAP: usize = 2000;

/// Dense entries allowed on the exact rational path.
const RATIONAL_ENTRY_CAP: usize = 20_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(into = "String")]
pub enum Coeff {
    Gf2,
    Gfq(u64),
    Rational,
}

impl fmt::Display for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coeff::Gf2 => write!(f, "gf2"),
            Coeff::Gfq(q) => write!(f, "gfq:{q}"),
            Coeff::Rational => write!(f, "q"),
        }
    }
}

impl From<Coeff> for String {
    fn from(c: Coeff) -> String {
        c.to_string()
    }
}

impl FromStr for Coeff {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "gf2" => Ok(Coeff::Gf2),
            "q" | "rational" => Ok(Coeff::Rational),
            _ => {
                let q = s
                    .strip_prefix("gfq:")
                    .and_then(|q| q.parse::<u64>().ok())
                    .ok_or_else(|| Error::Config(format!("unknown coefficient {s:?}")))?;
                if !is_prime(q) {
                    return Err(Error::BadField(q));
                }
                Ok(if q == 2 { Coeff::Gf2 } else { Coeff::Gfq(q) })
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundaryPair {
    /// `f_0 x f_1`
    pub d1: SparseMatrix,
    /// `f_1 x f_2`
    pub d2: SparseMatrix,
}

impl BoundaryPair {
    /// Whether `d1 * d2 = 0` over the integers.
    pub fn composes_to_zero(&self) -> bool {
        self.d1.checked_mul(&self.d2).is_some_and(|m| m.is_zero())
    }
}

fn d1_matrix(x: &Complex2) -> SparseMatrix {
    let cols = x
        .edges()
        .map(|(a, b)| vec![(a as usize - 1, -1), (b as usize - 1, 1)])
        .collect();
    SparseMatrix::new(x.n() as usize, cols)
}

fn d2_matrix(x: &Complex2) -> SparseMatrix {
    let cols = x
        .faces()
        .iter()
        .map(|f| {
            let [bc, ac, ab] = boundary_edges(f);
            let idx = |e| x.edge_index(e).expect("boundary edge present");
            vec![(idx(bc), 1), (idx(ac), -1), (idx(ab), 1)]
        })
        .collect();
    SparseMatrix::new(x.f1() as usize, cols)
}

pub fn boundary_matrices(x: &Complex2) -> BoundaryPair {
    let pair = BoundaryPair { d1: d1_matrix(x), d2: d2_matrix(x) };
    debug_assert!(x.f1() > 5000 || pair.composes_to_zero());
    pair
}

fn rank_over(m: &SparseMatrix, coeff: Coeff, cap: usize) -> Result<usize> {
    match coeff {
        Coeff::Gf2 => Ok(rank_gf2_capped(m, cap)),
        Coeff::Gfq(q) => rank_gfq(m, q),
        Coeff::Rational => {
            let entries = m.nrows().saturating_mul(m.ncols());
            if entries > RATIONAL_ENTRY_CAP {
                return Err(Error::SizeCapExceeded { size: entries, cap: RATIONAL_ENTRY_CAP });
            }
            match rank_rational(m) {
                Ok(r) => Ok(r),
                Err(Error::Overflow) => Ok(rank_rational_big(m)),
                Err(e) => Err(e),
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BettiProfile {
    pub coeff: Coeff,
    pub b0: u64,
    pub b1: u64,
    pub b2: u64,
    pub rank_d1: u64,
    pub rank_d2: u64,
}

impl BettiProfile {
    pub fn triple(&self) -> (u64, u64, u64) {
        (self.b0, self.b1, self.b2)
    }

    pub fn euler(&self) -> i64 {
        self.b0 as i64 - self.b1 as i64 + self.b2 as i64
    }
}

/// Betti numbers of `x` over the given field.
pub fn betti(x: &Complex2, coeff: Coeff) -> Result<BettiProfile> {
    if let Coeff::Gfq(q) = coeff {
        if !is_prime(q) {
            return Err(Error::BadField(q));
        }
    }
    let d1 = d1_matrix(x);
    let r1 = rank_over(&d1, coeff, usize::MAX)?;
    let (f0, f1, f2) = (x.f0() as usize, x.f1() as usize, x.f2() as usize);
    // im d2 lies in ker d1, which bounds the rank.
    let r2 = if f2 == 0 { 0 } else { rank_over(&d2_matrix(x), coeff, f1 - r1)? };
    Ok(BettiProfile {
        coeff,
        b0: (f0 - r1) as u64,
        b1: (f1 - r1 - r2) as u64,
        b2: (f2 - r2) as u64,
        rank_d1: r1 as u64,
        rank_d2: r2 as u64,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct H1Integral {
    /// Free rank of `H_1(X; Z)`.
    pub rank: u64,
    /// Torsion as sorted prime powers.
    pub torsion: Vec<u64>,
    /// Invariant factors of `d2` greater than one.
    pub invariant_factors: Vec<u64>,
}

/// `H_1(X; Z) = Z^rank ⊕ torsion`, from the Smith normal form of `d2`.
///
/// The torsion of `ker d1 / im d2` equals that of `Z^{f1} / im d2` because
/// `Z^{f1} / ker d1` is free.
pub fn h1_integral(x: &Complex2, cap: usize) -> Result<H1Integral> {
    let f1 = x.f1() as usize;
    if f1 > cap {
        return Err(Error::SizeCapExceeded { size: f1, cap });
    }
    let r1 = x.n() as usize - x.components().len();
    let d2 = d2_matrix(x);
    let basis = lattice_basis(d2.columns().iter().cloned(), f1)?;
    let snf = smith_normal_form(&basis)?;
    let torsion_factors = snf.torsion();
    Ok(H1Integral {
        rank: (f1 - r1 - snf.rank()) as u64,
        torsion: prime_power_parts(&torsion_factors),
        invariant_factors: torsion_factors,
    })
}
