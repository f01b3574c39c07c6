//! The face process: triples arrive one at a time in order of their
//! coupled uniforms, and the `H_1(GF(2))` hitting time is recorded.

use serde::Serialize;

use crate::complex::{boundary_edges, Complex2};
use crate::error::Result;
use crate::homology::Gf2Basis;
use crate::random::{face_arrivals, Probability, RngSpec};
use crate::sweep::{TrialRecord, SWEEP_PURPOSE};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct HittingTime {
    pub n: u32,
    pub trial: u64,
    /// Arrival time of the face that kills `H_1(GF(2))`; coupled Y(n, p)
    /// has `β_1 = 0` exactly for `p` above it.
    pub p_hit: f64,
    /// Faces present at that moment.
    pub faces: u64,
}

impl HittingTime {
    pub fn record(&self, seed: u64) -> TrialRecord {
        let p = Probability::new(self.p_hit).map(|p| p.to_string()).unwrap_or_default();
        TrialRecord {
            n: self.n,
            p,
            trial: self.trial,
            seed,
            f2: Some(self.faces),
            check: "h1_gf2_hitting".into(),
            outcome: "hit".into(),
            detail: format!("faces={}", self.faces),
            ms: None,
        }
    }
}

/// Adds faces in arrival order until the mod 2 cycle space of the
/// complete graph is filled.
pub fn h1_hitting_time(n: u32, seed: u64, trial: u64) -> Result<HittingTime> {
    let arrivals = face_arrivals(n, &RngSpec::p_free(seed, SWEEP_PURPOSE, n as u64, trial))?;
    let skeleton = Complex2::full(n, [])?;
    let f1 = skeleton.f1() as usize;
    let target = f1 - (n as usize - 1);
    let mut basis = Gf2Basis::new(f1);
    let mut last = 0.0;
    let mut faces = 0;
    for (u, f) in arrivals {
        if basis.rank() == target {
            break;
        }
        faces += 1;
        last = u;
        basis.insert_bits(boundary_edges(&f).map(|e| skeleton.edge_index(e).expect("complete skeleton")));
    }
    Ok(HittingTime { n, trial, p_hit: last, faces })
}
