//! Exact densest-subcomplex densities `e(X)` and `e_w(X)`, admissibility,
//! and sparsity searches.
//!
//! Densities are minimized over nonempty face subsets `T`:
//! `e(X) = min |V(T)| / |T|` and `e_w(X) = min |V(T) \ [w]| / |T|`.
//! Isolated vertices never help a minimizer, so face-induced subcomplexes
//! suffice. All comparisons use exact rationals.

pub mod flow;
pub mod prototypes;
pub mod sparse;

use serde::Serialize;

use crate::complex::{Complex2, Face};
use crate::error::{Error, Result};
use crate::ratio::{half, Rational};
use flow::{FlowNetwork, INF};

pub use prototypes::{check_sparse_by_prototypes, embedding, enumerate_dense_prototypes};
pub use sparse::{check_sparse, check_sparse3, SparsityOutcome, SparsityVerdict};

/// Largest face count handled by subset enumeration in [`density_e`].
pub const BRUTE_FORCE_MAX_FACES: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "w", rename_all = "snake_case")]
pub enum DensityMode {
    Unrestricted,
    Anchored(u32),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DensityReport {
    #[serde(serialize_with = "ser_ratio")]
    pub value: Rational,
    pub witness: Vec<Face>,
    pub mode: DensityMode,
}

pub(crate) fn ser_ratio<S: serde::Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}

impl DensityReport {
    pub fn anchor(&self) -> u32 {
        match self.mode {
            DensityMode::Unrestricted => 0,
            DensityMode::Anchored(w) => w,
        }
    }

    /// Recomputes the ratio of the witness from scratch.
    pub fn witness_ratio(&self) -> Rational {
        witness_ratio(&self.witness, self.anchor())
    }
}

/// `|V(T) \ [w]| / |T|` for a nonempty face list.
pub fn witness_ratio(faces: &[Face], w: u32) -> Rational {
    let mut vs: Vec<u32> = faces.iter().flatten().copied().filter(|&v| v > w).collect();
    vs.sort_unstable();
    vs.dedup();
    Rational::new(vs.len() as i64, faces.len() as i64)
}

fn check_anchor(x: &Complex2, w: u32) -> Result<()> {
    if w != 0 && w != 3 {
        return Err(Error::UnsupportedAnchor(w));
    }
    if x.n() < w {
        return Err(Error::AnchorMissing(w));
    }
    if x.f2() == 0 {
        return Err(Error::NoFaces);
    }
    Ok(())
}

fn mode(w: u32) -> DensityMode {
    if w == 0 {
        DensityMode::Unrestricted
    } else {
        DensityMode::Anchored(w)
    }
}

/// `e(X)` with a witness. Brute force up to [`BRUTE_FORCE_MAX_FACES`]
/// faces, parametric max-flow beyond.
pub fn density_e(x: &Complex2) -> Result<DensityReport> {
    density_e_w(x, 0)
}

/// `e_w(X)` for `w ∈ {0, 3}`; `w = 0` is `e(X)`.
pub fn density_e_w(x: &Complex2, w: u32) -> Result<DensityReport> {
    check_anchor(x, w)?;
    if x.faces().len() <= BRUTE_FORCE_MAX_FACES {
        density_brute_force(x, w)
    } else {
        density_by_flow(x, w)
    }
}

/// Exhaustive minimum over all nonempty face subsets. Ties keep the
/// subset with the least bitmask (faces in sorted order).
pub fn density_brute_force(x: &Complex2, w: u32) -> Result<DensityReport> {
    check_anchor(x, w)?;
    let faces = x.faces();
    let k = faces.len();
    if k > BRUTE_FORCE_MAX_FACES {
        return Err(Error::TooLarge(format!("{k} faces for subset enumeration")));
    }
    let mut labels: Vec<u32> = faces.iter().flatten().copied().filter(|&v| v > w).collect();
    labels.sort_unstable();
    labels.dedup();
    let fmask: Vec<u64> = faces
        .iter()
        .map(|f| {
            f.iter()
                .filter_map(|v| labels.binary_search(v).ok())
                .fold(0u64, |m, i| m | (1 << i))
        })
        .collect();
    let mut masks = vec![0u64; 1 << k];
    let mut best: Option<(u32, u32, usize)> = None;
    for s in 1usize..(1 << k) {
        let low = s.trailing_zeros() as usize;
        masks[s] = masks[s & (s - 1)] | fmask[low];
        let (v, t) = (masks[s].count_ones(), s.count_ones());
        if best.is_none_or(|(bv, bt, _)| (v as u64) * (bt as u64) < (bv as u64) * (t as u64)) {
            best = Some((v, t, s));
        }
    }
    let (v, t, s) = best.expect("at least one face");
    let witness = (0..k).filter(|i| s >> i & 1 == 1).map(|i| faces[i]).collect();
    Ok(DensityReport { value: Rational::new(v as i64, t as i64), witness, mode: mode(w) })
}

/// Dinkelbach iteration on a max-closure network: source to each face with
/// capacity `num`, face to each of its non-anchor vertices with infinite
/// capacity, vertex to sink with capacity `den`, for the current ratio
/// `num/den`. A positive closure value yields a strictly denser set.
pub fn density_by_flow(x: &Complex2, w: u32) -> Result<DensityReport> {
    check_anchor(x, w)?;
    let faces = x.faces();
    let mut labels: Vec<u32> = faces.iter().flatten().copied().filter(|&v| v > w).collect();
    labels.sort_unstable();
    labels.dedup();
    let fcount = faces.len();
    let (src, sink) = (0, 1 + fcount + labels.len());
    let mut witness: Vec<usize> = (0..fcount).collect();
    let mut ratio = (labels.len() as i64, fcount as i64);
    loop {
        let (num, den) = ratio;
        if num == 0 {
            break;
        }
        let mut g = FlowNetwork::new(sink + 1);
        for (i, f) in faces.iter().enumerate() {
            g.add_edge(src, 1 + i, num);
            for v in f {
                if let Ok(j) = labels.binary_search(v) {
                    g.add_edge(1 + i, 1 + fcount + j, INF);
                }
            }
        }
        for j in 0..labels.len() {
            g.add_edge(1 + fcount + j, sink, den);
        }
        let cut = g.max_flow(src, sink);
        if num * fcount as i64 - cut <= 0 {
            break;
        }
        let side = g.source_side(src);
        let chosen: Vec<usize> = (0..fcount).filter(|&i| side[1 + i]).collect();
        let verts = (0..labels.len()).filter(|&j| side[1 + fcount + j]).count() as i64;
        debug_assert!(verts * den < num * chosen.len() as i64);
        ratio = (verts, chosen.len() as i64);
        witness = chosen;
    }
    Ok(DensityReport {
        value: Rational::new(ratio.0, ratio.1),
        witness: witness.into_iter().map(|i| faces[i]).collect(),
        mode: mode(w),
    })
}

/// `e(X) >= 1/2 + eps`; complexes without faces are admissible.
pub fn is_admissible(x: &Complex2, eps: Rational) -> Result<bool> {
    if x.f2() == 0 {
        return Ok(true);
    }
    Ok(density_e(x)?.value >= half() + eps)
}

/// `e_3(X) >= 1/2 + eps`; complexes without faces are admissible.
pub fn is_admissible_anchored(x: &Complex2, eps: Rational) -> Result<bool> {
    if x.f2() == 0 {
        return Ok(true);
    }
    Ok(density_e_w(x, 3)?.value >= half() + eps)
}

/// `e(X) > 1/2`, i.e. admissible for some positive margin.
pub fn is_strictly_admissible(x: &Complex2) -> Result<bool> {
    if x.f2() == 0 {
        return Ok(true);
    }
    Ok(density_e(x)?.value > half())
}
