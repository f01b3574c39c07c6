//! Noncontractibility of the anchor triangle `1 -> 2 -> 3`.

use serde::Serialize;

use crate::complex::Complex2;
use crate::density::{check_sparse3, density_e_w, DensityReport, SparsityVerdict};
use crate::error::{Error, Result};
use crate::ratio::{half, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Id3Certificate {
    /// True when the anchor triangle is certifiably noncontractible;
    /// false is inconclusive.
    pub noncontractible: bool,
    /// `e_3(X)` with its witness; absent when there are no faces.
    pub density: Option<DensityReport>,
}

fn check_anchor_edges(x: &Complex2) -> Result<()> {
    if x.n() < 3 {
        return Err(Error::AnchorMissing(3));
    }
    if !(x.has_edge(1, 2) && x.has_edge(2, 3) && x.has_edge(1, 3)) {
        return Err(Error::MissingAnchorEdges);
    }
    Ok(())
}

/// Certifies that `1 -> 2 -> 3` is not null-homotopic when `e_3(X) > 1/2`.
/// Without faces the triangle is a graph cycle and cannot contract.
///
/// A positive `e_3` alone is not enough: the cone over the triangle has
/// `e_3 = 1/3` and fills it with three faces. A filling would give a
/// subcomplex with `χ <= 1` and `L <= 3`, and the popped bound then forces
/// `f_2 <= -1 / (2 e_3 - 1) < 0`.
pub fn certify_id3_noncontractible(x: &Complex2) -> Result<Id3Certificate> {
    check_anchor_edges(x)?;
    if x.f2() == 0 {
        return Ok(Id3Certificate { noncontractible: true, density: None });
    }
    let d = density_e_w(x, 3)?;
    Ok(Id3Certificate { noncontractible: d.value > half(), density: Some(d) })
}

/// Sparsity evidence for a nontrivial fundamental group. This is never a
/// certificate: the required `m` for a given `ε` is not explicit.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Pi1Evidence {
    /// Always `"evidence"`.
    pub kind: &'static str,
    pub verdict: SparsityVerdict,
}

impl Pi1Evidence {
    pub fn sparse(&self) -> bool {
        self.verdict.is_sparse()
    }
}

pub fn evidence_pi1_nontrivial(x: &Complex2, eps: Rational, m: usize) -> Result<Pi1Evidence> {
    if x.n() < 3 {
        return Err(Error::TooSmall { n: x.n(), min: 3 });
    }
    Ok(Pi1Evidence { kind: "evidence", verdict: check_sparse3(x, eps, m) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{k4, t1, tet, x5};
    use crate::ratio::parse_rational;

    #[test]
    fn fixture_id3() {
        assert!(certify_id3_noncontractible(&x5()).unwrap().noncontractible);
        assert!(!certify_id3_noncontractible(&tet()).unwrap().noncontractible);
        assert!(!certify_id3_noncontractible(&t1()).unwrap().noncontractible);
        let k = certify_id3_noncontractible(&k4()).unwrap();
        assert!(k.noncontractible && k.density.is_none());
        let x = Complex2::from_faces(5, vec![[1, 4, 5]], []).unwrap();
        assert_eq!(certify_id3_noncontractible(&x), Err(Error::MissingAnchorEdges));
    }

    #[test]
    fn adding_anchor_face_forces_zero() {
        let x = x5().with_faces([[1, 2, 3]]).unwrap();
        let c = certify_id3_noncontractible(&x).unwrap();
        assert!(!c.noncontractible);
        assert_eq!(c.density.unwrap().witness, vec![[1, 2, 3]]);
    }

    #[test]
    fn cone_over_anchor_is_not_certified() {
        let cone = Complex2::full(4, [[1, 2, 4], [1, 3, 4], [2, 3, 4]]).unwrap();
        let c = certify_id3_noncontractible(&cone).unwrap();
        assert_eq!(c.density.unwrap().value, Rational::new(1, 3));
        assert!(!c.noncontractible);
        let a = crate::pi1::area_search(&cone, &crate::LoopWord::id3(&cone).unwrap(), 3).unwrap();
        assert_eq!(a.upper_bound(), Some(3));
    }

    #[test]
    fn fixture_evidence() {
        let eps = parse_rational("0.1").unwrap();
        let e = evidence_pi1_nontrivial(&tet(), eps, 1).unwrap();
        assert_eq!(e.verdict.witness(), Some(&[[1, 2, 3]][..]));
        assert!(evidence_pi1_nontrivial(&k4(), eps, 6).unwrap().sparse());
    }
}
