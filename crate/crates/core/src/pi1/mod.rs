//! Certificates for and against simple connectivity, presentations of the
//! fundamental group, and bounded filling-area search.

pub mod area;
pub mod certify;
pub mod id3;
pub mod presentation;

pub use area::{area_search, area_search_limited, AreaBound, AreaMove, AreaResult, MoveKind, AREA_BUDGET_CAP};
pub use certify::{certify_simply_connected, FailingPair, PairFailure, PairWitness, ScCertificate};
pub use id3::{certify_id3_noncontractible, evidence_pi1_nontrivial, Id3Certificate, Pi1Evidence};
pub use presentation::{presentation, Abelianization, GroupPresentation};

#[cfg(test)]
mod props {
    use super::*;
    use crate::complex::face;
    use crate::homology::{betti, h1_integral, Coeff, SNF_DEFAULT_CAP};
    use crate::testutil::{arb_sparse_full, sample_y};
    use crate::LoopWord;
    use proptest::prelude::*;

    /// Rechecks a witness from scratch: the support face, the doubled faces
    /// behind every tree edge, and that the tree spans the other vertices.
    fn witness_ok(x: &crate::Complex2, w: &PairWitness) -> bool {
        let (a, b) = w.pair;
        if !(x.has_face(&w.support) && w.support.contains(&a) && w.support.contains(&b)) {
            return false;
        }
        let mut comp: Vec<u32> = (0..=x.n()).collect();
        fn root(c: &mut [u32], mut v: u32) -> u32 {
            while c[v as usize] != v {
                v = c[v as usize];
            }
            v
        }
        for &(u, v) in &w.tree {
            if [u, v].iter().any(|&t| t == a || t == b) {
                return false;
            }
            let both = face(a, u, v).is_ok_and(|f| x.has_face(&f)) && face(b, u, v).is_ok_and(|f| x.has_face(&f));
            let (ru, rv) = (root(&mut comp, u), root(&mut comp, v));
            if !both || ru == rv {
                return false;
            }
            comp[ru as usize] = rv;
        }
        w.tree.len() + 3 == x.n() as usize
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(16))]

        #[test]
        fn certificates_are_sound(seed in any::<u64>(), p in 0.5f64..0.9) {
            let x = sample_y(20, p, seed, 0);
            if let ScCertificate::Certified(ws) = certify_simply_connected(&x) {
                prop_assert_eq!(ws.len(), 190);
                for w in &ws {
                    prop_assert!(witness_ok(&x, w), "{:?}", w);
                }
                let h = h1_integral(&x, SNF_DEFAULT_CAP).unwrap();
                prop_assert!(h.rank == 0 && h.torsion.is_empty());
                prop_assert_eq!(betti(&x, Coeff::Gf2).unwrap().b1, 0);
            }
        }

        #[test]
        fn abelianization_is_h1(seed in any::<u64>(), p in 0.0f64..0.6) {
            let x = sample_y(9, p, seed, 0);
            let ab = presentation(&x, 0).unwrap().abelianization().unwrap();
            let h = h1_integral(&x, SNF_DEFAULT_CAP).unwrap();
            prop_assert_eq!((ab.rank, ab.torsion), (h.rank, h.torsion));
        }

        #[test]
        fn noncontractible_triangle_has_no_filling(x in arb_sparse_full(7, 10), budget in 0usize..=5) {
            let gamma = LoopWord::id3(&x).unwrap();
            let a = area_search(&x, &gamma, budget).unwrap();
            if certify_id3_noncontractible(&x).unwrap().noncontractible {
                prop_assert_eq!(a.upper_bound(), None);
            }
            if let AreaResult::UpperBound { area, trace } = &a.result {
                let costly = trace.iter().filter(|m| m.kind != MoveKind::Collapse).count();
                prop_assert_eq!(costly, *area);
                prop_assert!(*area <= budget);
            }
        }

        #[test]
        fn area_bound_monotone_in_budget(x in arb_sparse_full(6, 12), b in 0usize..=4, extra in 1usize..=3) {
            let gamma = LoopWord::id3(&x).unwrap();
            let lo = area_search(&x, &gamma, b).unwrap();
            let hi = area_search(&x, &gamma, b + extra).unwrap();
            let truncated = matches!(hi.result, AreaResult::InconclusiveAtBudget { truncated: true });
            if let (Some(a), false) = (lo.upper_bound(), truncated) {
                prop_assert!(hi.upper_bound().is_some_and(|h| h <= a));
            }
        }
    }
}
