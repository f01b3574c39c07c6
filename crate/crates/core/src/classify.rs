//! Collapsing to the `K_A` core and homotopy types of admissible complexes.
//!
//! An admissible complex (`e(X) > 1/2`) is homotopy equivalent to a wedge
//! of circles, 2-spheres and projective planes per component, so the wedge
//! counts can be read off rational and mod 2 Betti numbers.

use std::collections::HashMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::complex::{boundary_edges, Complex2, Edge, Face};
use crate::density::{density_e, density_e_w, ser_ratio};
use crate::error::{Error, Result};
use crate::homology::{betti, Coeff};
use crate::random::Stream;
use crate::ratio::{half, Rational};

/// Order in which violating edges leave the worklist.
enum Order<'a> {
    Fifo,
    Random(&'a mut Stream),
}

/// The maximal subcomplex in which every edge lies in at least two faces,
/// or in at least one face when it belongs to `keep`. All vertices stay.
pub fn collapse_core(x: &Complex2, keep: &[Edge]) -> Result<Complex2> {
    collapse(x, keep, Order::Fifo)
}

/// [`collapse_core`] deleting violating edges in a random order. The result
/// does not depend on the order.
pub fn collapse_core_shuffled(x: &Complex2, keep: &[Edge], stream: &mut Stream) -> Result<Complex2> {
    collapse(x, keep, Order::Random(stream))
}

fn collapse(x: &Complex2, keep: &[Edge], mut order: Order<'_>) -> Result<Complex2> {
    let mut anchored: Vec<Edge> = Vec::with_capacity(keep.len());
    for &(a, b) in keep {
        let e = (a.min(b), a.max(b));
        if !x.has_edge(e.0, e.1) {
            return Err(Error::MissingEdge(e));
        }
        anchored.push(e);
    }
    anchored.sort_unstable();
    let faces = x.faces();
    let mut alive_face = vec![true; faces.len()];
    let mut incident: HashMap<Edge, Vec<u32>> = HashMap::new();
    for (i, f) in faces.iter().enumerate() {
        for e in boundary_edges(f) {
            incident.entry(e).or_default().push(i as u32);
        }
    }
    let mut degree: HashMap<Edge, u32> = incident.iter().map(|(&e, v)| (e, v.len() as u32)).collect();
    let violates = |e: &Edge, d: u32| d < 2 && !(d >= 1 && anchored.binary_search(e).is_ok());
    let mut work: Vec<Edge> = degree.iter().filter(|(e, &d)| violates(e, d)).map(|(&e, _)| e).collect();
    work.sort_unstable();
    work.reverse();
    let mut queued: std::collections::HashSet<Edge> = work.iter().copied().collect();
    let mut head = 0;
    while head < work.len() {
        let e = match &mut order {
            Order::Fifo => {
                head += 1;
                work[head - 1]
            }
            Order::Random(s) => {
                let k = head + s.below((work.len() - head) as u64) as usize;
                work.swap(head, k);
                head += 1;
                work[head - 1]
            }
        };
        queued.remove(&e);
        let Some(d) = degree.get(&e).copied() else { continue };
        if !violates(&e, d) {
            continue;
        }
        degree.remove(&e);
        for &i in &incident[&e] {
            if !alive_face[i as usize] {
                continue;
            }
            alive_face[i as usize] = false;
            for g in boundary_edges(&faces[i as usize]) {
                if let Some(dg) = degree.get_mut(&g) {
                    *dg -= 1;
                    if violates(&g, *dg) && queued.insert(g) {
                        work.push(g);
                    }
                }
            }
        }
    }
    let mut edges: Vec<Edge> = degree.into_keys().collect();
    edges.sort_unstable();
    let kept: Vec<Face> = faces.iter().zip(&alive_face).filter(|(_, &a)| a).map(|(f, _)| *f).collect();
    Complex2::listed(x.n(), edges, kept)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct WedgeCounts {
    pub circles: u64,
    pub spheres: u64,
    pub projective_planes: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComponentType {
    pub vertices: Vec<u32>,
    #[serde(flatten)]
    pub counts: WedgeCounts,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HomotopyType {
    pub components: Vec<ComponentType>,
}

impl HomotopyType {
    pub fn counts(&self) -> Vec<WedgeCounts> {
        self.components.iter().map(|c| c.counts).collect()
    }
}

/// Wedge counts of one connected complex from its Betti numbers, with the
/// two independent readings of the projective plane count cross-checked.
pub fn wedge_counts(x: &Complex2) -> Result<WedgeCounts> {
    let q = betti(x, Coeff::Rational)?;
    let two = betti(x, Coeff::Gf2)?;
    let inconsistent = |what: &str| Error::InternalInconsistency(format!("{what}: Q {q:?}, GF(2) {two:?}"));
    if q.b0 != 1 {
        return Err(inconsistent("component is not connected"));
    }
    let p = two.b1.checked_sub(q.b1).ok_or_else(|| inconsistent("b1 over GF(2) below b1 over Q"))?;
    if two.b2.checked_sub(q.b2) != Some(p) {
        return Err(inconsistent("projective plane counts from b1 and b2 differ"));
    }
    let counts = WedgeCounts { circles: q.b1, spheres: q.b2, projective_planes: p };
    if x.euler_characteristic() != 1 - q.b1 as i64 + q.b2 as i64 {
        return Err(inconsistent("Euler characteristic"));
    }
    Ok(counts)
}

/// Homotopy type of a complex with `e(X) > 1/2`, one entry per component.
pub fn homotopy_type(x: &Complex2) -> Result<HomotopyType> {
    if x.f2() > 0 {
        let e = density_e(x)?.value;
        if e <= half() {
            return Err(Error::NotAdmissible(e.to_string()));
        }
    }
    classify_components(x)
}

/// [`homotopy_type`] requiring the explicit margin `e(X) >= 1/2 + eps`.
pub fn homotopy_type_with_margin(x: &Complex2, eps: Rational) -> Result<HomotopyType> {
    if eps <= Rational::from_integer(0) {
        return Err(Error::Config(format!("margin {eps} must be positive")));
    }
    if x.f2() > 0 {
        let e = density_e(x)?.value;
        if e < half() + eps {
            return Err(Error::NotAdmissible(e.to_string()));
        }
    }
    classify_components(x)
}

fn classify_components(x: &Complex2) -> Result<HomotopyType> {
    let comps = x.components();
    let components = comps
        .into_par_iter()
        .map(|vs| {
            let sub = x.vertex_induced(&vs)?;
            Ok(ComponentType { vertices: vs, counts: wedge_counts(&sub.complex)? })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(HomotopyType { components })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PoppedBound {
    pub w: u32,
    pub f2: u64,
    #[serde(serialize_with = "ser_ratio")]
    pub e_w: Rational,
    #[serde(serialize_with = "ser_ratio")]
    pub bound: Rational,
    pub holds: bool,
}

/// Evaluates `f2(X) <= (2χ(X) - 2w + L(X)) / (2 e_w(X) - 1)` exactly.
pub fn popped_bound_check(x: &Complex2, w: u32) -> Result<PoppedBound> {
    let e_w = density_e_w(x, w)?.value;
    let denom = e_w * 2 - 1;
    if denom <= Rational::from_integer(0) {
        return Err(Error::DenominatorNonpositive(denom.to_string()));
    }
    let numer = 2 * x.euler_characteristic() - 2 * w as i64 + x.length_l();
    let bound = Rational::from_integer(numer) / denom;
    Ok(PoppedBound { w, f2: x.f2(), e_w, bound, holds: Rational::from_integer(x.f2() as i64) <= bound })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{k4, rp6, t1, tet, x5};
    use crate::random::RngSpec;

    fn wc(c: u64, s: u64, p: u64) -> WedgeCounts {
        WedgeCounts { circles: c, spheres: s, projective_planes: p }
    }

    #[test]
    fn fixture_collapses() {
        let c = collapse_core(&t1(), &[]).unwrap();
        assert_eq!(c.f_vector(), [3, 0, 0]);
        assert_eq!(collapse_core(&tet(), &[]).unwrap().faces(), tet().faces());
        let x = Complex2::from_faces(5, tet().faces().iter().copied().chain([[1, 2, 5]]), []).unwrap();
        let c = collapse_core(&x, &[]).unwrap();
        assert_eq!(c.f_vector(), [5, 6, 4]);
        assert_eq!(c.faces(), tet().faces());
    }

    #[test]
    fn anchored_edges_keep_single_faces() {
        let c = collapse_core(&t1(), &[(1, 2)]).unwrap();
        assert_eq!(c.f2(), 0);
        let c = collapse_core(&t1(), &[(1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(c.f_vector(), [3, 3, 1]);
        assert_eq!(collapse_core(&Complex2::from_faces(3, vec![], []).unwrap(), &[(1, 2)]), Err(Error::MissingEdge((1, 2))));
    }

    #[test]
    fn shuffled_orders_agree() {
        let x = x5().with_faces([[1, 2, 3], [2, 3, 4], [1, 2, 4], [1, 3, 4]]).unwrap();
        let base = collapse_core(&x, &[]).unwrap();
        let mut s = RngSpec::p_free(3, "collapse", 5, 0).stream();
        for _ in 0..20 {
            assert_eq!(collapse_core_shuffled(&x, &[], &mut s).unwrap(), base);
        }
    }

    #[test]
    fn fixture_homotopy_types() {
        assert_eq!(homotopy_type(&tet()).unwrap().counts(), vec![wc(0, 1, 0)]);
        assert_eq!(homotopy_type(&rp6()).unwrap().counts(), vec![wc(0, 0, 1)]);
        assert_eq!(homotopy_type(&k4()).unwrap().counts(), vec![wc(3, 0, 0)]);
        assert_eq!(homotopy_type(&t1()).unwrap().counts(), vec![wc(0, 0, 0)]);
        let thin = Complex2::full(4, [[1, 2, 3], [1, 2, 4]]).unwrap();
        assert!(homotopy_type(&thin).is_ok());
        let half_dense = Complex2::full(5, [[1, 2, 3], [1, 2, 4], [1, 3, 4], [2, 3, 4], [1, 2, 5], [1, 3, 5], [2, 3, 5], [1, 4, 5], [2, 4, 5], [3, 4, 5]]).unwrap();
        assert!(matches!(homotopy_type(&half_dense), Err(Error::NotAdmissible(_))));
    }

    #[test]
    fn margin_variant() {
        let eps = Rational::new(1, 20);
        assert!(homotopy_type_with_margin(&rp6(), eps).is_ok());
        assert!(homotopy_type_with_margin(&rp6(), Rational::new(1, 5)).is_err());
    }

    #[test]
    fn fixture_popped_bounds() {
        for (x, f2) in [(t1(), 1), (tet(), 4), (rp6(), 10)] {
            let b = popped_bound_check(&x, 0).unwrap();
            assert_eq!(b.bound, Rational::from_integer(f2));
            assert!(b.holds);
        }
        assert_eq!(popped_bound_check(&k4(), 0), Err(Error::NoFaces));
        assert!(matches!(popped_bound_check(&tet(), 3), Err(Error::DenominatorNonpositive(_))));
        let b = popped_bound_check(&x5(), 3).unwrap();
        assert!(b.holds);
    }

    mod props {
        use super::*;
        use crate::homology::{h1_integral, SNF_DEFAULT_CAP};
        use crate::density::is_strictly_admissible;
        use crate::testutil::{arb_sparse_full, sample_y};
        use proptest::prelude::*;

        fn total(h: &HomotopyType) -> (u64, u64, u64) {
            h.counts().iter().fold((0, 0, 0), |t, c| (t.0 + c.circles, t.1 + c.spheres, t.2 + c.projective_planes))
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(40))]

            #[test]
            fn collapse_is_confluent(seed in any::<u64>(), p in 0.1f64..0.5, keep_mask in any::<u8>()) {
                let x = sample_y(9, p, seed, 0);
                let keep: Vec<Edge> = x.edges().enumerate().filter(|(i, _)| keep_mask >> (i % 8) & 1 == 1 && i % 5 == 0).map(|(_, e)| e).collect();
                let base = collapse_core(&x, &keep).unwrap();
                let spec = RngSpec::p_free(seed, "test_collapse", 9, 0);
                for t in 0..20 {
                    let mut s = spec.with_trial(t).stream();
                    prop_assert_eq!(&collapse_core_shuffled(&x, &keep, &mut s).unwrap(), &base);
                }
                for e in base.edges() {
                    let d = base.face_degree(e.0, e.1).unwrap();
                    prop_assert!(d >= 2 || (d >= 1 && keep.contains(&e)));
                }
            }

            #[test]
            fn collapse_preserves_spheres_and_torsion(seed in any::<u64>(), p in 0.0f64..0.6) {
                let x = sample_y(9, p, seed, 1);
                let core = collapse_core(&x, &[]).unwrap();
                for c in [Coeff::Rational, Coeff::Gf2] {
                    prop_assert_eq!(betti(&x, c).unwrap().b2, betti(&core, c).unwrap().b2);
                }
                prop_assert_eq!(
                    h1_integral(&x, SNF_DEFAULT_CAP).unwrap().torsion,
                    h1_integral(&core, SNF_DEFAULT_CAP).unwrap().torsion
                );
            }

            #[test]
            fn homotopy_type_survives_collapse(seed in any::<u64>(), p in 0.01f64..0.12) {
                let x = sample_y(12, p, seed, 2);
                prop_assume!(is_strictly_admissible(&x).unwrap());
                let core = collapse_core(&x, &[]).unwrap();
                let (a, b) = (homotopy_type(&x).unwrap(), homotopy_type(&core).unwrap());
                let lost = betti(&x, Coeff::Rational).unwrap().b1 as i64 - betti(&core, Coeff::Rational).unwrap().b1 as i64;
                let (ta, tb) = (total(&a), total(&b));
                prop_assert_eq!((ta.0 as i64, ta.1, ta.2), (tb.0 as i64 + lost, tb.1, tb.2));
            }

            #[test]
            fn admissible_counts_consistent(x in arb_sparse_full(8, 9)) {
                prop_assume!(is_strictly_admissible(&x).unwrap());
                let h = homotopy_type(&x).unwrap();
                for comp in &h.components {
                    let sub = x.vertex_induced(&comp.vertices).unwrap().complex;
                    let (q, two) = (betti(&sub, Coeff::Rational).unwrap(), betti(&sub, Coeff::Gf2).unwrap());
                    let c = comp.counts;
                    prop_assert_eq!((q.b1, q.b2), (c.circles, c.spheres));
                    prop_assert_eq!((two.b1, two.b2), (c.circles + c.projective_planes, c.spheres + c.projective_planes));
                    prop_assert_eq!(sub.euler_characteristic(), 1 - c.circles as i64 + c.spheres as i64);
                }
                for w in [0, 3] {
                    if let Ok(b) = popped_bound_check(&x, w) {
                        prop_assert!(b.holds, "{:?}", b);
                    }
                }
            }

            #[test]
            fn popped_bound_on_samples(seed in any::<u64>(), p in 0.02f64..0.2) {
                let x = sample_y(12, p, seed, 3);
                prop_assume!(x.f2() > 0);
                for w in [0, 3] {
                    if let Ok(b) = popped_bound_check(&x, w) {
                        prop_assert!(b.holds, "{:?}", b);
                    }
                }
            }
        }
    }
}
