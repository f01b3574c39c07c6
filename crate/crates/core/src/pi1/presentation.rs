//! Presentations of `π_1` from a spanning tree of the 1-skeleton.

use serde::Serialize;

use crate::complex::{Complex2, Edge};
use crate::error::Result;
use crate::homology::{lattice_basis, prime_power_parts, smith_normal_form, SparseMatrix};

/// Generators are the non-tree edges `(a, b)`, `a < b`, oriented from `a`
/// to `b`. A relator letter `±(i + 1)` is generator `i` or its inverse.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GroupPresentation {
    /// Component vertices in original labels.
    pub vertices: Vec<u32>,
    pub tree: Vec<Edge>,
    pub generators: Vec<Edge>,
    pub relators: Vec<Vec<i64>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Abelianization {
    pub rank: u64,
    /// Torsion as sorted prime powers.
    pub torsion: Vec<u64>,
}

impl Abelianization {
    pub fn is_trivial(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }
}

/// Presentation of `π_1` of the `component`-th component (components ordered
/// by least vertex). Each face `abc` contributes its boundary word
/// `ab · bc · (ac)^-1` with tree edges deleted; empty words are dropped.
pub fn presentation(x: &Complex2, component: usize) -> Result<GroupPresentation> {
    let sub = x.component(component)?;
    let relabel = |e: Edge| {
        let (a, b) = (sub.labels[e.0 as usize - 1], sub.labels[e.1 as usize - 1]);
        (a.min(b), a.max(b))
    };
    let c = &sub.complex;
    let tree: Vec<Edge> = c.skeleton_graph().spanning_tree()?;
    let mut is_tree = tree.clone();
    is_tree.sort_unstable();
    let generators: Vec<Edge> = c.edges().filter(|e| is_tree.binary_search(e).is_err()).collect();
    let letter = |e: Edge, inverse: bool| {
        generators
            .binary_search(&e)
            .ok()
            .map(|i| if inverse { -(i as i64 + 1) } else { i as i64 + 1 })
    };
    let relators = c
        .faces()
        .iter()
        .filter_map(|&[a, b, cc]| {
            let word: Vec<i64> = [letter((a, b), false), letter((b, cc), false), letter((a, cc), true)]
                .into_iter()
                .flatten()
                .collect();
            (!word.is_empty()).then_some(word)
        })
        .collect();
    Ok(GroupPresentation {
        vertices: sub.labels.clone(),
        tree: tree.into_iter().map(relabel).collect(),
        generators: generators.into_iter().map(relabel).collect(),
        relators,
    })
}

impl GroupPresentation {
    pub fn generator_count(&self) -> usize {
        self.generators.len()
    }

    /// Abelian group with the same generators and relators, via Smith
    /// normal form of the exponent-sum matrix.
    pub fn abelianization(&self) -> Result<Abelianization> {
        let g = self.generators.len();
        let rows = self.relators.iter().map(|w| {
            let mut row: Vec<(usize, i64)> = Vec::new();
            for &l in w {
                let (i, s) = (l.unsigned_abs() as usize - 1, l.signum());
                match row.iter_mut().find(|(j, _)| *j == i) {
                    Some(entry) => entry.1 += s,
                    None => row.push((i, s)),
                }
            }
            row.retain(|&(_, v)| v != 0);
            row
        });
        let basis: SparseMatrix = lattice_basis(rows, g)?;
        let snf = smith_normal_form(&basis)?;
        Ok(Abelianization {
            rank: (g - snf.rank()) as u64,
            torsion: prime_power_parts(&snf.torsion()),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::fixtures::{k4, rp6, t1, tet};

    #[test]
    fn fixture_presentations() {
        let p = presentation(&k4(), 0).unwrap();
        assert_eq!((p.generators.len(), p.relators.len()), (3, 0));
        assert_eq!(p.abelianization().unwrap(), Abelianization { rank: 3, torsion: vec![] });
        let p = presentation(&t1(), 0).unwrap();
        assert_eq!((p.generators.len(), p.relators.len()), (1, 1));
        assert!(p.abelianization().unwrap().is_trivial());
        let p = presentation(&tet(), 0).unwrap();
        assert_eq!((p.generators.len(), p.relators.len()), (3, 4));
        assert!(p.abelianization().unwrap().is_trivial());
        let p = presentation(&rp6(), 0).unwrap();
        assert_eq!(p.abelianization().unwrap(), Abelianization { rank: 0, torsion: vec![2] });
        assert!(p.relators.iter().all(|w| w.len() <= 3));
    }

    #[test]
    fn component_out_of_range() {
        assert!(matches!(presentation(&t1(), 1), Err(Error::OutOfRange { .. })));
    }

    #[test]
    fn second_component_uses_original_labels() {
        let x = Complex2::from_faces(6, vec![[1, 2, 3]], [(4, 5), (5, 6), (4, 6)]).unwrap();
        let p = presentation(&x, 1).unwrap();
        assert_eq!(p.vertices, vec![4, 5, 6]);
        assert_eq!(p.generators.len(), 1);
        assert!(p.generators[0].0 >= 4);
        assert_eq!(p.abelianization().unwrap().rank, 1);
    }
}
