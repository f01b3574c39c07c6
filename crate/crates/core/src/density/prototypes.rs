//! Small dense complexes and explicit embedding search, used to
//! cross-check [`check_sparse`](super::check_sparse) at small `m`.

use std::collections::BTreeSet;

use crate::complex::{face, Complex2, Face};
use crate::density::sparse::{SparsityOutcome, SparsityVerdict};
use crate::error::{Error, Result};
use crate::ratio::{half, Rational};

const MAX_M: usize = 4;
const MAX_VERTICES: u32 = 6;

/// All pure face-set complexes with `f2 <= m` and `f0 < (1/2 + eps) f2`,
/// one per isomorphism class, ordered by `(f2, f0, canonical faces)`.
pub fn enumerate_dense_prototypes(eps: Rational, m: usize) -> Result<Vec<Complex2>> {
    if m > MAX_M {
        return Err(Error::TooLarge(format!("prototype enumeration needs m <= {MAX_M}, got {m}")));
    }
    let c = half() + eps;
    let mut found: BTreeSet<(usize, u32, Vec<Face>)> = BTreeSet::new();
    for k in 1..=m {
        let kr = Rational::from_integer(k as i64);
        for v in 3..=(3 * k as u32) {
            if Rational::from_integer(v as i64) >= c * kr {
                break;
            }
            if v > MAX_VERTICES {
                return Err(Error::TooLarge(format!("prototypes on {v} vertices")));
            }
            let triples = all_triples(v);
            let perms = permutations(v);
            for_each_subset(&triples, k, &mut |set| {
                let mut used = 0u32;
                for f in set {
                    for &x in f {
                        used |= 1 << x;
                    }
                }
                if used.count_ones() == v {
                    found.insert((k, v, canonical(set, &perms)));
                }
            });
        }
    }
    found
        .into_iter()
        .map(|(_, v, faces)| Complex2::from_faces(v, faces, []))
        .collect()
}

fn all_triples(v: u32) -> Vec<Face> {
    let mut out = Vec::new();
    for a in 1..=v {
        for b in a + 1..=v {
            for c in b + 1..=v {
                out.push([a, b, c]);
            }
        }
    }
    out
}

fn for_each_subset(items: &[Face], k: usize, f: &mut impl FnMut(&[Face])) {
    fn go(items: &[Face], k: usize, start: usize, cur: &mut Vec<Face>, f: &mut impl FnMut(&[Face])) {
        if cur.len() == k {
            f(cur);
            return;
        }
        for i in start..items.len() {
            cur.push(items[i]);
            go(items, k, i + 1, cur, f);
            cur.pop();
        }
    }
    go(items, k, 0, &mut Vec::with_capacity(k), f);
}

fn permutations(v: u32) -> Vec<Vec<u32>> {
    fn go(rest: &mut Vec<u32>, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if rest.is_empty() {
            out.push(cur.clone());
            return;
        }
        for i in 0..rest.len() {
            let x = rest.remove(i);
            cur.push(x);
            go(rest, cur, out);
            cur.pop();
            rest.insert(i, x);
        }
    }
    let mut out = Vec::new();
    go(&mut (1..=v).collect(), &mut Vec::new(), &mut out);
    out
}

/// Lexicographically least relabelled face list.
fn canonical(faces: &[Face], perms: &[Vec<u32>]) -> Vec<Face> {
    perms
        .iter()
        .map(|p| {
            let mut fs: Vec<Face> = faces
                .iter()
                .map(|f| {
                    let [a, b, c] = f.map(|x| p[x as usize - 1]);
                    face(a, b, c).expect("permutation keeps vertices distinct")
                })
                .collect();
            fs.sort_unstable();
            fs
        })
        .min()
        .unwrap_or_default()
}

/// An injective vertex map sending every face of `z` to a face of `x`,
/// as the list of image faces in `z`'s face order.
pub fn embedding(z: &Complex2, x: &Complex2) -> Option<Vec<Face>> {
    let mut map = vec![0u32; z.n() as usize + 1];
    let mut used = vec![false; x.n() as usize + 1];
    let mut image = Vec::with_capacity(z.faces().len());
    if embed_from(z, x, 0, &mut map, &mut used, &mut image) {
        Some(image)
    } else {
        None
    }
}

fn embed_from(
    z: &Complex2,
    x: &Complex2,
    i: usize,
    map: &mut [u32],
    used: &mut [bool],
    image: &mut Vec<Face>,
) -> bool {
    let Some(zf) = z.faces().get(i) else {
        return true;
    };
    const ORDERS: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    for xf in x.faces() {
        for ord in ORDERS {
            let target = [xf[ord[0]], xf[ord[1]], xf[ord[2]]];
            let mut fresh = Vec::new();
            let ok = zf.iter().zip(target).all(|(&a, b)| {
                let cur = map[a as usize];
                if cur == b {
                    true
                } else if cur == 0 && !used[b as usize] {
                    map[a as usize] = b;
                    used[b as usize] = true;
                    fresh.push(a);
                    true
                } else {
                    false
                }
            });
            if ok {
                image.push(*xf);
                if embed_from(z, x, i + 1, map, used, image) {
                    return true;
                }
                image.pop();
            }
            for a in fresh {
                used[map[a as usize] as usize] = false;
                map[a as usize] = 0;
            }
        }
    }
    false
}

/// `(ε, m)`-sparsity decided by embedding every dense prototype.
pub fn check_sparse_by_prototypes(x: &Complex2, eps: Rational, m: usize) -> Result<SparsityVerdict> {
    let outcome = enumerate_dense_prototypes(eps, m)?
        .iter()
        .find_map(|z| embedding(z, x))
        .map(|mut t| {
            t.sort_unstable();
            SparsityOutcome::DenseWitness(t)
        })
        .unwrap_or(SparsityOutcome::Sparse);
    Ok(SparsityVerdict { outcome, eps, m, anchored: false })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{rp6, tet};
    use crate::ratio::parse_rational;

    fn eps(s: &str) -> Rational {
        parse_rational(s).unwrap()
    }

    #[test]
    fn prototype_examples() {
        assert!(enumerate_dense_prototypes(eps("0.4"), 1).unwrap().is_empty());
        assert!(enumerate_dense_prototypes(eps("0.1"), 2).unwrap().is_empty());
        let ps = enumerate_dense_prototypes(eps("0.6"), 4).unwrap();
        assert!(ps.iter().any(|z| z.faces() == tet().faces()));
        assert!(matches!(enumerate_dense_prototypes(eps("0.1"), 5), Err(Error::TooLarge(_))));
    }

    #[test]
    fn isomorph_free() {
        // three faces on four vertices: only one type (TET minus a face)
        let ps = enumerate_dense_prototypes(eps("1.6"), 3).unwrap();
        let small: Vec<_> = ps.iter().filter(|z| z.f2() == 3 && z.n() == 4).collect();
        assert_eq!(small.len(), 1);
        // two faces on four vertices share an edge
        let two: Vec<_> = ps.iter().filter(|z| z.f2() == 2 && z.n() == 4).collect();
        assert_eq!(two.len(), 1);
    }

    #[test]
    fn embeds_into_rp6() {
        let z = Complex2::from_faces(4, vec![[1, 2, 3], [1, 2, 4]], []).unwrap();
        let img = embedding(&z, &rp6()).unwrap();
        assert_eq!(img.len(), 2);
        assert!(embedding(&tet(), &rp6()).is_none());
    }
}
