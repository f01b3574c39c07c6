//! Strategies and samplers shared by property tests.

use proptest::prelude::*;

use crate::complex::{Complex2, Face};
use crate::random::{gen_y, Probability, RngSpec};

pub fn triples(n: u32) -> Vec<Face> {
    let mut out = Vec::new();
    for a in 1..=n {
        for b in a + 1..=n {
            for c in b + 1..=n {
                out.push([a, b, c]);
            }
        }
    }
    out
}

/// Full-skeleton complexes on `3..=max_n` vertices with an arbitrary face
/// subset.
pub fn arb_full(max_n: u32) -> impl Strategy<Value = Complex2> {
    (3..=max_n).prop_flat_map(|n| {
        let all = triples(n);
        proptest::sample::subsequence(all.clone(), 0..=all.len())
            .prop_map(move |fs| Complex2::full(n, fs).unwrap())
    })
}

/// Listed complexes: a face subset with only its boundary edges plus a
/// few extra edges.
pub fn arb_listed(max_n: u32) -> impl Strategy<Value = Complex2> {
    (3..=max_n).prop_flat_map(|n| {
        let all = triples(n);
        let pairs: Vec<(u32, u32)> = (1..=n).flat_map(|a| (a + 1..=n).map(move |b| (a, b))).collect();
        (
            proptest::sample::subsequence(all.clone(), 0..=all.len().min(12)),
            proptest::sample::subsequence(pairs.clone(), 0..=pairs.len().min(4)),
        )
            .prop_map(move |(fs, es)| Complex2::from_faces(n, fs, es).unwrap())
    })
}

/// Full complexes with few faces, so densities are usually above one half.
pub fn arb_sparse_full(max_n: u32, max_faces: usize) -> impl Strategy<Value = Complex2> {
    (4..=max_n).prop_flat_map(move |n| {
        let all = triples(n);
        let k = max_faces.min(all.len());
        proptest::sample::subsequence(all, 1..=k).prop_map(move |fs| Complex2::full(n, fs).unwrap())
    })
}

pub fn sample_y(n: u32, p: f64, seed: u64, trial: u64) -> Complex2 {
    let p = Probability::new(p).unwrap();
    gen_y(n, &p, &RngSpec::new(seed, "test", n as u64, &p, trial)).unwrap()
}
