//! G(n, p) and Y(n, p) generation by geometric skip sampling.
//!
//! Pairs and triples are ranked colexicographically
//! (`rank(a<b<c) = C(c-1,3) + C(b-1,2) + (a-1)`), and the gaps between
//! selected ranks are Geometric(p), so the cost is proportional to the
//! number of selected simplices rather than `C(n, 3)`.

use rayon::prelude::*;
use serde::Serialize;

use crate::complex::{Complex2, Edge, Face, Skeleton};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::random::rng::{Probability, RngSpec, Stream};
use crate::stats::{binomial_sigma, wilson, Interval, Z95};

fn choose(n: u64, k: u32) -> u64 {
    match k {
        1 => n,
        2 => n * n.saturating_sub(1) / 2,
        3 => {
            if n < 3 {
                0
            } else {
                // exact in u128 before the division
                ((n as u128 * (n - 1) as u128 * (n - 2) as u128) / 6) as u64
            }
        }
        _ => unreachable!(),
    }
}

/// Yields the selected ranks in `0..total` in increasing order.
fn skip_sample(total: u64, p: f64, stream: &mut Stream, mut emit: impl FnMut(u64)) {
    if p <= 0.0 || total == 0 {
        return;
    }
    if p >= 1.0 {
        (0..total).for_each(emit);
        return;
    }
    let log_q = libm::log1p(-p);
    let mut next = stream.geometric(log_q);
    while next < total {
        emit(next);
        let gap = stream.geometric(log_q);
        next = match next.checked_add(gap).and_then(|x| x.checked_add(1)) {
            Some(x) => x,
            None => break,
        };
    }
}

/// Largest `k` in `lo..=hi` with `choose(k, r) <= rank`.
fn max_with_choose_le(rank: u64, r: u32, mut lo: u64, mut hi: u64) -> u64 {
    while lo < hi {
        let mid = lo + (hi - lo + 1) / 2;
        if choose(mid, r) <= rank {
            lo = mid;
        } else {
            hi = mid - 1;
        }
    }
    lo
}

/// Incremental colex unranking for increasing triple ranks.
struct TripleCursor {
    n: u64,
    c: u64,
}

impl TripleCursor {
    fn new(n: u64) -> Self {
        TripleCursor { n, c: 2 }
    }

    fn unrank(&mut self, rank: u64) -> Face {
        while self.c + 1 < self.n && choose(self.c + 1, 3) <= rank {
            self.c += 1;
        }
        let r2 = rank - choose(self.c, 3);
        let b = max_with_choose_le(r2, 2, 1, self.c - 1);
        let a = r2 - choose(b, 2);
        [a as u32 + 1, b as u32 + 1, self.c as u32 + 1]
    }
}

fn unrank_pair(rank: u64, n: u64) -> Edge {
    let b = max_with_choose_le(rank, 2, 1, n - 1);
    let a = rank - choose(b, 2);
    (a as u32 + 1, b as u32 + 1)
}

/// Erdős–Rényi G(n, p).
pub fn gen_graph(n: u32, p: &Probability, spec: &RngSpec) -> Graph {
    let mut stream = spec.stream();
    let mut edges = Vec::new();
    skip_sample(choose(n as u64, 2), p.value(), &mut stream, |r| {
        edges.push(unrank_pair(r, n as u64))
    });
    edges.sort_unstable();
    Graph::from_sorted((1..=n).collect(), edges)
}

/// Linial–Meshulam Y(n, p): complete 1-skeleton, each triple a face
/// independently with probability `p`.
pub fn gen_y(n: u32, p: &Probability, spec: &RngSpec) -> Result<Complex2> {
    if n < 3 {
        return Err(Error::TooSmall { n, min: 3 });
    }
    let mut stream = spec.stream();
    let mut cursor = TripleCursor::new(n as u64);
    let mut faces = Vec::new();
    skip_sample(choose(n as u64, 3), p.value(), &mut stream, |r| faces.push(cursor.unrank(r)));
    faces.sort_unstable();
    Ok(Complex2::from_parts(n, Skeleton::Full, faces))
}

/// Y(n, p) from one uniform per triple, drawn in colex order from a
/// p-independent stream. For a fixed spec the face sets are nested in `p`.
/// Costs `C(n, 3)` draws.
pub fn gen_y_coupled(n: u32, p: &Probability, spec: &RngSpec) -> Result<Complex2> {
    if n < 3 {
        return Err(Error::TooSmall { n, min: 3 });
    }
    let mut stream = spec.stream();
    let mut faces = Vec::new();
    for c in 3..=n {
        for b in 2..c {
            for a in 1..b {
                if stream.uniform() < p.value() {
                    faces.push([a, b, c]);
                }
            }
        }
    }
    faces.sort_unstable();
    Ok(Complex2::from_parts(n, Skeleton::Full, faces))
}

/// Every triple with the uniform that [`gen_y_coupled`] draws for it, in
/// increasing order of the uniform: the face process in which `abc`
/// arrives at time `u_abc`.
pub fn face_arrivals(n: u32, spec: &RngSpec) -> Result<Vec<(f64, Face)>> {
    if n < 3 {
        return Err(Error::TooSmall { n, min: 3 });
    }
    let mut stream = spec.stream();
    let mut out = Vec::with_capacity(choose(n as u64, 3) as usize);
    for c in 3..=n {
        for b in 2..c {
            for a in 1..b {
                out.push((stream.uniform(), [a, b, c]));
            }
        }
    }
    out.sort_by(|x, y| x.0.total_cmp(&y.0).then(x.1.cmp(&y.1)));
    Ok(out)
}

#[derive(Debug, Clone, Serialize)]
pub struct LinkPairStats {
    pub n: u32,
    pub p: String,
    pub trials: u64,
    /// The fixed pair `{u, v}` tracked in `lk(1) ∩ lk(2)`.
    pub pair: (u32, u32),
    pub hits: u64,
    pub frequency: f64,
    pub wilson95: Interval,
    /// `p^2`, the marginal edge probability of G(n - 2, p^2).
    pub expected: f64,
    pub sigma: f64,
    /// Mean edge density of the whole intersection graph.
    pub mean_edge_density: f64,
}

/// Empirical law of `lk(1) ∩ lk(2)` in Y(n, p): how often `{3, 4}` is an
/// edge, and the mean edge density over all pairs.
pub fn link_pair_statistics(n: u32, p: &Probability, trials: u64, seed: u64) -> Result<LinkPairStats> {
    if n < 4 {
        return Err(Error::TooSmall { n, min: 4 });
    }
    if trials == 0 {
        return Err(Error::Config("trials must be at least 1".into()));
    }
    let base = RngSpec::new(seed, "link_stats", n as u64, p, 0);
    let per_trial: Vec<Result<(bool, usize)>> = (0..trials)
        .into_par_iter()
        .map(|t| {
            let y = gen_y(n, p, &base.with_trial(t))?;
            let g = y.link_intersection_graph(1, 2)?;
            Ok((g.has_edge(3, 4), g.edge_count()))
        })
        .collect();
    let mut hits = 0;
    let mut edge_total = 0usize;
    for r in per_trial {
        let (hit, edges) = r?;
        hits += hit as u64;
        edge_total += edges;
    }
    let pairs = choose(n as u64 - 2, 2) as f64;
    let expected = p.value() * p.value();
    Ok(LinkPairStats {
        n,
        p: p.to_string(),
        trials,
        pair: (3, 4),
        hits,
        frequency: hits as f64 / trials as f64,
        wilson95: wilson(hits, trials, Z95),
        expected,
        sigma: binomial_sigma(expected, trials),
        mean_edge_density: edge_total as f64 / (pairs * trials as f64),
    })
}
