//! Simple connectivity by link intersections.
//!
//! With a complete 1-skeleton, every loop is a product of triangles `abc`.
//! If some face contains `{a, b}` and the graph `lk(a) ∩ lk(b)` is connected
//! on all the other `n - 2` vertices, each triangle `abc` is homotopic
//! through squares `a c b d` to a triangle that bounds a face, so every
//! triangle through `a, b` is null-homotopic.

use rayon::prelude::*;
use serde::Serialize;

use crate::complex::{Complex2, Edge, Face};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairWitness {
    pub pair: Edge,
    /// A face containing the pair.
    pub support: Face,
    /// Spanning tree of the link intersection graph on the other vertices.
    pub tree: Vec<Edge>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "reason", rename_all = "snake_case")]
pub enum PairFailure {
    MissingEdge,
    NoSupportingFace,
    /// Link intersection split into this many components.
    Disconnected { components: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FailingPair {
    pub pair: Edge,
    #[serde(flatten)]
    pub failure: PairFailure,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", content = "pairs", rename_all = "snake_case")]
pub enum ScCertificate {
    Certified(Vec<PairWitness>),
    /// Failing pairs, sorted. Does not imply a nontrivial group.
    Inconclusive(Vec<FailingPair>),
}

impl ScCertificate {
    pub fn is_certified(&self) -> bool {
        matches!(self, ScCertificate::Certified(_))
    }

    pub fn failing_pairs(&self) -> Vec<Edge> {
        match self {
            ScCertificate::Certified(_) => Vec::new(),
            ScCertificate::Inconclusive(f) => f.iter().map(|p| p.pair).collect(),
        }
    }
}

struct UnionFind(Vec<u32>);

impl UnionFind {
    fn find(&mut self, mut x: u32) -> u32 {
        while self.0[x as usize] != x {
            let up = self.0[self.0[x as usize] as usize];
            self.0[x as usize] = up;
            x = up;
        }
        x
    }

    fn union(&mut self, a: u32, b: u32) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.0[ra.max(rb) as usize] = ra.min(rb);
        true
    }
}

fn check_pair(x: &Complex2, a: u32, b: u32) -> Result<PairWitness, PairFailure> {
    if !x.has_edge(a, b) {
        return Err(PairFailure::MissingEdge);
    }
    let n = x.n();
    let mut uf = UnionFind((0..=n).collect());
    let mut tree = Vec::new();
    let mut support = None;
    for &i in &x.incidence()[a as usize] {
        let f = x.faces()[i as usize];
        let mut other = f.iter().copied().filter(|&v| v != a);
        let (u, v) = (other.next().unwrap(), other.next().unwrap());
        if u == b || v == b {
            support.get_or_insert(f);
            continue;
        }
        if x.has_face(&[b, u, v]) && uf.union(u, v) {
            tree.push((u, v));
        }
    }
    let Some(support) = support else {
        return Err(PairFailure::NoSupportingFace);
    };
    let others = n as usize - 2;
    if tree.len() + 1 < others {
        return Err(PairFailure::Disconnected { components: others - tree.len() });
    }
    tree.sort_unstable();
    Ok(PairWitness { pair: (a, b), support, tree })
}

/// Certifies `π_1(X) = 0` when the skeleton is complete and every pair
/// passes the link-intersection test. One-sided: `Inconclusive` says
/// nothing about the group.
pub fn certify_simply_connected(x: &Complex2) -> ScCertificate {
    let n = x.n();
    let pairs: Vec<Edge> = (1..=n).flat_map(|a| (a + 1..=n).map(move |b| (a, b))).collect();
    let results: Vec<Result<PairWitness, FailingPair>> = pairs
        .par_iter()
        .map(|&(a, b)| check_pair(x, a, b).map_err(|failure| FailingPair { pair: (a, b), failure }))
        .collect();
    let mut ok = Vec::with_capacity(results.len());
    let mut failed = Vec::new();
    for r in results {
        match r {
            Ok(w) => ok.push(w),
            Err(f) => failed.push(f),
        }
    }
    if failed.is_empty() {
        ScCertificate::Certified(ok)
    } else {
        ScCertificate::Inconclusive(failed)
    }
}
