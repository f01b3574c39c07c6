//! `(ε, m)`- and `(ε, m, 3)`-sparsity.
//!
//! With `c = 1/2 + ε`, a complex is dense when some nonempty face set `T`
//! with `|T| <= m` has `|V(T) \ A| < c |T|`, where `A` is the anchor set
//! (empty, or `{1, 2, 3}`). Such a `T` exists exactly when some vertex set
//! `S` (disjoint from `A`) satisfies `|S| < c · min(m, |F(S ∪ A)|)`, where
//! `F(U)` is the set of faces spanned by `U`: take `T` to be any
//! `min(m, |F(S ∪ A)|)` of those faces. So the search enumerates vertex
//! sets with `|S| < c m`, which is far smaller than the space of face sets.
//!
//! If `S` splits into parts that share no face, `F(S ∪ A)` splits the same
//! way (once the face `{1, 2, 3}` itself is handled), and by the mediant
//! inequality one part is already violating. Hence only sets connected in
//! the "shares a face" graph are enumerated, each once (ESU enumeration
//! rooted at its least vertex).

use rayon::prelude::*;
use serde::Serialize;

use crate::complex::{Complex2, Face};
use crate::density::{ser_ratio, witness_ratio};
use crate::ratio::{half, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "witness", rename_all = "snake_case")]
pub enum SparsityOutcome {
    Sparse,
    DenseWitness(Vec<Face>),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SparsityVerdict {
    pub outcome: SparsityOutcome,
    #[serde(serialize_with = "ser_ratio")]
    pub eps: Rational,
    pub m: usize,
    pub anchored: bool,
}

impl SparsityVerdict {
    pub fn is_sparse(&self) -> bool {
        self.outcome == SparsityOutcome::Sparse
    }

    pub fn witness(&self) -> Option<&[Face]> {
        match &self.outcome {
            SparsityOutcome::Sparse => None,
            SparsityOutcome::DenseWitness(t) => Some(t),
        }
    }

    /// Re-checks a witness by direct counting.
    pub fn witness_is_valid(&self) -> bool {
        match &self.outcome {
            SparsityOutcome::Sparse => true,
            SparsityOutcome::DenseWitness(t) => {
                let w = if self.anchored { 3 } else { 0 };
                !t.is_empty()
                    && t.len() <= self.m
                    && witness_ratio(t, w) < half() + self.eps
            }
        }
    }
}

/// `(ε, m)`-sparsity.
pub fn check_sparse(x: &Complex2, eps: Rational, m: usize) -> SparsityVerdict {
    search(x, eps, m, 0)
}

/// `(ε, m, 3)`-sparsity: vertices 1, 2, 3 are pinned and free of cost.
pub fn check_sparse3(x: &Complex2, eps: Rational, m: usize) -> SparsityVerdict {
    search(x, eps, m, 3)
}

struct Search<'a> {
    x: &'a Complex2,
    anchor: u32,
    c: Rational,
    m: usize,
    max_size: usize,
    adj: Vec<Vec<u32>>,
}

struct State {
    in_set: Vec<bool>,
    /// Number of set members adjacent to each vertex.
    touch: Vec<u32>,
    set: Vec<u32>,
    faces: Vec<Face>,
}

fn search(x: &Complex2, eps: Rational, m: usize, anchor: u32) -> SparsityVerdict {
    let verdict = |outcome| SparsityVerdict { outcome, eps, m, anchored: anchor > 0 };
    let c = half() + eps;
    if m == 0 || c <= Rational::from_integer(0) || x.f2() == 0 || x.n() < anchor {
        return verdict(SparsityOutcome::Sparse);
    }
    // largest s with s < c m
    let cm = c * Rational::from_integer(m as i64);
    let max_size = if cm.is_integer() { cm.to_integer() - 1 } else { cm.floor().to_integer() };
    let s = Search { x, anchor, c, m, max_size: max_size.max(-1) as usize, adj: Vec::new() };
    if anchor == 3 && x.has_face(&[1, 2, 3]) {
        // S = ∅ with the single face {1, 2, 3} costs nothing.
        return verdict(SparsityOutcome::DenseWitness(vec![[1, 2, 3]]));
    }
    if max_size < 1 {
        return verdict(SparsityOutcome::Sparse);
    }
    let s = Search { adj: face_adjacency(x, anchor), ..s };
    let roots: Vec<u32> =
        (anchor + 1..=x.n()).filter(|&v| !x.incidence()[v as usize].is_empty()).collect();
    let found = roots.par_iter().find_map_first(|&root| s.from_root(root));
    verdict(match found {
        Some(t) => SparsityOutcome::DenseWitness(t),
        None => SparsityOutcome::Sparse,
    })
}

/// Non-anchor vertices sharing at least one face.
fn face_adjacency(x: &Complex2, anchor: u32) -> Vec<Vec<u32>> {
    let mut adj = vec![Vec::new(); x.n() as usize + 1];
    for f in x.faces() {
        for &a in f {
            for &b in f {
                if a != b && a > anchor && b > anchor {
                    adj[a as usize].push(b);
                }
            }
        }
    }
    for l in adj.iter_mut() {
        l.sort_unstable();
        l.dedup();
    }
    adj
}

impl Search<'_> {
    fn from_root(&self, root: u32) -> Option<Vec<Face>> {
        let n = self.x.n() as usize + 1;
        let mut st = State {
            in_set: vec![false; n],
            touch: vec![0; n],
            set: Vec::with_capacity(self.max_size),
            faces: Vec::new(),
        };
        for v in 1..=self.anchor {
            st.in_set[v as usize] = true;
        }
        let added = self.push(&mut st, root);
        let ext: Vec<u32> = self.adj[root as usize].iter().copied().filter(|&u| u > root).collect();
        let out = self.extend(&mut st, ext, root);
        self.pop(&mut st, root, added);
        out
    }

    /// Adds `v`, appending the faces it newly spans. Returns how many.
    fn push(&self, st: &mut State, v: u32) -> usize {
        let before = st.faces.len();
        st.in_set[v as usize] = true;
        st.set.push(v);
        for &i in &self.x.incidence()[v as usize] {
            let f = self.x.faces()[i as usize];
            if f.iter().all(|&u| st.in_set[u as usize]) {
                st.faces.push(f);
            }
        }
        for &u in &self.adj[v as usize] {
            st.touch[u as usize] += 1;
        }
        st.faces.len() - before
    }

    fn pop(&self, st: &mut State, v: u32, added: usize) {
        st.faces.truncate(st.faces.len() - added);
        st.set.pop();
        st.in_set[v as usize] = false;
        for &u in &self.adj[v as usize] {
            st.touch[u as usize] -= 1;
        }
    }

    fn violation(&self, st: &State) -> Option<Vec<Face>> {
        let k = st.faces.len().min(self.m);
        let size = Rational::from_integer(st.set.len() as i64);
        if k == 0 || size >= self.c * Rational::from_integer(k as i64) {
            return None;
        }
        let mut spanned = st.faces.clone();
        spanned.sort_unstable();
        // Shortest sorted prefix that already violates; the prefix of
        // length k always does.
        let j = (1..=k)
            .find(|&j| witness_ratio(&spanned[..j], self.anchor) < self.c)
            .unwrap_or(k);
        spanned.truncate(j);
        Some(spanned)
    }

    fn extend(&self, st: &mut State, mut ext: Vec<u32>, root: u32) -> Option<Vec<Face>> {
        if let Some(t) = self.violation(st) {
            return Some(t);
        }
        if st.set.len() >= self.max_size {
            return None;
        }
        // Pop from the back of a descending list to visit ascending.
        ext.sort_unstable_by(|a, b| b.cmp(a));
        while let Some(w) = ext.pop() {
            let mut next = ext.clone();
            for &u in &self.adj[w as usize] {
                if u > root && !st.in_set[u as usize] && st.touch[u as usize] == 0 {
                    next.push(u);
                }
            }
            let added = self.push(st, w);
            let out = self.extend(st, next, root);
            self.pop(st, w, added);
            if out.is_some() {
                return out;
            }
        }
        None
    }
}
