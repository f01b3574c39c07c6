//! Finite simplicial 2-complexes on the vertex set `1..=n`.
//!
//! A [`Complex2`] is immutable once built. The 1-skeleton is either the
//! complete graph (stored implicitly, so `n = 10^4` costs nothing) or an
//! explicit sorted edge list. Faces are stored as sorted vertex triples in
//! lexicographic order. Per-edge face degrees and per-vertex face
//! incidences are built lazily on first use.

use std::collections::HashMap;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub type Vertex = u32;
/// An edge `(a, b)` with `a < b`.
pub type Edge = (u32, u32);
/// A face `[a, b, c]` with `a < b < c`.
pub type Face = [u32; 3];

/// Normalizes a pair, rejecting loops.
pub fn edge(a: u32, b: u32) -> Result<Edge> {
    match a.cmp(&b) {
        std::cmp::Ordering::Less => Ok((a, b)),
        std::cmp::Ordering::Greater => Ok((b, a)),
        std::cmp::Ordering::Equal => Err(Error::DegenerateSimplex(vec![a, b])),
    }
}

/// Sorts a triple, rejecting repeated vertices.
pub fn face(a: u32, b: u32, c: u32) -> Result<Face> {
    let mut f = [a, b, c];
    f.sort_unstable();
    if f[0] == f[1] || f[1] == f[2] {
        return Err(Error::DegenerateSimplex(vec![a, b, c]));
    }
    Ok(f)
}

/// The three boundary edges of a sorted face, in the order `bc, ac, ab`.
pub fn boundary_edges(f: &Face) -> [Edge; 3] {
    [(f[1], f[2]), (f[0], f[2]), (f[0], f[1])]
}

pub(crate) fn choose2(n: u64) -> u64 {
    n * n.saturating_sub(1) / 2
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Skeleton {
    /// All `C(n, 2)` pairs, never materialized.
    Full,
    /// Sorted, deduplicated edge list.
    Listed(Vec<Edge>),
}

#[derive(Debug, Clone)]
pub struct Complex2 {
    n: u32,
    skeleton: Skeleton,
    faces: Vec<Face>,
    degrees: OnceLock<HashMap<Edge, u32>>,
    incidence: OnceLock<Vec<Vec<u32>>>,
}

impl PartialEq for Complex2 {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.faces == other.faces && self.edges_equal(other)
    }
}

impl Eq for Complex2 {}

/// A subcomplex relabeled onto `1..=k`, with the original labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relabeled {
    pub complex: Complex2,
    /// `labels[i]` is the original vertex of new vertex `i + 1`.
    pub labels: Vec<u32>,
}

impl Relabeled {
    pub fn original_face(&self, f: &Face) -> Face {
        let mut g = f.map(|v| self.labels[v as usize - 1]);
        g.sort_unstable();
        g
    }
}

impl Complex2 {
    /// Complex with the complete 1-skeleton on `n` vertices.
    pub fn full(n: u32, faces: impl IntoIterator<Item = Face>) -> Result<Self> {
        let faces = Self::check_faces(n, faces)?;
        Ok(Self::from_parts(n, Skeleton::Full, faces))
    }

    /// Complex with an explicit edge list. Every boundary edge of every face
    /// must be listed.
    pub fn listed(
        n: u32,
        edges: impl IntoIterator<Item = Edge>,
        faces: impl IntoIterator<Item = Face>,
    ) -> Result<Self> {
        let mut es = Vec::new();
        for (a, b) in edges {
            for v in [a, b] {
                check_vertex(n, v)?;
            }
            es.push(edge(a, b)?);
        }
        es.sort_unstable();
        es.dedup();
        let faces = Self::check_faces(n, faces)?;
        for f in &faces {
            for e in boundary_edges(f).into_iter().rev() {
                if es.binary_search(&e).is_err() {
                    return Err(Error::MissingBoundaryEdge { face: *f, edge: e });
                }
            }
        }
        Ok(Self::from_parts(n, Skeleton::Listed(es), faces))
    }

    /// Listed complex whose edges are exactly the boundary edges of `faces`
    /// plus `extra_edges`.
    pub fn from_faces(
        n: u32,
        faces: impl IntoIterator<Item = Face>,
        extra_edges: impl IntoIterator<Item = Edge>,
    ) -> Result<Self> {
        let faces = Self::check_faces(n, faces)?;
        let mut es: Vec<Edge> = faces.iter().flat_map(boundary_edges).collect();
        es.extend(extra_edges);
        Self::listed(n, es, faces)
    }

    fn check_faces(n: u32, faces: impl IntoIterator<Item = Face>) -> Result<Vec<Face>> {
        let mut out = Vec::new();
        for f in faces {
            for v in f {
                check_vertex(n, v)?;
            }
            out.push(face(f[0], f[1], f[2])?);
        }
        out.sort_unstable();
        out.dedup();
        Ok(out)
    }

    pub(crate) fn from_parts(n: u32, skeleton: Skeleton, faces: Vec<Face>) -> Self {
        Complex2 { n, skeleton, faces, degrees: OnceLock::new(), incidence: OnceLock::new() }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn skeleton(&self) -> &Skeleton {
        &self.skeleton
    }

    pub fn is_full(&self) -> bool {
        matches!(self.skeleton, Skeleton::Full)
    }

    /// True when the 1-skeleton is the complete graph, however stored.
    pub fn has_complete_skeleton(&self) -> bool {
        match &self.skeleton {
            Skeleton::Full => true,
            Skeleton::Listed(es) => es.len() as u64 == choose2(self.n as u64),
        }
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn f0(&self) -> u64 {
        self.n as u64
    }

    pub fn f1(&self) -> u64 {
        match &self.skeleton {
            Skeleton::Full => choose2(self.n as u64),
            Skeleton::Listed(es) => es.len() as u64,
        }
    }

    pub fn f2(&self) -> u64 {
        self.faces.len() as u64
    }

    pub fn f_vector(&self) -> [u64; 3] {
        [self.f0(), self.f1(), self.f2()]
    }

    pub fn check_vertex(&self, v: u32) -> Result<()> {
        check_vertex(self.n, v)
    }

    pub fn has_edge(&self, a: u32, b: u32) -> bool {
        if a == b || a == 0 || b == 0 || a > self.n || b > self.n {
            return false;
        }
        match &self.skeleton {
            Skeleton::Full => true,
            Skeleton::Listed(es) => es.binary_search(&(a.min(b), a.max(b))).is_ok(),
        }
    }

    pub fn has_face(&self, f: &Face) -> bool {
        let mut g = *f;
        g.sort_unstable();
        self.faces.binary_search(&g).is_ok()
    }

    /// Position of an edge in lexicographic edge order.
    pub fn edge_index(&self, e: Edge) -> Option<usize> {
        let (a, b) = (e.0.min(e.1), e.0.max(e.1));
        if !self.has_edge(a, b) {
            return None;
        }
        match &self.skeleton {
            Skeleton::Full => {
                let (n, a0) = (self.n as u64, (a - 1) as u64);
                let offset = a0 * n - a0 * (a0 + 1) / 2;
                Some((offset + (b - a - 1) as u64) as usize)
            }
            Skeleton::Listed(es) => es.binary_search(&(a, b)).ok(),
        }
    }

    /// Edges in lexicographic order; lazily generated for a full skeleton.
    pub fn edges(&self) -> Box<dyn Iterator<Item = Edge> + '_> {
        match &self.skeleton {
            Skeleton::Full => {
                let n = self.n;
                Box::new((1..=n).flat_map(move |a| (a + 1..=n).map(move |b| (a, b))))
            }
            Skeleton::Listed(es) => Box::new(es.iter().copied()),
        }
    }

    /// Face indices incident to each vertex (index 0 unused).
    pub fn incidence(&self) -> &[Vec<u32>] {
        self.incidence.get_or_init(|| {
            let mut inc = vec![Vec::new(); self.n as usize + 1];
            for (i, f) in self.faces.iter().enumerate() {
                for &v in f {
                    inc[v as usize].push(i as u32);
                }
            }
            inc
        })
    }

    fn degree_index(&self) -> &HashMap<Edge, u32> {
        self.degrees.get_or_init(|| {
            let mut m = HashMap::new();
            for f in &self.faces {
                for e in boundary_edges(f) {
                    *m.entry(e).or_insert(0) += 1;
                }
            }
            m
        })
    }

    /// Number of faces containing the edge `{a, b}`.
    pub fn face_degree(&self, a: u32, b: u32) -> Result<u32> {
        self.check_vertex(a)?;
        self.check_vertex(b)?;
        let e = edge(a, b)?;
        if !self.has_edge(e.0, e.1) {
            return Err(Error::MissingEdge(e));
        }
        Ok(self.degree_index().get(&e).copied().unwrap_or(0))
    }

    /// `f^2_e` for every edge in edge order.
    pub fn face_degrees(&self) -> Vec<u32> {
        let idx = self.degree_index();
        self.edges().map(|e| idx.get(&e).copied().unwrap_or(0)).collect()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.f0() as i64 - self.f1() as i64 + self.f2() as i64
    }

    /// `L(X) = 2 f_1 - 3 f_2`.
    pub fn length_l(&self) -> i64 {
        2 * self.f1() as i64 - 3 * self.f2() as i64
    }

    /// `L(X)` as the edge sum of `2 - f^2_e`.
    pub fn length_l_by_edges(&self) -> i64 {
        let idx = self.degree_index();
        self.edges().map(|e| 2 - idx.get(&e).copied().unwrap_or(0) as i64).sum()
    }

    /// Neighbours of `v` in the 1-skeleton.
    pub fn neighbors(&self, v: u32) -> Result<Vec<u32>> {
        self.check_vertex(v)?;
        Ok(match &self.skeleton {
            Skeleton::Full => (1..=self.n).filter(|&u| u != v).collect(),
            Skeleton::Listed(es) => {
                let mut out: Vec<u32> = es
                    .iter()
                    .filter_map(|&(a, b)| {
                        if a == v {
                            Some(b)
                        } else if b == v {
                            Some(a)
                        } else {
                            None
                        }
                    })
                    .collect();
                out.sort_unstable();
                out
            }
        })
    }

    /// The link of `v`: vertices joined to `v` by an edge, edges `{p, q}`
    /// with `{v, p, q}` a face.
    pub fn link(&self, v: u32) -> Result<Graph> {
        let vertices = self.neighbors(v)?;
        let mut edges: Vec<Edge> = self.incidence()[v as usize]
            .iter()
            .map(|&i| {
                let f = self.faces[i as usize];
                let mut other = f.iter().copied().filter(|&u| u != v);
                let p = other.next().unwrap();
                let q = other.next().unwrap();
                (p, q)
            })
            .collect();
        edges.sort_unstable();
        Ok(Graph::from_sorted(vertices, edges))
    }

    /// `lk(a) ∩ lk(b)`: common link vertices (other than `a`, `b`), with
    /// `{u, v}` an edge iff `{a, u, v}` and `{b, u, v}` are both faces.
    pub fn link_intersection_graph(&self, a: u32, b: u32) -> Result<Graph> {
        self.check_vertex(a)?;
        self.check_vertex(b)?;
        if a == b {
            return Err(Error::EqualVertices(a));
        }
        let la = self.link(a)?;
        let lb = self.link(b)?;
        let vertices: Vec<u32> = la
            .vertices()
            .iter()
            .copied()
            .filter(|&u| u != b && lb.vertices().binary_search(&u).is_ok())
            .collect();
        let edges: Vec<Edge> = la
            .edges()
            .iter()
            .copied()
            .filter(|&(u, v)| u != b && v != b && lb.has_edge(u, v))
            .collect();
        Ok(Graph::from_sorted(vertices, edges))
    }

    /// The 1-skeleton as a graph. Materializes all edges.
    pub fn skeleton_graph(&self) -> Graph {
        Graph::from_sorted((1..=self.n).collect(), self.edges().collect())
    }

    /// Connected components of the complex (isolated vertices included),
    /// ordered by least vertex.
    pub fn components(&self) -> Vec<Vec<u32>> {
        match &self.skeleton {
            Skeleton::Full if self.n > 0 => vec![(1..=self.n).collect()],
            _ => self.skeleton_graph().connected_components(),
        }
    }

    /// Subcomplex spanned by the face subset `subset`: its faces, their
    /// boundary edges and their vertices, relabeled order-preservingly.
    pub fn induced_subcomplex(&self, subset: &[Face]) -> Result<Relabeled> {
        let mut fs = Vec::with_capacity(subset.len());
        for f in subset {
            let g = face(f[0], f[1], f[2])?;
            if !self.has_face(&g) {
                return Err(Error::UnknownFace(g));
            }
            fs.push(g);
        }
        let mut labels: Vec<u32> = fs.iter().flatten().copied().collect();
        labels.sort_unstable();
        labels.dedup();
        let relabel = |v: u32| labels.binary_search(&v).unwrap() as u32 + 1;
        let new_faces: Vec<Face> = fs.iter().map(|f| f.map(relabel)).collect();
        let complex = Complex2::from_faces(labels.len() as u32, new_faces, [])?;
        Ok(Relabeled { complex, labels })
    }

    /// Full subcomplex on a vertex set: every edge and face of `self` whose
    /// vertices lie in `vertices`, relabeled order-preservingly.
    pub fn vertex_induced(&self, vertices: &[u32]) -> Result<Relabeled> {
        let mut labels = vertices.to_vec();
        labels.sort_unstable();
        labels.dedup();
        for &v in &labels {
            self.check_vertex(v)?;
        }
        let pos = |v: u32| labels.binary_search(&v).ok().map(|i| i as u32 + 1);
        let faces: Vec<Face> = self
            .faces
            .iter()
            .filter_map(|f| Some([pos(f[0])?, pos(f[1])?, pos(f[2])?]))
            .collect();
        let k = labels.len() as u32;
        let complex = if self.is_full() {
            Complex2::full(k, faces)?
        } else {
            let edges: Vec<Edge> = self
                .edges()
                .filter_map(|(a, b)| Some((pos(a)?, pos(b)?)))
                .collect();
            Complex2::listed(k, edges, faces)?
        };
        Ok(Relabeled { complex, labels })
    }

    /// The `idx`-th connected component as a relabeled subcomplex.
    pub fn component(&self, idx: usize) -> Result<Relabeled> {
        let comps = self.components();
        let verts = comps.get(idx).ok_or(Error::OutOfRange {
            vertex: idx as u32,
            n: comps.len() as u32,
        })?;
        self.vertex_induced(verts)
    }

    /// A copy with extra faces; the skeleton must already contain their
    /// edges unless it is full.
    pub fn with_faces(&self, extra: impl IntoIterator<Item = Face>) -> Result<Self> {
        let faces = self.faces.iter().copied().chain(extra);
        match &self.skeleton {
            Skeleton::Full => Complex2::full(self.n, faces),
            Skeleton::Listed(es) => Complex2::listed(self.n, es.iter().copied(), faces),
        }
    }

    /// Same complex with the skeleton written out as a list.
    pub fn to_listed(&self) -> Self {
        Self::from_parts(self.n, Skeleton::Listed(self.edges().collect()), self.faces.clone())
    }

    fn edges_equal(&self, other: &Self) -> bool {
        match (&self.skeleton, &other.skeleton) {
            (Skeleton::Full, Skeleton::Full) => true,
            (Skeleton::Listed(a), Skeleton::Listed(b)) => a == b,
            _ => self.f1() == other.f1() && self.edges().eq(other.edges()),
        }
    }
}

fn check_vertex(n: u32, v: u32) -> Result<()> {
    if v == 0 || v > n {
        Err(Error::OutOfRange { vertex: v, n })
    } else {
        Ok(())
    }
}
