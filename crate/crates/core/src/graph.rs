//! Simple undirected graphs on integer labels, used for links, link
//! intersections and 1-skeleta.

use std::collections::VecDeque;

use serde::Serialize;

use crate::complex::Edge;
use crate::error::{Error, Result};

/// A finite simple graph. Vertices are kept sorted, edges are `(a, b)` with
/// `a < b`, sorted and deduplicated.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Graph {
    vertices: Vec<u32>,
    edges: Vec<Edge>,
}

impl Graph {
    pub fn new(mut vertices: Vec<u32>, edges: impl IntoIterator<Item = Edge>) -> Result<Self> {
        vertices.sort_unstable();
        vertices.dedup();
        let mut es = Vec::new();
        for (a, b) in edges {
            if a == b {
                return Err(Error::DegenerateSimplex(vec![a, b]));
            }
            let e = if a < b { (a, b) } else { (b, a) };
            for v in [e.0, e.1] {
                if vertices.binary_search(&v).is_err() {
                    return Err(Error::OutOfRange {
                        vertex: v,
                        n: vertices.last().copied().unwrap_or(0),
                    });
                }
            }
            es.push(e);
        }
        es.sort_unstable();
        es.dedup();
        Ok(Graph { vertices, edges: es })
    }

    /// Builds a graph from parts that are already sorted and valid.
    pub(crate) fn from_sorted(vertices: Vec<u32>, edges: Vec<Edge>) -> Self {
        debug_assert!(vertices.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(edges.windows(2).all(|w| w[0] < w[1]));
        Graph { vertices, edges }
    }

    pub fn vertices(&self) -> &[u32] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, a: u32, b: u32) -> bool {
        let e = if a < b { (a, b) } else { (b, a) };
        self.edges.binary_search(&e).is_ok()
    }

    fn index_of(&self, v: u32) -> usize {
        self.vertices.binary_search(&v).expect("edge endpoint is a vertex")
    }

    /// Adjacency lists indexed by position in `vertices()`.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.vertices.len()];
        for &(a, b) in &self.edges {
            let (i, j) = (self.index_of(a), self.index_of(b));
            adj[i].push(j);
            adj[j].push(i);
        }
        adj
    }

    /// Connected components, each sorted, ordered by least vertex.
    pub fn connected_components(&self) -> Vec<Vec<u32>> {
        let adj = self.adjacency();
        let mut seen = vec![false; self.vertices.len()];
        let mut out = Vec::new();
        for start in 0..self.vertices.len() {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![self.vertices[start]];
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                for &w in &adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(self.vertices[w]);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }

    /// BFS spanning tree rooted at the least vertex.
    pub fn spanning_tree(&self) -> Result<Vec<Edge>> {
        if self.vertices.is_empty() {
            return Ok(Vec::new());
        }
        let adj = self.adjacency();
        let mut seen = vec![false; self.vertices.len()];
        let mut tree = Vec::with_capacity(self.vertices.len() - 1);
        seen[0] = true;
        let mut queue = VecDeque::from([0usize]);
        while let Some(u) = queue.pop_front() {
            let mut next = adj[u].clone();
            next.sort_unstable();
            for w in next {
                if !seen[w] {
                    seen[w] = true;
                    let (a, b) = (self.vertices[u], self.vertices[w]);
                    tree.push(if a < b { (a, b) } else { (b, a) });
                    queue.push_back(w);
                }
            }
        }
        if tree.len() + 1 != self.vertices.len() {
            return Err(Error::Disconnected);
        }
        tree.sort_unstable();
        Ok(tree)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_is_one_component() {
        let g = Graph::new(vec![1, 2, 3], [(1, 2), (2, 3), (1, 3)]).unwrap();
        assert_eq!(g.connected_components(), vec![vec![1, 2, 3]]);
        assert_eq!(g.spanning_tree().unwrap().len(), 2);
    }

    #[test]
    fn isolated_vertices_split() {
        let g = Graph::new(vec![3, 4], []).unwrap();
        assert_eq!(g.connected_components(), vec![vec![3], vec![4]]);
        assert_eq!(g.spanning_tree(), Err(Error::Disconnected));
    }

    #[test]
    fn rejects_loops_and_unknown_vertices() {
        assert!(Graph::new(vec![1, 2], [(1, 1)]).is_err());
        assert!(Graph::new(vec![1, 2], [(1, 5)]).is_err());
    }

    #[test]
    fn dedups_edges() {
        let g = Graph::new(vec![1, 2], [(2, 1), (1, 2)]).unwrap();
        assert_eq!(g.edges(), &[(1, 2)]);
    }
}
