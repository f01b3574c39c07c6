//! Closed edge paths in a complex.

use std::fmt;

use serde::Serialize;

use crate::complex::Complex2;
use crate::error::{Error, Result};

/// A cyclic vertex sequence `v_1 ... v_r` whose cyclically consecutive
/// vertices are distinct and joined by an edge.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct LoopWord {
    vertices: Vec<u32>,
}

impl LoopWord {
    /// Validates a loop of length at least 3 against `x`.
    pub fn new(x: &Complex2, vertices: Vec<u32>) -> Result<Self> {
        if vertices.len() < 3 {
            return Err(Error::InvalidLoop(format!("length {} < 3", vertices.len())));
        }
        let r = vertices.len();
        for i in 0..r {
            let (a, b) = (vertices[i], vertices[(i + 1) % r]);
            if a == b {
                return Err(Error::InvalidLoop(format!("repeated consecutive vertex {a}")));
            }
            if !x.has_edge(a, b) {
                return Err(Error::InvalidLoop(format!("missing edge ({}, {})", a.min(b), a.max(b))));
            }
        }
        Ok(LoopWord { vertices })
    }

    /// The triangle `1 -> 2 -> 3 -> 1`.
    pub fn id3(x: &Complex2) -> Result<Self> {
        Self::new(x, vec![1, 2, 3])
    }

    pub fn vertices(&self) -> &[u32] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn rotated(&self, k: usize) -> Self {
        let mut v = self.vertices.clone();
        let r = v.len();
        v.rotate_left(k % r);
        LoopWord { vertices: v }
    }

    pub fn reversed(&self) -> Self {
        let mut v = self.vertices.clone();
        v.reverse();
        LoopWord { vertices: v }
    }
}

impl fmt::Display for LoopWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.vertices.iter().map(u32::to_string).collect();
        write!(f, "{}", parts.join("-"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{t1, x5};

    #[test]
    fn validation() {
        assert!(LoopWord::id3(&t1()).is_ok());
        let listed = Complex2::from_faces(5, vec![[1, 4, 5]], []).unwrap();
        assert!(matches!(LoopWord::id3(&listed), Err(Error::InvalidLoop(_))));
        assert!(matches!(LoopWord::new(&x5(), vec![1, 2]), Err(Error::InvalidLoop(_))));
        assert!(matches!(LoopWord::new(&x5(), vec![1, 2, 2]), Err(Error::InvalidLoop(_))));
        assert_eq!(LoopWord::new(&x5(), vec![1, 4, 5, 2]).unwrap().to_string(), "1-4-5-2");
    }
}
