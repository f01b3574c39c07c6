//! Rank over GF(2) with rows packed into 64-bit words.

use crate::homology::sparse::SparseMatrix;

/// Incremental echelon basis of GF(2) vectors of a fixed bit width.
///
/// Each stored row has its lowest set bit at a distinct pivot position; a
/// new vector is reduced by XOR-ing the row owning its lowest set bit until
/// it either vanishes (dependent) or lands on a free pivot.
#[derive(Debug, Clone)]
pub struct Gf2Basis {
    words: usize,
    owner: Vec<u32>,
    rows: Vec<Vec<u64>>,
}

const NONE: u32 = u32::MAX;

impl Gf2Basis {
    pub fn new(width: usize) -> Self {
        Gf2Basis { words: width.div_ceil(64), owner: vec![NONE; width], rows: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn words(&self) -> usize {
        self.words
    }

    /// Inserts a vector given by its set bit positions. Returns whether the
    /// rank grew.
    pub fn insert_bits(&mut self, bits: impl IntoIterator<Item = usize>) -> bool {
        let mut row = vec![0u64; self.words];
        for b in bits {
            row[b / 64] ^= 1 << (b % 64);
        }
        self.insert(row)
    }

    /// Inserts a packed vector. Returns whether the rank grew.
    pub fn insert(&mut self, mut row: Vec<u64>) -> bool {
        debug_assert_eq!(row.len(), self.words);
        let mut w = 0;
        loop {
            while w < self.words && row[w] == 0 {
                w += 1;
            }
            if w == self.words {
                return false;
            }
            let bit = w * 64 + row[w].trailing_zeros() as usize;
            let o = self.owner[bit];
            if o == NONE {
                self.owner[bit] = self.rows.len() as u32;
                self.rows.push(row);
                return true;
            }
            let pivot = &self.rows[o as usize];
            for k in w..self.words {
                row[k] ^= pivot[k];
            }
        }
    }
}

/// Rank of `m` over GF(2).
pub fn rank_gf2(m: &SparseMatrix) -> usize {
    rank_gf2_capped(m, usize::MAX)
}

/// Rank of `m` over GF(2), stopping early once it reaches `cap` (a known
/// upper bound such as the dimension of a containing subspace).
pub fn rank_gf2_capped(m: &SparseMatrix, cap: usize) -> usize {
    let cap = cap.min(m.nrows()).min(m.ncols());
    let mut basis = Gf2Basis::new(m.nrows());
    for col in m.columns() {
        if basis.rank() >= cap {
            break;
        }
        basis.insert_bits(col.iter().filter(|&&(_, v)| v % 2 != 0).map(|&(r, _)| r));
    }
    basis.rank()
}
