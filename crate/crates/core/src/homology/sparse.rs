/// Column-major sparse integer matrix. Each column holds `(row, value)`
/// pairs sorted by row with no zero values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparseMatrix {
    nrows: usize,
    ncols: usize,
    columns: Vec<Vec<(usize, i64)>>,
}

impl SparseMatrix {
    pub fn new(nrows: usize, columns: Vec<Vec<(usize, i64)>>) -> Self {
        let columns: Vec<Vec<(usize, i64)>> = columns
            .into_iter()
            .map(|mut c| {
                c.retain(|&(_, v)| v != 0);
                c.sort_unstable_by_key(|&(r, _)| r);
                assert!(c.iter().all(|&(r, _)| r < nrows), "row index out of range");
                c
            })
            .collect();
        SparseMatrix { nrows, ncols: columns.len(), columns }
    }

    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        SparseMatrix { nrows, ncols, columns: vec![Vec::new(); ncols] }
    }

    pub fn identity(n: usize) -> Self {
        Self::new(n, (0..n).map(|i| vec![(i, 1)]).collect())
    }

    pub fn from_dense(rows: &[Vec<i64>]) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        let columns = (0..ncols)
            .map(|j| (0..nrows).map(|i| (i, rows[i][j])).collect())
            .collect();
        Self::new(nrows, columns)
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn columns(&self) -> &[Vec<(usize, i64)>] {
        &self.columns
    }

    pub fn get(&self, row: usize, col: usize) -> i64 {
        let c = &self.columns[col];
        c.binary_search_by_key(&row, |&(r, _)| r).map(|i| c[i].1).unwrap_or(0)
    }

    pub fn to_dense(&self) -> Vec<Vec<i64>> {
        let mut out = vec![vec![0; self.ncols]; self.nrows];
        for (j, c) in self.columns.iter().enumerate() {
            for &(i, v) in c {
                out[i][j] = v;
            }
        }
        out
    }

    pub fn transpose(&self) -> Self {
        let mut cols = vec![Vec::new(); self.nrows];
        for (j, c) in self.columns.iter().enumerate() {
            for &(i, v) in c {
                cols[i].push((j, v));
            }
        }
        SparseMatrix { nrows: self.ncols, ncols: self.nrows, columns: cols }
    }

    /// Exact product, or `None` on overflow.
    pub fn checked_mul(&self, rhs: &SparseMatrix) -> Option<SparseMatrix> {
        assert_eq!(self.ncols, rhs.nrows);
        let mut cols = Vec::with_capacity(rhs.ncols);
        for c in &rhs.columns {
            let mut acc: std::collections::BTreeMap<usize, i64> = Default::default();
            for &(k, b) in c {
                for &(i, a) in &self.columns[k] {
                    let e = acc.entry(i).or_insert(0);
                    *e = e.checked_add(a.checked_mul(b)?)?;
                }
            }
            cols.push(acc.into_iter().collect());
        }
        Some(SparseMatrix::new(self.nrows, cols))
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(Vec::is_empty)
    }
}
