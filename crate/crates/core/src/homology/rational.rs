//! Rank over the rationals by fraction-free (Bareiss) elimination.
//!
//! Every intermediate entry is a minor of the input, so the i128 path only
//! overflows on genuinely large minors; it reports [`Error::Overflow`]
//! instead of wrapping. [`rank_rational_big`] is the arbitrary-precision
//! fallback.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::homology::sparse::SparseMatrix;

/// Dense rows of the matrix, oriented so rows are the shorter side.
fn dense_short_rows(m: &SparseMatrix) -> Vec<Vec<i64>> {
    if m.nrows() <= m.ncols() {
        m.to_dense()
    } else {
        m.transpose().to_dense()
    }
}

pub fn rank_rational(m: &SparseMatrix) -> Result<usize> {
    let mut a: Vec<Vec<i128>> = dense_short_rows(m)
        .into_iter()
        .map(|r| r.into_iter().map(i128::from).collect())
        .collect();
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut prev: i128 = 1;
    let mut rank = 0;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&i| a[i][c] != 0) else { continue };
        a.swap(rank, p);
        let pivot = a[rank][c];
        for i in rank + 1..rows {
            let lead = a[i][c];
            for j in c..cols {
                // (pivot * a[i][j] - lead * a[rank][j]) / prev is exact.
                let x = pivot.checked_mul(a[i][j]).ok_or(Error::Overflow)?;
                let y = lead.checked_mul(a[rank][j]).ok_or(Error::Overflow)?;
                a[i][j] = x.checked_sub(y).ok_or(Error::Overflow)? / prev;
            }
        }
        prev = pivot;
        rank += 1;
    }
    Ok(rank)
}

pub fn rank_rational_big(m: &SparseMatrix) -> usize {
    let mut a: Vec<Vec<BigInt>> = dense_short_rows(m)
        .into_iter()
        .map(|r| r.into_iter().map(BigInt::from).collect())
        .collect();
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut prev = BigInt::one();
    let mut rank = 0;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(rank, p);
        let pivot = a[rank][c].clone();
        for i in rank + 1..rows {
            let lead = a[i][c].clone();
            if lead.is_zero() && pivot.is_one() && prev.is_one() {
                continue;
            }
            for j in c..cols {
                let v = (&pivot * &a[i][j] - &lead * &a[rank][j]) / &prev;
                a[i][j] = v;
            }
        }
        prev = pivot;
        rank += 1;
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_ranks() {
        assert_eq!(rank_rational(&SparseMatrix::identity(5)).unwrap(), 5);
        let m = SparseMatrix::from_dense(&[vec![1, 2, 3], vec![2, 4, 6], vec![1, 0, 1]]);
        assert_eq!(rank_rational(&m).unwrap(), 2);
        assert_eq!(rank_rational_big(&m), 2);
        assert_eq!(rank_rational(&SparseMatrix::zeros(3, 0)).unwrap(), 0);
    }

    #[test]
    fn overflow_is_signalled() {
        // Rows grow as 2^62-ish products.
        let big = 1i64 << 62;
        let m = SparseMatrix::from_dense(&[
            vec![big, 1, 3],
            vec![1, big, 5],
            vec![7, 11, big],
        ]);
        assert_eq!(rank_rational(&m), Err(Error::Overflow));
        assert_eq!(rank_rational_big(&m), 3);
    }
}
