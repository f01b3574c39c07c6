//! Smith normal form (invariant factors only) of integer matrices.

use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::homology::sparse::SparseMatrix;

/// Nonzero invariant factors `d_1 | d_2 | ...`, all positive.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SnfResult {
    pub factors: Vec<u64>,
}

impl SnfResult {
    pub fn rank(&self) -> usize {
        self.factors.len()
    }

    /// Factors greater than one.
    pub fn torsion(&self) -> Vec<u64> {
        self.factors.iter().copied().filter(|&d| d > 1).collect()
    }
}

fn ck(x: Option<i128>) -> Result<i128> {
    x.ok_or(Error::Overflow)
}

/// Invariant factors by integer row/column reduction, pivoting on the
/// entry of least magnitude.
pub fn smith_normal_form(m: &SparseMatrix) -> Result<SnfResult> {
    let mut a: Vec<Vec<i128>> = m
        .to_dense()
        .into_iter()
        .map(|r| r.into_iter().map(i128::from).collect())
        .collect();
    let rows = m.nrows();
    let cols = m.ncols();
    let mut diag: Vec<i128> = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        let mut best: Option<(usize, usize)> = None;
        for (i, row) in a.iter().enumerate().skip(t) {
            for (j, &x) in row.iter().enumerate().skip(t) {
                if x != 0 && best.is_none_or(|(bi, bj)| x.abs() < a[bi][bj].abs()) {
                    best = Some((i, j));
                    if x.abs() == 1 {
                        break;
                    }
                }
            }
            if best.is_some_and(|(bi, bj)| a[bi][bj].abs() == 1) {
                break;
            }
        }
        let Some((pi, pj)) = best else { break };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let p = a[t][t];
            let mut clean = true;
            for i in t + 1..rows {
                if a[i][t] != 0 {
                    let q = a[i][t] / p;
                    for j in t..cols {
                        let s = ck(q.checked_mul(a[t][j]))?;
                        a[i][j] = ck(a[i][j].checked_sub(s))?;
                    }
                    clean &= a[i][t] == 0;
                }
            }
            for j in t + 1..cols {
                if a[t][j] != 0 {
                    let q = a[t][j] / p;
                    for row in a.iter_mut().skip(t) {
                        let s = ck(q.checked_mul(row[t]))?;
                        row[j] = ck(row[j].checked_sub(s))?;
                    }
                    clean &= a[t][j] == 0;
                }
            }
            if clean {
                break;
            }
            // A remainder smaller than the pivot survived; move it in.
            let mut best = (t, t);
            for i in t + 1..rows {
                if a[i][t] != 0 && a[i][t].abs() < a[best.0][best.1].abs() {
                    best = (i, t);
                }
            }
            for j in t + 1..cols {
                if a[t][j] != 0 && a[t][j].abs() < a[best.0][best.1].abs() {
                    best = (t, j);
                }
            }
            if best.0 != t {
                a.swap(t, best.0);
            } else if best.1 != t {
                for row in a.iter_mut() {
                    row.swap(t, best.1);
                }
            }
        }
        diag.push(a[t][t].abs());
        t += 1;
    }
    // diag(a, b) ~ diag(gcd, lcm) turns any diagonal into a divisor chain.
    for i in 0..diag.len() {
        for j in i + 1..diag.len() {
            let (x, y) = (diag[i], diag[j]);
            let g = x.gcd(&y);
            diag[i] = g;
            diag[j] = ck((x / g).checked_mul(y))?;
        }
    }
    let factors = diag
        .into_iter()
        .map(|d| u64::try_from(d).map_err(|_| Error::Overflow))
        .collect::<Result<Vec<u64>>>()?;
    Ok(SnfResult { factors })
}

/// Echelon basis of the integer row lattice spanned by `rows` (each of
/// length `width`). Rows are combined by unimodular gcd steps, so the
/// lattice, and hence the invariant factors, are unchanged; the result has
/// at most `width` rows.
pub fn lattice_basis(
    rows: impl IntoIterator<Item = Vec<(usize, i64)>>,
    width: usize,
) -> Result<SparseMatrix> {
    let mut owner: Vec<Option<usize>> = vec![None; width];
    let mut basis: Vec<Vec<i128>> = Vec::new();
    for sparse in rows {
        let mut r = vec![0i128; width];
        for (j, v) in sparse {
            r[j] = v as i128;
        }
        let mut k = 0;
        loop {
            while k < width && r[k] == 0 {
                k += 1;
            }
            if k == width {
                break;
            }
            let Some(o) = owner[k] else {
                if r[k] < 0 {
                    r.iter_mut().for_each(|x| *x = -*x);
                }
                owner[k] = Some(basis.len());
                basis.push(r);
                break;
            };
            let b = &mut basis[o];
            let (bk, rk) = (b[k], r[k]);
            if rk % bk == 0 {
                let q = rk / bk;
                for j in k..width {
                    r[j] = ck(r[j].checked_sub(ck(q.checked_mul(b[j]))?))?;
                }
            } else {
                let e = bk.extended_gcd(&rk);
                let (g, s, t) = (e.gcd, e.x, e.y);
                let (bq, rq) = (bk / g, rk / g);
                for j in k..width {
                    let (bj, rj) = (b[j], r[j]);
                    b[j] = ck(ck(s.checked_mul(bj))?.checked_add(ck(t.checked_mul(rj))?))?;
                    r[j] = ck(ck(bq.checked_mul(rj))?.checked_sub(ck(rq.checked_mul(bj))?))?;
                }
                if b[k] < 0 {
                    b.iter_mut().for_each(|x| *x = -*x);
                }
            }
        }
    }
    let columns = (0..width)
        .map(|j| {
            basis
                .iter()
                .enumerate()
                .filter(|(_, r)| r[j] != 0)
                .map(|(i, r)| i64::try_from(r[j]).map(|v| (i, v)).map_err(|_| Error::Overflow))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SparseMatrix::new(basis.len(), columns))
}

/// Prime-power decomposition of each factor, sorted.
pub fn prime_power_parts(factors: &[u64]) -> Vec<u64> {
    let mut out = Vec::new();
    for &d in factors {
        let mut d = d;
        let mut p = 2;
        while p * p <= d {
            if d % p == 0 {
                let mut q = 1;
                while d % p == 0 {
                    d /= p;
                    q *= p;
                }
                out.push(q);
            }
            p += 1;
        }
        if d > 1 {
            out.push(d);
        }
    }
    out.sort_unstable();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn snf(rows: &[Vec<i64>]) -> Vec<u64> {
        smith_normal_form(&SparseMatrix::from_dense(rows)).unwrap().factors
    }

    #[test]
    fn small_examples() {
        assert_eq!(snf(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]), vec![2, 6, 12]);
        assert_eq!(snf(&[vec![2, 0], vec![0, 3]]), vec![1, 6]);
        assert_eq!(snf(&[vec![0, 0], vec![0, 0]]), Vec::<u64>::new());
        assert_eq!(snf(&[vec![4]]), vec![4]);
    }

    #[test]
    fn lattice_basis_keeps_invariants() {
        let rows = [vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16], vec![4, 8, 8]];
        let sparse = rows.iter().map(|r| r.iter().copied().enumerate().collect());
        let b = lattice_basis(sparse, 3).unwrap();
        assert!(b.nrows() <= 3);
        assert_eq!(smith_normal_form(&b).unwrap().factors, vec![2, 6, 12]);
    }

    #[test]
    fn prime_powers() {
        assert_eq!(prime_power_parts(&[1, 2, 12, 7]), vec![2, 3, 4, 7]);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn det(m: &[Vec<i128>]) -> i128 {
            match m.len() {
                0 => 1,
                1 => m[0][0],
                k => (0..k)
                    .map(|j| {
                        let minor: Vec<Vec<i128>> = m[1..]
                            .iter()
                            .map(|r| r.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, &v)| v).collect())
                            .collect();
                        let s = if j % 2 == 0 { 1 } else { -1 };
                        s * m[0][j] * det(&minor)
                    })
                    .sum(),
            }
        }

        fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
            (0u32..1 << n)
                .filter(|s| s.count_ones() as usize == k)
                .map(|s| (0..n).filter(|i| s >> i & 1 == 1).collect())
                .collect()
        }

        /// gcd of all k by k minors.
        fn minor_gcd(a: &[Vec<i64>], k: usize) -> i128 {
            let (rows, cols) = (a.len(), a[0].len());
            let mut g = 0i128;
            for rs in subsets(rows, k) {
                for cs in subsets(cols, k) {
                    let m: Vec<Vec<i128>> =
                        rs.iter().map(|&r| cs.iter().map(|&c| a[r][c] as i128).collect()).collect();
                    g = g.gcd(&det(&m));
                }
            }
            g
        }

        fn matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
            (1usize..=5, 1usize..=5)
                .prop_flat_map(|(r, c)| proptest::collection::vec(proptest::collection::vec(-6i64..=6, c), r))
        }

        proptest! {
            #[test]
            fn factors_divide_and_match_minors(a in matrix()) {
                let f = smith_normal_form(&SparseMatrix::from_dense(&a)).unwrap().factors;
                for w in f.windows(2) {
                    prop_assert_eq!(w[1] % w[0], 0);
                }
                let mut prod = 1i128;
                for k in 1..=a.len().min(a[0].len()) {
                    let g = minor_gcd(&a, k);
                    if k <= f.len() {
                        prod *= f[k - 1] as i128;
                        prop_assert_eq!(prod, g);
                    } else {
                        prop_assert_eq!(g, 0);
                    }
                }
            }

            #[test]
            fn lattice_basis_preserves_factors(a in matrix()) {
                let rows = a.iter().map(|r| r.iter().copied().enumerate().filter(|&(_, v)| v != 0).collect());
                let b = lattice_basis(rows, a[0].len()).unwrap();
                prop_assert_eq!(
                    smith_normal_form(&b).unwrap().factors,
                    smith_normal_form(&SparseMatrix::from_dense(&a)).unwrap().factors
                );
            }
        }
    }
}
