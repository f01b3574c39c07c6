//! Rank over prime fields GF(q).

use crate::error::{Error, Result};
use crate::homology::sparse::SparseMatrix;

pub fn is_prime(q: u64) -> bool {
    if q < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= q {
        if q % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn pow_mod(mut b: u64, mut e: u64, q: u64) -> u64 {
    let mut acc = 1u64;
    b %= q;
    while e > 0 {
        if e & 1 == 1 {
            acc = (acc as u128 * b as u128 % q as u128) as u64;
        }
        b = (b as u128 * b as u128 % q as u128) as u64;
        e >>= 1;
    }
    acc
}

fn inv_mod(a: u64, q: u64) -> u64 {
    pow_mod(a, q - 2, q)
}

/// Rank of `m` over GF(q), `q` prime and below 2^32.
pub fn rank_gfq(m: &SparseMatrix, q: u64) -> Result<usize> {
    if !is_prime(q) || q >= 1 << 32 {
        return Err(Error::BadField(q));
    }
    let width = m.nrows();
    let cap = m.nrows().min(m.ncols());
    // owner[i] = basis row whose leading (lowest) nonzero index is i,
    // normalized so that entry is 1.
    let mut owner: Vec<Option<usize>> = vec![None; width];
    let mut rows: Vec<Vec<u64>> = Vec::new();
    for col in m.columns() {
        if rows.len() >= cap {
            break;
        }
        let mut v = vec![0u64; width];
        for &(r, x) in col {
            v[r] = x.rem_euclid(q as i64) as u64;
        }
        let mut start = 0;
        loop {
            while start < width && v[start] == 0 {
                start += 1;
            }
            if start == width {
                break;
            }
            match owner[start] {
                Some(o) => {
                    let f = v[start];
                    let pivot = &rows[o];
                    for k in start..width {
                        if pivot[k] != 0 {
                            v[k] = (v[k] + q - (f * pivot[k]) % q) % q;
                        }
                    }
                }
                None => {
                    let inv = inv_mod(v[start], q);
                    for x in v[start..].iter_mut() {
                        *x = *x * inv % q;
                    }
                    owner[start] = Some(rows.len());
                    rows.push(v);
                    break;
                }
            }
        }
    }
    Ok(rows.len())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes() {
        assert!(is_prime(2) && is_prime(3) && is_prime(101));
        assert!(!is_prime(0) && !is_prime(1) && !is_prime(4) && !is_prime(91));
    }

    #[test]
    fn rejects_composite_fields() {
        assert_eq!(rank_gfq(&SparseMatrix::identity(2), 4), Err(Error::BadField(4)));
    }

    #[test]
    fn rank_depends_on_characteristic() {
        // det = 3
        let m = SparseMatrix::from_dense(&[vec![1, 1], vec![-1, 2]]);
        assert_eq!(rank_gfq(&m, 3).unwrap(), 1);
        assert_eq!(rank_gfq(&m, 5).unwrap(), 2);
        assert_eq!(rank_gfq(&SparseMatrix::identity(5), 7).unwrap(), 5);
    }
}
