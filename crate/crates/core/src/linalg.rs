//! Exact integer linear algebra on small dense matrices.
//!
//! Matrices are row-major `Vec<Vec<BigInt>>`. Ranks are ranks over the
//! rationals, computed by fraction-free elimination.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub type IntMatrix = Vec<Vec<BigInt>>;

/// Determinant of a square matrix (Bareiss elimination).
pub fn det(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    debug_assert!(m.iter().all(|r| r.len() == n));
    let mut a: IntMatrix = m.to_vec();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(i, k);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[k][k] * &a[i][j] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

/// Rank over Q.
pub fn rank(m: &[Vec<BigInt>]) -> usize {
    let mut a: IntMatrix = m.iter().filter(|r| r.iter().any(|x| !x.is_zero())).cloned().collect();
    if a.is_empty() {
        return 0;
    }
    let cols = a[0].len();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..a.len()).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let pivot_row = a[r].clone();
        for row in a.iter_mut().skip(r + 1) {
            if row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                *x = &*x * &pivot_row[c] - &f * p;
            }
            reduce_content(row);
        }
        r += 1;
        if r == a.len() {
            break;
        }
    }
    r
}

fn reduce_content(row: &mut [BigInt]) {
    let g = row.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if g > BigInt::one() {
        for x in row.iter_mut() {
            *x = &*x / &g;
        }
    }
}

/// Vector orthogonal to the `n - 1` rows of an `(n-1) x n` matrix, given by
/// signed maximal minors (the generalized cross product).
pub fn cofactor_normal(rows: &[Vec<BigInt>], n: usize) -> Vec<BigInt> {
    debug_assert_eq!(rows.len() + 1, n);
    (0..n)
        .map(|j| {
            let minor: IntMatrix = rows
                .iter()
                .map(|r| {
                    r.iter()
                        .enumerate()
                        .filter(|&(c, _)| c != j)
                        .map(|(_, x)| x.clone())
                        .collect()
                })
                .collect();
            let d = det(&minor);
            if j % 2 == 0 {
                d
            } else {
                -d
            }
        })
        .collect()
}

/// gcd of all `k x k` minors of a `k x n` matrix (`k <= n`). Equals the
/// product of the Smith invariant factors.
pub fn maximal_minor_gcd(rows: &[Vec<BigInt>]) -> BigInt {
    let k = rows.len();
    if k == 0 {
        return BigInt::one();
    }
    let n = rows[0].len();
    let mut g = BigInt::zero();
    for cols in itertools::Itertools::combinations(0..n, k) {
        let sub: IntMatrix = rows
            .iter()
            .map(|r| cols.iter().map(|&c| r[c].clone()).collect())
            .collect();
        g = g.gcd(&det(&sub));
        if g.is_one() {
            break;
        }
    }
    g
}

/// gcd of a slice, always non-negative.
pub fn gcd_all(v: &[BigInt]) -> BigInt {
    v.iter().fold(BigInt::zero(), |g, x| g.gcd(x)).abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> IntMatrix {
        rows.iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect()
    }

    #[test]
    fn determinants() {
        assert_eq!(det(&m(&[&[1, 0], &[2, 3]])), BigInt::from(3));
        assert_eq!(det(&m(&[&[0, 1], &[1, 0]])), BigInt::from(-1));
        assert_eq!(
            det(&m(&[&[2, 0, 1], &[1, 3, 2], &[1, 1, 1]])),
            BigInt::from(0)
        );
        assert_eq!(det(&m(&[&[1, 2], &[2, 4]])), BigInt::zero());
    }

    #[test]
    fn ranks() {
        assert_eq!(rank(&m(&[&[1, 2], &[2, 4]])), 1);
        assert_eq!(rank(&m(&[&[0, 0], &[0, 0]])), 0);
        assert_eq!(rank(&m(&[&[1, 0, 1], &[0, 1, 1], &[1, 1, 2]])), 2);
        assert_eq!(rank(&m(&[&[0, 1], &[1, 0], &[1, 1]])), 2);
    }

    #[test]
    fn normals_and_minors() {
        let n = cofactor_normal(&m(&[&[-2, 3]]), 2);
        assert_eq!(n, vec![BigInt::from(3), BigInt::from(2)]);
        assert_eq!(maximal_minor_gcd(&m(&[&[1, 0, 0], &[0, 2, 2]])), BigInt::from(2));
        assert_eq!(maximal_minor_gcd(&m(&[&[1, 1, 0], &[0, 1, 1]])), BigInt::one());
    }
}
