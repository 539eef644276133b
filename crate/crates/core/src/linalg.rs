//! Small dense exact linear algebra over integers and rationals.

use num_rational::Rational64;
use num_traits::{One, Zero};

/// Row-major `n x n` integer product `a * b`.
pub fn mat_mul(n: usize, a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0; n * n];
    for i in 0..n {
        for k in 0..n {
            let aik = a[i * n + k];
            if aik == 0 {
                continue;
            }
            for j in 0..n {
                out[i * n + j] += aik * b[k * n + j];
            }
        }
    }
    out
}

/// `a * v`.
pub fn mat_vec(n: usize, a: &[i64], v: &[i64]) -> Vec<i64> {
    (0..n)
        .map(|i| (0..n).map(|j| a[i * n + j] * v[j]).sum())
        .collect()
}

/// `a^T * v`.
pub fn mat_t_vec(n: usize, a: &[i64], v: &[i64]) -> Vec<i64> {
    (0..n)
        .map(|j| (0..n).map(|i| a[i * n + j] * v[i]).sum())
        .collect()
}

pub fn identity(n: usize) -> Vec<i64> {
    let mut m = vec![0; n * n];
    for i in 0..n {
        m[i * n + i] = 1;
    }
    m
}

/// Inverse of a row-major rational matrix, or `None` if singular.
pub fn inverse(n: usize, m: &[Rational64]) -> Option<Vec<Rational64>> {
    let mut a = m.to_vec();
    let mut inv: Vec<Rational64> = (0..n * n)
        .map(|k| {
            if k / n == k % n {
                Rational64::one()
            } else {
                Rational64::zero()
            }
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r * n + col].is_zero())?;
        if pivot != col {
            for j in 0..n {
                a.swap(pivot * n + j, col * n + j);
                inv.swap(pivot * n + j, col * n + j);
            }
        }
        let p = a[col * n + col];
        for j in 0..n {
            a[col * n + j] /= p;
            inv[col * n + j] /= p;
        }
        for r in 0..n {
            if r == col {
                continue;
            }
            let f = a[r * n + col];
            if f.is_zero() {
                continue;
            }
            for j in 0..n {
                let (x, y) = (a[col * n + j], inv[col * n + j]);
                a[r * n + j] -= f * x;
                inv[r * n + j] -= f * y;
            }
        }
    }
    Some(inv)
}

/// Rank of a row-major `rows x cols` integer matrix, by exact elimination.
pub fn rank(rows: usize, cols: usize, m: &[i64]) -> usize {
    let mut a: Vec<Rational64> = m.iter().map(|&x| Rational64::from_integer(x)).collect();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !a[i * cols + c].is_zero()) else {
            continue;
        };
        for j in 0..cols {
            a.swap(p * cols + j, r * cols + j);
        }
        let pv = a[r * cols + c];
        for i in r + 1..rows {
            let f = a[i * cols + c] / pv;
            if f.is_zero() {
                continue;
            }
            for j in c..cols {
                let x = a[r * cols + j];
                a[i * cols + j] -= f * x;
            }
        }
        r += 1;
        if r == rows {
            break;
        }
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: &[i64]) -> Vec<Rational64> {
        v.iter().map(|&x| Rational64::from_integer(x)).collect()
    }

    #[test]
    fn inverse_round_trip() {
        let m = [2, -1, 0, -1, 2, -1, 0, -1, 2];
        let inv = inverse(3, &q(&m)).unwrap();
        let mut prod = vec![Rational64::zero(); 9];
        for i in 0..3 {
            for j in 0..3 {
                for k in 0..3 {
                    prod[i * 3 + j] += Rational64::from_integer(m[i * 3 + k]) * inv[k * 3 + j];
                }
            }
        }
        assert_eq!(prod, q(&identity(3)));
        assert_eq!(inv[0], Rational64::new(3, 4));
    }

    #[test]
    fn singular_has_no_inverse() {
        assert!(inverse(2, &q(&[1, 2, 2, 4])).is_none());
    }

    #[test]
    fn rank_counts_independent_rows() {
        assert_eq!(rank(3, 3, &[1, 2, 3, 2, 4, 6, 0, 1, 1]), 2);
        assert_eq!(rank(2, 2, &[0, 0, 0, 0]), 0);
        assert_eq!(rank(3, 3, &identity(3)), 3);
    }
}
