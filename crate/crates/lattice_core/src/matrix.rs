//! Dense exact matrix helpers over integers and rationals.

use crate::error::LatticeError;
use crate::{Int, Rat, Result};
use num_traits::{One, Signed, Zero};

/// Identity matrix of size `n`.
pub fn identity(n: usize) -> Vec<Vec<Int>> {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { Int::one() } else { Int::zero() })
                .collect()
        })
        .collect()
}

/// Matrix product `a·b`. Panics on shape mismatch.
pub fn mat_mul(a: &[Vec<Int>], b: &[Vec<Int>]) -> Vec<Vec<Int>> {
    let (n, k) = (a.len(), b.len());
    assert!(a.iter().all(|row| row.len() == k), "matrix shape mismatch");
    let m = if k == 0 { 0 } else { b[0].len() };
    let mut out = vec![vec![Int::zero(); m]; n];
    for i in 0..n {
        for (l, b_row) in b.iter().enumerate() {
            if a[i][l].is_zero() {
                continue;
            }
            for j in 0..m {
                out[i][j] += &a[i][l] * &b_row[j];
            }
        }
    }
    out
}

/// Matrix–vector product `m·x`. Panics on shape mismatch.
pub fn mat_vec(m: &[Vec<Int>], x: &[Int]) -> Vec<Int> {
    m.iter()
        .map(|row| {
            assert_eq!(row.len(), x.len(), "matrix shape mismatch");
            row.iter().zip(x).map(|(a, b)| a * b).sum()
        })
        .collect()
}

/// Transposed copy.
pub fn transpose(m: &[Vec<Int>]) -> Vec<Vec<Int>> {
    let n = m.len();
    let k = if n == 0 { 0 } else { m[0].len() };
    (0..k).map(|j| (0..n).map(|i| m[i][j].clone()).collect()).collect()
}

/// Exact determinant by fraction-free Bareiss elimination.
pub fn det_bareiss(m: &[Vec<Int>]) -> Int {
    let n = m.len();
    if n == 0 {
        return Int::one();
    }
    let mut a: Vec<Vec<Int>> = m.to_vec();
    let mut sign = Int::one();
    let mut prev = Int::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    sign = -sign;
                }
                None => return Int::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = num / &prev;
            }
            a[i][k] = Int::zero();
        }
        prev = a[k][k].clone();
    }
    sign * a[n - 1][n - 1].clone()
}

/// Exact inverse over the rationals by Gauss–Jordan elimination.
///
/// Errors with [`LatticeError::Degenerate`] when the matrix is singular.
pub fn rational_inverse(m: &[Vec<Int>]) -> Result<Vec<Vec<Rat>>> {
    let n = m.len();
    let mut a: Vec<Vec<Rat>> = m
        .iter()
        .map(|row| {
            assert_eq!(row.len(), n, "matrix shape mismatch");
            row.iter().map(|c| Rat::from_integer(c.clone())).collect()
        })
        .collect();
    let mut inv: Vec<Vec<Rat>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        Rat::one()
                    } else {
                        Rat::zero()
                    }
                })
                .collect()
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n)
            .find(|&i| !a[i][col].is_zero())
            .ok_or(LatticeError::Degenerate)?;
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let p = a[col][col].clone();
        for j in 0..n {
            a[col][j] /= p.clone();
            inv[col][j] /= p.clone();
        }
        for i in 0..n {
            if i == col || a[i][col].is_zero() {
                continue;
            }
            let f = a[i][col].clone();
            for j in 0..n {
                let t = &f * &a[col][j];
                a[i][j] -= t;
                let t = &f * &inv[col][j];
                inv[i][j] -= t;
            }
        }
    }
    Ok(inv)
}

/// Rational matrix–vector product.
pub fn rat_mat_vec(m: &[Vec<Rat>], x: &[Rat]) -> Vec<Rat> {
    m.iter()
        .map(|row| {
            assert_eq!(row.len(), x.len(), "matrix shape mismatch");
            row.iter().zip(x).map(|(a, b)| a * b).sum()
        })
        .collect()
}

/// Absolute values of the entries, useful for bounds in tests.
pub fn max_abs_entry(m: &[Vec<Int>]) -> Int {
    m.iter()
        .flatten()
        .map(|c| c.abs())
        .max()
        .unwrap_or_else(Int::zero)
}

/// Nearest-integer quotient (ties round away from zero), so that
/// `|num - q·den| ≤ |den|/2`. Panics when `den` is zero.
pub fn rounded_div(num: &Int, den: &Int) -> Int {
    use num_integer::Integer;
    let (mut q, r) = num.div_rem(den);
    let two_r = r.abs() * Int::from(2);
    if two_r > den.abs() {
        if (num.sign() == den.sign()) || r.is_zero() {
            q += 1;
        } else {
            q -= 1;
        }
    }
    q
}

/// Rank of an integer matrix, computed exactly over the rationals.
pub fn rational_rank(m: &[Vec<Int>]) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut a: Vec<Vec<Rat>> = m
        .iter()
        .map(|row| {
            assert_eq!(row.len(), cols, "matrix shape mismatch");
            row.iter().map(|c| Rat::from_integer(c.clone())).collect()
        })
        .collect();
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..rows).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        a.swap(rank, pivot);
        let p = a[rank][col].clone();
        for j in col..cols {
            a[rank][j] /= p.clone();
        }
        for i in 0..rows {
            if i == rank || a[i][col].is_zero() {
                continue;
            }
            let f = a[i][col].clone();
            for j in col..cols {
                let t = &f * &a[rank][j];
                a[i][j] -= t;
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}
