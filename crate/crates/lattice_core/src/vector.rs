//! Coordinate-vector helpers over arbitrary-precision integers.
//!
//! Vectors are plain `Vec<Int>` in the defining basis of a [`crate::GramLattice`].
//! Length mismatches between two vectors are programmer errors and panic; use
//! the lattice methods for rank-checked operations against a Gram matrix.

use crate::error::LatticeError;
use crate::{Int, Result};
use num_integer::Integer;
use num_traits::{Signed, Zero};
use std::cmp::Ordering;

/// Convert machine integers into a coordinate vector.
pub fn veci(coords: &[i64]) -> Vec<Int> {
    coords.iter().map(|&c| Int::from(c)).collect()
}

/// The zero vector of length `n`.
pub fn zero(n: usize) -> Vec<Int> {
    vec![Int::zero(); n]
}

/// True when every coordinate vanishes.
pub fn is_zero(x: &[Int]) -> bool {
    x.iter().all(|c| c.is_zero())
}

/// Content of the vector: the gcd of the absolute values of its coordinates.
///
/// The content of the zero vector is zero.
pub fn content(x: &[Int]) -> Int {
    x.iter().fold(Int::zero(), |acc, c| acc.gcd(c))
}

/// True when the coordinates are coprime (content one).
pub fn is_primitive(x: &[Int]) -> bool {
    content(x) == Int::from(1)
}

/// Divide the vector by its content.
///
/// Errors with [`LatticeError::ZeroVector`] on the zero vector.
pub fn primitive_part(x: &[Int]) -> Result<Vec<Int>> {
    let c = content(x);
    if c.is_zero() {
        return Err(LatticeError::ZeroVector);
    }
    Ok(x.iter().map(|v| v / &c).collect())
}

/// Negated copy of the vector.
pub fn neg(x: &[Int]) -> Vec<Int> {
    x.iter().map(|c| -c).collect()
}

/// Component-wise sum. Panics on length mismatch.
pub fn add(x: &[Int], y: &[Int]) -> Vec<Int> {
    assert_eq!(x.len(), y.len(), "vector length mismatch");
    x.iter().zip(y).map(|(a, b)| a + b).collect()
}

/// Component-wise difference. Panics on length mismatch.
pub fn sub(x: &[Int], y: &[Int]) -> Vec<Int> {
    assert_eq!(x.len(), y.len(), "vector length mismatch");
    x.iter().zip(y).map(|(a, b)| a - b).collect()
}

/// Scalar multiple `k·x`.
pub fn scaled(x: &[Int], k: &Int) -> Vec<Int> {
    x.iter().map(|c| c * k).collect()
}

/// In-place `x += k·y`. Panics on length mismatch.
pub fn axpy(x: &mut [Int], k: &Int, y: &[Int]) {
    assert_eq!(x.len(), y.len(), "vector length mismatch");
    for (a, b) in x.iter_mut().zip(y) {
        *a += k * b;
    }
}

/// Lexicographic comparison by coordinates.
pub fn lex_cmp(x: &[Int], y: &[Int]) -> Ordering {
    for (a, b) in x.iter().zip(y) {
        match a.cmp(b) {
            Ordering::Equal => continue,
            other => return other,
        }
    }
    x.len().cmp(&y.len())
}

/// Canonical representative of the ray `{x, −x}`: the sign is flipped so that
/// the first nonzero coordinate is positive. The zero vector is returned as is.
pub fn canonical_ray(x: &[Int]) -> Vec<Int> {
    for c in x {
        if c.is_positive() {
            return x.to_vec();
        }
        if c.is_negative() {
            return neg(x);
        }
    }
    x.to_vec()
}

/// Checked conversion to machine integers (for serialization).
pub fn to_i64_checked(x: &[Int]) -> Option<Vec<i64>> {
    x.iter().map(|c| i64::try_from(c).ok()).collect()
}
