//! Exact rational vectors in lattice coordinates (dual vectors, lifts).

use crate::gram::GramLattice;
use crate::{Int, Rat, Result};
use num_traits::Zero;

/// Promote an integer vector to rationals.
pub fn to_rat_vec(x: &[Int]) -> Vec<Rat> {
    x.iter().map(|c| Rat::from_integer(c.clone())).collect()
}

/// Component-wise sum. Panics on length mismatch.
pub fn add_rat(x: &[Rat], y: &[Rat]) -> Vec<Rat> {
    assert_eq!(x.len(), y.len(), "vector length mismatch");
    x.iter().zip(y).map(|(a, b)| a + b).collect()
}

/// Component-wise difference. Panics on length mismatch.
pub fn sub_rat(x: &[Rat], y: &[Rat]) -> Vec<Rat> {
    assert_eq!(x.len(), y.len(), "vector length mismatch");
    x.iter().zip(y).map(|(a, b)| a - b).collect()
}

/// Scalar multiple `k·x`.
pub fn scaled_rat(x: &[Rat], k: &Rat) -> Vec<Rat> {
    x.iter().map(|c| c * k).collect()
}

/// Bilinear pairing of rational vectors with respect to the lattice Gram matrix.
pub fn pairing_rat(l: &GramLattice, x: &[Rat], y: &[Rat]) -> Result<Rat> {
    if x.len() != l.rank() || y.len() != l.rank() {
        return Err(crate::LatticeError::RankMismatch {
            expected: l.rank(),
            found: if x.len() != l.rank() { x.len() } else { y.len() },
        });
    }
    let mut total = Rat::zero();
    for (i, row) in l.gram().iter().enumerate() {
        if x[i].is_zero() {
            continue;
        }
        let mut inner = Rat::zero();
        for (j, g) in row.iter().enumerate() {
            if !y[j].is_zero() && !g.is_zero() {
                inner += Rat::from_integer(g.clone()) * &y[j];
            }
        }
        total += &x[i] * inner;
    }
    Ok(total)
}

/// Quadratic value `q(x)` of a rational vector.
pub fn norm_rat(l: &GramLattice, x: &[Rat]) -> Result<Rat> {
    pairing_rat(l, x, x)
}

/// True when every coordinate is an integer.
pub fn is_integral(x: &[Rat]) -> bool {
    x.iter().all(|c| c.is_integer())
}

/// Checked conversion to an integer vector.
pub fn to_int_vec(x: &[Rat]) -> Option<Vec<Int>> {
    if !is_integral(x) {
        return None;
    }
    Some(x.iter().map(|c| c.to_integer()).collect())
}

/// Component-wise fractional part, each coordinate reduced into `[0, 1)`.
pub fn fractional_part(x: &[Rat]) -> Vec<Rat> {
    x.iter().map(|c| c - Rat::from_integer(c.floor().to_integer())).collect()
}
