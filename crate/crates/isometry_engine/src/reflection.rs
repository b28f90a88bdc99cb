//! Reflections in vectors of negative norm.

use crate::error::EngineError;
use crate::isometry::Isometry;
use crate::Result;
use lattice_core::rational::to_int_vec;
use lattice_core::standard::e8;
use lattice_core::{GramLattice, Int, Rat};
use num_traits::{Signed, Zero};

/// The reflection `R_x(λ) = λ − 2(λ,x)/(x,x) · x` in a vector `x` of negative
/// norm, certified as an integral isometry of `lattice`.
///
/// The integrality check is exact and per basis vector: the image of every
/// basis vector must land back in the lattice. Errors:
///
/// * [`EngineError::ZeroNorm`] / [`EngineError::PositiveNorm`] when the norm
///   of `x` is not negative,
/// * [`EngineError::NonIntegral`] naming the first basis vector whose image
///   leaves the lattice.
pub fn reflection(lattice: &GramLattice, x: &[Int]) -> Result<Isometry> {
    let q = lattice.norm(x)?;
    if q.is_zero() {
        return Err(EngineError::ZeroNorm);
    }
    if q.is_positive() {
        return Err(EngineError::PositiveNorm(q));
    }
    let n = lattice.rank();
    let pairings = lattice.basis_pairings(x)?;
    let mut columns: Vec<Vec<Int>> = Vec::with_capacity(n);
    for j in 0..n {
        // Column j is e_j − (2(e_j, x)/q)·x, built exactly over the rationals.
        let coeff = Rat::new(Int::from(2) * &pairings[j], q.clone());
        let col: Vec<Rat> = (0..n)
            .map(|i| {
                let base = if i == j { Rat::from_integer(Int::from(1)) } else { Rat::zero() };
                base - &coeff * Rat::from_integer(x[i].clone())
            })
            .collect();
        let col = to_int_vec(&col).ok_or(EngineError::NonIntegral { basis_index: j })?;
        columns.push(col);
    }
    let matrix: Vec<Vec<Int>> = (0..n)
        .map(|i| (0..n).map(|j| columns[j][i].clone()).collect())
        .collect();
    Isometry::new(lattice, matrix)
}

/// The eight reflections in the simple-root basis vectors of an `E8(-1)` or
/// `E8(-2)` block, in basis order.
///
/// Errors with [`EngineError::WrongBlockType`] for any other lattice.
pub fn e8_simple_root_reflections(lattice: &GramLattice) -> Result<Vec<Isometry>> {
    if lattice.gram() != e8(-1).gram() && lattice.gram() != e8(-2).gram() {
        return Err(EngineError::WrongBlockType);
    }
    (0..8)
        .map(|k| {
            let mut x = vec![Int::zero(); 8];
            x[k] = Int::from(1);
            reflection(lattice, &x)
        })
        .collect()
}
