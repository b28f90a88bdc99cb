//! Eichler transvections of even lattices.

use crate::error::EngineError;
use crate::isometry::Isometry;
use crate::Result;
use lattice_core::{GramLattice, Int};
use num_integer::Integer;
use num_traits::Zero;

/// The Eichler transvection `t(e, a)` of an even lattice: for an isotropic
/// vector `e` and a vector `a` orthogonal to `e`,
///
/// ```text
/// t(e, a): x ↦ x + (x, e)·a − [(x, a) + ½(a, a)(x, e)]·e .
/// ```
///
/// This is a unipotent isometry fixing `e` and acting trivially on the
/// discriminant group. Errors:
///
/// * [`EngineError::OddLattice`] when the lattice is not even,
/// * [`EngineError::NotIsotropic`] when `(e, e) ≠ 0`,
/// * [`EngineError::NotOrthogonal`] when `(e, a) ≠ 0`.
pub fn eichler_transvection(lattice: &GramLattice, e: &[Int], a: &[Int]) -> Result<Isometry> {
    if !lattice.is_even() {
        return Err(EngineError::OddLattice);
    }
    if !lattice.norm(e)?.is_zero() {
        return Err(EngineError::NotIsotropic);
    }
    if !lattice.pairing(e, a)?.is_zero() {
        return Err(EngineError::NotOrthogonal);
    }
    let n = lattice.rank();
    let qa = lattice.norm(a)?;
    let (half_qa, rem) = qa.div_rem(&Int::from(2));
    debug_assert!(rem.is_zero(), "even lattice norms are even");
    let pair_e = lattice.basis_pairings(e)?;
    let pair_a = lattice.basis_pairings(a)?;
    // Column j is the image of the j-th basis vector.
    let mut matrix = vec![vec![Int::zero(); n]; n];
    for j in 0..n {
        let k = &pair_a[j] + &half_qa * &pair_e[j];
        for i in 0..n {
            let mut entry = if i == j { Int::from(1) } else { Int::zero() };
            entry += &pair_e[j] * &a[i];
            entry -= &k * &e[i];
            matrix[i][j] = entry;
        }
    }
    Isometry::new(lattice, matrix)
}
