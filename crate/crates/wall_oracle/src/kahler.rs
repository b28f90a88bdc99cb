//! Deciding on which side of the walls a class sits.

use crate::error::WallOracleError;
use crate::report::WallReport;
use crate::Result;
use lattice_core::{GramLattice, Int};
use num_traits::{Signed, Zero};

/// Kähler-chamber side test.
///
/// `omega` fixes the chamber: it must have positive square and nonzero
/// pairing with every wall (a zero pairing is an error — `omega` does not
/// then determine a side). Each wall `D` is oriented to `D⁺` by
/// `(D⁺, ω) > 0`, and the test returns `true` exactly when `alpha` has
/// positive square, pairs positively with `omega` (same positive-cone
/// component), and pairs strictly positively with every oriented wall.
pub fn kahler_side_test(
    lattice: &GramLattice,
    alpha: &[Int],
    omega: &[Int],
    walls: &WallReport,
) -> Result<bool> {
    let q_omega = lattice.norm(omega)?;
    if !q_omega.is_positive() {
        return Err(WallOracleError::OmegaNotPositive(q_omega));
    }
    // Orient every wall before judging alpha, so an ill-posed omega is
    // reported even when alpha already fails an earlier check.
    let mut oriented: Vec<Vec<Int>> = Vec::with_capacity(walls.walls.len());
    for w in &walls.walls {
        let s = lattice.pairing(&w.coords, omega)?;
        if s.is_zero() {
            return Err(WallOracleError::OmegaOnWall(w.coords.clone()));
        }
        if s.is_positive() {
            oriented.push(w.coords.clone());
        } else {
            oriented.push(lattice_core::vector::neg(&w.coords));
        }
    }
    if !lattice.norm(alpha)?.is_positive() {
        return Ok(false);
    }
    if !lattice.pairing(alpha, omega)?.is_positive() {
        return Ok(false);
    }
    for d in &oriented {
        if !lattice.pairing(alpha, d)?.is_positive() {
            return Ok(false);
        }
    }
    Ok(true)
}
