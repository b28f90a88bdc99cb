//! The twist correspondence between `Λ` and `Λ̂₁`.
//!
//! Rescaling `Λ̂₁` by 2 embeds it into `Λ`: on ambient coordinates the
//! inclusion doubles the `E8` block, while the reverse embedding `Λ(…) ⊂ Λ̂₁`
//! doubles the hyperbolic planes and the exceptional pair. Both images are
//! canonical sublattices (they are characterized by divisibility conditions
//! invariant under every isometry), so rays, orbits, and isometries transport
//! faithfully in both directions. This module implements the two ray maps and
//! the two isometry transports, certifying every transported matrix.

use crate::hat1::primitive_part1;
use crate::Result;
use isometry_engine::{EngineError, Isometry};
use lattice_core::standard::{lambda, lambda_hat};
use lattice_core::vector::{is_zero, primitive_part};
use lattice_core::{GramLattice, Int};
use num_integer::Integer;
use num_traits::Zero;
use std::sync::OnceLock;

fn lambda_cached() -> &'static GramLattice {
    static CELL: OnceLock<GramLattice> = OnceLock::new();
    CELL.get_or_init(lambda)
}

fn lambda_hat_cached() -> &'static GramLattice {
    static CELL: OnceLock<GramLattice> = OnceLock::new();
    CELL.get_or_init(lambda_hat)
}

/// Diagonal of the embedding `Λ → Λ̂₁` on ambient coordinates: double the
/// hyperbolic planes and the exceptional pair, keep the E8 block.
fn t_diag(i: usize) -> i64 {
    if (6..14).contains(&i) {
        1
    } else {
        2
    }
}

fn check_rank16(v: &[Int]) -> Result<()> {
    if v.len() != 16 {
        return Err(crate::ModelError::Lattice(
            lattice_core::LatticeError::RankMismatch {
                expected: 16,
                found: v.len(),
            },
        ));
    }
    Ok(())
}

/// Send the ray of `v ∈ Λ` to the corresponding primitive ray in `Λ̂₁`
/// (ambient `Λ̂` coordinates).
///
/// The image of `v = (u | m | c₁, c₂)` is the `Λ̂₁`-primitive part of
/// `(2u | m | 2c₁, 2c₂)`; the round trip with [`twist_ray_to_lambda`] is the
/// identity on primitive vectors.
pub fn twist_ray_to_hat(v: &[Int]) -> Result<Vec<Int>> {
    if is_zero(v) {
        return Err(crate::ModelError::Lattice(
            lattice_core::LatticeError::ZeroVector,
        ));
    }
    check_rank16(v)?;
    let w: Vec<Int> = v
        .iter()
        .enumerate()
        .map(|(i, c)| c * Int::from(t_diag(i)))
        .collect();
    primitive_part1(&w)
}

/// Send the ray of `v ∈ Λ̂` (in particular of `Λ̂₁`) to the corresponding
/// primitive ray in `Λ`.
///
/// The image of `v = (u | m | c₁, c₂)` is the primitive part of
/// `(u | 2m | c₁, c₂)`.
pub fn twist_ray_to_lambda(v: &[Int]) -> Result<Vec<Int>> {
    if is_zero(v) {
        return Err(crate::ModelError::Lattice(
            lattice_core::LatticeError::ZeroVector,
        ));
    }
    check_rank16(v)?;
    let w: Vec<Int> = v
        .iter()
        .enumerate()
        .map(|(i, c)| {
            if t_diag(i) == 1 {
                c * Int::from(2)
            } else {
                c.clone()
            }
        })
        .collect();
    Ok(primitive_part(&w)?)
}

fn conjugate(
    matrix: &[Vec<Int>],
    scale_row: impl Fn(usize) -> i64,
    scale_col: impl Fn(usize) -> i64,
) -> Result<Vec<Vec<Int>>> {
    let n = matrix.len();
    let mut out = vec![vec![Int::from(0); n]; n];
    for i in 0..n {
        for j in 0..n {
            let num = &matrix[i][j] * Int::from(scale_row(i));
            let den = Int::from(scale_col(j));
            let (q, r) = num.div_rem(&den);
            if !r.is_zero() {
                return Err(crate::ModelError::NotTransportable);
            }
            out[i][j] = q;
        }
    }
    Ok(out)
}

/// Transport an isometry of `Λ` to the corresponding isometry of `Λ̂`
/// (preserving `Λ̂₁`), by conjugating through the twist embedding.
pub fn transport_isometry_to_hat(iso: &Isometry) -> Result<Isometry> {
    if iso.lattice().gram() != lambda_cached().gram() {
        return Err(crate::ModelError::Engine(EngineError::LatticeMismatch));
    }
    let m = conjugate(iso.matrix(), t_diag, t_diag)?;
    Ok(Isometry::new(lambda_hat_cached(), m)?)
}

/// Transport an isometry of `Λ̂` that preserves `Λ̂₁` to an isometry of `Λ`.
///
/// Fails with [`crate::ModelError::NotTransportable`] when the conjugated
/// matrix is fractional (the isometry does not descend through the twist).
pub fn transport_isometry_to_lambda(iso: &Isometry) -> Result<Isometry> {
    if iso.lattice().gram() != lambda_hat_cached().gram() {
        return Err(crate::ModelError::Engine(EngineError::LatticeMismatch));
    }
    // Inverse conjugation: rows divide, columns multiply.
    let n = iso.matrix().len();
    let mut out = vec![vec![Int::from(0); n]; n];
    for (i, row) in iso.matrix().iter().enumerate() {
        for (j, entry) in row.iter().enumerate() {
            let num = entry * Int::from(t_diag(j));
            let den = Int::from(t_diag(i));
            let (q, r) = num.div_rem(&den);
            if !r.is_zero() {
                return Err(crate::ModelError::NotTransportable);
            }
            out[i][j] = q;
        }
    }
    Ok(Isometry::new(lambda_cached(), out)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classes::{
        delta_hat, delta_prime, e1, e1_sup1, e2, e2_sup1, h1, l2_vector, l_vector, sigma_hat,
    };
    use isometry_engine::reflection;
    use lattice_core::vector::veci;

    #[test]
    fn named_rays_correspond() {
        assert_eq!(twist_ray_to_hat(&delta_prime()).unwrap(), delta_hat());
        assert_eq!(
            twist_ray_to_hat(&l2_vector(&Int::from(1))).unwrap(),
            l_vector(&Int::from(1))
        );
        assert_eq!(twist_ray_to_hat(&e1_sup1()).unwrap(), e1());
        assert_eq!(twist_ray_to_lambda(&delta_hat()).unwrap(), delta_prime());
    }

    #[test]
    fn published_case_representatives_correspond() {
        // 2L_{i+1} + e₂ − δ̂ ↦ 2L⁽²⁾_{i+1} + 2e₂⁽¹⁾ − δ′ at i = 1.
        let mut v = l_vector(&Int::from(2));
        for c in v.iter_mut() {
            *c *= Int::from(2);
        }
        let e2v = e2();
        let dh = delta_hat();
        for j in 0..16 {
            v[j] = &v[j] + &e2v[j] - &dh[j];
        }
        let mut expect = l2_vector(&Int::from(2));
        for c in expect.iter_mut() {
            *c *= Int::from(2);
        }
        let e2s = e2_sup1();
        let dp = delta_prime();
        for j in 0..16 {
            expect[j] = &expect[j] + Int::from(2) * &e2s[j] - &dp[j];
        }
        assert_eq!(twist_ray_to_lambda(&v).unwrap(), expect);

        // 2L_i − δ̂ − Σ̂ ↦ L⁽²⁾_i − h₁ at i = 2.
        let mut v = l_vector(&Int::from(2));
        for c in v.iter_mut() {
            *c *= Int::from(2);
        }
        let sh = sigma_hat();
        for j in 0..16 {
            v[j] = &v[j] - &dh[j] - &sh[j];
        }
        let mut expect = l2_vector(&Int::from(2));
        let h = h1();
        for j in 0..16 {
            expect[j] = &expect[j] - &h[j];
        }
        assert_eq!(twist_ray_to_lambda(&v).unwrap(), expect);
    }

    #[test]
    fn round_trip_is_the_identity_on_primitive_vectors() {
        let samples = [
            veci(&[1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0]),
            veci(&[3, -1, 2, 0, 5, 1, 4, 2, 2, 0, 0, 1, 0, 3, 2, -2]),
            delta_prime(),
            e1_sup1(),
            h1(),
        ];
        for v in &samples {
            let hat = twist_ray_to_hat(v).unwrap();
            assert_eq!(&twist_ray_to_lambda(&hat).unwrap(), v);
        }
    }

    #[test]
    fn reflections_transport_and_return() {
        let l = lambda_cached();
        for center in [delta_prime(), h1()] {
            let r = reflection(l, &center).unwrap();
            let r_hat = transport_isometry_to_hat(&r).unwrap();
            let back = transport_isometry_to_lambda(&r_hat).unwrap();
            assert_eq!(back.matrix(), r.matrix());
        }
    }
}
