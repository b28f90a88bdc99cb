//! The index-two sublattice `Λ̂₁ ⊂ Λ̂` in ambient coordinates.
//!
//! `Λ̂₁ = {x ∈ Λ̂ : x₁₄ + x₁₅ even}` is spanned by the six hyperbolic-plane
//! basis vectors, the eight E8(−2) basis vectors, and the pair `δ̂, Σ̂`.
//! Working in ambient `Λ̂` coordinates avoids a second coordinate system;
//! primitivity and divisibility *relative to the sublattice* are computed by
//! the helpers here and differ from their ambient counterparts exactly on the
//! exceptional pair.

use crate::classes::{delta_hat, sigma_hat};
use crate::error::ModelError;
use crate::Result;
use lattice_core::standard::lambda_hat;
use lattice_core::vector::{content, is_primitive, is_zero, veci};
use lattice_core::{GramLattice, Int};
use num_integer::Integer;
use std::sync::OnceLock;

fn ambient() -> &'static GramLattice {
    static CELL: OnceLock<GramLattice> = OnceLock::new();
    CELL.get_or_init(lambda_hat)
}

/// The 16 generators of `Λ̂₁` in ambient coordinates: the six `U` basis
/// vectors, the eight `E8(−2)` basis vectors, then `δ̂` and `Σ̂`.
pub fn lambda_hat1_generators() -> &'static [Vec<Int>] {
    static CELL: OnceLock<Vec<Vec<Int>>> = OnceLock::new();
    CELL.get_or_init(|| {
        let mut gens = Vec::with_capacity(16);
        for j in 0..14 {
            let mut v = veci(&[0; 16]);
            v[j] = Int::from(1);
            gens.push(v);
        }
        gens.push(delta_hat());
        gens.push(sigma_hat());
        gens
    })
}

/// Membership test: does `v ∈ Λ̂` lie in `Λ̂₁`?
pub fn in_lambda_hat1(v: &[Int]) -> bool {
    v.len() == 16 && (&v[14] + &v[15]).is_even()
}

/// Divisibility of `v` **relative to `Λ̂₁`**: the positive generator of the
/// pairing ideal `(v, Λ̂₁)`.
pub fn div_hat1(v: &[Int]) -> Result<Int> {
    if !in_lambda_hat1(v) {
        return Err(ModelError::NotInHat1);
    }
    Ok(ambient().divisibility_wrt(v, lambda_hat1_generators())?)
}

/// The largest `d` such that `v/d` still lies in `Λ̂₁`.
///
/// This is the ambient content when the reduced vector keeps an even
/// `ĥ`-coordinate sum, and half of it otherwise.
pub fn content1(v: &[Int]) -> Result<Int> {
    if is_zero(v) {
        return Err(ModelError::Lattice(lattice_core::LatticeError::ZeroVector));
    }
    if !in_lambda_hat1(v) {
        return Err(ModelError::NotInHat1);
    }
    let c = content(v);
    let hsum = (&v[14] + &v[15]) / &c;
    if hsum.is_even() {
        Ok(c)
    } else {
        // v ∈ Λ̂₁ forces the content to be even here.
        Ok(c / Int::from(2))
    }
}

/// Divide out [`content1`]: the primitive generator of the ray of `v`
/// **inside `Λ̂₁`**.
pub fn primitive_part1(v: &[Int]) -> Result<Vec<Int>> {
    let c = content1(v)?;
    Ok(v.iter().map(|x| x / &c).collect())
}

/// Is `v` primitive as an element of `Λ̂₁`?
///
/// Note that a vector can be imprimitive in `Λ̂` yet primitive in `Λ̂₁`
/// (e.g. `2ĥ₁ = δ̂ + Σ̂`).
pub fn is_primitive1(v: &[Int]) -> Result<bool> {
    Ok(content1(v)? == Int::from(1))
}

/// The divisibility-one criterion transported to `Λ`.
///
/// For primitive `v ∈ Λ`, decides whether the corresponding primitive ray in
/// `Λ̂₁` has divisibility 1 there, purely from the `Λ`-coordinates:
///
/// 1. the `U(2)³` part must **not** be divisible by 2,
/// 2. the `E8(−1)` part must be divisible by 2,
/// 3. the `(−2)²` part must lie in `⟨δ′, Σ′⟩` (even coordinate sum).
///
/// All three must hold for the answer `true`; the equivalence with
/// `div_hat1(twist_ray_to_hat(v)) = 1` is cross-checked by the fuzz suite.
pub fn hat_div1_predicate(v: &[Int]) -> Result<bool> {
    if is_zero(v) {
        return Err(ModelError::Lattice(lattice_core::LatticeError::ZeroVector));
    }
    if !is_primitive(v) {
        return Err(ModelError::Imprimitive);
    }
    let u_odd = v[..6].iter().any(|c| c.is_odd());
    let e8_even = v[6..14].iter().all(|c| c.is_even());
    let h_in_delta_sigma = (&v[14] + &v[15]).is_even();
    Ok(u_odd && e8_even && h_in_delta_sigma)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classes::{delta_prime, e1, e1_sup1, l2_vector, l_vector};
    use num_traits::{One, Zero};

    #[test]
    fn divisibility_relative_to_the_sublattice() {
        assert_eq!(div_hat1(&delta_hat()).unwrap(), Int::from(2));
        assert_eq!(div_hat1(&sigma_hat()).unwrap(), Int::from(2));
        assert_eq!(div_hat1(&e1()).unwrap(), Int::from(2));
        for i in -2i64..=2 {
            assert_eq!(div_hat1(&l_vector(&Int::from(i))).unwrap(), Int::one());
        }
        // 2L₀ − δ̂ pairs to 2 with everything in Λ̂₁.
        let mut v = l_vector(&Int::zero());
        for c in v.iter_mut() {
            *c *= Int::from(2);
        }
        v[14] = Int::from(-1);
        v[15] = Int::from(-1);
        assert_eq!(div_hat1(&v).unwrap(), Int::from(2));
        // ĥ₁ is not in Λ̂₁ at all.
        let mut h = veci(&[0; 16]);
        h[14] = Int::one();
        assert!(matches!(div_hat1(&h), Err(ModelError::NotInHat1)));
    }

    #[test]
    fn sublattice_content_differs_from_ambient_content() {
        // 2ĥ₁ = δ̂ + Σ̂ has ambient content 2 but is primitive in Λ̂₁.
        let mut v = veci(&[0; 16]);
        v[14] = Int::from(2);
        assert_eq!(content(&v), Int::from(2));
        assert_eq!(content1(&v).unwrap(), Int::one());
        assert!(is_primitive1(&v).unwrap());
        assert_eq!(primitive_part1(&v).unwrap(), v);

        // 2δ̂ has content1 = 2.
        let mut w = delta_hat();
        for c in w.iter_mut() {
            *c *= Int::from(2);
        }
        assert_eq!(content1(&w).unwrap(), Int::from(2));
        assert_eq!(primitive_part1(&w).unwrap(), delta_hat());
    }

    #[test]
    fn predicate_evaluates_the_three_conditions() {
        assert!(hat_div1_predicate(&l2_vector(&Int::one())).unwrap());
        // U(2)³ part divisible by 2 (it is zero) in both failures below.
        assert!(!hat_div1_predicate(&e1_sup1()).unwrap());
        assert!(!hat_div1_predicate(&delta_prime()).unwrap());
        // E8 part odd.
        let mut v = l2_vector(&Int::one());
        v[6] = Int::one();
        assert!(!hat_div1_predicate(&v).unwrap());
        // h-part outside ⟨δ′, Σ′⟩.
        let mut v = l2_vector(&Int::one());
        v[14] = Int::one();
        assert!(!hat_div1_predicate(&v).unwrap());
        // Error paths.
        assert!(hat_div1_predicate(&veci(&[0; 16])).is_err());
        let mut w = delta_prime();
        for c in w.iter_mut() {
            *c *= Int::from(2);
        }
        assert!(matches!(
            hat_div1_predicate(&w),
            Err(ModelError::Imprimitive)
        ));
    }
}
