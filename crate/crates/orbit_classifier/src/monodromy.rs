//! Reflection-monodromy status of negative classes in `Λ`.

use crate::error::ClassifierError;
use crate::lambda::lambda_cached;
use crate::Result;
use isometry_engine::{reflection, EngineError};
use lattice_core::vector::{is_zero, primitive_part};
use lattice_core::Int;
use num_traits::Signed;

/// Whether the reflection in a negative class is a known monodromy operator.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReflectionMonodromy {
    /// `(q, div) ∈ {(−2, 2), (−4, 2)}`: the reflection is integral and is a
    /// monodromy operator.
    Known,
    /// The reflection is an integral isometry of `Λ`, but membership in the
    /// monodromy group is not established by the classification implemented
    /// here.
    IntegralButUnknown,
    /// The reflection does not even preserve `Λ`.
    NonIntegral,
}

/// Decide the monodromy status of the reflection in (the primitive part of)
/// a vector of negative norm.
///
/// Errors with [`ClassifierError::NormNotNegative`] when the primitive part
/// has `q ≥ 0`; reflections in such classes are outside the scope of the
/// wall calculus.
pub fn known_monodromy_reflection(v: &[Int]) -> Result<ReflectionMonodromy> {
    if is_zero(v) {
        return Err(ClassifierError::Lattice(
            lattice_core::LatticeError::ZeroVector,
        ));
    }
    let l = lambda_cached();
    let p = primitive_part(v)?;
    let q = l.norm(&p)?;
    if !q.is_negative() {
        return Err(ClassifierError::NormNotNegative(q));
    }
    let div = l.divisibility(&p)?;
    let two = Int::from(2);
    if div == two && (q == Int::from(-2) || q == Int::from(-4)) {
        return Ok(ReflectionMonodromy::Known);
    }
    match reflection(l, &p) {
        Ok(_) => Ok(ReflectionMonodromy::IntegralButUnknown),
        Err(EngineError::NonIntegral { .. }) => Ok(ReflectionMonodromy::NonIntegral),
        Err(e) => Err(ClassifierError::Engine(e)),
    }
}
