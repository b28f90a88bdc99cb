//! Error type for the classifier.

use lattice_core::{Int, LatticeError};
use thiserror::Error;

/// Errors raised during orbit classification.
#[derive(Debug, Error)]
pub enum ClassifierError {
    /// Classification is defined on primitive vectors only.
    #[error("vector is not primitive in the ambient lattice")]
    Imprimitive,

    /// The invariant combination cannot occur for any primitive vector.
    /// This is a bug sentinel: the dispatch is proven exhaustive, so seeing
    /// this error means an upstream computation is wrong.
    #[error("impossible invariant combination (q = {q}, div = {div}): {detail}")]
    InfeasibleInvariants {
        /// Norm of the offending vector.
        q: Int,
        /// Divisibility of the offending vector.
        div: Int,
        /// Which arithmetic constraint was violated.
        detail: String,
    },

    /// The direct condition-table path and the twist path disagreed.
    /// Bug sentinel, like [`Self::InfeasibleInvariants`].
    #[error("classification paths disagree: {0}")]
    InternalMismatch(String),

    /// Reflection-monodromy status is defined for negative-norm vectors.
    #[error("norm {0} is not negative")]
    NormNotNegative(Int),

    /// An underlying lattice operation failed.
    #[error(transparent)]
    Lattice(#[from] LatticeError),

    /// An underlying model operation failed.
    #[error(transparent)]
    Model(#[from] nikulin_model::ModelError),

    /// An underlying isometry-engine operation failed.
    #[error(transparent)]
    Engine(#[from] isometry_engine::EngineError),
}
