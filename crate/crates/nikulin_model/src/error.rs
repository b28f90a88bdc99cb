//! Error type for the lattice-model crate.

use lattice_core::LatticeError;
use thiserror::Error;

/// Errors raised by the model-specific operations.
#[derive(Debug, Error)]
pub enum ModelError {
    /// The vector is not an element of `Λ̂₁` (its last two coordinates have
    /// odd sum).
    #[error("vector does not lie in the index-two sublattice (odd h-coordinate sum)")]
    NotInHat1,

    /// The operation requires a primitive vector.
    #[error("vector is not primitive")]
    Imprimitive,

    /// Conjugating the isometry through the twist produced a fractional
    /// matrix entry, so it does not act on the target lattice.
    #[error("isometry does not transport integrally through the twist")]
    NotTransportable,

    /// No named class with this name exists.
    #[error("unknown named class `{0}`")]
    UnknownClass(String),

    /// An underlying lattice operation failed.
    #[error(transparent)]
    Lattice(#[from] LatticeError),

    /// An underlying isometry-engine operation failed.
    #[error(transparent)]
    Engine(#[from] isometry_engine::EngineError),
}
