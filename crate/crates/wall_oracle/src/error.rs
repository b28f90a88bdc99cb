//! Error type for the wall oracle.

use lattice_core::{Int, LatticeError};
use thiserror::Error;

/// Everything that can go wrong while enumerating or testing walls.
#[derive(Debug, Error)]
pub enum WallOracleError {
    /// The Picard sublattice is not negative definite, so complete
    /// short-vector enumeration is impossible; test classes pointwise
    /// instead.
    #[error("the Picard form is not negative definite; enumerate pointwise instead")]
    NotNegativeDefinite,

    /// The proposed basis is linearly dependent.
    #[error("the Picard basis is linearly dependent")]
    DependentBasis,

    /// The basis spans a sublattice that is not primitively embedded: some
    /// rational combination of the basis is a lattice vector outside the
    /// span over the integers, so enumeration inside the span would be
    /// incomplete.
    #[error("the Picard basis does not span a primitively embedded sublattice")]
    NotSaturated,

    /// The operation requires a specific ambient lattice.
    #[error("expected ambient lattice {expected}, found {found}")]
    AmbientMismatch { expected: String, found: String },

    /// The reference class pairs to zero with a wall: it does not determine
    /// a side.
    #[error("the reference class lies on a wall (zero pairing with {0:?})")]
    OmegaOnWall(Vec<Int>),

    /// The reference class must have positive square.
    #[error("the reference class has non-positive square {0}")]
    OmegaNotPositive(Int),

    /// Propagated lattice arithmetic failure.
    #[error(transparent)]
    Lattice(#[from] LatticeError),

    /// Propagated classification failure.
    #[error(transparent)]
    Classifier(#[from] orbit_classifier::ClassifierError),
}
