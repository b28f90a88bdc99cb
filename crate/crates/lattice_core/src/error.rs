//! Error types for exact lattice computations.

use thiserror::Error;

/// Errors raised by lattice, discriminant-group, and enumeration operations.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LatticeError {
    /// The Gram matrix is not square or not symmetric.
    #[error("gram matrix must be square and symmetric")]
    NonSymmetric,

    /// A coordinate vector does not match the lattice rank.
    #[error("vector has length {found} but the lattice has rank {expected}")]
    RankMismatch { expected: usize, found: usize },

    /// The requested operation is undefined for the zero vector.
    #[error("operation is undefined for the zero vector")]
    ZeroVector,

    /// The Gram matrix has determinant zero.
    #[error("gram matrix is degenerate")]
    Degenerate,

    /// Short-vector enumeration requires a negative definite form.
    #[error("lattice is not negative definite")]
    NotNegativeDefinite,

    /// A rational vector is not in the dual lattice.
    #[error("vector is not in the dual lattice")]
    NotInDual,

    /// Divisibility was requested against an empty generator list.
    #[error("generator list is empty")]
    EmptyGenerators,

    /// The vector pairs to zero with every generator, so divisibility is undefined.
    #[error("divisibility is undefined: all pairings vanish")]
    UndefinedDivisibility,

    /// A lattice name could not be parsed.
    #[error("unknown lattice name `{0}`")]
    UnknownLattice(String),

    /// Discriminant-group enumeration was requested for a group that is too large.
    #[error("discriminant group of order {0} is too large to enumerate")]
    EnumerationTooLarge(String),
}
