//! Error type for the isometry engine.

use lattice_core::LatticeError;
use thiserror::Error;

/// Everything that can go wrong while building or combining isometries.
#[derive(Debug, Error)]
pub enum EngineError {
    /// The candidate matrix does not satisfy `MᵀGM = G`.
    #[error("matrix does not preserve the Gram form")]
    NotAnIsometry,

    /// Reflection center has zero norm.
    #[error("reflection center has zero norm")]
    ZeroNorm,

    /// Reflection center has positive norm; wall reflections act in vectors of
    /// negative norm only.
    #[error("reflection center has positive norm {0}")]
    PositiveNorm(lattice_core::Int),

    /// The reflection is not an integral operator on the lattice: some basis
    /// vector is not mapped back into the lattice.
    #[error("reflection in the given vector is not integral (basis vector {basis_index} leaves the lattice)")]
    NonIntegral { basis_index: usize },

    /// The base vector of an Eichler transvection must be isotropic.
    #[error("transvection base vector must be isotropic")]
    NotIsotropic,

    /// The translate of an Eichler transvection must be orthogonal to the base.
    #[error("transvection translate must be orthogonal to the base vector")]
    NotOrthogonal,

    /// Eichler machinery is defined on even lattices only.
    #[error("Eichler machinery requires an even lattice")]
    OddLattice,

    /// Two isometries of different lattices cannot be combined.
    #[error("isometries act on different lattices")]
    LatticeMismatch,

    /// The lattice handed to a block-specific constructor has the wrong shape.
    #[error("expected an E8-type block")]
    WrongBlockType,

    /// Eichler normalization needs the first four basis vectors to span two
    /// orthogonal unimodular hyperbolic planes split off from the rest.
    #[error("lattice does not start with two orthogonal unimodular hyperbolic planes")]
    NoUSquare,

    /// Both endpoints of a normalization must be primitive.
    #[error("vector is not primitive")]
    Imprimitive,

    /// The two vectors handed to `eichler_normalize` do not share the full
    /// invariant triple (norm, divisibility, discriminant residue), so no
    /// isometry of the required kind can exist.
    #[error("invariant mismatch between the two vectors: {}", mismatch_list(*norm, *div, *residue))]
    InvariantMismatch {
        /// Norms differ.
        norm: bool,
        /// Divisibilities differ.
        div: bool,
        /// Discriminant residues differ (only compared when the
        /// divisibilities agree).
        residue: bool,
    },

    /// Internal failure: the reduction loop exceeded its operation budget.
    /// This indicates a bug, never bad input.
    #[error("normalization exceeded its operation budget (internal error)")]
    NormalizationBudget,

    /// Internal failure: a certified post-condition did not hold. This
    /// indicates a bug, never bad input.
    #[error("certification failed: {0} (internal error)")]
    CertificationFailed(String),

    /// Errors bubbled up from the lattice layer.
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}

fn mismatch_list(norm: bool, div: bool, residue: bool) -> String {
    let mut parts = Vec::new();
    if norm {
        parts.push("norms differ");
    }
    if div {
        parts.push("divisibilities differ");
    }
    if residue {
        parts.push("discriminant residues differ");
    }
    if parts.is_empty() {
        "no mismatch recorded".to_string()
    } else {
        parts.join(", ")
    }
}
