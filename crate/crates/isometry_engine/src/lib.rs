//! Exact isometries of integer quadratic lattices.
//!
//! Everything here is certified arithmetic: an [`Isometry`] can only be
//! constructed from a matrix that provably preserves the Gram form, and the
//! higher-level constructors (reflections, Eichler transvections, the Eichler
//! normalization that maps a vector to a canonical representative of its
//! orbit) all route through that single checked constructor.
//!
//! The main entry points are:
//!
//! * [`Isometry`] — a Gram-preserving integer matrix acting on column vectors.
//! * [`reflection`] — the reflection in a vector of negative norm, with an
//!   exact per-basis-vector integrality check.
//! * [`eichler_transvection`] — the unipotent isometry `t(e, a)` attached to an
//!   isotropic vector `e` and a vector `a ⊥ e` of an even lattice.
//! * [`eichler_normalize`] — given two primitive vectors with equal norm,
//!   divisibility, and discriminant residue in a lattice with two orthogonal
//!   unimodular hyperbolic planes up front, produce a certified isometry
//!   mapping one to the other as a product of transvections (the Eichler
//!   criterion made effective).
//! * [`induced_disc_action`] / [`disc_action_is_trivial`] — the action of an
//!   isometry on the discriminant group.
//! * [`orbits`] — deterministic orbit partitions of a finite set under a list
//!   of permutations.

pub mod disc_action;
pub mod error;
pub mod isometry;
pub mod normalize;
pub mod orbits;
pub mod reflection;
pub mod transvection;

pub use disc_action::{disc_action_is_trivial, induced_disc_action};
pub use error::EngineError;
pub use isometry::Isometry;
pub use normalize::{eichler_normalize, EichlerNormalization};
pub use orbits::{orbit_sizes, orbits};
pub use reflection::{e8_simple_root_reflections, reflection};
pub use transvection::eichler_transvection;

/// Crate-local result alias.
pub type Result<T> = std::result::Result<T, EngineError>;
