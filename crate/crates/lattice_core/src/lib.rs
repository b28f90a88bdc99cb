//! Exact-arithmetic integer lattices presented by Gram matrices.
//!
//! A lattice here is a free abelian group of finite rank together with an
//! integer-valued symmetric bilinear form, recorded as the Gram matrix of a
//! fixed basis. Every operation in this crate is exact: coordinates are
//! arbitrary-precision integers, dual-lattice and discriminant-group
//! computations use arbitrary-precision rationals, and no floating point is
//! involved anywhere.
//!
//! The main pieces:
//!
//! * [`GramLattice`] — the lattice itself: pairings, norms, determinants,
//!   divisibility, direct sums and rescalings.
//! * [`DiscriminantGroup`] — the finite quotient `L∨/L` with exact residue
//!   arithmetic and the induced quadratic form modulo `2Z`.
//! * [`enumerate::short_vectors`] — complete short-vector enumeration in
//!   negative definite lattices (Fincke–Pohst over exact rationals).
//! * [`standard`] — constructors and a name parser for the standard lattices
//!   used throughout the workspace (`U`, `U(2)`, `E8(-1)`, `E8(-2)`, the
//!   rank-16 Nikulin lattices, and the K3-family lattices).

pub mod disc;
pub mod enumerate;
pub mod error;
pub mod gram;
pub mod matrix;
pub mod rational;
pub mod snf;
pub mod standard;
pub mod vector;

pub use disc::{DiscElement, DiscriminantGroup};
pub use error::LatticeError;
pub use gram::GramLattice;

/// Arbitrary-precision integer used for all lattice coordinates and values.
pub type Int = num_bigint::BigInt;

/// Arbitrary-precision rational used for dual vectors and definite-form pivots.
pub type Rat = num_rational::BigRational;

/// Crate-wide result type.
pub type Result<T> = std::result::Result<T, LatticeError>;
