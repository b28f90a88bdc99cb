//! Wall-divisor calculus on the Nikulin-orbifold lattice `Λ` and on the
//! K3-family lattices.
//!
//! The crate answers three questions exactly, with no numerical tolerance:
//!
//! * **membership** — [`is_wall`] decides whether a class of `Λ` is a wall
//!   divisor, from the `(q, div)` table together with the `U(2)³`-projection
//!   condition at `q = −12`;
//! * **enumeration** — [`walls_in_picard`] lists every wall ray inside a
//!   negative definite Picard sublattice, by complete short-vector
//!   enumeration filtered through the membership rule (and
//!   [`k3_family_walls`] does the same for the K3 and K3-squared rules);
//! * **position** — [`kahler_side_test`] decides whether a class lies in the
//!   Kähler chamber cut out by a wall list and a reference class.
//!
//! A small exact-sampling facility ([`orthocomplement_square_scan`]) searches
//! orthogonal complements for vectors of prescribed divisibility and reports
//! their squares modulo 4; it powers the involution-obstruction suite.

pub mod error;
pub mod kahler;
pub mod ortho;
pub mod picard;
pub mod report;
pub mod wall;

pub use error::WallOracleError;
pub use kahler::kahler_side_test;
pub use ortho::{orthocomplement_basis, orthocomplement_square_scan, ScanReport};
pub use picard::PicardEmbedding;
pub use report::{WallEntry, WallReport};
pub use wall::{is_wall, k3_family_walls, k3_wall_rule, walls_in_picard, K3Kind};

/// Crate-wide result type.
pub type Result<T> = std::result::Result<T, WallOracleError>;
