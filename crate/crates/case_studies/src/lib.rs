//! Verification suites for the published wall-divisor case studies.
//!
//! Each suite rebuilds one worked example from first principles — fixed
//! Picard sublattice, named divisor classes, complete wall enumeration — and
//! records every comparison as a [`CheckResult`].  A suite passes exactly
//! when every check passes; any failure is a regression in the underlying
//! lattice machinery, never an expected outcome.
//!
//! The five suites:
//!
//! * [`verify_generic`] — the minimal Picard lattice `⟨h₁, h₂⟩`, whose only
//!   walls are the two exceptional classes `δ′`, `Σ′`;
//! * [`verify_one_curve`] — adds a `(−4, 2)` curve class; seven walls;
//! * [`verify_two_curves`] — adds a `(−2, 1)` curve class; seven walls,
//!   including the two `(−12, 2)` combinations, and one published non-wall;
//! * [`verify_elliptic`] — the isotropic elliptic class, its `(−2, 1)`
//!   companion wall, and the reflection identity relating them;
//! * [`verify_involution_obstruction`] — the parity obstruction in `Σ′⊥`
//!   that rules out a symplectic involution acting as expected.

mod report;
mod suites;

pub use report::{CheckResult, VerificationReport};
pub use suites::{
    run_all, suite_by_name, verify_elliptic, verify_generic, verify_involution_obstruction,
    verify_one_curve, verify_two_curves, SUITE_NAMES,
};
