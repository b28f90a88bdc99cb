//! The fixed lattice model for Nikulin-type orbifolds.
//!
//! This crate pins down, in frozen coordinates, the two Beauville–Bogomolov
//! lattices relevant to Nikulin orbifolds:
//!
//! * `Λ  = U(2)³ ⊕ E8(−1) ⊕ (−2)²` with the exceptional classes `h₁, h₂`
//!   spanning the last two coordinates, and the named classes
//!   `δ′ = h₁ + h₂`, `Σ′ = h₁ − h₂`;
//! * `Λ̂  = U³ ⊕ E8(−2) ⊕ (−1)²` with `ĥ₁, ĥ₂` in the last two coordinates,
//!   `δ̂ = ĥ₁ + ĥ₂`, `Σ̂ = ĥ₁ − ĥ₂`, and the index-two sublattice
//!   `Λ̂₁ = {x ∈ Λ̂ : x₁₄ + x₁₅ even} ≅ U³ ⊕ E8(−2) ⊕ (−2)²`.
//!
//! It provides the named classes used as canonical orbit representatives, the
//! `Λ̂₁`-relative primitivity and divisibility helpers, the ray correspondence
//! between `Λ` and `Λ̂₁` induced by the twist `Λ̂₁(2) ⊂ Λ`, the transport of
//! isometries along that correspondence, and the lattice-theoretic criterion
//! for a K3 surface to carry a symplectic involution.

pub mod classes;
pub mod error;
pub mod hat1;
pub mod involution;
pub mod twist;

pub use classes::{
    a_prime, d_gamma_prime, delta_hat, delta_prime, e1, e1_sup1, e2, e2_sup1, h1, h1_hat, h2,
    h2_hat, l2_vector, l_vector, named_class, sigma_hat, sigma_prime, ClassAmbient, NamedClass,
    FUJIKI_CONSTANT,
};
pub use error::ModelError;
pub use hat1::{
    content1, div_hat1, hat_div1_predicate, in_lambda_hat1, is_primitive1,
    lambda_hat1_generators, primitive_part1,
};
pub use involution::symplectic_involution_criterion;
pub use twist::{
    transport_isometry_to_hat, transport_isometry_to_lambda, twist_ray_to_hat,
    twist_ray_to_lambda,
};

/// Crate-local result alias.
pub type Result<T> = std::result::Result<T, ModelError>;
