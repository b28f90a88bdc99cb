//! Output types of the classifier.

use lattice_core::disc::DiscElement;
use lattice_core::Int;

/// The two ambient lattices the classifier understands.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Ambient {
    /// `Λ = U(2)³ ⊕ E8(−1) ⊕ (−2)²`.
    Lambda,
    /// `Λ̂₁ ⊂ Λ̂ = U³ ⊕ E8(−2) ⊕ (−1)²`, in ambient coordinates.
    LambdaHat1,
}

/// The invariants a class is dispatched on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitInvariants {
    /// Norm of the vector.
    pub q: Int,
    /// Divisibility: relative to `Λ̂₁` for hat-side vectors, to `Λ` otherwise.
    pub div: Int,
    /// Residue of half the E8 projection in the discriminant group of
    /// `E8(−2)`, when the (hat-side) divisibility is 2.
    pub e_bar: Option<DiscElement>,
    /// Value of the discriminant quadratic form on [`Self::e_bar`]
    /// (0 or 1), when present.
    pub qbar: Option<u8>,
    /// For `Λ`-side vectors: whether the transported ray has divisibility 1
    /// in `Λ̂₁` (the three-condition criterion).
    pub hat_div1: Option<bool>,
}

/// A classified orbit: the case row, its integer parameter, and the canonical
/// representative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitClass {
    /// Which lattice the vector and representative live in.
    pub ambient: Ambient,
    /// Case number, 1–9.
    pub case_id: u8,
    /// The integer parameter of the case row.
    pub i: Int,
    /// Canonical representative of the class (primitive, same invariants).
    pub representative: Vec<Int>,
    /// The invariants the dispatch used.
    pub invariants: OrbitInvariants,
}
