//! Named classes in frozen coordinates.
//!
//! Coordinate layout (rank 16, shared by both ambient lattices):
//!
//! * coordinates 0–5: the three hyperbolic planes, `(e, f)` per plane —
//!   `U(2)` blocks in `Λ`, `U` blocks in `Λ̂`;
//! * coordinates 6–13: the E8 block — `E8(−1)` in `Λ`, `E8(−2)` in `Λ̂`;
//! * coordinates 14–15: the exceptional pair — `(h₁, h₂)` of norm −2 in `Λ`,
//!   `(ĥ₁, ĥ₂)` of norm −1 in `Λ̂`.

use crate::error::ModelError;
use crate::Result;
use lattice_core::vector::veci;
use lattice_core::Int;

/// Fujiki constant of a Nikulin orbifold, stored as metadata.
pub const FUJIKI_CONSTANT: i64 = 6;

/// Which ambient lattice a named class lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClassAmbient {
    /// `Λ = U(2)³ ⊕ E8(−1) ⊕ (−2)²`.
    Lambda,
    /// `Λ̂ = U³ ⊕ E8(−2) ⊕ (−1)²` (also used for `Λ̂₁` in ambient coordinates).
    LambdaHat,
}

/// A named class: its registry name, ambient lattice, and coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NamedClass {
    /// Registry name, e.g. `delta_prime`.
    pub name: String,
    /// The lattice the coordinates refer to.
    pub ambient: ClassAmbient,
    /// Coordinates in the frozen basis.
    pub coords: Vec<Int>,
}

fn sparse16(entries: &[(usize, i64)]) -> Vec<Int> {
    let mut v = veci(&[0; 16]);
    for (idx, val) in entries {
        v[*idx] = Int::from(*val);
    }
    v
}

/// `δ′ = h₁ + h₂` in `Λ` (norm −4, divisibility 2).
pub fn delta_prime() -> Vec<Int> {
    sparse16(&[(14, 1), (15, 1)])
}

/// `Σ′ = h₁ − h₂` in `Λ` (norm −4, divisibility 2).
pub fn sigma_prime() -> Vec<Int> {
    sparse16(&[(14, 1), (15, -1)])
}

/// `h₁` in `Λ` (norm −2, divisibility 2).
pub fn h1() -> Vec<Int> {
    sparse16(&[(14, 1)])
}

/// `h₂` in `Λ` (norm −2, divisibility 2).
pub fn h2() -> Vec<Int> {
    sparse16(&[(15, 1)])
}

/// `δ̂ = ĥ₁ + ĥ₂` in `Λ̂` (norm −2; divisibility 2 relative to `Λ̂₁`).
pub fn delta_hat() -> Vec<Int> {
    sparse16(&[(14, 1), (15, 1)])
}

/// `Σ̂ = ĥ₁ − ĥ₂` in `Λ̂` (norm −2; divisibility 2 relative to `Λ̂₁`).
pub fn sigma_hat() -> Vec<Int> {
    sparse16(&[(14, 1), (15, -1)])
}

/// `ĥ₁` in `Λ̂` (norm −1).
pub fn h1_hat() -> Vec<Int> {
    sparse16(&[(14, 1)])
}

/// `ĥ₂` in `Λ̂` (norm −1).
pub fn h2_hat() -> Vec<Int> {
    sparse16(&[(15, 1)])
}

/// `e₁ = b̂₁` in the E8(−2) block of `Λ̂` (norm −4, `q̄(ē₁) = 1`).
pub fn e1() -> Vec<Int> {
    sparse16(&[(6, 1)])
}

/// `e₂ = b̂₁ + b̂₃` in the E8(−2) block of `Λ̂` (norm −8, `q̄(ē₂) = 0`,
/// `ē₂ ≠ 0`). Any class with these invariants would do; this one is fixed to
/// keep canonical representatives deterministic.
pub fn e2() -> Vec<Int> {
    sparse16(&[(6, 1), (8, 1)])
}

/// `e₁⁽¹⁾ = b₁` in the E8(−1) block of `Λ` (norm −2).
pub fn e1_sup1() -> Vec<Int> {
    sparse16(&[(6, 1)])
}

/// `e₂⁽¹⁾ = b₁ + b₃` in the E8(−1) block of `Λ` (norm −4).
pub fn e2_sup1() -> Vec<Int> {
    sparse16(&[(6, 1), (8, 1)])
}

/// `D_γ′ = e + f + e₂⁽¹⁾` (norm 0, divisibility 1): the isotropic fiber
/// class of the elliptic-fibration case study, supported on the first `U(2)`
/// plane and the E8(−1) block.
pub fn d_gamma_prime() -> Vec<Int> {
    sparse16(&[(0, 1), (1, 1), (6, 1), (8, 1)])
}

/// `A′ = D_γ′ − h₁` (norm −2, divisibility 1), the fiber-component class of
/// the elliptic case study.
pub fn a_prime() -> Vec<Int> {
    sparse16(&[(0, 1), (1, 1), (6, 1), (8, 1), (14, -1)])
}

/// `L_i = i·e + f` in the first `U` plane of `Λ̂` (norm `2i`).
pub fn l_vector(i: &Int) -> Vec<Int> {
    let mut v = veci(&[0; 16]);
    v[0] = i.clone();
    v[1] = Int::from(1);
    v
}

/// `L_i⁽²⁾ = i·e + f` in the first `U(2)` plane of `Λ` (norm `4i`,
/// divisibility 2).
pub fn l2_vector(i: &Int) -> Vec<Int> {
    let mut v = veci(&[0; 16]);
    v[0] = i.clone();
    v[1] = Int::from(1);
    v
}

/// Fixed (non-parametrized) registry names.
pub fn fixed_class_names() -> &'static [&'static str] {
    &[
        "delta_prime",
        "sigma_prime",
        "h1",
        "h2",
        "delta_hat",
        "sigma_hat",
        "h1_hat",
        "h2_hat",
        "e1",
        "e2",
        "e1_sup1",
        "e2_sup1",
        "d_gamma_prime",
        "a_prime",
    ]
}

/// Look up a named class.
///
/// Fixed names are listed by [`fixed_class_names`]; the two parametrized
/// families are `l_<i>` (`L_i` in `Λ̂`) and `l2_<i>` (`L_i⁽²⁾` in `Λ`), with
/// `<i>` a possibly negative integer, e.g. `l_3` or `l2_-1`.
pub fn named_class(name: &str) -> Result<NamedClass> {
    let key = name.trim().to_ascii_lowercase();
    let (ambient, coords) = match key.as_str() {
        "delta_prime" => (ClassAmbient::Lambda, delta_prime()),
        "sigma_prime" => (ClassAmbient::Lambda, sigma_prime()),
        "h1" => (ClassAmbient::Lambda, h1()),
        "h2" => (ClassAmbient::Lambda, h2()),
        "delta_hat" => (ClassAmbient::LambdaHat, delta_hat()),
        "sigma_hat" => (ClassAmbient::LambdaHat, sigma_hat()),
        "h1_hat" => (ClassAmbient::LambdaHat, h1_hat()),
        "h2_hat" => (ClassAmbient::LambdaHat, h2_hat()),
        "e1" => (ClassAmbient::LambdaHat, e1()),
        "e2" => (ClassAmbient::LambdaHat, e2()),
        "e1_sup1" => (ClassAmbient::Lambda, e1_sup1()),
        "e2_sup1" => (ClassAmbient::Lambda, e2_sup1()),
        "d_gamma_prime" => (ClassAmbient::Lambda, d_gamma_prime()),
        "a_prime" => (ClassAmbient::Lambda, a_prime()),
        _ => {
            if let Some(rest) = key.strip_prefix("l2_") {
                let i: i64 = rest
                    .parse()
                    .map_err(|_| ModelError::UnknownClass(name.to_string()))?;
                (ClassAmbient::Lambda, l2_vector(&Int::from(i)))
            } else if let Some(rest) = key.strip_prefix("l_") {
                let i: i64 = rest
                    .parse()
                    .map_err(|_| ModelError::UnknownClass(name.to_string()))?;
                (ClassAmbient::LambdaHat, l_vector(&Int::from(i)))
            } else {
                return Err(ModelError::UnknownClass(name.to_string()));
            }
        }
    };
    Ok(NamedClass { name: key, ambient, coords })
}
