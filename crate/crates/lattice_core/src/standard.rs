//! Constructors and name parsing for the standard lattices of the workspace.
//!
//! Basis conventions (fixed once and used everywhere):
//!
//! * `U(n)` — hyperbolic plane with Gram `[[0, n], [n, 0]]`, basis `e, f`.
//! * `E8(-1)` / `E8(-2)` — the negated (and doubled) E8 Cartan matrix. Nodes
//!   `1..7` form a chain and node `8` is attached to node `5`.
//! * `Lambda` (rank 16) — `U(2) ⊕ U(2) ⊕ U(2) ⊕ E8(-1) ⊕ (-2) ⊕ (-2)`, with
//!   the two `(-2)`-generators `h₁, h₂` last.
//! * `LambdaHat` (rank 16) — `U ⊕ U ⊕ U ⊕ E8(-2) ⊕ (-1) ⊕ (-1)`, with the two
//!   `(-1)`-generators `ĥ₁, ĥ₂` last.
//! * `LambdaHat1` — the index-2 sublattice of `LambdaHat` whose last two
//!   coordinates have even sum, presented in ambient `LambdaHat` coordinates
//!   (same Gram matrix; the sublattice semantics live in the model layer).
//! * `LambdaHat2` (rank 15) — `U³ ⊕ E8(-2) ⊕ (-2)`.
//! * `LambdaHat3` (rank 7) — `U³ ⊕ (-2)`.
//! * `LambdaK3` (rank 22) — `U³ ⊕ E8(-1)²`.
//! * `LambdaK3_2` (rank 23) — `U³ ⊕ E8(-1)² ⊕ (-2)`.

use crate::error::LatticeError;
use crate::gram::GramLattice;
use crate::{Int, Result};

/// Hyperbolic plane `U(n)`: Gram `[[0, n], [n, 0]]`. `U(1)` is named `U`.
pub fn hyperbolic(n: i64) -> GramLattice {
    let name = if n == 1 { "U".to_string() } else { format!("U({n})") };
    GramLattice::new(
        name,
        vec![
            vec![Int::from(0), Int::from(n)],
            vec![Int::from(n), Int::from(0)],
        ],
    )
    .expect("hyperbolic Gram is symmetric")
}

/// Rank-one lattice `(n)`, named `"(n)"` (e.g. `"(-2)"`).
pub fn rank_one(n: i64) -> GramLattice {
    GramLattice::new(format!("({n})"), vec![vec![Int::from(n)]])
        .expect("rank-one Gram is symmetric")
}

/// The E8 Cartan matrix (positive definite, determinant 1): chain `1..7`,
/// node `8` attached to node `5`.
fn e8_cartan_rows() -> Vec<Vec<i64>> {
    let mut m = vec![vec![0i64; 8]; 8];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = 2;
    }
    for &(i, j) in &[(0usize, 1usize), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (4, 7)] {
        m[i][j] = -1;
        m[j][i] = -1;
    }
    m
}

/// `E8(scale)` for a negative scale: the Cartan matrix multiplied by `scale`.
pub fn e8(scale: i64) -> GramLattice {
    let rows = e8_cartan_rows();
    GramLattice::new(
        format!("E8({scale})"),
        rows.iter()
            .map(|row| row.iter().map(|&c| Int::from(c * scale)).collect())
            .collect(),
    )
    .expect("E8 Gram is symmetric")
}

fn blocks(name: &str, parts: &[GramLattice]) -> GramLattice {
    let mut it = parts.iter();
    let first = it.next().expect("at least one block").clone();
    let sum = it.fold(first, |acc, p| acc.direct_sum(p, name));
    // direct_sum names intermediate results; rebuild with the final name.
    GramLattice::new(name, sum.gram().to_vec()).expect("block sum is symmetric")
}

/// `Lambda = U(2)³ ⊕ E8(-1) ⊕ (-2)²` (rank 16).
pub fn lambda() -> GramLattice {
    blocks(
        "Lambda",
        &[
            hyperbolic(2),
            hyperbolic(2),
            hyperbolic(2),
            e8(-1),
            rank_one(-2),
            rank_one(-2),
        ],
    )
}

/// `LambdaHat = U³ ⊕ E8(-2) ⊕ (-1)²` (rank 16).
pub fn lambda_hat() -> GramLattice {
    blocks(
        "LambdaHat",
        &[
            hyperbolic(1),
            hyperbolic(1),
            hyperbolic(1),
            e8(-2),
            rank_one(-1),
            rank_one(-1),
        ],
    )
}

/// `LambdaHat1`: the even-ĥ-sum sublattice of `LambdaHat` in ambient
/// coordinates. The Gram matrix is the ambient one; primitivity and
/// divisibility against the sublattice are handled by the model layer.
pub fn lambda_hat1_ambient() -> GramLattice {
    GramLattice::new("LambdaHat1", lambda_hat().gram().to_vec())
        .expect("ambient Gram is symmetric")
}

/// `LambdaHat2 = U³ ⊕ E8(-2) ⊕ (-2)` (rank 15).
pub fn lambda_hat2() -> GramLattice {
    blocks(
        "LambdaHat2",
        &[
            hyperbolic(1),
            hyperbolic(1),
            hyperbolic(1),
            e8(-2),
            rank_one(-2),
        ],
    )
}

/// `LambdaHat3 = U³ ⊕ (-2)` (rank 7).
pub fn lambda_hat3() -> GramLattice {
    blocks(
        "LambdaHat3",
        &[hyperbolic(1), hyperbolic(1), hyperbolic(1), rank_one(-2)],
    )
}

/// `LambdaK3 = U³ ⊕ E8(-1)²` (rank 22).
pub fn lambda_k3() -> GramLattice {
    blocks(
        "LambdaK3",
        &[hyperbolic(1), hyperbolic(1), hyperbolic(1), e8(-1), e8(-1)],
    )
}

/// `LambdaK3_2 = U³ ⊕ E8(-1)² ⊕ (-2)` (rank 23).
pub fn lambda_k3_two() -> GramLattice {
    blocks(
        "LambdaK3_2",
        &[
            hyperbolic(1),
            hyperbolic(1),
            hyperbolic(1),
            e8(-1),
            e8(-1),
            rank_one(-2),
        ],
    )
}

/// Parse a lattice name (with common aliases) into its standard lattice.
///
/// Accepted forms include `U`, `U(n)`, `E8(-1)`/`E8m1`, `E8(-2)`/`E8m2`,
/// `(-n)`, `Lambda`/`Λ`, `LambdaHat`/`Λ̂`, `LambdaHat1..3`, `LambdaK3`/`K3`,
/// and `LambdaK3_2`/`K3[2]`.
pub fn make_standard(name: &str) -> Result<GramLattice> {
    let t = name.trim();
    let lower = t.to_ascii_lowercase();
    match lower.as_str() {
        "u" => return Ok(hyperbolic(1)),
        "lambda" | "λ" => return Ok(lambda()),
        "lambdahat" | "λ̂" | "lhat" => return Ok(lambda_hat()),
        "lambdahat1" | "λ̂₁" | "λ̂1" | "lhat1" => return Ok(lambda_hat1_ambient()),
        "lambdahat2" | "λ̂₂" | "λ̂2" | "lhat2" => return Ok(lambda_hat2()),
        "lambdahat3" | "λ̂₃" | "λ̂3" | "lhat3" => return Ok(lambda_hat3()),
        "lambdak3" | "k3" => return Ok(lambda_k3()),
        "lambdak3_2" | "k3[2]" | "k3x2" | "lambdak32" => return Ok(lambda_k3_two()),
        "e8m1" => return Ok(e8(-1)),
        "e8m2" => return Ok(e8(-2)),
        "m2" => return Ok(rank_one(-2)),
        _ => {}
    }
    // U(n)
    if let Some(body) = lower.strip_prefix("u(").and_then(|s| s.strip_suffix(')')) {
        if let Ok(n) = body.parse::<i64>() {
            if n != 0 && n.abs() <= 1 << 20 {
                return Ok(hyperbolic(n));
            }
        }
    }
    // E8(s)
    if let Some(body) = lower.strip_prefix("e8(").and_then(|s| s.strip_suffix(')')) {
        if let Ok(s) = body.parse::<i64>() {
            if s != 0 && s.abs() <= 1 << 20 {
                return Ok(e8(s));
            }
        }
    }
    // (n) rank one
    if let Some(body) = lower.strip_prefix('(').and_then(|s| s.strip_suffix(')')) {
        if let Ok(n) = body.parse::<i64>() {
            if n != 0 && n.abs() <= 1 << 20 {
                return Ok(rank_one(n));
            }
        }
    }
    Err(LatticeError::UnknownLattice(name.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::vector::veci;

    #[test]
    fn e8_is_unimodular_and_even() {
        let l = e8(-1);
        assert_eq!(l.det(), Int::from(1));
        assert!(l.is_even());
        assert_eq!(l.norm(&veci(&[1, 0, 0, 0, 0, 0, 0, 0])).unwrap(), Int::from(-2));
        // Branch node: node 5 pairs with nodes 4, 6, and 8.
        assert_eq!(l.gram()[4][3], Int::from(1));
        assert_eq!(l.gram()[4][5], Int::from(1));
        assert_eq!(l.gram()[4][7], Int::from(1));
        assert_eq!(l.gram()[4][6], Int::from(0));
    }

    #[test]
    fn frozen_e8_minus_two_rows() {
        let l = e8(-2);
        let expect: Vec<Vec<i64>> = vec![
            vec![-4, 2, 0, 0, 0, 0, 0, 0],
            vec![2, -4, 2, 0, 0, 0, 0, 0],
            vec![0, 2, -4, 2, 0, 0, 0, 0],
            vec![0, 0, 2, -4, 2, 0, 0, 0],
            vec![0, 0, 0, 2, -4, 2, 0, 2],
            vec![0, 0, 0, 0, 2, -4, 2, 0],
            vec![0, 0, 0, 0, 0, 2, -4, 0],
            vec![0, 0, 0, 0, 2, 0, 0, -4],
        ];
        for (row, want) in l.gram().iter().zip(&expect) {
            assert_eq!(row, &veci(want));
        }
        assert_eq!(l.det(), Int::from(256));
    }

    #[test]
    fn rank16_lattices_have_frozen_shapes() {
        let l = lambda();
        assert_eq!(l.rank(), 16);
        assert_eq!(l.det(), Int::from(-256));
        assert!(l.is_even());
        // h₁, h₂ are the last two coordinates with q = −2.
        let mut h1 = vec![0i64; 16];
        h1[14] = 1;
        assert_eq!(l.norm(&veci(&h1)).unwrap(), Int::from(-2));

        let lh = lambda_hat();
        assert_eq!(lh.rank(), 16);
        assert_eq!(lh.det(), Int::from(-256));
        assert!(!lh.is_even());
        let mut hhat = vec![0i64; 16];
        hhat[15] = 1;
        assert_eq!(lh.norm(&veci(&hhat)).unwrap(), Int::from(-1));

        assert_eq!(lambda_hat2().rank(), 15);
        assert_eq!(lambda_hat2().det(), Int::from(512));
        assert_eq!(lambda_hat3().rank(), 7);
        assert_eq!(lambda_hat3().det(), Int::from(2));
        assert_eq!(lambda_k3().rank(), 22);
        assert_eq!(lambda_k3().det(), Int::from(-1));
        assert_eq!(lambda_k3_two().rank(), 23);
        assert_eq!(lambda_k3_two().det(), Int::from(2));
    }

    #[test]
    fn name_parser_accepts_aliases() {
        assert_eq!(make_standard("U").unwrap().name(), "U");
        assert_eq!(make_standard("U(2)").unwrap().name(), "U(2)");
        assert_eq!(make_standard("E8m2").unwrap().name(), "E8(-2)");
        assert_eq!(make_standard("E8(-1)").unwrap().name(), "E8(-1)");
        assert_eq!(make_standard("(-2)").unwrap().name(), "(-2)");
        assert_eq!(make_standard("Lambda").unwrap().name(), "Lambda");
        assert_eq!(make_standard("LambdaHat1").unwrap().name(), "LambdaHat1");
        assert_eq!(make_standard("K3[2]").unwrap().name(), "LambdaK3_2");
        assert!(matches!(
            make_standard("nope"),
            Err(LatticeError::UnknownLattice(_))
        ));
    }
}
