//! Complete short-vector enumeration in negative definite lattices.
//!
//! The enumeration is the Fincke–Pohst tree walk over the exact rational
//! LDLᵀ decomposition of the negated Gram matrix: writing `−G = Uᵀ·D·U` with
//! `U` unit upper triangular and `D` a positive rational diagonal, every
//! vector satisfies `−q(x) = Σᵢ dᵢ·(xᵢ + Σ_{j>i} uᵢⱼ xⱼ)²`, so coordinates
//! can be assigned from the last to the first while the running partial sum
//! stays within the requested bound. No floating point is involved, so the
//! output is provably complete.

use crate::error::LatticeError;
use crate::gram::GramLattice;
use crate::{vector, Int, Rat, Result};
use num_traits::{One, Signed, Zero};
use std::collections::BTreeSet;

/// Exact rational LDLᵀ data for a positive definite matrix.
struct Ldl {
    /// Positive diagonal pivots.
    d: Vec<Rat>,
    /// Unit upper-triangular factor (entries above the diagonal).
    u: Vec<Vec<Rat>>,
}

/// LDLᵀ of `a` (which must be symmetric); errors when not positive definite.
fn ldl_positive_definite(a: &[Vec<Rat>]) -> Result<Ldl> {
    let n = a.len();
    let mut d = vec![Rat::zero(); n];
    let mut u = vec![vec![Rat::zero(); n]; n];
    for i in 0..n {
        u[i][i] = Rat::one();
    }
    for i in 0..n {
        let mut pivot = a[i][i].clone();
        for k in 0..i {
            pivot -= &d[k] * &u[k][i] * &u[k][i];
        }
        if !pivot.is_positive() {
            return Err(LatticeError::NotNegativeDefinite);
        }
        d[i] = pivot;
        for j in i + 1..n {
            let mut s = a[i][j].clone();
            for k in 0..i {
                s -= &d[k] * &u[k][i] * &u[k][j];
            }
            u[i][j] = s / &d[i];
        }
    }
    Ok(Ldl { d, u })
}

/// Nearest integer to a rational (ties round up), used to center the zig-zag.
fn nearest_integer(r: &Rat) -> Int {
    let half = Rat::new(Int::one(), Int::from(2));
    (r + half).floor().to_integer()
}

/// All nonzero vectors `x` with `q(x) ∈ norms`, in a negative definite lattice.
///
/// Preconditions: the lattice is negative definite (checked exactly; the error
/// is [`LatticeError::NotNegativeDefinite`] otherwise).
///
/// Postconditions: the output is exactly the set of vectors with the requested
/// norms, sorted lexicographically by coordinates, with no duplicates; it is
/// closed under negation because the tree walk is symmetric.
pub fn short_vectors(lattice: &GramLattice, norms: &[Int]) -> Result<Vec<Vec<Int>>> {
    let n = lattice.rank();
    // Negate the Gram matrix and insist on positive definiteness.
    let a: Vec<Vec<Rat>> = lattice
        .gram()
        .iter()
        .map(|row| row.iter().map(|c| Rat::from_integer(-c.clone())).collect())
        .collect();
    let ldl = ldl_positive_definite(&a)?;

    let wanted: BTreeSet<Int> = norms.iter().cloned().collect();
    // Only negative targets can be realized by nonzero vectors.
    let bound = wanted
        .iter()
        .filter(|t| t.is_negative())
        .map(|t| -t.clone())
        .max();
    let Some(bound) = bound else {
        return Ok(Vec::new());
    };
    let cap = Rat::from_integer(bound);

    let mut found: Vec<Vec<Int>> = Vec::new();
    let mut coords = vec![Int::zero(); n];
    walk(n, &ldl, &cap, &mut coords, &Rat::zero(), &mut |x| {
        if vector::is_zero(x) {
            return;
        }
        let q = lattice.norm(x).expect("rank is consistent inside the walk");
        if wanted.contains(&q) {
            found.push(x.to_vec());
        }
    });
    found.sort_by(|x, y| vector::lex_cmp(x, y));
    Ok(found)
}

/// Assign coordinate `level−1` (levels run from `n` down to `0`), keeping the
/// partial quadratic value within `cap`, and emit complete assignments.
fn walk(
    level: usize,
    ldl: &Ldl,
    cap: &Rat,
    coords: &mut Vec<Int>,
    used: &Rat,
    emit: &mut dyn FnMut(&[Int]),
) {
    if level == 0 {
        emit(coords);
        return;
    }
    let i = level - 1;
    // Offset uᵢ = Σ_{j>i} U[i][j]·xⱼ from the already-assigned coordinates.
    let mut offset = Rat::zero();
    for j in i + 1..coords.len() {
        if !ldl.u[i][j].is_zero() {
            offset += &ldl.u[i][j] * Rat::from_integer(coords[j].clone());
        }
    }
    let budget = cap - used;
    let center = nearest_integer(&(-offset.clone()));

    // Walk upward from the rounding center, then downward, while the level
    // term dᵢ·(xᵢ + uᵢ)² fits in the remaining budget. The term is monotone on
    // each side of the exact center, so both scans are complete.
    let mut x = center.clone();
    loop {
        let t = Rat::from_integer(x.clone()) + &offset;
        let term = &ldl.d[i] * &t * &t;
        if term > budget {
            break;
        }
        coords[i] = x.clone();
        let next_used = used + &term;
        walk(i, ldl, cap, coords, &next_used, emit);
        x += 1;
    }
    let mut x: Int = center - 1;
    loop {
        let t = Rat::from_integer(x.clone()) + &offset;
        let term = &ldl.d[i] * &t * &t;
        if term > budget {
            break;
        }
        coords[i] = x.clone();
        let next_used = used + &term;
        walk(i, ldl, cap, coords, &next_used, emit);
        x -= 1;
    }
    coords[i] = Int::zero();
}
