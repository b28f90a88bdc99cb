//! Lattices presented by the Gram matrix of a fixed basis.

use crate::error::LatticeError;
use crate::{matrix, vector, Int, Result};
use num_integer::Integer;
use num_traits::Zero;

/// An integer lattice of finite rank with a fixed basis, presented by the
/// (symmetric, integer) Gram matrix of that basis.
///
/// Coordinates of lattice vectors are always taken in the defining basis.
/// The form may be indefinite or odd; definiteness is only required by the
/// operations that state it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GramLattice {
    name: String,
    gram: Vec<Vec<Int>>,
}

impl GramLattice {
    /// Build a lattice from a symmetric square Gram matrix.
    pub fn new(name: impl Into<String>, gram: Vec<Vec<Int>>) -> Result<Self> {
        let n = gram.len();
        if gram.iter().any(|row| row.len() != n) {
            return Err(LatticeError::NonSymmetric);
        }
        for i in 0..n {
            for j in 0..i {
                if gram[i][j] != gram[j][i] {
                    return Err(LatticeError::NonSymmetric);
                }
            }
        }
        Ok(Self { name: name.into(), gram })
    }

    /// Convenience constructor from machine integers.
    pub fn from_rows(name: impl Into<String>, rows: &[&[i64]]) -> Result<Self> {
        Self::new(name, rows.iter().map(|r| vector::veci(r)).collect())
    }

    /// Human-readable lattice name (also used by the CLI name parser).
    pub fn name(&self) -> &str {
        &self.name
    }

    /// Rank of the lattice.
    pub fn rank(&self) -> usize {
        self.gram.len()
    }

    /// The Gram matrix rows.
    pub fn gram(&self) -> &[Vec<Int>] {
        &self.gram
    }

    fn check_rank(&self, v: &[Int]) -> Result<()> {
        if v.len() != self.rank() {
            return Err(LatticeError::RankMismatch {
                expected: self.rank(),
                found: v.len(),
            });
        }
        Ok(())
    }

    /// The vector `G·x` of pairings of `x` with every basis vector.
    pub fn basis_pairings(&self, x: &[Int]) -> Result<Vec<Int>> {
        self.check_rank(x)?;
        Ok(matrix::mat_vec(&self.gram, x))
    }

    /// Bilinear pairing `(x, y)`.
    pub fn pairing(&self, x: &[Int], y: &[Int]) -> Result<Int> {
        self.check_rank(x)?;
        self.check_rank(y)?;
        let gy = matrix::mat_vec(&self.gram, y);
        Ok(x.iter().zip(&gy).map(|(a, b)| a * b).sum())
    }

    /// Quadratic value `q(x) = (x, x)`.
    pub fn norm(&self, x: &[Int]) -> Result<Int> {
        self.pairing(x, x)
    }

    /// True when the lattice is even (all basis vectors have even self-pairing,
    /// which forces every `q(x)` to be even).
    pub fn is_even(&self) -> bool {
        (0..self.rank()).all(|i| self.gram[i][i].is_even())
    }

    /// Exact determinant of the Gram matrix.
    pub fn det(&self) -> Int {
        matrix::det_bareiss(&self.gram)
    }

    /// Divisibility of `x`: the positive generator of the ideal of pairings
    /// `(x, L) ⊆ Z`, i.e. the gcd of the pairings with the basis.
    ///
    /// Errors with [`LatticeError::ZeroVector`] on the zero vector and with
    /// [`LatticeError::UndefinedDivisibility`] when `x` pairs to zero with the
    /// whole lattice (only possible for degenerate forms).
    pub fn divisibility(&self, x: &[Int]) -> Result<Int> {
        if vector::is_zero(x) {
            return Err(LatticeError::ZeroVector);
        }
        let pairings = self.basis_pairings(x)?;
        let d = vector::content(&pairings);
        if d.is_zero() {
            return Err(LatticeError::UndefinedDivisibility);
        }
        Ok(d)
    }

    /// Divisibility of `x` computed against an explicit generator list: the gcd
    /// of the pairings `(g, x)` over all generators `g`. Used for sublattices
    /// presented inside an ambient lattice.
    pub fn divisibility_wrt(&self, x: &[Int], generators: &[Vec<Int>]) -> Result<Int> {
        if generators.is_empty() {
            return Err(LatticeError::EmptyGenerators);
        }
        if vector::is_zero(x) {
            return Err(LatticeError::ZeroVector);
        }
        let mut d = Int::zero();
        for g in generators {
            d = d.gcd(&self.pairing(g, x)?);
        }
        if d.is_zero() {
            return Err(LatticeError::UndefinedDivisibility);
        }
        Ok(d)
    }

    /// Orthogonal direct sum `self ⊕ other` under a new name.
    pub fn direct_sum(&self, other: &GramLattice, name: impl Into<String>) -> GramLattice {
        let n = self.rank();
        let m = other.rank();
        let mut gram = vec![vec![Int::zero(); n + m]; n + m];
        for i in 0..n {
            for j in 0..n {
                gram[i][j] = self.gram[i][j].clone();
            }
        }
        for i in 0..m {
            for j in 0..m {
                gram[n + i][n + j] = other.gram[i][j].clone();
            }
        }
        GramLattice { name: name.into(), gram }
    }

    /// The same basis with the form multiplied by `n`.
    pub fn rescale(&self, n: i64, name: impl Into<String>) -> GramLattice {
        let k = Int::from(n);
        GramLattice {
            name: name.into(),
            gram: self
                .gram
                .iter()
                .map(|row| row.iter().map(|c| c * &k).collect())
                .collect(),
        }
    }

    /// Gram matrix `Bᵀ G B` of the sublattice spanned by `basis`
    /// (each entry of `basis` is a vector in ambient coordinates).
    pub fn induced_gram(&self, basis: &[Vec<Int>], name: impl Into<String>) -> Result<GramLattice> {
        for b in basis {
            self.check_rank(b)?;
        }
        let k = basis.len();
        let mut gram = vec![vec![Int::zero(); k]; k];
        for i in 0..k {
            for j in 0..=i {
                let p = self.pairing(&basis[i], &basis[j])?;
                gram[i][j] = p.clone();
                gram[j][i] = p;
            }
        }
        Ok(GramLattice { name: name.into(), gram })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::vector::veci;

    fn u2() -> GramLattice {
        GramLattice::from_rows("U(2)", &[&[0, 2], &[2, 0]]).unwrap()
    }

    #[test]
    fn rejects_asymmetric_gram() {
        assert_eq!(
            GramLattice::from_rows("bad", &[&[0, 1], &[2, 0]]),
            Err(LatticeError::NonSymmetric)
        );
        assert!(GramLattice::from_rows("bad", &[&[0, 1, 2], &[1, 0, 0]]).is_err());
    }

    #[test]
    fn pairings_and_norms_are_exact() {
        let l = u2();
        let e = veci(&[1, 0]);
        let f = veci(&[0, 1]);
        assert_eq!(l.pairing(&e, &f).unwrap(), Int::from(2));
        assert_eq!(l.norm(&e).unwrap(), Int::from(0));
        assert_eq!(l.norm(&veci(&[3, -1])).unwrap(), Int::from(-12));
        assert!(l.is_even());
        assert_eq!(l.det(), Int::from(-4));
    }

    #[test]
    fn divisibility_is_gcd_of_basis_pairings() {
        let l = u2();
        assert_eq!(l.divisibility(&veci(&[1, 0])).unwrap(), Int::from(2));
        assert_eq!(l.divisibility(&veci(&[1, 1])).unwrap(), Int::from(2));
        assert_eq!(
            l.divisibility(&veci(&[0, 0])),
            Err(LatticeError::ZeroVector)
        );
        // Against an explicit generator list.
        let gens = vec![veci(&[1, 0])];
        assert_eq!(
            l.divisibility_wrt(&veci(&[0, 1]), &gens).unwrap(),
            Int::from(2)
        );
        assert_eq!(
            l.divisibility_wrt(&veci(&[0, 1]), &[]),
            Err(LatticeError::EmptyGenerators)
        );
    }

    #[test]
    fn sums_rescalings_and_induced_forms() {
        let u = GramLattice::from_rows("U", &[&[0, 1], &[1, 0]]).unwrap();
        assert_eq!(u.rescale(2, "U(2)"), u2());
        let s = u.direct_sum(&u2(), "U+U(2)");
        assert_eq!(s.rank(), 4);
        assert_eq!(s.norm(&veci(&[1, 1, 0, 0])).unwrap(), Int::from(2));
        assert_eq!(s.norm(&veci(&[0, 0, 1, 1])).unwrap(), Int::from(4));
        // Induced Gram of the diagonal vector inside U ⊕ U(2).
        let diag = s
            .induced_gram(&[veci(&[1, 1, 0, 0]), veci(&[0, 0, 1, 1])], "ind")
            .unwrap();
        assert_eq!(diag.gram()[0], veci(&[2, 0]));
        assert_eq!(diag.gram()[1], veci(&[0, 4]));
    }
}
