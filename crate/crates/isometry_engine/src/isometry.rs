//! Certified lattice isometries.

use crate::error::EngineError;
use crate::Result;
use lattice_core::matrix::{det_bareiss, identity, mat_mul, mat_vec, rational_inverse, transpose};
use lattice_core::rational::to_int_vec;
use lattice_core::{GramLattice, Int, Rat};
use num_traits::{One, Signed, Zero};

/// An isometry of a fixed lattice: an integer matrix `M` with `MᵀGM = G`,
/// acting on column vectors by `v ↦ M·v`.
///
/// Construction always verifies the Gram condition exactly, so a value of this
/// type is a proof that the matrix is an isometry. The determinant of an
/// isometry of a nondegenerate lattice is automatically `±1`; it is asserted
/// once more at construction as a cheap internal cross-check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Isometry {
    lattice: GramLattice,
    matrix: Vec<Vec<Int>>,
}

impl Isometry {
    /// Certify `matrix` as an isometry of `lattice`.
    ///
    /// Errors with [`EngineError::NotAnIsometry`] when the matrix has the
    /// wrong shape or fails `MᵀGM = G`.
    pub fn new(lattice: &GramLattice, matrix: Vec<Vec<Int>>) -> Result<Self> {
        let n = lattice.rank();
        if matrix.len() != n || matrix.iter().any(|row| row.len() != n) {
            return Err(EngineError::NotAnIsometry);
        }
        let g = lattice.gram();
        let mt = transpose(&matrix);
        let mtgm = mat_mul(&mat_mul(&mt, g), &matrix);
        if mtgm != g {
            return Err(EngineError::NotAnIsometry);
        }
        let det = det_bareiss(&matrix);
        debug_assert!(det.abs().is_one(), "Gram-preserving matrix with |det| != 1");
        if !det.abs().is_one() {
            return Err(EngineError::NotAnIsometry);
        }
        Ok(Self {
            lattice: lattice.clone(),
            matrix,
        })
    }

    /// The identity isometry of `lattice`.
    pub fn identity(lattice: &GramLattice) -> Self {
        Self {
            lattice: lattice.clone(),
            matrix: identity(lattice.rank()),
        }
    }

    /// The lattice this isometry acts on.
    pub fn lattice(&self) -> &GramLattice {
        &self.lattice
    }

    /// The underlying matrix, row-major.
    pub fn matrix(&self) -> &[Vec<Int>] {
        &self.matrix
    }

    /// Determinant, `+1` or `-1`.
    pub fn det(&self) -> Int {
        det_bareiss(&self.matrix)
    }

    /// Apply to a lattice vector.
    ///
    /// Errors with a rank mismatch when `v` has the wrong length.
    pub fn apply(&self, v: &[Int]) -> Result<Vec<Int>> {
        if v.len() != self.lattice.rank() {
            return Err(EngineError::Lattice(
                lattice_core::LatticeError::RankMismatch {
                    expected: self.lattice.rank(),
                    found: v.len(),
                },
            ));
        }
        Ok(mat_vec(&self.matrix, v))
    }

    /// Apply to a rational vector (used for discriminant lifts).
    pub fn apply_rational(&self, v: &[Rat]) -> Vec<Rat> {
        self.matrix
            .iter()
            .map(|row| row.iter().zip(v).map(|(a, b)| Rat::from_integer(a.clone()) * b).sum())
            .collect()
    }

    /// Composition `self ∘ other`: first `other`, then `self`.
    ///
    /// Errors with [`EngineError::LatticeMismatch`] when the lattices differ.
    pub fn compose(&self, other: &Isometry) -> Result<Isometry> {
        if self.lattice != other.lattice {
            return Err(EngineError::LatticeMismatch);
        }
        // The product of two certified isometries is an isometry; re-certify
        // anyway so every value of this type has gone through the same gate.
        Isometry::new(&self.lattice, mat_mul(&self.matrix, &other.matrix))
    }

    /// Exact inverse, computed as `M⁻¹ = G⁻¹MᵀG`.
    pub fn inverse(&self) -> Isometry {
        let g = self.lattice.gram();
        let g_inv = rational_inverse(g).expect("lattice Gram matrices are nondegenerate");
        let mtg = mat_mul(&transpose(&self.matrix), g);
        let n = self.lattice.rank();
        // G⁻¹ · (MᵀG) over the rationals; the result is integral because a
        // Gram-preserving integer matrix is invertible over the integers.
        let rows: Vec<Vec<Int>> = (0..n)
            .map(|i| {
                let row: Vec<Rat> = (0..n)
                    .map(|j| {
                        (0..n)
                            .filter(|&k| !g_inv[i][k].is_zero() && !mtg[k][j].is_zero())
                            .map(|k| &g_inv[i][k] * Rat::from_integer(mtg[k][j].clone()))
                            .sum()
                    })
                    .collect();
                to_int_vec(&row).expect("inverse of a lattice isometry is integral")
            })
            .collect();
        Isometry::new(&self.lattice, rows).expect("inverse of an isometry is an isometry")
    }

    /// Whether this is the identity.
    pub fn is_identity(&self) -> bool {
        self.matrix == identity(self.lattice.rank())
    }
}
