//! Embedded Picard sublattices.

use crate::error::WallOracleError;
use crate::Result;
use lattice_core::snf::smith_normal_form;
use lattice_core::{GramLattice, Int};
use num_traits::{One, Zero};

/// A sublattice of an ambient lattice, given by an explicit basis in ambient
/// coordinates.
///
/// Invariants established by [`PicardEmbedding::new`]:
/// * the basis vectors are linearly independent;
/// * the sublattice they span is primitively embedded (saturated), so that
///   vectors primitive in the sublattice stay primitive in the ambient
///   lattice and complete enumeration inside the span is meaningful;
/// * `induced` caches the Gram matrix `Bᵀ·G·B` of the basis.
#[derive(Debug, Clone)]
pub struct PicardEmbedding {
    ambient: GramLattice,
    basis: Vec<Vec<Int>>,
    induced: GramLattice,
}

impl PicardEmbedding {
    /// Validate a basis and build the embedding.
    pub fn new(ambient: GramLattice, basis: Vec<Vec<Int>>) -> Result<Self> {
        let n = ambient.rank();
        if basis.is_empty() || basis.len() > n {
            return Err(WallOracleError::DependentBasis);
        }
        // One Smith normal form decides both independence and saturation:
        // the row lattice spanned by the basis has invariant factors given by
        // the nonzero diagonal; independence means exactly `basis.len()` of
        // them, saturation means they are all 1.
        let mut rows: Vec<Vec<Int>> = Vec::with_capacity(n);
        for b in &basis {
            if b.len() != n {
                return Err(WallOracleError::Lattice(
                    lattice_core::LatticeError::RankMismatch {
                        expected: n,
                        found: b.len(),
                    },
                ));
            }
            rows.push(b.clone());
        }
        rows.resize(n, vec![Int::zero(); n]);
        let snf = smith_normal_form(&rows);
        let nonzero = snf.diag.iter().filter(|d| !d.is_zero()).count();
        if nonzero != basis.len() {
            return Err(WallOracleError::DependentBasis);
        }
        if snf.diag.iter().any(|d| !d.is_zero() && !d.is_one()) {
            return Err(WallOracleError::NotSaturated);
        }
        let induced = ambient.induced_gram(&basis, "Pic")?;
        Ok(Self {
            ambient,
            basis,
            induced,
        })
    }

    /// The ambient lattice.
    pub fn ambient(&self) -> &GramLattice {
        &self.ambient
    }

    /// The basis, in ambient coordinates.
    pub fn basis(&self) -> &[Vec<Int>] {
        &self.basis
    }

    /// The induced Gram lattice on the basis.
    pub fn induced(&self) -> &GramLattice {
        &self.induced
    }

    /// Map sublattice coordinates to ambient coordinates.
    pub fn to_ambient(&self, coords: &[Int]) -> Vec<Int> {
        let n = self.ambient.rank();
        let mut out = vec![Int::zero(); n];
        for (c, b) in coords.iter().zip(self.basis.iter()) {
            if c.is_zero() {
                continue;
            }
            for (o, bj) in out.iter_mut().zip(b.iter()) {
                *o += c * bj;
            }
        }
        out
    }
}
