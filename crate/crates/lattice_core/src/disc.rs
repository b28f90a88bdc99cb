//! Discriminant groups `A_L = L∨/L` with exact residue arithmetic.
//!
//! For a nondegenerate Gram matrix `G` the dual lattice in basis coordinates
//! is `G⁻¹·Zⁿ`, and `A_L ≅ Zⁿ / G·Zⁿ`. A Smith normal form `U·G·V = D`
//! identifies the quotient with `⊕ Z/dᵢ` via `y ↦ U·y mod D`, which is the
//! residue map used here. Generator lifts are the columns of `G⁻¹·U⁻¹`
//! restricted to the nontrivial slots.

use crate::error::LatticeError;
use crate::gram::GramLattice;
use crate::snf::smith_normal_form;
use crate::{matrix, rational, Int, Rat, Result};
use num_integer::Integer;
use num_traits::{One, Zero};

/// An element of a discriminant group, stored as reduced residues against the
/// nontrivial invariant factors.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DiscElement(Vec<Int>);

impl DiscElement {
    /// Residues against the invariant factors, each in `[0, dᵢ)`.
    pub fn residues(&self) -> &[Int] {
        &self.0
    }

    /// True for the identity element.
    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|r| r.is_zero())
    }
}

/// The finite quotient `L∨/L` of a nondegenerate lattice, with exact residue
/// computation, generator lifts, and the discriminant quadratic value mod `2Z`.
#[derive(Debug, Clone)]
pub struct DiscriminantGroup {
    /// Nontrivial invariant factors (each > 1), divisibility-ordered.
    factors: Vec<Int>,
    /// Rows of the SNF left transform for the nontrivial slots.
    left_rows: Vec<Vec<Int>>,
    /// Generator lifts in `L ⊗ Q` basis coordinates.
    lifts: Vec<Vec<Rat>>,
    /// The underlying lattice (for pairings of lifts).
    lattice: GramLattice,
}

impl DiscriminantGroup {
    /// Compute the discriminant group of a nondegenerate lattice.
    pub fn new(lattice: &GramLattice) -> Result<Self> {
        if lattice.det().is_zero() {
            return Err(LatticeError::Degenerate);
        }
        let snf = smith_normal_form(lattice.gram());
        let g_inv = matrix::rational_inverse(lattice.gram())?;
        let u_inv_int = matrix::rational_inverse(&snf.left)?;
        // `left` is unimodular, so its inverse is integral; keep it rational
        // for the product with G⁻¹.
        let mut factors = Vec::new();
        let mut left_rows = Vec::new();
        let mut lifts = Vec::new();
        for (k, d) in snf.diag.iter().enumerate() {
            if d > &Int::one() {
                factors.push(d.clone());
                left_rows.push(snf.left[k].clone());
                // Lift of the k-th generator: G⁻¹ · (U⁻¹ e_k) = G⁻¹ · (column k of U⁻¹).
                let col: Vec<Rat> = (0..lattice.rank()).map(|i| u_inv_int[i][k].clone()).collect();
                let lift = matrix::rat_mat_vec(&g_inv, &col);
                lifts.push(lift);
            }
        }
        Ok(Self {
            factors,
            left_rows,
            lifts,
            lattice: lattice.clone(),
        })
    }

    /// Number of generators (nontrivial invariant factors).
    pub fn num_generators(&self) -> usize {
        self.factors.len()
    }

    /// The nontrivial invariant factors, divisibility-ordered.
    pub fn invariant_factors(&self) -> &[Int] {
        &self.factors
    }

    /// Group order (product of the invariant factors).
    pub fn order(&self) -> Int {
        self.factors.iter().fold(Int::one(), |acc, d| acc * d)
    }

    /// The identity element.
    pub fn zero(&self) -> DiscElement {
        DiscElement(vec![Int::zero(); self.factors.len()])
    }

    /// Rational lift of the `k`-th generator in lattice basis coordinates.
    pub fn generator_lift(&self, k: usize) -> &[Rat] {
        &self.lifts[k]
    }

    fn reduce(&self, raw: Vec<Int>) -> DiscElement {
        DiscElement(
            raw.into_iter()
                .zip(&self.factors)
                .map(|(r, d)| r.mod_floor(d))
                .collect(),
        )
    }

    /// Residue of the rational vector `v / d` where `v` is a lattice vector.
    ///
    /// Errors with [`LatticeError::NotInDual`] unless `d` divides every pairing
    /// of `v` with the lattice (i.e. unless `v/d ∈ L∨`).
    pub fn residue_of_scaled(&self, v: &[Int], d: &Int) -> Result<DiscElement> {
        let y = self.lattice.basis_pairings(v)?;
        if d.is_zero() {
            return Err(LatticeError::NotInDual);
        }
        let mut scaled = Vec::with_capacity(y.len());
        for c in &y {
            let (q, r) = c.div_rem(d);
            if !r.is_zero() {
                return Err(LatticeError::NotInDual);
            }
            scaled.push(q);
        }
        let raw: Vec<Int> = self
            .left_rows
            .iter()
            .map(|row| row.iter().zip(&scaled).map(|(a, b)| a * b).sum())
            .collect();
        Ok(self.reduce(raw))
    }

    /// Residue of a rational vector `x ∈ L ⊗ Q`.
    ///
    /// Errors with [`LatticeError::NotInDual`] unless all pairings `(x, eᵢ)`
    /// are integers.
    pub fn residue_of_rational(&self, x: &[Rat]) -> Result<DiscElement> {
        if x.len() != self.lattice.rank() {
            return Err(LatticeError::RankMismatch {
                expected: self.lattice.rank(),
                found: x.len(),
            });
        }
        let mut y = Vec::with_capacity(x.len());
        for row in self.lattice.gram() {
            let p: Rat = row
                .iter()
                .zip(x)
                .map(|(g, c)| Rat::from_integer(g.clone()) * c)
                .sum();
            if !p.is_integer() {
                return Err(LatticeError::NotInDual);
            }
            y.push(p.to_integer());
        }
        let raw: Vec<Int> = self
            .left_rows
            .iter()
            .map(|row| row.iter().zip(&y).map(|(a, b)| a * b).sum())
            .collect();
        Ok(self.reduce(raw))
    }

    /// A rational lift of `e`: the sum of the generator lifts weighted by the
    /// residues. Together with [`Self::canonical_fractional_lift`] this is the
    /// deterministic preimage used across the workspace.
    pub fn lift(&self, e: &DiscElement) -> Vec<Rat> {
        let n = self.lattice.rank();
        let mut out = vec![Rat::zero(); n];
        for (k, r) in e.residues().iter().enumerate() {
            let w = Rat::from_integer(r.clone());
            for i in 0..n {
                out[i] += &w * &self.lifts[k][i];
            }
        }
        out
    }

    /// The lift of `e` with every coordinate reduced into `[0, 1)`. Still a
    /// lift of `e` (the reduction subtracts a lattice vector), and canonical.
    pub fn canonical_fractional_lift(&self, e: &DiscElement) -> Vec<Rat> {
        rational::fractional_part(&self.lift(e))
    }

    /// Sum in the group.
    pub fn add(&self, a: &DiscElement, b: &DiscElement) -> DiscElement {
        self.reduce(
            a.residues()
                .iter()
                .zip(b.residues())
                .map(|(x, y)| x + y)
                .collect(),
        )
    }

    /// Inverse in the group.
    pub fn neg(&self, a: &DiscElement) -> DiscElement {
        self.reduce(a.residues().iter().map(|x| -x).collect())
    }

    /// Value of the discriminant quadratic form `q̄(e) = q(lift) mod 2Z`,
    /// returned as the canonical representative in `[0, 2)`.
    pub fn qbar2(&self, e: &DiscElement) -> Result<Rat> {
        let lift = self.canonical_fractional_lift(e);
        let q = rational::norm_rat(&self.lattice, &lift)?;
        let two = Rat::from_integer(Int::from(2));
        let m = (&q / &two).floor();
        Ok(q - m * two)
    }

    /// Group order as `u64`, when it fits.
    pub fn order_u64(&self) -> Option<u64> {
        u64::try_from(&self.order()).ok()
    }

    /// Deterministic enumeration of all elements (mixed-radix odometer with the
    /// first factor least significant).
    ///
    /// Errors with [`LatticeError::EnumerationTooLarge`] when the order exceeds
    /// `2^16`.
    pub fn enumerate(&self) -> Result<Vec<DiscElement>> {
        let order = self.order();
        if order > Int::from(1u64 << 16) {
            return Err(LatticeError::EnumerationTooLarge(order.to_string()));
        }
        let total = u64::try_from(&order).expect("order fits after the cap check");
        Ok((0..total).map(|idx| self.element_at(idx)).collect())
    }

    /// The element at a mixed-radix index (inverse of [`Self::index_of`]).
    pub fn element_at(&self, idx: u64) -> DiscElement {
        let mut rem = Int::from(idx);
        let residues = self
            .factors
            .iter()
            .map(|d| {
                let (q, r) = rem.div_rem(d);
                rem = q;
                r
            })
            .collect();
        DiscElement(residues)
    }

    /// Mixed-radix index of an element (inverse of [`Self::element_at`]).
    pub fn index_of(&self, e: &DiscElement) -> u64 {
        let mut idx = Int::zero();
        let mut stride = Int::one();
        for (r, d) in e.residues().iter().zip(&self.factors) {
            idx += r * &stride;
            stride *= d;
        }
        u64::try_from(&idx).expect("index fits in u64 for enumerable groups")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::standard;
    use crate::vector::veci;

    #[test]
    fn u2_discriminant_is_two_two() {
        let l = standard::hyperbolic(2);
        let a = DiscriminantGroup::new(&l).unwrap();
        assert_eq!(a.invariant_factors(), &[Int::from(2), Int::from(2)]);
        assert_eq!(a.order(), Int::from(4));
        // e/2 is a dual vector with residue of exact order 2.
        let e_half = a.residue_of_scaled(&veci(&[1, 0]), &Int::from(2)).unwrap();
        assert!(!e_half.is_zero());
        assert!(a.add(&e_half, &e_half).is_zero());
        // e itself is a lattice vector: trivial residue.
        let e = a.residue_of_scaled(&veci(&[1, 0]), &Int::from(1)).unwrap();
        assert!(e.is_zero());
        // e/3 is not dual.
        assert_eq!(
            a.residue_of_scaled(&veci(&[1, 0]), &Int::from(3)),
            Err(LatticeError::NotInDual)
        );
    }

    #[test]
    fn lifts_are_dual_and_round_trip() {
        let l = standard::hyperbolic(2).direct_sum(&standard::rank_one(-2), "U(2)+(-2)");
        let a = DiscriminantGroup::new(&l).unwrap();
        assert_eq!(a.order(), Int::from(8));
        for k in 0..a.num_generators() {
            let lift = a.generator_lift(k).to_vec();
            let back = a.residue_of_rational(&lift).unwrap();
            let mut expect = vec![Int::zero(); a.num_generators()];
            expect[k] = Int::one();
            assert_eq!(back.residues(), expect.as_slice());
        }
    }

    #[test]
    fn qbar_of_isotropic_and_anisotropic_residues() {
        // In U(2), q̄(e/2) = 0 and q̄((e+f)/2) = q((e+f)/2) = 1 mod 2.
        let l = standard::hyperbolic(2);
        let a = DiscriminantGroup::new(&l).unwrap();
        let e_half = a.residue_of_scaled(&veci(&[1, 0]), &Int::from(2)).unwrap();
        assert_eq!(a.qbar2(&e_half).unwrap(), Rat::zero());
        let ef_half = a.residue_of_scaled(&veci(&[1, 1]), &Int::from(2)).unwrap();
        assert_eq!(
            a.qbar2(&ef_half).unwrap(),
            Rat::from_integer(Int::from(1))
        );
    }

    #[test]
    fn enumeration_is_a_bijection() {
        let l = standard::hyperbolic(2).direct_sum(&standard::rank_one(-2), "U(2)+(-2)");
        let a = DiscriminantGroup::new(&l).unwrap();
        let all = a.enumerate().unwrap();
        assert_eq!(all.len(), 8);
        for (i, e) in all.iter().enumerate() {
            assert_eq!(a.index_of(e), i as u64);
        }
        // Unimodular lattice: trivial group, single element.
        let u = standard::hyperbolic(1);
        let trivial = DiscriminantGroup::new(&u).unwrap();
        assert_eq!(trivial.order(), Int::one());
        assert_eq!(trivial.enumerate().unwrap().len(), 1);
    }
}
