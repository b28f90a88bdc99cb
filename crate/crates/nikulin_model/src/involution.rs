//! Lattice-theoretic criterion for symplectic involutions on K3 surfaces.

use lattice_core::standard::e8;
use lattice_core::GramLattice;
use std::sync::OnceLock;

fn e8_minus_two() -> &'static GramLattice {
    static CELL: OnceLock<GramLattice> = OnceLock::new();
    CELL.get_or_init(|| e8(-2))
}

/// Decide the symplectic-involution criterion from an explicit orthogonal
/// block decomposition of the Picard lattice.
///
/// A K3 surface carries a symplectic involution exactly when `E8(−2)` embeds
/// primitively into its Picard lattice **and** some Kähler class is invariant
/// (equivalently, the Kähler cone meets the orthogonal complement of the
/// `E8(−2)` copy). The caller supplies the decomposition and the Kähler fact;
/// this function only checks for an `E8(−2)` block. General primitive-embedding
/// testing is out of scope by design.
pub fn symplectic_involution_criterion(
    blocks: &[GramLattice],
    has_invariant_kahler: bool,
) -> bool {
    has_invariant_kahler && blocks.iter().any(|b| b.gram() == e8_minus_two().gram())
}

#[cfg(test)]
mod tests {
    use super::*;
    use lattice_core::standard::{hyperbolic, rank_one};

    #[test]
    fn criterion_requires_an_e8_minus_two_block_and_a_kahler_class() {
        let e8m2 = e8(-2);
        assert!(symplectic_involution_criterion(&[e8m2.clone()], true));
        assert!(symplectic_involution_criterion(
            &[e8m2.clone(), rank_one(-2)],
            true
        ));
        assert!(!symplectic_involution_criterion(&[hyperbolic(1)], true));
        assert!(!symplectic_involution_criterion(&[e8(-1)], true));
        assert!(!symplectic_involution_criterion(&[e8m2], false));
        assert!(!symplectic_involution_criterion(&[], true));
    }
}
