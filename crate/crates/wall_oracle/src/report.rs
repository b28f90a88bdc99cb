//! Wall list containers.

use lattice_core::Int;

/// One wall ray, stored as the canonical primitive generator (first nonzero
/// ambient coordinate positive), with its invariants.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WallEntry {
    /// Canonical primitive generator in ambient coordinates.
    pub coords: Vec<Int>,
    /// Square of the generator.
    pub q: Int,
    /// Divisibility of the generator in the ambient lattice.
    pub div: Int,
    /// Classification row, when the ambient lattice carries the nine-case
    /// classification (`Λ`); `None` for the K3-family ambients.
    pub case_id: Option<u8>,
}

/// The wall rays of a Picard sublattice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WallReport {
    /// Canonical wall rays, lexicographically sorted, one per `±`-pair.
    pub walls: Vec<WallEntry>,
    /// Whether the list provably contains every wall ray of the sublattice.
    pub complete: bool,
}

impl WallReport {
    /// The rays as bare coordinate vectors.
    pub fn rays(&self) -> Vec<Vec<Int>> {
        self.walls.iter().map(|w| w.coords.clone()).collect()
    }
}
