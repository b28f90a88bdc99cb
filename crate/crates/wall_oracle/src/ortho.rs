//! Orthogonal complements and divisibility-steered square scans.

use crate::Result;
use lattice_core::snf::smith_normal_form;
use lattice_core::vector::{is_zero, primitive_part};
use lattice_core::{GramLattice, Int, LatticeError};
use num_integer::Integer;
use num_traits::Zero;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand::SeedableRng;
use std::collections::BTreeMap;

/// A basis of the orthogonal complement `v⊥ ∩ L`.
///
/// The kernel of the pairing form against `v` is extracted from the Smith
/// normal form of the matrix whose single nonzero row is `G·v`; the columns
/// of the right transform at the zero diagonal entries form a saturated
/// basis, so every lattice vector orthogonal to `v` is an integer combination
/// of the result.
pub fn orthocomplement_basis(lattice: &GramLattice, v: &[Int]) -> Result<Vec<Vec<Int>>> {
    if is_zero(v) {
        return Err(crate::WallOracleError::Lattice(LatticeError::ZeroVector));
    }
    let n = lattice.rank();
    let pairings = lattice.basis_pairings(v)?;
    let mut m = vec![vec![Int::zero(); n]; n];
    m[0] = pairings;
    let snf = smith_normal_form(&m);
    let mut basis = Vec::new();
    for (j, d) in snf.diag.iter().enumerate() {
        if d.is_zero() {
            let col: Vec<Int> = (0..n).map(|r| snf.right[r][j].clone()).collect();
            basis.push(col);
        }
    }
    Ok(basis)
}

/// Outcome of a steered random scan of an orthogonal complement.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanReport {
    /// How many accepted samples were requested.
    pub requested: usize,
    /// How many samples with the requested divisibility were found.
    pub accepted: usize,
    /// Multiset of `q mod 4` over the accepted samples.
    pub residue_counts: BTreeMap<u8, usize>,
}

/// Sample primitive vectors of `v⊥ ∩ L` with the prescribed divisibility and
/// tally their squares modulo 4.
///
/// Sampling is seeded and deterministic. For divisibility 2 the coefficient
/// vectors are steered onto the affine sublattice where all basis pairings
/// are even (the kernel of the pairing matrix over `F₂`), so acceptance does
/// not rely on luck; the exact divisibility of the primitive part is still
/// verified before a sample is counted.
pub fn orthocomplement_square_scan(
    lattice: &GramLattice,
    v: &[Int],
    target_div: i64,
    sample_count: usize,
    seed: u64,
) -> Result<ScanReport> {
    let basis = orthocomplement_basis(lattice, v)?;
    let k = basis.len();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    // Pairing columns P·c = Σ cᵢ·(G·bᵢ); parity masks steer c onto solutions
    // of P·c ≡ 0 (mod 2) when divisibility 2 is requested.
    let pair_cols: Vec<Vec<Int>> = basis
        .iter()
        .map(|b| lattice.basis_pairings(b))
        .collect::<std::result::Result<_, _>>()?;
    let f2_kernel: Vec<u64> = if target_div % 2 == 0 {
        parity_kernel(&pair_cols, lattice.rank(), k)
    } else {
        Vec::new()
    };

    let mut report = ScanReport {
        requested: sample_count,
        accepted: 0,
        residue_counts: BTreeMap::new(),
    };
    let four = Int::from(4);
    let want_div = Int::from(target_div);
    let attempts_cap = sample_count.saturating_mul(200);
    let mut attempts = 0usize;
    while report.accepted < sample_count && attempts < attempts_cap {
        attempts += 1;
        // c = c₀ + 2t with c₀ a random F₂-kernel element (steering) and t free.
        let mut c0 = 0u64;
        for w in &f2_kernel {
            if rng.gen::<bool>() {
                c0 ^= w;
            }
        }
        let steered = !f2_kernel.is_empty();
        let mut x = vec![Int::zero(); lattice.rank()];
        for (i, b) in basis.iter().enumerate() {
            let t = rng.gen_range(-6..=6i64);
            let ci = if steered {
                2 * t + ((c0 >> i) & 1) as i64
            } else {
                rng.gen_range(-12..=12i64)
            };
            if ci == 0 {
                continue;
            }
            let ci = Int::from(ci);
            for (xj, bj) in x.iter_mut().zip(b.iter()) {
                *xj += &ci * bj;
            }
        }
        if is_zero(&x) {
            continue;
        }
        let p = primitive_part(&x)?;
        if lattice.divisibility(&p)? != want_div {
            continue;
        }
        let q = lattice.norm(&p)?;
        let residue = u8::try_from(&q.mod_floor(&four)).expect("residue below 4");
        *report.residue_counts.entry(residue).or_insert(0) += 1;
        report.accepted += 1;
    }
    Ok(report)
}

/// Basis of the kernel of the parity matrix (rows = lattice basis pairings,
/// columns = complement basis elements), as bitmasks over the columns.
fn parity_kernel(pair_cols: &[Vec<Int>], rows: usize, cols: usize) -> Vec<u64> {
    assert!(cols <= 64, "parity steering supports up to 64 columns");
    // Row-reduce over F₂. Each row is a bitmask of the columns with odd entry.
    let mut mat: Vec<u64> = (0..rows)
        .map(|r| {
            let mut m = 0u64;
            for (i, col) in pair_cols.iter().enumerate() {
                if col[r].is_odd() {
                    m |= 1 << i;
                }
            }
            m
        })
        .collect();
    let mut pivot_cols: Vec<usize> = Vec::new();
    let mut rank = 0usize;
    for col in 0..cols {
        let Some(row) = (rank..mat.len()).find(|&r| mat[r] & (1 << col) != 0) else {
            continue;
        };
        mat.swap(rank, row);
        let pivot_row = mat[rank];
        for (r, m) in mat.iter_mut().enumerate() {
            if r != rank && *m & (1 << col) != 0 {
                *m ^= pivot_row;
            }
        }
        pivot_cols.push(col);
        rank += 1;
    }
    // One kernel vector per free column: that column plus the pivot columns
    // needed to cancel it.
    let mut kernel = Vec::new();
    for free in 0..cols {
        if pivot_cols.contains(&free) {
            continue;
        }
        let mut w = 1u64 << free;
        for (pi, &pc) in pivot_cols.iter().enumerate() {
            if mat[pi] & (1 << free) != 0 {
                w |= 1 << pc;
            }
        }
        kernel.push(w);
    }
    kernel
}
