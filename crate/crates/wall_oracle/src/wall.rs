//! Wall membership rules and complete enumeration in definite sublattices.

use crate::error::WallOracleError;
use crate::picard::PicardEmbedding;
use crate::report::{WallEntry, WallReport};
use crate::Result;
use lattice_core::standard::{lambda, lambda_k3, lambda_k3_two};
use lattice_core::vector::{canonical_ray, is_zero, primitive_part};
use lattice_core::{GramLattice, Int, LatticeError};
use num_integer::Integer;
use std::collections::BTreeSet;
use std::sync::OnceLock;

fn lambda_cached() -> &'static GramLattice {
    static CELL: OnceLock<GramLattice> = OnceLock::new();
    CELL.get_or_init(lambda)
}

/// Decide whether a class of `Λ` is a wall divisor.
///
/// The input is replaced by its primitive ray first (wall-ness is a property
/// of rays). The rule is the `(q, div)` table
/// `(−2, 1)`, `(−4, 2)`, `(−6, 2)` — always walls — together with
/// `(−12, 2)`, a wall exactly when the projection to the `U(2)³` block (the
/// first six coordinates) is divisible by 2.
pub fn is_wall(d: &[Int]) -> Result<bool> {
    if is_zero(d) {
        return Err(WallOracleError::Lattice(LatticeError::ZeroVector));
    }
    let l = lambda_cached();
    let p = primitive_part(d)?;
    let q = l.norm(&p)?;
    let div = l.divisibility(&p)?;
    let q_i = i64::try_from(&q).unwrap_or(i64::MIN);
    let div_i = i64::try_from(&div).unwrap_or(0);
    Ok(match (q_i, div_i) {
        (-2, 1) | (-4, 2) | (-6, 2) => true,
        (-12, 2) => p[0..6].iter().all(|c| c.is_even()),
        _ => false,
    })
}

/// Which K3-family membership rule to apply.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum K3Kind {
    /// K3 surfaces: walls are the `q = −2` classes.
    K3,
    /// Squares of K3 surfaces (the four-dimensional family): walls are the
    /// `q = −2` classes and the `q = −10` classes of divisibility 2.
    K3Two,
}

/// The wall rule for the K3-family ambients, applied to the primitive ray.
pub fn k3_wall_rule(kind: K3Kind, ambient: &GramLattice, d: &[Int]) -> Result<bool> {
    if is_zero(d) {
        return Err(WallOracleError::Lattice(LatticeError::ZeroVector));
    }
    let p = primitive_part(d)?;
    let q = ambient.norm(&p)?;
    Ok(match kind {
        K3Kind::K3 => q == Int::from(-2),
        K3Kind::K3Two => {
            q == Int::from(-2)
                || (q == Int::from(-10) && ambient.divisibility(&p)? == Int::from(2))
        }
    })
}

/// Complete enumeration core: list the short vectors of the induced form at
/// the given norms, push them to ambient coordinates, keep those passing the
/// rule, and collapse to canonical rays.
fn enumerate_rays(
    pic: &PicardEmbedding,
    norms: &[Int],
    rule: impl Fn(&[Int]) -> Result<bool>,
) -> Result<Vec<Vec<Int>>> {
    let short = match lattice_core::enumerate::short_vectors(pic.induced(), norms) {
        Ok(v) => v,
        Err(LatticeError::NotNegativeDefinite) => {
            return Err(WallOracleError::NotNegativeDefinite)
        }
        Err(e) => return Err(WallOracleError::Lattice(e)),
    };
    let mut rays: BTreeSet<Vec<Int>> = BTreeSet::new();
    for coords in &short {
        let amb = pic.to_ambient(coords);
        let ray = canonical_ray(&primitive_part(&amb)?);
        if rays.contains(&ray) {
            continue;
        }
        if rule(&ray)? {
            rays.insert(ray);
        }
    }
    Ok(rays.into_iter().collect())
}

fn annotate(
    ambient: &GramLattice,
    rays: Vec<Vec<Int>>,
    classify: bool,
) -> Result<WallReport> {
    let mut walls = Vec::with_capacity(rays.len());
    for ray in rays {
        let q = ambient.norm(&ray)?;
        let div = ambient.divisibility(&ray)?;
        let case_id = if classify {
            Some(orbit_classifier::classify_lambda(&ray)?.case_id)
        } else {
            None
        };
        walls.push(WallEntry {
            coords: ray,
            q,
            div,
            case_id,
        });
    }
    Ok(WallReport {
        walls,
        complete: true,
    })
}

/// All wall rays of a negative definite Picard sublattice of `Λ`.
///
/// The enumeration is complete: every vector of the sublattice with square in
/// `{−2, −4, −6, −12}` is produced by exact short-vector enumeration, and the
/// membership rule filters them in ambient coordinates. Indefinite or
/// degenerate sublattices are refused ([`WallOracleError::NotNegativeDefinite`]);
/// test classes pointwise with [`is_wall`] in that situation.
pub fn walls_in_picard(pic: &PicardEmbedding) -> Result<WallReport> {
    let expected = lambda_cached();
    if pic.ambient().gram() != expected.gram() {
        return Err(WallOracleError::AmbientMismatch {
            expected: expected.name().to_string(),
            found: pic.ambient().name().to_string(),
        });
    }
    let norms: Vec<Int> = [-2i64, -4, -6, -12].iter().map(|&n| Int::from(n)).collect();
    let rays = enumerate_rays(pic, &norms, is_wall)?;
    annotate(pic.ambient(), rays, true)
}

/// All wall rays of a negative definite Picard sublattice of a K3-family
/// ambient lattice, under the rule for `kind`.
pub fn k3_family_walls(kind: K3Kind, pic: &PicardEmbedding) -> Result<WallReport> {
    let expected = match kind {
        K3Kind::K3 => lambda_k3(),
        K3Kind::K3Two => lambda_k3_two(),
    };
    if pic.ambient().gram() != expected.gram() {
        return Err(WallOracleError::AmbientMismatch {
            expected: expected.name().to_string(),
            found: pic.ambient().name().to_string(),
        });
    }
    let norms: Vec<Int> = match kind {
        K3Kind::K3 => vec![Int::from(-2)],
        K3Kind::K3Two => vec![Int::from(-2), Int::from(-10)],
    };
    let ambient = pic.ambient().clone();
    let rays = enumerate_rays(pic, &norms, |d| k3_wall_rule(kind, &ambient, d))?;
    annotate(pic.ambient(), rays, false)
}
