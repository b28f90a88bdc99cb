//! Action of isometries on the discriminant group.

use crate::error::EngineError;
use crate::isometry::Isometry;
use crate::Result;
use lattice_core::disc::DiscriminantGroup;
use lattice_core::rational::{sub_rat, to_int_vec};

/// Whether the isometry acts as the identity on the discriminant group.
///
/// It suffices to test the generators: for each generator lift `ℓ`, the
/// action is trivial on that generator iff `φ(ℓ) − ℓ` lands in the lattice.
pub fn disc_action_is_trivial(disc: &DiscriminantGroup, iso: &Isometry) -> Result<bool> {
    for k in 0..disc.num_generators() {
        let lift = disc.generator_lift(k);
        let image = iso.apply_rational(lift);
        let diff = sub_rat(&image, lift);
        if to_int_vec(&diff).is_none() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The permutation induced by `iso` on the enumerated discriminant group.
///
/// Entry `i` of the result is the index of the image of the `i`-th element in
/// the enumeration order of `disc`. Errors when the group is too large to
/// enumerate.
pub fn induced_disc_action(disc: &DiscriminantGroup, iso: &Isometry) -> Result<Vec<usize>> {
    let elements = disc.enumerate().map_err(EngineError::Lattice)?;
    let mut perm = Vec::with_capacity(elements.len());
    for e in &elements {
        let lift = disc.canonical_fractional_lift(e);
        let image = iso.apply_rational(&lift);
        let residue = disc
            .residue_of_rational(&image)
            .map_err(EngineError::Lattice)?;
        perm.push(disc.index_of(&residue) as usize);
    }
    Ok(perm)
}
