//! Loader for Picard-basis files.
//!
//! A Picard file is a JSON object with two keys:
//!
//! ```json
//! {"ambient":"Lambda","basis":[[0,...,1,0],[0,...,0,1]]}
//! ```
//!
//! * `ambient` — a lattice name accepted by the standard registry
//!   (`Lambda`, `K3`, `K3[2]`, ...);
//! * `basis` — a list of coordinate vectors, one per row, each of the
//!   ambient rank.
//!
//! Only the file shape is validated here; saturation, independence, and
//! definiteness of the spanned sublattice are checked by the wall oracle
//! when the embedding is constructed.

use std::path::Path;

use lattice_core::standard::make_standard;
use lattice_core::{GramLattice, Int};

use crate::error::CliError;

/// A parsed Picard file: the resolved ambient lattice and the basis rows.
#[derive(Debug)]
pub struct PicFile {
    /// The ambient lattice named in the file.
    pub ambient: GramLattice,
    /// Basis rows in ambient coordinates.
    pub basis: Vec<Vec<Int>>,
}

/// Read and validate the shape of a Picard file.
pub fn load_pic(path: &Path) -> Result<PicFile, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| {
        CliError::Precondition(format!("cannot read {}: {e}", path.display()))
    })?;
    let value: serde_json::Value = serde_json::from_str(&text).map_err(|e| {
        CliError::Precondition(format!("{} is not valid JSON: {e}", path.display()))
    })?;
    let obj = value
        .as_object()
        .ok_or_else(|| bad_shape(path, "top level must be an object"))?;

    let ambient_name = obj
        .get("ambient")
        .and_then(|v| v.as_str())
        .ok_or_else(|| bad_shape(path, "missing string field \"ambient\""))?;
    let ambient = make_standard(ambient_name)?;

    let rows = obj
        .get("basis")
        .and_then(|v| v.as_array())
        .ok_or_else(|| bad_shape(path, "missing array field \"basis\""))?;
    let mut basis = Vec::with_capacity(rows.len());
    for (k, row) in rows.iter().enumerate() {
        let entries = row
            .as_array()
            .ok_or_else(|| bad_shape(path, &format!("basis row {k} is not an array")))?;
        if entries.len() != ambient.rank() {
            return Err(bad_shape(
                path,
                &format!(
                    "basis row {k} has {} entries, ambient rank is {}",
                    entries.len(),
                    ambient.rank()
                ),
            ));
        }
        let mut coords = Vec::with_capacity(entries.len());
        for (j, entry) in entries.iter().enumerate() {
            let n = entry.as_i64().ok_or_else(|| {
                bad_shape(path, &format!("basis entry ({k},{j}) is not an integer"))
            })?;
            coords.push(Int::from(n));
        }
        basis.push(coords);
    }
    Ok(PicFile { ambient, basis })
}

fn bad_shape(path: &Path, detail: &str) -> CliError {
    CliError::Precondition(format!("{}: {detail}", path.display()))
}
