//! Cross-checks against external integer sequences, and the mod-p image.

mod bfile;
mod image;

pub use bfile::{parse_bfile, read_bfile, BFile};
pub use image::{emit_mod_image, gray_level, render_mod_image, TriangleImage, BACKGROUND};

use num_bigint::BigInt;

use crate::counts::Count;
use crate::error::{Error, Result};
use crate::report::VerificationReport;
use crate::transfer::dp_rows_upto;

/// Rows `0..=n_max` of the `m x n` table read left to right, top to bottom,
/// each row stopping at its last nonzero entry.
pub fn flatten_triangle(m: usize, n_max: usize) -> Vec<Count> {
    dp_rows_upto(m, n_max)
        .into_iter()
        .flat_map(|row| row.into_counts())
        .collect()
}

/// Element-wise comparison; `computed[i]` is matched with the reference term
/// at index `offset + i`.
pub fn compare_sequence(
    name: &str,
    computed: &[BigInt],
    reference: &BFile,
    offset: i64,
) -> Result<VerificationReport> {
    let available = match reference.first_index() {
        Some(first) if offset >= first => {
            usize::try_from(first + reference.len() as i64 - offset).unwrap_or(0)
        }
        _ => 0,
    };
    if available < computed.len() {
        return Err(Error::ReferenceTooShort {
            name: if reference.sequence_id.is_empty() {
                name.to_string()
            } else {
                reference.sequence_id.clone()
            },
            available,
            needed: computed.len(),
        });
    }
    let id = if reference.sequence_id.is_empty() {
        "reference"
    } else {
        reference.sequence_id.as_str()
    };
    let mut report = VerificationReport::new(
        format!("{name} vs {id}"),
        format!("{} terms from index {offset}", computed.len()),
    );
    for (i, value) in computed.iter().enumerate() {
        let index = offset + i as i64;
        let expected = reference.get(index).expect("covered").clone();
        report.check(format!("index {index}"), expected, value.clone());
    }
    Ok(report)
}
