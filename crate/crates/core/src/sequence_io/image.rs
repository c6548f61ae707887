//! The 2xn table reduced mod `p`, as a binary portable graymap.
//!
//! Row `n` of the table is image row `y = n`, entry `k` is column `x = k`.
//! Residue `r` maps to gray `round(255 (1 - r/(p-1)))`, so for `p = 3`:
//! 0 is white, 1 is 128, 2 is black. Cells with `k > n` are white background.

use std::path::Path;

use crate::error::{Error, Result};
use crate::transfer::dp_rows_mod;

pub const BACKGROUND: u8 = 255;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriangleImage {
    pub modulus: u64,
    pub rows: usize,
    /// Row-major `rows x rows` gray levels.
    pub pixels: Vec<u8>,
    residues: Vec<Option<u64>>,
}

/// Gray level for residue `r`, rounding halves up.
pub fn gray_level(residue: u64, modulus: u64) -> u8 {
    let top = (modulus - 1) as u128;
    let r = residue as u128;
    ((2 * 255 * (top - r) + top) / (2 * top)) as u8
}

impl TriangleImage {
    pub fn pixel(&self, k: usize, n: usize) -> u8 {
        self.pixels[n * self.rows + k]
    }

    /// `T(2,n;k) mod p`, or `None` for background cells.
    pub fn residue(&self, k: usize, n: usize) -> Option<u64> {
        self.residues[n * self.rows + k]
    }

    pub fn to_pgm(&self) -> Vec<u8> {
        let mut out = format!("P5\n{} {}\n255\n", self.rows, self.rows).into_bytes();
        out.extend_from_slice(&self.pixels);
        out
    }
}

/// Computes the image for rows `0..rows` without touching the disk.
pub fn render_mod_image(rows: usize, modulus: u64) -> Result<TriangleImage> {
    if rows == 0 {
        return Err(Error::OutOfRange("image needs at least one row".into()));
    }
    if modulus < 2 {
        return Err(Error::OutOfRange(format!("modulus must be at least 2, got {modulus}")));
    }
    let table = dp_rows_mod(2, rows - 1, modulus);
    let mut pixels = vec![BACKGROUND; rows * rows];
    let mut residues = vec![None; rows * rows];
    for (n, row) in table.iter().enumerate() {
        for k in 0..=n {
            let r = row[k];
            pixels[n * rows + k] = gray_level(r, modulus);
            residues[n * rows + k] = Some(r);
        }
    }
    Ok(TriangleImage {
        modulus,
        rows,
        pixels,
        residues,
    })
}

/// Renders the image and writes it to `out_path`.
pub fn emit_mod_image(rows: usize, modulus: u64, out_path: &Path) -> Result<TriangleImage> {
    let image = render_mod_image(rows, modulus)?;
    std::fs::write(out_path, image.to_pgm()).map_err(|source| Error::Io {
        path: out_path.to_path_buf(),
        source,
    })?;
    Ok(image)
}
