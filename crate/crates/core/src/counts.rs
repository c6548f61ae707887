//! Shared domain types: grid shapes, count rows, and concrete selections.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// An exact count `T(m,n;k)` or one of the auxiliary counts. Always nonnegative.
pub type Count = BigUint;

/// Shape of an `rows x cols` grid; a grid with zero columns is allowed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GridDims {
    rows: usize,
    cols: usize,
}

impl GridDims {
    pub fn new(rows: usize, cols: usize) -> Result<Self> {
        if rows == 0 {
            return Err(Error::EmptyRows);
        }
        Ok(GridDims { rows, cols })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn cells(&self) -> usize {
        self.rows * self.cols
    }

    /// Swaps rows and columns. `None` when the grid has no columns, since the
    /// transpose would have no rows.
    pub fn transpose(&self) -> Option<Self> {
        GridDims::new(self.cols, self.rows).ok()
    }

    /// Largest possible selection size, `ceil(rows * cols / 2)`.
    pub fn max_selection(&self) -> usize {
        self.cells().div_ceil(2)
    }
}

impl fmt::Display for GridDims {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{}", self.rows, self.cols)
    }
}

/// The counts `T(m,n;k)` for one `(m,n)`, indexed by `k`, trimmed at the last
/// nonzero entry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RowTable {
    m: usize,
    n: usize,
    counts: Vec<Count>,
}

impl RowTable {
    /// Builds a row, dropping trailing zeros. The `k = 0` entry must be 1.
    pub fn new(m: usize, n: usize, mut counts: Vec<Count>) -> Self {
        while counts.len() > 1 && counts.last().is_some_and(Zero::is_zero) {
            counts.pop();
        }
        debug_assert!(counts.first().is_some_and(One::is_one), "T(m,n;0) must be 1");
        RowTable { m, n, counts }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn counts(&self) -> &[Count] {
        &self.counts
    }

    pub fn into_counts(self) -> Vec<Count> {
        self.counts
    }

    /// Last `k` with a nonzero count.
    pub fn k_max(&self) -> usize {
        self.counts.len() - 1
    }

    /// `T(m,n;k)`; zero past the nonzero extent.
    pub fn get(&self, k: usize) -> Count {
        self.counts.get(k).cloned().unwrap_or_default()
    }

    pub fn total(&self) -> Count {
        self.counts.iter().sum()
    }

    /// Index of the largest entry; the first one if there are ties.
    pub fn argmax(&self) -> usize {
        let mut best = 0;
        for (k, c) in self.counts.iter().enumerate() {
            if *c > self.counts[best] {
                best = k;
            }
        }
        best
    }
}

/// A concrete set of selected cells, as 0-based `(row, col)` pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Selection {
    pub dims: GridDims,
    pub cells: BTreeSet<(usize, usize)>,
}

impl Selection {
    pub fn new(dims: GridDims, cells: impl IntoIterator<Item = (usize, usize)>) -> Self {
        Selection {
            dims,
            cells: cells.into_iter().collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }
}

/// True iff every cell is inside the grid and no two cells share an edge.
pub fn validate_selection(sel: &Selection) -> bool {
    let (rows, cols) = (sel.dims.rows(), sel.dims.cols());
    sel.cells.iter().all(|&(r, c)| {
        r < rows
            && c < cols
            && !sel.cells.contains(&(r + 1, c))
            && !sel.cells.contains(&(r, c + 1))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dims(m: usize, n: usize) -> GridDims {
        GridDims::new(m, n).unwrap()
    }

    #[test]
    fn zero_rows_rejected() {
        assert!(matches!(GridDims::new(0, 3), Err(Error::EmptyRows)));
        assert!(GridDims::new(2, 0).is_ok());
        assert_eq!(dims(3, 0).transpose(), None);
    }

    #[test]
    fn row_table_trims_trailing_zeros() {
        let row = RowTable::new(2, 1, vec![1u32.into(), 2u32.into(), 0u32.into()]);
        assert_eq!(row.k_max(), 1);
        assert_eq!(row.get(5), Count::zero());
        assert_eq!(row.total(), Count::from(3u32));
    }

    #[test]
    fn figure_one_pattern_is_valid() {
        // six squares on 3x5, two per column in the outer columns
        let sel = Selection::new(
            dims(3, 5),
            [(0, 0), (2, 0), (1, 1), (0, 2), (2, 3), (0, 4)],
        );
        assert_eq!(sel.len(), 6);
        assert!(validate_selection(&sel));
    }

    #[test]
    fn empty_selection_is_valid() {
        assert!(validate_selection(&Selection::new(dims(4, 4), [])));
        assert!(validate_selection(&Selection::new(dims(1, 0), [])));
    }

    #[test]
    fn adjacency_rejected() {
        assert!(!validate_selection(&Selection::new(dims(2, 2), [(0, 0), (0, 1)])));
        assert!(!validate_selection(&Selection::new(dims(2, 2), [(0, 1), (1, 1)])));
        assert!(validate_selection(&Selection::new(dims(2, 2), [(0, 0), (1, 1)])));
    }

    #[test]
    fn out_of_range_rejected() {
        assert!(!validate_selection(&Selection::new(dims(2, 2), [(2, 0)])));
        assert!(!validate_selection(&Selection::new(dims(2, 2), [(0, 2)])));
    }
}
