//! Exhaustive enumeration oracle.
//!
//! Walks the cells in column-major order and decides include/exclude for each,
//! rejecting a cell whose left or upper neighbour is already selected. Only
//! usable on small grids; the size guard is an explicit error.

use crate::counts::{Count, GridDims, RowTable};
use crate::error::{Error, Result};

pub const DEFAULT_MAX_CELLS: usize = 36;

/// Environment variable that overrides [`DEFAULT_MAX_CELLS`].
pub const MAX_CELLS_ENV: &str = "GRIDFREE_ORACLE_MAX_CELLS";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleConfig {
    pub max_cells: usize,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            max_cells: DEFAULT_MAX_CELLS,
        }
    }
}

impl OracleConfig {
    /// Default guard, overridden by `GRIDFREE_ORACLE_MAX_CELLS` when it parses.
    pub fn from_env() -> Self {
        std::env::var(MAX_CELLS_ENV)
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .map(|max_cells| OracleConfig { max_cells })
            .unwrap_or_default()
    }

    fn check(&self, dims: GridDims) -> Result<()> {
        if dims.cells() > self.max_cells {
            return Err(Error::OracleLimit {
                rows: dims.rows(),
                cols: dims.cols(),
                cells: dims.cells(),
                limit: self.max_cells,
            });
        }
        Ok(())
    }
}

struct Walker {
    rows: usize,
    cells: usize,
    taken: Vec<bool>,
}

impl Walker {
    fn new(dims: GridDims) -> Self {
        Walker {
            rows: dims.rows(),
            cells: dims.cells(),
            taken: vec![false; dims.cells()],
        }
    }

    // Cell i sits at row i % rows, column i / rows.
    fn can_take(&self, i: usize) -> bool {
        let up = !i.is_multiple_of(self.rows) && self.taken[i - 1];
        let left = i >= self.rows && self.taken[i - self.rows];
        !up && !left
    }

    fn histogram(&mut self, i: usize, size: usize, hist: &mut [u64]) {
        if i == self.cells {
            hist[size] += 1;
            return;
        }
        self.histogram(i + 1, size, hist);
        if self.can_take(i) {
            self.taken[i] = true;
            self.histogram(i + 1, size + 1, hist);
            self.taken[i] = false;
        }
    }

    fn exact(&mut self, i: usize, need: usize) -> u64 {
        if need == 0 {
            return 1;
        }
        // even taking every remaining cell falls short
        if self.cells - i < need {
            return 0;
        }
        let mut total = self.exact(i + 1, need);
        if self.can_take(i) {
            self.taken[i] = true;
            total += self.exact(i + 1, need - 1);
            self.taken[i] = false;
        }
        total
    }
}

/// Number of adjacency-free `k`-subsets of the grid, by exhaustive search.
pub fn brute_force_count(dims: GridDims, k: usize, config: &OracleConfig) -> Result<Count> {
    config.check(dims)?;
    Ok(Walker::new(dims).exact(0, k).into())
}

/// All counts for one grid, trimmed at the last nonzero `k`.
pub fn brute_force_row(dims: GridDims, config: &OracleConfig) -> Result<RowTable> {
    config.check(dims)?;
    let mut hist = vec![0u64; dims.cells() + 1];
    Walker::new(dims).histogram(0, 0, &mut hist);
    let counts = hist.into_iter().map(Count::from).collect();
    Ok(RowTable::new(dims.rows(), dims.cols(), counts))
}
