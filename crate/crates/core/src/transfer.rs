//! Column-by-column transfer DP.
//!
//! A state is the set of selected rows in the current column. Two consecutive
//! columns are compatible when their masks are disjoint, and each state keeps
//! a count per selection size `k`.

use num_traits::Zero;

use crate::counts::{Count, GridDims, RowTable};

/// Widest column the mask encoding supports. Well beyond what the quadratic
/// transition cost makes practical.
pub const MAX_MASK_ROWS: usize = 30;

/// Selected rows of one column, bit `i` for row `i`. Never has two adjacent bits.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColumnMask(u32);

impl ColumnMask {
    /// `None` if two consecutive rows are set.
    pub fn new(bits: u32) -> Option<Self> {
        (bits & (bits >> 1) == 0).then_some(ColumnMask(bits))
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    pub fn popcount(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_disjoint(self, other: ColumnMask) -> bool {
        self.0 & other.0 == 0
    }

    pub fn contains(self, row: usize) -> bool {
        row < 32 && self.0 & (1 << row) != 0
    }

    pub fn rows(self) -> impl Iterator<Item = usize> {
        (0..32).filter(move |&r| self.0 & (1 << r) != 0)
    }
}

/// All vertical-adjacency-free masks for an `m`-row column, ascending by bit
/// value. There are `Fibonacci(m + 2)` of them.
pub fn column_states(m: usize) -> Vec<ColumnMask> {
    assert!((1..=MAX_MASK_ROWS).contains(&m), "column height {m} out of range");
    (0u32..1 << m).filter_map(ColumnMask::new).collect()
}

/// Column states plus, for each state, the indices of the states that may
/// precede it.
#[derive(Debug, Clone)]
pub struct TransferTable {
    states: Vec<ColumnMask>,
    predecessors: Vec<Vec<usize>>,
}

impl TransferTable {
    pub fn new(m: usize) -> Self {
        let states = column_states(m);
        let predecessors = states
            .iter()
            .map(|&cur| {
                states
                    .iter()
                    .enumerate()
                    .filter(|(_, &prev)| prev.is_disjoint(cur))
                    .map(|(i, _)| i)
                    .collect()
            })
            .collect();
        TransferTable {
            states,
            predecessors,
        }
    }

    pub fn states(&self) -> &[ColumnMask] {
        &self.states
    }

    fn empty_index(&self) -> usize {
        0
    }
}

fn add_shifted(acc: &mut Vec<Count>, src: &[Count], shift: usize) {
    if acc.len() < src.len() + shift {
        acc.resize(src.len() + shift, Count::zero());
    }
    for (k, c) in src.iter().enumerate() {
        if !c.is_zero() {
            acc[k + shift] += c;
        }
    }
}

/// Sweeps an `m`-row grid column by column, calling `visit(n, per_state)` after
/// each column `n = 0, 1, ..., n_max`. Column 0 is the empty grid.
fn sweep(m: usize, n_max: usize, mut visit: impl FnMut(usize, &[Vec<Count>])) {
    let table = TransferTable::new(m);
    let mut cur: Vec<Vec<Count>> = vec![Vec::new(); table.states.len()];
    cur[table.empty_index()] = vec![Count::from(1u32)];
    visit(0, &cur);
    for n in 1..=n_max {
        let next = table
            .states
            .iter()
            .zip(&table.predecessors)
            .map(|(mask, preds)| {
                let mut acc = Vec::new();
                for &p in preds {
                    add_shifted(&mut acc, &cur[p], mask.popcount());
                }
                acc
            })
            .collect();
        cur = next;
        visit(n, &cur);
    }
}

fn collapse(m: usize, n: usize, per_state: &[Vec<Count>]) -> RowTable {
    let mut total = Vec::new();
    for v in per_state {
        add_shifted(&mut total, v, 0);
    }
    RowTable::new(m, n, total)
}

/// `T(m,n;k)` for every `k`. Sweeps along the longer side so the state count
/// depends on `min(m, n)`.
pub fn dp_row(m: usize, n: usize) -> RowTable {
    assert!(m >= 1, "grid needs at least one row");
    if n == 0 {
        return RowTable::new(m, 0, vec![Count::from(1u32)]);
    }
    let (height, length) = if m <= n { (m, n) } else { (n, m) };
    let mut last = Vec::new();
    sweep(height, length, |col, per_state| {
        if col == length {
            last = per_state.to_vec();
        }
    });
    let row = collapse(height, length, &last);
    RowTable::new(m, n, row.into_counts())
}

/// Rows `T(m,0;·), T(m,1;·), ..., T(m,n_max;·)` from a single sweep.
pub fn dp_rows_upto(m: usize, n_max: usize) -> Vec<RowTable> {
    let mut rows = Vec::with_capacity(n_max + 1);
    sweep(m, n_max, |n, per_state| rows.push(collapse(m, n, per_state)));
    rows
}

/// `T(m,n;k)`, returning zero without running the DP when `k` exceeds
/// `ceil(m n / 2)`, the largest independent set of the grid.
pub fn dp_cell(m: usize, n: usize, k: usize) -> Count {
    let dims = GridDims::new(m, n).expect("grid needs at least one row");
    if k > dims.max_selection() {
        return Count::zero();
    }
    dp_row(m, n).get(k)
}

/// Total number of adjacency-free selections of any size, by a DP that does
/// not track `k`.
pub fn independent_set_total(m: usize, n: usize) -> Count {
    let table = TransferTable::new(m);
    let mut cur = vec![Count::zero(); table.states.len()];
    cur[table.empty_index()] = Count::from(1u32);
    for _ in 0..n {
        cur = table
            .predecessors
            .iter()
            .map(|preds| preds.iter().map(|&p| &cur[p]).sum())
            .collect();
    }
    cur.into_iter().sum()
}

/// Rows of `T(m,n;k) mod modulus` for `n = 0..=n_max`, computed entirely in
/// machine integers. Each row has length `ceil(m n / 2) + 1`.
pub fn dp_rows_mod(m: usize, n_max: usize, modulus: u64) -> Vec<Vec<u64>> {
    assert!(modulus >= 2, "modulus must be at least 2");
    let table = TransferTable::new(m);
    let mut cur: Vec<Vec<u64>> = vec![Vec::new(); table.states.len()];
    cur[table.empty_index()] = vec![1 % modulus];
    let collapse_mod = |per_state: &[Vec<u64>], n: usize| {
        let mut total = vec![0u64; (m * n).div_ceil(2) + 1];
        for v in per_state {
            for (k, &c) in v.iter().enumerate() {
                total[k] = (total[k] + c) % modulus;
            }
        }
        total
    };
    let mut rows = vec![collapse_mod(&cur, 0)];
    for n in 1..=n_max {
        let next = table
            .states
            .iter()
            .zip(&table.predecessors)
            .map(|(mask, preds)| {
                let shift = mask.popcount();
                let mut acc: Vec<u64> = Vec::new();
                for &p in preds {
                    if acc.len() < cur[p].len() + shift {
                        acc.resize(cur[p].len() + shift, 0);
                    }
                    for (k, &c) in cur[p].iter().enumerate() {
                        acc[k + shift] = (acc[k + shift] + c) % modulus;
                    }
                }
                acc
            })
            .collect();
        cur = next;
        rows.push(collapse_mod(&cur, n));
    }
    rows
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bits(states: &[ColumnMask]) -> Vec<u32> {
        states.iter().map(|s| s.bits()).collect()
    }

    fn small(row: &RowTable) -> Vec<u64> {
        row.counts().iter().map(|c| c.try_into().unwrap()).collect()
    }

    #[test]
    fn column_states_small() {
        assert_eq!(bits(&column_states(1)), [0, 1]);
        assert_eq!(bits(&column_states(2)), [0, 1, 2]);
        assert_eq!(bits(&column_states(3)), [0, 1, 2, 4, 5]);
    }

    #[test]
    fn column_states_are_fibonacci() {
        let mut fib = vec![0usize, 1];
        while fib.len() < 20 {
            fib.push(fib[fib.len() - 1] + fib[fib.len() - 2]);
        }
        for m in 1..=16 {
            assert_eq!(column_states(m).len(), fib[m + 2], "m={m}");
        }
    }

    #[test]
    fn mask_rejects_vertical_adjacency() {
        assert!(ColumnMask::new(0b11).is_none());
        assert!(ColumnMask::new(0b101).is_some());
        let m = ColumnMask::new(0b101).unwrap();
        assert_eq!(m.rows().collect::<Vec<_>>(), [0, 2]);
        assert!(m.contains(2) && !m.contains(1));
    }

    #[test]
    fn published_rows() {
        assert_eq!(small(&dp_row(2, 6)), [1, 12, 50, 88, 66, 20, 2]);
        assert_eq!(small(&dp_row(3, 5)), [1, 15, 83, 215, 276, 174, 53, 9, 1]);
        // naive subset filter, see tests/oracle.rs
        assert_eq!(small(&dp_row(4, 5)), [1, 20, 159, 652, 1502, 1998, 1537, 678, 170, 24, 2]);
        assert_eq!(small(&dp_row(5, 4)), [1, 20, 159, 652, 1502, 1998, 1537, 678, 170, 24, 2]);
        assert_eq!(small(&dp_row(7, 0)), [1]);
    }

    #[test]
    fn cells() {
        assert_eq!(dp_cell(2, 5, 3), Count::from(38u32));
        assert_eq!(dp_cell(3, 4, 2), Count::from(49u32));
        assert_eq!(dp_cell(2, 7, 9), Count::zero());
        assert_eq!(dp_cell(3, 5, 6), Count::from(53u32));
    }

    #[test]
    fn prefix_rows_match_single_rows() {
        for (n, row) in dp_rows_upto(3, 12).iter().enumerate() {
            assert_eq!(row, &dp_row(3, n));
        }
    }

    #[test]
    fn totals_match_row_sums() {
        for m in 1..=4 {
            for n in 0..=8 {
                assert_eq!(independent_set_total(m, n), dp_row(m, n).total(), "{m}x{n}");
            }
        }
        // 1xn paths give Fibonacci numbers
        assert_eq!(independent_set_total(1, 10), Count::from(144u32));
    }

    #[test]
    fn modular_rows_agree() {
        let full = dp_rows_upto(2, 64);
        for modulus in [2u64, 3, 5, 7] {
            let reduced = dp_rows_mod(2, 64, modulus);
            for (row, red) in full.iter().zip(&reduced) {
                for (k, &r) in red.iter().enumerate() {
                    assert_eq!(Count::from(r), row.get(k) % modulus);
                }
            }
        }
    }
}
