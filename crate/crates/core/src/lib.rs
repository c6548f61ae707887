//! Exact counts of adjacency-free selections on rectangular grids.
//!
//! `T(m,n;k)` is the number of ways to pick `k` squares of an `m x n` grid so
//! that no two picked squares share an edge. The production path is the
//! column transfer DP in [`transfer`]; [`brute`] is an exhaustive oracle and
//! [`recurrences`] an independent refinement by last-column contents. The
//! [`two_row`] and [`three_row`] modules hold closed forms, identities and
//! polynomial-column results, each with a sweep that returns a
//! [`VerificationReport`].

pub mod binomial;
pub mod brute;
pub mod counts;
pub mod error;
pub mod poly;
pub mod recurrences;
pub mod report;
pub mod sequence_io;
pub mod three_row;
pub mod transfer;
pub mod two_row;

pub use brute::{brute_force_count, brute_force_row, OracleConfig};
pub use counts::{validate_selection, Count, GridDims, RowTable, Selection};
pub use error::{Error, Result};
pub use poly::{Polynomial, Rational};
pub use report::{Failure, VerificationReport};
pub use transfer::{column_states, dp_cell, dp_row, dp_rows_upto, ColumnMask};
