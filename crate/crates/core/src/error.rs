use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("grid must have at least one row")]
    EmptyRows,

    #[error("{rows}x{cols} grid has {cells} cells, over the brute-force limit of {limit}")]
    OracleLimit {
        rows: usize,
        cols: usize,
        cells: usize,
        limit: usize,
    },

    #[error("parameter out of range: {0}")]
    OutOfRange(String),

    #[error("hypergeometric evaluation for n={n}, k={k} produced non-integer {value}")]
    NonIntegral { n: usize, k: usize, value: String },

    #[error("interpolation nodes are not distinct")]
    DegenerateNodes,

    #[error("{name}: fitted degree {found:?}, expected {expected}")]
    DegreeMismatch {
        name: String,
        expected: i64,
        found: i64,
    },

    #[error("{name}: fitted polynomial misses the check node n={node}")]
    FitCheck { name: String, node: usize },

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("line {line}: index {found} follows {previous}, expected {expected}")]
    IndexGap {
        line: usize,
        previous: i64,
        expected: i64,
        found: i64,
    },

    #[error("reference {name} covers {available} terms from the alignment offset, need {needed}")]
    ReferenceTooShort {
        name: String,
        available: usize,
        needed: usize,
    },

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}
