use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "gridfree",
    version,
    about = "Exact counts of adjacency-free selections on m x n grids",
    after_help = "Reference b-files: https://oeis.org/A035607/b035607.txt, \
                  https://oeis.org/A110110/b110110.txt, https://oeis.org/A006318/b006318.txt \
                  (download them and pass the local path to `oeis-check --bfile`)."
)]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Plain)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Plain,
    Csv,
    JsonLines,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// One count T(m,n;k).
    Cell {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
    /// All nonzero counts T(m,n;k) for one grid.
    Row {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
    },
    /// Rows n = 0 .. rows-1 of the T(m,n;k) table.
    Table {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        rows: usize,
    },
    /// Exact polynomial in n for a fixed column k (m = 2 or 3).
    Poly {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        k: usize,
        /// For m = 3 also print b_k, c_k and d_k.
        #[arg(long)]
        all: bool,
    },
    /// Run a verification suite.
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        /// Sweep bound; its meaning and default depend on the suite.
        #[arg(long)]
        max: Option<usize>,
    },
    /// Compare computed sequences with a local OEIS b-file.
    OeisCheck {
        #[arg(long)]
        bfile: PathBuf,
        #[arg(long, value_enum)]
        target: Target,
        /// Rows (triangles, row maxima) or k (schroeder) to compare; defaults
        /// to as many as the b-file covers.
        #[arg(long)]
        max: Option<usize>,
    },
    /// Write the 2xn table reduced mod p as a binary graymap.
    Image {
        #[arg(long)]
        rows: usize,
        #[arg(long = "mod")]
        modulus: u64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Transfer DP against brute force on every grid with at most C cells.
    OracleCheck {
        #[arg(long, default_value_t = 24)]
        max_cells: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    /// Pascal-style identity, n <= max (default 100).
    Pascal,
    /// Hockeystick identity, n <= max (default 100).
    Hockeystick,
    /// Unimodal 2xn rows, n <= max (default 100).
    Unimodal,
    /// Delta lemmas and the peak inequalities, k <= max (default 50).
    Delta,
    /// Row-maximum identities (1)-(3), k <= max (default 50).
    Section4,
    /// EXPERIMENTAL conjecture on odd-row differences, k <= max (default 50).
    C1,
    /// EXPERIMENTAL Schroeder match against the built-in prefix, k <= max (default 20).
    Schroeder,
    /// Nonzero regions for m = 2, 3 and checkerboard witnesses, n <= max (default 100).
    Boundary,
    /// 2xn polynomial columns, k <= max (default 15).
    Poly2,
    /// 3xn polynomial families and leading coefficients, k <= max (default 15).
    Coeffs3,
    /// First-difference lemma for p_k, k <= max (default 10).
    Firstdiff,
    /// EXPERIMENTAL p_k(k-1) = T(3,k-1;k), k <= max (default 12).
    Remark3,
    /// EXPERIMENTAL unimodal 3xn rows, n <= max (default 100).
    Unimodal3,
    /// Transfer DP against brute force, cells <= max (default 24).
    Oracle,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Target {
    /// 2xn table read row by row (A035607).
    Triangle2,
    /// 3xn table read row by row.
    Triangle3,
    /// Row maxima of the 2xn table (A110110).
    Rowmax2,
    /// Row-maximum differences against large Schroeder numbers (A006318).
    Schroeder,
}
