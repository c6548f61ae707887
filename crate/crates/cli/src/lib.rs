//! `gridfree` command-line front end. [`run`] is the whole program minus the
//! process exit, so it can be driven in-process by tests.

mod args;
mod output;
mod suites;

use std::ffi::OsString;
use std::io::Write;

use clap::error::ErrorKind;
use clap::Parser;

use gridfree_core::brute::{brute_force_row, OracleConfig};
use gridfree_core::sequence_io::{compare_sequence, emit_mod_image, flatten_triangle, read_bfile};
use gridfree_core::three_row::fit_poly_family;
use gridfree_core::transfer::{dp_cell, dp_row, dp_rows_upto, MAX_MASK_ROWS};
use gridfree_core::two_row::{check_schroeder_differences, poly2, row_max_sequence};
use gridfree_core::{Count, GridDims, VerificationReport};
use num_bigint::BigInt;

pub use args::{Cli, Command, Format, Suite, Target};
use output::Printer;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug)]
enum CliError {
    Usage(String),
    Core(gridfree_core::Error),
    Io(std::io::Error),
}

impl From<gridfree_core::Error> for CliError {
    fn from(e: gridfree_core::Error) -> Self {
        CliError::Core(e)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        CliError::Io(e.into())
    }
}

type CliResult<T> = Result<T, CliError>;

fn usage<T>(msg: impl Into<String>) -> CliResult<T> {
    Err(CliError::Usage(msg.into()))
}

/// Parses `args` (including the program name) and runs the command. Returns
/// the process exit code: 0 on success, 1 when a verification fails, 2 on a
/// usage or file error.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{text}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{text}");
                    EXIT_USAGE
                }
            };
        }
    };
    match execute(cli, out) {
        Ok(true) => EXIT_OK,
        Ok(false) => EXIT_VERIFY_FAILED,
        Err(CliError::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(CliError::Core(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
        Err(CliError::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn check_grid(m: usize, n: usize) -> CliResult<()> {
    if m == 0 {
        return usage("--m must be at least 1");
    }
    if m.min(n) > MAX_MASK_ROWS {
        return usage(format!("the shorter side of the grid must be at most {MAX_MASK_ROWS}"));
    }
    Ok(())
}

fn check_m23(m: usize) -> CliResult<()> {
    if m == 2 || m == 3 {
        Ok(())
    } else {
        usage(format!("--m must be 2 or 3, got {m}"))
    }
}

/// Runs one command; `Ok(false)` means a verification failed.
fn execute(cli: Cli, out: &mut dyn Write) -> CliResult<bool> {
    let mut p = Printer::new(cli.format, out);
    match cli.command {
        Command::Cell { m, n, k } => {
            check_grid(m, n)?;
            p.cell(m, n, k, &dp_cell(m, n, k))?;
            Ok(true)
        }
        Command::Row { m, n } => {
            check_grid(m, n)?;
            p.rows(&[dp_row(m, n)], false)?;
            Ok(true)
        }
        Command::Table { m, rows } => {
            if rows == 0 {
                return usage("--rows must be at least 1");
            }
            check_grid(m, 0)?;
            if m > MAX_MASK_ROWS {
                return usage(format!("--m must be at most {MAX_MASK_ROWS}"));
            }
            p.rows(&dp_rows_upto(m, rows - 1), true)?;
            Ok(true)
        }
        Command::Poly { m, k, all } => {
            check_m23(m)?;
            if k == 0 {
                return usage("--k must be at least 1");
            }
            if m == 2 {
                p.polys(m, k, &[("p", poly2(k)?)])?;
            } else {
                let fam = fit_poly_family(k)?;
                if all {
                    p.polys(m, k, &[("p", fam.p), ("b", fam.b), ("c", fam.c), ("d", fam.d)])?;
                } else {
                    p.polys(m, k, &[("p", fam.p)])?;
                }
            }
            Ok(true)
        }
        Command::Verify { suite, max } => {
            let reports = suites::run_suite(suite, max)?;
            p.reports(&reports)?;
            Ok(reports.iter().all(VerificationReport::passed))
        }
        Command::OeisCheck { bfile, target, max } => {
            let report = oeis_check(&bfile, target, max)?;
            p.reports(std::slice::from_ref(&report))?;
            Ok(report.passed())
        }
        Command::Image { rows, modulus, out } => {
            if rows == 0 {
                return usage("--rows must be at least 1");
            }
            if modulus < 2 {
                return usage("--mod must be at least 2");
            }
            let image = emit_mod_image(rows, modulus, &out)?;
            p.image(&out, &image)?;
            Ok(true)
        }
        Command::OracleCheck { max_cells } => {
            let report = oracle_check(max_cells)?;
            p.reports(std::slice::from_ref(&report))?;
            Ok(report.passed())
        }
    }
}

/// Transfer DP against brute force for every `m x n` with `m n <= max_cells`.
pub(crate) fn oracle_check(max_cells: usize) -> CliResult<VerificationReport> {
    let config = OracleConfig::from_env();
    if max_cells > config.max_cells {
        return usage(format!(
            "--max-cells {max_cells} exceeds the brute-force guard {} (raise it with {})",
            config.max_cells,
            gridfree_core::brute::MAX_CELLS_ENV
        ));
    }
    let mut report = VerificationReport::new(
        "transfer DP equals brute force",
        format!("all m x n with 1 <= m, m n <= {max_cells}"),
    );
    for m in 1..=max_cells.max(1) {
        for n in 0..=max_cells / m {
            let dims = GridDims::new(m, n)?;
            let brute = brute_force_row(dims, &config)?;
            let dp = dp_row(m, n);
            for k in 0..=brute.k_max().max(dp.k_max()) {
                report.check(format!("m={m}, n={n}, k={k}"), brute.get(k), dp.get(k));
            }
        }
    }
    Ok(report)
}

fn to_ints(v: Vec<Count>) -> Vec<BigInt> {
    v.into_iter().map(BigInt::from).collect()
}

fn oeis_check(path: &std::path::Path, target: Target, max: Option<usize>) -> CliResult<VerificationReport> {
    let bfile = read_bfile(path)?;
    let Some(first) = bfile.first_index() else {
        return usage(format!("{} has no entries", path.display()));
    };
    let len = bfile.len();
    let report = match target {
        Target::Triangle2 | Target::Triangle3 => {
            let m = if target == Target::Triangle2 { 2 } else { 3 };
            let row_len = |n: usize| gridfree_core::GridDims::new(m, n).map(|d| d.max_selection() + 1);
            let n_max = match max {
                Some(r) => r,
                None => {
                    // whole rows that fit in the reference
                    let (mut n, mut used) = (0usize, 0usize);
                    loop {
                        let next = used + row_len(n)?;
                        if next > len {
                            break;
                        }
                        used = next;
                        n += 1;
                    }
                    if n == 0 {
                        return usage("b-file is shorter than the first table row");
                    }
                    n - 1
                }
            };
            let flat = to_ints(flatten_triangle(m, n_max));
            compare_sequence(&format!("{m}xn table rows 0..={n_max} read row by row"), &flat, &bfile, first)?
        }
        Target::Rowmax2 => {
            let n_max = max.unwrap_or(len - 1);
            let maxima = to_ints(row_max_sequence(n_max));
            compare_sequence(&format!("2xn row maxima, n <= {n_max}"), &maxima, &bfile, first)?
        }
        Target::Schroeder => {
            let last = first + len as i64 - 1;
            let k_max = match max {
                Some(k) => k,
                None if last >= 1 => last as usize,
                None => return usage("b-file does not reach index 1"),
            };
            if first > 1 {
                return usage("b-file must start at index 0 or 1");
            }
            // index 0 is never compared
            let mut reference = Vec::with_capacity(k_max + 1);
            for k in 0..=k_max.min(last.max(0) as usize) {
                let value = bfile.get(k as i64).cloned().unwrap_or_default();
                match value.to_biguint() {
                    Some(v) => reference.push(v),
                    None => return usage(format!("negative value at index {k}")),
                }
            }
            check_schroeder_differences(k_max, &reference)?
        }
    };
    Ok(report)
}
