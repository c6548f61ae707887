//! Acceptance criteria, one test per criterion. Each prints a single
//! `criterion NN ... PASS|FAIL` line (run with `--nocapture` to see them).

use std::path::PathBuf;
use std::time::{Duration, Instant};

use gridfree_cli::run;
use gridfree_core::brute::{brute_force_row, OracleConfig};
use gridfree_core::poly::Rational;
use gridfree_core::three_row::{
    checkerboard_selection, coefficient_check, first_difference_check, fit_poly_families, remark_check,
    t3_max_k, verify_poly_families,
};
use gridfree_core::transfer::{dp_row, dp_rows_upto};
use gridfree_core::two_row::*;
use gridfree_core::{validate_selection, Count, GridDims, VerificationReport};

const TABLE_1: [&[u64]; 7] = [
    &[1],
    &[1, 2],
    &[1, 4, 2],
    &[1, 6, 8, 2],
    &[1, 8, 18, 12, 2],
    &[1, 10, 32, 38, 16, 2],
    &[1, 12, 50, 88, 66, 20, 2],
];

const TABLE_2: [&[u64]; 6] = [
    &[1],
    &[1, 3, 1],
    &[1, 6, 8, 2],
    &[1, 9, 24, 22, 6, 1],
    &[1, 12, 49, 84, 61, 18, 2],
    &[1, 15, 83, 215, 276, 174, 53, 9, 1],
];

const TABLE_3: [&str; 5] = [
    "3n",
    "(9n^2 - 13n + 6)/2",
    "(9n^3 - 39n^2 + 64n - 40)/2",
    "(27n^4 - 234n^3 + 829n^2 - 1430n + 1008)/8",
    "(81n^5 - 1170n^4 + 7215n^3 - 23830n^2 + 42144n - 31760)/40",
];

type Outcome = Result<(), String>;

fn criterion(id: u32, name: &str, limit: Option<Duration>, body: impl FnOnce() -> Outcome) {
    let start = Instant::now();
    let mut result = body();
    let elapsed = start.elapsed();
    if let (Ok(()), Some(limit)) = (&result, limit) {
        if elapsed > limit {
            result = Err(format!("took {elapsed:?}, limit {limit:?}"));
        }
    }
    match &result {
        Ok(()) => println!("criterion {id:02} {name} ... PASS ({elapsed:.2?})"),
        Err(why) => println!("criterion {id:02} {name} ... FAIL: {why}"),
    }
    assert!(result.is_ok(), "criterion {id} failed: {}", result.unwrap_err());
}

fn ensure(report: &VerificationReport) -> Outcome {
    if report.passed() {
        Ok(())
    } else {
        Err(report.to_string())
    }
}

fn cli(args: &[&str]) -> (i32, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("gridfree").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    let mut text = String::from_utf8(out).unwrap();
    text.push_str(&String::from_utf8(err).unwrap());
    (code, text)
}

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data/oeis").join(name)
}

/// Parses the plain `table` layout back into rows of integers.
fn parse_table(text: &str) -> Vec<Vec<u64>> {
    text.lines()
        .skip(2)
        .map(|line| {
            let (_, counts) = line.split_once('|').expect("row separator");
            counts.split_whitespace().map(|v| v.parse().unwrap()).collect()
        })
        .collect()
}

#[test]
fn criterion_01_golden_tables() {
    criterion(1, "golden tables (Table 1 and Table 2 via CLI)", Some(Duration::from_secs(1)), || {
        let (code, text) = cli(&["table", "--m", "2", "--rows", "7"]);
        if code != 0 {
            return Err(text);
        }
        let got = parse_table(&text);
        let want: Vec<Vec<u64>> = TABLE_1.iter().map(|r| r.to_vec()).collect();
        if got != want {
            return Err(format!("2xn table: {got:?}"));
        }
        if got.iter().map(Vec::len).sum::<usize>() != 28 {
            return Err("expected 28 entries".into());
        }
        let (code, text) = cli(&["table", "--m", "3", "--rows", "6"]);
        let got = parse_table(&text);
        let want: Vec<Vec<u64>> = TABLE_2.iter().map(|r| r.to_vec()).collect();
        if code != 0 || got != want {
            return Err(format!("3xn table: {got:?}"));
        }
        Ok(())
    });
}

#[test]
fn criterion_02_oracle_equivalence() {
    criterion(2, "DP equals brute force for m <= 4, n <= 6 (and transposes)", Some(Duration::from_secs(60)), || {
        let cfg = OracleConfig::default();
        for m in 1..=4 {
            for n in 0..=6 {
                let brute = brute_force_row(GridDims::new(m, n).unwrap(), &cfg).map_err(|e| e.to_string())?;
                let dp = dp_row(m, n);
                for k in 0..=m * n {
                    if brute.get(k) != dp.get(k) {
                        return Err(format!("m={m} n={n} k={k}: brute {} dp {}", brute.get(k), dp.get(k)));
                    }
                }
                if n >= 1 {
                    let t = GridDims::new(n, m).unwrap();
                    let brute_t = brute_force_row(t, &cfg).map_err(|e| e.to_string())?;
                    if brute_t.counts() != brute.counts() || dp_row(n, m).counts() != dp.counts() {
                        return Err(format!("transpose symmetry fails for {m}x{n}"));
                    }
                }
            }
        }
        Ok(())
    });
}

#[test]
fn criterion_03_formula_triple_agreement() {
    criterion(3, "run-sum formula = 2F1 form = transfer DP, 1 <= k <= n <= 100", Some(Duration::from_secs(30)), || {
        let rows = dp_rows_upto(2, 100);
        for n in 1..=100 {
            for k in 1..=n {
                let f = t2_formula(n, k);
                let h = t2_hypergeometric(n, k).map_err(|e| e.to_string())?;
                let d = rows[n].get(k);
                if f != h || f != d {
                    return Err(format!("n={n} k={k}: formula {f}, 2F1 {h}, dp {d}"));
                }
            }
        }
        Ok(())
    });
}

#[test]
fn criterion_04_identity_suites() {
    criterion(4, "Pascal/hockeystick to n = 100, identities (1)-(3) to k = 50", None, || {
        ensure(&verify_pascal_identity(100))?;
        ensure(&verify_hockeystick(100))?;
        ensure(&verify_section4_identities(50))
    });
}

#[test]
fn criterion_05_delta_apparatus() {
    criterion(5, "delta antisymmetry/negativity and peak inequalities, k <= 60", None, || {
        for r in verify_delta_lemmas(60).iter().chain(&verify_peak_inequalities(60)) {
            ensure(r)?;
        }
        Ok(())
    });
}

#[test]
fn criterion_06_unimodality() {
    criterion(6, "2xn rows strictly unimodal to n = 300, row-max prefix", None, || {
        ensure(&unimodality_sweep(300))?;
        let want: Vec<Count> = [1u64, 2, 4, 8, 18, 38, 88, 192].iter().map(|&v| Count::from(v)).collect();
        let got = row_max_sequence(7);
        if got != want {
            return Err(format!("row maxima {got:?}"));
        }
        Ok(())
    });
}

#[test]
fn criterion_07_three_row_boundary() {
    criterion(7, "3xn last nonzero k = floor((3n+1)/2), checkerboard witness, n <= 100", None, || {
        for (n, row) in dp_rows_upto(3, 100).iter().enumerate() {
            if row.k_max() != t3_max_k(n) {
                return Err(format!("n={n}: last nonzero k {}", row.k_max()));
            }
            let sel = checkerboard_selection(n);
            if !validate_selection(&sel) || sel.len() != t3_max_k(n) {
                return Err(format!("n={n}: checkerboard of size {} invalid", sel.len()));
            }
        }
        Ok(())
    });
}

#[test]
fn criterion_08_polynomial_columns_3xn() {
    criterion(8, "Table 3 verbatim, degree and coefficient claims k <= 15, p_k = T on k..k+30", Some(Duration::from_secs(60)), || {
        let fams = fit_poly_families(5).map_err(|e| e.to_string())?;
        for (fam, want) in fams.iter().zip(TABLE_3) {
            if fam.p.to_string() != want {
                return Err(format!("k={}: {}", fam.k, fam.p));
            }
        }
        let (code, text) = cli(&["poly", "--m", "3", "--k", "4"]);
        if code != 0 || text.trim() != TABLE_3[3] {
            return Err(format!("poly --m 3 --k 4 printed {text:?}"));
        }
        ensure(&verify_poly_families(15))?;
        ensure(&coefficient_check(15))
    });
}

#[test]
fn criterion_09_first_difference_lemma() {
    criterion(9, "first-difference identity for p_k, 4 <= k <= 10", None, || {
        ensure(&first_difference_check(10))
    });
}

#[test]
fn criterion_10_polynomial_columns_2xn() {
    criterion(10, "2xn columns: 2^k/k!, -2^k/(k-2)!, DP agreement on n = k..k+30, k <= 15", None, || {
        ensure(&verify_poly2_columns(15))?;
        let rows = dp_rows_upto(2, 45);
        for k in 1..=15 {
            let p = poly2(k).map_err(|e| e.to_string())?;
            for n in k..=k + 30 {
                if p.eval_int(n as i64) != Rational::from_integer(rows[n].get(k).into()) {
                    return Err(format!("k={k} n={n}"));
                }
            }
        }
        Ok(())
    });
}

#[test]
fn criterion_11_experimental_suites() {
    criterion(11, "EXPERIMENTAL: C1 k <= 50, Schroeder match k <= 30, p_k(k-1) k <= 12", None, || {
        let c1 = check_conjecture_c1(50);
        let reference = gridfree_core::sequence_io::read_bfile(&data("b006318.txt")).map_err(|e| e.to_string())?;
        let values: Vec<Count> = reference.values().map(|v| v.to_biguint().unwrap()).collect();
        let schroeder = check_schroeder_differences(30, &values).map_err(|e| e.to_string())?;
        let remark = remark_check(12);
        for r in [&c1, &schroeder, &remark] {
            if !r.is_experimental() {
                return Err(format!("{} not labelled experimental", r.name()));
            }
            ensure(r)?;
        }
        for suite in ["c1", "schroeder", "remark3"] {
            let (code, text) = cli(&["verify", "--suite", suite]);
            if code != 0 || !text.contains("EXPERIMENTAL") {
                return Err(format!("verify --suite {suite}: exit {code}, {text}"));
            }
        }
        Ok(())
    });
}

#[test]
fn criterion_12_oeis_cross_checks() {
    criterion(12, "A035607 prefix (>= 200 terms) and A110110 (>= 30 terms)", None, || {
        let triangle = data("b035607.txt");
        let (code, text) = cli(&["oeis-check", "--bfile", triangle.to_str().unwrap(), "--target", "triangle2", "--max", "19"]);
        if code != 0 || !text.contains("210 terms") {
            return Err(text);
        }
        let maxima = data("b110110.txt");
        let (code, text) = cli(&["oeis-check", "--bfile", maxima.to_str().unwrap(), "--target", "rowmax2", "--max", "29"]);
        if code != 0 || !text.contains("30 terms") {
            return Err(text);
        }
        Ok(())
    });
}

#[test]
fn criterion_13_image() {
    criterion(13, "192-row mod-3 graymap: size, residues match Table 1, deterministic", Some(Duration::from_secs(5)), || {
        let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
        let a = dir.path().join("a.pgm");
        let b = dir.path().join("b.pgm");
        for path in [&a, &b] {
            let (code, text) = cli(&["image", "--rows", "192", "--mod", "3", "--out", path.to_str().unwrap()]);
            if code != 0 {
                return Err(text);
            }
        }
        let bytes = std::fs::read(&a).map_err(|e| e.to_string())?;
        if bytes != std::fs::read(&b).map_err(|e| e.to_string())? {
            return Err("runs differ".into());
        }
        let header = b"P5\n192 192\n255\n";
        if !bytes.starts_with(header) || bytes.len() != header.len() + 192 * 192 {
            return Err("bad graymap header or size".into());
        }
        let pixels = &bytes[header.len()..];
        for (n, row) in TABLE_1.iter().enumerate() {
            for (k, &value) in row.iter().enumerate() {
                let residue = match pixels[n * 192 + k] {
                    255 => 0,
                    128 => 1,
                    0 => 2,
                    other => return Err(format!("unexpected gray {other} at n={n} k={k}")),
                };
                if residue != value % 3 {
                    return Err(format!("n={n} k={k}: residue {residue}, table {}", value % 3));
                }
            }
            if pixels[n * 192 + n + 1] != 255 {
                return Err(format!("background missing right of the diagonal in row {n}"));
            }
        }
        Ok(())
    });
}
