//! Closed forms, identities and row-shape results for two-row grids.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::binomial::{binomial, factorial, pow2};
use crate::counts::{Count, RowTable};
use crate::error::{Error, Result};
use crate::poly::{Polynomial, Rational};
use crate::report::VerificationReport;
use crate::transfer::dp_rows_upto;

/// `A006318(0..=20)`, the large Schröder numbers.
pub const SCHROEDER_PREFIX: [u64; 21] = [
    1,
    2,
    6,
    22,
    90,
    394,
    1806,
    8558,
    41586,
    206098,
    1037718,
    5293446,
    27297738,
    142078746,
    745387038,
    3937603038,
    20927156706,
    111818026018,
    600318853926,
    3236724317174,
    17518619320890,
];

pub fn schroeder_prefix() -> Vec<Count> {
    SCHROEDER_PREFIX.iter().map(|&v| Count::from(v)).collect()
}

/// `T(2,n;k)` by counting column projections: a selection projects to a 0/1
/// vector with `k` ones in `r` runs, and each run lifts to the grid in two ways.
///
/// The run sum is empty at `k = 0`; that case returns 1 directly. Returns 0
/// for `k > n`.
pub fn t2_formula(n: usize, k: usize) -> Count {
    if k == 0 {
        return Count::one();
    }
    if k > n {
        return Count::zero();
    }
    (1..=k)
        .map(|r| pow2(r) * binomial(k - 1, r - 1) * binomial(n - k + 1, r))
        .sum()
}

/// `2F1(a, b; c; z)` for integer parameters where `a` or `b` is a
/// nonpositive integer, so the series stops. `c` must not hit zero first.
pub fn terminating_2f1(a: i64, b: i64, c: i64, z: &Rational) -> Rational {
    assert!(a <= 0 || b <= 0, "series does not terminate");
    let mut sum = Rational::zero();
    let mut term = Rational::one();
    let mut j: i64 = 0;
    while !term.is_zero() {
        sum += &term;
        let denom = (c + j) * (j + 1);
        assert!(denom != 0, "lower parameter reaches zero before termination");
        term = term * Rational::new(BigInt::from((a + j) * (b + j)), BigInt::from(denom)) * z;
        j += 1;
    }
    sum
}

/// `T(2,n;k) = 2(n-k+1) 2F1(1-k, k-n; 2; 2)` evaluated exactly, for `1 <= k <= n`.
pub fn t2_hypergeometric(n: usize, k: usize) -> Result<Count> {
    if k == 0 || k > n {
        return Err(Error::OutOfRange(format!(
            "hypergeometric form needs 1 <= k <= n, got n={n}, k={k}"
        )));
    }
    let series = terminating_2f1(1 - k as i64, k as i64 - n as i64, 2, &Rational::from_integer(2.into()));
    let value = series * Rational::from_integer(BigInt::from(2 * (n - k + 1)));
    if !value.is_integer() || value.is_negative() {
        return Err(Error::NonIntegral {
            n,
            k,
            value: value.to_string(),
        });
    }
    Ok(value.to_integer().to_biguint().expect("nonnegative"))
}

/// `C(k-1,r-1) C(k,r) - C(k-2,r-1) C(k+1,r)` for `k >= 2`, `1 <= r <= k`.
pub fn delta(k: usize, r: usize) -> BigInt {
    assert!(k >= 2 && (1..=k).contains(&r), "delta needs k >= 2 and 1 <= r <= k");
    let left = BigInt::from(binomial(k - 1, r - 1) * binomial(k, r));
    let right = BigInt::from(binomial(k - 2, r - 1) * binomial(k + 1, r));
    left - right
}

/// `T(2,n;k)` for `n = 0..=n_max`, with lookups that tolerate indices outside
/// the table.
#[derive(Debug, Clone)]
pub struct TwoRowTable {
    rows: Vec<RowTable>,
}

impl TwoRowTable {
    pub fn new(n_max: usize) -> Self {
        TwoRowTable {
            rows: dp_rows_upto(2, n_max),
        }
    }

    pub fn n_max(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn row(&self, n: usize) -> &RowTable {
        &self.rows[n]
    }

    /// `T(2,n;k)` for any integers. Negative `k` gives 0. `n = -1` follows the
    /// downward extension of the Pascal-style recurrence, `T(2,-1;k) = [k = 0]`
    /// (the empty-last-column count of the empty grid); smaller `n` give 0.
    pub fn get(&self, n: i64, k: i64) -> Count {
        if k < 0 || n < -1 {
            return Count::zero();
        }
        if n == -1 {
            return if k == 0 { Count::one() } else { Count::zero() };
        }
        self.rows[n as usize].get(k as usize)
    }

    fn at(&self, n: usize, k: usize) -> BigInt {
        BigInt::from(self.rows[n].get(k))
    }
}

/// `T(2,n;k) = T(2,n-2;k-1) + T(2,n-1;k-1) + T(2,n-1;k)` for `2 <= n <= n_max`.
pub fn verify_pascal_identity(n_max: usize) -> VerificationReport {
    let table = TwoRowTable::new(n_max);
    let mut report = VerificationReport::new(
        "pascal-style identity T(2,n;k) = T(2,n-2;k-1) + T(2,n-1;k-1) + T(2,n-1;k)",
        format!("2 <= n <= {n_max}, 0 <= k <= n"),
    );
    for n in 2..=n_max as i64 {
        for k in 0..=n {
            let rhs = table.get(n - 2, k - 1) + table.get(n - 1, k - 1) + table.get(n - 1, k);
            report.check(format!("n={n}, k={k}"), table.get(n, k), rhs);
        }
    }
    report
}

/// `T(2,n;k) = T(2,n-1;k) + sum_{r=1..k} 2 T(2,n-r-1;k-r)` for `2 <= n <= n_max`.
pub fn verify_hockeystick(n_max: usize) -> VerificationReport {
    let table = TwoRowTable::new(n_max);
    let mut report = VerificationReport::new(
        "hockeystick identity T(2,n;k) = T(2,n-1;k) + sum 2 T(2,n-r-1;k-r)",
        format!("2 <= n <= {n_max}, 0 <= k <= n"),
    );
    for n in 2..=n_max as i64 {
        for k in 0..=n {
            let tail: Count = (1..=k).map(|r| table.get(n - r - 1, k - r) * 2u32).sum();
            report.check(format!("n={n}, k={k}"), table.get(n, k), table.get(n - 1, k) + tail);
        }
    }
    report
}

/// Interpolates the column `n -> T(2,n;k)` from the run-sum formula at
/// `n = k..=2k`.
pub fn poly2(k: usize) -> Result<Polynomial> {
    if k == 0 {
        return Err(Error::OutOfRange("poly2 needs k >= 1".into()));
    }
    let samples: Vec<BigInt> = (k..=2 * k).map(|n| t2_formula(n, k).into()).collect();
    Polynomial::interpolate_consecutive(k as i64, &samples)
}

/// `2^k / k!` and `-2^k / (k-2)!` (the latter zero for `k < 2`).
pub fn poly2_top_coefficients(k: usize) -> (Rational, Rational) {
    let lead = Rational::new(pow2(k).into(), factorial(k).into());
    let second = if k >= 2 {
        -Rational::new(pow2(k).into(), factorial(k - 2).into())
    } else {
        Rational::zero()
    };
    (lead, second)
}

/// For `1 <= k <= k_max`: degree `k`, the two leading coefficients, and
/// agreement with the transfer DP on `n = k-1 ..= k+30`.
pub fn verify_poly2_columns(k_max: usize) -> VerificationReport {
    let table = TwoRowTable::new(k_max + 30);
    let mut report = VerificationReport::new(
        "2xn polynomial columns: degree k, leading 2^k/k!, second -2^k/(k-2)!, agreement with DP",
        format!("1 <= k <= {k_max}, k-1 <= n <= k+30"),
    );
    for k in 1..=k_max {
        let p = match poly2(k) {
            Ok(p) => p,
            Err(e) => {
                report.fail(format!("k={k}"), "interpolated polynomial", e);
                continue;
            }
        };
        report.check(format!("k={k} degree"), k as i64, p.signed_degree());
        let (lead, second) = poly2_top_coefficients(k);
        report.check(format!("k={k} leading"), lead, p.coeff(k));
        report.check(format!("k={k} second"), second, p.coeff(k - 1));
        for n in k - 1..=k + 30 {
            let expected = Rational::from_integer(table.at(n, k));
            report.check(format!("k={k}, n={n}"), expected, p.eval_int(n as i64));
        }
    }
    report
}

/// Strict rise to `k = ceil(n/2)`, strict fall after, unique maximum there,
/// and nonzero extent exactly `0..=n`.
pub fn unimodality_check(n: usize) -> VerificationReport {
    let row = crate::transfer::dp_row(2, n);
    let mut report = VerificationReport::new("unimodal 2xn row", format!("n = {n}"));
    check_unimodal_row(&mut report, &row);
    report
}

/// [`unimodality_check`] for every `n <= n_max`, from one DP sweep.
pub fn unimodality_sweep(n_max: usize) -> VerificationReport {
    let table = TwoRowTable::new(n_max);
    let mut report = VerificationReport::new(
        "unimodal 2xn rows, peak at k = ceil(n/2)",
        format!("0 <= n <= {n_max}"),
    );
    for n in 0..=n_max {
        check_unimodal_row(&mut report, table.row(n));
    }
    report
}

fn check_unimodal_row(report: &mut VerificationReport, row: &RowTable) {
    let n = row.n();
    let c = row.counts();
    let peak = n.div_ceil(2);
    report.check(format!("n={n} extent"), n, row.k_max());
    for k in 0..peak.min(c.len().saturating_sub(1)) {
        report.check_that(format!("n={n}, k={k}"), "T(2,n;k) < T(2,n;k+1)", c[k] < c[k + 1]);
    }
    for k in peak..c.len().saturating_sub(1) {
        report.check_that(format!("n={n}, k={k}"), "T(2,n;k) > T(2,n;k+1)", c[k] > c[k + 1]);
    }
    report.check(format!("n={n} argmax"), peak, row.argmax());
}

/// `max_k T(2,n;k)` for `n = 0..=n_max`.
pub fn row_max_sequence(n_max: usize) -> Vec<Count> {
    dp_rows_upto(2, n_max)
        .iter()
        .map(|row| row.counts().iter().max().cloned().unwrap_or_default())
        .collect()
}

/// Boundary of the nonzero region: `T(2,n;k) > 0` exactly for `0 <= k <= n`.
pub fn verify_boundary_2xn(n_max: usize) -> VerificationReport {
    let table = TwoRowTable::new(n_max);
    let mut report = VerificationReport::new("2xn nonzero region is 0 <= k <= n", format!("0 <= n <= {n_max}"));
    for n in 0..=n_max {
        let row = table.row(n);
        report.check(format!("n={n} last nonzero k"), n, row.k_max());
        let all_positive = row.counts().iter().all(|c| !c.is_zero());
        report.check_that(format!("n={n}"), "every entry with k <= n positive", all_positive);
    }
    report
}

/// Antisymmetry, negativity, the vanishing middle term, and the companion
/// binomial inequality, for `2 <= k <= k_max`.
pub fn verify_delta_lemmas(k_max: usize) -> Vec<VerificationReport> {
    let range = format!("2 <= k <= {k_max}, 1 <= r <= k");
    let mut anti = VerificationReport::new("delta antisymmetry delta(k,k+1-r) = -delta(k,r)", range.clone());
    let mut neg = VerificationReport::new("delta(k,r) < 0 for r <= floor(k/2)", range.clone());
    let mut mid = VerificationReport::new("delta(2m-1,m) = 0", format!("2 <= 2m-1 <= {k_max}"));
    let mut ineq = VerificationReport::new(
        "C(k-1,r-1)C(k+1,r) - C(k,r-1)C(k,r) > 0",
        format!("1 <= k <= {k_max}, 1 <= r <= k"),
    );
    for k in 2..=k_max {
        for r in 1..=k {
            let d = delta(k, r);
            anti.check(format!("k={k}, r={r}"), -&d, delta(k, k + 1 - r));
            if r <= k / 2 {
                neg.check_that(format!("k={k}, r={r}"), "delta < 0", d.is_negative());
            }
        }
        if k % 2 == 1 {
            mid.check(format!("k={k}, r={}", k.div_ceil(2)), BigInt::zero(), delta(k, k.div_ceil(2)));
        }
    }
    for k in 1..=k_max {
        for r in 1..=k {
            let lhs = BigInt::from(binomial(k - 1, r - 1) * binomial(k + 1, r));
            let rhs = BigInt::from(binomial(k, r - 1) * binomial(k, r));
            ineq.check_that(format!("k={k}, r={r}"), "difference > 0", lhs > rhs);
        }
    }
    vec![anti, neg, mid, ineq]
}

/// Neighbour comparisons at the row maxima, plus the delta-sum expansion of
/// the odd-row difference:
/// `T(2,2k-1;k) - T(2,2k-1;k-1) = sum_r 2^r delta(k,r)`.
pub fn verify_peak_inequalities(k_max: usize) -> Vec<VerificationReport> {
    let table = TwoRowTable::new(2 * k_max);
    let mut odd = VerificationReport::new("T(2,2k-1;k) > T(2,2k-1;k-1)", format!("1 <= k <= {k_max}"));
    let mut even = VerificationReport::new("T(2,2k;k) > T(2,2k;k+1)", format!("1 <= k <= {k_max}"));
    let mut expansion = VerificationReport::new(
        "T(2,2k-1;k) - T(2,2k-1;k-1) = sum 2^r delta(k,r)",
        format!("2 <= k <= {k_max}"),
    );
    for k in 1..=k_max {
        let diff = table.at(2 * k - 1, k) - table.at(2 * k - 1, k - 1);
        odd.check_that(format!("k={k}"), "strictly greater", diff.is_positive());
        if k >= 2 {
            let sum: BigInt = (1..=k).map(|r| BigInt::from(pow2(r)) * delta(k, r)).sum();
            expansion.check(format!("k={k}"), sum, diff);
        }
        let even_diff = table.at(2 * k, k) - table.at(2 * k, k + 1);
        even.check_that(format!("k={k}"), "strictly greater", even_diff.is_positive());
    }
    vec![odd, even, expansion]
}

/// For `1 <= k <= k_max`, in exact integer arithmetic:
/// (1) `k T(2,2k;k) = (k+1) T(2,2k;k+1)`,
/// (2) `k (T(2,2k;k) - T(2,2k;k+1)) = T(2,2k;k+1)`,
/// (3) `T(2,2k;k) - T(2,2k;k+1) = T(2,2k-1;k) - T(2,2k-1;k+1)`.
pub fn verify_section4_identities(k_max: usize) -> VerificationReport {
    let table = TwoRowTable::new(2 * k_max);
    let mut report = VerificationReport::new(
        "row-maximum identities (1)-(3) for the 2xn table",
        format!("1 <= k <= {k_max}"),
    );
    for k in 1..=k_max {
        let kb = BigInt::from(k);
        let top = table.at(2 * k, k);
        let right = table.at(2 * k, k + 1);
        let diff = &top - &right;
        report.check(format!("(1) k={k}"), &kb * &top, (&kb + 1) * &right);
        report.check(format!("(2) k={k}"), &kb * &diff, right.clone());
        let prev = table.at(2 * k - 1, k) - table.at(2 * k - 1, k + 1);
        report.check(format!("(3) k={k}"), diff, prev);
    }
    report
}

/// `d(k) = T(2,2k;k) - T(2,2k;k+1)` for `k = 1..=k_max`.
pub fn row_max_differences(k_max: usize) -> Vec<BigInt> {
    let table = TwoRowTable::new(2 * k_max);
    (1..=k_max)
        .map(|k| table.at(2 * k, k) - table.at(2 * k, k + 1))
        .collect()
}

/// Unproven: `T(2,2k;k) - T(2,2k;k+1) = T(2,2k+1;k+1) - T(2,2k+1;k)`.
pub fn check_conjecture_c1(k_max: usize) -> VerificationReport {
    let table = TwoRowTable::new(2 * k_max + 1);
    let mut report = VerificationReport::new(
        "conjecture: T(2,2k;k) - T(2,2k;k+1) = T(2,2k+1;k+1) - T(2,2k+1;k)",
        format!("1 <= k <= {k_max}"),
    )
    .experimental();
    for k in 1..=k_max {
        let lhs = table.at(2 * k, k) - table.at(2 * k, k + 1);
        let rhs = table.at(2 * k + 1, k + 1) - table.at(2 * k + 1, k);
        report.check(format!("k={k}"), lhs, rhs);
    }
    report
}

/// Unproven: the row-maximum differences `d(k)` equal the large Schröder
/// numbers. `reference[k]` is the sequence term with index `k`.
pub fn check_schroeder_differences(k_max: usize, reference: &[Count]) -> Result<VerificationReport> {
    if reference.len() <= k_max {
        return Err(Error::ReferenceTooShort {
            name: "large Schroeder numbers".into(),
            available: reference.len(),
            needed: k_max + 1,
        });
    }
    let mut report = VerificationReport::new(
        "row-maximum differences T(2,2k;k) - T(2,2k;k+1) are large Schroeder numbers",
        format!("1 <= k <= {k_max}"),
    )
    .experimental();
    for (i, d) in row_max_differences(k_max).into_iter().enumerate() {
        let k = i + 1;
        report.check(format!("k={k}"), BigInt::from(reference[k].clone()), d);
    }
    Ok(report)
}
