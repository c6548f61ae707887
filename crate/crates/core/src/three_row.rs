//! Three-row grids: nonzero boundary, checkerboard witnesses, and the
//! polynomial columns `p_k` with their auxiliary polynomials `b_k, c_k, d_k`.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::binomial::{factorial, pow3};
use crate::counts::{validate_selection, Count, GridDims, RowTable, Selection};
use crate::error::{Error, Result};
use crate::poly::{Polynomial, Rational};
use crate::recurrences::{at, t3_aux_sequence, ThreeRowAux};
use crate::report::VerificationReport;
use crate::transfer::dp_rows_upto;

/// Largest `k` with `T(3,n;k) > 0`: `floor((3n+1)/2)`.
pub fn t3_max_k(n: usize) -> usize {
    (3 * n).div_ceil(2)
}

/// Fewest columns with `T(3,n;k) > 0`: `floor((2k+1)/3)`.
pub fn t3_min_cols(k: usize) -> usize {
    (2 * k + 1) / 3
}

/// A maximum selection on `3 x n`: columns 0, 2, 4, ... take rows 0 and 2,
/// the others take row 1.
pub fn checkerboard_selection(n: usize) -> Selection {
    let dims = GridDims::new(3, n).expect("three rows");
    let cells = (0..n).flat_map(|col| {
        let rows: &[usize] = if col % 2 == 0 { &[0, 2] } else { &[1] };
        rows.iter().map(move |&r| (r, col))
    });
    Selection::new(dims, cells)
}

/// `p_k`, `b_k`, `c_k`, `d_k` for one `k`; each agrees with its count for `n >= k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyFamily {
    pub k: usize,
    /// `T(3,n;k)`, degree `k`.
    pub p: Polynomial,
    /// Last column holds only the bottom square; degree `k - 1`.
    pub b: Polynomial,
    /// Last column holds only the centre square; degree `k - 1`.
    pub c: Polynomial,
    /// Last column holds both outer squares; degree `k - 2`.
    pub d: Polynomial,
}

/// Auxiliary rows for `n = 1..=n_max`, indexed by `n - 1`.
struct AuxColumns {
    aux: Vec<ThreeRowAux>,
}

impl AuxColumns {
    fn new(n_max: usize) -> Self {
        AuxColumns {
            aux: t3_aux_sequence(n_max),
        }
    }

    fn value(&self, which: Column, n: usize, k: usize) -> BigInt {
        let a = &self.aux[n - 1];
        let seq = match which {
            Column::P => &a.total,
            Column::B => &a.tb,
            Column::C => &a.tc,
            Column::D => &a.td,
        };
        at(seq, k).into()
    }
}

#[derive(Debug, Clone, Copy)]
enum Column {
    P,
    B,
    C,
    D,
}

impl Column {
    fn name(self, k: usize) -> String {
        let letter = match self {
            Column::P => 'p',
            Column::B => 'b',
            Column::C => 'c',
            Column::D => 'd',
        };
        format!("{letter}_{k}")
    }
}

/// Interpolates on `n = k ..= k + degree` and verifies one extra node and the
/// resulting degree. A negative `degree` means the column must vanish.
fn fit_column(cols: &AuxColumns, which: Column, k: usize, degree: i64) -> Result<Polynomial> {
    let name = which.name(k);
    let poly = if degree < 0 {
        Polynomial::zero()
    } else {
        let samples: Vec<BigInt> = (k..=k + degree as usize)
            .map(|n| cols.value(which, n, k))
            .collect();
        Polynomial::interpolate_consecutive(k as i64, &samples)?
    };
    let check = k + (degree + 1).max(0) as usize;
    if poly.eval_int(check as i64) != Rational::from_integer(cols.value(which, check, k)) {
        return Err(Error::FitCheck { name, node: check });
    }
    if poly.signed_degree() != degree {
        return Err(Error::DegreeMismatch {
            name,
            expected: degree,
            found: poly.signed_degree(),
        });
    }
    Ok(poly)
}

fn fit_with(cols: &AuxColumns, k: usize) -> Result<PolyFamily> {
    let k_i = k as i64;
    Ok(PolyFamily {
        k,
        p: fit_column(cols, Column::P, k, k_i)?,
        b: fit_column(cols, Column::B, k, k_i - 1)?,
        c: fit_column(cols, Column::C, k, k_i - 1)?,
        d: fit_column(cols, Column::D, k, k_i - 2)?,
    })
}

/// Fits the polynomial family for `k >= 1` from the auxiliary recurrences.
/// `k = 1` is accepted too: `b_1 = c_1 = 1` and `d_1 = 0`.
pub fn fit_poly_family(k: usize) -> Result<PolyFamily> {
    if k == 0 {
        return Err(Error::OutOfRange("polynomial families start at k = 1".into()));
    }
    fit_with(&AuxColumns::new(2 * k + 1), k)
}

/// Families for `k = 1..=k_max`, sharing one recurrence sweep.
pub fn fit_poly_families(k_max: usize) -> Result<Vec<PolyFamily>> {
    let cols = AuxColumns::new(2 * k_max + 1);
    (1..=k_max).map(|k| fit_with(&cols, k)).collect()
}

/// `3^k / k!`.
pub fn leading_coefficient(k: usize) -> Rational {
    Rational::new(pow3(k).into(), factorial(k).into())
}

/// `-13 * 3^(k-2) / (2 (k-2)!)` for `k >= 2`.
pub fn second_coefficient(k: usize) -> Rational {
    assert!(k >= 2);
    let num = BigInt::from(pow3(k - 2)) * -13;
    Rational::new(num, BigInt::from(factorial(k - 2)) * 2)
}

/// Degree claims for every family and `p_k(n) = T(3,n;k)` on
/// `n = k ..= k+30`, checked against the transfer DP.
pub fn verify_poly_families(k_max: usize) -> VerificationReport {
    let mut report = VerificationReport::new(
        "3xn polynomial families: degrees (k, k-1, k-1, k-2) and p_k(n) = T(3,n;k)",
        format!("1 <= k <= {k_max}, k <= n <= k+30"),
    );
    let rows = dp_rows_upto(3, k_max + 30);
    let cols = AuxColumns::new(2 * k_max + 1);
    for k in 1..=k_max {
        let fam = match fit_with(&cols, k) {
            Ok(f) => f,
            Err(e) => {
                report.fail(format!("k={k}"), "fitted family", e);
                continue;
            }
        };
        let k_i = k as i64;
        report.check(format!("k={k} deg p"), k_i, fam.p.signed_degree());
        report.check(format!("k={k} deg b"), k_i - 1, fam.b.signed_degree());
        report.check(format!("k={k} deg c"), k_i - 1, fam.c.signed_degree());
        report.check(format!("k={k} deg d"), k_i - 2, fam.d.signed_degree());
        for (n, row) in rows.iter().enumerate().skip(k).take(31) {
            let expected = Rational::from_integer(row.get(k).into());
            report.check(format!("k={k}, n={n}"), expected, fam.p.eval_int(n as i64));
        }
    }
    report
}

/// Top two coefficients of `p_k` against `3^k/k!` and
/// `-13 * 3^(k-2) / (2 (k-2)!)`, for `2 <= k <= k_max`.
pub fn coefficient_check(k_max: usize) -> VerificationReport {
    let mut report = VerificationReport::new(
        "p_k leading 3^k/k! and second -13*3^(k-2)/(2(k-2)!)",
        format!("2 <= k <= {k_max}"),
    );
    match fit_poly_families(k_max) {
        Ok(families) => {
            for fam in families.iter().filter(|f| f.k >= 2) {
                let k = fam.k;
                report.check(format!("k={k} leading"), leading_coefficient(k), fam.p.coeff(k));
                report.check(format!("k={k} second"), second_coefficient(k), fam.p.coeff(k - 1));
            }
        }
        Err(e) => report.fail("fit", "polynomial families", e),
    }
    report
}

/// `p_k(n) - p_k(n-1) = 2 p_{k-1}(n-1) + p_{k-1}(n-2) + p_{k-2}(n-2)
///   + c_{k-2}(n-1) - d_{k-1}(n-1)` as a polynomial identity, `4 <= k <= k_max`.
pub fn first_difference_check(k_max: usize) -> VerificationReport {
    let mut report = VerificationReport::new(
        "first differences of p_k via p_{k-1}, p_{k-2}, c_{k-2}, d_{k-1}",
        format!("4 <= k <= {k_max}"),
    );
    let families = match fit_poly_families(k_max) {
        Ok(f) => f,
        Err(e) => {
            report.fail("fit", "polynomial families", e);
            return report;
        }
    };
    let fam = |k: usize| &families[k - 1];
    for k in 4..=k_max {
        let lhs = fam(k).p.backward_difference();
        let two = Rational::from_integer(2.into());
        let rhs = [
            fam(k - 1).p.shift(-1).scale(&two),
            fam(k - 1).p.shift(-2),
            fam(k - 2).p.shift(-2),
            fam(k - 2).c.shift(-1),
            -&fam(k - 1).d.shift(-1),
        ]
        .iter()
        .fold(Polynomial::zero(), |acc, t| &acc + t);
        report.check(format!("k={k} degree"), k as i64 - 1, lhs.signed_degree());
        report.check(format!("k={k}"), lhs, rhs);
    }
    report
}

/// `2 b_k + c_k + d_k = p_k(n) - p_k(n-1)` as polynomials, `1 <= k <= k_max`.
pub fn difference_decomposition_check(k_max: usize) -> VerificationReport {
    let mut report = VerificationReport::new(
        "2 b_k + c_k + d_k equals the first difference of p_k",
        format!("1 <= k <= {k_max}"),
    );
    match fit_poly_families(k_max) {
        Ok(families) => {
            for f in &families {
                let two = Rational::from_integer(2.into());
                let sum = &(&f.b.scale(&two) + &f.c) + &f.d;
                report.check(format!("k={}", f.k), f.p.backward_difference(), sum);
            }
        }
        Err(e) => report.fail("fit", "polynomial families", e),
    }
    report
}

/// Unproven: `p_k(k-1) = T(3,k-1;k)` for `2 <= k <= k_max`.
pub fn remark_check(k_max: usize) -> VerificationReport {
    let mut report = VerificationReport::new(
        "p_k(k-1) = T(3,k-1;k), one step left of the proven range",
        format!("2 <= k <= {k_max}"),
    )
    .experimental();
    let rows = dp_rows_upto(3, k_max);
    match fit_poly_families(k_max) {
        Ok(families) => {
            for f in families.iter().filter(|f| f.k >= 2) {
                let k = f.k;
                let expected = Rational::from_integer(rows[k - 1].get(k).into());
                report.check(format!("k={k}"), expected, f.p.eval_int(k as i64 - 1));
            }
        }
        Err(e) => report.fail("fit", "polynomial families", e),
    }
    report
}

/// Row extent `floor((3n+1)/2)`, column form `n >= floor((2k+1)/3)`, and the
/// checkerboard witness, for `n <= n_max`.
pub fn verify_boundary_3xn(n_max: usize) -> VerificationReport {
    let rows = dp_rows_upto(3, n_max);
    let mut report = VerificationReport::new(
        "3xn nonzero region k <= floor((3n+1)/2), n >= floor((2k+1)/3), checkerboard witness",
        format!("0 <= n <= {n_max}"),
    );
    for (n, row) in rows.iter().enumerate() {
        report.check(format!("n={n} last nonzero k"), t3_max_k(n), row.k_max());
        let positive = row.counts().iter().all(|c| !c.is_zero());
        report.check_that(format!("n={n}"), "every entry up to the extent positive", positive);
        let sel = checkerboard_selection(n);
        report.check(format!("n={n} checkerboard size"), t3_max_k(n), sel.len());
        report.check_that(format!("n={n} checkerboard"), "adjacency-free", validate_selection(&sel));
    }
    for k in 0..=t3_max_k(n_max) {
        match rows.iter().position(|row| !row.get(k).is_zero()) {
            Some(first) => {
                report.check(format!("k={k} first positive n"), t3_min_cols(k), first);
            }
            None => report.fail(format!("k={k}"), "some positive T(3,n;k)", "none"),
        }
    }
    report
}

/// Unproven for `m > 2`: every row `T(m,n;·)` rises strictly to a single peak
/// and then falls strictly.
pub fn unimodality_probe(m: usize, n_max: usize) -> VerificationReport {
    let mut report = VerificationReport::new(
        format!("rows of the {m}xn table are strictly unimodal"),
        format!("0 <= n <= {n_max}"),
    )
    .experimental();
    for row in dp_rows_upto(m, n_max) {
        report.check_that(format!("n={}", row.n()), "strict rise then strict fall", is_strictly_unimodal(&row));
    }
    report
}

pub fn is_strictly_unimodal(row: &RowTable) -> bool {
    let c: &[Count] = row.counts();
    let mut i = 0;
    while i + 1 < c.len() && c[i] < c[i + 1] {
        i += 1;
    }
    while i + 1 < c.len() && c[i] > c[i + 1] {
        i += 1;
    }
    i + 1 == c.len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rational;

    #[test]
    fn boundary_values() {
        assert_eq!(t3_max_k(5), 8);
        assert_eq!(t3_max_k(0), 0);
        assert_eq!(t3_max_k(4), 6);
        assert_eq!(t3_min_cols(2), 1);
        assert_eq!(t3_min_cols(3), 2);
        assert!(verify_boundary_3xn(30).passed());
    }

    #[test]
    fn checkerboards() {
        let one = checkerboard_selection(1);
        assert_eq!(one.cells.iter().copied().collect::<Vec<_>>(), [(0, 0), (2, 0)]);
        assert_eq!(checkerboard_selection(2).len(), 3);
        let five = checkerboard_selection(5);
        assert_eq!(five.len(), 8);
        assert!(validate_selection(&five));
        assert!(checkerboard_selection(0).is_empty());
    }

    #[test]
    fn family_k2() {
        let f = fit_poly_family(2).unwrap();
        assert_eq!(f.p, Polynomial::new(vec![rational(3, 1), rational(-13, 2), rational(9, 2)]));
        assert_eq!(f.b, Polynomial::from_ints(&[-4, 3]));
        assert_eq!(f.c, Polynomial::from_ints(&[-4, 3]));
        assert_eq!(f.d, Polynomial::from_ints(&[1]));
    }

    #[test]
    fn family_k1() {
        let f = fit_poly_family(1).unwrap();
        assert_eq!(f.p, Polynomial::from_ints(&[0, 3]));
        assert!(f.d.is_zero());
        assert!(fit_poly_family(0).is_err());
    }

    #[test]
    fn rendered_rows() {
        assert_eq!(fit_poly_family(3).unwrap().p.to_string(), "(9n^3 - 39n^2 + 64n - 40)/2");
        assert_eq!(
            fit_poly_family(5).unwrap().p.to_string(),
            "(81n^5 - 1170n^4 + 7215n^3 - 23830n^2 + 42144n - 31760)/40"
        );
    }

    #[test]
    fn coefficient_formulas() {
        assert_eq!(leading_coefficient(2), rational(9, 2));
        assert_eq!(second_coefficient(2), rational(-13, 2));
        assert_eq!(leading_coefficient(4), rational(27, 8));
        assert_eq!(second_coefficient(4), rational(-234, 8));
        assert!(coefficient_check(8).passed());
    }

    #[test]
    fn lemma_checks() {
        let r = first_difference_check(7);
        assert!(r.passed(), "{r}");
        assert!(difference_decomposition_check(7).passed());
        let rem = remark_check(6);
        assert!(rem.passed() && rem.is_experimental());
    }

    #[test]
    fn unimodal_helper() {
        let row = |v: &[u32]| RowTable::new(3, 0, v.iter().map(|&x| Count::from(x)).collect());
        assert!(is_strictly_unimodal(&row(&[1, 3, 1])));
        assert!(is_strictly_unimodal(&row(&[1])));
        assert!(!is_strictly_unimodal(&row(&[1, 3, 3, 1])));
        assert!(!is_strictly_unimodal(&row(&[1, 3, 2, 4])));
        assert!(unimodality_probe(3, 20).passed());
    }
}
