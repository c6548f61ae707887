use gridfree_core::three_row::{
    coefficient_check, difference_decomposition_check, first_difference_check, remark_check,
    unimodality_probe, verify_boundary_3xn, verify_poly_families,
};
use gridfree_core::two_row::{
    check_conjecture_c1, check_schroeder_differences, schroeder_prefix, unimodality_sweep,
    verify_boundary_2xn, verify_delta_lemmas, verify_hockeystick, verify_pascal_identity,
    verify_peak_inequalities, verify_poly2_columns, verify_section4_identities,
};
use gridfree_core::VerificationReport;

use crate::args::Suite;
use crate::{oracle_check, usage, CliResult};

/// `(default, minimum)` sweep bound for each suite.
fn bounds(suite: Suite) -> (usize, usize) {
    match suite {
        Suite::Pascal | Suite::Hockeystick => (100, 2),
        Suite::Unimodal | Suite::Unimodal3 | Suite::Boundary => (100, 0),
        Suite::Delta => (50, 2),
        Suite::Section4 | Suite::C1 => (50, 1),
        Suite::Schroeder => (schroeder_prefix().len() - 1, 1),
        Suite::Poly2 => (15, 1),
        Suite::Coeffs3 => (15, 2),
        Suite::Firstdiff => (10, 4),
        Suite::Remark3 => (12, 2),
        Suite::Oracle => (24, 1),
    }
}

pub(crate) fn run_suite(suite: Suite, max: Option<usize>) -> CliResult<Vec<VerificationReport>> {
    let (default, min) = bounds(suite);
    let max = max.unwrap_or(default);
    if max < min {
        return usage(format!("--max must be at least {min} for this suite"));
    }
    let reports = match suite {
        Suite::Pascal => vec![verify_pascal_identity(max)],
        Suite::Hockeystick => vec![verify_hockeystick(max)],
        Suite::Unimodal => vec![unimodality_sweep(max)],
        Suite::Delta => {
            let mut r = verify_delta_lemmas(max);
            r.extend(verify_peak_inequalities(max));
            r
        }
        Suite::Section4 => vec![verify_section4_identities(max)],
        Suite::C1 => vec![check_conjecture_c1(max)],
        Suite::Schroeder => {
            let prefix = schroeder_prefix();
            if max >= prefix.len() {
                return usage(format!(
                    "the built-in prefix covers k <= {}; use `oeis-check --target schroeder` with a b-file for more",
                    prefix.len() - 1
                ));
            }
            vec![check_schroeder_differences(max, &prefix)?]
        }
        Suite::Boundary => vec![verify_boundary_2xn(max), verify_boundary_3xn(max)],
        Suite::Poly2 => vec![verify_poly2_columns(max)],
        Suite::Coeffs3 => vec![
            verify_poly_families(max),
            coefficient_check(max),
            difference_decomposition_check(max),
        ],
        Suite::Firstdiff => vec![first_difference_check(max)],
        Suite::Remark3 => vec![remark_check(max)],
        Suite::Unimodal3 => vec![unimodality_probe(3, max)],
        Suite::Oracle => vec![oracle_check(max)?],
    };
    Ok(reports)
}
