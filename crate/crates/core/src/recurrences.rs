//! Auxiliary-count recurrences for two- and three-row grids.
//!
//! These refine `T(m,n;k)` by the contents of the last column and are an
//! implementation independent of the mask DP in [`crate::transfer`].
//!
//! Two rows: `t0` counts selections whose last column is empty, `t1` those
//! whose last column holds only the bottom square.
//!
//! ```text
//! T(n,k)  = T0(n,k) + 2 T1(n,k)
//! T0(n,k) = T(n-1,k)
//! T1(n,k) = T0(n-1,k-1) + T1(n-1,k-1)
//! ```
//!
//! Three rows: `tb`, `tc` count a last column holding only the bottom (resp.
//! centre) square, `td` one holding both outer squares.
//!
//! ```text
//! T(n,k)  = 2 Tb(n,k) + Tc(n,k) + Td(n,k) + T(n-1,k)
//! Tb(n,k) = Tb(n-1,k-1) + Tc(n-1,k-1) + T(n-2,k-1)
//! Tc(n,k) = 2 Tb(n-1,k-1) + Td(n-1,k-1) + T(n-2,k-1)
//! Td(n,k) = Tc(n-1,k-2) + T(n-2,k-2)
//! ```
//!
//! Both systems start from the single-column counts and the empty grid
//! `T(m,0;·) = [1]`; counts at negative `k` are zero.

use num_traits::Zero;

use crate::counts::{Count, RowTable};

/// Entry `k` of a count sequence, zero past its end.
pub fn at(seq: &[Count], k: usize) -> Count {
    seq.get(k).cloned().unwrap_or_default()
}

fn trim(mut v: Vec<Count>) -> Vec<Count> {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
    v
}

/// `sum_i coeff_i * seq_i[k - shift_i]` for all `k`.
fn combine(terms: &[(u32, &[Count], usize)]) -> Vec<Count> {
    let len = terms.iter().map(|(_, s, sh)| s.len() + sh).max().unwrap_or(0);
    let mut out = vec![Count::zero(); len];
    for &(coeff, seq, shift) in terms {
        for (k, c) in seq.iter().enumerate() {
            out[k + shift] += c * coeff;
        }
    }
    trim(out)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoRowAux {
    pub n: usize,
    pub t0: Vec<Count>,
    pub t1: Vec<Count>,
}

impl TwoRowAux {
    /// `T(2,n;·) = T0 + 2 T1`.
    pub fn reconstruct(&self) -> RowTable {
        RowTable::new(2, self.n, combine(&[(1, &self.t0, 0), (2, &self.t1, 0)]))
    }
}

/// Auxiliary rows for `n = 1..=n_max`.
pub fn t2_aux_sequence(n_max: usize) -> Vec<TwoRowAux> {
    let mut out: Vec<TwoRowAux> = Vec::with_capacity(n_max);
    for n in 1..=n_max {
        let next = match out.last() {
            None => TwoRowAux {
                n: 1,
                t0: vec![Count::from(1u32)],
                t1: vec![Count::zero(), Count::from(1u32)],
            },
            Some(prev) => TwoRowAux {
                n,
                t0: prev.reconstruct().into_counts(),
                t1: combine(&[(1, &prev.t0, 1), (1, &prev.t1, 1)]),
            },
        };
        out.push(next);
    }
    out
}

/// `(T0(2,n;·), T1(2,n;·))` for `n >= 1`.
pub fn t2_aux_rows(n: usize) -> TwoRowAux {
    assert!(n >= 1, "auxiliary rows start at one column");
    t2_aux_sequence(n).pop().expect("n >= 1")
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThreeRowAux {
    pub n: usize,
    pub tb: Vec<Count>,
    pub tc: Vec<Count>,
    pub td: Vec<Count>,
    /// `T(3,n;·)` rebuilt from the auxiliary counts and `T(3,n-1;·)`.
    pub total: Vec<Count>,
}

impl ThreeRowAux {
    pub fn reconstruct(&self) -> RowTable {
        RowTable::new(3, self.n, self.total.clone())
    }
}

/// Auxiliary rows for `n = 1..=n_max`.
pub fn t3_aux_sequence(n_max: usize) -> Vec<ThreeRowAux> {
    let one = || Count::from(1u32);
    let mut out: Vec<ThreeRowAux> = Vec::with_capacity(n_max);
    // T(3,n-2;·) and T(3,n-1;·) while stepping
    let mut before_prev: Vec<Count> = Vec::new();
    let mut prev_total: Vec<Count> = vec![one()];
    for n in 1..=n_max {
        let (tb, tc, td) = match out.last() {
            None => (
                vec![Count::zero(), one()],
                vec![Count::zero(), one()],
                vec![Count::zero(), Count::zero(), one()],
            ),
            Some(p) => (
                combine(&[(1, &p.tb, 1), (1, &p.tc, 1), (1, &before_prev, 1)]),
                combine(&[(2, &p.tb, 1), (1, &p.td, 1), (1, &before_prev, 1)]),
                combine(&[(1, &p.tc, 2), (1, &before_prev, 2)]),
            ),
        };
        let total = combine(&[(2, &tb, 0), (1, &tc, 0), (1, &td, 0), (1, &prev_total, 0)]);
        before_prev = std::mem::replace(&mut prev_total, total.clone());
        out.push(ThreeRowAux { n, tb, tc, td, total });
    }
    out
}

/// `(Tb, Tc, Td)(3,n;·)` for `n >= 1`.
pub fn t3_aux_rows(n: usize) -> ThreeRowAux {
    assert!(n >= 1, "auxiliary rows start at one column");
    t3_aux_sequence(n).pop().expect("n >= 1")
}
