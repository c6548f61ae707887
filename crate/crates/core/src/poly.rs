//! Polynomials in one variable with exact rational coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational number in lowest terms with a positive denominator.
pub type Rational = BigRational;

pub fn rational(num: i64, den: i64) -> Rational {
    Rational::new(num.into(), den.into())
}

pub fn rational_from_int(v: impl Into<BigInt>) -> Rational {
    Rational::from_integer(v.into())
}

/// Coefficients in ascending degree. The leading coefficient is nonzero except
/// for the zero polynomial, which has no coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        Polynomial::new(vec![c])
    }

    /// The polynomial `n`.
    pub fn identity() -> Self {
        Polynomial::new(vec![Rational::zero(), Rational::one()])
    }

    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Polynomial::new(coeffs.iter().map(|&c| rational_from_int(c)).collect())
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial at -1.
    pub fn signed_degree(&self) -> i64 {
        self.coeffs.len() as i64 - 1
    }

    /// Coefficient of `n^i`; zero above the degree.
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn leading(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_int(&self, x: i64) -> Rational {
        self.eval(&rational_from_int(x))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Polynomial::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// `q(n) = p(n + c)`.
    pub fn shift(&self, c: i64) -> Self {
        let step = Polynomial::new(vec![rational_from_int(c), Rational::one()]);
        self.coeffs
            .iter()
            .rev()
            .fold(Polynomial::zero(), |acc, a| &(&acc * &step) + &Polynomial::constant(a.clone()))
    }

    /// Backward difference `p(n) - p(n - 1)`.
    pub fn backward_difference(&self) -> Self {
        self - &self.shift(-1)
    }

    /// Exact interpolation through `(nodes[i], values[i])` by Newton divided
    /// differences, expanded into the monomial basis.
    pub fn interpolate(nodes: &[Rational], values: &[Rational]) -> Result<Self> {
        assert_eq!(nodes.len(), values.len(), "one value per node");
        let count = nodes.len();
        let mut table = values.to_vec();
        for level in 1..count {
            for i in (level..count).rev() {
                let span = &nodes[i] - &nodes[i - level];
                if span.is_zero() {
                    return Err(Error::DegenerateNodes);
                }
                table[i] = (&table[i] - &table[i - 1]) / span;
            }
        }
        // Horner on the Newton form: c0 + (x - x0)(c1 + (x - x1)(c2 + ...))
        let mut acc = Polynomial::zero();
        for i in (0..count).rev() {
            let factor = Polynomial::new(vec![-nodes[i].clone(), Rational::one()]);
            acc = &(&acc * &factor) + &Polynomial::constant(table[i].clone());
        }
        Ok(acc)
    }

    /// Interpolates integer samples taken at consecutive integers
    /// `start, start + 1, ...`.
    pub fn interpolate_consecutive(start: i64, values: &[BigInt]) -> Result<Self> {
        let nodes: Vec<Rational> = (0..values.len() as i64)
            .map(|i| rational_from_int(start + i))
            .collect();
        let values: Vec<Rational> = values.iter().cloned().map(Rational::from_integer).collect();
        Polynomial::interpolate(&nodes, &values)
    }

    /// Splits into `numerator / denominator` with integer coefficients, the
    /// denominator being the lcm of the coefficient denominators.
    pub fn integer_form(&self) -> (Vec<BigInt>, BigInt) {
        let den = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let nums = self
            .coeffs
            .iter()
            .map(|c| (c * Rational::from_integer(den.clone())).to_integer())
            .collect();
        (nums, den)
    }

    /// Text form with a common denominator, highest degree first, e.g.
    /// `(9n^2 - 13n + 6)/2`.
    pub fn render(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let (nums, den) = self.integer_form();
        let mut out = String::new();
        let mut terms = 0;
        for (deg, c) in nums.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if terms == 0 {
                if c.is_negative() {
                    out.push('-');
                }
            } else {
                out.push_str(if c.is_negative() { " - " } else { " + " });
            }
            if !(mag.is_one() && deg > 0) {
                out.push_str(&mag.to_string());
            }
            match deg {
                0 => {}
                1 => out.push_str(var),
                _ => {
                    out.push_str(var);
                    out.push('^');
                    out.push_str(&deg.to_string());
                }
            }
            terms += 1;
        }
        if den.is_one() {
            out
        } else if terms == 1 {
            format!("{out}/{den}")
        } else {
            format!("({out})/{den}")
        }
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("n"))
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..len).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::new(out)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}
