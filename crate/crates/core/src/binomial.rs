//! Small exact helpers for binomial coefficients and factorials.

use num_bigint::BigUint;
use num_traits::One;

/// `C(n, r)`, zero when `r > n`.
pub fn binomial(n: usize, r: usize) -> BigUint {
    if r > n {
        return BigUint::default();
    }
    let r = r.min(n - r);
    let mut acc = BigUint::one();
    for i in 0..r {
        // acc * (n - i) is divisible by (i + 1) at every step
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

/// `C(n, r)` where `n` may be negative; combinatorial convention, so zero
/// whenever `n < 0` or `r > n`.
pub fn binomial_signed(n: i64, r: usize) -> BigUint {
    if n < 0 {
        BigUint::default()
    } else {
        binomial(n as usize, r)
    }
}

pub fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, i| acc * BigUint::from(i))
}

pub fn pow2(e: usize) -> BigUint {
    BigUint::one() << e
}

pub fn pow3(e: usize) -> BigUint {
    BigUint::from(3u32).pow(e as u32)
}
