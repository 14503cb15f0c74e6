//! Binomial coefficients with a single sign convention shared by every module.
//!
//! `binomial(a, b)` is zero for `b < 0`. For `a >= 0` it is the ordinary
//! coefficient (zero when `b > a`). For `a < 0` it is the falling-factorial
//! extension `a (a - 1) ... (a - b + 1) / b!`, so `C(-1, b) = (-1)^b`. This is
//! the convention under which the alternating partial-sum identity
//! `sum_{k=0}^{K} (-1)^k C(a, k) = (-1)^K C(a - 1, K)` holds for every `a`.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

/// Ordinary binomial coefficient for nonnegative arguments.
pub fn binomial_u(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// Integer binomial coefficient under the crate-wide convention (see module docs).
pub fn binomial(a: i64, b: i64) -> BigInt {
    if b < 0 {
        return BigInt::zero();
    }
    if a >= 0 {
        return BigInt::from(binomial_u(a as u64, b as u64));
    }
    // C(a, b) = (-1)^b C(b - a - 1, b) for a < 0.
    let magnitude = BigInt::from(binomial_u((b - a - 1) as u64, b as u64));
    if b % 2 == 0 {
        magnitude
    } else {
        -magnitude
    }
}

pub fn factorial(n: u64) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * k)
}

/// `x (x - 1) ... (x - k + 1)`, the value of the k-th derivative of `z^x` at `z = 1`.
pub fn falling_factorial(x: i64, k: u64) -> BigInt {
    (0..k as i64).fold(BigInt::one(), |acc, i| acc * (x - i))
}
