//! Hilbert functions and Hilbert series of Stanley–Reisner rings.
//!
//! Two independent routes are provided for each quantity: one from the f-vector
//! of the complex and one from the shifts and Betti numbers of a pure
//! resolution. Agreement between them is what the verifiers check.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::betti::{BettiVector, PureResolutionType};
use crate::binom::{binomial, falling_factorial};
use crate::complex::FVector;
use crate::error::{Error, Result};

/// Polynomial with integer coefficients; `coefficients[k]` multiplies `z^k`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct IntPolynomial {
    #[serde(with = "crate::json::decimal_vec")]
    coefficients: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coefficients: Vec<BigInt>) -> Self {
        while coefficients.last().is_some_and(Zero::is_zero) {
            coefficients.pop();
        }
        IntPolynomial { coefficients }
    }

    pub fn from_i64s(coefficients: &[i64]) -> Self {
        Self::new(coefficients.iter().copied().map(BigInt::from).collect())
    }

    pub fn one() -> Self {
        Self::from_i64s(&[1])
    }

    /// `(1 - z)^k`
    pub fn one_minus_z_pow(k: usize) -> Self {
        Self::new(
            (0..=k as i64)
                .map(|i| {
                    let c = binomial(k as i64, i);
                    if i % 2 == 0 {
                        c
                    } else {
                        -c
                    }
                })
                .collect(),
        )
    }

    /// `c z^k`
    pub fn monomial(c: BigInt, k: usize) -> Self {
        let mut coefficients = vec![BigInt::zero(); k + 1];
        coefficients[k] = c;
        Self::new(coefficients)
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.coefficients
    }

    pub fn coefficient(&self, k: usize) -> BigInt {
        self.coefficients.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coefficients.len().checked_sub(1)
    }

    pub fn eval_at_one(&self) -> BigInt {
        self.coefficients.iter().sum()
    }

    /// `K^{(j)}(1)`, computed exactly as `sum_k c_k k (k - 1) ... (k - j + 1)`.
    pub fn derivative_at_one(&self, j: usize) -> BigInt {
        self.coefficients
            .iter()
            .enumerate()
            .map(|(k, c)| c * falling_factorial(k as i64, j as u64))
            .sum()
    }

    pub fn add(&self, other: &Self) -> Self {
        let len = self.coefficients.len().max(other.coefficients.len());
        Self::new(
            (0..len)
                .map(|k| self.coefficient(k) + other.coefficient(k))
                .collect(),
        )
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::default();
        }
        let mut out = vec![BigInt::zero(); self.coefficients.len() + other.coefficients.len() - 1];
        for (i, a) in self.coefficients.iter().enumerate() {
            for (j, b) in other.coefficients.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    /// Exact quotient by `(1 - z)`, or `None` when `(1 - z)` does not divide.
    pub fn div_one_minus_z(&self) -> Option<Self> {
        if !self.eval_at_one().is_zero() {
            return None;
        }
        // P = (1 - z) Q  gives  q_k = p_0 + ... + p_k
        let mut acc = BigInt::zero();
        let mut q = Vec::with_capacity(self.coefficients.len());
        for c in &self.coefficients {
            acc += c;
            q.push(acc.clone());
        }
        Some(Self::new(q))
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coefficients.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let mag = c.abs();
            match (k, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "z")?,
                (1, false) => write!(f, "{mag}z")?,
                (_, true) => write!(f, "z^{k}")?,
                (_, false) => write!(f, "{mag}z^{k}")?,
            }
        }
        Ok(())
    }
}

/// `P(z) / (1 - z)^d` with `(1 - z)` not dividing `P` (unless `P = 0` or `d = 0`).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HilbertSeries {
    pub numerator: IntPolynomial,
    pub denom_exponent: usize,
}

impl HilbertSeries {
    /// Cancels common factors of `(1 - z)` until the numerator no longer vanishes at 1.
    pub fn reduced(mut numerator: IntPolynomial, mut denom_exponent: usize) -> Self {
        while denom_exponent > 0 && !numerator.is_zero() {
            match numerator.div_one_minus_z() {
                Some(q) => {
                    numerator = q;
                    denom_exponent -= 1;
                }
                None => break,
            }
        }
        HilbertSeries {
            numerator,
            denom_exponent,
        }
    }

    /// Coefficient of `z^t` in the power-series expansion.
    pub fn coefficient(&self, t: usize) -> BigInt {
        let d = self.denom_exponent as i64;
        if d == 0 {
            return self.numerator.coefficient(t);
        }
        self.numerator
            .coefficients()
            .iter()
            .enumerate()
            .take(t + 1)
            .map(|(k, p)| p * binomial(t as i64 - k as i64 + d - 1, d - 1))
            .sum()
    }
}

/// Dimension of the degree-`s` part of a polynomial ring in `n` variables.
pub fn polynomial_ring_dim(n: usize, s: i64) -> BigInt {
    if s < 0 {
        return BigInt::zero();
    }
    if n == 0 {
        return if s == 0 {
            BigInt::one()
        } else {
            BigInt::zero()
        };
    }
    binomial(s + n as i64 - 1, n as i64 - 1)
}

/// `dim_Q` of the degree-`t` part of the Stanley–Reisner ring with f-vector `f`:
/// `sum_j f_j C(t - 1, j)` for `t >= 1`, and 1 for `t = 0`.
pub fn hilbert_function_from_fvector(f: &FVector, t: u64) -> BigInt {
    if t == 0 {
        return BigInt::one();
    }
    (0..f.krull_dim() as isize)
        .map(|j| BigInt::from(f.f(j)) * binomial(t as i64 - 1, j as i64))
        .sum()
}

/// Hilbert function of a module with a pure resolution
/// `0 <- M <- R(-d_0)^{b_0} <- R(-d_1)^{b_1} <- ...` over `n` variables:
/// `h(t) = sum_i (-1)^i b_i dim R_{t - d_i}`.
pub fn hilbert_function_pure(
    res: &PureResolutionType,
    betti: &[BigInt],
    n: usize,
    t: u64,
) -> Result<BigInt> {
    if res.shifts().len() != betti.len() {
        return Err(Error::LengthMismatch {
            left: res.shifts().len(),
            right: betti.len(),
        });
    }
    Ok(res
        .shifts()
        .iter()
        .zip(betti)
        .enumerate()
        .map(|(i, (&d, b))| {
            let term = b * polynomial_ring_dim(n, t as i64 - d as i64);
            if i % 2 == 0 {
                term
            } else {
                -term
            }
        })
        .sum())
}

/// Hilbert function of `R/I` from the Betti numbers of an ideal `I` with linear
/// resolution: `h(t) = dim R_t + sum_i (-1)^{i+1} beta_i dim R_{t - m - i}`.
pub fn hilbert_function_from_resolution(betti: &BettiVector, n: usize, t: u64) -> BigInt {
    let (res, module_betti) = betti.quotient_resolution();
    hilbert_function_pure(&res, &module_betti, n, t).expect("lengths agree by construction")
}

/// Reduced Hilbert series from `H(z) = sum_k f_{k-1} z^k / (1 - z)^k`.
pub fn hilbert_series_from_fvector(f: &FVector) -> HilbertSeries {
    let d = f.krull_dim();
    let numerator = (0..=d).fold(IntPolynomial::default(), |acc, k| {
        let term = IntPolynomial::monomial(BigInt::from(f.f(k as isize - 1)), k)
            .mul(&IntPolynomial::one_minus_z_pow(d - k));
        acc.add(&term)
    });
    HilbertSeries::reduced(numerator, d)
}

/// `sum_i (-1)^i b_i z^{d_i}`, the numerator of the unreduced series over `(1 - z)^n`.
pub fn resolution_numerator(res: &PureResolutionType, betti: &[BigInt]) -> Result<IntPolynomial> {
    if res.shifts().len() != betti.len() {
        return Err(Error::LengthMismatch {
            left: res.shifts().len(),
            right: betti.len(),
        });
    }
    Ok(res.shifts().iter().zip(betti).enumerate().fold(
        IntPolynomial::default(),
        |acc, (i, (&d, b))| {
            let c = if i % 2 == 0 { b.clone() } else { -b.clone() };
            acc.add(&IntPolynomial::monomial(c, d as usize))
        },
    ))
}

/// Reduced Hilbert series of a module with a pure resolution over `n` variables.
pub fn hilbert_series_from_resolution(
    res: &PureResolutionType,
    betti: &[BigInt],
    n: usize,
) -> Result<HilbertSeries> {
    Ok(HilbertSeries::reduced(resolution_numerator(res, betti)?, n))
}

/// `e = P(1)`. `None` for `denom_exponent = 0`, where the degree-based
/// definition of multiplicity does not apply.
pub fn multiplicity_from_series(hs: &HilbertSeries) -> Option<BigInt> {
    (hs.denom_exponent >= 1).then(|| hs.numerator.eval_at_one())
}

/// Largest `m` such that `(1 - z)^m` divides `k`: the first `j` with `k^{(j)}(1) != 0`.
pub fn divisibility_order(k: &IntPolynomial) -> Result<usize> {
    if k.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    Ok((0..)
        .find(|&j| !k.derivative_at_one(j).is_zero())
        .expect("a nonzero polynomial has a nonvanishing derivative at 1"))
}
