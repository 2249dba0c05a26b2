//! Exact integer arithmetic: binomial and multiset coefficients, and dense
//! univariate polynomials with arbitrary-precision coefficients.
//!
//! No floating point anywhere; every comparison downstream is an exact
//! integer comparison.

use std::fmt;
use std::ops::Mul;

use num_traits::{One, Zero};

pub use num_bigint::{BigInt, BigUint};

use crate::{Error, Result};

/// Binomial coefficient C(n, k) under the convention that makes every
/// formula in this crate total:
///
/// - `binom(n, 0) = 1` for all `n`, including negative `n`;
/// - otherwise 0 whenever `k < 0`, `n < 0`, or `k > n`.
///
/// The `k = 0` exception is what lets `multiset_coeff(0, 0) = 1` count the
/// empty multiset, which the closed tableau-count formula relies on at
/// symbol bound 1.
pub fn binom(n: i64, k: i64) -> BigUint {
    if k == 0 {
        return BigUint::one();
    }
    if k < 0 || n < 0 || k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k) as u64;
    let n = n as u64;
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

/// Number of multisets of size `size` drawn from `types` types:
/// C(types + size - 1, size). In particular `multiset_coeff(0, 0) = 1`
/// and `multiset_coeff(0, j) = 0` for `j > 0`.
pub fn multiset_coeff(types: usize, size: usize) -> BigUint {
    binom(types as i64 + size as i64 - 1, size as i64)
}

/// Dense univariate polynomial with arbitrary-precision signed integer
/// coefficients; index = exponent. The highest-degree stored coefficient is
/// nonzero unless the polynomial is zero (empty coefficient list).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPolynomial {
            coeffs: vec![BigInt::one()],
        }
    }

    /// Builds from dense coefficients, trimming trailing zeros.
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        let mut p = IntPolynomial { coeffs };
        p.trim();
        p
    }

    /// Convenience constructor from machine integers, for tests and small
    /// fixed polynomials like 1 - x.
    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// The monomial c * x^deg.
    pub fn monomial(coeff: BigInt, deg: usize) -> Self {
        if coeff.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); deg + 1];
        coeffs[deg] = coeff;
        IntPolynomial { coeffs }
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of x^i (zero beyond the stored degree).
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Truncation mod x^(order+1).
    pub fn truncated(&self, order: usize) -> Self {
        let take = self.coeffs.len().min(order + 1);
        Self::from_coeffs(self.coeffs[..take].to_vec())
    }

    /// Exact power by repeated multiplication; exponents here stay small.
    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }
}

/// Schoolbook product; degrees in this crate stay at a few hundred, so
/// nothing fancier is warranted.
impl Mul for &IntPolynomial {
    type Output = IntPolynomial;

    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::from_coeffs(out)
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*x")?,
                _ => write!(f, "{c}*x^{i}")?,
            }
        }
        Ok(())
    }
}

/// The truncation of 1/(1 - x^step)^types to degree `order`, i.e.
/// sum_j multiset_coeff(types, j) * x^(step*j). Rejects `step = 0`.
pub fn geometric_pow_series(types: usize, step: usize, order: usize) -> Result<IntPolynomial> {
    if step == 0 {
        return Err(Error::ZeroStep);
    }
    let mut coeffs = vec![BigInt::zero(); order + 1];
    let mut j = 0usize;
    while step * j <= order {
        coeffs[step * j] = BigInt::from(multiset_coeff(types, j));
        j += 1;
    }
    Ok(IntPolynomial::from_coeffs(coeffs))
}

/// (p * q) mod x^(order+1), without materializing the full product.
pub fn series_product_trunc(
    p: &IntPolynomial,
    q: &IntPolynomial,
    order: usize,
) -> IntPolynomial {
    let mut out = vec![BigInt::zero(); order + 1];
    for (i, a) in p.coeffs.iter().enumerate() {
        if i > order {
            break;
        }
        if a.is_zero() {
            continue;
        }
        for (j, b) in q.coeffs.iter().enumerate() {
            if i + j > order {
                break;
            }
            out[i + j] += a * b;
        }
    }
    IntPolynomial::from_coeffs(out)
}
