//! Schur polynomials as content generating functions of row-strict
//! semistandard tableaux, fundamental quasisymmetric functions, and the
//! desk-scale verification that a Schur polynomial is the sum of the
//! fundamental quasisymmetric functions over the lattice words of its shape.
//!
//! Conventions follow the rest of the crate (weak descents, row-strict
//! tableaux); under them the "Schur" polynomial built here is the classical
//! Schur function of the conjugate shape. The identity is verified exactly
//! as stated in these conventions, never silently transposed.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::AddAssign;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::tableaux::{chi, enumerate_ssyt_of_shape, enumerate_standard, Shape};
use crate::words::{weak_descent_set, YamanouchiWord};
use crate::{OracleBounds, Result};

/// A multivariate polynomial in a fixed number of variables, stored sparsely
/// as exponent vector -> nonnegative coefficient. Zero coefficients are never
/// stored; every exponent vector has length `vars`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparsePolynomial {
    vars: usize,
    terms: BTreeMap<Vec<u32>, BigUint>,
}

impl SparsePolynomial {
    pub fn zero(vars: usize) -> Self {
        SparsePolynomial {
            vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, BigUint> {
        &self.terms
    }

    /// Adds `coeff * x^exponents`.
    pub fn add_term(&mut self, exponents: Vec<u32>, coeff: BigUint) {
        assert_eq!(exponents.len(), self.vars, "exponent vector length");
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(exponents).or_insert_with(BigUint::zero);
        *entry += coeff;
    }

    /// Value at x_1 = ... = x_m = 1: the sum of all coefficients.
    pub fn eval_all_ones(&self) -> BigUint {
        self.terms.values().sum()
    }
}

impl AddAssign<&SparsePolynomial> for SparsePolynomial {
    fn add_assign(&mut self, rhs: &SparsePolynomial) {
        assert_eq!(self.vars, rhs.vars, "variable counts must match");
        for (e, c) in &rhs.terms {
            self.add_term(e.clone(), c.clone());
        }
    }
}

/// Canonical text rendering: monomials in decreasing lexicographic order of
/// exponent vectors, `*`-separated factors, `^` only for exponents > 1, the
/// coefficient printed when it is not 1. Stable across runs, suitable for
/// golden files.
impl fmt::Display for SparsePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (exps, coeff) in self.terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let mut factors: Vec<String> = Vec::new();
            if *coeff != BigUint::from(1u32) || exps.iter().all(|&e| e == 0) {
                factors.push(coeff.to_string());
            }
            for (i, &e) in exps.iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(format!("x{}", i + 1)),
                    _ => factors.push(format!("x{}^{}", i + 1, e)),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

/// The content generating polynomial of the row-strict semistandard fillings
/// of `shape` with entries in [1, vars]: the Schur polynomial in this
/// crate's conventions.
pub fn schur_via_ssyt(
    shape: &Shape,
    vars: usize,
    bounds: &OracleBounds,
) -> Result<SparsePolynomial> {
    let mut poly = SparsePolynomial::zero(vars);
    for t in enumerate_ssyt_of_shape(shape, vars, bounds)? {
        let exps: Vec<u32> = t.content().iter().map(|&c| c as u32).collect();
        poly.add_term(exps, BigUint::from(1u32));
    }
    Ok(poly)
}

/// The fundamental quasisymmetric function L_y in `vars` variables: the sum
/// of x_{i_1}...x_{i_n} over chains 1 <= i_1 <= ... <= i_n <= vars that
/// increase strictly at every weak descent of y.
pub fn fundamental_quasisym(
    y: &YamanouchiWord,
    vars: usize,
    bounds: &OracleBounds,
) -> Result<SparsePolynomial> {
    OracleBounds::check("quasisymmetric word length", y.len(), bounds.shape_cells)?;
    OracleBounds::check("quasisymmetric variables", vars, bounds.shape_symbols)?;
    let n = y.len();
    let descents = weak_descent_set(y.word());
    let strict_after: Vec<bool> = (1..=n).map(|i| descents.contains(&i)).collect();

    let mut poly = SparsePolynomial::zero(vars);
    let mut chain: Vec<usize> = Vec::with_capacity(n);

    fn rec(
        pos: usize,
        n: usize,
        vars: usize,
        strict_after: &[bool],
        chain: &mut Vec<usize>,
        poly: &mut SparsePolynomial,
    ) {
        if pos == n {
            let mut exps = vec![0u32; vars];
            for &i in chain.iter() {
                exps[i - 1] += 1;
            }
            poly.add_term(exps, BigUint::from(1u32));
            return;
        }
        let lo = match chain.last() {
            None => 1,
            Some(&prev) => {
                if strict_after[pos - 1] {
                    prev + 1
                } else {
                    prev
                }
            }
        };
        for i in lo..=vars {
            chain.push(i);
            rec(pos + 1, n, vars, strict_after, chain, poly);
            chain.pop();
        }
    }

    rec(0, n, vars, &strict_after, &mut chain, &mut poly);
    Ok(poly)
}

/// The lattice words of a shape: { chi(T) : T standard of shape lambda }.
pub fn yamanouchi_class(shape: &Shape, bounds: &OracleBounds) -> Result<Vec<YamanouchiWord>> {
    Ok(enumerate_standard(shape, bounds)?
        .iter()
        .map(chi)
        .collect())
}

/// Checks, as exact polynomials, that the Schur polynomial of `shape` equals
/// the sum of L_y over the lattice words y of `shape`.
pub fn verify_schur_identity(shape: &Shape, vars: usize, bounds: &OracleBounds) -> Result<bool> {
    let lhs = schur_via_ssyt(shape, vars, bounds)?;
    let mut rhs = SparsePolynomial::zero(vars);
    for y in yamanouchi_class(shape, bounds)? {
        rhs += &fundamental_quasisym(&y, vars, bounds)?;
    }
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn shape(parts: &[usize]) -> Shape {
        Shape::new(parts.to_vec()).unwrap()
    }

    fn yam(letters: &[u32]) -> YamanouchiWord {
        YamanouchiWord::from_letters(letters.to_vec()).unwrap()
    }

    #[test]
    fn schur_examples() {
        let b = OracleBounds::default();
        let col2 = schur_via_ssyt(&shape(&[1, 1]), 2, &b).unwrap();
        assert_eq!(col2.to_string(), "x1^2 + x1*x2 + x2^2");

        let row2 = schur_via_ssyt(&shape(&[2]), 2, &b).unwrap();
        assert_eq!(row2.to_string(), "x1*x2");

        let one = schur_via_ssyt(&shape(&[1]), 3, &b).unwrap();
        assert_eq!(one.to_string(), "x1 + x2 + x3");
    }

    #[test]
    fn quasisym_examples() {
        let b = OracleBounds::default();
        // des(1 1) = {1}: strict chains i < j
        let l11 = fundamental_quasisym(&yam(&[1, 1]), 3, &b).unwrap();
        assert_eq!(l11.to_string(), "x1*x2 + x1*x3 + x2*x3");

        // des(1 2) = {}: weak chains
        let l12 = fundamental_quasisym(&yam(&[1, 2]), 2, &b).unwrap();
        assert_eq!(l12.to_string(), "x1^2 + x1*x2 + x2^2");

        let empty = fundamental_quasisym(&yam(&[]), 3, &b).unwrap();
        assert_eq!(empty.to_string(), "1");
        assert_eq!(empty.eval_all_ones(), BigUint::from(1u32));
    }

    #[test]
    fn schur_identity_small() {
        let b = OracleBounds::default();
        assert!(verify_schur_identity(&shape(&[2]), 3, &b).unwrap());
        assert!(verify_schur_identity(&shape(&[1, 1]), 2, &b).unwrap());
        assert!(verify_schur_identity(&shape(&[2, 1]), 2, &b).unwrap());
    }

    #[test]
    fn schur_21_two_vars_value() {
        let b = OracleBounds::default();
        let s = schur_via_ssyt(&shape(&[2, 1]), 2, &b).unwrap();
        assert_eq!(s.to_string(), "x1^2*x2 + x1*x2^2");
        // Y((2,1)) = chi of the two standard tableaux: 1 1 2 and 1 2 1
        let ys = yamanouchi_class(&shape(&[2, 1]), &b).unwrap();
        let got: Vec<Vec<u32>> = ys.iter().map(|y| y.letters().to_vec()).collect();
        assert!(got.contains(&vec![1, 1, 2]));
        assert!(got.contains(&vec![1, 2, 1]));
        assert_eq!(got.len(), 2);
    }

    #[test]
    fn bounds_rejected() {
        let b = OracleBounds::default();
        assert!(schur_via_ssyt(&shape(&[7]), 2, &b).is_err());
        assert!(fundamental_quasisym(&yam(&[1; 7]), 2, &b).is_err());
        assert!(fundamental_quasisym(&yam(&[1]), 5, &b).is_err());
    }

    #[test]
    fn display_zero_and_coeffs() {
        assert_eq!(SparsePolynomial::zero(2).to_string(), "0");
        let mut p = SparsePolynomial::zero(2);
        p.add_term(vec![1, 0], BigUint::from(2u32));
        p.add_term(vec![0, 0], BigUint::from(3u32));
        assert_eq!(p.to_string(), "2*x1 + 3");
    }
}
