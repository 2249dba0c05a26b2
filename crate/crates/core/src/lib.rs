//! Exact tables and bijections for the descent statistic on involutions,
//! reverse Yamanouchi words, and semistandard Young tableaux.
//!
//! Everything here is exact integer arithmetic: counts are arbitrary-precision
//! naturals, signed intermediates are arbitrary-precision integers, and no
//! value ever passes through floating point. Descents are *weak* throughout
//! (`w_i >= w_{i+1}`); semistandard tableaux are *row-strict* (entries
//! strictly increase along rows, weakly increase down columns). Both
//! conventions are load-bearing for the identities verified by the test
//! suite, so no strict-descent or column-strict variants are offered.
//!
//! Module map:
//! - [`arith`]: big integers, binomial/multiset coefficients, dense
//!   univariate polynomials and truncated series.
//! - [`words`]: words, weak descents, involutions, reverse Yamanouchi words,
//!   conjugation, exhaustive enumeration.
//! - [`tableaux`]: standard/semistandard Young tableaux, the
//!   Robinson–Schensted map, the row-index word bijection, and the
//!   tableau <-> biword <-> composition encodings.
//! - [`counting`]: closed formulas, generating series, binomial transforms,
//!   and brute-force oracle tables.
//! - [`analysis`]: symmetry / unimodality / log-concavity diagnostics with
//!   exact violation witnesses.
//! - [`symfunc`]: Schur polynomials as content generating functions and
//!   fundamental quasisymmetric functions, at desk scale.

pub mod analysis;
pub mod arith;
pub mod counting;
pub mod symfunc;
pub mod tableaux;
pub mod words;

use thiserror::Error;

/// Errors produced by validating constructors and bounded enumerators.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid word: {0}")]
    InvalidWord(String),
    #[error("invalid involution: {0}")]
    InvalidInvolution(String),
    #[error("invalid shape: {0}")]
    InvalidShape(String),
    #[error("invalid tableau: {0}")]
    InvalidTableau(String),
    #[error("invalid biword: {0}")]
    InvalidBiword(String),
    #[error("invalid composition: {0}")]
    InvalidComposition(String),
    #[error("{what} of size {size} exceeds the oracle bound {bound}")]
    BoundExceeded {
        what: &'static str,
        size: usize,
        bound: usize,
    },
    #[error("series step must be at least 1")]
    ZeroStep,
    #[error("{method} cannot produce {kind} tables")]
    MethodMismatch {
        method: &'static str,
        kind: &'static str,
    },
}

pub type Result<T> = std::result::Result<T, Error>;

/// Size limits for the exhaustive (brute-force) enumerators.
///
/// The limits are configuration, not hard caps: raise them if you can afford
/// the combinatorial blow-up. The defaults keep the full oracle-agreement
/// suite comfortably inside CI budgets.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleBounds {
    /// Max length for enumerating reverse Yamanouchi words.
    pub yamanouchi_len: usize,
    /// Max n for enumerating involutions of [n].
    pub involution_len: usize,
    /// Max cell count for enumerating semistandard tableaux.
    pub ssyt_cells: usize,
    /// Max symbol bound for enumerating semistandard tableaux.
    pub ssyt_symbols: usize,
    /// Max cell count for enumerating standard tableaux of a shape.
    pub standard_cells: usize,
    /// Max cell count for fixed-shape semistandard fillings (symfunc scale).
    pub shape_cells: usize,
    /// Max symbol bound for fixed-shape semistandard fillings.
    pub shape_symbols: usize,
}

impl Default for OracleBounds {
    fn default() -> Self {
        OracleBounds {
            yamanouchi_len: 14,
            involution_len: 12,
            ssyt_cells: 8,
            ssyt_symbols: 8,
            standard_cells: 8,
            shape_cells: 6,
            shape_symbols: 4,
        }
    }
}

impl OracleBounds {
    pub(crate) fn check(what: &'static str, size: usize, bound: usize) -> Result<()> {
        if size > bound {
            Err(Error::BoundExceeded { what, size, bound })
        } else {
            Ok(())
        }
    }
}
