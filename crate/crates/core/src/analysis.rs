//! Shape diagnostics for integer sequences: symmetry, unimodality, and
//! log-concavity with exact violation witnesses, plus scans across n that
//! locate the non-log-concave descent rows.
//!
//! All checks are exact integer comparisons on the full coefficient row,
//! including leading and trailing entries. Zeros are handled by the literal
//! definition: a zero between two positive entries is a violation.

use num_bigint::BigUint;

use crate::counting::{involution_row, ssyt_count};

/// One log-concavity violation at interior index i:
/// s_{i-1} * s_{i+1} > s_i^2, with both sides exact.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub index: usize,
    /// s_{i-1} * s_{i+1}
    pub neighbor_product: BigUint,
    /// s_i^2
    pub center_square: BigUint,
}

/// Shape diagnostics of one labeled sequence. `log_concave` is true exactly
/// when `violations` is empty, and the violation list is complete.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShapeReport {
    /// Row index n when the sequence is a table row.
    pub n: usize,
    /// States what the sequence is and which indexing its entries use.
    pub sequence_label: String,
    pub symmetric: bool,
    pub unimodal: bool,
    pub log_concave: bool,
    pub violations: Vec<Violation>,
}

/// Every interior index where log-concavity fails, with exact witnesses.
pub fn log_concavity_violations(seq: &[BigUint]) -> Vec<Violation> {
    let mut out = Vec::new();
    for i in 1..seq.len().saturating_sub(1) {
        let outer = &seq[i - 1] * &seq[i + 1];
        let center = &seq[i] * &seq[i];
        if outer > center {
            out.push(Violation {
                index: i,
                neighbor_product: outer,
                center_square: center,
            });
        }
    }
    out
}

pub fn is_log_concave(seq: &[BigUint]) -> bool {
    log_concavity_violations(seq).is_empty()
}

/// Weakly rises to some peak, then weakly falls.
pub fn is_unimodal(seq: &[BigUint]) -> bool {
    let mut i = 0;
    while i + 1 < seq.len() && seq[i] <= seq[i + 1] {
        i += 1;
    }
    while i + 1 < seq.len() && seq[i] >= seq[i + 1] {
        i += 1;
    }
    i + 1 >= seq.len()
}

/// Equal to its own reversal.
pub fn is_symmetric(seq: &[BigUint]) -> bool {
    seq.iter().eq(seq.iter().rev())
}

/// Full diagnostics for one sequence.
pub fn shape_report(n: usize, sequence_label: impl Into<String>, seq: &[BigUint]) -> ShapeReport {
    let violations = log_concavity_violations(seq);
    ShapeReport {
        n,
        sequence_label: sequence_label.into(),
        symmetric: is_symmetric(seq),
        unimodal: is_unimodal(seq),
        log_concave: violations.is_empty(),
        violations,
    }
}

/// Diagnostics of the involution descent rows i(n, .) for n in the inclusive
/// range, built from the formula route. Indices in the reports are i-indices
/// (h = number of descents); the mirrored y-index is n-1-h.
pub fn scan_involution_rows(n_from: usize, n_to: usize) -> Vec<ShapeReport> {
    (n_from..=n_to)
        .map(|n| {
            let row = involution_row(n);
            shape_report(n, format!("involutions n={n} (i-indexing, k = descents)"), &row)
        })
        .collect()
}

/// Diagnostics of the tableau-count rows a(n, k) for k = 0..=k_max, built
/// from the closed formula.
pub fn scan_ssyt_rows(n_from: usize, n_to: usize, k_max: usize) -> Vec<ShapeReport> {
    (n_from..=n_to)
        .map(|n| {
            let row: Vec<BigUint> = (0..=k_max.max(1)).map(|k| ssyt_count(n, k)).collect();
            shape_report(n, format!("ssyt n={n} (k = symbol bound)"), &row)
        })
        .collect()
}

/// The smallest n among the reports whose row is not log-concave.
pub fn minimal_non_log_concave(reports: &[ShapeReport]) -> Option<usize> {
    reports.iter().filter(|r| !r.log_concave).map(|r| r.n).min()
}
