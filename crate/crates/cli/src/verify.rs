//! The `verify` subcommand: named identity suites with a machine-readable
//! JSON report. Exit 0 only when every checked identity holds.

use std::collections::BTreeMap;

use descents::analysis::{is_symmetric, is_unimodal};
use descents::arith::{binom, BigInt, BigUint};
use descents::counting::{
    brute_descent_rows, brute_ssyt_count, involution_row, ssyt_count, ssyt_count_from_y_row,
    ssyt_count_series, verify_gf_relation, yamanouchi_count, yamanouchi_count_explicit,
    yamanouchi_count_explicit_printed, yamanouchi_row,
};
use descents::symfunc::{fundamental_quasisym, schur_via_ssyt, verify_schur_identity};
use descents::tableaux::{
    biword_to_ssyt, chi, chi_inverse, conjugate_tableau, enumerate_ssyt, partitions_of, phi,
    ssyt_to_biword,
};
use descents::words::{
    conjugate_word, descent_count, descent_set_involution, enumerate_involutions,
    enumerate_yamanouchi, involution_count,
};
use descents::OracleBounds;
use serde::Serialize;

use crate::output;
use crate::{Suite, UsageError, VerifyArgs, EXIT_FAILED, EXIT_OK};

#[derive(Serialize)]
struct Report {
    suite: String,
    passed: bool,
    checks: Vec<Check>,
}

#[derive(Serialize)]
struct Check {
    name: String,
    range: String,
    passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<String>,
}

pub fn run(args: &VerifyArgs) -> Result<u8, UsageError> {
    if args.printed_form && args.suite != Suite::Eq4 {
        return Err(UsageError(
            "--printed-form applies only to the eq4 suite".to_string(),
        ));
    }
    let bounds = widen(args.oracle_bound);
    let checks = match args.suite {
        Suite::Bijections => bijections(args, &bounds)?,
        Suite::Symmetry => symmetry(args),
        Suite::Eq2 => eq2(args, &bounds)?,
        Suite::Eq3 => eq3(args, &bounds)?,
        Suite::Eq4 => eq4(args, &bounds)?,
        Suite::Gf => gf(args),
        Suite::Schur => schur(args, &bounds)?,
        Suite::All => {
            let mut all = bijections(args, &bounds)?;
            all.extend(symmetry(args));
            all.extend(eq2(args, &bounds)?);
            all.extend(eq3(args, &bounds)?);
            all.extend(eq4(args, &bounds)?);
            all.extend(gf(args));
            all.extend(schur(args, &bounds)?);
            all
        }
    };

    let passed = checks.iter().all(|c| c.passed);
    let report = Report {
        suite: suite_name(args.suite).to_string(),
        passed,
        checks,
    };
    let mut text = serde_json::to_string_pretty(&report).expect("report serializes");
    text.push('\n');
    output::emit(&text, args.out.as_deref())
        .map_err(|e| UsageError(format!("cannot write output: {e}")))?;

    if passed {
        Ok(EXIT_OK)
    } else {
        if let Some(first) = report.checks.iter().find(|c| !c.passed) {
            eprintln!(
                "verification failed: {} over {}: {}",
                first.name,
                first.range,
                first.witness.as_deref().unwrap_or("(no witness)")
            );
        }
        Ok(EXIT_FAILED)
    }
}

fn suite_name(suite: Suite) -> &'static str {
    match suite {
        Suite::Bijections => "bijections",
        Suite::Symmetry => "symmetry",
        Suite::Eq2 => "eq2",
        Suite::Eq3 => "eq3",
        Suite::Eq4 => "eq4",
        Suite::Gf => "gf",
        Suite::Schur => "schur",
        Suite::All => "all",
    }
}

fn widen(oracle_bound: Option<usize>) -> OracleBounds {
    let mut b = OracleBounds::default();
    if let Some(n) = oracle_bound {
        b.yamanouchi_len = b.yamanouchi_len.max(n);
        b.involution_len = b.involution_len.max(n);
        b.ssyt_cells = b.ssyt_cells.max(n);
        b.ssyt_symbols = b.ssyt_symbols.max(n);
        b.standard_cells = b.standard_cells.max(n);
        b.shape_cells = b.shape_cells.max(n);
        b.shape_symbols = b.shape_symbols.max(n);
    }
    b
}

fn check(name: &str, range: String, witness: Option<String>) -> Check {
    Check {
        name: name.to_string(),
        range,
        passed: witness.is_none(),
        witness,
    }
}

fn usage(e: descents::Error) -> UsageError {
    UsageError(format!("{e}; raise it with --oracle-bound"))
}

fn bijections(args: &VerifyArgs, bounds: &OracleBounds) -> Result<Vec<Check>, UsageError> {
    let n_max = args.n_max.unwrap_or(8);
    let s_cap = args.s_max.unwrap_or(5);
    let mut checks = Vec::new();

    // d(phi(sigma)) = n - 1 - d(sigma) on every involution
    let mut witness = None;
    'phi: for n in 0..=n_max {
        for sigma in enumerate_involutions(n, bounds).map_err(usage)? {
            let lhs = descent_count(phi(&sigma).word());
            let rhs = n.saturating_sub(1) - descent_set_involution(&sigma).len();
            if lhs != rhs {
                witness = Some(format!("sigma = {sigma}: d(phi) = {lhs}, expected {rhs}"));
                break 'phi;
            }
        }
    }
    checks.push(check(
        "phi-descent-complementation",
        format!("n <= {n_max}"),
        witness,
    ));

    // conjugation is an involution and complements the descent count
    let mut invol_witness = None;
    let mut compl_witness = None;
    'conj: for n in 0..=n_max {
        for y in enumerate_yamanouchi(n, bounds).map_err(usage)? {
            let c = conjugate_word(&y);
            if conjugate_word(&c) != y {
                invol_witness = Some(format!("y = {y}"));
                break 'conj;
            }
            if n >= 1 && descent_count(c.word()) != n - 1 - descent_count(y.word()) {
                compl_witness = Some(format!("y = {y}"));
                break 'conj;
            }
        }
    }
    checks.push(check(
        "conjugation-involutive",
        format!("n <= {n_max}"),
        invol_witness,
    ));
    checks.push(check(
        "conjugation-descent-complementation",
        format!("n <= {n_max}"),
        compl_witness,
    ));

    // chi round trips, and conjugating tableaux matches conjugating words
    let mut rt_witness = None;
    let mut cc_witness = None;
    'chi: for n in 0..=n_max {
        for y in enumerate_yamanouchi(n, bounds).map_err(usage)? {
            let t = chi_inverse(&y);
            if chi(&t) != y {
                rt_witness = Some(format!("y = {y}"));
                break 'chi;
            }
            if chi(&conjugate_tableau(&t)) != conjugate_word(&y) {
                cc_witness = Some(format!("y = {y}"));
                break 'chi;
            }
        }
    }
    checks.push(check("chi-roundtrip", format!("n <= {n_max}"), rt_witness));
    checks.push(check(
        "conjugation-compatibility",
        format!("n <= {n_max}"),
        cc_witness,
    ));

    // biword round trip over all tableaux
    let n_bw = n_max.min(7);
    let mut witness = None;
    'biword: for n in 0..=n_bw {
        for s in 0..=s_cap {
            for t in enumerate_ssyt(n, s, bounds).map_err(usage)? {
                if biword_to_ssyt(&ssyt_to_biword(&t)) != t {
                    witness = Some(format!("n = {n}, s = {s}"));
                    break 'biword;
                }
            }
        }
    }
    checks.push(check(
        "biword-roundtrip",
        format!("n <= {n_bw}, s <= {s_cap}"),
        witness,
    ));

    // tableaux with row word y and s symbols number C(n + s - k - 1, n)
    let n_cc = args.n_max.unwrap_or(6).min(6);
    let s_cc = args.s_max.unwrap_or(6).min(6);
    let mut witness = None;
    'comp: for n in 0..=n_cc {
        for s in 0..=s_cc {
            let mut by_word: BTreeMap<Vec<u32>, u64> = BTreeMap::new();
            for t in enumerate_ssyt(n, s, bounds).map_err(usage)? {
                let b = ssyt_to_biword(&t);
                *by_word.entry(b.row_word().letters().to_vec()).or_insert(0) += 1;
            }
            for y in enumerate_yamanouchi(n, bounds).map_err(usage)? {
                let k = descent_count(y.word()) as i64;
                let expect = binom(n as i64 + s as i64 - k - 1, n as i64);
                let got = by_word.get(y.letters()).copied().unwrap_or(0);
                if BigUint::from(got) != expect {
                    witness = Some(format!(
                        "n = {n}, s = {s}, y = {y}: {got} tableaux, expected {expect}"
                    ));
                    break 'comp;
                }
            }
        }
    }
    checks.push(check(
        "composition-count",
        format!("n <= {n_cc}, s <= {s_cc}"),
        witness,
    ));

    Ok(checks)
}

fn symmetry(args: &VerifyArgs) -> Vec<Check> {
    let n_max = args.n_max.unwrap_or(40);
    let mut sym_witness = None;
    let mut uni_witness = None;
    for n in 0..=n_max {
        let y_row = yamanouchi_row(n);
        if !is_symmetric(&y_row) {
            sym_witness.get_or_insert(format!("y-row n = {n}"));
        }
        let i_row = involution_row(n);
        if !is_symmetric(&i_row) {
            sym_witness.get_or_insert(format!("i-row n = {n}"));
        }
        if !is_unimodal(&i_row) {
            uni_witness.get_or_insert(format!("i-row n = {n}"));
        }
    }
    vec![
        check("descent-row-symmetry", format!("n <= {n_max}"), sym_witness),
        check(
            "involution-row-unimodality",
            format!("n <= {n_max}"),
            uni_witness,
        ),
    ]
}

fn eq2(args: &VerifyArgs, bounds: &OracleBounds) -> Result<Vec<Check>, UsageError> {
    let n_formula = args.n_max.unwrap_or(40);
    let s_formula = args.s_max.unwrap_or(40);
    let mut tr_witness = None;
    let mut se_witness = None;
    for n in 0..=n_formula {
        let y_row = yamanouchi_row(n);
        for s in 0..=s_formula {
            if ssyt_count_from_y_row(n, s, &y_row) != ssyt_count(n, s) {
                tr_witness.get_or_insert(format!("n = {n}, s = {s}"));
            }
        }
    }
    for s in 0..=s_formula {
        let col = ssyt_count_series(n_formula, s);
        for (n, v) in col.iter().enumerate() {
            if *v != ssyt_count(n, s) {
                se_witness.get_or_insert(format!("n = {n}, s = {s}"));
            }
        }
    }
    let mut checks = vec![
        check(
            "transform-matches-closed-formula",
            format!("n <= {n_formula}, s <= {s_formula}"),
            tr_witness,
        ),
        check(
            "series-matches-closed-formula",
            format!("n <= {n_formula}, s <= {s_formula}"),
            se_witness,
        ),
    ];

    let n_brute = args.n_max.unwrap_or(8).min(bounds.ssyt_cells);
    let s_brute = args.s_max.unwrap_or(8).min(bounds.ssyt_symbols);
    let mut witness = None;
    'brute: for n in 0..=n_brute {
        let y_row = yamanouchi_row(n);
        for s in 0..=s_brute {
            let brute = brute_ssyt_count(n, s, bounds).map_err(usage)?;
            if ssyt_count_from_y_row(n, s, &y_row) != brute {
                witness = Some(format!("n = {n}, s = {s}"));
                break 'brute;
            }
        }
    }
    checks.push(check(
        "transform-matches-enumeration",
        format!("n <= {n_brute}, s <= {s_brute}"),
        witness,
    ));
    Ok(checks)
}

fn eq3(args: &VerifyArgs, bounds: &OracleBounds) -> Result<Vec<Check>, UsageError> {
    let n_brute = args.n_max.unwrap_or(10).min(bounds.yamanouchi_len);
    let mut witness = None;
    for n in 0..=n_brute {
        let (brute_i, brute_y) = brute_descent_rows(n, bounds).map_err(usage)?;
        if yamanouchi_row(n) != brute_y {
            witness.get_or_insert(format!("y-row n = {n}"));
        }
        if involution_row(n) != brute_i {
            witness.get_or_insert(format!("i-row n = {n}"));
        }
    }
    let mut checks = vec![check(
        "inverse-transform-matches-enumeration",
        format!("n <= {n_brute}"),
        witness,
    )];

    let n_sum = args.n_max.unwrap_or(40);
    let mut witness = None;
    for n in 0..=n_sum {
        let total: BigUint = yamanouchi_row(n).iter().sum();
        if total != involution_count(n) {
            witness = Some(format!("n = {n}: row sums to {total}"));
            break;
        }
    }
    checks.push(check(
        "row-sums-match-involution-numbers",
        format!("n <= {n_sum}"),
        witness,
    ));
    Ok(checks)
}

fn eq4(args: &VerifyArgs, bounds: &OracleBounds) -> Result<Vec<Check>, UsageError> {
    if args.printed_form {
        let n_max = args.n_max.unwrap_or(4).min(bounds.yamanouchi_len);
        let mut witness = None;
        'printed: for n in 0..=n_max {
            let (_, brute_y) = brute_descent_rows(n, bounds).map_err(usage)?;
            for (k, expected) in brute_y.iter().enumerate() {
                let printed = yamanouchi_count_explicit_printed(n, k);
                if printed != BigInt::from(expected.clone()) {
                    witness = Some(format!(
                        "n = {n}, k = {k}: printed form gives {printed}, enumeration gives {expected}"
                    ));
                    break 'printed;
                }
            }
        }
        return Ok(vec![check(
            "printed-variant-matches-enumeration",
            format!("n <= {n_max}"),
            witness,
        )]);
    }

    let n_ident = args.n_max.unwrap_or(60);
    let mut witness = None;
    'ident: for n in 0..=n_ident {
        for k in 0..n.max(1) {
            if yamanouchi_count_explicit(n, k) != yamanouchi_count(n, k) {
                witness = Some(format!("n = {n}, k = {k}"));
                break 'ident;
            }
        }
    }
    let mut checks = vec![check(
        "explicit-matches-inverse-transform",
        format!("n <= {n_ident}"),
        witness,
    )];

    let n_brute = args.n_max.unwrap_or(10).min(bounds.yamanouchi_len);
    let mut witness = None;
    'brute: for n in 0..=n_brute {
        let (_, brute_y) = brute_descent_rows(n, bounds).map_err(usage)?;
        for (k, expected) in brute_y.iter().enumerate() {
            if yamanouchi_count_explicit(n, k) != *expected {
                witness = Some(format!("n = {n}, k = {k}"));
                break 'brute;
            }
        }
    }
    checks.push(check(
        "explicit-matches-enumeration",
        format!("n <= {n_brute}"),
        witness,
    ));
    Ok(checks)
}

fn gf(args: &VerifyArgs) -> Vec<Check> {
    let n_max = args.n_max.unwrap_or(20);
    let mut witness = None;
    for n in 1..=n_max {
        if !verify_gf_relation(n, 3 * n) {
            witness = Some(format!("n = {n} at order {}", 3 * n));
            break;
        }
    }
    vec![check(
        "row-gf-matches-descent-polynomial",
        format!("1 <= n <= {n_max}, order 3n"),
        witness,
    )]
}

fn schur(args: &VerifyArgs, bounds: &OracleBounds) -> Result<Vec<Check>, UsageError> {
    let size_max = args.size_max.unwrap_or(6).min(bounds.shape_cells);
    let m_max = args.m_max.unwrap_or(4).min(bounds.shape_symbols);

    let mut witness = None;
    'schur: for n in 0..=size_max {
        for shape in partitions_of(n) {
            for m in 0..=m_max {
                if !verify_schur_identity(&shape, m, bounds).map_err(usage)? {
                    witness = Some(format!("shape {shape}, m = {m}"));
                    break 'schur;
                }
            }
        }
    }
    let mut checks = vec![check(
        "schur-equals-quasisym-sum",
        format!("|shape| <= {size_max}, m <= {m_max}"),
        witness,
    )];

    // all-ones specialization summed over shapes of n equals the tableau count
    let mut witness = None;
    'ones: for n in 0..=size_max {
        for m in 0..=m_max {
            let mut total = BigUint::from(0u32);
            for shape in partitions_of(n) {
                total += schur_via_ssyt(&shape, m, bounds)
                    .map_err(usage)?
                    .eval_all_ones();
            }
            if total != brute_ssyt_count(n, m, bounds).map_err(usage)? {
                witness = Some(format!("n = {n}, m = {m}"));
                break 'ones;
            }
        }
    }
    checks.push(check(
        "all-ones-specialization",
        format!("n <= {size_max}, m <= {m_max}"),
        witness,
    ));

    // L_y(1,...,1) = C(n + m - d(y) - 1, n)
    let mut witness = None;
    'lones: for n in 0..=size_max.min(bounds.yamanouchi_len) {
        for y in enumerate_yamanouchi(n, bounds).map_err(usage)? {
            for m in 0..=m_max {
                let ones = fundamental_quasisym(&y, m, bounds)
                    .map_err(usage)?
                    .eval_all_ones();
                let k = descent_count(y.word()) as i64;
                if ones != binom(n as i64 + m as i64 - k - 1, n as i64) {
                    witness = Some(format!("y = {y}, m = {m}"));
                    break 'lones;
                }
            }
        }
    }
    checks.push(check(
        "quasisym-all-ones-count",
        format!(
            "n <= {}, m <= {m_max}",
            size_max.min(bounds.yamanouchi_len)
        ),
        witness,
    ));

    Ok(checks)
}
