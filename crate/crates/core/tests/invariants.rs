//! Exhaustive small-scale invariants: every identity the crate exposes is
//! checked against independent enumeration on the full range the defaults
//! allow.

use std::collections::BTreeSet;

use descents::arith::{binom, geometric_pow_series, series_product_trunc, IntPolynomial};
use descents::arith::{BigInt, BigUint};
use descents::counting::{
    brute_descent_rows, brute_ssyt_count, involution_row, ssyt_count, ssyt_count_from_y_row,
    ssyt_count_series, verify_gf_relation, yamanouchi_count, yamanouchi_count_explicit,
    yamanouchi_count_explicit_printed, yamanouchi_row, CountTable, Provenance, TableKind,
};
use descents::analysis::{is_symmetric, is_unimodal, log_concavity_violations};
use descents::symfunc::{fundamental_quasisym, schur_via_ssyt, verify_schur_identity};
use descents::tableaux::{
    biword_to_ssyt, chi, chi_inverse, conjugate_tableau, delta_encoding, delta_prime,
    enumerate_ssyt, enumerate_standard, partitions_of, phi, rs_tableau,
    ssyt_from_word_and_composition, ssyt_to_biword, Composition,
};
use descents::words::{
    conjugate_word, descent_count, descent_set_involution, enumerate_involutions,
    enumerate_yamanouchi, involution_count, weak_descent_set,
};
use descents::OracleBounds;

fn bounds() -> OracleBounds {
    OracleBounds::default()
}

#[test]
fn pascal_recurrence_to_500() {
    // deterministic sample: every n up to 60, then strides to 500
    let ns: Vec<i64> = (1..=60).chain((70..=500).step_by(35)).collect();
    for n in ns {
        for k in 1..=n {
            assert_eq!(
                binom(n, k),
                binom(n - 1, k - 1) + binom(n - 1, k),
                "n = {n}, k = {k}"
            );
        }
    }
}

#[test]
fn geometric_series_inverts_powers_of_one_minus_x() {
    // (1-x)^m * 1/(1-x)^m = 1 mod x^(N+1) for every m <= 60 at N = 200
    let order = 200;
    let one_minus_x = IntPolynomial::from_i64(&[1, -1]);
    let mut power = IntPolynomial::one();
    for m in 0..=60usize {
        let series = geometric_pow_series(m, 1, order).unwrap();
        assert_eq!(
            series_product_trunc(&series, &power, order),
            IntPolynomial::one(),
            "m = {m}"
        );
        power = &power * &one_minus_x;
    }
}

#[test]
fn conjugation_involutive_and_complementing_to_10() {
    for n in 0..=10 {
        for y in enumerate_yamanouchi(n, &bounds()).unwrap() {
            let c = conjugate_word(&y);
            assert_eq!(conjugate_word(&c), y);
            if n >= 1 {
                assert_eq!(
                    descent_count(c.word()),
                    n - 1 - descent_count(y.word()),
                    "y = {y}"
                );
            }
        }
    }
}

#[test]
fn yamanouchi_histogram_symmetric_to_12() {
    let loose = OracleBounds {
        yamanouchi_len: 12,
        ..bounds()
    };
    for n in 1..=12 {
        let mut row = vec![BigUint::from(0u32); n.max(1)];
        for y in enumerate_yamanouchi(n, &loose).unwrap() {
            row[descent_count(y.word())] += BigUint::from(1u32);
        }
        assert!(is_symmetric(&row), "n = {n}");
        let total: BigUint = row.iter().sum();
        assert_eq!(total, involution_count(n), "n = {n}");
    }
}

#[test]
fn chi_round_trips_exhaustively_to_10() {
    for n in 0..=10 {
        for y in enumerate_yamanouchi(n, &bounds()).unwrap() {
            assert_eq!(chi(&chi_inverse(&y)), y);
        }
    }
    // and the other direction over all standard tableaux of each shape
    for n in 0..=8 {
        for shape in partitions_of(n) {
            for t in enumerate_standard(&shape, &bounds()).unwrap() {
                assert_eq!(chi_inverse(&chi(&t)), t);
            }
        }
    }
}

#[test]
fn rs_is_a_bijection_onto_standard_tableaux_to_8() {
    for n in 0..=8 {
        let images: Vec<_> = enumerate_involutions(n, &bounds())
            .unwrap()
            .map(|sigma| rs_tableau(&sigma))
            .collect();
        let distinct: BTreeSet<String> = images.iter().map(|t| format!("{t:?}")).collect();
        assert_eq!(BigUint::from(distinct.len()), involution_count(n), "n = {n}");

        let mut all_standard = 0usize;
        for shape in partitions_of(n) {
            for t in enumerate_standard(&shape, &bounds()).unwrap() {
                all_standard += 1;
                assert!(distinct.contains(&format!("{t:?}")), "missed {t:?}");
            }
        }
        assert_eq!(BigUint::from(all_standard), involution_count(n), "n = {n}");
    }
}

#[test]
fn phi_complements_descents_to_9() {
    for n in 0..=9 {
        for sigma in enumerate_involutions(n, &bounds()).unwrap() {
            let d_sigma = descent_set_involution(&sigma).len();
            let d_word = descent_count(phi(&sigma).word());
            assert_eq!(
                d_word,
                n.saturating_sub(1) - d_sigma,
                "sigma = {sigma}"
            );
        }
    }
}

#[test]
fn tableau_conjugation_matches_word_conjugation_to_8() {
    for n in 0..=8 {
        for y in enumerate_yamanouchi(n, &bounds()).unwrap() {
            let t = chi_inverse(&y);
            assert_eq!(chi(&conjugate_tableau(&t)), conjugate_word(&y));
        }
    }
}

#[test]
fn biword_round_trip_to_7_5() {
    for n in 0..=7 {
        for s in 0..=5 {
            for t in enumerate_ssyt(n, s, &bounds()).unwrap() {
                let b = ssyt_to_biword(&t);
                assert_eq!(biword_to_ssyt(&b), t);
                // the gap encoding round-trips too (symbol bound 0 aside)
                if s >= 1 {
                    let delta = delta_encoding(&b).unwrap();
                    assert_eq!(delta.sum(), s as u64 - 1);
                    let descents = weak_descent_set(b.row_word().word());
                    let dp = delta_prime(&delta, &descents).unwrap();
                    let rebuilt =
                        ssyt_from_word_and_composition(b.row_word(), &dp, s as u32).unwrap();
                    assert_eq!(rebuilt, t);
                }
            }
        }
    }
}

/// Enumerates all compositions of `total` into `parts` nonnegative parts.
fn compositions(total: u32, parts: usize) -> Vec<Vec<u32>> {
    fn rec(total: u32, parts: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if parts == 1 {
            cur.push(total);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for first in 0..=total {
            cur.push(first);
            rec(total - first, parts - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if parts == 0 {
        return out;
    }
    rec(total, parts, &mut Vec::new(), &mut out);
    out
}

#[test]
fn composition_bijection_to_6_6() {
    for n in 0..=6usize {
        let words: Vec<_> = enumerate_yamanouchi(n, &bounds()).unwrap().collect();
        for s in 0..=6usize {
            // tableau side, grouped by row word
            let mut counts: std::collections::BTreeMap<Vec<u32>, u64> =
                std::collections::BTreeMap::new();
            for t in enumerate_ssyt(n, s, &bounds()).unwrap() {
                *counts
                    .entry(ssyt_to_biword(&t).row_word().letters().to_vec())
                    .or_insert(0) += 1;
            }
            for y in &words {
                let k = descent_count(y.word());
                let expect = binom(n as i64 + s as i64 - k as i64 - 1, n as i64);
                let got = counts.get(y.letters()).copied().unwrap_or(0);
                assert_eq!(BigUint::from(got), expect, "count side: n={n} s={s} y={y}");

                // composition side: skip the one corner with no gap encoding
                if n == 0 && s == 0 {
                    continue;
                }
                if s > k {
                    let total = (s - k - 1) as u32;
                    let comps = compositions(total, n + 1);
                    assert_eq!(BigUint::from(comps.len()), expect, "n={n} s={s} y={y}");
                    let mut images = BTreeSet::new();
                    for c in comps {
                        let t = ssyt_from_word_and_composition(
                            y,
                            &Composition::new(c),
                            s as u32,
                        )
                        .unwrap();
                        assert_eq!(ssyt_to_biword(&t).row_word(), y);
                        images.insert(format!("{t:?}"));
                    }
                    assert_eq!(BigUint::from(images.len()), expect, "injectivity");
                }
            }
        }
    }
}

#[test]
fn formula_rows_match_enumeration_to_10() {
    for n in 0..=10 {
        let (brute_i, brute_y) = brute_descent_rows(n, &bounds()).unwrap();
        assert_eq!(yamanouchi_row(n), brute_y, "y-row n = {n}");
        assert_eq!(involution_row(n), brute_i, "i-row n = {n}");
        for (k, v) in brute_y.iter().enumerate() {
            assert_eq!(yamanouchi_count_explicit(n, k), *v, "n = {n}, k = {k}");
        }
    }
}

#[test]
fn tableau_count_routes_agree_to_8() {
    for n in 0..=8 {
        let y_row = yamanouchi_row(n);
        for s in 0..=8 {
            let closed = ssyt_count(n, s);
            assert_eq!(
                ssyt_count_series(n, s)[n],
                closed,
                "series route n = {n}, s = {s}"
            );
            assert_eq!(
                ssyt_count_from_y_row(n, s, &y_row),
                closed,
                "transform route n = {n}, s = {s}"
            );
            assert_eq!(
                brute_ssyt_count(n, s, &bounds()).unwrap(),
                closed,
                "enumeration n = {n}, s = {s}"
            );
        }
    }
}

#[test]
fn row_sums_and_symmetry_to_40() {
    for n in 0..=40 {
        let y_row = yamanouchi_row(n);
        let total: BigUint = y_row.iter().sum();
        assert_eq!(total, involution_count(n), "n = {n}");
        assert!(is_symmetric(&y_row), "y-row n = {n}");
        let i_row = involution_row(n);
        assert!(is_symmetric(&i_row), "i-row n = {n}");
        assert!(is_unimodal(&i_row), "i-row n = {n}");
    }
}

#[test]
fn explicit_equals_inverse_transform_to_100() {
    // full rows to 50, then a spread of columns up to n = 100
    for n in 0..=50 {
        for k in 0..n.max(1) {
            assert_eq!(
                yamanouchi_count_explicit(n, k),
                yamanouchi_count(n, k),
                "n = {n}, k = {k}"
            );
        }
    }
    for n in (55..=100).step_by(5) {
        let ks = [0, 1, 2, 3, n / 2, n - 3, n - 2, n - 1];
        for &k in &ks {
            assert_eq!(
                yamanouchi_count_explicit(n, k),
                yamanouchi_count(n, k),
                "n = {n}, k = {k}"
            );
        }
    }
}

#[test]
fn printed_variant_breaks_but_matches_nowhere_requires() {
    // the printed variant agrees at n <= 1 and first fails at n = 2, k = 1
    let mut first_break = None;
    'outer: for n in 0..=4 {
        let (_, brute_y) = brute_descent_rows(n, &bounds()).unwrap();
        for (k, expected) in brute_y.iter().enumerate() {
            if yamanouchi_count_explicit_printed(n, k) != BigInt::from(expected.clone()) {
                first_break = Some((n, k));
                break 'outer;
            }
        }
    }
    assert_eq!(first_break, Some((2, 1)));
}

#[test]
fn gf_relation_to_20() {
    for n in 1..=20 {
        assert!(verify_gf_relation(n, 3 * n), "n = {n}");
    }
    assert!(verify_gf_relation(0, 10));
}

#[test]
fn count_table_validates_row_sums() {
    let mut t = CountTable::new(TableKind::Involutions, Provenance::InverseTransform).unwrap();
    for n in 0..=25 {
        t.row(n, n.max(1) - 1, &bounds()).unwrap();
    }
    t.validate().unwrap();
}

#[test]
fn violation_reports_are_complete_and_exact() {
    for n in [10usize, 39, 45, 50] {
        let row = involution_row(n);
        let flagged: Vec<usize> = log_concavity_violations(&row)
            .iter()
            .map(|v| v.index)
            .collect();
        for i in 1..row.len() - 1 {
            let ok = &row[i - 1] * &row[i + 1] <= &row[i] * &row[i];
            assert_eq!(ok, !flagged.contains(&i), "n = {n}, index {i}");
        }
    }
}

#[test]
fn schur_identity_full_range() {
    for n in 0..=6 {
        for shape in partitions_of(n) {
            for m in 0..=4 {
                assert!(
                    verify_schur_identity(&shape, m, &bounds()).unwrap(),
                    "shape {shape}, m = {m}"
                );
            }
        }
    }
}

#[test]
fn schur_specialization_matches_enumeration() {
    for n in 0..=6 {
        for m in 0..=4 {
            let mut total = BigUint::from(0u32);
            for shape in partitions_of(n) {
                total += schur_via_ssyt(&shape, m, &bounds())
                    .unwrap()
                    .eval_all_ones();
            }
            assert_eq!(
                total,
                brute_ssyt_count(n, m, &bounds()).unwrap(),
                "n = {n}, m = {m}"
            );
        }
    }
}

#[test]
fn quasisym_all_ones_is_a_binomial() {
    for n in 0..=6 {
        for y in enumerate_yamanouchi(n, &bounds()).unwrap() {
            let k = descent_count(y.word()) as i64;
            for m in 0..=4usize {
                let ones = fundamental_quasisym(&y, m, &bounds())
                    .unwrap()
                    .eval_all_ones();
                assert_eq!(
                    ones,
                    binom(n as i64 + m as i64 - k - 1, n as i64),
                    "y = {y}, m = {m}"
                );
            }
        }
    }
}
