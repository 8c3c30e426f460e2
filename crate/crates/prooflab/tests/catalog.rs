use std::collections::BTreeSet;

use chevgroup::SystemType;
use prooflab::{
    builtin_catalog, catalog_from_json, catalog_to_json, full_catalog, mutate, run_catalog, run_identity, skipped_claims,
    Verdict,
};

const SYSTEMS: [SystemType; 4] = [SystemType::A1, SystemType::A2, SystemType::B2, SystemType::G2];

/// Records transcribed as printed whose printed form does not hold; each has a
/// `-corrected` sibling.
const PRINTED_DISCREPANCIES: [&str; 7] = [
    "A2-X2inv-local",
    "A2-X2-local",
    "A2-X2-consistency",
    "A2-trace",
    "A2-rank-one",
    "B2-X1-comm",
    "B2-trace",
];

#[test]
fn g2_catalog_is_large_enough() {
    assert!(builtin_catalog(SystemType::G2).len() >= 15);
}

#[test]
fn names_are_unique_and_disjoint_across_systems() {
    let mut seen = BTreeSet::new();
    for sys in SYSTEMS {
        for rec in builtin_catalog(sys) {
            assert_eq!(rec.system, sys);
            assert!(seen.insert(rec.name.clone()), "duplicate {}", rec.name);
        }
    }
}

#[test]
fn records_pass_except_printed_discrepancies() {
    for r in run_catalog(&full_catalog()) {
        if PRINTED_DISCREPANCIES.contains(&r.name.as_str()) {
            assert_eq!(r.verdict, Verdict::Fail, "{} was expected to fail", r.name);
            assert_ne!(r.residual, "0");
        } else {
            assert_eq!(r.verdict, Verdict::Pass, "{}: {}", r.name, r.residual);
        }
    }
}

#[test]
fn every_discrepancy_has_a_passing_correction() {
    let reports = run_catalog(&full_catalog());
    for name in PRINTED_DISCREPANCIES {
        let fixed = format!("{name}-corrected");
        let r = reports.iter().find(|r| r.name == fixed).unwrap_or_else(|| panic!("missing {fixed}"));
        assert_eq!(r.verdict, Verdict::Pass, "{fixed}: {}", r.residual);
    }
}

#[test]
fn every_mutant_fails() {
    for rec in full_catalog() {
        let m = mutate(&rec).unwrap_or_else(|| panic!("{} has no mutant", rec.name));
        assert!(m.name.ends_with("~mutant"));
        let verdict = run_identity(&m).map(|r| r.verdict).unwrap_or(Verdict::Fail);
        assert_eq!(verdict, Verdict::Fail, "mutant of {} did not fail", rec.name);
    }
}

#[test]
fn b2_sign_mutant_fails() {
    let rec = builtin_catalog(SystemType::B2).into_iter().find(|r| r.name == "B2-X3-comm").unwrap();
    assert_eq!(run_identity(&rec).unwrap().verdict, Verdict::Pass);
    let mut text = catalog_to_json(&[rec]);
    text = text.replace("x(a+2b, -2)", "x(a+2b, 2)");
    assert!(text.contains("x(a+2b, 2)"));
    let flipped = catalog_from_json(&text).unwrap();
    assert_eq!(run_identity(&flipped[0]).unwrap().verdict, Verdict::Fail);
}

#[test]
fn json_round_trip_preserves_records() {
    let all = full_catalog();
    let text = catalog_to_json(&all);
    assert_eq!(text.lines().count(), all.len());
    let back = catalog_from_json(&text).unwrap();
    assert_eq!(back, all);
    assert_eq!(catalog_to_json(&back), text);
}

#[test]
fn malformed_json_is_rejected() {
    assert!(catalog_from_json("{\"name\": 3}").is_err());
    assert!(catalog_from_json("not json").is_err());
}

#[test]
fn quantified_claims_are_reported_as_skipped() {
    let g2 = skipped_claims(SystemType::G2);
    assert!(g2.iter().any(|r| r.name == "G2-X4-intermediate"));
    for sys in SYSTEMS {
        assert!(skipped_claims(sys).iter().all(|r| r.verdict == Verdict::Skipped));
    }
}

#[test]
fn reports_are_sorted_by_name() {
    let names: Vec<String> = run_catalog(&builtin_catalog(SystemType::A1)).into_iter().map(|r| r.name).collect();
    let mut sorted = names.clone();
    sorted.sort();
    assert_eq!(names, sorted);
}
