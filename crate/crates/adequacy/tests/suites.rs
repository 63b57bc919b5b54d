use std::collections::BTreeMap;
use std::time::Duration;

use nomsig_adequacy::suites::*;
use nomsig_adequacy::{corpus_files, load};

fn sigs() -> BTreeMap<&'static str, nomsig_core::CheckedSignature> {
    corpus_files()
        .iter()
        .map(|f| (f.name, load(f.name).unwrap()))
        .collect()
}

fn assert_passed(r: &Report) {
    assert!(r.passed(), "{r}");
}

#[test]
fn corpus_signatures_are_well_formed() {
    assert_eq!(sigs().len(), 4);
}

#[test]
fn relations() {
    assert_passed(&relation_suite(2_000, 7));
}

#[test]
fn sorting() {
    assert_passed(&sorting_suite(&sigs(), 400, 11));
}

#[test]
fn termination() {
    let s = sigs();
    assert_passed(&termination_suite(
        &s["fol"],
        2_000,
        3,
        Duration::from_secs(1),
    ));
}

#[test]
fn fol_expressions() {
    let s = sigs();
    assert_passed(&expression_suite(&s["fol"], 4, &[1, 2], 5));
}

#[test]
fn derivations() {
    let s = sigs();
    let r = derivation_adequacy_suite(&s["fol"]);
    assert_passed(&r);
    assert_eq!(r.checked, nomsig_adequacy::derivation_suite().len());
}

#[test]
fn beta() {
    let s = sigs();
    let r = beta_suite(&s["lambda-shallow"], 2, &[1, 2]);
    assert_passed(&r);
}

#[test]
fn reports_are_deterministic() {
    let s = sigs();
    let a = sorting_suite(&s, 100, 1).to_string();
    let b = sorting_suite(&s, 100, 1).to_string();
    assert_eq!(a, b);
}
