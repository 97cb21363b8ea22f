use std::collections::BTreeSet;

use qwalg::axioms::classify_ops;
use qwalg::theorems::{registry, verify, verify_all_with};
use qwalg::transforms::to_implication;
use qwalg::{enumerate, fixtures, verify_all, Class, FiniteAlgebra, Requirement, SearchConfig};

fn models(class: Class, max: usize) -> Vec<FiniteAlgebra> {
    (1..=max)
        .flat_map(|n| {
            enumerate(&SearchConfig::new(n).satisfy([Requirement::Class(class)]))
                .unwrap()
                .models
                .into_iter()
                .map(|m| m.algebra)
        })
        .collect()
}

#[test]
fn ids_are_unique() {
    let ids: BTreeSet<_> = registry().iter().map(|e| e.id).collect();
    assert_eq!(ids.len(), registry().len());
    assert!(registry().iter().all(|e| !e.statement.is_empty()));
}

#[test]
fn applicable_entries_hold_on_fixtures() {
    let mut all = fixtures::implication_fixtures();
    all.push(to_implication(&fixtures::example_5_5()).unwrap());
    all.push(to_implication(&fixtures::example_5_6()).unwrap());
    for a in all {
        for r in verify_all(&a) {
            assert!(!r.applicable || r.holds, "{} at {:?}\n{a}", r.id, r.witness);
        }
    }
}

#[test]
fn applicable_entries_hold_on_all_small_be_algebras() {
    // Preconditions are checked per algebra, so running over every BE model
    // exercises both the gating and the statements.
    for a in models(Class::Be, 4) {
        let ops = a.derive();
        let classes = classify_ops(&ops);
        for r in verify_all_with(&ops, &classes) {
            assert!(!r.applicable || r.holds, "{} at {:?}\n{a}", r.id, r.witness);
        }
    }
}

#[test]
fn entries_gate_on_their_preconditions() {
    // remark-3.6 is involutive but not QW, so QW-only entries do not apply.
    let a = fixtures::remark_3_6();
    let results = verify_all(&a);
    assert!(results.iter().any(|r| r.applicable));
    assert!(results.iter().any(|r| !r.applicable));
    let wajsberg_only = verify(&a, "P4.13").unwrap();
    assert!(!wajsberg_only.applicable);
}

#[test]
fn quantum_b_entry_applies_to_wajsberg_fixture() {
    let r = verify(&fixtures::example_4_14(), "P4.13").unwrap();
    assert!(r.applicable && r.holds);
}
