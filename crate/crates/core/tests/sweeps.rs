//! Full-scale randomized sweeps over every theory.

use pnet::checks::{self, Report};
use pnet::rewrite::{axiom_catalog, theorem_catalog};
use pnet::Theory;

fn assert_ok(name: &str, r: Report) {
    assert!(r.checked > 0, "{name}: nothing checked");
    assert!(r.ok(), "{name}: {} failures, first: {:#?}", r.failures.len(), &r.failures[..r.failures.len().min(5)]);
}

#[test]
fn axioms_hold_in_every_theory() {
    for (i, t) in Theory::ALL.into_iter().enumerate() {
        assert_ok(&format!("axioms {t}"), checks::schema_sweep(&axiom_catalog(t), t, 50, 100 + i as u64));
    }
}

#[test]
fn theorems_hold_in_every_theory() {
    for (i, t) in Theory::ALL.into_iter().enumerate() {
        assert_ok(&format!("theorems {t}"), checks::schema_sweep(&theorem_catalog(t), t, 50, 200 + i as u64));
    }
}

#[test]
fn translation_preserves_graphs() {
    assert_ok("translation PN¬", checks::translation_suite(Theory::PnNeg, 200, 10, 7));
    assert_ok("translation MPN¬", checks::translation_suite(Theory::MpnNeg, 100, 10, 8));
}

#[test]
fn development_in_every_theory() {
    for (i, t) in Theory::ALL.into_iter().enumerate() {
        assert_ok(&format!("develop {t}"), checks::development_suite(t, 300, 10, 300 + i as u64));
    }
}

#[test]
fn rewrite_walks_preserve_graphs() {
    for (i, t) in Theory::ALL.into_iter().enumerate() {
        assert_ok(&format!("walks {t}"), checks::rewrite_walks(t, 40, 20, 400 + i as u64));
    }
}

#[test]
fn linked_letters_respect_connectives() {
    assert_ok("DS", checks::lemma_fuzz(Theory::Ds, 500, 10, true, 11));
    assert_ok("MDS", checks::lemma_fuzz(Theory::Mds, 500, 10, false, 12));
}

#[test]
fn brauer_category_laws() {
    assert_ok("Br", checks::brauer_laws(500, 12, 13));
}
