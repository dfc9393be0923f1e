//! Worked examples with exact expected values.

use pnet::brauer::Endpoint as E;
use pnet::decide::Reason;
use pnet::rewrite::{develop_with, factors, find_schema, head, DevelopOptions, Substitution};
use pnet::semantics::{conjunction_to_disjunction, disjunction_to_conjunction, graph};
use pnet::syntax::parse_formula;
use pnet::translate::{iso_i, iso_i_inv};
use pnet::{compose, equal_in, ArrowType, g_arrow, SplitEquivalence, Term, Theory};

fn t(s: &str) -> Term {
    s.parse().unwrap()
}

fn se(src: usize, tgt: usize, pairs: &[(E, E)]) -> SplitEquivalence {
    SplitEquivalence::from_pairs(src, tgt, pairs.iter().copied()).unwrap()
}

const ELEVEN_FACTORS: &[&str] = &[
    "sigma_or(q, p /\\ q)",
    "(id(q) /\\ sigma_or(p, ~q)) \\/ id(p /\\ q)",
    "(id(q) /\\ dist(p, ~p, ~q)) \\/ id(p /\\ q)",
    "b_and_l(q, p, ~p \\/ ~q) \\/ id(p /\\ q)",
    "(c_and(p, q) /\\ id(~p \\/ ~q)) \\/ id(p /\\ q)",
    "dist(p /\\ q, ~p \\/ ~q, p /\\ q)",
    "id(p /\\ q) /\\ (c_or(~p, ~q) \\/ id(p /\\ q))",
    "id(p /\\ q) /\\ b_or_r(~q, ~p, p /\\ q)",
    "id(p /\\ q) /\\ (id(~q) \\/ distR(~p, p, q))",
    "id(p /\\ q) /\\ (id(~q) \\/ sigma_and(p, q))",
    "delta_and(q, p /\\ q)",
];

fn eleven_factors() -> Term {
    Term::chain(ELEVEN_FACTORS.iter().map(|s| t(s)).collect())
}

#[test]
fn composition_of_two_split_equivalences() {
    let r = se(
        3,
        9,
        &[
            (E::s(0), E::t(0)),
            (E::s(1), E::t(3)),
            (E::s(2), E::t(6)),
            (E::t(1), E::t(2)),
            (E::t(4), E::t(5)),
            (E::t(7), E::t(8)),
        ],
    );
    let p = se(
        9,
        1,
        &[
            (E::s(2), E::t(0)),
            (E::s(0), E::s(1)),
            (E::s(3), E::s(4)),
            (E::s(5), E::s(6)),
            (E::s(7), E::s(8)),
        ],
    );
    let pr = compose(&p, &r).unwrap();
    assert_eq!(pr, se(3, 1, &[(E::s(0), E::t(0)), (E::s(1), E::s(2))]));
}

#[test]
fn symmetry_graphs() {
    // A = (q ∨ ¬r) ∨ q has three letters, B = p ∨ q two.
    let g = graph(&t("c_and(p \\/ q, (q \\/ ~r) \\/ q)"));
    let expected = se(
        5,
        5,
        &[(E::s(0), E::t(3)), (E::s(1), E::t(4)), (E::s(2), E::t(0)), (E::s(3), E::t(1)), (E::s(4), E::t(2))],
    );
    assert_eq!(g, expected);
    let g = graph(&t("c_or(p \\/ q, (q \\/ ~r) \\/ q)"));
    let expected = se(
        5,
        5,
        &[(E::s(0), E::t(2)), (E::s(1), E::t(3)), (E::s(2), E::t(4)), (E::s(3), E::t(0)), (E::s(4), E::t(1))],
    );
    assert_eq!(g, expected);
}

#[test]
fn crown_graphs() {
    let g = graph(&t("delta_and(p \\/ q, (q \\/ ~r) \\/ q)"));
    let expected = se(
        3,
        7,
        &[(E::s(0), E::t(0)), (E::s(1), E::t(1)), (E::s(2), E::t(2)), (E::t(3), E::t(5)), (E::t(4), E::t(6))],
    );
    assert_eq!(g, expected);
    let g = graph(&t("sigma_or(p \\/ q, (q \\/ ~r) \\/ q)"));
    let expected = se(
        7,
        3,
        &[(E::s(0), E::s(2)), (E::s(1), E::s(3)), (E::s(4), E::t(0)), (E::s(5), E::t(1)), (E::s(6), E::t(2))],
    );
    assert_eq!(g, expected);
}

#[test]
fn eleven_factor_composite_is_the_identity() {
    let f = eleven_factors();
    let ty = f.type_of().unwrap();
    let pq = parse_formula("p /\\ q").unwrap();
    assert_eq!(ty, ArrowType { source: pq.clone(), target: pq });
    assert!(f.check_theory(Theory::Pn));
    assert_eq!(g_arrow(&f, Theory::Pn).unwrap(), SplitEquivalence::identity(2));
    let v = equal_in(&f, &t("id(p /\\ q)"), Theory::Pn).unwrap();
    assert!(v.equal);
    assert_eq!(v.reason, Reason::Equal);
}

#[test]
fn eleven_factor_composite_is_developed_as_written() {
    let f = eleven_factors();
    let d = develop_with(&f, DevelopOptions { keep_derived: true }).unwrap();
    let fs = factors(&d);
    assert_eq!(fs.len(), 12);
    for (k, written) in ELEVEN_FACTORS.iter().enumerate() {
        assert_eq!(fs[k], &t(written), "factor {}", k + 1);
        assert!(head(fs[k]).is_some());
    }
    assert_eq!(fs[11], &t("id(p /\\ q)"));
}

#[test]
fn development_splits_tensors() {
    let d = develop_with(&t("c_and(p, q) /\\ dist(p, q, r)"), DevelopOptions::default()).unwrap();
    let names: Vec<String> = factors(&d).iter().map(|f| f.to_string()).collect();
    assert_eq!(
        names,
        [
            "c_and(p, q) /\\ id((p /\\ q) \\/ r)",
            "id(p /\\ q) /\\ dist(p, q, r)",
            "id((p /\\ q) /\\ (p /\\ (q \\/ r)))",
        ]
    );
}

#[test]
fn crown_cancellation_instance() {
    let schema = find_schema("(Σ∨Δ∧)").unwrap();
    let a = parse_formula("p").unwrap();
    let inst = schema.instantiate(&Substitution::default().formula("A", a)).unwrap();
    assert_eq!(inst.lhs(), &t("sigma_or(p, p) . dist(p, ~p, p) . delta_and(p, p)"));
    assert_eq!(inst.rhs(), &t("id(p)"));
    assert!(equal_in(inst.lhs(), inst.rhs(), Theory::PnNeg).unwrap().equal);
}

#[test]
fn mix_links_conjunctions_to_disjunctions() {
    let m = t("mix(p, q)");
    assert_eq!(graph(&m), SplitEquivalence::identity(2));
    assert!(disjunction_to_conjunction(&m, Theory::Mds).unwrap().is_empty());
    assert_eq!(conjunction_to_disjunction(&m, Theory::Mds).unwrap().len(), 1);
    let v = equal_in(&t("mix(q, p) . c_and(p, q)"), &t("c_or(q, p) . mix(p, q)"), Theory::Mds).unwrap();
    assert!(v.equal);
}

#[test]
fn symmetry_on_equal_letters_is_not_the_identity() {
    let v = equal_in(&t("c_and(p, p)"), &t("id(p /\\ p)"), Theory::Ds).unwrap();
    assert!(!v.equal);
    assert_eq!(v.reason, Reason::GraphMismatch);
    assert_eq!(v.witness, Some(vec![E::s(0), E::t(1)]));
}

// The graph of i_A being the identity is observed here, not promised by
// the API.
#[test]
fn normal_form_isomorphisms_have_identity_graphs() {
    for src in ["p", "~p", "~~p", "~(p /\\ q)", "~(~p \\/ ~~q)", "~~(p /\\ ~(q \\/ r))", "~(p /\\ q) \\/ ~~r"] {
        let a = parse_formula(src).unwrap();
        let n = a.letter_count();
        let i = iso_i(&a);
        let inv = iso_i_inv(&a);
        assert_eq!(graph(&i), SplitEquivalence::identity(n), "i for {}", src);
        assert_eq!(graph(&inv), SplitEquivalence::identity(n), "i⁻¹ for {}", src);
        assert_eq!(graph(&Term::comp(inv.clone(), i.clone())), SplitEquivalence::identity(n));
    }
}
