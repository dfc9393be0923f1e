//! The equations of each theory, as text. Uppercase letters are formula
//! metavariables, the lowercase letter `p` is a letter metavariable, and
//! `f`, `g`, `h` (possibly numbered) are arrow metavariables whose types are
//! declared alongside.
//!
//! Templates with `{x}`, `{X}` and `{ξ}` are expanded for both connectives:
//! `{x}` becomes `and`/`or` in generator names, `{X}` the connective in
//! terms and formulas, `{ξ}` the symbol in the schema name.

use super::SchemaKind;
use crate::arrows::Theory;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(super) enum Family {
    Dissociative,
    Crowns,
    Mix,
    Negation,
}

impl Family {
    pub(super) fn theories(self) -> Vec<Theory> {
        Theory::ALL
            .into_iter()
            .filter(|t| match self {
                Family::Dissociative => true,
                Family::Crowns => t.has_crowns(),
                Family::Mix => t.has_mix(),
                Family::Negation => t.has_full_negation(),
            })
            .collect()
    }
}

pub(super) struct Entry {
    pub kind: SchemaKind,
    pub family: Family,
    pub name: String,
    pub variant: u8,
    pub text: String,
    pub vars: String,
}

fn entry(kind: SchemaKind, family: Family, name: &str, text: &str, vars: &str) -> Entry {
    Entry {
        kind,
        family,
        name: name.to_string(),
        variant: 0,
        text: text.to_string(),
        vars: vars.to_string(),
    }
}

fn expand(s: &str, and: bool) -> String {
    let (x, big, sym) = if and { ("and", "/\\", "∧") } else { ("or", "\\/", "∨") };
    s.replace("{x}", x).replace("{X}", big).replace("{ξ}", sym)
}

/// One entry per connective.
fn both(kind: SchemaKind, family: Family, name: &str, text: &str, vars: &str) -> Vec<Entry> {
    [true, false]
        .into_iter()
        .map(|and| entry(kind, family, &expand(name, and), &expand(text, and), &expand(vars, and)))
        .collect()
}

const NAT3: &str = "f: A -> D; g: B -> E; h: C -> F";
const NAT2: &str = "f: A -> D; g: B -> E";
const NAT1: &str = "f: A -> D";

pub(super) fn entries() -> Vec<Entry> {
    use Family::*;
    use SchemaKind::*;
    let mut v = Vec::new();

    // Categorial and bifunctorial equations.
    v.push(entry(Axiom, Dissociative, "(cat 1)", "f . id(A) = id(B) . f = f", "f: A -> B"));
    v.push(entry(
        Axiom,
        Dissociative,
        "(cat 2)",
        "h . (g . f) = (h . g) . f",
        "f: A -> B; g: B -> C; h: C -> D",
    ));
    v.extend(both(Axiom, Dissociative, "({ξ}1)", "id(A) {X} id(B) = id(A {X} B)", ""));
    v.extend(both(
        Axiom,
        Dissociative,
        "({ξ}2)",
        "(g1 . f1) {X} (g2 . f2) = (g1 {X} g2) . (f1 {X} f2)",
        "f1: A -> B; g1: B -> C; f2: D -> E; g2: E -> F",
    ));

    // Naturality.
    v.extend(both(
        Axiom,
        Dissociative,
        "(b^{ξ}→ nat)",
        "((f {X} g) {X} h) . b_{x}_r(A, B, C) = b_{x}_r(D, E, F) . (f {X} (g {X} h))",
        NAT3,
    ));
    v.push(entry(
        Axiom,
        Dissociative,
        "(c∧ nat)",
        "(g /\\ f) . c_and(A, B) = c_and(D, E) . (f /\\ g)",
        NAT2,
    ));
    v.push(entry(
        Axiom,
        Dissociative,
        "(c∨ nat)",
        "(g \\/ f) . c_or(B, A) = c_or(E, D) . (f \\/ g)",
        NAT2,
    ));
    v.push(entry(
        Axiom,
        Dissociative,
        "(d nat)",
        "((f /\\ g) \\/ h) . dist(A, B, C) = dist(D, E, F) . (f /\\ (g \\/ h))",
        NAT3,
    ));

    // Associativity, symmetry and distribution.
    for and in [true, false] {
        let name = expand("(b{ξ}b{ξ})", and);
        let mut first = entry(
            Axiom,
            Dissociative,
            &name,
            &expand("b_{x}_l(A, B, C) . b_{x}_r(A, B, C) = id(A {X} (B {X} C))", and),
            "",
        );
        first.variant = 1;
        let mut second = entry(
            Axiom,
            Dissociative,
            &name,
            &expand("b_{x}_r(A, B, C) . b_{x}_l(A, B, C) = id((A {X} B) {X} C)", and),
            "",
        );
        second.variant = 2;
        v.push(first);
        v.push(second);
    }
    v.extend(both(
        Axiom,
        Dissociative,
        "(b{ξ}5)",
        "b_{x}_l(A, B, C {X} D) . b_{x}_l(A {X} B, C, D) = \
         (id(A) {X} b_{x}_l(B, C, D)) . b_{x}_l(A, B {X} C, D) . (b_{x}_l(A, B, C) {X} id(D))",
        "",
    ));
    v.push(entry(Axiom, Dissociative, "(c∧c∧)", "c_and(B, A) . c_and(A, B) = id(A /\\ B)", ""));
    v.push(entry(Axiom, Dissociative, "(c∨c∨)", "c_or(A, B) . c_or(B, A) = id(A \\/ B)", ""));
    v.push(entry(
        Axiom,
        Dissociative,
        "(b∧c∧)",
        "(id(B) /\\ c_and(C, A)) . b_and_l(B, C, A) . c_and(A, B /\\ C) . b_and_l(A, B, C) . \
         (c_and(B, A) /\\ id(C)) = b_and_l(B, A, C)",
        "",
    ));
    v.push(entry(
        Axiom,
        Dissociative,
        "(b∨c∨)",
        "(id(B) \\/ c_or(A, C)) . b_or_l(B, C, A) . c_or(B \\/ C, A) . b_or_l(A, B, C) . \
         (c_or(A, B) \\/ id(C)) = b_or_l(B, A, C)",
        "",
    ));
    v.push(entry(
        Axiom,
        Dissociative,
        "(d∧)",
        "(b_and_l(A, B, C) \\/ id(D)) . dist(A /\\ B, C, D) = \
         dist(A, B /\\ C, D) . (id(A) /\\ dist(B, C, D)) . b_and_l(A, B, C \\/ D)",
        "",
    ));
    v.push(entry(
        Axiom,
        Dissociative,
        "(d∨)",
        "dist(D, C, B \\/ A) . (id(D) /\\ b_or_l(C, B, A)) = \
         b_or_l(D /\\ C, B, A) . (dist(D, C, B) \\/ id(A)) . dist(D, C \\/ B, A)",
        "",
    ));
    v.push(entry(
        Axiom,
        Dissociative,
        "(db∧)",
        "distR(A /\\ B, C, D) . (dist(A, B, C) /\\ id(D)) = \
         dist(A, B, C /\\ D) . (id(A) /\\ distR(B, C, D)) . b_and_l(A, B \\/ C, D)",
        "",
    ));
    // An older formulation of (db∨) differs from this one by (b∨b∨).
    v.push(entry(
        Axiom,
        Dissociative,
        "(db∨)",
        "(id(D) \\/ dist(C, B, A)) . distR(D, C, B \\/ A) = \
         b_or_l(D, C /\\ B, A) . (distR(D, C, B) \\/ id(A)) . dist(D \\/ C, B, A)",
        "",
    ));

    // Crowns.
    v.push(entry(
        Axiom,
        Crowns,
        "(Δ∧ nat)",
        "(f /\\ id(~B \\/ B)) . delta_and(B, A) = delta_and(B, D) . f",
        NAT1,
    ));
    v.push(entry(
        Axiom,
        Crowns,
        "(Σ∨ nat)",
        "f . sigma_or(B, A) = sigma_or(B, D) . (id(B /\\ ~B) \\/ f)",
        NAT1,
    ));
    v.push(entry(
        Axiom,
        Crowns,
        "(b∧Δ∧)",
        "b_and_l(A, B, ~C \\/ C) . delta_and(C, A /\\ B) = id(A) /\\ delta_and(C, B)",
        "",
    ));
    v.push(entry(
        Axiom,
        Crowns,
        "(b∨Σ∨)",
        "sigma_or(C, B \\/ A) . b_or_l(C /\\ ~C, B, A) = sigma_or(C, B) \\/ id(A)",
        "",
    ));
    v.push(entry(
        Axiom,
        Crowns,
        "(dΣ∧)",
        "dist(~A \\/ A, B, C) . sigma_and(A, B \\/ C) = sigma_and(A, B) \\/ id(C)",
        "",
    ));
    v.push(entry(
        Axiom,
        Crowns,
        "(dΔ∨)",
        "delta_or(A, C /\\ B) . dist(C, B, A /\\ ~A) = id(C) /\\ delta_or(A, B)",
        "",
    ));
    v.push(entry(
        Axiom,
        Crowns,
        "(Σ∨Δ∧)",
        "sigma_or(A, A) . dist(A, ~A, A) . delta_and(A, A) = id(A)",
        "",
    ));
    v.push(entry(
        Axiom,
        Crowns,
        "(Σ∨′Δ∧′)",
        "sigma_or_p(A, ~A) . dist(~A, A, ~A) . delta_and_p(A, ~A) = id(~A)",
        "",
    ));

    // Mix.
    v.push(entry(Axiom, Mix, "(m nat)", "(f \\/ g) . mix(A, B) = mix(D, E) . (f /\\ g)", NAT2));
    v.push(entry(
        Axiom,
        Mix,
        "(b∧m)",
        "mix(A /\\ B, C) . b_and_r(A, B, C) = dist(A, B, C) . (id(A) /\\ mix(B, C))",
        "",
    ));
    v.push(entry(
        Axiom,
        Mix,
        "(b∨m)",
        "b_or_r(C, B, A) . mix(C, B \\/ A) = (mix(C, B) \\/ id(A)) . dist(C, B, A)",
        "",
    ));
    v.push(entry(Axiom, Mix, "(cm)", "mix(B, A) . c_and(A, B) = c_or(B, A) . mix(A, B)", ""));

    // Derived equations of the dissociative fragment.
    v.extend(both(
        Theorem,
        Dissociative,
        "(b^{ξ}← nat)",
        "(f {X} (g {X} h)) . b_{x}_l(A, B, C) = b_{x}_l(D, E, F) . ((f {X} g) {X} h)",
        NAT3,
    ));
    v.push(entry(
        Theorem,
        Dissociative,
        "(d^R nat)",
        "(h \\/ (g /\\ f)) . distR(C, B, A) = distR(F, E, D) . ((h \\/ g) /\\ f)",
        NAT3,
    ));

    // Naturality of the derived crowns.
    for (name, text) in [
        ("(Σ∧ nat)", "(id(~B \\/ B) /\\ f) . sigma_and(B, A) = sigma_and(B, D) . f"),
        ("(Δ∨ nat)", "f . delta_or(B, A) = delta_or(B, D) . (f \\/ id(B /\\ ~B))"),
        ("(Δ∧′ nat)", "(f /\\ id(B \\/ ~B)) . delta_and_p(B, A) = delta_and_p(B, D) . f"),
        ("(Σ∨′ nat)", "f . sigma_or_p(B, A) = sigma_or_p(B, D) . (id(~B /\\ B) \\/ f)"),
        ("(Σ∧′ nat)", "(id(B \\/ ~B) /\\ f) . sigma_and_p(B, A) = sigma_and_p(B, D) . f"),
        ("(Δ∨′ nat)", "f . delta_or_p(B, A) = delta_or_p(B, D) . (f \\/ id(~B /\\ B))"),
    ] {
        v.push(entry(Theorem, Crowns, name, text, NAT1));
    }

    // Derived crown equations, unprimed then primed.
    for (name, text) in [
        (
            "(b∧Δ∧Σ∧)",
            "b_and_l(A, ~B \\/ B, C) . (delta_and(B, A) /\\ id(C)) = id(A) /\\ sigma_and(B, C)",
        ),
        ("(b∧Σ∧)", "b_and_r(~C \\/ C, B, A) . sigma_and(C, B /\\ A) = sigma_and(C, B) /\\ id(A)"),
        (
            "(b∨Δ∨Σ∨)",
            "(delta_or(B, A) \\/ id(C)) . b_or_r(A, B /\\ ~B, C) = id(A) \\/ sigma_or(B, C)",
        ),
        ("(b∨Δ∨)", "delta_or(C, A \\/ B) . b_or_r(A, B, C /\\ ~C) = id(A) \\/ delta_or(C, B)"),
        ("(d^RΔ∧)", "distR(C, B, ~A \\/ A) . delta_and(A, C \\/ B) = id(C) \\/ delta_and(A, B)"),
        ("(d^RΣ∨)", "sigma_or(A, B /\\ C) . distR(A /\\ ~A, B, C) = sigma_or(A, B) /\\ id(C)"),
        (
            "(b∧Δ∧′)",
            "b_and_l(A, B, C \\/ ~C) . delta_and_p(C, A /\\ B) = id(A) /\\ delta_and_p(C, B)",
        ),
        (
            "(b∧Δ∧′Σ∧′)",
            "b_and_l(A, B \\/ ~B, C) . (delta_and_p(B, A) /\\ id(C)) = id(A) /\\ sigma_and_p(B, C)",
        ),
        (
            "(b∧Σ∧′)",
            "b_and_r(C \\/ ~C, B, A) . sigma_and_p(C, B /\\ A) = sigma_and_p(C, B) /\\ id(A)",
        ),
        (
            "(b∨Δ∨′Σ∨′)",
            "(delta_or_p(B, A) \\/ id(C)) . b_or_r(A, ~B /\\ B, C) = id(A) \\/ sigma_or_p(B, C)",
        ),
        (
            "(b∨Δ∨′)",
            "delta_or_p(C, A \\/ B) . b_or_r(A, B, ~C /\\ C) = id(A) \\/ delta_or_p(C, B)",
        ),
        (
            "(b∨Σ∨′)",
            "sigma_or_p(C, B \\/ A) . b_or_l(~C /\\ C, B, A) = sigma_or_p(C, B) \\/ id(A)",
        ),
        ("(dΣ∧′)", "dist(A \\/ ~A, B, C) . sigma_and_p(A, B \\/ C) = sigma_and_p(A, B) \\/ id(C)"),
        ("(dΔ∨′)", "delta_or_p(A, C /\\ B) . dist(C, B, ~A /\\ A) = id(C) /\\ delta_or_p(A, B)"),
        (
            "(d^RΔ∧′)",
            "distR(C, B, A \\/ ~A) . delta_and_p(A, C \\/ B) = id(C) \\/ delta_and_p(A, B)",
        ),
        (
            "(d^RΣ∨′)",
            "sigma_or_p(A, B /\\ C) . distR(~A /\\ A, B, C) = sigma_or_p(A, B) /\\ id(C)",
        ),
        ("(Δ∨′Σ∧′)", "delta_or_p(A, A) . distR(A, ~A, A) . sigma_and_p(A, A) = id(A)"),
        ("(Δ∨Σ∧)", "delta_or(A, ~A) . distR(~A, A, ~A) . sigma_and(A, ~A) = id(~A)"),
    ] {
        v.push(entry(Theorem, Crowns, name, text, ""));
    }

    // Stem-increasing equations; the crown is a letter.
    for (name, text) in [
        (
            "(1∧Δ∧)",
            "id(A) /\\ delta_and(p, B) = b_and_l(A, B, ~p \\/ p) . delta_and(p, A /\\ B)",
        ),
        (
            "(Δ∧∧1)",
            "delta_and(p, B) /\\ id(A) = c_and(A, B /\\ (~p \\/ p)) . b_and_l(A, B, ~p \\/ p) . \
             (c_and(B, A) /\\ id(~p \\/ p)) . delta_and(p, B /\\ A)",
        ),
        ("(1∨Δ∧)", "id(A) \\/ delta_and(p, B) = distR(A, B, ~p \\/ p) . delta_and(p, A \\/ B)"),
        (
            "(Δ∧∨1)",
            "delta_and(p, B) \\/ id(A) = c_or(B /\\ (~p \\/ p), A) . distR(A, B, ~p \\/ p) . \
             (c_or(A, B) /\\ id(~p \\/ p)) . delta_and(p, B \\/ A)",
        ),
        ("(Σ∨∨1)", "sigma_or(p, B) \\/ id(A) = sigma_or(p, B \\/ A) . b_or_l(p /\\ ~p, B, A)"),
        (
            "(1∨Σ∨)",
            "id(A) \\/ sigma_or(p, B) = sigma_or(p, A \\/ B) . (id(p /\\ ~p) \\/ c_or(A, B)) . \
             b_or_l(p /\\ ~p, B, A) . c_or((p /\\ ~p) \\/ B, A)",
        ),
        ("(Σ∨∧1)", "sigma_or(p, B) /\\ id(A) = sigma_or(p, B /\\ A) . distR(p /\\ ~p, B, A)"),
        (
            "(1∧Σ∨)",
            "id(A) /\\ sigma_or(p, B) = sigma_or(p, A /\\ B) . (id(p /\\ ~p) \\/ c_and(B, A)) . \
             distR(p /\\ ~p, B, A) . c_and(A, (p /\\ ~p) \\/ B)",
        ),
    ] {
        v.push(entry(Theorem, Crowns, name, text, ""));
    }

    // Negation arrows are mutually inverse, and crowns over complex
    // formulas reduce to crowns over their parts.
    for (name, text) in [
        ("(n→n←)", "n_r(A) . n_l(A) = id(A)"),
        ("(n←n→)", "n_l(A) . n_r(A) = id(~~A)"),
        ("(r∧→r∧←)", "r_and_r(A, B) . r_and_l(A, B) = id(~A \\/ ~B)"),
        ("(r∧←r∧→)", "r_and_l(A, B) . r_and_r(A, B) = id(~(A /\\ B))"),
        ("(r∨→r∨←)", "r_or_r(A, B) . r_or_l(A, B) = id(~A /\\ ~B)"),
        ("(r∨←r∨→)", "r_or_l(A, B) . r_or_r(A, B) = id(~(A \\/ B))"),
        (
            "(Δ∧ n)",
            "delta_and(~B, A) = (id(A) /\\ (n_l(B) \\/ id(~B))) . delta_and_p(B, A)",
        ),
        (
            "(Δ∧ r)",
            "delta_and(B /\\ C, A) = (id(A) /\\ (((r_and_l(B, C) . c_or(~B, ~C)) \\/ id(B /\\ C)) . \
             b_or_r(~C, ~B, B /\\ C) . (id(~C) \\/ (distR(~B, B, C) . sigma_and(B, C))))) . \
             delta_and(C, A)",
        ),
    ] {
        v.push(entry(Theorem, Negation, name, text, ""));
    }
    v
}
