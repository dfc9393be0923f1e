//! Translation of terms with arbitrary negation into terms whose negations
//! sit on letters, and the isomorphisms `i_A: A ⊢ FA` relating the two.

use crate::arrows::{Generator, Term, TypeError};
use crate::formula::{Connective, Formula};

/// The object part of the translation: negation normal form.
pub fn f_object(a: &Formula) -> Formula {
    a.nnf()
}

/// Translates a well-typed term. Derived generators are expanded first; the
/// Δ∧ and Σ∨ clauses recurse on the crown until it is a letter.
pub fn f_arrow(f: &Term) -> Result<Term, TypeError> {
    f.type_of()?;
    Ok(translate(&f.expand_derived()))
}

/// The inclusion of letter-negation terms into terms with full negation.
/// Objects and arrows are left as they are.
pub fn f_neg_arrow(f: &Term) -> Term {
    f.clone()
}

fn translate(f: &Term) -> Term {
    match f {
        Term::Comp(a, b) => Term::comp(translate(a), translate(b)),
        Term::Tensor(c, a, b) => Term::tensor(*c, translate(a), translate(b)),
        Term::Gen(g) => match g {
            Generator::DeltaConj(b, a) => delta(b, &f_object(a)),
            Generator::SigmaDisj(b, a) => sigma(b, &f_object(a)),
            other => Term::Gen(other.map_indices(&mut |x| f_object(x))),
        },
    }
}

fn id(a: &Formula) -> Term {
    Term::id(a.clone())
}

fn g(x: Generator) -> Term {
    Term::Gen(x)
}

fn nf(a: &Formula) -> Formula {
    a.nnf()
}

fn nfneg(a: &Formula) -> Formula {
    Formula::neg(a.clone()).nnf()
}

/// FΔ∧_{B,A} where `fa` is already FA. Type FA ⊢ FA∧(F¬B∨FB).
pub fn delta(crown: &Formula, fa: &Formula) -> Term {
    match crown {
        Formula::Atom(_) => g(Generator::DeltaConj(crown.clone(), fa.clone())),
        Formula::Neg(b) => Term::chain(vec![
            Term::and(id(fa), g(Generator::SymDisj(nf(b), nfneg(b)))),
            delta(b, fa),
        ]),
        Formula::Binary(Connective::And, b, c) => {
            let (fb, fc, fnb, fnc) = (nf(b), nf(c), nfneg(b), nfneg(c));
            let inner = Term::chain(vec![
                Term::or(
                    g(Generator::SymDisj(fnb.clone(), fnc.clone())),
                    id(&Formula::conj(fb.clone(), fc.clone())),
                ),
                g(Generator::AssocR(
                    Connective::Or,
                    fnc.clone(),
                    fnb.clone(),
                    Formula::conj(fb.clone(), fc.clone()),
                )),
                Term::or(
                    id(&fnc),
                    Term::chain(vec![
                        g(Generator::DistR(fnb.clone(), fb.clone(), fc.clone())),
                        g(Generator::SymConj(fc.clone(), Formula::disj(fnb.clone(), fb.clone()))),
                        delta(b, &fc),
                    ]),
                ),
            ]);
            Term::chain(vec![Term::and(id(fa), inner), delta(c, fa)])
        }
        Formula::Binary(Connective::Or, b, c) => {
            let (fb, fc, fnb, fnc) = (nf(b), nf(c), nfneg(b), nfneg(c));
            let inner = Term::chain(vec![
                Term::or(
                    g(Generator::SymConj(fnc.clone(), fnb.clone())),
                    id(&Formula::disj(fb.clone(), fc.clone())),
                ),
                g(Generator::AssocL(
                    Connective::Or,
                    Formula::conj(fnc.clone(), fnb.clone()),
                    fb.clone(),
                    fc.clone(),
                )),
                Term::or(
                    Term::chain(vec![
                        g(Generator::Dist(fnc.clone(), fnb.clone(), fb.clone())),
                        delta(b, &fnc),
                    ]),
                    id(&fc),
                ),
            ]);
            Term::chain(vec![Term::and(id(fa), inner), delta(c, fa)])
        }
    }
}

/// FΣ∨_{B,A} where `fa` is already FA. Type (FB∧F¬B)∨FA ⊢ FA.
pub fn sigma(crown: &Formula, fa: &Formula) -> Term {
    match crown {
        Formula::Atom(_) => g(Generator::SigmaDisj(crown.clone(), fa.clone())),
        Formula::Neg(b) => Term::chain(vec![
            sigma(b, fa),
            Term::or(g(Generator::SymConj(nfneg(b), nf(b))), id(fa)),
        ]),
        Formula::Binary(Connective::And, b, c) => {
            let (fb, fc, fnb, fnc) = (nf(b), nf(c), nfneg(b), nfneg(c));
            let nbnc = Formula::disj(fnb.clone(), fnc.clone());
            let left = Term::chain(vec![
                Term::and(
                    id(&fc),
                    Term::chain(vec![
                        sigma(b, &fnc),
                        g(Generator::Dist(fb.clone(), fnb.clone(), fnc.clone())),
                    ]),
                ),
                g(Generator::AssocL(Connective::And, fc.clone(), fb.clone(), nbnc.clone())),
                Term::and(g(Generator::SymConj(fb.clone(), fc.clone())), id(&nbnc)),
            ]);
            Term::chain(vec![sigma(c, fa), Term::or(left, id(fa))])
        }
        Formula::Binary(Connective::Or, b, c) => {
            let (fb, fc, fnb, fnc) = (nf(b), nf(c), nfneg(b), nfneg(c));
            let nbnc = Formula::conj(fnb.clone(), fnc.clone());
            let left = Term::chain(vec![
                Term::and(
                    Term::chain(vec![
                        sigma(b, &fc),
                        g(Generator::SymDisj(Formula::conj(fb.clone(), fnb.clone()), fc.clone())),
                        g(Generator::DistR(fc.clone(), fb.clone(), fnb.clone())),
                    ]),
                    id(&fnc),
                ),
                g(Generator::AssocR(
                    Connective::And,
                    Formula::disj(fc.clone(), fb.clone()),
                    fnb.clone(),
                    fnc.clone(),
                )),
                Term::and(g(Generator::SymDisj(fc.clone(), fb.clone())), id(&nbnc)),
            ]);
            Term::chain(vec![sigma(c, fa), Term::or(left, id(fa))])
        }
    }
}

/// `i_A: A ⊢ FA`.
pub fn iso_i(a: &Formula) -> Term {
    if a.is_literal() {
        return id(a);
    }
    match a {
        Formula::Binary(c, x, y) => Term::tensor(*c, iso_i(x), iso_i(y)),
        Formula::Neg(inner) => match inner.as_ref() {
            Formula::Neg(b) => Term::comp(iso_i(b), g(Generator::NegElim((**b).clone()))),
            Formula::Binary(Connective::And, x, y) => Term::comp(
                Term::or(iso_i(&Formula::neg((**x).clone())), iso_i(&Formula::neg((**y).clone()))),
                g(Generator::DeMorganConjR((**x).clone(), (**y).clone())),
            ),
            Formula::Binary(Connective::Or, x, y) => Term::comp(
                Term::and(iso_i(&Formula::neg((**x).clone())), iso_i(&Formula::neg((**y).clone()))),
                g(Generator::DeMorganDisjR((**x).clone(), (**y).clone())),
            ),
            Formula::Atom(_) => unreachable!("literals handled above"),
        },
        Formula::Atom(_) => unreachable!("literals handled above"),
    }
}

/// `i_A⁻¹: FA ⊢ A`.
pub fn iso_i_inv(a: &Formula) -> Term {
    if a.is_literal() {
        return id(a);
    }
    match a {
        Formula::Binary(c, x, y) => Term::tensor(*c, iso_i_inv(x), iso_i_inv(y)),
        Formula::Neg(inner) => match inner.as_ref() {
            Formula::Neg(b) => Term::comp(g(Generator::NegIntro((**b).clone())), iso_i_inv(b)),
            Formula::Binary(Connective::And, x, y) => Term::comp(
                g(Generator::DeMorganConjL((**x).clone(), (**y).clone())),
                Term::or(
                    iso_i_inv(&Formula::neg((**x).clone())),
                    iso_i_inv(&Formula::neg((**y).clone())),
                ),
            ),
            Formula::Binary(Connective::Or, x, y) => Term::comp(
                g(Generator::DeMorganDisjL((**x).clone(), (**y).clone())),
                Term::and(
                    iso_i_inv(&Formula::neg((**x).clone())),
                    iso_i_inv(&Formula::neg((**y).clone())),
                ),
            ),
            Formula::Atom(_) => unreachable!("literals handled above"),
        },
        Formula::Atom(_) => unreachable!("literals handled above"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrows::{ArrowType, Theory};
    use crate::semantics::graph;

    fn f(s: &str) -> Formula {
        s.parse().unwrap()
    }
    fn t(s: &str) -> Term {
        s.parse().unwrap()
    }

    fn expected_delta_type(crown: &Formula, a: &Formula) -> ArrowType {
        let fa = f_object(a);
        ArrowType {
            source: fa.clone(),
            target: Formula::conj(fa, Formula::disj(nfneg(crown), nf(crown))),
        }
    }

    fn expected_sigma_type(crown: &Formula, a: &Formula) -> ArrowType {
        let fa = f_object(a);
        ArrowType {
            source: Formula::disj(Formula::conj(nf(crown), nfneg(crown)), fa.clone()),
            target: fa,
        }
    }

    #[test]
    fn object_examples() {
        assert_eq!(f_object(&f("~~(p \\/ q)")), f("p \\/ q"));
        assert_eq!(f_object(&f("~(p \\/ q)")), f("~p /\\ ~q"));
        assert_eq!(f_object(&f("q")), f("q"));
    }

    #[test]
    fn crown_clause_types() {
        let a = f("~(r /\\ p)");
        for crown in ["p", "~p", "~~p", "p /\\ q", "p \\/ q", "~(p /\\ ~q)", "(p \\/ q) /\\ ~r"] {
            let b = f(crown);
            let d = delta(&b, &f_object(&a));
            assert_eq!(d.type_of().unwrap(), expected_delta_type(&b, &a), "delta {}", crown);
            assert!(d.check_theory(Theory::Pn), "delta {}", crown);
            let s = sigma(&b, &f_object(&a));
            assert_eq!(s.type_of().unwrap(), expected_sigma_type(&b, &a), "sigma {}", crown);
            assert!(s.check_theory(Theory::Pn), "sigma {}", crown);
        }
    }

    #[test]
    fn arrow_examples() {
        assert_eq!(f_arrow(&t("delta_and(p, ~~q)")).unwrap(), t("delta_and(p, q)"));
        assert_eq!(
            f_arrow(&t("delta_and(~q, p)")).unwrap(),
            t("(id(p) /\\ c_or(q, ~q)) . delta_and(q, p)")
        );
        assert_eq!(f_arrow(&t("c_and(~(p \\/ q), r)")).unwrap(), t("c_and(~p /\\ ~q, r)"));
    }

    #[test]
    fn crown_clauses_preserve_graphs() {
        let a = f("q \\/ ~r");
        for crown in ["~p", "p /\\ q", "p \\/ q", "~(p \\/ ~q)", "~~(q /\\ r)"] {
            let b = f(crown);
            let orig = Term::Gen(Generator::DeltaConj(b.clone(), a.clone()));
            assert_eq!(graph(&delta(&b, &f_object(&a))), graph(&orig), "delta {}", crown);
            let orig = Term::Gen(Generator::SigmaDisj(b.clone(), a.clone()));
            assert_eq!(graph(&sigma(&b, &f_object(&a))), graph(&orig), "sigma {}", crown);
        }
    }

    #[test]
    fn iso_examples() {
        assert_eq!(iso_i(&f("p /\\ q")), t("id(p) /\\ id(q)"));
        assert_eq!(iso_i(&f("~~p")), t("id(p) . n_r(p)"));
        assert_eq!(iso_i(&f("~(p /\\ q)")), t("(id(~p) \\/ id(~q)) . r_and_r(p, q)"));
    }

    #[test]
    fn iso_types() {
        for s in ["p", "~p", "~~p", "~(p /\\ ~q)", "~(~(p \\/ q) /\\ ~~r)", "(~~p \\/ q) /\\ ~(r \\/ p)"] {
            let a = f(s);
            let i = iso_i(&a);
            assert_eq!(i.type_of().unwrap(), ArrowType { source: a.clone(), target: a.nnf() });
            let j = iso_i_inv(&a);
            assert_eq!(j.type_of().unwrap(), ArrowType { source: a.nnf(), target: a.clone() });
        }
    }

    #[test]
    fn translation_of_letter_terms_is_the_identity() {
        for s in [
            "(id(q) /\\ c_or(p, ~p)) . delta_and(p, q)",
            "sigma_or(q, p /\\ ~r) . (c_and(~q, q) \\/ id(p /\\ ~r))",
        ] {
            let x = t(s);
            assert!(x.check_theory(Theory::Pn));
            assert_eq!(f_arrow(&x).unwrap(), x);
        }
    }

    #[test]
    fn translation_undoes_inclusion() {
        let mut rng = crate::checks::rng(5);
        for _ in 0..100 {
            let x = crate::random::TermSampler::new(&mut rng, Theory::Pn).term(8).expand_derived();
            assert_eq!(f_arrow(&f_neg_arrow(&x)).unwrap(), x, "{}", x);
        }
    }
}
