//! The graph functor: formulas go to their number of letter occurrences,
//! arrow terms to Brauerian split equivalences.

use thiserror::Error;

use crate::arrows::{Generator, Term, Theory, TheoryViolation, TypeError};
use crate::brauer::{compose, shift_union, Endpoint, SplitEquivalence};
use crate::formula::{Connective, Formula, Letter};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SemanticsError {
    #[error(transparent)]
    Type(#[from] TypeError),
    #[error(transparent)]
    Theory(#[from] TheoryViolation),
}

pub fn g_object(a: &Formula) -> usize {
    a.letter_count()
}

/// The graph of `f`, after checking that `f` is a well-typed term of `theory`.
pub fn g_arrow(f: &Term, theory: Theory) -> Result<SplitEquivalence, SemanticsError> {
    f.type_of()?;
    if let Some(v) = f.theory_violation(theory) {
        return Err(v.into());
    }
    Ok(graph(f))
}

/// The graph of a well-typed term, without a theory check. Derived
/// generators are interpreted through their definitions. Panics if `f` is
/// ill-typed.
pub fn graph(f: &Term) -> SplitEquivalence {
    match f {
        Term::Gen(g) => generator_graph(g),
        Term::Comp(a, b) => {
            compose(&graph(a), &graph(b)).expect("well-typed composition has matching sizes")
        }
        Term::Tensor(_, a, b) => shift_union(&graph(a), &graph(b)),
    }
}

fn generator_graph(g: &Generator) -> SplitEquivalence {
    use Generator::*;
    let pairs = |src: usize, tgt: usize, v: Vec<(Endpoint, Endpoint)>| {
        SplitEquivalence::from_pairs(src, tgt, v).expect("generator clauses pair every endpoint")
    };
    match g {
        Id(a) => SplitEquivalence::identity(g_object(a)),
        AssocR(_, a, b, c) | AssocL(_, a, b, c) | Dist(a, b, c) => {
            SplitEquivalence::identity(g_object(a) + g_object(b) + g_object(c))
        }
        Mix(a, b) => SplitEquivalence::identity(g_object(a) + g_object(b)),
        SymConj(a, b) => {
            let (ga, gb) = (g_object(a), g_object(b));
            pairs(ga + gb, ga + gb, sym_pairs(ga, gb).map(|(m, n)| (Endpoint::s(m), Endpoint::t(n))).collect())
        }
        SymDisj(a, b) => {
            let (ga, gb) = (g_object(a), g_object(b));
            pairs(ga + gb, ga + gb, sym_pairs(ga, gb).map(|(m, n)| (Endpoint::s(n), Endpoint::t(m))).collect())
        }
        DeltaConj(b, a) => {
            let (ga, gb) = (g_object(a), g_object(b));
            let mut v: Vec<_> = (0..ga).map(|m| (Endpoint::s(m), Endpoint::t(m))).collect();
            v.extend((0..gb).map(|k| (Endpoint::t(ga + k), Endpoint::t(ga + gb + k))));
            pairs(ga, ga + 2 * gb, v)
        }
        SigmaDisj(b, a) => {
            let (ga, gb) = (g_object(a), g_object(b));
            let mut v: Vec<_> = (0..gb).map(|k| (Endpoint::s(k), Endpoint::s(gb + k))).collect();
            v.extend((0..ga).map(|k| (Endpoint::s(2 * gb + k), Endpoint::t(k))));
            pairs(2 * gb + ga, ga, v)
        }
        derived => graph(&derived.definition().expect("non-primitive generators have definitions")),
    }
}

/// Pairs (m, n) with m, n < ga + gb and (m − n − ga)(m − n + gb) = 0.
fn sym_pairs(ga: usize, gb: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..ga + gb).map(move |n| if n < gb { (n + ga, n) } else { (n - gb, n) })
}

/// A transversal: source occurrence `source` is linked to target
/// occurrence `target`. Both are 0-based.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Link {
    pub source: usize,
    pub target: usize,
    pub source_letter: Letter,
    pub target_letter: Letter,
}

pub fn linked(f: &Term, theory: Theory) -> Result<Vec<Link>, SemanticsError> {
    let ty = f.type_of()?;
    let g = g_arrow(f, theory)?;
    Ok(g.transversals()
        .map(|(m, n)| Link {
            source: m,
            target: n,
            source_letter: ty.source.letter_at(m).expect("in range").0,
            target_letter: ty.target.letter_at(n).expect("in range").0,
        })
        .collect())
}

/// Subformulas `x ξ y` with two letters as operands, given by the
/// occurrence indices of the two letters.
pub fn letter_pairs(a: &Formula, c: Connective) -> Vec<(usize, usize)> {
    fn go(a: &Formula, c: Connective, offset: usize, out: &mut Vec<(usize, usize)>) {
        match a {
            Formula::Atom(_) => {}
            Formula::Neg(x) => go(x, c, offset, out),
            Formula::Binary(d, x, y) => {
                if *d == c && x.is_atom() && y.is_atom() {
                    out.push((offset, offset + 1));
                }
                go(x, c, offset, out);
                go(y, c, offset + x.letter_count(), out);
            }
        }
    }
    let mut out = Vec::new();
    go(a, c, 0, &mut out);
    out
}

/// A pair of letter subformulas in the source whose linked images form a
/// letter subformula of the given connective in the target.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairViolation {
    pub source_pair: (usize, usize),
    pub target_pair: (usize, usize),
}

fn pair_violations(
    f: &Term,
    theory: Theory,
    from: Connective,
    to: Connective,
) -> Result<Vec<PairViolation>, SemanticsError> {
    let ty = f.type_of()?;
    let g = g_arrow(f, theory)?;
    let image: std::collections::HashMap<usize, usize> = g.transversals().collect();
    let targets = letter_pairs(&ty.target, to);
    let mut out = Vec::new();
    for (x1, x2) in letter_pairs(&ty.source, from) {
        if let (Some(&y1), Some(&y2)) = (image.get(&x1), image.get(&x2)) {
            let key = (y1.min(y2), y1.max(y2));
            if targets.contains(&key) {
                out.push(PairViolation { source_pair: (x1, x2), target_pair: (y1, y2) });
            }
        }
    }
    Ok(out)
}

/// Linked letters that form a disjunction `x1 ∨ x2` in the source and a
/// conjunction `y1 ∧ y2` in the target. For the dissociative theories, with
/// or without mix, this list is always empty.
pub fn disjunction_to_conjunction(f: &Term, theory: Theory) -> Result<Vec<PairViolation>, SemanticsError> {
    pair_violations(f, theory, Connective::Or, Connective::And)
}

/// Linked letters that form a conjunction in the source and a disjunction in
/// the target. Always empty for mix-free dissociative terms; mix produces
/// such links.
pub fn conjunction_to_disjunction(f: &Term, theory: Theory) -> Result<Vec<PairViolation>, SemanticsError> {
    pair_violations(f, theory, Connective::And, Connective::Or)
}

/// Whether every block joins occurrences of one letter, with matching
/// polarity across sides and opposite polarity within a side.
pub fn letter_coherent(f: &Term, g: &SplitEquivalence) -> Result<bool, TypeError> {
    let ty = f.type_of()?;
    let at = |e: &Endpoint| -> (Letter, bool) {
        let a = match e.side() {
            crate::brauer::Side::S => &ty.source,
            crate::brauer::Side::T => &ty.target,
        };
        a.letter_at(e.pos()).expect("graph sized by the type")
    };
    Ok(g.blocks().iter().all(|b| {
        let (l0, p0) = at(&b[0]);
        let (l1, p1) = at(&b[1]);
        let same_side = b[0].side() == b[1].side();
        l0 == l1 && (p0 == p1) != same_side
    }))
}
