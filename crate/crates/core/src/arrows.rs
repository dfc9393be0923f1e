//! Arrow terms: generators, composition and tensor, their types, theory
//! membership and the expansion of derived generators into primitives.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::formula::{Connective, Formula, Language};
use crate::syntax::{self, Expr, ParseError, ParseErrorKind};

/// The six theories, from the plain dissociative one up to proof nets with
/// mix and unrestricted negation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Theory {
    Ds,
    Mds,
    Pn,
    Mpn,
    PnNeg,
    MpnNeg,
}

impl Theory {
    pub const ALL: [Theory; 6] =
        [Theory::Ds, Theory::Mds, Theory::Pn, Theory::Mpn, Theory::PnNeg, Theory::MpnNeg];

    pub fn language(self) -> Language {
        match self {
            Theory::Ds | Theory::Mds => Language::Positive,
            Theory::Pn | Theory::Mpn => Language::Literal,
            Theory::PnNeg | Theory::MpnNeg => Language::Full,
        }
    }

    pub fn has_mix(self) -> bool {
        matches!(self, Theory::Mds | Theory::Mpn | Theory::MpnNeg)
    }

    /// Whether the Δ and Σ families are present.
    pub fn has_crowns(self) -> bool {
        !matches!(self, Theory::Ds | Theory::Mds)
    }

    /// Whether crown indices may be arbitrary formulas rather than letters.
    pub fn has_full_negation(self) -> bool {
        matches!(self, Theory::PnNeg | Theory::MpnNeg)
    }

    /// The same theory without mix.
    pub fn without_mix(self) -> Theory {
        match self {
            Theory::Mds => Theory::Ds,
            Theory::Mpn => Theory::Pn,
            Theory::MpnNeg => Theory::PnNeg,
            t => t,
        }
    }

    pub fn flag_name(self) -> &'static str {
        match self {
            Theory::Ds => "ds",
            Theory::Mds => "mds",
            Theory::Pn => "pn",
            Theory::Mpn => "mpn",
            Theory::PnNeg => "pn-neg",
            Theory::MpnNeg => "mpn-neg",
        }
    }

    pub fn display_name(self) -> &'static str {
        match self {
            Theory::Ds => "DS",
            Theory::Mds => "MDS",
            Theory::Pn => "PN",
            Theory::Mpn => "MPN",
            Theory::PnNeg => "PN¬",
            Theory::MpnNeg => "MPN¬",
        }
    }
}

impl fmt::Display for Theory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.display_name())
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("unknown theory `{0}` (expected ds, mds, pn, mpn, pn-neg or mpn-neg)")]
pub struct UnknownTheory(pub String);

impl FromStr for Theory {
    type Err = UnknownTheory;

    fn from_str(s: &str) -> Result<Theory, UnknownTheory> {
        Theory::ALL
            .into_iter()
            .find(|t| t.flag_name() == s)
            .ok_or_else(|| UnknownTheory(s.to_string()))
    }
}

/// A generator. Index order follows the subscripts of the usual notation,
/// so `DistR(C, B, A)` is d^R_{C,B,A}. For the Δ/Σ family the first index is
/// the crown and the second the stem.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Generator {
    Id(Formula),
    /// b^ξ→_{A,B,C}: A ξ (B ξ C) ⊢ (A ξ B) ξ C
    AssocR(Connective, Formula, Formula, Formula),
    /// b^ξ←_{A,B,C}: (A ξ B) ξ C ⊢ A ξ (B ξ C)
    AssocL(Connective, Formula, Formula, Formula),
    /// c∧_{A,B}: A∧B ⊢ B∧A
    SymConj(Formula, Formula),
    /// c∨_{A,B}: B∨A ⊢ A∨B
    SymDisj(Formula, Formula),
    /// d_{A,B,C}: A∧(B∨C) ⊢ (A∧B)∨C
    Dist(Formula, Formula, Formula),
    /// d^R_{C,B,A}: (C∨B)∧A ⊢ C∨(B∧A)
    DistR(Formula, Formula, Formula),
    /// Δ∧_{B,A}: A ⊢ A∧(¬B∨B)
    DeltaConj(Formula, Formula),
    /// Σ∨_{B,A}: (B∧¬B)∨A ⊢ A
    SigmaDisj(Formula, Formula),
    /// Σ∧_{B,A}: A ⊢ (¬B∨B)∧A
    SigmaConj(Formula, Formula),
    /// Δ∨_{B,A}: A∨(B∧¬B) ⊢ A
    DeltaDisj(Formula, Formula),
    /// Δ∧′_{B,A}: A ⊢ A∧(B∨¬B)
    DeltaConjP(Formula, Formula),
    /// Σ∨′_{B,A}: (¬B∧B)∨A ⊢ A
    SigmaDisjP(Formula, Formula),
    /// Σ∧′_{B,A}: A ⊢ (B∨¬B)∧A
    SigmaConjP(Formula, Formula),
    /// Δ∨′_{B,A}: A∨(¬B∧B) ⊢ A
    DeltaDisjP(Formula, Formula),
    /// n→_A: ¬¬A ⊢ A
    NegElim(Formula),
    /// n←_A: A ⊢ ¬¬A
    NegIntro(Formula),
    /// r∧→_{A,B}: ¬(A∧B) ⊢ ¬A∨¬B
    DeMorganConjR(Formula, Formula),
    /// r∧←_{A,B}: ¬A∨¬B ⊢ ¬(A∧B)
    DeMorganConjL(Formula, Formula),
    /// r∨→_{A,B}: ¬(A∨B) ⊢ ¬A∧¬B
    DeMorganDisjR(Formula, Formula),
    /// r∨←_{A,B}: ¬A∧¬B ⊢ ¬(A∨B)
    DeMorganDisjL(Formula, Formula),
    /// m_{A,B}: A∧B ⊢ A∨B
    Mix(Formula, Formula),
}

/// Concrete names and arities, in a fixed order.
pub const GENERATOR_NAMES: [(&str, usize); 24] = [
    ("id", 1),
    ("b_and_r", 3),
    ("b_and_l", 3),
    ("b_or_r", 3),
    ("b_or_l", 3),
    ("c_and", 2),
    ("c_or", 2),
    ("dist", 3),
    ("distR", 3),
    ("delta_and", 2),
    ("sigma_or", 2),
    ("sigma_and", 2),
    ("delta_or", 2),
    ("delta_and_p", 2),
    ("sigma_or_p", 2),
    ("sigma_and_p", 2),
    ("delta_or_p", 2),
    ("n_r", 1),
    ("n_l", 1),
    ("r_and_r", 2),
    ("r_and_l", 2),
    ("r_or_r", 2),
    ("r_or_l", 2),
    ("mix", 2),
];

fn neg(a: &Formula) -> Formula {
    Formula::neg(a.clone())
}
fn conj(a: &Formula, b: &Formula) -> Formula {
    Formula::conj(a.clone(), b.clone())
}
fn disj(a: &Formula, b: &Formula) -> Formula {
    Formula::disj(a.clone(), b.clone())
}
fn bin(c: Connective, a: &Formula, b: &Formula) -> Formula {
    Formula::binary(c, a.clone(), b.clone())
}

impl Generator {
    pub fn name(&self) -> &'static str {
        use Generator::*;
        match self {
            Id(..) => "id",
            AssocR(Connective::And, ..) => "b_and_r",
            AssocL(Connective::And, ..) => "b_and_l",
            AssocR(Connective::Or, ..) => "b_or_r",
            AssocL(Connective::Or, ..) => "b_or_l",
            SymConj(..) => "c_and",
            SymDisj(..) => "c_or",
            Dist(..) => "dist",
            DistR(..) => "distR",
            DeltaConj(..) => "delta_and",
            SigmaDisj(..) => "sigma_or",
            SigmaConj(..) => "sigma_and",
            DeltaDisj(..) => "delta_or",
            DeltaConjP(..) => "delta_and_p",
            SigmaDisjP(..) => "sigma_or_p",
            SigmaConjP(..) => "sigma_and_p",
            DeltaDisjP(..) => "delta_or_p",
            NegElim(..) => "n_r",
            NegIntro(..) => "n_l",
            DeMorganConjR(..) => "r_and_r",
            DeMorganConjL(..) => "r_and_l",
            DeMorganDisjR(..) => "r_or_r",
            DeMorganDisjL(..) => "r_or_l",
            Mix(..) => "mix",
        }
    }

    /// Symbol in the usual mathematical notation, without indices.
    pub fn symbol(&self) -> &'static str {
        use Generator::*;
        match self {
            Id(..) => "1",
            AssocR(Connective::And, ..) => "b∧→",
            AssocL(Connective::And, ..) => "b∧←",
            AssocR(Connective::Or, ..) => "b∨→",
            AssocL(Connective::Or, ..) => "b∨←",
            SymConj(..) => "c∧",
            SymDisj(..) => "c∨",
            Dist(..) => "d",
            DistR(..) => "dᴿ",
            DeltaConj(..) => "Δ∧",
            SigmaDisj(..) => "Σ∨",
            SigmaConj(..) => "Σ∧",
            DeltaDisj(..) => "Δ∨",
            DeltaConjP(..) => "Δ∧′",
            SigmaDisjP(..) => "Σ∨′",
            SigmaConjP(..) => "Σ∧′",
            DeltaDisjP(..) => "Δ∨′",
            NegElim(..) => "n→",
            NegIntro(..) => "n←",
            DeMorganConjR(..) => "r∧→",
            DeMorganConjL(..) => "r∧←",
            DeMorganDisjR(..) => "r∨→",
            DeMorganDisjL(..) => "r∨←",
            Mix(..) => "m",
        }
    }

    pub fn indices(&self) -> Vec<&Formula> {
        use Generator::*;
        match self {
            Id(a) | NegElim(a) | NegIntro(a) => vec![a],
            AssocR(_, a, b, c) | AssocL(_, a, b, c) | Dist(a, b, c) | DistR(a, b, c) => {
                vec![a, b, c]
            }
            SymConj(a, b)
            | SymDisj(a, b)
            | DeltaConj(a, b)
            | SigmaDisj(a, b)
            | SigmaConj(a, b)
            | DeltaDisj(a, b)
            | DeltaConjP(a, b)
            | SigmaDisjP(a, b)
            | SigmaConjP(a, b)
            | DeltaDisjP(a, b)
            | DeMorganConjR(a, b)
            | DeMorganConjL(a, b)
            | DeMorganDisjR(a, b)
            | DeMorganDisjL(a, b)
            | Mix(a, b) => vec![a, b],
        }
    }

    /// Rebuilds a generator of the same kind with new indices.
    pub fn map_indices(&self, f: &mut dyn FnMut(&Formula) -> Formula) -> Generator {
        let args: Vec<Formula> = self.indices().into_iter().map(&mut *f).collect();
        Generator::from_name(self.name(), args).expect("same name and arity")
    }

    /// Builds a generator from its concrete name. On failure returns the
    /// expected arity, or `None` for an unknown name.
    pub fn from_name(name: &str, args: Vec<Formula>) -> Result<Generator, Option<usize>> {
        use Generator::*;
        let arity = GENERATOR_NAMES
            .iter()
            .find(|(n, _)| *n == name)
            .map(|(_, k)| *k)
            .ok_or(None)?;
        if args.len() != arity {
            return Err(Some(arity));
        }
        let mut it = args.into_iter();
        let mut next = || it.next().expect("arity checked");
        Ok(match name {
            "id" => Id(next()),
            "b_and_r" => AssocR(Connective::And, next(), next(), next()),
            "b_and_l" => AssocL(Connective::And, next(), next(), next()),
            "b_or_r" => AssocR(Connective::Or, next(), next(), next()),
            "b_or_l" => AssocL(Connective::Or, next(), next(), next()),
            "c_and" => SymConj(next(), next()),
            "c_or" => SymDisj(next(), next()),
            "dist" => Dist(next(), next(), next()),
            "distR" => DistR(next(), next(), next()),
            "delta_and" => DeltaConj(next(), next()),
            "sigma_or" => SigmaDisj(next(), next()),
            "sigma_and" => SigmaConj(next(), next()),
            "delta_or" => DeltaDisj(next(), next()),
            "delta_and_p" => DeltaConjP(next(), next()),
            "sigma_or_p" => SigmaDisjP(next(), next()),
            "sigma_and_p" => SigmaConjP(next(), next()),
            "delta_or_p" => DeltaDisjP(next(), next()),
            "n_r" => NegElim(next()),
            "n_l" => NegIntro(next()),
            "r_and_r" => DeMorganConjR(next(), next()),
            "r_and_l" => DeMorganConjL(next(), next()),
            "r_or_r" => DeMorganDisjR(next(), next()),
            "r_or_l" => DeMorganDisjL(next(), next()),
            "mix" => Mix(next(), next()),
            _ => return Err(None),
        })
    }

    pub fn is_identity(&self) -> bool {
        matches!(self, Generator::Id(_))
    }

    /// Primitive generators are the ones without a defining term.
    pub fn is_primitive(&self) -> bool {
        use Generator::*;
        matches!(
            self,
            Id(..) | AssocR(..) | AssocL(..) | SymConj(..) | SymDisj(..) | Dist(..) | DeltaConj(..)
                | SigmaDisj(..) | Mix(..)
        )
    }

    /// The crown index for members of the Δ/Σ family.
    pub fn crown(&self) -> Option<&Formula> {
        use Generator::*;
        match self {
            DeltaConj(b, _) | SigmaDisj(b, _) | SigmaConj(b, _) | DeltaDisj(b, _)
            | DeltaConjP(b, _) | SigmaDisjP(b, _) | SigmaConjP(b, _) | DeltaDisjP(b, _) => Some(b),
            _ => None,
        }
    }

    fn is_negation_arrow(&self) -> bool {
        use Generator::*;
        matches!(
            self,
            NegElim(..)
                | NegIntro(..)
                | DeMorganConjR(..)
                | DeMorganConjL(..)
                | DeMorganDisjR(..)
                | DeMorganDisjL(..)
        )
    }

    pub fn type_of(&self) -> ArrowType {
        use Generator::*;
        let (s, t) = match self {
            Id(a) => (a.clone(), a.clone()),
            AssocR(x, a, b, c) => (bin(*x, a, &bin(*x, b, c)), bin(*x, &bin(*x, a, b), c)),
            AssocL(x, a, b, c) => (bin(*x, &bin(*x, a, b), c), bin(*x, a, &bin(*x, b, c))),
            SymConj(a, b) => (conj(a, b), conj(b, a)),
            SymDisj(a, b) => (disj(b, a), disj(a, b)),
            Dist(a, b, c) => (conj(a, &disj(b, c)), disj(&conj(a, b), c)),
            DistR(c, b, a) => (conj(&disj(c, b), a), disj(c, &conj(b, a))),
            DeltaConj(b, a) => (a.clone(), conj(a, &disj(&neg(b), b))),
            SigmaDisj(b, a) => (disj(&conj(b, &neg(b)), a), a.clone()),
            SigmaConj(b, a) => (a.clone(), conj(&disj(&neg(b), b), a)),
            DeltaDisj(b, a) => (disj(a, &conj(b, &neg(b))), a.clone()),
            DeltaConjP(b, a) => (a.clone(), conj(a, &disj(b, &neg(b)))),
            SigmaDisjP(b, a) => (disj(&conj(&neg(b), b), a), a.clone()),
            SigmaConjP(b, a) => (a.clone(), conj(&disj(b, &neg(b)), a)),
            DeltaDisjP(b, a) => (disj(a, &conj(&neg(b), b)), a.clone()),
            NegElim(a) => (neg(&neg(a)), a.clone()),
            NegIntro(a) => (a.clone(), neg(&neg(a))),
            DeMorganConjR(a, b) => (neg(&conj(a, b)), disj(&neg(a), &neg(b))),
            DeMorganConjL(a, b) => (disj(&neg(a), &neg(b)), neg(&conj(a, b))),
            DeMorganDisjR(a, b) => (neg(&disj(a, b)), conj(&neg(a), &neg(b))),
            DeMorganDisjL(a, b) => (conj(&neg(a), &neg(b)), neg(&disj(a, b))),
            Mix(a, b) => (conj(a, b), disj(a, b)),
        };
        ArrowType { source: s, target: t }
    }

    /// The defining term of a derived generator, one level deep.
    pub fn definition(&self) -> Option<Term> {
        use Generator::*;
        let g = Term::Gen;
        let id = |a: &Formula| Term::id(a.clone());
        Some(match self {
            DistR(c, b, a) => Term::chain(vec![
                g(SymDisj(c.clone(), conj(b, a))),
                Term::or(g(SymConj(a.clone(), b.clone())), id(c)),
                g(Dist(a.clone(), b.clone(), c.clone())),
                Term::and(id(a), g(SymDisj(b.clone(), c.clone()))),
                g(SymConj(disj(c, b), a.clone())),
            ]),
            SigmaConj(b, a) => Term::chain(vec![
                g(SymConj(a.clone(), disj(&neg(b), b))),
                g(DeltaConj(b.clone(), a.clone())),
            ]),
            DeltaDisj(b, a) => Term::chain(vec![
                g(SigmaDisj(b.clone(), a.clone())),
                g(SymDisj(conj(b, &neg(b)), a.clone())),
            ]),
            DeltaConjP(b, a) => Term::chain(vec![
                Term::and(id(a), g(SymDisj(b.clone(), neg(b)))),
                g(DeltaConj(b.clone(), a.clone())),
            ]),
            SigmaDisjP(b, a) => Term::chain(vec![
                g(SigmaDisj(b.clone(), a.clone())),
                Term::or(g(SymConj(neg(b), b.clone())), id(a)),
            ]),
            SigmaConjP(b, a) => Term::chain(vec![
                g(SymConj(a.clone(), disj(b, &neg(b)))),
                g(DeltaConjP(b.clone(), a.clone())),
            ]),
            DeltaDisjP(b, a) => Term::chain(vec![
                g(SigmaDisjP(b.clone(), a.clone())),
                g(SymDisj(conj(&neg(b), b), a.clone())),
            ]),
            NegElim(a) => Term::chain(vec![
                g(SigmaDisjP(neg(a), a.clone())),
                g(Dist(neg(&neg(a)), neg(a), a.clone())),
                g(DeltaConj(a.clone(), neg(&neg(a)))),
            ]),
            NegIntro(a) => Term::chain(vec![
                g(SigmaDisj(a.clone(), neg(&neg(a)))),
                g(Dist(a.clone(), neg(a), neg(&neg(a)))),
                g(DeltaConjP(neg(a), a.clone())),
            ]),
            DeMorganConjR(a, b) => {
                let ab = conj(a, b);
                let nab = neg(&ab);
                let (na, nb) = (neg(a), neg(b));
                let inner = Term::chain(vec![
                    Term::or(id(&ab), g(SymDisj(na.clone(), nb.clone()))),
                    g(AssocL(Connective::Or, ab.clone(), nb.clone(), na.clone())),
                    Term::or(
                        Term::chain(vec![
                            g(Dist(a.clone(), b.clone(), nb.clone())),
                            g(DeltaConjP(b.clone(), a.clone())),
                        ]),
                        id(&na),
                    ),
                ]);
                Term::chain(vec![
                    g(SigmaDisjP(ab.clone(), disj(&na, &nb))),
                    g(Dist(nab.clone(), ab.clone(), disj(&na, &nb))),
                    Term::and(id(&nab), inner),
                    g(DeltaConjP(a.clone(), nab.clone())),
                ])
            }
            DeMorganConjL(a, b) => {
                let ab = conj(a, b);
                let nab = neg(&ab);
                let (na, nb) = (neg(a), neg(b));
                let nanb = disj(&na, &nb);
                let left = Term::chain(vec![
                    Term::and(
                        Term::chain(vec![
                            g(DeltaDisjP(b.clone(), na.clone())),
                            g(DistR(na.clone(), nb.clone(), b.clone())),
                        ]),
                        id(a),
                    ),
                    g(AssocR(Connective::And, nanb.clone(), b.clone(), a.clone())),
                    Term::and(id(&nanb), g(SymConj(a.clone(), b.clone()))),
                ]);
                Term::chain(vec![
                    g(SigmaDisjP(a.clone(), nab.clone())),
                    Term::or(left, id(&nab)),
                    g(Dist(nanb.clone(), ab.clone(), nab.clone())),
                    g(DeltaConjP(ab.clone(), nanb.clone())),
                ])
            }
            DeMorganDisjR(a, b) => {
                let ab = disj(a, b);
                let nab = neg(&ab);
                let (na, nb) = (neg(a), neg(b));
                let nanb = conj(&na, &nb);
                let inner = Term::chain(vec![
                    Term::or(g(SymDisj(a.clone(), b.clone())), id(&nanb)),
                    g(AssocR(Connective::Or, b.clone(), a.clone(), nanb.clone())),
                    Term::or(
                        id(b),
                        Term::chain(vec![
                            g(DistR(a.clone(), na.clone(), nb.clone())),
                            g(SigmaConjP(a.clone(), nb.clone())),
                        ]),
                    ),
                ]);
                Term::chain(vec![
                    g(SigmaDisjP(ab.clone(), nanb.clone())),
                    g(Dist(nab.clone(), ab.clone(), nanb.clone())),
                    Term::and(id(&nab), inner),
                    g(DeltaConjP(b.clone(), nab.clone())),
                ])
            }
            DeMorganDisjL(a, b) => {
                let ab = disj(a, b);
                let nab = neg(&ab);
                let (na, nb) = (neg(a), neg(b));
                let nanb = conj(&na, &nb);
                let left = Term::chain(vec![
                    Term::and(
                        id(&nb),
                        Term::chain(vec![
                            g(SigmaDisjP(a.clone(), b.clone())),
                            g(Dist(na.clone(), a.clone(), b.clone())),
                        ]),
                    ),
                    g(AssocL(Connective::And, nb.clone(), na.clone(), ab.clone())),
                    Term::and(g(SymConj(na.clone(), nb.clone())), id(&ab)),
                ]);
                Term::chain(vec![
                    g(SigmaDisjP(b.clone(), nab.clone())),
                    Term::or(left, id(&nab)),
                    g(Dist(nanb.clone(), ab.clone(), nab.clone())),
                    g(DeltaConjP(ab.clone(), nanb.clone())),
                ])
            }
            _ => return None,
        })
    }

    /// Why this generator is not admissible in `theory`, if it is not.
    pub fn violation(&self, theory: Theory) -> Option<ViolationReason> {
        let lang = theory.language();
        for a in self.indices() {
            if !a.in_language(lang) {
                return Some(ViolationReason::IndexOutsideLanguage(a.clone()));
            }
        }
        if let Generator::Mix(..) = self {
            if !theory.has_mix() {
                return Some(ViolationReason::NotAdmissible(self.name()));
            }
        }
        if let Some(b) = self.crown() {
            if !theory.has_crowns() {
                return Some(ViolationReason::NotAdmissible(self.name()));
            }
            if !theory.has_full_negation() && !b.is_atom() {
                return Some(ViolationReason::CrownNotLetter(b.clone()));
            }
        }
        if self.is_negation_arrow() && !theory.has_full_negation() {
            return Some(ViolationReason::NotAdmissible(self.name()));
        }
        None
    }

    pub fn pretty(&self) -> String {
        let idx: Vec<String> = self.indices().iter().map(|a| a.pretty()).collect();
        let joined = idx.join(",");
        if idx.len() == 1 && idx[0].chars().count() == 1 {
            format!("{}_{}", self.symbol(), joined)
        } else {
            format!("{}_{{{}}}", self.symbol(), joined)
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}(", self.name())?;
        for (i, a) in self.indices().into_iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{}", a)?;
        }
        f.write_str(")")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ArrowType {
    pub source: Formula,
    pub target: Formula,
}

impl fmt::Display for ArrowType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ⊢ {}", self.source, self.target)
    }
}

/// An arrow term. `Comp(f, g)` is f∘g, so `g` is applied first.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Term {
    Gen(Generator),
    Comp(Box<Term>, Box<Term>),
    Tensor(Connective, Box<Term>, Box<Term>),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Step {
    /// The outer arrow `f` of `f . g`.
    Outer,
    /// The inner arrow `g` of `f . g`.
    Inner,
    Left,
    Right,
}

/// A path from the root of a term to one of its subterms.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct TermPath(pub Vec<Step>);

impl TermPath {
    pub fn child(&self, step: Step) -> TermPath {
        let mut v = self.0.clone();
        v.push(step);
        TermPath(v)
    }
}

impl fmt::Display for TermPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("root");
        }
        let names: Vec<&str> = self
            .0
            .iter()
            .map(|s| match s {
                Step::Outer => "outer",
                Step::Inner => "inner",
                Step::Left => "left",
                Step::Right => "right",
            })
            .collect();
        write!(f, "root.{}", names.join("."))
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TypeError {
    #[error("composition mismatch at {path}: the outer arrow starts at `{expected}` but the inner arrow ends at `{found}`")]
    Mismatch { path: TermPath, expected: Formula, found: Formula },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ViolationReason {
    #[error("generator `{0}` is not available in this theory")]
    NotAdmissible(&'static str),
    #[error("crown index `{0}` must be a letter")]
    CrownNotLetter(Formula),
    #[error("index `{0}` is outside the theory's language")]
    IndexOutsideLanguage(Formula),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("not a term of {theory}: {reason} (at {path}, in `{generator}`)")]
pub struct TheoryViolation {
    pub theory: Theory,
    pub path: TermPath,
    pub generator: Generator,
    pub reason: ViolationReason,
}

impl Term {
    pub fn id(a: Formula) -> Term {
        Term::Gen(Generator::Id(a))
    }

    pub fn comp(f: Term, g: Term) -> Term {
        Term::Comp(Box::new(f), Box::new(g))
    }

    pub fn tensor(c: Connective, f: Term, g: Term) -> Term {
        Term::Tensor(c, Box::new(f), Box::new(g))
    }

    pub fn and(f: Term, g: Term) -> Term {
        Term::tensor(Connective::And, f, g)
    }

    pub fn or(f: Term, g: Term) -> Term {
        Term::tensor(Connective::Or, f, g)
    }

    /// `[f_n, ..., f_1]` becomes f_n∘(…∘f_1), associated to the right.
    /// Panics on an empty list.
    pub fn chain(factors: Vec<Term>) -> Term {
        let mut it = factors.into_iter().rev();
        let mut acc = it.next().expect("chain of at least one factor");
        for f in it {
            acc = Term::comp(f, acc);
        }
        acc
    }

    pub fn type_of(&self) -> Result<ArrowType, TypeError> {
        self.type_at(&TermPath::default())
    }

    fn type_at(&self, path: &TermPath) -> Result<ArrowType, TypeError> {
        match self {
            Term::Gen(g) => Ok(g.type_of()),
            Term::Comp(f, g) => {
                let tf = f.type_at(&path.child(Step::Outer))?;
                let tg = g.type_at(&path.child(Step::Inner))?;
                if tg.target != tf.source {
                    return Err(TypeError::Mismatch {
                        path: path.clone(),
                        expected: tf.source,
                        found: tg.target,
                    });
                }
                Ok(ArrowType { source: tg.source, target: tf.target })
            }
            Term::Tensor(c, f, g) => {
                let tf = f.type_at(&path.child(Step::Left))?;
                let tg = g.type_at(&path.child(Step::Right))?;
                Ok(ArrowType {
                    source: Formula::binary(*c, tf.source, tg.source),
                    target: Formula::binary(*c, tf.target, tg.target),
                })
            }
        }
    }

    pub fn check_theory(&self, theory: Theory) -> bool {
        self.theory_violation(theory).is_none()
    }

    /// The first inadmissible generator, in left-to-right order.
    pub fn theory_violation(&self, theory: Theory) -> Option<TheoryViolation> {
        let mut found = None;
        self.visit(&TermPath::default(), &mut |path, t| {
            if found.is_some() {
                return;
            }
            if let Term::Gen(g) = t {
                if let Some(reason) = g.violation(theory) {
                    found = Some(TheoryViolation {
                        theory,
                        path: path.clone(),
                        generator: g.clone(),
                        reason,
                    });
                }
            }
        });
        found
    }

    /// Pre-order traversal with paths.
    pub fn visit(&self, path: &TermPath, f: &mut dyn FnMut(&TermPath, &Term)) {
        f(path, self);
        match self {
            Term::Gen(_) => {}
            Term::Comp(a, b) => {
                a.visit(&path.child(Step::Outer), f);
                b.visit(&path.child(Step::Inner), f);
            }
            Term::Tensor(_, a, b) => {
                a.visit(&path.child(Step::Left), f);
                b.visit(&path.child(Step::Right), f);
            }
        }
    }

    pub fn positions(&self) -> Vec<TermPath> {
        let mut out = Vec::new();
        self.visit(&TermPath::default(), &mut |p, _| out.push(p.clone()));
        out
    }

    pub fn subterm(&self, path: &TermPath) -> Option<&Term> {
        let mut t = self;
        for step in &path.0 {
            t = match (t, step) {
                (Term::Comp(a, _), Step::Outer) => a,
                (Term::Comp(_, b), Step::Inner) => b,
                (Term::Tensor(_, a, _), Step::Left) => a,
                (Term::Tensor(_, _, b), Step::Right) => b,
                _ => return None,
            };
        }
        Some(t)
    }

    /// Returns a copy with the subterm at `path` replaced.
    pub fn replace_at(&self, path: &TermPath, new: Term) -> Option<Term> {
        self.replace_from(&path.0, new)
    }

    fn replace_from(&self, steps: &[Step], new: Term) -> Option<Term> {
        let Some((first, rest)) = steps.split_first() else {
            return Some(new);
        };
        Some(match (self, first) {
            (Term::Comp(a, b), Step::Outer) => Term::comp(a.replace_from(rest, new)?, (**b).clone()),
            (Term::Comp(a, b), Step::Inner) => Term::comp((**a).clone(), b.replace_from(rest, new)?),
            (Term::Tensor(c, a, b), Step::Left) => {
                Term::tensor(*c, a.replace_from(rest, new)?, (**b).clone())
            }
            (Term::Tensor(c, a, b), Step::Right) => {
                Term::tensor(*c, (**a).clone(), b.replace_from(rest, new)?)
            }
            _ => return None,
        })
    }

    /// Number of generator occurrences.
    pub fn size(&self) -> usize {
        match self {
            Term::Gen(_) => 1,
            Term::Comp(a, b) | Term::Tensor(_, a, b) => a.size() + b.size(),
        }
    }

    pub fn generators(&self) -> Vec<&Generator> {
        let mut out = Vec::new();
        self.collect_generators(&mut out);
        out
    }

    fn collect_generators<'a>(&'a self, out: &mut Vec<&'a Generator>) {
        match self {
            Term::Gen(g) => out.push(g),
            Term::Comp(a, b) | Term::Tensor(_, a, b) => {
                a.collect_generators(out);
                b.collect_generators(out);
            }
        }
    }

    /// Replaces every derived generator by its defining term, recursively,
    /// so only primitives remain.
    pub fn expand_derived(&self) -> Term {
        match self {
            Term::Gen(g) => match g.definition() {
                Some(def) => def.expand_derived(),
                None => self.clone(),
            },
            Term::Comp(a, b) => Term::comp(a.expand_derived(), b.expand_derived()),
            Term::Tensor(c, a, b) => Term::tensor(*c, a.expand_derived(), b.expand_derived()),
        }
    }

    pub fn is_primitive_only(&self) -> bool {
        self.generators().iter().all(|g| g.is_primitive())
    }

    /// Rendering in the usual mathematical notation, e.g. `Σ∨_{q,p∧q} ∘ 1_p`.
    pub fn pretty(&self) -> String {
        match self {
            Term::Gen(g) => g.pretty(),
            Term::Comp(f, g) => {
                let left = match **f {
                    Term::Gen(_) => f.pretty(),
                    _ => format!("({})", f.pretty()),
                };
                let right = match **g {
                    Term::Tensor(..) => format!("({})", g.pretty()),
                    _ => g.pretty(),
                };
                format!("{} ∘ {}", left, right)
            }
            Term::Tensor(c, f, g) => {
                let op = match c {
                    Connective::And => "∧",
                    Connective::Or => "∨",
                };
                format!("{} {} {}", pretty_operand(f), op, pretty_operand(g))
            }
        }
    }

    fn fmt_operand(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Gen(_) => write!(f, "{}", self),
            _ => write!(f, "({})", self),
        }
    }
}

fn pretty_operand(t: &Term) -> String {
    match t {
        Term::Gen(_) => t.pretty(),
        _ => format!("({})", t.pretty()),
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Gen(g) => write!(f, "{}", g),
            Term::Comp(a, b) => {
                match **a {
                    Term::Gen(_) => write!(f, "{}", a)?,
                    _ => write!(f, "({})", a)?,
                }
                match **b {
                    Term::Tensor(..) => write!(f, " . ({})", b),
                    _ => write!(f, " . {}", b),
                }
            }
            Term::Tensor(c, a, b) => {
                a.fmt_operand(f)?;
                write!(f, " {} ", c.symbol())?;
                b.fmt_operand(f)
            }
        }
    }
}

impl FromStr for Term {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Term, ParseError> {
        parse_arrow(s)
    }
}

impl Formula {
    /// Rendering with ¬, ∧ and ∨.
    pub fn pretty(&self) -> String {
        fn operand(a: &Formula) -> String {
            match a {
                Formula::Binary(..) => format!("({})", a.pretty()),
                _ => a.pretty(),
            }
        }
        match self {
            Formula::Atom(l) => l.to_string(),
            Formula::Neg(a) => format!("¬{}", operand(a)),
            Formula::Binary(c, a, b) => {
                let op = match c {
                    Connective::And => "∧",
                    Connective::Or => "∨",
                };
                format!("{}{}{}", operand(a), op, operand(b))
            }
        }
    }
}

/// Resolves surface syntax into a term. `lookup` supplies the meaning of
/// bare names.
pub fn elaborate(expr: &Expr, lookup: &dyn Fn(&str) -> Option<Term>) -> Result<Term, ParseError> {
    match expr {
        Expr::Gen { name, args, pos } => match Generator::from_name(name, args.clone()) {
            Ok(g) => Ok(Term::Gen(g)),
            Err(None) => Err(ParseError {
                pos: *pos,
                kind: ParseErrorKind::UnknownGenerator(name.clone()),
            }),
            Err(Some(expected)) => Err(ParseError {
                pos: *pos,
                kind: ParseErrorKind::WrongArity {
                    name: name.clone(),
                    expected,
                    found: args.len(),
                },
            }),
        },
        Expr::Ref { name, pos } => lookup(name).ok_or_else(|| ParseError {
            pos: *pos,
            kind: ParseErrorKind::UnknownName(name.clone()),
        }),
        Expr::Comp(f, g) => Ok(Term::comp(elaborate(f, lookup)?, elaborate(g, lookup)?)),
        Expr::Tensor(c, f, g) => Ok(Term::tensor(*c, elaborate(f, lookup)?, elaborate(g, lookup)?)),
    }
}

/// Parses a closed term (no references).
pub fn parse_arrow(src: &str) -> Result<Term, ParseError> {
    elaborate(&syntax::parse_expr(src)?, &|_| None)
}

pub fn print_arrow(f: &Term) -> String {
    f.to_string()
}
