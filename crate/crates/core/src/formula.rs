//! Propositional formulas over letters, built with negation, conjunction and
//! disjunction.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::syntax;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FormulaError {
    #[error("occurrence index {index} out of range for a formula with {count} letter occurrences")]
    OccurrenceOutOfRange { index: usize, count: usize },
    #[error("`{0}` is not a valid letter name")]
    BadLetter(String),
}

/// A propositional letter. Any identifier is a letter.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter(String);

impl Letter {
    pub fn new(name: &str) -> Result<Letter, FormulaError> {
        if syntax::is_identifier(name) {
            Ok(Letter(name.to_string()))
        } else {
            Err(FormulaError::BadLetter(name.to_string()))
        }
    }

    pub fn name(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Connective {
    And,
    Or,
}

impl Connective {
    pub fn dual(self) -> Connective {
        match self {
            Connective::And => Connective::Or,
            Connective::Or => Connective::And,
        }
    }

    /// ASCII spelling used by the text syntax.
    pub fn symbol(self) -> &'static str {
        match self {
            Connective::And => "/\\",
            Connective::Or => "\\/",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Formula {
    Atom(Letter),
    Neg(Box<Formula>),
    Binary(Connective, Box<Formula>, Box<Formula>),
}

/// One letter occurrence, read left to right.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Occurrence {
    pub letter: Letter,
    /// Whether the occurrence is under an odd number of negations.
    pub negative: bool,
}

/// Object languages: no negation, negation on letters only, or negation anywhere.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Language {
    Positive,
    Literal,
    Full,
}

impl Formula {
    /// Builds an atom. Panics if `name` is not an identifier.
    pub fn atom(name: &str) -> Formula {
        Formula::Atom(Letter::new(name).expect("letter names are identifiers"))
    }

    pub fn neg(a: Formula) -> Formula {
        Formula::Neg(Box::new(a))
    }

    pub fn binary(c: Connective, a: Formula, b: Formula) -> Formula {
        Formula::Binary(c, Box::new(a), Box::new(b))
    }

    pub fn conj(a: Formula, b: Formula) -> Formula {
        Formula::binary(Connective::And, a, b)
    }

    pub fn disj(a: Formula, b: Formula) -> Formula {
        Formula::binary(Connective::Or, a, b)
    }

    pub fn is_atom(&self) -> bool {
        matches!(self, Formula::Atom(_))
    }

    /// A letter or a negated letter.
    pub fn is_literal(&self) -> bool {
        match self {
            Formula::Atom(_) => true,
            Formula::Neg(inner) => inner.is_atom(),
            Formula::Binary(..) => false,
        }
    }

    pub fn letter_count(&self) -> usize {
        match self {
            Formula::Atom(_) => 1,
            Formula::Neg(a) => a.letter_count(),
            Formula::Binary(_, a, b) => a.letter_count() + b.letter_count(),
        }
    }

    pub fn occurrences(&self) -> Vec<Occurrence> {
        let mut out = Vec::with_capacity(self.letter_count());
        self.collect_occurrences(false, &mut out);
        out
    }

    fn collect_occurrences(&self, negative: bool, out: &mut Vec<Occurrence>) {
        match self {
            Formula::Atom(l) => out.push(Occurrence { letter: l.clone(), negative }),
            Formula::Neg(a) => a.collect_occurrences(!negative, out),
            Formula::Binary(_, a, b) => {
                a.collect_occurrences(negative, out);
                b.collect_occurrences(negative, out);
            }
        }
    }

    /// The letter at 0-based occurrence `k` and whether it sits under an odd
    /// number of negations.
    pub fn letter_at(&self, k: usize) -> Result<(Letter, bool), FormulaError> {
        let count = self.letter_count();
        if k >= count {
            return Err(FormulaError::OccurrenceOutOfRange { index: k, count });
        }
        let mut node = self;
        let mut k = k;
        let mut negative = false;
        loop {
            match node {
                Formula::Atom(l) => return Ok((l.clone(), negative)),
                Formula::Neg(a) => {
                    negative = !negative;
                    node = a;
                }
                Formula::Binary(_, a, b) => {
                    let left = a.letter_count();
                    if k < left {
                        node = a;
                    } else {
                        k -= left;
                        node = b;
                    }
                }
            }
        }
    }

    /// Negation normal form: double negations dropped, De Morgan pushed to
    /// the letters.
    pub fn nnf(&self) -> Formula {
        match self {
            Formula::Atom(_) => self.clone(),
            Formula::Binary(c, a, b) => Formula::binary(*c, a.nnf(), b.nnf()),
            Formula::Neg(inner) => match inner.as_ref() {
                Formula::Atom(_) => self.clone(),
                Formula::Neg(a) => a.nnf(),
                Formula::Binary(c, a, b) => Formula::binary(
                    c.dual(),
                    Formula::neg((**a).clone()).nnf(),
                    Formula::neg((**b).clone()).nnf(),
                ),
            },
        }
    }

    pub fn in_language(&self, lang: Language) -> bool {
        match self {
            Formula::Atom(_) => true,
            Formula::Binary(_, a, b) => a.in_language(lang) && b.in_language(lang),
            Formula::Neg(a) => match lang {
                Language::Positive => false,
                Language::Literal => a.is_atom(),
                Language::Full => a.in_language(lang),
            },
        }
    }

    /// Replaces atoms by formulas. Atoms missing from the map stay put.
    pub fn substitute(&self, map: &dyn Fn(&Letter) -> Option<Formula>) -> Formula {
        match self {
            Formula::Atom(l) => map(l).unwrap_or_else(|| self.clone()),
            Formula::Neg(a) => Formula::neg(a.substitute(map)),
            Formula::Binary(c, a, b) => Formula::binary(*c, a.substitute(map), b.substitute(map)),
        }
    }

    pub fn letters(&self) -> Vec<Letter> {
        let mut out: Vec<Letter> = self.occurrences().into_iter().map(|o| o.letter).collect();
        out.sort();
        out.dedup();
        out
    }

    fn fmt_operand(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Formula::Binary(..) => write!(f, "({})", self),
            _ => write!(f, "{}", self),
        }
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Formula::Atom(l) => write!(f, "{}", l),
            Formula::Neg(a) => {
                f.write_str("~")?;
                a.fmt_operand(f)
            }
            Formula::Binary(c, a, b) => {
                a.fmt_operand(f)?;
                write!(f, " {} ", c.symbol())?;
                b.fmt_operand(f)
            }
        }
    }
}

impl FromStr for Formula {
    type Err = syntax::ParseError;

    fn from_str(s: &str) -> Result<Formula, Self::Err> {
        syntax::parse_formula(s)
    }
}

/// Negation normal form, which is the object part of the translation into
/// letter-negation formulas.
pub fn nnf(a: &Formula) -> Formula {
    a.nnf()
}

pub fn letter_count(a: &Formula) -> usize {
    a.letter_count()
}

pub fn letter_at(a: &Formula, k: usize) -> Result<(Letter, bool), FormulaError> {
    a.letter_at(k)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(s: &str) -> Formula {
        s.parse().unwrap()
    }

    #[test]
    fn counts() {
        assert_eq!(f("p \\/ q").letter_count(), 2);
        assert_eq!(f("(q \\/ ~r) \\/ q").letter_count(), 3);
        assert_eq!(f("~(p /\\ q)").letter_count(), 2);
    }

    #[test]
    fn letter_at_reports_polarity() {
        let a = f("(q \\/ ~r) \\/ q");
        assert_eq!(a.letter_at(0).unwrap(), (Letter::new("q").unwrap(), false));
        assert_eq!(a.letter_at(1).unwrap(), (Letter::new("r").unwrap(), true));
        assert_eq!(a.letter_at(2).unwrap(), (Letter::new("q").unwrap(), false));
        assert_eq!(
            a.letter_at(3),
            Err(FormulaError::OccurrenceOutOfRange { index: 3, count: 3 })
        );
        let b = f("~~p");
        assert!(!b.letter_at(0).unwrap().1);
    }

    #[test]
    fn nnf_examples() {
        assert_eq!(f("~(p /\\ q)").nnf(), f("~p \\/ ~q"));
        assert_eq!(f("~~p").nnf(), f("p"));
        assert_eq!(f("~(~p \\/ (q /\\ r))").nnf(), f("p /\\ (~q \\/ ~r)"));
        assert_eq!(f("~~(p \\/ q)").nnf(), f("p \\/ q"));
        assert_eq!(f("~(p \\/ q)").nnf(), f("~p /\\ ~q"));
    }

    #[test]
    fn languages() {
        assert!(!f("~(p /\\ q)").in_language(Language::Positive));
        assert!(f("~p /\\ q").in_language(Language::Literal));
        assert!(!f("~~p").in_language(Language::Literal));
        assert!(f("~(p /\\ q)").in_language(Language::Full));
    }

    #[test]
    fn bad_letter() {
        assert!(Letter::new("1x").is_err());
        assert!(Letter::new("").is_err());
        assert!(Letter::new("p_1").is_ok());
    }
}
