//! Patterns are surface expressions in which every letter is a formula
//! metavariable and every bare name an arrow metavariable.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::arrows::{elaborate, ArrowType, Generator, Term, TypeError};
use crate::formula::{Formula, Letter};
use crate::syntax::Expr;

/// Images of formula and arrow metavariables.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Substitution {
    pub formulas: BTreeMap<String, Formula>,
    pub arrows: BTreeMap<String, Term>,
}

impl Substitution {
    pub fn new() -> Substitution {
        Substitution::default()
    }

    pub fn formula(mut self, name: &str, a: Formula) -> Substitution {
        self.formulas.insert(name.to_string(), a);
        self
    }

    pub fn arrow(mut self, name: &str, f: Term) -> Substitution {
        self.arrows.insert(name.to_string(), f);
        self
    }

    pub fn apply_formula(&self, a: &Formula) -> Result<Formula, SchemaError> {
        if let Some(l) = a.letters().into_iter().find(|l| !self.formulas.contains_key(l.name())) {
            return Err(SchemaError::Incomplete(l.name().to_string()));
        }
        Ok(a.substitute(&|l: &Letter| self.formulas.get(l.name()).cloned()))
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SchemaError {
    #[error("substitution leaves metavariable `{0}` unassigned")]
    Incomplete(String),
    #[error("`{var}` must have type {expected}, but its image has type {found}")]
    SideCondition { var: String, expected: ArrowType, found: ArrowType },
    #[error(transparent)]
    Type(#[from] TypeError),
    #[error("instance sides have different types: {0} and {1}")]
    SidesDiffer(ArrowType, ArrowType),
    #[error("malformed schema {name}: {reason}")]
    Malformed { name: String, reason: String },
}

/// Replaces metavariables, yielding a closed term.
pub fn instantiate_expr(e: &Expr, s: &Substitution) -> Result<Term, SchemaError> {
    match e {
        Expr::Gen { name, args, .. } => {
            let args = args.iter().map(|a| s.apply_formula(a)).collect::<Result<Vec<_>, _>>()?;
            let g = Generator::from_name(name, args).map_err(|_| SchemaError::Malformed {
                name: name.clone(),
                reason: "bad generator".into(),
            })?;
            Ok(Term::Gen(g))
        }
        Expr::Ref { name, .. } => {
            s.arrows.get(name).cloned().ok_or_else(|| SchemaError::Incomplete(name.clone()))
        }
        Expr::Comp(f, g) => Ok(Term::comp(instantiate_expr(f, s)?, instantiate_expr(g, s)?)),
        Expr::Tensor(c, f, g) => {
            Ok(Term::tensor(*c, instantiate_expr(f, s)?, instantiate_expr(g, s)?))
        }
    }
}

/// Extends `s` so that the pattern formula `p` becomes `a`.
pub fn match_formula(p: &Formula, a: &Formula, s: &mut Substitution) -> bool {
    match (p, a) {
        (Formula::Atom(v), _) => match s.formulas.get(v.name()) {
            Some(bound) => bound == a,
            None => {
                s.formulas.insert(v.name().to_string(), a.clone());
                true
            }
        },
        (Formula::Neg(x), Formula::Neg(y)) => match_formula(x, y, s),
        (Formula::Binary(c, x1, x2), Formula::Binary(d, y1, y2)) => {
            c == d && match_formula(x1, y1, s) && match_formula(x2, y2, s)
        }
        _ => false,
    }
}

/// Syntactic matching of a pattern against a closed term.
pub fn match_expr(e: &Expr, t: &Term, s: &mut Substitution) -> bool {
    match (e, t) {
        (Expr::Ref { name, .. }, _) => match s.arrows.get(name) {
            Some(bound) => bound == t,
            None => {
                s.arrows.insert(name.clone(), t.clone());
                true
            }
        },
        (Expr::Gen { name, args, .. }, Term::Gen(g)) => {
            g.name() == name
                && args.len() == g.indices().len()
                && args.iter().zip(g.indices()).all(|(p, a)| match_formula(p, a, s))
        }
        (Expr::Comp(f, g), Term::Comp(a, b)) => match_expr(f, a, s) && match_expr(g, b, s),
        (Expr::Tensor(c, f, g), Term::Tensor(d, a, b)) => {
            c == d && match_expr(f, a, s) && match_expr(g, b, s)
        }
        _ => false,
    }
}

/// Type of a pattern, treating formula metavariables as letters and arrow
/// metavariables as having their declared types.
pub fn symbolic_type(
    e: &Expr,
    vars: &dyn Fn(&str) -> Option<ArrowType>,
) -> Result<ArrowType, SchemaError> {
    fn go(
        e: &Expr,
        vars: &dyn Fn(&str) -> Option<ArrowType>,
    ) -> Result<ArrowType, SchemaError> {
        match e {
            Expr::Ref { name, .. } => vars(name).ok_or_else(|| SchemaError::Incomplete(name.clone())),
            Expr::Gen { .. } => Ok(elaborate(e, &|_| None)
                .map_err(|err| SchemaError::Malformed {
                    name: err.to_string(),
                    reason: "bad generator".into(),
                })?
                .type_of()?),
            Expr::Comp(f, g) => {
                let tf = go(f, vars)?;
                let tg = go(g, vars)?;
                if tf.source != tg.target {
                    return Err(SchemaError::SidesDiffer(tf, tg));
                }
                Ok(ArrowType { source: tg.source, target: tf.target })
            }
            Expr::Tensor(c, f, g) => {
                let tf = go(f, vars)?;
                let tg = go(g, vars)?;
                Ok(ArrowType {
                    source: Formula::binary(*c, tf.source, tg.source),
                    target: Formula::binary(*c, tf.target, tg.target),
                })
            }
        }
    }
    go(e, vars)
}

/// Formula metavariables of a pattern, in order of first appearance.
pub fn formula_vars(e: &Expr, out: &mut Vec<String>) {
    match e {
        Expr::Gen { args, .. } => {
            for a in args {
                for o in a.occurrences() {
                    let n = o.letter.name().to_string();
                    if !out.contains(&n) {
                        out.push(n);
                    }
                }
            }
        }
        Expr::Ref { .. } => {}
        Expr::Comp(f, g) | Expr::Tensor(_, f, g) => {
            formula_vars(f, out);
            formula_vars(g, out);
        }
    }
}

/// Metavariables that occur as a crown index or under a negation.
pub fn negated_vars(e: &Expr, out: &mut Vec<String>) {
    fn under_neg(a: &Formula, neg: bool, out: &mut Vec<String>) {
        match a {
            Formula::Atom(l) => {
                if neg && !out.contains(&l.name().to_string()) {
                    out.push(l.name().to_string());
                }
            }
            Formula::Neg(x) => under_neg(x, true, out),
            Formula::Binary(_, x, y) => {
                under_neg(x, neg, out);
                under_neg(y, neg, out);
            }
        }
    }
    match e {
        Expr::Gen { name, args, .. } => {
            let crowned = Generator::from_name(name, args.clone())
                .ok()
                .and_then(|g| g.crown().cloned());
            for (i, a) in args.iter().enumerate() {
                under_neg(a, crowned.is_some() && i == 0, out);
            }
        }
        Expr::Ref { .. } => {}
        Expr::Comp(f, g) | Expr::Tensor(_, f, g) => {
            negated_vars(f, out);
            negated_vars(g, out);
        }
    }
}

fn fmt_expr(e: &Expr, pretty: bool) -> String {
    let operand = |x: &Expr| match x {
        Expr::Gen { .. } | Expr::Ref { .. } => fmt_expr(x, pretty),
        _ => format!("({})", fmt_expr(x, pretty)),
    };
    match e {
        Expr::Gen { name, args, .. } => {
            let g = Generator::from_name(name, args.clone()).expect("catalog patterns are well formed");
            if pretty {
                g.pretty()
            } else {
                g.to_string()
            }
        }
        Expr::Ref { name, .. } => name.clone(),
        Expr::Comp(f, g) => {
            let left = match **f {
                Expr::Comp(..) | Expr::Tensor(..) => format!("({})", fmt_expr(f, pretty)),
                _ => fmt_expr(f, pretty),
            };
            let right = match **g {
                Expr::Tensor(..) => format!("({})", fmt_expr(g, pretty)),
                _ => fmt_expr(g, pretty),
            };
            let op = if pretty { "∘" } else { "." };
            format!("{} {} {}", left, op, right)
        }
        Expr::Tensor(c, f, g) => {
            let op = match (pretty, c) {
                (true, crate::formula::Connective::And) => "∧",
                (true, crate::formula::Connective::Or) => "∨",
                (false, c) => c.symbol(),
            };
            format!("{} {} {}", operand(f), op, operand(g))
        }
    }
}

pub fn expr_to_string(e: &Expr) -> String {
    fmt_expr(e, false)
}

pub fn expr_pretty(e: &Expr) -> String {
    fmt_expr(e, true)
}
