//! Deciding equality of arrow terms by comparing graphs.
//!
//! For each theory the graph functor into Br is faithful, so two terms of
//! the same type are equal exactly when their graphs coincide. Soundness of
//! the axioms with respect to graphs is tested here; faithfulness itself is
//! a mathematical fact this crate relies on and cannot check.

use serde::Serialize;
use thiserror::Error;

use crate::arrows::{ArrowType, Term, Theory, TypeError};
use crate::brauer::{Block, SplitEquivalence};
use crate::semantics::{g_arrow, SemanticsError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Reason {
    TypeMismatch,
    GraphMismatch,
    Equal,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub equal: bool,
    pub reason: Reason,
    /// On a graph mismatch, a block of the first graph missing from the
    /// second (or the other way round if there is none).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Block>,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DecideError {
    #[error("first term: {0}")]
    First(SemanticsError),
    #[error("second term: {0}")]
    Second(SemanticsError),
    #[error("path {0} is empty")]
    EmptyPath(usize),
    #[error("path {path} mentions unknown arrow `{name}`")]
    UnknownEdge { path: usize, name: String },
    #[error("path {path} does not compose: {error}")]
    NotComposable { path: usize, error: TypeError },
    #[error("the paths have different endpoints: {0} versus {1}")]
    EndpointMismatch(ArrowType, ArrowType),
}

/// The least block of `a` that is not a block of `b`.
pub fn witness(a: &SplitEquivalence, b: &SplitEquivalence) -> Option<Block> {
    a.blocks()
        .iter()
        .find(|x| !b.blocks().contains(x))
        .or_else(|| b.blocks().iter().find(|x| !a.blocks().contains(x)))
        .cloned()
}

pub fn equal_in(f: &Term, g: &Term, theory: Theory) -> Result<Verdict, DecideError> {
    let gf = g_arrow(f, theory).map_err(DecideError::First)?;
    let gg = g_arrow(g, theory).map_err(DecideError::Second)?;
    let (tf, tg) = (f.type_of().expect("checked"), g.type_of().expect("checked"));
    if tf != tg {
        return Ok(Verdict { equal: false, reason: Reason::TypeMismatch, witness: None });
    }
    if gf == gg {
        return Ok(Verdict { equal: true, reason: Reason::Equal, witness: None });
    }
    Ok(Verdict { equal: false, reason: Reason::GraphMismatch, witness: witness(&gf, &gg) })
}

/// Arrows with names, and two paths through them. A path lists arrow
/// names in written order, so `["f", "g"]` is f∘g.
#[derive(Clone, Debug, Default)]
pub struct Diagram {
    pub arrows: Vec<(String, Term)>,
    pub paths: [Vec<String>; 2],
}

impl Diagram {
    fn path_term(&self, k: usize) -> Result<Term, DecideError> {
        let names = &self.paths[k];
        if names.is_empty() {
            return Err(DecideError::EmptyPath(k + 1));
        }
        let terms = names
            .iter()
            .map(|n| {
                self.arrows
                    .iter()
                    .find(|(m, _)| m == n)
                    .map(|(_, t)| t.clone())
                    .ok_or_else(|| DecideError::UnknownEdge { path: k + 1, name: n.clone() })
            })
            .collect::<Result<Vec<_>, _>>()?;
        let t = Term::chain(terms);
        t.type_of().map_err(|error| DecideError::NotComposable { path: k + 1, error })?;
        Ok(t)
    }
}

/// Whether the diagram commutes in `theory`.
pub fn commutes(diagram: &Diagram, theory: Theory) -> Result<Verdict, DecideError> {
    let f = diagram.path_term(0)?;
    let g = diagram.path_term(1)?;
    let (tf, tg) = (f.type_of().expect("checked"), g.type_of().expect("checked"));
    if tf != tg {
        return Err(DecideError::EndpointMismatch(tf, tg));
    }
    equal_in(&f, &g, theory)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::brauer::Endpoint;

    fn t(s: &str) -> Term {
        s.parse().unwrap()
    }

    #[test]
    fn crown_cancellation() {
        let v = equal_in(
            &t("sigma_or(p, p) . dist(p, ~p, p) . delta_and(p, p)"),
            &t("id(p)"),
            Theory::PnNeg,
        )
        .unwrap();
        assert!(v.equal);
        assert_eq!(v.reason, Reason::Equal);
    }

    #[test]
    fn symmetry_is_not_identity() {
        let v = equal_in(&t("c_and(p, p)"), &t("id(p /\\ p)"), Theory::Ds).unwrap();
        assert!(!v.equal);
        assert_eq!(v.reason, Reason::GraphMismatch);
        assert_eq!(v.witness, Some(vec![Endpoint::s(0), Endpoint::t(1)]));
    }

    #[test]
    fn mix_commutes_with_symmetry() {
        let v = equal_in(
            &t("mix(q, p) . c_and(p, q)"),
            &t("c_or(q, p) . mix(p, q)"),
            Theory::Mds,
        )
        .unwrap();
        assert!(v.equal);
    }

    #[test]
    fn types_and_theories() {
        let v = equal_in(&t("id(p)"), &t("id(q)"), Theory::Ds).unwrap();
        assert_eq!(v.reason, Reason::TypeMismatch);
        assert!(v.witness.is_none());
        assert!(matches!(
            equal_in(&t("mix(p, q)"), &t("mix(p, q)"), Theory::Ds),
            Err(DecideError::First(SemanticsError::Theory(_)))
        ));
    }

    #[test]
    fn diagrams() {
        let arrows = vec![
            ("s".to_string(), t("sigma_or(p, p)")),
            ("d".to_string(), t("dist(p, ~p, p)")),
            ("e".to_string(), t("delta_and(p, p)")),
            ("i".to_string(), t("id(p)")),
        ];
        let path = |v: &[&str]| v.iter().map(|s| s.to_string()).collect::<Vec<_>>();
        let dia = Diagram { arrows: arrows.clone(), paths: [path(&["s", "d", "e"]), path(&["i"])] };
        assert!(commutes(&dia, Theory::PnNeg).unwrap().equal);
        let same = Diagram { arrows: arrows.clone(), paths: [path(&["s", "d"]), path(&["s", "d"])] };
        assert!(commutes(&same, Theory::PnNeg).unwrap().equal);
        let bad = Diagram { arrows: arrows.clone(), paths: [path(&["d", "e"]), path(&["i"])] };
        assert!(matches!(commutes(&bad, Theory::PnNeg), Err(DecideError::EndpointMismatch(..))));
        let broken = Diagram { arrows, paths: [path(&["e", "d"]), path(&["i"])] };
        assert!(matches!(commutes(&broken, Theory::PnNeg), Err(DecideError::NotComposable { .. })));
    }
}
