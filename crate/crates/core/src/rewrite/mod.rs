//! Equation schemas of the theories, their instantiation, and the
//! development normal form.

mod catalog;
pub mod develop;
pub mod pattern;

use std::fmt;
use std::sync::OnceLock;

use crate::arrows::{ArrowType, Term, Theory};
use crate::formula::Formula;
use crate::syntax::{parse_expr, parse_formula, Expr};

pub use develop::{develop, develop_with, factors, head, is_developed, DevelopOptions};
pub use pattern::{match_expr, SchemaError, Substitution};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SchemaKind {
    /// Assumed in the theory.
    Axiom,
    /// Derivable from the axioms.
    Theorem,
}

/// A declared arrow metavariable such as `f: A -> D`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArrowVar {
    pub name: String,
    pub ty: ArrowType,
}

/// An equation between two or more patterns. Most schemas have two sides;
/// (cat 1) is stated as a chain of three.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquationSchema {
    pub name: String,
    /// Distinguishes schemas sharing a name, such as the two orientations
    /// of (b∧b∧). Zero when the name is unique.
    pub variant: u8,
    pub kind: SchemaKind,
    pub sides: Vec<Expr>,
    pub arrow_vars: Vec<ArrowVar>,
    pub theories: Vec<Theory>,
}

/// A closed instance of a schema.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    pub sides: Vec<Term>,
}

impl Instance {
    pub fn lhs(&self) -> &Term {
        &self.sides[0]
    }

    pub fn rhs(&self) -> &Term {
        self.sides.last().expect("at least two sides")
    }
}

impl EquationSchema {
    pub fn label(&self) -> String {
        if self.variant == 0 {
            self.name.clone()
        } else {
            format!("{} #{}", self.name, self.variant)
        }
    }

    pub fn lhs(&self) -> &Expr {
        &self.sides[0]
    }

    pub fn rhs(&self) -> &Expr {
        self.sides.last().expect("at least two sides")
    }

    pub fn arrow_var(&self, name: &str) -> Option<&ArrowVar> {
        self.arrow_vars.iter().find(|v| v.name == name)
    }

    /// Formula metavariables, from the sides and the declared arrow types.
    pub fn formula_vars(&self) -> Vec<String> {
        let mut out = Vec::new();
        for s in &self.sides {
            pattern::formula_vars(s, &mut out);
        }
        for v in &self.arrow_vars {
            for a in [&v.ty.source, &v.ty.target] {
                for l in a.letters() {
                    if !out.iter().any(|n| n == l.name()) {
                        out.push(l.name().to_string());
                    }
                }
            }
        }
        out
    }

    /// Metavariables that must be instantiated by letters in `theory`.
    /// Lowercase ones are letters everywhere; in the theories whose crowns
    /// are letters, so is every metavariable used as a crown or negated.
    pub fn letter_vars(&self, theory: Theory) -> Vec<String> {
        let mut restricted = Vec::new();
        if theory.has_crowns() && !theory.has_full_negation() {
            for s in &self.sides {
                pattern::negated_vars(s, &mut restricted);
            }
        }
        self.formula_vars()
            .into_iter()
            .filter(|v| v.starts_with(|c: char| c.is_ascii_lowercase()) || restricted.contains(v))
            .collect()
    }

    pub fn applies_to(&self, theory: Theory) -> bool {
        self.theories.contains(&theory)
    }

    /// Closed sides for `sub`, after checking the declared arrow types and
    /// that all sides have one type.
    pub fn instantiate(&self, sub: &Substitution) -> Result<Instance, SchemaError> {
        for v in &self.arrow_vars {
            let f = sub.arrows.get(&v.name).ok_or_else(|| SchemaError::Incomplete(v.name.clone()))?;
            let found = f.type_of()?;
            let expected = ArrowType {
                source: sub.apply_formula(&v.ty.source)?,
                target: sub.apply_formula(&v.ty.target)?,
            };
            if found != expected {
                return Err(SchemaError::SideCondition { var: v.name.clone(), expected, found });
            }
        }
        let sides = self
            .sides
            .iter()
            .map(|s| pattern::instantiate_expr(s, sub))
            .collect::<Result<Vec<_>, _>>()?;
        let first = sides[0].type_of()?;
        for s in &sides[1..] {
            let ty = s.type_of()?;
            if ty != first {
                return Err(SchemaError::SidesDiffer(first, ty));
            }
        }
        Ok(Instance { sides })
    }

    /// Completes a partial substitution from the declared types of the arrow
    /// metavariables it assigns. Fails if an image has a type of the wrong
    /// shape.
    pub fn complete(&self, sub: &mut Substitution) -> bool {
        for v in &self.arrow_vars {
            let Some(f) = sub.arrows.get(&v.name) else { continue };
            let Ok(ty) = f.type_of() else { return false };
            if !pattern::match_formula(&v.ty.source, &ty.source, sub)
                || !pattern::match_formula(&v.ty.target, &ty.target, sub)
            {
                return false;
            }
        }
        true
    }

    /// Type of the sides with metavariables read as letters.
    pub fn symbolic_type(&self) -> Result<ArrowType, SchemaError> {
        let vars = |n: &str| self.arrow_var(n).map(|v| v.ty.clone());
        let first = pattern::symbolic_type(&self.sides[0], &vars)?;
        for s in &self.sides[1..] {
            let ty = pattern::symbolic_type(s, &vars)?;
            if ty != first {
                return Err(SchemaError::SidesDiffer(first, ty));
            }
        }
        Ok(first)
    }

    pub fn pretty(&self) -> String {
        let sides: Vec<String> = self.sides.iter().map(pattern::expr_pretty).collect();
        sides.join(" = ")
    }
}

impl fmt::Display for EquationSchema {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sides: Vec<String> = self.sides.iter().map(pattern::expr_to_string).collect();
        write!(f, "{}", sides.join(" = "))
    }
}

fn build(e: catalog::Entry) -> EquationSchema {
    let malformed = |reason: String| -> ! { panic!("schema {}: {}", e.name, reason) };
    let sides = e
        .text
        .split(" = ")
        .map(|s| parse_expr(s).unwrap_or_else(|err| malformed(err.to_string())))
        .collect::<Vec<_>>();
    let arrow_vars = e
        .vars
        .split(';')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|decl| {
            let (name, ty) = decl.split_once(':').unwrap_or_else(|| malformed(decl.to_string()));
            let (src, tgt) = ty.split_once("->").unwrap_or_else(|| malformed(decl.to_string()));
            let parse = |s: &str| -> Formula {
                parse_formula(s.trim()).unwrap_or_else(|err| malformed(err.to_string()))
            };
            ArrowVar {
                name: name.trim().to_string(),
                ty: ArrowType { source: parse(src), target: parse(tgt) },
            }
        })
        .collect();
    let schema = EquationSchema {
        name: e.name.clone(),
        variant: e.variant,
        kind: e.kind,
        sides,
        arrow_vars,
        theories: e.family.theories(),
    };
    if let Err(err) = schema.symbolic_type() {
        malformed(err.to_string());
    }
    schema
}

/// Every schema, axioms first. Built and type-checked once.
pub fn all_schemas() -> &'static [EquationSchema] {
    static ALL: OnceLock<Vec<EquationSchema>> = OnceLock::new();
    ALL.get_or_init(|| catalog::entries().into_iter().map(build).collect())
}

/// The defining equations of `theory`.
pub fn axiom_catalog(theory: Theory) -> Vec<&'static EquationSchema> {
    all_schemas()
        .iter()
        .filter(|s| s.kind == SchemaKind::Axiom && s.applies_to(theory))
        .collect()
}

/// Derived equations that hold in `theory`.
pub fn theorem_catalog(theory: Theory) -> Vec<&'static EquationSchema> {
    all_schemas()
        .iter()
        .filter(|s| s.kind == SchemaKind::Theorem && s.applies_to(theory))
        .collect()
}

pub fn find_schema(label: &str) -> Option<&'static EquationSchema> {
    all_schemas().iter().find(|s| s.label() == label)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semantics::graph;

    fn f(s: &str) -> Formula {
        s.parse().unwrap()
    }
    fn t(s: &str) -> Term {
        s.parse().unwrap()
    }

    #[test]
    fn catalog_sizes() {
        assert_eq!(axiom_catalog(Theory::Ds).len(), 25);
        assert_eq!(axiom_catalog(Theory::Mds).len(), 29);
        assert_eq!(axiom_catalog(Theory::Pn).len(), 33);
        assert_eq!(axiom_catalog(Theory::PnNeg).len(), 33);
        assert_eq!(axiom_catalog(Theory::MpnNeg).len(), 37);
        assert!(theorem_catalog(Theory::Ds).len() == 3);
    }

    #[test]
    fn labels_are_unique() {
        let mut labels: Vec<String> = all_schemas().iter().map(|s| s.label()).collect();
        let n = labels.len();
        labels.sort();
        labels.dedup();
        assert_eq!(labels.len(), n);
    }

    #[test]
    fn pretty_listings() {
        let d = find_schema("(d∧)").unwrap();
        assert_eq!(
            d.pretty(),
            "(b∧←_{A,B,C} ∨ 1_D) ∘ d_{A∧B,C,D} = d_{A,B∧C,D} ∘ (1_A ∧ d_{B,C,D}) ∘ b∧←_{A,B,C∨D}"
        );
        let cm = find_schema("(cm)").unwrap();
        assert_eq!(cm.pretty(), "m_{B,A} ∘ c∧_{A,B} = c∨_{B,A} ∘ m_{A,B}");
        assert!(axiom_catalog(Theory::MpnNeg).contains(&cm));
        assert!(!axiom_catalog(Theory::PnNeg).contains(&cm));
    }

    #[test]
    fn instances() {
        let s = find_schema("(Σ∨Δ∧)").unwrap();
        let i = s.instantiate(&Substitution::new().formula("A", f("p"))).unwrap();
        assert_eq!(i.lhs(), &t("sigma_or(p, p) . dist(p, ~p, p) . delta_and(p, p)"));
        assert_eq!(i.rhs(), &t("id(p)"));

        let s = find_schema("(c∧c∧)").unwrap();
        let i = s
            .instantiate(&Substitution::new().formula("A", f("p")).formula("B", f("q")))
            .unwrap();
        assert_eq!(i.lhs(), &t("c_and(q, p) . c_and(p, q)"));
        assert_eq!(i.rhs(), &t("id(p /\\ q)"));

        let s = find_schema("(cat 1)").unwrap();
        let sub = Substitution::new()
            .formula("A", f("p /\\ (q \\/ r)"))
            .formula("B", f("(p /\\ q) \\/ r"))
            .arrow("f", t("dist(p, q, r)"));
        let i = s.instantiate(&sub).unwrap();
        assert_eq!(i.sides[0], t("dist(p, q, r) . id(p /\\ (q \\/ r))"));
        assert_eq!(i.sides[1], t("id((p /\\ q) \\/ r) . dist(p, q, r)"));
        assert_eq!(i.sides[2], t("dist(p, q, r)"));
    }

    #[test]
    fn instantiation_errors() {
        let s = find_schema("(c∧c∧)").unwrap();
        assert_eq!(
            s.instantiate(&Substitution::new().formula("A", f("p"))),
            Err(SchemaError::Incomplete("B".into()))
        );
        let s = find_schema("(cat 1)").unwrap();
        let sub = Substitution::new()
            .formula("A", f("p"))
            .formula("B", f("q"))
            .arrow("f", t("id(p)"));
        assert!(matches!(s.instantiate(&sub), Err(SchemaError::SideCondition { .. })));
    }

    #[test]
    fn completion_from_arrow_types() {
        let s = find_schema("(c∧ nat)").unwrap();
        let mut sub = Substitution::new().arrow("f", t("c_and(p, q)")).arrow("g", t("id(r)"));
        assert!(s.complete(&mut sub));
        let i = s.instantiate(&sub).unwrap();
        assert_eq!(graph(i.lhs()), graph(i.rhs()));
    }

    #[test]
    fn letter_restrictions() {
        let s = find_schema("(Σ∨Δ∧)").unwrap();
        assert_eq!(s.letter_vars(Theory::Pn), vec!["A".to_string()]);
        assert!(s.letter_vars(Theory::PnNeg).is_empty());
        let s = find_schema("(1∧Δ∧)").unwrap();
        assert_eq!(s.letter_vars(Theory::PnNeg), vec!["p".to_string()]);
    }

    #[test]
    fn theorem_examples() {
        let s = find_schema("(d^R nat)").unwrap();
        assert_eq!(s.pretty(), "(h ∨ (g ∧ f)) ∘ dᴿ_{C,B,A} = dᴿ_{F,E,D} ∘ ((h ∨ g) ∧ f)");
        let s = find_schema("(Δ∨Σ∧)").unwrap();
        assert_eq!(s.pretty(), "Δ∨_{A,¬A} ∘ dᴿ_{¬A,A,¬A} ∘ Σ∧_{A,¬A} = 1_{¬A}");
    }
}
