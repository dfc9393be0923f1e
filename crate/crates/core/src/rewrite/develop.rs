//! Developed terms: a stack of headed factors over an identity-shaped one.
//!
//! A 1-term is built from identities with ∧ and ∨ only. A headed factor is
//! composition-free and contains exactly one generator that is not an
//! identity. A term f_n∘…∘f_1 is developed when f_1 is a 1-term and every
//! other factor is headed.

use crate::arrows::{Generator, Term, TypeError};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct DevelopOptions {
    /// Treat derived generators as heads instead of expanding them.
    pub keep_derived: bool,
}

/// The developed form of `f`, with derived generators expanded.
pub fn develop(f: &Term) -> Result<Term, TypeError> {
    develop_with(f, DevelopOptions::default())
}

pub fn develop_with(f: &Term, opts: DevelopOptions) -> Result<Term, TypeError> {
    let ty = f.type_of()?;
    let f = if opts.keep_derived { f.clone() } else { f.expand_derived() };
    let mut stack = headed(&f);
    // `headed` lists factors in order of application; the chain wants the
    // last-applied factor first.
    stack.reverse();
    stack.push(Term::id(ty.source));
    Ok(Term::chain(stack))
}

/// Headed factors of a term, first-applied first. Identity factors vanish.
fn headed(f: &Term) -> Vec<Term> {
    match f {
        Term::Gen(g) if g.is_identity() => Vec::new(),
        Term::Gen(_) => vec![f.clone()],
        Term::Comp(a, b) => {
            let mut v = headed(b);
            v.extend(headed(a));
            v
        }
        Term::Tensor(c, a, b) => {
            let ta = a.type_of().expect("checked by the caller");
            let tb = b.type_of().expect("checked by the caller");
            // f ξ g = (f ξ 1_E) ∘ (1_A ξ g): the right operand moves first.
            let mut v: Vec<Term> =
                headed(b).into_iter().map(|x| Term::tensor(*c, Term::id(ta.source.clone()), x)).collect();
            v.extend(headed(a).into_iter().map(|y| Term::tensor(*c, y, Term::id(tb.target.clone()))));
            v
        }
    }
}

/// The factors f_n, …, f_1 of a composition, in written order. Nested
/// compositions are flattened whatever their bracketing.
pub fn factors(f: &Term) -> Vec<&Term> {
    match f {
        Term::Comp(a, b) => {
            let mut v = factors(a);
            v.extend(factors(b));
            v
        }
        _ => vec![f],
    }
}

fn composition_free(f: &Term) -> bool {
    match f {
        Term::Gen(_) => true,
        Term::Comp(..) => false,
        Term::Tensor(_, a, b) => composition_free(a) && composition_free(b),
    }
}

pub fn is_one_term(f: &Term) -> bool {
    composition_free(f) && f.generators().iter().all(|g| g.is_identity())
}

/// The head of a headed factor.
pub fn head(f: &Term) -> Option<&Generator> {
    if !composition_free(f) {
        return None;
    }
    let mut heads = f.generators().into_iter().filter(|g| !g.is_identity());
    let h = heads.next()?;
    heads.next().is_none().then_some(h)
}

pub fn is_developed(f: &Term) -> bool {
    let fs = factors(f);
    let (first, rest) = fs.split_last().expect("at least one factor");
    is_one_term(first) && rest.iter().all(|g| head(g).is_some())
}
