//! Random formulas, terms, split equivalences and schema substitutions, for
//! property tests and fuzzing. Everything is driven by a caller-supplied
//! generator so runs are reproducible from a seed.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::arrows::{Generator, Term, TermPath, Theory};
use crate::brauer::{Endpoint, SplitEquivalence};
use crate::formula::{Connective, Formula, Language};
use crate::rewrite::{axiom_catalog, match_expr, EquationSchema, Substitution};

pub const LETTERS: [&str; 3] = ["p", "q", "r"];

pub fn random_letter<R: Rng>(rng: &mut R) -> Formula {
    Formula::atom(LETTERS[rng.gen_range(0..LETTERS.len())])
}

fn random_connective<R: Rng>(rng: &mut R) -> Connective {
    if rng.gen_bool(0.5) {
        Connective::And
    } else {
        Connective::Or
    }
}

/// A formula of `lang` of depth at most `depth` over p, q, r.
pub fn random_formula<R: Rng>(rng: &mut R, lang: Language, depth: usize) -> Formula {
    if depth == 0 || rng.gen_bool(0.3) {
        let a = random_letter(rng);
        return match lang {
            Language::Positive => a,
            _ if rng.gen_bool(0.3) => Formula::neg(a),
            _ => a,
        };
    }
    if lang == Language::Full && rng.gen_bool(0.2) {
        return Formula::neg(random_formula(rng, lang, depth - 1));
    }
    let c = random_connective(rng);
    Formula::binary(c, random_formula(rng, lang, depth - 1), random_formula(rng, lang, depth - 1))
}

/// A crown index admissible in `theory`.
fn random_crown<R: Rng>(rng: &mut R, theory: Theory) -> Formula {
    if theory.has_full_negation() {
        random_formula(rng, Language::Full, 1)
    } else {
        random_letter(rng)
    }
}

/// Random terms of one theory.
pub struct TermSampler<'a, R> {
    pub rng: &'a mut R,
    pub theory: Theory,
    /// Depth bound for generator indices.
    pub index_depth: usize,
}

impl<'a, R: Rng> TermSampler<'a, R> {
    pub fn new(rng: &'a mut R, theory: Theory) -> TermSampler<'a, R> {
        TermSampler { rng, theory, index_depth: 1 }
    }

    fn formula(&mut self) -> Formula {
        random_formula(self.rng, self.theory.language(), self.index_depth)
    }

    /// A generator of the theory with random indices.
    pub fn generator(&mut self) -> Generator {
        use Generator::*;
        let mut kinds: Vec<u8> = (0..8).collect();
        if self.theory.has_crowns() {
            kinds.extend(8..16);
        }
        if self.theory.has_full_negation() {
            kinds.extend(16..22);
        }
        if self.theory.has_mix() {
            kinds.push(22);
        }
        let k = *kinds.choose(self.rng).expect("nonempty");
        let c = random_connective(self.rng);
        let (a, b, x) = (self.formula(), self.formula(), self.formula());
        let crown = if (8..16).contains(&k) { random_crown(self.rng, self.theory) } else { a.clone() };
        match k {
            0 => Id(a),
            1 => AssocR(c, a, b, x),
            2 => AssocL(c, a, b, x),
            3 => SymConj(a, b),
            4 => SymDisj(a, b),
            5 => Dist(a, b, x),
            6 => DistR(a, b, x),
            7 => Id(Formula::binary(c, a, b)),
            8 => DeltaConj(crown, b),
            9 => SigmaDisj(crown, b),
            10 => SigmaConj(crown, b),
            11 => DeltaDisj(crown, b),
            12 => DeltaConjP(crown, b),
            13 => SigmaDisjP(crown, b),
            14 => SigmaConjP(crown, b),
            15 => DeltaDisjP(crown, b),
            16 => NegElim(a),
            17 => NegIntro(a),
            18 => DeMorganConjR(a, b),
            19 => DeMorganConjL(a, b),
            20 => DeMorganDisjR(a, b),
            21 => DeMorganDisjL(a, b),
            _ => Mix(a, b),
        }
    }

    /// Generators of the theory whose source is `src`.
    pub fn applicable(&mut self, src: &Formula) -> Vec<Generator> {
        use Generator::*;
        use Formula::{Binary, Neg};
        let t = self.theory;
        let mut v = vec![Id(src.clone())];
        let crown_ok = |b: &Formula| t.has_full_negation() || b.is_atom();
        if let Binary(c, a, bc) = src {
            if let Binary(d, b, x) = &**bc {
                if c == d {
                    v.push(AssocR(*c, (**a).clone(), (**b).clone(), (**x).clone()));
                }
            }
            if let Binary(d, a2, b) = &**a {
                if c == d {
                    v.push(AssocL(*c, (**a2).clone(), (**b).clone(), (**bc).clone()));
                }
            }
            let (l, r) = ((**a).clone(), (**bc).clone());
            match c {
                Connective::And => {
                    v.push(SymConj(l.clone(), r.clone()));
                    if let Binary(Connective::Or, b, x) = &r {
                        v.push(Dist(l.clone(), (**b).clone(), (**x).clone()));
                    }
                    if let Binary(Connective::Or, x, b) = &l {
                        v.push(DistR((**x).clone(), (**b).clone(), r.clone()));
                    }
                    if t.has_mix() {
                        v.push(Mix(l.clone(), r.clone()));
                    }
                    if t.has_full_negation() {
                        if let (Neg(x), Neg(y)) = (&l, &r) {
                            v.push(DeMorganDisjL((**x).clone(), (**y).clone()));
                        }
                    }
                }
                Connective::Or => {
                    v.push(SymDisj(r.clone(), l.clone()));
                    if let Binary(Connective::And, b, nb) = &l {
                        if **nb == Formula::neg((**b).clone()) && crown_ok(b) {
                            v.push(SigmaDisj((**b).clone(), r.clone()));
                        }
                        if **b == Formula::neg((**nb).clone()) && crown_ok(nb) {
                            v.push(SigmaDisjP((**nb).clone(), r.clone()));
                        }
                    }
                    if let Binary(Connective::And, b, nb) = &r {
                        if **nb == Formula::neg((**b).clone()) && crown_ok(b) {
                            v.push(DeltaDisj((**b).clone(), l.clone()));
                        }
                        if **b == Formula::neg((**nb).clone()) && crown_ok(nb) {
                            v.push(DeltaDisjP((**nb).clone(), l.clone()));
                        }
                    }
                    if t.has_full_negation() {
                        if let (Neg(x), Neg(y)) = (&l, &r) {
                            v.push(DeMorganConjL((**x).clone(), (**y).clone()));
                        }
                    }
                }
            }
        }
        if t.has_full_negation() {
            v.push(NegIntro(src.clone()));
            if let Neg(x) = src {
                match &**x {
                    Neg(a) => v.push(NegElim((**a).clone())),
                    Binary(Connective::And, a, b) => {
                        v.push(DeMorganConjR((**a).clone(), (**b).clone()))
                    }
                    Binary(Connective::Or, a, b) => {
                        v.push(DeMorganDisjR((**a).clone(), (**b).clone()))
                    }
                    _ => {}
                }
            }
        }
        if t.has_crowns() {
            for k in 0..4 {
                let b = random_crown(self.rng, t);
                let a = src.clone();
                v.push(match k {
                    0 => DeltaConj(b, a),
                    1 => SigmaConj(b, a),
                    2 => DeltaConjP(b, a),
                    _ => SigmaConjP(b, a),
                });
            }
        }
        v
    }

    /// A term with about `size` generators, starting anywhere.
    pub fn term(&mut self, size: usize) -> Term {
        let g = self.generator();
        if size <= 1 {
            return Term::Gen(g);
        }
        if self.rng.gen_bool(0.3) {
            let c = random_connective(self.rng);
            let k = self.rng.gen_range(1..size);
            return Term::tensor(c, self.term(k), self.term(size - k));
        }
        let target = g.type_of().target;
        Term::comp(self.term_from(&target, size - 1), Term::Gen(g))
    }

    /// A term with about `size` generators whose source is `src`.
    pub fn term_from(&mut self, src: &Formula, size: usize) -> Term {
        if size <= 1 {
            let options = self.applicable(src);
            return Term::Gen(options.choose(self.rng).expect("identity applies").clone());
        }
        if let Formula::Binary(c, a, b) = src {
            if self.rng.gen_bool(0.4) {
                let k = self.rng.gen_range(1..size);
                let (a, b) = ((**a).clone(), (**b).clone());
                return Term::tensor(*c, self.term_from(&a, k), self.term_from(&b, size - k));
            }
        }
        let k = self.rng.gen_range(1..size);
        let first = self.term_from(src, k);
        let mid = first.type_of().expect("well typed by construction").target;
        Term::comp(self.term_from(&mid, size - k), first)
    }
}

/// A uniformly paired Brauerian split equivalence. `src + tgt` must be even.
pub fn random_brauerian<R: Rng>(rng: &mut R, src: usize, tgt: usize) -> SplitEquivalence {
    assert!((src + tgt).is_multiple_of(2), "endpoints must pair up");
    let mut ends: Vec<Endpoint> = (0..src).map(Endpoint::s).chain((0..tgt).map(Endpoint::t)).collect();
    ends.shuffle(rng);
    let pairs: Vec<(Endpoint, Endpoint)> = ends.chunks(2).map(|c| (c[0], c[1])).collect();
    SplitEquivalence::from_pairs(src, tgt, pairs).expect("a perfect matching is Brauerian")
}

/// A substitution for `schema` in `theory`: formula metavariables get
/// formulas of depth at most `depth`, arrow metavariables get terms of
/// at most `size` generators fitting their declared types.
pub fn random_substitution<R: Rng>(
    rng: &mut R,
    schema: &EquationSchema,
    theory: Theory,
    depth: usize,
    size: usize,
) -> Substitution {
    let letters = schema.letter_vars(theory);
    let mut sub = Substitution::new();
    // Arrow metavariables come first so their sources fix the metavariables
    // they mention; targets then follow from the sampled terms.
    for v in &schema.arrow_vars {
        let src = match sub.apply_formula(&v.ty.source) {
            Ok(a) => a,
            Err(_) => {
                let a = random_formula(rng, theory.language(), depth);
                let mut tmp = sub.clone();
                if !crate::rewrite::pattern::match_formula(&v.ty.source, &a, &mut tmp) {
                    unreachable!("declared sources are single metavariables");
                }
                sub = tmp;
                a
            }
        };
        let n = rng.gen_range(1..=size.max(1));
        let f = TermSampler::new(rng, theory).term_from(&src, n);
        let tgt = f.type_of().expect("well typed by construction").target;
        let mut tmp = sub.clone();
        if crate::rewrite::pattern::match_formula(&v.ty.target, &tgt, &mut tmp) {
            sub = tmp;
        }
        sub.arrows.insert(v.name.clone(), f);
    }
    for name in schema.formula_vars() {
        if sub.formulas.contains_key(&name) {
            continue;
        }
        let a = if letters.contains(&name) {
            random_letter(rng)
        } else {
            random_formula(rng, theory.language(), depth)
        };
        sub.formulas.insert(name, a);
    }
    sub
}

/// One applied equation: the subterm at `path` was an instance of side
/// `from` of the schema and became the instance of side `to`.
#[derive(Clone, Debug)]
pub struct RewriteStep {
    pub schema: String,
    pub path: TermPath,
    pub from: usize,
    pub to: usize,
    pub result: Term,
}

/// Rewrites `term` once with a random axiom of `theory`, in a random
/// orientation, at a random position where it applies. The schema is
/// chosen uniformly among those matching somewhere, so equations that
/// match everywhere, like (cat 1), do not crowd out the others.
/// Metavariables only present on the new side become random letters.
pub fn random_rewrite<R: Rng>(rng: &mut R, term: &Term, theory: Theory) -> Option<RewriteStep> {
    let positions = term.positions();
    // A way to rewrite: position, side matched, side produced, bindings.
    type Way = (TermPath, usize, usize, Substitution);
    let mut by_schema: Vec<(&EquationSchema, Vec<Way>)> = Vec::new();
    for schema in axiom_catalog(theory) {
        let mut ways = Vec::new();
        for path in &positions {
            let sub = term.subterm(path).expect("listed position");
            for from in 0..schema.sides.len() {
                let mut s = Substitution::new();
                if !match_expr(&schema.sides[from], sub, &mut s) || !schema.complete(&mut s) {
                    continue;
                }
                for to in (0..schema.sides.len()).filter(|&to| to != from) {
                    ways.push((path.clone(), from, to, s.clone()));
                }
            }
        }
        if !ways.is_empty() {
            by_schema.push((schema, ways));
        }
    }
    by_schema.shuffle(rng);
    for (schema, mut ways) in by_schema {
        ways.shuffle(rng);
        for (path, from, to, mut s) in ways {
            for v in schema.formula_vars() {
                s.formulas.entry(v).or_insert_with(|| random_letter(rng));
            }
            let Ok(inst) = schema.instantiate(&s) else { continue };
            let new = inst.sides[to].clone();
            if !new.check_theory(theory) {
                continue;
            }
            let result = term.replace_at(&path, new).expect("listed position");
            return Some(RewriteStep { schema: schema.label(), path, from, to, result });
        }
    }
    None
}
