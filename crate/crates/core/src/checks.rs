//! Randomized property sweeps. Each returns a report listing every failure
//! so callers can print or assert on them.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arrows::{ArrowType, Term, Theory};
use crate::brauer::{compose, SplitEquivalence};
use crate::random::{random_brauerian, random_rewrite, random_substitution, TermSampler};
use crate::rewrite::{develop, is_developed, EquationSchema};
use crate::semantics::{conjunction_to_disjunction, disjunction_to_conjunction, graph};
use crate::translate::{f_arrow, f_object, iso_i, iso_i_inv};

#[derive(Clone, Debug, Default)]
pub struct Report {
    pub checked: usize,
    pub failures: Vec<String>,
}

impl Report {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }

    fn fail(&mut self, msg: String) {
        self.failures.push(msg);
    }

    pub fn merge(&mut self, other: Report) {
        self.checked += other.checked;
        self.failures.extend(other.failures);
    }
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Instantiates each schema `per_schema` times in `theory` and compares
/// the graphs of all sides. Formula metavariables get depth at most 3,
/// arrow metavariables at most 6 generators.
pub fn schema_sweep(
    schemas: &[&EquationSchema],
    theory: Theory,
    per_schema: usize,
    seed: u64,
) -> Report {
    let mut rng = rng(seed);
    let mut report = Report::default();
    for schema in schemas {
        for _ in 0..per_schema {
            report.checked += 1;
            let sub = random_substitution(&mut rng, schema, theory, 3, 6);
            let inst = match schema.instantiate(&sub) {
                Ok(i) => i,
                Err(e) => {
                    report.fail(format!("{} in {}: {}", schema.label(), theory, e));
                    continue;
                }
            };
            if let Some(side) = inst.sides.iter().find(|s| !s.check_theory(theory)) {
                report.fail(format!("{} in {}: side {} is outside the theory", schema.label(), theory, side));
                continue;
            }
            let g0 = graph(&inst.sides[0]);
            for side in &inst.sides[1..] {
                if graph(side) != g0 {
                    report.fail(format!(
                        "{} in {}: graphs differ for {} and {}",
                        schema.label(),
                        theory,
                        inst.sides[0],
                        side
                    ));
                }
            }
        }
    }
    report
}

/// Associativity, both identity laws and closure on random composable
/// Brauerian triples with sizes at most `max`.
pub fn brauer_laws(n: usize, max: usize, seed: u64) -> Report {
    let mut rng = rng(seed);
    let mut report = Report::default();
    let size = |rng: &mut ChaCha8Rng, parity: usize| loop {
        let k = rng.gen_range(0..=max);
        if k % 2 == parity {
            return k;
        }
    };
    for _ in 0..n {
        report.checked += 1;
        let a = rng.gen_range(0..=max);
        let b = size(&mut rng, a % 2);
        let c = size(&mut rng, b % 2);
        let d = size(&mut rng, c % 2);
        let r = random_brauerian(&mut rng, a, b);
        let p = random_brauerian(&mut rng, b, c);
        let q = random_brauerian(&mut rng, c, d);
        let pr = compose(&p, &r).expect("sizes match");
        let qp = compose(&q, &p).expect("sizes match");
        let left = compose(&q, &pr).expect("sizes match");
        let right = compose(&qp, &r).expect("sizes match");
        if left != right {
            report.fail(format!("associativity fails for {} ; {} ; {}", r, p, q));
        }
        if compose(&r, &SplitEquivalence::identity(a)).as_ref() != Ok(&r)
            || compose(&SplitEquivalence::identity(b), &r).as_ref() != Ok(&r)
        {
            report.fail(format!("identity law fails for {}", r));
        }
        if !pr.is_brauerian() || !left.is_brauerian() {
            report.fail(format!("composite of {} and {} is not Brauerian", r, p));
        }
    }
    report
}

/// The translation F on random terms of `theory`: literal-language
/// membership, type, graph preservation, and the graph of i⁻¹∘Ff∘i.
pub fn translation_suite(theory: Theory, n: usize, max: usize, seed: u64) -> Report {
    let mut rng = rng(seed);
    let mut report = Report::default();
    for _ in 0..n {
        report.checked += 1;
        let size = rng.gen_range(1..=max);
        let f = TermSampler::new(&mut rng, theory).term(size);
        let ty = f.type_of().expect("sampled terms are well typed");
        let ff = match f_arrow(&f) {
            Ok(t) => t,
            Err(e) => {
                report.fail(format!("F fails on {}: {}", f, e));
                continue;
            }
        };
        let target = if theory.has_mix() { Theory::Mpn } else { Theory::Pn };
        if let Some(v) = ff.theory_violation(target) {
            report.fail(format!("F{} is not in {}: {}", f, target, v));
            continue;
        }
        let expected = ArrowType { source: f_object(&ty.source), target: f_object(&ty.target) };
        match ff.type_of() {
            Ok(t) if t == expected => {}
            Ok(t) => {
                report.fail(format!("F{} has type {}, expected {}", f, t, expected));
                continue;
            }
            Err(e) => {
                report.fail(format!("F{} is ill typed: {}", f, e));
                continue;
            }
        }
        let gf = graph(&f);
        if graph(&ff) != gf {
            report.fail(format!("G(F{}) differs from G({})", f, f));
        }
        let round = Term::chain(vec![iso_i_inv(&ty.target), ff, iso_i(&ty.source)]);
        match round.type_of() {
            Ok(t) if t == ty => {
                if graph(&round) != gf {
                    report.fail(format!("G(i⁻¹∘F{}∘i) differs from G({})", f, f));
                }
            }
            _ => report.fail(format!("i⁻¹∘F{}∘i is ill typed", f)),
        }
    }
    report
}

/// Development on random terms of `theory`.
pub fn development_suite(theory: Theory, n: usize, max: usize, seed: u64) -> Report {
    let mut rng = rng(seed);
    let mut report = Report::default();
    for _ in 0..n {
        report.checked += 1;
        let size = rng.gen_range(1..=max);
        let f = TermSampler::new(&mut rng, theory).term(size);
        let d = develop(&f).expect("sampled terms are well typed");
        if !is_developed(&d) {
            report.fail(format!("develop({}) = {} is not developed", f, d));
        }
        if d.type_of() != f.type_of() || graph(&d) != graph(&f) {
            report.fail(format!("develop({}) changes the arrow", f));
        }
    }
    report
}

/// Random walks of axiom applications, checking the graph after each step.
pub fn rewrite_walks(theory: Theory, walks: usize, steps: usize, seed: u64) -> Report {
    let mut rng = rng(seed);
    let mut report = Report::default();
    for _ in 0..walks {
        let size = rng.gen_range(1..=6);
        let start = TermSampler::new(&mut rng, theory).term(size);
        let (ty, g) = (start.type_of().expect("well typed"), graph(&start));
        let mut cur = start.clone();
        let len = rng.gen_range(1..=steps);
        for _ in 0..len {
            let Some(step) = random_rewrite(&mut rng, &cur, theory) else { break };
            report.checked += 1;
            if step.result.type_of().as_ref() != Ok(&ty) || graph(&step.result) != g {
                report.fail(format!(
                    "{} at {} (side {} to {}) changed the graph of {}",
                    step.schema, step.path, step.from, step.to, cur
                ));
                break;
            }
            cur = step.result;
        }
    }
    report
}

/// No linked letters go from a disjunction to a conjunction, and, when
/// `both` is set, none from a conjunction to a disjunction.
pub fn lemma_fuzz(theory: Theory, n: usize, max: usize, both: bool, seed: u64) -> Report {
    let mut rng = rng(seed);
    let mut report = Report::default();
    for _ in 0..n {
        report.checked += 1;
        let size = rng.gen_range(1..=max);
        let f = TermSampler::new(&mut rng, theory).term(size);
        let v = disjunction_to_conjunction(&f, theory).expect("sampled terms are valid");
        if !v.is_empty() {
            report.fail(format!("{}: disjunction linked to conjunction {:?}", f, v));
        }
        if both {
            let v = conjunction_to_disjunction(&f, theory).expect("sampled terms are valid");
            if !v.is_empty() {
                report.fail(format!("{}: conjunction linked to disjunction {:?}", f, v));
            }
        }
    }
    report
}
