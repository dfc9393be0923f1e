use proptest::prelude::*;

use pnet::checks::rng;
use pnet::formula::Language;
use pnet::random::{random_formula, random_rewrite, TermSampler};
use pnet::{equal_in, Connective, Formula, Term, Theory};

fn theory() -> impl Strategy<Value = Theory> {
    prop::sample::select(Theory::ALL.to_vec())
}

/// A term reached from `f` by up to `steps` axiom applications.
fn walk(f: &Term, theory: Theory, steps: usize, seed: u64) -> Term {
    let mut rng = rng(seed);
    let mut cur = f.clone();
    for _ in 0..steps {
        match random_rewrite(&mut rng, &cur, theory) {
            Some(step) => cur = step.result,
            None => break,
        }
    }
    cur
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn formulas_round_trip(seed in any::<u64>(), depth in 0usize..5) {
        let a = random_formula(&mut rng(seed), Language::Full, depth);
        let back: Formula = a.to_string().parse().unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn nnf_is_idempotent_and_keeps_letters(seed in any::<u64>(), depth in 0usize..5) {
        let a = random_formula(&mut rng(seed), Language::Full, depth);
        let n = a.nnf();
        prop_assert!(n.in_language(Language::Literal));
        prop_assert_eq!(n.nnf(), n.clone());
        prop_assert_eq!(n.letter_count(), a.letter_count());
    }

    #[test]
    fn terms_round_trip(seed in any::<u64>(), th in theory(), size in 1usize..10) {
        let f = TermSampler::new(&mut rng(seed), th).term(size);
        let back: Term = f.to_string().parse().unwrap();
        prop_assert_eq!(back, f);
    }

    #[test]
    fn equality_is_an_equivalence(seed in any::<u64>(), th in theory(), size in 1usize..8) {
        let f = TermSampler::new(&mut rng(seed), th).term(size);
        let g = walk(&f, th, 5, seed ^ 1);
        let h = walk(&g, th, 5, seed ^ 2);
        prop_assert!(equal_in(&f, &f, th).unwrap().equal);
        prop_assert!(equal_in(&f, &g, th).unwrap().equal);
        prop_assert!(equal_in(&g, &f, th).unwrap().equal);
        prop_assert!(equal_in(&f, &h, th).unwrap().equal);
    }

    #[test]
    fn equality_is_a_congruence(seed in any::<u64>(), th in theory(), size in 1usize..6) {
        let mut r = rng(seed);
        let f = TermSampler::new(&mut r, th).term(size);
        let mid = f.type_of().unwrap().target;
        let g = TermSampler::new(&mut r, th).term_from(&mid, size);
        let h = TermSampler::new(&mut r, th).term(size);
        let (f2, g2, h2) = (walk(&f, th, 6, seed ^ 3), walk(&g, th, 6, seed ^ 4), walk(&h, th, 6, seed ^ 5));
        let comp = equal_in(&Term::comp(g.clone(), f.clone()), &Term::comp(g2, f2.clone()), th).unwrap();
        prop_assert!(comp.equal);
        for c in [Connective::And, Connective::Or] {
            let v = equal_in(&Term::tensor(c, f.clone(), h.clone()), &Term::tensor(c, f2.clone(), h2.clone()), th)
                .unwrap();
            prop_assert!(v.equal);
        }
    }

    #[test]
    fn mix_free_verdicts_agree(seed in any::<u64>(), size in 1usize..6) {
        let mut r = rng(seed);
        let x = random_formula(&mut r, Language::Positive, 2);
        let xx = Formula::conj(x.clone(), x.clone());
        let h = TermSampler::new(&mut r, Theory::Ds).term_from(&xx, size);
        let swapped: Term = format!("{} . c_and({}, {})", h, x, x).parse().unwrap();
        let f2 = walk(&h, Theory::Ds, 4, seed ^ 6);
        let verdicts: Vec<_> = [Theory::Ds, Theory::Mds, Theory::PnNeg, Theory::MpnNeg]
            .into_iter()
            .map(|th| (equal_in(&swapped, &h, th).unwrap(), equal_in(&h, &f2, th).unwrap()))
            .collect();
        prop_assert!(!verdicts[0].0.equal);
        prop_assert!(verdicts[0].1.equal);
        for v in &verdicts[1..] {
            prop_assert_eq!(v, &verdicts[0]);
        }
    }
}
