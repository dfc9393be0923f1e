//! Acceptance criteria. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use pnet::brauer::{block_string, Endpoint as E};
use pnet::checks::{self, Report};
use pnet::decide::Reason;
use pnet::{compose, equal_in, g_arrow, ArrowType, SplitEquivalence, Term, Theory};
use pnet::{axiom_catalog, theorem_catalog};

struct Outcome {
    ok: bool,
    detail: String,
}

impl Outcome {
    fn exact(ok: bool, detail: impl Into<String>) -> Outcome {
        Outcome { ok, detail: detail.into() }
    }

    fn report(r: Report) -> Outcome {
        let detail = match r.failures.first() {
            None => format!("{} checks", r.checked),
            Some(first) => format!("{} of {} failed, first: {}", r.failures.len(), r.checked, first),
        };
        Outcome { ok: r.ok() && r.checked > 0, detail }
    }
}

fn t(s: &str) -> Term {
    s.parse().expect("criterion terms parse")
}

fn se(src: usize, tgt: usize, pairs: &[(E, E)]) -> SplitEquivalence {
    SplitEquivalence::from_pairs(src, tgt, pairs.iter().copied()).expect("valid pairs")
}

fn composition() -> Outcome {
    let r = se(
        3,
        9,
        &[
            (E::s(0), E::t(0)),
            (E::s(1), E::t(3)),
            (E::s(2), E::t(6)),
            (E::t(1), E::t(2)),
            (E::t(4), E::t(5)),
            (E::t(7), E::t(8)),
        ],
    );
    let p = se(
        9,
        1,
        &[(E::s(2), E::t(0)), (E::s(0), E::s(1)), (E::s(3), E::s(4)), (E::s(5), E::s(6)), (E::s(7), E::s(8))],
    );
    let got = compose(&p, &r).expect("sizes match");
    let want = se(3, 1, &[(E::s(0), E::t(0)), (E::s(1), E::s(2))]);
    Outcome::exact(got == want, format!("P*R = {}", got))
}

fn diagrams() -> Outcome {
    let cases = [
        (
            "c_and(p \\/ q, (q \\/ ~r) \\/ q)",
            se(5, 5, &[(E::s(0), E::t(3)), (E::s(1), E::t(4)), (E::s(2), E::t(0)), (E::s(3), E::t(1)), (E::s(4), E::t(2))]),
        ),
        (
            "delta_and(p \\/ q, (q \\/ ~r) \\/ q)",
            se(3, 7, &[(E::s(0), E::t(0)), (E::s(1), E::t(1)), (E::s(2), E::t(2)), (E::t(3), E::t(5)), (E::t(4), E::t(6))]),
        ),
        (
            "sigma_or(p \\/ q, (q \\/ ~r) \\/ q)",
            se(7, 3, &[(E::s(0), E::s(2)), (E::s(1), E::s(3)), (E::s(4), E::t(0)), (E::s(5), E::t(1)), (E::s(6), E::t(2))]),
        ),
    ];
    let mut slowest = Duration::ZERO;
    for (src, want) in cases {
        let start = Instant::now();
        let got = g_arrow(&t(src), Theory::PnNeg).expect("valid in PN¬");
        slowest = slowest.max(start.elapsed());
        if got != want {
            return Outcome::exact(false, format!("{}: got {}", src, got));
        }
    }
    Outcome::exact(slowest < Duration::from_millis(1), format!("3 diagrams, slowest {:?}", slowest))
}

fn eleven_factors() -> Outcome {
    let factors = [
        "sigma_or(q, p /\\ q)",
        "(id(q) /\\ sigma_or(p, ~q)) \\/ id(p /\\ q)",
        "(id(q) /\\ dist(p, ~p, ~q)) \\/ id(p /\\ q)",
        "b_and_l(q, p, ~p \\/ ~q) \\/ id(p /\\ q)",
        "(c_and(p, q) /\\ id(~p \\/ ~q)) \\/ id(p /\\ q)",
        "dist(p /\\ q, ~p \\/ ~q, p /\\ q)",
        "id(p /\\ q) /\\ (c_or(~p, ~q) \\/ id(p /\\ q))",
        "id(p /\\ q) /\\ b_or_r(~q, ~p, p /\\ q)",
        "id(p /\\ q) /\\ (id(~q) \\/ distR(~p, p, q))",
        "id(p /\\ q) /\\ (id(~q) \\/ sigma_and(p, q))",
        "delta_and(q, p /\\ q)",
    ];
    let f = Term::chain(factors.iter().map(|s| t(s)).collect());
    let pq: pnet::Formula = "p /\\ q".parse().expect("formula");
    let typed = f.type_of() == Ok(ArrowType { source: pq.clone(), target: pq });
    let identity = g_arrow(&f, Theory::Pn).ok() == Some(SplitEquivalence::identity(2));
    let equal = equal_in(&f, &t("id(p /\\ q)"), Theory::Pn).map(|v| v.equal).unwrap_or(false);
    Outcome::exact(
        typed && identity && equal,
        format!("type {} graph-identity {} equal {}", typed, identity, equal),
    )
}

fn schemas(theorems: bool) -> Outcome {
    let mut total = Report::default();
    for (i, th) in Theory::ALL.into_iter().enumerate() {
        let catalog = if theorems { theorem_catalog(th) } else { axiom_catalog(th) };
        total.merge(checks::schema_sweep(&catalog, th, 50, 1000 * (theorems as u64 + 1) + i as u64));
    }
    Outcome::report(total)
}

fn every_theory(f: impl Fn(Theory, u64) -> Report) -> Outcome {
    let mut total = Report::default();
    for (i, th) in Theory::ALL.into_iter().enumerate() {
        total.merge(f(th, i as u64));
    }
    Outcome::report(total)
}

fn lemmas() -> Outcome {
    let mut r = checks::lemma_fuzz(Theory::Ds, 500, 10, true, 10_001);
    r.merge(checks::lemma_fuzz(Theory::Mds, 500, 10, false, 10_002));
    Outcome::report(r)
}

fn negative_control() -> Outcome {
    match equal_in(&t("c_and(p, p)"), &t("id(p /\\ p)"), Theory::Ds) {
        Ok(v) => Outcome::exact(
            !v.equal && v.reason == Reason::GraphMismatch && v.witness == Some(vec![E::s(0), E::t(1)]),
            match &v.witness {
                Some(w) => format!("unequal, witness {}", block_string(w)),
                None => format!("{:?}", v.reason),
            },
        ),
        Err(e) => Outcome::exact(false, e.to_string()),
    }
}

fn main() -> ExitCode {
    type Criterion = (&'static str, Option<Duration>, fn() -> Outcome);
    let criteria: [Criterion; 11] = [
        ("composition example", Some(Duration::from_millis(1)), composition),
        ("generator graphs", None, diagrams),
        ("eleven-factor composite", None, eleven_factors),
        ("axiom soundness sweep", Some(Duration::from_secs(30)), || schemas(false)),
        ("theorem sweep", Some(Duration::from_secs(30)), || schemas(true)),
        ("Br category laws", Some(Duration::from_secs(5)), || Outcome::report(checks::brauer_laws(500, 12, 6_000))),
        ("translation F", Some(Duration::from_secs(30)), || {
            Outcome::report(checks::translation_suite(Theory::PnNeg, 200, 10, 7_000))
        }),
        ("development", Some(Duration::from_secs(20)), || {
            every_theory(|th, i| checks::development_suite(th, 300, 10, 8_000 + i))
        }),
        ("rewrite walks (6 × 34)", None, || every_theory(|th, i| checks::rewrite_walks(th, 34, 20, 9_000 + i))),
        ("linked-letter lemmas", None, lemmas),
        ("negative control", None, negative_control),
    ];
    let mut failed = 0;
    for (k, (name, limit, run)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let out = run();
        let took = start.elapsed();
        let in_time = limit.is_none_or(|l| took <= l);
        let ok = out.ok && in_time;
        if !ok {
            failed += 1;
        }
        let budget = limit.map(|l| format!(" (limit {:?})", l)).unwrap_or_default();
        println!(
            "{} {:>2} {}: {} [{:?}{}]",
            if ok { "PASS" } else { "FAIL" },
            k + 1,
            name,
            out.detail,
            took,
            budget
        );
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{} criteria failed", failed);
        ExitCode::FAILURE
    }
}
