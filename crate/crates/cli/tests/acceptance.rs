//! Acceptance run: one PASS/FAIL line per criterion, non-zero exit on failure.

mod support;

use std::time::Instant;

use yhlink::adelic::DivisorChain;
use yhlink::sample::rng;
use yhlink_cli::suites::{self, SuiteReport};

fn criterion(k: usize, title: &str, f: impl FnOnce() -> SuiteReport) -> bool {
    let start = Instant::now();
    let r = f();
    let secs = start.elapsed().as_secs_f64();
    let status = if r.ok() { "PASS" } else { "FAIL" };
    println!("{status} criterion {k}: {title} ({} checks, {secs:.1}s)", r.checks);
    for f in r.failures.iter().take(10) {
        println!("    {f}");
    }
    r.ok()
}

fn main() {
    let mut ok = true;

    ok &= criterion(1, "relation suite", || {
        let mut r = SuiteReport::default();
        for d in 1..=4 {
            for n in 2..=4 {
                r.merge(suites::relations(d, n));
            }
        }
        r
    });

    ok &= criterion(2, "power formula", || {
        let mut r = SuiteReport::default();
        for d in 1..=3 {
            for n in 2..=3 {
                r.merge(suites::powers(d, n, -6..=6));
            }
        }
        r
    });

    ok &= criterion(3, "trace axioms", || {
        let mut g = rng(3);
        let mut r = SuiteReport::default();
        for d in 1..=3 {
            for n in 1..=3 {
                r.merge(suites::trace_axioms(d, n, 200, &mut g));
            }
        }
        r
    });

    ok &= criterion(4, "E-system", || suites::esystem(8, &[(9, 100), (10, 100)], &mut rng(4)));

    ok &= criterion(5, "factorization", || {
        let mut g = rng(5);
        let mut r = SuiteReport::default();
        for d in 1..=4 {
            for s in yhlink::esystem::enumerate_subsets(d) {
                let sol = yhlink::esystem::solution_from_subset(d, &s).unwrap();
                r.merge(suites::factorization(&sol, 100, &mut g));
            }
        }
        r
    });

    ok &= criterion(6, "closed forms for unknot, trefoils and Hopf link", || {
        let mut r = SuiteReport::default();
        for sol in suites::standard_pairs() {
            r.merge(suites::closed_forms(&sol));
        }
        r
    });

    ok &= criterion(7, "Markov invariance", || {
        let mut g = rng(7);
        let mut r = SuiteReport::default();
        for sol in suites::standard_pairs() {
            r.merge(suites::markov(&sol, 300, 300, &mut g));
        }
        r
    });

    ok &= criterion(8, "skein relation", || {
        let mut g = rng(8);
        let mut r = SuiteReport::default();
        for sol in suites::standard_pairs() {
            r.merge(suites::skein(&sol, 100, &mut g));
        }
        r
    });

    ok &= criterion(9, "d = 1 HOMFLYPT skein and mirror", || suites::homflypt(100, &mut rng(9)));

    ok &= criterion(10, "adelic coherence", || {
        let mut g = rng(10);
        let mut r = SuiteReport::default();
        for c in ["1,2", "2,4", "3,6", "2,6,12"] {
            let chain: DivisorChain = c.parse().unwrap();
            r.merge(suites::adelic_diagrams(&chain, 50, &mut g));
        }
        r.merge(suites::lift_transitivity(12));
        r.merge(suites::adelic_markov(&"2,4".parse().unwrap(), 50, &mut g));
        r
    });

    ok &= criterion(11, "CLI determinism against golden files", || {
        let failures = support::check_golden();
        SuiteReport { checks: support::CASES.len(), failures }
    });

    if !ok {
        std::process::exit(1);
    }
}
