//! Property checks shared by `yhlink verify` and the acceptance target.
//!
//! Every check is an exact equality. A suite collects the number of checks
//! run and a description of each failure.

use yhlink::adelic::{adelic_delta, rho, xi, DivisorChain};
use yhlink::braid::BraidWord;
use yhlink::esystem::{enumerate_subsets, lift_subset, solution_from_subset, verify_solution, ESolution};
use yhlink::exactnum::{LaurentU, RatFunc, TracePolynomial};
use yhlink::invariant::{
    delta_invariant, homflypt_skein_check, homflypt_specialize, lambda_param, mirror_substitute, normalization,
    skein_check, InvariantValue,
};
use yhlink::sample::{random_braid, random_element, random_subset, SampleRng};
use yhlink::trace::{markov_trace, specialized_trace};
use yhlink::yokonuma::{idempotent_e, power_formula, represent_braid, AlgebraElement};

use rand::Rng;

#[derive(Clone, Debug, Default)]
pub struct SuiteReport {
    pub checks: usize,
    pub failures: Vec<String>,
}

impl SuiteReport {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }

    fn check(&mut self, cond: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !cond {
            self.failures.push(what());
        }
    }

    fn check_result(&mut self, r: yhlink::Result<bool>, what: impl FnOnce() -> String) {
        match r {
            Ok(b) => self.check(b, what),
            Err(e) => {
                self.checks += 1;
                self.failures.push(format!("{}: {e}", what()));
            }
        }
    }

    pub fn merge(&mut self, other: SuiteReport) {
        self.checks += other.checks;
        self.failures.extend(other.failures);
    }
}

/// The five `(d, S)` pairs used throughout the invariant checks.
pub fn standard_pairs() -> Vec<ESolution> {
    [(1, vec![0]), (2, vec![0]), (2, vec![0, 1]), (3, vec![0, 1, 2]), (4, vec![0, 2])]
        .into_iter()
        .map(|(d, s)| solution_from_subset(d, &s).expect("valid subset"))
        .collect()
}

fn lu(terms: &[(i32, i64, i64)]) -> LaurentU {
    LaurentU::from_terms(terms)
}

/// Defining, quadratic, idempotent and cubic relations of `Y(d,n)`.
pub fn relations(d: u32, n: usize) -> SuiteReport {
    let mut r = SuiteReport::default();
    let g = |i| AlgebraElement::g(d, n, i).unwrap();
    let gi = |i| AlgebraElement::g_inv(d, n, i).unwrap();
    let t = |j, m| AlgebraElement::t(d, n, j, m).unwrap();
    let e = |i| idempotent_e(d, n, i).unwrap();
    let one = AlgebraElement::one(d, n);
    let u = lu(&[(1, 1, 1)]);
    let um1 = lu(&[(1, 1, 1), (0, -1, 1)]);
    let tag = |s: &str| format!("Y({d},{n}): {s}");

    for i in 1..n {
        for j in 1..n {
            let (gi_, gj) = (g(i), g(j));
            if i.abs_diff(j) > 1 {
                r.check(&gi_ * &gj == &gj * &gi_, || tag(&format!("g{i} g{j} = g{j} g{i}")));
            }
            if i.abs_diff(j) == 1 {
                r.check(&(&gi_ * &gj) * &gi_ == &(&gj * &gi_) * &gj, || tag(&format!("braid relation {i},{j}")));
                r.check(&(&e(j) * &gi_) * &gj == &(&gi_ * &gj) * &e(i), || {
                    tag(&format!("e{j} g{i} g{j} = g{i} g{j} e{i}"))
                });
            } else {
                r.check(&e(i) * &gj == &gj * &e(i), || tag(&format!("e{i} g{j} = g{j} e{i}")));
            }
            r.check(&e(i) * &e(j) == &e(j) * &e(i), || tag(&format!("e{i} e{j} = e{j} e{i}")));
        }
        let gg = &g(i) * &g(i);
        let quad = &(&one + &e(i).scale(&um1)) - &(&e(i) * &g(i)).scale(&um1);
        r.check(gg == quad, || tag(&format!("quadratic relation at {i}")));
        r.check(&e(i) * &e(i) == e(i), || tag(&format!("e{i} idempotent")));
        let g3 = &gg * &g(i);
        let cubic = &(&gg.scale(&(-&u)) + &g(i)) + &one.scale(&u);
        r.check(g3 == cubic, || tag(&format!("cubic relation at {i}")));
        let uinv = lu(&[(-1, 1, 1)]);
        let inv = &(&gg.scale(&uinv) + &g(i)) - &one.scale(&uinv);
        r.check(gi(i) == inv, || tag(&format!("inverse cubic relation at {i}")));
        r.check(&g(i) * &gi(i) == one, || tag(&format!("g{i} g{i}^-1 = 1")));
    }
    for j in 1..=n {
        r.check(t(j, 1).pow(d) == one, || tag(&format!("t{j}^d = 1")));
        for k in 1..=n {
            r.check(&t(j, 1) * &t(k, 1) == &t(k, 1) * &t(j, 1), || tag(&format!("t{j} t{k} = t{k} t{j}")));
        }
        for i in 1..n {
            let sj = if j == i { i + 1 } else if j == i + 1 { i } else { j };
            r.check(&t(j, 1) * &g(i) == &g(i) * &t(sj, 1), || tag(&format!("t{j} g{i} = g{i} t{sj}")));
        }
    }
    r
}

/// `power_formula(m)` against iterated multiplication.
pub fn powers(d: u32, n: usize, ms: std::ops::RangeInclusive<i64>) -> SuiteReport {
    let mut r = SuiteReport::default();
    for i in 1..n {
        for m in ms.clone() {
            let mut x = AlgebraElement::one(d, n);
            for _ in 0..m.unsigned_abs() {
                x = if m > 0 { x.mul_g(i) } else { x.mul_g_inv(i) };
            }
            let ok = power_formula(d, n, i, m).map(|p| p == x).unwrap_or(false);
            r.check(ok, || format!("Y({d},{n}): g{i}^{m}"));
        }
    }
    r
}

/// Unit, Markov, framing and cyclicity rules of the trace on random elements.
pub fn trace_axioms(d: u32, n: usize, pairs: usize, rng: &mut SampleRng) -> SuiteReport {
    let mut r = SuiteReport::default();
    r.check(markov_trace(&AlgebraElement::one(d, n)) == TracePolynomial::one(d), || format!("Y({d},{n}): tr(1)"));
    for k in 0..pairs {
        let a = random_element(rng, d, n, 3);
        let b = random_element(rng, d, n, 3);
        r.check(markov_trace(&(&a * &b)) == markov_trace(&(&b * &a)), || {
            format!("Y({d},{n}) pair {k}: tr(ab) = tr(ba)")
        });
        let ta = markov_trace(&a);
        let up = a.embed(n + 1).unwrap();
        r.check(markov_trace(&up.mul_g(n)) == ta.mul_z(1), || format!("Y({d},{n}) pair {k}: tr(a g_n)"));
        let m = rng.gen_range(0..d as i64);
        r.check(markov_trace(&up.mul_t(n + 1, m)) == ta.mul_x(m), || {
            format!("Y({d},{n}) pair {k}: tr(a t_(n+1)^{m})")
        });
    }
    r
}

/// All subset solutions verify, the printed `d = 3` system holds, `tr(e) = 1/|S|`.
pub fn esystem(max_exhaustive: u32, sampled: &[(u32, usize)], rng: &mut SampleRng) -> SuiteReport {
    let mut r = SuiteReport::default();
    let check_subset = |r: &mut SuiteReport, d: u32, s: &[u32]| match solution_from_subset(d, s) {
        Ok(sol) => {
            r.check(verify_solution(d, sol.values()), || format!("E-system for {sol}"));
            let d2 = d.max(2) as usize;
            let e = idempotent_e(d, d2, 1).unwrap();
            let ok = specialized_trace(&e, &sol).map(|v| v == RatFunc::from_rational(d, sol.zeta()));
            r.check(ok.unwrap_or(false), || format!("tr(e) = 1/|S| for {sol}"));
        }
        Err(e) => {
            r.checks += 1;
            r.failures.push(format!("subset {s:?} mod {d}: {e}"));
        }
    };
    for d in 1..=max_exhaustive {
        for s in enumerate_subsets(d) {
            check_subset(&mut r, d, &s);
        }
    }
    for &(d, count) in sampled {
        for _ in 0..count {
            let s = random_subset(rng, d);
            check_subset(&mut r, d, &s);
        }
    }
    for s in enumerate_subsets(3) {
        let sol = solution_from_subset(3, &s).unwrap();
        let (x1, x2) = (&sol.values()[1], &sol.values()[2]);
        let two = yhlink::exactnum::Cyclotomic::from_int(3, 2);
        r.check(x1 + &(x2 * x2) == &(&two * &(x1 * x1)) * x2, || format!("x1 + x2^2 = 2 x1^2 x2 for {sol}"));
        r.check(&(x1 * x1) + x2 == &(&two * x1) * &(x2 * x2), || format!("x1^2 + x2 = 2 x1 x2^2 for {sol}"));
    }
    r
}

/// `tr(a e_n) = tr(a) zeta` under the solution, for random `a` in `Y(d,n)`, `n` in `1..=3`.
pub fn factorization(sol: &ESolution, count: usize, rng: &mut SampleRng) -> SuiteReport {
    let mut r = SuiteReport::default();
    let d = sol.order();
    let zeta = RatFunc::from_rational(d, sol.zeta());
    for k in 0..count {
        let n = rng.gen_range(1..=3);
        let a = random_element(rng, d, n, 3);
        let ae = a.embed(n + 1).unwrap().multiply(&idempotent_e(d, n + 1, n).unwrap()).unwrap();
        let lhs = specialized_trace(&ae, sol);
        let rhs = specialized_trace(&a, sol).map(|t| &t * &zeta);
        r.check(matches!((lhs, rhs), (Ok(x), Ok(y)) if x == y), || format!("{sol} sample {k}: tr(a e_n) = tr(a) zeta"));
    }
    r
}

/// Unknot, trefoils and Hopf link against their closed forms.
pub fn closed_forms(sol: &ESolution) -> SuiteReport {
    let mut r = SuiteReport::default();
    let d = sol.order();
    let u = RatFunc::u(d);
    let z = RatFunc::z(d);
    let one = RatFunc::one(d);
    let zeta = RatFunc::from_rational(d, sol.zeta());
    let lambda = lambda_param(sol);
    let braid = |s: &str| yhlink::braid::parse_braid(s).unwrap();
    let delta = |s: &str| delta_invariant(sol, &braid(s));

    for w in ["1:", "1", "-1", "1 2", "1 -2 3"] {
        r.check(delta(w).map(|v| v.is_one()).unwrap_or(false), || format!("{sol}: unknot {w:?}"));
    }

    let u2u = &(&u * &u) - &u;
    let bracket = &(&(&u2u + &one) * &z) - &(&u2u * &zeta);
    let right = InvariantValue::from_ratfunc(sol.zeta(), &lambda.checked_div(&z).unwrap() * &bracket);
    r.check(delta("1 1 1").ok() == Some(right), || format!("{sol}: right trefoil"));

    let ui = u.inv().unwrap();
    let p = &(&(&ui.pow(3).unwrap() - &ui.pow(2).unwrap()) + &ui);
    let bracket = &(p * &z) - &(&(p - &one) * &zeta);
    let left = normalization(sol).mul_sqrt_lambda(-3).mul_ratfunc(&bracket);
    r.check(delta("-1 -1 -1").ok() == Some(left), || format!("{sol}: left trefoil"));

    let hopf = &one + &(&(&u - &one) * &(&zeta - &z));
    let expected = InvariantValue::from_ratfunc(sol.zeta(), hopf.checked_div(&z).unwrap()).mul_sqrt_lambda(1);
    r.check(delta("1 1").ok() == Some(expected), || format!("{sol}: Hopf link"));
    r
}

/// Random conjugations and stabilizations within `B_4`.
pub fn markov(sol: &ESolution, conjugations: usize, stabilizations: usize, rng: &mut SampleRng) -> SuiteReport {
    let mut r = SuiteReport::default();
    for k in 0..conjugations {
        let n = rng.gen_range(1..=4);
        let b = random_braid(rng, n, 8);
        let w = random_braid(rng, n, 4);
        let c = b.markov_conjugate(&w).unwrap();
        let same = delta_invariant(sol, &b).ok().zip(delta_invariant(sol, &c).ok()).is_some_and(|(x, y)| x == y);
        r.check(same, || format!("{sol} conjugation {k}: {b} by {w}"));
    }
    for k in 0..stabilizations {
        let n = rng.gen_range(1..=3);
        let b = random_braid(rng, n, 8);
        let sign = if rng.gen_bool(0.5) { 1 } else { -1 };
        let s = b.markov_stabilize(sign).unwrap();
        let same = delta_invariant(sol, &b).ok().zip(delta_invariant(sol, &s).ok()).is_some_and(|(x, y)| x == y);
        r.check(same, || format!("{sol} stabilization {k}: {b} to {s}"));
    }
    r
}

fn random_nonempty_braid(rng: &mut SampleRng, max_len: usize) -> BraidWord {
    loop {
        let n = rng.gen_range(2..=4);
        let b = random_braid(rng, n, max_len);
        if !b.is_empty() {
            return b;
        }
    }
}

/// The cubic skein relation at random letters.
pub fn skein(sol: &ESolution, count: usize, rng: &mut SampleRng) -> SuiteReport {
    let mut r = SuiteReport::default();
    for k in 0..count {
        let b = random_nonempty_braid(rng, 6);
        let i = rng.gen_range(0..b.len());
        r.check_result(skein_check(sol, &b, i), || format!("{sol} skein {k}: {b} at letter {i}"));
    }
    r
}

/// `d = 1`: the quadratic skein identity and the mirror substitution.
pub fn homflypt(count: usize, rng: &mut SampleRng) -> SuiteReport {
    let mut r = SuiteReport::default();
    for k in 0..count {
        let b = random_nonempty_braid(rng, 6);
        let i = rng.gen_range(0..b.len());
        r.check_result(homflypt_skein_check(&b, i), || format!("HOMFLYPT skein {k}: {b} at letter {i}"));
    }
    let mirror_ok = |b: &BraidWord| -> yhlink::Result<bool> {
        let v = homflypt_specialize(b)?;
        let m = homflypt_specialize(&mirror_braid(b))?;
        Ok(mirror_substitute(&v)? == m && mirror_substitute(&m)? == v)
    };
    for w in ["1 1 1", "-1 -1 -1"] {
        let b = yhlink::braid::parse_braid(w).unwrap();
        r.check_result(mirror_ok(&b), || format!("mirror of {w}"));
    }
    for k in 0..count / 4 {
        let b = random_nonempty_braid(rng, 5);
        r.check_result(mirror_ok(&b), || format!("mirror {k}: {b}"));
    }
    r
}

/// Switches every crossing.
pub fn mirror_braid(b: &BraidWord) -> BraidWord {
    BraidWord::new(b.strands(), b.letters().iter().map(|l| -l).collect()).expect("same letters")
}

/// The rho and xi squares along each step of a chain, plus `rho` functoriality.
pub fn adelic_diagrams(chain: &DivisorChain, count: usize, rng: &mut SampleRng) -> SuiteReport {
    let mut r = SuiteReport::default();
    let ds = chain.entries();
    for k in 0..count {
        let n = rng.gen_range(2..=3);
        let b = random_braid(rng, n, 6);
        for w in ds.windows(2) {
            let (d, d2) = (w[0], w[1]);
            let ok = rho(d, d2, &represent_braid(d2, &b).unwrap()).ok() == represent_braid(d, &b).ok();
            r.check(ok, || format!("chain {chain} braid {k}: rho({d},{d2}) of {b}"));
            let a = random_element(rng, d2, n, 3);
            let lhs = xi(d, d2, &markov_trace(&a)).unwrap();
            let rhs = markov_trace(&rho(d, d2, &a).unwrap());
            r.check(lhs == rhs, || format!("chain {chain} element {k}: xi({d},{d2}) tr = tr rho"));
        }
        if ds.len() >= 3 {
            let (d, d2) = (ds[0], ds[ds.len() - 1]);
            let mid = ds[1];
            let a = random_element(rng, d2, n, 3);
            let step = rho(d, mid, &rho(mid, d2, &a).unwrap()).unwrap();
            r.check(step == rho(d, d2, &a).unwrap(), || format!("chain {chain} element {k}: rho functoriality"));
            let p = markov_trace(&a);
            let step = xi(d, mid, &xi(mid, d2, &p).unwrap()).unwrap();
            r.check(step == xi(d, d2, &p).unwrap(), || format!("chain {chain} element {k}: xi functoriality"));
        }
    }
    r
}

/// `lift(d, d'', S) = lift(d', d'', lift(d, d', S))` for every chain `d | d' | d'' <= max`.
pub fn lift_transitivity(max: u32) -> SuiteReport {
    let mut r = SuiteReport::default();
    for d in 1..=max {
        for d1 in (d..=max).filter(|k| k % d == 0) {
            for d2 in (d1..=max).filter(|k| k % d1 == 0) {
                for s in enumerate_subsets(d) {
                    let direct = lift_subset(d, d2, &s).unwrap();
                    let via = lift_subset(d1, d2, &lift_subset(d, d1, &s).unwrap()).unwrap();
                    let card = direct.len() == s.len() * (d2 / d) as usize;
                    r.check(direct == via && card, || format!("lift {s:?} along {d} | {d1} | {d2}"));
                }
            }
        }
    }
    r
}

/// `adelic_delta` agrees on random braids and their conjugates and stabilizations.
pub fn adelic_markov(chain: &DivisorChain, count: usize, rng: &mut SampleRng) -> SuiteReport {
    let mut r = SuiteReport::default();
    let d1 = chain.first();
    for k in 0..count {
        let s = random_subset(rng, d1);
        let n = rng.gen_range(1..=3);
        let b = random_braid(rng, n, 6);
        let w = random_braid(rng, n, 3);
        let sign = if rng.gen_bool(0.5) { 1 } else { -1 };
        let base = adelic_delta(chain, &s, &b);
        let conj = adelic_delta(chain, &s, &b.markov_conjugate(&w).unwrap());
        let stab = adelic_delta(chain, &s, &b.markov_stabilize(sign).unwrap());
        let ok = matches!((&base, &conj, &stab), (Ok(x), Ok(y), Ok(z)) if x == y && x == z);
        r.check(ok, || format!("chain {chain} braid {k}: {b} with S = {s:?}"));
    }
    r
}
