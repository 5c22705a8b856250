//! The Markov trace `tr_d` on the tower `Y(d,1) < Y(d,2) < ...`.
//!
//! A basis word is reduced strand by strand. If `w` fixes `n` the last strand
//! contributes `x_{a_n}`. Otherwise `g_w = g_v g_{n-1} ... g_k` with `v` in
//! `S_{n-1}`, so `t^a g_w = x g_{n-1} y` with `x, y` in `Y(d,n-1)`, and
//! `tr(x g_{n-1} y) = z tr(y x)`.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Mutex, OnceLock};

use crate::braid::BraidWord;
use crate::error::Result;
use crate::esystem::ESolution;
use crate::exactnum::{trace_poly_substitute, RatFunc, TracePolynomial};
use crate::yokonuma::{represent_braid, AlgebraElement, BasisWord};

type Memo = Mutex<HashMap<(u32, BasisWord), TracePolynomial>>;

fn memo() -> &'static Memo {
    static MEMO: OnceLock<Memo> = OnceLock::new();
    MEMO.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Trace of one basis word of `Y(d,n)`.
pub fn trace_word(d: u32, w: &BasisWord) -> TracePolynomial {
    let key = (d, w.clone());
    if let Some(p) = memo().lock().unwrap().get(&key) {
        return p.clone();
    }
    let p = compute_word(d, w);
    memo().lock().unwrap().insert(key, p.clone());
    p
}

fn compute_word(d: u32, w: &BasisWord) -> TracePolynomial {
    let n = w.n();
    let f = w.framings();
    let p = w.perm();
    if n == 1 {
        return TracePolynomial::x(d, f[0] as i64);
    }
    let last = (n - 1) as u8;
    if p[n - 1] == last {
        let stripped = BasisWord::from_raw(f[..n - 1].to_vec(), p[..n - 1].to_vec());
        return trace_word(d, &stripped).mul_x(f[n - 1] as i64);
    }
    let k = p.iter().position(|&v| v == last).expect("permutation") + 1;
    let mut v = p.to_vec();
    v.remove(k - 1);
    let x = BasisWord::from_raw(f[..n - 1].to_vec(), v);
    let mut y = AlgebraElement::one(d, n - 1).mul_t(n - 1, f[n - 1] as i64);
    for i in (k..n - 1).rev() {
        y = y.mul_g(i);
    }
    markov_trace(&y.mul_word(&x)).mul_z(1)
}

/// `tr_d(a)` as a polynomial in `z, x_1..x_{d-1}` over Laurent polynomials in `u`.
pub fn markov_trace(a: &AlgebraElement) -> TracePolynomial {
    let mut acc = TracePolynomial::zero(a.d());
    for (w, c) in a.terms() {
        acc.add_scaled(&trace_word(a.d(), w), c);
    }
    acc
}

/// `tr_d(a)` with the `x_m` replaced by the values of an E-solution.
pub fn specialized_trace(a: &AlgebraElement, sol: &ESolution) -> Result<RatFunc> {
    trace_poly_substitute(&markov_trace(a), sol)
}

/// Result of [`trace_of_braid`]: generic, or specialized at an E-solution.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum TraceValue {
    Generic(TracePolynomial),
    Specialized(RatFunc),
}

impl fmt::Display for TraceValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TraceValue::Generic(p) => write!(f, "{p}"),
            TraceValue::Specialized(r) => write!(f, "{r}"),
        }
    }
}

pub fn trace_of_braid(d: u32, b: &BraidWord, sol: Option<&ESolution>) -> Result<TraceValue> {
    let tr = markov_trace(&represent_braid(d, b)?);
    match sol {
        None => Ok(TraceValue::Generic(tr)),
        Some(s) => Ok(TraceValue::Specialized(trace_poly_substitute(&tr, s)?)),
    }
}
