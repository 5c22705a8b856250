use std::cmp::Ordering;
use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::cyclotomic::Cyclotomic;
use super::laurent::{power_string, write_signed_terms, LaurentU};
use super::ratfunc::RatFunc;
use super::rational::Rational;
use crate::error::{Error, Result};
use crate::esystem::ESolution;

/// Monomial `z^z * x_1^x[0] * ... * x_{d-1}^x[d-2]`.
///
/// Ordered by total degree, then `z`, then the `x` exponents lexicographically.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct TraceMonomial {
    pub z: u32,
    pub x: Vec<u32>,
}

impl TraceMonomial {
    pub fn one(d: u32) -> Self {
        TraceMonomial { z: 0, x: vec![0; d.saturating_sub(1) as usize] }
    }

    pub fn degree(&self) -> u32 {
        self.z + self.x.iter().sum::<u32>()
    }

    fn mul(&self, other: &Self) -> Self {
        TraceMonomial { z: self.z + other.z, x: self.x.iter().zip(&other.x).map(|(a, b)| a + b).collect() }
    }

    fn render(&self, u_exp: i32) -> String {
        let mut parts = Vec::new();
        parts.extend(power_string("z", self.z as i64));
        parts.extend(power_string("u", u_exp as i64));
        for (i, &e) in self.x.iter().enumerate() {
            parts.extend(power_string(&format!("x{}", i + 1), e as i64));
        }
        parts.join("*")
    }
}

impl Ord for TraceMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then(self.z.cmp(&other.z))
            .then_with(|| self.x.cmp(&other.x))
    }
}

impl PartialOrd for TraceMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Polynomial in `z, x_1, ..., x_{d-1}` with Laurent-in-`u` coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct TracePolynomial {
    order: u32,
    terms: BTreeMap<TraceMonomial, LaurentU>,
}

impl TracePolynomial {
    pub fn zero(d: u32) -> Self {
        TracePolynomial { order: d, terms: BTreeMap::new() }
    }

    pub fn one(d: u32) -> Self {
        Self::constant(d, LaurentU::one())
    }

    pub fn constant(d: u32, c: LaurentU) -> Self {
        Self::monomial(TraceMonomial::one(d), c, d)
    }

    fn monomial(m: TraceMonomial, c: LaurentU, d: u32) -> Self {
        let mut p = Self::zero(d);
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    pub fn z(d: u32) -> Self {
        Self::one(d).mul_z(1)
    }

    /// `x_m` with the index read mod `d`; `x_0 = 1`.
    pub fn x(d: u32, m: i64) -> Self {
        Self::one(d).mul_x(m)
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&TraceMonomial, &LaurentU)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &TraceMonomial) -> LaurentU {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, m: TraceMonomial, c: &LaurentU) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            Entry::Occupied(mut o) => {
                o.get_mut().add_assign_ref(c);
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// `self += other * k`.
    pub fn add_scaled(&mut self, other: &TracePolynomial, k: &LaurentU) {
        self.check(other);
        for (m, c) in &other.terms {
            self.add_term(m.clone(), &(c * k));
        }
    }

    pub fn scale(&self, k: &LaurentU) -> Self {
        let mut out = Self::zero(self.order);
        out.add_scaled(self, k);
        out
    }

    pub fn mul_z(&self, k: u32) -> Self {
        let terms = self.terms.iter().map(|(m, c)| (TraceMonomial { z: m.z + k, x: m.x.clone() }, c.clone()));
        TracePolynomial { order: self.order, terms: terms.collect() }
    }

    pub fn mul_x(&self, m: i64) -> Self {
        let idx = m.rem_euclid(self.order as i64) as usize;
        if idx == 0 {
            return self.clone();
        }
        let terms = self.terms.iter().map(|(mono, c)| {
            let mut mono = mono.clone();
            mono.x[idx - 1] += 1;
            (mono, c.clone())
        });
        TracePolynomial { order: self.order, terms: terms.collect() }
    }

    /// Applies `f` to each `x` index (1..d-1), collecting into order `new_order`.
    /// Indices mapped to 0 become the constant 1.
    pub(crate) fn rename_x(&self, new_order: u32, f: impl Fn(u32) -> u32) -> Self {
        let mut out = Self::zero(new_order);
        for (m, c) in &self.terms {
            let mut nm = TraceMonomial::one(new_order);
            nm.z = m.z;
            for (i, &e) in m.x.iter().enumerate() {
                let j = f(i as u32 + 1);
                if j != 0 {
                    nm.x[j as usize - 1] += e;
                }
            }
            out.add_term(nm, c);
        }
        out
    }

    fn check(&self, other: &Self) {
        assert_eq!(self.order, other.order, "trace polynomial order mismatch");
    }
}

/// Replaces every `x_m` by the solution's value, giving a polynomial in `u, z`.
pub fn trace_poly_substitute(p: &TracePolynomial, sol: &ESolution) -> Result<RatFunc> {
    let d = sol.order();
    if p.order() != d {
        return Err(Error::OrderMismatch(p.order(), d));
    }
    let values = sol.values();
    let mut terms = Vec::new();
    for (m, c) in p.terms() {
        let mut xv = Cyclotomic::one(d);
        for (i, &e) in m.x.iter().enumerate() {
            if e > 0 {
                xv = &xv * &values[i + 1].pow(e);
            }
        }
        if xv.is_zero() {
            continue;
        }
        for (ue, r) in c.terms() {
            terms.push((ue, m.z, xv.scale(r)));
        }
    }
    Ok(RatFunc::from_laurent_terms(d, terms))
}

impl<'a> Add<&'a TracePolynomial> for &'a TracePolynomial {
    type Output = TracePolynomial;
    fn add(self, rhs: &TracePolynomial) -> TracePolynomial {
        let mut out = self.clone();
        out.add_scaled(rhs, &LaurentU::one());
        out
    }
}

impl<'a> Sub<&'a TracePolynomial> for &'a TracePolynomial {
    type Output = TracePolynomial;
    fn sub(self, rhs: &TracePolynomial) -> TracePolynomial {
        let mut out = self.clone();
        out.add_scaled(rhs, &LaurentU::constant(-Rational::from_integer(1.into())));
        out
    }
}

impl<'a> Mul<&'a TracePolynomial> for &'a TracePolynomial {
    type Output = TracePolynomial;
    fn mul(self, rhs: &TracePolynomial) -> TracePolynomial {
        self.check(rhs);
        let mut out = TracePolynomial::zero(self.order);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), &(c1 * c2));
            }
        }
        out
    }
}

impl Neg for &TracePolynomial {
    type Output = TracePolynomial;
    fn neg(self) -> TracePolynomial {
        TracePolynomial { order: self.order, terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }
}

impl fmt::Display for TracePolynomial {
    /// Fully expanded; monomials highest first, then descending powers of `u`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_signed_terms(
            f,
            self.terms
                .iter()
                .rev()
                .flat_map(|(m, c)| c.terms().rev().map(move |(e, r)| (r.clone(), m.render(e)))),
        )
    }
}
