use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::complex::Complex64;
use num::{One, Signed, ToPrimitive, Zero};

use super::rational::Rational;

/// Laurent polynomial in `u` with rational coefficients. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Default, Debug)]
pub struct LaurentU {
    terms: BTreeMap<i32, Rational>,
}

impl LaurentU {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(r: Rational) -> Self {
        Self::monomial(0, r)
    }

    pub fn monomial(exp: i32, r: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !r.is_zero() {
            terms.insert(exp, r);
        }
        LaurentU { terms }
    }

    /// `u^exp`.
    pub fn u_pow(exp: i32) -> Self {
        Self::monomial(exp, Rational::one())
    }

    /// Builds from `(exponent, numerator, denominator)` triples.
    pub fn from_terms(terms: &[(i32, i64, i64)]) -> Self {
        let mut out = Self::zero();
        for &(e, n, d) in terms {
            out.add_term(e, &super::rat(n, d));
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(One::is_one)
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i32, &Rational)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn coeff(&self, exp: i32) -> Rational {
        self.terms.get(&exp).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn min_exp(&self) -> Option<i32> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i32> {
        self.terms.keys().next_back().copied()
    }

    pub fn add_term(&mut self, exp: i32, r: &Rational) {
        if r.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(r.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += r;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add_assign_ref(&mut self, other: &LaurentU) {
        for (&e, c) in &other.terms {
            self.add_term(e, c);
        }
    }

    /// `self += other * factor`.
    pub fn add_scaled(&mut self, other: &LaurentU, factor: &LaurentU) {
        for (&e1, c1) in &other.terms {
            for (&e2, c2) in &factor.terms {
                self.add_term(e1 + e2, &(c1 * c2));
            }
        }
    }

    pub fn scale(&self, r: &Rational) -> Self {
        if r.is_zero() {
            return Self::zero();
        }
        LaurentU { terms: self.terms.iter().map(|(&e, c)| (e, c * r)).collect() }
    }

    pub fn shift(&self, by: i32) -> Self {
        LaurentU { terms: self.terms.iter().map(|(&e, c)| (e + by, c.clone())).collect() }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Substitutes `u -> 1/u`.
    pub fn invert_variable(&self) -> Self {
        LaurentU { terms: self.terms.iter().map(|(&e, c)| (-e, c.clone())).collect() }
    }

    pub fn eval(&self, u: Complex64) -> Complex64 {
        self.terms
            .iter()
            .map(|(&e, c)| u.powi(e) * c.to_f64().unwrap_or(f64::NAN))
            .sum()
    }
}

impl<'a> Add<&'a LaurentU> for &'a LaurentU {
    type Output = LaurentU;
    fn add(self, rhs: &LaurentU) -> LaurentU {
        let mut out = self.clone();
        out.add_assign_ref(rhs);
        out
    }
}

impl<'a> Sub<&'a LaurentU> for &'a LaurentU {
    type Output = LaurentU;
    fn sub(self, rhs: &LaurentU) -> LaurentU {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, &-c);
        }
        out
    }
}

impl<'a> Mul<&'a LaurentU> for &'a LaurentU {
    type Output = LaurentU;
    fn mul(self, rhs: &LaurentU) -> LaurentU {
        let mut out = LaurentU::zero();
        out.add_scaled(self, rhs);
        out
    }
}

impl Neg for &LaurentU {
    type Output = LaurentU;
    fn neg(self) -> LaurentU {
        LaurentU { terms: self.terms.iter().map(|(&e, c)| (e, -c)).collect() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<LaurentU> for LaurentU {
            type Output = LaurentU;
            fn $m(self, rhs: LaurentU) -> LaurentU {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

pub(crate) fn write_signed_terms<I>(f: &mut fmt::Formatter<'_>, terms: I) -> fmt::Result
where
    I: IntoIterator<Item = (Rational, String)>,
{
    let mut first = true;
    for (c, mono) in terms {
        let neg = c.is_negative();
        let mag = c.abs();
        if first {
            if neg {
                write!(f, "-")?;
            }
        } else {
            write!(f, " {} ", if neg { '-' } else { '+' })?;
        }
        first = false;
        match (mono.is_empty(), mag.is_one()) {
            (true, _) => write!(f, "{mag}")?,
            (false, true) => write!(f, "{mono}")?,
            (false, false) => write!(f, "{mag}*{mono}")?,
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

pub(crate) fn power_string(var: &str, e: i64) -> Option<String> {
    match e {
        0 => None,
        1 => Some(var.to_string()),
        _ => Some(format!("{var}^{e}")),
    }
}

impl fmt::Display for LaurentU {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_signed_terms(
            f,
            self.terms
                .iter()
                .rev()
                .map(|(&e, c)| (c.clone(), power_string("u", e as i64).unwrap_or_default())),
        )
    }
}
