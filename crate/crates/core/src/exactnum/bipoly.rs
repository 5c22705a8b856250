use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::complex::Complex64;
use num::Signed;

use super::cyclotomic::Cyclotomic;
use super::laurent::power_string;
use super::upoly::UPoly;

/// Exponent pair of a monomial `u^u z^z`.
///
/// Ordered by total degree, then by the `z` exponent, then by the `u` exponent.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub struct UzExp {
    pub u: u32,
    pub z: u32,
}

impl UzExp {
    pub fn new(u: u32, z: u32) -> Self {
        UzExp { u, z }
    }

    fn divides(&self, other: &UzExp) -> bool {
        self.u <= other.u && self.z <= other.z
    }
}

impl Ord for UzExp {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.u + self.z, self.z, self.u).cmp(&(other.u + other.z, other.z, other.u))
    }
}

impl PartialOrd for UzExp {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Polynomial in `u, z` with coefficients in `Q(zeta_d)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BiPoly {
    order: u32,
    terms: BTreeMap<UzExp, Cyclotomic>,
}

impl BiPoly {
    pub fn zero(order: u32) -> Self {
        BiPoly { order, terms: BTreeMap::new() }
    }

    pub fn one(order: u32) -> Self {
        Self::constant(Cyclotomic::one(order))
    }

    pub fn constant(c: Cyclotomic) -> Self {
        Self::monomial(0, 0, c)
    }

    pub fn monomial(u: u32, z: u32, c: Cyclotomic) -> Self {
        let mut p = Self::zero(c.order());
        p.add_term(UzExp::new(u, z), &c);
        p
    }

    pub fn u(order: u32) -> Self {
        Self::monomial(1, 0, Cyclotomic::one(order))
    }

    pub fn z(order: u32) -> Self {
        Self::monomial(0, 1, Cyclotomic::one(order))
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&UzExp::default()).is_some_and(Cyclotomic::is_one)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms from the highest monomial down.
    pub fn terms(&self) -> impl Iterator<Item = (UzExp, &Cyclotomic)> {
        self.terms.iter().rev().map(|(&e, c)| (e, c))
    }

    pub fn coeff(&self, u: u32, z: u32) -> Cyclotomic {
        self.terms.get(&UzExp::new(u, z)).cloned().unwrap_or_else(|| Cyclotomic::zero(self.order))
    }

    pub fn leading(&self) -> Option<(UzExp, &Cyclotomic)> {
        self.terms.iter().next_back().map(|(&e, c)| (e, c))
    }

    pub fn add_term(&mut self, e: UzExp, c: &Cyclotomic) {
        assert_eq!(c.order(), self.order, "cyclotomic order mismatch");
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale(&self, k: &Cyclotomic) -> Self {
        if k.is_zero() {
            return Self::zero(self.order);
        }
        BiPoly { order: self.order, terms: self.terms.iter().map(|(&e, c)| (e, c * k)).collect() }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.order);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn deg_u(&self) -> u32 {
        self.terms.keys().map(|e| e.u).max().unwrap_or(0)
    }

    pub fn deg_z(&self) -> u32 {
        self.terms.keys().map(|e| e.z).max().unwrap_or(0)
    }

    /// Smallest `u` and `z` exponents occurring (the monomial content).
    pub fn min_exps(&self) -> UzExp {
        let u = self.terms.keys().map(|e| e.u).min().unwrap_or(0);
        let z = self.terms.keys().map(|e| e.z).min().unwrap_or(0);
        UzExp::new(u, z)
    }

    pub fn mul_monomial(&self, m: UzExp) -> Self {
        BiPoly {
            order: self.order,
            terms: self.terms.iter().map(|(e, c)| (UzExp::new(e.u + m.u, e.z + m.z), c.clone())).collect(),
        }
    }

    fn div_monomial(&self, m: UzExp) -> Self {
        BiPoly {
            order: self.order,
            terms: self.terms.iter().map(|(e, c)| (UzExp::new(e.u - m.u, e.z - m.z), c.clone())).collect(),
        }
    }

    /// Exact quotient `self / g`, or `None` if `g` does not divide `self`.
    pub fn exact_div(&self, g: &BiPoly) -> Option<BiPoly> {
        let (lm, lc) = g.leading()?;
        if g.terms.len() == 1 {
            if !self.terms.keys().all(|e| lm.divides(e)) {
                return None;
            }
            let inv = lc.inv().ok()?;
            return Some(self.div_monomial(lm).scale(&inv));
        }
        let inv = lc.inv().ok()?;
        let mut r = self.clone();
        let mut q = BiPoly::zero(self.order);
        while let Some((m, c)) = r.leading() {
            if !lm.divides(&m) {
                return None;
            }
            let t = UzExp::new(m.u - lm.u, m.z - lm.z);
            let k = c * &inv;
            for (&e, gc) in &g.terms {
                r.add_term(UzExp::new(e.u + t.u, e.z + t.z), &-(gc * &k));
            }
            q.add_term(t, &k);
        }
        Some(q)
    }

    /// Scales so that the leading coefficient is 1 (zero stays zero).
    pub fn monic(&self) -> Self {
        match self.leading() {
            Some((_, c)) if !c.is_one() => self.scale(&c.inv().expect("nonzero")),
            _ => self.clone(),
        }
    }

    /// Monic greatest common divisor.
    pub fn gcd(a: &BiPoly, b: &BiPoly) -> BiPoly {
        if a.is_zero() {
            return b.monic();
        }
        if b.is_zero() {
            return a.monic();
        }
        let (ma, mb) = (a.min_exps(), b.min_exps());
        let mono = UzExp::new(ma.u.min(mb.u), ma.z.min(mb.z));
        let (a1, b1) = (a.div_monomial(ma), b.div_monomial(mb));
        let one = Cyclotomic::one(a.order);
        if a1.terms.len() == 1 || b1.terms.len() == 1 {
            return BiPoly::monomial(mono.u, mono.z, one);
        }
        let g = from_rec(a.order, &rec_gcd(&to_rec(&a1), &to_rec(&b1)));
        g.mul_monomial(mono).monic()
    }

    pub fn eval(&self, u: Complex64, z: Complex64) -> Complex64 {
        self.terms
            .iter()
            .map(|(e, c)| c.to_complex() * u.powu(e.u) * z.powu(e.z))
            .sum()
    }

    /// Re-expresses the coefficients in `Q(zeta_{new_order})`.
    pub fn raise(&self, new_order: u32) -> crate::Result<Self> {
        let mut out = BiPoly::zero(new_order);
        for (&e, c) in &self.terms {
            out.add_term(e, &c.raise(new_order)?);
        }
        Ok(out)
    }
}

type RecPoly = Vec<UPoly>;

/// Coefficients in `z`, each a polynomial in `u`.
fn to_rec(p: &BiPoly) -> RecPoly {
    let order = p.order;
    let dz = p.deg_z() as usize;
    let du = p.deg_u() as usize;
    let mut dense = vec![vec![Cyclotomic::zero(order); du + 1]; dz + 1];
    for (e, c) in &p.terms {
        dense[e.z as usize][e.u as usize] = c.clone();
    }
    let mut rec: RecPoly = dense.into_iter().map(|c| UPoly::from_vec(order, c)).collect();
    trim_rec(&mut rec);
    rec
}

fn from_rec(order: u32, r: &[UPoly]) -> BiPoly {
    let mut p = BiPoly::zero(order);
    for (z, up) in r.iter().enumerate() {
        for (u, c) in up.c.iter().enumerate() {
            p.add_term(UzExp::new(u as u32, z as u32), c);
        }
    }
    p
}

fn trim_rec(r: &mut RecPoly) {
    while r.last().is_some_and(UPoly::is_zero) {
        r.pop();
    }
}

fn content(r: &[UPoly]) -> UPoly {
    let mut g = UPoly::zero(r[0].order);
    for c in r {
        g = UPoly::gcd(&g, c);
        if g.is_one() {
            break;
        }
    }
    g
}

fn primitive(r: &[UPoly], c: &UPoly) -> RecPoly {
    if c.is_one() {
        return r.to_vec();
    }
    r.iter().map(|x| x.exact_div(c)).collect()
}

fn prem(a: &[UPoly], b: &[UPoly]) -> RecPoly {
    let db = b.len() - 1;
    let lb = &b[db];
    let mut r = a.to_vec();
    while !r.is_empty() && r.len() > db {
        let lr = r.last().unwrap().clone();
        let shift = r.len() - 1 - db;
        for x in r.iter_mut() {
            *x = x.mul(lb);
        }
        for (i, bi) in b.iter().enumerate() {
            r[i + shift] = r[i + shift].sub(&lr.mul(bi));
        }
        trim_rec(&mut r);
    }
    r
}

/// Primitive polynomial remainder sequence over `Q(zeta)[u][z]`.
fn rec_gcd(a: &[UPoly], b: &[UPoly]) -> RecPoly {
    let order = a[0].order;
    let (ca, cb) = (content(a), content(b));
    let c = UPoly::gcd(&ca, &cb);
    let mut x = primitive(a, &ca);
    let mut y = primitive(b, &cb);
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    let g = loop {
        if y.is_empty() {
            break x;
        }
        if y.len() == 1 {
            break vec![UPoly::constant(Cyclotomic::one(order))];
        }
        let r = prem(&x, &y);
        x = std::mem::replace(&mut y, r);
        if !y.is_empty() {
            let cy = content(&y);
            y = primitive(&y, &cy);
        }
    };
    let cg = content(&g);
    primitive(&g, &cg).into_iter().map(|p| p.mul(&c)).collect()
}

impl<'a> Add<&'a BiPoly> for &'a BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, c);
        }
        out
    }
}

impl<'a> Sub<&'a BiPoly> for &'a BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, &-c);
        }
        out
    }
}

impl<'a> Mul<&'a BiPoly> for &'a BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &BiPoly) -> BiPoly {
        let mut out = BiPoly::zero(self.order);
        for (a, ca) in &self.terms {
            for (b, cb) in &rhs.terms {
                out.add_term(UzExp::new(a.u + b.u, a.z + b.z), &(ca * cb));
            }
        }
        out
    }
}

impl Neg for &BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        BiPoly { order: self.order, terms: self.terms.iter().map(|(&e, c)| (e, -c)).collect() }
    }
}

pub(crate) fn monomial_string(parts: &[(&str, i64)]) -> String {
    parts
        .iter()
        .filter_map(|&(v, e)| power_string(v, e))
        .collect::<Vec<_>>()
        .join("*")
}

/// Writes `sum c * mono` with rational coefficients folded into the sign.
pub(crate) fn write_cyclotomic_terms<I>(f: &mut fmt::Formatter<'_>, terms: I) -> fmt::Result
where
    I: IntoIterator<Item = (Cyclotomic, String)>,
{
    let mut first = true;
    for (c, mono) in terms {
        let (neg, body) = match c.as_rational() {
            Some(r) => {
                let mag = r.abs();
                let text = match (mono.is_empty(), num::One::is_one(&mag)) {
                    (true, _) => mag.to_string(),
                    (false, true) => mono.clone(),
                    (false, false) => format!("{mag}*{mono}"),
                };
                (r.is_negative(), text)
            }
            None if mono.is_empty() => (false, c.to_string()),
            None => (false, format!("{c}*{mono}")),
        };
        if first {
            if neg {
                write!(f, "-")?;
            }
        } else {
            write!(f, " {} ", if neg { '-' } else { '+' })?;
        }
        first = false;
        write!(f, "{body}")?;
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_cyclotomic_terms(
            f,
            self.terms().map(|(e, c)| (c.clone(), monomial_string(&[("z", e.z as i64), ("u", e.u as i64)]))),
        )
    }
}
