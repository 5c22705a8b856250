use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::sync::{Arc, Mutex, OnceLock};

use num::complex::Complex64;
use num::{BigInt, One, Signed, ToPrimitive, Zero};

use super::rational::Rational;
use crate::error::{Error, Result};

/// Integer coefficients of the `d`-th cyclotomic polynomial, lowest degree first.
///
/// Computed by exact division of `x^d - 1` by `Phi_e` for every proper divisor `e`.
pub fn cyclotomic_polynomial(d: u32) -> Vec<BigInt> {
    phi_rational(d)
        .iter()
        .map(|c| {
            debug_assert!(c.is_integer());
            c.to_integer()
        })
        .collect()
}

pub fn euler_phi(d: u32) -> usize {
    phi_rational(d).len() - 1
}

fn phi_rational(d: u32) -> Arc<Vec<Rational>> {
    assert!(d > 0, "cyclotomic order must be positive");
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<Vec<Rational>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(p) = cache.lock().unwrap().get(&d) {
        return p.clone();
    }
    let mut poly = vec![Rational::zero(); d as usize + 1];
    poly[0] = -Rational::one();
    poly[d as usize] = Rational::one();
    for e in 1..d {
        if d % e == 0 {
            let phi_e = phi_rational(e);
            let (q, r) = poly_divrem(&poly, &phi_e);
            debug_assert!(r.is_empty());
            poly = q;
        }
    }
    let p = Arc::new(poly);
    cache.lock().unwrap().insert(d, p.clone());
    p
}

fn trim(p: &mut Vec<Rational>) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

/// Dense division in `Q[x]`; both inputs low degree first, divisor nonzero.
fn poly_divrem(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let mut r = a.to_vec();
    trim(&mut r);
    let mut b = b.to_vec();
    trim(&mut b);
    let db = b.len() - 1;
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let lead_inv = b[db].recip();
    let mut q = vec![Rational::zero(); r.len() - db];
    for k in (0..q.len()).rev() {
        let c = &r[k + db] * &lead_inv;
        if c.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            r[k + j] -= &c * bj;
        }
        q[k] = c;
    }
    trim(&mut r);
    trim(&mut q);
    (q, r)
}

fn poly_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn poly_sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    trim(&mut out);
    out
}

/// An element of `Q(zeta_d)` in the power basis `1, zeta, ..., zeta^(phi(d)-1)`.
///
/// The coefficient vector always has exactly `phi(d)` entries, so equality of
/// values is equality of vectors.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Cyclotomic {
    order: u32,
    coeffs: Vec<Rational>,
}

/// `zeta_d^a`.
pub fn cyclotomic_root(d: u32, a: i64) -> Cyclotomic {
    Cyclotomic::root(d, a)
}

impl Cyclotomic {
    pub fn zero(order: u32) -> Self {
        Cyclotomic { order, coeffs: vec![Rational::zero(); euler_phi(order)] }
    }

    pub fn one(order: u32) -> Self {
        Self::from_rational(order, Rational::one())
    }

    pub fn from_rational(order: u32, r: Rational) -> Self {
        let mut c = Self::zero(order);
        c.coeffs[0] = r;
        c
    }

    pub fn from_int(order: u32, n: i64) -> Self {
        Self::from_rational(order, Rational::from_integer(n.into()))
    }

    pub fn root(order: u32, a: i64) -> Self {
        let a = a.rem_euclid(order as i64) as usize;
        let mut poly = vec![Rational::zero(); a + 1];
        poly[a] = Rational::one();
        Self::reduce(order, poly)
    }

    /// Builds from an arbitrary polynomial in `zeta`, reducing modulo `Phi_d`.
    pub fn from_poly(order: u32, poly: Vec<Rational>) -> Self {
        Self::reduce(order, poly)
    }

    fn reduce(order: u32, mut poly: Vec<Rational>) -> Self {
        let phi = phi_rational(order);
        let deg = phi.len() - 1;
        if poly.len() > deg {
            for k in (deg..poly.len()).rev() {
                if poly[k].is_zero() {
                    continue;
                }
                let c = std::mem::take(&mut poly[k]);
                for j in 0..deg {
                    if !phi[j].is_zero() {
                        poly[k - deg + j] -= &c * &phi[j];
                    }
                }
            }
        }
        poly.resize(deg, Rational::zero());
        Cyclotomic { order, coeffs: poly }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    /// The value as a rational, if it lies in `Q`.
    pub fn as_rational(&self) -> Option<&Rational> {
        self.coeffs[1..].iter().all(Zero::is_zero).then(|| &self.coeffs[0])
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Cyclotomic { order: self.order, coeffs: self.coeffs.iter().map(|c| c * r).collect() }
    }

    /// Embeds into `Q(zeta_{new_order})` via `zeta_d -> zeta_{d'}^(d'/d)`.
    pub fn raise(&self, new_order: u32) -> Result<Self> {
        if new_order % self.order != 0 {
            return Err(Error::NotDivisor(self.order, new_order));
        }
        let step = (new_order / self.order) as usize;
        let mut poly = vec![Rational::zero(); step * self.coeffs.len().saturating_sub(1) + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            poly[i * step] = c.clone();
        }
        Ok(Self::reduce(new_order, poly))
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some(r) = self.as_rational() {
            return Ok(Self::from_rational(self.order, r.recip()));
        }
        // Extended Euclid in Q[x] against Phi_d.
        let phi = phi_rational(self.order);
        let mut r0: Vec<Rational> = phi.to_vec();
        let mut r1 = self.coeffs.clone();
        trim(&mut r1);
        let mut s0: Vec<Rational> = Vec::new();
        let mut s1: Vec<Rational> = vec![Rational::one()];
        while !r1.is_empty() {
            let (q, r) = poly_divrem(&r0, &r1);
            let s = poly_sub(&s0, &poly_mul(&q, &s1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
        }
        debug_assert_eq!(r0.len(), 1, "Phi_d is irreducible");
        let k = r0[0].recip();
        Ok(Self::reduce(self.order, s0.into_iter().map(|c| c * &k).collect()))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        if self.order != other.order {
            return Err(Error::OrderMismatch(self.order, other.order));
        }
        Ok(self * &other.inv()?)
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.order);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn to_complex(&self) -> Complex64 {
        let step = std::f64::consts::TAU / self.order as f64;
        self.coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| Complex64::from_polar(c.to_f64().unwrap_or(f64::NAN), step * k as f64))
            .sum()
    }

    /// Coefficients as `"p/q"` strings, power basis order.
    pub fn coeff_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(|c| c.to_string()).collect()
    }

    fn check_order(&self, other: &Self) {
        assert_eq!(self.order, other.order, "cyclotomic order mismatch");
    }
}

impl<'a> Add<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: &Cyclotomic) -> Cyclotomic {
        self.check_order(rhs);
        Cyclotomic {
            order: self.order,
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect(),
        }
    }
}

impl<'a> Sub<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: &Cyclotomic) -> Cyclotomic {
        self.check_order(rhs);
        Cyclotomic {
            order: self.order,
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect(),
        }
    }
}

impl<'a> Mul<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: &Cyclotomic) -> Cyclotomic {
        self.check_order(rhs);
        if let Some(r) = rhs.as_rational() {
            return self.scale(r);
        }
        if let Some(r) = self.as_rational() {
            return rhs.scale(r);
        }
        Cyclotomic::reduce(self.order, poly_mul(&self.coeffs, &rhs.coeffs))
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic { order: self.order, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(mut self) -> Cyclotomic {
        for c in &mut self.coeffs {
            *c = -std::mem::take(c);
        }
        self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;
            fn $m(self, rhs: Cyclotomic) -> Cyclotomic {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;
            fn $m(self, rhs: &Cyclotomic) -> Cyclotomic {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl AddAssign<&Cyclotomic> for Cyclotomic {
    fn add_assign(&mut self, rhs: &Cyclotomic) {
        self.check_order(rhs);
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
    }
}

impl SubAssign<&Cyclotomic> for Cyclotomic {
    fn sub_assign(&mut self, rhs: &Cyclotomic) {
        self.check_order(rhs);
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a -= b;
        }
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(r) = self.as_rational() {
            return write!(f, "{r}");
        }
        let mut first = true;
        write!(f, "(")?;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let (sign, mag) = if c.is_negative() { ("-", -c) } else { ("+", c.clone()) };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let root = match k {
                0 => String::new(),
                1 => format!("zeta{}", self.order),
                _ => format!("zeta{}^{}", self.order, k),
            };
            match (k, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (_, true) => write!(f, "{root}")?,
                _ => write!(f, "{mag}*{root}")?,
            }
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn phi_small() {
        assert_eq!(cyclotomic_polynomial(1), ints(&[-1, 1]));
        assert_eq!(cyclotomic_polynomial(2), ints(&[1, 1]));
        assert_eq!(cyclotomic_polynomial(3), ints(&[1, 1, 1]));
        assert_eq!(cyclotomic_polynomial(4), ints(&[1, 0, 1]));
        assert_eq!(cyclotomic_polynomial(6), ints(&[1, -1, 1]));
        assert_eq!(cyclotomic_polynomial(12), ints(&[1, 0, -1, 0, 1]));
        assert_eq!(euler_phi(10), 4);
    }

    #[test]
    fn roots() {
        assert!(cyclotomic_root(1, 0).is_one());
        assert_eq!(cyclotomic_root(2, 1), Cyclotomic::from_int(2, -1));
        assert_eq!(cyclotomic_root(4, 2), Cyclotomic::from_int(4, -1));
        assert_eq!(cyclotomic_root(4, -1), -cyclotomic_root(4, 1));
    }

    #[test]
    fn arithmetic_examples() {
        let w = cyclotomic_root(3, 1);
        assert_eq!(&w + &w.pow(2), Cyclotomic::from_int(3, -1));
        assert!((cyclotomic_root(5, 1) * cyclotomic_root(5, 4)).is_one());
        assert_eq!(cyclotomic_root(2, 1).raise(6).unwrap(), cyclotomic_root(6, 3));
        assert!(cyclotomic_root(4, 1).raise(6).is_err());
    }

    #[test]
    fn inverse_and_division() {
        for d in 1..=12u32 {
            for a in 0..d as i64 {
                let x = &Cyclotomic::from_int(d, 2) + &cyclotomic_root(d, a);
                if x.is_zero() {
                    continue;
                }
                assert!((&x * &x.inv().unwrap()).is_one(), "d={d} a={a}");
            }
        }
        assert_eq!(Cyclotomic::zero(5).inv(), Err(Error::DivisionByZero));
        let half = Cyclotomic::from_rational(3, rat(1, 2));
        assert_eq!(Cyclotomic::one(3).checked_div(&half).unwrap(), Cyclotomic::from_int(3, 2));
    }

    #[test]
    fn roots_of_unity_and_phi_reconstruction() {
        for d in 1..=12u32 {
            for a in 0..d as i64 {
                assert!(cyclotomic_root(d, a).pow(d).is_one());
            }
            // prod over primitive a of (x - zeta^a), coefficients in Q(zeta_d)
            let mut prod = vec![Cyclotomic::one(d)];
            for a in 0..d as i64 {
                if num::integer::gcd(a, d as i64) != 1 {
                    continue;
                }
                let root = cyclotomic_root(d, a);
                let mut next = vec![Cyclotomic::zero(d); prod.len() + 1];
                for (i, c) in prod.iter().enumerate() {
                    next[i + 1] += c;
                    next[i] -= &(c * &root);
                }
                prod = next;
            }
            let phi = cyclotomic_polynomial(d);
            assert_eq!(prod.len(), phi.len());
            for (c, p) in prod.iter().zip(&phi) {
                assert_eq!(c, &Cyclotomic::from_rational(d, Rational::from_integer(p.clone())));
            }
        }
    }

    #[test]
    fn complex_value() {
        let z = cyclotomic_root(4, 1).to_complex();
        assert!((z - Complex64::new(0.0, 1.0)).norm() < 1e-12);
    }

    #[test]
    fn display() {
        assert_eq!(Cyclotomic::from_rational(3, rat(-1, 2)).to_string(), "-1/2");
        let x = &Cyclotomic::from_rational(3, rat(1, 2)) + &cyclotomic_root(3, 1).scale(&rat(1, 2));
        assert_eq!(x.to_string(), "(1/2*zeta3 + 1/2)");
        assert_eq!((-cyclotomic_root(4, 1)).to_string(), "(-zeta4)");
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn arb_cyc(d: u32) -> impl Strategy<Value = Cyclotomic> {
            proptest::collection::vec((-5i64..=5, 1i64..=4), euler_phi(d)).prop_map(move |v| {
                Cyclotomic::from_poly(d, v.into_iter().map(|(n, q)| rat(n, q)).collect())
            })
        }

        fn triple() -> impl Strategy<Value = (Cyclotomic, Cyclotomic, Cyclotomic)> {
            (1u32..=12).prop_flat_map(|d| (arb_cyc(d), arb_cyc(d), arb_cyc(d)))
        }

        proptest! {
            #[test]
            fn field_axioms((a, b, c) in triple()) {
                prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
                prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
                prop_assert_eq!(&a * &b, &b * &a);
                if !b.is_zero() {
                    prop_assert_eq!(&a.checked_div(&b).unwrap() * &b, a.clone());
                }
            }

            #[test]
            fn raise_is_homomorphism((a, b, _c) in triple(), k in 1u32..=3) {
                let d2 = a.order() * k;
                prop_assert_eq!((&a * &b).raise(d2).unwrap(), &a.raise(d2).unwrap() * &b.raise(d2).unwrap());
                prop_assert_eq!((&a + &b).raise(d2).unwrap(), &a.raise(d2).unwrap() + &b.raise(d2).unwrap());
            }
        }
    }
}
