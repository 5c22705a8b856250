use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::complex::Complex64;

use super::bipoly::{BiPoly, UzExp};
use super::cyclotomic::Cyclotomic;
use super::rational::Rational;
use crate::error::{Error, Result};

/// Reduced fraction of polynomials in `u, z` over `Q(zeta_d)`.
///
/// Numerator and denominator are coprime and the denominator's leading
/// coefficient (in the graded monomial order) is 1, so equal functions have
/// identical representations.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RatFunc {
    num: BiPoly,
    den: BiPoly,
}

impl RatFunc {
    pub fn new(num: BiPoly, den: BiPoly) -> Result<Self> {
        if num.order() != den.order() {
            return Err(Error::OrderMismatch(num.order(), den.order()));
        }
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalized(num, den))
    }

    fn normalized(num: BiPoly, den: BiPoly) -> Self {
        if num.is_zero() {
            let order = num.order();
            return RatFunc { num, den: BiPoly::one(order) };
        }
        let (mut num, mut den) = (num, den);
        if !den.is_one() {
            let g = BiPoly::gcd(&num, &den);
            if !g.is_one() {
                num = num.exact_div(&g).expect("gcd divides numerator");
                den = den.exact_div(&g).expect("gcd divides denominator");
            }
            let lc = den.leading().expect("nonzero denominator").1.clone();
            if !lc.is_one() {
                let inv = lc.inv().expect("nonzero");
                num = num.scale(&inv);
                den = den.scale(&inv);
            }
        }
        RatFunc { num, den }
    }

    pub fn from_poly(p: BiPoly) -> Self {
        let order = p.order();
        RatFunc { num: p, den: BiPoly::one(order) }
    }

    pub fn zero(order: u32) -> Self {
        Self::from_poly(BiPoly::zero(order))
    }

    pub fn one(order: u32) -> Self {
        Self::from_poly(BiPoly::one(order))
    }

    pub fn constant(c: Cyclotomic) -> Self {
        Self::from_poly(BiPoly::constant(c))
    }

    pub fn from_rational(order: u32, r: Rational) -> Self {
        Self::constant(Cyclotomic::from_rational(order, r))
    }

    pub fn from_int(order: u32, n: i64) -> Self {
        Self::constant(Cyclotomic::from_int(order, n))
    }

    pub fn u(order: u32) -> Self {
        Self::from_poly(BiPoly::u(order))
    }

    pub fn z(order: u32) -> Self {
        Self::from_poly(BiPoly::z(order))
    }

    /// Builds `sum c * u^a * z^b` where `a` may be negative.
    pub fn from_laurent_terms<I>(order: u32, terms: I) -> Self
    where
        I: IntoIterator<Item = (i32, u32, Cyclotomic)>,
    {
        let terms: Vec<_> = terms.into_iter().collect();
        let shift = terms.iter().map(|t| t.0).min().unwrap_or(0).min(0);
        let mut num = BiPoly::zero(order);
        for (a, b, c) in &terms {
            num.add_term(UzExp::new((a - shift) as u32, *b), c);
        }
        let den = BiPoly::monomial((-shift) as u32, 0, Cyclotomic::one(order));
        Self::normalized(num, den)
    }

    pub fn order(&self) -> u32 {
        self.num.order()
    }

    pub fn numer(&self) -> &BiPoly {
        &self.num
    }

    pub fn denom(&self) -> &BiPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalized(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        Ok(self * &other.inv()?)
    }

    pub fn pow(&self, e: i32) -> Result<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let e = e.unsigned_abs();
        Ok(RatFunc { num: base.num.pow(e), den: base.den.pow(e) }.renormalize_lc())
    }

    /// Powers of a reduced fraction stay reduced; only the leading coefficient can drift.
    fn renormalize_lc(self) -> Self {
        Self::normalized_lc_only(self.num, self.den)
    }

    fn normalized_lc_only(mut num: BiPoly, mut den: BiPoly) -> Self {
        let lc = den.leading().expect("nonzero").1.clone();
        if !lc.is_one() {
            let inv = lc.inv().expect("nonzero");
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        RatFunc { num, den }
    }

    pub fn scale(&self, k: &Cyclotomic) -> Self {
        if k.is_zero() {
            return Self::zero(self.order());
        }
        RatFunc { num: self.num.scale(k), den: self.den.clone() }
    }

    /// Equality by cross multiplication, independent of the canonical form.
    pub fn cross_eq(&self, other: &Self) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }

    /// Substitutes rational functions for `u` and `z`.
    pub fn compose(&self, u: &RatFunc, z: &RatFunc) -> Result<Self> {
        let n = compose_poly(&self.num, u, z);
        let d = compose_poly(&self.den, u, z);
        n.checked_div(&d)
    }

    pub fn eval(&self, u: Complex64, z: Complex64) -> Complex64 {
        self.num.eval(u, z) / self.den.eval(u, z)
    }

    pub fn raise(&self, new_order: u32) -> Result<Self> {
        Ok(RatFunc { num: self.num.raise(new_order)?, den: self.den.raise(new_order)? })
    }
}

fn compose_poly(p: &BiPoly, u: &RatFunc, z: &RatFunc) -> RatFunc {
    let order = p.order();
    let mut u_pows = vec![RatFunc::one(order)];
    let mut z_pows = vec![RatFunc::one(order)];
    for _ in 0..p.deg_u() {
        let next = u_pows.last().unwrap() * u;
        u_pows.push(next);
    }
    for _ in 0..p.deg_z() {
        let next = z_pows.last().unwrap() * z;
        z_pows.push(next);
    }
    let mut acc = RatFunc::zero(order);
    for (e, c) in p.terms() {
        let term = (&u_pows[e.u as usize] * &z_pows[e.z as usize]).scale(c);
        acc = &acc + &term;
    }
    acc
}

impl<'a> Add<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        if rhs.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return rhs.clone();
        }
        if self.den == rhs.den {
            return RatFunc::normalized(&self.num + &rhs.num, self.den.clone());
        }
        RatFunc::normalized(&(&self.num * &rhs.den) + &(&rhs.num * &self.den), &self.den * &rhs.den)
    }
}

impl<'a> Sub<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() || rhs.is_zero() {
            return RatFunc::zero(self.order());
        }
        // Cross-cancel so only coprime pieces are multiplied.
        let g1 = BiPoly::gcd(&self.num, &rhs.den);
        let g2 = BiPoly::gcd(&rhs.num, &self.den);
        let div = |p: &BiPoly, g: &BiPoly| if g.is_one() { p.clone() } else { p.exact_div(g).expect("divides") };
        let num = &div(&self.num, &g1) * &div(&rhs.num, &g2);
        let den = &div(&self.den, &g2) * &div(&rhs.den, &g1);
        RatFunc::normalized_lc_only(num, den)
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc { num: -&self.num, den: self.den.clone() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: RatFunc) -> RatFunc {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{cyclotomic_root, rat};

    #[test]
    fn reduces_and_normalizes() {
        let o = 1;
        let (u, z) = (RatFunc::u(o), RatFunc::z(o));
        let one = RatFunc::one(o);
        // (u^2 - 1) / (2u - 2) = (u + 1)/2
        let a = (&(&u * &u) - &one).checked_div(&(&u.scale(&Cyclotomic::from_int(o, 2)) - &RatFunc::from_int(o, 2))).unwrap();
        let expected = (&u + &one).scale(&Cyclotomic::from_rational(o, rat(1, 2)));
        assert_eq!(a, expected);
        assert!(a.is_polynomial());
        let b = z.checked_div(&(&u * &z)).unwrap();
        assert_eq!(b, u.inv().unwrap());
        assert_eq!(b.to_string(), "(1) / (u)");
    }

    #[test]
    fn laurent_terms() {
        let r = RatFunc::from_laurent_terms(1, vec![(-2, 0, Cyclotomic::one(1)), (1, 1, Cyclotomic::one(1))]);
        // u^-2 + u z = (1 + u^3 z) / u^2
        assert_eq!(r.denom(), &BiPoly::monomial(2, 0, Cyclotomic::one(1)));
    }

    #[test]
    fn division_by_zero() {
        assert_eq!(RatFunc::one(2).checked_div(&RatFunc::zero(2)), Err(Error::DivisionByZero));
        assert_eq!(RatFunc::new(BiPoly::one(3), BiPoly::zero(3)), Err(Error::DivisionByZero));
    }

    #[test]
    fn compose_inverts_u() {
        let o = 3;
        let u = RatFunc::u(o);
        let z = RatFunc::z(o);
        let w = RatFunc::constant(cyclotomic_root(3, 1));
        let f = (&(&u * &z) + &w).checked_div(&(&u - &z)).unwrap();
        let g = f.compose(&u.inv().unwrap(), &z).unwrap();
        let back = g.compose(&u.inv().unwrap(), &z).unwrap();
        assert_eq!(back, f);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn arb_poly(order: u32) -> impl Strategy<Value = BiPoly> {
            proptest::collection::vec((0u32..3, 0u32..3, -3i64..=3, 0i64..(order as i64)), 1..4).prop_map(
                move |terms| {
                    let mut p = BiPoly::zero(order);
                    for (a, b, c, k) in terms {
                        p.add_term(UzExp::new(a, b), &cyclotomic_root(order, k).scale(&rat(c, 1)));
                    }
                    p
                },
            )
        }

        fn arb_frac(order: u32) -> impl Strategy<Value = RatFunc> {
            (arb_poly(order), arb_poly(order))
                .prop_filter("nonzero denominator", |(_, d)| !d.is_zero())
                .prop_map(|(n, d)| RatFunc::new(n, d).unwrap())
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(64))]

            #[test]
            fn canonical_equality_matches_cross_multiplication(
                a in arb_frac(3), b in arb_frac(3), c in arb_frac(3)
            ) {
                let lhs = &(&a + &b) * &c;
                let rhs = &(&a * &c) + &(&b * &c);
                prop_assert!(lhs.cross_eq(&rhs));
                prop_assert_eq!(lhs, rhs);
                prop_assert_eq!(a == b, a.cross_eq(&b));
                if !b.is_zero() {
                    prop_assert_eq!(&a.checked_div(&b).unwrap() * &b, a.clone());
                }
            }
        }
    }
}
