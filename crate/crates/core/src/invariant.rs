//! The invariant `Delta(d,S)(closure of b) = D^(n-1) sqrt(lambda)^e(b) tr_d(b)`.
//!
//! `lambda = (z - (1-u) zeta)/(u z)` and `D = (1 - lambda u)/(sqrt(lambda) (1-u) zeta)`.
//! `sqrt(lambda)` stays formal: values carry a parity bit `h` and a rational
//! body, with whole powers of `lambda` folded into the body.

use std::fmt;

use num::complex::Complex64;
use serde::Serialize;

use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::esystem::{solution_from_subset, ESolution};
use crate::exactnum::{rational_string, BiPoly, RatFunc, Rational};
use crate::trace::specialized_trace;
use crate::yokonuma::represent_braid;

/// `body * sqrt(lambda)^half` with `half` in `{0, 1}`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct InvariantValue {
    order: u32,
    zeta: Rational,
    half: u8,
    body: RatFunc,
}

/// `lambda = (z - (1-u) zeta)/(u z)` over `Q(zeta_d)`.
pub fn lambda_for(order: u32, zeta: &Rational) -> RatFunc {
    let u = RatFunc::u(order);
    let z = RatFunc::z(order);
    let one = RatFunc::one(order);
    let zeta = RatFunc::from_rational(order, zeta.clone());
    let num = &z - &(&(&one - &u) * &zeta);
    num.checked_div(&(&u * &z)).expect("u z is nonzero")
}

pub fn lambda_param(sol: &ESolution) -> RatFunc {
    lambda_for(sol.order(), &sol.zeta())
}

/// The normalization factor `D`.
pub fn normalization(sol: &ESolution) -> InvariantValue {
    let d = sol.order();
    let lambda = lambda_param(sol);
    let u = RatFunc::u(d);
    let one = RatFunc::one(d);
    let zeta = RatFunc::from_rational(d, sol.zeta());
    let num = &one - &(&lambda * &u);
    // 1/sqrt(lambda) = sqrt(lambda)/lambda
    let den = &(&(&one - &u) * &zeta) * &lambda;
    let body = num.checked_div(&den).expect("nonzero");
    InvariantValue { order: d, zeta: sol.zeta(), half: 1, body }
}

impl InvariantValue {
    pub fn from_ratfunc(zeta: Rational, body: RatFunc) -> Self {
        InvariantValue { order: body.order(), zeta, half: 0, body }
    }

    pub fn one(order: u32, zeta: Rational) -> Self {
        Self::from_ratfunc(zeta, RatFunc::one(order))
    }

    pub fn sqrt_lambda(order: u32, zeta: Rational) -> Self {
        InvariantValue { order, zeta, half: 1, body: RatFunc::one(order) }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn zeta(&self) -> &Rational {
        &self.zeta
    }

    pub fn half(&self) -> u8 {
        self.half
    }

    pub fn body(&self) -> &RatFunc {
        &self.body
    }

    pub fn lambda(&self) -> RatFunc {
        lambda_for(self.order, &self.zeta)
    }

    pub fn is_zero(&self) -> bool {
        self.body.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.half == 0 && self.body.is_one()
    }

    fn compatible(&self, other: &Self) -> Result<()> {
        if self.order != other.order {
            return Err(Error::OrderMismatch(self.order, other.order));
        }
        if self.zeta != other.zeta {
            return Err(Error::Invalid(format!(
                "invariant values over different zeta: {} vs {}",
                self.zeta, other.zeta
            )));
        }
        Ok(())
    }

    /// Multiplies by `sqrt(lambda)^k`.
    pub fn mul_sqrt_lambda(&self, k: i64) -> Self {
        let total = self.half as i64 + k;
        let whole = total.div_euclid(2);
        let half = total.rem_euclid(2) as u8;
        let body = if whole == 0 {
            self.body.clone()
        } else {
            &self.body * &self.lambda().pow(whole as i32).expect("lambda is nonzero")
        };
        InvariantValue { order: self.order, zeta: self.zeta.clone(), half, body }
    }

    pub fn mul_ratfunc(&self, r: &RatFunc) -> Self {
        InvariantValue { body: &self.body * r, ..self.clone() }
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.compatible(other)?;
        let v = InvariantValue { body: &self.body * &other.body, ..self.clone() };
        Ok(v.mul_sqrt_lambda(other.half as i64))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        self.compatible(other)?;
        let v = InvariantValue { body: self.body.checked_div(&other.body)?, ..self.clone() };
        Ok(v.mul_sqrt_lambda(-(other.half as i64)))
    }

    pub fn pow(&self, e: i32) -> Result<Self> {
        let body = self.body.pow(e)?;
        let v = InvariantValue { body, half: 0, ..self.clone() };
        Ok(v.mul_sqrt_lambda(self.half as i64 * e as i64))
    }

    /// Sum; both sides must carry the same power of `sqrt(lambda)` (zero is neutral).
    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.compatible(other)?;
        if other.is_zero() {
            return Ok(self.clone());
        }
        if self.is_zero() {
            return Ok(other.clone());
        }
        if self.half != other.half {
            return Err(Error::MixedParity);
        }
        Ok(InvariantValue { body: &self.body + &other.body, ..self.clone() })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&InvariantValue { body: -&other.body, ..other.clone() })
    }

    /// Approximate value at numeric `(u, z)`, principal branch of the square root.
    pub fn eval(&self, u: Complex64, z: Complex64) -> Complex64 {
        let b = self.body.eval(u, z);
        if self.half == 0 {
            b
        } else {
            b * self.lambda().eval(u, z).sqrt()
        }
    }

    pub fn to_json(&self) -> InvariantJson {
        InvariantJson {
            order: self.order,
            zeta: rational_string(&self.zeta),
            half_lambda: self.half,
            text: self.to_string(),
            numerator: poly_json(self.body.numer()),
            denominator: poly_json(self.body.denom()),
        }
    }
}

impl fmt::Display for InvariantValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "sqrtLambda^{} * ({})", self.half, self.body.numer())?;
        if !self.body.denom().is_one() {
            write!(f, " / ({})", self.body.denom())?;
        }
        Ok(())
    }
}

/// Serializable form; coefficients are power-basis coordinates as `"p/q"` strings.
#[derive(Clone, Debug, Serialize)]
pub struct InvariantJson {
    pub order: u32,
    pub zeta: String,
    pub half_lambda: u8,
    pub text: String,
    pub numerator: Vec<TermJson>,
    pub denominator: Vec<TermJson>,
}

#[derive(Clone, Debug, Serialize)]
pub struct TermJson {
    pub u: u32,
    pub z: u32,
    pub coeff: Vec<String>,
}

pub fn poly_json(p: &BiPoly) -> Vec<TermJson> {
    p.terms()
        .map(|(e, c)| TermJson { u: e.u, z: e.z, coeff: c.coeffs().iter().map(rational_string).collect() })
        .collect()
}

/// `Delta(d,S)` of the closure of `b`.
pub fn delta_invariant(sol: &ESolution, b: &BraidWord) -> Result<InvariantValue> {
    let d = sol.order();
    let tr = specialized_trace(&represent_braid(d, b)?, sol)?;
    let n = b.strands() as i32;
    let dn = normalization(sol).pow(n - 1)?;
    Ok(dn.mul_ratfunc(&tr).mul_sqrt_lambda(b.exponent_sum()))
}

/// The four braids `(L++, L+, L0, L-)` obtained by replacing letter `i`.
pub fn skein_quadruple(b: &BraidWord, i: usize) -> Result<[BraidWord; 4]> {
    Ok([
        b.with_letter_power(i, 2)?,
        b.with_letter_power(i, 1)?,
        b.with_letter_power(i, 0)?,
        b.with_letter_power(i, -1)?,
    ])
}

/// Checks `sqrt(l) D(L-) = D(L++)/(l u) + D(L+)/sqrt(l) - D(L0)/u` at letter `i` (0-based).
pub fn skein_check(sol: &ESolution, b: &BraidWord, i: usize) -> Result<bool> {
    let [pp, p, z0, m] = skein_quadruple(b, i)?;
    let d = sol.order();
    let u_inv = RatFunc::u(d).inv()?;
    let lhs = delta_invariant(sol, &m)?.mul_sqrt_lambda(1);
    let a = delta_invariant(sol, &pp)?.mul_sqrt_lambda(-2).mul_ratfunc(&u_inv);
    let bb = delta_invariant(sol, &p)?.mul_sqrt_lambda(-1);
    let c = delta_invariant(sol, &z0)?.mul_ratfunc(&u_inv);
    let rhs = a.checked_add(&bb)?.checked_sub(&c)?;
    Ok(lhs == rhs)
}

/// `Delta(1,{0})`: the HOMFLYPT polynomial in the `(u, z)` normalization.
pub fn homflypt_specialize(b: &BraidWord) -> Result<InvariantValue> {
    delta_invariant(&solution_from_subset(1, &[0])?, b)
}

/// At `d = 1`, `g^2 = u - (u-1) g` gives
/// `D(L+)/sqrt(l) - u sqrt(l) D(L-) + (u-1) D(L0) = 0`.
pub fn homflypt_skein_check(b: &BraidWord, i: usize) -> Result<bool> {
    let [_, p, z0, m] = skein_quadruple(b, i)?;
    let u = RatFunc::u(1);
    let one = RatFunc::one(1);
    let vp = homflypt_specialize(&p)?.mul_sqrt_lambda(-1);
    let vm = homflypt_specialize(&m)?.mul_sqrt_lambda(1).mul_ratfunc(&u);
    let v0 = homflypt_specialize(&z0)?.mul_ratfunc(&(&u - &one));
    Ok(vp.checked_sub(&vm)?.checked_add(&v0)?.is_zero())
}

/// Mirror substitution at `d = 1`: `u -> 1/u`, `z -> lambda z`, `sqrt(lambda) -> 1/sqrt(lambda)`.
///
/// Under it `lambda -> 1/lambda`, so it matches the invariant of the mirror
/// image, whose braid has every crossing switched.
pub fn mirror_substitute(v: &InvariantValue) -> Result<InvariantValue> {
    if v.order() != 1 {
        return Err(Error::Invalid("mirror substitution is defined for d = 1".into()));
    }
    let lambda = v.lambda();
    let u_inv = RatFunc::u(1).inv()?;
    let z_new = &lambda * &RatFunc::z(1);
    let body = v.body().compose(&u_inv, &z_new)?;
    let base = InvariantValue::from_ratfunc(v.zeta().clone(), body);
    Ok(base.mul_sqrt_lambda(-(v.half() as i64)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::parse_braid;
    use crate::exactnum::rat;

    fn sol(d: u32, s: &[u32]) -> ESolution {
        solution_from_subset(d, s).unwrap()
    }

    fn pairs() -> Vec<ESolution> {
        vec![sol(1, &[0]), sol(2, &[0]), sol(2, &[0, 1]), sol(3, &[0, 1, 2]), sol(4, &[0, 2])]
    }

    #[test]
    fn lambda_identities() {
        for s in pairs() {
            let d = s.order();
            let l = lambda_param(&s);
            let u = RatFunc::u(d);
            let z = RatFunc::z(d);
            let one = RatFunc::one(d);
            let zeta = RatFunc::from_rational(d, s.zeta());
            // 1 - lambda u = zeta (1-u)/z
            assert_eq!(&one - &(&l * &u), (&zeta * &(&one - &u)).checked_div(&z).unwrap());
            // D sqrt(lambda) z = 1
            let dz = normalization(&s).mul_sqrt_lambda(1).mul_ratfunc(&z);
            assert!(dz.is_one());
        }
    }

    #[test]
    fn unknot_and_unlinks() {
        for s in pairs() {
            for w in ["1:", "1", "-1", "1 -2", "1 2 3"] {
                assert!(delta_invariant(&s, &parse_braid(w).unwrap()).unwrap().is_one(), "{w}");
            }
            // the identity of B_n closes to the n-component unlink
            for n in 1..=3 {
                let v = delta_invariant(&s, &BraidWord::identity(n)).unwrap();
                assert_eq!(v, normalization(&s).pow(n as i32 - 1).unwrap());
            }
        }
    }

    #[test]
    fn trefoil_and_hopf() {
        for s in pairs() {
            let d = s.order();
            let u = RatFunc::u(d);
            let z = RatFunc::z(d);
            let one = RatFunc::one(d);
            let zeta = RatFunc::from_rational(d, s.zeta());
            let lambda = lambda_param(&s);
            let u2u = &(&u * &u) - &u;
            let bracket = &(&(&u2u + &one) * &z) - &(&u2u * &zeta);
            let expected = InvariantValue::from_ratfunc(s.zeta(), &lambda.checked_div(&z).unwrap() * &bracket);
            assert_eq!(delta_invariant(&s, &parse_braid("1 1 1").unwrap()).unwrap(), expected);

            let hopf = &one + &(&(&u - &one) * &(&zeta - &z));
            let expected = InvariantValue::from_ratfunc(s.zeta(), hopf.checked_div(&z).unwrap()).mul_sqrt_lambda(1);
            assert_eq!(delta_invariant(&s, &parse_braid("1 1").unwrap()).unwrap(), expected);
        }
    }

    #[test]
    fn parity_rules() {
        let z = rat(1, 2);
        let a = InvariantValue::sqrt_lambda(2, z.clone());
        let b = InvariantValue::one(2, z.clone());
        assert_eq!(a.checked_add(&b), Err(Error::MixedParity));
        let sq = a.checked_mul(&a).unwrap();
        assert_eq!(sq.half(), 0);
        assert_eq!(sq.body(), &lambda_for(2, &z));
        assert!(a.checked_div(&a).unwrap().is_one());
        assert_eq!(b.to_string(), "sqrtLambda^0 * (1)");
    }

    #[test]
    fn skein_small() {
        for s in pairs() {
            let b = parse_braid("1 1 1").unwrap();
            for i in 0..3 {
                assert!(skein_check(&s, &b, i).unwrap());
            }
            assert!(skein_check(&s, &parse_braid("1 2 1").unwrap(), 1).unwrap());
        }
        assert!(skein_check(&pairs()[0], &parse_braid("1").unwrap(), 3).is_err());
    }

    #[test]
    fn homflypt_examples() {
        assert!(homflypt_specialize(&parse_braid("1:").unwrap()).unwrap().is_one());
        let b = parse_braid("1 1 1").unwrap();
        for i in 0..3 {
            assert!(homflypt_skein_check(&b, i).unwrap());
        }
        let right = homflypt_specialize(&b).unwrap();
        let left = homflypt_specialize(&b.inverse()).unwrap();
        assert_eq!(mirror_substitute(&right).unwrap(), left);
        assert_eq!(mirror_substitute(&left).unwrap(), right);
    }
}
