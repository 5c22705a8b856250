//! Dense univariate polynomials over `Q(zeta_d)`, used by the bivariate gcd.

use super::cyclotomic::Cyclotomic;

#[derive(Clone, PartialEq, Eq, Debug)]
pub(crate) struct UPoly {
    pub order: u32,
    /// Low degree first; no trailing zeros. Empty is the zero polynomial.
    pub c: Vec<Cyclotomic>,
}

impl UPoly {
    pub fn zero(order: u32) -> Self {
        UPoly { order, c: Vec::new() }
    }

    pub fn constant(c: Cyclotomic) -> Self {
        let order = c.order();
        let mut p = UPoly { order, c: vec![c] };
        p.trim();
        p
    }

    pub fn from_vec(order: u32, c: Vec<Cyclotomic>) -> Self {
        let mut p = UPoly { order, c };
        p.trim();
        p
    }

    pub fn trim(&mut self) {
        while self.c.last().is_some_and(Cyclotomic::is_zero) {
            self.c.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.c.len() == 1 && self.c[0].is_one()
    }

    pub fn deg(&self) -> usize {
        self.c.len().saturating_sub(1)
    }

    pub fn lc(&self) -> &Cyclotomic {
        self.c.last().expect("leading coefficient of zero polynomial")
    }

    pub fn scale(&self, k: &Cyclotomic) -> Self {
        if k.is_zero() {
            return Self::zero(self.order);
        }
        UPoly { order: self.order, c: self.c.iter().map(|x| x * k).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.order);
        }
        let mut out = vec![Cyclotomic::zero(self.order); self.c.len() + other.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.c.iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        Self::from_vec(self.order, out)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.c.clone();
        if out.len() < other.c.len() {
            out.resize(other.c.len(), Cyclotomic::zero(self.order));
        }
        for (i, b) in other.c.iter().enumerate() {
            out[i] -= b;
        }
        Self::from_vec(self.order, out)
    }

    pub fn divrem(&self, other: &Self) -> (Self, Self) {
        assert!(!other.is_zero(), "polynomial division by zero");
        let mut r = self.c.clone();
        let db = other.deg();
        if r.len() < other.c.len() {
            return (Self::zero(self.order), self.clone());
        }
        let inv = other.lc().inv().expect("nonzero leading coefficient");
        let mut q = vec![Cyclotomic::zero(self.order); r.len() - db];
        for k in (0..q.len()).rev() {
            let coef = &r[k + db] * &inv;
            if coef.is_zero() {
                continue;
            }
            for (j, b) in other.c.iter().enumerate() {
                r[k + j] -= &(&coef * b);
            }
            q[k] = coef;
        }
        (Self::from_vec(self.order, q), Self::from_vec(self.order, r))
    }

    pub fn exact_div(&self, other: &Self) -> Self {
        let (q, r) = self.divrem(other);
        debug_assert!(r.is_zero(), "inexact univariate division");
        q
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self.lc().inv().expect("nonzero");
        self.scale(&inv)
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(a: &Self, b: &Self) -> Self {
        let (mut x, mut y) = (a.clone(), b.clone());
        while !y.is_zero() {
            if y.deg() == 0 {
                return Self::constant(Cyclotomic::one(a.order));
            }
            let (_, r) = x.divrem(&y);
            x = std::mem::replace(&mut y, r);
        }
        x.monic()
    }
}
