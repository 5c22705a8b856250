use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::perm;
use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::exactnum::{rat, LaurentU};

/// A canonical basis word `t_1^a_1 ... t_n^a_n g_w`.
///
/// `framings` holds residues mod `d`; `perm` is the one-line notation of `w`,
/// stored 0-based. Sorting is by framings, then by permutation.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct BasisWord {
    framings: Vec<u8>,
    perm: Vec<u8>,
}

impl BasisWord {
    pub fn identity(n: usize) -> Self {
        BasisWord { framings: vec![0; n], perm: perm::identity(n) }
    }

    /// Framings are reduced mod `d`; `perm` is 1-based one-line notation.
    pub fn new(d: u32, framings: &[i64], perm_one_based: &[usize]) -> Result<Self> {
        check_d(d)?;
        if framings.len() != perm_one_based.len() {
            return Err(Error::Invalid(format!(
                "{} framings for a permutation of {} points",
                framings.len(),
                perm_one_based.len()
            )));
        }
        let perm = perm::from_one_based(perm_one_based)?;
        let framings = framings.iter().map(|&a| a.rem_euclid(d as i64) as u8).collect();
        Ok(BasisWord { framings, perm })
    }

    pub(crate) fn from_raw(framings: Vec<u8>, perm: Vec<u8>) -> Self {
        debug_assert_eq!(framings.len(), perm.len());
        BasisWord { framings, perm }
    }

    pub fn n(&self) -> usize {
        self.perm.len()
    }

    pub fn framings(&self) -> &[u8] {
        &self.framings
    }

    /// 0-based one-line notation.
    pub fn perm(&self) -> &[u8] {
        &self.perm
    }

    pub fn perm_one_based(&self) -> Vec<usize> {
        self.perm.iter().map(|&v| v as usize + 1).collect()
    }

    pub fn reduced_word(&self) -> Vec<usize> {
        perm::reduced_word(&self.perm)
    }

    pub fn length(&self) -> usize {
        perm::inversions(&self.perm)
    }

    /// Every basis word of `Y(d,n)`, sorted.
    pub fn all(d: u32, n: usize) -> Vec<BasisWord> {
        let perms = perm::all_permutations(n);
        let mut out = Vec::new();
        let total = (d as usize).pow(n as u32);
        for idx in 0..total {
            let mut f = vec![0u8; n];
            let mut r = idx;
            for slot in f.iter_mut().rev() {
                *slot = (r % d as usize) as u8;
                r /= d as usize;
            }
            for p in &perms {
                out.push(BasisWord { framings: f.clone(), perm: p.clone() });
            }
        }
        out.sort();
        out
    }
}

impl fmt::Display for BasisWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (j, &a) in self.framings.iter().enumerate() {
            match a {
                0 => {}
                1 => parts.push(format!("t{}", j + 1)),
                _ => parts.push(format!("t{}^{}", j + 1, a)),
            }
        }
        for i in self.reduced_word() {
            parts.push(format!("g{i}"));
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("*"))
        }
    }
}

fn check_d(d: u32) -> Result<()> {
    if d == 0 || d > u8::MAX as u32 {
        return Err(Error::Invalid(format!("algebra order d must lie in 1..=255, got {d}")));
    }
    Ok(())
}

fn accumulate(map: &mut BTreeMap<BasisWord, LaurentU>, w: BasisWord, c: LaurentU) {
    if c.is_zero() {
        return;
    }
    match map.entry(w) {
        Entry::Vacant(v) => {
            v.insert(c);
        }
        Entry::Occupied(mut o) => {
            o.get_mut().add_assign_ref(&c);
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

fn u_minus_one() -> LaurentU {
    LaurentU::from_terms(&[(1, 1, 1), (0, -1, 1)])
}

fn u_inv_minus_one() -> LaurentU {
    LaurentU::from_terms(&[(-1, 1, 1), (0, -1, 1)])
}

/// Element of `Y(d,n)(u)`: basis words with Laurent-in-`u` coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct AlgebraElement {
    d: u32,
    n: usize,
    terms: BTreeMap<BasisWord, LaurentU>,
}

impl AlgebraElement {
    pub fn zero(d: u32, n: usize) -> Self {
        AlgebraElement { d, n, terms: BTreeMap::new() }
    }

    pub fn one(d: u32, n: usize) -> Self {
        Self::from_word(d, BasisWord::identity(n), LaurentU::one())
    }

    pub fn from_word(d: u32, w: BasisWord, c: LaurentU) -> Self {
        let mut e = Self::zero(d, w.n());
        accumulate(&mut e.terms, w, c);
        e
    }

    pub fn from_terms<I>(d: u32, n: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (BasisWord, LaurentU)>,
    {
        check_d(d)?;
        let mut e = Self::zero(d, n);
        for (w, c) in terms {
            if w.n() != n || w.framings.iter().any(|&a| a as u32 >= d) {
                return Err(Error::Invalid(format!("basis word {w} does not belong to Y({d},{n})")));
            }
            accumulate(&mut e.terms, w, c);
        }
        Ok(e)
    }

    /// `g_i`, 1-based.
    pub fn g(d: u32, n: usize, i: usize) -> Result<Self> {
        check_index(n, i)?;
        Ok(Self::one(d, n).mul_g(i))
    }

    /// `g_i^{-1} = g_i - (u^-1 - 1) e_i + (u^-1 - 1) e_i g_i`.
    pub fn g_inv(d: u32, n: usize, i: usize) -> Result<Self> {
        check_index(n, i)?;
        Ok(Self::one(d, n).mul_g_inv(i))
    }

    /// `t_j^m`, 1-based.
    pub fn t(d: u32, n: usize, j: usize, m: i64) -> Result<Self> {
        if j == 0 || j > n {
            return Err(Error::IndexOutOfRange { index: j as i64, max: n as i64 });
        }
        Ok(Self::one(d, n).mul_t(j, m))
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BasisWord, &LaurentU)> {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &BasisWord) -> LaurentU {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    pub fn scale(&self, k: &LaurentU) -> Self {
        let mut out = Self::zero(self.d, self.n);
        for (w, c) in &self.terms {
            accumulate(&mut out.terms, w.clone(), c * k);
        }
        out
    }

    fn same_algebra(&self, other: &Self) -> Result<()> {
        if self.d != other.d || self.n != other.n {
            return Err(Error::AlgebraMismatch(self.d, self.n, other.d, other.n));
        }
        Ok(())
    }

    /// Right multiplication by `t_j^m`.
    pub fn mul_t(&self, j: usize, m: i64) -> Self {
        assert!(j >= 1 && j <= self.n, "t index out of range");
        let d = self.d as i64;
        let m = m.rem_euclid(d) as u8;
        if m == 0 {
            return self.clone();
        }
        let mut out = Self::zero(self.d, self.n);
        for (w, c) in &self.terms {
            let mut w = w.clone();
            let pos = w.perm[j - 1] as usize;
            w.framings[pos] = ((w.framings[pos] as i64 + m as i64) % d) as u8;
            out.terms.insert(w, c.clone());
        }
        out
    }

    /// Right multiplication by `g_i`.
    pub fn mul_g(&self, i: usize) -> Self {
        assert!(i >= 1 && i < self.n, "g index out of range");
        let k = u_minus_one().scale(&rat(1, self.d as i64));
        let mut out = BTreeMap::new();
        for (w, c) in &self.terms {
            push_g(self.d, w, c, i - 1, &k, &mut out);
        }
        AlgebraElement { d: self.d, n: self.n, terms: out }
    }

    /// Right multiplication by `g_i^{-1}`.
    pub fn mul_g_inv(&self, i: usize) -> Self {
        assert!(i >= 1 && i < self.n, "g index out of range");
        let k = u_inv_minus_one().scale(&rat(1, self.d as i64));
        let mut out = BTreeMap::new();
        for (w, c) in &self.terms {
            push_g_inv(self.d, w, c, i - 1, &k, &mut out);
        }
        AlgebraElement { d: self.d, n: self.n, terms: out }
    }

    /// Right multiplication by a single basis word.
    pub fn mul_word(&self, w: &BasisWord) -> Self {
        let mut x = self.clone();
        for (j, &a) in w.framings.iter().enumerate() {
            if a != 0 {
                x = x.mul_t(j + 1, a as i64);
            }
        }
        for i in w.reduced_word() {
            x = x.mul_g(i);
        }
        x
    }

    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.same_algebra(other)?;
        let mut out = Self::zero(self.d, self.n);
        for (w, c) in &other.terms {
            let part = self.mul_word(w);
            for (pw, pc) in part.terms {
                accumulate(&mut out.terms, pw, &pc * c);
            }
        }
        Ok(out)
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.same_algebra(other)?;
        let mut out = self.clone();
        for (w, c) in &other.terms {
            accumulate(&mut out.terms, w.clone(), c.clone());
        }
        Ok(out)
    }

    /// Natural inclusion `Y(d,n) -> Y(d,m)` for `m >= n`.
    pub fn embed(&self, m: usize) -> Result<Self> {
        if m < self.n {
            return Err(Error::StrandMismatch { left: self.n, right: m });
        }
        let mut out = Self::zero(self.d, m);
        for (w, c) in &self.terms {
            let mut f = w.framings.clone();
            f.resize(m, 0);
            let mut p = w.perm.clone();
            p.extend(self.n as u8..m as u8);
            out.terms.insert(BasisWord { framings: f, perm: p }, c.clone());
        }
        Ok(out)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.d, self.n);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }
}

fn check_index(n: usize, i: usize) -> Result<()> {
    if i == 0 || i >= n {
        return Err(Error::IndexOutOfRange { index: i as i64, max: n as i64 - 1 });
    }
    Ok(())
}

/// `t^a g_w g_i` for 0-based position `i`; `k = (u-1)/d`.
fn push_g(d: u32, w: &BasisWord, c: &LaurentU, i: usize, k: &LaurentU, out: &mut BTreeMap<BasisWord, LaurentU>) {
    let mut shorter = w.perm.clone();
    shorter.swap(i, i + 1);
    if w.perm[i] < w.perm[i + 1] {
        accumulate(out, BasisWord { framings: w.framings.clone(), perm: shorter }, c.clone());
        return;
    }
    // g_w = g_w' g_i, so g_w g_i = g_w' (1 + (u-1) e_i - (u-1) e_i g_i)
    let (a, b) = (shorter[i] as usize, shorter[i + 1] as usize);
    let ck = c * k;
    let nck = -&ck;
    let d8 = d as u8;
    for m in 0..d8 {
        let mut f = w.framings.clone();
        f[a] = ((f[a] as u32 + m as u32) % d) as u8;
        f[b] = ((f[b] as u32 + (d8 - m) as u32) % d) as u8;
        accumulate(out, BasisWord { framings: f.clone(), perm: shorter.clone() }, ck.clone());
        accumulate(out, BasisWord { framings: f, perm: w.perm.clone() }, nck.clone());
    }
    accumulate(out, BasisWord { framings: w.framings.clone(), perm: shorter }, c.clone());
}

/// `t^a g_w g_i^{-1}` for 0-based position `i`; `k = (u^-1 - 1)/d`.
fn push_g_inv(d: u32, w: &BasisWord, c: &LaurentU, i: usize, k: &LaurentU, out: &mut BTreeMap<BasisWord, LaurentU>) {
    let mut swapped = w.perm.clone();
    swapped.swap(i, i + 1);
    if w.perm[i] > w.perm[i + 1] {
        accumulate(out, BasisWord { framings: w.framings.clone(), perm: swapped }, c.clone());
        return;
    }
    let (a, b) = (w.perm[i] as usize, w.perm[i + 1] as usize);
    let ck = c * k;
    let nck = -&ck;
    let d8 = d as u8;
    for m in 0..d8 {
        let mut f = w.framings.clone();
        f[a] = ((f[a] as u32 + m as u32) % d) as u8;
        f[b] = ((f[b] as u32 + (d8 - m) as u32) % d) as u8;
        accumulate(out, BasisWord { framings: f.clone(), perm: w.perm.clone() }, nck.clone());
        accumulate(out, BasisWord { framings: f, perm: swapped.clone() }, ck.clone());
    }
    accumulate(out, BasisWord { framings: w.framings.clone(), perm: swapped }, c.clone());
}

/// `e_{d,i} = (1/d) sum_m t_i^m t_{i+1}^{-m}`.
pub fn idempotent_e(d: u32, n: usize, i: usize) -> Result<AlgebraElement> {
    check_d(d)?;
    check_index(n, i)?;
    let mut e = AlgebraElement::zero(d, n);
    let c = LaurentU::constant(rat(1, d as i64));
    for m in 0..d {
        let mut f = vec![0u8; n];
        f[i - 1] = m as u8;
        f[i] = ((d - m) % d) as u8;
        accumulate(&mut e.terms, BasisWord { framings: f, perm: perm::identity(n) }, c.clone());
    }
    Ok(e)
}

/// Image of a braid: `sigma_i -> g_i`, `sigma_i^-1 -> g_i^-1`.
pub fn represent_braid(d: u32, b: &BraidWord) -> Result<AlgebraElement> {
    check_d(d)?;
    let mut x = AlgebraElement::one(d, b.strands());
    for &l in b.letters() {
        let i = l.unsigned_abs() as usize;
        x = if l > 0 { x.mul_g(i) } else { x.mul_g_inv(i) };
    }
    Ok(x)
}

/// Closed form of `g_i^m`.
pub fn power_formula(d: u32, n: usize, i: usize, m: i64) -> Result<AlgebraElement> {
    let e = idempotent_e(d, n, i)?;
    let eg = e.mul_g(i);
    let geometric = |k: i64, step: i32| {
        let mut s = LaurentU::zero();
        for l in 0..k {
            s.add_term(step * 2 * l as i32, &rat(1, 1));
        }
        s
    };
    let (base, coef) = if m >= 0 {
        let k = m / 2;
        if m % 2 == 0 {
            (AlgebraElement::one(d, n), &u_minus_one() * &geometric(k, 1))
        } else {
            let beta = &(&u_minus_one() * &geometric(k, 1)) * &LaurentU::u_pow(1);
            (AlgebraElement::g(d, n, i)?, -&beta)
        }
    } else if m % 2 == 0 {
        let k = -m / 2;
        let alpha = &(&u_inv_minus_one() * &geometric(k, -1)) * &LaurentU::u_pow(-1);
        (AlgebraElement::one(d, n), alpha)
    } else {
        let k = (1 - m) / 2;
        let beta = &u_inv_minus_one() * &geometric(k, -1);
        (AlgebraElement::g(d, n, i)?, -&beta)
    };
    // base + coef e - coef e g
    Ok(&(&base + &e.scale(&coef)) - &eg.scale(&coef))
}

impl<'a> Add<&'a AlgebraElement> for &'a AlgebraElement {
    type Output = AlgebraElement;
    fn add(self, rhs: &AlgebraElement) -> AlgebraElement {
        self.checked_add(rhs).expect("algebra mismatch")
    }
}

impl<'a> Sub<&'a AlgebraElement> for &'a AlgebraElement {
    type Output = AlgebraElement;
    fn sub(self, rhs: &AlgebraElement) -> AlgebraElement {
        self + &(-rhs)
    }
}

impl Neg for &AlgebraElement {
    type Output = AlgebraElement;
    fn neg(self) -> AlgebraElement {
        AlgebraElement {
            d: self.d,
            n: self.n,
            terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect(),
        }
    }
}

impl<'a> Mul<&'a AlgebraElement> for &'a AlgebraElement {
    type Output = AlgebraElement;
    /// Panics on mismatched algebras; use [`AlgebraElement::multiply`] to get an error instead.
    fn mul(self, rhs: &AlgebraElement) -> AlgebraElement {
        self.multiply(rhs).expect("algebra mismatch")
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (w, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            if c.is_one() {
                write!(f, "{w}")?;
            } else {
                write!(f, "({c})*{w}")?;
            }
        }
        Ok(())
    }
}
