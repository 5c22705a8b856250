//! Finite truncations of the inverse systems along a divisor chain `d_1 | d_2 | ... | d_k`.
//!
//! `theta` reduces residues, `rho` reduces framings of algebra elements and
//! `xi` renames trace variables `x_a -> x_(a mod d)`. Coherent tuples are
//! checked on construction.

use std::fmt;
use std::str::FromStr;

use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::esystem::{lift_subset, solution_from_subset};
use crate::exactnum::TracePolynomial;
use crate::invariant::{delta_invariant, InvariantValue};
use crate::trace::markov_trace;
use crate::yokonuma::{idempotent_e, represent_braid, AlgebraElement, BasisWord};

/// Strictly increasing positive integers, each dividing the next.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct DivisorChain(Vec<u32>);

impl DivisorChain {
    pub fn new(entries: Vec<u32>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::InvalidChain("empty chain".into()));
        }
        if entries[0] == 0 {
            return Err(Error::InvalidChain("entries must be positive".into()));
        }
        for w in entries.windows(2) {
            if w[1] <= w[0] {
                return Err(Error::InvalidChain(format!("{} does not exceed {}", w[1], w[0])));
            }
            if w[1] % w[0] != 0 {
                return Err(Error::InvalidChain(format!("{} does not divide {}", w[0], w[1])));
            }
        }
        if *entries.last().unwrap() > u8::MAX as u32 {
            return Err(Error::InvalidChain("entries must be at most 255".into()));
        }
        Ok(DivisorChain(entries))
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn first(&self) -> u32 {
        self.0[0]
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl FromStr for DivisorChain {
    type Err = Error;

    /// Comma separated, e.g. `2,4,8`.
    fn from_str(s: &str) -> Result<Self> {
        let entries = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::InvalidChain(format!("bad entry {:?}", t.trim())))
            })
            .collect::<Result<Vec<_>>>()?;
        DivisorChain::new(entries)
    }
}

impl fmt::Display for DivisorChain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|d| d.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

fn check_divides(d: u32, d2: u32) -> Result<()> {
    if d == 0 || d2 == 0 || d2 % d != 0 {
        return Err(Error::NotDivisor(d, d2));
    }
    Ok(())
}

/// `m mod d`, for `m` a residue mod `d2`.
pub fn theta(d: u32, d2: u32, m: i64) -> Result<u32> {
    check_divides(d, d2)?;
    Ok(m.rem_euclid(d2 as i64).rem_euclid(d as i64) as u32)
}

/// The connecting map `Y(d2,n) -> Y(d,n)`: framings reduced mod `d`.
pub fn rho(d: u32, d2: u32, a: &AlgebraElement) -> Result<AlgebraElement> {
    check_divides(d, d2)?;
    if a.d() != d2 {
        return Err(Error::OrderMismatch(a.d(), d2));
    }
    let terms = a.terms().map(|(w, c)| {
        let f = w.framings().iter().map(|&x| (x as u32 % d) as u8).collect();
        (BasisWord::from_raw(f, w.perm().to_vec()), c.clone())
    });
    AlgebraElement::from_terms(d, a.n(), terms)
}

/// The variable renaming `x_a -> x_(a mod d)` from order `d2` to order `d`, with `x_0 = 1`.
pub fn xi(d: u32, d2: u32, p: &TracePolynomial) -> Result<TracePolynomial> {
    check_divides(d, d2)?;
    if p.order() != d2 {
        return Err(Error::OrderMismatch(p.order(), d2));
    }
    Ok(p.rename_x(d, |a| a % d))
}

/// One algebra element per chain level, compatible under `rho`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CoherentElement {
    chain: DivisorChain,
    parts: Vec<AlgebraElement>,
}

impl CoherentElement {
    pub fn new(chain: DivisorChain, parts: Vec<AlgebraElement>) -> Result<Self> {
        if parts.len() != chain.len() {
            return Err(Error::Coherence(format!("{} parts for a chain of length {}", parts.len(), chain.len())));
        }
        let n = parts[0].n();
        for (j, (p, &d)) in parts.iter().zip(chain.entries()).enumerate() {
            if p.d() != d || p.n() != n {
                return Err(Error::Coherence(format!("part {j} lies in Y({},{}), expected Y({d},{n})", p.d(), p.n())));
            }
        }
        for j in 0..parts.len() - 1 {
            let (d, d2) = (chain.entries()[j], chain.entries()[j + 1]);
            if rho(d, d2, &parts[j + 1])? != parts[j] {
                return Err(Error::Coherence(format!("rho from level {d2} to {d} does not match")));
            }
        }
        Ok(CoherentElement { chain, parts })
    }

    pub fn chain(&self) -> &DivisorChain {
        &self.chain
    }

    pub fn parts(&self) -> &[AlgebraElement] {
        &self.parts
    }
}

/// One trace polynomial per chain level, compatible under `xi`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CoherentTrace {
    chain: DivisorChain,
    parts: Vec<TracePolynomial>,
}

impl CoherentTrace {
    pub fn new(chain: DivisorChain, parts: Vec<TracePolynomial>) -> Result<Self> {
        if parts.len() != chain.len() {
            return Err(Error::Coherence(format!("{} parts for a chain of length {}", parts.len(), chain.len())));
        }
        for j in 0..parts.len() - 1 {
            let (d, d2) = (chain.entries()[j], chain.entries()[j + 1]);
            if xi(d, d2, &parts[j + 1])? != parts[j] {
                return Err(Error::Coherence(format!("xi from level {d2} to {d} does not match")));
            }
        }
        Ok(CoherentTrace { chain, parts })
    }

    pub fn chain(&self) -> &DivisorChain {
        &self.chain
    }

    pub fn parts(&self) -> &[TracePolynomial] {
        &self.parts
    }
}

pub fn coherent_represent(chain: &DivisorChain, b: &BraidWord) -> Result<CoherentElement> {
    let parts = chain.entries().iter().map(|&d| represent_braid(d, b)).collect::<Result<Vec<_>>>()?;
    CoherentElement::new(chain.clone(), parts)
}

/// The coherent idempotent `(e_{d_j,i})_j`.
pub fn coherent_idempotent(chain: &DivisorChain, n: usize, i: usize) -> Result<CoherentElement> {
    let parts = chain.entries().iter().map(|&d| idempotent_e(d, n, i)).collect::<Result<Vec<_>>>()?;
    CoherentElement::new(chain.clone(), parts)
}

pub fn adelic_trace(ce: &CoherentElement) -> Result<CoherentTrace> {
    CoherentTrace::new(ce.chain.clone(), ce.parts.iter().map(markov_trace).collect())
}

/// `(Delta(d_j, S_j)(closure of b))_j` with `S_j` the lift of `S` from `Z/d_1`.
pub fn adelic_delta(chain: &DivisorChain, s: &[u32], b: &BraidWord) -> Result<Vec<InvariantValue>> {
    let d1 = chain.first();
    chain
        .entries()
        .iter()
        .map(|&d| {
            let sol = solution_from_subset(d, &lift_subset(d1, d, s)?)?;
            delta_invariant(&sol, b)
        })
        .collect()
}
