//! The E-system `E_d^(m) = x_m E_d^(0)` and its subset solutions.
//!
//! Each non-empty `S` in `Z/d` gives `x_k = (1/|S|) sum_{s in S} zeta_d^(s k)`.

use std::fmt;

use crate::error::{Error, Result};
use crate::exactnum::{cyclotomic_root, rat, Cyclotomic, Rational};

/// A subset `S` of `Z/d` together with its character-sum values `x_0..x_{d-1}`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ESolution {
    d: u32,
    subset: Vec<u32>,
    values: Vec<Cyclotomic>,
}

impl ESolution {
    pub fn order(&self) -> u32 {
        self.d
    }

    /// Sorted residues in `0..d`.
    pub fn subset(&self) -> &[u32] {
        &self.subset
    }

    pub fn values(&self) -> &[Cyclotomic] {
        &self.values
    }

    /// `1/|S|`, the trace of an idempotent under this solution.
    pub fn zeta(&self) -> Rational {
        rat(1, self.subset.len() as i64)
    }
}

impl fmt::Display for ESolution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", subset_string(self.d, &self.subset))
    }
}

/// Renders e.g. `{0,2} mod 4`.
pub fn subset_string(d: u32, s: &[u32]) -> String {
    let items: Vec<String> = s.iter().map(|x| x.to_string()).collect();
    format!("{{{}}} mod {d}", items.join(","))
}

fn normalize_subset(d: u32, s: &[i64]) -> Result<Vec<u32>> {
    if d == 0 {
        return Err(Error::Invalid("modulus must be positive".into()));
    }
    let mut out: Vec<u32> = s.iter().map(|&a| a.rem_euclid(d as i64) as u32).collect();
    out.sort_unstable();
    out.dedup();
    if out.is_empty() {
        return Err(Error::EmptySubset);
    }
    Ok(out)
}

/// `E_d^(m) = sum_s x_{m+s} x_{-s}`, indices mod `d`.
pub fn e_polynomial(d: u32, m: u32, values: &[Cyclotomic]) -> Cyclotomic {
    let d = d as usize;
    let mut acc = Cyclotomic::zero(values[0].order());
    for s in 0..d {
        acc += &(&values[(m as usize + s) % d] * &values[(d - s) % d]);
    }
    acc
}

/// True iff `values[0] = 1` and `E_d^(m) = x_m E_d^(0)` for `1 <= m < d`.
pub fn verify_solution(d: u32, values: &[Cyclotomic]) -> bool {
    if values.len() != d as usize || !values[0].is_one() {
        return false;
    }
    let e0 = e_polynomial(d, 0, values);
    (1..d).all(|m| e_polynomial(d, m, values) == &values[m as usize] * &e0)
}

pub fn solution_from_subset(d: u32, s: &[u32]) -> Result<ESolution> {
    let wide: Vec<i64> = s.iter().map(|&a| a as i64).collect();
    let subset = normalize_subset(d, &wide)?;
    let inv = rat(1, subset.len() as i64);
    let values: Vec<Cyclotomic> = (0..d as i64)
        .map(|k| {
            let mut acc = Cyclotomic::zero(d);
            for &a in &subset {
                acc += &cyclotomic_root(d, a as i64 * k);
            }
            acc.scale(&inv)
        })
        .collect();
    if !verify_solution(d, &values) {
        return Err(Error::Coherence(format!("{} fails the E-system", subset_string(d, &subset))));
    }
    Ok(ESolution { d, subset, values })
}

pub fn zeta_value(sol: &ESolution) -> Rational {
    sol.zeta()
}

/// Lifts `S` in `Z/d` to `{s(a) + b : a in S, b in d Z/d'}` in `Z/d'`,
/// with the section `s` picking representatives in `0..d`.
pub fn lift_subset(d: u32, d2: u32, s: &[u32]) -> Result<Vec<u32>> {
    if d == 0 || d2 == 0 || d2 % d != 0 {
        return Err(Error::NotDivisor(d, d2));
    }
    let wide: Vec<i64> = s.iter().map(|&a| a as i64).collect();
    let base = normalize_subset(d, &wide)?;
    let mut out: Vec<u32> = base.iter().flat_map(|&a| (0..d2 / d).map(move |k| a + k * d)).collect();
    out.sort_unstable();
    Ok(out)
}

/// All non-empty subsets of `Z/d`, ordered by their bitmask.
pub fn enumerate_subsets(d: u32) -> Vec<Vec<u32>> {
    assert!(d < 31, "subset enumeration is limited to d < 31");
    (1u32..(1 << d)).map(|mask| (0..d).filter(|k| mask >> k & 1 == 1).collect()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::One;

    fn c(d: u32, n: i64, q: i64) -> Cyclotomic {
        Cyclotomic::from_rational(d, rat(n, q))
    }

    #[test]
    fn e_polynomial_examples() {
        assert!(e_polynomial(1, 0, &[Cyclotomic::one(1)]).is_one());
        let v = [c(2, 1, 1), c(2, 1, 1)];
        assert_eq!(e_polynomial(2, 0, &v), c(2, 2, 1));
        assert_eq!(e_polynomial(2, 1, &v), c(2, 2, 1));
    }

    #[test]
    fn verify_examples() {
        assert!(verify_solution(1, &[Cyclotomic::one(1)]));
        assert!(verify_solution(3, &[c(3, 1, 1), c(3, 0, 1), c(3, 0, 1)]));
        assert!(!verify_solution(2, &[c(2, 1, 1), c(2, 1, 2)]));
    }

    #[test]
    fn subset_solutions() {
        assert_eq!(solution_from_subset(1, &[0]).unwrap().values(), &[Cyclotomic::one(1)]);
        assert!(solution_from_subset(2, &[0, 1]).unwrap().values()[1].is_zero());
        let s = solution_from_subset(4, &[1]).unwrap();
        let z = cyclotomic_root(4, 1);
        assert_eq!(s.values(), &[Cyclotomic::one(4), z.clone(), c(4, -1, 1), -z]);
        assert_eq!(solution_from_subset(3, &[]), Err(Error::EmptySubset));
        assert_eq!(s.to_string(), "{1} mod 4");
    }

    #[test]
    fn zeta_examples() {
        assert!(zeta_value(&solution_from_subset(5, &[0]).unwrap()).is_one());
        assert_eq!(zeta_value(&solution_from_subset(3, &[0, 1, 2]).unwrap()), rat(1, 3));
        assert_eq!(zeta_value(&solution_from_subset(6, &[0, 3]).unwrap()), rat(1, 2));
    }

    #[test]
    fn lifting_examples() {
        assert_eq!(lift_subset(3, 3, &[0, 2]).unwrap(), vec![0, 2]);
        assert_eq!(lift_subset(2, 4, &[0]).unwrap(), vec![0, 2]);
        assert_eq!(lift_subset(2, 6, &[1]).unwrap(), vec![1, 3, 5]);
        assert_eq!(lift_subset(4, 6, &[1]), Err(Error::NotDivisor(4, 6)));
    }

    #[test]
    fn d3_printed_system() {
        for s in enumerate_subsets(3) {
            let v = solution_from_subset(3, &s).unwrap();
            let (x1, x2) = (&v.values()[1], &v.values()[2]);
            let two = c(3, 2, 1);
            assert_eq!(x1 + &(x2 * x2), &(&two * &(x1 * x1)) * x2);
            assert_eq!(&(x1 * x1) + x2, &(&two * x1) * &(x2 * x2));
        }
    }

    #[test]
    fn lifting_laws() {
        for d in 1..=12u32 {
            for d1 in (d..=12).filter(|k| k % d == 0) {
                for d2 in (d1..=12).filter(|k| k % d1 == 0) {
                    for s in enumerate_subsets(d) {
                        let direct = lift_subset(d, d2, &s).unwrap();
                        let via = lift_subset(d1, d2, &lift_subset(d, d1, &s).unwrap()).unwrap();
                        assert_eq!(direct, via);
                        assert_eq!(direct.len(), s.len() * (d2 / d) as usize);
                    }
                }
            }
        }
    }
}
