//! Seeded random braids, algebra elements and subsets for property checks.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::braid::BraidWord;
use crate::exactnum::{rat, LaurentU};
use crate::yokonuma::{AlgebraElement, BasisWord};

pub type SampleRng = ChaCha8Rng;

pub fn rng(seed: u64) -> SampleRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniform letters from `+-1..+-(n-1)`; length uniform in `0..=max_len`.
pub fn random_braid(rng: &mut SampleRng, strands: usize, max_len: usize) -> BraidWord {
    if strands < 2 {
        return BraidWord::identity(strands.max(1));
    }
    let len = rng.gen_range(0..=max_len);
    let letters = (0..len)
        .map(|_| {
            let g = rng.gen_range(1..strands as i32);
            if rng.gen_bool(0.5) {
                g
            } else {
                -g
            }
        })
        .collect();
    BraidWord::new(strands, letters).expect("letters in range")
}

/// Small nonzero Laurent coefficient with exponents in `-2..=2`.
pub fn random_coeff(rng: &mut SampleRng) -> LaurentU {
    let mut c = LaurentU::zero();
    while c.is_zero() {
        for _ in 0..rng.gen_range(1..=2) {
            let e = rng.gen_range(-2..=2);
            let num = rng.gen_range(-3i64..=3);
            let den = rng.gen_range(1i64..=2);
            c.add_term(e, &rat(num, den));
        }
    }
    c
}

pub fn random_word(rng: &mut SampleRng, d: u32, n: usize) -> BasisWord {
    let framings: Vec<i64> = (0..n).map(|_| rng.gen_range(0..d as i64)).collect();
    let mut perm: Vec<usize> = (1..=n).collect();
    perm.shuffle(rng);
    BasisWord::new(d, &framings, &perm).expect("valid word")
}

/// A combination of up to `max_terms` random basis words.
pub fn random_element(rng: &mut SampleRng, d: u32, n: usize, max_terms: usize) -> AlgebraElement {
    let k = rng.gen_range(1..=max_terms.max(1));
    let terms: Vec<_> = (0..k).map(|_| (random_word(rng, d, n), random_coeff(rng))).collect();
    AlgebraElement::from_terms(d, n, terms).expect("valid terms")
}

/// Non-empty subset of `Z/d`, sorted.
pub fn random_subset(rng: &mut SampleRng, d: u32) -> Vec<u32> {
    loop {
        let s: Vec<u32> = (0..d).filter(|_| rng.gen_bool(0.5)).collect();
        if !s.is_empty() {
            return s;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reproducible() {
        let a: Vec<_> = (0..5).map(|_| random_braid(&mut rng(7), 4, 8)).collect();
        let mut r = rng(7);
        let b = random_braid(&mut r, 4, 8);
        assert_eq!(a[0], b);
        let mut r1 = rng(3);
        let mut r2 = rng(3);
        assert_eq!(random_element(&mut r1, 3, 3, 4), random_element(&mut r2, 3, 3, 4));
        assert!(!random_subset(&mut r1, 1).is_empty());
    }
}
