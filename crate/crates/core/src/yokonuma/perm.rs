//! Permutations in one-line notation, stored 0-based as bytes.

use crate::error::{Error, Result};

/// Checks that `p` is a 1-based one-line permutation of `{1..n}` and converts to 0-based.
pub fn from_one_based(p: &[usize]) -> Result<Vec<u8>> {
    let n = p.len();
    if n > u8::MAX as usize {
        return Err(Error::Invalid(format!("permutation too large: {n} points")));
    }
    let mut seen = vec![false; n];
    let mut out = Vec::with_capacity(n);
    for &v in p {
        if v == 0 || v > n || seen[v - 1] {
            return Err(Error::Invalid(format!("not a permutation of 1..{n}: {p:?}")));
        }
        seen[v - 1] = true;
        out.push((v - 1) as u8);
    }
    Ok(out)
}

pub fn identity(n: usize) -> Vec<u8> {
    (0..n as u8).collect()
}

pub fn inversions(p: &[u8]) -> usize {
    let mut count = 0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                count += 1;
            }
        }
    }
    count
}

/// Reduced word of a 0-based permutation as 1-based generator indices.
///
/// Repeatedly takes the smallest descent `i`, right-multiplies by `s_i` and
/// records `i`; the recorded list reversed is the word.
pub fn reduced_word(p: &[u8]) -> Vec<usize> {
    let mut w = p.to_vec();
    let mut rec = Vec::new();
    while let Some(i) = (0..w.len().saturating_sub(1)).find(|&i| w[i] > w[i + 1]) {
        w.swap(i, i + 1);
        rec.push(i + 1);
    }
    rec.reverse();
    rec
}

/// Fixed reduced word of a 1-based one-line permutation.
pub fn canonical_reduced_word(p: &[usize]) -> Result<Vec<usize>> {
    Ok(reduced_word(&from_one_based(p)?))
}

/// Product `s_{i1} s_{i2} ...` of 1-based generators on `n` points, as a 0-based one-line permutation.
pub fn from_word(n: usize, word: &[usize]) -> Vec<u8> {
    let mut w = identity(n);
    for &i in word {
        w.swap(i - 1, i);
    }
    w
}

pub fn all_permutations(n: usize) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(n);
    let mut used = vec![false; n];
    fn rec(n: usize, cur: &mut Vec<u8>, used: &mut [bool], out: &mut Vec<Vec<u8>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for v in 0..n {
            if !used[v] {
                used[v] = true;
                cur.push(v as u8);
                rec(n, cur, used, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    rec(n, &mut cur, &mut used, &mut out);
    out
}
