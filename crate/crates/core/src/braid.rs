//! Classical braid words.
//!
//! A braid on `n` strands is stored as a sequence of signed generator
//! indices: the letter `k` stands for `sigma_k` when `k > 0` and for
//! `sigma_|k|^-1` when `k < 0`.
//!
//! Text format: `"[n:] l1 l2 ..."`. Without the header the strand count is
//! the smallest one containing every letter. The printer always emits the
//! header so that printing and parsing round-trip exactly.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self> {
        if strands == 0 {
            return Err(Error::Invalid("a braid needs at least one strand".into()));
        }
        for &k in &letters {
            if k == 0 || k.unsigned_abs() as usize >= strands {
                return Err(Error::IndexOutOfRange { index: k as i64, max: strands as i64 - 1 });
            }
        }
        Ok(BraidWord { strands, letters })
    }

    pub fn identity(strands: usize) -> Self {
        assert!(strands > 0);
        BraidWord { strands, letters: Vec::new() }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Algebraic sum of the exponents.
    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|k| k.signum() as i64).sum()
    }

    pub fn inverse(&self) -> Self {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|k| -k).collect(),
        }
    }

    pub fn concat(&self, other: &BraidWord) -> Result<Self> {
        if self.strands != other.strands {
            return Err(Error::StrandMismatch { left: self.strands, right: other.strands });
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord { strands: self.strands, letters })
    }

    /// The word `w b w^-1` as a plain concatenation (no free reduction).
    pub fn markov_conjugate(&self, w: &BraidWord) -> Result<Self> {
        w.concat(self)?.concat(&w.inverse())
    }

    /// Adds a strand and appends `sigma_n^sign`, where `n` is the old strand count.
    pub fn markov_stabilize(&self, sign: i32) -> Result<Self> {
        if sign != 1 && sign != -1 {
            return Err(Error::Invalid(format!("stabilization sign must be +1 or -1, got {sign}")));
        }
        let mut letters = self.letters.clone();
        letters.push(sign * self.strands as i32);
        Ok(BraidWord { strands: self.strands + 1, letters })
    }

    /// Underlying permutation in one-line notation (values `1..=n`).
    pub fn permutation(&self) -> Vec<usize> {
        let mut perm: Vec<usize> = (1..=self.strands).collect();
        for &k in &self.letters {
            let i = k.unsigned_abs() as usize;
            perm.swap(i - 1, i);
        }
        perm
    }

    /// Number of components of the closure.
    pub fn closure_component_count(&self) -> usize {
        let perm = self.permutation();
        let mut seen = vec![false; self.strands];
        let mut cycles = 0;
        for start in 0..self.strands {
            if seen[start] {
                continue;
            }
            cycles += 1;
            let mut j = start;
            while !seen[j] {
                seen[j] = true;
                j = perm[j] - 1;
            }
        }
        cycles
    }

    /// Replaces the letter at `index` by `sigma^exponent` (same generator, same strand count).
    pub fn with_letter_power(&self, index: usize, exponent: i32) -> Result<Self> {
        let Some(&k) = self.letters.get(index) else {
            return Err(Error::IndexOutOfRange { index: index as i64, max: self.letters.len() as i64 - 1 });
        };
        let generator = k.abs();
        let mut letters = Vec::with_capacity(self.letters.len() + 1);
        letters.extend_from_slice(&self.letters[..index]);
        let sign = exponent.signum();
        for _ in 0..exponent.unsigned_abs() {
            letters.push(sign * generator);
        }
        letters.extend_from_slice(&self.letters[index + 1..]);
        Ok(BraidWord { strands: self.strands, letters })
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.strands)?;
        for k in &self.letters {
            write!(f, " {k}")?;
        }
        Ok(())
    }
}

impl FromStr for BraidWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_braid(s)
    }
}

/// Parses `"[n:] l1 l2 ..."`. Error positions are character offsets into `text`.
pub fn parse_braid(text: &str) -> Result<BraidWord> {
    let chars: Vec<char> = text.chars().collect();
    let colon = chars.iter().position(|&c| c == ':');

    let (header, body_start) = match colon {
        Some(c) => {
            let raw: String = chars[..c].iter().collect();
            let lead = raw.chars().take_while(|c| c.is_whitespace()).count();
            let trimmed = raw.trim();
            if trimmed.is_empty() {
                return Err(Error::parse(c, "missing strand count before ':'"));
            }
            let n: i64 = trimmed
                .parse()
                .map_err(|_| Error::parse(lead, format!("malformed strand count '{trimmed}'")))?;
            if n <= 0 {
                return Err(Error::parse(lead, format!("strand count must be positive, got {n}")));
            }
            (Some(n as usize), c + 1)
        }
        None => (None, 0),
    };

    let mut letters = Vec::new();
    let mut positions = Vec::new();
    let mut i = body_start;
    while i < chars.len() {
        if chars[i].is_whitespace() {
            i += 1;
            continue;
        }
        let start = i;
        while i < chars.len() && !chars[i].is_whitespace() {
            i += 1;
        }
        let token: String = chars[start..i].iter().collect();
        let k: i32 = token
            .parse()
            .map_err(|_| Error::parse(start, format!("malformed letter '{token}'")))?;
        if k == 0 {
            return Err(Error::parse(start, "letter 0 is not a generator"));
        }
        letters.push(k);
        positions.push(start);
    }

    let max = letters.iter().map(|k| k.unsigned_abs() as usize).max().unwrap_or(0);
    let strands = match header {
        Some(n) => {
            if let Some(j) = letters.iter().position(|k| k.unsigned_abs() as usize >= n) {
                return Err(Error::parse(
                    positions[j],
                    format!("letter {} exceeds {} for {} strands", letters[j], n - 1, n),
                ));
            }
            n
        }
        None => max + 1,
    };
    Ok(BraidWord { strands, letters })
}

/// One record of a braid corpus file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorpusRecord {
    /// 1-based line number in the source.
    pub line: usize,
    pub name: String,
    pub braid: Result<BraidWord>,
}

/// Parses a corpus: one `name;braidword` record per line, `#` starts a comment.
///
/// Malformed records are returned with an error instead of aborting the batch.
pub fn parse_corpus(text: &str) -> Vec<CorpusRecord> {
    let mut out = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = match raw.find('#') {
            Some(p) => &raw[..p],
            None => raw,
        };
        if line.trim().is_empty() {
            continue;
        }
        let record = match line.split_once(';') {
            Some((name, word)) => CorpusRecord {
                line: idx + 1,
                name: name.trim().to_string(),
                braid: parse_braid(word),
            },
            None => CorpusRecord {
                line: idx + 1,
                name: line.trim().to_string(),
                braid: Err(Error::parse(0, "expected 'name;braidword'")),
            },
        };
        out.push(record);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(n: usize, l: &[i32]) -> BraidWord {
        BraidWord::new(n, l.to_vec()).unwrap()
    }

    #[test]
    fn parse_examples() {
        assert_eq!(parse_braid("1 1 1").unwrap(), b(2, &[1, 1, 1]));
        assert_eq!(parse_braid("3:").unwrap(), b(3, &[]));
        assert_eq!(parse_braid("2 -1 2 -1").unwrap(), b(3, &[2, -1, 2, -1]));
        assert_eq!(parse_braid("").unwrap(), b(1, &[]));
        assert_eq!(parse_braid(" 4 : 1 -3").unwrap(), b(4, &[1, -3]));
    }

    #[test]
    fn parse_errors_carry_positions() {
        assert_eq!(parse_braid("1 x 2").unwrap_err(), Error::parse(2, "malformed letter 'x'"));
        match parse_braid("1 0") {
            Err(Error::Parse { position, .. }) => assert_eq!(position, 2),
            other => panic!("{other:?}"),
        }
        match parse_braid("2: 1 2") {
            Err(Error::Parse { position, .. }) => assert_eq!(position, 5),
            other => panic!("{other:?}"),
        }
        match parse_braid("0: ") {
            Err(Error::Parse { position, .. }) => assert_eq!(position, 0),
            other => panic!("{other:?}"),
        }
        match parse_braid("-2: 1") {
            Err(Error::Parse { message, .. }) => assert!(message.contains("positive")),
            other => panic!("{other:?}"),
        }
        assert!(parse_braid("a: 1").is_err());
        assert!(parse_braid(": 1").is_err());
    }

    #[test]
    fn print_has_header() {
        assert_eq!(b(3, &[]).to_string(), "3:");
        assert_eq!(b(3, &[2, -1]).to_string(), "3: 2 -1");
    }

    #[test]
    fn exponent_sums() {
        assert_eq!(b(2, &[1, 1, 1]).exponent_sum(), 3);
        assert_eq!(b(4, &[]).exponent_sum(), 0);
        assert_eq!(b(2, &[-1, -1, -1]).exponent_sum(), -3);
    }

    #[test]
    fn conjugation() {
        let t = b(2, &[1, 1, 1]);
        assert_eq!(t.markov_conjugate(&b(2, &[1])).unwrap(), b(2, &[1, 1, 1, 1, -1]));
        assert_eq!(t.markov_conjugate(&b(2, &[])).unwrap(), t);
        assert_eq!(b(3, &[2]).markov_conjugate(&b(3, &[1])).unwrap(), b(3, &[1, 2, -1]));
        assert!(t.markov_conjugate(&b(3, &[1])).is_err());
    }

    #[test]
    fn stabilization() {
        assert_eq!(b(2, &[1, 1, 1]).markov_stabilize(1).unwrap(), b(3, &[1, 1, 1, 2]));
        assert_eq!(b(1, &[]).markov_stabilize(1).unwrap(), b(2, &[1]));
        assert_eq!(b(2, &[1]).markov_stabilize(-1).unwrap(), b(3, &[1, -2]));
        assert!(b(2, &[1]).markov_stabilize(0).is_err());
    }

    #[test]
    fn components() {
        assert_eq!(b(2, &[1, 1, 1]).closure_component_count(), 1);
        assert_eq!(b(2, &[1, 1]).closure_component_count(), 2);
        assert_eq!(b(3, &[]).closure_component_count(), 3);
        assert_eq!(b(3, &[1, 2]).closure_component_count(), 1);
    }

    #[test]
    fn letter_power() {
        let w = b(3, &[1, -2, 1]);
        assert_eq!(w.with_letter_power(1, 2).unwrap(), b(3, &[1, 2, 2, 1]));
        assert_eq!(w.with_letter_power(1, 0).unwrap(), b(3, &[1, 1]));
        assert_eq!(w.with_letter_power(1, -1).unwrap(), b(3, &[1, -2, 1]));
        assert!(w.with_letter_power(3, 1).is_err());
    }

    #[test]
    fn corpus_records() {
        let text = "# knots\ntrefoil; 1 1 1\nhopf;2: 1 1  # link\nbroken;1 0\n\nnoname\n";
        let recs = parse_corpus(text);
        assert_eq!(recs.len(), 4);
        assert_eq!(recs[0].name, "trefoil");
        assert_eq!(recs[0].braid.as_ref().unwrap(), &b(2, &[1, 1, 1]));
        assert_eq!(recs[1].line, 3);
        assert!(recs[2].braid.is_err());
        assert!(recs[3].braid.is_err());
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn arb_braid() -> impl Strategy<Value = BraidWord> {
            (1usize..6).prop_flat_map(|n| {
                let letter = if n == 1 {
                    Just(Vec::new()).boxed()
                } else {
                    proptest::collection::vec(
                        (1..n as i32, any::<bool>()).prop_map(|(k, s)| if s { k } else { -k }),
                        0..10,
                    )
                    .boxed()
                };
                letter.prop_map(move |l| BraidWord::new(n, l).unwrap())
            })
        }

        proptest! {
            #[test]
            fn round_trip(w in arb_braid()) {
                prop_assert_eq!(parse_braid(&w.to_string()).unwrap(), w);
            }

            #[test]
            fn moves_preserve_data(w in arb_braid(), c in arb_braid(), s in prop_oneof![Just(1), Just(-1)]) {
                if c.strands() == w.strands() {
                    let conj = w.markov_conjugate(&c).unwrap();
                    prop_assert_eq!(conj.exponent_sum(), w.exponent_sum());
                    prop_assert_eq!(conj.closure_component_count(), w.closure_component_count());
                }
                let st = w.markov_stabilize(s).unwrap();
                prop_assert_eq!(st.exponent_sum(), w.exponent_sum() + s as i64);
                prop_assert_eq!(st.closure_component_count(), w.closure_component_count());
            }
        }
    }
}
