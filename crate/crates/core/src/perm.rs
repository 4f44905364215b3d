//! Permutations, patterns and copy tuples.
//!
//! A [`Permutation`] stores 0-based values internally. The public
//! constructors and [`CopyTuple`] positions use 1-based numbering, the way
//! permutations are usually written down.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Largest pattern length handled by the library.
pub const MAX_PATTERN_LEN: usize = 5;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    values: Vec<u32>,
}

impl Permutation {
    /// Builds a permutation from 1-based values.
    pub fn new(one_based: &[u32]) -> Result<Self> {
        let n = one_based.len();
        let mut seen = vec![false; n];
        let mut values = Vec::with_capacity(n);
        for (i, &v) in one_based.iter().enumerate() {
            if v == 0 || v as usize > n {
                return Err(Error::NotAPermutation(format!(
                    "value {v} at position {} is outside 1..={n}",
                    i + 1
                )));
            }
            if std::mem::replace(&mut seen[v as usize - 1], true) {
                return Err(Error::NotAPermutation(format!("value {v} repeats")));
            }
            values.push(v - 1);
        }
        Ok(Self { values })
    }

    /// Builds a permutation from 0-based values.
    pub fn from_zero_based(values: Vec<u32>) -> Result<Self> {
        let one: Vec<u32> = values.iter().map(|&v| v.wrapping_add(1)).collect();
        Self::new(&one)?;
        Ok(Self { values })
    }

    pub fn identity(n: usize) -> Self {
        Self { values: (0..n as u32).collect() }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// 0-based value at 0-based position `i`.
    #[inline]
    pub fn value(&self, i: usize) -> u32 {
        self.values[i]
    }

    /// 0-based values in position order.
    pub fn values(&self) -> &[u32] {
        &self.values
    }

    pub fn to_one_based(&self) -> Vec<u32> {
        self.values.iter().map(|v| v + 1).collect()
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.len()];
        for (i, &v) in self.values.iter().enumerate() {
            inv[v as usize] = i as u32;
        }
        Self { values: inv }
    }

    pub fn reversed(&self) -> Self {
        Self { values: self.values.iter().rev().copied().collect() }
    }

    pub fn complemented(&self) -> Self {
        let top = self.len() as u32 - 1;
        Self { values: self.values.iter().map(|v| top - v).collect() }
    }

    /// Rank-compresses an arbitrary sequence of distinct integers.
    pub fn from_distinct<T: Ord + Copy>(seq: &[T]) -> Result<Self> {
        let mut order: Vec<usize> = (0..seq.len()).collect();
        order.sort_by_key(|&i| seq[i]);
        let mut values = vec![0u32; seq.len()];
        for (rank, w) in order.windows(2).enumerate() {
            if seq[w[0]] == seq[w[1]] {
                let (a, b) = (w[0].min(w[1]), w[0].max(w[1]));
                return Err(Error::DuplicateValue { first: a + 1, second: b + 1 });
            }
            values[w[1]] = rank as u32 + 1;
        }
        if let Some(&first) = order.first() {
            values[first] = 0;
        }
        Ok(Self { values })
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({:?})", self.to_one_based())
    }
}

/// How [`ingest`] treats repeated input values.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum TieBreak {
    /// Repeated values are rejected.
    #[default]
    Reject,
    /// Equal values are ordered by their position.
    Index,
}

/// Rank-reduces a sequence of reals to a permutation.
pub fn ingest(raw: &[f64]) -> Result<Permutation> {
    ingest_with(raw, TieBreak::Reject)
}

pub fn ingest_with(raw: &[f64], ties: TieBreak) -> Result<Permutation> {
    if let Some(i) = raw.iter().position(|x| !x.is_finite()) {
        return Err(Error::NonFinite(i + 1));
    }
    let mut order: Vec<usize> = (0..raw.len()).collect();
    order.sort_by(|&a, &b| raw[a].total_cmp(&raw[b]).then(a.cmp(&b)));
    let mut values = vec![0u32; raw.len()];
    for (rank, &i) in order.iter().enumerate() {
        values[i] = rank as u32;
    }
    if ties == TieBreak::Reject {
        for w in order.windows(2) {
            // -0.0 and 0.0 count as equal here even though total_cmp splits them.
            if raw[w[0]] == raw[w[1]] {
                return Err(Error::DuplicateValue { first: w[0] + 1, second: w[1] + 1 });
            }
        }
    }
    Ok(Permutation { values })
}

/// Parses whitespace- or comma-separated reals. Blank lines and lines
/// starting with `#` are skipped.
pub fn parse_sequence(text: &str) -> Result<Vec<f64>> {
    let mut out = Vec::new();
    for (ln, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        for tok in line.split(|c: char| c == ',' || c.is_whitespace()).filter(|t| !t.is_empty()) {
            let x: f64 = tok.parse().map_err(|_| Error::Parse {
                line: ln + 1,
                reason: format!("cannot parse {tok:?} as a number"),
            })?;
            out.push(x);
        }
    }
    Ok(out)
}

/// A pattern of length 1 to 5, stored as 1-based values.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Pattern {
    len: u8,
    order: [u8; MAX_PATTERN_LEN],
}

impl Pattern {
    pub fn new(one_based: &[u8]) -> Result<Self> {
        let k = one_based.len();
        if k == 0 {
            return Err(Error::InvalidPattern("empty pattern".into()));
        }
        if k > MAX_PATTERN_LEN {
            return Err(Error::PatternTooLong { len: k, max: MAX_PATTERN_LEN });
        }
        let mut seen = [false; MAX_PATTERN_LEN];
        let mut order = [0u8; MAX_PATTERN_LEN];
        for (i, &v) in one_based.iter().enumerate() {
            if v == 0 || v as usize > k || std::mem::replace(&mut seen[v as usize - 1], true) {
                return Err(Error::InvalidPattern(format!("{one_based:?} is not a permutation of 1..={k}")));
            }
            order[i] = v;
        }
        Ok(Self { len: k as u8, order })
    }

    /// All patterns of length `k` in lexicographic order.
    pub fn all(k: usize) -> Vec<Pattern> {
        assert!((1..=MAX_PATTERN_LEN).contains(&k));
        let mut cur: Vec<u8> = (1..=k as u8).collect();
        let mut out = vec![Pattern::new(&cur).unwrap()];
        while next_permutation(&mut cur) {
            out.push(Pattern::new(&cur).unwrap());
        }
        out
    }

    pub fn len(&self) -> usize {
        self.len as usize
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// 1-based values in position order.
    pub fn order(&self) -> &[u8] {
        &self.order[..self.len()]
    }

    /// 1-based value of the element at 0-based position `i`.
    pub fn at(&self, i: usize) -> u8 {
        self.order[i]
    }

    /// 0-based position of the element with 1-based value `v`.
    pub fn position_of(&self, v: u8) -> usize {
        self.order().iter().position(|&x| x == v).expect("value in pattern")
    }

    /// Index of this pattern in the lexicographic list of its length.
    pub fn rank(&self) -> usize {
        lehmer_rank(self.order())
    }

    pub fn to_permutation(&self) -> Permutation {
        Permutation::new(&self.order().iter().map(|&v| v as u32).collect::<Vec<_>>()).unwrap()
    }

    pub fn from_permutation(p: &Permutation) -> Result<Self> {
        let v: Vec<u8> = p.to_one_based().iter().map(|&x| x.min(255) as u8).collect();
        Self::new(&v)
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for v in self.order() {
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Pattern({self})")
    }
}

impl FromStr for Pattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let digits: Option<Vec<u8>> = s.chars().map(|c| c.to_digit(10).map(|d| d as u8)).collect();
        match digits {
            Some(d) => Pattern::new(&d),
            None => Err(Error::InvalidPattern(format!("{s:?} is not a digit string"))),
        }
    }
}

/// Lexicographic rank of a sequence of distinct keys among all orderings.
pub(crate) fn lehmer_rank<T: Ord>(seq: &[T]) -> usize {
    let k = seq.len();
    let mut rank = 0;
    for i in 0..k {
        let smaller_after = seq[i + 1..].iter().filter(|x| **x < seq[i]).count();
        rank = rank * (k - i) + smaller_after;
    }
    rank
}

fn next_permutation(a: &mut [u8]) -> bool {
    let Some(i) = (1..a.len()).rev().find(|&i| a[i - 1] < a[i]) else {
        return false;
    };
    let j = (i..a.len()).rev().find(|&j| a[j] > a[i - 1]).unwrap();
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

/// Positions of one copy of a pattern, 1-based and strictly increasing.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CopyTuple {
    len: u8,
    positions: [u32; MAX_PATTERN_LEN],
}

impl CopyTuple {
    pub fn new(one_based: &[u32]) -> Self {
        assert!(one_based.len() <= MAX_PATTERN_LEN);
        let mut positions = [0; MAX_PATTERN_LEN];
        positions[..one_based.len()].copy_from_slice(one_based);
        Self { len: one_based.len() as u8, positions }
    }

    pub(crate) fn from_zero_based(zero: &[u32]) -> Self {
        let mut positions = [0; MAX_PATTERN_LEN];
        for (d, s) in positions.iter_mut().zip(zero) {
            *d = s + 1;
        }
        Self { len: zero.len() as u8, positions }
    }

    pub fn positions(&self) -> &[u32] {
        &self.positions[..self.len as usize]
    }

    pub fn len(&self) -> usize {
        self.len as usize
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// True when the positions are increasing and order-isomorphic to `pattern`.
    pub fn is_copy_of(&self, p: &Permutation, pattern: &Pattern) -> bool {
        let pos = self.positions();
        if pos.len() != pattern.len()
            || pos.iter().any(|&x| x == 0 || x as usize > p.len())
            || pos.windows(2).any(|w| w[0] >= w[1])
        {
            return false;
        }
        let vals: Vec<u32> = pos.iter().map(|&x| p.value(x as usize - 1)).collect();
        (0..vals.len()).all(|a| {
            (0..vals.len()).all(|b| (vals[a] < vals[b]) == (pattern.at(a) < pattern.at(b)))
        })
    }
}

impl fmt::Display for CopyTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, x) in self.positions().iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for CopyTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}
