//! Words over the positive integers, their ascent-type statistics and the
//! membership predicates for every sequence family in the crate.
//!
//! Positions and values are 1-based. Statistics are free functions over
//! `&[u32]` so they apply equally to a [`Seq`], to a prefix of one, or to an
//! intermediate word that is not itself an endofunction.

use alloc::{string::String, vec, vec::Vec};
use core::{fmt, ops::Deref, str::FromStr};

use crate::error::{Error, Result};

/// An endofunction of `[n]` written as the word `a_1 … a_n`.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Seq(Vec<u32>);

impl Seq {
    /// Wraps `entries`, checking `1 <= a_i <= n`.
    pub fn new(entries: Vec<u32>) -> Result<Self> {
        let len = entries.len();
        if let Some((i, &value)) = entries
            .iter()
            .enumerate()
            .find(|&(_, &v)| v == 0 || v as usize > len)
        {
            return Err(Error::NotEndofunction {
                position: i + 1,
                value,
                len,
            });
        }
        Ok(Seq(entries))
    }

    /// The empty word ε.
    pub const fn empty() -> Self {
        Seq(Vec::new())
    }

    pub(crate) fn from_vec_unchecked(entries: Vec<u32>) -> Self {
        debug_assert!(is_endofunction(&entries));
        Seq(entries)
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<u32> {
        self.0
    }

    /// The entry at 1-based `position`.
    pub fn at(&self, position: usize) -> u32 {
        self.0[position - 1]
    }

    /// Largest entry, or 0 for ε.
    pub fn max_value(&self) -> u32 {
        self.0.iter().copied().max().unwrap_or(0)
    }
}

impl Deref for Seq {
    type Target = [u32];

    fn deref(&self) -> &[u32] {
        &self.0
    }
}

impl AsRef<[u32]> for Seq {
    fn as_ref(&self) -> &[u32] {
        &self.0
    }
}

/// Digit string when every entry is a single digit, comma-separated otherwise.
/// ε renders as the empty string.
impl fmt::Display for Seq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_word(f, &self.0)
    }
}

impl fmt::Debug for Seq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Seq(")?;
        write_word(f, &self.0)?;
        write!(f, ")")
    }
}

pub(crate) fn write_word(f: &mut fmt::Formatter<'_>, w: &[u32]) -> fmt::Result {
    if w.len() <= 9 && w.iter().all(|&v| v <= 9) {
        for v in w {
            write!(f, "{v}")?;
        }
    } else {
        for (i, v) in w.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
    }
    Ok(())
}

/// Parses a digit string (`"1312"`) or comma-separated integers (`"1,3,10"`)
/// without checking the endofunction condition.
pub fn parse_word(s: &str) -> Result<Vec<u32>> {
    let s = s.trim();
    if s.is_empty() || s == "ε" {
        return Ok(Vec::new());
    }
    let bad = || Error::Parse(String::from(s));
    if s.contains(',') {
        s.split(',')
            .map(|t| t.trim().parse::<u32>().map_err(|_| bad()))
            .collect()
    } else {
        s.chars().map(|c| c.to_digit(10).ok_or_else(bad)).collect()
    }
}

impl FromStr for Seq {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Seq::new(parse_word(s)?)
    }
}

/// A strictly increasing list of 1-based positions.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct IndexSet(Vec<usize>);

impl IndexSet {
    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, position: usize) -> bool {
        self.0.binary_search(&position).is_ok()
    }

    pub fn is_subset(&self, other: &IndexSet) -> bool {
        self.0.iter().all(|&p| other.contains(p))
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }
}

impl FromIterator<usize> for IndexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut v: Vec<usize> = iter.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        IndexSet(v)
    }
}

impl<const N: usize> From<[usize; N]> for IndexSet {
    fn from(positions: [usize; N]) -> Self {
        positions.into_iter().collect()
    }
}

/// Right-left minima as `(position, value)` pairs, in increasing position.
#[derive(Clone, Default, PartialEq, Eq, Hash, Debug)]
pub struct MinPairs(Vec<(usize, u32)>);

impl MinPairs {
    pub fn as_slice(&self) -> &[(usize, u32)] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl<const N: usize> From<[(usize, u32); N]> for MinPairs {
    fn from(pairs: [(usize, u32); N]) -> Self {
        MinPairs(pairs.to_vec())
    }
}

/// Whether 1-based position `i` is a d-ascent: `i = 1` or `a_i > a_{i-1} - d`.
#[inline]
pub fn is_d_ascent_at(w: &[u32], i: usize, d: usize) -> bool {
    i == 1 || w[i - 1] as usize + d > w[i - 2] as usize
}

pub fn asc_set(w: &[u32]) -> IndexSet {
    d_asc_set(w, 0)
}

pub fn d_asc_set(w: &[u32], d: usize) -> IndexSet {
    IndexSet((1..=w.len()).filter(|&i| is_d_ascent_at(w, i, d)).collect())
}

/// Number of d-ascents.
pub fn dasc(w: &[u32], d: usize) -> usize {
    (1..=w.len()).filter(|&i| is_d_ascent_at(w, i, d)).count()
}

pub fn asc(w: &[u32]) -> usize {
    dasc(w, 0)
}

/// Positions `i >= 2` with `a_i <= a_{i-1}`.
pub fn wdes_set(w: &[u32]) -> IndexSet {
    IndexSet((2..=w.len()).filter(|&i| w[i - 1] <= w[i - 2]).collect())
}

pub fn wdes(w: &[u32]) -> usize {
    w.windows(2).filter(|p| p[1] <= p[0]).count()
}

/// Positions of the leftmost copy of each value.
pub fn nub(w: &[u32]) -> IndexSet {
    let max = w.iter().copied().max().unwrap_or(0) as usize;
    let mut seen = vec![false; max + 1];
    let mut positions = Vec::new();
    for (i, &v) in w.iter().enumerate() {
        if !seen[v as usize] {
            seen[v as usize] = true;
            positions.push(i + 1);
        }
    }
    IndexSet(positions)
}

pub fn rl_min_pairs(w: &[u32]) -> MinPairs {
    let mut pairs = Vec::new();
    let mut min_right = u32::MAX;
    for (i, &v) in w.iter().enumerate().rev() {
        if v < min_right {
            pairs.push((i + 1, v));
            min_right = v;
        }
    }
    pairs.reverse();
    MinPairs(pairs)
}

/// Positions `i` with `a_i = a_{i+1}`.
pub fn flat_steps(w: &[u32]) -> IndexSet {
    IndexSet((1..w.len()).filter(|&i| w[i - 1] == w[i]).collect())
}

pub fn is_endofunction(w: &[u32]) -> bool {
    w.iter().all(|&v| v >= 1 && v as usize <= w.len())
}

/// Value set is exactly `{1, …, max}`.
pub fn is_cayley(w: &[u32]) -> bool {
    if !is_endofunction(w) {
        return false;
    }
    let mut seen = vec![false; w.len() + 1];
    for &v in w {
        seen[v as usize] = true;
    }
    let max = w.iter().copied().max().unwrap_or(0) as usize;
    seen[1..=max].iter().all(|&s| s)
}

pub fn is_permutation(w: &[u32]) -> bool {
    let mut seen = vec![false; w.len() + 1];
    w.iter().all(|&v| {
        let ok = v >= 1 && v as usize <= w.len() && !seen[v as usize];
        if ok {
            seen[v as usize] = true;
        }
        ok
    })
}

/// `a_i <= i` for every `i`.
pub fn is_inversion(w: &[u32]) -> bool {
    w.iter()
        .enumerate()
        .all(|(i, &v)| v >= 1 && v as usize <= i + 1)
}

/// `a_i <= 1 + dasc(a_1 … a_{i-1})` for every `i`.
pub fn is_d_ascent_seq(w: &[u32], d: usize) -> bool {
    let mut count = 0;
    for i in 1..=w.len() {
        let a = w[i - 1];
        if a == 0 || a as usize > 1 + count {
            return false;
        }
        if is_d_ascent_at(w, i, d) {
            count += 1;
        }
    }
    true
}

/// `a_i <= 1 + wdes(a_1 … a_{i-1})` for every `i`.
pub fn is_weak_descent_seq(w: &[u32]) -> bool {
    let mut count = 0;
    for i in 1..=w.len() {
        let a = w[i - 1];
        if a == 0 || a as usize > 1 + count {
            return false;
        }
        if i >= 2 && a <= w[i - 2] {
            count += 1;
        }
    }
    true
}

/// Least `d` for which the inversion sequence `w` is a d-ascent sequence.
/// Never exceeds `w.len()`.
pub fn min_d(w: &[u32]) -> Result<usize> {
    if !is_inversion(w) {
        return Err(Error::NotInversion);
    }
    Ok((0..=w.len())
        .find(|&d| is_d_ascent_seq(w, d))
        .unwrap_or(w.len()))
}

/// Whether some subsequence of `w` is order-isomorphic to `p`, equal letters
/// of `p` matching equal letters of `w`. The empty pattern is always contained.
pub fn contains_word_pattern(w: &[u32], p: &[u32]) -> bool {
    if p.len() > w.len() {
        return false;
    }
    let mut chosen = Vec::with_capacity(p.len());
    embed(w, p, 0, &mut chosen)
}

fn embed(w: &[u32], p: &[u32], from: usize, chosen: &mut Vec<u32>) -> bool {
    let k = chosen.len();
    if k == p.len() {
        return true;
    }
    let last_start = w.len() - (p.len() - k);
    for i in from..=last_start {
        let v = w[i];
        if chosen
            .iter()
            .zip(p)
            .all(|(&c, &q)| v.cmp(&c) == p[k].cmp(&q))
        {
            chosen.push(v);
            if embed(w, p, i + 1, chosen) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}

/// Avoids every pattern in `patterns`.
pub fn avoids_all(w: &[u32], patterns: &[&[u32]]) -> bool {
    patterns.iter().all(|p| !contains_word_pattern(w, p))
}

/// A word family grown one rightmost letter at a time, where the letters
/// allowed after a prefix are exactly `1..=bound(prefix)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Growth {
    Endofunction,
    Inversion,
    DAscent(usize),
    WeakDescent,
}

impl Growth {
    /// Largest letter allowed after `prefix` in a word of final length `n`.
    pub fn bound(self, prefix: &[u32], n: usize) -> u32 {
        match self {
            Growth::Endofunction => n as u32,
            Growth::Inversion => prefix.len() as u32 + 1,
            Growth::DAscent(d) => 1 + dasc(prefix, d) as u32,
            Growth::WeakDescent => 1 + wdes(prefix) as u32,
        }
    }

    pub fn contains(self, w: &[u32]) -> bool {
        (1..=w.len()).all(|i| {
            let a = w[i - 1];
            a >= 1 && a <= self.bound(&w[..i - 1], w.len())
        })
    }
}

/// Lexicographic depth-first stream of the length-`n` words of a [`Growth`]
/// family, optionally restricted to those starting with a fixed prefix.
#[derive(Clone, Debug)]
pub struct Words {
    n: usize,
    growth: Growth,
    word: Vec<u32>,
    bounds: Vec<u32>,
    fixed: usize,
    started: bool,
    done: bool,
}

impl Words {
    pub fn new(n: usize, growth: Growth) -> Self {
        Words {
            n,
            growth,
            word: Vec::with_capacity(n),
            bounds: Vec::with_capacity(n),
            fixed: 0,
            started: false,
            done: false,
        }
    }

    /// Words of the family that begin with `prefix`; empty if `prefix` is not
    /// itself a valid start.
    pub fn from_prefix(n: usize, growth: Growth, prefix: &[u32]) -> Self {
        let mut words = Words::new(n, growth);
        let valid = prefix.len() <= n
            && (1..=prefix.len()).all(|i| {
                let a = prefix[i - 1];
                a >= 1 && a <= growth.bound(&prefix[..i - 1], n)
            });
        if valid {
            words.word.extend_from_slice(prefix);
            words.bounds.extend_from_slice(prefix);
            words.fixed = prefix.len();
        } else {
            words.done = true;
        }
        words
    }

    fn fill(&mut self) -> bool {
        while self.word.len() < self.n {
            let b = self.growth.bound(&self.word, self.n);
            if b == 0 {
                return false;
            }
            self.bounds.push(b);
            self.word.push(1);
        }
        true
    }

    fn advance(&mut self) -> bool {
        while self.word.len() > self.fixed {
            let last = self.word.len() - 1;
            if self.word[last] < self.bounds[last] {
                self.word[last] += 1;
                return true;
            }
            self.word.pop();
            self.bounds.pop();
        }
        false
    }
}

impl Iterator for Words {
    type Item = Seq;

    fn next(&mut self) -> Option<Seq> {
        if self.done {
            return None;
        }
        if self.started && !self.advance() {
            self.done = true;
            return None;
        }
        self.started = true;
        loop {
            if self.fill() {
                return Some(Seq(self.word.clone()));
            }
            if !self.advance() {
                self.done = true;
                return None;
            }
        }
    }
}

pub fn endofunctions(n: usize) -> Words {
    Words::new(n, Growth::Endofunction)
}

pub fn inversion_seqs(n: usize) -> Words {
    Words::new(n, Growth::Inversion)
}

pub fn d_ascent_seqs(n: usize, d: usize) -> Words {
    Words::new(n, Growth::DAscent(d))
}

pub fn weak_descent_seqs(n: usize) -> Words {
    Words::new(n, Growth::WeakDescent)
}

pub fn cayley_perms(n: usize) -> impl Iterator<Item = Seq> {
    endofunctions(n).filter(|w| is_cayley(w))
}
