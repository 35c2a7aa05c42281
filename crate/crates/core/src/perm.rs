//! Permutations of `[n]` in one-line notation.

use alloc::{vec, vec::Vec};
use core::{fmt, ops::Deref, str::FromStr};

use crate::error::{Error, Result};
use crate::seq::{self, Seq};

#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Perm(Vec<u32>);

impl Perm {
    pub fn new(entries: Vec<u32>) -> Result<Self> {
        if seq::is_permutation(&entries) {
            Ok(Perm(entries))
        } else {
            Err(Error::NotPermutation)
        }
    }

    pub(crate) fn from_vec_unchecked(entries: Vec<u32>) -> Self {
        debug_assert!(seq::is_permutation(&entries));
        Perm(entries)
    }

    pub fn identity(n: usize) -> Self {
        Perm((1..=n as u32).collect())
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<u32> {
        self.0
    }

    pub fn to_seq(&self) -> Seq {
        Seq::from_vec_unchecked(self.0.clone())
    }

    /// `positions()[v]` is the 0-based index of value `v`; index 0 is unused.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.0.len() + 1];
        for (i, &v) in self.0.iter().enumerate() {
            pos[v as usize] = i;
        }
        pos
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.0.len()];
        for (i, &v) in self.0.iter().enumerate() {
            inv[v as usize - 1] = i as u32 + 1;
        }
        Perm(inv)
    }
}

impl Deref for Perm {
    type Target = [u32];

    fn deref(&self) -> &[u32] {
        &self.0
    }
}

impl AsRef<[u32]> for Perm {
    fn as_ref(&self) -> &[u32] {
        &self.0
    }
}

impl TryFrom<Seq> for Perm {
    type Error = Error;

    fn try_from(s: Seq) -> Result<Self> {
        Perm::new(s.into_vec())
    }
}

impl From<Perm> for Seq {
    fn from(p: Perm) -> Seq {
        Seq::from_vec_unchecked(p.0)
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        seq::write_word(f, &self.0)
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm(")?;
        seq::write_word(f, &self.0)?;
        write!(f, ")")
    }
}

impl FromStr for Perm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Perm::new(seq::parse_word(s)?)
    }
}

/// Lexicographic stream of the permutations of `[n]` that start with a
/// fixed prefix.
#[derive(Clone, Debug)]
pub struct Permutations {
    current: Option<Vec<u32>>,
    fixed: usize,
}

impl Permutations {
    pub fn new(n: usize) -> Self {
        Permutations {
            current: Some((1..=n as u32).collect()),
            fixed: 0,
        }
    }

    /// Empty when `prefix` has repeated or out-of-range letters.
    pub fn from_prefix(n: usize, prefix: &[u32]) -> Self {
        let mut used = vec![false; n + 1];
        let valid = prefix.len() <= n
            && prefix.iter().all(|&v| {
                let ok = v >= 1 && v as usize <= n && !used[v as usize];
                if ok {
                    used[v as usize] = true;
                }
                ok
            });
        if !valid {
            return Permutations {
                current: None,
                fixed: 0,
            };
        }
        let mut start = prefix.to_vec();
        start.extend((1..=n as u32).filter(|&v| !used[v as usize]));
        Permutations {
            current: Some(start),
            fixed: prefix.len(),
        }
    }
}

fn next_permutation(v: &mut [u32]) -> bool {
    let n = v.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

impl Iterator for Permutations {
    type Item = Perm;

    fn next(&mut self) -> Option<Perm> {
        let cur = self.current.as_mut()?;
        let out = Perm(cur.clone());
        if !next_permutation(&mut cur[self.fixed..]) {
            self.current = None;
        }
        Some(out)
    }
}

pub fn permutations(n: usize) -> Permutations {
    Permutations::new(n)
}

/// Permutations of `[n]` avoiding every classical pattern in `patterns`, in
/// lexicographic order. Prefixes that already contain a pattern are pruned.
pub fn avoiders(n: usize, patterns: &[&[u32]]) -> Vec<Perm> {
    let mut out = Vec::new();
    let mut word = Vec::with_capacity(n);
    let mut used = vec![false; n + 1];
    grow_avoiders(n, patterns, &mut word, &mut used, &mut out);
    out
}

fn grow_avoiders(
    n: usize,
    patterns: &[&[u32]],
    word: &mut Vec<u32>,
    used: &mut [bool],
    out: &mut Vec<Perm>,
) {
    if word.len() == n {
        out.push(Perm(word.clone()));
        return;
    }
    for v in 1..=n as u32 {
        if used[v as usize] {
            continue;
        }
        word.push(v);
        if seq::avoids_all(word, patterns) {
            used[v as usize] = true;
            grow_avoiders(n, patterns, word, used, out);
            used[v as usize] = false;
        }
        word.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construction_and_inverse() {
        let p: Perm = "231".parse().unwrap();
        assert_eq!(p.inverse(), "312".parse().unwrap());
        assert_eq!(p.inverse().inverse(), p);
        assert_eq!(Perm::identity(3), "123".parse().unwrap());
        assert_eq!("122".parse::<Perm>(), Err(Error::NotPermutation));
        assert_eq!(Perm::identity(0), Perm::default());
    }

    #[test]
    fn lexicographic_permutations() {
        let all: Vec<Perm> = permutations(3).collect();
        let text: Vec<_> = all.iter().map(|p| alloc::format!("{p}")).collect();
        assert_eq!(text, ["123", "132", "213", "231", "312", "321"]);
        assert_eq!(permutations(0).count(), 1);
        assert_eq!(permutations(6).count(), 720);
        let stitched: Vec<Perm> = (1..=4u32)
            .flat_map(|a| Permutations::from_prefix(4, &[a]))
            .collect();
        assert_eq!(stitched, permutations(4).collect::<Vec<_>>());
        assert_eq!(Permutations::from_prefix(3, &[2, 2]).count(), 0);
    }

    #[test]
    fn avoiders_match_filter() {
        let pats: [&[u32]; 2] = [&[2, 1, 3], &[3, 1, 2]];
        for n in 0..=7 {
            let pruned = avoiders(n, &pats);
            let filtered: Vec<Perm> = permutations(n)
                .filter(|p| seq::avoids_all(p, &pats))
                .collect();
            assert_eq!(pruned, filtered);
        }
        // Catalan numbers.
        let counts: Vec<usize> = (0..=8).map(|n| avoiders(n, &[&[2, 1, 3]]).len()).collect();
        assert_eq!(counts, [1, 1, 2, 5, 14, 42, 132, 429, 1430]);
    }
}
