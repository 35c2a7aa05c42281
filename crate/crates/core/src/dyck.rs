//! Dyck paths, the bijection from 213-avoiding permutations, and factor
//! counting.

use alloc::{string::String, vec, vec::Vec};
use core::{fmt, str::FromStr};

use crate::error::{Error, Result};
use crate::perm::Perm;
use crate::seq;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Step {
    U,
    D,
}

/// A balanced word over `{U, D}` whose prefixes never dip below the axis.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct DyckPath(Vec<Step>);

impl DyckPath {
    pub fn new(steps: Vec<Step>) -> Result<Self> {
        let mut height: i64 = 0;
        for s in &steps {
            height += if *s == Step::U { 1 } else { -1 };
            if height < 0 {
                return Err(Error::InvalidDyckPath);
            }
        }
        if height != 0 {
            return Err(Error::InvalidDyckPath);
        }
        Ok(DyckPath(steps))
    }

    pub fn steps(&self) -> &[Step] {
        &self.0
    }

    pub fn semilength(&self) -> usize {
        self.0.len() / 2
    }
}

/// Length of the prefix up to and including the first return to the axis.
fn first_return(steps: &[Step]) -> usize {
    let mut height = 0i64;
    for (i, s) in steps.iter().enumerate() {
        height += if *s == Step::U { 1 } else { -1 };
        if height == 0 {
            return i + 1;
        }
    }
    0
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.0 {
            f.write_str(if *s == Step::U { "U" } else { "D" })?;
        }
        Ok(())
    }
}

impl FromStr for DyckPath {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let steps = s
            .trim()
            .chars()
            .map(|c| match c {
                'U' => Ok(Step::U),
                'D' => Ok(Step::D),
                _ => Err(Error::Parse(String::from(s))),
            })
            .collect::<Result<Vec<_>>>()?;
        DyckPath::new(steps)
    }
}

/// All Dyck paths of semilength `n`, lexicographic with `U < D`.
pub fn dyck_paths(n: usize) -> Vec<DyckPath> {
    fn grow(n: usize, up: usize, down: usize, cur: &mut Vec<Step>, out: &mut Vec<DyckPath>) {
        if down == n {
            out.push(DyckPath(cur.clone()));
            return;
        }
        if up < n {
            cur.push(Step::U);
            grow(n, up + 1, down, cur, out);
            cur.pop();
        }
        if down < up {
            cur.push(Step::D);
            grow(n, up, down + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    grow(n, 0, 0, &mut Vec::with_capacity(2 * n), &mut out);
    out
}

/// `p_1 L R ↦ U φ(L) D φ(R)`, where `L` holds the entries above `p_1`.
pub fn phi_213(p: &Perm) -> Result<DyckPath> {
    if seq::contains_word_pattern(p, &[2, 1, 3]) {
        return Err(Error::Contains213);
    }
    let mut steps = Vec::with_capacity(2 * p.len());
    encode(p, &mut steps);
    Ok(DyckPath(steps))
}

fn encode(w: &[u32], out: &mut Vec<Step>) {
    let Some((&first, rest)) = w.split_first() else {
        return;
    };
    // In a 213-avoider the larger entries after p_1 all precede the smaller ones.
    let split = rest.iter().position(|&v| v < first).unwrap_or(rest.len());
    out.push(Step::U);
    encode(&rest[..split], out);
    out.push(Step::D);
    encode(&rest[split..], out);
}

pub fn phi_213_inverse(r: &DyckPath) -> Perm {
    let mut out = Vec::with_capacity(r.semilength());
    decode(&r.0, 1, &mut out);
    Perm::from_vec_unchecked(out)
}

/// Writes the permutation of `path` using values starting at `base`.
fn decode(path: &[Step], base: u32, out: &mut Vec<u32>) {
    if path.is_empty() {
        return;
    }
    let ret = first_return(path);
    let inner = &path[1..ret - 1];
    let tail = &path[ret..];
    let below = (tail.len() / 2) as u32;
    out.push(base + below);
    decode(inner, base + below + 1, out);
    decode(tail, base, out);
}

/// Occurrences of the factor `D D U^{d+1}`.
pub fn count_ddu_factor(r: &DyckPath, d: usize) -> usize {
    let mut factor = vec![Step::D, Step::D];
    factor.extend(core::iter::repeat_n(Step::U, d + 1));
    r.0.windows(factor.len())
        .filter(|w| *w == &factor[..])
        .count()
}
