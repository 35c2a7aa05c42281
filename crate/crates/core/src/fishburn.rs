//! d-active elements, d-Fishburn permutations, the patterns `f_d`, `σ_d` and
//! the mesh pattern 𝔞, the active-site insertion map `Φ_d`, and subdiagonal
//! permutations.

use alloc::{vec, vec::Vec};

use crate::error::{Error, Result};
use crate::perm::Perm;
use crate::seq;

/// Activity flags indexed by value (index 0 unused). `p` must be a permutation.
///
/// 1 is active. For `k >= 2`, `k` is inactive exactly when it sits left of
/// `k - 1` with at least `d` active values `v <= k - 2` strictly between them.
fn active_flags(p: &[u32], d: usize) -> Vec<bool> {
    let n = p.len();
    let mut pos = vec![0usize; n + 1];
    for (i, &v) in p.iter().enumerate() {
        pos[v as usize] = i;
    }
    let mut active = vec![false; n + 1];
    if n >= 1 {
        active[1] = true;
    }
    for k in 2..=n {
        let (left, right) = (pos[k], pos[k - 1]);
        active[k] = left > right
            || (1..=k - 2)
                .filter(|&v| active[v] && left < pos[v] && pos[v] < right)
                .count()
                < d;
    }
    active
}

/// `Act_d(p)` as a sorted list of values.
pub fn d_active_elements(p: &Perm, d: usize) -> Vec<u32> {
    let flags = active_flags(p, d);
    (1..=p.len() as u32)
        .filter(|&v| flags[v as usize])
        .collect()
}

/// Every ascent bottom is d-active.
pub fn is_d_fishburn(p: &Perm, d: usize) -> bool {
    let flags = active_flags(p, d);
    p.windows(2).all(|w| w[0] > w[1] || flags[w[0] as usize])
}

/// An adjacent rise `p_i < p_{i+1}` with `p_i` d-inactive and `p_i - 1`
/// somewhere right of `p_{i+1}`.
pub fn contains_fishburn_pattern(p: &Perm, d: usize) -> bool {
    let flags = active_flags(p, d);
    let pos = p.positions();
    p.windows(2).enumerate().any(|(i, w)| {
        w[0] < w[1] && !flags[w[0] as usize] && w[0] >= 2 && pos[w[0] as usize - 1] > i + 1
    })
}

fn longest_increasing(values: impl Iterator<Item = u32>) -> usize {
    let mut tails: Vec<u32> = Vec::new();
    for v in values {
        match tails.binary_search(&v) {
            Ok(_) => {}
            Err(k) if k == tails.len() => tails.push(v),
            Err(k) => tails[k] = v,
        }
    }
    tails.len()
}

/// An adjacent rise `p_i < p_{i+1}` followed later by `p_j = p_i - 1`, with an
/// increasing run of `d` values below `p_j` strictly between `i + 1` and `j`.
pub fn contains_sigma(p: &Perm, d: usize) -> bool {
    let pos = p.positions();
    p.windows(2).enumerate().any(|(i, w)| {
        if w[0] >= w[1] || w[0] < 2 {
            return false;
        }
        let target = w[0] - 1;
        let j = pos[target as usize];
        j > i + 1 && longest_increasing(p[i + 2..j].iter().copied().filter(|&v| v < target)) >= d
    })
}

/// An adjacent descent `p_i > p_{i+1}` with no earlier entry strictly between
/// the two values.
pub fn contains_mesh_a(p: &Perm) -> bool {
    p.windows(2).enumerate().any(|(i, w)| {
        let (hi, lo) = (w[0], w[1]);
        hi > lo && !p[..i].iter().any(|&c| lo < c && c < hi)
    })
}

/// Gaps of `p` (0 = before the first entry, `g` = right after the `g`-th)
/// that accept the next maximum: gap 0 and the gap after each d-active entry.
fn active_gaps(p: &[u32], d: usize) -> Vec<usize> {
    let flags = active_flags(p, d);
    let mut gaps = vec![0];
    gaps.extend(
        (0..p.len())
            .filter(|&i| flags[p[i] as usize])
            .map(|i| i + 1),
    );
    gaps
}

/// The d-active sites of a permutation, labelled 1, 2, … from left to right.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ActiveSiteMap {
    perm: Perm,
    d: usize,
    active: Vec<u32>,
    gaps: Vec<usize>,
}

impl ActiveSiteMap {
    pub fn new(perm: Perm, d: usize) -> Self {
        let active = d_active_elements(&perm, d);
        let gaps = active_gaps(&perm, d);
        ActiveSiteMap {
            perm,
            d,
            active,
            gaps,
        }
    }

    pub fn perm(&self) -> &Perm {
        &self.perm
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn active_elements(&self) -> &[u32] {
        &self.active
    }

    /// Gap positions of the sites, in label order.
    pub fn site_gaps(&self) -> &[usize] {
        &self.gaps
    }

    pub fn site_count(&self) -> usize {
        self.gaps.len()
    }

    pub fn gap_of_label(&self, label: u32) -> Result<usize> {
        label
            .checked_sub(1)
            .and_then(|i| self.gaps.get(i as usize).copied())
            .ok_or(Error::SiteOutOfRange {
                label,
                sites: self.gaps.len(),
            })
    }

    pub fn label_of_gap(&self, gap: usize) -> Option<u32> {
        self.gaps
            .iter()
            .position(|&g| g == gap)
            .map(|i| i as u32 + 1)
    }
}

/// Builds a permutation from a d-ascent sequence: the `k`-th letter names the
/// active site of the current permutation that receives `k`.
pub fn phi_d(w: &[u32], d: usize) -> Result<Perm> {
    if !seq::is_d_ascent_seq(w, d) {
        return Err(Error::NotDAscent { d });
    }
    let mut p: Vec<u32> = Vec::with_capacity(w.len());
    for (k, &a) in w.iter().enumerate() {
        let gaps = active_gaps(&p, d);
        let gap = *gaps.get(a as usize - 1).ok_or(Error::SiteOutOfRange {
            label: a,
            sites: gaps.len(),
        })?;
        p.insert(gap, k as u32 + 1);
    }
    Ok(Perm::from_vec_unchecked(p))
}

/// Undoes the last step of [`phi_d`]: removes the maximum and reports the
/// label of the parent's site it occupied.
pub fn phi_d_parent(p: &Perm, d: usize) -> Result<(Perm, u32)> {
    if p.is_empty() {
        return Err(Error::Empty);
    }
    if !is_d_fishburn(p, d) {
        return Err(Error::NotFishburn { d });
    }
    let n = p.len() as u32;
    let gap = p
        .iter()
        .position(|&v| v == n)
        .expect("permutation holds its maximum");
    let parent: Vec<u32> = p.iter().copied().filter(|&v| v != n).collect();
    let label = active_gaps(&parent, d)
        .iter()
        .position(|&g| g == gap)
        .ok_or(Error::NotFishburn { d })?;
    Ok((Perm::from_vec_unchecked(parent), label as u32 + 1))
}

/// Maximal runs used by [`subdiagonal`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RunMode {
    Increasing,
    Decreasing,
}

/// Maximal increasing (or decreasing) runs, left to right.
pub fn runs(p: &[u32], mode: RunMode) -> Vec<&[u32]> {
    let breaks = |a: u32, b: u32| match mode {
        RunMode::Increasing => a > b,
        RunMode::Decreasing => a < b,
    };
    let mut out = Vec::new();
    let mut start = 0;
    for i in 1..p.len() {
        if breaks(p[i - 1], p[i]) {
            out.push(&p[start..i]);
            start = i;
        }
    }
    if !p.is_empty() {
        out.push(&p[start..]);
    }
    out
}

/// Every entry of the `i`-th run is at most `n + 1 - i`.
pub fn subdiagonal(p: &Perm, mode: RunMode) -> bool {
    let n = p.len() as u32;
    runs(p, mode)
        .iter()
        .enumerate()
        .all(|(i, block)| block.iter().all(|&c| c + i as u32 <= n))
}

/// Index of the increasing run holding the entry at 1-based position `i`,
/// read off the prefix as `i + 1 - asc(p_1 … p_i)`.
pub fn increasing_block_index(p: &[u32], i: usize) -> usize {
    i + 1 - seq::asc(&p[..i])
}

/// `p⁺a`: entries `>= a` go up by one, then `a` is appended.
pub fn append_lifted(p: &Perm, a: u32) -> Result<Perm> {
    if a == 0 || a as usize > p.len() + 1 {
        return Err(Error::SiteOutOfRange {
            label: a,
            sites: p.len() + 1,
        });
    }
    let mut out: Vec<u32> = p.iter().map(|&c| if c >= a { c + 1 } else { c }).collect();
    out.push(a);
    Ok(Perm::from_vec_unchecked(out))
}
