//! The generating rules Ω and Θ, their level sizes, and the label
//! isomorphism between them.

use alloc::{collections::BTreeMap, vec::Vec};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TreeLabel(pub u32, pub u32);

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Rule {
    /// Root `(1,1)`; `(a,ℓ)` has children `(a,1)…(a,ℓ-1)` and `(a+1,ℓ+1)…(a+1,a+1)`.
    Omega,
    /// Root `(0,1)`; `(w,u)` has children `(w+1,1)…(w+1,u)` and `(w,u+1)…(w,w+1)`.
    Theta,
}

impl Rule {
    pub fn root(self) -> TreeLabel {
        match self {
            Rule::Omega => TreeLabel(1, 1),
            Rule::Theta => TreeLabel(0, 1),
        }
    }

    pub fn is_valid(self, TreeLabel(x, y): TreeLabel) -> bool {
        match self {
            Rule::Omega => 1 <= y && y <= x,
            Rule::Theta => 1 <= y && y <= x + 1,
        }
    }

    pub fn children(self, label: TreeLabel) -> Result<Vec<TreeLabel>> {
        if !self.is_valid(label) {
            return Err(Error::InvalidLabel(label.0, label.1));
        }
        let TreeLabel(x, y) = label;
        Ok(match self {
            Rule::Omega => (1..y)
                .map(|l| TreeLabel(x, l))
                .chain((y + 1..=x + 1).map(|l| TreeLabel(x + 1, l)))
                .collect(),
            Rule::Theta => (1..=y)
                .map(|u| TreeLabel(x + 1, u))
                .chain((y + 1..=x + 1).map(|u| TreeLabel(x, u)))
                .collect(),
        })
    }
}

/// Number of nodes on each of the first `depth` levels, the root's level first.
pub fn gen_tree_counts(rule: Rule, depth: usize) -> Result<Vec<u64>> {
    if depth == 0 {
        return Err(Error::ZeroDepth);
    }
    let mut level: BTreeMap<TreeLabel, u64> = BTreeMap::new();
    level.insert(rule.root(), 1);
    let mut sizes = Vec::with_capacity(depth);
    for k in 0..depth {
        sizes.push(level.values().sum());
        if k + 1 == depth {
            break;
        }
        let mut next = BTreeMap::new();
        for (&label, &mult) in &level {
            for child in rule.children(label)? {
                *next.entry(child).or_insert(0) += mult;
            }
        }
        level = next;
    }
    Ok(sizes)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IsoDirection {
    OmegaToTheta,
    ThetaToOmega,
}

/// `(a,ℓ) ↦ (a-1, a-ℓ+1)` and its inverse `(w,u) ↦ (w+1, w+2-u)`.
pub fn tree_iso_map(label: TreeLabel, direction: IsoDirection) -> Result<TreeLabel> {
    let TreeLabel(x, y) = label;
    match direction {
        IsoDirection::OmegaToTheta if Rule::Omega.is_valid(label) => {
            Ok(TreeLabel(x - 1, x - y + 1))
        }
        IsoDirection::ThetaToOmega if Rule::Theta.is_valid(label) => {
            Ok(TreeLabel(x + 1, x + 2 - y))
        }
        _ => Err(Error::InvalidLabel(x, y)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hat::enumerate_d_asc;
    use crate::seq::{flat_steps, weak_descent_seqs};

    #[test]
    fn level_sizes_match_sequence_counts() {
        let omega = gen_tree_counts(Rule::Omega, 8).unwrap();
        let primitive: Vec<u64> = (1..=8)
            .map(|n| {
                enumerate_d_asc(n, 0)
                    .filter(|w| flat_steps(w).is_empty())
                    .count() as u64
            })
            .collect();
        assert_eq!(omega, primitive);
        let theta = gen_tree_counts(Rule::Theta, 8).unwrap();
        let wd: Vec<u64> = (1..=8)
            .map(|n| weak_descent_seqs(n).count() as u64)
            .collect();
        assert_eq!(theta, wd);
        assert_eq!(omega[0], 1);
        assert_eq!(theta[0], 1);
        assert_eq!(gen_tree_counts(Rule::Omega, 0), Err(Error::ZeroDepth));
    }

    #[test]
    fn iso_examples() {
        assert_eq!(
            tree_iso_map(TreeLabel(1, 1), IsoDirection::OmegaToTheta),
            Ok(TreeLabel(0, 1))
        );
        assert_eq!(
            tree_iso_map(TreeLabel(3, 2), IsoDirection::OmegaToTheta),
            Ok(TreeLabel(2, 2))
        );
        assert_eq!(
            tree_iso_map(TreeLabel(2, 3), IsoDirection::OmegaToTheta),
            Err(Error::InvalidLabel(2, 3))
        );
        assert_eq!(
            tree_iso_map(TreeLabel(0, 2), IsoDirection::ThetaToOmega),
            Err(Error::InvalidLabel(0, 2))
        );
        assert!(Rule::Omega.children(TreeLabel(0, 1)).is_err());
    }

    #[test]
    fn iso_maps_children_to_children() {
        for a in 1..=6 {
            for l in 1..=a {
                let x = TreeLabel(a, l);
                let y = tree_iso_map(x, IsoDirection::OmegaToTheta).unwrap();
                assert_eq!(tree_iso_map(y, IsoDirection::ThetaToOmega), Ok(x));
                let mut mapped: Vec<TreeLabel> = Rule::Omega
                    .children(x)
                    .unwrap()
                    .into_iter()
                    .map(|c| tree_iso_map(c, IsoDirection::OmegaToTheta).unwrap())
                    .collect();
                let mut expected = Rule::Theta.children(y).unwrap();
                mapped.sort();
                expected.sort();
                assert_eq!(mapped, expected, "{x:?}");
            }
        }
    }
}
