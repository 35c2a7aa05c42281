//! Two-row Burge arrays, the Burge transpose, and `burget`.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::perm::Perm;
use crate::seq::{self, Seq};

/// A two-row array whose top row is weakly increasing and Cayley, whose bottom
/// row is Cayley, and whose top row only repeats where the bottom row weakly
/// descends.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BurgeTableau {
    top: Seq,
    bottom: Seq,
}

impl BurgeTableau {
    pub fn new(top: Seq, bottom: Seq) -> Result<Self> {
        if top.len() != bottom.len() {
            return Err(Error::InvalidTableau("rows have different lengths"));
        }
        if !top.windows(2).all(|p| p[0] <= p[1]) {
            return Err(Error::InvalidTableau("top row is not weakly increasing"));
        }
        if !seq::is_cayley(&top) || !seq::is_cayley(&bottom) {
            return Err(Error::InvalidTableau("rows must be Cayley permutations"));
        }
        if !seq::wdes_set(&top).is_subset(&seq::wdes_set(&bottom)) {
            return Err(Error::InvalidTableau("top repeats where bottom ascends"));
        }
        Ok(BurgeTableau { top, bottom })
    }

    /// `(12…n; c)` for a Cayley permutation `c`.
    pub fn identity_over(c: &[u32]) -> Result<Self> {
        if !seq::is_cayley(c) {
            return Err(Error::NotCayley);
        }
        let top = Seq::from_vec_unchecked((1..=c.len() as u32).collect());
        Ok(BurgeTableau {
            top,
            bottom: Seq::from_vec_unchecked(c.to_vec()),
        })
    }

    pub fn top(&self) -> &Seq {
        &self.top
    }

    pub fn bottom(&self) -> &Seq {
        &self.bottom
    }

    /// Columns as `(top, bottom)` pairs.
    pub fn columns(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.top.iter().copied().zip(self.bottom.iter().copied())
    }

    /// Flip every column, then sort columns by top ascending and, among equal
    /// tops, by bottom descending. An involution.
    pub fn transpose(&self) -> BurgeTableau {
        let mut cols: Vec<(u32, u32)> = self.columns().map(|(t, b)| (b, t)).collect();
        cols.sort_by(|x, y| x.0.cmp(&y.0).then(y.1.cmp(&x.1)));
        let (top, bottom): (Vec<u32>, Vec<u32>) = cols.into_iter().unzip();
        BurgeTableau {
            top: Seq::from_vec_unchecked(top),
            bottom: Seq::from_vec_unchecked(bottom),
        }
    }
}

pub fn burge_transpose(t: &BurgeTableau) -> BurgeTableau {
    t.transpose()
}

/// Bottom row of `(12…n; c)^T`.
pub fn burget(c: &[u32]) -> Result<Perm> {
    let t = BurgeTableau::identity_over(c)?.transpose();
    Ok(Perm::from_vec_unchecked(t.bottom.into_vec()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hat::enumerate_mod_d_asc;
    use crate::perm::permutations;
    use alloc::collections::BTreeSet;
    use proptest::prelude::*;

    fn s(text: &str) -> Seq {
        text.parse().unwrap()
    }

    #[test]
    fn worked_transpose() {
        let t = BurgeTableau::new(s("123456789"), s("141252232")).unwrap();
        let tt = t.transpose();
        assert_eq!(tt.top(), &s("112222345"));
        assert_eq!(tt.bottom(), &s("319764825"));
        assert_eq!(tt.transpose(), t);
        let one = BurgeTableau::new(s("1"), s("1")).unwrap();
        assert_eq!(one.transpose(), one);
    }

    #[test]
    fn invalid_tableaux() {
        assert!(BurgeTableau::new(s("21"), s("12")).is_err());
        assert!(BurgeTableau::new(s("11"), s("12")).is_err());
        assert!(BurgeTableau::new(s("12"), s("1")).is_err());
        assert!(BurgeTableau::new(s("12"), s("22")).is_err());
        assert!(BurgeTableau::new(s("11"), s("21")).is_ok());
    }

    #[test]
    fn burget_examples() {
        assert_eq!(
            burget(&s("141252232")).unwrap(),
            "319764825".parse().unwrap()
        );
        assert_eq!(burget(&s("231")).unwrap(), "312".parse().unwrap());
        assert_eq!(burget(&s("123")).unwrap(), Perm::identity(3));
        assert_eq!(burget(&[1, 3]), Err(Error::NotCayley));
    }

    #[test]
    fn burget_inverts_permutations() {
        for n in 0..=6 {
            let images: BTreeSet<Perm> = permutations(n)
                .map(|p| {
                    let q = burget(&p).unwrap();
                    assert_eq!(q, p.inverse());
                    q
                })
                .collect();
            assert_eq!(images.len(), (1..=n).product::<usize>());
        }
    }

    #[test]
    fn burget_is_injective_on_modified_sequences() {
        for d in 0..=3 {
            for n in 0..=7 {
                let mods = enumerate_mod_d_asc(n, d);
                let images: BTreeSet<Perm> = mods.iter().map(|c| burget(c).unwrap()).collect();
                assert_eq!(images.len(), mods.len(), "n={n} d={d}");
            }
        }
    }

    fn tableau() -> impl Strategy<Value = BurgeTableau> {
        (0usize..=8)
            .prop_flat_map(|n| {
                (
                    proptest::collection::vec(1..=n.max(1) as u32, n),
                    proptest::collection::vec(any::<bool>(), n),
                )
            })
            .prop_map(|(raw, stay)| {
                // Compress raw values to a Cayley word.
                let mut values: Vec<u32> = raw.clone();
                values.sort_unstable();
                values.dedup();
                let bottom: Vec<u32> = raw
                    .iter()
                    .map(|v| values.binary_search(v).unwrap() as u32 + 1)
                    .collect();
                let mut top: Vec<u32> = Vec::with_capacity(bottom.len());
                for i in 0..bottom.len() {
                    let next = match top.last() {
                        None => 1,
                        Some(&t) if stay[i] && bottom[i] <= bottom[i - 1] => t,
                        Some(&t) => t + 1,
                    };
                    top.push(next);
                }
                BurgeTableau::new(Seq::new(top).unwrap(), Seq::new(bottom).unwrap()).unwrap()
            })
    }

    proptest! {
        #[test]
        fn transpose_is_an_involution(t in tableau()) {
            let tt = t.transpose();
            prop_assert!(BurgeTableau::new(tt.top().clone(), tt.bottom().clone()).is_ok());
            prop_assert_eq!(tt.transpose(), t.clone());
            let mut before: Vec<(u32, u32)> = t.columns().map(|(a, b)| (b, a)).collect();
            let mut after: Vec<(u32, u32)> = tt.columns().collect();
            before.sort_unstable();
            after.sort_unstable();
            prop_assert_eq!(before, after);
        }
    }
}
