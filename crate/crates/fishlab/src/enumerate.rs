//! Exhaustive listing of the sequence and permutation families, optionally
//! fanned out over a thread pool by two-letter prefix.

use std::collections::BTreeSet;

use clap::ValueEnum;
use rayon::prelude::*;

use fishlab_core::fishburn::{is_d_fishburn, subdiagonal, RunMode};
use fishlab_core::hat::{enumerate_mod_d_asc, extend_mod_d_asc, orbit_union};
use fishlab_core::perm::Permutations;
use fishlab_core::seq::{Growth, Words};
use fishlab_core::{Perm, Seq};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    /// d-ascent sequences
    Dasc,
    /// modified d-ascent sequences
    Modasc,
    /// modified inversion sequences
    Modinv,
    /// weak descent sequences
    Wdesc,
    /// d-Fishburn permutations
    Fishburn,
    /// ir-subdiagonal permutations
    Irsub,
    /// dr-subdiagonal permutations
    Drsub,
}

impl Family {
    pub fn needs_d(self) -> bool {
        matches!(self, Family::Dasc | Family::Modasc | Family::Fishburn)
    }
}

fn pool(threads: usize) -> rayon::ThreadPool {
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads.max(1))
        .build()
        .expect("thread pool")
}

/// Words of a growth family, split by their first two letters. Concatenating
/// the per-prefix streams in prefix order keeps lexicographic order.
fn grown(n: usize, growth: Growth) -> Vec<Seq> {
    if n < 2 {
        return Words::new(n, growth).collect();
    }
    let prefixes: Vec<Seq> = Words::new(2, growth).collect();
    prefixes
        .par_iter()
        .map(|p| Words::from_prefix(n, growth, p).collect::<Vec<_>>())
        .collect::<Vec<_>>()
        .concat()
}

fn filtered_perms(n: usize, keep: impl Fn(&Perm) -> bool + Sync) -> Vec<Perm> {
    if n < 2 {
        return Permutations::new(n).filter(|p| keep(p)).collect();
    }
    let prefixes: Vec<[u32; 2]> = (1..=n as u32)
        .flat_map(|a| (1..=n as u32).filter(move |&b| b != a).map(move |b| [a, b]))
        .collect();
    prefixes
        .par_iter()
        .map(|p| {
            Permutations::from_prefix(n, p)
                .filter(|q| keep(q))
                .collect::<Vec<_>>()
        })
        .collect::<Vec<_>>()
        .concat()
}

/// Serialized members of `family` at size `n`, in lexicographic order.
pub fn enumerate(family: Family, n: usize, d: usize, threads: usize) -> Vec<String> {
    pool(threads).install(|| match family {
        Family::Dasc => to_strings(grown(n, Growth::DAscent(d))),
        Family::Wdesc => to_strings(grown(n, Growth::WeakDescent)),
        Family::Modasc => {
            if n < 2 {
                return to_strings(enumerate_mod_d_asc(n, d));
            }
            let seeds = enumerate_mod_d_asc(2, d);
            let mut all: Vec<Seq> = seeds
                .par_iter()
                .map(|s| extend_mod_d_asc(s, n, d))
                .collect::<Vec<_>>()
                .concat();
            all.sort_unstable();
            to_strings(all)
        }
        Family::Modinv => {
            if n < 2 {
                return to_strings(orbit_union(Words::new(n, Growth::Inversion)));
            }
            let prefixes: Vec<Seq> = Words::new(2, Growth::Inversion).collect();
            let union: BTreeSet<Seq> = prefixes
                .par_iter()
                .map(|p| orbit_union(Words::from_prefix(n, Growth::Inversion, p)))
                .reduce(BTreeSet::new, |mut a, b| {
                    a.extend(b);
                    a
                });
            to_strings(union)
        }
        Family::Fishburn => to_strings(filtered_perms(n, |p| is_d_fishburn(p, d))),
        Family::Irsub => to_strings(filtered_perms(n, |p| subdiagonal(p, RunMode::Increasing))),
        Family::Drsub => to_strings(filtered_perms(n, |p| subdiagonal(p, RunMode::Decreasing))),
    })
}

fn to_strings<T: ToString>(items: impl IntoIterator<Item = T>) -> Vec<String> {
    items.into_iter().map(|x| x.to_string()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_listings() {
        assert_eq!(
            enumerate(Family::Dasc, 3, 0, 1),
            ["111", "112", "121", "122", "123"]
        );
        assert_eq!(enumerate(Family::Modinv, 2, 0, 1), ["11", "12", "21"]);
        assert_eq!(enumerate(Family::Dasc, 0, 1, 1), [""]);
        assert_eq!(enumerate(Family::Modasc, 2, 1, 1), ["12", "21"]);
        assert_eq!(enumerate(Family::Fishburn, 3, 0, 1).len(), 5);
    }

    #[test]
    fn thread_count_does_not_change_output() {
        for family in Family::value_variants() {
            for n in 0..=6 {
                let one = enumerate(*family, n, 1, 1);
                assert_eq!(one, enumerate(*family, n, 1, 4), "{family:?} n={n}");
                let mut sorted = one.clone();
                sorted.sort();
                assert_eq!(one, sorted, "{family:?} n={n} not sorted");
            }
        }
    }
}
