//! Unproven restrictions of `hat_max` to pattern classes of ascent
//! sequences. Reports are informational and never fail.

use std::collections::BTreeSet;

use fishlab_core::hat::{enumerate_d_asc, hat_max};
use fishlab_core::perm::avoiders;
use fishlab_core::seq::contains_word_pattern;
use fishlab_core::Perm;

use crate::report::{set_digest, CheckReport};

/// `(ascent-sequence pattern, permutation patterns of the candidate image)`.
pub const RESTRICTIONS: [(&[u32], &[&[u32]]); 4] = [
    (&[1, 2, 3], &[&[1, 2, 3], &[2, 1, 3]]),
    (&[1, 1, 2], &[&[2, 1, 3], &[3, 1, 2]]),
    (&[1, 2, 1], &[&[2, 1, 3], &[2, 3, 1]]),
    (&[2, 1, 3], &[&[2, 1, 3], &[4, 5, 1, 2, 3]]),
];

fn word(p: &[u32]) -> String {
    p.iter().map(u32::to_string).collect()
}

pub fn explore(n_max: usize) -> Vec<CheckReport> {
    let mut out = Vec::new();
    for (pattern, image) in RESTRICTIONS {
        let name = format!(
            "explore.hat_max_{}_to_{}",
            word(pattern),
            image.iter().map(|p| word(p)).collect::<Vec<_>>().join("_")
        );
        for n in 1..=n_max {
            out.push(
                CheckReport::timed(name.as_str(), Some(n), Some(0), || {
                    let mapped: BTreeSet<Perm> = enumerate_d_asc(n, 0)
                        .filter(|w| !contains_word_pattern(w, pattern))
                        .map(|w| hat_max(&w).expect("ascent sequences are inversion sequences"))
                        .collect();
                    (set_digest(avoiders(n, image)), set_digest(mapped))
                })
                .exploratory(),
            );
        }
    }
    out
}
