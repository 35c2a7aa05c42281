//! The modification operator, the d-hat and max-hat maps, their inverse,
//! hat orbits, and enumerators for the modified families.

use alloc::{collections::BTreeSet, vec::Vec};

use crate::error::{Error, Result};
use crate::perm::Perm;
use crate::seq::{self, Growth, Seq, Words};

/// Increment every entry left of `j` that is at least `w[j]`.
fn lift_before(w: &mut [u32], j: usize) {
    let a = w[j - 1];
    for c in &mut w[..j - 1] {
        if *c >= a {
            *c += 1;
        }
    }
}

/// Increment every entry of `w` that is at least `a`.
fn lift_all(w: &mut [u32], a: u32) {
    for c in w.iter_mut() {
        if *c >= a {
            *c += 1;
        }
    }
}

/// The modification `M(w, j)`: entries strictly left of position `j` that are
/// at least `a_j` go up by one.
pub fn modify(w: &[u32], j: usize) -> Result<Seq> {
    if j == 0 || j > w.len() {
        return Err(Error::PositionOutOfRange {
            position: j,
            len: w.len(),
        });
    }
    let mut out = w.to_vec();
    lift_before(&mut out, j);
    Seq::new(out)
}

/// Fold of `M` over the d-ascent list of `w`, computed once on `w` itself.
pub fn hat_d(w: &[u32], d: usize) -> Result<Seq> {
    if !seq::is_d_ascent_seq(w, d) {
        return Err(Error::NotDAscent { d });
    }
    let mut out = w.to_vec();
    for j in seq::d_asc_set(w, d).iter() {
        lift_before(&mut out, j);
    }
    Ok(Seq::from_vec_unchecked(out))
}

/// `hat_{n-1}` on an inversion sequence of length `n`.
pub fn hat_max(w: &[u32]) -> Result<Perm> {
    if !seq::is_inversion(w) {
        return Err(Error::NotInversion);
    }
    let image = hat_d(w, w.len().saturating_sub(1))?;
    Ok(Perm::from_vec_unchecked(image.into_vec()))
}

/// Inverse of every `hat_d`. Scans from the right; when the current last
/// letter is a leftmost copy, the entries above it in the prefix come down by
/// one. Fails if the result is not an inversion sequence.
pub fn hat_inv(g: &[u32]) -> Result<Seq> {
    let mut cur = g.to_vec();
    for k in (1..=cur.len()).rev() {
        let v = cur[k - 1];
        let (prefix, _) = cur.split_at_mut(k - 1);
        if !prefix.contains(&v) {
            for c in prefix.iter_mut() {
                if *c > v {
                    *c -= 1;
                }
            }
        }
    }
    if seq::is_inversion(&cur) {
        Ok(Seq::from_vec_unchecked(cur))
    } else {
        Err(Error::NotModinv)
    }
}

/// A source word together with its d-hat image.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HatImage {
    pub source: Seq,
    pub d: usize,
    pub image: Seq,
}

impl HatImage {
    pub fn new(source: Seq, d: usize) -> Result<Self> {
        let image = hat_d(&source, d)?;
        Ok(HatImage { source, d, image })
    }
}

/// The distinct images `hat_d(w)` for `min_d(w) <= d <= n`, each tagged with
/// the least `d` producing it, in increasing `d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HOrbit {
    pub source: Seq,
    pub images: Vec<(usize, Seq)>,
}

impl HOrbit {
    pub fn contains(&self, g: &[u32]) -> bool {
        self.images.iter().any(|(_, img)| &img[..] == g)
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Seq> {
        self.images.iter().map(|(_, img)| img)
    }
}

pub fn h_orbit(w: &[u32]) -> Result<HOrbit> {
    let start = seq::min_d(w)?;
    let mut images: Vec<(usize, Seq)> = Vec::new();
    for d in start..=w.len() {
        let img = hat_d(w, d)?;
        if !images.iter().any(|(_, seen)| *seen == img) {
            images.push((d, img));
        }
    }
    Ok(HOrbit {
        source: Seq::from_vec_unchecked(w.to_vec()),
        images,
    })
}

/// `A_{d,n}` in lexicographic order.
pub fn enumerate_d_asc(n: usize, d: usize) -> Words {
    Words::new(n, Growth::DAscent(d))
}

/// Children of a modified d-ascent sequence `b` one letter longer, built
/// without reference to the unmodified word: append `a <= last - d` as is,
/// otherwise lift the entries `>= a` first.
pub fn mod_d_asc_children(b: &[u32], d: usize) -> impl Iterator<Item = Vec<u32>> + '_ {
    let last = b.last().copied();
    let max = b.iter().copied().max().unwrap_or(0);
    (1..=max + 1).map(move |a| {
        let mut child = b.to_vec();
        match last {
            Some(l) if a as usize + d <= l as usize => {}
            _ => lift_all(&mut child, a),
        }
        child.push(a);
        child
    })
}

/// All length-`n` modified d-ascent sequences descending from `seed`, sorted.
pub fn extend_mod_d_asc(seed: &[u32], n: usize, d: usize) -> Vec<Seq> {
    let mut out = Vec::new();
    if seed.len() <= n {
        grow_mod(seed.to_vec(), n, d, &mut out);
    }
    out.sort_unstable();
    out
}

fn grow_mod(w: Vec<u32>, n: usize, d: usize, out: &mut Vec<Seq>) {
    if w.len() == n {
        out.push(Seq::from_vec_unchecked(w));
        return;
    }
    for child in mod_d_asc_children(&w, d) {
        grow_mod(child, n, d, out);
    }
}

/// `hat_d(A_{d,n})`, grown by the recursive rule, in lexicographic order.
pub fn enumerate_mod_d_asc(n: usize, d: usize) -> Vec<Seq> {
    if n == 0 {
        return alloc::vec![Seq::empty()];
    }
    extend_mod_d_asc(&[1], n, d)
}

/// Union of the hat orbits of `words`.
pub fn orbit_union<I>(words: I) -> BTreeSet<Seq>
where
    I: IntoIterator,
    I::Item: AsRef<[u32]>,
{
    let mut set = BTreeSet::new();
    for w in words {
        let w = w.as_ref();
        let start = seq::min_d(w).expect("orbit_union needs inversion sequences");
        for d in start..=w.len() {
            set.insert(hat_d(w, d).expect("d >= min_d"));
        }
    }
    set
}

/// `Modinv_n` in lexicographic order.
pub fn enumerate_modinv(n: usize) -> Vec<Seq> {
    orbit_union(seq::inversion_seqs(n)).into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::permutations;
    use crate::seq::{asc_set, d_asc_set, inversion_seqs, nub, rl_min_pairs, wdes_set};
    use alloc::collections::BTreeMap;
    use proptest::prelude::*;

    fn s(text: &str) -> Seq {
        text.parse().unwrap()
    }

    fn chain(w: &str, js: &[usize]) -> Seq {
        js.iter().fold(s(w), |cur, &j| modify(&cur, j).unwrap())
    }

    #[test]
    fn modification_chains() {
        assert_eq!(chain("121242232", &[1, 2, 4]), s("131242232"));
        assert_eq!(chain("12131532", &[1, 2, 3]), s("23131532"));
        for n in 1..=5 {
            for w in seq::endofunctions(n) {
                assert_eq!(modify(&w, 1).unwrap(), w);
            }
        }
        assert_eq!(
            modify(&s("12"), 3),
            Err(Error::PositionOutOfRange {
                position: 3,
                len: 2
            })
        );
        assert_eq!(
            modify(&s("12"), 0),
            Err(Error::PositionOutOfRange {
                position: 0,
                len: 2
            })
        );
    }

    #[test]
    fn hat_worked_examples() {
        assert_eq!(hat_d(&s("121242232"), 0).unwrap(), s("141252232"));
        assert_eq!(hat_d(&s("12131532"), 2).unwrap(), s("35141642"));
        assert_eq!(hat_d(&s("11"), 1).unwrap(), s("21"));
        assert_eq!(hat_max(&s("1224315")).unwrap(), "2637415".parse().unwrap());
        assert_eq!(hat_max(&s("122431")).unwrap(), "253641".parse().unwrap());
        assert_eq!(hat_max(&s("1")).unwrap(), "1".parse().unwrap());
        assert_eq!(hat_d(&s("113"), 0), Err(Error::NotDAscent { d: 0 }));
        assert_eq!(hat_max(&s("21")), Err(Error::NotInversion));
        assert_eq!(hat_d(&Seq::empty(), 0).unwrap(), Seq::empty());
    }

    #[test]
    fn hat_inverse_examples() {
        assert_eq!(hat_inv(&s("141252232")).unwrap(), s("121242232"));
        assert_eq!(hat_inv(&s("35141642")).unwrap(), s("12131532"));
        assert_eq!(hat_inv(&s("21")).unwrap(), s("11"));
        assert_eq!(hat_inv(&s("22")), Err(Error::NotModinv));
    }

    #[test]
    fn image_is_cayley_with_nub_equal_to_d_ascents() {
        for d in 0..=3 {
            for n in 0..=7 {
                for w in enumerate_d_asc(n, d) {
                    let img = hat_d(&w, d).unwrap();
                    let dasc = d_asc_set(&w, d);
                    assert!(seq::is_cayley(&img));
                    assert_eq!(nub(&img), dasc);
                    assert_eq!(img.max_value() as usize, dasc.len());
                    assert!(d_asc_set(&img, d).is_subset(&nub(&img)));
                }
            }
        }
    }

    #[test]
    fn last_two_letters() {
        for d in 0..=3 {
            for n in 2..=7 {
                for w in enumerate_d_asc(n, d) {
                    let img = hat_d(&w, d).unwrap();
                    let (p, l) = (w[n - 2], w[n - 1]);
                    let lifted = (p as usize) < l as usize + d && l <= p;
                    let expected = if lifted { (p + 1, l) } else { (p, l) };
                    assert_eq!((img[n - 2], img[n - 1]), expected, "{w:?} d={d}");
                }
            }
        }
    }

    #[test]
    fn recursive_growth_equals_hat_image() {
        for d in 0..=3 {
            for n in 0..=7 {
                let mut images: Vec<Seq> = enumerate_d_asc(n, d)
                    .map(|w| hat_d(&w, d).unwrap())
                    .collect();
                images.sort_unstable();
                let before = images.len();
                images.dedup();
                assert_eq!(images.len(), before, "hat_{d} not injective at n={n}");
                assert_eq!(enumerate_mod_d_asc(n, d), images, "n={n} d={d}");
            }
        }
        let text = |v: Vec<Seq>| v.iter().map(|w| alloc::format!("{w}")).collect::<Vec<_>>();
        assert_eq!(text(enumerate_mod_d_asc(2, 1)), ["12", "21"]);
        assert_eq!(text(enumerate_mod_d_asc(2, 0)), ["11", "12"]);
    }

    #[test]
    fn hat_inv_round_trip() {
        for d in 0..=3 {
            for n in 0..=7 {
                for w in enumerate_d_asc(n, d) {
                    assert_eq!(hat_inv(&hat_d(&w, d).unwrap()).unwrap(), w);
                }
            }
        }
    }

    #[test]
    fn hat_stabilizes_from_n_minus_one() {
        for n in 1..=7 {
            for w in inversion_seqs(n) {
                let top = hat_d(&w, n - 1).unwrap();
                for d in n..=n + 2 {
                    assert_eq!(hat_d(&w, d).unwrap(), top);
                }
            }
        }
    }

    #[test]
    fn orbit_examples() {
        let o = h_orbit(&s("11")).unwrap();
        assert_eq!(o.images, [(0, s("11")), (1, s("21"))]);
        assert_eq!(h_orbit(&s("12")).unwrap().images, [(0, s("12"))]);
        assert_eq!(h_orbit(&s("1")).unwrap().images, [(0, s("1"))]);
        assert_eq!(h_orbit(&s("21")), Err(Error::NotInversion));
    }

    #[test]
    fn orbits_are_disjoint_and_preserve_statistics() {
        for n in 0..=6 {
            let mut owner: BTreeMap<Seq, Seq> = BTreeMap::new();
            for w in inversion_seqs(n) {
                let orbit = h_orbit(&w).unwrap();
                for g in orbit.iter() {
                    assert!(
                        owner.insert(g.clone(), w.clone()).is_none(),
                        "{g:?} in two orbits"
                    );
                    assert_eq!(hat_inv(g).unwrap(), w);
                    assert_eq!(asc_set(g), asc_set(&w));
                    assert_eq!(wdes_set(g), wdes_set(&w));
                    assert_eq!(rl_min_pairs(g), rl_min_pairs(&w));
                    assert!(asc_set(g).is_subset(&nub(g)));
                }
            }
        }
    }

    #[test]
    fn modinv_small_counts() {
        let counts: Vec<usize> = (0..=6).map(|n| enumerate_modinv(n).len()).collect();
        assert_eq!(counts, [1, 1, 3, 10, 43, 224, 1396]);
        assert_eq!(enumerate_modinv(2), [s("11"), s("12"), s("21")]);
    }

    #[test]
    fn modified_ascent_sequences_are_cayley_with_ascents_at_nub() {
        for n in 0..=6 {
            let by_filter: Vec<Seq> = seq::cayley_perms(n)
                .filter(|c| asc_set(c) == nub(c))
                .collect();
            assert_eq!(enumerate_mod_d_asc(n, 0), by_filter);
        }
    }

    #[test]
    fn hat_max_is_a_bijection_onto_permutations() {
        for n in 0..=7 {
            let mut images: Vec<Perm> = inversion_seqs(n).map(|w| hat_max(&w).unwrap()).collect();
            images.sort_unstable();
            assert_eq!(images, permutations(n).collect::<Vec<_>>());
        }
    }

    fn d_ascent_word() -> impl Strategy<Value = (Vec<u32>, usize)> {
        (0usize..=3, 0usize..=10).prop_flat_map(|(d, n)| {
            proptest::collection::vec(any::<u32>(), n).prop_map(move |raw| {
                // Fold arbitrary letters into the allowed range at each step.
                let mut w: Vec<u32> = Vec::with_capacity(raw.len());
                for r in raw {
                    let bound = Growth::DAscent(d).bound(&w, 0);
                    w.push(1 + r % bound);
                }
                (w, d)
            })
        })
    }

    proptest! {
        #[test]
        fn lifting_keeps_ascents(w in proptest::collection::vec(1u32..8, 0..10), a in 0u32..9, d in 0usize..4) {
            let mut lifted = w.clone();
            lift_all(&mut lifted, a);
            prop_assert!(d_asc_set(&lifted, d).is_subset(&d_asc_set(&w, d)));
            prop_assert_eq!(asc_set(&lifted), asc_set(&w));
        }

        #[test]
        fn hat_round_trips((w, d) in d_ascent_word()) {
            let img = hat_d(&w, d).unwrap();
            prop_assert!(seq::is_cayley(&img));
            prop_assert_eq!(&hat_inv(&img).unwrap()[..], &w[..]);
            prop_assert!(h_orbit(&w).unwrap().contains(&img));
        }
    }
}
