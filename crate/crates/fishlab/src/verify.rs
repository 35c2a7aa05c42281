//! Invariant suites behind `fishlab verify`. Every check pairs an expected
//! value from one route with the actual value from another.

use std::collections::{BTreeMap, BTreeSet};

use clap::ValueEnum;

use fishlab_core::burge::{burget, BurgeTableau};
use fishlab_core::dyck::{count_ddu_factor, dyck_paths, phi_213, phi_213_inverse, DyckPath, Step};
use fishlab_core::fishburn::{
    append_lifted, contains_fishburn_pattern, contains_mesh_a, contains_sigma, d_active_elements,
    increasing_block_index, is_d_fishburn, phi_d, phi_d_parent, runs, subdiagonal, RunMode,
};
use fishlab_core::hat::{
    enumerate_d_asc, enumerate_mod_d_asc, enumerate_modinv, h_orbit, hat_d, hat_inv, hat_max,
};
use fishlab_core::perm::{avoiders, permutations};
use fishlab_core::seq::{
    self, asc, asc_set, cayley_perms, d_asc_set, flat_steps, inversion_seqs, nub, rl_min_pairs,
    wdes, wdes_set, weak_descent_seqs,
};
use fishlab_core::series::{fishburn_213_counts, series_q, BigRational, TruncSeries};
use fishlab_core::tree::{gen_tree_counts, tree_iso_map, IsoDirection, Rule, TreeLabel};
use fishlab_core::{Perm, Seq};

use crate::fixtures::fixtures;
use crate::report::{set_digest, CheckReport, Digest};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Hat,
    Orbit,
    Stats,
    Burge,
    Phi,
    Subdiag,
    Trees,
    Dyck,
    Series,
    All,
}

impl Suite {
    const EACH: [Suite; 9] = [
        Suite::Hat,
        Suite::Orbit,
        Suite::Stats,
        Suite::Burge,
        Suite::Phi,
        Suite::Subdiag,
        Suite::Trees,
        Suite::Dyck,
        Suite::Series,
    ];
}

pub fn run_suite(suite: Suite, n_max: usize, d_max: usize) -> Vec<CheckReport> {
    match suite {
        Suite::All => Suite::EACH
            .iter()
            .flat_map(|s| run_suite(*s, n_max, d_max))
            .collect(),
        Suite::Hat => hat_suite(n_max, d_max),
        Suite::Orbit => orbit_suite(n_max),
        Suite::Stats => stats_suite(n_max),
        Suite::Burge => burge_suite(n_max, d_max),
        Suite::Phi => phi_suite(n_max, d_max),
        Suite::Subdiag => subdiag_suite(n_max),
        Suite::Trees => trees_suite(n_max),
        Suite::Dyck => dyck_suite(n_max, d_max),
        Suite::Series => series_suite(n_max, d_max),
    }
}

fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

fn count<T>(items: impl IntoIterator<Item = T>, pred: impl Fn(&T) -> bool) -> usize {
    items.into_iter().filter(|x| pred(x)).count()
}

/// Fixture computations for the named maps.
fn worked(maps: &[&str]) -> Vec<CheckReport> {
    fixtures()
        .worked
        .iter()
        .filter(|w| maps.contains(&w.map.as_str()))
        .map(|w| {
            let d = w.d.unwrap_or(0);
            let actual = match w.map.as_str() {
                "hat_d" => parse_seq(&w.input)
                    .and_then(|s| hat_d(&s, d).ok())
                    .map(|s| s.to_string()),
                "hat_max" => parse_seq(&w.input)
                    .and_then(|s| hat_max(&s).ok())
                    .map(|p| p.to_string()),
                "hat_inv" => parse_seq(&w.input)
                    .and_then(|s| hat_inv(&s).ok())
                    .map(|s| s.to_string()),
                "burget" => parse_seq(&w.input)
                    .and_then(|s| burget(&s).ok())
                    .map(|p| p.to_string()),
                "phi_d" => parse_seq(&w.input)
                    .and_then(|s| phi_d(&s, d).ok())
                    .map(|p| p.to_string()),
                "d_active" => w.input.parse::<Perm>().ok().map(|p| {
                    d_active_elements(&p, d)
                        .iter()
                        .map(u32::to_string)
                        .collect::<String>()
                }),
                "ddu_factors" => w
                    .input
                    .parse::<DyckPath>()
                    .ok()
                    .map(|r| count_ddu_factor(&r, d).to_string()),
                _ => None,
            };
            CheckReport::new(
                format!("worked.{}", w.map),
                Some(w.input.chars().count()),
                w.d,
                w.output.as_str(),
                actual.unwrap_or_else(|| "error".into()),
            )
        })
        .collect()
}

fn parse_seq(s: &str) -> Option<Seq> {
    s.parse().ok()
}

fn hat_suite(n_max: usize, d_max: usize) -> Vec<CheckReport> {
    let mut out = worked(&["hat_d", "hat_max", "hat_inv"]);
    for n in 0..=n_max {
        for d in 0..=d_max {
            let (n_, d_) = (Some(n), Some(d));
            let asc_seqs: Vec<Seq> = enumerate_d_asc(n, d).collect();
            let images: Vec<Seq> = asc_seqs.iter().map(|w| hat_d(w, d).unwrap()).collect();
            let total = asc_seqs.len();

            if n <= d + 3 {
                let expected = if n <= d + 2 {
                    factorial(n)
                } else {
                    factorial(d + 3) - factorial(d)
                };
                out.push(CheckReport::new("hat.cardinality", n_, d_, expected, total));
            }
            out.push(CheckReport::timed("hat.injective", n_, d_, || {
                (total, images.iter().collect::<BTreeSet<_>>().len())
            }));
            out.push(CheckReport::timed(
                "hat.image_equals_recursion",
                n_,
                d_,
                || (set_digest(enumerate_mod_d_asc(n, d)), set_digest(&images)),
            ));
            out.push(CheckReport::timed("hat.cayley_nub_max", n_, d_, || {
                let ok = asc_seqs.iter().zip(&images).filter(|(w, img)| {
                    let dasc = d_asc_set(w, d);
                    seq::is_cayley(img)
                        && nub(img) == dasc
                        && img.max_value() as usize == dasc.len()
                });
                (total, ok.count())
            }));
            if n >= 2 {
                out.push(CheckReport::timed("hat.last_two_letters", n_, d_, || {
                    let ok = asc_seqs.iter().zip(&images).filter(|(w, img)| {
                        let (p, l) = (w[n - 2], w[n - 1]);
                        let lifted = (p as usize) < l as usize + d && l <= p;
                        (img[n - 2], img[n - 1]) == (if lifted { p + 1 } else { p }, l)
                    });
                    (total, ok.count())
                }));
            }
            out.push(CheckReport::timed("hat.dasc_within_nub", n_, d_, || {
                (
                    total,
                    count(&images, |img| d_asc_set(img, d).is_subset(&nub(img))),
                )
            }));
            out.push(CheckReport::timed("hat.inverse_round_trip", n_, d_, || {
                let ok = asc_seqs
                    .iter()
                    .zip(&images)
                    .filter(|(w, img)| hat_inv(img).as_ref() == Ok(*w));
                (total, ok.count())
            }));
            if d == 0 {
                out.push(CheckReport::timed(
                    "hat.modasc0_is_asc_equals_nub",
                    n_,
                    d_,
                    || {
                        (
                            set_digest(&images),
                            set_digest(cayley_perms(n).filter(|c| asc_set(c) == nub(c))),
                        )
                    },
                ));
            }
        }
        let (n_, d_) = (Some(n), None);
        if let Some(&expected) = fixtures().modinv.counts.get(n) {
            out.push(CheckReport::timed("hat.modinv_count", n_, d_, || {
                (expected, enumerate_modinv(n).len())
            }));
        }
        out.push(CheckReport::timed("hat.max_is_bijection", n_, d_, || {
            let images: BTreeSet<Perm> = inversion_seqs(n).map(|w| hat_max(&w).unwrap()).collect();
            (factorial(n), images.len())
        }));
    }
    out
}

fn orbit_suite(n_max: usize) -> Vec<CheckReport> {
    let mut out = Vec::new();
    for n in 0..=n_max {
        let n_ = Some(n);
        let orbits: Vec<_> = inversion_seqs(n).map(|w| h_orbit(&w).unwrap()).collect();
        let members: usize = orbits.iter().map(|o| o.len()).sum();
        out.push(CheckReport::timed("orbit.disjoint", n_, None, || {
            let union: BTreeSet<&Seq> = orbits.iter().flat_map(|o| o.iter()).collect();
            (members, union.len())
        }));
        out.push(CheckReport::timed(
            "orbit.inverse_recovers_source",
            n_,
            None,
            || {
                let ok = orbits
                    .iter()
                    .flat_map(|o| o.iter().map(move |g| (g, &o.source)));
                (
                    members,
                    count(ok, |(g, src)| hat_inv(g).as_ref() == Ok(*src)),
                )
            },
        ));
        out.push(CheckReport::timed("orbit.stabilizes", n_, None, || {
            let ok = inversion_seqs(n).filter(|w| {
                let top = hat_d(w, n.saturating_sub(1)).unwrap();
                (n..=n + 2).all(|d| hat_d(w, d).unwrap() == top)
            });
            (factorial(n), ok.count())
        }));
        out.push(CheckReport::timed(
            "orbit.min_d_at_most_n",
            n_,
            None,
            || {
                (
                    factorial(n),
                    count(inversion_seqs(n), |w| seq::min_d(w).unwrap() <= n),
                )
            },
        ));
        out.push(CheckReport::timed(
            "orbit.modinv_asc_within_nub",
            n_,
            None,
            || {
                (
                    members,
                    count(orbits.iter().flat_map(|o| o.iter()), |g| {
                        asc_set(g).is_subset(&nub(g))
                    }),
                )
            },
        ));
    }
    out
}

fn stats_suite(n_max: usize) -> Vec<CheckReport> {
    let mut out = Vec::new();
    for n in 0..=n_max {
        let n_ = Some(n);
        let orbits: Vec<_> = inversion_seqs(n).map(|w| h_orbit(&w).unwrap()).collect();
        let pairs: Vec<(&Seq, &Seq)> = orbits
            .iter()
            .flat_map(|o| o.iter().map(move |g| (g, &o.source)))
            .collect();
        out.push(CheckReport::new(
            "stats.asc_preserved",
            n_,
            None,
            pairs.len(),
            count(&pairs, |(g, w)| asc_set(g) == asc_set(w)),
        ));
        out.push(CheckReport::new(
            "stats.wdes_preserved",
            n_,
            None,
            pairs.len(),
            count(&pairs, |(g, w)| wdes_set(g) == wdes_set(w)),
        ));
        out.push(CheckReport::new(
            "stats.rlminp_preserved",
            n_,
            None,
            pairs.len(),
            count(&pairs, |(g, w)| rl_min_pairs(g) == rl_min_pairs(w)),
        ));
        out.push(CheckReport::timed(
            "stats.inversion_is_union_of_dasc",
            n_,
            None,
            || {
                let union: BTreeSet<Seq> = (0..=n).flat_map(|d| enumerate_d_asc(n, d)).collect();
                (set_digest(inversion_seqs(n)), set_digest(union))
            },
        ));
    }
    out
}

fn burge_suite(n_max: usize, d_max: usize) -> Vec<CheckReport> {
    let mut out = worked(&["burget"]);
    for n in 0..=n_max {
        let n_ = Some(n);
        out.push(CheckReport::timed("burge.involution", n_, None, || {
            let cay: Vec<Seq> = cayley_perms(n).collect();
            let ok = cay.iter().filter(|c| {
                let t = BurgeTableau::identity_over(c).unwrap();
                let tt = t.transpose();
                BurgeTableau::new(tt.top().clone(), tt.bottom().clone()).is_ok()
                    && tt.transpose() == t
            });
            (cay.len(), ok.count())
        }));
        out.push(CheckReport::timed(
            "burge.inverse_on_permutations",
            n_,
            None,
            || {
                (
                    factorial(n),
                    count(permutations(n), |p| burget(p).unwrap() == p.inverse()),
                )
            },
        ));
        for d in 0..=d_max {
            out.push(CheckReport::timed(
                "burge.injective_on_modasc",
                n_,
                Some(d),
                || {
                    let mods = enumerate_mod_d_asc(n, d);
                    let images: BTreeSet<Perm> = mods.iter().map(|c| burget(c).unwrap()).collect();
                    (mods.len(), images.len())
                },
            ));
        }
    }
    out
}

fn phi_suite(n_max: usize, d_max: usize) -> Vec<CheckReport> {
    let mut out = worked(&["phi_d", "d_active"]);
    for n in 0..=n_max {
        let perms: Vec<Perm> = permutations(n).collect();
        for d in 0..=d_max {
            let (n_, d_) = (Some(n), Some(d));
            let asc_seqs: Vec<Seq> = enumerate_d_asc(n, d).collect();
            let images: Vec<Perm> = asc_seqs.iter().map(|w| phi_d(w, d).unwrap()).collect();
            let fishburn: Vec<&Perm> = perms.iter().filter(|p| is_d_fishburn(p, d)).collect();
            out.push(CheckReport::timed(
                "phi.equals_burget_after_hat",
                n_,
                d_,
                || {
                    let ok = asc_seqs
                        .iter()
                        .zip(&images)
                        .filter(|(w, p)| burget(&hat_d(w, d).unwrap()).as_ref() == Ok(*p));
                    (asc_seqs.len(), ok.count())
                },
            ));
            out.push(CheckReport::new(
                "phi.image_is_fishburn",
                n_,
                d_,
                set_digest(&fishburn),
                set_digest(&images),
            ));
            out.push(CheckReport::timed(
                "phi.fishburn_iff_avoids_f",
                n_,
                d_,
                || {
                    (
                        perms.len(),
                        count(&perms, |p| {
                            is_d_fishburn(p, d) != contains_fishburn_pattern(p, d)
                        }),
                    )
                },
            ));
            if n >= 1 {
                out.push(CheckReport::timed("phi.parent_round_trip", n_, d_, || {
                    let ok = asc_seqs.iter().zip(&images).filter(|(w, p)| {
                        phi_d_parent(p, d).ok() == Some((phi_d(&w[..n - 1], d).unwrap(), w[n - 1]))
                    });
                    (asc_seqs.len(), ok.count())
                }));
            }
            out.push(CheckReport::new(
                "phi.fishburn_avoids_sigma",
                n_,
                d_,
                fishburn.len(),
                count(&fishburn, |p| !contains_sigma(p, d)),
            ));
            if d <= 1 {
                out.push(CheckReport::new(
                    "phi.fishburn_equals_sigma_avoiders",
                    n_,
                    d_,
                    set_digest(perms.iter().filter(|p| !contains_sigma(p, d))),
                    set_digest(&fishburn),
                ));
            }
            if d == 0 {
                out.push(CheckReport::new(
                    "phi.fishburn_numbers",
                    n_,
                    d_,
                    asc_seqs.len(),
                    fishburn.len(),
                ));
            }
        }
    }
    out
}

fn subdiag_suite(n_max: usize) -> Vec<CheckReport> {
    let mut out = Vec::new();
    for n in 0..=n_max {
        let n_ = Some(n);
        let perms: Vec<Perm> = permutations(n).collect();
        let irsub: Vec<&Perm> = perms
            .iter()
            .filter(|p| subdiagonal(p, RunMode::Increasing))
            .collect();
        let drsub: Vec<&Perm> = perms
            .iter()
            .filter(|p| subdiagonal(p, RunMode::Decreasing))
            .collect();
        let asc0: Vec<Seq> = enumerate_d_asc(n, 0).collect();
        out.push(CheckReport::timed(
            "subdiag.ir_is_max_hat_of_ascent",
            n_,
            None,
            || {
                (
                    set_digest(&irsub),
                    set_digest(asc0.iter().map(|w| hat_max(w).unwrap())),
                )
            },
        ));
        out.push(CheckReport::timed(
            "subdiag.dr_is_max_hat_of_weak_descent",
            n_,
            None,
            || {
                (
                    set_digest(&drsub),
                    set_digest(weak_descent_seqs(n).map(|w| hat_max(&w).unwrap())),
                )
            },
        ));
        out.push(CheckReport::new(
            "subdiag.ir_count",
            n_,
            None,
            asc0.len(),
            irsub.len(),
        ));
        out.push(CheckReport::timed(
            "subdiag.flat_steps_iff_mesh",
            n_,
            None,
            || {
                let ok = inversion_seqs(n)
                    .filter(|w| flat_steps(w).is_empty() == !contains_mesh_a(&hat_max(w).unwrap()));
                (factorial(n), ok.count())
            },
        ));
        out.push(CheckReport::timed("subdiag.block_index", n_, None, || {
            let ok = perms.iter().filter(|p| {
                let mut i = 0;
                runs(p, RunMode::Increasing)
                    .iter()
                    .enumerate()
                    .all(|(b, block)| {
                        block.iter().all(|_| {
                            i += 1;
                            increasing_block_index(p, i) == b + 1
                        })
                    })
            });
            (perms.len(), ok.count())
        }));
        if n < n_max {
            out.push(CheckReport::timed(
                "subdiag.insertion_laws",
                n_,
                None,
                || {
                    let mut ok = 0usize;
                    for p in &perms {
                        let (ir, dr) = (
                            subdiagonal(p, RunMode::Increasing),
                            subdiagonal(p, RunMode::Decreasing),
                        );
                        for a in 1..=n as u32 + 1 {
                            let g = append_lifted(p, a).unwrap();
                            let ir_ok = subdiagonal(&g, RunMode::Increasing)
                                == (ir && a as usize <= 1 + asc(p));
                            let dr_ok = subdiagonal(&g, RunMode::Decreasing)
                                == (dr && a as usize <= 1 + wdes(p));
                            ok += usize::from(ir_ok && dr_ok);
                        }
                    }
                    (perms.len() * (n + 1), ok)
                },
            ));
        }
    }
    out
}

fn trees_suite(n_max: usize) -> Vec<CheckReport> {
    let mut out = Vec::new();
    let depth = n_max.max(1);
    let omega = gen_tree_counts(Rule::Omega, depth).expect("depth >= 1");
    let theta = gen_tree_counts(Rule::Theta, depth).expect("depth >= 1");
    for n in 1..=depth {
        let primitive = count(enumerate_d_asc(n, 0), |w| flat_steps(w).is_empty());
        out.push(CheckReport::new(
            "trees.omega_level",
            Some(n),
            None,
            primitive,
            omega[n - 1],
        ));
        out.push(CheckReport::new(
            "trees.theta_level",
            Some(n),
            None,
            weak_descent_seqs(n).count(),
            theta[n - 1],
        ));
    }
    for a in 1..=depth as u32 {
        let labels: Vec<TreeLabel> = (1..=a).map(|l| TreeLabel(a, l)).collect();
        let ok =
            labels.iter().filter(|&&x| {
                let y = tree_iso_map(x, IsoDirection::OmegaToTheta).unwrap();
                let mapped: BTreeMap<TreeLabel, usize> = Rule::Omega
                    .children(x)
                    .unwrap()
                    .into_iter()
                    .map(|c| tree_iso_map(c, IsoDirection::OmegaToTheta).unwrap())
                    .fold(BTreeMap::new(), |mut m, c| {
                        *m.entry(c).or_insert(0) += 1;
                        m
                    });
                let expected = Rule::Theta.children(y).unwrap().into_iter().fold(
                    BTreeMap::new(),
                    |mut m, c| {
                        *m.entry(c).or_insert(0) += 1;
                        m
                    },
                );
                mapped == expected && tree_iso_map(y, IsoDirection::ThetaToOmega) == Ok(x)
            });
        out.push(CheckReport::new(
            "trees.iso_maps_children",
            Some(a as usize),
            None,
            labels.len(),
            ok.count(),
        ));
    }
    out
}

fn dyck_suite(n_max: usize, d_max: usize) -> Vec<CheckReport> {
    let mut out = worked(&["ddu_factors"]);
    for n in 0..=n_max {
        let n_ = Some(n);
        let perms = avoiders(n, &[&[2, 1, 3]]);
        let paths: Vec<DyckPath> = perms.iter().map(|p| phi_213(p).unwrap()).collect();
        out.push(CheckReport::new(
            "dyck.bijection",
            n_,
            None,
            set_digest(dyck_paths(n)),
            set_digest(&paths),
        ));
        out.push(CheckReport::new(
            "dyck.inverse_round_trip",
            n_,
            None,
            perms.len(),
            count(perms.iter().zip(&paths), |(p, r)| phi_213_inverse(r) == **p),
        ));
        out.push(CheckReport::new(
            "dyck.increasing_prefix",
            n_,
            None,
            perms.len(),
            count(perms.iter().zip(&paths), |(p, r)| {
                (1..=n).all(|k| {
                    p[..k].windows(2).all(|w| w[0] < w[1])
                        == r.steps()[..k].iter().all(|&s| s == Step::U)
                })
            }),
        ));
        for d in 0..=d_max {
            let d_ = Some(d);
            out.push(CheckReport::new(
                "dyck.sigma_iff_factor",
                n_,
                d_,
                perms.len(),
                count(perms.iter().zip(&paths), |(p, r)| {
                    contains_sigma(p, d) == (count_ddu_factor(r, d) > 0)
                }),
            ));
            out.push(CheckReport::new(
                "dyck.fishburn_213_is_sigma_213",
                n_,
                d_,
                set_digest(perms.iter().filter(|p| !contains_sigma(p, d))),
                set_digest(perms.iter().filter(|p| is_d_fishburn(p, d))),
            ));
        }
    }
    out
}

const TABLE_ORDER: usize = 12;

/// Largest `n` for which `F_{d,n}(213)` is enumerated directly.
pub const CROSS_CHECK_MAX_N: usize = 9;

fn series_suite(n_max: usize, d_max: usize) -> Vec<CheckReport> {
    let mut out = Vec::new();
    let rat = |v: i64| BigRational::from_integer(v.into());
    for d in 0..=d_max {
        let d_ = Some(d);
        let counts = fishburn_213_counts(d, TABLE_ORDER);
        if let Some(row) = fixtures().fishburn_213_row(d) {
            for (n, &expected) in row.iter().enumerate() {
                let actual = u64::try_from(&counts[n]).expect("fits");
                out.push(CheckReport::new(
                    "series.table",
                    Some(n),
                    d_,
                    expected,
                    actual,
                ));
            }
        }
        for (n, c) in counts
            .iter()
            .enumerate()
            .take(n_max.min(CROSS_CHECK_MAX_N) + 1)
        {
            let actual = count(avoiders(n, &[&[2, 1, 3]]), |p| is_d_fishburn(p, d));
            let expected = u64::try_from(c).expect("fits");
            out.push(CheckReport::new(
                "series.cross_check",
                Some(n),
                d_,
                expected,
                actual,
            ));
        }
        for qv in [-1i64, 0, 1, 2] {
            let series = series_q(d, &rat(qv - 1), n_max);
            for n in 0..=n_max {
                let brute: i64 = dyck_paths(n)
                    .iter()
                    .map(|r| qv.pow(count_ddu_factor(r, d) as u32))
                    .sum();
                let coeff = series.coeff(n);
                let actual = if coeff.is_integer() {
                    Digest::Count(i64::try_from(coeff.to_integer()).expect("fits"))
                } else {
                    Digest::Text(coeff.to_string())
                };
                out.push(CheckReport::new(
                    format!("series.distribution_q={qv}"),
                    Some(n),
                    d_,
                    brute,
                    actual,
                ));
            }
        }
    }
    let order = TABLE_ORDER;
    let q0 = series_q(0, &rat(-1), order);
    let closed0 = &TruncSeries::from_ints(&[1, -1], order)
        * &TruncSeries::from_ints(&[1, -2], order).recip().unwrap();
    out.push(CheckReport::new(
        "series.q0_closed_form",
        Some(order),
        Some(0),
        true,
        q0 == closed0,
    ));
    for (d, disc, lin) in [
        (1, &[1, -4, 2, 0, 1][..], &[1, -2, 1][..]),
        (2, &[1, -4, 0, 4][..], &[1, -2, 2][..]),
    ] {
        let q = series_q(d, &rat(-1), order);
        let residual = quadratic_residual(&q, disc, lin);
        out.push(CheckReport::new(
            format!("series.q{d}_closed_form"),
            Some(order),
            Some(d),
            true,
            residual.is_zero(),
        ));
    }
    let limit = 10;
    let catalan: Vec<usize> = (0..=limit).map(|n| dyck_paths(n).len()).collect();
    for d in 0..=limit {
        let counts = fishburn_213_counts(d, limit);
        for n in (0..=limit).filter(|&n| d + 2 >= n) {
            let actual = u64::try_from(&counts[n]).expect("fits");
            out.push(CheckReport::new(
                "series.catalan_limit",
                Some(n),
                Some(d),
                catalan[n],
                actual,
            ));
        }
    }
    out
}

/// `Q²·disc - (2(1 - x) - Q·lin)²`, zero when `Q = 2(1 - x)/(lin + √disc)`.
pub fn quadratic_residual(q: &TruncSeries, disc: &[i64], lin: &[i64]) -> TruncSeries {
    let order = q.order();
    let disc = TruncSeries::from_ints(disc, order);
    let lin = TruncSeries::from_ints(lin, order);
    let rhs = &TruncSeries::from_ints(&[2, -2], order) - &(q * &lin);
    &(&(q * q) * &disc) - &(&rhs * &rhs)
}
