//! Exhaustive and sampled verification sweeps, one per named statement.
//!
//! Each harness walks its instance space in parallel, counts the instances it
//! checked and records every counterexample with the offending table.

use std::time::Instant;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::chow::{self, ChowClasses};
use crate::enumerate;
use crate::error::{Error, Result};
use crate::formula::{Formula, FormulaAst};
use crate::monotone;
use crate::patterns::{self, Family, FamilySpec};
use crate::readonce;
use crate::table::{Point, TruthTable};
use crate::threshold::{self, SummabilityWitness, ThresholdRepresentation};

/// Counterexamples kept in a report; the count is always exact.
pub const MAX_RECORDED: usize = 50;

/// Numbers of positive functions of `n = 0..=6` variables.
pub const DEDEKIND: [u64; 7] = [2, 3, 6, 20, 168, 7581, 7_828_354];

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyParams {
    pub n_min: Option<usize>,
    pub n_max: Option<usize>,
    /// Random instances per arity for the sampled parts of a sweep.
    pub samples: Option<usize>,
    pub seed: u64,
}

impl Default for VerifyParams {
    fn default() -> Self {
        Self {
            n_min: None,
            n_max: None,
            samples: None,
            seed: 0x5eed,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub table: Option<TruthTable>,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub theorem: String,
    pub n_min: usize,
    pub n_max: usize,
    pub instances: u64,
    pub counterexample_count: u64,
    pub counterexamples: Vec<Counterexample>,
    pub duration_ms: u64,
    pub passed: bool,
}

/// Running totals of a sweep; merged associatively.
#[derive(Default)]
struct Tally {
    instances: u64,
    failures: u64,
    recorded: Vec<Counterexample>,
}

impl Tally {
    fn check(&mut self, ok: bool, table: Option<&TruthTable>, detail: impl FnOnce() -> String) {
        self.instances += 1;
        if !ok {
            self.fail(table, detail());
        }
    }

    fn fail(&mut self, table: Option<&TruthTable>, detail: String) {
        self.failures += 1;
        if self.recorded.len() < MAX_RECORDED {
            self.recorded.push(Counterexample {
                table: table.cloned(),
                detail,
            });
        }
    }

    fn merge(mut self, other: Tally) -> Tally {
        self.instances += other.instances;
        self.failures += other.failures;
        for c in other.recorded {
            if self.recorded.len() < MAX_RECORDED {
                self.recorded.push(c);
            }
        }
        self
    }
}

fn sweep<T: Sync>(items: &[T], check: impl Fn(&T, &mut Tally) + Sync) -> Tally {
    items
        .par_iter()
        .fold(Tally::default, |mut t, item| {
            check(item, &mut t);
            t
        })
        .reduce(Tally::default, Tally::merge)
}

/// Every table of `n <= 4` variables.
fn all_tables(n: usize) -> Vec<TruthTable> {
    (0..1u64 << (1usize << n))
        .map(|bits| TruthTable::from_u64(n, bits).unwrap())
        .collect()
}

struct Range {
    n_min: usize,
    n_max: usize,
    samples: usize,
    seed: u64,
}

struct Harness {
    id: &'static str,
    aliases: &'static [&'static str],
    default_range: (usize, usize),
    limits: (usize, usize),
    default_samples: usize,
    run: fn(&Range) -> Tally,
}

const HARNESSES: &[Harness] = &[
    Harness {
        id: "extremal-main",
        aliases: &[],
        default_range: (0, 5),
        limits: (0, 6),
        default_samples: 0,
        run: extremal_main,
    },
    Harness {
        id: "lem-acyclic",
        aliases: &[],
        default_range: (0, 6),
        limits: (0, 6),
        default_samples: 200,
        run: acyclic,
    },
    Harness {
        id: "th-lro-chow",
        aliases: &[],
        default_range: (0, 4),
        limits: (0, 4),
        default_samples: 0,
        run: lro_chow,
    },
    Harness {
        id: "cl-min-ro-non-chow",
        aliases: &[],
        default_range: (4, 4),
        limits: (4, 4),
        default_samples: 0,
        run: min_ro_non_chow,
    },
    Harness {
        id: "lem-chow-closed",
        aliases: &[],
        default_range: (0, 4),
        limits: (0, 4),
        default_samples: 0,
        run: chow_closed,
    },
    Harness {
        id: "lem-g",
        aliases: &[],
        default_range: (3, 10),
        limits: (3, 12),
        default_samples: 0,
        run: g_family,
    },
    Harness {
        id: "prop-g",
        aliases: &[],
        default_range: (3, 6),
        limits: (3, 8),
        default_samples: 200,
        run: g_minimality,
    },
    Harness {
        id: "stetsenko-list",
        aliases: &[],
        default_range: (0, 4),
        limits: (0, 4),
        default_samples: 0,
        run: stetsenko_list,
    },
    Harness {
        id: "conjecture-counterexample",
        aliases: &["prop-1"],
        default_range: (4, 10),
        limits: (4, 12),
        default_samples: 0,
        run: conjecture_counterexample,
    },
    Harness {
        id: "th-ess-all",
        aliases: &[],
        default_range: (0, 8),
        limits: (0, 10),
        default_samples: 250,
        run: essential_oracles,
    },
    Harness {
        id: "th-th-spec",
        aliases: &[],
        default_range: (1, 4),
        limits: (1, 4),
        default_samples: 0,
        run: threshold_spec_bound,
    },
    Harness {
        id: "th-nested-spec",
        aliases: &[],
        default_range: (2, 8),
        limits: (1, 10),
        default_samples: 500,
        run: nested_spec,
    },
    Harness {
        id: "dedekind",
        aliases: &[],
        default_range: (0, 5),
        limits: (0, 6),
        default_samples: 0,
        run: dedekind,
    },
    Harness {
        id: "lro-eq-ro-and-threshold",
        aliases: &[],
        default_range: (0, 4),
        limits: (0, 4),
        default_samples: 0,
        run: lro_is_ro_and_threshold,
    },
];

/// Canonical harness ids, in a stable order.
pub fn theorem_ids() -> Vec<&'static str> {
    HARNESSES.iter().map(|h| h.id).collect()
}

pub fn verify(theorem: &str, params: &VerifyParams) -> Result<VerificationReport> {
    let h = HARNESSES
        .iter()
        .find(|h| h.id == theorem || h.aliases.contains(&theorem))
        .ok_or_else(|| Error::UnknownTheorem(theorem.to_string()))?;
    let n_min = params.n_min.unwrap_or(h.default_range.0);
    let n_max = params.n_max.unwrap_or(h.default_range.1);
    if n_min > n_max || n_min < h.limits.0 || n_max > h.limits.1 {
        return Err(Error::OutOfRange(format!(
            "{} supports {}..={}, got {n_min}..={n_max}",
            h.id, h.limits.0, h.limits.1
        )));
    }
    let range = Range {
        n_min,
        n_max,
        samples: params.samples.unwrap_or(h.default_samples),
        seed: params.seed,
    };
    let start = Instant::now();
    let tally = (h.run)(&range);
    Ok(VerificationReport {
        theorem: h.id.to_string(),
        n_min,
        n_max,
        instances: tally.instances,
        counterexample_count: tally.failures,
        passed: tally.failures == 0,
        counterexamples: tally.recorded,
        duration_ms: start.elapsed().as_millis() as u64,
    })
}

fn rng_for(range: &Range, n: usize) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(range.seed ^ (n as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15))
}

/// A threshold function with small random integer weights.
pub fn random_threshold(n: usize, rng: &mut impl Rng) -> TruthTable {
    let bound = n.max(2) as i64;
    let weights: Vec<i64> = (0..n).map(|_| rng.random_range(-bound..=bound)).collect();
    let low: i64 = weights.iter().filter(|w| **w < 0).sum();
    let high: i64 = weights.iter().filter(|w| **w > 0).sum();
    let t = rng.random_range(low..=high.max(low));
    TruthTable::from_fn(n, |x| {
        let s: i64 = (0..n).filter(|j| x >> j & 1 == 1).map(|j| weights[j]).sum();
        s > t
    })
    .unwrap()
}

/// An lro function depending on all `n >= 1` variables: literals attached
/// one at a time, in random order and polarity, by random `&` or `|`.
pub fn random_lro(n: usize, rng: &mut impl Rng) -> TruthTable {
    assert!(n >= 1);
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut formula = Formula::literal(order[0], rng.random());
    for &v in &order[1..] {
        let lit = Formula::literal(v, rng.random());
        formula = if rng.random() {
            Formula::and([lit, formula])
        } else {
            Formula::or([lit, formula])
        };
    }
    FormulaAst::new(n, formula).unwrap().eval_to_table()
}

fn extremal_main(range: &Range) -> Tally {
    let mut total = Tally::default();
    for n in range.n_min..=range.n_max {
        let words = enumerate::positive_words(n).unwrap();
        let tally = sweep(&words, |&w, t| {
            let f = TruthTable::from_u64(n, w).unwrap();
            let k = f.relevant_variables().len();
            let r = monotone::extremal_count(&f).unwrap();
            let lro = readonce::is_lro_fn(&f);
            t.check(r > k && (r == k + 1) == lro, Some(&f), || {
                format!("k = {k}, r = {r}, lro = {lro}")
            });
        });
        total = total.merge(tally);
    }
    total
}

fn acyclic(range: &Range) -> Tally {
    let mut total = Tally::default();
    for n in range.n_min..=range.n_max {
        let mut words = enumerate::positive_words(n).unwrap();
        if n > 4 {
            let mut rng = rng_for(range, n);
            words = (0..range.samples)
                .map(|_| words[rng.random_range(0..words.len())])
                .collect();
        }
        let tally = sweep(&words, |&w, t| {
            let f = TruthTable::from_u64(n, w).unwrap();
            let relevant = f.relevant_variables();
            for s in 1usize..1 << relevant.len() {
                let vars: Vec<usize> = (0..relevant.len())
                    .filter(|j| s >> j & 1 == 1)
                    .map(|j| relevant[j])
                    .collect();
                let got = monotone::extremals_corresponding(&f, &vars).unwrap().len();
                t.check(got > vars.len(), Some(&f), || {
                    format!(
                        "{} extremal points correspond to {:?}",
                        got,
                        one_based(&vars)
                    )
                });
            }
        });
        total = total.merge(tally);
    }
    total
}

fn one_based(vars: &[usize]) -> Vec<usize> {
    vars.iter().map(|v| v + 1).collect()
}

fn g1_g2_free(f: &TruthTable) -> bool {
    if f.relevant_variables().len() < 4 {
        return true;
    }
    [Family::G1, Family::G2].iter().all(|&fam| {
        let p = patterns::make_family(&FamilySpec::fixed(fam).unwrap());
        patterns::contains_restriction(f, &p, true)
            .unwrap()
            .is_none()
    })
}

fn lro_chow(range: &Range) -> Tally {
    let mut total = Tally::default();
    for n in range.n_min..=range.n_max {
        let classes = ChowClasses::build(n).unwrap();
        let tables = all_tables(n);
        let tally = sweep(&tables, |f, t| {
            let chow = classes.is_chow(f);
            if threshold::is_threshold(f).is_some() {
                t.check(chow, Some(f), || "threshold function is not Chow".into());
            }
            if readonce::is_read_once(f).is_some() {
                let lro = readonce::is_lro_fn(f);
                let free = g1_g2_free(f);
                t.check(lro == chow && chow == free, Some(f), || {
                    format!("read-once with lro = {lro}, chow = {chow}, g1/g2-free = {free}")
                });
            }
        });
        total = total.merge(tally);
    }
    total
}

fn min_ro_non_chow(_: &Range) -> Tally {
    let classes = ChowClasses::build(4).unwrap();
    let swap = crate::table::Permutation::swap(4, 1, 2).unwrap();
    let mut t = Tally::default();
    for fam in [Family::G1, Family::G2] {
        let base = patterns::make_family(&FamilySpec::fixed(fam).unwrap());
        let partner = base.permute_variables(&swap).unwrap();
        for mask in 0..16usize {
            let negated: Vec<usize> = (0..4).filter(|v| mask >> v & 1 == 1).collect();
            let f = base.negate_variables(&negated).unwrap();
            let g = partner.negate_variables(&negated).unwrap();
            let ok = f != g
                && chow::chow_parameters(&f) == chow::chow_parameters(&g)
                && !classes.is_chow(&f);
            t.check(ok, Some(&f), || format!("partner {g} does not collide"));
        }
    }
    let g1 = patterns::make_family(&FamilySpec::fixed(Family::G1).unwrap());
    t.check(
        chow::chow_parameters(&g1).as_tuple() == [6, 6, 6, 6, 9],
        Some(&g1),
        || "parameters differ from (6,6,6,6,9)".into(),
    );
    t
}

fn chow_closed(range: &Range) -> Tally {
    let classes: Vec<ChowClasses> = (0..=range.n_max)
        .map(|n| ChowClasses::build(n).unwrap())
        .collect();
    let mut total = Tally::default();
    for n in range.n_min..=range.n_max {
        let tables = all_tables(n);
        let tally = sweep(&tables, |f, t| {
            if !classes[n].is_chow(f) {
                return;
            }
            // every (bound, values) pair with values inside bound
            for bound in 1usize..1 << n {
                let mut values = 0usize;
                loop {
                    let g = f.restrict_unchecked(bound, values);
                    t.check(classes[g.arity()].is_chow(&g), Some(f), || {
                        format!("restriction {bound:b}/{values:b} = {g} is not Chow")
                    });
                    if values == bound {
                        break;
                    }
                    values = (values | !bound).wrapping_add(1) & bound;
                }
            }
        });
        total = total.merge(tally);
    }
    total
}

fn g_family(range: &Range) -> Tally {
    let mut t = Tally::default();
    for n in range.n_min..=range.n_max {
        let f = patterns::make_family(&FamilySpec::g(n).unwrap());
        let fail = |what: &str| format!("g_{n}: {what}");
        t.check(monotone::is_positive(&f), Some(&f), || fail("not positive"));
        t.check(monotone::is_canalyzing(&f).is_none(), Some(&f), || {
            fail("canalyzing")
        });
        t.check(readonce::is_read_once(&f).is_none(), Some(&f), || {
            fail("read-once")
        });
        t.check(threshold::is_threshold(&f).is_some(), Some(&f), || {
            fail("not threshold")
        });
        let mut weights = vec![1i64; n];
        weights[0] = n as i64 - 2;
        let printed = ThresholdRepresentation::from_integers(&weights, n as i64 - 2);
        t.check(printed.represents(&f), Some(&f), || {
            fail("weights (n-2, 1, ..., 1), t = n-2 fail")
        });
        let ext = monotone::extremal_sets(&f).unwrap();
        t.check(ext.r == 2 * n, Some(&f), || fail(&format!("r = {}", ext.r)));
        let ess = threshold::essential_points(&f).unwrap();
        let mut extremal: Vec<Point> = ext.points().copied().collect();
        extremal.sort();
        t.check(ess == extremal, Some(&f), || {
            fail("essential points differ from extremal points")
        });
        t.check(ess.len() == 2 * n, Some(&f), || {
            fail(&format!("sigma = {}", ess.len()))
        });
    }
    t
}

fn all_partial_assignments(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for bound in 1usize..1 << n {
        let mut values = 0usize;
        loop {
            out.push((bound, values));
            if values == bound {
                break;
            }
            values = (values | !bound).wrapping_add(1) & bound;
        }
    }
    out
}

fn g_minimality(range: &Range) -> Tally {
    let mut total = Tally::default();
    for n in range.n_min..=range.n_max {
        let g = patterns::make_family(&FamilySpec::g(n).unwrap());
        let images: Vec<TruthTable> = (0..1usize << n).map(|m| g.negate_mask(m)).collect();
        let restrictions = all_partial_assignments(n);
        let tally = sweep(&images, |h, t| {
            t.check(!readonce::is_lro_fn(h), Some(h), || {
                "negation image of g_n is lro".into()
            });
            for &(bound, values) in &restrictions {
                let r = h.restrict_unchecked(bound, values);
                t.check(readonce::is_lro_fn(&r), Some(h), || {
                    format!("restriction {bound:b}/{values:b} = {r} is not lro")
                });
            }
        });
        total = total.merge(tally);
    }
    // every threshold table to 4 variables, random threshold functions at 5
    for n in range.n_min..=range.n_max.min(5) {
        let tables = if n <= 4 {
            all_tables(n)
        } else {
            let mut rng = rng_for(range, n);
            (0..range.samples)
                .map(|_| random_threshold(n, &mut rng))
                .collect()
        };
        let tally = sweep(&tables, |f, t| {
            if threshold::is_threshold(f).is_none() {
                return;
            }
            let lro = readonce::is_lro_fn(f);
            let contains = patterns::g_restriction(f).unwrap();
            if let Some((spec, w)) = &contains {
                t.check(
                    w.validates(f, &patterns::make_family(spec)),
                    Some(f),
                    || "g restriction witness does not re-apply".into(),
                );
            }
            t.check(lro != contains.is_some(), Some(f), || {
                format!(
                    "threshold with lro = {lro}, contains g member = {}",
                    contains.is_some()
                )
            });
        });
        total = total.merge(tally);
    }
    total
}

/// The 2-summability witnesses printed for the non-read-once list.
pub fn printed_witnesses() -> Vec<(FamilySpec, SummabilityWitness)> {
    let point = |bits: Vec<u8>| Point::from_coords(&bits).unwrap();
    let unit = |n: usize, i: usize| -> Vec<u8> { (0..n).map(|j| (j == i) as u8).collect() };
    let co_unit = |n: usize, i: usize| -> Vec<u8> { (0..n).map(|j| (j != i) as u8).collect() };
    let mut out = Vec::new();
    for n in 2..=6 {
        out.push((
            FamilySpec::new(Family::H1, n).unwrap(),
            SummabilityWitness::new(
                vec![point(unit(n, 0)), point(co_unit(n, 0))],
                vec![point(vec![0; n]), point(vec![1; n])],
            ),
        ));
    }
    for n in 3..=6 {
        out.push((
            FamilySpec::new(Family::H2, n).unwrap(),
            SummabilityWitness::new(
                vec![point(unit(n, 0)), point(co_unit(n, 0))],
                vec![point(unit(n, 1)), point(co_unit(n, 1))],
            ),
        ));
    }
    out.push((
        FamilySpec::fixed(Family::H3).unwrap(),
        SummabilityWitness::new(
            vec![point(vec![0, 0, 1, 1, 1]), point(vec![1, 1, 0, 0, 0])],
            vec![point(vec![0, 1, 1, 0, 0]), point(vec![1, 0, 0, 1, 1])],
        ),
    ));
    out.push((
        FamilySpec::fixed(Family::H4).unwrap(),
        SummabilityWitness::new(
            vec![point(vec![1, 0, 0, 1]), point(vec![0, 1, 1, 0])],
            vec![point(vec![1, 1, 0, 0]), point(vec![0, 0, 1, 1])],
        ),
    ));
    out
}

fn stetsenko_list(range: &Range) -> Tally {
    let mut total = Tally::default();
    for (spec, printed) in printed_witnesses() {
        let f = patterns::make_family(&spec);
        total.check(printed.validates(&f), Some(&f), || {
            format!("{spec}: printed witness fails")
        });
        let found = threshold::is_k_summable(&f, 2).unwrap();
        total.check(
            found.as_ref().is_some_and(|w| w.validates(&f)),
            Some(&f),
            || format!("{spec}: no 2-summability witness found"),
        );
        total.check(threshold::is_threshold(&f).is_none(), Some(&f), || {
            format!("{spec}: threshold")
        });
        total.check(readonce::is_read_once(&f).is_none(), Some(&f), || {
            format!("{spec}: read-once")
        });
    }
    for n in range.n_min..=range.n_max {
        let tables = all_tables(n);
        let tally = sweep(&tables, |f, t| {
            let read_once = readonce::is_read_once(f).is_some();
            let witness = patterns::stetsenko_witness(f).unwrap();
            let valid = witness.as_ref().is_none_or(|w| w.validates(f));
            t.check(read_once != witness.is_some() && valid, Some(f), || {
                format!("read-once = {read_once}, witness = {witness:?}")
            });
        });
        total = total.merge(tally);
    }
    total
}

/// `y_1, ..., y_(n-2)`: `x1 = 0`, `x(i+1) = 0`, every other coordinate 1.
fn non_essential_zeros(n: usize) -> Vec<Point> {
    (1..=n - 2)
        .map(|i| {
            let coords: Vec<u8> = (0..n).map(|j| (j != 0 && j != i) as u8).collect();
            Point::from_coords(&coords).unwrap()
        })
        .collect()
}

fn conjecture_counterexample(range: &Range) -> Tally {
    let mut t = Tally::default();
    for n in range.n_min..=range.n_max {
        let f = patterns::make_family(&FamilySpec::f(n).unwrap());
        let fail = |what: &str| format!("f_{n}: {what}");
        t.check(monotone::is_positive(&f), Some(&f), || fail("not positive"));
        t.check(f.relevant_variables().len() == n, Some(&f), || {
            fail("irrelevant variable")
        });
        t.check(monotone::is_canalyzing(&f).is_none(), Some(&f), || {
            fail("canalyzing")
        });
        t.check(readonce::is_lro(&f).is_none(), Some(&f), || fail("lro"));
        t.check(threshold::is_threshold(&f).is_some(), Some(&f), || {
            fail("not threshold")
        });
        let mut weights = vec![2i64; n];
        weights[0] = 2 * n as i64 - 5;
        weights[n - 1] = 1;
        let printed = ThresholdRepresentation::from_integers(&weights, 2 * n as i64 - 4);
        t.check(printed.represents(&f), Some(&f), || {
            fail("printed inequality fails")
        });
        let ext = monotone::extremal_sets(&f).unwrap();
        t.check(ext.r == 2 * n - 1, Some(&f), || {
            fail(&format!("r = {}", ext.r))
        });
        let ess = threshold::essential_points(&f).unwrap();
        let ys = non_essential_zeros(n);
        let mut expected: Vec<Point> = ext.points().filter(|p| !ys.contains(p)).copied().collect();
        expected.sort();
        t.check(ess == expected, Some(&f), || {
            fail(&format!("essential points {ess:?}, expected {expected:?}"))
        });
        t.check(ess.len() == n + 1, Some(&f), || {
            fail(&format!("sigma = {}", ess.len()))
        });
        t.check(
            patterns::g_restriction(&f).unwrap().is_some(),
            Some(&f),
            || fail("no g restriction"),
        );
    }
    t
}

fn essential_oracles(range: &Range) -> Tally {
    let check = |f: &TruthTable, t: &mut Tally| {
        let essential = threshold::essential_points(f).unwrap();
        for z in f.zeros() {
            let p = Point::new(f.arity(), z as u64).unwrap();
            let flip = essential.contains(&p);
            let plane = threshold::zero_on_separating_hyperplane(f, &p).unwrap();
            t.check(flip == plane, Some(f), || {
                format!("zero {p}: flip oracle {flip}, hyperplane oracle {plane}")
            });
        }
    };
    let mut total = Tally::default();
    for n in range.n_min..=range.n_max {
        let tables: Vec<TruthTable> = if n <= 4 {
            all_tables(n)
                .into_iter()
                .filter(|f| threshold::is_threshold(f).is_some())
                .collect()
        } else {
            let mut rng = rng_for(range, n);
            (0..range.samples)
                .map(|_| random_threshold(n, &mut rng))
                .collect()
        };
        total = total.merge(sweep(&tables, |f, t| check(f, t)));
    }
    total
}

fn threshold_spec_bound(range: &Range) -> Tally {
    let mut total = Tally::default();
    for n in range.n_min..=range.n_max {
        let tables = all_tables(n);
        let tally = sweep(&tables, |f, t| {
            if f.relevant_variables().len() != n || threshold::is_threshold(f).is_none() {
                return;
            }
            let sigma = threshold::specification_number(f).unwrap();
            t.check(sigma > n, Some(f), || format!("sigma = {sigma} < n + 1"));
        });
        total = total.merge(tally);
    }
    total
}

fn nested_spec(range: &Range) -> Tally {
    let mut total = Tally::default();
    for n in range.n_min.max(1)..=range.n_max {
        let mut rng = rng_for(range, n);
        let tables: Vec<TruthTable> = (0..range.samples)
            .map(|_| random_lro(n, &mut rng))
            .collect();
        let tally = sweep(&tables, |f, t| {
            let all_relevant = f.relevant_variables().len() == n;
            let lro = readonce::is_lro_fn(f);
            let sigma = threshold::specification_number(f).unwrap();
            t.check(all_relevant && lro && sigma == n + 1, Some(f), || {
                format!(
                    "generated lro: all relevant = {all_relevant}, lro = {lro}, sigma = {sigma}"
                )
            });
        });
        total = total.merge(tally);
    }
    total
}

fn dedekind(range: &Range) -> Tally {
    let mut t = Tally::default();
    #[allow(clippy::needless_range_loop)]
    for n in range.n_min..=range.n_max {
        let words = enumerate::positive_words(n).unwrap();
        let distinct = words.windows(2).all(|w| w[0] < w[1]);
        t.check(words.len() as u64 == DEDEKIND[n] && distinct, None, || {
            format!(
                "n = {n}: {} functions, expected {}",
                words.len(),
                DEDEKIND[n]
            )
        });
        if n <= 4 {
            let filtered = all_tables(n)
                .into_iter()
                .filter(monotone::is_positive)
                .map(|f| f.as_u64().unwrap())
                .collect::<Vec<_>>();
            t.check(filtered == words, None, || {
                format!("n = {n}: pairing and filtering disagree")
            });
        }
    }
    t
}

fn lro_is_ro_and_threshold(range: &Range) -> Tally {
    let mut total = Tally::default();
    for n in range.n_min..=range.n_max {
        let tables = all_tables(n);
        let tally = sweep(&tables, |f, t| {
            let lro = readonce::is_lro(f);
            let ro = readonce::is_read_once(f);
            let th = threshold::is_threshold(f).is_some();
            t.check(lro.is_some() == (ro.is_some() && th), Some(f), || {
                format!(
                    "lro = {}, read-once = {}, threshold = {th}",
                    lro.is_some(),
                    ro.is_some()
                )
            });
            if let Some(c) = &lro {
                t.check(
                    c.eval_to_table() == *f && c.root().is_nested(),
                    Some(f),
                    || format!("bad nested certificate {c}"),
                );
            }
            if let Some(c) = &ro {
                t.check(
                    c.eval_to_table() == *f && c.root().is_read_once(),
                    Some(f),
                    || format!("bad read-once certificate {c}"),
                );
            }
        });
        total = total.merge(tally);
    }
    total
}
