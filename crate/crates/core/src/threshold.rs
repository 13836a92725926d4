//! Threshold recognition, summability witnesses, essential points and the
//! specification number.
//!
//! Thresholdness is decided by exact LP feasibility. Two formulations are
//! kept deliberately apart:
//!
//! * the primal route orients a unate function to a positive one and solves
//!   the gap-one system on its extremal points only (non-negative weights);
//! * the dense route writes the Farkas alternative of the gap-one system over
//!   every point of the cube, with free weights, and optionally pins one point
//!   onto the separating hyperplane.
//!
//! Flipping a point and re-running the primal route decides essentiality; the
//! dense route with a pinned point decides whether a zero lies on some
//! separating hyperplane. The two answers agree on every zero.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::lp::{Problem, Relation, VarKind};
use crate::monotone;
use crate::table::{Point, TruthTable};

/// `f(x) = 0` exactly when `sum w_i x_i <= t`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ThresholdRepresentation {
    #[serde(serialize_with = "ser_rationals", deserialize_with = "de_rationals")]
    pub weights: Vec<BigRational>,
    #[serde(serialize_with = "ser_rational", deserialize_with = "de_rational")]
    pub threshold: BigRational,
}

impl ThresholdRepresentation {
    pub fn from_integers(weights: &[i64], threshold: i64) -> Self {
        Self {
            weights: weights
                .iter()
                .map(|&w| BigRational::from_integer(w.into()))
                .collect(),
            threshold: BigRational::from_integer(threshold.into()),
        }
    }

    pub fn weighted_sum(&self, point: usize) -> BigRational {
        self.weights
            .iter()
            .enumerate()
            .filter(|(j, _)| point >> j & 1 == 1)
            .map(|(_, w)| w.clone())
            .sum()
    }

    /// Classifies every point of the cube exactly as `f` does.
    pub fn represents(&self, f: &TruthTable) -> bool {
        self.weights.len() == f.arity()
            && (0..f.len()).all(|x| f.get(x) == (self.weighted_sum(x) > self.threshold))
    }

    pub fn is_integral(&self) -> bool {
        self.weights.iter().all(|w| w.is_integer()) && self.threshold.is_integer()
    }

    /// Scales to coprime integers.
    fn normalized(self) -> Self {
        let lcm = self
            .weights
            .iter()
            .chain(std::iter::once(&self.threshold))
            .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
        let ints: Vec<BigInt> = self
            .weights
            .iter()
            .chain(std::iter::once(&self.threshold))
            .map(|q| (q * BigRational::from_integer(lcm.clone())).to_integer())
            .collect();
        let gcd = ints.iter().fold(BigInt::zero(), |acc, v| acc.gcd(v));
        let scale = if gcd.is_zero() { BigInt::one() } else { gcd };
        let mut ints: Vec<BigRational> = ints
            .into_iter()
            .map(|v| BigRational::from_integer(v / &scale))
            .collect();
        let threshold = ints.pop().unwrap();
        Self {
            weights: ints,
            threshold,
        }
    }
}

impl fmt::Display for ThresholdRepresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (j, w) in self.weights.iter().enumerate() {
            if w.is_zero() {
                continue;
            }
            let (sign, abs) = if w.is_negative() {
                ("-", -w)
            } else {
                ("+", w.clone())
            };
            if first {
                if sign == "-" {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            if abs.is_one() {
                write!(f, "x{}", j + 1)?;
            } else {
                write!(f, "{abs} x{}", j + 1)?;
            }
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " <= {}", self.threshold)
    }
}

fn ser_rational<S: Serializer>(q: &BigRational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(q)
}

fn ser_rationals<S: Serializer>(qs: &[BigRational], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(qs.iter().map(|q| q.to_string()))
}

fn parse_rational<E: serde::de::Error>(text: &str) -> std::result::Result<BigRational, E> {
    text.parse::<BigRational>().map_err(E::custom)
}

fn de_rational<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<BigRational, D::Error> {
    parse_rational(&String::deserialize(d)?)
}

fn de_rationals<'de, D: Deserializer<'de>>(
    d: D,
) -> std::result::Result<Vec<BigRational>, D::Error> {
    Vec::<String>::deserialize(d)?
        .iter()
        .map(|s| parse_rational(s))
        .collect()
}

/// Negative-unate variables as a mask, or `None` when some variable is binate.
/// Irrelevant variables count as positive.
pub(crate) fn orientation(f: &TruthTable) -> Option<usize> {
    let mut negative = 0usize;
    for v in 0..f.arity() {
        if f.is_positive_in(v) {
            continue;
        }
        if f.is_negative_in(v) {
            negative |= 1 << v;
        } else {
            return None;
        }
    }
    Some(negative)
}

/// Exact threshold recognition.
///
/// Binate functions are rejected outright (every threshold function is
/// unate). Otherwise the function is reflected to a positive one and the
/// system `w.u >= t + 1` over minimal ones, `w.z <= t` over maximal zeros,
/// `w >= 0` is solved; the result is reflected back, scaled to coprime
/// integers and re-checked on every point.
pub fn is_threshold(f: &TruthTable) -> Option<ThresholdRepresentation> {
    let negative = orientation(f)?;
    let n = f.arity();
    let positive = f.negate_mask(negative);
    let (min_ones, max_zeros) = monotone::extremal_masks(&positive);

    let mut kinds = vec![VarKind::NonNegative; n];
    kinds.push(VarKind::Free);
    let mut lp = Problem::new(kinds);
    let row = |x: usize| -> Vec<i64> {
        (0..n)
            .map(|j| (x >> j & 1) as i64)
            .chain(std::iter::once(-1))
            .collect()
    };
    for u in min_ones.ones() {
        lp.add(row(u), Relation::Ge, 1);
    }
    for z in max_zeros.ones() {
        lp.add(row(z), Relation::Le, 0);
    }
    let mut solution = lp.solve()?;
    let mut threshold = solution.pop().unwrap();
    for (j, w) in solution.iter_mut().enumerate() {
        if negative >> j & 1 == 1 {
            threshold -= &*w;
            *w = -w.clone();
        }
    }
    let rep = ThresholdRepresentation {
        weights: solution,
        threshold,
    }
    .normalized();
    assert!(
        rep.represents(f),
        "threshold LP returned a non-separating solution for {f}"
    );
    Some(rep)
}

/// Dense Farkas test: is there `(w, t)` with every one at `>= t + 1`, every
/// zero at `<= t`, and (if given) `pinned` exactly on `w.x = t`?
///
/// Decided through the alternative system: multipliers `l >= 0` per point and
/// a free `m` for the pinned point with
/// `sum_ones l_y (y, -1) + sum_zeros l_x (-x, 1) + m (p, -1) = 0` and
/// `sum_ones l_y = 1`. The primal is feasible exactly when this is not.
pub(crate) fn separable_dense(f: &TruthTable, pinned: Option<usize>) -> bool {
    let n = f.arity();
    let points = f.len();
    let mut kinds = vec![VarKind::NonNegative; points];
    if pinned.is_some() {
        kinds.push(VarKind::Free);
    }
    let width = kinds.len();
    let mut lp = Problem::new(kinds);
    for j in 0..=n {
        let mut coeffs = vec![0i64; width];
        for (x, c) in coeffs.iter_mut().enumerate().take(points) {
            let sign = if f.get(x) { 1 } else { -1 };
            *c = if j < n {
                sign * (x >> j & 1) as i64
            } else {
                -sign
            };
        }
        if let Some(p) = pinned {
            coeffs[points] = if j < n { (p >> j & 1) as i64 } else { -1 };
        }
        lp.add(coeffs, Relation::Eq, 0);
    }
    let mut normalise = vec![0i64; width];
    for x in f.ones() {
        normalise[x] = 1;
    }
    lp.add(normalise, Relation::Eq, 1);
    !lp.is_feasible()
}

/// `r <= k` zeros and `r` ones (repetition allowed) with equal coordinate sums.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SummabilityWitness {
    pub false_points: Vec<Point>,
    pub true_points: Vec<Point>,
}

impl SummabilityWitness {
    pub fn new(false_points: Vec<Point>, true_points: Vec<Point>) -> Self {
        Self {
            false_points,
            true_points,
        }
    }

    pub fn r(&self) -> usize {
        self.false_points.len()
    }

    /// Checks every invariant of a witness for `f`.
    pub fn validates(&self, f: &TruthTable) -> bool {
        let r = self.false_points.len();
        if r < 2 || r != self.true_points.len() {
            return false;
        }
        let all = self.false_points.iter().chain(self.true_points.iter());
        if !all.clone().all(|p| p.arity() == f.arity()) {
            return false;
        }
        if !self.false_points.iter().all(|p| !f.get(p.index()))
            || !self.true_points.iter().all(|p| f.get(p.index()))
        {
            return false;
        }
        (0..f.arity()).all(|j| {
            let a = self.false_points.iter().filter(|p| p.bit(j)).count();
            let b = self.true_points.iter().filter(|p| p.bit(j)).count();
            a == b
        })
    }
}

pub const MAX_SUMMABILITY_ARITY: [usize; 2] = [12, 8];

/// Smallest-`r` summability witness, or `None` if `f` is not `k`-summable.
///
/// Multisets of zeros are indexed by their coordinate sum (the first
/// multiset in lexicographic order per sum); multisets of ones are scanned in
/// lexicographic order and the first collision is returned.
pub fn is_k_summable(f: &TruthTable, k: usize) -> Result<Option<SummabilityWitness>> {
    if !(2..=3).contains(&k) {
        return Err(Error::UnsupportedK(k));
    }
    let limit = MAX_SUMMABILITY_ARITY[k - 2];
    if f.arity() > limit {
        return Err(Error::TooManyVariables {
            what: "summability search",
            count: f.arity(),
            limit,
        });
    }
    let n = f.arity();
    let zeros: Vec<usize> = f.zeros().collect();
    let ones: Vec<usize> = f.ones().collect();
    for r in 2..=k {
        let base = (r + 1) as u64;
        let encode = |x: usize| -> u64 {
            (0..n)
                .fold((0u64, 1u64), |(acc, pw), j| {
                    (acc + pw * (x >> j & 1) as u64, pw * base)
                })
                .0
        };
        let zero_keys: Vec<u64> = zeros.iter().map(|&x| encode(x)).collect();
        let one_keys: Vec<u64> = ones.iter().map(|&x| encode(x)).collect();
        let mut by_sum: HashMap<u64, Vec<usize>> = HashMap::new();
        for_each_multiset(zeros.len(), r, |combo| {
            let key = combo.iter().map(|&i| zero_keys[i]).sum();
            by_sum.entry(key).or_insert_with(|| combo.to_vec());
            true
        });
        let mut found = None;
        for_each_multiset(ones.len(), r, |combo| {
            let key: u64 = combo.iter().map(|&i| one_keys[i]).sum();
            if let Some(zs) = by_sum.get(&key) {
                found = Some(SummabilityWitness {
                    false_points: zs
                        .iter()
                        .map(|&i| Point::new_unchecked(n, zeros[i]))
                        .collect(),
                    true_points: combo
                        .iter()
                        .map(|&i| Point::new_unchecked(n, ones[i]))
                        .collect(),
                });
                return false;
            }
            true
        });
        if found.is_some() {
            return Ok(found);
        }
    }
    Ok(None)
}

/// Visits non-decreasing index tuples of length `r` over `0..len` in
/// lexicographic order until `visit` returns `false`.
fn for_each_multiset(len: usize, r: usize, mut visit: impl FnMut(&[usize]) -> bool) {
    if len == 0 {
        return;
    }
    let mut combo = vec![0usize; r];
    loop {
        if !visit(&combo) {
            return;
        }
        let Some(pos) = (0..r).rev().find(|&i| combo[i] + 1 < len) else {
            return;
        };
        let next = combo[pos] + 1;
        combo[pos..].iter_mut().for_each(|c| *c = next);
    }
}

fn require_threshold(f: &TruthTable) -> Result<()> {
    if is_threshold(f).is_none() {
        return Err(Error::NotThreshold);
    }
    Ok(())
}

fn check_point(f: &TruthTable, p: &Point) -> Result<()> {
    if p.arity() != f.arity() {
        return Err(Error::ArityMismatch {
            expected: f.arity(),
            found: p.arity(),
        });
    }
    Ok(())
}

/// Whether flipping `f` at `p` leaves a threshold function.
pub fn is_essential(f: &TruthTable, p: &Point) -> Result<bool> {
    check_point(f, p)?;
    require_threshold(f)?;
    Ok(flip_is_threshold(f, p.index()))
}

fn flip_is_threshold(f: &TruthTable, index: usize) -> bool {
    is_threshold(&f.with_flipped(index)).is_some()
}

/// Whether some separating hyperplane of `f` passes through the zero `p`.
pub fn zero_on_separating_hyperplane(f: &TruthTable, p: &Point) -> Result<bool> {
    check_point(f, p)?;
    require_threshold(f)?;
    if f.get(p.index()) {
        return Err(Error::NotAZero(p.to_string()));
    }
    Ok(separable_dense(f, Some(p.index())))
}

/// All essential points, sorted by index. Each point is an independent LP.
pub fn essential_points(f: &TruthTable) -> Result<Vec<Point>> {
    require_threshold(f)?;
    let n = f.arity();
    Ok((0..f.len())
        .into_par_iter()
        .filter(|&x| flip_is_threshold(f, x))
        .map(|x| Point::new_unchecked(n, x))
        .collect())
}

/// Number of essential points, which equals the specification number.
pub fn specification_number(f: &TruthTable) -> Result<usize> {
    Ok(essential_points(f)?.len())
}

/// `points` specifies `f` among threshold functions iff it contains every essential point.
pub fn is_specifying_set(f: &TruthTable, points: &[Point]) -> Result<bool> {
    for p in points {
        check_point(f, p)?;
    }
    let essential = essential_points(f)?;
    Ok(essential.iter().all(|e| points.contains(e)))
}
