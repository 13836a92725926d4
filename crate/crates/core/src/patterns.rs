//! Named function families, equivalence under variable permutation and
//! negation, and forbidden-restriction search.
//!
//! Equivalence never includes output negation. Patterns are always matched on
//! their relevant variables, so a pattern with `k` relevant variables is
//! looked for among restrictions fixing exactly `n - k` variables of `f`.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::formula::{Formula, FormulaAst};
use crate::readonce;
use crate::table::{permutations, PartialAssignment, Permutation, TruthTable};

/// Largest relevant-variable count accepted by [`canonical_form`].
pub const MAX_CANONICAL_ARITY: usize = 6;
/// Largest relevant-variable count accepted by [`find_equivalence`] and the
/// up-to-equivalence restriction search.
pub const MAX_EQUIVALENCE_ARITY: usize = 12;
/// Largest arity accepted by [`stetsenko_witness`].
pub const MAX_STETSENKO_ARITY: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    #[serde(rename = "g_n")]
    G,
    #[serde(rename = "f_n")]
    F,
    #[serde(rename = "h1_n")]
    H1,
    #[serde(rename = "h2_n")]
    H2,
    #[serde(rename = "h3")]
    H3,
    #[serde(rename = "h4")]
    H4,
    #[serde(rename = "g1")]
    G1,
    #[serde(rename = "g2")]
    G2,
}

impl Family {
    pub const ALL: [Family; 8] = [
        Family::G,
        Family::F,
        Family::H1,
        Family::H2,
        Family::H3,
        Family::H4,
        Family::G1,
        Family::G2,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::G => "g_n",
            Family::F => "f_n",
            Family::H1 => "h1_n",
            Family::H2 => "h2_n",
            Family::H3 => "h3",
            Family::H4 => "h4",
            Family::G1 => "g1",
            Family::G2 => "g2",
        }
    }

    /// Arity of the fixed-size families.
    pub fn fixed_arity(self) -> Option<usize> {
        match self {
            Family::H3 => Some(5),
            Family::H4 | Family::G1 | Family::G2 => Some(4),
            _ => None,
        }
    }

    fn min_arity(self) -> usize {
        match self {
            Family::G | Family::H2 => 3,
            Family::H1 => 2,
            Family::F => 4,
            other => other.fixed_arity().unwrap(),
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::InvalidFamily(format!("unknown family `{s}`")))
    }
}

/// A family member: `g_n:5`, `h3`, ...
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FamilySpec {
    pub family: Family,
    pub n: usize,
}

impl FamilySpec {
    pub fn new(family: Family, n: usize) -> Result<Self> {
        let ok = match family.fixed_arity() {
            Some(a) => n == a,
            None => n >= family.min_arity() && n <= crate::table::MAX_ARITY,
        };
        if !ok {
            return Err(Error::InvalidFamily(format!(
                "{} is not defined for n = {n}",
                family.name()
            )));
        }
        Ok(Self { family, n })
    }

    pub fn fixed(family: Family) -> Result<Self> {
        let n = family
            .fixed_arity()
            .ok_or_else(|| Error::InvalidFamily(format!("{} needs an arity", family.name())))?;
        Ok(Self { family, n })
    }

    pub fn g(n: usize) -> Result<Self> {
        Self::new(Family::G, n)
    }

    pub fn f(n: usize) -> Result<Self> {
        Self::new(Family::F, n)
    }

    pub fn arity(&self) -> usize {
        self.n
    }

    /// The defining DNF as a formula.
    pub fn formula(&self) -> FormulaAst {
        let n = self.n;
        let x = Formula::Var;
        let conj = |vars: std::ops::Range<usize>, positive: bool| {
            Formula::and(vars.map(|v| Formula::literal(v, positive)))
        };
        let root = match self.family {
            // x1 x2 | ... | x1 xn | x2 ... xn
            Family::G => Formula::or(
                (1..n)
                    .map(|j| Formula::and([x(0), x(j)]))
                    .chain(std::iter::once(conj(1..n, true))),
            ),
            // x1 x2 | ... | x1 x(n-1) | x2 ... xn
            Family::F => Formula::or(
                (1..n - 1)
                    .map(|j| Formula::and([x(0), x(j)]))
                    .chain(std::iter::once(conj(1..n, true))),
            ),
            Family::H1 => Formula::or([conj(0..n, true), conj(0..n, false)]),
            // x1 (x2 | x3 ... xn) | x2 !x3 ... !xn
            Family::H2 => Formula::or([
                Formula::and([x(0), Formula::or([x(1), conj(2..n, true)])]),
                Formula::and([x(1), conj(2..n, false)]),
            ]),
            // x1 (x3 x4 | x5) | x2 (x3 | x4 x5)
            Family::H3 => Formula::or([
                Formula::and([x(0), Formula::or([Formula::and([x(2), x(3)]), x(4)])]),
                Formula::and([x(1), Formula::or([x(2), Formula::and([x(3), x(4)])])]),
            ]),
            // x1 (x2 | x3) | x3 x4
            Family::H4 => Formula::or([
                Formula::and([x(0), Formula::or([x(1), x(2)])]),
                Formula::and([x(2), x(3)]),
            ]),
            Family::G1 => Formula::and([Formula::or([x(0), x(1)]), Formula::or([x(2), x(3)])]),
            Family::G2 => Formula::or([Formula::and([x(0), x(1)]), Formula::and([x(2), x(3)])]),
        };
        FormulaAst::new(n, root).expect("family formulas stay within their arity")
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.family.fixed_arity().is_some() {
            f.write_str(self.family.name())
        } else {
            write!(f, "{}:{}", self.family.name(), self.n)
        }
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    /// `name` for fixed families, `name:n` otherwise.
    fn from_str(s: &str) -> Result<Self> {
        match s.split_once(':') {
            Some((name, n)) => {
                let n = n
                    .parse()
                    .map_err(|_| Error::InvalidFamily(format!("bad arity in `{s}`")))?;
                FamilySpec::new(name.parse()?, n)
            }
            None => FamilySpec::fixed(s.parse()?),
        }
    }
}

pub fn make_family(spec: &FamilySpec) -> TruthTable {
    spec.formula().eval_to_table()
}

/// Smallest table in the orbit of `f` (restricted to its relevant variables)
/// under variable permutation and negation.
pub fn canonical_form(f: &TruthTable) -> Result<TruthTable> {
    let (g, _) = f.compact();
    let k = g.arity();
    if k > MAX_CANONICAL_ARITY {
        return Err(Error::TooManyVariables {
            what: "canonical form",
            count: k,
            limit: MAX_CANONICAL_ARITY,
        });
    }
    let perms = permutations(k);
    let best = perms
        .par_iter()
        .map(|p| {
            let permuted = g.permute_unchecked(p);
            (0..1usize << k)
                .map(|mask| permuted.negate_mask(mask))
                .min()
                .unwrap()
        })
        .min()
        .unwrap();
    Ok(best)
}

/// A permutation `p` and negation set `s` with `to == from.permute(p).negate(s)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Equivalence {
    pub permutation: Permutation,
    #[serde(with = "crate::serde_util::one_based_vec")]
    pub negated: Vec<usize>,
}

impl Equivalence {
    pub fn identity(n: usize) -> Self {
        Self {
            permutation: Permutation::identity(n),
            negated: Vec::new(),
        }
    }

    pub fn apply(&self, f: &TruthTable) -> Result<TruthTable> {
        f.permute_variables(&self.permutation)?
            .negate_variables(&self.negated)
    }
}

/// Backtracking search for an equivalence between same-arity tables.
///
/// Variables of `from` are matched one at a time; a partial matching survives
/// only while every sub-cube fixed by the matched variables has the same
/// number of ones on both sides.
pub fn find_equivalence(from: &TruthTable, to: &TruthTable) -> Result<Option<Equivalence>> {
    if from.arity() != to.arity() {
        return Err(Error::ArityMismatch {
            expected: from.arity(),
            found: to.arity(),
        });
    }
    let k = from.arity();
    if k > MAX_EQUIVALENCE_ARITY {
        return Err(Error::TooManyVariables {
            what: "equivalence search",
            count: k,
            limit: MAX_EQUIVALENCE_ARITY,
        });
    }
    if from.count_ones() != to.count_ones() || profile(from) != profile(to) {
        return Ok(None);
    }
    let from_ones: Vec<usize> = from.ones().collect();
    let to_ones: Vec<usize> = to.ones().collect();
    // histograms of `from` over its first d variables
    let from_hist: Vec<Vec<u32>> = (0..=k)
        .map(|d| {
            let mut h = vec![0u32; 1 << d];
            for &y in &from_ones {
                h[y & ((1 << d) - 1)] += 1;
            }
            h
        })
        .collect();
    let mut search = Search {
        k,
        to_ones: &to_ones,
        from_hist: &from_hist,
        image: Vec::with_capacity(k),
        flips: Vec::with_capacity(k),
        used: 0,
    };
    if !search.extend() {
        return Ok(None);
    }
    let negated: Vec<usize> = search
        .image
        .iter()
        .zip(search.flips.iter())
        .filter(|(_, &s)| s)
        .map(|(&i, _)| i)
        .sorted()
        .collect();
    let eq = Equivalence {
        permutation: Permutation::new(search.image).expect("search assigns a bijection"),
        negated,
    };
    debug_assert_eq!(eq.apply(from).unwrap(), *to);
    Ok(Some(eq))
}

/// Sorted per-variable `{ones with x=0, ones with x=1}` pairs; invariant under
/// the group.
fn profile(f: &TruthTable) -> Vec<(u64, u64)> {
    let total = f.count_ones();
    (0..f.arity())
        .map(|v| {
            let high = f.and(&f.var_table(v)).count_ones();
            let low = total - high;
            (low.min(high), low.max(high))
        })
        .sorted()
        .collect()
}

struct Search<'a> {
    k: usize,
    to_ones: &'a [usize],
    from_hist: &'a [Vec<u32>],
    /// `image[j]`: variable of `to` playing variable `j` of `from`.
    image: Vec<usize>,
    /// `flips[j]`: whether that variable is negated.
    flips: Vec<bool>,
    used: usize,
}

impl Search<'_> {
    fn extend(&mut self) -> bool {
        let d = self.image.len();
        if d == self.k {
            return true;
        }
        for i in 0..self.k {
            if self.used >> i & 1 == 1 {
                continue;
            }
            for flip in [false, true] {
                self.image.push(i);
                self.flips.push(flip);
                self.used |= 1 << i;
                if self.consistent() && self.extend() {
                    return true;
                }
                self.image.pop();
                self.flips.pop();
                self.used &= !(1 << i);
            }
        }
        false
    }

    fn consistent(&self) -> bool {
        let d = self.image.len();
        let mut h = vec![0u32; 1 << d];
        for &x in self.to_ones {
            let mut key = 0;
            for j in 0..d {
                key |= ((x >> self.image[j] & 1) ^ self.flips[j] as usize) << j;
            }
            h[key] += 1;
        }
        h == self.from_hist[d]
    }
}

/// How `pattern` sits inside `f`: restrict by `assignment`, then apply
/// `equivalence`, and the pattern (on its relevant variables) appears.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RestrictionWitness {
    pub assignment: PartialAssignment,
    #[serde(flatten)]
    pub equivalence: Equivalence,
}

impl RestrictionWitness {
    pub fn apply(&self, f: &TruthTable) -> Result<TruthTable> {
        self.equivalence.apply(&f.restrict(&self.assignment)?)
    }

    /// Re-applies the witness and compares with the compacted pattern.
    pub fn validates(&self, f: &TruthTable, pattern: &TruthTable) -> bool {
        self.apply(f).is_ok_and(|g| g == pattern.compact().0)
    }
}

/// First restriction of `f` equal to `pattern` on its relevant variables,
/// exactly or up to permutation and negation of variables.
///
/// Restrictions are visited by fixed set (lexicographic), then by values
/// (lexicographic, first fixed variable most significant).
pub fn contains_restriction(
    f: &TruthTable,
    pattern: &TruthTable,
    up_to_equivalence: bool,
) -> Result<Option<RestrictionWitness>> {
    let (target, _) = pattern.compact();
    let n = f.arity();
    let k = target.arity();
    if k > n {
        return Err(Error::TooManyVariables {
            what: "pattern",
            count: k,
            limit: n,
        });
    }
    if up_to_equivalence && k > MAX_EQUIVALENCE_ARITY {
        return Err(Error::TooManyVariables {
            what: "pattern",
            count: k,
            limit: MAX_EQUIVALENCE_ARITY,
        });
    }
    let fixed_sets: Vec<Vec<usize>> = (0..n).combinations(n - k).collect();
    let found = fixed_sets.par_iter().find_map_first(|fixed| {
        let m = fixed.len();
        let bound = fixed.iter().fold(0usize, |acc, &v| acc | 1 << v);
        (0..1usize << m).find_map(|c| {
            let values = (0..m)
                .filter(|&p| c >> (m - 1 - p) & 1 == 1)
                .fold(0usize, |acc, p| acc | 1 << fixed[p]);
            let restricted = f.restrict_unchecked(bound, values);
            let equivalence = if up_to_equivalence {
                if restricted.relevant_variables().len() != k {
                    return None;
                }
                find_equivalence(&restricted, &target).ok()??
            } else if restricted == target {
                Equivalence::identity(k)
            } else {
                return None;
            };
            let assignment =
                PartialAssignment::new(n, fixed.iter().map(|&v| (v, values >> v & 1 == 1)))
                    .expect("fixed variables are distinct and in range");
            Some(RestrictionWitness {
                assignment,
                equivalence,
            })
        })
    });
    Ok(found)
}

/// Members of the minimal non-read-once list with at most `n` variables, in
/// search order: by arity, then g, h1, h2, h4, h3.
pub fn stetsenko_list(n: usize) -> Vec<FamilySpec> {
    let mut out = Vec::new();
    for k in 2..=n {
        for family in [Family::G, Family::H1, Family::H2, Family::H4, Family::H3] {
            if let Ok(spec) = FamilySpec::new(family, k) {
                out.push(spec);
            }
        }
    }
    out
}

/// A member of the minimal non-read-once list found inside a function.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StetsenkoWitness {
    pub member: FamilySpec,
    /// The restriction matches the complement of the member. Read-once
    /// functions are closed under complement, so complements of list members
    /// are minimal non-read-once functions too (`!h1_3` is one).
    pub complemented: bool,
    pub restriction: RestrictionWitness,
}

impl StetsenkoWitness {
    pub fn pattern(&self) -> TruthTable {
        let p = make_family(&self.member);
        if self.complemented {
            p.not()
        } else {
            p
        }
    }

    pub fn validates(&self, f: &TruthTable) -> bool {
        self.restriction.validates(f, &self.pattern())
    }
}

/// A minimal non-read-once restriction of `f`, or `None` when `f` is read-once.
///
/// Members are tried in [`stetsenko_list`] order, each before its complement.
pub fn stetsenko_witness(f: &TruthTable) -> Result<Option<StetsenkoWitness>> {
    if f.arity() > MAX_STETSENKO_ARITY {
        return Err(Error::TooManyVariables {
            what: "non-read-once witness search",
            count: f.arity(),
            limit: MAX_STETSENKO_ARITY,
        });
    }
    if readonce::is_read_once(f).is_some() {
        return Ok(None);
    }
    for member in stetsenko_list(f.relevant_variables().len()) {
        let p = make_family(&member);
        for complemented in [false, true] {
            let target = if complemented { p.not() } else { p.clone() };
            if let Some(restriction) = contains_restriction(f, &target, true)? {
                return Ok(Some(StetsenkoWitness {
                    member,
                    complemented,
                    restriction,
                }));
            }
        }
    }
    Ok(None)
}

/// The first `g_k` (`3 <= k <= min(n, 12)`) contained in `f` up to equivalence.
pub fn g_restriction(f: &TruthTable) -> Result<Option<(FamilySpec, RestrictionWitness)>> {
    let top = f.relevant_variables().len().min(MAX_EQUIVALENCE_ARITY);
    for k in 3..=top {
        let spec = FamilySpec::g(k)?;
        if let Some(w) = contains_restriction(f, &make_family(&spec), true)? {
            return Ok(Some((spec, w)));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> TruthTable {
        s.parse().unwrap()
    }

    #[test]
    fn family_tables() {
        assert_eq!(make_family(&FamilySpec::g(3).unwrap()), t("3:E8"));
        assert_eq!(make_family(&FamilySpec::f(4).unwrap()), t("4:E8A8"));
        assert_eq!(make_family(&"h1_n:2".parse().unwrap()), t("2:9"));
        assert_eq!(make_family(&"g1".parse().unwrap()), t("4:EEE0"));
        assert_eq!(make_family(&"g2".parse().unwrap()), t("4:F888"));
        assert!("g_n:2".parse::<FamilySpec>().is_err());
        assert!("h3:6".parse::<FamilySpec>().is_err());
        assert!("f_n".parse::<FamilySpec>().is_err());
        assert_eq!("g_n:7".parse::<FamilySpec>().unwrap().to_string(), "g_n:7");
    }

    #[test]
    fn canonical_examples() {
        assert_eq!(
            canonical_form(&t("2:6")).unwrap(),
            canonical_form(&t("2:9")).unwrap()
        );
        let g1 = t("4:EEE0");
        let g2 = t("4:F888");
        assert_ne!(canonical_form(&g1).unwrap(), canonical_form(&g2).unwrap());
        let p = Permutation::new(vec![2, 0, 1, 3]).unwrap();
        let image = g1
            .permute_variables(&p)
            .unwrap()
            .negate_variables(&[1, 3])
            .unwrap();
        assert_eq!(
            canonical_form(&image).unwrap(),
            canonical_form(&g1).unwrap()
        );
    }

    #[test]
    fn equivalence_search() {
        let g1 = t("4:EEE0");
        let p = Permutation::new(vec![3, 0, 2, 1]).unwrap();
        let image = g1
            .permute_variables(&p)
            .unwrap()
            .negate_variables(&[0, 2])
            .unwrap();
        let eq = find_equivalence(&g1, &image).unwrap().unwrap();
        assert_eq!(eq.apply(&g1).unwrap(), image);
        assert!(find_equivalence(&g1, &t("4:F888")).unwrap().is_none());
    }

    #[test]
    fn restriction_examples() {
        let f4 = t("4:E8A8");
        let w = contains_restriction(&f4, &t("3:E8"), false)
            .unwrap()
            .unwrap();
        assert_eq!(w.assignment.to_string(), "x4=1");
        assert!(w.validates(&f4, &t("3:E8")));

        let g1 = t("4:EEE0");
        let w = contains_restriction(&g1, &g1, true).unwrap().unwrap();
        assert!(w.assignment.is_empty());
        assert!(w.equivalence.permutation.is_identity());
        assert!(w.equivalence.negated.is_empty());

        let lro = crate::formula::parse("x1 | x2 (x3 | x4 x5)", 5)
            .unwrap()
            .eval_to_table();
        assert!(contains_restriction(&lro, &g1, true).unwrap().is_none());
        assert!(contains_restriction(&t("2:8"), &g1, true).is_err());
    }

    #[test]
    fn pattern_with_dummy_variables() {
        // x1 x2 embedded with a dummy x3
        let pattern = t("3:88");
        let f = t("3:E8");
        let w = contains_restriction(&f, &pattern, false).unwrap().unwrap();
        assert_eq!(w.assignment.len(), 1);
        assert!(w.validates(&f, &pattern));
    }

    #[test]
    fn stetsenko_examples() {
        let w = stetsenko_witness(&t("2:6")).unwrap().unwrap();
        assert_eq!(w.member.to_string(), "h1_n:2");
        assert!(!w.complemented);
        assert!(w.restriction.assignment.is_empty());
        assert!(w.validates(&t("2:6")));
        assert!(stetsenko_witness(&t("4:EEE0")).unwrap().is_none());
        let g4 = make_family(&FamilySpec::g(4).unwrap());
        let w = stetsenko_witness(&g4).unwrap().unwrap();
        assert!(w.validates(&g4));
        // not-all-equal on three variables needs the complement of h1_3
        let nae = t("3:7E");
        let w = stetsenko_witness(&nae).unwrap().unwrap();
        assert_eq!(
            (w.member.to_string().as_str(), w.complemented),
            ("h1_n:3", true)
        );
        assert!(w.validates(&nae));
    }
}
