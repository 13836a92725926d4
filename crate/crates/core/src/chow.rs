//! Chow parameters and Chow-uniqueness verdicts.
//!
//! Up to four variables the verdict is exact: every table of the same arity is
//! compared. Beyond that only two rules are applied. Threshold functions are
//! Chow. A read-once function that is not lro contains a negation image of
//! `g1` or `g2`; replacing that restriction by its collision partner yields a
//! different function with the same parameters. Anything else is unknown.

use std::collections::HashMap;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::patterns::{self, Family, FamilySpec, RestrictionWitness};
use crate::readonce;
use crate::table::TruthTable;
use crate::threshold::{self, ThresholdRepresentation};

/// Largest arity decided by exhaustion.
pub const MAX_EXACT_ARITY: usize = 4;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ChowParameters {
    pub per_variable: Vec<u64>,
    pub total: u64,
}

impl ChowParameters {
    /// `(w_1, ..., w_n, w)`.
    pub fn as_tuple(&self) -> Vec<u64> {
        let mut v = self.per_variable.clone();
        v.push(self.total);
        v
    }
}

pub fn chow_parameters(f: &TruthTable) -> ChowParameters {
    ChowParameters {
        per_variable: (0..f.arity())
            .map(|v| f.and(&f.var_table(v)).count_ones())
            .collect(),
        total: f.count_ones(),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ChowStatus {
    Chow,
    NotChow,
    Unknown,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ChowCertificate {
    /// Every table of the arity was compared.
    Exhaustion { candidates: u64 },
    /// Threshold functions are determined by their parameters.
    Threshold {
        representation: ThresholdRepresentation,
    },
    /// A different function with the same parameters. When lifted from a
    /// `g1`/`g2` restriction, `pattern` and `restriction` say where.
    Collision {
        function: TruthTable,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        pattern: Option<FamilySpec>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        restriction: Option<RestrictionWitness>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChowVerdict {
    pub status: ChowStatus,
    pub certificate: Option<ChowCertificate>,
}

impl ChowVerdict {
    fn unknown() -> Self {
        Self {
            status: ChowStatus::Unknown,
            certificate: None,
        }
    }

    fn collision(function: TruthTable, lifted: Option<(FamilySpec, RestrictionWitness)>) -> Self {
        let (pattern, restriction) = match lifted {
            Some((p, w)) => (Some(p), Some(w)),
            None => (None, None),
        };
        Self {
            status: ChowStatus::NotChow,
            certificate: Some(ChowCertificate::Collision {
                function,
                pattern,
                restriction,
            }),
        }
    }

    /// The colliding function of a `not_chow` verdict.
    pub fn partner(&self) -> Option<&TruthTable> {
        match &self.certificate {
            Some(ChowCertificate::Collision { function, .. }) => Some(function),
            _ => None,
        }
    }
}

pub fn is_chow(f: &TruthTable) -> ChowVerdict {
    let n = f.arity();
    if n <= MAX_EXACT_ARITY {
        return cached_classes(n).verdict(f);
    }
    if let Some(representation) = threshold::is_threshold(f) {
        return ChowVerdict {
            status: ChowStatus::Chow,
            certificate: Some(ChowCertificate::Threshold { representation }),
        };
    }
    if readonce::is_read_once(f).is_some() && !readonce::is_lro_fn(f) {
        if let Some(v) = lifted_collision(f) {
            return v;
        }
    }
    ChowVerdict::unknown()
}

/// Collision partners: `(x1 | x3)(x2 | x4)` for `g1`, `x1 x3 | x2 x4` for `g2`.
fn partner_of(family: Family) -> TruthTable {
    let swap = crate::table::Permutation::swap(4, 1, 2).unwrap();
    patterns::make_family(&FamilySpec::fixed(family).unwrap())
        .permute_variables(&swap)
        .unwrap()
}

/// Replaces a `g1`/`g2` restriction of `f` by the matching image of its
/// partner, then checks the parameters directly.
fn lifted_collision(f: &TruthTable) -> Option<ChowVerdict> {
    for family in [Family::G1, Family::G2] {
        let spec = FamilySpec::fixed(family).unwrap();
        let pattern = patterns::make_family(&spec);
        let Ok(Some(w)) = patterns::contains_restriction(f, &pattern, true) else {
            continue;
        };
        // restricted = partner image pulled back through the equivalence
        let eq = &w.equivalence;
        let inner = partner_of(family)
            .negate_variables(&eq.negated)
            .ok()?
            .permute_variables(&eq.permutation.inverse())
            .ok()?;
        let bound = w
            .assignment
            .bindings()
            .iter()
            .fold(0usize, |m, &(v, _)| m | 1 << v);
        let values = w
            .assignment
            .bindings()
            .iter()
            .filter(|&&(_, b)| b)
            .fold(0usize, |m, &(v, _)| m | 1 << v);
        let free = w.assignment.free_variables();
        let g = TruthTable::from_fn(f.arity(), |x| {
            if x & bound != values {
                return f.get(x);
            }
            let y = free
                .iter()
                .enumerate()
                .fold(0usize, |acc, (j, &v)| acc | (x >> v & 1) << j);
            inner.get(y)
        })
        .ok()?;
        if g != *f && chow_parameters(&g) == chow_parameters(f) {
            return Some(ChowVerdict::collision(g, Some((spec, w))));
        }
    }
    None
}

/// Parameters of a table of at most four variables packed into one integer.
fn packed_key(n: usize, bits: u64) -> u64 {
    let mut key = bits.count_ones() as u64;
    for v in 0..n {
        key |= ((bits & var_mask(n, v)).count_ones() as u64) << (5 * (v + 1));
    }
    key
}

fn var_mask(n: usize, v: usize) -> u64 {
    (0..1u64 << n)
        .filter(|x| x >> v & 1 == 1)
        .fold(0, |m, x| m | 1 << x)
}

/// Every table of one small arity grouped by parameters, for sweeps that ask
/// many Chow questions at once.
pub struct ChowClasses {
    arity: usize,
    /// key -> (smallest table, second smallest table)
    buckets: HashMap<u64, (u64, Option<u64>)>,
}

impl ChowClasses {
    pub fn build(n: usize) -> Result<Self> {
        if n > MAX_EXACT_ARITY {
            return Err(crate::error::Error::TooManyVariables {
                what: "Chow exhaustion",
                count: n,
                limit: MAX_EXACT_ARITY,
            });
        }
        let mut buckets: HashMap<u64, (u64, Option<u64>)> = HashMap::new();
        // ascending order keeps the two smallest tables per key
        for g in 0..1u64 << (1usize << n) {
            buckets
                .entry(packed_key(n, g))
                .and_modify(|e| {
                    if e.1.is_none() {
                        e.1 = Some(g);
                    }
                })
                .or_insert((g, None));
        }
        Ok(Self { arity: n, buckets })
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn class_count(&self) -> usize {
        self.buckets.len()
    }

    /// Same answer as [`is_chow`] on tables of this arity.
    pub fn verdict(&self, f: &TruthTable) -> ChowVerdict {
        assert_eq!(
            f.arity(),
            self.arity,
            "table arity differs from the class table"
        );
        let own = f.as_u64().unwrap();
        let (first, second) = self.buckets[&packed_key(self.arity, own)];
        let partner = if first != own { Some(first) } else { second };
        match partner {
            Some(g) => ChowVerdict::collision(TruthTable::from_u64(self.arity, g).unwrap(), None),
            None => ChowVerdict {
                status: ChowStatus::Chow,
                certificate: Some(ChowCertificate::Exhaustion {
                    candidates: 1u64 << (1usize << self.arity),
                }),
            },
        }
    }

    pub fn is_chow(&self, f: &TruthTable) -> bool {
        self.verdict(f).status == ChowStatus::Chow
    }
}

/// Class tables built on first use; a build is a single pass over at most
/// 65,536 tables.
fn cached_classes(n: usize) -> &'static ChowClasses {
    static CACHE: [OnceLock<ChowClasses>; MAX_EXACT_ARITY + 1] =
        [const { OnceLock::new() }; MAX_EXACT_ARITY + 1];
    CACHE[n].get_or_init(|| ChowClasses::build(n).expect("arity within the exact range"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> TruthTable {
        s.parse().unwrap()
    }

    #[test]
    fn parameters() {
        let g1 = t("4:EEE0");
        assert_eq!(chow_parameters(&g1).as_tuple(), vec![6, 6, 6, 6, 9]);
        assert_eq!(
            chow_parameters(&partner_of(Family::G1)).as_tuple(),
            vec![6, 6, 6, 6, 9]
        );
        let zero = TruthTable::constant(3, false).unwrap();
        assert_eq!(chow_parameters(&zero).as_tuple(), vec![0, 0, 0, 0]);
    }

    #[test]
    fn verdicts() {
        let g1 = t("4:EEE0");
        let v = is_chow(&g1);
        assert_eq!(v.status, ChowStatus::NotChow);
        let p = v.partner().unwrap();
        assert_ne!(p, &g1);
        assert_eq!(chow_parameters(p), chow_parameters(&g1));
        assert_eq!(is_chow(&t("3:E8")).status, ChowStatus::Chow);
        assert_eq!(
            is_chow(&TruthTable::constant(2, true).unwrap()).status,
            ChowStatus::Chow
        );
    }

    #[test]
    fn classes_agree_with_scan() {
        let classes = ChowClasses::build(3).unwrap();
        for bits in 0..256u64 {
            let f = TruthTable::from_u64(3, bits).unwrap();
            assert_eq!(classes.verdict(&f), is_chow(&f), "{f}");
        }
    }

    #[test]
    fn lifted_certificate_at_five_variables() {
        // g1 on x1..x4 with an extra conjunct x5: read-once, not lro
        let f = crate::formula::parse("(x1 | x2) & (x3 | x4) & x5", 5)
            .unwrap()
            .eval_to_table();
        let v = is_chow(&f);
        assert_eq!(v.status, ChowStatus::NotChow);
        let p = v.partner().unwrap();
        assert_ne!(p, &f);
        assert_eq!(chow_parameters(p), chow_parameters(&f));

        let g5 = patterns::make_family(&FamilySpec::g(5).unwrap());
        assert_eq!(is_chow(&g5).status, ChowStatus::Chow);
        let xor5 = TruthTable::from_fn(5, |x| x.count_ones() % 2 == 1).unwrap();
        assert_eq!(is_chow(&xor5).status, ChowStatus::Unknown);
    }
}
