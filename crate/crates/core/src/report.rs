//! One-shot classification of a function.

use serde::{Deserialize, Serialize};

use crate::chow::{self, ChowStatus, ChowVerdict};
use crate::error::{Error, Result};
use crate::monotone::{self, Canalyzing, ExtremalSets};
use crate::readonce;
use crate::table::{Point, TruthTable};
use crate::threshold::{self, SummabilityWitness, ThresholdRepresentation};

/// Above this arity the expensive parts of a report (essential points, the
/// summability search, restriction-based Chow certificates) are skipped and
/// left empty.
pub const MAX_DETAIL_ARITY: usize = 12;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationReport {
    pub table: TruthTable,
    pub arity: usize,
    #[serde(with = "crate::serde_util::one_based_vec")]
    pub relevant_variables: Vec<usize>,
    pub k: usize,
    pub positive: bool,
    pub canalyzing: bool,
    pub canalyzing_certificate: Option<Canalyzing>,
    pub read_once: bool,
    pub read_once_formula: Option<String>,
    pub lro: bool,
    pub lro_formula: Option<String>,
    pub threshold: bool,
    pub threshold_representation: Option<ThresholdRepresentation>,
    pub chow: ChowVerdict,
    pub extremal: Option<ExtremalSets>,
    pub r: Option<usize>,
    pub specification_number: Option<usize>,
    pub essential_points: Option<Vec<Point>>,
    pub summability_witness: Option<SummabilityWitness>,
}

pub fn classify(f: &TruthTable) -> Result<ClassificationReport> {
    let n = f.arity();
    let relevant = f.relevant_variables();
    let positive = monotone::is_positive(f);
    let canalyzing = monotone::is_canalyzing(f);
    let read_once = readonce::is_read_once(f);
    let lro = readonce::is_lro(f);
    let representation = threshold::is_threshold(f);
    let chow = if n > MAX_DETAIL_ARITY {
        match &representation {
            Some(rep) => ChowVerdict {
                status: ChowStatus::Chow,
                certificate: Some(chow::ChowCertificate::Threshold {
                    representation: rep.clone(),
                }),
            },
            None => ChowVerdict {
                status: ChowStatus::Unknown,
                certificate: None,
            },
        }
    } else {
        chow::is_chow(f)
    };
    let extremal = if positive {
        Some(monotone::extremal_sets(f)?)
    } else {
        None
    };
    let detail = n <= MAX_DETAIL_ARITY;
    let essential = match (&representation, detail) {
        (Some(_), true) => Some(threshold::essential_points(f)?),
        _ => None,
    };
    let summability_witness = match (&representation, detail) {
        (None, true) => threshold::is_k_summable(f, 2)?,
        _ => None,
    };
    let report = ClassificationReport {
        table: f.clone(),
        arity: n,
        k: relevant.len(),
        relevant_variables: relevant,
        positive,
        canalyzing: canalyzing.is_some(),
        canalyzing_certificate: canalyzing,
        read_once: read_once.is_some(),
        read_once_formula: read_once.map(|a| a.render()),
        lro: lro.is_some(),
        lro_formula: lro.map(|a| a.render()),
        threshold: representation.is_some(),
        threshold_representation: representation,
        chow,
        r: extremal.as_ref().map(|e| e.r),
        extremal,
        specification_number: essential.as_ref().map(Vec::len),
        essential_points: essential,
        summability_witness,
    };
    report.check_consistency()?;
    Ok(report)
}

impl ClassificationReport {
    /// Cross-field invariants; `classify` refuses to emit a report that fails them.
    pub fn check_consistency(&self) -> Result<()> {
        let fail = |msg: &str| Err(Error::InconsistentReport(msg.to_string()));
        if self.k != self.relevant_variables.len() {
            return fail("k differs from the relevant-variable count");
        }
        if self.canalyzing != self.canalyzing_certificate.is_some()
            || self.read_once != self.read_once_formula.is_some()
            || self.lro != self.lro_formula.is_some()
            || self.threshold != self.threshold_representation.is_some()
        {
            return fail("a flag disagrees with its certificate");
        }
        if self.lro && !(self.read_once && self.threshold) {
            return fail("lro without read-once and threshold");
        }
        if self.threshold && self.chow.status == ChowStatus::NotChow {
            return fail("threshold function reported as not Chow");
        }
        if self.positive != self.extremal.is_some() || self.r != self.extremal.as_ref().map(|e| e.r)
        {
            return fail("extremal sets present exactly for positive functions");
        }
        if let (true, Some(r)) = (self.threshold, self.r) {
            if r < self.k + 1 {
                return fail("positive threshold function with fewer than k + 1 extremal points");
            }
        }
        if !self.threshold
            && (self.specification_number.is_some() || self.essential_points.is_some())
        {
            return fail("essential points reported for a non-threshold function");
        }
        if self.specification_number != self.essential_points.as_ref().map(Vec::len) {
            return fail("specification number differs from the essential-point count");
        }
        if let Some(w) = &self.summability_witness {
            if self.threshold || !w.validates(&self.table) {
                return fail("invalid summability witness");
            }
        }
        if let Some(rep) = &self.threshold_representation {
            if !rep.represents(&self.table) {
                return fail("threshold representation does not separate the function");
            }
        }
        if let Some(g) = self.chow.partner() {
            if g == &self.table || chow::chow_parameters(g) != chow::chow_parameters(&self.table) {
                return fail("Chow collision certificate does not collide");
            }
        }
        Ok(())
    }
}
