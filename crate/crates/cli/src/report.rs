//! JSON report types. Integers that can grow without bound (dimensions, path
//! counts, polynomial coefficients) are written as decimal strings.

use num_bigint::BigInt;
use serde::Serialize;
use ufna_core::{
    CertificateStatus, FdimCertificate, GrowthClass, IntPoly, Presentation, Quiver, RationalSeries,
};

pub const SCHEMA: u32 = 1;

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub schema: u32,
    pub presentation: PresentationEcho,
    pub config: Config,
    pub quiver: QuiverSummary,
    pub degrees: Vec<DegreeRow>,
    pub checks: Vec<Check>,
    pub cyclic_probes: ProbeSummary,
    pub growth: String,
    pub hilbert: HilbertReport,
    pub verdict: Verdict,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

#[derive(Clone, Debug, Serialize)]
pub struct Config {
    pub max_degree: usize,
    pub m_max: usize,
    pub seed: u64,
    pub cap: usize,
    pub multiplicativity_samples: usize,
    pub random_probes: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct PresentationEcho {
    pub generators: Vec<String>,
    pub relations: Vec<String>,
    pub normalized_generators: Vec<String>,
    pub normalized_relations: Vec<String>,
    pub d: usize,
}

impl PresentationEcho {
    pub fn new(input: &Presentation, normalized: &Presentation) -> Self {
        let spell = |p: &Presentation| p.relations().iter().map(|r| p.spell(r)).collect();
        PresentationEcho {
            generators: input.generators().to_vec(),
            relations: spell(input),
            normalized_generators: normalized.generators().to_vec(),
            normalized_relations: spell(normalized),
            d: normalized.d(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct QuiverSummary {
    pub d: usize,
    pub vertices: usize,
    pub arrows: usize,
}

impl From<&Quiver> for QuiverSummary {
    fn from(q: &Quiver) -> Self {
        QuiverSummary {
            d: q.d(),
            vertices: q.num_vertices(),
            arrows: q.num_arrows(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct DegreeRow {
    pub n: usize,
    pub dim_a: String,
    pub paths: String,
    pub rank: String,
    pub ker: String,
    pub coker: String,
    pub span_ok: bool,
    pub kernel_words: Vec<String>,
    pub kernel_certificate: CertificateReport,
    pub cokernel_certificate: CertificateReport,
}

#[derive(Clone, Debug, Serialize)]
pub struct CertificateReport {
    pub status: &'static str,
    pub bound: Option<usize>,
    pub m_max: usize,
    /// `[m', holds]` pairs.
    pub table: Vec<(usize, bool)>,
}

impl From<&FdimCertificate> for CertificateReport {
    fn from(c: &FdimCertificate) -> Self {
        CertificateReport {
            status: match c.status {
                CertificateStatus::Certified => "certified",
                CertificateStatus::NotFoundWithinCap => "not_found_within_cap",
            },
            bound: c.bound,
            m_max: c.m_max,
            table: c.table.clone(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct ProbeSummary {
    pub n_max: usize,
    pub probes: usize,
    pub finite: usize,
    pub disagreements: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct SeriesReport {
    pub numerator: Vec<String>,
    pub denominator: Vec<String>,
    pub display: String,
}

impl From<&RationalSeries> for SeriesReport {
    fn from(s: &RationalSeries) -> Self {
        SeriesReport {
            numerator: coeff_strings(s.numerator()),
            denominator: coeff_strings(s.denominator()),
            display: s.to_string(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct HilbertReport {
    pub algebra: SeriesReport,
    pub quiver: SeriesReport,
    pub expansion: Vec<String>,
}

pub fn coeff_strings(p: &IntPoly) -> Vec<String> {
    if p.is_zero() {
        return vec!["0".into()];
    }
    p.coeffs().iter().map(BigInt::to_string).collect()
}

pub fn growth_string(g: GrowthClass) -> String {
    g.to_string()
}
