//! The JSON report. Field order follows struct order, so two runs on the
//! same input serialize to the same bytes once timings are dropped.

use mlog_core::approximation::{ExtComparison, IsoCheck};
use mlog_core::freeness::{DualityCertificate, ExtCheck, PropertyResult, Verdict};
use mlog_kernel::{BettiTable, HilbertSeries};
use serde::Serialize;

use crate::problem::ProblemFile;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, Serialize)]
pub struct ReportDocument {
    pub schema_version: u32,
    pub tool: ToolInfo,
    pub problem: ProblemFile,
    pub geometry: GeometryReport,
    pub results: Vec<DegreeReport>,
    pub properties: Vec<PropertyReport>,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timings_us: Option<Timings>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ToolInfo {
    pub name: String,
    pub version: String,
}

impl ToolInfo {
    pub fn current() -> Self {
        ToolInfo {
            name: "mlog".into(),
            version: env!("CARGO_PKG_VERSION").into(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct GeometryReport {
    pub n: usize,
    pub k: usize,
    pub dim: usize,
    pub x_equals_c: bool,
    pub x_pdim: usize,
    pub singular_height: usize,
    pub degree_bound: i64,
    pub betti_x: BettiReport,
    pub hilbert_x: SeriesReport,
    pub linked_ideal: Vec<String>,
    pub fundamental_form: FormReport,
}

#[derive(Clone, Debug, Serialize)]
pub struct FormReport {
    pub form: String,
    pub degree: i64,
    pub a: String,
    pub b: String,
    pub f: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BettiReport {
    pub totals: Vec<usize>,
    /// `(homological degree, internal degree, rank)`.
    pub entries: Vec<(usize, i64, usize)>,
}

impl From<&BettiTable> for BettiReport {
    fn from(b: &BettiTable) -> Self {
        BettiReport {
            totals: b.totals(),
            entries: b.entries().collect(),
        }
    }
}

/// `t^offset · Σ numerator[i] t^i / Π (1 - t^w)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SeriesReport {
    pub offset: i64,
    pub numerator: Vec<i64>,
    pub denominator_weights: Vec<u32>,
}

impl From<&HilbertSeries> for SeriesReport {
    fn from(h: &HilbertSeries) -> Self {
        let (offset, numerator) = h.numerator_dense();
        SeriesReport {
            offset,
            numerator,
            denominator_weights: h.weights().to_vec(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct DegreeReport {
    pub q: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verdict: Option<VerdictReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub duality: Option<DualityReport>,
    #[serde(rename = "cor49", skip_serializing_if = "Option::is_none")]
    pub ext_comparison: Option<ExtReport>,
    pub properties: Vec<PropertyReport>,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerdictReport {
    pub verdict: String,
    pub pdim: usize,
    pub k: usize,
    pub betti: BettiReport,
    pub jacobian_depth: Option<usize>,
    pub jacobian_dim: Option<usize>,
    pub jacobian_mcm: bool,
}

impl From<&Verdict> for VerdictReport {
    fn from(v: &Verdict) -> Self {
        VerdictReport {
            verdict: if v.free { "free" } else { "not free" }.into(),
            pdim: v.pdim,
            k: v.k,
            betti: (&v.betti).into(),
            jacobian_depth: v.jacobian_depth,
            jacobian_dim: v.jacobian_dim,
            jacobian_mcm: v.jacobian_mcm,
        }
    }
}

#[derive(Clone, Copy, Debug, Serialize)]
pub struct IsoReport {
    pub injective: bool,
    pub surjective: bool,
}

impl From<&IsoCheck> for IsoReport {
    fn from(c: &IsoCheck) -> Self {
        IsoReport {
            injective: c.injective,
            surjective: c.surjective,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct DualityReport {
    pub forward: IsoReport,
    pub reverse: Option<IsoReport>,
    pub passed: bool,
}

impl From<&DualityCertificate> for DualityReport {
    fn from(d: &DualityCertificate) -> Self {
        DualityReport {
            forward: (&d.forward).into(),
            reverse: d.reverse.as_ref().map(Into::into),
            passed: d.holds(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ExtReport {
    pub twist: i64,
    pub ext_k_minus_1: SeriesReport,
    pub ker_alpha_bar: SeriesReport,
    pub ext_k: SeriesReport,
    pub coker_nu: SeriesReport,
    pub ext_k_zero: bool,
    pub nu_surjective: bool,
    pub vanishing_matches_verdict: bool,
    pub depth_routes_agree: bool,
    pub passed: bool,
}

impl From<&ExtCheck> for ExtReport {
    fn from(e: &ExtCheck) -> Self {
        let c: &ExtComparison = &e.comparison;
        ExtReport {
            twist: c.twist,
            ext_k_minus_1: (&c.ext_km1).into(),
            ker_alpha_bar: (&c.ker_alpha_bar).into(),
            ext_k: (&c.ext_k).into(),
            coker_nu: (&c.coker_nu).into(),
            ext_k_zero: c.ext_k_zero,
            nu_surjective: c.nu_surjective,
            vanishing_matches_verdict: e.vanishing_matches_verdict,
            depth_routes_agree: e.depth_routes_agree,
            passed: e.holds(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PropertyReport {
    pub name: String,
    pub passed: bool,
    pub informational: bool,
}

impl From<PropertyResult> for PropertyReport {
    fn from(p: PropertyResult) -> Self {
        PropertyReport {
            name: p.name,
            passed: p.passed,
            informational: p.informational,
        }
    }
}

impl PropertyReport {
    pub fn new(name: impl Into<String>, passed: bool) -> Self {
        PropertyReport {
            name: name.into(),
            passed,
            informational: false,
        }
    }

    pub fn fails_run(&self) -> bool {
        !self.passed && !self.informational
    }
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Timings {
    pub geometry: u64,
    /// `(q, microseconds)`.
    pub degrees: Vec<(usize, u64)>,
    pub global: u64,
    pub total: u64,
}

impl ReportDocument {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    /// Names of every failed check, in report order.
    pub fn failures(&self) -> Vec<String> {
        let mut out = Vec::new();
        for r in &self.results {
            if let Some(d) = &r.duality {
                if !d.passed {
                    out.push(format!("q = {}: duality", r.q));
                }
            }
            if let Some(e) = &r.ext_comparison {
                if !e.passed {
                    out.push(format!("q = {}: ext comparison", r.q));
                }
            }
            for p in r.properties.iter().filter(|p| p.fails_run()) {
                out.push(format!("q = {}: {}", r.q, p.name));
            }
        }
        for p in self.properties.iter().filter(|p| p.fails_run()) {
            out.push(p.name.clone());
        }
        out
    }
}
