//! Machine-readable reports. Field order is fixed by the struct layout, so
//! equal inputs serialize to identical bytes.

use pendant_core::bounds::{BoundCheck, BoundsReport, NordhausGaddumReport};
use pendant_core::{Packing, SolveResult, TauKResult, TerminalSpec};
use serde::Serialize;

use crate::formats::{write_certificate, RawCertificate};

fn certificate_text(p: &Packing) -> String {
    write_certificate(&RawCertificate::from_packing(p))
}

#[derive(Debug, Serialize)]
pub struct SolveReport {
    pub command: &'static str,
    pub n: usize,
    pub terminals: Vec<usize>,
    pub value: usize,
    pub exact: bool,
    pub target: Option<usize>,
    pub upper_bound: usize,
    pub trees_enumerated: u64,
    pub candidate_sets: u64,
    pub bnb_nodes: u64,
    pub certificate: String,
}

impl SolveReport {
    pub fn new(n: usize, target: Option<usize>, res: &SolveResult) -> Self {
        SolveReport {
            command: "solve",
            n,
            terminals: res.certificate.spec.root_first(),
            value: res.value,
            exact: res.exact,
            target,
            upper_bound: res.stats.upper_bound,
            trees_enumerated: res.stats.trees_enumerated,
            candidate_sets: res.stats.candidate_sets,
            bnb_nodes: res.stats.bnb_nodes,
            certificate: certificate_text(&res.certificate),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct SpecValue {
    pub terminals: Vec<usize>,
    pub value: usize,
}

fn spec_values(v: &[(TerminalSpec, usize)]) -> Vec<SpecValue> {
    v.iter()
        .map(|(s, value)| SpecValue {
            terminals: s.root_first(),
            value: *value,
        })
        .collect()
}

#[derive(Debug, Serialize)]
pub struct TauKReport {
    pub command: &'static str,
    pub n: usize,
    pub k: usize,
    pub value: usize,
    pub witness: Vec<usize>,
    pub certificate: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub per_spec: Option<Vec<SpecValue>>,
}

impl TauKReport {
    pub fn new(n: usize, k: usize, res: &TauKResult) -> Self {
        TauKReport {
            command: "tau-k",
            n,
            k,
            value: res.value,
            witness: res.witness_spec.root_first(),
            certificate: certificate_text(&res.certificate),
            per_spec: res.per_spec.as_deref().map(spec_values),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct BoundsJson {
    pub command: &'static str,
    pub n: usize,
    pub k: usize,
    pub order_bound: usize,
    pub semidegree_bound: usize,
    pub zero_rule_fires: bool,
    pub cut_bound: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub per_spec_cut: Option<Vec<SpecValue>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tau_k: Option<usize>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub audit: Vec<AuditJson>,
}

#[derive(Debug, Serialize)]
pub struct AuditJson {
    pub bound: &'static str,
    pub value: usize,
    pub status: &'static str,
}

impl BoundsJson {
    pub fn new(r: &BoundsReport, tau_k: Option<usize>, audit: &[BoundCheck]) -> Self {
        BoundsJson {
            command: "bounds",
            n: r.n,
            k: r.k,
            order_bound: r.order_bound,
            semidegree_bound: r.semidegree_bound,
            zero_rule_fires: r.zero_rule_fires,
            cut_bound: r.cut_bound,
            per_spec_cut: r.per_spec_cut.as_deref().map(spec_values),
            tau_k,
            audit: audit
                .iter()
                .map(|c| AuditJson {
                    bound: c.name,
                    value: c.bound,
                    status: c.status.code(),
                })
                .collect(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct NgJson {
    pub command: &'static str,
    pub n: usize,
    pub k: usize,
    pub tau: usize,
    pub tau_complement: usize,
    pub sum: usize,
    pub product: usize,
    pub sum_upper: usize,
    pub product_upper: usize,
    pub sum_ok: bool,
    pub product_ok: bool,
    pub sum_attains_upper: bool,
    pub sum_attains_zero: bool,
    pub product_attains_upper: bool,
    pub product_attains_zero: bool,
}

impl From<&NordhausGaddumReport> for NgJson {
    fn from(r: &NordhausGaddumReport) -> Self {
        NgJson {
            command: "ng-check",
            n: r.n,
            k: r.k,
            tau: r.tau,
            tau_complement: r.tau_complement,
            sum: r.sum,
            product: r.product,
            sum_upper: r.sum_upper,
            product_upper: r.product_upper,
            sum_ok: r.sum_ok,
            product_ok: r.product_ok,
            sum_attains_upper: r.sum_attains_upper,
            sum_attains_zero: r.sum_attains_zero,
            product_attains_upper: r.product_attains_upper,
            product_attains_zero: r.product_attains_zero,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct GadgetJson {
    pub command: &'static str,
    pub kind: &'static str,
    pub source: String,
    pub notes: Vec<String>,
    pub n: usize,
    pub m: usize,
    pub k: usize,
    pub terminals: Vec<usize>,
    pub digraph: String,
    pub provenance: String,
}

#[derive(Debug, Serialize)]
pub struct VerifyJson {
    pub command: &'static str,
    pub valid: bool,
    pub trees: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Debug, Serialize)]
pub struct OracleJson {
    pub command: &'static str,
    pub oracle: &'static str,
    pub feasible: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value: Option<usize>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub witness: Vec<Vec<usize>>,
}

#[derive(Debug, Serialize)]
pub struct GenJson {
    pub command: &'static str,
    pub family: String,
    pub n: usize,
    pub p: f64,
    pub seed: u64,
    pub m: usize,
    pub digraph: String,
}
