//! Structured report documents. JSON is the canonical form; the text form
//! is rendered from the same JSON tree so both carry the same numbers.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::cartan::{AutoSpec, DiagramAutomorphism, DynkinType};
use crate::corpus::VerificationResult;
use crate::coxeter::{BundleReport, CoxeterAnalysis, LeviAnalysis, OrbitData, Parabolic, ReportingBasis, Step2Certificate, Verdict};
use crate::roots::{CoweightVector, RootVector};
use crate::Rational;

/// `[numerator, denominator]`, lowest terms, positive denominator.
pub type RationalPair = [i64; 2];

pub fn rational_pair(q: &Rational) -> RationalPair {
    [*q.numer(), *q.denom()]
}

pub fn coweight_pairs(v: &CoweightVector) -> Vec<RationalPair> {
    v.0.iter().map(rational_pair).collect()
}

fn roots(v: &[RootVector]) -> Vec<Vec<i64>> {
    v.iter().map(|r| r.0.clone()).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitDoc {
    pub roots: Vec<Vec<i64>>,
    pub size: usize,
    pub degree: i64,
    pub sign: String,
}

impl From<&OrbitData> for OrbitDoc {
    fn from(o: &OrbitData) -> Self {
        OrbitDoc { roots: roots(&o.roots), size: o.size(), degree: o.degree, sign: o.sign.as_str().to_string() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionDoc {
    pub positive: usize,
    pub zero: usize,
    pub negative: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NodeDoc {
    pub node: usize,
    pub sign: i8,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParabolicDoc {
    pub basis: ReportingBasis,
    pub base: Vec<Vec<i64>>,
    pub nodes: Vec<NodeDoc>,
}

impl From<&Parabolic> for ParabolicDoc {
    fn from(p: &Parabolic) -> Self {
        ParabolicDoc {
            basis: p.basis,
            base: roots(&p.base),
            nodes: p.nodes.iter().map(|n| NodeDoc { node: n.node, sign: n.sign }).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentDoc {
    pub base: Vec<Vec<i64>>,
    pub coxeter_number: usize,
    pub coxeter_char_poly: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LeviDoc {
    pub rank: usize,
    pub maximal: bool,
    pub components: Vec<ComponentDoc>,
    pub coxeter_verdict: bool,
    pub fixes_complement: bool,
    pub char_poly_matches: bool,
    pub order_matches: bool,
    /// Coefficients, constant term first.
    pub restricted_char_poly: Vec<i64>,
    pub expected_char_poly: Vec<i64>,
    pub phi_order: usize,
    pub coxeter_lcm: usize,
}

impl From<&LeviAnalysis> for LeviDoc {
    fn from(l: &LeviAnalysis) -> Self {
        let v = &l.verdict;
        LeviDoc {
            rank: l.rank,
            maximal: l.maximal,
            components: l
                .components
                .iter()
                .map(|c| ComponentDoc {
                    base: roots(&c.base),
                    coxeter_number: c.coxeter_number,
                    coxeter_char_poly: c.coxeter_char_poly.clone(),
                })
                .collect(),
            coxeter_verdict: v.holds,
            fixes_complement: v.fixes_complement,
            char_poly_matches: v.char_poly_matches,
            order_matches: v.order_matches,
            restricted_char_poly: v.restricted_char_poly.clone(),
            expected_char_poly: v.expected_char_poly.clone(),
            phi_order: v.order,
            coxeter_lcm: v.coxeter_lcm,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisDoc {
    #[serde(rename = "type")]
    pub ty: String,
    pub rank: usize,
    pub automorphism: String,
    pub sigma: Vec<usize>,
    pub reps: Vec<usize>,
    pub m: usize,
    pub mu: Vec<RationalPair>,
    pub b_check: Vec<RationalPair>,
    pub phi: Vec<Vec<i64>>,
    pub orbits: Vec<OrbitDoc>,
    pub partition: PartitionDoc,
    pub levi_base: Vec<Vec<i64>>,
    pub levi: LeviDoc,
    pub parabolic: ParabolicDoc,
    pub dim_aut_plus: i64,
    pub fixed_space_dim: usize,
    pub sigma_orbit_count: usize,
    pub s: usize,
    pub step2: Vec<Step2Certificate>,
    pub weights: Vec<i64>,
    pub discrepancy_flags: Vec<String>,
}

fn auto_name(auto: Option<AutoSpec>, sigma: &DiagramAutomorphism) -> String {
    match auto {
        Some(a) => a.to_string(),
        None => sigma.to_string(),
    }
}

impl AnalysisDoc {
    pub fn new(a: &CoxeterAnalysis, auto: Option<AutoSpec>) -> Self {
        AnalysisDoc {
            ty: a.ty.to_string(),
            rank: a.ty.rank(),
            automorphism: auto_name(auto, &a.sigma),
            sigma: a.sigma.permutation().to_vec(),
            reps: a.reps.clone(),
            m: a.m,
            mu: coweight_pairs(&a.mu),
            b_check: coweight_pairs(&a.b_check),
            phi: a.phi.matrix().to_rows(),
            orbits: a.orbits.iter().map(OrbitDoc::from).collect(),
            partition: PartitionDoc { positive: a.partition.0, zero: a.partition.1, negative: a.partition.2 },
            levi_base: roots(&a.levi.base),
            levi: LeviDoc::from(&a.levi),
            parabolic: ParabolicDoc::from(&a.parabolic),
            dim_aut_plus: a.dim_aut_plus,
            fixed_space_dim: a.fixed_space_dim,
            sigma_orbit_count: a.sigma_orbit_count,
            s: a.s(),
            step2: a.step2.clone(),
            weights: a.weights.clone(),
            discrepancy_flags: a.flags.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstabilityDoc {
    pub orbits: Vec<OrbitDoc>,
    pub partition: PartitionDoc,
    pub levi_base: Vec<Vec<i64>>,
    pub levi: LeviDoc,
    pub parabolic: ParabolicDoc,
    pub dim_aut_plus: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GluingDoc {
    #[serde(rename = "type")]
    pub ty: String,
    pub rank: usize,
    pub translation: Vec<RationalPair>,
    pub finite: Vec<Vec<i64>>,
    pub m: usize,
    pub b_check: Vec<RationalPair>,
    pub verdict: Verdict,
    pub instability: Option<InstabilityDoc>,
}

impl GluingDoc {
    pub fn new(ty: DynkinType, r: &BundleReport) -> Self {
        GluingDoc {
            ty: ty.to_string(),
            rank: ty.rank(),
            translation: coweight_pairs(r.gluing.translation()),
            finite: r.gluing.finite_part().matrix().to_rows(),
            m: r.m,
            b_check: coweight_pairs(&r.b_check),
            verdict: r.verdict,
            instability: r.data.as_ref().map(|d| InstabilityDoc {
                orbits: d.orbits.iter().map(OrbitDoc::from).collect(),
                partition: PartitionDoc { positive: d.partition.0, zero: d.partition.1, negative: d.partition.2 },
                levi_base: roots(&d.levi.base),
                levi: LeviDoc::from(&d.levi),
                parabolic: ParabolicDoc::from(&d.parabolic),
                dim_aut_plus: d.dim_aut_plus,
            }),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightsDoc {
    #[serde(rename = "type")]
    pub ty: String,
    pub rank: usize,
    pub automorphism: String,
    pub weights: Vec<i64>,
    /// Dimension `s` of the weighted projective space.
    pub dimension: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseError {
    pub case_id: String,
    pub error: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationDoc {
    pub results: Vec<VerificationResult>,
    pub errors: Vec<CaseError>,
    pub passed: usize,
    pub failed: usize,
}

impl VerificationDoc {
    pub fn all_pass(&self) -> bool {
        self.failed == 0 && self.errors.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum ReportDocument {
    Analysis(AnalysisDoc),
    Gluing(GluingDoc),
    Weights(WeightsDoc),
    Verification(VerificationDoc),
}

impl ReportDocument {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(s: &str) -> serde_json::Result<Self> {
        serde_json::from_str(s)
    }

    pub fn to_text(&self) -> String {
        let v = serde_json::to_value(self).expect("report serializes");
        let mut out = String::new();
        render(&v, 0, &mut out);
        out
    }
}

const RATIONAL_FIELDS: [&str; 3] = ["mu", "b_check", "translation"];

fn is_flat(v: &Value) -> bool {
    match v {
        Value::Array(xs) => xs.iter().all(|x| !x.is_object() && is_flat(x)),
        Value::Object(_) => false,
        _ => true,
    }
}

fn inline(v: &Value, rational: bool) -> String {
    match v {
        Value::Array(xs) if rational => {
            let parts: Vec<String> = xs.iter().map(|p| format!("{}/{}", p[0], p[1])).collect();
            format!("[{}]", parts.join(", "))
        }
        Value::Array(xs) => format!("[{}]", xs.iter().map(|x| inline(x, false)).collect::<Vec<_>>().join(", ")),
        Value::String(s) => s.clone(),
        Value::Null => "none".to_string(),
        other => other.to_string(),
    }
}

fn render(v: &Value, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    match v {
        Value::Object(map) => {
            for (k, x) in map {
                if is_flat(x) {
                    let rational = RATIONAL_FIELDS.contains(&k.as_str());
                    out.push_str(&format!("{pad}{k}: {}\n", inline(x, rational)));
                } else {
                    out.push_str(&format!("{pad}{k}:\n"));
                    render(x, indent + 1, out);
                }
            }
        }
        Value::Array(xs) => {
            for x in xs {
                let mut item = String::new();
                render(x, indent + 1, &mut item);
                let inner = "  ".repeat(indent + 1);
                let body = item.strip_prefix(inner.as_str()).unwrap_or(&item);
                out.push_str(&format!("{pad}- {body}"));
            }
        }
        other => out.push_str(&format!("{pad}{}\n", inline(other, false))),
    }
}
