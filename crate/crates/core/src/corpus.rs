//! The printed reference cases, encoded as data, and a verifier that diffs
//! the engine against them.
//!
//! Vectors are written in the case's own node labels. Where the printed text
//! has an evident typo the intended vector is encoded and the raw text kept
//! in `repairs`. Printed values that no convention reproduces are kept as
//! printed and listed in `errata`; those cases fail verification.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cartan::{cartan_matrix, resolve_automorphism, AutoSpec, CartanData, DynkinType, Family};
use crate::coxeter::{analyze_in, parabolic_in_basis, CoxeterAnalysis, ParabolicNode};
use crate::error::{Error, Result};
use crate::linalg::IntMatrix;
use crate::roots::{generate_roots, RootSet, RootVector};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Coords {
    /// Simple-root coordinates.
    Alpha,
    /// Coefficients on the case's beta basis.
    Beta,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OrbitMode {
    /// The printed set is a whole engine orbit.
    Exact,
    /// Only part of the orbit is printed.
    Subset,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExpectedOrbit {
    pub label: String,
    pub roots: Vec<RootVector>,
    pub degree: i64,
    pub mode: OrbitMode,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Convention {
    /// `labels[i]` = standard index (0-based) of node `i + 1`; `None` means
    /// the standard numbering.
    pub labels: Option<Vec<usize>>,
    /// Nodes whose reflections build the twisted Coxeter element, in order.
    pub reps: Vec<usize>,
    pub notes: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusCase {
    pub id: String,
    pub ty: DynkinType,
    pub auto: AutoSpec,
    pub convention: Convention,
    /// In simple-root coordinates.
    pub beta_basis: Option<Vec<RootVector>>,
    pub orbit_coords: Coords,
    pub expected_orbits: Vec<ExpectedOrbit>,
    /// (1-based node of the reporting basis, sign).
    pub expected_parabolic: (usize, i8),
    pub expected_dim_aut_plus: Option<i64>,
    pub repairs: Vec<String>,
    pub errata: Vec<String>,
}

impl CorpusCase {
    pub fn cartan(&self) -> Result<CartanData> {
        let c = cartan_matrix(self.ty);
        match &self.convention.labels {
            Some(p) => c.relabeled(p),
            None => Ok(c),
        }
    }

    /// Expected orbit roots in simple-root coordinates.
    pub fn orbit_in_alpha(&self, o: &ExpectedOrbit) -> Vec<RootVector> {
        match (self.orbit_coords, &self.beta_basis) {
            (Coords::Beta, Some(beta)) => o.roots.iter().map(|c| from_beta(beta, c)).collect(),
            _ => o.roots.clone(),
        }
    }
}

/// `sum_i c_i beta_i`.
pub fn from_beta(beta: &[RootVector], c: &RootVector) -> RootVector {
    let r = beta[0].rank();
    let mut v = RootVector::zero(r);
    for (b, &k) in beta.iter().zip(&c.0) {
        v = v.add(&b.scale(k));
    }
    v
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum FieldStatus {
    Match { value: String },
    Mismatch { expected: String, computed: String },
    NotPrinted { computed: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldCheck {
    pub field: String,
    #[serde(flatten)]
    pub status: FieldStatus,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationResult {
    pub case_id: String,
    pub fields: Vec<FieldCheck>,
    pub pass: bool,
    pub notes: Vec<String>,
}

impl VerificationResult {
    pub fn mismatches(&self) -> impl Iterator<Item = &FieldCheck> {
        self.fields.iter().filter(|f| matches!(f.status, FieldStatus::Mismatch { .. }))
    }

    pub fn field(&self, name: &str) -> Option<&FieldStatus> {
        self.fields.iter().find(|f| f.field == name).map(|f| &f.status)
    }
}

// ---- vector builders, 1-based indices ----

fn e(r: usize, i: usize) -> RootVector {
    RootVector::simple(r, i - 1)
}

/// `c (x_lo + ... + x_hi)`, zero when the range is empty.
fn run(r: usize, lo: usize, hi: usize, c: i64) -> RootVector {
    let mut v = vec![0; r];
    for x in v.iter_mut().take(hi).skip(lo.saturating_sub(1)) {
        *x += c;
    }
    RootVector(v)
}

fn sum(vs: &[&RootVector]) -> RootVector {
    let mut acc = RootVector::zero(vs[0].rank());
    for v in vs {
        acc = acc.add(v);
    }
    acc
}

fn orbit(label: &str, roots: Vec<RootVector>, degree: i64) -> ExpectedOrbit {
    ExpectedOrbit { label: label.to_string(), roots, degree, mode: OrbitMode::Exact }
}

/// `{x_1, ..., x_k, -(x_1 + ... + x_k)}`.
fn chain_orbit(r: usize, lo: usize, hi: usize) -> Vec<RootVector> {
    let mut v: Vec<RootVector> = (lo..=hi).map(|i| e(r, i)).collect();
    v.push(run(r, lo, hi, 1).neg());
    v
}

fn ty(f: Family, n: usize) -> DynkinType {
    DynkinType::new(f, n).expect("corpus types are admissible")
}

struct Builder {
    case: CorpusCase,
}

impl Builder {
    fn new(id: String, t: DynkinType, auto: AutoSpec, reps: Vec<usize>) -> Self {
        Builder {
            case: CorpusCase {
                id,
                ty: t,
                auto,
                convention: Convention { labels: None, reps, notes: Vec::new() },
                beta_basis: None,
                orbit_coords: Coords::Alpha,
                expected_orbits: Vec::new(),
                expected_parabolic: (0, 0),
                expected_dim_aut_plus: None,
                repairs: Vec::new(),
                errata: Vec::new(),
            },
        }
    }
    fn labels(mut self, p: &[usize], note: &str) -> Self {
        self.case.convention.labels = Some(p.to_vec());
        self.case.convention.notes.push(note.to_string());
        self
    }
    fn note(mut self, s: &str) -> Self {
        self.case.convention.notes.push(s.to_string());
        self
    }
    fn beta(mut self, b: Vec<RootVector>) -> Self {
        self.case.beta_basis = Some(b);
        self.case.orbit_coords = Coords::Beta;
        self
    }
    fn orbits(mut self, o: Vec<ExpectedOrbit>) -> Self {
        self.case.expected_orbits = o;
        self
    }
    fn parabolic(mut self, node: usize, sign: i8) -> Self {
        self.case.expected_parabolic = (node, sign);
        self
    }
    fn dim(mut self, d: Option<i64>) -> Self {
        self.case.expected_dim_aut_plus = d;
        self
    }
    fn repair(mut self, s: &str) -> Self {
        self.case.repairs.push(s.to_string());
        self
    }
    fn erratum(mut self, s: &str) -> Self {
        self.case.errata.push(s.to_string());
        self
    }
    fn done(self) -> CorpusCase {
        self.case
    }
}

fn a_cases(n: usize, out: &mut Vec<CorpusCase>) {
    let r = n;
    let t = ty(Family::A, n);
    out.push(
        Builder::new(format!("A_{n}/id"), t, AutoSpec::Id, (0..=n).collect())
            .orbits(vec![
                orbit("O1", chain_orbit(r, 1, n - 1), 0),
                orbit("O2", (1..=n).map(|i| run(r, i, n, 1)).collect(), n as i64 + 1),
            ])
            .parabolic(n, 1)
            .dim(Some(n as i64 + 1))
            .done(),
    );
    let o1 = chain_orbit(r, 2, n);
    let o2: Vec<RootVector> = (1..=n).map(|i| run(r, 1, i, 1)).collect();
    out.push(
        Builder::new(format!("A_{n}/gamma"), t, AutoSpec::Gamma(1), vec![1])
            .orbits(vec![orbit("O1", o1.clone(), 0), orbit("O2", o2.clone(), -1)])
            .parabolic(1, -1)
            .dim(Some(1))
            .done(),
    );
    for l in 2..=n {
        if (n + 1).is_multiple_of(l) {
            out.push(
                Builder::new(format!("A_{n}/gamma^{l}"), t, AutoSpec::Gamma(l as u32), (1..=l).collect())
                    .repair("printed condition \"l|n\" read as l | n+1, the order of gamma")
                    .orbits(vec![orbit("O1", o1.clone(), 0), orbit("O2", o2.clone(), -(l as i64))])
                    .parabolic(1, -1)
                    .dim(Some(l as i64))
                    .done(),
            );
        }
    }
}

fn b_cases(n: usize, out: &mut Vec<CorpusCase>) {
    let r = n;
    let t = ty(Family::B, n);
    let mut beta: Vec<RootVector> = (1..n).map(|i| e(r, n - i)).collect();
    beta.push(run(r, 1, n, 1).neg());
    let bn = e(r, n).scale(2);
    let o3 = if n % 2 == 1 {
        let h = (n - 1) / 2;
        let mut v: Vec<RootVector> = (1..=h).map(|i| run(r, 2 * i, n - 1, 1)).collect();
        v.extend((1..=h).map(|i| run(r, 2 * i - 1, n - 1, 1).add(&bn)));
        orbit("O3", v, -1)
    } else {
        let mut v: Vec<RootVector> = (1..n).map(|i| run(r, i, n - 1, 1)).collect();
        v.extend((1..n).map(|i| run(r, i, n - 1, 1).add(&bn)));
        orbit("O3", v, -2)
    };
    out.push(
        Builder::new(format!("B_{n}/id"), t, AutoSpec::Id, (0..=n).collect())
            .beta(beta)
            .orbits(vec![
                orbit("O1", chain_orbit(r, 1, n - 2), 0),
                orbit("O2", vec![e(r, n), e(r, n).neg()], 0),
                o3,
            ])
            .parabolic(n - 1, -1)
            .dim(Some(n as i64 + 1))
            .done(),
    );
    out.push(
        Builder::new(format!("B_{n}/gamma"), t, AutoSpec::Gamma(1), (1..=n).rev().collect())
            .orbits(vec![
                orbit("O1", chain_orbit(r, 1, n - 1), 0),
                orbit("O2", (1..=n).rev().map(|i| run(r, i, n, 1)).collect(), -1),
            ])
            .parabolic(n, -1)
            .dim(Some(n as i64))
            .done(),
    );
}

fn c_cases(n: usize, out: &mut Vec<CorpusCase>) {
    let r = n;
    let t = ty(Family::C, n);
    out.push(
        Builder::new(format!("C_{n}/id"), t, AutoSpec::Id, (0..=n).collect())
            .orbits(vec![
                orbit("O1", chain_orbit(r, 1, n - 1), 0),
                orbit("O2", (1..=n).map(|i| run(r, i, n - 1, 2).add(&e(r, n))).collect(), 2),
            ])
            .parabolic(n, 1)
            .dim(Some(n as i64 + 1))
            .done(),
    );

    let (h1, hp, h) = ((n - 1) / 2, n.div_ceil(2), n / 2);
    let mut beta = vec![RootVector::zero(r); n + 1];
    for (i, b) in beta.iter_mut().enumerate().take(h1).skip(1) {
        *b = e(r, n - i);
    }
    beta[h1] = sum(&[&run(r, 1, h + 1, 1), &run(r, h + 2, n - 1, 2), &e(r, n)]).neg();
    for (i, b) in beta.iter_mut().enumerate().take(n - 1).skip(hp) {
        *b = e(r, i - h1);
    }
    beta[n - 1] = e(r, h);
    beta[n] = run(r, h + 1, n - 1, 2).add(&e(r, n));
    beta.remove(0);

    let b = Builder::new(format!("C_{n}/gamma"), t, AutoSpec::Gamma(1), (hp..=n).collect())
        .beta(beta)
        .note("reps [(n+1)/2] .. n, the printed word with the stray \"1\" dropped")
        .repair("\"s_{[(n+1)/2]}...s_n1\" read as s_{[(n+1)/2]}...s_n")
        .repair("first of the two \"beta_n = alpha_{[n/2]}\" lines read as beta_{n-1}");
    let case = if n.is_multiple_of(2) {
        let mut o3: Vec<RootVector> = (1..n).map(|i| run(r, i, n - 1, 1)).collect();
        o3.extend((1..n).map(|i| run(r, i, n, 1)));
        b.orbits(vec![
            orbit("O1", chain_orbit(r, 1, n - 2), 0),
            orbit("O2", vec![e(r, n), e(r, n).neg()], 0),
            orbit("O3", o3, -1),
        ])
        .parabolic(n - 1, -1)
        .dim(Some(n as i64 / 2 - 1))
        .erratum("printed dim Aut+ = [n/2]-1; the orbit degrees printed alongside give n/2+1 (= s+1)")
    } else {
        b.orbits(vec![
            orbit("O1", chain_orbit(r, 1, n - 1), 0),
            orbit("O2", (1..=n).map(|i| run(r, i, n - 1, 2).add(&e(r, n))).collect(), -1),
        ])
        .repair("\"2(beta_i,...,beta_{n-1})+beta_n\" read as 2(beta_i+...+beta_{n-1})+beta_n")
        .parabolic(n, -1)
    };
    out.push(case.done());
}

fn d_cases(n: usize, out: &mut Vec<CorpusCase>) {
    let r = n;
    let t = ty(Family::D, n);

    // identity
    let mut beta: Vec<RootVector> = (1..=n - 2).map(|i| e(r, n - i - 1)).collect();
    beta.push(run(r, 1, n - 1, 1).neg());
    beta.push(run(r, 1, n - 2, 1).add(&e(r, n)).neg());
    let tail = e(r, n - 1).add(&e(r, n));
    let o4 = if n.is_multiple_of(2) {
        let k = (n - 2) / 2;
        let mut v: Vec<RootVector> = (1..=k).map(|i| run(r, 2 * i, n - 2, 1)).collect();
        v.extend((1..=k).map(|i| run(r, 2 * i - 1, n - 2, 1).add(&tail)));
        orbit("O4", v, -1)
    } else {
        let mut v: Vec<RootVector> = (1..=n - 2).map(|i| run(r, i, n - 2, 1)).collect();
        v.extend((1..=n - 2).map(|i| run(r, i, n - 2, 1).add(&tail)));
        orbit("O4", v, -2)
    };
    let mut b = Builder::new(format!("D_{n}/id"), t, AutoSpec::Id, (0..=n).collect()).beta(beta);
    if n % 2 == 1 {
        b = b.repair("odd-n range \"1 <= i <= n-1\" read as 1 <= i <= n-2 (i = n-1 gives the empty sum)");
    }
    out.push(
        b.orbits(vec![
            orbit("O1", chain_orbit(r, 1, n - 3), 0),
            orbit("O2", vec![e(r, n - 1), e(r, n - 1).neg()], 0),
            orbit("O3", vec![e(r, n), e(r, n).neg()], 0),
            o4,
        ])
        .parabolic(n - 2, -1)
        .dim(Some(n as i64 + 1))
        .done(),
    );

    // gamma^2, the SO(2n) case
    let mut o1: Vec<RootVector> = (1..=n - 2).map(|i| e(r, i)).collect();
    o1.push(e(r, n));
    o1.push(run(r, 1, n - 2, 1).add(&e(r, n)).neg());
    let mut o2: Vec<RootVector> = (1..=n - 2)
        .map(|i| sum(&[&e(r, i), &run(r, i + 1, n - 2, 2), &e(r, n - 1), &e(r, n)]))
        .collect();
    o2.push(e(r, n - 1));
    o2.push(run(r, 1, n - 1, 1));
    out.push(
        Builder::new(format!("D_{n}/gamma^2"), t, AutoSpec::Gamma(2), (1..n).rev().collect())
            .orbits(vec![orbit("O1", o1, 0), orbit("O2", o2, -2)])
            .parabolic(n - 1, -1)
            .dim(Some(n as i64 - 1))
            .done(),
    );

    if n % 2 == 1 {
        let h = n.div_ceil(2);
        let mut beta = vec![RootVector::zero(r); n + 1];
        for (i, b) in beta.iter_mut().enumerate().take((n - 1) / 2).skip(1) {
            *b = e(r, i + 1);
        }
        beta[(n - 1) / 2] = run(r, h, n - 2, 1).add(&e(r, n));
        for (i, b) in beta.iter_mut().enumerate().take(n - 1).skip(h) {
            *b = e(r, (3 * n - 1) / 2 - i);
        }
        beta[n - 1] = run(r, 1, h, 1);
        beta[n] = sum(&[&run(r, 1, h, 1), &run(r, h + 1, n - 2, 2), &e(r, n - 1), &e(r, n)]).neg();
        beta.remove(0);
        let mut o2: Vec<RootVector> = (1..=n - 2)
            .map(|i| sum(&[&e(r, i), &run(r, i + 1, n - 2, 2), &e(r, n - 1), &e(r, n)]))
            .collect();
        o2.push(e(r, n));
        o2.push(run(r, 1, n - 2, 1).add(&e(r, n)));
        out.push(
            Builder::new(format!("D_{n}/gamma"), t, AutoSpec::Gamma(1), (h..n).collect())
                .beta(beta)
                .note("reps (n+1)/2 .. n-1; the printed word s_{(n+1)/2}...s_n meets the 4-cycle of gamma twice")
                .repair("\"beta_{(n-1)/2} = alpha_{(n+1)/2}+...+alpha_n\" read as alpha_{(n+1)/2}+...+alpha_{n-2}+alpha_n")
                .orbits(vec![orbit("O1", chain_orbit(r, 1, n - 1), 0), orbit("O2", o2, 2)])
                .parabolic(n, -1)
                .dim(Some((n as i64 - 1) / 2))
                .erratum("printed d_O2 = 2; O2 contains beta_n, on which b is negative, and the engine gives -1")
                .done(),
        );
    } else {
        let h = n / 2;
        let mut beta = vec![RootVector::zero(r); n + 1];
        for (i, b) in beta.iter_mut().enumerate().take(h.saturating_sub(2)).skip(1) {
            *b = e(r, i + 1 + h);
        }
        if h >= 3 {
            beta[h - 2] = run(r, h, n, 1);
        }
        for (i, b) in beta.iter_mut().enumerate().take(n - 3).skip(h - 1) {
            *b = e(r, n - i - 2);
        }
        beta[n - 3] = e(r, 1);
        beta[n - 2] = run(r, 1, h, 1).neg();
        beta[n - 1] = run(r, h + 1, n - 1, 1).neg();
        beta[n] = run(r, h + 1, n - 2, 1).add(&e(r, n)).neg();
        beta.remove(0);
        let (b2, b1, bb) = (e(r, n - 2), e(r, n - 1), e(r, n));
        let mut orbits = Vec::new();
        if n > 4 {
            orbits.push(orbit("O1", chain_orbit(r, 1, n - 4), 0));
        }
        orbits.push(orbit("O2", vec![b2.clone(), b1.clone(), bb.clone(), sum(&[&b2, &b1, &bb]).neg()], 0));
        let tails = [RootVector::zero(r), b2.add(&b1), b2.add(&bb), sum(&[&b2, &b2, &b1, &bb])];
        let o3 = (1..=n - 3)
            .flat_map(|i| tails.iter().map(move |t| run(r, i, n - 3, 1).add(t)))
            .collect();
        orbits.push(orbit("O3", o3, 2));
        let mut b = Builder::new(format!("D_{n}/tau"), t, AutoSpec::Tau, (h..=n).collect())
            .beta(beta)
            .repair("last r_j \"beta_{n-2}+beta_{n-1}+beta_n\" read as 2beta_{n-2}+beta_{n-1}+beta_n");
        if n == 4 {
            b = b.note("n = 4: the beta_{n/2-2} line and O1 are vacuous");
        }
        out.push(b.orbits(orbits).parabolic(n - 3, 1).dim(Some(h as i64 + 1)).done());
    }
}

fn v(c: &[i64]) -> RootVector {
    RootVector(c.to_vec())
}

/// Beta-coefficient vector with the given (1-based) indices, repeats adding up.
fn l(r: usize, ks: &[usize]) -> RootVector {
    let mut out = vec![0; r];
    for &k in ks {
        out[k - 1] += 1;
    }
    RootVector(out)
}

fn e_cases(out: &mut Vec<CorpusCase>) {
    let r = 6;
    out.push(
        Builder::new("E_6/id".into(), ty(Family::E, 6), AutoSpec::Id, (0..=6).collect())
            .labels(&[0, 2, 3, 4, 5, 1], "printed vectors use the chain 1-3-4-5-6 relabelled 1-2-3-4-5 and the branch node as 6")
            .beta(vec![
                v(&[1, 2, 2, 2, 1, 1]).neg(),
                v(&[0, 1, 1, 1, 1, 0]),
                v(&[1, 0, 0, 0, 0, 0]),
                v(&[0, 1, 1, 0, 0, 1]),
                v(&[0, 0, 1, 1, 0, 0]),
                v(&[1, 1, 2, 1, 1, 1]).neg(),
            ])
            .orbits(vec![
                orbit("O1", vec![l(r, &[1]), l(r, &[2]), l(r, &[1, 2]).neg()], 0),
                orbit("O2", vec![l(r, &[4]), l(r, &[5]), l(r, &[4, 5]).neg()], 0),
                orbit("O3", vec![l(r, &[6]), l(r, &[6]).neg()], 0),
                orbit(
                    "O4",
                    vec![
                        l(r, &[3]),
                        l(r, &[3, 6]),
                        l(r, &[2, 3, 4]),
                        l(r, &[2, 3, 4, 6]),
                        l(r, &[1, 2, 3, 4, 5]),
                        l(r, &[1, 2, 3, 4, 5, 6]),
                    ],
                    -1,
                ),
            ])
            .parabolic(3, -1)
            .dim(Some(7))
            .done(),
    );
    out.push(
        Builder::new("E_6/gamma".into(), ty(Family::E, 6), AutoSpec::Gamma(1), vec![1, 3, 4])
            .beta(vec![
                v(&[0, 0, 0, 0, 1, 1]),
                v(&[1, 0, 1, 1, 1, 0]),
                v(&[0, 0, 1, 1, 0, 0]),
                v(&[0, 1, 0, 0, 0, 0]),
                v(&[1, 2, 2, 3, 2, 1]).neg(),
                v(&[1, 1, 1, 2, 1, 1]),
            ])
            .repair("sixth O3 entry \"beta_3+beta_4+beta_5\" read as beta_2+beta_4+beta_5")
            .orbits(vec![
                orbit("O1", vec![l(r, &[1]), l(r, &[2]), l(r, &[3]), l(r, &[4]), l(r, &[1, 2, 3, 4]).neg()], 0),
                orbit("O2", vec![l(r, &[6]), l(r, &[6]).neg()], 0),
                orbit(
                    "O3",
                    vec![
                        l(r, &[5]),
                        l(r, &[2, 4, 5, 6]),
                        l(r, &[1, 3, 4, 5, 6]),
                        l(r, &[1, 2, 3, 3, 4, 4, 5]),
                        l(r, &[2, 3, 4, 4, 5, 6]),
                        l(r, &[2, 4, 5]),
                        l(r, &[5, 6]),
                        l(r, &[1, 3, 4, 5]),
                        l(r, &[1, 2, 3, 3, 4, 4, 5, 6]),
                        l(r, &[2, 3, 4, 4, 5]),
                    ],
                    -1,
                ),
            ])
            .parabolic(5, -1)
            .dim(Some(3))
            .done(),
    );

    let r = 7;
    out.push(
        Builder::new("E_7/id".into(), ty(Family::E, 7), AutoSpec::Id, (0..=7).collect())
            .labels(&[0, 2, 3, 4, 5, 6, 1], "printed vectors use the chain 1-3-4-5-6-7 relabelled 1..6 and the branch node as 7")
            .beta(vec![
                v(&[1, 2, 2, 2, 1, 0, 1]).neg(),
                v(&[0, 1, 1, 1, 1, 0, 0]),
                v(&[1, 0, 0, 0, 0, 0, 0]),
                v(&[0, 1, 1, 0, 0, 0, 1]),
                v(&[0, 0, 1, 1, 0, 0, 0]),
                v(&[1, 2, 3, 2, 1, 1, 1]).neg(),
                v(&[1, 1, 2, 1, 1, 0, 1]).neg(),
            ])
            .repair("second \"beta_6\" line read as beta_7")
            .orbits(vec![
                orbit("O1", vec![l(r, &[1]), l(r, &[2]), l(r, &[1, 2]).neg()], 0),
                orbit("O2", vec![l(r, &[4]), l(r, &[5]), l(r, &[6]), l(r, &[4, 5, 6]).neg()], 0),
                orbit("O3", vec![l(r, &[7]), l(r, &[7]).neg()], 0),
                orbit(
                    "O4",
                    vec![
                        l(r, &[3]),
                        l(r, &[2, 3]),
                        l(r, &[2, 3, 4, 7]),
                        l(r, &[1, 2, 3, 4, 5]),
                        l(r, &[3, 4, 5, 6, 7]),
                        l(r, &[1, 2, 3, 4, 7]),
                        l(r, &[3, 4, 5]),
                        l(r, &[2, 3, 4, 5, 6, 7]),
                        l(r, &[1, 2, 3]),
                        l(r, &[3, 4, 7]),
                        l(r, &[2, 3, 4, 5]),
                        l(r, &[1, 2, 3, 4, 5, 6, 7]),
                    ],
                    -1,
                ),
            ])
            .parabolic(3, -1)
            .dim(Some(8))
            .done(),
    );
    let mut e7g = Builder::new("E_7/gamma".into(), ty(Family::E, 7), AutoSpec::Gamma(1), vec![7, 6, 5, 4, 2])
        .beta(vec![
            v(&[0, 1, 0, 1, 1, 1, 0]),
            v(&[0, 1, 1, 1, 1, 1, 1]),
            v(&[1, 0, 1, 0, 0, 0, 0]),
            v(&[0, 0, 0, 1, 1, 0, 0]),
            v(&[0, 0, 0, 0, 1, 0, 0]).neg(),
            v(&[1, 1, 1, 2, 1, 1, 1]).neg(),
            v(&[0, 0, 1, 1, 1, 1, 0]).neg(),
        ])
        .note("O3 is printed partially (8 of its roots); compared as a subset")
        .orbits(vec![
            orbit("O1", vec![l(r, &[1]), l(r, &[2]), l(r, &[3]), l(r, &[4]), l(r, &[1, 2, 3, 4]).neg()], 0),
            orbit("O2", vec![l(r, &[6]), l(r, &[7]), l(r, &[6, 7]).neg()], 0),
            orbit(
                "O3",
                vec![
                    l(r, &[5]),
                    l(r, &[1, 3, 4, 5, 6, 7]),
                    l(r, &[1, 2, 3, 3, 4, 4, 5, 6]),
                    l(r, &[2, 3, 4, 4, 5]),
                    l(r, &[2, 4, 5, 6, 7]),
                    l(r, &[5, 6]),
                    l(r, &[1, 3, 4, 5]),
                    l(r, &[1, 2, 3, 3, 4, 4, 5, 6, 7]),
                ],
                1,
            ),
        ])
        .parabolic(5, 1)
        .dim(Some(5));
    e7g.case.expected_orbits[2].mode = OrbitMode::Subset;
    out.push(e7g.done());

    let r = 8;
    let mut o4 = Vec::new();
    for i in 1..=5 {
        let base: Vec<usize> = (i..=5).collect();
        for extra in [&[][..], &[6], &[6, 7], &[8], &[6, 8], &[6, 7, 8]] {
            o4.push(l(r, &[base.as_slice(), extra].concat()));
        }
    }
    out.push(
        Builder::new("E_8/id".into(), ty(Family::E, 8), AutoSpec::Id, (0..=8).collect())
            .labels(
                &[7, 6, 5, 4, 3, 2, 0, 1],
                "printed vectors number the long arm from its end: node i is standard node 9-i for i <= 6, 7 is standard 1, 8 is the branch node",
            )
            .beta(vec![
                v(&[1, 2, 3, 4, 4, 3, 1, 2]).neg(),
                v(&[0, 0, 0, 1, 1, 1, 0, 0]),
                v(&[0, 0, 1, 1, 1, 0, 0, 1]),
                v(&[0, 1, 1, 1, 1, 1, 1, 0]),
                v(&[1, 0, 0, 0, 0, 0, 0, 0]),
                v(&[0, 1, 1, 1, 2, 1, 0, 1]),
                v(&[1, 2, 2, 3, 4, 2, 1, 2]).neg(),
                v(&[1, 1, 2, 2, 3, 2, 1, 1]).neg(),
            ])
            .repair("second \"beta_7\" line read as beta_8; stray \")\" in beta_6 dropped")
            .repair("\"beta_i...beta_5\" read as beta_i+...+beta_5")
            .orbits(vec![
                orbit("O1", vec![l(r, &[1]), l(r, &[2]), l(r, &[3]), l(r, &[4]), l(r, &[1, 2, 3, 4]).neg()], 0),
                orbit("O2", vec![l(r, &[6]), l(r, &[7]), l(r, &[6, 7]).neg()], 0),
                orbit("O3", vec![l(r, &[8]), l(r, &[8]).neg()], 0),
                orbit("O4", o4, -1),
            ])
            .parabolic(5, -1)
            .dim(Some(9))
            .done(),
    );
}

fn f_g_cases(out: &mut Vec<CorpusCase>) {
    let r = 4;
    out.push(
        Builder::new("F_4/id".into(), ty(Family::F, 4), AutoSpec::Id, (0..=4).collect())
            .beta(vec![v(&[1, 1, 2, 0]).neg(), v(&[1, 0, 0, 0]), v(&[0, 1, 1, 0]), v(&[1, 2, 2, 1]).neg()])
            .repair("O3 entry \"beta_2+beta_3+2beta_4\" read as beta_2+2beta_3+2beta_4; missing comma restored")
            .orbits(vec![
                orbit("O1", vec![l(r, &[1]), l(r, &[1]).neg()], 0),
                orbit("O2", vec![l(r, &[3]), l(r, &[4]), l(r, &[3, 4]).neg()], 0),
                orbit(
                    "O3",
                    vec![
                        l(r, &[2]),
                        l(r, &[1, 2]),
                        l(r, &[2, 3, 3]),
                        l(r, &[2, 3, 3, 4, 4]),
                        l(r, &[1, 2, 3, 3]),
                        l(r, &[1, 2, 3, 3, 4, 4]),
                    ],
                    -1,
                ),
            ])
            .parabolic(2, -1)
            .dim(Some(5))
            .done(),
    );
    let r = 2;
    out.push(
        Builder::new("G_2/id".into(), ty(Family::G, 2), AutoSpec::Id, (0..=2).collect())
            .labels(&[1, 0], "alpha_1 long, alpha_2 short: the printed orbit {beta_1, beta_1+3beta_2} forces it")
            .beta(vec![v(&[1, 0]), v(&[1, 1]).neg()])
            .repair("orbits printed as O1 and O3; the second is O2")
            .orbits(vec![
                orbit("O1", vec![l(r, &[2]), l(r, &[2]).neg()], 0),
                orbit("O2", vec![l(r, &[1]), l(r, &[1, 2, 2, 2])], -1),
            ])
            .parabolic(1, -1)
            .dim(Some(3))
            .done(),
    );
}

/// Every reference case at its instantiated ranks.
pub fn corpus_cases() -> Vec<CorpusCase> {
    let mut out = Vec::new();
    for n in 2..=6 {
        a_cases(n, &mut out);
    }
    for n in 3..=5 {
        b_cases(n, &mut out);
    }
    for n in 3..=6 {
        c_cases(n, &mut out);
    }
    for n in 4..=6 {
        d_cases(n, &mut out);
    }
    e_cases(&mut out);
    f_g_cases(&mut out);
    out
}

pub fn find_cases<'a>(cases: &'a [CorpusCase], filter: &str) -> Vec<&'a CorpusCase> {
    if let Some(c) = cases.iter().find(|c| c.id == filter) {
        return vec![c];
    }
    cases.iter().filter(|c| c.id.starts_with(filter)).collect()
}

fn fmt_roots(v: &[RootVector]) -> String {
    let s: BTreeSet<String> = v.iter().map(|x| x.to_string()).collect();
    format!("{{{}}}", s.into_iter().collect::<Vec<_>>().join(", "))
}

fn fmt_nodes(nodes: &[ParabolicNode]) -> String {
    let parts: Vec<String> =
        nodes.iter().map(|n| format!("{}beta_{}", if n.sign > 0 { "+" } else { "-" }, n.node)).collect();
    format!("[{}]", parts.join(", "))
}

/// True when some bijection of the nodes carries `a` to `b`.
pub fn permutation_similar(a: &IntMatrix, b: &IntMatrix) -> bool {
    fn go(a: &IntMatrix, b: &IntMatrix, map: &mut Vec<usize>, used: &mut [bool]) -> bool {
        let k = map.len();
        if k == a.rows() {
            return true;
        }
        for cand in 0..b.rows() {
            if used[cand] {
                continue;
            }
            let ok = (0..=k).all(|i| {
                let ci = if i == k { cand } else { map[i] };
                a.get(i, k) == b.get(ci, cand) && a.get(k, i) == b.get(cand, ci)
            });
            if ok {
                used[cand] = true;
                map.push(cand);
                if go(a, b, map, used) {
                    return true;
                }
                map.pop();
                used[cand] = false;
            }
        }
        false
    }
    a.rows() == b.rows() && go(a, b, &mut Vec::new(), &mut vec![false; b.rows()])
}

/// Closure of `base` under its own reflections.
pub fn generated_roots(rs: &RootSet, base: &[RootVector]) -> Result<BTreeSet<RootVector>> {
    let refl = base.iter().map(|b| rs.reflection(b)).collect::<Result<Vec<_>>>()?;
    let mut seen: BTreeSet<RootVector> = base.iter().cloned().collect();
    let mut stack: Vec<RootVector> = base.to_vec();
    while let Some(x) = stack.pop() {
        for s in &refl {
            let y = s.act_on_root(&x);
            if seen.insert(y.clone()) {
                stack.push(y);
            }
        }
    }
    Ok(seen)
}

fn check_beta(rs: &RootSet, beta: &[RootVector]) -> std::result::Result<String, String> {
    if beta.len() != rs.rank() {
        return Err(format!("{} vectors for rank {}", beta.len(), rs.rank()));
    }
    if let Some(bad) = beta.iter().find(|b| !rs.contains(b)) {
        return Err(format!("{bad} is not a root"));
    }
    let cartan = rs.cartan_of(beta).map_err(|e| e.to_string())?;
    if !permutation_similar(&cartan, rs.cartan().finite_matrix()) {
        return Err(format!("Cartan matrix {:?} is not a relabelling of the type", cartan.to_rows()));
    }
    let gen = generated_roots(rs, beta).map_err(|e| e.to_string())?;
    if gen.len() != rs.len() {
        return Err(format!("generates {} of {} roots", gen.len(), rs.len()));
    }
    Ok(if rs.base_coordinates(beta).is_some() {
        "simple system".to_string()
    } else {
        "basis of roots, not a simple system".to_string()
    })
}

/// Runs the engine with the case's conventions and compares field by field.
pub fn verify_case(case: &CorpusCase) -> Result<VerificationResult> {
    let (res, _) = verify_case_with_analysis(case)?;
    Ok(res)
}

pub fn verify_case_with_analysis(case: &CorpusCase) -> Result<(VerificationResult, CoxeterAnalysis)> {
    let ctx = |e: Error| e.context(&case.id);
    let c = case.cartan().map_err(ctx)?;
    let rs = generate_roots(&c);
    let sigma = resolve_automorphism(&c, case.auto).map_err(ctx)?;
    let a = analyze_in(&rs, &sigma, Some(&case.convention.reps)).map_err(ctx)?;

    let mut fields = Vec::new();
    let mut notes = case.errata.iter().map(|s| format!("erratum: {s}")).collect::<Vec<_>>();

    if let Some(beta) = &case.beta_basis {
        let status = match check_beta(&rs, beta) {
            Ok(v) => FieldStatus::Match { value: v },
            Err(msg) => FieldStatus::Mismatch { expected: "basis of roots of the same type".into(), computed: msg },
        };
        fields.push(FieldCheck { field: "beta_basis".into(), status });
    }

    for o in &case.expected_orbits {
        let printed = case.orbit_in_alpha(o);
        let pset: BTreeSet<RootVector> = printed.iter().cloned().collect();
        if pset.len() != printed.len() {
            notes.push(format!("{}: printed list repeats a root", o.label));
        }
        let status = if let Some(bad) = printed.iter().find(|x| !rs.contains(x)) {
            FieldStatus::Mismatch { expected: format!("{} made of roots", o.label), computed: format!("{bad} is not a root") }
        } else {
            let hit = a.orbits.iter().find(|eo| {
                let eset: BTreeSet<RootVector> = eo.roots.iter().cloned().collect();
                match o.mode {
                    OrbitMode::Exact => eset == pset,
                    OrbitMode::Subset => pset.is_subset(&eset),
                }
            });
            match hit {
                Some(eo) if eo.degree == o.degree => FieldStatus::Match { value: format!("d = {}", eo.degree) },
                Some(eo) => FieldStatus::Mismatch {
                    expected: format!("d = {}", o.degree),
                    computed: format!("d = {}", eo.degree),
                },
                None => {
                    let overlap: Vec<String> = a
                        .orbits
                        .iter()
                        .filter(|eo| eo.roots.iter().any(|x| pset.contains(x)))
                        .map(|eo| format!("{} (d = {})", fmt_roots(&eo.roots), eo.degree))
                        .collect();
                    FieldStatus::Mismatch {
                        expected: format!("{} = {}", o.label, fmt_roots(&printed)),
                        computed: format!("overlapping orbits: {}", overlap.join("; ")),
                    }
                }
            }
        };
        fields.push(FieldCheck { field: format!("orbit {}", o.label), status });
    }

    let basis: Vec<RootVector> = match &case.beta_basis {
        Some(b) => b.clone(),
        None => (0..rs.rank()).map(|i| rs.simple_root(i)).collect(),
    };
    let nodes = parabolic_in_basis(&basis, &a.b_check);
    let (k, sg) = case.expected_parabolic;
    let expected = [ParabolicNode { node: k, sign: sg }];
    let status = if nodes == expected {
        FieldStatus::Match { value: fmt_nodes(&nodes) }
    } else {
        FieldStatus::Mismatch { expected: fmt_nodes(&expected), computed: fmt_nodes(&nodes) }
    };
    fields.push(FieldCheck { field: "parabolic".into(), status });

    let status = match case.expected_dim_aut_plus {
        Some(d) if d == a.dim_aut_plus => FieldStatus::Match { value: d.to_string() },
        Some(d) => FieldStatus::Mismatch { expected: d.to_string(), computed: a.dim_aut_plus.to_string() },
        None => FieldStatus::NotPrinted { computed: a.dim_aut_plus.to_string() },
    };
    fields.push(FieldCheck { field: "dim_aut_plus".into(), status });

    let pass = !fields.iter().any(|f| matches!(f.status, FieldStatus::Mismatch { .. }));
    Ok((VerificationResult { case_id: case.id.clone(), fields, pass, notes }, a))
}

/// Verifies cases in parallel; results come back in input order.
pub fn verify_all(cases: &[CorpusCase]) -> Vec<Result<VerificationResult>> {
    cases.par_iter().map(verify_case).collect()
}

/// The corpus as JSON.
pub fn export_corpus(cases: &[CorpusCase]) -> serde_json::Value {
    serde_json::to_value(cases).expect("corpus serializes")
}
