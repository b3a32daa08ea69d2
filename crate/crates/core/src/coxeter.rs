//! Twisted Coxeter elements and the bundle data read off from them:
//! invariant coweight, orbit degrees, root partition, Levi and parabolic,
//! automorphism dimension, the functional-equation certificates and the
//! weights of the moduli space.

use std::collections::HashSet;

use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::affine::{sigma_representative, simple_affine_reflection, ExtAffineElement};
use crate::cartan::{fold, kac_labels, kac_labels_of, CartanData, DiagramAutomorphism, DynkinType};
use crate::error::{Error, Result};
use crate::linalg::{int_char_poly, poly_mul, rat, IntMatrix, Matrix, RatMatrix};
use crate::roots::{generate_roots, pairing, CoweightVector, RootSet, RootVector};
use crate::weyl::WeylElement;
use crate::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SignClass {
    Positive,
    Zero,
    Negative,
}

impl SignClass {
    pub fn of(x: &Rational) -> Self {
        if x.is_positive() {
            SignClass::Positive
        } else if x.is_zero() {
            SignClass::Zero
        } else {
            SignClass::Negative
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            SignClass::Positive => "positive",
            SignClass::Zero => "zero",
            SignClass::Negative => "negative",
        }
    }
}

/// One phi-orbit, stored cyclically: `roots[i + 1] = phi(roots[i])`,
/// starting from its lexicographically smallest root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitData {
    pub roots: Vec<RootVector>,
    pub degree: i64,
    pub sign: SignClass,
}

impl OrbitData {
    pub fn size(&self) -> usize {
        self.roots.len()
    }

    pub fn contains(&self, a: &RootVector) -> bool {
        self.roots.contains(a)
    }
}

/// Smallest node of each sigma-orbit, in increasing order.
pub fn default_reps(sigma: &DiagramAutomorphism) -> Vec<usize> {
    sigma.orbits().into_iter().map(|o| o[0]).collect()
}

/// `s_{reps[0]} ... s_{reps[k]}` followed by the representative of `sigma`.
pub fn twisted_coxeter(rs: &RootSet, sigma: &DiagramAutomorphism, reps: &[usize]) -> Result<ExtAffineElement> {
    let r = rs.rank();
    if sigma.len() != r + 1 {
        return Err(Error::domain("automorphism acts on the wrong number of nodes"));
    }
    let orbits = sigma.orbits();
    let mut hit = vec![false; orbits.len()];
    for &node in reps {
        let k = orbits
            .iter()
            .position(|o| o.contains(&node))
            .ok_or_else(|| Error::domain(format!("node {node} out of range for rank {r}")))?;
        if std::mem::replace(&mut hit[k], true) {
            return Err(Error::domain(format!("reps {reps:?} hit the sigma-orbit {:?} twice", orbits[k])));
        }
    }
    if let Some(k) = hit.iter().position(|h| !h) {
        return Err(Error::domain(format!("reps {reps:?} miss the sigma-orbit {:?}", orbits[k])));
    }
    let mut x = ExtAffineElement::identity(r);
    for &node in reps {
        x = x.compose(&simple_affine_reflection(rs, node)?);
    }
    Ok(x.compose(&sigma_representative(rs, sigma)?))
}

/// `m` = order of the finite part and `x^m = t_b`.
pub fn invariant_coweight(x: &ExtAffineElement) -> (usize, CoweightVector) {
    let m = x.finite_part().order();
    let y = x.power(m as i64);
    assert!(y.finite_part().is_identity(), "x^m has nontrivial finite part");
    let b = y.translation().clone();
    assert_eq!(x.finite_part().act_on_coweight(&b), b, "finite part does not fix b");
    (m, b)
}

/// Orbits of `phi` on `rs` with degrees `d_O = sum <alpha, mu>`, each
/// cross-checked against `(|O|/m) <alpha, b>` for every member.
pub fn orbit_decomposition(
    phi: &WeylElement,
    mu: &CoweightVector,
    rs: &RootSet,
    b: &CoweightVector,
) -> Result<Vec<OrbitData>> {
    let perm = phi
        .root_permutation(rs)
        .ok_or_else(|| Error::domain("finite part does not permute the roots"))?;
    if phi.act_on_coweight(b) != *b {
        return Err(Error::domain("finite part does not fix b"));
    }
    let m = rat(phi.order() as i64);
    let mut order: Vec<usize> = (0..rs.len()).collect();
    order.sort_by(|&i, &j| rs.roots()[i].cmp(&rs.roots()[j]));
    let mut seen = vec![false; rs.len()];
    let mut out = Vec::new();
    for start in order {
        if seen[start] {
            continue;
        }
        let mut idx = Vec::new();
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            idx.push(i);
            i = perm[i];
        }
        let roots: Vec<RootVector> = idx.iter().map(|&i| rs.roots()[i].clone()).collect();
        let p = rat(roots.len() as i64);
        let sum = roots.iter().try_fold(Rational::zero(), |acc, a| Ok::<_, Error>(acc + pairing(a, mu)?))?;
        if !sum.is_integer() {
            return Err(Error::structural(format!("orbit degree {sum} is not an integer")));
        }
        let sign = SignClass::of(&pairing(&roots[0], b)?);
        for a in &roots {
            let via_b = p / m * pairing(a, b)?;
            if via_b != sum {
                return Err(Error::structural(format!(
                    "degree cross-check failed on {a}: sum over orbit {sum}, (|O|/m)<a,b> = {via_b}"
                )));
            }
            if SignClass::of(&pairing(a, b)?) != sign {
                return Err(Error::structural(format!("sign of <a,b> changes inside the orbit of {a}")));
            }
        }
        out.push(OrbitData { roots, degree: sum.to_integer(), sign });
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootPartition {
    pub positive: Vec<RootVector>,
    pub zero: Vec<RootVector>,
    pub negative: Vec<RootVector>,
}

impl RootPartition {
    pub fn sizes(&self) -> (usize, usize, usize) {
        (self.positive.len(), self.zero.len(), self.negative.len())
    }
}

pub fn partition_roots(rs: &RootSet, b: &CoweightVector) -> RootPartition {
    let mut part = RootPartition { positive: Vec::new(), zero: Vec::new(), negative: Vec::new() };
    for a in rs.roots() {
        match SignClass::of(&pairing(a, b).expect("same rank")) {
            SignClass::Positive => part.positive.push(a.clone()),
            SignClass::Zero => part.zero.push(a.clone()),
            SignClass::Negative => part.negative.push(a.clone()),
        }
    }
    part
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeviComponent {
    pub base: Vec<RootVector>,
    pub cartan: IntMatrix,
    pub coxeter_number: usize,
    pub coxeter_char_poly: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoxeterVerdict {
    pub holds: bool,
    pub fixes_complement: bool,
    pub char_poly_matches: bool,
    pub order_matches: bool,
    /// Characteristic polynomial of phi on the span of the Levi roots.
    pub restricted_char_poly: Vec<i64>,
    /// Product of the component Coxeter polynomials.
    pub expected_char_poly: Vec<i64>,
    pub order: usize,
    pub coxeter_lcm: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeviAnalysis {
    pub base: Vec<RootVector>,
    pub rank: usize,
    pub maximal: bool,
    pub components: Vec<LeviComponent>,
    pub verdict: CoxeterVerdict,
}

/// Simple system of a closed, negation-stable root subset: its
/// indecomposable positive roots, by height then lexicographically.
pub fn simple_system(subset: &[RootVector]) -> Vec<RootVector> {
    let pos: HashSet<&RootVector> = subset.iter().filter(|a| a.is_positive()).collect();
    let mut base: Vec<RootVector> = pos
        .iter()
        .filter(|a| !pos.iter().any(|b| pos.contains(&a.sub(b))))
        .map(|a| (*a).clone())
        .collect();
    base.sort_by(|a, b| a.height().cmp(&b.height()).then_with(|| a.cmp(b)));
    base
}

/// Coxeter element `s_1 ... s_k` of a Cartan matrix, in its own simple-root
/// coordinates.
pub fn coxeter_matrix_of(cartan: &IntMatrix) -> IntMatrix {
    let k = cartan.rows();
    let mut acc = IntMatrix::identity(k);
    for j in 0..k {
        let s = Matrix::from_fn(k, k, |i, l| {
            let e = i64::from(i == l);
            if i == j {
                e - cartan.get(l, j)
            } else {
                e
            }
        });
        acc = acc.mul(&s);
    }
    acc
}

fn matrix_order(m: &IntMatrix) -> usize {
    let mut acc = m.clone();
    let mut k = 1;
    while !acc.is_identity() {
        acc = acc.mul(m);
        k += 1;
        assert!(k < 1 << 16, "matrix of infinite order");
    }
    k
}

fn connected_components(rs: &RootSet, base: &[RootVector]) -> Vec<Vec<RootVector>> {
    let n = base.len();
    let mut comp = vec![usize::MAX; n];
    let mut out = Vec::new();
    for s in 0..n {
        if comp[s] != usize::MAX {
            continue;
        }
        let id = out.len();
        let mut stack = vec![s];
        comp[s] = id;
        let mut members = Vec::new();
        while let Some(i) = stack.pop() {
            members.push(i);
            for j in 0..n {
                if comp[j] == usize::MAX && rs.inner(&base[i], &base[j]) != 0 {
                    comp[j] = id;
                    stack.push(j);
                }
            }
        }
        members.sort_unstable();
        out.push(members.into_iter().map(|i| base[i].clone()).collect());
    }
    out
}

fn to_rat_vec(v: &[i64]) -> Vec<Rational> {
    v.iter().map(|&x| rat(x)).collect()
}

/// Levi data of `zero` (the roots orthogonal to b) and the criterion that
/// phi is a Coxeter element of it: phi fixes the orthogonal complement,
/// its characteristic polynomial on the Levi span is the product of the
/// component Coxeter polynomials, and its order is the lcm of the
/// component Coxeter numbers.
pub fn levi_analysis(rs: &RootSet, zero: &[RootVector], phi: &WeylElement) -> Result<LeviAnalysis> {
    let r = rs.rank();
    let set: HashSet<&RootVector> = zero.iter().collect();
    for a in zero {
        if !set.contains(&a.neg()) {
            return Err(Error::structural(format!("Levi roots not closed under negation at {a}")));
        }
        if !set.contains(&phi.act_on_root(a)) {
            return Err(Error::structural(format!("Levi roots not phi-stable at {a}")));
        }
    }
    let base = simple_system(zero);
    let rank = if base.is_empty() {
        0
    } else {
        Matrix::from_cols(&base.iter().map(|b| to_rat_vec(&b.0)).collect::<Vec<_>>()).rank()
    };
    let maximal = rank + 1 == r;

    let mut components = Vec::new();
    for comp in connected_components(rs, &base) {
        let cartan = rs.cartan_of(&comp)?;
        let cox = coxeter_matrix_of(&cartan);
        components.push(LeviComponent {
            base: comp,
            coxeter_number: matrix_order(&cox),
            coxeter_char_poly: int_char_poly(&cox),
            cartan,
        });
    }
    let expected_char_poly = components.iter().fold(vec![1], |acc, c| poly_mul(&acc, &c.coxeter_char_poly));

    let restricted_char_poly = if base.is_empty() {
        vec![1]
    } else {
        let b_mat: RatMatrix = Matrix::from_cols(&base.iter().map(|b| to_rat_vec(&b.0)).collect::<Vec<_>>());
        let mut cols = Vec::new();
        for b in &base {
            let img = to_rat_vec(&phi.act_on_root(b).0);
            let c = b_mat
                .solve(&img)
                .ok_or_else(|| Error::structural("phi leaves the span of the Levi roots"))?;
            cols.push(c);
        }
        let restricted = Matrix::from_cols(&cols);
        restricted.char_poly().iter().map(|c| c.to_integer()).collect()
    };

    // orthogonal complement of the Levi span for the invariant form
    let gram: RatMatrix = Matrix::from_fn(base.len(), r, |i, k| rat(rs.inner(&base[i], &rs.simple_root(k))));
    let complement = if base.is_empty() { RatMatrix::identity(r).to_rows() } else { gram.nullspace() };
    let phi_q = phi.matrix().map(|&x| rat(x));
    let fixes_complement = complement.iter().all(|v| phi_q.mul_vec(v) == *v);

    let order = phi.order();
    let coxeter_lcm = components.iter().fold(1usize, |acc, c| acc.lcm(&c.coxeter_number));
    let char_poly_matches = restricted_char_poly == expected_char_poly;
    let order_matches = order == coxeter_lcm;
    let verdict = CoxeterVerdict {
        holds: fixes_complement && char_poly_matches && order_matches,
        fixes_complement,
        char_poly_matches,
        order_matches,
        restricted_char_poly,
        expected_char_poly,
        order,
        coxeter_lcm,
    };
    Ok(LeviAnalysis { base, rank, maximal, components, verdict })
}

/// Sum of the positive orbit degrees.
pub fn aut_plus_dimension(orbits: &[OrbitData]) -> i64 {
    orbits.iter().filter(|o| o.sign == SignClass::Positive).map(|o| o.degree).sum()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Step2Certificate {
    pub size: usize,
    pub e: i64,
    pub residue: i64,
    pub passes: bool,
    pub base_point_independent: bool,
    /// Orbit of size 1: a phi-fixed root, outside the certificate's reach.
    pub fixed_root: bool,
}

fn step2_e(roots: &[RootVector], nu: &CoweightVector, start: usize) -> Result<i64> {
    let p = roots.len();
    let mut e = Rational::zero();
    for i in 0..p {
        let beta = &roots[(start + i) % p];
        e += rat((p - 1 - i) as i64) * pairing(beta, nu)?;
    }
    if !e.is_integer() {
        return Err(Error::structural(format!("step-2 exponent {e} is not an integer")));
    }
    Ok(e.to_integer())
}

/// `e = sum_{i=1}^p (p - i) <beta_i, nu>` per zero-degree orbit, with
/// `nu = phi^{-1}(mu)`. Passes when `p` does not divide `e`.
pub fn step2_certificates(zero_orbits: &[OrbitData], nu: &CoweightVector) -> Result<Vec<Step2Certificate>> {
    zero_orbits
        .iter()
        .map(|o| {
            if o.degree != 0 {
                return Err(Error::domain(format!("orbit of degree {} is not a zero orbit", o.degree)));
            }
            let p = o.size();
            let e = step2_e(&o.roots, nu, 0)?;
            let residue = e.rem_euclid(p as i64);
            let mut independent = true;
            for s in 1..p {
                if step2_e(&o.roots, nu, s)?.rem_euclid(p as i64) != residue {
                    independent = false;
                }
            }
            Ok(Step2Certificate {
                size: p,
                e,
                residue,
                passes: p == 1 || residue != 0,
                base_point_independent: independent,
                fixed_root: p == 1,
            })
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ReportingBasis {
    /// The simple roots themselves.
    Simple,
    /// A simple system on which b is dominant.
    Adapted,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParabolicNode {
    /// 1-based index into the reporting basis.
    pub node: usize,
    pub sign: i8,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Parabolic {
    pub basis: ReportingBasis,
    pub base: Vec<RootVector>,
    pub nodes: Vec<ParabolicNode>,
}

impl Parabolic {
    pub fn unique_node(&self) -> Option<ParabolicNode> {
        match self.nodes.as_slice() {
            [n] => Some(*n),
            _ => None,
        }
    }
}

/// Basis elements on which `b` does not vanish, with the sign of `<beta, b>`.
pub fn parabolic_in_basis(basis: &[RootVector], b: &CoweightVector) -> Vec<ParabolicNode> {
    basis
        .iter()
        .enumerate()
        .filter_map(|(i, beta)| {
            let p = pairing(beta, b).expect("same rank");
            if p.is_zero() {
                None
            } else {
                Some(ParabolicNode { node: i + 1, sign: if p.is_positive() { 1 } else { -1 } })
            }
        })
        .collect()
}

/// Reports in the simple roots when `b` is supported on one of them,
/// otherwise in a simple system adapted to `b`.
pub fn reporting_parabolic(rs: &RootSet, b: &CoweightVector) -> Parabolic {
    let r = rs.rank();
    let simple: Vec<RootVector> = (0..r).map(|i| rs.simple_root(i)).collect();
    let nodes = parabolic_in_basis(&simple, b);
    if nodes.len() == 1 {
        return Parabolic { basis: ReportingBasis::Simple, base: simple, nodes };
    }
    let positive: Vec<RootVector> = rs
        .roots()
        .iter()
        .filter(|a| {
            let p = pairing(a, b).expect("same rank");
            p.is_positive() || (p.is_zero() && a.is_positive())
        })
        .cloned()
        .collect();
    let set: HashSet<&RootVector> = positive.iter().collect();
    let mut base: Vec<RootVector> = positive
        .iter()
        .filter(|a| !positive.iter().any(|c| set.contains(&a.sub(c))))
        .cloned()
        .collect();
    base.sort_by(|x, y| {
        let px = pairing(x, b).expect("same rank");
        let py = pairing(y, b).expect("same rank");
        px.cmp(&py).then_with(|| x.height().cmp(&y.height())).then_with(|| x.cmp(y))
    });
    let nodes = parabolic_in_basis(&base, b);
    Parabolic { basis: ReportingBasis::Adapted, base, nodes }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoxeterAnalysis {
    pub ty: DynkinType,
    pub sigma: DiagramAutomorphism,
    pub reps: Vec<usize>,
    pub cox: ExtAffineElement,
    pub phi: WeylElement,
    /// Translation part: `cox = t_mu phi`.
    pub mu: CoweightVector,
    pub m: usize,
    pub b_check: CoweightVector,
    pub orbits: Vec<OrbitData>,
    pub partition: (usize, usize, usize),
    pub levi: LeviAnalysis,
    pub parabolic: Parabolic,
    pub dim_aut_plus: i64,
    pub fixed_space_dim: usize,
    pub step2: Vec<Step2Certificate>,
    pub sigma_orbit_count: usize,
    pub weights: Vec<i64>,
    pub flags: Vec<String>,
}

impl CoxeterAnalysis {
    /// `s`, the number of sigma-orbits on the affine nodes minus one.
    pub fn s(&self) -> usize {
        self.sigma_orbit_count - 1
    }

    pub fn step2_pass(&self) -> bool {
        self.step2.iter().all(|c| c.passes && c.base_point_independent)
    }

    pub fn orbit_of(&self, a: &RootVector) -> Option<&OrbitData> {
        self.orbits.iter().find(|o| o.contains(a))
    }
}

/// Full pipeline. `reps` defaults to the smallest node of each sigma-orbit.
pub fn analyze(c: &CartanData, sigma: &DiagramAutomorphism, reps: Option<&[usize]>) -> Result<CoxeterAnalysis> {
    let rs = generate_roots(c);
    analyze_in(&rs, sigma, reps)
}

pub fn analyze_in(rs: &RootSet, sigma: &DiagramAutomorphism, reps: Option<&[usize]>) -> Result<CoxeterAnalysis> {
    let reps: Vec<usize> = reps.map(<[usize]>::to_vec).unwrap_or_else(|| default_reps(sigma));
    let cox = twisted_coxeter(rs, sigma, &reps)?;
    let (m, b) = invariant_coweight(&cox);
    if b.is_zero() {
        return Err(Error::structural("twisted Coxeter element has finite order (b = 0)"));
    }
    let phi = cox.finite_part().clone();
    let mu = cox.translation().clone();
    let orbits = orbit_decomposition(&phi, &mu, rs, &b)?;
    let part = partition_roots(rs, &b);
    let levi = levi_analysis(rs, &part.zero, &phi)?;
    let parabolic = reporting_parabolic(rs, &b);
    let dim_aut_plus = aut_plus_dimension(&orbits);
    let nu = phi.inverse().act_on_coweight(&mu);
    let zero_orbits: Vec<OrbitData> = orbits.iter().filter(|o| o.degree == 0).cloned().collect();
    let step2 = step2_certificates(&zero_orbits, &nu)?;
    let weights = moduli_weights(rs.cartan(), sigma)?;
    let sigma_orbit_count = sigma.orbits().len();

    let mut flags = Vec::new();
    let s = sigma_orbit_count as i64 - 1;
    if dim_aut_plus != s {
        flags.push(format!(
            "dim_aut_plus = {dim_aut_plus} differs from s = {s}; the closed form dim Aut+ = s does not hold here (s+1 = {})",
            s + 1
        ));
    }
    for (o, cert) in zero_orbits.iter().zip(&step2) {
        if cert.fixed_root {
            flags.push(format!("phi fixes the root {}; step-2 certificate not applicable", o.roots[0]));
        }
    }
    Ok(CoxeterAnalysis {
        ty: rs.ty(),
        sigma: sigma.clone(),
        reps,
        fixed_space_dim: phi.fixed_space_dim(),
        cox,
        phi,
        mu,
        m,
        b_check: b,
        orbits,
        partition: part.sizes(),
        levi,
        parabolic,
        dim_aut_plus,
        step2,
        sigma_orbit_count,
        weights,
        flags,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    SemistableCandidate,
    Unstable,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InstabilityData {
    pub orbits: Vec<OrbitData>,
    pub partition: (usize, usize, usize),
    pub levi: LeviAnalysis,
    pub parabolic: Parabolic,
    pub dim_aut_plus: i64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BundleReport {
    pub gluing: ExtAffineElement,
    pub m: usize,
    pub b_check: CoweightVector,
    pub verdict: Verdict,
    pub data: Option<InstabilityData>,
}

/// Semistable candidate exactly when `x` has finite order.
pub fn analyze_gluing(c: &CartanData, x: &ExtAffineElement) -> Result<BundleReport> {
    let rs = generate_roots(c);
    analyze_gluing_in(&rs, x)
}

pub fn analyze_gluing_in(rs: &RootSet, x: &ExtAffineElement) -> Result<BundleReport> {
    if x.rank() != rs.rank() {
        return Err(Error::domain("gluing element has the wrong rank"));
    }
    if !x.finite_part().permutes(rs) {
        return Err(Error::domain("finite part is not a Weyl group element"));
    }
    let (m, b) = invariant_coweight(x);
    if b.is_zero() {
        return Ok(BundleReport { gluing: x.clone(), m, b_check: b, verdict: Verdict::SemistableCandidate, data: None });
    }
    let phi = x.finite_part();
    let orbits = orbit_decomposition(phi, x.translation(), rs, &b)?;
    let part = partition_roots(rs, &b);
    let levi = levi_analysis(rs, &part.zero, phi)?;
    let data = InstabilityData {
        dim_aut_plus: aut_plus_dimension(&orbits),
        parabolic: reporting_parabolic(rs, &b),
        partition: part.sizes(),
        orbits,
        levi,
    };
    Ok(BundleReport { gluing: x.clone(), m, b_check: b, verdict: Verdict::Unstable, data: Some(data) })
}

/// Weights of the weighted projective moduli space: the comarks for
/// sigma = id, otherwise the comarks of the folded diagram; a degenerate
/// fold gives the single weight 1.
pub fn moduli_weights(c: &CartanData, sigma: &DiagramAutomorphism) -> Result<Vec<i64>> {
    if sigma.is_identity() {
        return Ok(kac_labels(c)?.comarks);
    }
    let f = fold(c, sigma)?;
    if f.degenerate {
        return Ok(vec![1]);
    }
    Ok(kac_labels_of(&f.matrix)?.comarks)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::{cartan_matrix, resolve_automorphism, AutoSpec, Family};

    fn data(f: Family, n: usize) -> CartanData {
        cartan_matrix(DynkinType::new(f, n).unwrap())
    }

    fn rv(v: &[i64]) -> RootVector {
        RootVector(v.to_vec())
    }

    #[test]
    fn a2_identity_pipeline() {
        let c = data(Family::A, 2);
        let rs = generate_roots(&c);
        let id = DiagramAutomorphism::identity(3);
        let x = twisted_coxeter(&rs, &id, &[0, 1, 2]).unwrap();
        let s_theta = rs.reflection(rs.theta()).unwrap();
        let expected_w = s_theta.compose(&rs.simple_reflection(0)).compose(&rs.simple_reflection(1));
        assert_eq!(x.finite_part(), &expected_w);
        assert_eq!(x.translation(), &rs.coroot(rs.theta()).unwrap());
        assert!(twisted_coxeter(&rs, &id, &[0]).unwrap_err().is_domain());

        let a = analyze(&c, &id, None).unwrap();
        assert!(!a.b_check.is_zero());
        assert_eq!(a.phi.act_on_coweight(&a.b_check), a.b_check);
        let o1 = a.orbit_of(&rv(&[1, 0])).unwrap();
        assert!(o1.contains(&rv(&[-1, 0])));
        assert_eq!(o1.degree, 0);
        let o2 = a.orbit_of(&rv(&[0, 1])).unwrap();
        assert!(o2.contains(&rv(&[1, 1])));
        assert_eq!(o2.degree, 3);
        assert_eq!(a.dim_aut_plus, 3);
        assert_eq!(a.partition.0, 2);
        assert_eq!(a.levi.rank, 1);
        assert!(a.levi.maximal);
        assert!(a.levi.verdict.holds);
        assert_eq!(a.orbits.iter().map(|o| o.degree).sum::<i64>(), 0);
        assert!(a.step2_pass());
        assert_eq!(a.weights, vec![1, 1, 1]);
    }

    #[test]
    fn a2_rotation() {
        let c = data(Family::A, 2);
        let rot = resolve_automorphism(&c, AutoSpec::Gamma(1)).unwrap();
        let a = analyze(&c, &rot, Some(&[1])).unwrap();
        assert_eq!(a.orbit_of(&rv(&[1, 0])).unwrap().degree, -1);
        assert_eq!(a.weights, vec![1]);
        assert_eq!(a.sigma_orbit_count, 1);
    }

    #[test]
    fn invariant_coweight_examples() {
        let mu = CoweightVector::from_ints(&[2, -1]);
        let t = ExtAffineElement::from_translation(mu.clone()).unwrap();
        assert_eq!(invariant_coweight(&t), (1, mu));
        let a1 = generate_roots(&data(Family::A, 1));
        let swap = DiagramAutomorphism::new(vec![1, 0]).unwrap();
        let x = sigma_representative(&a1, &swap).unwrap();
        assert_eq!(invariant_coweight(&x), (2, CoweightVector::zero(1)));
    }

    #[test]
    fn degenerate_orbits_and_partition() {
        let rs = generate_roots(&data(Family::A, 2));
        let phi = rs.simple_reflection(0);
        let z = CoweightVector::zero(2);
        let orbits = orbit_decomposition(&phi, &z, &rs, &z).unwrap();
        assert!(orbits.iter().all(|o| o.degree == 0));
        assert_eq!(partition_roots(&rs, &z).sizes(), (0, 6, 0));
        let th = rs.coroot(rs.theta()).unwrap();
        // theta^ = omega1 + omega2 pairs to zero with nothing
        assert_eq!(partition_roots(&rs, &th).sizes(), (3, 0, 3));
        assert_eq!(aut_plus_dimension(&orbits), 0);
    }

    #[test]
    fn step2_rejects_nonzero_orbits() {
        let o = OrbitData { roots: vec![rv(&[1])], degree: 2, sign: SignClass::Positive };
        assert!(step2_certificates(&[o], &CoweightVector::zero(1)).unwrap_err().is_domain());
        let fixed = OrbitData { roots: vec![rv(&[1])], degree: 0, sign: SignClass::Zero };
        let c = step2_certificates(&[fixed], &CoweightVector::zero(1)).unwrap();
        assert_eq!((c[0].e, c[0].fixed_root), (0, true));
    }

    #[test]
    fn a1_identity_has_empty_levi() {
        let a = analyze(&data(Family::A, 1), &DiagramAutomorphism::identity(2), None).unwrap();
        assert_eq!(a.levi.rank, 0);
        assert!(a.levi.maximal);
        assert!(a.levi.verdict.holds);
        assert_eq!(a.dim_aut_plus, 2);
    }

    #[test]
    fn dims_for_exceptional_types() {
        let g2 = data(Family::G, 2);
        let a = analyze(&g2, &DiagramAutomorphism::identity(3), None).unwrap();
        assert_eq!(a.dim_aut_plus, 3);
        assert!(a.parabolic.unique_node().is_some());
        let f4 = data(Family::F, 4);
        assert_eq!(analyze(&f4, &DiagramAutomorphism::identity(5), None).unwrap().dim_aut_plus, 5);
        let e7 = data(Family::E, 7);
        let g = resolve_automorphism(&e7, AutoSpec::Gamma(1)).unwrap();
        let a = analyze(&e7, &g, Some(&[7, 6, 5, 4, 2])).unwrap();
        assert_eq!(a.dim_aut_plus, 5);
    }

    #[test]
    fn gluing_verdicts() {
        let c = data(Family::A, 2);
        let rs = generate_roots(&c);
        let r = analyze_gluing(&c, &ExtAffineElement::identity(2)).unwrap();
        assert_eq!(r.verdict, Verdict::SemistableCandidate);
        let t = ExtAffineElement::from_translation(rs.simple_coroot(0)).unwrap();
        let r = analyze_gluing(&c, &t).unwrap();
        assert_eq!(r.verdict, Verdict::Unstable);
        assert_eq!(r.b_check, rs.simple_coroot(0));
        let a = analyze(&c, &DiagramAutomorphism::identity(3), None).unwrap();
        let r = analyze_gluing(&c, &a.cox).unwrap();
        let d = r.data.unwrap();
        assert_eq!(d.orbits, a.orbits);
        assert_eq!(d.dim_aut_plus, a.dim_aut_plus);
    }

    #[test]
    fn weights() {
        let a3 = data(Family::A, 3);
        assert_eq!(moduli_weights(&a3, &DiagramAutomorphism::identity(4)).unwrap(), vec![1, 1, 1, 1]);
        let b3 = data(Family::B, 3);
        let g = resolve_automorphism(&b3, AutoSpec::Gamma(1)).unwrap();
        assert_eq!(moduli_weights(&b3, &g).unwrap().len(), 3);
    }

    #[test]
    fn coxeter_matrix_orders() {
        let e8 = data(Family::E, 8);
        let cox = coxeter_matrix_of(e8.finite_matrix());
        assert_eq!(matrix_order(&cox), 30);
    }
}
