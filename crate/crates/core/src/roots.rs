//! Finite root systems in simple-root coordinates, coweights in
//! fundamental-coweight coordinates, and the pairing between them.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::cartan::{CartanData, DynkinType};
use crate::error::{Error, Result};
use crate::linalg::{rat, IntMatrix, Matrix};
use crate::weyl::WeylElement;
use crate::Rational;

/// Integer coefficients in the simple-root basis.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct RootVector(pub Vec<i64>);

impl RootVector {
    pub fn zero(r: usize) -> Self {
        RootVector(vec![0; r])
    }

    pub fn simple(r: usize, i: usize) -> Self {
        let mut v = vec![0; r];
        v[i] = 1;
        RootVector(v)
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    pub fn is_positive(&self) -> bool {
        !self.is_zero() && self.0.iter().all(|&x| x >= 0)
    }

    pub fn is_negative(&self) -> bool {
        !self.is_zero() && self.0.iter().all(|&x| x <= 0)
    }

    pub fn neg(&self) -> Self {
        RootVector(self.0.iter().map(|x| -x).collect())
    }

    pub fn add(&self, o: &Self) -> Self {
        RootVector(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, o: &Self) -> Self {
        RootVector(self.0.iter().zip(&o.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, k: i64) -> Self {
        RootVector(self.0.iter().map(|x| k * x).collect())
    }
}

impl fmt::Display for RootVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(i64::to_string).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// Rational coefficients in the fundamental-coweight basis.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct CoweightVector(pub Vec<Rational>);

impl CoweightVector {
    pub fn zero(r: usize) -> Self {
        CoweightVector(vec![Rational::zero(); r])
    }

    /// Fundamental coweight dual to finite node `j` (0-based).
    pub fn fundamental(r: usize, j: usize) -> Self {
        let mut v = Self::zero(r);
        v.0[j] = rat(1);
        v
    }

    pub fn from_ints(v: &[i64]) -> Self {
        CoweightVector(v.iter().map(|&x| rat(x)).collect())
    }

    pub fn coords(&self) -> &[Rational] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    /// Lies in the coweight lattice.
    pub fn is_integral(&self) -> bool {
        self.0.iter().all(|x| x.is_integer())
    }

    pub fn add(&self, o: &Self) -> Self {
        CoweightVector(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, o: &Self) -> Self {
        CoweightVector(self.0.iter().zip(&o.0).map(|(a, b)| a - b).collect())
    }

    pub fn neg(&self) -> Self {
        CoweightVector(self.0.iter().map(|x| -x).collect())
    }

    pub fn scale(&self, k: Rational) -> Self {
        CoweightVector(self.0.iter().map(|x| x * k).collect())
    }
}

impl fmt::Display for CoweightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(Rational::to_string).collect();
        write!(f, "({})", parts.join(", "))
    }
}

pub fn pairing(alpha: &RootVector, mu: &CoweightVector) -> Result<Rational> {
    if alpha.rank() != mu.rank() {
        return Err(Error::domain(format!(
            "pairing of a rank-{} root with a rank-{} coweight",
            alpha.rank(),
            mu.rank()
        )));
    }
    Ok(alpha.0.iter().zip(&mu.0).fold(Rational::zero(), |acc, (a, m)| acc + m * rat(*a)))
}

/// Positive integers `d_i` with `A_ij d_j = A_ji d_i`, smallest such choice.
/// `d_i` is half the squared length of `alpha_i`.
pub fn symmetrizer(finite: &IntMatrix) -> Result<Vec<i64>> {
    let r = finite.rows();
    let mut d: Vec<Option<Rational>> = vec![None; r];
    for start in 0..r {
        if d[start].is_some() {
            continue;
        }
        d[start] = Some(rat(1));
        let mut queue = VecDeque::from([start]);
        while let Some(i) = queue.pop_front() {
            let di = d[i].expect("visited");
            for j in 0..r {
                let aij = *finite.get(i, j);
                if i == j || aij == 0 {
                    continue;
                }
                let dj = di * rat(*finite.get(j, i)) / rat(aij);
                match d[j] {
                    None => {
                        d[j] = Some(dj);
                        queue.push_back(j);
                    }
                    Some(old) if old != dj => {
                        return Err(Error::domain("Cartan matrix is not symmetrizable"));
                    }
                    _ => {}
                }
            }
        }
    }
    let d: Vec<Rational> = d.into_iter().map(|x| x.expect("all nodes visited")).collect();
    let den = d.iter().fold(1i64, |acc, x| acc.lcm(x.denom()));
    let ints: Vec<i64> = d.iter().map(|x| (x * rat(den)).to_integer()).collect();
    let g = ints.iter().fold(0i64, |acc, x| acc.gcd(x));
    Ok(ints.into_iter().map(|x| x / g).collect())
}

/// Image of `beta` under the simple reflection at finite node `j`.
fn reflect_simple(finite: &IntMatrix, beta: &[i64], j: usize) -> Vec<i64> {
    let k: i64 = (0..beta.len()).map(|i| beta[i] * finite.get(i, j)).sum();
    let mut out = beta.to_vec();
    out[j] -= k;
    out
}

/// Positive roots by closure of the simple roots under simple reflections,
/// sorted by height and then lexicographically.
pub fn positive_roots(finite: &IntMatrix) -> Vec<RootVector> {
    let r = finite.rows();
    let mut seen: HashMap<Vec<i64>, ()> = HashMap::new();
    let mut queue: VecDeque<Vec<i64>> = VecDeque::new();
    for i in 0..r {
        let v = RootVector::simple(r, i).0;
        seen.insert(v.clone(), ());
        queue.push_back(v);
    }
    while let Some(b) = queue.pop_front() {
        for j in 0..r {
            let img = reflect_simple(finite, &b, j);
            if img.iter().all(|&x| x >= 0) && img.iter().any(|&x| x > 0) && !seen.contains_key(&img) {
                seen.insert(img.clone(), ());
                queue.push_back(img);
            }
        }
    }
    let mut out: Vec<RootVector> = seen.into_keys().map(RootVector).collect();
    out.sort_by(|a, b| a.height().cmp(&b.height()).then_with(|| a.cmp(b)));
    out
}

#[derive(Clone, Debug)]
pub struct RootSet {
    cartan: CartanData,
    sym: Vec<i64>,
    roots: Vec<RootVector>,
    index: HashMap<RootVector, usize>,
    n_pos: usize,
    theta: RootVector,
    coroots: Vec<CoweightVector>,
}

/// Full root system of `c`; positive roots first, negatives in the same order.
pub fn generate_roots(c: &CartanData) -> RootSet {
    let finite = c.finite_matrix();
    let sym = symmetrizer(finite).expect("validated Cartan data is symmetrizable");
    let pos = positive_roots(finite);
    let n_pos = pos.len();
    let theta = pos.last().expect("nonempty").clone();
    let mut roots = pos.clone();
    roots.extend(pos.iter().map(RootVector::neg));
    let index = roots.iter().enumerate().map(|(i, v)| (v.clone(), i)).collect();
    let mut rs = RootSet { cartan: c.clone(), sym, roots, index, n_pos, theta, coroots: Vec::new() };
    rs.coroots = rs.roots.iter().map(|a| rs.coroot_unchecked(a)).collect();
    debug_assert_eq!(rs.roots.len(), c.ty().root_count());
    rs
}

impl RootSet {
    pub fn cartan(&self) -> &CartanData {
        &self.cartan
    }

    pub fn ty(&self) -> DynkinType {
        self.cartan.ty()
    }

    pub fn rank(&self) -> usize {
        self.cartan.rank()
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn roots(&self) -> &[RootVector] {
        &self.roots
    }

    pub fn positive(&self) -> &[RootVector] {
        &self.roots[..self.n_pos]
    }

    pub fn negative(&self) -> &[RootVector] {
        &self.roots[self.n_pos..]
    }

    pub fn theta(&self) -> &RootVector {
        &self.theta
    }

    pub fn symmetrizer(&self) -> &[i64] {
        &self.sym
    }

    pub fn contains(&self, v: &RootVector) -> bool {
        self.index.contains_key(v)
    }

    pub fn index_of(&self, v: &RootVector) -> Option<usize> {
        self.index.get(v).copied()
    }

    pub fn simple_root(&self, i: usize) -> RootVector {
        RootVector::simple(self.rank(), i)
    }

    /// Symmetric form with `(alpha_i, alpha_i) = 2 d_i`.
    pub fn inner(&self, a: &RootVector, b: &RootVector) -> i64 {
        let r = self.rank();
        let m = self.cartan.finite_matrix();
        let mut acc = 0;
        for i in 0..r {
            if a.0[i] == 0 {
                continue;
            }
            for j in 0..r {
                acc += a.0[i] * b.0[j] * m.get(i, j) * self.sym[j];
            }
        }
        acc
    }

    fn coroot_unchecked(&self, a: &RootVector) -> CoweightVector {
        let r = self.rank();
        let m = self.cartan.finite_matrix();
        let d_a = self.inner(a, a) / 2;
        CoweightVector(
            (0..r)
                .map(|k| {
                    let num: i64 = (0..r).map(|i| a.0[i] * self.sym[i] * m.get(k, i)).sum();
                    Rational::new(num, d_a)
                })
                .collect(),
        )
    }

    pub fn coroot(&self, a: &RootVector) -> Result<CoweightVector> {
        self.index_of(a)
            .map(|i| self.coroots[i].clone())
            .ok_or_else(|| Error::domain(format!("{a} is not a root of {}", self.ty())))
    }

    pub fn simple_coroot(&self, i: usize) -> CoweightVector {
        CoweightVector::from_ints(&self.cartan.finite_matrix().col(i))
    }

    /// Half the sum of the positive coroots: every coordinate is 1.
    pub fn rho_check(&self) -> CoweightVector {
        CoweightVector::from_ints(&vec![1; self.rank()])
    }

    /// `s_alpha(beta) = beta - <beta, alpha^> alpha`.
    pub fn reflection(&self, a: &RootVector) -> Result<WeylElement> {
        let ac = self.coroot(a)?;
        let r = self.rank();
        let cols: Vec<Vec<i64>> = (0..r)
            .map(|k| {
                let c = ac.0[k].to_integer();
                (0..r).map(|i| i64::from(i == k) - c * a.0[i]).collect()
            })
            .collect();
        // coweight side: s(omega_k) = omega_k - <alpha, omega_k> alpha^
        let dual_cols: Vec<Vec<i64>> = (0..r)
            .map(|k| {
                let c = a.0[k];
                (0..r).map(|i| i64::from(i == k) - c * ac.0[i].to_integer()).collect()
            })
            .collect();
        Ok(WeylElement::from_parts(Matrix::from_cols(&cols), Matrix::from_cols(&dual_cols)))
    }

    pub fn simple_reflection(&self, i: usize) -> WeylElement {
        self.reflection(&self.simple_root(i)).expect("simple roots are roots")
    }

    /// Is `base` a simple system: every root a same-signed integer
    /// combination of it? Returns the coordinates of every root if so.
    pub fn base_coordinates(&self, base: &[RootVector]) -> Option<Vec<Vec<i64>>> {
        let r = self.rank();
        if base.len() != r || base.iter().any(|b| !self.contains(b)) {
            return None;
        }
        let cols: Vec<Vec<Rational>> = base.iter().map(|b| b.0.iter().map(|&x| rat(x)).collect()).collect();
        let inv = Matrix::from_cols(&cols).inverse()?;
        let mut out = Vec::with_capacity(self.len());
        for a in &self.roots {
            let c = inv.mul_vec(&a.0.iter().map(|&x| rat(x)).collect::<Vec<_>>());
            if c.iter().any(|x| !x.is_integer()) {
                return None;
            }
            let c: Vec<i64> = c.iter().map(|x| x.to_integer()).collect();
            if !(c.iter().all(|&x| x >= 0) || c.iter().all(|&x| x <= 0)) {
                return None;
            }
            out.push(c);
        }
        Some(out)
    }

    /// Cartan matrix `<beta_i, beta_j^>` of a list of roots.
    pub fn cartan_of(&self, base: &[RootVector]) -> Result<IntMatrix> {
        let cor: Vec<CoweightVector> = base.iter().map(|b| self.coroot(b)).collect::<Result<_>>()?;
        let n = base.len();
        Ok(Matrix::from_fn(n, n, |i, j| {
            let p = pairing(&base[i], &cor[j]).expect("same rank");
            debug_assert!(p.is_integer());
            p.to_integer()
        }))
    }

    pub fn is_long(&self, a: &RootVector) -> bool {
        let max = self.sym.iter().max().copied().unwrap_or(1);
        self.inner(a, a) / 2 == max
    }

    /// Number of positive and negative entries of a pairing, used in tests.
    pub fn sign_counts(&self, mu: &CoweightVector) -> (usize, usize, usize) {
        let mut c = (0, 0, 0);
        for a in &self.roots {
            let p = pairing(a, mu).expect("same rank");
            if p.is_positive() {
                c.0 += 1;
            } else if p.is_zero() {
                c.1 += 1;
            } else {
                c.2 += 1;
            }
        }
        c
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::{cartan_matrix, Family};

    fn rs(f: Family, n: usize) -> RootSet {
        generate_roots(&cartan_matrix(DynkinType::new(f, n).unwrap()))
    }

    #[test]
    fn counts_and_highest_roots() {
        let a2 = rs(Family::A, 2);
        assert_eq!(a2.len(), 6);
        assert_eq!(a2.theta().0, vec![1, 1]);
        assert_eq!(rs(Family::B, 3).len(), 18);
        let g2 = rs(Family::G, 2);
        assert_eq!(g2.len(), 12);
        // alpha_1 is short in the standard numbering
        assert_eq!(g2.theta().0, vec![3, 2]);
        assert_eq!(rs(Family::E, 8).len(), 240);
        assert_eq!(rs(Family::F, 4).theta().0, vec![2, 3, 4, 2]);
    }

    #[test]
    fn roots_closed_under_negation_and_reflections() {
        for (f, n) in [(Family::B, 4), (Family::C, 3), (Family::F, 4), (Family::G, 2), (Family::D, 5)] {
            let s = rs(f, n);
            for a in s.roots() {
                assert!(s.contains(&a.neg()));
                assert!(a.is_positive() || a.is_negative());
                for i in 0..n {
                    assert!(s.contains(&s.simple_reflection(i).act_on_root(a)));
                }
            }
        }
    }

    #[test]
    fn pairing_examples() {
        let a2 = rs(Family::A, 2);
        let e0 = RootVector::simple(2, 0);
        assert_eq!(pairing(&e0, &CoweightVector::fundamental(2, 0)).unwrap(), rat(1));
        assert_eq!(pairing(&e0, &CoweightVector::fundamental(2, 1)).unwrap(), rat(0));
        let th = a2.theta().clone();
        assert_eq!(pairing(&th, &a2.coroot(&th).unwrap()).unwrap(), rat(2));
        assert_eq!(pairing(&th, &a2.coroot(&e0).unwrap()).unwrap(), rat(1));
        assert!(pairing(&e0, &CoweightVector::zero(3)).unwrap_err().is_domain());
    }

    #[test]
    fn coroots() {
        let a2 = rs(Family::A, 2);
        let c0 = a2.coroot(&RootVector::simple(2, 0)).unwrap();
        assert_eq!(c0, CoweightVector::from_ints(&[2, -1]));
        let ct = a2.coroot(a2.theta()).unwrap();
        assert_eq!(ct, c0.add(&a2.simple_coroot(1)));
        let g2 = rs(Family::G, 2);
        // theta is long, so its coroot equals that of the long simple root's W-orbit: short coroot
        let long = RootVector::simple(2, 1);
        let ct = g2.coroot(g2.theta()).unwrap();
        assert_eq!(g2.inner(g2.theta(), g2.theta()), g2.inner(&long, &long));
        assert_eq!(ct, CoweightVector::from_ints(&[0, 1]));
        for a in g2.roots() {
            assert_eq!(pairing(a, &g2.coroot(a).unwrap()).unwrap(), rat(2));
        }
        assert!(g2.coroot(&RootVector(vec![1, 1, 0])).is_err());
        assert!(g2.coroot(&RootVector(vec![2, 2])).is_err());
    }

    #[test]
    fn simple_reflection_a2() {
        let a2 = rs(Family::A, 2);
        let s1 = a2.simple_reflection(0);
        assert_eq!(s1.act_on_root(&RootVector(vec![1, 0])).0, vec![-1, 0]);
        assert_eq!(s1.act_on_root(&RootVector(vec![0, 1])).0, vec![1, 1]);
        assert!(a2.reflection(&RootVector(vec![1, -1])).is_err());
    }

    #[test]
    fn symmetrizers() {
        assert_eq!(rs(Family::B, 3).symmetrizer(), &[2, 2, 1]);
        assert_eq!(rs(Family::C, 3).symmetrizer(), &[1, 1, 2]);
        assert_eq!(rs(Family::G, 2).symmetrizer(), &[1, 3]);
        assert_eq!(rs(Family::F, 4).symmetrizer(), &[2, 2, 1, 1]);
    }
}
