//! The extended affine Weyl group `Λ̌ ⋊ W` as pairs `(t_mu, w)`, acting on
//! affine roots `(beta, m)` (meaning `beta + m delta`).

use std::fmt;

use crate::cartan::DiagramAutomorphism;
use crate::error::{Error, Result};
use crate::roots::{pairing, CoweightVector, RootSet, RootVector};
use crate::weyl::{longest_element, WeylElement};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ExtAffineElement {
    translation: CoweightVector,
    finite: WeylElement,
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct AffineRoot {
    pub root: RootVector,
    pub delta: i64,
}

impl ExtAffineElement {
    /// `t_mu * w`. The translation must lie in the coweight lattice.
    pub fn new(translation: CoweightVector, finite: WeylElement) -> Result<Self> {
        if translation.rank() != finite.rank() {
            return Err(Error::domain("translation and finite part have different ranks"));
        }
        if !translation.is_integral() {
            return Err(Error::domain(format!("translation {translation} is not in the coweight lattice")));
        }
        Ok(ExtAffineElement { translation, finite })
    }

    pub fn identity(r: usize) -> Self {
        ExtAffineElement { translation: CoweightVector::zero(r), finite: WeylElement::identity(r) }
    }

    pub fn from_finite(w: WeylElement) -> Self {
        ExtAffineElement { translation: CoweightVector::zero(w.rank()), finite: w }
    }

    pub fn from_translation(mu: CoweightVector) -> Result<Self> {
        let r = mu.rank();
        Self::new(mu, WeylElement::identity(r))
    }

    pub fn translation(&self) -> &CoweightVector {
        &self.translation
    }

    pub fn finite_part(&self) -> &WeylElement {
        &self.finite
    }

    pub fn rank(&self) -> usize {
        self.finite.rank()
    }

    pub fn is_identity(&self) -> bool {
        self.translation.is_zero() && self.finite.is_identity()
    }

    /// `(t_mu, w)(t_nu, v) = (t_{mu + w nu}, w v)`.
    pub fn compose(&self, other: &Self) -> Self {
        ExtAffineElement {
            translation: self.translation.add(&self.finite.act_on_coweight(&other.translation)),
            finite: self.finite.compose(&other.finite),
        }
    }

    pub fn inverse(&self) -> Self {
        let winv = self.finite.inverse();
        ExtAffineElement { translation: winv.act_on_coweight(&self.translation).neg(), finite: winv }
    }

    /// Repeated squaring; negative exponents use the inverse.
    pub fn power(&self, k: i64) -> Self {
        let mut base = if k < 0 { self.inverse() } else { self.clone() };
        let mut k = k.unsigned_abs();
        let mut acc = Self::identity(self.rank());
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.compose(&base);
            }
            base = base.compose(&base);
            k >>= 1;
        }
        acc
    }

    /// `g x g^{-1}`.
    pub fn conjugate_by(&self, g: &Self) -> Self {
        g.compose(self).compose(&g.inverse())
    }

    /// `(beta, m) -> (w beta, m - <w beta, mu>)`.
    pub fn act(&self, a: &AffineRoot) -> AffineRoot {
        let wb = self.finite.act_on_root(&a.root);
        let shift = pairing(&wb, &self.translation).expect("same rank");
        debug_assert!(shift.is_integer());
        AffineRoot { root: wb, delta: a.delta - shift.to_integer() }
    }
}

pub fn ext_compose(x: &ExtAffineElement, y: &ExtAffineElement) -> ExtAffineElement {
    x.compose(y)
}

pub fn ext_power(x: &ExtAffineElement, k: i64) -> ExtAffineElement {
    x.power(k)
}

impl fmt::Display for ExtAffineElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "t{} * {:?}", self.translation, self.finite.matrix().to_rows())
    }
}

/// `alpha~_0 = (-theta, 1)`, `alpha~_i = (alpha_i, 0)`.
pub fn affine_simple_roots(rs: &RootSet) -> Vec<AffineRoot> {
    let r = rs.rank();
    let mut out = vec![AffineRoot { root: rs.theta().neg(), delta: 1 }];
    out.extend((0..r).map(|i| AffineRoot { root: rs.simple_root(i), delta: 0 }));
    out
}

/// Permutation `p` with `x(alpha~_i) = alpha~_{p(i)}`, or `None` when `x`
/// does not stabilize the fundamental alcove.
pub fn affine_simple_action(rs: &RootSet, x: &ExtAffineElement) -> Option<Vec<usize>> {
    let simple = affine_simple_roots(rs);
    let mut p = Vec::with_capacity(simple.len());
    for a in &simple {
        let img = x.act(a);
        p.push(simple.iter().position(|b| *b == img)?);
    }
    Some(p)
}

/// `s_0 = (t_{theta^}, s_theta)` for node 0, plain `s_i` otherwise.
pub fn simple_affine_reflection(rs: &RootSet, node: usize) -> Result<ExtAffineElement> {
    let r = rs.rank();
    match node {
        0 => {
            let th = rs.theta();
            ExtAffineElement::new(rs.coroot(th)?, rs.reflection(th)?)
        }
        i if i <= r => Ok(ExtAffineElement::from_finite(rs.simple_reflection(i - 1))),
        _ => Err(Error::domain(format!("node {node} out of range for rank {r}"))),
    }
}

/// `(t_{omega^_j}, w0_J w0)` for a special node `j`, validated: it must
/// stabilize the alcove and send node 0 to `j`.
pub fn special_element(rs: &RootSet, j: usize) -> Result<ExtAffineElement> {
    let r = rs.rank();
    if j == 0 {
        return Ok(ExtAffineElement::identity(r));
    }
    if j > r || rs.theta().0[j - 1] != 1 {
        return Err(Error::domain(format!("node {j} is not special")));
    }
    let all: Vec<usize> = (0..r).collect();
    let rest: Vec<usize> = all.iter().copied().filter(|&i| i != j - 1).collect();
    let w0 = longest_element(rs, &all);
    let w0j = longest_element(rs, &rest);
    let omega = CoweightVector::fundamental(r, j - 1);
    for w in [w0j.compose(&w0), w0.compose(&w0j)] {
        let x = ExtAffineElement::new(omega.clone(), w)?;
        if let Some(p) = affine_simple_action(rs, &x) {
            if p[0] == j {
                return Ok(x);
            }
        }
    }
    Err(Error::structural(format!("no finite part makes t_omega{j} stabilize the alcove")))
}

/// Extended element inducing `sigma` on the affine nodes.
pub fn sigma_representative(rs: &RootSet, sigma: &DiagramAutomorphism) -> Result<ExtAffineElement> {
    let r = rs.rank();
    if sigma.len() != r + 1 {
        return Err(Error::domain("automorphism acts on the wrong number of nodes"));
    }
    if sigma.is_identity() {
        return Ok(ExtAffineElement::identity(r));
    }
    let j = sigma.apply(0);
    let x = special_element(rs, j).map_err(|e| match e {
        Error::Domain(m) => Error::domain(format!("{sigma} is not induced by the centre: {m}")),
        other => other,
    })?;
    match affine_simple_action(rs, &x) {
        Some(p) if p == sigma.permutation() => Ok(x),
        Some(p) => Err(Error::domain(format!(
            "{sigma} is not induced by the centre (node 0 goes to {j}, which induces {p:?})"
        ))),
        None => Err(Error::structural("special element does not stabilize the alcove")),
    }
}

/// Affine roots are integers in delta; exposed for tests and reports.
pub fn delta_shift(x: &ExtAffineElement, a: &RootVector) -> i64 {
    x.act(&AffineRoot { root: a.clone(), delta: 0 }).delta
}
