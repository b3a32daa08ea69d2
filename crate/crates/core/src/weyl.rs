//! Finite Weyl group elements stored as integer matrices.

use crate::error::{Error, Result};
use crate::linalg::{int_char_poly, int_rank, rat, to_integer, to_rational, IntMatrix};
use crate::roots::{pairing, CoweightVector, RootSet, RootVector};

/// Column `k` of `matrix` is the image of `alpha_k`. `dual` is the
/// contragredient action on coweight coordinates, `(matrix^T)^{-1}`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct WeylElement {
    matrix: IntMatrix,
    dual: IntMatrix,
}

const ORDER_CAP: usize = 1 << 16;

impl WeylElement {
    pub fn identity(r: usize) -> Self {
        WeylElement { matrix: IntMatrix::identity(r), dual: IntMatrix::identity(r) }
    }

    pub(crate) fn from_parts(matrix: IntMatrix, dual: IntMatrix) -> Self {
        debug_assert!(matrix.transpose().mul(&dual).is_identity());
        WeylElement { matrix, dual }
    }

    /// Accepts any unimodular integer matrix; membership in W is not checked
    /// here (see [`WeylElement::permutes`]).
    pub fn from_matrix(matrix: IntMatrix) -> Result<Self> {
        if !matrix.is_square() {
            return Err(Error::domain("Weyl element matrix must be square"));
        }
        let inv = to_rational(&matrix.transpose())
            .inverse()
            .and_then(|m| to_integer(&m))
            .ok_or_else(|| Error::domain("matrix is not invertible over the integers"))?;
        Ok(WeylElement { matrix, dual: inv })
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn dual_matrix(&self) -> &IntMatrix {
        &self.dual
    }

    pub fn rank(&self) -> usize {
        self.matrix.rows()
    }

    /// `self * other`: `other` acts first.
    pub fn compose(&self, other: &Self) -> Self {
        WeylElement { matrix: self.matrix.mul(&other.matrix), dual: self.dual.mul(&other.dual) }
    }

    pub fn inverse(&self) -> Self {
        WeylElement { matrix: self.dual.transpose(), dual: self.matrix.transpose() }
    }

    pub fn pow(&self, k: i64) -> Self {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let k = k.unsigned_abs();
        WeylElement { matrix: base.matrix.pow(k), dual: base.dual.pow(k) }
    }

    pub fn act_on_root(&self, a: &RootVector) -> RootVector {
        RootVector(self.matrix.mul_vec(&a.0))
    }

    pub fn act_on_coweight(&self, mu: &CoweightVector) -> CoweightVector {
        let d = self.dual.map(|&x| rat(x));
        CoweightVector(d.mul_vec(&mu.0))
    }

    pub fn is_identity(&self) -> bool {
        self.matrix.is_identity()
    }

    /// Smallest `k >= 1` with `w^k = 1`. Panics past a generous cap, which
    /// only an element outside every finite Weyl group can reach.
    pub fn order(&self) -> usize {
        let mut acc = self.matrix.clone();
        for k in 1..=ORDER_CAP {
            if acc.is_identity() {
                return k;
            }
            acc = acc.mul(&self.matrix);
        }
        panic!("element has no finite order below {ORDER_CAP}");
    }

    pub fn char_poly(&self) -> Vec<i64> {
        int_char_poly(&self.matrix)
    }

    pub fn determinant(&self) -> i64 {
        to_rational(&self.matrix).determinant().to_integer()
    }

    /// Dimension of the eigenvalue-1 eigenspace.
    pub fn fixed_space_dim(&self) -> usize {
        let r = self.rank();
        r - int_rank(&self.matrix.sub(&IntMatrix::identity(r)))
    }

    pub fn permutes(&self, rs: &RootSet) -> bool {
        let mut hit = vec![false; rs.len()];
        for a in rs.roots() {
            match rs.index_of(&self.act_on_root(a)) {
                Some(i) if !hit[i] => hit[i] = true,
                _ => return false,
            }
        }
        true
    }

    pub fn preserves_pairing(&self, rs: &RootSet) -> bool {
        rs.roots().iter().all(|a| {
            let wa = self.act_on_root(a);
            (0..rs.rank()).all(|i| {
                let c = rs.simple_coroot(i);
                let wc = self.act_on_coweight(&c);
                pairing(&wa, &wc).ok() == pairing(a, &c).ok()
            })
        })
    }

    /// Root permutation induced on `rs`, by root index.
    pub fn root_permutation(&self, rs: &RootSet) -> Option<Vec<usize>> {
        rs.roots().iter().map(|a| rs.index_of(&self.act_on_root(a))).collect()
    }
}

/// Product of simple reflections, applied right to left: `word = [i, j]`
/// gives `s_i s_j`.
pub fn from_word(rs: &RootSet, word: &[usize]) -> WeylElement {
    word.iter()
        .fold(WeylElement::identity(rs.rank()), |acc, &i| acc.compose(&rs.simple_reflection(i)))
}

/// Longest element of the parabolic subgroup generated by the simple
/// reflections in `nodes` (0-based finite indices).
pub fn longest_element(rs: &RootSet, nodes: &[usize]) -> WeylElement {
    let mut w = WeylElement::identity(rs.rank());
    loop {
        let next = nodes.iter().copied().find(|&i| w.act_on_root(&rs.simple_root(i)).is_positive());
        match next {
            Some(i) => w = w.compose(&rs.simple_reflection(i)),
            None => return w,
        }
    }
}
