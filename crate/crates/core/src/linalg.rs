//! Small dense matrices over exact scalars.
//!
//! Everything the engine needs (rank, kernels, inverses, characteristic
//! polynomials) lives here. The element type is generic; elimination-based
//! routines require a [`Field`], i.e. a scalar with exact division.

use std::fmt::Debug;
use std::ops::Neg;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{Num, Signed, Zero};

use crate::Rational;

pub trait Scalar: Num + Clone + PartialEq + Debug + Neg<Output = Self> {}

impl<T> Scalar for T where T: Num + Clone + PartialEq + Debug + Neg<Output = T> {}

/// Scalars with exact division. Floats are deliberately excluded: every
/// comparison in the engine is an equality test.
pub trait Field: Scalar {}

impl<T> Field for Ratio<T> where T: Clone + Integer + Signed + Debug {}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

pub type IntMatrix = Matrix<i64>;
pub type RatMatrix = Matrix<Rational>;

impl<T: Scalar> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![T::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { T::one() } else { T::zero() })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    /// Panics on ragged input.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let n = rows.len();
        let m = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == m), "ragged matrix rows");
        Matrix { rows: n, cols: m, data: rows.into_iter().flatten().collect() }
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_cols(cols: &[Vec<T>]) -> Self {
        let m = cols.len();
        let n = cols.first().map_or(0, Vec::len);
        Self::from_fn(n, m, |i, j| cols[j][i].clone())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> Vec<T> {
        self.data[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn col(&self, j: usize) -> Vec<T> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|i| self.row(i)).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        Self::from_fn(self.rows, other.cols, |i, j| {
            let mut acc = T::zero();
            for k in 0..self.cols {
                let a = self.get(i, k);
                if !a.is_zero() {
                    acc = acc + a.clone() * other.get(k, j).clone();
                }
            }
            acc
        })
    }

    pub fn mul_vec(&self, v: &[T]) -> Vec<T> {
        assert_eq!(self.cols, v.len(), "matrix-vector shape mismatch");
        (0..self.rows)
            .map(|i| {
                let mut acc = T::zero();
                for (k, x) in v.iter().enumerate() {
                    acc = acc + self.get(i, k).clone() * x.clone();
                }
                acc
            })
            .collect()
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Self::from_fn(self.rows, self.cols, |i, j| self.get(i, j).clone() + other.get(i, j).clone())
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Self::from_fn(self.rows, self.cols, |i, j| self.get(i, j).clone() - other.get(i, j).clone())
    }

    pub fn pow(&self, mut k: u64) -> Self {
        assert!(self.is_square());
        let mut base = self.clone();
        let mut acc = Self::identity(self.rows);
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            k >>= 1;
        }
        acc
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == Self::identity(self.rows)
    }

    pub fn trace(&self) -> T {
        (0..self.rows.min(self.cols)).fold(T::zero(), |acc, i| acc + self.get(i, i).clone())
    }

    /// Principal submatrix on the given index set.
    pub fn submatrix(&self, idx: &[usize]) -> Self {
        Self::from_fn(idx.len(), idx.len(), |i, j| self.get(idx[i], idx[j]).clone())
    }
}

fn scalar_from_usize<T: Scalar>(n: usize) -> T {
    (0..n).fold(T::zero(), |acc, _| acc + T::one())
}

impl<T: Field> Matrix<T> {
    /// Reduced row echelon form together with the pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..m.cols {
                    m.data.swap(p * m.cols + j, r * m.cols + j);
                }
            }
            let inv = T::one() / m.get(r, c).clone();
            for j in 0..m.cols {
                let v = m.get(r, j).clone() * inv.clone();
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let f = m.get(i, c).clone();
                if f.is_zero() {
                    continue;
                }
                for j in 0..m.cols {
                    let v = m.get(i, j).clone() - f.clone() * m.get(r, j).clone();
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right kernel `{x : Mx = 0}`.
    pub fn nullspace(&self) -> Vec<Vec<T>> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![T::zero(); self.cols];
                v[f] = T::one();
                for (row, &p) in pivots.iter().enumerate() {
                    v[p] = -r.get(row, f).clone();
                }
                v
            })
            .collect()
    }

    pub fn inverse(&self) -> Option<Self> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let aug = Self::from_fn(n, 2 * n, |i, j| {
            if j < n {
                self.get(i, j).clone()
            } else if j - n == i {
                T::one()
            } else {
                T::zero()
            }
        });
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        Some(Self::from_fn(n, n, |i, j| r.get(i, j + n).clone()))
    }

    pub fn determinant(&self) -> T {
        assert!(self.is_square());
        let mut m = self.clone();
        let n = m.rows;
        let mut det = T::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m.get(i, c).is_zero()) else {
                return T::zero();
            };
            if p != c {
                for j in 0..n {
                    m.data.swap(p * n + j, c * n + j);
                }
                det = -det;
            }
            let pv = m.get(c, c).clone();
            det = det * pv.clone();
            for i in c + 1..n {
                let f = m.get(i, c).clone() / pv.clone();
                if f.is_zero() {
                    continue;
                }
                for j in c..n {
                    let v = m.get(i, j).clone() - f.clone() * m.get(c, j).clone();
                    m.set(i, j, v);
                }
            }
        }
        det
    }

    /// Characteristic polynomial `det(tI - M)`, coefficients low to high.
    ///
    /// Faddeev-LeVerrier; the divisions by `k` are exact over a field.
    pub fn char_poly(&self) -> Vec<T> {
        assert!(self.is_square());
        let n = self.rows;
        let mut coeffs = vec![T::zero(); n + 1];
        coeffs[n] = T::one();
        let mut mk = Self::zeros(n, n);
        for k in 1..=n {
            let mut next = self.mul(&mk);
            for i in 0..n {
                let v = next.get(i, i).clone() + coeffs[n - k + 1].clone();
                next.set(i, i, v);
            }
            mk = next;
            let tr = self.mul(&mk).trace();
            coeffs[n - k] = -tr / scalar_from_usize::<T>(k);
        }
        coeffs
    }

    /// Unique solution of `Mx = b`, if the system has exactly one.
    pub fn solve(&self, b: &[T]) -> Option<Vec<T>> {
        assert_eq!(self.rows, b.len());
        let aug = Self::from_fn(self.rows, self.cols + 1, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                b[i].clone()
            }
        });
        let (r, pivots) = aug.rref();
        if pivots.contains(&self.cols) || pivots.len() != self.cols {
            return None;
        }
        Some((0..self.cols).map(|i| r.get(i, self.cols).clone()).collect())
    }
}

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(n)
}

pub fn to_rational(m: &IntMatrix) -> RatMatrix {
    m.map(|&x| rat(x))
}

pub fn to_integer(m: &RatMatrix) -> Option<IntMatrix> {
    if m.data.iter().any(|x| !x.is_integer()) {
        return None;
    }
    Some(m.map(|x| x.to_integer()))
}

pub fn int_rank(m: &IntMatrix) -> usize {
    to_rational(m).rank()
}

/// Characteristic polynomial of an integer matrix, low to high.
pub fn int_char_poly(m: &IntMatrix) -> Vec<i64> {
    to_rational(m)
        .char_poly()
        .into_iter()
        .map(|c| {
            debug_assert!(c.is_integer());
            c.to_integer()
        })
        .collect()
}

/// Scales a rational vector to the primitive integer vector on the same
/// ray (first nonzero entry positive). `None` for the zero vector.
pub fn primitive_vector(v: &[Rational]) -> Option<Vec<i64>> {
    let first = v.iter().find(|x| !x.is_zero())?;
    let den = v.iter().fold(1i64, |acc, x| acc.lcm(x.denom()));
    let ints: Vec<i64> = v.iter().map(|x| (x * rat(den)).to_integer()).collect();
    let g = ints.iter().fold(0i64, |acc, x| acc.gcd(x));
    let sign = if first.is_negative() { -1 } else { 1 };
    Some(ints.into_iter().map(|x| sign * x / g).collect())
}

pub fn poly_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

pub fn poly_eval(p: &[i64], t: i64) -> i64 {
    p.iter().rev().fold(0, |acc, c| acc * t + c)
}

/// Pretty form used by reports, e.g. `t^2 + t + 1`.
pub fn poly_to_string(p: &[i64]) -> String {
    let mut terms = Vec::new();
    for (k, &c) in p.iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        let mag = c.abs();
        let body = match (k, mag) {
            (0, _) => mag.to_string(),
            (1, 1) => "t".to_string(),
            (1, _) => format!("{mag}t"),
            (_, 1) => format!("t^{k}"),
            _ => format!("{mag}t^{k}"),
        };
        let sign = if c < 0 { "-" } else { "+" };
        if terms.is_empty() {
            terms.push(if c < 0 { format!("-{body}") } else { body });
        } else {
            terms.push(format!("{sign} {body}"));
        }
    }
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" ")
    }
}
