//! Dynkin types, finite and untwisted affine Cartan matrices, Kac labels,
//! the diagram automorphisms coming from the fundamental group, and folding.
//!
//! Convention: `A[i][j] = <alpha_i, coroot_j>`. Affine node 0 is the negative
//! highest root; finite node `k` (0-based) is affine node `k + 1`.

use std::fmt;
use std::str::FromStr;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{primitive_vector, to_rational, IntMatrix, Matrix};
use crate::roots::{generate_roots, positive_roots, symmetrizer};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Family::A => "A",
            Family::B => "B",
            Family::C => "C",
            Family::D => "D",
            Family::E => "E",
            Family::F => "F",
            Family::G => "G",
        };
        f.write_str(s)
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(Family::A),
            "B" => Ok(Family::B),
            "C" => Ok(Family::C),
            "D" => Ok(Family::D),
            "E" => Ok(Family::E),
            "F" => Ok(Family::F),
            "G" => Ok(Family::G),
            _ => Err(Error::domain(format!("unknown family {s:?}"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DynkinType {
    family: Family,
    rank: usize,
}

impl DynkinType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B => rank >= 3,
            Family::C => rank >= 2,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if ok {
            Ok(DynkinType { family, rank })
        } else {
            Err(Error::domain(format!("{family}{rank} is not an admissible type")))
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn root_count(&self) -> usize {
        let n = self.rank;
        match self.family {
            Family::A => n * (n + 1),
            Family::B | Family::C => 2 * n * n,
            Family::D => 2 * n * (n - 1),
            Family::E => match n {
                6 => 72,
                7 => 126,
                _ => 240,
            },
            Family::F => 48,
            Family::G => 12,
        }
    }

    pub fn coxeter_number(&self) -> usize {
        self.root_count() / self.rank
    }

    /// |Lambda^/Q^|, the order of the centre of the simply connected group.
    pub fn center_order(&self) -> usize {
        let n = self.rank;
        match self.family {
            Family::A => n + 1,
            Family::B | Family::C => 2,
            Family::D => 4,
            Family::E => 9 - n,
            Family::F | Family::G => 1,
        }
    }
}

impl fmt::Display for DynkinType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CartanData {
    ty: DynkinType,
    finite: IntMatrix,
    affine: IntMatrix,
    /// `labels[i]` is the standard (Bourbaki) index of finite node `i`.
    labels: Vec<usize>,
}

fn link(m: &mut [Vec<i64>], i: usize, j: usize, aij: i64, aji: i64) {
    m[i - 1][j - 1] = aij;
    m[j - 1][i - 1] = aji;
}

/// Standard finite Cartan matrix with plate numbering.
pub fn standard_finite_matrix(ty: DynkinType) -> IntMatrix {
    let n = ty.rank();
    let mut m = vec![vec![0i64; n]; n];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = 2;
    }
    match ty.family() {
        Family::A => {
            for i in 1..n {
                link(&mut m, i, i + 1, -1, -1);
            }
        }
        Family::B => {
            for i in 1..n - 1 {
                link(&mut m, i, i + 1, -1, -1);
            }
            link(&mut m, n - 1, n, -2, -1);
        }
        Family::C => {
            for i in 1..n - 1 {
                link(&mut m, i, i + 1, -1, -1);
            }
            link(&mut m, n - 1, n, -1, -2);
        }
        Family::D => {
            for i in 1..n - 1 {
                link(&mut m, i, i + 1, -1, -1);
            }
            link(&mut m, n - 2, n, -1, -1);
        }
        Family::E => {
            link(&mut m, 1, 3, -1, -1);
            link(&mut m, 2, 4, -1, -1);
            for i in 3..n {
                link(&mut m, i, i + 1, -1, -1);
            }
        }
        Family::F => {
            link(&mut m, 1, 2, -1, -1);
            link(&mut m, 2, 3, -2, -1);
            link(&mut m, 3, 4, -1, -1);
        }
        Family::G => {
            link(&mut m, 1, 2, -1, -3);
        }
    }
    Matrix::from_rows(m)
}

/// Cartan data in the standard numbering.
pub fn cartan_matrix(ty: DynkinType) -> CartanData {
    let labels = (0..ty.rank()).collect();
    CartanData::from_finite(ty, standard_finite_matrix(ty), labels)
        .expect("standard tables satisfy the Cartan invariants")
}

fn check_finite(finite: &IntMatrix) -> Result<()> {
    let n = finite.rows();
    if !finite.is_square() || n == 0 {
        return Err(Error::domain("finite Cartan matrix must be square and nonempty"));
    }
    for i in 0..n {
        for j in 0..n {
            let a = *finite.get(i, j);
            if i == j && a != 2 {
                return Err(Error::domain(format!("diagonal entry ({i},{i}) is {a}, not 2")));
            }
            if i != j {
                if !(-3..=0).contains(&a) {
                    return Err(Error::domain(format!("entry ({i},{j}) = {a} out of range")));
                }
                if (a == 0) != (*finite.get(j, i) == 0) {
                    return Err(Error::domain(format!("zero pattern not symmetric at ({i},{j})")));
                }
            }
        }
    }
    let q = to_rational(finite);
    for k in 1..=n {
        let idx: Vec<usize> = (0..k).collect();
        if !q.submatrix(&idx).determinant().is_positive() {
            return Err(Error::domain("finite Cartan matrix is not positive definite"));
        }
    }
    Ok(())
}

impl CartanData {
    /// Builds the affine matrix from the highest root of `finite`.
    pub fn from_finite(ty: DynkinType, finite: IntMatrix, labels: Vec<usize>) -> Result<Self> {
        check_finite(&finite)?;
        let r = finite.rows();
        if r != ty.rank() || labels.len() != r {
            return Err(Error::domain("rank does not match the matrix size"));
        }
        let sym = symmetrizer(&finite)?;
        let pos = positive_roots(&finite);
        let theta = pos
            .iter()
            .max_by_key(|v| v.height())
            .expect("nonempty root system")
            .clone();
        // theta^ in coweight coordinates: <alpha_k, theta^> = sum_i c_i d_i A_ki / d_theta
        let d_theta: i64 = {
            let mut acc = 0;
            for i in 0..r {
                for j in 0..r {
                    acc += theta.0[i] * theta.0[j] * finite.get(i, j) * sym[j];
                }
            }
            acc / 2
        };
        let theta_check: Vec<i64> = (0..r)
            .map(|k| {
                let num: i64 = (0..r).map(|i| theta.0[i] * sym[i] * finite.get(k, i)).sum();
                num / d_theta
            })
            .collect();
        let affine = Matrix::from_fn(r + 1, r + 1, |i, j| match (i, j) {
            (0, 0) => 2,
            // <-theta, coroot_j>
            (0, j) => -(0..r).map(|k| theta.0[k] * finite.get(k, j - 1)).sum::<i64>(),
            // <alpha_i, (-theta)^>
            (i, 0) => -theta_check[i - 1],
            (i, j) => *finite.get(i - 1, j - 1),
        });
        let data = CartanData { ty, finite, affine, labels };
        data.validate()?;
        Ok(data)
    }

    /// Renumbers the finite nodes: new node `i` is old node `perm[i]`.
    pub fn relabeled(&self, perm: &[usize]) -> Result<Self> {
        let r = self.rank();
        let mut seen = vec![false; r];
        if perm.len() != r || perm.iter().any(|&p| p >= r || std::mem::replace(&mut seen[p], true)) {
            return Err(Error::domain("relabeling is not a permutation of the finite nodes"));
        }
        let finite = self.finite.submatrix(perm);
        let labels = perm.iter().map(|&p| self.labels[p]).collect();
        CartanData::from_finite(self.ty, finite, labels)
    }

    pub fn ty(&self) -> DynkinType {
        self.ty
    }

    pub fn rank(&self) -> usize {
        self.finite.rows()
    }

    pub fn finite_matrix(&self) -> &IntMatrix {
        &self.finite
    }

    pub fn affine_matrix(&self) -> &IntMatrix {
        &self.affine
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn is_standard_numbering(&self) -> bool {
        self.labels.iter().enumerate().all(|(i, &l)| i == l)
    }

    /// Affine node carrying standard label `b` (0-based finite index).
    pub fn node_of_standard(&self, b: usize) -> Option<usize> {
        self.labels.iter().position(|&l| l == b).map(|i| i + 1)
    }

    pub fn validate(&self) -> Result<()> {
        check_finite(&self.finite)?;
        let a = &self.affine;
        let n = a.rows();
        for i in 0..n {
            if *a.get(i, i) != 2 {
                return Err(Error::structural("affine diagonal entry is not 2"));
            }
            for j in 0..n {
                if i != j {
                    let x = *a.get(i, j);
                    // affine A1 is the one place a -2 pair meets node 0 from both sides
                    if !(-3..=0).contains(&x) && !(n == 2 && x == -2) {
                        return Err(Error::structural(format!("affine entry ({i},{j}) = {x}")));
                    }
                    if (x == 0) != (*a.get(j, i) == 0) {
                        return Err(Error::structural("affine zero pattern not symmetric"));
                    }
                }
            }
        }
        let rank = to_rational(a).rank();
        if rank + 1 != n {
            return Err(Error::structural(format!("affine matrix has corank {}", n - rank)));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KacLabels {
    pub marks: Vec<i64>,
    pub comarks: Vec<i64>,
}

fn positive_null_vector(m: &IntMatrix, what: &str) -> Result<Vec<i64>> {
    let ker = to_rational(m).nullspace();
    if ker.len() != 1 {
        return Err(Error::structural(format!("{what}: corank {} instead of 1", ker.len())));
    }
    let v = primitive_vector(&ker[0]).expect("kernel vector is nonzero");
    if v.iter().any(|&x| x <= 0) {
        return Err(Error::structural(format!("{what}: null vector {v:?} is not positive")));
    }
    Ok(v)
}

/// Marks are the left null vector of the affine matrix (coefficients of
/// delta), comarks the right null vector (coefficients of the central
/// coroot). Both are normalized to coprime positive integers.
pub fn kac_labels_of(affine: &IntMatrix) -> Result<KacLabels> {
    let marks = positive_null_vector(&affine.transpose(), "marks")?;
    let comarks = positive_null_vector(affine, "comarks")?;
    Ok(KacLabels { marks, comarks })
}

pub fn kac_labels(c: &CartanData) -> Result<KacLabels> {
    let k = kac_labels_of(c.affine_matrix())?;
    if k.marks[0] != 1 || k.comarks[0] != 1 {
        return Err(Error::structural("Kac label at node 0 is not 1"));
    }
    Ok(k)
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DiagramAutomorphism {
    permutation: Vec<usize>,
    order: usize,
}

impl DiagramAutomorphism {
    pub fn new(permutation: Vec<usize>) -> Result<Self> {
        let n = permutation.len();
        let mut seen = vec![false; n];
        for &p in &permutation {
            if p >= n || seen[p] {
                return Err(Error::domain(format!("{permutation:?} is not a permutation")));
            }
            seen[p] = true;
        }
        let order = cycle_lcm(&permutation);
        Ok(DiagramAutomorphism { permutation, order })
    }

    pub fn identity(n: usize) -> Self {
        DiagramAutomorphism { permutation: (0..n).collect(), order: 1 }
    }

    pub fn permutation(&self) -> &[usize] {
        &self.permutation
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn len(&self) -> usize {
        self.permutation.len()
    }

    pub fn is_empty(&self) -> bool {
        self.permutation.is_empty()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.permutation[i]
    }

    pub fn is_identity(&self) -> bool {
        self.order == 1
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Self) -> Self {
        let p = other.permutation.iter().map(|&i| self.permutation[i]).collect();
        DiagramAutomorphism::new(p).expect("composition of permutations")
    }

    pub fn inverse(&self) -> Self {
        let mut p = vec![0; self.len()];
        for (i, &j) in self.permutation.iter().enumerate() {
            p[j] = i;
        }
        DiagramAutomorphism::new(p).expect("inverse permutation")
    }

    pub fn power(&self, k: usize) -> Self {
        (0..k % self.order).fold(Self::identity(self.len()), |acc, _| acc.compose(self))
    }

    /// Orbits on the nodes, each sorted, ordered by their smallest node.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let n = self.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut orbit = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                orbit.push(i);
                i = self.permutation[i];
            }
            orbit.sort_unstable();
            out.push(orbit);
        }
        out
    }

    pub fn is_automorphism_of(&self, m: &IntMatrix) -> bool {
        let n = m.rows();
        self.len() == n
            && (0..n).all(|i| {
                (0..n).all(|j| m.get(self.permutation[i], self.permutation[j]) == m.get(i, j))
            })
    }
}

impl fmt::Display for DiagramAutomorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return f.write_str("id");
        }
        let mut seen = vec![false; self.len()];
        for start in 0..self.len() {
            if seen[start] || self.permutation[start] == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cycle.push(i.to_string());
                i = self.permutation[i];
            }
            write!(f, "({})", cycle.join(" "))?;
        }
        Ok(())
    }
}

fn cycle_lcm(p: &[usize]) -> usize {
    use num_integer::Integer;
    let mut seen = vec![false; p.len()];
    let mut l = 1usize;
    for s in 0..p.len() {
        let mut len = 0;
        let mut i = s;
        while !seen[i] {
            seen[i] = true;
            i = p[i];
            len += 1;
        }
        if len > 0 {
            l = l.lcm(&len);
        }
    }
    l
}

/// Nodes with mark 1; node 0 is always among them.
pub fn special_nodes(c: &CartanData) -> Result<Vec<usize>> {
    let k = kac_labels(c)?;
    Ok((0..k.marks.len()).filter(|&i| k.marks[i] == 1).collect())
}

/// One automorphism per special node `j`, the one sending node 0 to `j`.
/// Ordered by `j`, so the identity comes first.
pub fn pi1_automorphisms(c: &CartanData) -> Result<Vec<DiagramAutomorphism>> {
    let rs = generate_roots(c);
    special_nodes(c)?
        .into_iter()
        .map(|j| {
            let x = crate::affine::special_element(&rs, j)?;
            let p = crate::affine::affine_simple_action(&rs, &x)
                .ok_or_else(|| Error::structural(format!("special element at node {j} moves the alcove")))?;
            DiagramAutomorphism::new(p)
        })
        .collect()
}

/// Named automorphisms used on the command line and in the reference cases.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum AutoSpec {
    Id,
    Gamma(u32),
    Tau,
}

impl fmt::Display for AutoSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AutoSpec::Id => f.write_str("id"),
            AutoSpec::Gamma(1) => f.write_str("gamma"),
            AutoSpec::Gamma(k) => write!(f, "gamma^{k}"),
            AutoSpec::Tau => f.write_str("tau"),
        }
    }
}

impl FromStr for AutoSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().to_ascii_lowercase();
        match s.as_str() {
            "id" | "identity" => return Ok(AutoSpec::Id),
            "gamma" => return Ok(AutoSpec::Gamma(1)),
            "tau" => return Ok(AutoSpec::Tau),
            _ => {}
        }
        if let Some(k) = s.strip_prefix("gamma^") {
            let k: u32 = k
                .parse()
                .map_err(|_| Error::domain(format!("bad power in automorphism {s:?}")))?;
            return Ok(if k == 0 { AutoSpec::Id } else { AutoSpec::Gamma(k) });
        }
        Err(Error::domain(format!("unknown automorphism {s:?} (expected id, gamma, gamma^l, tau)")))
    }
}

/// Special node (standard label, 1-based) generating the cyclic part named gamma.
fn gamma_standard_node(ty: DynkinType) -> Option<usize> {
    let n = ty.rank();
    match ty.family() {
        Family::A | Family::B => Some(1),
        Family::C => Some(n),
        Family::D if n % 2 == 1 => Some(n),
        Family::E if n == 6 => Some(6),
        Family::E if n == 7 => Some(7),
        _ => None,
    }
}

fn automorphism_at_standard(c: &CartanData, b: usize) -> Result<DiagramAutomorphism> {
    let node = c
        .node_of_standard(b - 1)
        .ok_or_else(|| Error::structural(format!("standard node {b} missing")))?;
    pi1_automorphisms(c)?
        .into_iter()
        .find(|s| s.apply(0) == node)
        .ok_or_else(|| Error::structural(format!("node {node} is not special")))
}

/// Resolves a named automorphism on `c`, honouring any relabeling.
pub fn resolve_automorphism(c: &CartanData, spec: AutoSpec) -> Result<DiagramAutomorphism> {
    let ty = c.ty();
    let n_aff = c.rank() + 1;
    match spec {
        AutoSpec::Id => Ok(DiagramAutomorphism::identity(n_aff)),
        AutoSpec::Tau => {
            if ty.family() == Family::D && ty.rank().is_multiple_of(2) {
                automorphism_at_standard(c, ty.rank())
            } else {
                Err(Error::domain(format!("tau is only defined for D_n with n even, not {ty}")))
            }
        }
        AutoSpec::Gamma(k) => {
            if ty.family() == Family::D && ty.rank().is_multiple_of(2) {
                // pi_1 is Z2 x Z2 here; only the even powers of the rotation live in it
                if k % 2 == 1 {
                    return Err(Error::domain(format!(
                        "gamma^{k} is not induced by the centre of {ty}; use gamma^2 or tau"
                    )));
                }
                return if (k / 2) % 2 == 1 {
                    automorphism_at_standard(c, 1)
                } else {
                    Ok(DiagramAutomorphism::identity(n_aff))
                };
            }
            let b = gamma_standard_node(ty)
                .ok_or_else(|| Error::domain(format!("{ty} has no nontrivial diagram automorphism from its centre")))?;
            Ok(automorphism_at_standard(c, b)?.power(k as usize))
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FoldedDiagram {
    pub matrix: IntMatrix,
    pub orbits: Vec<Vec<usize>>,
    /// `s_I` per orbit.
    pub multipliers: Vec<i64>,
    pub degenerate: bool,
}

/// Orbit Lie algebra matrix: `Ǎ_IJ = s_I * sum_{j in J} A_ij` for the
/// smallest `i in I`, with `s_I = 2` when `I` contains two adjacent nodes.
pub fn fold(c: &CartanData, sigma: &DiagramAutomorphism) -> Result<FoldedDiagram> {
    let a = c.affine_matrix();
    if !sigma.is_automorphism_of(a) {
        return Err(Error::domain(format!("{sigma} is not an automorphism of the affine diagram")));
    }
    let orbits = sigma.orbits();
    let multipliers: Vec<i64> = orbits
        .iter()
        .map(|o| {
            let adjacent = o.iter().any(|&i| o.iter().any(|&l| l != i && *a.get(i, l) != 0));
            if adjacent {
                2
            } else {
                1
            }
        })
        .collect();
    let k = orbits.len();
    let matrix = Matrix::from_fn(k, k, |p, q| {
        let i = orbits[p][0];
        multipliers[p] * orbits[q].iter().map(|&j| a.get(i, j)).sum::<i64>()
    });
    let degenerate = k == 1 && multipliers[0] == 2;
    Ok(FoldedDiagram { matrix, orbits, multipliers, degenerate })
}

/// Helper for callers that need an exact vector check.
pub fn is_left_null(v: &[i64], m: &IntMatrix) -> bool {
    (0..m.cols()).all(|j| (0..m.rows()).map(|i| v[i] * m.get(i, j)).sum::<i64>() == 0)
}

pub fn is_right_null(v: &[i64], m: &IntMatrix) -> bool {
    m.mul_vec(v).iter().all(Zero::is_zero)
}
