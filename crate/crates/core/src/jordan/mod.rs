//! The simple Jordan algebras J1–J5, their generic minimal polynomial,
//! rank-one elements, and the trace family.
//!
//! Structure constants are rational (real forms); elements have coordinates
//! in `ℚ(i)` so that isotropic and trace-zero rank-one elements exist.

pub mod hurwitz;
pub mod sample;
pub mod xref;

use std::fmt;
use std::str::FromStr;

use num_complex::Complex;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::linalg::{determinant, rank, solve, Mat, Q};
use hurwitz::Hurwitz;

/// `ℚ(i)`, with `i` the complexification scalar.
pub type Cq = Complex<Q>;

pub fn cq(re: Q) -> Cq {
    Cq::new(re, Q::zero())
}

pub type Element = Vec<Cq>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum JordanError {
    #[error("invalid size for {0}")]
    InvalidSize(String),
    #[error("bilinear form is degenerate or not symmetric")]
    DegenerateForm,
    #[error("element is not of rank one")]
    NotRankOne,
    #[error("element has the wrong dimension")]
    DimensionMismatch,
    #[error("cannot parse label '{0}'")]
    Parse(String),
    #[error("sampling needs the standard form on W")]
    UnsupportedForm,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum JordanLabel {
    /// `ℂ ⊕ W` with `dim W` given.
    J1(usize),
    /// Hermitian matrices over the complexified reals, complexes, quaternions.
    J2(usize),
    J3(usize),
    J4(usize),
    J5,
}

impl fmt::Display for JordanLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            JordanLabel::J1(n) => write!(f, "J1({n})"),
            JordanLabel::J2(n) => write!(f, "J2({n})"),
            JordanLabel::J3(n) => write!(f, "J3({n})"),
            JordanLabel::J4(n) => write!(f, "J4({n})"),
            JordanLabel::J5 => write!(f, "J5"),
        }
    }
}

impl FromStr for JordanLabel {
    type Err = JordanError;

    /// `J1(w)`, `J2(n)`, `J3(n)`, `J4(n)` or `J5`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || JordanError::Parse(s.chars().take(64).collect());
        let t = s.trim();
        if t == "J5" {
            return Ok(JordanLabel::J5);
        }
        let (head, rest) = t.split_at_checked(2).ok_or_else(bad)?;
        let inner = rest.strip_prefix('(').and_then(|r| r.strip_suffix(')')).ok_or_else(bad)?;
        let n: usize = inner.trim().parse().map_err(|_| bad())?;
        match head {
            "J1" => Ok(JordanLabel::J1(n)),
            "J2" => Ok(JordanLabel::J2(n)),
            "J3" => Ok(JordanLabel::J3(n)),
            "J4" => Ok(JordanLabel::J4(n)),
            _ => Err(bad()),
        }
    }
}

impl JordanLabel {
    /// Labels checked by the invariant panel: J1 with `dim W` in 2..=9,
    /// J2–J4 with `n` in 3..=4, and J5.
    pub fn panel() -> Vec<JordanLabel> {
        let mut v: Vec<JordanLabel> = (2..=9).map(JordanLabel::J1).collect();
        for n in 3..=4 {
            v.extend([JordanLabel::J2(n), JordanLabel::J3(n), JordanLabel::J4(n)]);
        }
        v.push(JordanLabel::J5);
        v
    }

    /// Dimension of the cone of rank-one elements, `dim G/P + 1`.
    pub fn expected_cone_dimension(&self) -> usize {
        match *self {
            JordanLabel::J1(w) => w,
            JordanLabel::J2(n) => n,
            JordanLabel::J3(n) => 2 * n - 1,
            JordanLabel::J4(n) => 4 * n - 3,
            JordanLabel::J5 => 17,
        }
    }
}

/// Structure constants: `e_a * e_b = Σ c·e_k`, stored sparsely.
type Table = Vec<Vec<Vec<(usize, Q)>>>;

#[derive(Debug, Clone)]
pub struct JordanAlgebra {
    pub label: JordanLabel,
    dim: usize,
    rank: usize,
    table: Table,
    unit: Vec<Q>,
    /// A regular element used to interpolate the minimal polynomial.
    direction: Vec<Q>,
    /// `tr(e_k)`.
    trace_of_basis: Vec<Q>,
    /// The form on `W` for J1.
    form: Option<Mat<Q>>,
}

fn add_entry(row: &mut Vec<(usize, Q)>, k: usize, c: Q) {
    if c.is_zero() {
        return;
    }
    match row.iter_mut().find(|(j, _)| *j == k) {
        Some((_, x)) => *x += c,
        None => row.push((k, c)),
    }
    row.retain(|(_, x)| !x.is_zero());
}

fn spin_table(form: &Mat<Q>) -> Table {
    let w = form.len();
    let dim = w + 1;
    let mut t: Table = vec![vec![Vec::new(); dim]; dim];
    for a in 0..dim {
        for b in 0..dim {
            let row = &mut t[a][b];
            match (a, b) {
                (0, 0) => add_entry(row, 0, Q::one()),
                (0, k) | (k, 0) => add_entry(row, k, Q::one()),
                (i, j) => add_entry(row, 0, form[i - 1][j - 1].clone()),
            }
        }
    }
    t
}

/// Coordinates of a Hermitian `n×n` matrix over a Hurwitz algebra of dimension `d`:
/// `n` diagonal entries, then for each `i < j` the `d` components of entry `(i, j)`.
struct HermitianLayout {
    n: usize,
    d: usize,
}

impl HermitianLayout {
    fn dim(&self) -> usize {
        self.n + self.d * self.n * (self.n - 1) / 2
    }

    fn off_index(&self, i: usize, j: usize, u: usize) -> usize {
        debug_assert!(i < j);
        let pair = i * (2 * self.n - i - 1) / 2 + (j - i - 1);
        self.n + pair * self.d + u
    }

    /// Basis element as a matrix of Hurwitz entries.
    fn basis_matrix(&self, k: usize) -> Vec<Vec<Vec<Q>>> {
        let mut m = vec![vec![vec![Q::zero(); self.d]; self.n]; self.n];
        if k < self.n {
            m[k][k][0] = Q::one();
            return m;
        }
        for i in 0..self.n {
            for j in i + 1..self.n {
                for u in 0..self.d {
                    if self.off_index(i, j, u) == k {
                        m[i][j][u] = Q::one();
                        m[j][i][u] = Q::from_integer(Hurwitz::conj_sign(u).into());
                    }
                }
            }
        }
        m
    }

    fn coords(&self, m: &[Vec<Vec<Q>>]) -> Vec<Q> {
        let mut out = vec![Q::zero(); self.dim()];
        for i in 0..self.n {
            debug_assert!(m[i][i][1..].iter().all(Zero::is_zero), "diagonal must be real");
            out[i] = m[i][i][0].clone();
            for j in i + 1..self.n {
                for u in 0..self.d {
                    out[self.off_index(i, j, u)] = m[i][j][u].clone();
                }
            }
        }
        out
    }
}

fn matrix_product(h: &Hurwitz, a: &[Vec<Vec<Q>>], b: &[Vec<Vec<Q>>]) -> Vec<Vec<Vec<Q>>> {
    let n = a.len();
    let mut out = vec![vec![vec![Q::zero(); h.dim]; n]; n];
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let p = h.mul(&a[i][k], &b[k][j]);
                for (o, x) in out[i][j].iter_mut().zip(p) {
                    *o += x;
                }
            }
        }
    }
    out
}

fn hermitian_table(n: usize, d: usize) -> Table {
    let h = Hurwitz::new(d);
    let layout = HermitianLayout { n, d };
    let dim = layout.dim();
    let mats: Vec<_> = (0..dim).map(|k| layout.basis_matrix(k)).collect();
    let half = Q::new(1.into(), 2.into());
    let mut t: Table = vec![vec![Vec::new(); dim]; dim];
    for a in 0..dim {
        for b in a..dim {
            let ab = matrix_product(&h, &mats[a], &mats[b]);
            let ba = matrix_product(&h, &mats[b], &mats[a]);
            let sum: Vec<Vec<Vec<Q>>> = ab
                .iter()
                .zip(&ba)
                .map(|(r, s)| r.iter().zip(s).map(|(x, y)| x.iter().zip(y).map(|(p, q)| (p.clone() + q.clone()) * half.clone()).collect()).collect())
                .collect();
            let c = layout.coords(&sum);
            let row: Vec<(usize, Q)> = c.into_iter().enumerate().filter(|(_, x)| !x.is_zero()).collect();
            t[a][b] = row.clone();
            t[b][a] = row;
        }
    }
    t
}

fn is_symmetric_nondegenerate(form: &Mat<Q>) -> bool {
    let n = form.len();
    form.iter().all(|r| r.len() == n)
        && (0..n).all(|i| (0..n).all(|j| form[i][j] == form[j][i]))
        && !determinant(form).is_zero()
}

impl JordanAlgebra {
    pub fn build(label: JordanLabel) -> Result<Self, JordanError> {
        match label {
            JordanLabel::J1(w) => {
                if w == 0 {
                    return Err(JordanError::InvalidSize(label.to_string()));
                }
                let form: Mat<Q> = (0..w).map(|i| (0..w).map(|j| if i == j { Q::one() } else { Q::zero() }).collect()).collect();
                Self::spin_factor(form)
            }
            JordanLabel::J2(n) | JordanLabel::J3(n) | JordanLabel::J4(n) if n < 3 => Err(JordanError::InvalidSize(label.to_string())),
            JordanLabel::J2(n) => Ok(Self::hermitian(label, n, 1)),
            JordanLabel::J3(n) => Ok(Self::hermitian(label, n, 2)),
            JordanLabel::J4(n) => Ok(Self::hermitian(label, n, 4)),
            JordanLabel::J5 => Ok(Self::hermitian(label, 3, 8)),
        }
    }

    /// `ℂ ⊕ W` for a symmetric nondegenerate form on `W`.
    pub fn spin_factor(form: Mat<Q>) -> Result<Self, JordanError> {
        if form.is_empty() || !is_symmetric_nondegenerate(&form) {
            return Err(JordanError::DegenerateForm);
        }
        Ok(Self::spin_factor_unchecked(form))
    }

    /// As [`spin_factor`](Self::spin_factor) without validating the form.
    pub fn spin_factor_unchecked(form: Mat<Q>) -> Self {
        let w = form.len();
        let dim = w + 1;
        let mut unit = vec![Q::zero(); dim];
        unit[0] = Q::one();
        // (0, w) with w ≠ 0 is regular: its minimal polynomial is X² − ⟨w, w⟩.
        let mut direction = vec![Q::zero(); dim];
        direction[1] = Q::one();
        let mut a = JordanAlgebra {
            label: JordanLabel::J1(w),
            dim,
            rank: 2,
            table: spin_table(&form),
            unit,
            direction,
            trace_of_basis: Vec::new(),
            form: Some(form),
        };
        a.finish();
        a
    }

    fn hermitian(label: JordanLabel, n: usize, d: usize) -> Self {
        let layout = HermitianLayout { n, d };
        let dim = layout.dim();
        let mut unit = vec![Q::zero(); dim];
        let mut direction = vec![Q::zero(); dim];
        for k in 0..n {
            unit[k] = Q::one();
            direction[k] = Q::from_integer((k as i64 + 1).into());
        }
        let mut a = JordanAlgebra { label, dim, rank: n, table: hermitian_table(n, d), unit, direction, trace_of_basis: Vec::new(), form: None };
        a.finish();
        a
    }

    fn finish(&mut self) {
        // p₁ is linear, so its values on the basis give the trace.
        self.trace_of_basis = (0..self.dim)
            .map(|k| {
                let mut e = vec![Cq::zero(); self.dim];
                e[k] = Cq::one();
                -self.min_poly_coeffs(&e)[0].re.clone()
            })
            .collect();
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn unit(&self) -> Element {
        self.unit.iter().cloned().map(cq).collect()
    }

    pub fn form(&self) -> Option<&Mat<Q>> {
        self.form.as_ref()
    }

    /// `e_k` as an element.
    pub fn basis(&self, k: usize) -> Element {
        let mut e = vec![Cq::zero(); self.dim];
        e[k] = Cq::one();
        e
    }

    /// `(n, d)`: matrix size and Hurwitz dimension, for the matrix types.
    pub fn matrix_shape(&self) -> Option<(usize, usize)> {
        match self.label {
            JordanLabel::J1(_) => None,
            JordanLabel::J2(n) => Some((n, 1)),
            JordanLabel::J3(n) => Some((n, 2)),
            JordanLabel::J4(n) => Some((n, 4)),
            JordanLabel::J5 => Some((3, 8)),
        }
    }

    /// Coordinate of component `u` of entry `(i, j)`, `i ≤ j`; the diagonal is real.
    pub fn matrix_coordinate(&self, i: usize, j: usize, u: usize) -> Option<usize> {
        let (n, d) = self.matrix_shape()?;
        if i > j || j >= n || u >= d || (i == j && u > 0) {
            return None;
        }
        if i == j {
            return Some(i);
        }
        Some(HermitianLayout { n, d }.off_index(i, j, u))
    }

    pub fn from_rational(&self, v: &[Q]) -> Element {
        v.iter().cloned().map(cq).collect()
    }

    pub fn mul(&self, x: &[Cq], y: &[Cq]) -> Element {
        let mut out = vec![Cq::zero(); self.dim];
        for (a, xa) in x.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            for (b, yb) in y.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                let p = xa.clone() * yb.clone();
                for (k, c) in &self.table[a][b] {
                    out[*k] = out[*k].clone() + p.clone() * cq(c.clone());
                }
            }
        }
        out
    }

    /// `x^k` with `x⁰ = 1`; well defined by power-associativity.
    pub fn power(&self, x: &[Cq], k: usize) -> Element {
        let mut p = self.unit();
        for _ in 0..k {
            p = self.mul(x, &p);
        }
        p
    }

    /// True when `1, x, …, x^{r−1}` are independent.
    pub fn is_regular(&self, x: &[Cq]) -> bool {
        let rows: Mat<Cq> = (0..self.rank).map(|k| self.power(x, k)).collect();
        rank(&rows, self.dim) == self.rank
    }

    /// `p₁(x), …, p_r(x)` for regular `x`, from `x^r + Σ p_i x^{r−i} = 0`.
    fn min_poly_regular(&self, x: &[Cq]) -> Vec<Cq> {
        let r = self.rank;
        let powers: Vec<Element> = (0..=r).map(|k| self.power(x, k)).collect();
        // Columns x^{r−1}, …, x⁰.
        let m: Mat<Cq> = (0..self.dim).map(|row| (1..=r).map(|i| powers[r - i][row].clone()).collect()).collect();
        let rhs: Vec<Cq> = powers[r].iter().map(|v| -v.clone()).collect();
        solve(&m, &rhs, r).expect("regular element has a minimal polynomial of degree r")
    }

    /// Generic minimal-polynomial coefficients `p₁(x), …, p_r(x)`.
    ///
    /// Each `p_i` is a polynomial of degree `i`, so its value at any `x` is
    /// recovered exactly by interpolating along the line `x + s·c` through
    /// regular points, with `c` a fixed regular element.
    pub fn min_poly_coeffs(&self, x: &[Cq]) -> Vec<Cq> {
        if self.is_regular(x) {
            return self.min_poly_regular(x);
        }
        let r = self.rank;
        let c = self.from_rational(&self.direction);
        let mut nodes: Vec<(Cq, Vec<Cq>)> = Vec::new();
        let mut s = 1i64;
        while nodes.len() < r + 1 {
            let sv = cq(Q::from_integer(s.into()));
            let y: Element = x.iter().zip(&c).map(|(a, b)| a.clone() + sv.clone() * b.clone()).collect();
            if self.is_regular(&y) {
                nodes.push((sv, self.min_poly_regular(&y)));
            }
            s += 1;
        }
        // Lagrange interpolation at s = 0.
        let mut out = vec![Cq::zero(); r];
        for (j, (sj, pj)) in nodes.iter().enumerate() {
            let mut w = Cq::one();
            for (k, (sk, _)) in nodes.iter().enumerate() {
                if k != j {
                    w = w * (-sk.clone()) / (sj.clone() - sk.clone());
                }
            }
            for (o, v) in out.iter_mut().zip(pj) {
                *o = o.clone() + w.clone() * v.clone();
            }
        }
        out
    }

    pub fn trace(&self, x: &[Cq]) -> Cq {
        x.iter().zip(&self.trace_of_basis).fold(Cq::zero(), |s, (a, t)| s + a.clone() * cq(t.clone()))
    }

    pub fn det(&self, x: &[Cq]) -> Cq {
        let p = self.min_poly_coeffs(x);
        let last = p[self.rank - 1].clone();
        if self.rank % 2 == 0 {
            last
        } else {
            -last
        }
    }

    /// `Tr L(x)`.
    pub fn trace_of_multiplication(&self, x: &[Cq]) -> Cq {
        let mut s = Cq::zero();
        for (c, xc) in x.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            for k in 0..self.dim {
                if let Some((_, v)) = self.table[c][k].iter().find(|(j, _)| *j == k) {
                    s = s + xc.clone() * cq(v.clone());
                }
            }
        }
        s
    }

    /// Gram matrix of `(a, b) ↦ Tr L(a*b)` on the coordinate basis.
    pub fn trace_form_gram(&self) -> Mat<Q> {
        (0..self.dim)
            .map(|a| (0..self.dim).map(|b| self.trace_of_multiplication(&self.mul(&self.basis(a), &self.basis(b))).re).collect())
            .collect()
    }

    /// `U_a(b) = 2a*(a*b) − a²*b`.
    pub fn quadratic_representation(&self, a: &[Cq], b: &[Cq]) -> Element {
        let ab = self.mul(a, b);
        let aab = self.mul(a, &ab);
        let a2b = self.mul(&self.mul(a, a), b);
        aab.iter().zip(&a2b).map(|(x, y)| x.clone() + x.clone() - y.clone()).collect()
    }
}

pub fn trace_form_nondegenerate(a: &JordanAlgebra) -> bool {
    !determinant(&a.trace_form_gram()).is_zero()
}

/// Violations of `x²*(x*y) = x*(x²*y)` over seeded sample pairs.
pub fn jordan_identity_violations(a: &JordanAlgebra, samples: usize, seed: u64) -> usize {
    let mut sampler = sample::ElementSampler::new(seed);
    (0..samples)
        .filter(|_| {
            let x = sampler.element(a);
            let y = sampler.element(a);
            let x2 = a.mul(&x, &x);
            a.mul(&x2, &a.mul(&x, &y)) != a.mul(&x, &a.mul(&x2, &y))
        })
        .count()
}

fn is_zero_element(x: &[Cq]) -> bool {
    x.iter().all(Zero::is_zero)
}

/// Nonzero, `a*a = tr(a)·a`, and `U_a` of rank at most one.
///
/// The quadratic equation alone also holds for square-zero elements of
/// higher rank once `n ≥ 4`, which the rank condition on `U_a` excludes.
pub fn is_rank_one(alg: &JordanAlgebra, a: &[Cq]) -> bool {
    if a.len() != alg.dim || is_zero_element(a) {
        return false;
    }
    let t = alg.trace(a);
    let sq = alg.mul(a, a);
    if sq.iter().zip(a).any(|(s, x)| *s != t.clone() * x.clone()) {
        return false;
    }
    let u: Mat<Cq> = (0..alg.dim).map(|k| alg.quadratic_representation(a, &alg.basis(k))).collect();
    rank(&u, alg.dim) <= 1
}

/// `(tr(a)/r, a − (tr(a)/r)·1)`: the components along `ℂ·1` and the trace-zero part.
pub fn trace_zero_part(alg: &JordanAlgebra, a: &[Cq]) -> (Cq, Element) {
    let s = alg.trace(a) / cq(Q::from_integer((alg.rank as i64).into()));
    let v = a.iter().zip(alg.unit()).map(|(x, u)| x.clone() - s.clone() * u).collect();
    (s, v)
}

/// Dimension of the zero set of `x*x − tr(x)·x` at a rank-one `a`, from the
/// rank of the differential `b ↦ 2a*b − tr(b)·a − tr(a)·b`.
pub fn cone_dimension_at(alg: &JordanAlgebra, a: &[Cq]) -> Result<usize, JordanError> {
    if !is_rank_one(alg, a) {
        return Err(JordanError::NotRankOne);
    }
    let ta = alg.trace(a);
    let rows: Mat<Cq> = (0..alg.dim)
        .map(|k| {
            let b = alg.basis(k);
            let ab = alg.mul(a, &b);
            let tb = alg.trace(&b);
            (0..alg.dim).map(|j| ab[j].clone() + ab[j].clone() - tb.clone() * a[j].clone() - ta.clone() * b[j].clone()).collect()
        })
        .collect();
    Ok(alg.dim - rank(&rows, alg.dim))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct JordanDescriptor {
    pub label: String,
    pub dim: usize,
    pub rank: usize,
    pub trace_form_nondegenerate: bool,
    pub samples_checked: usize,
}

/// Builds `label` and runs the identity and trace-form checks.
pub fn describe(label: JordanLabel, samples: usize, seed: u64) -> Result<(JordanDescriptor, usize), JordanError> {
    let a = JordanAlgebra::build(label)?;
    let violations = jordan_identity_violations(&a, samples, seed);
    let d = JordanDescriptor {
        label: label.to_string(),
        dim: a.dim(),
        rank: a.rank(),
        trace_form_nondegenerate: trace_form_nondegenerate(&a),
        samples_checked: samples,
    };
    Ok((d, violations))
}

pub fn parse_jordan_descriptor(s: &str) -> Result<JordanDescriptor, serde_json::Error> {
    serde_json::from_str(s)
}
