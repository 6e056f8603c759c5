//! Root systems, weight lattices and Weyl groups in Bourbaki numbering.
//!
//! Weights are integer vectors in fundamental-weight coordinates, roots are
//! integer vectors in simple-root coordinates. Product types concatenate the
//! coordinates of their factors.
//!
//! Conventions: `cartan[i][j] = ⟨α_i, α_j∨⟩`, so the simple root `α_i` has
//! fundamental coordinates equal to row `i` of the Cartan matrix. The
//! symmetric form is scaled so that `(α, α) ∈ {2, 4, 6}`.

use std::fmt;
use std::ops::Range;
use std::str::FromStr;

use num_traits::Zero;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::linalg::{inverse, q, Mat, Q};

pub type Weight = Vec<i64>;
pub type RootVec = Vec<i64>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RootError {
    #[error("invalid rank {rank} for family {family}")]
    InvalidRank { family: char, rank: usize },
    #[error("cannot parse `{0}`")]
    Parse(String),
    #[error("rank mismatch: expected {expected}, got {got}")]
    RankMismatch { expected: usize, got: usize },
    #[error("weight {0:?} is not dominant")]
    NotDominant(Weight),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    pub fn from_letter(c: char) -> Option<Family> {
        Some(match c {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            'E' => Family::E,
            'F' => Family::F,
            'G' => Family::G,
            _ => return None,
        })
    }

    pub fn valid_rank(self, n: usize) -> bool {
        match self {
            Family::A => n >= 1,
            Family::B | Family::C => n >= 2,
            Family::D => n >= 3,
            Family::E => (6..=8).contains(&n),
            Family::F => n == 4,
            Family::G => n == 2,
        }
    }

    /// Number of positive roots from the closed formulas.
    pub fn positive_root_count(self, n: usize) -> usize {
        match self {
            Family::A => n * (n + 1) / 2,
            Family::B | Family::C => n * n,
            Family::D => n * (n - 1),
            Family::E => match n {
                6 => 36,
                7 => 63,
                _ => 120,
            },
            Family::F => 24,
            Family::G => 6,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CartanType {
    pub factors: Vec<(Family, usize)>,
}

impl CartanType {
    pub fn simple(family: Family, rank: usize) -> Result<Self, RootError> {
        Self::new(vec![(family, rank)])
    }

    pub fn new(factors: Vec<(Family, usize)>) -> Result<Self, RootError> {
        if factors.is_empty() {
            return Err(RootError::Parse(String::new()));
        }
        for &(f, n) in &factors {
            if !f.valid_rank(n) {
                return Err(RootError::InvalidRank { family: f.letter(), rank: n });
            }
        }
        Ok(CartanType { factors })
    }

    pub fn rank(&self) -> usize {
        self.factors.iter().map(|f| f.1).sum()
    }

    pub fn is_simple(&self) -> bool {
        self.factors.len() == 1
    }

    /// Replaces every `C2` factor by `B2`; other factors are untouched.
    pub fn normalized(&self) -> CartanType {
        let factors = self
            .factors
            .iter()
            .map(|&(f, n)| if f == Family::C && n == 2 { (Family::B, 2) } else { (f, n) })
            .collect();
        CartanType { factors }
    }

    /// The non-redundant simple types of rank at most `max_rank`:
    /// A≥1, B≥2, C≥3, D≥4, E6–E8, F4, G2.
    pub fn simple_types_up_to(max_rank: usize) -> Vec<CartanType> {
        let mut out = Vec::new();
        for n in 1..=max_rank {
            out.push((Family::A, n));
        }
        for n in 2..=max_rank {
            out.push((Family::B, n));
        }
        for n in 3..=max_rank {
            out.push((Family::C, n));
        }
        for n in 4..=max_rank {
            out.push((Family::D, n));
        }
        for n in 6..=max_rank.min(8) {
            out.push((Family::E, n));
        }
        if max_rank >= 4 {
            out.push((Family::F, 4));
        }
        if max_rank >= 2 {
            out.push((Family::G, 2));
        }
        out.into_iter().map(|(f, n)| CartanType { factors: vec![(f, n)] }).collect()
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> =
            self.factors.iter().map(|(fam, n)| format!("{}{}", fam.letter(), n)).collect();
        write!(f, "{}", parts.join("x"))
    }
}

impl FromStr for CartanType {
    type Err = RootError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_cartan_type(s)
    }
}

/// Parses `"B3"`, `"A1xA1"`, ... into a validated Cartan type.
pub fn parse_cartan_type(s: &str) -> Result<CartanType, RootError> {
    let err = || RootError::Parse(s.chars().take(64).collect());
    let mut factors = Vec::new();
    for part in s.trim().split('x') {
        let mut chars = part.chars();
        let fam = chars.next().and_then(Family::from_letter).ok_or_else(err)?;
        let digits = chars.as_str();
        if digits.is_empty() || digits.len() > 3 || !digits.chars().all(|c| c.is_ascii_digit()) {
            return Err(err());
        }
        let n: usize = digits.parse().map_err(|_| err())?;
        factors.push((fam, n));
    }
    CartanType::new(factors)
}

/// Parses a comma-separated integer vector such as `"1,0,-2"`.
pub fn parse_weight(s: &str) -> Result<Weight, RootError> {
    let err = || RootError::Parse(s.chars().take(64).collect());
    if s.trim().is_empty() {
        return Err(err());
    }
    s.split(',')
        .map(|t| {
            let t = t.trim();
            if t.len() > 18 {
                return Err(err());
            }
            t.parse::<i64>().map_err(|_| err())
        })
        .collect()
}

pub fn format_weight(w: &[i64]) -> String {
    w.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

/// A word in the simple reflections; acts by applying the rightmost letter first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct WeylElement {
    pub word: Vec<usize>,
}

impl WeylElement {
    pub fn identity() -> Self {
        Self::default()
    }

    pub fn reflection(i: usize) -> Self {
        WeylElement { word: vec![i] }
    }

    /// The product `self · other`.
    pub fn compose(&self, other: &WeylElement) -> WeylElement {
        let mut word = self.word.clone();
        word.extend_from_slice(&other.word);
        WeylElement { word }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Straightening {
    Singular,
    Regular { length: usize, dominant: Weight, element: WeylElement },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum DecompositionKind {
    Sum,
    HalfSum,
}

/// `λ = α_simple + β` (sum) or `2λ = α_simple + β` (half-sum).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Decomposition {
    pub simple: usize,
    pub beta: RootVec,
    pub kind: DecompositionKind,
}

#[derive(Debug, Clone)]
pub struct RootSystem {
    pub cartan_type: CartanType,
    pub cartan: Vec<Vec<i64>>,
    /// Symmetric form on simple roots, `(α_i, α_i) ∈ {2, 4, 6}`.
    pub form: Vec<Vec<i64>>,
    pub positive_roots: Vec<RootVec>,
    pub inverse_cartan: Mat<Q>,
    pub rho: Weight,
    pub factor_boundaries: Vec<Range<usize>>,
}

fn dynkin(family: Family, n: usize) -> Vec<Vec<i64>> {
    let mut b = vec![vec![0i64; n]; n];
    let mut len = vec![2i64; n];
    let mut edges: Vec<(usize, usize)> = Vec::new();
    match family {
        Family::A => edges.extend((0..n - 1).map(|i| (i, i + 1))),
        Family::B => {
            len.iter_mut().for_each(|l| *l = 4);
            len[n - 1] = 2;
            edges.extend((0..n - 1).map(|i| (i, i + 1)));
        }
        Family::C => {
            len[n - 1] = 4;
            edges.extend((0..n - 1).map(|i| (i, i + 1)));
        }
        Family::D => {
            edges.extend((0..n - 2).map(|i| (i, i + 1)));
            edges.push((n - 3, n - 1));
        }
        Family::E => {
            edges.push((0, 2));
            edges.push((1, 3));
            edges.extend((2..n - 1).map(|i| (i, i + 1)));
        }
        Family::F => {
            len = vec![4, 4, 2, 2];
            edges.extend([(0, 1), (1, 2), (2, 3)]);
        }
        Family::G => {
            len = vec![2, 6];
            edges.push((0, 1));
        }
    }
    for i in 0..n {
        b[i][i] = len[i];
    }
    for (i, j) in edges {
        let v = -len[i].max(len[j]) / 2;
        b[i][j] = v;
        b[j][i] = v;
    }
    b
}

impl RootSystem {
    pub fn build(ct: &CartanType) -> RootSystem {
        let n = ct.rank();
        let mut form = vec![vec![0i64; n]; n];
        let mut boundaries = Vec::new();
        let mut off = 0;
        for &(fam, r) in &ct.factors {
            let b = dynkin(fam, r);
            for i in 0..r {
                for j in 0..r {
                    form[off + i][off + j] = b[i][j];
                }
            }
            boundaries.push(off..off + r);
            off += r;
        }
        let cartan: Vec<Vec<i64>> = (0..n)
            .map(|i| (0..n).map(|j| 2 * form[i][j] / form[j][j]).collect())
            .collect();
        let cq: Mat<Q> = cartan.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect();
        let inverse_cartan = inverse(&cq).expect("Cartan matrices are invertible");
        let mut rs = RootSystem {
            cartan_type: ct.clone(),
            cartan,
            form,
            positive_roots: Vec::new(),
            inverse_cartan,
            rho: vec![1; n],
            factor_boundaries: boundaries,
        };
        rs.positive_roots = rs.reflection_closure();
        rs
    }

    fn reflection_closure(&self) -> Vec<RootVec> {
        let n = self.rank();
        let mut seen: std::collections::BTreeSet<RootVec> = (0..n).map(|i| unit(n, i)).collect();
        let mut frontier: Vec<RootVec> = seen.iter().cloned().collect();
        while let Some(beta) = frontier.pop() {
            for i in 0..n {
                let r = self.reflect_root(i, &beta);
                if r.iter().all(|&c| c >= 0) && r.iter().any(|&c| c > 0) && seen.insert(r.clone()) {
                    frontier.push(r);
                }
            }
        }
        let mut roots: Vec<RootVec> = seen.into_iter().collect();
        roots.sort_by(|a, b| height(a).cmp(&height(b)).then(b.cmp(a)));
        roots
    }

    pub fn rank(&self) -> usize {
        self.cartan.len()
    }

    pub fn num_positive_roots(&self) -> usize {
        self.positive_roots.len()
    }

    pub fn simple_root(&self, i: usize) -> RootVec {
        unit(self.rank(), i)
    }

    pub fn fundamental_weight(&self, i: usize) -> Weight {
        unit(self.rank(), i)
    }

    /// Index of the product factor containing simple root `i`.
    pub fn factor_of(&self, i: usize) -> usize {
        self.factor_boundaries.iter().position(|r| r.contains(&i)).unwrap()
    }

    /// `⟨β, α_i∨⟩` for a root (or any element of the root lattice) `β`.
    pub fn root_coroot_simple(&self, beta: &[i64], i: usize) -> i64 {
        beta.iter().enumerate().map(|(j, &c)| c * self.cartan[j][i]).sum()
    }

    pub fn reflect_root(&self, i: usize, beta: &[i64]) -> RootVec {
        let p = self.root_coroot_simple(beta, i);
        let mut r = beta.to_vec();
        r[i] -= p;
        r
    }

    /// Fundamental coordinates of an element of the root lattice.
    pub fn root_to_weight(&self, beta: &[i64]) -> Weight {
        let n = self.rank();
        (0..n).map(|j| (0..n).map(|i| beta[i] * self.cartan[i][j]).sum()).collect()
    }

    /// Simple-root coordinates of a weight (rational in general).
    pub fn weight_to_root(&self, mu: &[i64]) -> Vec<Q> {
        let n = self.rank();
        (0..n)
            .map(|j| (0..n).fold(Q::zero(), |acc, i| acc + q(mu[i]) * self.inverse_cartan[i][j].clone()))
            .collect()
    }

    /// Simple-root coordinates if the weight lies in the root lattice.
    pub fn weight_to_root_integral(&self, mu: &[i64]) -> Option<RootVec> {
        self.weight_to_root(mu)
            .into_iter()
            .map(|x| if x.is_integer() { i64::try_from(x.to_integer()).ok() } else { None })
            .collect()
    }

    fn check_len(&self, v: &[i64]) -> Result<(), RootError> {
        if v.len() == self.rank() {
            Ok(())
        } else {
            Err(RootError::RankMismatch { expected: self.rank(), got: v.len() })
        }
    }

    /// `(β, β)` in the scaled form.
    pub fn root_norm(&self, beta: &[i64]) -> i64 {
        let n = self.rank();
        let mut s = 0;
        for i in 0..n {
            for j in 0..n {
                s += beta[i] * self.form[i][j] * beta[j];
            }
        }
        s
    }

    /// A root is long when it has the maximal length within its factor.
    pub fn is_long(&self, beta: &[i64]) -> bool {
        let i = beta.iter().position(|&c| c != 0).expect("nonzero root");
        let range = &self.factor_boundaries[self.factor_of(i)];
        let max = range.clone().map(|k| self.form[k][k]).max().unwrap();
        self.root_norm(beta) == max
    }

    /// `⟨μ, β∨⟩ = 2(μ, β)/(β, β)`.
    pub fn pairing(&self, mu: &[i64], beta: &[i64]) -> Result<i64, RootError> {
        self.check_len(mu)?;
        self.check_len(beta)?;
        let num: i64 = (0..self.rank()).map(|j| beta[j] * mu[j] * self.form[j][j]).sum();
        Ok(num / self.root_norm(beta))
    }

    /// `(μ, ν)` for weights, exact rational.
    pub fn weight_form(&self, mu: &[i64], nu: &[i64]) -> Q {
        let c = self.weight_to_root(nu);
        (0..self.rank()).fold(Q::zero(), |acc, j| acc + q(mu[j] * self.form[j][j]) * c[j].clone() / q(2))
    }

    pub fn is_dominant(&self, mu: &[i64]) -> bool {
        mu.iter().all(|&x| x >= 0)
    }

    /// `μ ≤ λ` in the dominance order.
    pub fn dominance_le(&self, mu: &[i64], lambda: &[i64]) -> bool {
        let d: Weight = lambda.iter().zip(mu).map(|(a, b)| a - b).collect();
        match self.weight_to_root_integral(&d) {
            Some(c) => c.iter().all(|&x| x >= 0),
            None => false,
        }
    }

    pub fn reflect_weight(&self, i: usize, mu: &[i64]) -> Weight {
        let p = mu[i];
        mu.iter().zip(&self.cartan[i]).map(|(m, a)| m - p * a).collect()
    }

    pub fn act(&self, w: &WeylElement, mu: &[i64]) -> Weight {
        let mut v = mu.to_vec();
        for &i in w.word.iter().rev() {
            v = self.reflect_weight(i, &v);
        }
        v
    }

    pub fn act_on_root(&self, w: &WeylElement, beta: &[i64]) -> RootVec {
        let mut v = beta.to_vec();
        for &i in w.word.iter().rev() {
            v = self.reflect_root(i, &v);
        }
        v
    }

    /// Number of positive roots sent to negative roots.
    pub fn length(&self, w: &WeylElement) -> usize {
        self.positive_roots
            .iter()
            .filter(|b| self.act_on_root(w, b).iter().any(|&c| c < 0))
            .count()
    }

    /// `w ⋆ μ = w(μ + ρ) − ρ`.
    pub fn dot_action(&self, w: &WeylElement, mu: &[i64]) -> Weight {
        let shifted: Weight = mu.iter().zip(&self.rho).map(|(a, b)| a + b).collect();
        self.act(w, &shifted).iter().zip(&self.rho).map(|(a, b)| a - b).collect()
    }

    /// Dominant representative of the plain Weyl orbit of `μ`.
    pub fn dominant_conjugate(&self, mu: &[i64]) -> Weight {
        let mut v = mu.to_vec();
        while let Some(i) = v.iter().position(|&x| x < 0) {
            v = self.reflect_weight(i, &v);
        }
        v
    }

    /// Straightens `μ + ρ` into the dominant chamber.
    pub fn to_dominant_dot(&self, mu: &[i64]) -> Straightening {
        let mut v: Weight = mu.iter().zip(&self.rho).map(|(a, b)| a + b).collect();
        let mut word = Vec::new();
        while let Some(i) = v.iter().position(|&x| x < 0) {
            v = self.reflect_weight(i, &v);
            word.push(i);
        }
        if v.iter().any(|&x| x == 0) {
            return Straightening::Singular;
        }
        // The reflections were applied left to right, so w reads them in reverse.
        word.reverse();
        Straightening::Regular {
            length: word.len(),
            dominant: v.iter().zip(&self.rho).map(|(a, b)| a - b).collect(),
            element: WeylElement { word },
        }
    }

    /// Singularity of `μ + ρ` decided through all positive coroots.
    pub fn is_dot_singular(&self, mu: &[i64]) -> bool {
        let shifted: Weight = mu.iter().zip(&self.rho).map(|(a, b)| a + b).collect();
        self.positive_roots.iter().any(|b| self.pairing(&shifted, b).unwrap() == 0)
    }

    /// `λ* = −w₀λ`.
    pub fn dual_highest_weight(&self, lambda: &[i64]) -> Result<Weight, RootError> {
        self.check_len(lambda)?;
        if !self.is_dominant(lambda) {
            return Err(RootError::NotDominant(lambda.to_vec()));
        }
        let neg: Weight = lambda.iter().map(|x| -x).collect();
        Ok(self.dominant_conjugate(&neg))
    }

    pub fn highest_root(&self, factor: usize) -> RootVec {
        let range = self.factor_boundaries[factor].clone();
        self.positive_roots
            .iter()
            .filter(|b| b.iter().enumerate().all(|(i, &c)| c == 0 || range.contains(&i)))
            .max_by_key(|b| height(b))
            .cloned()
            .unwrap()
    }

    pub fn is_root(&self, beta: &[i64]) -> bool {
        let abs: Vec<i64> = if beta.iter().all(|&c| c <= 0) { beta.iter().map(|c| -c).collect() } else { beta.to_vec() };
        self.positive_roots.binary_search_by(|b| height(b).cmp(&height(&abs)).then(abs.cmp(b))).is_ok()
    }

    pub fn is_positive_root(&self, beta: &[i64]) -> bool {
        beta.iter().all(|&c| c >= 0) && self.is_root(beta)
    }

    /// All decompositions `λ = α + β` and `2λ = α + β`, α simple, β positive.
    pub fn decompose_as_root_sums(&self, lambda: &[i64]) -> Vec<Decomposition> {
        let c = self.weight_to_root(lambda);
        let n = self.rank();
        let mut out = Vec::new();
        for i in 0..n {
            for beta in &self.positive_roots {
                let sum: Vec<Q> = (0..n).map(|j| q(beta[j] + i64::from(i == j))).collect();
                if sum == c {
                    out.push(Decomposition { simple: i, beta: beta.clone(), kind: DecompositionKind::Sum });
                }
                if sum.iter().zip(&c).all(|(s, x)| *s == x.clone() * q(2)) {
                    out.push(Decomposition { simple: i, beta: beta.clone(), kind: DecompositionKind::HalfSum });
                }
            }
        }
        out
    }
}

pub fn unit(n: usize, i: usize) -> Vec<i64> {
    let mut v = vec![0; n];
    v[i] = 1;
    v
}

pub fn height(beta: &[i64]) -> i64 {
    beta.iter().sum()
}

/// Renders a root-lattice vector as `a1+2a2+a3`.
pub fn format_root(beta: &[i64]) -> String {
    let mut s = String::new();
    for (i, &c) in beta.iter().enumerate() {
        if c == 0 {
            continue;
        }
        if c < 0 {
            s.push('-');
        } else if !s.is_empty() {
            s.push('+');
        }
        if c.abs() != 1 {
            s.push_str(&c.abs().to_string());
        }
        s.push_str(&format!("a{}", i + 1));
    }
    if s.is_empty() {
        s.push('0');
    }
    s
}

/// Renders a weight as `w1+2w3`.
pub fn format_weight_symbolic(mu: &[i64]) -> String {
    format_root(mu).replace('a', "w")
}

impl Decomposition {
    pub fn render(&self, n: usize) -> String {
        let a = format_root(&unit(n, self.simple));
        let b = format_root(&self.beta);
        match self.kind {
            DecompositionKind::Sum => format!("{a} + ({b})"),
            DecompositionKind::HalfSum => format!("1/2[{a} + ({b})]"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(s: &str) -> RootSystem {
        RootSystem::build(&s.parse().unwrap())
    }

    #[test]
    fn positive_root_counts() {
        assert_eq!(rs("A2").num_positive_roots(), 3);
        assert_eq!(rs("G2").num_positive_roots(), 6);
        assert_eq!(rs("F4").num_positive_roots(), 24);
        for ct in CartanType::simple_types_up_to(8) {
            let (f, n) = ct.factors[0];
            assert_eq!(RootSystem::build(&ct).num_positive_roots(), f.positive_root_count(n), "{ct}");
        }
        assert_eq!(rs("A1xA2").num_positive_roots(), 4);
    }

    #[test]
    fn cartan_shape() {
        for ct in CartanType::simple_types_up_to(8) {
            let r = RootSystem::build(&ct);
            for i in 0..r.rank() {
                assert_eq!(r.cartan[i][i], 2);
                for j in 0..r.rank() {
                    assert!([0, -1, -2, -3, 2].contains(&r.cartan[i][j]));
                }
            }
            for i in 0..r.rank() {
                assert_eq!(r.positive_roots[i], unit(r.rank(), i));
            }
        }
    }

    #[test]
    fn bourbaki_highest_roots() {
        assert_eq!(rs("E8").highest_root(0), vec![2, 3, 4, 6, 5, 4, 3, 2]);
        assert_eq!(rs("F4").highest_root(0), vec![2, 3, 4, 2]);
        assert_eq!(rs("G2").highest_root(0), vec![3, 2]);
        let e8 = rs("E8");
        assert_eq!(e8.root_to_weight(&e8.highest_root(0)), unit(8, 7));
        let f4 = rs("F4");
        assert_eq!(f4.root_to_weight(&f4.highest_root(0)), unit(4, 0));
    }

    #[test]
    fn pairing_examples() {
        let b2 = rs("B2");
        for i in 0..2 {
            for j in 0..2 {
                let p = b2.pairing(&unit(2, i), &unit(2, j)).unwrap();
                assert_eq!(p, i64::from(i == j));
            }
            assert_eq!(b2.pairing(&b2.rho, &unit(2, i)).unwrap(), 1);
        }
        // ω₂ = ½(α₁ + 2α₂) in B2.
        assert_eq!(b2.weight_to_root(&[0, 1]), vec![crate::linalg::qf(1, 2), q(1)]);
        assert!(b2.pairing(&[0, 1], &[0]).is_err());
    }

    #[test]
    fn duals() {
        assert_eq!(rs("A2").dual_highest_weight(&[1, 0]).unwrap(), vec![0, 1]);
        assert_eq!(rs("B2").dual_highest_weight(&[1, 0]).unwrap(), vec![1, 0]);
        assert_eq!(rs("E6").dual_highest_weight(&[1, 0, 0, 0, 0, 0]).unwrap(), vec![0, 0, 0, 0, 0, 1]);
        assert_eq!(rs("D5").dual_highest_weight(&[0, 0, 0, 1, 0]).unwrap(), vec![0, 0, 0, 0, 1]);
        assert_eq!(rs("G2").dual_highest_weight(&[0, 0]).unwrap(), vec![0, 0]);
        assert!(rs("A2").dual_highest_weight(&[-1, 0]).is_err());
    }

    #[test]
    fn dot_examples() {
        let a1 = rs("A1");
        for m in 0..6 {
            assert_eq!(a1.dot_action(&WeylElement::reflection(0), &[m]), vec![-m - 2]);
            match a1.to_dominant_dot(&[-m - 2]) {
                Straightening::Regular { length, dominant, .. } => {
                    assert_eq!((length, dominant), (1, vec![m]))
                }
                _ => panic!(),
            }
        }
        assert_eq!(a1.to_dominant_dot(&[-1]), Straightening::Singular);
        let a2 = rs("A2");
        // −α₁ = (−2, 1)
        assert_eq!(a2.dot_action(&WeylElement::reflection(0), &[0, 0]), vec![-2, 1]);
        assert_eq!(a2.dot_action(&WeylElement::identity(), &[3, -4]), vec![3, -4]);
    }

    #[test]
    fn decompositions() {
        let b3 = rs("B3");
        let d = b3.decompose_as_root_sums(&[0, 0, 1]);
        assert_eq!(d, vec![Decomposition { simple: 2, beta: vec![1, 2, 2], kind: DecompositionKind::HalfSum }]);
        assert!(rs("A2").decompose_as_root_sums(&[1, 0]).is_empty());
        for n in 2..7 {
            let mut lam = vec![0; n];
            lam[0] = 1;
            lam[n - 1] = 1;
            let d = RootSystem::build(&CartanType::simple(Family::A, n).unwrap()).decompose_as_root_sums(&lam);
            assert_eq!(d.len(), 2);
            assert!(d.iter().all(|x| x.kind == DecompositionKind::Sum));
        }
    }

    #[test]
    fn parse_errors() {
        assert!(parse_cartan_type("B1").is_err());
        assert!(parse_cartan_type("E9").is_err());
        assert!(parse_cartan_type("A1x").is_err());
        assert!(parse_cartan_type("").is_err());
        assert_eq!(parse_cartan_type("A1xC2").unwrap().to_string(), "A1xC2");
        assert_eq!(parse_cartan_type("C2").unwrap().normalized().to_string(), "B2");
        assert_eq!(parse_weight("1, 0,-2").unwrap(), vec![1, 0, -2]);
        assert!(parse_weight("1,,2").is_err());
    }
}
