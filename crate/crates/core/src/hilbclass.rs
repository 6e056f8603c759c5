//! Candidate weights and the tangent space to the invariant Hilbert scheme at
//! the cone of primitive vectors.
//!
//! The tangent space splits into the `U`-invariants of `V(λ)/𝔤·v_λ` in weights
//! `0` and `−λ`. Both are computed on explicit weight layers: a vector `v` of
//! weight `ν` counts when every `e_i v` lands in `(𝔤·v_λ)_{ν+α_i}`, which is
//! the line through `f_β v_λ` for the root `β = λ − ν − α_i` (or zero).

use std::sync::OnceLock;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::irrep::{IrrepError, IrrepModel, DEFAULT_HEIGHT_LIMIT};
use crate::linalg::{kernel, mat_mul, Mat, Q};
use crate::rootdata::{CartanType, Decomposition, DecompositionKind, Family, RootSystem, Weight};
use crate::symbolic::{eval_expr, Basis};
use num_traits::Zero;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HilbError {
    #[error(transparent)]
    Irrep(#[from] IrrepError),
    #[error("the highest weight must be nonzero")]
    ZeroWeight,
    #[error("weight {0:?} is not dominant")]
    NotDominant(Weight),
    #[error("the closed adjoint formula needs a simple type of rank at least 2, got {0}")]
    AdjointFormula(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Part {
    Zero,
    MinusLambda,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum HilbertScheme {
    Point,
    AffineLine,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CandidateCase {
    pub cartan_type: CartanType,
    pub lambda: Weight,
    pub decompositions: Vec<Decomposition>,
    pub paper_label: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TangentReport {
    pub dim_zero_part: usize,
    pub dim_minus_lambda_part: usize,
    pub total: usize,
    pub hilbert_scheme: HilbertScheme,
}

/// Selects a single type (`"type"`) or a family from a minimal rank on.
#[derive(Debug, Clone, Deserialize)]
pub struct TypeSelector {
    #[serde(rename = "type")]
    pub exact: Option<String>,
    pub family: Option<String>,
    #[serde(rename = "minRank")]
    pub min_rank: Option<usize>,
}

impl TypeSelector {
    pub fn matches(&self, ct: &CartanType) -> bool {
        if let Some(t) = &self.exact {
            return t.parse::<CartanType>().map_or(false, |x| x == *ct);
        }
        match (&self.family, ct.factors.as_slice()) {
            (Some(f), [(fam, n)]) => {
                f.chars().next().and_then(Family::from_letter) == Some(*fam) && *n >= self.min_rank.unwrap_or(1)
            }
            _ => false,
        }
    }
}

#[derive(Debug, Clone, Deserialize)]
pub struct DecompositionFixture {
    pub kind: String,
    pub simple: String,
    pub beta: String,
}

#[derive(Debug, Clone, Deserialize)]
pub struct CandidateFixture {
    pub label: String,
    #[serde(flatten)]
    pub selector: TypeSelector,
    pub lambda: String,
    pub decompositions: Vec<DecompositionFixture>,
}

#[derive(Debug, Clone, Deserialize)]
pub struct HilbertFixture {
    pub label: String,
    #[serde(flatten)]
    pub selector: TypeSelector,
    pub lambdas: Vec<String>,
    pub via: Option<String>,
}

pub fn candidate_fixtures() -> &'static [CandidateFixture] {
    static CELL: OnceLock<Vec<CandidateFixture>> = OnceLock::new();
    CELL.get_or_init(|| serde_json::from_str(include_str!("../data/candidates.json")).expect("candidate table parses"))
}

pub fn hilbert_fixtures() -> &'static [HilbertFixture] {
    static CELL: OnceLock<Vec<HilbertFixture>> = OnceLock::new();
    CELL.get_or_init(|| serde_json::from_str(include_str!("../data/hilbert_table.json")).expect("H table parses"))
}

fn eval_weight(expr: &str, rank: usize) -> Option<Weight> {
    match eval_expr(expr, rank) {
        Ok((Basis::Weight, w)) => Some(w),
        _ => None,
    }
}

impl CandidateFixture {
    pub fn lambda_at(&self, rank: usize) -> Option<Weight> {
        eval_weight(&self.lambda, rank)
    }

    /// The listed decompositions at a concrete rank.
    pub fn decompositions_at(&self, rank: usize) -> Option<Vec<Decomposition>> {
        self.decompositions
            .iter()
            .map(|d| {
                let (Basis::Root, a) = eval_expr(&d.simple, rank).ok()? else { return None };
                let (Basis::Root, beta) = eval_expr(&d.beta, rank).ok()? else { return None };
                let simple = a.iter().position(|&c| c == 1).filter(|_| a.iter().sum::<i64>() == 1)?;
                let kind = match d.kind.as_str() {
                    "sum" => DecompositionKind::Sum,
                    "halfsum" => DecompositionKind::HalfSum,
                    _ => return None,
                };
                Some(Decomposition { simple, beta, kind })
            })
            .collect()
    }
}

impl HilbertFixture {
    pub fn lambdas_at(&self, rank: usize) -> Vec<Weight> {
        self.lambdas.iter().filter_map(|l| eval_weight(l, rank)).collect()
    }
}

/// The `C` label of a candidate, if the table lists it for this type.
pub fn candidate_label(ct: &CartanType, lambda: &[i64]) -> Option<String> {
    candidate_fixtures()
        .iter()
        .find(|f| f.selector.matches(ct) && f.lambda_at(ct.rank()).as_deref() == Some(lambda))
        .map(|f| f.label.clone())
}

/// The `H` label of `(type, λ)` if the tangent space is expected to be a line.
pub fn hilbert_label(ct: &CartanType, lambda: &[i64]) -> Option<String> {
    hilbert_fixtures()
        .iter()
        .find(|f| f.selector.matches(ct) && f.lambdas.iter().any(|l| eval_weight(l, ct.rank()).as_deref() == Some(lambda)))
        .map(|f| match &f.via {
            Some(v) => format!("{} ({v})", f.label),
            None => f.label.clone(),
        })
}

/// The label without annotations, for set comparisons.
pub fn hilbert_label_short(ct: &CartanType, lambda: &[i64]) -> Option<String> {
    hilbert_label(ct, lambda).map(|l| l.split_whitespace().next().unwrap().to_string())
}

/// All dominant `λ`, nonzero on every factor, that are a sum or half-sum of a
/// simple root and a positive root. Sorted by weight coordinates.
pub fn enumerate_candidates(ct: &CartanType) -> Vec<CandidateCase> {
    let rs = RootSystem::build(ct);
    let n = rs.rank();
    let mut found: std::collections::BTreeSet<Weight> = Default::default();
    for i in 0..n {
        for beta in &rs.positive_roots {
            let mut s = beta.clone();
            s[i] += 1;
            let w = rs.root_to_weight(&s);
            if rs.is_dominant(&w) {
                found.insert(w.clone());
            }
            if w.iter().all(|c| c % 2 == 0) {
                let h: Weight = w.iter().map(|c| c / 2).collect();
                if rs.is_dominant(&h) {
                    found.insert(h);
                }
            }
        }
    }
    found
        .into_iter()
        .filter(|w| rs.factor_boundaries.iter().all(|r| w[r.clone()].iter().any(|&c| c != 0)))
        .map(|lambda| CandidateCase {
            cartan_type: ct.clone(),
            decompositions: rs.decompose_as_root_sums(&lambda),
            paper_label: candidate_label(ct, &lambda),
            lambda,
        })
        .collect()
}

/// Coordinates of `f_β v_λ` at weight `λ − β`, or `None` when `β` is not a
/// positive root or the vector vanishes.
fn orbit_tangent_vector(model: &IrrepModel, rs: &RootSystem, offset: &[i64]) -> Option<Vec<Q>> {
    if !rs.is_positive_root(offset) {
        return None;
    }
    model.root_vector_on_highest(rs, offset).filter(|v| v.iter().any(|x| !x.is_zero()))
}

/// Dimension of `[V(λ)/𝔤·v_λ]^U` in weight `0` or `−λ`.
pub fn tangent_component_dim(rs: &RootSystem, lambda: &[i64], part: Part) -> Result<usize, HilbError> {
    tangent_component_dim_limited(rs, lambda, part, DEFAULT_HEIGHT_LIMIT)
}

pub fn tangent_component_dim_limited(rs: &RootSystem, lambda: &[i64], part: Part, limit: i64) -> Result<usize, HilbError> {
    if !rs.is_dominant(lambda) {
        return Err(HilbError::NotDominant(lambda.to_vec()));
    }
    if lambda.iter().all(|&c| c == 0) {
        return Err(HilbError::ZeroWeight);
    }
    let nu: Weight = match part {
        Part::Zero => vec![0; lambda.len()],
        Part::MinusLambda => lambda.iter().map(|c| -c).collect(),
    };
    // −λ is a weight iff λ is self-dual; 0 is a weight iff λ is in the root lattice.
    let Some(nu_offset) = rs.weight_to_root_integral(&lambda.iter().zip(&nu).map(|(a, b)| a - b).collect::<Vec<_>>())
    else {
        return Ok(0);
    };
    if part == Part::MinusLambda && rs.dual_highest_weight(lambda).ok().as_deref() != Some(lambda) {
        return Ok(0);
    }
    let model = IrrepModel::realize(rs, lambda, &[nu.clone()], limit)?;
    let d = model.dim(&nu);
    if d == 0 {
        return Ok(0);
    }
    let mut rows: Mat<Q> = Vec::new();
    for i in 0..rs.rank() {
        if nu_offset[i] == 0 {
            continue;
        }
        let up_offset: Vec<i64> = nu_offset.iter().enumerate().map(|(j, &c)| if j == i { c - 1 } else { c }).collect();
        if up_offset.iter().all(|&c| c == 0) {
            continue;
        }
        let up: Weight = nu.iter().zip(&rs.cartan[i]).map(|(a, b)| a + b).collect();
        let du = model.dim(&up);
        if du == 0 {
            continue;
        }
        let e = model.raising_action(i, &nu)?;
        // Rows of `annihilator` cut out the allowed line (or zero) in the upper layer.
        let annihilator: Mat<Q> = match orbit_tangent_vector(&model, rs, &up_offset) {
            Some(v) => kernel(&vec![v], du),
            None => crate::linalg::identity(du),
        };
        rows.extend(mat_mul(&annihilator, &e, d));
    }
    let k = kernel(&rows, d).len();
    let orbit_part = usize::from(orbit_tangent_vector(&model, rs, &nu_offset).is_some());
    Ok(k - orbit_part)
}

/// `card(S ∩ E) − 1`: simple roots `α` with `θ − α` a root, minus one.
pub fn adjoint_tangent_dim(rs: &RootSystem) -> Result<usize, HilbError> {
    if !rs.cartan_type.is_simple() || rs.rank() < 2 {
        return Err(HilbError::AdjointFormula(rs.cartan_type.to_string()));
    }
    let theta = rs.highest_root(0);
    let count = (0..rs.rank())
        .filter(|&i| {
            let mut g = theta.clone();
            g[i] -= 1;
            rs.is_positive_root(&g)
        })
        .count();
    Ok(count - 1)
}

pub fn tangent_report(rs: &RootSystem, lambda: &[i64]) -> Result<TangentReport, HilbError> {
    let z = tangent_component_dim(rs, lambda, Part::Zero)?;
    let m = tangent_component_dim(rs, lambda, Part::MinusLambda)?;
    let total = z + m;
    Ok(TangentReport {
        dim_zero_part: z,
        dim_minus_lambda_part: m,
        total,
        hilbert_scheme: if total == 0 { HilbertScheme::Point } else { HilbertScheme::AffineLine },
    })
}

/// The types swept by the classifications: simple types up to `max_rank`, then `A1×A1`.
pub fn sweep_types(max_rank: usize) -> Vec<CartanType> {
    let mut types = CartanType::simple_types_up_to(max_rank);
    if max_rank >= 2 {
        types.push(CartanType::new(vec![(Family::A, 1), (Family::A, 1)]).unwrap());
    }
    types
}

pub fn classify(max_rank: usize) -> Result<Vec<(CandidateCase, TangentReport)>, HilbError> {
    let cases: Vec<CandidateCase> = sweep_types(max_rank).iter().flat_map(enumerate_candidates).collect();
    classify_cases(cases)
}

pub fn classify_cases(cases: Vec<CandidateCase>) -> Result<Vec<(CandidateCase, TangentReport)>, HilbError> {
    cases
        .into_par_iter()
        .map(|c| {
            let rs = RootSystem::build(&c.cartan_type);
            let r = tangent_report(&rs, &c.lambda)?;
            Ok((c, r))
        })
        .collect()
}

/// JSON row of the classification table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct HilbRow {
    #[serde(rename = "type")]
    pub cartan_type: String,
    pub lambda: Weight,
    pub decompositions: Vec<String>,
    pub dim0: usize,
    pub dim_minus_lambda: usize,
    pub total: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub hilb_label: Option<String>,
}

impl HilbRow {
    pub fn new(case: &CandidateCase, report: &TangentReport) -> Self {
        let n = case.lambda.len();
        HilbRow {
            cartan_type: case.cartan_type.to_string(),
            lambda: case.lambda.clone(),
            decompositions: case.decompositions.iter().map(|d| d.render(n)).collect(),
            dim0: report.dim_zero_part,
            dim_minus_lambda: report.dim_minus_lambda_part,
            total: report.total,
            hilb_label: if report.total > 0 { hilbert_label(&case.cartan_type, &case.lambda) } else { None },
        }
    }
}

pub fn parse_hilb_row(s: &str) -> Result<HilbRow, serde_json::Error> {
    serde_json::from_str(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ct(s: &str) -> CartanType {
        s.parse().unwrap()
    }

    fn lambdas(s: &str) -> Vec<Weight> {
        enumerate_candidates(&ct(s)).into_iter().map(|c| c.lambda).collect()
    }

    #[test]
    fn candidate_examples() {
        let mut a2 = lambdas("A2");
        a2.sort();
        assert_eq!(a2, vec![vec![0, 3], vec![1, 1], vec![3, 0]]);
        assert_eq!(lambdas("A1xA1"), vec![vec![1, 1], vec![2, 2]]);
        assert_eq!(lambdas("E6"), vec![vec![0, 1, 0, 0, 0, 0]]);
    }

    #[test]
    fn component_examples() {
        let a1 = RootSystem::build(&ct("A1"));
        assert_eq!(tangent_component_dim(&a1, &[2], Part::MinusLambda).unwrap(), 1);
        let e8 = RootSystem::build(&ct("E8"));
        assert_eq!(tangent_component_dim(&e8, &[0, 0, 0, 0, 0, 0, 0, 1], Part::Zero).unwrap(), 0);
        let d4 = RootSystem::build(&ct("D4"));
        assert_eq!(tangent_component_dim(&d4, &[2, 0, 0, 0], Part::Zero).unwrap(), 1);
        assert_eq!(tangent_component_dim(&a1, &[0], Part::Zero), Err(HilbError::ZeroWeight));
    }

    #[test]
    fn adjoint_formula_examples() {
        for n in 2..6 {
            let rs = RootSystem::build(&CartanType::simple(Family::A, n).unwrap());
            assert_eq!(adjoint_tangent_dim(&rs).unwrap(), 1);
        }
        assert_eq!(adjoint_tangent_dim(&RootSystem::build(&ct("F4"))).unwrap(), 0);
        assert!(adjoint_tangent_dim(&RootSystem::build(&ct("A1"))).is_err());
    }

    #[test]
    fn fixtures_parse() {
        assert_eq!(candidate_fixtures().len(), 34);
        for f in candidate_fixtures() {
            assert!(f.lambda_at(8).is_some() || f.selector.exact.is_some(), "{}", f.label);
        }
        assert_eq!(hilbert_label_short(&ct("D4"), &[0, 0, 2, 0]).as_deref(), Some("H6"));
        assert_eq!(hilbert_label_short(&ct("B5"), &[2, 0, 0, 0, 0]).as_deref(), Some("H4"));
        assert_eq!(hilbert_label(&ct("E8"), &[0, 0, 0, 0, 0, 0, 0, 1]), None);
    }
}
