//! Infinitesimal deformations `T¹` of the cone of primitive vectors, as a `G`-module.
//!
//! The invariant part is the Hilbert-scheme tangent space. Non-invariant
//! pieces come from Borel–Weil–Bott on the twisted tangent bundles of `G/P`,
//! graded by the twist `d < 0`, and from Künneth on product types.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bwb::{line_bundle_cohomology, twisted_tangent_h0_candidates, twisted_tangent_h1_candidates, CohomologyResult, ParabolicData};
use crate::hilbclass::{enumerate_candidates, hilbert_label, tangent_report, HilbError};
use crate::irrep::weyl_dimension;
use crate::linalg::Q;
use crate::rootdata::{CartanType, Family, RootSystem, RootVec, Weight};
use num_traits::{ToPrimitive, Zero};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum CaseTag {
    R1,
    R2,
    R3,
    Rigid,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum Provenance {
    /// Exact computation or closed formula.
    Proven,
    /// Upper bound from subquotient highest weights, exact for the classified cases.
    Candidate,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct T1Piece {
    pub weight: Weight,
    pub multiplicity: usize,
    pub dim: u128,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct T1Report {
    pub case_tag: CaseTag,
    /// A second tag when two families of the classification overlap.
    pub also: Option<CaseTag>,
    pub pieces: Vec<T1Piece>,
    pub total_dim: u128,
    pub provenance: Provenance,
}

impl T1Report {
    fn from_pieces(rs: &RootSystem, raw: Vec<Weight>, tag: CaseTag, provenance: Provenance) -> Self {
        let mut pieces: Vec<T1Piece> = Vec::new();
        for w in raw {
            match pieces.iter_mut().find(|p| p.weight == w) {
                Some(p) => p.multiplicity += 1,
                None => {
                    let dim = weyl_dimension(rs, &w).expect("pieces are dominant");
                    pieces.push(T1Piece { weight: w, multiplicity: 1, dim });
                }
            }
        }
        let total_dim = pieces.iter().map(|p| p.dim * p.multiplicity as u128).sum();
        let case_tag = if pieces.is_empty() { CaseTag::Rigid } else { tag };
        T1Report { case_tag, also: None, pieces, total_dim, provenance }
    }

    /// Multiplicity of the trivial module.
    pub fn invariant_part(&self) -> usize {
        self.pieces.iter().filter(|p| p.weight.iter().all(|&c| c == 0)).map(|p| p.multiplicity).sum()
    }
}

/// `(N, α, β, λ = Nα + β)` with `N ≥ n_min`, `α` simple, `β` positive, `λ` dominant.
///
/// `N` is searched up to 6; for simple types other than A1 the pairing with a
/// neighbour of `α` already forces `N ≤ 3`.
pub fn dominant_sum_solutions(rs: &RootSystem, n_min: i64) -> Vec<(i64, usize, RootVec, Weight)> {
    const N_MAX: i64 = 6;
    let mut out = Vec::new();
    for n in n_min..=N_MAX {
        for i in 0..rs.rank() {
            for beta in &rs.positive_roots {
                let mut s = beta.clone();
                s[i] += n;
                let w = rs.root_to_weight(&s);
                if rs.is_dominant(&w) {
                    out.push((n, i, beta.clone(), w));
                }
            }
        }
    }
    out
}

/// Positive long roots `γ` with `⟨α, γ∨⟩ = −1`.
pub fn long_root_pairing_witnesses(rs: &RootSystem, simple: usize) -> Vec<RootVec> {
    let aw = rs.root_to_weight(&rs.simple_root(simple));
    rs.positive_roots
        .iter()
        .filter(|g| rs.is_long(g) && rs.pairing(&aw, g).unwrap() == -1)
        .cloned()
        .collect()
}

/// Twists swept for `λ`: `d ∈ [−⌈ht(λ*)⌉ − 2, −1]`.
pub fn twist_range(rs: &RootSystem, lambda: &[i64]) -> std::ops::RangeInclusive<i64> {
    let dual = rs.dual_highest_weight(lambda).expect("dominant");
    let h: Q = rs.weight_to_root(&dual).into_iter().fold(Q::zero(), |a, b| a + b);
    let h = h.ceil().to_integer().to_i64().unwrap();
    (-h - 2)..=-1
}

fn a1_pieces(m: i64) -> Vec<Weight> {
    [m - 2, m - 4].into_iter().filter(|&k| k >= 0).map(|k| vec![k]).collect()
}

/// `T¹` for a simple type.
pub fn simple_t1(rs: &RootSystem, lambda: &[i64]) -> Result<T1Report, HilbError> {
    let ct = &rs.cartan_type;
    assert!(ct.is_simple(), "simple_t1 needs a simple type");
    if !rs.is_dominant(lambda) {
        return Err(HilbError::NotDominant(lambda.to_vec()));
    }
    if lambda.iter().all(|&c| c == 0) {
        return Err(HilbError::ZeroWeight);
    }
    if ct.factors[0] == (Family::A, 1) {
        let m = lambda[0];
        let mut r = T1Report::from_pieces(rs, a1_pieces(m), CaseTag::R2, Provenance::Proven);
        if m == 4 {
            r.also = Some(CaseTag::R1);
        }
        return Ok(r);
    }
    // Only candidates can carry a tangent vector; others are skipped without computation.
    let is_candidate = enumerate_candidates(ct).iter().any(|c| c.lambda == lambda);
    let invariant = if is_candidate { tangent_report(rs, lambda)?.total } else { 0 };
    let mut raw: Vec<Weight> = vec![vec![0; lambda.len()]; invariant];
    let p = ParabolicData::from_weight(rs, lambda).expect("dominant");
    let mut provenance = Provenance::Proven;
    for d in twist_range(rs, lambda) {
        for c in twisted_tangent_h1_candidates(&p, lambda, d) {
            if c.mu.iter().any(|&x| x != 0) {
                raw.push(c.mu);
                provenance = Provenance::Candidate;
            }
        }
    }
    Ok(T1Report::from_pieces(rs, raw, CaseTag::R1, provenance))
}

fn factor_weights(rs: &RootSystem, lambda: &[i64]) -> Vec<Weight> {
    rs.factor_boundaries.iter().map(|r| lambda[r.clone()].to_vec()).collect()
}

/// `H¹(X, L_{dλ})` on one factor: the highest weight if nonzero.
fn line_h1(rs: &RootSystem, lambda: &[i64], d: i64) -> Option<Weight> {
    let p = ParabolicData::from_weight(rs, lambda).ok()?.opposite();
    let dual = rs.dual_highest_weight(lambda).ok()?;
    let nu: Weight = dual.iter().map(|c| d * c).collect();
    match line_bundle_cohomology(&p, &nu).ok()? {
        CohomologyResult::Concentrated { degree: 1, highest_weight, .. } => Some(highest_weight),
        _ => None,
    }
}

/// Clebsch–Gordan for `SL(2)`: `V(1) ⊗ V(b)`.
fn times_standard(b: i64) -> Vec<i64> {
    if b == 0 {
        vec![1]
    } else {
        vec![b + 1, b - 1]
    }
}

/// `T¹` for `A1×A1`, through the resolution by `𝔤/(𝔥×𝔥)` and the kernel of `h_d`.
fn a1_a1_t1(rs: &RootSystem, m: i64, n: i64) -> Vec<Weight> {
    let flag = ParabolicData::full_flag(rs);
    let mut raw = Vec::new();
    for d in -(m.max(n) + 2)..=-1 {
        // g/(h×h)[md, nd] ≅ V(0,1)[md, nd+1] ⊕ V(1,0)[md+1, nd].
        for (shift, standard_on_second) in [([m * d, n * d + 1], true), ([m * d + 1, n * d], false)] {
            if let Ok(CohomologyResult::Concentrated { degree: 1, highest_weight: h, .. }) = line_bundle_cohomology(&flag, &shift) {
                if standard_on_second {
                    raw.extend(times_standard(h[1]).into_iter().map(|b| vec![h[0], b]));
                } else {
                    raw.extend(times_standard(h[0]).into_iter().map(|a| vec![a, h[1]]));
                }
            }
        }
        if m * d == -2 && n * d == -2 {
            raw.push(vec![0, 0]);
        }
    }
    raw
}

/// `T¹` for a product type.
pub fn product_t1(rs: &RootSystem, lambda: &[i64]) -> Result<T1Report, HilbError> {
    let ct = &rs.cartan_type;
    assert!(!ct.is_simple(), "product_t1 needs at least two factors");
    if !rs.is_dominant(lambda) {
        return Err(HilbError::NotDominant(lambda.to_vec()));
    }
    let parts = factor_weights(rs, lambda);
    if parts.iter().any(|p| p.iter().all(|&c| c == 0)) {
        return Err(HilbError::ZeroWeight);
    }
    if ct.factors.len() > 2 {
        // Every Künneth term needs two line-bundle factors in degree ≥ 1.
        return Ok(T1Report::from_pieces(rs, Vec::new(), CaseTag::Rigid, Provenance::Proven));
    }
    if ct.factors == [(Family::A, 1), (Family::A, 1)] {
        let raw = a1_a1_t1(rs, lambda[0], lambda[1]);
        let tag = if raw.iter().all(|w| w.iter().all(|&c| c == 0)) { CaseTag::R1 } else { CaseTag::R3 };
        return Ok(T1Report::from_pieces(rs, raw, tag, Provenance::Proven));
    }
    let factors: Vec<RootSystem> = ct.factors.iter().map(|&(f, n)| RootSystem::build(&CartanType::simple(f, n).unwrap())).collect();
    let mut raw: Vec<Weight> = Vec::new();
    for d in twist_range(rs, lambda) {
        for (j, k) in [(0usize, 1usize), (1, 0)] {
            let Some(h1) = line_h1(&factors[j], &parts[j], d) else { continue };
            let p = ParabolicData::from_weight(&factors[k], &parts[k]).expect("dominant");
            for (mu, _) in twisted_tangent_h0_candidates(&p, &parts[k], d) {
                let (a, b) = if j == 0 { (&h1, &mu) } else { (&mu, &h1) };
                raw.push(a.iter().chain(b.iter()).copied().collect());
            }
        }
    }
    Ok(T1Report::from_pieces(rs, raw, CaseTag::R3, Provenance::Candidate))
}

pub fn t1(rs: &RootSystem, lambda: &[i64]) -> Result<T1Report, HilbError> {
    if rs.cartan_type.is_simple() {
        simple_t1(rs, lambda)
    } else {
        product_t1(rs, lambda)
    }
}

/// The classification as stated, independent of any cohomology computation.
pub fn theorem_t1(ct: &CartanType, lambda: &[i64]) -> (CaseTag, Vec<Weight>) {
    let rs = RootSystem::build(ct);
    if ct.factors == [(Family::A, 1)] {
        let pieces = a1_pieces(lambda[0]);
        return (if pieces.is_empty() { CaseTag::Rigid } else { CaseTag::R2 }, pieces);
    }
    if ct.is_simple() {
        return match hilbert_label(ct, lambda) {
            Some(_) => (CaseTag::R1, vec![vec![0; lambda.len()]]),
            None => (CaseTag::Rigid, vec![]),
        };
    }
    let mut pieces = Vec::new();
    if hilbert_label(ct, lambda).is_some() {
        pieces.push(vec![0; lambda.len()]);
    }
    if ct.factors.len() == 2 {
        let parts = factor_weights(&rs, lambda);
        for (sl2, other) in [(0usize, 1usize), (1, 0)] {
            if ct.factors[sl2] != (Family::A, 1) {
                continue;
            }
            let (fam, n) = ct.factors[other];
            let w = &parts[other];
            let unit = |i: usize| (0..n).map(|k| i64::from(k == i)).collect::<Vec<_>>();
            let fits = match fam {
                Family::A => *w == unit(0) || *w == unit(n - 1),
                Family::C => *w == unit(0),
                _ => false,
            };
            let m = parts[sl2][0];
            if fits && m >= 2 {
                let first = vec![m - 2];
                let (a, b) = if sl2 == 0 { (&first, w) } else { (w, &first) };
                pieces.push(a.iter().chain(b.iter()).copied().collect());
            }
        }
    }
    let tag = if pieces.is_empty() {
        CaseTag::Rigid
    } else if pieces.iter().all(|w| w.iter().all(|&c| c == 0)) {
        CaseTag::R1
    } else {
        CaseTag::R3
    };
    (tag, pieces)
}

/// Whether a report has the tag and the pieces the classification predicts.
pub fn matches_theorem(ct: &CartanType, lambda: &[i64], report: &T1Report) -> bool {
    let (tag, mut want) = theorem_t1(ct, lambda);
    let mut got: Vec<Weight> =
        report.pieces.iter().flat_map(|p| std::iter::repeat(p.weight.clone()).take(p.multiplicity)).collect();
    want.sort();
    got.sort();
    tag == report.case_tag && want == got
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct T1Case {
    pub cartan_type: CartanType,
    pub lambda: Weight,
}

/// The swept cases: candidates of every simple type, `A1` up to `m = 12`, and
/// `A1×A_n`, `A1×C_n` with `ω₁` or `ω_n` on the second factor and `m ≤ 8`.
pub fn t1_sweep_cases(max_rank: usize) -> Vec<T1Case> {
    let mut out = Vec::new();
    for ct in CartanType::simple_types_up_to(max_rank) {
        if ct.factors[0] == (Family::A, 1) {
            out.extend((1..=12).map(|m| T1Case { cartan_type: ct.clone(), lambda: vec![m] }));
        } else {
            out.extend(enumerate_candidates(&ct).into_iter().map(|c| T1Case { cartan_type: ct.clone(), lambda: c.lambda }));
        }
    }
    let a1a1 = CartanType::new(vec![(Family::A, 1), (Family::A, 1)]).unwrap();
    out.extend(enumerate_candidates(&a1a1).into_iter().map(|c| T1Case { cartan_type: a1a1.clone(), lambda: c.lambda }));
    let max_second = 5.min(max_rank.saturating_sub(1));
    for (fam, lo) in [(Family::A, 1), (Family::C, 2)] {
        for n in lo..=max_second {
            let ct = CartanType::new(vec![(Family::A, 1), (fam, n)]).unwrap();
            let mut seconds = vec![0usize];
            if n > 1 {
                seconds.push(n - 1);
            }
            for s in seconds {
                for m in 1..=8 {
                    let mut lambda = vec![m];
                    lambda.extend((0..n).map(|k| i64::from(k == s)));
                    let case = T1Case { cartan_type: ct.clone(), lambda };
                    if !out.contains(&case) {
                        out.push(case);
                    }
                }
            }
        }
    }
    out
}

pub fn classify_t1(max_rank: usize) -> Result<Vec<(T1Case, T1Report)>, HilbError> {
    t1_sweep_cases(max_rank)
        .into_par_iter()
        .map(|c| {
            let rs = RootSystem::build(&c.cartan_type);
            let r = t1(&rs, &c.lambda)?;
            Ok((c, r))
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PieceRow {
    pub weight: Weight,
    pub dim: u128,
}

/// JSON row of the `T¹` table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct T1Row {
    #[serde(rename = "type")]
    pub cartan_type: String,
    pub lambda: Weight,
    pub tag: CaseTag,
    pub pieces: Vec<PieceRow>,
    pub total: u128,
    pub matches_theorem: bool,
}

impl T1Row {
    pub fn new(case: &T1Case, report: &T1Report) -> Self {
        T1Row {
            cartan_type: case.cartan_type.to_string(),
            lambda: case.lambda.clone(),
            tag: report.case_tag,
            pieces: report
                .pieces
                .iter()
                .flat_map(|p| std::iter::repeat(PieceRow { weight: p.weight.clone(), dim: p.dim }).take(p.multiplicity))
                .collect(),
            total: report.total_dim,
            matches_theorem: matches_theorem(&case.cartan_type, &case.lambda, report),
        }
    }
}

pub fn parse_t1_row(s: &str) -> Result<T1Row, serde_json::Error> {
    serde_json::from_str(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(s: &str) -> RootSystem {
        RootSystem::build(&s.parse::<CartanType>().unwrap())
    }

    #[test]
    fn dominant_sums() {
        let a2 = rs("A2");
        let mut got: Vec<Weight> = dominant_sum_solutions(&a2, 2).into_iter().map(|s| s.3).collect();
        got.sort();
        assert_eq!(got, vec![vec![0, 3], vec![3, 0]]);
        let g2 = rs("G2");
        // 2α₁ + α₂ = ω₁.
        let got: Vec<(i64, usize, RootVec, Weight)> = dominant_sum_solutions(&g2, 2);
        assert_eq!(got, vec![(2, 0, vec![0, 1], vec![1, 0])]);
        assert!(dominant_sum_solutions(&rs("D4"), 2).is_empty());
    }

    #[test]
    fn long_root_witnesses() {
        let b2 = rs("B2");
        assert!(long_root_pairing_witnesses(&b2, 0).is_empty());
        assert_eq!(long_root_pairing_witnesses(&b2, 1), vec![vec![1, 0]]);
        let a3 = rs("A3");
        for i in 0..3 {
            assert!(long_root_pairing_witnesses(&a3, i).len() >= 2);
        }
    }

    #[test]
    fn simple_examples() {
        let r = simple_t1(&rs("A1"), &[5]).unwrap();
        assert_eq!(r.total_dim, 6);
        assert_eq!(r.case_tag, CaseTag::R2);
        let r = simple_t1(&rs("A1"), &[2]).unwrap();
        assert_eq!((r.total_dim, r.invariant_part()), (1, 1));
        let r = simple_t1(&rs("A1"), &[4]).unwrap();
        assert_eq!((r.case_tag, r.also), (CaseTag::R2, Some(CaseTag::R1)));
        let r = simple_t1(&rs("A2"), &[1, 1]).unwrap();
        assert_eq!((r.case_tag, r.total_dim), (CaseTag::R1, 1));
        assert_eq!(simple_t1(&rs("E6"), &[0, 1, 0, 0, 0, 0]).unwrap().case_tag, CaseTag::Rigid);
        assert_eq!(simple_t1(&rs("B3"), &[0, 0, 1]).unwrap().case_tag, CaseTag::R1);
    }

    #[test]
    fn product_examples() {
        let r = product_t1(&rs("A1xA3"), &[3, 1, 0, 0]).unwrap();
        assert_eq!(r.pieces.iter().map(|p| p.weight.clone()).collect::<Vec<_>>(), vec![vec![1, 1, 0, 0]]);
        let r = product_t1(&rs("A1xA1"), &[1, 1]).unwrap();
        assert_eq!((r.total_dim, r.invariant_part()), (1, 1));
        assert_eq!(product_t1(&rs("A2xA2"), &[1, 0, 1, 0]).unwrap().case_tag, CaseTag::Rigid);
        let r = product_t1(&rs("A1xC2"), &[3, 1, 0]).unwrap();
        assert_eq!((r.case_tag, r.total_dim), (CaseTag::R3, 8));
        assert!(product_t1(&rs("A1xA2"), &[0, 1, 0]).is_err());
    }
}
