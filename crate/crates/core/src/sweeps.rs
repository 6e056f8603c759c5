//! Property sweeps shared by the test suites and the acceptance run.
//! Each returns the list of violations, empty on success.

use std::collections::{HashSet, VecDeque};

use num_traits::Zero;
use rayon::prelude::*;

use crate::bwb::{euler_characteristic_check, line_bundle_cohomology, CohomologyResult, ParabolicData};
use crate::irrep::{weyl_dimension, Freudenthal};
use crate::jordan::{cq, describe, is_rank_one, Cq, JordanAlgebra, JordanLabel};
use crate::linalg::{q, rank, Mat, Q};
use crate::rootdata::{unit, CartanType, RootSystem, Weight};

/// All integer vectors of length `n` with entries in `lo..=hi`.
pub fn box_weights(n: usize, lo: i64, hi: i64) -> Vec<Weight> {
    let w = (hi - lo + 1) as usize;
    (0..w.pow(n as u32))
        .map(|code| (0..n).map(|i| lo + ((code / w.pow(i as u32)) % w) as i64).collect())
        .collect()
}

pub fn orbit_size(r: &RootSystem, mu: &[i64]) -> u128 {
    let mut seen: HashSet<Weight> = HashSet::from([mu.to_vec()]);
    let mut queue = VecDeque::from([mu.to_vec()]);
    while let Some(v) = queue.pop_front() {
        for i in 0..r.rank() {
            let s = r.reflect_weight(i, &v);
            if seen.insert(s.clone()) {
                queue.push_back(s);
            }
        }
    }
    seen.len() as u128
}

/// `Σ_μ m(μ)` over all weights, as dominant multiplicities times orbit sizes.
/// Dominant weights of `V(λ)` are linked to `λ` by chains of positive roots
/// that stay dominant, which is how they are enumerated.
pub fn freudenthal_total(r: &RootSystem, lambda: &[i64]) -> u128 {
    let mut fr = Freudenthal::new(r, lambda).expect("dominant");
    let roots: Vec<Weight> = r.positive_roots.iter().map(|b| r.root_to_weight(b)).collect();
    let mut seen: HashSet<Weight> = HashSet::from([lambda.to_vec()]);
    let mut queue = VecDeque::from([lambda.to_vec()]);
    let mut total = 0u128;
    while let Some(mu) = queue.pop_front() {
        total += fr.multiplicity(&mu) as u128 * orbit_size(r, &mu);
        for b in &roots {
            let nu: Weight = mu.iter().zip(b).map(|(x, y)| x - y).collect();
            if r.is_dominant(&nu) && seen.insert(nu.clone()) {
                queue.push_back(nu);
            }
        }
    }
    total
}

/// Freudenthal total against the Weyl dimension formula, simple types up to
/// `max_rank`, dominant weights with coordinates `0..=max_coord`.
pub fn freudenthal_weyl_violations(max_rank: usize, max_coord: i64) -> (usize, Vec<String>) {
    let per_type: Vec<(usize, Vec<String>)> = CartanType::simple_types_up_to(max_rank)
        .into_par_iter()
        .map(|ct| {
            let r = RootSystem::build(&ct);
            let ws = box_weights(r.rank(), 0, max_coord);
            let bad = ws
                .iter()
                .filter(|l| freudenthal_total(&r, l) != weyl_dimension(&r, l).unwrap())
                .map(|l| format!("{ct} {l:?}"))
                .collect();
            (ws.len(), bad)
        })
        .collect();
    (per_type.iter().map(|p| p.0).sum(), per_type.into_iter().flat_map(|p| p.1).collect())
}

pub fn signed_cohomology(c: &CohomologyResult) -> i128 {
    match c {
        CohomologyResult::AllZero => 0,
        CohomologyResult::Concentrated { degree, dimension, .. } => {
            let d = *dimension as i128;
            if degree % 2 == 0 {
                d
            } else {
                -d
            }
        }
    }
}

/// Bott's answer against the Weyl-character Euler characteristic, on the full
/// flag variety and every maximal parabolic, for `|coordinates| ≤ bound`.
pub fn bwb_euler_violations(max_rank: usize, bound: i64) -> (usize, Vec<String>) {
    let per_type: Vec<(usize, Vec<String>)> = CartanType::simple_types_up_to(max_rank)
        .into_par_iter()
        .map(|ct| {
            let r = RootSystem::build(&ct);
            let n = r.rank();
            let mut parabolics = vec![ParabolicData::full_flag(&r)];
            parabolics.extend((0..n).map(|i| ParabolicData::from_weight(&r, &unit(n, i)).unwrap()));
            let mut count = 0;
            let mut bad = Vec::new();
            for mu in box_weights(n, -bound, bound) {
                for p in parabolics.iter().filter(|p| p.is_levi_dominant(&mu)) {
                    let c = line_bundle_cohomology(p, &mu).unwrap();
                    if signed_cohomology(&c) != euler_characteristic_check(p, &mu).unwrap() {
                        bad.push(format!("{ct} {mu:?} levi {:?}", p.levi_simples));
                    }
                    count += 1;
                }
            }
            (count, bad)
        })
        .collect();
    (per_type.iter().map(|p| p.0).sum(), per_type.into_iter().flat_map(|p| p.1).collect())
}

/// Jordan identity on `samples` seeded pairs and trace-form nondegeneracy for every panel algebra.
pub fn jordan_panel_violations(samples: usize, seed: u64) -> (usize, Vec<String>) {
    let rows: Vec<(JordanLabel, usize, bool)> = JordanLabel::panel()
        .into_par_iter()
        .map(|l| {
            let (d, v) = describe(l, samples, seed).expect("panel algebras build");
            (l, v, d.trace_form_nondegenerate)
        })
        .collect();
    let bad = rows
        .iter()
        .filter(|(_, v, nd)| *v > 0 || !nd)
        .map(|(l, v, nd)| format!("{l}: {v} identity violations, nondegenerate {nd}"))
        .collect();
    (rows.len(), bad)
}

fn symmetric3(code: usize) -> Mat<Q> {
    let mut e = [0i64; 6];
    let mut c = code;
    for v in e.iter_mut() {
        *v = (c % 3) as i64 - 1;
        c /= 3;
    }
    let [a, b, c2, d, f, g] = e;
    vec![vec![q(a), q(b), q(c2)], vec![q(b), q(d), q(f)], vec![q(c2), q(f), q(g)]]
}

/// `is_rank_one` against matrix rank on all symmetric 3×3 matrices with
/// entries in `{−1, 0, 1}`, embedded in J2(3), J3(3) and J4(3).
pub fn rank_one_matrix_violations() -> (usize, Vec<String>) {
    let algs: Vec<JordanAlgebra> =
        [JordanLabel::J2(3), JordanLabel::J3(3), JordanLabel::J4(3)].into_iter().map(|l| JordanAlgebra::build(l).unwrap()).collect();
    let mut bad = Vec::new();
    let mut count = 0;
    for code in 0..729 {
        let m = symmetric3(code);
        let expected = rank(&m, 3) == 1;
        for a in &algs {
            let mut x = vec![Cq::zero(); a.dim()];
            for i in 0..3 {
                for j in i..3 {
                    x[a.matrix_coordinate(i, j, 0).unwrap()] = cq(m[i][j].clone());
                }
            }
            if is_rank_one(a, &x) != expected {
                bad.push(format!("{} {m:?}", a.label));
            }
            count += 1;
        }
    }
    (count, bad)
}
