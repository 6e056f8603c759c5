//! Flatness of the perturbed minor family and first-order triviality of its tangent directions.

use std::collections::HashMap;

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::families::{perturbed_minors, segre_veronese_ideal, var_index, PerturbedRow};
use super::groebner::{is_groebner_basis, normal_form, same_leading_terms};
use super::hilbert::{hilbert_function, GradedVectorDims};
use super::poly::{monomials_of_degree, Mono, Poly};
use super::DetconeError;
use crate::linalg::{Q, SparseEchelon};

/// Seed used when none is given.
pub const DEFAULT_SEED: u64 = 0x5EED_C0DE_2024_0001;

/// Deterministic rational parameter matrices: numerators in `[−9, 9]`, denominators in `[1, 7]`.
pub struct ParameterSampler {
    rng: ChaCha8Rng,
}

impl ParameterSampler {
    pub fn new(seed: u64) -> Self {
        ParameterSampler { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    pub fn rational(&mut self) -> Q {
        let n: i64 = self.rng.gen_range(-9..=9);
        let d: i64 = self.rng.gen_range(1..=7);
        Q::new(n.into(), d.into())
    }

    /// An `(n+1)×(m−1)` matrix.
    pub fn matrix(&mut self, m: usize, n: usize) -> Vec<Vec<Q>> {
        (0..=n).map(|_| (0..m.saturating_sub(1)).map(|_| self.rational()).collect()).collect()
    }

    /// A matrix with at least one nonzero entry; `None` when the shape is empty.
    pub fn nonzero_matrix(&mut self, m: usize, n: usize) -> Option<Vec<Vec<Q>>> {
        if m < 2 {
            return None;
        }
        loop {
            let s = self.matrix(m, n);
            if s.iter().flatten().any(|x| !x.is_zero()) {
                return Some(s);
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct FlatnessReport {
    pub m: usize,
    pub n: usize,
    pub samples_checked: usize,
    /// The minors themselves pass the S-pair criterion for every sample.
    pub minors_are_groebner: bool,
    /// Reduced Gröbner bases have the same leading monomials as at `s = 0`.
    pub flat: bool,
    /// Hilbert function of the special fibre in degrees `0..=2m`.
    pub hilbert: GradedVectorDims,
}

/// Compares leading terms of the `z`-homogenized family at `s = 0` and at seeded samples.
pub fn flatness_check(m: usize, n: usize, sample_count: usize, seed: u64) -> Result<FlatnessReport, DetconeError> {
    flatness_check_rows(m, n, sample_count, seed, PerturbedRow::Bottom)
}

/// As [`flatness_check`], perturbing the chosen row.
pub fn flatness_check_rows(m: usize, n: usize, sample_count: usize, seed: u64, row: PerturbedRow) -> Result<FlatnessReport, DetconeError> {
    if m < 2 {
        return Err(DetconeError::Family(super::families::FamilyError::BadSize(m)));
    }
    let mut sampler = ParameterSampler::new(seed);
    let mut params = vec![vec![vec![Q::zero(); m - 1]; n + 1]];
    params.extend((0..sample_count).map(|_| sampler.matrix(m, n)));
    let results: Vec<_> = params
        .par_iter()
        .map(|s| {
            let ideal = perturbed_minors(m, n, s, true, row).expect("shape is fixed");
            let certified = is_groebner_basis(&ideal.generators, &ideal.order);
            (ideal.groebner(), certified, ideal.nvars())
        })
        .collect();
    let (base, _, nvars) = &results[0];
    let flat = results.iter().all(|(gb, _, _)| same_leading_terms(base, gb));
    let hilbert = hilbert_function(&base.leading_monomials(), *nvars, 0..=2 * m as i64);
    Ok(FlatnessReport {
        m,
        n,
        samples_checked: sample_count,
        minors_are_groebner: results.iter().all(|r| r.1),
        flat,
        hilbert,
    })
}

/// Whether the first-order deformation with tangent vector `s` is induced by
/// a vector field `Σ h_v ∂/∂x_v` with `h_v` of degree at most `max_field_degree`.
pub fn first_order_triviality_up_to(m: usize, n: usize, s: &[Vec<Q>], max_field_degree: u32) -> Result<bool, DetconeError> {
    let ideal = segre_veronese_ideal(m, n)?;
    if s.len() != n + 1 || s.iter().any(|r| r.len() != m - 1) {
        return Err(DetconeError::Family(super::families::FamilyError::Shape { rows: n + 1, cols: m - 1 }));
    }
    let nv = ideal.nvars();
    let gb = ideal.groebner();
    // Columns of the matrix: top variable, bottom variable, shift of the bottom entry.
    let mut cols: Vec<(usize, usize, Q)> = Vec::new();
    for i in 0..=n {
        for j in 0..m {
            let shift = if j + 1 < m { s[i][j].clone() } else { Q::zero() };
            cols.push((var_index(m, i, j), var_index(m, i, j + 1), shift));
        }
    }
    let x = |v: usize| Poly::var(nv, v);
    let mut gens = Vec::new();
    let mut phi = Vec::new();
    for a in 0..cols.len() {
        for b in a + 1..cols.len() {
            let (ta, ba, sa) = &cols[a];
            let (tb, bb, sb) = &cols[b];
            gens.push(x(*ta).mul(&x(*bb)).sub(&x(*tb).mul(&x(*ba))));
            // Coefficient of ε in the minor with bottom entries x − εs.
            phi.push(x(*tb).scale(sa).sub(&x(*ta).scale(sb)));
        }
    }
    let mut rows: HashMap<(usize, Mono), usize> = HashMap::new();
    let key = |g: usize, m: &Mono, rows: &mut HashMap<(usize, Mono), usize>| {
        let k = rows.len();
        *rows.entry((g, m.clone())).or_insert(k)
    };
    let leads = gb.leading_monomials();
    let mut span = SparseEchelon::new();
    for d in 0..=max_field_degree {
        for u in monomials_of_degree(nv, d).into_iter().filter(|u| !leads.iter().any(|l| super::poly::mono_divides(l, u))) {
            for v in 0..nv {
                let mut col = Vec::new();
                for (gi, g) in gens.iter().enumerate() {
                    let nf = normal_form(&g.derivative(v).mul_mono(&u, &Q::from_integer(1.into())), &gb);
                    for (mm, c) in nf.terms() {
                        col.push((key(gi, mm, &mut rows), c.clone()));
                    }
                }
                span.insert(col);
            }
        }
    }
    let mut target = Vec::new();
    for (gi, p) in phi.iter().enumerate() {
        for (mm, c) in normal_form(p, &gb).terms() {
            target.push((key(gi, mm, &mut rows), c.clone()));
        }
    }
    Ok(span.reduce(target).is_empty())
}

/// Field degrees 0, 1 and 2 are all tried and must agree.
pub fn first_order_triviality(m: usize, n: usize, s: &[Vec<Q>]) -> Result<bool, DetconeError> {
    let answers: Vec<bool> = (0..=2).map(|d| first_order_triviality_up_to(m, n, s, d)).collect::<Result<_, _>>()?;
    assert!(answers.iter().all(|&a| a == answers[0]), "triviality depends on the field degree: {answers:?}");
    Ok(answers[0])
}
