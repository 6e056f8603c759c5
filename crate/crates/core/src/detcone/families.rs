//! Ideals of 2×2 minors: the cones over `ℙ¹ × ℙⁿ` embedded by `O(m, 1)` and their perturbations.
//!
//! Variables `x_i_j` (`0 ≤ i ≤ n`, `0 ≤ j ≤ m`) sit at index `i(m+1) + j`,
//! followed by `z` when homogenized. The order is lex with `x_i_j < x_k_l`
//! when `(i, j) < (k, l)` and `z` smallest.

use num_traits::Zero;
use thiserror::Error;

use super::groebner::Ideal;
use super::poly::{MonomialOrder, Poly};
use crate::linalg::Q;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FamilyError {
    #[error("need m ≥ 1, got m = {0}")]
    BadSize(usize),
    #[error("parameter matrix must be {rows}×{cols}")]
    Shape { rows: usize, cols: usize },
}

pub fn var_index(m: usize, i: usize, j: usize) -> usize {
    i * (m + 1) + j
}

fn names(m: usize, n: usize, with_z: bool) -> Vec<String> {
    let mut v: Vec<String> = (0..=n).flat_map(|i| (0..=m).map(move |j| format!("x_{i}_{j}"))).collect();
    if with_z {
        v.push("z".to_string());
    }
    v
}

fn paper_order(m: usize, n: usize, with_z: bool) -> MonomialOrder {
    let nx = (m + 1) * (n + 1);
    let mut ranking: Vec<usize> = (0..nx).rev().collect();
    if with_z {
        ranking.push(nx);
    }
    MonomialOrder { ranking }
}

/// Which entry of the matrix a perturbation moves.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PerturbedRow {
    /// The versal family: entries `x_{i,j+1}` of the bottom row, `j + 1 < m`.
    Bottom,
    /// Top-row entries `x_{i,j}`, `0 ≤ j < m − 1`, shifted by `s[i][j]·x_{n,m}`.
    ///
    /// A control for the leading-term test: `x_{n,m}` is the most significant
    /// variable, so the leading monomials move. Shifting by `z` would not.
    Top,
}

/// 2×2 minors of the block matrix with shifts `s[i][j−1]` on `x_{i,j}`, `1 ≤ j ≤ m−1`.
///
/// With `homogenize_z` the shifted entries read `x − s·z`, otherwise `x − s`.
pub fn perturbed_minors(m: usize, n: usize, s: &[Vec<Q>], homogenize_z: bool, row: PerturbedRow) -> Result<Ideal, FamilyError> {
    if m == 0 {
        return Err(FamilyError::BadSize(m));
    }
    let (rows, cols) = (n + 1, m - 1);
    if s.len() != rows || s.iter().any(|r| r.len() != cols) {
        return Err(FamilyError::Shape { rows, cols });
    }
    let nx = (m + 1) * (n + 1);
    let nv = nx + usize::from(homogenize_z);
    // Entry x_{i,j} shifted by s[i][k].
    let entry = |i: usize, j: usize, k: Option<usize>| -> Poly {
        let x = Poly::var(nv, var_index(m, i, j));
        let Some(k) = k.filter(|&k| k < m - 1 && !s[i][k].is_zero()) else { return x };
        let shift = match (row, homogenize_z) {
            (PerturbedRow::Top, _) => Poly::var(nv, var_index(m, n, m)).scale(&s[i][k]),
            (PerturbedRow::Bottom, true) => Poly::var(nv, nx).scale(&s[i][k]),
            (PerturbedRow::Bottom, false) => Poly::constant(nv, s[i][k].clone()),
        };
        x.sub(&shift)
    };
    let mut top = Vec::new();
    let mut bottom = Vec::new();
    for i in 0..=n {
        for j in 0..m {
            top.push(entry(i, j, (row == PerturbedRow::Top).then_some(j)));
            bottom.push(entry(i, j + 1, (row == PerturbedRow::Bottom).then_some(j)));
        }
    }
    let mut gens = Vec::new();
    for a in 0..top.len() {
        for b in a + 1..top.len() {
            let g = top[a].mul(&bottom[b]).sub(&top[b].mul(&bottom[a]));
            if !g.is_zero() {
                gens.push(g);
            }
        }
    }
    Ok(Ideal { names: names(m, n, homogenize_z), order: paper_order(m, n, homogenize_z), generators: gens })
}

pub fn perturbed_family_ideal(m: usize, n: usize, s: &[Vec<Q>], homogenize_z: bool) -> Result<Ideal, FamilyError> {
    perturbed_minors(m, n, s, homogenize_z, PerturbedRow::Bottom)
}

/// The cone over `ℙ¹ × ℙⁿ` in the embedding by `O(m, 1)`.
pub fn segre_veronese_ideal(m: usize, n: usize) -> Result<Ideal, FamilyError> {
    if m == 0 {
        return Err(FamilyError::BadSize(m));
    }
    perturbed_family_ideal(m, n, &vec![vec![Q::zero(); m - 1]; n + 1], false)
}

/// The cone over the rational normal curve of degree `m`.
pub fn hankel_ideal(m: usize) -> Result<Ideal, FamilyError> {
    segre_veronese_ideal(m, 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::detcone::text::format_poly;
    use crate::linalg::q;

    #[test]
    fn small_cases() {
        let i = segre_veronese_ideal(1, 1).unwrap();
        assert_eq!(i.generators.len(), 1);
        assert_eq!(format_poly(&i.generators[0], &i.names), "x_0_0*x_1_1 - x_0_1*x_1_0");
        let h = hankel_ideal(2).unwrap();
        assert_eq!(h.generators.len(), 1);
        assert_eq!(format_poly(&h.generators[0], &h.names), "x_0_0*x_0_2 - x_0_1^2");
        assert_eq!(segre_veronese_ideal(2, 1).unwrap().generators.len(), 6);
        assert_eq!(hankel_ideal(5).unwrap().generators.len(), 10);
    }

    #[test]
    fn shifted_conic() {
        let f = perturbed_family_ideal(2, 0, &[vec![q(3)]], true).unwrap();
        assert_eq!(f.generators.len(), 1);
        assert_eq!(format_poly(&f.generators[0], &f.names), "x_0_0*x_0_2 - x_0_1^2 + 3*x_0_1*z");
        let zero = perturbed_family_ideal(3, 1, &[vec![q(0), q(0)], vec![q(0), q(0)]], false).unwrap();
        assert_eq!(zero.generators, segre_veronese_ideal(3, 1).unwrap().generators);
        assert!(perturbed_family_ideal(3, 1, &[vec![q(0)]], false).is_err());
    }
}
