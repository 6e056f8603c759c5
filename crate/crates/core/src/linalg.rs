//! Exact linear algebra over fields of characteristic zero.
//!
//! Dense routines work on `Vec<Vec<F>>` row-major matrices; `SparseEchelon`
//! handles the large, very sparse systems of the commutative-algebra module.

use std::collections::HashMap;
use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn qf(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

pub trait Field:
    Clone
    + Debug
    + PartialEq
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
}

impl<T> Field for T where
    T: Clone
        + Debug
        + PartialEq
        + Zero
        + One
        + Add<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
        + Div<Output = T>
        + Neg<Output = T>
{
}

pub type Mat<F> = Vec<Vec<F>>;

pub fn zeros<F: Field>(rows: usize, cols: usize) -> Mat<F> {
    vec![vec![F::zero(); cols]; rows]
}

pub fn identity<F: Field>(n: usize) -> Mat<F> {
    let mut m = zeros(n, n);
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = F::one();
    }
    m
}

pub fn transpose<F: Field>(a: &Mat<F>, cols: usize) -> Mat<F> {
    let mut t = zeros(cols, a.len());
    for (i, row) in a.iter().enumerate() {
        for (j, x) in row.iter().enumerate() {
            t[j][i] = x.clone();
        }
    }
    t
}

/// Product of an `r×k` and a `k×c` matrix; `c` is passed so empty shapes stay well defined.
pub fn mat_mul<F: Field>(a: &Mat<F>, b: &Mat<F>, c: usize) -> Mat<F> {
    let mut out: Mat<F> = zeros(a.len(), c);
    for (i, row) in a.iter().enumerate() {
        for (k, x) in row.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b[k].iter().enumerate() {
                if !y.is_zero() {
                    out[i][j] = out[i][j].clone() + x.clone() * y.clone();
                }
            }
        }
    }
    out
}

pub fn mat_vec<F: Field>(a: &Mat<F>, v: &[F]) -> Vec<F> {
    a.iter()
        .map(|row| {
            row.iter()
                .zip(v)
                .filter(|(x, y)| !x.is_zero() && !y.is_zero())
                .fold(F::zero(), |acc, (x, y)| acc + x.clone() * y.clone())
        })
        .collect()
}

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref<F: Field>(m: &mut Mat<F>, cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == m.len() {
            break;
        }
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = F::one() / m[r][c].clone();
        for x in m[r].iter_mut() {
            *x = x.clone() * inv.clone();
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    if !y.is_zero() {
                        *x = x.clone() - f.clone() * y.clone();
                    }
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank<F: Field>(m: &Mat<F>, cols: usize) -> usize {
    let mut a = m.clone();
    rref(&mut a, cols).len()
}

/// Basis of the right kernel `{x : m x = 0}`.
pub fn kernel<F: Field>(m: &Mat<F>, cols: usize) -> Vec<Vec<F>> {
    let mut a = m.clone();
    let pivots = rref(&mut a, cols);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![F::zero(); cols];
            v[f] = F::one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -a[r][f].clone();
            }
            v
        })
        .collect()
}

pub fn determinant<F: Field>(m: &Mat<F>) -> F {
    let n = m.len();
    let mut a = m.clone();
    let mut det = F::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !a[i][c].is_zero()) else {
            return F::zero();
        };
        if p != c {
            a.swap(p, c);
            det = -det;
        }
        let piv = a[c][c].clone();
        det = det * piv.clone();
        for i in c + 1..n {
            if a[i][c].is_zero() {
                continue;
            }
            let f = a[i][c].clone() / piv.clone();
            for j in c..n {
                let t = a[c][j].clone();
                a[i][j] = a[i][j].clone() - f.clone() * t;
            }
        }
    }
    det
}

pub fn inverse<F: Field>(m: &Mat<F>) -> Option<Mat<F>> {
    let n = m.len();
    let mut aug: Mat<F> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { F::one() } else { F::zero() }));
            r
        })
        .collect();
    let pivots = rref(&mut aug, 2 * n);
    if pivots.len() < n || (n > 0 && pivots[n - 1] >= n) {
        return None;
    }
    Some(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Solves `m x = b`, returning one solution if the system is consistent.
pub fn solve<F: Field>(m: &Mat<F>, b: &[F], cols: usize) -> Option<Vec<F>> {
    let mut aug: Mat<F> = m
        .iter()
        .zip(b)
        .map(|(row, x)| {
            let mut r = row.clone();
            r.push(x.clone());
            r
        })
        .collect();
    let pivots = rref(&mut aug, cols + 1);
    if pivots.last() == Some(&cols) {
        return None;
    }
    let mut x = vec![F::zero(); cols];
    for (r, &p) in pivots.iter().enumerate() {
        x[p] = aug[r][cols].clone();
    }
    Some(x)
}

/// Incremental row echelon form over sparse rows with rational entries.
///
/// Every stored row has a leading entry 1 in its pivot column.
#[derive(Default, Clone)]
pub struct SparseEchelon {
    pivots: HashMap<usize, Vec<(usize, Q)>>,
}

impl SparseEchelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Reduces `row` against the stored pivots; returns the nonzero remainder if any.
    pub fn reduce(&self, row: Vec<(usize, Q)>) -> Vec<(usize, Q)> {
        let mut row = normalize_sparse(row);
        // The smallest pivot column present strictly increases, so this terminates.
        loop {
            let Some(pos) = row.iter().position(|(c, _)| self.pivots.contains_key(c)) else {
                break;
            };
            let (c, f) = row[pos].clone();
            let p = &self.pivots[&c];
            row = axpy_sparse(&row, &(-f), p);
        }
        row
    }

    /// Inserts a row; returns true if it increased the rank.
    pub fn insert(&mut self, row: Vec<(usize, Q)>) -> bool {
        let r = self.reduce(row);
        if r.is_empty() {
            return false;
        }
        let (c, lead) = r[0].clone();
        let inv = Q::one() / lead;
        let r: Vec<(usize, Q)> = r.into_iter().map(|(j, x)| (j, x * inv.clone())).collect();
        self.pivots.insert(c, r);
        true
    }
}

fn normalize_sparse(mut row: Vec<(usize, Q)>) -> Vec<(usize, Q)> {
    row.sort_by_key(|(c, _)| *c);
    let mut out: Vec<(usize, Q)> = Vec::with_capacity(row.len());
    for (c, x) in row {
        match out.last_mut() {
            Some((lc, lx)) if *lc == c => *lx = lx.clone() + x,
            _ => out.push((c, x)),
        }
    }
    out.retain(|(_, x)| !x.is_zero());
    out
}

/// `a + f·b` for sorted sparse rows.
fn axpy_sparse(a: &[(usize, Q)], f: &Q, b: &[(usize, Q)]) -> Vec<(usize, Q)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i].clone());
            i += 1;
        } else if i == a.len() || b[j].0 < a[i].0 {
            out.push((b[j].0, f.clone() * b[j].1.clone()));
            j += 1;
        } else {
            let x = a[i].1.clone() + f.clone() * b[j].1.clone();
            if !x.is_zero() {
                out.push((a[i].0, x));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> Mat<Q> {
        rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect()
    }

    #[test]
    fn rank_and_kernel() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(rank(&a, 3), 2);
        let k = kernel(&a, 3);
        assert_eq!(k.len(), 1);
        assert!(mat_vec(&a, &k[0]).iter().all(|x| x.is_zero()));
    }

    #[test]
    fn determinant_and_inverse() {
        let a = m(&[&[2, 1], &[7, 4]]);
        assert_eq!(determinant(&a), q(1));
        let inv = inverse(&a).unwrap();
        assert_eq!(mat_mul(&a, &inv, 2), identity(2));
        assert!(inverse(&m(&[&[1, 2], &[2, 4]])).is_none());
    }

    #[test]
    fn solve_consistency() {
        let a = m(&[&[1, 1], &[1, 1]]);
        assert!(solve(&a, &[q(1), q(2)], 2).is_none());
        assert_eq!(solve(&a, &[q(3), q(3)], 2).unwrap(), vec![q(3), q(0)]);
    }

    #[test]
    fn sparse_rank_matches_dense() {
        let rows = m(&[&[1, 2, 0, 0], &[0, 1, 1, 0], &[1, 3, 1, 0], &[0, 0, 0, 5]]);
        let mut e = SparseEchelon::new();
        for r in &rows {
            let sparse = r.iter().cloned().enumerate().filter(|(_, x)| !x.is_zero()).collect();
            e.insert(sparse);
        }
        assert_eq!(e.rank(), rank(&rows, 4));
    }
}
