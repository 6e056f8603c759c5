//! Real Hurwitz algebras `ℝ, ℂ, ℍ, 𝕆` by Cayley–Dickson doubling, with rational coordinates.
//!
//! Doubling rule: `(a, b)(c, d) = (ac − d̄b, da + bc̄)`, conjugation `(a, b)‾ = (ā, −b)`.
//! Basis element `e_0` is the unit and every `e_u` with `u > 0` squares to `−1`.

use num_traits::Zero;

use crate::linalg::Q;

fn conj(x: &[Q]) -> Vec<Q> {
    x.iter().enumerate().map(|(i, v)| if i == 0 { v.clone() } else { -v.clone() }).collect()
}

fn add(x: &[Q], y: &[Q]) -> Vec<Q> {
    x.iter().zip(y).map(|(a, b)| a.clone() + b.clone()).collect()
}

fn sub(x: &[Q], y: &[Q]) -> Vec<Q> {
    x.iter().zip(y).map(|(a, b)| a.clone() - b.clone()).collect()
}

fn mul_rec(x: &[Q], y: &[Q]) -> Vec<Q> {
    let n = x.len();
    if n == 1 {
        return vec![x[0].clone() * y[0].clone()];
    }
    let h = n / 2;
    let (a, b) = x.split_at(h);
    let (c, d) = y.split_at(h);
    let first = sub(&mul_rec(a, c), &mul_rec(&conj(d), b));
    let second = add(&mul_rec(d, a), &mul_rec(b, &conj(c)));
    [first, second].concat()
}

/// A Hurwitz algebra of dimension 1, 2, 4 or 8 with its basis multiplication table.
#[derive(Debug, Clone)]
pub struct Hurwitz {
    pub dim: usize,
    /// `e_u e_v = sign · e_w` stored as `(w, sign)`.
    table: Vec<Vec<(usize, i8)>>,
}

impl Hurwitz {
    pub fn new(dim: usize) -> Self {
        assert!(matches!(dim, 1 | 2 | 4 | 8), "Hurwitz algebras have dimension 1, 2, 4 or 8");
        let unit = |u: usize| {
            let mut v = vec![Q::zero(); dim];
            v[u] = Q::from_integer(1.into());
            v
        };
        let table = (0..dim)
            .map(|u| {
                (0..dim)
                    .map(|v| {
                        let p = mul_rec(&unit(u), &unit(v));
                        let w = p.iter().position(|c| !c.is_zero()).unwrap();
                        let sign = if p[w] > Q::zero() { 1 } else { -1 };
                        (w, sign)
                    })
                    .collect()
            })
            .collect();
        Hurwitz { dim, table }
    }

    pub fn basis_product(&self, u: usize, v: usize) -> (usize, i8) {
        self.table[u][v]
    }

    /// Sign of `ē_u` relative to `e_u`.
    pub fn conj_sign(u: usize) -> i8 {
        if u == 0 {
            1
        } else {
            -1
        }
    }

    pub fn mul(&self, x: &[Q], y: &[Q]) -> Vec<Q> {
        let mut out = vec![Q::zero(); self.dim];
        for (u, a) in x.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (v, b) in y.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
                let (w, s) = self.table[u][v];
                let p = a.clone() * b.clone();
                if s > 0 {
                    out[w] += p;
                } else {
                    out[w] -= p;
                }
            }
        }
        out
    }

    pub fn conj(&self, x: &[Q]) -> Vec<Q> {
        conj(x)
    }

    pub fn norm(&self, x: &[Q]) -> Q {
        x.iter().map(|a| a.clone() * a.clone()).fold(Q::zero(), |s, v| s + v)
    }
}
