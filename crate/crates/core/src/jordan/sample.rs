//! Seeded samplers: generic elements, and rank-one elements in a fibre of the trace.

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::hurwitz::Hurwitz;
use super::{cq, Cq, Element, HermitianLayout, JordanAlgebra, JordanError};
use crate::linalg::Q;

pub struct ElementSampler {
    rng: ChaCha8Rng,
}

impl ElementSampler {
    pub fn new(seed: u64) -> Self {
        ElementSampler { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    fn small(&mut self) -> Q {
        Q::new(self.rng.gen_range(-3i64..=3).into(), self.rng.gen_range(1i64..=2).into())
    }

    /// Coordinates with small rational real and imaginary parts.
    pub fn element(&mut self, a: &JordanAlgebra) -> Element {
        (0..a.dim()).map(|_| Cq::new(self.small(), self.small())).collect()
    }

    pub fn rational(&mut self) -> Q {
        Q::new(self.rng.gen_range(-9i64..=9).into(), self.rng.gen_range(1i64..=5).into())
    }

    fn nonzero_vector(&mut self, len: usize) -> Vec<Q> {
        loop {
            let v: Vec<Q> = (0..len).map(|_| self.small()).collect();
            if v.iter().any(|x| !x.is_zero()) {
                return v;
            }
        }
    }
}

fn hurwitz_mul(h: &Hurwitz, x: &[Cq], y: &[Cq]) -> Vec<Cq> {
    let mut out = vec![Cq::zero(); h.dim];
    for (u, xu) in x.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
        for (v, yv) in y.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            let (w, s) = h.basis_product(u, v);
            let p = xu.clone() * yv.clone();
            out[w] = if s > 0 { out[w].clone() + p } else { out[w].clone() - p };
        }
    }
    out
}

fn hurwitz_conj(x: &[Cq]) -> Vec<Cq> {
    x.iter().enumerate().map(|(u, v)| if u == 0 { v.clone() } else { -v.clone() }).collect()
}

/// Coordinates of `x x^†` for a column `x` whose entries lie in an associative subalgebra.
fn outer_product(n: usize, d: usize, x: &[Vec<Cq>]) -> Element {
    let h = Hurwitz::new(d);
    let layout = HermitianLayout { n, d };
    let mut out = vec![Cq::zero(); layout.dim()];
    for i in 0..n {
        let xi_conj = hurwitz_conj(&x[i]);
        out[i] = hurwitz_mul(&h, &x[i], &xi_conj)[0].clone();
        for j in i + 1..n {
            let e = hurwitz_mul(&h, &x[i], &hurwitz_conj(&x[j]));
            for (u, c) in e.into_iter().enumerate() {
                out[layout.off_index(i, j, u)] = c;
            }
        }
    }
    out
}

/// Dimension of the associative subalgebra entries are drawn from.
fn associative_part(d: usize) -> usize {
    d.min(4)
}

fn scale(x: &[Cq], s: &Cq) -> Element {
    x.iter().map(|v| v.clone() * s.clone()).collect()
}

/// Rational point of the unit sphere in `ℚ^len` by inverse stereographic projection.
fn unit_vector(s: &mut ElementSampler, len: usize) -> Vec<Q> {
    if len == 1 {
        return vec![Q::one()];
    }
    let y: Vec<Q> = (0..len - 1).map(|_| s.small()).collect();
    let n2: Q = y.iter().map(|v| v.clone() * v.clone()).fold(Q::zero(), |a, b| a + b);
    let den = n2.clone() + Q::one();
    let mut u: Vec<Q> = y.iter().map(|v| (v.clone() + v.clone()) / den.clone()).collect();
    u.push((n2 - Q::one()) / den);
    u
}

/// Up to `count` distinct rank-one elements of trace exactly `t`.
///
/// Matrix types use `(t/τ)·x x^†` with `τ = Σ N(x_k)`, or for `t = 0` a column
/// `x` pairing coordinates as `(u, i·u)` so that `τ = 0`. The first sample for
/// `t ≠ 0` is `t·E₁₁`. J1 needs the standard form on `W`.
pub fn trace_fiber_sample(a: &JordanAlgebra, t: &Cq, count: usize, seed: u64) -> Result<Vec<Element>, JordanError> {
    let mut s = ElementSampler::new(seed);
    let mut out: Vec<Element> = Vec::new();
    let i = Cq::new(Q::zero(), Q::one());
    let mut attempts = 0;
    while out.len() < count && attempts < 20 * count + 20 {
        attempts += 1;
        let cand = match a.matrix_shape() {
            Some((n, d)) => {
                let k = associative_part(d);
                let entry = |s: &mut ElementSampler| -> Vec<Cq> {
                    let mut e: Vec<Cq> = s.nonzero_vector(k).into_iter().map(cq).collect();
                    e.resize(d, Cq::zero());
                    e
                };
                if t.is_zero() {
                    let mut x = vec![vec![Cq::zero(); d]; n];
                    for p in 0..n / 2 {
                        let u = entry(&mut s);
                        x[2 * p + 1] = scale(&u, &i);
                        x[2 * p] = u;
                    }
                    outer_product(n, d, &x)
                } else if out.is_empty() {
                    let mut e = vec![Cq::zero(); a.dim()];
                    e[0] = t.clone();
                    e
                } else {
                    let x: Vec<Vec<Cq>> = (0..n).map(|_| entry(&mut s)).collect();
                    let m = outer_product(n, d, &x);
                    let tau: Cq = (0..n).fold(Cq::zero(), |acc, k| acc + m[k].clone());
                    scale(&m, &(t.clone() / tau))
                }
            }
            None => {
                let form = a.form().expect("spin factor keeps its form");
                let w = form.len();
                let standard = (0..w).all(|p| (0..w).all(|q| form[p][q] == if p == q { Q::one() } else { Q::zero() }));
                if !standard {
                    return Err(JordanError::UnsupportedForm);
                }
                if t.is_zero() {
                    if w < 2 {
                        return Ok(Vec::new());
                    }
                    let mut e = vec![Cq::zero(); a.dim()];
                    for p in 0..w / 2 {
                        let c = cq(s.small());
                        e[2 + 2 * p] = c.clone() * i.clone();
                        e[1 + 2 * p] = c;
                    }
                    e
                } else {
                    let half = t.clone() / cq(Q::from_integer(2.into()));
                    let u = unit_vector(&mut s, w);
                    let mut e = vec![half.clone()];
                    e.extend(u.into_iter().map(|c| half.clone() * cq(c)));
                    e
                }
            }
        };
        if super::is_rank_one(a, &cand) && a.trace(&cand) == *t && !out.contains(&cand) {
            out.push(cand);
        }
    }
    Ok(out)
}
