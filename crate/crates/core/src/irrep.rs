//! Weight multiplicities and explicit weight spaces of simple modules `V(λ)`.
//!
//! A layer `V(λ)_μ` is realized inside `V(λ)` itself: it is spanned by
//! `f_i·b` for `b` running over bases of the layers `V(λ)_{μ+α_i}`, and the
//! contravariant form on these spanning vectors is computed from the raising
//! operators of the layers above. The form is nondegenerate on `V(λ)`, so the
//! pivot columns of the Gram matrix select a basis and the Verma radical is
//! never materialized.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::linalg::{inverse, kernel, mat_mul, q, rref, transpose, zeros, Mat, Q};
use crate::rootdata::{height, RootSystem, Weight};

pub const DEFAULT_HEIGHT_LIMIT: i64 = 64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum IrrepError {
    #[error("weight {0:?} is not dominant")]
    NotDominant(Weight),
    #[error("target {0:?} is not below the highest weight")]
    NotBelow(Weight),
    #[error("weight {weight:?} lies {depth} lowering steps below the highest weight (limit {limit})")]
    HeightLimit { weight: Weight, depth: i64, limit: i64 },
    #[error("layer {0:?} is not realized")]
    Unrealized(Weight),
    #[error("realized dimension {realized} at {weight:?} differs from multiplicity {expected}")]
    Inconsistent { weight: Weight, realized: usize, expected: u64 },
    #[error("dimension does not fit in 128 bits")]
    Overflow,
}

/// Weyl's dimension formula `∏ (λ+ρ, α)/(ρ, α)` over positive roots.
pub fn weyl_dimension(rs: &RootSystem, lambda: &[i64]) -> Result<u128, IrrepError> {
    if !rs.is_dominant(lambda) {
        return Err(IrrepError::NotDominant(lambda.to_vec()));
    }
    Ok(signed_weyl_product(rs, lambda).to_u128().ok_or(IrrepError::Overflow)?)
}

/// The Weyl product for an arbitrary integral weight; an integer that equals
/// `(−1)^ℓ(w) dim V(w⋆μ)` or 0.
pub fn signed_weyl_product(rs: &RootSystem, mu: &[i64]) -> BigInt {
    let mut num = BigInt::from(1);
    let mut den = BigInt::from(1);
    for beta in &rs.positive_roots {
        // 2(ν, β) = Σ ν_j β_j (α_j, α_j)
        let pair = |nu: &dyn Fn(usize) -> i64| -> i64 {
            (0..rs.rank()).map(|j| nu(j) * beta[j] * rs.form[j][j]).sum()
        };
        num *= pair(&|j| mu[j] + 1);
        den *= pair(&|_| 1);
    }
    num / den
}

/// Freudenthal's recursion, memoized on dominant weights.
pub struct Freudenthal<'a> {
    rs: &'a RootSystem,
    lambda: Weight,
    lambda_root: Vec<Q>,
    norm_lambda_rho: Q,
    memo: HashMap<Weight, u64>,
}

impl<'a> Freudenthal<'a> {
    pub fn new(rs: &'a RootSystem, lambda: &[i64]) -> Result<Self, IrrepError> {
        if !rs.is_dominant(lambda) {
            return Err(IrrepError::NotDominant(lambda.to_vec()));
        }
        let lr: Weight = lambda.iter().map(|x| x + 1).collect();
        Ok(Freudenthal {
            rs,
            lambda: lambda.to_vec(),
            lambda_root: rs.weight_to_root(lambda),
            norm_lambda_rho: rs.weight_form(&lr, &lr),
            memo: HashMap::new(),
        })
    }

    fn below_lambda(&self, mu: &[i64]) -> bool {
        let c = self.rs.weight_to_root(mu);
        c.iter().zip(&self.lambda_root).all(|(a, b)| {
            let d = b.clone() - a.clone();
            d.is_integer() && d >= Q::zero()
        })
    }

    pub fn multiplicity(&mut self, mu: &[i64]) -> u64 {
        let dom = self.rs.dominant_conjugate(mu);
        self.dominant_multiplicity(&dom)
    }

    fn dominant_multiplicity(&mut self, mu: &[i64]) -> u64 {
        if mu == self.lambda.as_slice() {
            return 1;
        }
        if let Some(&m) = self.memo.get(mu) {
            return m;
        }
        if !self.below_lambda(mu) {
            return 0;
        }
        let rs = self.rs;
        let mut acc: i64 = 0;
        for beta in &rs.positive_roots {
            let bw = rs.root_to_weight(beta);
            let mut nu: Weight = mu.to_vec();
            loop {
                nu.iter_mut().zip(&bw).for_each(|(a, b)| *a += b);
                if !self.below_lambda(&nu) {
                    break;
                }
                let m = self.multiplicity(&nu.clone());
                if m > 0 {
                    let two_pair: i64 = (0..rs.rank()).map(|j| nu[j] * beta[j] * rs.form[j][j]).sum();
                    acc += m as i64 * two_pair;
                }
            }
        }
        let mr: Weight = mu.iter().map(|x| x + 1).collect();
        let den = self.norm_lambda_rho.clone() - rs.weight_form(&mr, &mr);
        let val = q(acc) / den;
        assert!(val.is_integer(), "Freudenthal recursion produced a non-integer");
        let m = val.to_integer().to_u64().expect("nonnegative multiplicity");
        self.memo.insert(mu.to_vec(), m);
        m
    }
}

pub fn freudenthal_multiplicity(rs: &RootSystem, lambda: &[i64], mu: &[i64]) -> Result<u64, IrrepError> {
    Ok(Freudenthal::new(rs, lambda)?.multiplicity(mu))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultiplicityEntry {
    pub weight: Weight,
    pub mult: u64,
}

/// All weights of `V(λ)` with multiplicities, in order of depth below `λ`.
pub fn multiplicity_table(rs: &RootSystem, lambda: &[i64]) -> Result<Vec<MultiplicityEntry>, IrrepError> {
    let mut fr = Freudenthal::new(rs, lambda)?;
    let mut seen: BTreeMap<(i64, Weight), u64> = BTreeMap::new();
    let mut frontier = vec![lambda.to_vec()];
    seen.insert((0, lambda.to_vec()), 1);
    let mut depth = 0;
    while !frontier.is_empty() {
        depth += 1;
        let mut next = Vec::new();
        for w in &frontier {
            for i in 0..rs.rank() {
                let nu: Weight = w.iter().zip(&rs.cartan[i]).map(|(a, b)| a - b).collect();
                if seen.contains_key(&(depth, nu.clone())) {
                    continue;
                }
                let m = fr.multiplicity(&nu);
                if m > 0 {
                    seen.insert((depth, nu.clone()), m);
                    next.push(nu);
                }
            }
        }
        frontier = next;
    }
    Ok(seen.into_iter().map(|((_, weight), mult)| MultiplicityEntry { weight, mult }).collect())
}

/// One realized weight space. Offsets are `λ − μ` in simple-root coordinates.
#[derive(Debug, Clone)]
pub struct Layer {
    pub weight: Weight,
    /// Each basis vector is `f_{w_k} ⋯ f_{w_1} v_λ` for the word `[w_1, …, w_k]`.
    pub basis: Vec<Vec<usize>>,
    pub gram: Mat<Q>,
    /// `raise[i]`: matrix of `e_i` into the layer `μ + α_i`, if realized there.
    raise: Vec<Option<Mat<Q>>>,
}

impl Layer {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

#[derive(Debug, Clone)]
pub struct IrrepModel {
    pub lambda: Weight,
    rank: usize,
    cartan: Vec<Vec<i64>>,
    layers: BTreeMap<Vec<i64>, Layer>,
    by_weight: HashMap<Weight, Vec<i64>>,
    /// `lower[(i, offset)]`: matrix of `f_i` from the layer at `offset`.
    lower: HashMap<(usize, Vec<i64>), Mat<Q>>,
}

fn add_unit(v: &[i64], i: usize, s: i64) -> Vec<i64> {
    let mut w = v.to_vec();
    w[i] += s;
    w
}

struct Builder<'a> {
    rs: &'a RootSystem,
    lambda: Weight,
    layers: BTreeMap<Vec<i64>, Layer>,
    gram_inv: HashMap<Vec<i64>, Mat<Q>>,
    lower: HashMap<(usize, Vec<i64>), Mat<Q>>,
}

impl<'a> Builder<'a> {
    fn dim(&self, off: &[i64]) -> usize {
        self.layers.get(off).map_or(0, |l| l.dim())
    }

    /// Matrix of `f_i` from the layer at `off` into the layer at `off + e_i`.
    fn lowering(&mut self, i: usize, off: &[i64]) -> Mat<Q> {
        let key = (i, off.to_vec());
        if let Some(m) = self.lower.get(&key) {
            return m.clone();
        }
        let tgt = add_unit(off, i, 1);
        let (ds, dt) = (self.dim(off), self.dim(&tgt));
        let m = if ds == 0 || dt == 0 {
            zeros(dt, ds)
        } else {
            // ⟨f_i x, y⟩ = ⟨x, e_i y⟩ gives F = G_t⁻¹ Eᵀ G_s with E = e_i: t → s.
            let e = self.layers[&tgt].raise[i].clone().expect("adjacent realized layers");
            let g_s = self.layers[off].gram.clone();
            let g_t_inv = self.gram_inv[&tgt].clone();
            let et = transpose(&e, dt);
            mat_mul(&mat_mul(&g_t_inv, &et, ds), &g_s, ds)
        };
        self.lower.insert(key, m.clone());
        m
    }

    fn realize(&mut self, off: Vec<i64>) {
        let rs = self.rs;
        let n = rs.rank();
        let weight: Weight = {
            let mut w = self.lambda.clone();
            for (j, &c) in off.iter().enumerate() {
                for k in 0..n {
                    w[k] -= c * rs.cartan[j][k];
                }
            }
            w
        };
        // Spanning vectors (i, b) = f_i applied to basis vector b of the layer off − e_i.
        let mut span: Vec<(usize, usize)> = Vec::new();
        for i in 0..n {
            if off[i] > 0 {
                let up = add_unit(&off, i, -1);
                for b in 0..self.dim(&up) {
                    span.push((i, b));
                }
            }
        }
        if span.is_empty() {
            return;
        }
        // Columns of e_j on each spanning vector, in the basis of off − e_j.
        let mut e_cols: Vec<Option<Vec<Vec<Q>>>> = vec![None; n];
        for j in 0..n {
            if off[j] == 0 {
                continue;
            }
            let up_j = add_unit(&off, j, -1);
            let dj = self.dim(&up_j);
            if dj == 0 {
                continue;
            }
            let mut cols = Vec::with_capacity(span.len());
            for &(i, b) in &span {
                let up_i = add_unit(&off, i, -1);
                let mut col = vec![Q::zero(); dj];
                // f_i (e_j v_b): e_j v_b lives at off − e_i − e_j.
                if up_i[j] > 0 {
                    let up_ij = add_unit(&up_i, j, -1);
                    if self.dim(&up_ij) > 0 {
                        let e = self.layers[&up_i].raise[j].clone().unwrap();
                        let f = self.lowering(i, &up_ij);
                        for (r, fr) in f.iter().enumerate() {
                            let mut s = Q::zero();
                            for (k, x) in fr.iter().enumerate() {
                                if !x.is_zero() && !e[k][b].is_zero() {
                                    s += x.clone() * e[k][b].clone();
                                }
                            }
                            col[r] = s;
                        }
                    }
                }
                if i == j {
                    // h_i acts on the layer above by ⟨μ + α_i, α_i∨⟩.
                    let h = weight[i] + 2;
                    col[b] += q(h);
                }
                cols.push(col);
            }
            e_cols[j] = Some(cols);
        }
        // Gram matrix of the spanning set: ⟨f_i v_b, s'⟩ = ⟨v_b, e_i s'⟩.
        let m = span.len();
        let mut gram = zeros(m, m);
        for (r, &(i, b)) in span.iter().enumerate() {
            let up_i = add_unit(&off, i, -1);
            let g = &self.layers[&up_i].gram;
            let cols = e_cols[i].as_ref().unwrap();
            for c in 0..m {
                let mut s = Q::zero();
                for (k, x) in cols[c].iter().enumerate() {
                    if !x.is_zero() && !g[b][k].is_zero() {
                        s += g[b][k].clone() * x.clone();
                    }
                }
                gram[r][c] = s;
            }
        }
        let mut reduced = gram.clone();
        let pivots = rref(&mut reduced, m);
        if pivots.is_empty() {
            return;
        }
        let basis: Vec<Vec<usize>> = pivots
            .iter()
            .map(|&p| {
                let (i, b) = span[p];
                let up_i = add_unit(&off, i, -1);
                let mut w = self.layers[&up_i].basis[b].clone();
                w.push(i);
                w
            })
            .collect();
        let sub: Mat<Q> = pivots.iter().map(|&r| pivots.iter().map(|&c| gram[r][c].clone()).collect()).collect();
        let raise = (0..n)
            .map(|j| {
                e_cols[j].as_ref().map(|cols| {
                    let dj = cols[0].len();
                    (0..dj).map(|r| pivots.iter().map(|&p| cols[p][r].clone()).collect()).collect()
                })
            })
            .collect();
        self.gram_inv.insert(off.clone(), inverse(&sub).expect("basis Gram matrix is nonsingular"));
        self.layers.insert(off, Layer { weight, basis, gram: sub, raise });
    }
}

impl IrrepModel {
    /// Realizes every layer between `λ` and the given targets.
    pub fn realize(rs: &RootSystem, lambda: &[i64], targets: &[Weight], height_limit: i64) -> Result<Self, IrrepError> {
        if !rs.is_dominant(lambda) {
            return Err(IrrepError::NotDominant(lambda.to_vec()));
        }
        let n = rs.rank();
        let mut boxes: Vec<Vec<i64>> = Vec::new();
        for t in targets {
            let d: Weight = lambda.iter().zip(t).map(|(a, b)| a - b).collect();
            let off = rs
                .weight_to_root_integral(&d)
                .filter(|c| c.iter().all(|&x| x >= 0))
                .ok_or_else(|| IrrepError::NotBelow(t.clone()))?;
            let depth = height(&off);
            if depth > height_limit {
                return Err(IrrepError::HeightLimit { weight: t.clone(), depth, limit: height_limit });
            }
            boxes.push(off);
        }
        let mut b = Builder {
            rs,
            lambda: lambda.to_vec(),
            layers: BTreeMap::new(),
            gram_inv: HashMap::new(),
            lower: HashMap::new(),
        };
        let top = vec![0i64; n];
        b.layers.insert(
            top.clone(),
            Layer { weight: lambda.to_vec(), basis: vec![vec![]], gram: vec![vec![q(1)]], raise: vec![None; n] },
        );
        b.gram_inv.insert(top.clone(), vec![vec![q(1)]]);
        let inside = |o: &[i64]| boxes.iter().any(|bx| o.iter().zip(bx).all(|(a, c)| a <= c));
        let mut frontier = vec![top];
        while !frontier.is_empty() {
            let mut next: std::collections::BTreeSet<Vec<i64>> = Default::default();
            for o in &frontier {
                for i in 0..n {
                    let c = add_unit(o, i, 1);
                    if inside(&c) {
                        next.insert(c);
                    }
                }
            }
            frontier = Vec::new();
            for c in next {
                b.realize(c.clone());
                if b.layers.contains_key(&c) {
                    frontier.push(c);
                }
            }
        }
        // Lowering matrices for every adjacent pair, so the model is complete.
        let keys: Vec<Vec<i64>> = b.layers.keys().cloned().collect();
        for k in &keys {
            for i in 0..n {
                if b.layers.contains_key(&add_unit(k, i, 1)) {
                    b.lowering(i, k);
                }
            }
        }
        let by_weight = b.layers.iter().map(|(o, l)| (l.weight.clone(), o.clone())).collect();
        let model = IrrepModel {
            lambda: lambda.to_vec(),
            rank: n,
            cartan: rs.cartan.clone(),
            layers: b.layers,
            by_weight,
            lower: b.lower,
        };
        let mut fr = Freudenthal::new(rs, lambda)?;
        for layer in model.layers.values() {
            let expected = fr.multiplicity(&layer.weight);
            if expected != layer.dim() as u64 {
                return Err(IrrepError::Inconsistent { weight: layer.weight.clone(), realized: layer.dim(), expected });
            }
        }
        Ok(model)
    }

    fn offset_of(&self, mu: &[i64]) -> Option<Vec<i64>> {
        self.by_weight.get(mu).cloned()
    }

    pub fn layers(&self) -> impl Iterator<Item = &Layer> {
        self.layers.values()
    }

    pub fn layer(&self, mu: &[i64]) -> Option<&Layer> {
        self.by_weight.get(mu).map(|o| &self.layers[o])
    }

    /// Dimension of a realized layer; 0 for weights known not to occur.
    pub fn dim(&self, mu: &[i64]) -> usize {
        self.layer(mu).map_or(0, |l| l.dim())
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    fn weight_plus_simple(&self, mu: &[i64], i: usize, s: i64) -> Weight {
        mu.iter().zip(&self.cartan[i]).map(|(a, b)| a + s * b).collect()
    }

    /// Matrix of `e_i : V_μ → V_{μ+α_i}`.
    pub fn raising_action(&self, i: usize, mu: &[i64]) -> Result<Mat<Q>, IrrepError> {
        let src = self.offset_of(mu).ok_or_else(|| IrrepError::Unrealized(mu.to_vec()))?;
        let up = self.weight_plus_simple(mu, i, 1);
        if src[i] == 0 {
            return Err(IrrepError::Unrealized(up));
        }
        let tgt = add_unit(&src, i, -1);
        let l = self.layers.get(&tgt).ok_or(IrrepError::Unrealized(up))?;
        Ok(self.layers[&src].raise[i].clone().unwrap_or_else(|| zeros(l.dim(), self.layers[&src].dim())))
    }

    /// Matrix of `f_i : V_μ → V_{μ−α_i}`.
    pub fn lowering_action(&self, i: usize, mu: &[i64]) -> Result<Mat<Q>, IrrepError> {
        let src = self.offset_of(mu).ok_or_else(|| IrrepError::Unrealized(mu.to_vec()))?;
        self.lower
            .get(&(i, src))
            .cloned()
            .ok_or_else(|| IrrepError::Unrealized(self.weight_plus_simple(mu, i, -1)))
    }

    /// The vector `f_β v_λ` (up to a nonzero scalar fixed by the root order),
    /// in the basis of `V_{λ−β}`. Returns `None` if `λ − β` is not realized.
    pub fn root_vector_on_highest(&self, rs: &RootSystem, beta: &[i64]) -> Option<Vec<Q>> {
        let tgt = beta.to_vec();
        if !self.layers.contains_key(&tgt) {
            return None;
        }
        let mut memo: HashMap<(Vec<i64>, Vec<i64>), Mat<Q>> = HashMap::new();
        let top = vec![0i64; self.rank];
        let m = self.root_lowering(rs, beta, &top, &mut memo);
        Some(m.iter().map(|r| r[0].clone()).collect())
    }

    fn layer_dim_at(&self, off: &[i64]) -> usize {
        self.layers.get(off).map_or(0, |l| l.dim())
    }

    /// Matrix of the root vector `f_γ` from the layer at `src`.
    ///
    /// `f_γ = [f_i, f_{γ−α_i}]` with `i` the first index keeping `γ − α_i` a root.
    fn root_lowering(
        &self,
        rs: &RootSystem,
        gamma: &[i64],
        src: &[i64],
        memo: &mut HashMap<(Vec<i64>, Vec<i64>), Mat<Q>>,
    ) -> Mat<Q> {
        let key = (gamma.to_vec(), src.to_vec());
        if let Some(m) = memo.get(&key) {
            return m.clone();
        }
        let tgt: Vec<i64> = src.iter().zip(gamma).map(|(a, b)| a + b).collect();
        let (ds, dt) = (self.layer_dim_at(src), self.layer_dim_at(&tgt));
        let out = if ds == 0 || dt == 0 {
            zeros(dt, ds)
        } else if height(gamma) == 1 {
            let i = gamma.iter().position(|&c| c == 1).unwrap();
            self.lower[&(i, src.to_vec())].clone()
        } else {
            let i = (0..self.rank)
                .find(|&i| gamma[i] > 0 && rs.is_positive_root(&add_unit(gamma, i, -1)))
                .expect("non-simple positive roots have a simple predecessor");
            let rest = add_unit(gamma, i, -1);
            let mid: Vec<i64> = src.iter().zip(&rest).map(|(a, b)| a + b).collect();
            let x_rest = self.root_lowering(rs, &rest, src, memo);
            let f_mid = self.lower_or_zero(i, &mid);
            let a = mat_mul(&f_mid, &x_rest, ds);
            let src_i = add_unit(src, i, 1);
            let f_src = self.lower_or_zero(i, src);
            let x_rest_i = self.root_lowering(rs, &rest, &src_i, memo);
            let b = mat_mul(&x_rest_i, &f_src, ds);
            a.into_iter()
                .zip(b)
                .map(|(ra, rb)| ra.into_iter().zip(rb).map(|(x, y)| x - y).collect())
                .collect()
        };
        memo.insert(key, out.clone());
        out
    }

    fn lower_or_zero(&self, i: usize, src: &[i64]) -> Mat<Q> {
        match self.lower.get(&(i, src.to_vec())) {
            Some(m) => m.clone(),
            None => zeros(self.layer_dim_at(&add_unit(src, i, 1)), self.layer_dim_at(src)),
        }
    }

    /// Kernel of the joint raising map `(e_1, …, e_n)` on a realized layer.
    pub fn highest_weight_vectors(&self, mu: &[i64]) -> Result<usize, IrrepError> {
        let d = self.layer(mu).ok_or_else(|| IrrepError::Unrealized(mu.to_vec()))?.dim();
        let mut rows: Mat<Q> = Vec::new();
        for i in 0..self.rank {
            if let Ok(e) = self.raising_action(i, mu) {
                rows.extend(e);
            }
        }
        Ok(kernel(&rows, d).len())
    }
}

pub fn realize_layers(rs: &RootSystem, lambda: &[i64], targets: &[Weight]) -> Result<IrrepModel, IrrepError> {
    IrrepModel::realize(rs, lambda, targets, DEFAULT_HEIGHT_LIMIT)
}
