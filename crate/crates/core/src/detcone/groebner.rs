//! Buchberger's algorithm, normal forms, and S-pair certificates.

use std::collections::BTreeSet;

use num_traits::One;

use super::poly::{coprime, mono_degree, mono_divides, mono_lcm, mono_quotient, MonomialOrder, Poly};
use crate::linalg::Q;

/// Polynomials over named variables with a monomial order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ideal {
    pub names: Vec<String>,
    pub order: MonomialOrder,
    pub generators: Vec<Poly>,
}

impl Ideal {
    pub fn new(names: Vec<String>, generators: Vec<Poly>) -> Self {
        let n = names.len();
        Ideal { names, order: MonomialOrder::lex(n), generators }
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.generators.iter().all(Poly::is_homogeneous)
    }

    pub fn groebner(&self) -> GBasis {
        buchberger(&self.generators, &self.order)
    }
}

#[derive(Debug, Clone)]
pub struct GBasis {
    pub order: MonomialOrder,
    pub reduced: bool,
    /// Elements in ranked coordinates, sorted by leading monomial.
    ranked: Vec<Poly>,
}

impl GBasis {
    /// Elements in the ring's own coordinates.
    pub fn generators(&self) -> Vec<Poly> {
        self.ranked.iter().map(|p| unrank(p, &self.order)).collect()
    }

    pub fn len(&self) -> usize {
        self.ranked.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ranked.is_empty()
    }

    /// Leading monomials in the ring's own coordinates.
    pub fn leading_monomials(&self) -> Vec<Vec<u32>> {
        self.ranked.iter().map(|p| self.order.unrank_mono(p.lead_mono().unwrap())).collect()
    }
}

fn rank(p: &Poly, o: &MonomialOrder) -> Poly {
    if o.is_identity() {
        p.clone()
    } else {
        p.map_monos(|m| o.rank_mono(m))
    }
}

fn unrank(p: &Poly, o: &MonomialOrder) -> Poly {
    if o.is_identity() {
        p.clone()
    } else {
        p.map_monos(|m| o.unrank_mono(m))
    }
}

/// Full division: `p = Σ qᵢ·basisᵢ + r` with no term of `r` divisible by a leading monomial.
pub fn divide(p: &Poly, basis: &[Poly]) -> (Vec<Poly>, Poly) {
    let n = p.nvars();
    let mut quotients = vec![Poly::zero(n); basis.len()];
    let mut rem = Poly::zero(n);
    let mut rest = p.clone();
    while let Some((m, c)) = rest.pop_lead() {
        match basis.iter().position(|g| mono_divides(g.lead_mono().unwrap(), &m)) {
            Some(i) => {
                let (gm, gc) = basis[i].lead().unwrap();
                let shift = mono_quotient(&m, gm);
                let f = c / gc.clone();
                // The leading term cancels exactly; subtract the tail only.
                let mut tail = basis[i].clone();
                tail.pop_lead();
                rest.add_scaled_shifted(&-f.clone(), &shift, &tail);
                quotients[i].add_term(shift, f);
            }
            None => rem.add_term(m, c),
        }
    }
    (quotients, rem)
}

fn reduce(p: &Poly, basis: &[Poly]) -> Poly {
    divide(p, basis).1
}

/// `S(f, g)` with both leading terms scaled to cancel.
pub fn s_polynomial(f: &Poly, g: &Poly) -> Poly {
    let (fm, fc) = f.lead().unwrap();
    let (gm, gc) = g.lead().unwrap();
    let l = mono_lcm(fm, gm);
    let a = f.mul_mono(&mono_quotient(&l, fm), &(Q::one() / fc.clone()));
    let b = g.mul_mono(&mono_quotient(&l, gm), &(Q::one() / gc.clone()));
    a.sub(&b)
}

/// Buchberger with the normal selection strategy (smallest lcm degree first)
/// and the coprime-leads criterion, followed by reduction.
pub fn buchberger(gens: &[Poly], order: &MonomialOrder) -> GBasis {
    let mut basis: Vec<Poly> = gens.iter().filter(|p| !p.is_zero()).map(|p| rank(p, order).monic()).collect();
    let mut pairs: BTreeSet<(u32, Vec<u32>, usize, usize)> = BTreeSet::new();
    let push_pairs = |basis: &[Poly], j: usize, pairs: &mut BTreeSet<(u32, Vec<u32>, usize, usize)>| {
        for i in 0..j {
            let l = mono_lcm(basis[i].lead_mono().unwrap(), basis[j].lead_mono().unwrap());
            pairs.insert((mono_degree(&l), l, i, j));
        }
    };
    for j in 0..basis.len() {
        push_pairs(&basis, j, &mut pairs);
    }
    while let Some(pair) = pairs.pop_first() {
        let (_, _, i, j) = pair;
        if coprime(basis[i].lead_mono().unwrap(), basis[j].lead_mono().unwrap()) {
            continue;
        }
        let r = reduce(&s_polynomial(&basis[i], &basis[j]), &basis);
        if !r.is_zero() {
            basis.push(r.monic());
            push_pairs(&basis, basis.len() - 1, &mut pairs);
        }
    }
    GBasis { order: order.clone(), reduced: true, ranked: reduce_basis(basis) }
}

/// Minimal, interreduced, monic; sorted by leading monomial.
fn reduce_basis(mut basis: Vec<Poly>) -> Vec<Poly> {
    basis.sort_by(|a, b| a.lead_mono().cmp(&b.lead_mono()));
    let mut minimal: Vec<Poly> = Vec::new();
    for (k, g) in basis.iter().enumerate() {
        let lm = g.lead_mono().unwrap();
        let redundant = basis.iter().enumerate().any(|(j, h)| {
            let hm = h.lead_mono().unwrap();
            j != k && mono_divides(hm, lm) && (hm != lm || j < k)
        });
        if !redundant {
            minimal.push(g.clone());
        }
    }
    let mut out = Vec::with_capacity(minimal.len());
    for k in 0..minimal.len() {
        let others: Vec<Poly> = minimal.iter().enumerate().filter(|(j, _)| *j != k).map(|(_, p)| p.clone()).collect();
        // Leading terms are not divisible by the others, so division only touches tails.
        out.push(reduce(&minimal[k], &others).monic());
    }
    out.sort_by(|a, b| a.lead_mono().cmp(&b.lead_mono()));
    out
}

pub fn normal_form(p: &Poly, gb: &GBasis) -> Poly {
    unrank(&reduce(&rank(p, &gb.order), &gb.ranked), &gb.order)
}

pub fn ideal_contains(gb: &GBasis, p: &Poly) -> bool {
    normal_form(p, gb).is_zero()
}

/// Certificate replay: every S-pair of `polys` reduces to zero modulo `polys`.
///
/// All pairs are replayed, including those with coprime leading monomials.
pub fn is_groebner_basis(polys: &[Poly], order: &MonomialOrder) -> bool {
    let basis: Vec<Poly> = polys.iter().filter(|p| !p.is_zero()).map(|p| rank(p, order)).collect();
    for j in 0..basis.len() {
        for i in 0..j {
            if !reduce(&s_polynomial(&basis[i], &basis[j]), &basis).is_zero() {
                return false;
            }
        }
    }
    true
}

/// Syzygies of the basis elements from the S-pair reductions, in the ring's
/// own coordinates. They generate the module of all syzygies.
pub fn schreyer_syzygies(gb: &GBasis) -> Vec<Vec<Poly>> {
    let b = &gb.ranked;
    let mut out = Vec::new();
    for j in 0..b.len() {
        for i in 0..j {
            let (fm, fc) = b[i].lead().unwrap();
            let (gm, gc) = b[j].lead().unwrap();
            let l = mono_lcm(fm, gm);
            let (quotients, rem) = divide(&s_polynomial(&b[i], &b[j]), b);
            debug_assert!(rem.is_zero(), "basis is not a Gröbner basis");
            let mut syz: Vec<Poly> = quotients.into_iter().map(|q| q.scale(&-Q::one())).collect();
            syz[i].add_term(mono_quotient(&l, fm), Q::one() / fc.clone());
            syz[j].add_term(mono_quotient(&l, gm), -Q::one() / gc.clone());
            if syz.iter().any(|p| !p.is_zero()) {
                out.push(syz.iter().map(|p| unrank(p, &gb.order)).collect());
            }
        }
    }
    out
}

/// Checks `Σ rᵢ·gᵢ = 0`.
pub fn is_syzygy(gb: &GBasis, syz: &[Poly]) -> bool {
    let gens = gb.generators();
    let n = gens.first().map_or(0, Poly::nvars);
    let mut acc = Poly::zero(n);
    for (r, g) in syz.iter().zip(&gens) {
        acc = acc.add(&r.mul(g));
    }
    acc.is_zero()
}

/// True when the leading-term sets of two bases coincide.
pub fn same_leading_terms(a: &GBasis, b: &GBasis) -> bool {
    let mut x = a.leading_monomials();
    let mut y = b.leading_monomials();
    x.sort();
    y.sort();
    x == y
}
