//! Sparse multivariate polynomials over `ℚ`.
//!
//! Monomials are exponent vectors compared lexicographically with variable 0
//! most significant, which is the natural `Ord` of `Vec<u32>`. Other variable
//! rankings are handled by permuting coordinates (see [`MonomialOrder`]).

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::linalg::Q;

pub type Mono = Vec<u32>;

pub fn mono_degree(m: &[u32]) -> u32 {
    m.iter().sum()
}

pub fn mono_divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

pub fn mono_lcm(a: &[u32], b: &[u32]) -> Mono {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

/// `b / a`; caller guarantees `a | b`.
pub fn mono_quotient(b: &[u32], a: &[u32]) -> Mono {
    b.iter().zip(a).map(|(x, y)| x - y).collect()
}

pub fn mono_mul(a: &[u32], b: &[u32]) -> Mono {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn coprime(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| *x == 0 || *y == 0)
}

/// All monomials of total degree `d` in `n` variables, in increasing lex order.
pub fn monomials_of_degree(n: usize, d: u32) -> Vec<Mono> {
    fn rec(i: usize, left: u32, cur: &mut Mono, out: &mut Vec<Mono>) {
        if i + 1 == cur.len() {
            cur[i] = left;
            out.push(cur.clone());
            return;
        }
        for e in 0..=left {
            cur[i] = e;
            rec(i + 1, left - e, cur, out);
        }
    }
    if n == 0 {
        return if d == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    let mut out = Vec::new();
    rec(0, d, &mut vec![0; n], &mut out);
    out
}

/// Lexicographic order after ranking variables: `ranking[k]` is the variable
/// in position `k` of significance (position 0 is the most significant).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialOrder {
    pub ranking: Vec<usize>,
}

impl MonomialOrder {
    /// Variable 0 most significant.
    pub fn lex(n: usize) -> Self {
        MonomialOrder { ranking: (0..n).collect() }
    }

    pub fn is_identity(&self) -> bool {
        self.ranking.iter().enumerate().all(|(k, &v)| k == v)
    }

    pub fn is_permutation(&self, n: usize) -> bool {
        let mut seen = vec![false; n];
        self.ranking.len() == n && self.ranking.iter().all(|&v| v < n && !std::mem::replace(&mut seen[v], true))
    }

    /// Into ranked coordinates.
    pub fn rank_mono(&self, m: &[u32]) -> Mono {
        self.ranking.iter().map(|&v| m[v]).collect()
    }

    pub fn unrank_mono(&self, m: &[u32]) -> Mono {
        let mut out = vec![0; m.len()];
        for (k, &v) in self.ranking.iter().enumerate() {
            out[v] = m[k];
        }
        out
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Poly {
    nvars: usize,
    terms: BTreeMap<Mono, Q>,
}

impl Poly {
    pub fn zero(nvars: usize) -> Self {
        Poly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: Q) -> Self {
        Self::monomial(vec![0; nvars], c)
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut m = vec![0; nvars];
        m[i] = 1;
        Self::monomial(m, Q::one())
    }

    pub fn monomial(m: Mono, c: Q) -> Self {
        let nvars = m.len();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Poly { nvars, terms }
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Mono, Q)>) -> Self {
        let mut p = Poly::zero(nvars);
        for (m, c) in terms {
            assert_eq!(m.len(), nvars, "monomial arity");
            p.add_term(m, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in increasing monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Mono, &Q)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &[u32]) -> Q {
        self.terms.get(m).cloned().unwrap_or_else(Q::zero)
    }

    pub fn lead(&self) -> Option<(&Mono, &Q)> {
        self.terms.iter().next_back()
    }

    pub fn lead_mono(&self) -> Option<&Mono> {
        self.terms.keys().next_back()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| mono_degree(m)).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut it = self.terms.keys().map(|m| mono_degree(m));
        match it.next() {
            None => true,
            Some(d) => it.all(|e| e == d),
        }
    }

    pub fn add_term(&mut self, m: Mono, c: Q) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get().clone() + c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    /// `self += c · m · other`.
    pub fn add_scaled_shifted(&mut self, c: &Q, m: &[u32], other: &Poly) {
        for (om, oc) in &other.terms {
            self.add_term(mono_mul(m, om), c.clone() * oc.clone());
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let mut p = self.clone();
        p.add_scaled_shifted(&Q::one(), &vec![0; self.nvars], other);
        p
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let mut p = self.clone();
        p.add_scaled_shifted(&-Q::one(), &vec![0; self.nvars], other);
        p
    }

    pub fn scale(&self, c: &Q) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.nvars);
        }
        Poly { nvars: self.nvars, terms: self.terms.iter().map(|(m, x)| (m.clone(), x.clone() * c.clone())).collect() }
    }

    pub fn mul_mono(&self, m: &[u32], c: &Q) -> Poly {
        let mut p = Poly::zero(self.nvars);
        p.add_scaled_shifted(c, m, self);
        p
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let mut p = Poly::zero(self.nvars);
        for (m, c) in &self.terms {
            p.add_scaled_shifted(c, m, other);
        }
        p
    }

    pub fn derivative(&self, var: usize) -> Poly {
        let mut p = Poly::zero(self.nvars);
        for (m, c) in &self.terms {
            if m[var] > 0 {
                let mut d = m.clone();
                d[var] -= 1;
                p.add_term(d, c.clone() * Q::from_integer(m[var].into()));
            }
        }
        p
    }

    /// Homogeneous component of total degree `d`.
    pub fn component(&self, d: u32) -> Poly {
        Poly::from_terms(self.nvars, self.terms.iter().filter(|(m, _)| mono_degree(m) == d).map(|(m, c)| (m.clone(), c.clone())))
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self) -> Poly {
        match self.lead() {
            None => self.clone(),
            Some((_, c)) => self.scale(&(Q::one() / c.clone())),
        }
    }

    pub fn map_monos(&self, f: impl Fn(&[u32]) -> Mono) -> Poly {
        let nvars = self.nvars;
        Poly::from_terms(nvars, self.terms.iter().map(|(m, c)| (f(m), c.clone())))
    }

    /// Pops the leading term.
    pub(crate) fn pop_lead(&mut self) -> Option<(Mono, Q)> {
        self.terms.pop_last()
    }
}

impl fmt::Display for Poly {
    /// Writes with variables named `v0, v1, …`; see the text module for named output.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (0..self.nvars).map(|i| format!("v{i}")).collect();
        f.write_str(&crate::detcone::text::format_poly(self, &names))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::q;

    #[test]
    fn arithmetic() {
        let x = Poly::var(2, 0);
        let y = Poly::var(2, 1);
        let p = x.add(&y).mul(&x.sub(&y));
        assert_eq!(p, x.mul(&x).sub(&y.mul(&y)));
        assert_eq!(p.lead_mono().unwrap(), &vec![2, 0]);
        assert!(p.is_homogeneous());
        assert_eq!(p.derivative(0), x.scale(&q(2)));
        assert!(p.sub(&p).is_zero());
    }

    #[test]
    fn monomial_counts() {
        assert_eq!(monomials_of_degree(3, 2).len(), 6);
        assert_eq!(monomials_of_degree(4, 3).len(), 20);
        let ms = monomials_of_degree(3, 3);
        assert!(ms.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn ranking_round_trip() {
        let o = MonomialOrder { ranking: vec![2, 0, 1] };
        assert!(o.is_permutation(3));
        let m = vec![1, 2, 3];
        assert_eq!(o.rank_mono(&m), vec![3, 1, 2]);
        assert_eq!(o.unrank_mono(&o.rank_mono(&m)), m);
    }
}
