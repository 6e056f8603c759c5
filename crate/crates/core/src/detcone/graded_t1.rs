//! `T¹` of a graded quotient `A = S/I` by exact linear algebra, one degree at a time.
//!
//! `T¹_e = Hom(I, A)_e / {derivations of degree e}`. A homomorphism is a
//! choice of `φ(g) ∈ A_{deg g + e}` for each Gröbner basis element `g`,
//! subject to the Schreyer syzygies; derivations `Σ h_v ∂/∂x_v` with
//! `deg h_v = e + 1` give `φ(g) = Σ h_v ∂g/∂x_v`.

use std::collections::HashMap;

use super::groebner::{normal_form, schreyer_syzygies, Ideal};
use super::hilbert::{standard_monomials, GradedVectorDims};
use super::poly::{Mono, Poly};
use super::DetconeError;
use crate::linalg::{Q, SparseEchelon};

struct Standard {
    leads: Vec<Mono>,
    nvars: usize,
    cache: HashMap<i64, Vec<Mono>>,
}

impl Standard {
    fn get(&mut self, d: i64) -> &[Mono] {
        let (leads, n) = (&self.leads, self.nvars);
        self.cache.entry(d).or_insert_with(|| if d < 0 { Vec::new() } else { standard_monomials(leads, n, d as u32) })
    }
}

/// Interns `(slot, monomial)` keys as column indices.
#[derive(Default)]
struct Interner {
    ids: HashMap<(usize, Mono), usize>,
}

impl Interner {
    fn id(&mut self, slot: usize, m: &Mono) -> usize {
        let n = self.ids.len();
        *self.ids.entry((slot, m.clone())).or_insert(n)
    }
}

fn sparse(p: &Poly, slot: usize, interner: &mut Interner, out: &mut Vec<(usize, Q)>) {
    for (m, c) in p.terms() {
        out.push((interner.id(slot, m), c.clone()));
    }
}

/// Dimensions of `T¹` per degree in `window`.
///
/// Fails when the ideal is not homogeneous, or when a boundary degree of the
/// window is nonzero (the window may then be missing part of `T¹`).
pub fn graded_t1(ideal: &Ideal, window: std::ops::RangeInclusive<i64>) -> Result<GradedVectorDims, DetconeError> {
    if !ideal.is_homogeneous() {
        return Err(DetconeError::NotHomogeneous);
    }
    let gb = ideal.groebner();
    let gens = gb.generators();
    let degs: Vec<i64> = gens.iter().map(|g| g.total_degree().unwrap() as i64).collect();
    let syz = schreyer_syzygies(&gb);
    let n = ideal.nvars();
    let mut std = Standard { leads: gb.leading_monomials(), nvars: n, cache: HashMap::new() };
    let partials: Vec<Vec<Poly>> = gens.iter().map(|g| (0..n).map(|v| g.derivative(v)).collect()).collect();
    let (lo, hi) = (*window.start(), *window.end());
    let mut dims = GradedVectorDims::default();
    for e in window {
        // Unknown coordinates: (basis element k, standard monomial of degree deg g_k + e).
        let mut unknowns = Interner::default();
        for (k, &d) in degs.iter().enumerate() {
            for b in std.get(d + e).to_vec() {
                unknowns.id(k, &b);
            }
        }
        let count = unknowns.ids.len();
        if count == 0 {
            dims.dims.insert(e, 0);
            continue;
        }
        let mut constraints = SparseEchelon::new();
        let mut rows = Interner::default();
        let mut keys: Vec<(usize, Mono)> = unknowns.ids.keys().cloned().collect();
        keys.sort();
        for (k, b) in &keys {
            let mut col = Vec::new();
            for (si, s) in syz.iter().enumerate() {
                if s[*k].is_zero() {
                    continue;
                }
                let nf = normal_form(&s[*k].mul_mono(b, &Q::from_integer(1.into())), &gb);
                sparse(&nf, si, &mut rows, &mut col);
            }
            constraints.insert(col);
        }
        let hom = count - constraints.rank();
        let mut image = SparseEchelon::new();
        for u in std.get(e + 1).to_vec() {
            for v in 0..n {
                let mut col = Vec::new();
                for (k, dg) in partials.iter().enumerate() {
                    let nf = normal_form(&dg[v].mul_mono(&u, &Q::from_integer(1.into())), &gb);
                    sparse(&nf, k, &mut unknowns, &mut col);
                }
                debug_assert_eq!(unknowns.ids.len(), count, "derivation left the unknown space");
                image.insert(col);
            }
        }
        dims.dims.insert(e, (hom - image.rank()) as u64);
    }
    for edge in [lo, hi] {
        if dims.get(edge) != 0 {
            return Err(DetconeError::WindowTooSmall { degree: edge, dims });
        }
    }
    Ok(dims)
}

/// Default window `[−(m+1), 2]` for a cone with an `m`-column block, widened
/// to `[−3, 2]` at `m = 1` so the quadric's degree −2 piece is interior.
pub fn default_window(m: usize) -> std::ops::RangeInclusive<i64> {
    -(m.max(2) as i64 + 1)..=2
}
