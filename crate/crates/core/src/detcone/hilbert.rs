//! Graded dimensions and standard-monomial counts.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::poly::{mono_divides, monomials_of_degree, Mono};

/// Dimension per integer degree over a finite window.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradedVectorDims {
    pub dims: BTreeMap<i64, u64>,
}

impl GradedVectorDims {
    pub fn total(&self) -> u64 {
        self.dims.values().sum()
    }

    pub fn get(&self, d: i64) -> u64 {
        self.dims.get(&d).copied().unwrap_or(0)
    }

    /// Degrees with a nonzero dimension.
    pub fn support(&self) -> Vec<i64> {
        self.dims.iter().filter(|(_, &v)| v > 0).map(|(&d, _)| d).collect()
    }
}

/// Monomials of degree `d` divisible by no leading monomial, in increasing lex order.
pub fn standard_monomials(leads: &[Mono], nvars: usize, d: u32) -> Vec<Mono> {
    monomials_of_degree(nvars, d).into_iter().filter(|m| !leads.iter().any(|l| mono_divides(l, m))).collect()
}

/// Number of standard monomials per degree in `window` (negative degrees count 0).
pub fn hilbert_function(leads: &[Mono], nvars: usize, window: std::ops::RangeInclusive<i64>) -> GradedVectorDims {
    let dims = window
        .map(|d| {
            let v = if d < 0 { 0 } else { standard_monomials(leads, nvars, d as u32).len() as u64 };
            (d, v)
        })
        .collect();
    GradedVectorDims { dims }
}
