//! Cones of primitive vectors in simple modules: root data, explicit weight
//! spaces, Borel–Weil–Bott, invariant Hilbert scheme tangent spaces, T¹
//! classification, determinantal cones and simple Jordan algebras.

pub mod bwb;
pub mod detcone;
pub mod hilbclass;
pub mod irrep;
pub mod jordan;
pub mod linalg;
pub mod rootdata;
pub mod sweeps;
pub mod symbolic;
pub mod t1class;
