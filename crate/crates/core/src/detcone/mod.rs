//! Determinantal cones: polynomials over `ℚ`, Gröbner bases, Hilbert functions,
//! the perturbed 2×2-minor family, and a brute-force graded `T¹`.

pub mod deform;
pub mod families;
pub mod graded_t1;
pub mod groebner;
pub mod hilbert;
pub mod poly;
pub mod text;

use thiserror::Error;

pub use deform::{first_order_triviality, flatness_check, FlatnessReport, ParameterSampler};
pub use families::{hankel_ideal, perturbed_family_ideal, segre_veronese_ideal};
pub use graded_t1::{default_window, graded_t1};
pub use groebner::{buchberger, normal_form, GBasis, Ideal};
pub use hilbert::{hilbert_function, GradedVectorDims};
pub use poly::{MonomialOrder, Poly};
pub use text::{format_ideal, parse_ideal};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DetconeError {
    #[error("ideal is not homogeneous")]
    NotHomogeneous,
    #[error("degree window too small: degree {degree} is nonzero ({dims:?})")]
    WindowTooSmall { degree: i64, dims: GradedVectorDims },
    #[error(transparent)]
    Family(#[from] families::FamilyError),
    #[error(transparent)]
    Text(#[from] text::TextError),
}
