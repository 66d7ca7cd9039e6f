//! Exact generic verification of the family identities.
//!
//! Polynomials live in ℚ[a, b, c, Δ, x, u, y, v] and are extended by the
//! formal radicals √Δ and √−2, so every identity is checked for all
//! parameter values at once.

mod family;
mod mpoly;
mod radical;

pub use family::{specialize_x_poly, FamilyPolynomials, FamilyReport, SpecializedFamily};
pub use mpoly::{Exponents, MPoly, Var, NVARS};
pub use radical::{RadicalElem, ONE, SQRT_DELTA, SQRT_M2, SQRT_M2_DELTA};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SymbolicError {
    #[error("specialization leaves a √−2 component")]
    NotInQuadraticField,
    #[error("specialization leaves free indeterminates")]
    FreeVariables,
    #[error("field error: {0}")]
    Field(String),
}

/// `δ = Δ/2` for the standard family.
pub fn verify_delta() -> bool {
    FamilyPolynomials::standard().verify_delta()
}

/// Conjugation identities of the standard family.
pub fn verify_conjugation() -> bool {
    FamilyPolynomials::standard().verify_conjugation()
}

/// Transpose identity of the standard correspondence.
pub fn verify_transpose() -> bool {
    FamilyPolynomials::standard().verify_transpose()
}
