//! Stable irreducibility, ordinariness and certificates for trivial geometric
//! endomorphisms, plus the end-algebra classification of twists.

mod certificate;
mod stable;

pub use certificate::{
    analyze_prime, certify_trivial_endos, certify_with_labels, classify_end_algebra, cocycle_value, genuinely_gl4_certificate,
    Certificate, Conclusion, EndAlgebra, Gl4Block, PrimeData, SCHEMA,
};
pub use stable::{f_resultant, is_ordinary, is_stably_irreducible, StableIrreducibilityReport, TOTIENT_BOUND};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CriterionError {
    #[error("the two rational primes must be distinct (got {0} twice)")]
    SamePrime(u64),
    #[error("prime {p}: {reason}")]
    Prime { p: u64, reason: String },
    #[error("[ℚ(√{0}, √−2) : ℚ] ≠ 4")]
    DegreeNotFour(i64),
    #[error("Nm(α) is in neither −2·□ nor −2Δ·□ for α = {0}")]
    NotCompletelyDefined(String),
    #[error("curve: {0}")]
    Curve(String),
    #[error("{0}")]
    Domain(String),
}
