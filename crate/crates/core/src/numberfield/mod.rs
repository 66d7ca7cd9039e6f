//! Real quadratic fields ℚ(√Δ) with reduction at odd unramified primes, and
//! quartic fields ℚ[T]/(χ) with quadratic-subfield detection.

mod quad;
mod quartic;

pub use quad::{norm_class, reduce_mod_prime, NormClass, QuadElem, ResiduePrime, Splitting};
pub use quartic::{has_sqrt, intersection_is_q, quadratic_subfields, resolvent_cubic, QuarticField};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum NumberFieldError {
    #[error("radicand {0} must be squarefree and different from 0 and 1")]
    BadRadicand(i64),
    #[error("bad prime {p}: {reason}")]
    BadPrime { p: u64, reason: String },
    #[error("domain error: {0}")]
    Domain(String),
    #[error("parse error: {0}")]
    Parse(String),
}
