//! Exact arithmetic substrate: rationals, univariate polynomials, resultants,
//! cyclotomic polynomials and quartic factorization over ℚ.
//!
//! Nothing in this crate uses floating point.

mod cyclotomic;
mod factor;
pub mod integer;
mod poly;
mod resultant;
mod ring;
mod roots;

pub use num_bigint::BigInt;
pub use num_rational::BigRational;

pub use cyclotomic::{cyclotomic, totient, totient_bounded_orders};
pub use factor::{factor_quartic_over_q, power_charpoly, Factorization};
pub use integer::{parse_rational, squarefree_part, squarefree_part_i64};
pub use poly::{Poly, UniPoly};
pub use resultant::{determinant, discriminant, resultant, resultant_generic, resultant_in_z, sylvester_matrix};
pub use ring::{ExactDivision, Field, Ring};
pub use roots::rational_roots;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExactError {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("parse error: {0}")]
    Parse(String),
}

/// Shorthand for an integer-valued rational.
pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

/// Shorthand for `n / d`.
pub fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}
