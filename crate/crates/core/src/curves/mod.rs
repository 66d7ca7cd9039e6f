//! Genus-2 curves of the family and their twists, reduction, point counting,
//! Jacobian arithmetic and the Richelot correspondence.

mod curve;
mod jacobian;
mod richelot;
mod weil;

pub use curve::{
    example_curve, family_curve, same_up_to_square, tilde_curve, CurveField, CurveJson, FieldTag, FiniteCurve,
    Genus2Curve, QuadCurve,
};
pub use jacobian::{FqPoly, Jacobian, MumfordDivisor};
pub use richelot::{check_double, pair_field, Direction, RichelotPair};
pub use weil::{count_points, quadratic_extension, weil_poly, weil_poly_at, weil_poly_finite, WeilPoly, COUNT_LIMIT};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CurveError {
    #[error("degree {0} is not 5 or 6")]
    Degree(usize),
    #[error("f is not separable")]
    Singular,
    #[error("degenerate parameters: the sextic is not separable of degree 5 or 6")]
    Degenerate,
    #[error("bad reduction at {p}: {reason}")]
    BadReduction { p: u64, reason: String },
    #[error("Weil bounds violated by (q, a1, a2) = ({q}, {a1}, {a2})")]
    WeilBounds { q: u64, a1: i64, a2: i64 },
    #[error("internal consistency failure: {0}")]
    Inconsistent(String),
    #[error("field of size {0} is too large to enumerate")]
    TooLarge(u64),
    #[error("no rational Weierstrass point to move to infinity")]
    NoRationalWeierstrassPoint,
    #[error("divisor support is not in general position; retry with another divisor")]
    NonGeneric,
    #[error("{0}")]
    Domain(String),
    #[error("parse error: {0}")]
    Parse(String),
}
