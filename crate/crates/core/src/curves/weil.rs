use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::curve::{FiniteCurve, QuadCurve};
use super::CurveError;
use crate::exact::UniPoly;
use crate::finitefield::FiniteField;
use crate::numberfield::ResiduePrime;

/// Largest field over which points are enumerated.
pub const COUNT_LIMIT: u64 = 1 << 26;

/// `χ(T) = T⁴ − a₁T³ + a₂T² − q·a₁T + q²`, the characteristic polynomial of
/// Frobenius on the Jacobian of a genus-2 curve over 𝔽_q.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WeilPoly {
    pub q: u64,
    pub a1: i64,
    pub a2: i64,
}

impl WeilPoly {
    /// Checks the Weil bounds `a₁² ≤ 16q`, `|a₂| ≤ 6q` and `q + 1 − a₁ ≥ 0`.
    pub fn new(q: u64, a1: i64, a2: i64) -> Result<Self, CurveError> {
        let qi = q as i128;
        let (a1w, a2w) = (a1 as i128, a2 as i128);
        if q < 2 || a1w * a1w > 16 * qi || a2w.abs() > 6 * qi || qi + 1 - a1w < 0 {
            return Err(CurveError::WeilBounds { q, a1, a2 });
        }
        Ok(WeilPoly { q, a1, a2 })
    }

    /// From `N₁ = #C(𝔽_q)` and `N₂ = #C(𝔽_{q²})`.
    pub fn from_counts(q: u64, n1: u64, n2: u64) -> Result<Self, CurveError> {
        let (qi, n1, n2) = (q as i128, n1 as i128, n2 as i128);
        let a1 = qi + 1 - n1;
        let twice = a1 * a1 - (qi * qi + 1 - n2);
        if twice % 2 != 0 {
            return Err(CurveError::Inconsistent(format!("a₂ = {twice}/2 is not an integer")));
        }
        let a1 = i64::try_from(a1).map_err(|_| CurveError::Inconsistent("a₁ out of range".into()))?;
        let a2 = i64::try_from(twice / 2).map_err(|_| CurveError::Inconsistent("a₂ out of range".into()))?;
        Self::new(q, a1, a2).map_err(|e| CurveError::Inconsistent(e.to_string()))
    }

    /// `χ(T)`, ascending coefficients `q², −q·a₁, a₂, −a₁, 1`.
    pub fn chi(&self) -> UniPoly {
        let q = BigInt::from(self.q);
        let (a1, a2) = (BigInt::from(self.a1), BigInt::from(self.a2));
        UniPoly::from_bigints(&[&q * &q, -(&q * &a1), a2, -a1, BigInt::from(1)])
    }

    /// `P(T) = T⁴·χ(1/T) = 1 − a₁T + a₂T² − q·a₁T³ + q²T⁴`.
    pub fn l_poly(&self) -> UniPoly {
        self.chi().reversed(4)
    }

    /// `#Jac(𝔽_q) = χ(1)`.
    pub fn jacobian_order(&self) -> BigInt {
        let q = BigInt::from(self.q);
        let (a1, a2) = (BigInt::from(self.a1), BigInt::from(self.a2));
        BigInt::from(1) - &a1 + a2 - &q * &a1 + &q * &q
    }

    /// Weil data of the quadratic twist by a non-square.
    pub fn quadratic_twist(&self) -> WeilPoly {
        WeilPoly { q: self.q, a1: -self.a1, a2: self.a2 }
    }

    /// The residue characteristic, the least prime factor of `q`.
    pub fn characteristic(&self) -> u64 {
        (2..).find(|d| self.q.is_multiple_of(*d)).expect("q ≥ 2")
    }
}

/// Points of the smooth projective model over the curve's own field.
///
/// Affine: each `x` contributes 1 if `f(x) = 0`, 2 if `f(x)` is a nonzero
/// square, 0 otherwise. Infinity: 1 for degree 5; for degree 6, 2 or 0 as
/// the leading coefficient is a square or not.
pub fn count_points(curve: &FiniteCurve) -> Result<u64, CurveError> {
    let k = curve.field();
    if k.q() > COUNT_LIMIT {
        return Err(CurveError::TooLarge(k.q()));
    }
    let f = curve.f();
    let mut n = 0u64;
    for x in k.elements() {
        let y2 = f.eval(&x);
        if y2.is_zero() {
            n += 1;
        } else if y2.is_square_fast() {
            n += 2;
        }
    }
    n += match curve.degree() {
        5 => 1,
        _ if f.leading().expect("nonzero").is_square() => 2,
        _ => 0,
    };
    Ok(n)
}

/// The quadratic extension of a curve's field, within the supported tower.
pub fn quadratic_extension(k: &FiniteField) -> Result<&'static FiniteField, CurveError> {
    if k.degree() > 2 {
        return Err(CurveError::Domain(format!("no quadratic extension of 𝔽_{} available", k.q())));
    }
    FiniteField::get(k.p(), 2 * k.degree()).map_err(|e| CurveError::Domain(e.to_string()))
}

/// Weil data of a curve over 𝔽_p or 𝔽_{p²}, by counting over the field and its
/// quadratic extension.
pub fn weil_poly_finite(curve: &FiniteCurve) -> Result<WeilPoly, CurveError> {
    let k = curve.field();
    let ext = quadratic_extension(k)?;
    let n1 = count_points(curve)?;
    let n2 = count_points(&curve.base_change(ext)?)?;
    WeilPoly::from_counts(k.q(), n1, n2)
}

/// Weil data of the reduction at the prime above `p` selected by `label`.
pub fn weil_poly(curve: &QuadCurve, p: u64, label: Option<u8>) -> Result<WeilPoly, CurveError> {
    weil_poly_finite(&curve.reduce(p, label)?)
}

/// As [`weil_poly`] at an already constructed prime.
pub fn weil_poly_at(curve: &QuadCurve, prime: &ResiduePrime) -> Result<WeilPoly, CurveError> {
    weil_poly_finite(&curve.reduce_at(prime)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curves::example_curve;
    use crate::exact::Poly;

    #[test]
    fn sextic_over_f5() {
        let k = FiniteField::get(5, 1).unwrap();
        let mut c = vec![k.zero(); 7];
        c[0] = k.one();
        c[6] = k.one();
        let curve = FiniteCurve::new(Poly::new(c)).unwrap();
        assert_eq!(count_points(&curve).unwrap(), 6);
    }

    #[test]
    fn quintic_has_one_point_at_infinity() {
        let k = FiniteField::get(7, 1).unwrap();
        let f = Poly::new(vec![k.zero(), k.one(), k.zero(), k.zero(), k.zero(), k.one()]);
        let curve = FiniteCurve::new(f).unwrap();
        // y² = x⁵ + x over 𝔽₇: affine count plus exactly one point at infinity
        let affine: u64 = k
            .elements()
            .map(|x| {
                let v = curve.f().eval(&x);
                if v.is_zero() {
                    1
                } else if v.is_square() {
                    2
                } else {
                    0
                }
            })
            .sum();
        assert_eq!(count_points(&curve).unwrap(), affine + 1);
    }

    #[test]
    fn nonsquare_leading_coefficient_has_no_points_at_infinity() {
        let k = FiniteField::get(5, 1).unwrap();
        let two = k.from_int(2);
        let mut c = vec![k.zero(); 7];
        c[0] = two;
        c[6] = two;
        let curve = FiniteCurve::new(Poly::new(c)).unwrap();
        let affine: u64 = k
            .elements()
            .map(|x| {
                let v = curve.f().eval(&x);
                if v.is_zero() {
                    1
                } else if v.is_square() {
                    2
                } else {
                    0
                }
            })
            .sum();
        assert_eq!(count_points(&curve).unwrap(), affine);
    }

    #[test]
    fn example_weil_data() {
        // frozen from an independent enumeration over 𝔽₂₅/𝔽₆₂₅ and 𝔽₁₂₁/𝔽₁₄₆₄₁
        let e = example_curve();
        assert_eq!(weil_poly(&e, 5, None).unwrap(), WeilPoly { q: 25, a1: 8, a2: 34 });
        assert_eq!(weil_poly(&e, 11, None).unwrap(), WeilPoly { q: 121, a1: 28, a2: 390 });
    }

    #[test]
    fn chi_and_order() {
        let w = WeilPoly::new(25, 8, 34).unwrap();
        assert_eq!(w.chi(), UniPoly::from_ints(&[625, -200, 34, -8, 1]));
        assert_eq!(w.l_poly(), UniPoly::from_ints(&[1, -8, 34, -200, 625]));
        assert_eq!(w.jacobian_order(), BigInt::from(1 - 8 + 34 - 200 + 625));
        assert_eq!(w.characteristic(), 5);
        assert!(WeilPoly::new(25, 21, 0).is_err());
        assert!(WeilPoly::new(25, 0, 151).is_err());
    }

    #[test]
    fn non_integral_a2_is_rejected() {
        assert!(matches!(WeilPoly::from_counts(25, 18, 631), Err(CurveError::Inconsistent(_))));
        assert_eq!(WeilPoly::from_counts(25, 18, 630).unwrap(), WeilPoly { q: 25, a1: 8, a2: 34 });
    }
}
