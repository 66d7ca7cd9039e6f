use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::NumberFieldError;
use crate::exact::integer::{is_perfect_square, rational_sqrt, squarefree_class};
use crate::exact::{discriminant, factor_quartic_over_q, rational_roots, UniPoly};

/// Discriminants above this size are not offered as subfield candidates; the
/// resolvent candidates are already complete, and the disc candidate would
/// only cost a large squarefree-part computation.
const DISC_CANDIDATE_LIMIT: u64 = 1_000_000_000_000;

/// ℚ[T]/(χ) for a monic irreducible integer quartic χ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuarticField {
    chi: UniPoly,
    tag: String,
}

impl QuarticField {
    /// Checks that `chi` is a monic integer quartic irreducible over ℚ.
    pub fn new(chi: UniPoly, tag: impl Into<String>) -> Result<Self, NumberFieldError> {
        let fac = factor_quartic_over_q(&chi).map_err(|e| NumberFieldError::Domain(e.to_string()))?;
        if !fac.is_irreducible() {
            return Err(NumberFieldError::Domain(format!("{chi} is reducible over ℚ")));
        }
        Ok(QuarticField { chi, tag: tag.into() })
    }

    pub fn defining_poly(&self) -> &UniPoly {
        &self.chi
    }

    /// Where the field came from (curve and prime).
    pub fn tag(&self) -> &str {
        &self.tag
    }

    fn c(&self, i: usize) -> BigRational {
        self.chi.coeff(i).cloned().unwrap_or_else(BigRational::zero)
    }
}

/// Resolvent cubic of a monic quartic `T⁴ + c₃T³ + c₂T² + c₁T + c₀`: the monic
/// cubic whose roots are `θ₁θ₂ + θ₃θ₄`, `θ₁θ₃ + θ₂θ₄`, `θ₁θ₄ + θ₂θ₃`.
pub fn resolvent_cubic(chi: &UniPoly) -> UniPoly {
    let c = |i: usize| chi.coeff(i).cloned().unwrap_or_else(BigRational::zero);
    let (c0, c1, c2, c3) = (c(0), c(1), c(2), c(3));
    let four = BigRational::from_integer(4.into());
    UniPoly::new(vec![
        &four * &c0 * &c2 - &c1 * &c1 - &c0 * &c3 * &c3,
        &c1 * &c3 - &four * &c0,
        -c2,
        BigRational::one(),
    ])
}

/// Whether ℚ(√m) embeds in `k`.
///
/// Decides whether χ splits over ℚ(√m) as `(T² + uT + v)(T² + ūT + v̄)`.
/// Writing `u = u₀ + u₁√m`, `v = v₀ + v₁√m`, comparing coefficients gives
/// `u₀ = c₃/2`, `2v₀ = v + v̄` a rational root `r` of the resolvent cubic,
/// `m u₁² = r + u₀² − c₂`, `2(u₀v₀ − m u₁v₁) = c₁`, `v₀² − m v₁² = c₀`.
/// Each rational root `r` leaves a finite system, solved exactly.
pub fn has_sqrt(k: &QuarticField, m: &BigInt) -> bool {
    if m.is_zero() || m.is_one() {
        return false;
    }
    let mq = BigRational::from_integer(m.clone());
    let two = BigRational::from_integer(2.into());
    let (c0, c1, c2, c3) = (k.c(0), k.c(1), k.c(2), k.c(3));
    let u0 = &c3 / &two;
    for r in rational_roots(&resolvent_cubic(&k.chi)) {
        let v0 = &r / &two;
        let s = &r + &u0 * &u0 - &c2;
        if !s.is_zero() {
            let Some(u1) = rational_sqrt(&(&s / &mq)) else {
                continue;
            };
            let v1 = (&u0 * &v0 - &c1 / &two) / (&mq * &u1);
            if &v0 * &v0 - &mq * &v1 * &v1 == c0 {
                return true;
            }
        } else {
            if &u0 * &v0 * &two != c1 {
                continue;
            }
            match rational_sqrt(&((&v0 * &v0 - &c0) / &mq)) {
                Some(v1) if !v1.is_zero() => return true,
                _ => {}
            }
        }
    }
    false
}

/// Squarefree `m` (≠ 0, 1) with ℚ(√m) ⊂ `k`.
///
/// Candidates come from the Weil-quartic real subfield (when χ has the shape
/// `T⁴ − aT³ + bT² − aqT + q²`), from disc(χ) when it is small, and from the
/// resolvent data `4r + c₃² − 4c₂`, `r² − 4c₀` for each rational root `r`. The
/// last family alone is complete, since every quadratic subfield produces one
/// of these values in the system solved by [`has_sqrt`]. Every candidate is
/// confirmed by `has_sqrt`.
pub fn quadratic_subfields(k: &QuarticField) -> BTreeSet<BigInt> {
    let (c0, c1, c2, c3) = (k.c(0), k.c(1), k.c(2), k.c(3));
    let four = BigRational::from_integer(4.into());
    let mut raw: Vec<BigRational> = Vec::new();
    if let Some(q) = weil_q(&c0, &c1, &c3) {
        // α + q/α satisfies T² − aT + (b − 2q) with a = −c₃, b = c₂.
        let q = BigRational::from_integer(q);
        raw.push(&c3 * &c3 - &four * &c2 + BigRational::from_integer(8.into()) * q);
    }
    if let Ok(d) = discriminant(&k.chi) {
        if d.abs() <= BigRational::from_integer(DISC_CANDIDATE_LIMIT.into()) {
            raw.push(d);
        }
    }
    for r in rational_roots(&resolvent_cubic(&k.chi)) {
        raw.push(&four * &r + &c3 * &c3 - &four * &c2);
        raw.push(&r * &r - &four * &c0);
    }
    raw.into_iter()
        .filter(|x| !x.is_zero())
        .filter_map(|x| squarefree_class(&x).ok())
        .filter(|m| !m.is_one())
        .collect::<BTreeSet<_>>()
        .into_iter()
        .filter(|m| has_sqrt(k, m))
        .collect()
}

/// `q` if `c₀ = q²` with `q > 0` and `c₁ = q·c₃`.
fn weil_q(c0: &BigRational, c1: &BigRational, c3: &BigRational) -> Option<BigInt> {
    if !c0.is_integer() || !c0.is_positive() || !is_perfect_square(c0.numer()) {
        return None;
    }
    let q = c0.numer().sqrt();
    (*c1 == BigRational::from_integer(q.clone()) * c3).then_some(q)
}

/// Whether `k1 ∩ k2 = ℚ` inside a common algebraic closure.
///
/// Two distinct quartic fields meet in ℚ or in a quadratic field, so disjoint
/// quadratic-subfield sets decide the question; identical defining
/// polynomials mean identical fields. Two different polynomials defining the
/// same CM Weil field share its real quadratic subfield and are caught too;
/// for quartic fields without any quadratic subfield, equality under
/// different polynomials is not detected.
pub fn intersection_is_q(k1: &QuarticField, k2: &QuarticField) -> bool {
    if k1.chi == k2.chi {
        return false;
    }
    quadratic_subfields(k1).is_disjoint(&quadratic_subfields(k2))
}
