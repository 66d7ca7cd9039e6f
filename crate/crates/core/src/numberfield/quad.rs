use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::NumberFieldError;
use crate::exact::integer::{is_squarefree, rational_sqrt};
use crate::exact::{parse_rational, Field, Ring};
use crate::finitefield::{legendre, sqrt_mod_p, FiniteField, FqElem};

/// `a + b√Δ` in the quadratic field ℚ(√Δ).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QuadElem {
    a: BigRational,
    b: BigRational,
    delta: i64,
}

fn check_delta(delta: i64) -> Result<(), NumberFieldError> {
    if delta == 1 || !is_squarefree(delta) {
        return Err(NumberFieldError::BadRadicand(delta));
    }
    Ok(())
}

impl QuadElem {
    pub fn new(a: BigRational, b: BigRational, delta: i64) -> Result<Self, NumberFieldError> {
        check_delta(delta)?;
        Ok(QuadElem { a, b, delta })
    }

    pub fn from_rational(a: BigRational, delta: i64) -> Result<Self, NumberFieldError> {
        Self::new(a, BigRational::zero(), delta)
    }

    pub fn from_int(n: i64, delta: i64) -> Result<Self, NumberFieldError> {
        Self::from_rational(BigRational::from_integer(n.into()), delta)
    }

    /// `√Δ`.
    pub fn sqrt_delta(delta: i64) -> Result<Self, NumberFieldError> {
        Self::new(BigRational::zero(), BigRational::one(), delta)
    }

    pub fn rational_part(&self) -> &BigRational {
        &self.a
    }

    pub fn radical_part(&self) -> &BigRational {
        &self.b
    }

    pub fn delta(&self) -> i64 {
        self.delta
    }

    pub fn is_rational(&self) -> bool {
        Zero::is_zero(&self.b)
    }

    /// `a² − Δb²`.
    pub fn norm(&self) -> BigRational {
        &self.a * &self.a - BigRational::from_integer(self.delta.into()) * &self.b * &self.b
    }

    pub fn trace(&self) -> BigRational {
        &self.a + &self.a
    }

    /// The nontrivial automorphism `a + b√Δ ↦ a − b√Δ`.
    pub fn conjugate(&self) -> Self {
        QuadElem { a: self.a.clone(), b: -self.b.clone(), delta: self.delta }
    }

    fn check_same(&self, other: &Self) {
        assert_eq!(self.delta, other.delta, "mixed quadratic fields");
    }

    /// A square root in ℚ(√Δ), if one exists.
    pub fn sqrt(&self) -> Option<Self> {
        let d = BigRational::from_integer(self.delta.into());
        let lift = |a: BigRational, b: BigRational| QuadElem { a, b, delta: self.delta };
        if Zero::is_zero(&self.b) {
            if let Some(r) = rational_sqrt(&self.a) {
                return Some(lift(r, BigRational::zero()));
            }
            // a = Δ v²
            return rational_sqrt(&(&self.a / &d)).map(|v| lift(BigRational::zero(), v));
        }
        // (u + v√Δ)² = u² + Δv² + 2uv√Δ, and u² − Δv² = ±√N.
        let n = rational_sqrt(&self.norm())?;
        let two = BigRational::from_integer(2.into());
        for s in [n.clone(), -n] {
            let Some(u) = rational_sqrt(&((&self.a + &s) / &two)) else {
                continue;
            };
            if Zero::is_zero(&u) {
                continue;
            }
            let v = &self.b / (&two * &u);
            let cand = lift(u, v);
            if cand.mul(&cand) == *self {
                return Some(cand);
            }
        }
        None
    }

    /// Parses `"a+b*sqrt(D)"` in either term order, allowing an implied
    /// coefficient (`"sqrt(2)"`, `"-sqrt(2)+1"`). The radicand fixes the field.
    pub fn parse(s: &str) -> Result<Self, NumberFieldError> {
        Self::parse_impl(s, None)
    }

    /// As [`QuadElem::parse`], but also accepts a plain rational, placed in ℚ(√Δ).
    pub fn parse_in(s: &str, delta: i64) -> Result<Self, NumberFieldError> {
        Self::parse_impl(s, Some(delta))
    }

    fn parse_impl(s: &str, delta: Option<i64>) -> Result<Self, NumberFieldError> {
        let bad = |why: &str| NumberFieldError::Parse(format!("{s:?}: {why}"));
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(bad("empty"));
        }
        // Signed terms, split at + and - outside parentheses.
        let mut terms: Vec<String> = Vec::new();
        let mut depth = 0;
        let mut cur = String::new();
        for ch in compact.chars() {
            match ch {
                '(' => depth += 1,
                ')' => depth -= 1,
                '+' | '-' if depth == 0 && !cur.is_empty() => {
                    terms.push(std::mem::take(&mut cur));
                }
                _ => {}
            }
            cur.push(ch);
        }
        terms.push(cur);
        if terms.len() > 2 {
            return Err(bad("expected at most two terms"));
        }
        let mut a: Option<BigRational> = None;
        let mut b: Option<BigRational> = None;
        let mut found_delta: Option<i64> = None;
        for term in &terms {
            if let Some(idx) = term.find("sqrt(") {
                if b.is_some() {
                    return Err(bad("two radical terms"));
                }
                let inner = term[idx + 5..].strip_suffix(')').ok_or_else(|| bad("unclosed sqrt"))?;
                let d: i64 = inner.parse().map_err(|_| bad("radicand is not an integer"))?;
                let coeff = term[..idx].strip_suffix('*').unwrap_or(&term[..idx]);
                let coeff = match coeff {
                    "" | "+" => BigRational::one(),
                    "-" => -BigRational::one(),
                    c => parse_rational(c).map_err(|e| bad(&e.to_string()))?,
                };
                b = Some(coeff);
                found_delta = Some(d);
            } else {
                if a.is_some() {
                    return Err(bad("two rational terms"));
                }
                a = Some(parse_rational(term).map_err(|e| bad(&e.to_string()))?);
            }
        }
        let delta = match (found_delta, delta) {
            (Some(d), Some(e)) if d != e => {
                return Err(bad(&format!("radicand {d} does not match field ℚ(√{e})")));
            }
            (Some(d), _) | (None, Some(d)) => d,
            (None, None) => return Err(bad("missing sqrt(D) term")),
        };
        Self::new(a.unwrap_or_else(BigRational::zero), b.unwrap_or_else(BigRational::zero), delta)
    }
}

impl fmt::Debug for QuadElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Normalized text form `a±|b|*sqrt(D)`, e.g. `12-33/2*sqrt(2)`.
impl fmt::Display for QuadElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.b.is_negative() { '-' } else { '+' };
        write!(f, "{}{}{}*sqrt({})", self.a, sign, self.b.abs(), self.delta)
    }
}

impl Serialize for QuadElem {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for QuadElem {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        QuadElem::parse(&s).map_err(serde::de::Error::custom)
    }
}

impl Ring for QuadElem {
    fn zero_like(&self) -> Self {
        QuadElem { a: BigRational::zero(), b: BigRational::zero(), delta: self.delta }
    }
    fn one_like(&self) -> Self {
        QuadElem { a: BigRational::one(), b: BigRational::zero(), delta: self.delta }
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(&self.a) && Zero::is_zero(&self.b)
    }
    fn add(&self, o: &Self) -> Self {
        self.check_same(o);
        QuadElem { a: &self.a + &o.a, b: &self.b + &o.b, delta: self.delta }
    }
    fn sub(&self, o: &Self) -> Self {
        self.check_same(o);
        QuadElem { a: &self.a - &o.a, b: &self.b - &o.b, delta: self.delta }
    }
    fn mul(&self, o: &Self) -> Self {
        self.check_same(o);
        let d = BigRational::from_integer(self.delta.into());
        QuadElem {
            a: &self.a * &o.a + d * &self.b * &o.b,
            b: &self.a * &o.b + &self.b * &o.a,
            delta: self.delta,
        }
    }
    fn neg(&self) -> Self {
        QuadElem { a: -self.a.clone(), b: -self.b.clone(), delta: self.delta }
    }
    fn mul_int(&self, n: i64) -> Self {
        let n = BigRational::from_integer(n.into());
        QuadElem { a: &self.a * &n, b: &self.b * &n, delta: self.delta }
    }
}

impl Field for QuadElem {
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm();
        let c = self.conjugate();
        Some(QuadElem { a: &c.a / &n, b: &c.b / &n, delta: self.delta })
    }
}

/// Square class of `Nm(α)` relative to `−2` and `−2Δ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum NormClass {
    MinusTwoSquare,
    MinusTwoDeltaSquare,
    Neither,
}

/// Classifies `Nm(α)` as `−2·□`, `−2Δ·□` or neither (`□` a nonzero rational square).
pub fn norm_class(alpha: &QuadElem) -> Result<NormClass, NumberFieldError> {
    if alpha.is_zero() {
        return Err(NumberFieldError::Domain("norm class of zero".into()));
    }
    let n = alpha.norm();
    let minus_two = BigRational::from_integer((-2).into());
    if rational_sqrt(&(&n / &minus_two)).is_some() {
        return Ok(NormClass::MinusTwoSquare);
    }
    let minus_two_delta = BigRational::from_integer((-2 * alpha.delta).into());
    if rational_sqrt(&(&n / &minus_two_delta)).is_some() {
        return Ok(NormClass::MinusTwoDeltaSquare);
    }
    Ok(NormClass::Neither)
}

/// How a rational prime decomposes in ℚ(√Δ).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Splitting {
    Inert,
    Split,
}

/// A prime of ℚ(√Δ) above an odd unramified rational prime, with its residue
/// field and the image of `√Δ` there.
///
/// Inert: residue field 𝔽_{p²}, `√Δ ↦` the first square root of Δ in
/// coordinate order. Split: residue field 𝔽_p, `√Δ ↦ r₁` (label 1) or `r₂`
/// (label 2), where `r₁ < r₂` are the roots of `T² − Δ` as least residues.
#[derive(Clone, Copy, Debug)]
pub struct ResiduePrime {
    pub p: u64,
    pub delta: i64,
    pub splitting: Splitting,
    pub label: u8,
    field: &'static FiniteField,
    sqrt_delta: FqElem<'static>,
}

impl ResiduePrime {
    /// `label` selects the prime above a split `p` (1 or 2, default 1); it must
    /// be absent or 1 for inert `p`.
    pub fn new(delta: i64, p: u64, label: Option<u8>) -> Result<Self, NumberFieldError> {
        check_delta(delta)?;
        let reject = |why: String| NumberFieldError::BadPrime { p, reason: why };
        if p == 2 {
            return Err(reject("residue characteristic 2 is not supported".into()));
        }
        let leg = legendre(delta, p);
        if leg == 0 {
            return Err(reject(format!("ramified in ℚ(√{delta})")));
        }
        if leg == -1 {
            if label.is_some_and(|l| l != 1) {
                return Err(reject("inert prime has a single prime above it".into()));
            }
            let field = FiniteField::get(p, 2).map_err(|e| reject(e.to_string()))?;
            let target = field.from_int(delta);
            let sqrt_delta = field.elements().find(|x| *x * *x == target).expect("Δ is a square in 𝔽_{p²}");
            return Ok(ResiduePrime { p, delta, splitting: Splitting::Inert, label: 1, field, sqrt_delta });
        }
        let label = label.unwrap_or(1);
        if !(1..=2).contains(&label) {
            return Err(reject(format!("prime label {label} must be 1 or 2")));
        }
        let field = FiniteField::get(p, 1).map_err(|e| reject(e.to_string()))?;
        let roots = sqrt_mod_p(delta, p);
        let r = roots[label as usize - 1];
        Ok(ResiduePrime {
            p,
            delta,
            splitting: Splitting::Split,
            label,
            field,
            sqrt_delta: field.from_int(r as i64),
        })
    }

    pub fn residue_field(&self) -> &'static FiniteField {
        self.field
    }

    /// Image of `√Δ` in the residue field.
    pub fn sqrt_delta_image(&self) -> FqElem<'static> {
        self.sqrt_delta
    }

    /// Residue field size.
    pub fn q(&self) -> u64 {
        self.field.q()
    }

    pub fn reduce_rational(&self, x: &BigRational) -> Result<FqElem<'static>, NumberFieldError> {
        let p = BigInt::from(self.p);
        if x.denom().is_multiple_of(&p) {
            return Err(NumberFieldError::BadPrime { p: self.p, reason: format!("denominator of {x} divisible by p") });
        }
        let num = x.numer().mod_floor(&p).to_i64().expect("residue fits");
        let den = x.denom().mod_floor(&p).to_i64().expect("residue fits");
        let den_inv = self.field.from_int(den).inverse().expect("p does not divide the denominator");
        Ok(self.field.from_int(num) * den_inv)
    }

    pub fn reduce(&self, x: &QuadElem) -> Result<FqElem<'static>, NumberFieldError> {
        if x.delta != self.delta {
            return Err(NumberFieldError::Domain(format!(
                "element of ℚ(√{}) reduced at a prime of ℚ(√{})",
                x.delta, self.delta
            )));
        }
        Ok(self.reduce_rational(&x.a)? + self.reduce_rational(&x.b)? * self.sqrt_delta)
    }
}

/// Reduction of `x` at the prime above `p` selected by `label` (see [`ResiduePrime`]).
pub fn reduce_mod_prime(x: &QuadElem, p: u64, label: Option<u8>) -> Result<FqElem<'static>, NumberFieldError> {
    ResiduePrime::new(x.delta, p, label)?.reduce(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ratio;

    fn q(a: i64, b: i64, d: i64) -> QuadElem {
        QuadElem::new(BigRational::from_integer(a.into()), BigRational::from_integer(b.into()), d).unwrap()
    }

    #[test]
    fn norms_and_conjugates() {
        assert_eq!(q(0, 1, 2).norm(), ratio(-2, 1));
        assert_eq!(q(1, 0, 2).norm(), ratio(1, 1));
        assert_eq!(q(1, 1, 2).norm(), ratio(-1, 1));
        assert_eq!(q(0, 1, 2).conjugate(), q(0, -1, 2));
        assert_eq!(q(3, 0, 2).conjugate(), q(3, 0, 2));
        assert_eq!(q(1, 2, 5).conjugate(), q(1, -2, 5));
    }

    #[test]
    fn radicand_checks() {
        assert!(QuadElem::new(ratio(1, 1), ratio(1, 1), 1).is_err());
        assert!(QuadElem::new(ratio(1, 1), ratio(1, 1), 0).is_err());
        assert!(QuadElem::new(ratio(1, 1), ratio(1, 1), 8).is_err());
        assert!(QuadElem::new(ratio(1, 1), ratio(1, 1), -2).is_ok());
    }

    #[test]
    fn norm_classes() {
        assert_eq!(norm_class(&q(0, 1, 2)).unwrap(), NormClass::MinusTwoSquare);
        assert_eq!(norm_class(&q(1, 1, 2)).unwrap(), NormClass::MinusTwoDeltaSquare);
        assert_eq!(norm_class(&q(3, 0, 2)).unwrap(), NormClass::Neither);
        assert!(norm_class(&q(0, 0, 2)).is_err());
    }

    #[test]
    fn text_format() {
        let x = QuadElem::parse("-33/2*sqrt(2)+12").unwrap();
        assert_eq!(x.to_string(), "12-33/2*sqrt(2)");
        assert_eq!(QuadElem::parse("0+1*sqrt(2)").unwrap(), q(0, 1, 2));
        assert_eq!(QuadElem::parse("sqrt(5)").unwrap(), q(0, 1, 5));
        assert_eq!(QuadElem::parse("1 - sqrt(3)").unwrap(), q(1, -1, 3));
        assert_eq!(QuadElem::parse_in("-7/3", 2).unwrap(), QuadElem::from_rational(ratio(-7, 3), 2).unwrap());
        assert_eq!(q(0, 1, 2).to_string(), "0+1*sqrt(2)");
        assert!(QuadElem::parse("1.5+sqrt(2)").is_err());
        assert!(QuadElem::parse("3").is_err());
        assert!(QuadElem::parse_in("sqrt(3)", 2).is_err());
        assert!(QuadElem::parse("1+sqrt(4)").is_err());
    }

    #[test]
    fn square_roots() {
        let s = q(3, 2, 2); // (1 + √2)²
        let r = s.sqrt().unwrap();
        assert_eq!(r.mul(&r), s);
        assert_eq!(q(8, 0, 2).sqrt().unwrap().mul(&q(8, 0, 2).sqrt().unwrap()), q(8, 0, 2));
        assert!(q(0, 1, 2).sqrt().is_none());
        assert!(q(3, 0, 2).sqrt().is_none());
    }

    #[test]
    fn reductions() {
        let s2 = q(0, 1, 2);
        let r = reduce_mod_prime(&s2, 5, None).unwrap();
        assert_eq!(r.field().q(), 25);
        assert_eq!(r * r, r.field().from_int(2));
        let r = reduce_mod_prime(&s2, 7, None).unwrap();
        assert_eq!(r, FiniteField::get(7, 1).unwrap().from_int(3));
        let r = reduce_mod_prime(&s2, 7, Some(2)).unwrap();
        assert_eq!(r, FiniteField::get(7, 1).unwrap().from_int(4));
        assert_eq!(reduce_mod_prime(&q(1, 0, 2), 11, None).unwrap(), FiniteField::get(11, 2).unwrap().one());
        assert!(reduce_mod_prime(&s2, 2, None).is_err());
        assert!(reduce_mod_prime(&q(0, 1, 3), 3, None).is_err());
        let half = QuadElem::from_rational(ratio(1, 5), 2).unwrap();
        assert!(reduce_mod_prime(&half, 5, None).is_err());
        assert!(reduce_mod_prime(&s2, 5, Some(2)).is_err());
    }
}
