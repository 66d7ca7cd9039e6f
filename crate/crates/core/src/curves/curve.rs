use std::fmt;

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use super::CurveError;
use crate::exact::{discriminant, Field, Poly, Ring};
use crate::finitefield::{FiniteField, FqElem};
use crate::numberfield::{QuadElem, ResiduePrime};
use crate::symbolic::FamilyPolynomials;

/// Which field a curve is defined over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum FieldTag {
    Quadratic { delta: i64 },
    Finite { p: u64, d: u8 },
}

/// Coefficient fields a curve may live over.
pub trait CurveField: Field + fmt::Display {
    fn tag(&self) -> FieldTag;
}

impl CurveField for QuadElem {
    fn tag(&self) -> FieldTag {
        FieldTag::Quadratic { delta: self.delta() }
    }
}

impl CurveField for FqElem<'_> {
    fn tag(&self) -> FieldTag {
        FieldTag::Finite { p: self.field().p(), d: self.field().degree() }
    }
}

/// `y² = f(x)` with `f` separable of degree 5 or 6.
#[derive(Clone, Debug, PartialEq)]
pub struct Genus2Curve<K: CurveField> {
    f: Poly<K>,
}

pub type QuadCurve = Genus2Curve<QuadElem>;
pub type FiniteCurve = Genus2Curve<FqElem<'static>>;

impl<K: CurveField> Genus2Curve<K> {
    pub fn new(f: Poly<K>) -> Result<Self, CurveError> {
        let deg = f.degree().unwrap_or(0);
        if !(5..=6).contains(&deg) {
            return Err(CurveError::Degree(deg));
        }
        let disc = discriminant(&f).expect("positive degree");
        if disc.is_zero() {
            return Err(CurveError::Singular);
        }
        Ok(Genus2Curve { f })
    }

    pub fn f(&self) -> &Poly<K> {
        &self.f
    }

    pub fn degree(&self) -> usize {
        self.f.degree().expect("nonzero")
    }

    pub fn field_tag(&self) -> FieldTag {
        self.f.leading().expect("nonzero").tag()
    }

    /// `y² = α·f(x)`, the model of `αy² = f(x)` after `y ↦ y/α`.
    pub fn twist(&self, alpha: &K) -> Result<Self, CurveError> {
        if alpha.is_zero() {
            return Err(CurveError::Domain("twist by zero".into()));
        }
        Ok(Genus2Curve { f: self.f.scale(alpha) })
    }

    /// Coefficients as strings, ascending.
    pub fn coeff_strings(&self) -> Vec<String> {
        self.f.coeffs().iter().map(|c| c.to_string()).collect()
    }

    pub fn to_json(&self) -> CurveJson {
        CurveJson { field: self.field_tag(), f: self.coeff_strings() }
    }
}

impl<K: CurveField> fmt::Display for Genus2Curve<K> {
    fn fmt(&self, fm: &mut fmt::Formatter<'_>) -> fmt::Result {
        fm.write_str("y^2 = ")?;
        let mut first = true;
        for (i, c) in self.f.coeffs().iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                fm.write_str(" + ")?;
            }
            first = false;
            match i {
                0 => write!(fm, "({c})")?,
                1 => write!(fm, "({c})*x")?,
                _ => write!(fm, "({c})*x^{i}")?,
            }
        }
        Ok(())
    }
}

/// Curve interchange format: `{"field": {...}, "f": [ascending coefficients]}`.
///
/// Quadratic-field coefficients use the `a+b*sqrt(D)` text form (plain
/// rationals accepted on input); finite-field coefficients are comma-separated
/// coordinate lists such as `"1,4"`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveJson {
    pub field: FieldTag,
    pub f: Vec<String>,
}

impl QuadCurve {
    pub fn delta(&self) -> i64 {
        self.f.leading().expect("nonzero").delta()
    }

    pub fn from_json(j: &CurveJson) -> Result<Self, CurveError> {
        let FieldTag::Quadratic { delta } = j.field else {
            return Err(CurveError::Parse("expected a quadratic-field curve".into()));
        };
        let coeffs = j
            .f
            .iter()
            .map(|s| QuadElem::parse_in(s, delta).map_err(|e| CurveError::Parse(e.to_string())))
            .collect::<Result<Vec<_>, _>>()?;
        if coeffs.is_empty() {
            return Err(CurveError::Parse("no coefficients".into()));
        }
        Self::new(Poly::new(coeffs))
    }

    /// Coefficient-wise reduction at the prime above `p` selected by `label`.
    pub fn reduce(&self, p: u64, label: Option<u8>) -> Result<FiniteCurve, CurveError> {
        let prime = ResiduePrime::new(self.delta(), p, label).map_err(|e| bad(p, e))?;
        self.reduce_at(&prime)
    }

    /// Reduction at a given prime; good reduction is decided conservatively
    /// (the reduced model must itself be a genus-2 curve).
    pub fn reduce_at(&self, prime: &ResiduePrime) -> Result<FiniteCurve, CurveError> {
        let p = prime.p;
        let f = self.f.try_map(|c| prime.reduce(c)).map_err(|e| bad(p, e))?;
        FiniteCurve::new(f).map_err(|e| CurveError::BadReduction { p, reason: format!("reduced model: {e}") })
    }
}

fn bad(p: u64, e: impl fmt::Display) -> CurveError {
    CurveError::BadReduction { p, reason: e.to_string() }
}

impl FiniteCurve {
    pub fn field(&self) -> &'static FiniteField {
        self.f.leading().expect("nonzero").field()
    }

    /// The same equation over an extension field.
    pub fn base_change(&self, target: &'static FiniteField) -> Result<FiniteCurve, CurveError> {
        let f = self.f.try_map(|c| c.embed(target)).map_err(|e| CurveError::Domain(e.to_string()))?;
        Ok(Genus2Curve { f })
    }

    pub fn from_json(j: &CurveJson) -> Result<Self, CurveError> {
        let FieldTag::Finite { p, d } = j.field else {
            return Err(CurveError::Parse("expected a finite-field curve".into()));
        };
        let k = FiniteField::get(p, d).map_err(|e| CurveError::Parse(e.to_string()))?;
        let coeffs = j
            .f
            .iter()
            .map(|s| k.parse(s).map_err(|e| CurveError::Parse(e.to_string())))
            .collect::<Result<Vec<_>, _>>()?;
        if coeffs.is_empty() {
            return Err(CurveError::Parse("no coefficients".into()));
        }
        Self::new(Poly::new(coeffs))
    }
}

fn degenerate(e: CurveError) -> CurveError {
    match e {
        CurveError::Singular | CurveError::Degree(_) => CurveError::Degenerate,
        other => other,
    }
}

fn specialized(a: &BigRational, b: &BigRational, c: &BigRational, delta: i64) -> Result<crate::symbolic::SpecializedFamily, CurveError> {
    FamilyPolynomials::standard()
        .specialize(a, b, c, delta)
        .map_err(|e| CurveError::Domain(e.to_string()))
}

/// `C: y² = F₁F₂F₃` at the parameter point `(a, b, c, Δ)`.
pub fn family_curve(a: &BigRational, b: &BigRational, c: &BigRational, delta: i64) -> Result<QuadCurve, CurveError> {
    let [f1, f2, f3] = specialized(a, b, c, delta)?.f;
    QuadCurve::new(f1.mul(&f2).mul(&f3)).map_err(degenerate)
}

/// `C̃: y² = (2/Δ)·L₁L₂L₃` at the parameter point `(a, b, c, Δ)`.
pub fn tilde_curve(a: &BigRational, b: &BigRational, c: &BigRational, delta: i64) -> Result<QuadCurve, CurveError> {
    let [l1, l2, l3] = specialized(a, b, c, delta)?.l;
    let k = QuadElem::from_rational(BigRational::new(2.into(), delta.into()), delta)
        .map_err(|e| CurveError::Domain(e.to_string()))?;
    QuadCurve::new(l1.mul(&l2).mul(&l3).scale(&k)).map_err(degenerate)
}

/// The worked example over ℚ(√2):
/// `y² = (18 − 10√2)x⁶ + (12 − 33/2·√2)x⁵ + (−21 − 11/2·√2)x⁴ + (−24 − 3√2)x³ + (−6 − 5√2)x² − 2√2·x`.
pub fn example_curve() -> QuadCurve {
    let q = |a: (i64, i64), b: (i64, i64)| {
        QuadElem::new(BigRational::new(a.0.into(), a.1.into()), BigRational::new(b.0.into(), b.1.into()), 2)
            .expect("Δ = 2 is squarefree")
    };
    let f = Poly::new(vec![
        q((0, 1), (0, 1)),
        q((0, 1), (-2, 1)),
        q((-6, 1), (-5, 1)),
        q((-24, 1), (-3, 1)),
        q((-21, 1), (-11, 2)),
        q((12, 1), (-33, 2)),
        q((18, 1), (-10, 1)),
    ]);
    QuadCurve::new(f).expect("the example sextic is separable")
}

/// `Some(s)` with `g = s²·f` if the right-hand sides differ by a square of
/// the base field, `None` otherwise.
pub fn same_up_to_square(c1: &QuadCurve, c2: &QuadCurve) -> Option<QuadElem> {
    let (f, g) = (c1.f(), c2.f());
    if f.degree() != g.degree() {
        return None;
    }
    let i = f.coeffs().iter().position(|c| !c.is_zero())?;
    let lambda = g.coeffs()[i].div(&f.coeffs()[i])?;
    if f.scale(&lambda) != *g {
        return None;
    }
    lambda.sqrt()
}
