//! Mumford representation and Cantor's algorithm on an odd-degree model.
//!
//! A curve `y² = f(x)` of degree 6 with a rational Weierstrass point `(r, 0)`
//! is isomorphic to `Y² = h(X)` with `h(X) = X⁶·f(r + 1/X)` of degree 5,
//! via `X = 1/(x − r)`, `Y = y/(x − r)³`. The point `(r, 0)` goes to the
//! single point at infinity, which serves as the base point. Degree-5
//! curves are used as they stand.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rand::Rng;

use super::curve::FiniteCurve;
use super::weil::quadratic_extension;
use super::CurveError;
use crate::exact::Poly;
use crate::finitefield::{FiniteField, FqElem};

type Fq = FqElem<'static>;
pub type FqPoly = Poly<Fq>;

/// `[P₁ + … + P_k − k·∞]` as `(u, v)`: `u` monic of degree `k ≤ 2`,
/// `deg v < deg u`, `u | v² − h`. The identity is `(1, 0)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MumfordDivisor {
    pub u: FqPoly,
    pub v: FqPoly,
}

impl MumfordDivisor {
    pub fn is_identity(&self) -> bool {
        self.u.degree() == Some(0)
    }

    /// The same divisor over an extension field.
    pub fn embed(&self, target: &'static FiniteField) -> MumfordDivisor {
        let e = |p: &FqPoly| p.map(|c| c.embed(target).expect("extension of the coefficient field"));
        MumfordDivisor { u: e(&self.u), v: e(&self.v) }
    }

    /// The divisor over a subfield, if its coefficients lie there.
    pub fn descend(&self, target: &'static FiniteField) -> Option<MumfordDivisor> {
        let d = |p: &FqPoly| p.try_map(|c| c.descend(target).ok_or(())).ok();
        Some(MumfordDivisor { u: d(&self.u)?, v: d(&self.v)? })
    }
}

/// Jacobian of a genus-2 curve over a finite field, on an odd-degree model.
#[derive(Clone, Debug, PartialEq)]
pub struct Jacobian {
    h: FqPoly,
    /// `x`-coordinate sent to infinity, or `None` for a curve already of degree 5.
    shift: Option<Fq>,
}

impl Jacobian {
    /// Moves the first rational root of `f` (in element order) to infinity.
    pub fn new(curve: &FiniteCurve) -> Result<Self, CurveError> {
        let f = curve.f();
        if curve.degree() == 5 {
            return Ok(Jacobian { h: f.clone(), shift: None });
        }
        let k = curve.field();
        let r = k
            .elements()
            .find(|x| f.eval(x).is_zero())
            .ok_or(CurveError::NoRationalWeierstrassPoint)?;
        Self::at_root(curve, r)
    }

    /// Moves the root `r` of `f` to infinity: `h(X) = X⁶·f(r + 1/X)`. Also
    /// valid for quintic `f`, whose point at infinity becomes `(0, 0)`.
    pub fn at_root(curve: &FiniteCurve, r: Fq) -> Result<Self, CurveError> {
        let f = curve.f();
        if !f.eval(&r).is_zero() {
            return Err(CurveError::Domain(format!("{r} is not a root of f")));
        }
        let shifted = f.compose(&Poly::new(vec![r, curve.field().one()]));
        let h = shifted.reversed(6);
        debug_assert_eq!(h.degree(), Some(5), "f is separable");
        Ok(Jacobian { h, shift: Some(r) })
    }

    /// `Y² = h(X)` with `h` of degree 5 and nonzero discriminant.
    pub fn from_odd_model(h: FqPoly) -> Result<Self, CurveError> {
        let c = FiniteCurve::new(h.clone())?;
        if c.degree() != 5 {
            return Err(CurveError::Degree(c.degree()));
        }
        Ok(Jacobian { h, shift: None })
    }

    pub fn h(&self) -> &FqPoly {
        &self.h
    }

    pub fn shift(&self) -> Option<Fq> {
        self.shift
    }

    pub fn field(&self) -> &'static FiniteField {
        self.h.leading().expect("nonzero").field()
    }

    pub fn base_change(&self, target: &'static FiniteField) -> Jacobian {
        let e = |c: &Fq| c.embed(target).expect("extension of the coefficient field");
        Jacobian { h: self.h.map(e), shift: self.shift.as_ref().map(e) }
    }

    fn one(&self) -> Fq {
        self.field().one()
    }

    pub fn identity(&self) -> MumfordDivisor {
        MumfordDivisor { u: Poly::constant(self.one()), v: Poly::zero() }
    }

    pub fn is_valid(&self, d: &MumfordDivisor) -> bool {
        let du = d.u.degree();
        d.u.is_monic()
            && du.is_some_and(|n| n <= 2)
            && d.v.degree().is_none_or(|n| Some(n) < du)
            && d.u.divides(&self.h.sub(&d.v.mul(&d.v)))
    }

    /// `[P − ∞]` for `P = (x, y)` on the odd model.
    pub fn point(&self, x: Fq, y: Fq) -> Result<MumfordDivisor, CurveError> {
        if self.h.eval(&x) != y * y {
            return Err(CurveError::Domain(format!("({x}, {y}) is not on the curve")));
        }
        Ok(MumfordDivisor { u: Poly::new(vec![-x, self.one()]), v: Poly::constant(y) })
    }

    pub fn neg(&self, d: &MumfordDivisor) -> MumfordDivisor {
        MumfordDivisor { u: d.u.clone(), v: d.v.neg() }
    }

    /// Cantor composition followed by reduction.
    pub fn add(&self, a: &MumfordDivisor, b: &MumfordDivisor) -> MumfordDivisor {
        let (d1, e1, e2) = a.u.xgcd(&b.u);
        let (d, c1, c2) = d1.xgcd(&a.v.add(&b.v));
        let (s1, s2, s3) = (c1.mul(&e1), c1.mul(&e2), c2);
        let u = a.u.mul(&b.u).div_rem(&d.mul(&d)).0;
        let num = s1
            .mul(&a.u)
            .mul(&b.v)
            .add(&s2.mul(&b.u).mul(&a.v))
            .add(&s3.mul(&a.v.mul(&b.v).add(&self.h)));
        let v = num.div_rem(&d).0.rem(&u);
        self.reduce(u, v)
    }

    fn reduce(&self, mut u: FqPoly, mut v: FqPoly) -> MumfordDivisor {
        while u.degree().expect("nonzero") > 2 {
            let u2 = self.h.sub(&v.mul(&v)).div_rem(&u).0;
            v = v.neg().rem(&u2);
            u = u2;
        }
        let u = u.monic();
        let v = v.rem(&u);
        MumfordDivisor { u, v }
    }

    pub fn double(&self, d: &MumfordDivisor) -> MumfordDivisor {
        self.add(d, d)
    }

    /// `n·D` by double-and-add; negative `n` negates.
    pub fn scalar_mul(&self, d: &MumfordDivisor, n: &BigInt) -> MumfordDivisor {
        let base = if n.is_negative() { self.neg(d) } else { d.clone() };
        let n = n.abs();
        let mut acc = self.identity();
        for i in (0..n.bits()).rev() {
            acc = self.double(&acc);
            if n.bit(i) {
                acc = self.add(&acc, &base);
            }
        }
        if n.is_zero() {
            return self.identity();
        }
        acc
    }

    /// A random affine point with `y ≠ 0`.
    pub fn random_point<R: Rng + ?Sized>(&self, rng: &mut R) -> (Fq, Fq) {
        let k = self.field();
        loop {
            let x = k.random(rng);
            let y2 = self.h.eval(&x);
            if y2.is_zero() {
                continue;
            }
            if let Some(y) = y2.sqrt() {
                return (x, if rng.gen::<bool>() { y } else { -y });
            }
        }
    }

    /// `[P + P^σ − 2∞]` for a random point `P` defined over the quadratic
    /// extension but not over the base field, `σ` the Frobenius of the base.
    fn random_conjugate_pair<R: Rng + ?Sized>(&self, rng: &mut R, ext: &'static FiniteField) -> MumfordDivisor {
        let k = self.field();
        let h = self.h.map(|c| c.embed(ext).expect("extension"));
        loop {
            let x = ext.random(rng);
            if x.descend(k).is_some() {
                continue;
            }
            let y2 = h.eval(&x);
            let Some(y) = y2.sqrt().filter(|_| !y2.is_zero()) else {
                continue;
            };
            let (xs, ys) = (x.pow_u64(k.q()), y.pow_u64(k.q()));
            let u = Poly::new(vec![x * xs, -(x + xs), ext.one()]);
            let slope = (ys - y) * (xs - x).inverse().expect("x is not in the base field");
            let v = Poly::new(vec![y - slope * x, slope]);
            let d = MumfordDivisor { u, v }.descend(k).expect("Frobenius-stable divisor");
            debug_assert!(self.is_valid(&d));
            return d;
        }
    }

    /// A random element of `Jac(𝔽_q)`: the sum of two random rational points,
    /// or a Frobenius-conjugate pair when the quadratic extension is available.
    pub fn random_divisor<R: Rng + ?Sized>(&self, rng: &mut R) -> MumfordDivisor {
        let conj = rng.gen::<bool>();
        match quadratic_extension(self.field()) {
            Ok(ext) if conj => self.random_conjugate_pair(rng, ext),
            _ => {
                let (x1, y1) = self.random_point(rng);
                let (x2, y2) = self.random_point(rng);
                let p1 = self.point(x1, y1).expect("on curve");
                let p2 = self.point(x2, y2).expect("on curve");
                self.add(&p1, &p2)
            }
        }
    }
}
