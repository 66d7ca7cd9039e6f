//! Pushforward of divisors through the Richelot correspondence between
//! `C: y² = F₁F₂F₃` and `C̃: v² = (2/Δ)·L₁L₂L₃` over a finite field.
//!
//! `Γ ⊂ C × C̃` is cut out by `F₁(x)L₁(u) + F₂(x)L₂(u) = 0` and
//! `y·v = F₁(x)L₁(u)(x − u)`. Both curves pass through a Weierstrass point
//! at `x = 0` (resp. `u = 0`), which the odd models of [`Jacobian`] send to
//! infinity through `X = 1/x`, `Y = y/x³`. The base point of `C` goes to
//! the two roots of `L₁`, whose class `T̃₁ = [Γ(∞) − 2∞]` is 2-torsion. So
//! `[P₁ + … + P_k − k∞] ↦ Σ[Γ(P_i) − 2∞] + k·T̃₁`, and the correction only
//! matters for `k = 1`. The transpose is symmetric, with the roots of `F₁`.

use num_rational::BigRational;

use super::curve::{family_curve, tilde_curve, FiniteCurve};
use super::jacobian::{FqPoly, Jacobian, MumfordDivisor};
use super::weil::quadratic_extension;
use super::CurveError;
use crate::exact::{Poly, Ring};
use crate::finitefield::{FiniteField, FqElem};
use crate::numberfield::ResiduePrime;
use crate::symbolic::FamilyPolynomials;

type Fq = FqElem<'static>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    /// `Jac(C) → Jac(C̃)` through `Γ`.
    Forward,
    /// `Jac(C̃) → Jac(C)` through the transpose `Γᵀ`.
    Transpose,
}

/// A family member and its Richelot partner reduced at a common good prime.
#[derive(Clone, Debug)]
pub struct RichelotPair {
    f: [FqPoly; 3],
    l: [FqPoly; 3],
    source: Jacobian,
    target: Jacobian,
}

impl RichelotPair {
    pub fn new(a: &BigRational, b: &BigRational, c: &BigRational, delta: i64, prime: &ResiduePrime) -> Result<Self, CurveError> {
        let curve = family_curve(a, b, c, delta)?.reduce_at(prime)?;
        let tilde = tilde_curve(a, b, c, delta)?.reduce_at(prime)?;
        let specialized = FamilyPolynomials::standard()
            .specialize(a, b, c, delta)
            .map_err(|e| CurveError::Domain(e.to_string()))?;
        let red = |p: &Poly<_>| p.try_map(|x| prime.reduce(x)).map_err(|e| CurveError::BadReduction { p: prime.p, reason: e.to_string() });
        let f = [red(&specialized.f[0])?, red(&specialized.f[1])?, red(&specialized.f[2])?];
        let l = [red(&specialized.l[0])?, red(&specialized.l[1])?, red(&specialized.l[2])?];
        let source = odd_model_at_origin(&curve)?;
        let target = odd_model_at_origin(&tilde)?;
        Ok(RichelotPair { f, l, source, target })
    }

    /// Jacobian of `C`.
    pub fn source(&self) -> &Jacobian {
        &self.source
    }

    /// Jacobian of `C̃`.
    pub fn target(&self) -> &Jacobian {
        &self.target
    }

    /// `F_j` reduced, `j ∈ {1, 2, 3}`.
    pub fn f_poly(&self, j: usize) -> &FqPoly {
        &self.f[j - 1]
    }

    /// `L_j` reduced, `j ∈ {1, 2, 3}`.
    pub fn l_poly(&self, j: usize) -> &FqPoly {
        &self.l[j - 1]
    }

    pub fn forward(&self, d: &MumfordDivisor) -> Result<MumfordDivisor, CurveError> {
        self.image(d, Direction::Forward)
    }

    pub fn transpose(&self, d: &MumfordDivisor) -> Result<MumfordDivisor, CurveError> {
        self.image(d, Direction::Transpose)
    }

    /// Pushforward of `d`; [`CurveError::NonGeneric`] asks for another divisor.
    pub fn image(&self, d: &MumfordDivisor, dir: Direction) -> Result<MumfordDivisor, CurveError> {
        let (from, to, s, t, sign) = match dir {
            Direction::Forward => (&self.source, &self.target, &self.f, &self.l, 1),
            Direction::Transpose => (&self.target, &self.source, &self.l, &self.f, -1),
        };
        if d.is_identity() {
            return Ok(to.identity());
        }
        let k = from.field();
        let ext = quadratic_extension(k)?;
        let e = |p: &FqPoly| p.map(|c| c.embed(ext).expect("extension"));
        let (s1, s2, t1, t2) = (e(&s[0]), e(&s[1]), e(&t[0]), e(&t[1]));
        let to_ext = to.base_change(ext);
        let dx = d.embed(ext);
        let mut acc = to_ext.identity();
        for x0 in roots(&dx.u)? {
            let y0 = dx.v.eval(&x0);
            let img = point_image(x0, y0, (&s1, &s2), (&t1, &t2), sign)?;
            if !to_ext.is_valid(&img) {
                return Err(CurveError::NonGeneric);
            }
            acc = to_ext.add(&acc, &img);
        }
        if dx.u.degree() == Some(1) {
            let correction = MumfordDivisor { u: t1.reversed(2).monic(), v: Poly::zero() };
            acc = to_ext.add(&acc, &correction);
        }
        acc.descend(to.field())
            .ok_or_else(|| CurveError::Inconsistent("image of a rational divisor is not rational".into()))
    }

    /// The 2-torsion classes `[R_j − 2∞]`, `R_j` the roots of `F_j`; they
    /// span the kernel of the forward map.
    pub fn kernel_elements(&self) -> [MumfordDivisor; 3] {
        self.f.clone().map(|fj| MumfordDivisor { u: fj.reversed(2).monic(), v: Poly::zero() })
    }
}

fn odd_model_at_origin(curve: &FiniteCurve) -> Result<Jacobian, CurveError> {
    Jacobian::at_root(curve, curve.field().zero())
}

/// Distinct roots of a monic `u` of degree 1 or 2 in its field.
fn roots(u: &FqPoly) -> Result<Vec<Fq>, CurveError> {
    let c = u.coeffs();
    match u.degree() {
        Some(1) => Ok(vec![-c[0]]),
        Some(2) => {
            let disc = c[1] * c[1] - c[0].mul_int(4);
            if disc.is_zero() {
                return Err(CurveError::NonGeneric);
            }
            let s = disc.sqrt().ok_or_else(|| CurveError::Domain("quadratic does not split".into()))?;
            let half = c[1].one_like().mul_int(2).inverse().expect("odd characteristic");
            Ok(vec![(-c[1] + s) * half, (-c[1] - s) * half])
        }
        _ => Err(CurveError::Domain("support of degree outside 1..=2".into())),
    }
}

/// `[Γ(P) − 2∞]` for `P = (X₀, Y₀)` on the source odd model.
///
/// With `s₀ = 1/X₀`, `t₀ = Y₀/X₀³` on the sextic, `A = S₁(s₀)`, `B = S₂(s₀)`:
/// the image's `U`-coordinates are the roots of `U²·(A·T₁ + B·T₂)(1/U)`, and
/// `V = ±(A/t₀)·U²T₁(1/U)·(s₀U − 1)`.
fn point_image(
    x0: Fq,
    y0: Fq,
    (s1, s2): (&FqPoly, &FqPoly),
    (t1, t2): (&FqPoly, &FqPoly),
    sign: i64,
) -> Result<MumfordDivisor, CurveError> {
    if x0.is_zero() || y0.is_zero() {
        return Err(CurveError::NonGeneric);
    }
    let inv = x0.inverse().expect("nonzero");
    let s0 = inv;
    let t0 = y0 * inv * inv * inv;
    let (a, b) = (s1.eval(&s0), s2.eval(&s0));
    let q = t1.scale(&a).add(&t2.scale(&b));
    let r = q.reversed(2);
    if r.degree() != Some(2) || q.degree() != Some(2) {
        return Err(CurveError::NonGeneric);
    }
    let u = r.monic();
    let k = a * t0.inverse().expect("nonzero");
    let lin = Poly::new(vec![-x0.one_like(), s0]);
    let v = t1.reversed(2).mul(&lin).scale(&k.mul_int(sign)).rem(&u);
    Ok(MumfordDivisor { u, v })
}

/// Whether `ρ̂(ρ(D)) = 2D` for `D`, `ρ` the forward and `ρ̂` the transpose
/// pushforward. `Err(NonGeneric)` means `D` must be resampled.
pub fn check_double(pair: &RichelotPair, d: &MumfordDivisor) -> Result<bool, CurveError> {
    let there = pair.forward(d)?;
    let back = pair.transpose(&there)?;
    Ok(back == pair.source().double(d))
}

/// Field of definition of both Jacobians.
pub fn pair_field(pair: &RichelotPair) -> &'static FiniteField {
    pair.source().field()
}
