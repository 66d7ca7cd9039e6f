use num_rational::BigRational;
use serde::Serialize;

use super::mpoly::{MPoly, Var};
use super::radical::RadicalElem;
use super::SymbolicError;
use crate::exact::{Poly, Ring};
use crate::numberfield::QuadElem;

fn p(v: Var) -> MPoly {
    MPoly::var(v)
}

fn k(n: i64, d: i64) -> MPoly {
    MPoly::constant(BigRational::new(n.into(), d.into()))
}

fn prod(ps: &[MPoly]) -> MPoly {
    ps.iter().fold(MPoly::one(), |acc, q| acc.mul(q))
}

/// The three quadratics `F_j` in `x` and `L₁ = F₂'F₃ − F₂F₃'`,
/// `L₂ = F₃'F₁ − F₃F₁'`, `L₃ = F₁'F₂ − F₁F₂'`, with `a, b, c, Δ` generic.
#[derive(Clone, Debug, PartialEq)]
pub struct FamilyPolynomials {
    pub f: [RadicalElem; 3],
    pub l: [RadicalElem; 3],
}

impl Default for FamilyPolynomials {
    fn default() -> Self {
        Self::standard()
    }
}

impl FamilyPolynomials {
    pub fn standard() -> Self {
        let (a, b, c, d) = (p(Var::A), p(Var::B), p(Var::C), p(Var::Delta));
        let x = RadicalElem::var(Var::X);
        let x2 = x.mul(&x);
        let zero = MPoly::zero;
        let quad = RadicalElem::quad;

        // F₁ = (−¼b²Δ + ¼a² + c√Δ + ¼)x² + (b√Δ + a)x + 1
        let f1 = quad(
            prod(&[k(-1, 4), b.clone(), b.clone(), d.clone()]).add(&prod(&[k(1, 4), a.clone(), a.clone()])).add(&k(1, 4)),
            c.clone(),
        )
        .mul(&x2)
        .add(&quad(a.clone(), b.clone()).mul(&x))
        .add(&RadicalElem::from_int(1));

        // F₂ = (−½bΔ + ½a√Δ)x² + √Δ x
        let f2 = quad(prod(&[k(-1, 2), b.clone(), d.clone()]), prod(&[k(1, 2), a.clone()]))
            .mul(&x2)
            .add(&quad(zero(), MPoly::one()).mul(&x));

        // F₃ = (¼b²Δ√Δ − ¼a²√Δ − cΔ + ¼√Δ)x² + (−bΔ − a√Δ)x − √Δ
        let f3 = quad(
            prod(&[k(-1, 1), c.clone(), d.clone()]),
            prod(&[k(1, 4), b.clone(), b.clone(), d.clone()]).sub(&prod(&[k(1, 4), a.clone(), a.clone()])).add(&k(1, 4)),
        )
        .mul(&x2)
        .add(&quad(prod(&[k(-1, 1), b, d]), a.neg()).mul(&x))
        .add(&quad(zero(), k(-1, 1)));

        Self::from_f([f1, f2, f3])
    }

    /// Family with the given `F_j`; the `L_j` are derived.
    pub fn from_f(f: [RadicalElem; 3]) -> Self {
        let wronskian = |g: &RadicalElem, h: &RadicalElem| {
            g.derivative(Var::X).mul(h).sub(&g.mul(&h.derivative(Var::X)))
        };
        let l = [wronskian(&f[1], &f[2]), wronskian(&f[2], &f[0]), wronskian(&f[0], &f[1])];
        FamilyPolynomials { f, l }
    }

    /// `q_{i,j}`: coefficient of `x^i` in `F_{j+1}`.
    pub fn q(&self, i: u8, j: usize) -> RadicalElem {
        self.f[j].coeff_in(Var::X, i)
    }

    /// `δ = det(q_{i,j})`.
    pub fn delta(&self) -> RadicalElem {
        let m = |i: u8, j: usize| self.q(i, j);
        let minor = |r1: u8, r2: u8, c1: usize, c2: usize| m(r1, c1).mul(&m(r2, c2)).sub(&m(r1, c2).mul(&m(r2, c1)));
        m(0, 0)
            .mul(&minor(1, 2, 1, 2))
            .sub(&m(0, 1).mul(&minor(1, 2, 0, 2)))
            .add(&m(0, 2).mul(&minor(1, 2, 0, 1)))
    }

    /// `δ − Δ/2 = 0`.
    pub fn verify_delta(&self) -> bool {
        let half_delta = RadicalElem::from_mpoly(MPoly::var(Var::Delta).scale(&BigRational::new(1.into(), 2.into())));
        self.delta().sub(&half_delta).is_zero()
    }

    /// `Δ·ˢF₁ + L₁ = 0`, `ˢF₂ + L₂ = 0`, `ˢF₃ + L₃ = 0`.
    pub fn verify_conjugation(&self) -> bool {
        let d = RadicalElem::var(Var::Delta);
        d.mul(&self.f[0].conj_s()).add(&self.l[0]).is_zero()
            && self.f[1].conj_s().add(&self.l[1]).is_zero()
            && self.f[2].conj_s().add(&self.l[2]).is_zero()
    }

    /// `Δ·ˢ(F₁F₂F₃) + L₁L₂L₃ = 0`.
    pub fn verify_product(&self) -> bool {
        let ff = self.f[0].mul(&self.f[1]).mul(&self.f[2]);
        let ll = self.l[0].mul(&self.l[1]).mul(&self.l[2]);
        RadicalElem::var(Var::Delta).mul(&ff.conj_s()).add(&ll).is_zero()
    }

    /// Every `L_j` is quadratic in `x`: its `x³` coefficient vanishes.
    pub fn verify_l_quadratic(&self) -> bool {
        self.l.iter().all(|l| l.coeff_in(Var::X, 3).is_zero() && l.degree_in(Var::X) == Some(2))
    }

    /// Defining equations of the correspondence Γ ⊂ C × C̃:
    /// `F₁(x)L₁(u) + F₂(x)L₂(u)` and `yv − F₁(x)L₁(u)(x − u)`.
    pub fn correspondence(&self) -> [RadicalElem; 2] {
        let at_u = |e: &RadicalElem| e.swap_vars(Var::X, Var::U);
        let (x, u) = (RadicalElem::var(Var::X), RadicalElem::var(Var::U));
        let (y, v) = (RadicalElem::var(Var::Y), RadicalElem::var(Var::V));
        let e1 = self.f[0].mul(&at_u(&self.l[0])).add(&self.f[1].mul(&at_u(&self.l[1])));
        let e2 = y.mul(&v).sub(&self.f[0].mul(&at_u(&self.l[0])).mul(&x.sub(&u)));
        [e1, e2]
    }

    /// Checks that the conjugate correspondence ˢΓ, carried to C̃ × C by
    /// `(x, y) ↦ (x, σ√−2·y)` and `(u, v) ↦ (u, v/√−2)`, is cut out by the
    /// equations of Γ with the two factors exchanged, each up to a unit.
    /// `σ = −1` composes with the hyperelliptic involution.
    pub fn verify_transpose_with(&self, sigma: i64) -> bool {
        let conj = self.correspondence().map(|e| e.conj_s());
        let transposed = self
            .correspondence()
            .map(|e| e.swap_vars(Var::X, Var::U).swap_vars(Var::Y, Var::V));
        let sqrt_m2 = RadicalElem::sqrt_minus_two();
        let y_image = sqrt_m2.mul_int(sigma).mul(&RadicalElem::var(Var::Y));
        // 1/√−2 = −√−2/2
        let v_image = sqrt_m2.scale(&BigRational::new((-1).into(), 2.into())).mul(&RadicalElem::var(Var::V));
        transposed.iter().zip(&conj).all(|(t, c)| {
            let pulled = t.substitute(Var::Y, &y_image).substitute(Var::V, &v_image);
            pulled.proportional_to(c)
        })
    }

    pub fn verify_transpose(&self) -> bool {
        self.verify_transpose_with(-1)
    }

    /// All identities, with the determinant as text.
    pub fn report(&self) -> FamilyReport {
        FamilyReport {
            delta: self.verify_delta(),
            conjugation: self.verify_conjugation(),
            product: self.verify_product(),
            transpose: self.verify_transpose(),
            l_quadratic: self.verify_l_quadratic(),
            determinant: self.delta().to_string(),
        }
    }

    /// The `F_j` and `L_j` at rational `(a, b, c)` and squarefree `Δ`, as
    /// polynomials in `x` over ℚ(√Δ).
    pub fn specialize(&self, a: &BigRational, b: &BigRational, c: &BigRational, delta: i64) -> Result<SpecializedFamily, SymbolicError> {
        let conv = |e: &RadicalElem| specialize_x_poly(e, a, b, c, delta);
        Ok(SpecializedFamily {
            f: [conv(&self.f[0])?, conv(&self.f[1])?, conv(&self.f[2])?],
            l: [conv(&self.l[0])?, conv(&self.l[1])?, conv(&self.l[2])?],
        })
    }
}

/// Outcome of the generic identity checks.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyReport {
    pub delta: bool,
    pub conjugation: bool,
    pub product: bool,
    pub transpose: bool,
    pub l_quadratic: bool,
    pub determinant: String,
}

impl FamilyReport {
    pub fn all_pass(&self) -> bool {
        self.delta && self.conjugation && self.product && self.transpose && self.l_quadratic
    }
}

/// Family polynomials at a specific parameter point.
#[derive(Clone, Debug, PartialEq)]
pub struct SpecializedFamily {
    pub f: [Poly<QuadElem>; 3],
    pub l: [Poly<QuadElem>; 3],
}

/// Evaluates `a, b, c, Δ` and reads the result as a polynomial in `x` over
/// ℚ(√Δ). Fails if a √−2 component or another indeterminate survives.
pub fn specialize_x_poly(
    e: &RadicalElem,
    a: &BigRational,
    b: &BigRational,
    c: &BigRational,
    delta: i64,
) -> Result<Poly<QuadElem>, SymbolicError> {
    let values = [
        (Var::A, a.clone()),
        (Var::B, b.clone()),
        (Var::C, c.clone()),
        (Var::Delta, BigRational::from_integer(delta.into())),
    ];
    let s = e.specialize(&values);
    if !s.c[2].is_empty() || !s.c[3].is_empty() {
        return Err(SymbolicError::NotInQuadraticField);
    }
    let deg = s.degree_in(Var::X).unwrap_or(0);
    let mut coeffs = Vec::with_capacity(deg as usize + 1);
    for i in 0..=deg {
        let part = s.coeff_in(Var::X, i);
        let ra = part.c[0].as_constant().ok_or(SymbolicError::FreeVariables)?;
        let rb = part.c[1].as_constant().ok_or(SymbolicError::FreeVariables)?;
        let q = QuadElem::new(ra, rb, delta).map_err(|e| SymbolicError::Field(e.to_string()))?;
        coeffs.push(q);
    }
    if coeffs.iter().all(|q| q.is_zero()) {
        return Ok(Poly::zero());
    }
    Ok(Poly::new(coeffs))
}
