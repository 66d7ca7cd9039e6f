use std::fmt;

use num_rational::BigRational;

use super::mpoly::{Exponents, MPoly, Var, NVARS};
use crate::exact::Ring;

/// `c₀ + c₁√Δ + c₂√−2 + c₃√(−2Δ)` with polynomial components.
///
/// Products follow `√Δ² = Δ`, `√−2² = −2`, `√(−2Δ)² = −2Δ`,
/// `√Δ·√−2 = √(−2Δ)`, `√Δ·√(−2Δ) = Δ√−2`, `√−2·√(−2Δ) = −2√Δ`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct RadicalElem {
    pub c: [MPoly; 4],
}

/// Basis index: 0 ↦ 1, 1 ↦ √Δ, 2 ↦ √−2, 3 ↦ √(−2Δ).
pub const ONE: usize = 0;
pub const SQRT_DELTA: usize = 1;
pub const SQRT_M2: usize = 2;
pub const SQRT_M2_DELTA: usize = 3;

/// `e_i · e_j = scalar · e_k`, the scalar a polynomial in Δ.
fn basis_product(i: usize, j: usize) -> (MPoly, usize) {
    let d = MPoly::var(Var::Delta);
    let k = |n: i64| MPoly::from_int(n);
    let (lo, hi) = if i <= j { (i, j) } else { (j, i) };
    match (lo, hi) {
        (0, x) => (k(1), x),
        (1, 1) => (d, 0),
        (1, 2) => (k(1), 3),
        (1, 3) => (d, 2),
        (2, 2) => (k(-2), 0),
        (2, 3) => (k(-2), 1),
        (3, 3) => (d.mul_int(-2), 0),
        _ => unreachable!("basis index out of range"),
    }
}

impl RadicalElem {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_mpoly(p: MPoly) -> Self {
        Self::basis(ONE, p)
    }

    /// `p · e_i`.
    pub fn basis(i: usize, p: MPoly) -> Self {
        let mut c: [MPoly; 4] = Default::default();
        c[i] = p;
        RadicalElem { c }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_mpoly(MPoly::from_int(n))
    }

    pub fn var(v: Var) -> Self {
        Self::from_mpoly(MPoly::var(v))
    }

    pub fn sqrt_delta() -> Self {
        Self::basis(SQRT_DELTA, MPoly::one())
    }

    pub fn sqrt_minus_two() -> Self {
        Self::basis(SQRT_M2, MPoly::one())
    }

    /// `a + b√Δ`.
    pub fn quad(a: MPoly, b: MPoly) -> Self {
        RadicalElem { c: [a, b, MPoly::zero(), MPoly::zero()] }
    }

    pub fn scale(&self, k: &BigRational) -> Self {
        RadicalElem { c: self.c.clone().map(|p| p.scale(k)) }
    }

    /// The automorphism fixing √−2 and negating √Δ.
    pub fn conj_s(&self) -> Self {
        let [c0, c1, c2, c3] = self.c.clone();
        RadicalElem { c: [c0, c1.neg(), c2, c3.neg()] }
    }

    fn map(&self, f: impl Fn(&MPoly) -> MPoly) -> Self {
        RadicalElem { c: [f(&self.c[0]), f(&self.c[1]), f(&self.c[2]), f(&self.c[3])] }
    }

    pub fn derivative(&self, v: Var) -> Self {
        self.map(|p| p.derivative(v))
    }

    pub fn swap_vars(&self, v: Var, w: Var) -> Self {
        self.map(|p| p.swap_vars(v, w))
    }

    pub fn specialize(&self, values: &[(Var, BigRational)]) -> Self {
        self.map(|p| p.specialize(values))
    }

    pub fn degree_in(&self, v: Var) -> Option<u8> {
        self.c.iter().filter_map(|p| p.degree_in(v)).max()
    }

    pub fn coeff_in(&self, v: Var, k: u8) -> Self {
        self.map(|p| p.coeff_in(v, k))
    }

    /// Substitutes `v ↦ value` in every component.
    pub fn substitute(&self, v: Var, value: &RadicalElem) -> Self {
        let deg = self.degree_in(v).unwrap_or(0);
        let mut acc = Self::zero();
        let mut pow = Self::from_int(1);
        for k in 0..=deg {
            acc = acc.add(&self.coeff_in(v, k).mul(&pow));
            if k < deg {
                pow = pow.mul(value);
            }
        }
        acc
    }

    /// Coefficient of a monomial in the curve variables x, u, y, v, as an
    /// element free of them.
    pub fn curve_coeff(&self, mono: [u8; 4]) -> Self {
        self.map(|p| {
            let mut out = MPoly::zero();
            for (e, c) in p.terms() {
                if e[Var::X as usize..] == mono {
                    let mut e2: Exponents = *e;
                    e2[Var::X as usize..].copy_from_slice(&[0; 4]);
                    out = out.add(&MPoly::term(c.clone(), e2));
                }
            }
            out
        })
    }

    /// Monomials in x, u, y, v that occur with a nonzero coefficient.
    pub fn curve_monomials(&self) -> std::collections::BTreeSet<[u8; 4]> {
        self.c
            .iter()
            .flat_map(|p| p.terms().map(|(e, _)| [e[4], e[5], e[6], e[7]]).collect::<Vec<_>>())
            .collect()
    }

    /// Whether `self = λ·other` for a nonzero `λ` free of x, u, y, v.
    ///
    /// Decided by cross-multiplication against one pivot monomial; the
    /// coefficient ring is an integral domain, so `A·β = B·α` with `α, β ≠ 0`
    /// the pivot coefficients means `A = (α/β)·B`.
    pub fn proportional_to(&self, other: &Self) -> bool {
        let mons = self.curve_monomials();
        if mons != other.curve_monomials() {
            return false;
        }
        let Some(pivot) = mons.iter().next_back() else {
            return false;
        };
        let alpha = self.curve_coeff(*pivot);
        let beta = other.curve_coeff(*pivot);
        self.mul(&beta) == other.mul(&alpha)
    }
}

impl Ring for RadicalElem {
    fn zero_like(&self) -> Self {
        Self::zero()
    }
    fn one_like(&self) -> Self {
        Self::from_int(1)
    }
    fn is_zero(&self) -> bool {
        self.c.iter().all(|p| p.is_empty())
    }
    fn add(&self, o: &Self) -> Self {
        RadicalElem {
            c: [
                self.c[0].add(&o.c[0]),
                self.c[1].add(&o.c[1]),
                self.c[2].add(&o.c[2]),
                self.c[3].add(&o.c[3]),
            ],
        }
    }
    fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }
    fn mul(&self, o: &Self) -> Self {
        let mut out: [MPoly; 4] = Default::default();
        for i in 0..4 {
            if self.c[i].is_empty() {
                continue;
            }
            for j in 0..4 {
                if o.c[j].is_empty() {
                    continue;
                }
                let (scalar, k) = basis_product(i, j);
                out[k] = out[k].add(&self.c[i].mul(&o.c[j]).mul(&scalar));
            }
        }
        RadicalElem { c: out }
    }
    fn neg(&self) -> Self {
        self.map(|p| p.neg())
    }
    fn mul_int(&self, n: i64) -> Self {
        self.map(|p| p.mul_int(n))
    }
}

impl fmt::Debug for RadicalElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for RadicalElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        const NAMES: [&str; 4] = ["", "√Δ", "√-2", "√(-2Δ)"];
        let parts: Vec<String> = (0..4)
            .filter(|&i| !self.c[i].is_empty())
            .map(|i| if i == 0 { format!("{}", self.c[i]) } else { format!("({})*{}", self.c[i], NAMES[i]) })
            .collect();
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

// Exponent vectors are indexed by `Var`; the curve variables are the last four.
const _: () = assert!(Var::X as usize == 4 && NVARS == 8);

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn multiplication_table() {
        let sd = RadicalElem::sqrt_delta();
        let sm = RadicalElem::sqrt_minus_two();
        let d = RadicalElem::var(Var::Delta);
        let smd = RadicalElem::basis(SQRT_M2_DELTA, MPoly::one());
        assert_eq!(sd.mul(&sd), d);
        assert_eq!(sm.mul(&sm), RadicalElem::from_int(-2));
        assert_eq!(smd.mul(&smd), d.mul_int(-2));
        assert_eq!(sd.mul(&sm), smd);
        assert_eq!(sd.mul(&smd), d.mul(&sm));
        assert_eq!(sm.mul(&smd), sd.mul_int(-2));
    }

    #[test]
    fn conjugation_fixes_sqrt_minus_two() {
        let sm = RadicalElem::sqrt_minus_two();
        assert_eq!(sm.conj_s(), sm);
        assert_eq!(RadicalElem::sqrt_delta().conj_s(), RadicalElem::sqrt_delta().neg());
    }

    #[test]
    fn proportionality() {
        let x = RadicalElem::var(Var::X);
        let p = x.mul(&x).add(&RadicalElem::sqrt_delta().mul(&x));
        let lam = RadicalElem::sqrt_minus_two().add(&RadicalElem::var(Var::A));
        assert!(p.mul(&lam).proportional_to(&p));
        assert!(!p.add(&x).proportional_to(&p));
        assert!(!p.proportional_to(&p.mul(&x)));
    }
}
