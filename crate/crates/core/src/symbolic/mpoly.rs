use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::exact::Ring;

/// Number of indeterminates.
pub const NVARS: usize = 8;

/// Indeterminates, in exponent-vector order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    A = 0,
    B = 1,
    C = 2,
    Delta = 3,
    X = 4,
    U = 5,
    Y = 6,
    V = 7,
}

impl Var {
    pub const ALL: [Var; NVARS] = [Var::A, Var::B, Var::C, Var::Delta, Var::X, Var::U, Var::Y, Var::V];

    pub fn name(self) -> &'static str {
        ["a", "b", "c", "Δ", "x", "u", "y", "v"][self as usize]
    }
}

pub type Exponents = [u8; NVARS];

/// Polynomial in [`Var`] over ℚ; no zero coefficients are stored, so
/// structural equality is polynomial equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct MPoly {
    terms: BTreeMap<Exponents, BigRational>,
}

impl MPoly {
    pub fn zero() -> Self {
        MPoly::default()
    }

    pub fn constant(c: BigRational) -> Self {
        Self::term(c, [0; NVARS])
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(BigRational::from_integer(n.into()))
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn term(c: BigRational, e: Exponents) -> Self {
        let mut terms = BTreeMap::new();
        if !Zero::is_zero(&c) {
            terms.insert(e, c);
        }
        MPoly { terms }
    }

    pub fn var(v: Var) -> Self {
        let mut e = [0; NVARS];
        e[v as usize] = 1;
        Self::term(BigRational::one(), e)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &BigRational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    fn insert_add(terms: &mut BTreeMap<Exponents, BigRational>, e: Exponents, c: BigRational) {
        use std::collections::btree_map::Entry;
        match terms.entry(e) {
            Entry::Vacant(slot) => {
                if !Zero::is_zero(&c) {
                    slot.insert(c);
                }
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if Zero::is_zero(slot.get()) {
                    slot.remove();
                }
            }
        }
    }

    pub fn scale(&self, k: &BigRational) -> Self {
        if Zero::is_zero(k) {
            return Self::zero();
        }
        MPoly { terms: self.terms.iter().map(|(e, c)| (*e, c * k)).collect() }
    }

    /// Highest power of `v` occurring, or `None` for the zero polynomial.
    pub fn degree_in(&self, v: Var) -> Option<u8> {
        self.terms.keys().map(|e| e[v as usize]).max()
    }

    /// Coefficient of `v^k`, as a polynomial free of `v`.
    pub fn coeff_in(&self, v: Var, k: u8) -> Self {
        let i = v as usize;
        let terms = self
            .terms
            .iter()
            .filter(|(e, _)| e[i] == k)
            .map(|(e, c)| {
                let mut e = *e;
                e[i] = 0;
                (e, c.clone())
            })
            .collect();
        MPoly { terms }
    }

    /// Partial derivative in `v`.
    pub fn derivative(&self, v: Var) -> Self {
        let i = v as usize;
        let mut out = BTreeMap::new();
        for (e, c) in &self.terms {
            if e[i] == 0 {
                continue;
            }
            let mut e2 = *e;
            e2[i] -= 1;
            Self::insert_add(&mut out, e2, c * BigRational::from_integer(e[i].into()));
        }
        MPoly { terms: out }
    }

    /// Substitutes `v ↦ value`.
    pub fn substitute(&self, v: Var, value: &MPoly) -> Self {
        let deg = self.degree_in(v).unwrap_or(0);
        let mut acc = Self::zero();
        let mut pow = Self::one();
        for k in 0..=deg {
            acc = Ring::add(&acc, &Ring::mul(&self.coeff_in(v, k), &pow));
            if k < deg {
                pow = Ring::mul(&pow, value);
            }
        }
        acc
    }

    /// Exchanges two indeterminates.
    pub fn swap_vars(&self, v: Var, w: Var) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut e = *e;
                e.swap(v as usize, w as usize);
                (e, c.clone())
            })
            .collect();
        MPoly { terms }
    }

    /// Evaluates the listed indeterminates at rationals, leaving the others.
    pub fn specialize(&self, values: &[(Var, BigRational)]) -> Self {
        let mut out = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut e2 = *e;
            let mut c2 = c.clone();
            for (v, val) in values {
                let k = e2[*v as usize];
                if k > 0 {
                    c2 *= num_traits::pow(val.clone(), k as usize);
                    e2[*v as usize] = 0;
                }
            }
            Self::insert_add(&mut out, e2, c2);
        }
        MPoly { terms: out }
    }

    /// The value of a polynomial with no indeterminates left.
    pub fn as_constant(&self) -> Option<BigRational> {
        match self.terms.len() {
            0 => Some(BigRational::zero()),
            1 => self.terms.get(&[0; NVARS]).cloned(),
            _ => None,
        }
    }
}

impl Ring for MPoly {
    fn zero_like(&self) -> Self {
        Self::zero()
    }
    fn one_like(&self) -> Self {
        Self::one()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn add(&self, other: &Self) -> Self {
        let mut terms = self.terms.clone();
        for (e, c) in &other.terms {
            Self::insert_add(&mut terms, *e, c.clone());
        }
        MPoly { terms }
    }
    fn sub(&self, other: &Self) -> Self {
        Ring::add(self, &Ring::neg(other))
    }
    fn mul(&self, other: &Self) -> Self {
        let mut terms = BTreeMap::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let mut e = *e1;
                for (a, b) in e.iter_mut().zip(e2) {
                    *a += b;
                }
                Self::insert_add(&mut terms, e, c1 * c2);
            }
        }
        MPoly { terms }
    }
    fn neg(&self) -> Self {
        MPoly { terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect() }
    }
    fn mul_int(&self, n: i64) -> Self {
        self.scale(&BigRational::from_integer(n.into()))
    }
}

impl fmt::Debug for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Terms from the highest exponent vector down, e.g. `1/2*Δ` or `a^2*x - 3`.
impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let mag = c.abs();
            match (i, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mono: Vec<String> = Var::ALL
                .iter()
                .filter(|v| e[**v as usize] > 0)
                .map(|v| match e[*v as usize] {
                    1 => v.name().to_string(),
                    k => format!("{}^{k}", v.name()),
                })
                .collect();
            if mono.is_empty() {
                write!(f, "{mag}")?;
            } else if One::is_one(&mag) {
                f.write_str(&mono.join("*"))?;
            } else {
                write!(f, "{mag}*{}", mono.join("*"))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ratio;

    #[test]
    fn arithmetic_and_display() {
        let a = MPoly::var(Var::A);
        let x = MPoly::var(Var::X);
        let p = a.mul(&x).sub(&MPoly::from_int(3)); // a x - 3
        assert_eq!(p.to_string(), "a*x - 3");
        assert_eq!(p.sub(&p), MPoly::zero());
        assert_eq!(MPoly::var(Var::Delta).scale(&ratio(1, 2)).to_string(), "1/2*Δ");
        let sq = p.mul(&p);
        assert_eq!(sq.degree_in(Var::X), Some(2));
        assert_eq!(sq.coeff_in(Var::X, 1), a.mul_int(-6));
        assert_eq!(sq.derivative(Var::X), p.mul(&a).mul_int(2));
    }

    #[test]
    fn substitution_and_specialization() {
        let x = MPoly::var(Var::X);
        let u = MPoly::var(Var::U);
        let p = x.mul(&x).add(&MPoly::var(Var::B).mul(&x));
        assert_eq!(p.substitute(Var::X, &u), p.swap_vars(Var::X, Var::U));
        let s = p.specialize(&[(Var::B, ratio(2, 1)), (Var::X, ratio(3, 1))]);
        assert_eq!(s.as_constant(), Some(ratio(15, 1)));
    }
}
