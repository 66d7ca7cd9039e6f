//! Factorization of monic integer quartics over ℚ and characteristic
//! polynomials of powers.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::integer::divisors;
use super::poly::{Poly, UniPoly};
use super::resultant::resultant_in_z;
use super::ExactError;

/// Irreducible monic factors with multiplicities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub factors: Vec<(UniPoly, usize)>,
}

impl Factorization {
    pub fn is_irreducible(&self) -> bool {
        self.factors.len() == 1 && self.factors[0].1 == 1
    }

    pub fn product(&self) -> UniPoly {
        self.factors
            .iter()
            .fold(UniPoly::one(), |acc, (f, m)| acc.mul(&f.pow(*m as u32)))
    }
}

fn linear(root: &BigInt) -> UniPoly {
    UniPoly::from_bigints(&[-root.clone(), BigInt::one()])
}

fn eval_int(c: &[BigInt], x: &BigInt) -> BigInt {
    c.iter().rev().fold(BigInt::zero(), |acc, a| acc * x + a)
}

/// Integer root among `±d` for divisors `d` of the constant term (0 if the
/// constant term vanishes).
fn find_integer_root(c: &[BigInt]) -> Option<BigInt> {
    if c[0].is_zero() {
        return Some(BigInt::zero());
    }
    for d in divisors(&c[0]) {
        for r in [d.clone(), -d] {
            if eval_int(c, &r).is_zero() {
                return Some(r);
            }
        }
    }
    None
}

/// Splits a monic integer quartic without rational roots into two monic
/// integer quadratics, enumerating constant-term pairs `c·e = chi(0)`.
fn split_quartic(c: &[BigInt]) -> Option<(UniPoly, UniPoly)> {
    let (c0, c1, c2, c3) = (&c[0], &c[1], &c[2], &c[3]);
    for d in divisors(c0) {
        for first in [d.clone(), -d] {
            let second = c0 / &first;
            // (T² + bT + first)(T² + eT + second): b + e = c3, be = c2 - first - second
            let prod = c2 - &first - &second;
            let disc = c3 * c3 - BigInt::from(4) * &prod;
            if disc.is_negative() {
                continue;
            }
            let s = disc.sqrt();
            if &s * &s != disc {
                continue;
            }
            for sign in [1, -1] {
                let num: BigInt = c3 + &s * sign;
                if num.clone() % 2 != BigInt::zero() {
                    continue;
                }
                let b = num / 2;
                let e = c3 - &b;
                if &b * &second + &e * &first == *c1 {
                    return Some((
                        UniPoly::from_bigints(&[first.clone(), b, BigInt::one()]),
                        UniPoly::from_bigints(&[second.clone(), e, BigInt::one()]),
                    ));
                }
            }
        }
    }
    None
}

/// Complete factorization over ℚ of a monic integer quartic.
///
/// Rational roots are sieved from the divisors of the constant term; a
/// root-free quartic is then tested for a split into two integer quadratics
/// (Gauss's lemma makes integer factors sufficient).
pub fn factor_quartic_over_q(chi: &UniPoly) -> Result<Factorization, ExactError> {
    if chi.degree() != Some(4) || !chi.is_monic() {
        return Err(ExactError::Domain("expected a monic quartic".into()));
    }
    let mut rest = chi
        .integer_coeffs()
        .ok_or_else(|| ExactError::Domain("expected integer coefficients".into()))?;
    let mut found: Vec<UniPoly> = Vec::new();
    while rest.len() > 2 {
        let Some(r) = find_integer_root(&rest) else {
            break;
        };
        let lin = linear(&r);
        found.push(lin.clone());
        let q = UniPoly::from_bigints(&rest).div_rem(&lin).0;
        rest = q.integer_coeffs().expect("monic integer quotient");
    }
    let rest_poly = UniPoly::from_bigints(&rest);
    match rest.len() - 1 {
        4 => match split_quartic(&rest) {
            Some((a, b)) => {
                found.push(a);
                found.push(b);
            }
            None => found.push(rest_poly),
        },
        0 => {}
        _ => found.push(rest_poly),
    }
    found.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.coeffs().cmp(b.coeffs())));
    let mut factors: Vec<(UniPoly, usize)> = Vec::new();
    for f in found {
        match factors.last_mut() {
            Some((g, m)) if *g == f => *m += 1,
            _ => factors.push((f, 1)),
        }
    }
    Ok(Factorization { factors })
}

/// Monic polynomial whose roots are the `n`-th powers of the roots of `chi`,
/// computed as `Res_z(chi(z), T - z^n)`.
pub fn power_charpoly(chi: &UniPoly, n: u32) -> Result<UniPoly, ExactError> {
    if n == 0 {
        return Err(ExactError::Domain("power must be positive".into()));
    }
    if !chi.is_monic() || !chi.has_integer_coeffs() {
        return Err(ExactError::Domain("expected a monic integer polynomial".into()));
    }
    if n == 1 {
        return Ok(chi.clone());
    }
    let p: Poly<UniPoly> = Poly::new(chi.coeffs().iter().map(|c| UniPoly::constant(c.clone())).collect());
    let mut q_coeffs = vec![UniPoly::zero(); n as usize + 1];
    q_coeffs[0] = UniPoly::t();
    q_coeffs[n as usize] = UniPoly::constant(-BigRational::one());
    let q = Poly::new(q_coeffs);
    resultant_in_z(&p, &q)
}
