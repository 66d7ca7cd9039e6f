//! Sylvester resultants via fraction-free (Bareiss) elimination.
//!
//! The same code serves scalar resultants over ℚ or a finite/quadratic field
//! and resultants in `z` of polynomials whose coefficients lie in ℚ[T].

use super::poly::{Poly, UniPoly};
use super::ring::{ExactDivision, Ring};
use super::ExactError;

/// Sylvester matrix of `p` (degree m) and `q` (degree n), rows ordered with
/// the n shifts of `p` first, coefficients from the leading one down.
pub fn sylvester_matrix<R: Ring>(p: &Poly<R>, q: &Poly<R>) -> Vec<Vec<R>> {
    let m = p.degree().expect("nonzero p");
    let n = q.degree().expect("nonzero q");
    let zero = p.coeffs()[0].zero_like();
    let size = m + n;
    let mut mat = vec![vec![zero; size]; size];
    for i in 0..n {
        for k in 0..=m {
            mat[i][i + k] = p.coeffs()[m - k].clone();
        }
    }
    for i in 0..m {
        for k in 0..=n {
            mat[n + i][i + k] = q.coeffs()[n - k].clone();
        }
    }
    mat
}

/// Determinant by Bareiss elimination; every division is exact.
pub fn determinant<R: ExactDivision>(mut m: Vec<Vec<R>>) -> Option<R> {
    let n = m.len();
    let first = m.first()?.first()?.clone();
    let one = first.one_like();
    let mut prev = one.clone();
    let mut negate = false;
    for k in 0..n {
        if m[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return Some(first.zero_like());
            };
            m.swap(k, swap);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = m[i][j].mul(&m[k][k]).sub(&m[i][k].mul(&m[k][j]));
                m[i][j] = num.div_exact(&prev);
            }
            m[i][k] = first.zero_like();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    Some(if negate { det.neg() } else { det })
}

/// `Res(p, q) = lc(p)^deg q · ∏_{p(α)=0} q(α)` over any exact-division ring.
pub fn resultant_generic<R: ExactDivision>(p: &Poly<R>, q: &Poly<R>) -> Result<R, ExactError> {
    let (dp, dq) = match (p.degree(), q.degree()) {
        (None, None) => return Err(ExactError::Domain("resultant of two zero polynomials".into())),
        (None, Some(_)) => return Ok(q.coeffs()[0].zero_like()),
        (Some(_), None) => return Ok(p.coeffs()[0].zero_like()),
        (Some(a), Some(b)) => (a, b),
    };
    if dp == 0 {
        return Ok(p.coeffs()[0].pow(dq as u64));
    }
    if dq == 0 {
        return Ok(q.coeffs()[0].pow(dp as u64));
    }
    Ok(determinant(sylvester_matrix(p, q)).expect("nonempty matrix"))
}

pub fn resultant(p: &UniPoly, q: &UniPoly) -> Result<num_rational::BigRational, ExactError> {
    resultant_generic(p, q)
}

/// Resultant in `z` of two polynomials in `z` with coefficients in ℚ[T].
pub fn resultant_in_z(p: &Poly<UniPoly>, q: &Poly<UniPoly>) -> Result<UniPoly, ExactError> {
    if p.is_zero() || q.is_zero() {
        return Err(ExactError::Domain("resultant_in_z needs nonzero inputs".into()));
    }
    resultant_generic(p, q)
}

/// Discriminant `(-1)^{n(n-1)/2} Res(f, f') / lc(f)` over a field.
pub fn discriminant<R: ExactDivision>(f: &Poly<R>) -> Result<R, ExactError> {
    let n = f
        .degree()
        .filter(|&d| d >= 1)
        .ok_or_else(|| ExactError::Domain("discriminant needs positive degree".into()))?;
    let r = resultant_generic(f, &f.derivative())?;
    let r = r.div_exact(f.leading().expect("nonzero"));
    Ok(if (n * (n - 1) / 2) % 2 == 1 { r.neg() } else { r })
}

#[cfg(test)]
mod tests {
    use num_rational::BigRational;

    use super::*;

    fn p(c: &[i64]) -> UniPoly {
        UniPoly::from_ints(c)
    }
    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn scalar_examples() {
        assert_eq!(resultant(&p(&[-1, 1]), &p(&[-2, 1])).unwrap(), q(-1));
        assert_eq!(resultant(&p(&[1, 0, 1]), &p(&[1, 0, 1])).unwrap(), q(0));
        assert_eq!(resultant(&p(&[-2, 0, 1]), &p(&[-3, 0, 1])).unwrap(), q(1));
        assert!(resultant(&p(&[]), &p(&[])).is_err());
        assert_eq!(resultant(&p(&[]), &p(&[1, 1])).unwrap(), q(0));
    }

    #[test]
    fn constant_cases() {
        assert_eq!(resultant(&p(&[3]), &p(&[1, 2, 1])).unwrap(), q(9));
        assert_eq!(resultant(&p(&[1, 2, 1]), &p(&[-2])).unwrap(), q(4));
    }

    #[test]
    fn determinant_with_pivoting() {
        let m: Vec<Vec<BigRational>> = [[0, 2, 1], [1, 0, 3], [4, 5, 0]]
            .iter()
            .map(|r| r.iter().map(|&x| q(x)).collect())
            .collect();
        // 0*(0-15) - 2*(0-12) + 1*(5-0) = 29
        assert_eq!(determinant(m).unwrap(), q(29));
    }

    #[test]
    fn discriminant_of_quadratic() {
        // b^2 - 4ac for 2T^2 + 3T - 5
        assert_eq!(discriminant(&p(&[-5, 3, 2])).unwrap(), q(9 + 40));
        // cubic T^3 - T: disc = 4
        assert_eq!(discriminant(&p(&[0, -1, 0, 1])).unwrap(), q(4));
    }

    fn zpoly(coeffs: Vec<UniPoly>) -> Poly<UniPoly> {
        Poly::new(coeffs)
    }

    #[test]
    fn resultant_in_z_linear() {
        // z - 1 and z - T  ->  1 - T
        let a = zpoly(vec![p(&[-1]), p(&[1])]);
        let b = zpoly(vec![p(&[0, -1]), p(&[1])]);
        assert_eq!(resultant_in_z(&a, &b).unwrap(), p(&[1, -1]));
    }

    #[test]
    fn resultant_in_z_quadratic() {
        // z^2 - 1 and z^2 - T^2  ->  (T^2 - 1)^2
        let a = zpoly(vec![p(&[-1]), p(&[]), p(&[1])]);
        let b = zpoly(vec![p(&[0, 0, -1]), p(&[]), p(&[1])]);
        let expect = p(&[-1, 0, 1]).mul(&p(&[-1, 0, 1]));
        assert_eq!(resultant_in_z(&a, &b).unwrap(), expect);
    }
}
