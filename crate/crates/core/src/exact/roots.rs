//! Exact rational roots of rational polynomials.
//!
//! The polynomial is made monic with integer coefficients by the substitution
//! `y = z / a_n`, so rational roots become integer roots. Integer roots are
//! then located by bisection on Sturm root counts, evaluated at half-integer
//! points where a monic integer polynomial never vanishes. No factoring of
//! coefficients is needed.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::poly::UniPoly;

/// Sturm sequence of `p`, each member scaled to integer coefficients by a
/// positive factor (signs are unchanged).
fn sturm_sequence(p: &UniPoly) -> Vec<Vec<BigInt>> {
    let mut seq = vec![p.clone(), p.derivative()];
    loop {
        let n = seq.len();
        if seq[n - 1].is_zero() {
            seq.pop();
            break;
        }
        let r = seq[n - 2].rem(&seq[n - 1]).neg();
        if r.is_zero() {
            break;
        }
        seq.push(r);
    }
    seq.iter()
        .map(|s| {
            let den = s.coeffs().iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
            s.coeffs().iter().map(|c| (c * BigRational::from_integer(den.clone())).to_integer()).collect()
        })
        .collect()
}

/// Sign of `c(num / 2)`, via the integer `Σ c_i num^i 2^(n-i)`.
fn sign_at_half(c: &[BigInt], num: &BigInt) -> Sign {
    let two = BigInt::from(2);
    let mut acc = BigInt::zero();
    let mut pow2 = BigInt::one();
    // Horner in num with the 2-powers folded in from the top.
    for a in c.iter().rev() {
        acc = acc * num + a * &pow2;
        pow2 *= &two;
    }
    acc.sign()
}

/// Sign variations of the sequence at `(2n - 1) / 2`.
fn variations_below(seq: &[Vec<BigInt>], n: &BigInt) -> usize {
    let num = n * 2 - 1;
    let mut count = 0;
    let mut last: Option<Sign> = None;
    for c in seq {
        let s = sign_at_half(c, &num);
        if s == Sign::NoSign {
            continue;
        }
        if last.is_some_and(|l| l != s) {
            count += 1;
        }
        last = Some(s);
    }
    count
}

/// Distinct integer roots of a monic integer polynomial, ascending.
fn integer_roots_monic(p: &UniPoly) -> Vec<BigInt> {
    let Some(deg) = p.degree() else {
        return Vec::new();
    };
    if deg == 0 {
        return Vec::new();
    }
    let sqfree = p.div_rem(&p.gcd(&p.derivative())).0;
    let seq = sturm_sequence(&sqfree);
    // Cauchy bound: every root has |y| < 1 + max |a_i|.
    let bound: BigInt = p
        .coeffs()
        .iter()
        .map(|c| c.abs().to_integer())
        .max()
        .unwrap_or_default()
        + 1;
    let mut out = Vec::new();
    let mut stack = vec![(-bound.clone(), bound)];
    while let Some((lo, hi)) = stack.pop() {
        // roots in [lo, hi] = V(lo - 1/2) - V(hi + 1/2)
        let count = variations_below(&seq, &lo) - variations_below(&seq, &(&hi + 1));
        if count == 0 {
            continue;
        }
        if lo == hi {
            if sqfree.eval(&BigRational::from_integer(lo.clone())).is_zero() {
                out.push(lo);
            }
            continue;
        }
        let mid = (&lo + &hi).div_floor(&BigInt::from(2));
        stack.push((lo, mid.clone()));
        stack.push((mid + 1, hi));
    }
    out.sort();
    out
}

/// Distinct rational roots of a nonzero rational polynomial, ascending.
pub fn rational_roots(p: &UniPoly) -> Vec<BigRational> {
    let Some(n) = p.degree() else {
        return Vec::new();
    };
    // Clear denominators.
    let den_lcm = p
        .coeffs()
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = p
        .coeffs()
        .iter()
        .map(|c| (c * BigRational::from_integer(den_lcm.clone())).to_integer())
        .collect();
    let lead = ints[n].clone();
    // a_n^{n-1} p(z / a_n) = z^n + Σ a_i a_n^{n-1-i} z^i
    let mut monic = Vec::with_capacity(n + 1);
    let mut pows = vec![BigInt::one(); n];
    for k in 1..n {
        pows[k] = &pows[k - 1] * &lead;
    }
    for (i, a) in ints.iter().enumerate().take(n) {
        monic.push(a * &pows[n - 1 - i]);
    }
    monic.push(BigInt::one());
    let mut roots: Vec<BigRational> = integer_roots_monic(&UniPoly::from_bigints(&monic))
        .into_iter()
        .map(|z| BigRational::new(z, lead.clone()))
        .collect();
    roots.sort();
    roots
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn integer_and_rational_roots() {
        // (T - 3)(T + 5)(T^2 + 1)
        let p = UniPoly::from_ints(&[-3, 1]).mul(&UniPoly::from_ints(&[5, 1])).mul(&UniPoly::from_ints(&[1, 0, 1]));
        assert_eq!(rational_roots(&p), vec![q(-5, 1), q(3, 1)]);
        // (2T - 1)(3T + 4)^2
        let p = UniPoly::from_ints(&[-1, 2])
            .mul(&UniPoly::from_ints(&[4, 3]))
            .mul(&UniPoly::from_ints(&[4, 3]));
        assert_eq!(rational_roots(&p), vec![q(-4, 3), q(1, 2)]);
        assert!(rational_roots(&UniPoly::from_ints(&[-2, 0, 1])).is_empty());
        assert_eq!(rational_roots(&UniPoly::from_ints(&[0, 0, 7])), vec![q(0, 1)]);
    }

    #[test]
    fn close_irrational_roots_do_not_confuse_search() {
        // T^2 - 2T - 1 has roots 1 ± √2; times (T - 2)
        let p = UniPoly::from_ints(&[-1, -2, 1]).mul(&UniPoly::from_ints(&[-2, 1]));
        assert_eq!(rational_roots(&p), vec![q(2, 1)]);
    }
}
