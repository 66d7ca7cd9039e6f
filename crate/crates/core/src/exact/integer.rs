//! Integer and rational helpers: squarefree parts, small factorizations,
//! perfect-square tests and exact rational parsing.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::ExactError;

/// Prime factorization `|n| = ∏ p^e` by trial division.
///
/// Only intended for the modest integers that occur here (constant terms of
/// Weil quartics, small discriminants); cost grows with the second-largest
/// prime factor.
pub fn factorize(n: &BigInt) -> Vec<(BigInt, u32)> {
    let mut n = n.abs();
    let mut out = Vec::new();
    if n.is_zero() {
        return out;
    }
    let push = |p: BigInt, e: u32, out: &mut Vec<(BigInt, u32)>| {
        if e > 0 {
            out.push((p, e));
        }
    };
    for p in [2u32, 3] {
        let p = BigInt::from(p);
        let mut e = 0;
        while (&n % &p).is_zero() {
            n /= &p;
            e += 1;
        }
        push(p, e, &mut out);
    }
    let mut d = BigInt::from(5u32);
    let mut step = 2u32;
    while &d * &d <= n {
        let mut e = 0;
        while (&n % &d).is_zero() {
            n /= &d;
            e += 1;
        }
        push(d.clone(), e, &mut out);
        d += step;
        step = 6 - step;
    }
    if n > BigInt::one() {
        out.push((n, 1));
    }
    out
}

/// All positive divisors of `n != 0`, ascending.
pub fn divisors(n: &BigInt) -> Vec<BigInt> {
    let mut divs = vec![BigInt::one()];
    for (p, e) in factorize(n) {
        let mut next = Vec::with_capacity(divs.len() * (e as usize + 1));
        for d in &divs {
            let mut pk = d.clone();
            next.push(pk.clone());
            for _ in 0..e {
                pk *= &p;
                next.push(pk.clone());
            }
        }
        divs = next;
    }
    divs.sort();
    divs
}

pub fn is_perfect_square(n: &BigInt) -> bool {
    if n.is_negative() {
        return false;
    }
    let r = n.sqrt();
    &r * &r == *n
}

/// Exact square root of a rational square, if it is one (nonnegative root).
pub fn rational_sqrt(x: &BigRational) -> Option<BigRational> {
    if x.is_negative() {
        return None;
    }
    let (n, d) = (x.numer(), x.denom());
    let (rn, rd) = (n.sqrt(), d.sqrt());
    (&rn * &rn == *n && &rd * &rd == *d).then(|| BigRational::new(rn, rd))
}

pub fn is_rational_square(x: &BigRational) -> bool {
    rational_sqrt(x).is_some()
}

/// The unique squarefree `m` with `n / m` a positive rational square.
///
/// Strips prime factors up to the cube root of the remaining cofactor; what
/// is left then has at most two prime factors, so it is either squarefree or
/// a perfect square.
pub fn squarefree_part(n: &BigInt) -> Result<BigInt, ExactError> {
    if n.is_zero() {
        return Err(ExactError::Domain("squarefree part of zero".into()));
    }
    let sign = n.sign();
    let mut rest = n.abs();
    let mut core = BigInt::one();
    let mut p = BigInt::from(2u32);
    while &p * &p * &p <= rest {
        let mut e = 0u32;
        while (&rest % &p).is_zero() {
            rest /= &p;
            e += 1;
        }
        if e % 2 == 1 {
            core *= &p;
        }
        p += if p == BigInt::from(2u32) { 1u32 } else { 2u32 };
    }
    if !is_perfect_square(&rest) {
        core *= rest;
    }
    Ok(if sign == Sign::Minus { -core } else { core })
}

pub fn squarefree_part_i64(n: i64) -> Result<i64, ExactError> {
    squarefree_part(&BigInt::from(n)).map(|m| m.to_i64().expect("squarefree part fits"))
}

/// Squarefree integer representing the square class of a nonzero rational.
pub fn squarefree_class(x: &BigRational) -> Result<BigInt, ExactError> {
    squarefree_part(&(x.numer() * x.denom()))
}

pub fn is_squarefree(n: i64) -> bool {
    n != 0 && squarefree_part_i64(n).is_ok_and(|m| m == n)
}

/// Deterministic primality for the small primes used as residue characteristics.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

pub fn gcd_i64(a: i64, b: i64) -> i64 {
    a.gcd(&b)
}

/// Parses `p`, `p/q` or `-p/q` exactly. Decimal points and exponents are rejected.
pub fn parse_rational(s: &str) -> Result<BigRational, ExactError> {
    let s = s.trim();
    let bad = || ExactError::Parse(format!("not an exact rational: {s:?}"));
    if s.is_empty() || s.contains(['.', 'e', 'E']) {
        return Err(bad());
    }
    let (num, den) = match s.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(ExactError::Parse(format!("zero denominator in {s:?}")));
    }
    Ok(BigRational::new(num, den))
}
