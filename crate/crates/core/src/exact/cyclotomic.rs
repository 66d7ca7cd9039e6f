use num_bigint::BigInt;
use num_traits::Zero;

use super::poly::UniPoly;
use super::ExactError;

fn mobius(n: u64) -> i8 {
    let mut rest = n;
    let mut sign = 1;
    let mut p = 2;
    while p * p <= rest {
        if rest.is_multiple_of(p) {
            rest /= p;
            if rest.is_multiple_of(p) {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if rest > 1 {
        sign = -sign;
    }
    sign
}

/// The `t`-th cyclotomic polynomial, `Φ_t = ∏_{d | t} (T^d - 1)^{μ(t/d)}`.
///
/// Factors with `μ = +1` are multiplied in first so every division by
/// `T^d - 1` is exact; both steps are linear-time coefficient recurrences.
pub fn cyclotomic(t: u64) -> Result<UniPoly, ExactError> {
    if t == 0 {
        return Err(ExactError::Domain("cyclotomic polynomial of order 0".into()));
    }
    let divs: Vec<u64> = (1..=t).filter(|d| t.is_multiple_of(*d)).collect();
    let mut c: Vec<BigInt> = vec![BigInt::from(1)];
    for &d in divs.iter().filter(|&&d| mobius(t / d) == 1) {
        let d = d as usize;
        // c · (T^d - 1)
        let mut next = vec![BigInt::zero(); c.len() + d];
        for (i, a) in c.iter().enumerate() {
            next[i + d] += a;
            next[i] -= a;
        }
        c = next;
    }
    for &d in divs.iter().filter(|&&d| mobius(t / d) == -1) {
        let d = d as usize;
        // c / (T^d - 1): q_i = q_{i+d} - c_{i+d}, from the top down.
        let n = c.len() - d;
        let mut q = vec![BigInt::zero(); n];
        for i in (0..n).rev() {
            let above = if i + d < n { q[i + d].clone() } else { BigInt::zero() };
            q[i] = &c[i + d] + above;
        }
        c = q;
    }
    Ok(UniPoly::from_bigints(&c))
}

pub fn totient(n: u64) -> u64 {
    let mut n_rest = n;
    let mut result = n;
    let mut p = 2;
    while p * p <= n_rest {
        if n_rest.is_multiple_of(p) {
            while n_rest.is_multiple_of(p) {
                n_rest /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n_rest > 1 {
        result -= result / n_rest;
    }
    result
}

/// `{ t ≥ 2 : φ(t) ≤ bound }`, ascending. Complete because `φ(t) ≥ √(t/2)`,
/// so every such `t` is at most `2·bound²`.
pub fn totient_bounded_orders(bound: u64) -> Vec<u64> {
    (2..=2 * bound * bound)
        .filter(|&t| totient(t) <= bound)
        .collect()
}
