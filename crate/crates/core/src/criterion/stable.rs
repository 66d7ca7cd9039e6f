use num_bigint::BigInt;
use serde::{Serialize, Serializer};

use crate::curves::WeilPoly;
use crate::exact::{cyclotomic, factor_quartic_over_q, resultant_in_z, totient_bounded_orders, Poly, UniPoly};

/// `4g²` for genus 2.
pub const TOTIENT_BOUND: u64 = 16;

pub(crate) fn ser_poly<S: Serializer>(p: &UniPoly, s: S) -> Result<S::Ok, S::Error> {
    p.coeff_strings().serialize(s)
}

/// `f(T) = Res_z(z⁴P(1/z), z⁴P(T/z)) = ∏_{i,j}(α_i − α_jT)`, `α_i` the
/// Frobenius eigenvalues. Its roots are the ratios `α_i/α_j`.
pub fn f_resultant(w: &WeilPoly) -> UniPoly {
    let chi = Poly::new(w.chi().coeffs().iter().map(|c| UniPoly::constant(c.clone())).collect());
    // z⁴P(T/z) = Σ p_i T^i z^{4−i}
    let p = w.l_poly();
    let mut coeffs = vec![UniPoly::zero(); 5];
    for (i, c) in p.coeffs().iter().enumerate() {
        coeffs[4 - i] = UniPoly::monomial(c.clone(), i);
    }
    let g = Poly::new(coeffs);
    resultant_in_z(&chi, &g).expect("both polynomials are nonzero")
}

/// Whether `χ` stays irreducible with no two eigenvalues differing by a root
/// of unity, i.e. the prime is stably irreducible.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StableIrreducibilityReport {
    pub weil: WeilPoly,
    pub irreducible: bool,
    #[serde(serialize_with = "ser_poly")]
    pub f_poly: UniPoly,
    /// Orders `t` with `Φ_t ∤ f` confirmed, in testing order.
    pub tested_orders: Vec<u64>,
    /// First `t` with `Φ_t | f`.
    pub failing_t: Option<u64>,
    pub stable: bool,
}

/// Irreducibility of `χ` over ℚ, then `Φ_t ∤ f` for every `t ≥ 2` with
/// `φ(t) ≤ 16`. A reducible `χ` short-circuits.
pub fn is_stably_irreducible(w: &WeilPoly) -> StableIrreducibilityReport {
    let f_poly = f_resultant(w);
    let irreducible = factor_quartic_over_q(&w.chi()).expect("χ is a monic integer quartic").is_irreducible();
    let mut report = StableIrreducibilityReport {
        weil: *w,
        irreducible,
        f_poly,
        tested_orders: Vec::new(),
        failing_t: None,
        stable: false,
    };
    if !irreducible {
        return report;
    }
    for t in totient_bounded_orders(TOTIENT_BOUND) {
        let phi = cyclotomic(t).expect("t ≥ 1");
        if phi.divides(&report.f_poly) {
            report.failing_t = Some(t);
            return report;
        }
        report.tested_orders.push(t);
    }
    report.stable = true;
    report
}

/// `p ∤ a₂`, `p` the residue characteristic.
pub fn is_ordinary(w: &WeilPoly) -> bool {
    BigInt::from(w.a2) % BigInt::from(w.characteristic()) != BigInt::from(0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::UniPoly;

    fn w(q: u64, a1: i64, a2: i64) -> WeilPoly {
        WeilPoly::new(q, a1, a2).unwrap()
    }

    #[test]
    fn structure_of_f() {
        let f = f_resultant(&w(25, 8, 34));
        assert_eq!(f.degree(), Some(16));
        let t1 = UniPoly::from_ints(&[-1, 1]).pow(4);
        assert!(t1.divides(&f));
        let q8 = UniPoly::constant(BigInt::from(25u64.pow(8)).into());
        assert_eq!(f.coeffs()[0], q8.coeffs()[0]);
        assert_eq!(f.leading().unwrap(), &q8.coeffs()[0]);
    }

    #[test]
    fn example_primes_are_stable_and_ordinary() {
        for wp in [w(25, 8, 34), w(121, 28, 390)] {
            let r = is_stably_irreducible(&wp);
            assert!(r.irreducible && r.stable, "{r:?}");
            assert_eq!(r.tested_orders.len(), 31);
            assert!(is_ordinary(&wp));
        }
    }

    #[test]
    fn supersingular_control() {
        let r = is_stably_irreducible(&w(25, 0, 0));
        assert!(r.irreducible);
        assert!(!r.stable);
        assert!(r.failing_t.is_some());
        // roots of T⁴ + q² are q^{1/2}ζ₈^{odd}, whose ratios include i
        assert!(cyclotomic(4).unwrap().divides(&r.f_poly));
    }

    #[test]
    fn reducible_short_circuits() {
        // χ = (T² − 2T + 25)(T² + 2T + 25): a₁ = 0, a₂ = 46
        let r = is_stably_irreducible(&w(25, 0, 46));
        assert!(!r.irreducible && !r.stable);
        assert!(r.tested_orders.is_empty() && r.failing_t.is_none());
    }

    #[test]
    fn ordinariness() {
        assert!(!is_ordinary(&w(25, 0, 5)));
        assert!(is_ordinary(&w(25, 0, 1)));
        assert!(!is_ordinary(&w(25, 0, 0)));
    }
}
