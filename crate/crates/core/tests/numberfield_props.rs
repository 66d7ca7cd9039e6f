use std::collections::BTreeSet;

use fourfold_core::exact::{factor_quartic_over_q, squarefree_part, BigInt, BigRational, Ring, UniPoly};
use fourfold_core::finitefield::legendre;
use fourfold_core::numberfield::{has_sqrt, quadratic_subfields, QuadElem, QuarticField, ResiduePrime};
use proptest::prelude::*;

const DELTAS: [i64; 8] = [2, 3, 5, 6, 7, 10, 13, -5];

fn quad(delta: i64) -> impl Strategy<Value = QuadElem> {
    (-30i64..=30, 1i64..=6, -30i64..=30, 1i64..=6).prop_map(move |(an, ad, bn, bd)| {
        QuadElem::new(
            BigRational::new(an.into(), ad.into()),
            BigRational::new(bn.into(), bd.into()),
            delta,
        )
        .unwrap()
    })
}

fn pair() -> impl Strategy<Value = (QuadElem, QuadElem)> {
    prop::sample::select(DELTAS.to_vec()).prop_flat_map(|d| (quad(d), quad(d)))
}

fn sqfree(n: i64) -> BigInt {
    squarefree_part(&BigInt::from(n)).unwrap()
}

proptest! {
    #[test]
    fn norm_and_conjugation_are_multiplicative((x, y) in pair()) {
        prop_assert_eq!(x.mul(&y).norm(), x.norm() * y.norm());
        prop_assert_eq!(x.mul(&y).conjugate(), x.conjugate().mul(&y.conjugate()));
        let n = x.mul(&x.conjugate());
        prop_assert!(n.is_rational());
        prop_assert_eq!(n.rational_part().clone(), x.norm());
    }

    #[test]
    fn text_roundtrip(x in prop::sample::select(DELTAS.to_vec()).prop_flat_map(quad)) {
        prop_assert_eq!(QuadElem::parse(&x.to_string()).unwrap(), x);
    }

    #[test]
    fn reduction_is_ring_homomorphism(
        (x, y) in pair(),
        p in prop::sample::select(vec![3u64, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43]),
        label in 1u8..=2,
    ) {
        let delta = x.delta();
        prop_assume!(legendre(delta, p) != 0);
        let label = if legendre(delta, p) == 1 { Some(label) } else { None };
        let pr = ResiduePrime::new(delta, p, label).unwrap();
        let (Ok(rx), Ok(ry)) = (pr.reduce(&x), pr.reduce(&y)) else {
            return Ok(());
        };
        prop_assert_eq!(pr.reduce(&x.add(&y)).unwrap(), rx + ry);
        prop_assert_eq!(pr.reduce(&x.mul(&y)).unwrap(), rx * ry);
        let s = pr.sqrt_delta_image();
        prop_assert_eq!(s * s, pr.residue_field().from_int(delta));
    }
}

#[test]
fn biquadratic_fields_have_three_subfields() {
    let ms = [-7i64, -3, -2, -1, 2, 3, 5, 6, 7, 10, 11];
    for (i, &m1) in ms.iter().enumerate() {
        for &m2 in &ms[i + 1..] {
            // minimal polynomial of √m1 + √m2
            let s = m1 + m2;
            let d = m1 - m2;
            let chi = UniPoly::from_ints(&[d * d, 0, -2 * s, 0, 1]);
            let Ok(k) = QuarticField::new(chi, "biquadratic") else {
                panic!("√{m1} + √{m2} should have degree 4");
            };
            let expect: BTreeSet<BigInt> = [sqfree(m1), sqfree(m2), sqfree(m1 * m2)].into_iter().collect();
            assert_eq!(quadratic_subfields(&k), expect, "ℚ(√{m1}, √{m2})");
            for m in -15i64..=15 {
                if m == 0 || m == 1 || sqfree(m) != BigInt::from(m) {
                    continue;
                }
                assert_eq!(has_sqrt(&k, &BigInt::from(m)), expect.contains(&BigInt::from(m)));
            }
        }
    }
}

#[test]
fn weil_quartics_contain_real_subfield() {
    let mut seen = 0;
    for q in [5i64, 7, 9, 11, 25] {
        for a in (-4 * q..=4 * q).filter(|a| a * a <= 16 * q) {
            for b in (-2 * q..=6 * q).step_by(q as usize) {
                let chi = UniPoly::from_ints(&[q * q, -a * q, b, -a, 1]);
                if !factor_quartic_over_q(&chi).unwrap().is_irreducible() {
                    continue;
                }
                let k = QuarticField::new(chi, "weil").unwrap();
                let real = a * a - 4 * b + 8 * q;
                let subs = quadratic_subfields(&k);
                assert!(subs.contains(&sqfree(real)), "q={q} a={a} b={b}: {subs:?}");
                for m in &subs {
                    assert!(has_sqrt(&k, m));
                }
                seen += 1;
            }
        }
    }
    assert!(seen > 100);
}
