//! Acceptance suite: seven criteria, one PASS/FAIL line each.
//!
//! Runs without the libtest harness so the lines always reach the output.
//! Exits nonzero if any criterion fails.

use std::collections::{BTreeSet, HashSet};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::Command;
use std::time::{Duration, Instant};

use fourfold_cli::{example_certificate, EXAMPLE_ALPHA};
use fourfold_core::criterion::{f_resultant, is_stably_irreducible, Conclusion, EndAlgebra};
use fourfold_core::curves::{
    check_double, count_points, example_curve, family_curve, quadratic_extension, same_up_to_square, weil_poly_at,
    weil_poly_finite, CurveError, Jacobian, QuadCurve, RichelotPair, WeilPoly,
};
use fourfold_core::exact::{factor_quartic_over_q, power_charpoly, BigInt, BigRational, UniPoly};
use fourfold_core::finitefield::{FiniteField, FqElem};
use fourfold_core::numberfield::{has_sqrt, quadratic_subfields, QuadElem, QuarticField, ResiduePrime, Splitting};
use fourfold_core::symbolic::FamilyPolynomials;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const SEED: u64 = 0xacce_9700;
const DELTAS: [i64; 6] = [2, 3, 5, 6, 7, 10];
const PRIMES: [u64; 7] = [7, 11, 13, 17, 19, 23, 29];

type Verdict = Result<String, String>;
type Criterion = (&'static str, fn() -> Verdict);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(elapsed: Duration, limit: Duration, what: &str) -> Result<(), String> {
    ensure(elapsed < limit, || format!("{what} took {} ms, limit {} ms", elapsed.as_millis(), limit.as_millis()))
}

fn small_rat(rng: &mut ChaCha8Rng) -> BigRational {
    BigRational::new(rng.gen_range(-4i64..=4).into(), rng.gen_range(1i64..=3).into())
}

/// A family member with good reduction at a random prime above a random
/// rational prime.
fn random_member(rng: &mut ChaCha8Rng) -> (QuadCurve, ResiduePrime, [BigRational; 3]) {
    loop {
        let (a, b, c) = (small_rat(rng), small_rat(rng), small_rat(rng));
        let delta = DELTAS[rng.gen_range(0..DELTAS.len())];
        let p = PRIMES[rng.gen_range(0..PRIMES.len())];
        let Ok(curve) = family_curve(&a, &b, &c, delta) else { continue };
        let label = rng.gen_range(1..=2);
        let Ok(prime) = ResiduePrime::new(delta, p, None).and_then(|pr| match pr.splitting {
            Splitting::Split => ResiduePrime::new(delta, p, Some(label)),
            Splitting::Inert => Ok(pr),
        }) else {
            continue;
        };
        if curve.reduce_at(&prime).is_ok() {
            return (curve, prime, [a, b, c]);
        }
    }
}

// ---------------------------------------------------------------- 1

fn symbolic_identities() -> Verdict {
    let start = Instant::now();
    let fam = FamilyPolynomials::standard();
    let checks = [
        ("delta", fam.verify_delta()),
        ("conjugation", fam.verify_conjugation()),
        ("transpose", fam.verify_transpose()),
        ("product", fam.verify_product()),
    ];
    let elapsed = start.elapsed();
    for (name, ok) in checks {
        ensure(ok, || format!("{name} identity fails"))?;
    }
    within(elapsed, Duration::from_secs(1), "symbolic suite")?;
    Ok(format!("4 identities exact, {} ms", elapsed.as_millis()))
}

// ---------------------------------------------------------------- 2

fn example_end_to_end() -> Verdict {
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_fourfold")).args(["example", "--json"]).output().map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    ensure(out.status.code() == Some(0), || format!("exit status {:?}", out.status.code()))?;
    within(elapsed, Duration::from_secs(10), "`example`")?;
    let again = Command::new(env!("CARGO_BIN_EXE_fourfold")).args(["example", "--json"]).output().map_err(|e| e.to_string())?;
    ensure(again.stdout == out.stdout, || "JSON output differs between runs".into())?;
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).map_err(|e| e.to_string())?;
    ensure(json["schema"] == "gl4-cert/1", || format!("schema {}", json["schema"]))?;
    ensure(json["conclusion"]["kind"] == "EndIsZ", || format!("conclusion {}", json["conclusion"]))?;

    let cert = example_certificate(fourfold_cli::DEFAULT_SEED);
    ensure(serde_json::to_value(&cert).map_err(|e| e.to_string())? == json, || "library and binary disagree".into())?;
    for (d, frozen) in [(&cert.prime_p, (25, 8, 34)), (&cert.prime_q, (121, 28, 390))] {
        ensure(d.splitting == Splitting::Inert, || format!("{} is not inert", d.p))?;
        ensure(d.stable.stable, || format!("prime above {} is not stably irreducible", d.p))?;
        ensure(d.ordinary, || format!("prime above {} is not ordinary", d.p))?;
        let w = d.weil;
        ensure((w.q, w.a1, w.a2) == frozen, || format!("Weil data {w:?} at {}, frozen {frozen:?}", d.p))?;
    }
    let sp: BTreeSet<_> = cert.prime_p.subfields.iter().collect();
    let sq: BTreeSet<_> = cert.prime_q.subfields.iter().collect();
    ensure(sp.is_disjoint(&sq), || format!("subfields {sp:?} and {sq:?} overlap"))?;
    ensure(cert.intersection_is_q, || "Frobenius fields meet beyond Q".into())?;
    ensure(cert.conclusion == Conclusion::EndIsZ, || format!("{:?}", cert.conclusion))?;
    let g = cert.gl4.as_ref().ok_or("no end-algebra block")?;
    ensure(g.end_algebra == EndAlgebra::QsqrtMinus2, || format!("End^0 = {}", g.end_algebra_label))?;
    ensure(g.genuinely_gl4, || "not genuinely of GL4-type".into())?;
    Ok(format!("EndIsZ, End^0 = {}, subfields {sp:?} / {sq:?}, {} ms", g.end_algebra_label, elapsed.as_millis()))
}

// ---------------------------------------------------------------- 3

fn twist_consistency() -> Verdict {
    let one = BigRational::from_integer(1.into());
    let two = BigRational::from_integer(2.into());
    let alpha = QuadElem::parse_in(EXAMPLE_ALPHA, 2).map_err(|e| e.to_string())?;
    let twisted = family_curve(&one, &one, &two, 2).and_then(|c| c.twist(&alpha)).map_err(|e| e.to_string())?;
    match same_up_to_square(&twisted, &example_curve()) {
        Some(s) => Ok(format!("twist(family(1,1,2; 2), sqrt(2)) = {s}^2 * printed sextic")),
        None => Err(format!(
            "parameter-naming discrepancy: twist(family(1,1,2; 2), sqrt(2)) = {twisted} is not a square multiple of {}",
            example_curve()
        )),
    }
}

// ---------------------------------------------------------------- 4

fn richelot_doubling() -> Verdict {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 4);
    let (mut specs, mut total, mut retries) = (0, 0, 0);
    while specs < 6 {
        let (_, prime, [a, b, c]) = random_member(&mut rng);
        let pair = match RichelotPair::new(&a, &b, &c, prime.delta, &prime) {
            Ok(pair) => pair,
            Err(CurveError::BadReduction { .. }) => continue,
            Err(e) => return Err(e.to_string()),
        };
        let mut checked = 0;
        while checked < 20 {
            let d = pair.source().random_divisor(&mut rng);
            match check_double(&pair, &d) {
                Ok(true) => checked += 1,
                Ok(false) => return Err(format!("rho^ rho != [2] at ({a}, {b}, {c}; {}) p = {}: {d:?}", prime.delta, prime.p)),
                Err(CurveError::NonGeneric) => retries += 1,
                Err(e) => return Err(e.to_string()),
            }
        }
        total += checked;
        specs += 1;
    }
    let elapsed = start.elapsed();
    within(elapsed, Duration::from_secs(60), "Richelot suite")?;
    Ok(format!("{total} divisors over {specs} specializations, {retries} non-generic retries, {} ms", elapsed.as_millis()))
}

// ---------------------------------------------------------------- 5

/// Bounds are re-checked by the constructor; `a₂` integrality by recounting.
fn check_weil(w: &WeilPoly, curve: &QuadCurve, prime: &ResiduePrime) -> Result<(), String> {
    ensure(WeilPoly::new(w.q, w.a1, w.a2).as_ref() == Ok(w), || format!("{w:?} violates the Weil bounds"))?;
    let red = curve.reduce_at(prime).map_err(|e| e.to_string())?;
    let ext = quadratic_extension(red.field()).map_err(|e| e.to_string())?;
    let n1 = count_points(&red).map_err(|e| e.to_string())?;
    let n2 = count_points(&red.base_change(ext).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
    let recount = WeilPoly::from_counts(w.q, n1, n2).map_err(|e| format!("counts ({n1}, {n2}): {e}"))?;
    ensure(recount == *w, || format!("{w:?} disagrees with counts ({n1}, {n2})"))
}

fn weil_data() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 5);
    let mut computed = 0;
    let mut killed = 0;
    for _ in 0..5 {
        let (curve, prime, _) = random_member(&mut rng);
        let red = curve.reduce_at(&prime).map_err(|e| e.to_string())?;
        let w = weil_poly_finite(&red).map_err(|e| e.to_string())?;
        check_weil(&w, &curve, &prime)?;
        computed += 1;
        let jac = Jacobian::new(&red).map_err(|e| e.to_string())?;
        let n = w.jacobian_order();
        for _ in 0..20 {
            let d = jac.random_divisor(&mut rng);
            ensure(jac.scalar_mul(&d, &n).is_identity(), || format!("chi(1) = {n} does not kill {d:?}"))?;
            killed += 1;
        }
    }
    let (mut pairs, mut flipped) = (0, 0);
    while flipped < 20 {
        let (curve, prime, _) = random_member(&mut rng);
        let alpha = QuadElem::new(small_rat(&mut rng), small_rat(&mut rng), prime.delta).map_err(|e| e.to_string())?;
        let Ok(red) = prime.reduce(&alpha) else { continue };
        if red.is_zero() {
            continue;
        }
        let twisted = curve.twist(&alpha).map_err(|e| e.to_string())?;
        let w = weil_poly_at(&curve, &prime).map_err(|e| e.to_string())?;
        let wt = weil_poly_at(&twisted, &prime).map_err(|e| e.to_string())?;
        check_weil(&w, &curve, &prime)?;
        check_weil(&wt, &twisted, &prime)?;
        computed += 2;
        let expect = if red.is_square() { w } else { w.quadratic_twist() };
        ensure(wt == expect, || format!("twist by {alpha} at p = {}: {wt:?}, expected {expect:?}", prime.p))?;
        pairs += 1;
        flipped += usize::from(!red.is_square());
    }
    Ok(format!("{killed} divisors killed, {pairs} twist pairs ({flipped} with a1 -> -a1), {computed} Weil polynomials checked"))
}

// ---------------------------------------------------------------- 6

fn f_structure() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 6);
    let t_minus_one_4 = UniPoly::from_ints(&[-1, 1]).pow(4);
    let mut n = 0;
    while n < 60 {
        let q = [3u64, 5, 7, 9, 11, 13, 25, 49, 121][rng.gen_range(0..9)];
        let b1 = (16 * q).isqrt() as i64;
        let b2 = 6 * q as i64;
        let Ok(w) = WeilPoly::new(q, rng.gen_range(-b1..=b1), rng.gen_range(-b2..=b2)) else { continue };
        let f = f_resultant(&w);
        let q8 = BigRational::from_integer(BigInt::from(q).pow(8));
        ensure(f.degree() == Some(16), || format!("deg f = {:?} for {w:?}", f.degree()))?;
        ensure(t_minus_one_4.divides(&f), || format!("(T-1)^4 does not divide f for {w:?}"))?;
        ensure(f.coeffs()[0] == q8 && f.leading() == Some(&q8), || format!("end coefficients of f for {w:?}"))?;
        ensure(f.reversed(16) == f, || format!("roots of f not closed under inversion for {w:?}"))?;
        n += 1;
    }
    for q in [5u64, 25, 49, 121] {
        let rep = is_stably_irreducible(&WeilPoly::new(q, 0, 0).map_err(|e| e.to_string())?);
        ensure(!rep.stable, || format!("T^4 + {q}^2 classified stably irreducible"))?;
    }
    Ok(format!("{n} Weil polynomials, supersingular control rejected for q in 5, 25, 49, 121"))
}

// ---------------------------------------------------------------- 7

/// Remainder of `num` modulo a monic `den`, both ascending.
fn rem_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut r = num.to_vec();
    let dd = den.len() - 1;
    while r.len() > dd {
        let lead = r.pop().unwrap();
        let shift = r.len() - dd;
        for (j, c) in den[..dd].iter().enumerate() {
            r[shift + j] -= lead * c;
        }
    }
    r
}

/// A monic integer quartic is reducible iff it has an integer root below the
/// Cauchy bound or a monic quadratic factor `T² + bT + c` with `c | a₀` and
/// `|b|` below twice that bound.
fn oracle_reducible(coeffs: &[i64]) -> bool {
    let bound = 1 + coeffs.iter().map(|c| c.abs()).max().unwrap();
    let eval = |r: i64| coeffs.iter().rev().fold(0i64, |acc, c| acc * r + c);
    if (-bound..=bound).any(|r| eval(r) == 0) {
        return true;
    }
    let c0 = coeffs[0];
    (-c0.abs()..=c0.abs())
        .filter(|&c| c != 0 && c0 % c == 0)
        .any(|c| (-2 * bound..=2 * bound).any(|b| rem_monic(coeffs, &[c, b, 1]).iter().all(|&x| x == 0)))
}

fn oracle_equivalence() -> Verdict {
    for (p, d) in [(3u64, 2u8), (5, 2), (7, 2), (11, 2), (13, 2)] {
        let k = FiniteField::get(p, d).map_err(|e| e.to_string())?;
        let table: HashSet<FqElem> = k.elements().map(|y| y * y).collect();
        for x in k.elements() {
            ensure(x.is_square() == table.contains(&x), || format!("is_square({x}) wrong in F_{}", k.q()))?;
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 7);
    let mut reducible = 0;
    for i in 0..100 {
        let chi = if i % 3 == 0 {
            let a = UniPoly::from_ints(&[rng.gen_range(-4..=4), rng.gen_range(-4..=4), 1]);
            let b = UniPoly::from_ints(&[rng.gen_range(-4..=4), rng.gen_range(-4..=4), 1]);
            a.mul(&b)
        } else {
            let mut c: Vec<i64> = (0..4).map(|_| rng.gen_range(-5..=5)).collect();
            c.push(1);
            UniPoly::from_ints(&c)
        };
        let fac = factor_quartic_over_q(&chi).map_err(|e| e.to_string())?;
        let coeffs = chi.i64_coeffs().ok_or("non-integer quartic")?;
        ensure(fac.product() == chi, || format!("factors of {chi} do not multiply back"))?;
        ensure(fac.is_irreducible() != oracle_reducible(&coeffs), || format!("verdict on {chi} disagrees with enumeration"))?;
        reducible += usize::from(!fac.is_irreducible());
    }

    for _ in 0..30 {
        let mut c: Vec<i64> = (0..4).map(|_| rng.gen_range(-4..=4)).collect();
        c.push(1);
        let chi = UniPoly::from_ints(&c);
        let (m, n) = (rng.gen_range(1..=4), rng.gen_range(1..=4));
        let direct = power_charpoly(&chi, m * n).map_err(|e| e.to_string())?;
        let nested = power_charpoly(&power_charpoly(&chi, m).map_err(|e| e.to_string())?, n).map_err(|e| e.to_string())?;
        ensure(direct == nested, || format!("power_charpoly({chi}, {m}*{n}) not multiplicative"))?;
    }

    // ℚ(ζ₈) ⊃ ℚ(i), ℚ(√2), ℚ(√−2); ℚ(2^{1/4}) ⊃ ℚ(√2); ℚ(√2, √3) ⊃ ℚ(√2), ℚ(√3), ℚ(√6)
    let named: [(&str, [i64; 5], &[i64]); 3] = [
        ("Q(zeta_8)", [1, 0, 0, 0, 1], &[-2, -1, 2]),
        ("Q(2^(1/4))", [-2, 0, 0, 0, 1], &[2]),
        ("Q(sqrt2, sqrt3)", [1, 0, -10, 0, 1], &[2, 3, 6]),
    ];
    for (tag, coeffs, expect) in named {
        let k = QuarticField::new(UniPoly::from_ints(&coeffs), tag).map_err(|e| e.to_string())?;
        let subs = quadratic_subfields(&k);
        let expect: BTreeSet<BigInt> = expect.iter().map(|&m| BigInt::from(m)).collect();
        ensure(subs == expect, || format!("{tag}: subfields {subs:?}, expected {expect:?}"))?;
        for m in [-30i64, -15, -14, -13, -11, -10, -7, -6, -5, -3, -2, -1, 2, 3, 5, 6, 7, 10, 11, 13, 14, 15, 30] {
            let m = BigInt::from(m);
            ensure(has_sqrt(&k, &m) == expect.contains(&m), || format!("{tag}: has_sqrt({m}) disagrees"))?;
        }
    }
    Ok(format!("5 square tables, 100 quartics ({reducible} reducible), 30 power pairs, 3 named fields"))
}

fn main() {
    let criteria: [Criterion; 7] = [
        ("symbolic identity suite", symbolic_identities),
        ("worked example end to end", example_end_to_end),
        ("family/twist consistency", twist_consistency),
        ("Richelot [2]-check", richelot_doubling),
        ("Weil-data property suite", weil_data),
        ("f(T) structural suite", f_structure),
        ("oracle-equivalence suite", oracle_equivalence),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let verdict = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".into()));
        match verdict {
            Ok(detail) => println!("criterion {}: PASS  {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL  {name}: {why}", i + 1);
            }
        }
    }
    println!("acceptance: {} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
