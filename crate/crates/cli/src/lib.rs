//! Command implementations behind the `fourfold` binary.
//!
//! Every command returns an [`Outcome`]: the text to print and an exit
//! [`Status`]. Output depends only on the arguments and the seed, so two runs
//! with identical inputs print byte-identical JSON.

mod render;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use fourfold_core::criterion::{analyze_prime, certify_with_labels, genuinely_gl4_certificate, Certificate, PrimeData};
use fourfold_core::curves::{
    check_double, example_curve, family_curve, same_up_to_square, tilde_curve, CurveError, CurveJson, QuadCurve,
    RichelotPair,
};
use fourfold_core::exact::{parse_rational, BigRational, Poly};
use fourfold_core::numberfield::{QuadElem, ResiduePrime};
use fourfold_core::symbolic::{FamilyPolynomials, FamilyReport};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

/// Seed used when `--seed` is absent.
pub const DEFAULT_SEED: u64 = 20_240_807;

/// Parameters of the worked example: `(a, b, c) = (1, 1, 2)`, `Δ = 2`, `α = √2`.
pub const EXAMPLE_PARAMS: [i64; 3] = [1, 1, 2];
pub const EXAMPLE_DELTA: i64 = 2;
pub const EXAMPLE_ALPHA: &str = "0+1*sqrt(2)";
pub const EXAMPLE_PRIMES: (u64, u64) = (5, 11);

/// Squarefree discriminants sampled by the seeded spot checks.
const SPOT_DELTAS: [i64; 6] = [2, 3, 5, 6, 7, 10];
/// Divisors pushed through the Richelot correspondence by `example`.
const EXAMPLE_DIVISORS: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    /// Certificate or verification positive.
    Positive = 0,
    /// Inconclusive certificate or a failed check.
    Negative = 1,
    /// Unusable input.
    Usage = 2,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub status: Status,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(positive: bool, stdout: String) -> Self {
        let status = if positive { Status::Positive } else { Status::Negative };
        Outcome { status, stdout, stderr: String::new() }
    }

    fn usage(msg: impl Into<String>) -> Self {
        Outcome { status: Status::Usage, stdout: String::new(), stderr: format!("error: {}\n", msg.into()) }
    }

    pub fn code(&self) -> u8 {
        self.status as u8
    }
}

#[derive(Parser, Debug)]
#[command(name = "fourfold", version, about = "Certify trivial geometric endomorphisms of genus-2 twists over real quadratic fields")]
pub struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Seed for the randomized spot checks.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check the family identities as generic polynomial identities.
    VerifyFamily {
        /// Random parameter points for the specialized product check.
        #[arg(long, default_value_t = 4)]
        samples: usize,
    },
    /// Certify the worked example end to end.
    Example,
    /// Run the two-prime criterion on a curve.
    Certify(CertifyArgs),
    /// Weil data and stability at one prime.
    Frobenius(FrobeniusArgs),
    /// Emit curve JSON for a family member or its twist.
    Construct(ConstructArgs),
}

/// A curve given by file, by family parameters, or as the worked example.
#[derive(Args, Debug, Clone, Default)]
pub struct CurveSource {
    /// Curve JSON file.
    #[arg(long, conflicts_with_all = ["family", "example"])]
    pub curve: Option<PathBuf>,
    /// Family parameters `a,b,c` as exact rationals.
    #[arg(long, allow_hyphen_values = true, conflicts_with = "example")]
    pub family: Option<String>,
    /// Squarefree Δ > 1 of the base field.
    #[arg(long, allow_hyphen_values = true)]
    pub delta: Option<i64>,
    /// Twisting element, e.g. `0+1*sqrt(2)`.
    #[arg(long, allow_hyphen_values = true)]
    pub alpha: Option<String>,
    /// The worked example over ℚ(√2).
    #[arg(long)]
    pub example: bool,
}

#[derive(Args, Debug, Clone)]
pub struct CertifyArgs {
    #[command(flatten)]
    pub source: CurveSource,
    /// The two rational primes `p,q`.
    #[arg(long)]
    pub primes: String,
    /// Prime labels `l,m` (1 or 2) selecting primes above split `p` and `q`.
    #[arg(long)]
    pub labels: Option<String>,
}

#[derive(Args, Debug, Clone)]
pub struct FrobeniusArgs {
    #[command(flatten)]
    pub source: CurveSource,
    /// Rational prime below the residue field.
    #[arg(long)]
    pub prime: u64,
    /// Prime label (1 or 2) for split primes.
    #[arg(long)]
    pub label: Option<u8>,
}

#[derive(Args, Debug, Clone)]
pub struct ConstructArgs {
    /// Family parameters `a,b,c` as exact rationals.
    #[arg(long, allow_hyphen_values = true)]
    pub family: String,
    #[arg(long, allow_hyphen_values = true)]
    pub delta: i64,
    /// Twisting element applied to the result.
    #[arg(long, allow_hyphen_values = true)]
    pub alpha: Option<String>,
    /// Emit `C̃: y² = (2/Δ)L₁L₂L₃` instead of `C`.
    #[arg(long)]
    pub tilde: bool,
}

pub fn run(cli: &Cli) -> Outcome {
    let result = match &cli.command {
        Command::VerifyFamily { samples } => Ok(cmd_verify_family(&FamilyPolynomials::standard(), *samples, cli.seed, cli.json)),
        Command::Example => Ok(cmd_example(cli.seed, cli.json)),
        Command::Certify(args) => cmd_certify(args, cli.seed, cli.json),
        Command::Frobenius(args) => cmd_frobenius(args, cli.seed, cli.json),
        Command::Construct(args) => cmd_construct(args, cli.seed),
    };
    result.unwrap_or_else(Outcome::usage)
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("output types serialize");
    s.push('\n');
    s
}

fn example_alpha() -> QuadElem {
    QuadElem::parse_in(EXAMPLE_ALPHA, EXAMPLE_DELTA).expect("well-formed constant")
}

fn example_params() -> [BigRational; 3] {
    EXAMPLE_PARAMS.map(|n| BigRational::from_integer(n.into()))
}

// ---------------------------------------------------------------- parsing

fn parse_params(s: &str) -> Result<[BigRational; 3], String> {
    let parts: Vec<&str> = s.split(',').collect();
    let [a, b, c] = parts.as_slice() else {
        return Err(format!("--family expects three rationals a,b,c, got {s:?}"));
    };
    let p = |t: &str| parse_rational(t).map_err(|e| e.to_string());
    Ok([p(a)?, p(b)?, p(c)?])
}

fn parse_pair<T: std::str::FromStr>(s: &str, flag: &str) -> Result<(T, T), String> {
    let bad = || format!("{flag} expects two integers separated by a comma, got {s:?}");
    let (x, y) = s.split_once(',').ok_or_else(bad)?;
    Ok((x.trim().parse().map_err(|_| bad())?, y.trim().parse().map_err(|_| bad())?))
}

/// What a [`CurveSource`] resolves to. One short-lived value per run.
#[allow(clippy::large_enum_variant)]
enum Resolved {
    Family { params: [BigRational; 3], delta: i64, alpha: Option<QuadElem> },
    Curve(QuadCurve),
}

impl Resolved {
    fn curve(&self) -> Result<QuadCurve, String> {
        match self {
            Resolved::Curve(c) => Ok(c.clone()),
            Resolved::Family { params: [a, b, c], delta, alpha } => {
                let base = family_curve(a, b, c, *delta).map_err(|e| e.to_string())?;
                match alpha {
                    Some(al) => base.twist(al).map_err(|e| e.to_string()),
                    None => Ok(base),
                }
            }
        }
    }
}

fn resolve(src: &CurveSource, example_as_family: bool) -> Result<Resolved, String> {
    if src.example {
        if src.delta.is_some() || src.alpha.is_some() {
            return Err("--example takes no --delta or --alpha".into());
        }
        return Ok(if example_as_family {
            Resolved::Family { params: example_params(), delta: EXAMPLE_DELTA, alpha: Some(example_alpha()) }
        } else {
            Resolved::Curve(example_curve())
        });
    }
    if let Some(path) = &src.curve {
        if src.delta.is_some() || src.alpha.is_some() {
            return Err("--curve takes no --delta or --alpha".into());
        }
        let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
        let json: CurveJson = serde_json::from_str(&text).map_err(|e| format!("{}: {e}", path.display()))?;
        return QuadCurve::from_json(&json).map(Resolved::Curve).map_err(|e| format!("{}: {e}", path.display()));
    }
    let Some(family) = &src.family else {
        return Err("one of --curve, --family or --example is required".into());
    };
    let params = parse_params(family)?;
    let delta = src.delta.ok_or("--family requires --delta")?;
    let alpha = src
        .alpha
        .as_deref()
        .map(|s| QuadElem::parse_in(s, delta).map_err(|e| e.to_string()))
        .transpose()?;
    Ok(Resolved::Family { params, delta, alpha })
}

// ---------------------------------------------------------------- verify-family

/// Specialized check `Δ·ˢ(F₁F₂F₃) + L₁L₂L₃ = 0` at random parameter points.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpotChecks {
    pub samples: usize,
    pub passed: usize,
    /// Parameter points `[a, b, c, Δ]` that failed.
    pub failures: Vec<[String; 4]>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyVerification {
    pub seed: u64,
    #[serde(flatten)]
    pub report: FamilyReport,
    pub spot_checks: SpotChecks,
    pub all_pass: bool,
}

fn spot_checks(fam: &FamilyPolynomials, samples: usize, seed: u64) -> SpotChecks {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = SpotChecks { samples, passed: 0, failures: Vec::new() };
    for _ in 0..samples {
        let mut r = || BigRational::new(rng.gen_range(-9i64..=9).into(), rng.gen_range(1i64..=5).into());
        let (a, b, c) = (r(), r(), r());
        let delta = SPOT_DELTAS[rng.gen_range(0..SPOT_DELTAS.len())];
        let ok = fam.specialize(&a, &b, &c, delta).is_ok_and(|s| {
            let conj_f = s.f[0].mul(&s.f[1]).mul(&s.f[2]).map(QuadElem::conjugate);
            let d = QuadElem::from_int(delta, delta).expect("Δ is squarefree");
            conj_f.scale(&d).add(&s.l[0].mul(&s.l[1]).mul(&s.l[2])) == Poly::zero()
        });
        if ok {
            out.passed += 1;
        } else {
            out.failures.push([a.to_string(), b.to_string(), c.to_string(), delta.to_string()]);
        }
    }
    out
}

/// Generic identities of `fam` plus seeded specialized spot checks.
pub fn verify_family(fam: &FamilyPolynomials, samples: usize, seed: u64) -> FamilyVerification {
    let report = fam.report();
    let spot_checks = spot_checks(fam, samples, seed);
    let all_pass = report.all_pass() && spot_checks.passed == samples;
    FamilyVerification { seed, report, spot_checks, all_pass }
}

pub fn cmd_verify_family(fam: &FamilyPolynomials, samples: usize, seed: u64, json: bool) -> Outcome {
    let v = verify_family(fam, samples, seed);
    let text = if json { to_json(&v) } else { render::family(&v) };
    Outcome::ok(v.all_pass, text)
}

// ---------------------------------------------------------------- example

/// Checks run by `example` beyond the certificate itself.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExampleChecks {
    /// The certified curve equals the printed sextic up to `s²`.
    pub printed_equation_matches: bool,
    pub square_factor: Option<String>,
    /// Divisors at the prime above the first example prime with `ρ̂ρ(D) = 2D`.
    pub richelot_doubled: usize,
    pub richelot_tested: usize,
}

impl ExampleChecks {
    pub fn all_pass(&self) -> bool {
        self.printed_equation_matches && self.richelot_doubled == self.richelot_tested
    }
}

pub fn example_certificate(seed: u64) -> Certificate {
    let [a, b, c] = example_params();
    let (p, q) = EXAMPLE_PRIMES;
    genuinely_gl4_certificate(&a, &b, &c, EXAMPLE_DELTA, &example_alpha(), (p, None), (q, None))
        .expect("the example parameters are admissible")
        .with_seed(seed)
}

pub fn example_checks(cert: &Certificate, seed: u64) -> ExampleChecks {
    let certified = QuadCurve::from_json(&cert.curve).expect("certificate curves round-trip");
    let square = same_up_to_square(&certified, &example_curve());
    let [a, b, c] = example_params();
    let prime = ResiduePrime::new(EXAMPLE_DELTA, EXAMPLE_PRIMES.0, None).expect("unramified odd prime");
    let pair = RichelotPair::new(&a, &b, &c, EXAMPLE_DELTA, &prime).expect("good reduction at the example prime");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (mut tested, mut doubled) = (0, 0);
    while tested < EXAMPLE_DIVISORS {
        let d = pair.source().random_divisor(&mut rng);
        match check_double(&pair, &d) {
            Ok(ok) => {
                tested += 1;
                doubled += usize::from(ok);
            }
            Err(CurveError::NonGeneric) => {}
            Err(_) => tested += 1,
        }
    }
    ExampleChecks {
        printed_equation_matches: square.is_some(),
        square_factor: square.map(|s| s.to_string()),
        richelot_doubled: doubled,
        richelot_tested: tested,
    }
}

/// JSON mode prints the bare certificate; the extra checks go to stderr.
pub fn cmd_example(seed: u64, json: bool) -> Outcome {
    let cert = example_certificate(seed);
    let checks = example_checks(&cert, seed);
    let positive = cert.gl4.as_ref().is_some_and(|g| g.genuinely_gl4) && checks.all_pass();
    if json {
        let mut out = Outcome::ok(positive, to_json(&cert));
        out.stderr = render::checks(&checks);
        out
    } else {
        Outcome::ok(positive, format!("{}{}", render::certificate(&cert), render::checks(&checks)))
    }
}

// ---------------------------------------------------------------- certify

pub fn cmd_certify(args: &CertifyArgs, seed: u64, json: bool) -> Result<Outcome, String> {
    let (p, q) = parse_pair::<u64>(&args.primes, "--primes")?;
    let (lp, lq) = match &args.labels {
        Some(s) => {
            let (x, y) = parse_pair::<u8>(s, "--labels")?;
            (Some(x), Some(y))
        }
        None => (None, None),
    };
    let cert = match resolve(&args.source, true)? {
        Resolved::Family { params: [a, b, c], delta, alpha: Some(alpha) } => {
            genuinely_gl4_certificate(&a, &b, &c, delta, &alpha, (p, lp), (q, lq))
        }
        other => certify_with_labels(&other.curve()?, (p, lp), (q, lq)),
    }
    .map_err(|e| e.to_string())?
    .with_seed(seed);
    let positive = cert.end_is_z() && cert.gl4.as_ref().is_none_or(|g| g.genuinely_gl4);
    let text = if json { to_json(&cert) } else { render::certificate(&cert) };
    Ok(Outcome::ok(positive, text))
}

// ---------------------------------------------------------------- frobenius

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FrobeniusReport {
    pub seed: u64,
    pub curve: CurveJson,
    #[serde(flatten)]
    pub prime: PrimeData,
    /// `#J(𝔽_q) = χ(1)`.
    pub jacobian_order: String,
}

pub fn cmd_frobenius(args: &FrobeniusArgs, seed: u64, json: bool) -> Result<Outcome, String> {
    let curve = resolve(&args.source, false)?.curve()?;
    let prime = analyze_prime(&curve, args.prime, args.label).map_err(|e| e.to_string())?;
    let report = FrobeniusReport {
        seed,
        curve: curve.to_json(),
        jacobian_order: prime.weil.jacobian_order().to_string(),
        prime,
    };
    let text = if json { to_json(&report) } else { render::frobenius(&report, &curve) };
    Ok(Outcome::ok(true, text))
}

// ---------------------------------------------------------------- construct

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Constructed {
    pub seed: u64,
    #[serde(flatten)]
    pub curve: CurveJson,
}

/// Always JSON: the output is meant as a `--curve` input file.
pub fn cmd_construct(args: &ConstructArgs, seed: u64) -> Result<Outcome, String> {
    let [a, b, c] = parse_params(&args.family)?;
    let base = if args.tilde { tilde_curve(&a, &b, &c, args.delta) } else { family_curve(&a, &b, &c, args.delta) };
    let mut curve = base.map_err(|e| e.to_string())?;
    if let Some(s) = &args.alpha {
        let alpha = QuadElem::parse_in(s, args.delta).map_err(|e| e.to_string())?;
        curve = curve.twist(&alpha).map_err(|e| e.to_string())?;
    }
    Ok(Outcome::ok(true, to_json(&Constructed { seed, curve: curve.to_json() })))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn params_are_exact_rationals() {
        let [a, b, c] = parse_params("1/2,-3,4/6").unwrap();
        assert_eq!(a, BigRational::new(1.into(), 2.into()));
        assert_eq!(b, BigRational::from_integer((-3).into()));
        assert_eq!(c, BigRational::new(2.into(), 3.into()));
        assert!(parse_params("0.5,1,2").is_err());
        assert!(parse_params("1e3,1,2").is_err());
        assert!(parse_params("1,2").is_err());
        assert!(parse_params("1,2,3,4").is_err());
    }

    #[test]
    fn pairs() {
        assert_eq!(parse_pair::<u64>("5, 11", "--primes"), Ok((5, 11)));
        assert!(parse_pair::<u64>("5", "--primes").is_err());
        assert!(parse_pair::<u64>("5,-1", "--primes").is_err());
        assert!(parse_pair::<u8>("1,300", "--labels").is_err());
    }

    #[test]
    fn spot_checks_depend_only_on_the_seed() {
        let fam = FamilyPolynomials::standard();
        let a = spot_checks(&fam, 3, 17);
        assert_eq!(a, spot_checks(&fam, 3, 17));
        assert_eq!(a.passed, 3);
    }

    #[test]
    fn example_source_resolves_two_ways() {
        let src = CurveSource { example: true, ..Default::default() };
        let printed = resolve(&src, false).unwrap().curve().unwrap();
        let built = resolve(&src, true).unwrap().curve().unwrap();
        assert!(same_up_to_square(&built, &printed).is_some());
        let bad = CurveSource { example: true, delta: Some(3), ..Default::default() };
        assert!(resolve(&bad, true).is_err());
        assert!(resolve(&CurveSource::default(), true).is_err());
    }

    #[test]
    fn usage_errors_map_to_status_two() {
        let out = Outcome::usage("bad input");
        assert_eq!(out.code(), 2);
        assert!(out.stdout.is_empty());
        assert_eq!(out.stderr, "error: bad input\n");
    }
}
