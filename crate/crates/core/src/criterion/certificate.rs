use num_rational::BigRational;
use serde::Serialize;

use super::stable::{is_ordinary, is_stably_irreducible, ser_poly, StableIrreducibilityReport};
use super::CriterionError;
use crate::curves::{family_curve, weil_poly_at, CurveJson, QuadCurve, WeilPoly};
use crate::exact::{squarefree_part_i64, Ring, UniPoly};
use crate::numberfield::{intersection_is_q, norm_class, quadratic_subfields, NormClass, QuadElem, QuarticField, ResiduePrime, Splitting};

/// Version tag of the serialized certificate.
pub const SCHEMA: &str = "gl4-cert/1";

/// Endomorphism algebra of the restriction of scalars of a twist.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum EndAlgebra {
    QsqrtMinus2,
    QsqrtPlus2,
    NotCompletelyDefined,
}

impl EndAlgebra {
    pub fn label(&self) -> &'static str {
        match self {
            EndAlgebra::QsqrtMinus2 => "Q(sqrt(-2))",
            EndAlgebra::QsqrtPlus2 => "Q(sqrt(2))",
            EndAlgebra::NotCompletelyDefined => "not completely defined",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "reason")]
pub enum Conclusion {
    EndIsZ,
    Inconclusive(String),
}

/// Everything computed at one prime of ℚ(√Δ).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PrimeData {
    pub p: u64,
    pub label: u8,
    pub splitting: Splitting,
    pub q: u64,
    pub weil: WeilPoly,
    #[serde(serialize_with = "ser_poly")]
    pub chi: UniPoly,
    pub ordinary: bool,
    pub stable: StableIrreducibilityReport,
    /// Squarefree `m` with `√m ∈ ℚ[T]/χ`; empty when `χ` is reducible.
    pub subfields: Vec<String>,
}

/// Data attached when the curve is a twist of a family member.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Gl4Block {
    pub params: [String; 3],
    pub delta: i64,
    pub alpha: QuadElem,
    pub norm_class: NormClass,
    pub cocycle: i64,
    pub end_algebra: EndAlgebra,
    pub end_algebra_label: String,
    pub degree_four: bool,
    /// The restriction of scalars is an abelian fourfold genuinely of GL₄-type.
    pub genuinely_gl4: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub schema: String,
    /// RNG seed of the producing run; the pipeline itself is deterministic.
    pub seed: u64,
    pub curve: CurveJson,
    pub prime_p: PrimeData,
    pub prime_q: PrimeData,
    pub intersection_is_q: bool,
    pub conclusion: Conclusion,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gl4: Option<Gl4Block>,
}

impl Certificate {
    pub fn end_is_z(&self) -> bool {
        self.conclusion == Conclusion::EndIsZ
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }
}

fn prime_data(curve: &QuadCurve, p: u64, label: Option<u8>) -> Result<(PrimeData, Option<QuarticField>), CriterionError> {
    let prime = ResiduePrime::new(curve.delta(), p, label).map_err(|e| CriterionError::Prime { p, reason: e.to_string() })?;
    let weil = weil_poly_at(curve, &prime).map_err(|e| CriterionError::Prime { p, reason: e.to_string() })?;
    let stable = is_stably_irreducible(&weil);
    let field = stable
        .irreducible
        .then(|| QuarticField::new(weil.chi(), format!("K_{p}")).expect("χ is irreducible"));
    let subfields = field
        .as_ref()
        .map(|k| quadratic_subfields(k).iter().map(|m| m.to_string()).collect())
        .unwrap_or_default();
    let data = PrimeData {
        p,
        label: prime.label,
        splitting: prime.splitting,
        q: weil.q,
        weil,
        chi: weil.chi(),
        ordinary: is_ordinary(&weil),
        stable,
        subfields,
    };
    Ok((data, field))
}

/// Weil data, ordinariness and stable irreducibility at one prime of the
/// base field.
pub fn analyze_prime(curve: &QuadCurve, p: u64, label: Option<u8>) -> Result<PrimeData, CriterionError> {
    prime_data(curve, p, label).map(|(d, _)| d)
}

/// Trivial geometric endomorphisms from two primes above distinct rational
/// primes, each stably irreducible and ordinary, with Frobenius fields
/// meeting only in ℚ. Default labels select 𝔭₁ at split primes.
pub fn certify_trivial_endos(curve: &QuadCurve, p: u64, q: u64) -> Result<Certificate, CriterionError> {
    certify_with_labels(curve, (p, None), (q, None))
}

pub fn certify_with_labels(
    curve: &QuadCurve,
    (p, label_p): (u64, Option<u8>),
    (q, label_q): (u64, Option<u8>),
) -> Result<Certificate, CriterionError> {
    if p == q {
        return Err(CriterionError::SamePrime(p));
    }
    let (rp, rq) = std::thread::scope(|s| {
        let hp = s.spawn(|| prime_data(curve, p, label_p));
        let hq = s.spawn(|| prime_data(curve, q, label_q));
        (hp.join().expect("prime worker panicked"), hq.join().expect("prime worker panicked"))
    });
    let ((dp, kp), (dq, kq)) = (rp?, rq?);
    let intersection = match (&kp, &kq) {
        (Some(a), Some(b)) => intersection_is_q(a, b),
        _ => false,
    };
    let conclusion = first_failure(&dp, &dq, intersection).map_or(Conclusion::EndIsZ, Conclusion::Inconclusive);
    Ok(Certificate {
        schema: SCHEMA.into(),
        seed: 0,
        curve: curve.to_json(),
        prime_p: dp,
        prime_q: dq,
        intersection_is_q: intersection,
        conclusion,
        gl4: None,
    })
}

fn first_failure(dp: &PrimeData, dq: &PrimeData, intersection: bool) -> Option<String> {
    for d in [dp, dq] {
        if !d.stable.stable {
            return Some(match d.stable.failing_t {
                Some(t) => format!("prime above {} is not stably irreducible: Φ_{t} divides f", d.p),
                None => format!("prime above {} is not stably irreducible: χ is reducible", d.p),
            });
        }
        if !d.ordinary {
            return Some(format!("prime above {} is not ordinary", d.p));
        }
    }
    (!intersection).then(|| "the two Frobenius fields share a quadratic subfield".to_string())
}

/// `ℚ(√Δ, √−2)` has degree 4 unless `√−2 ∈ ℚ(√Δ)`.
fn check_degree_four(delta: i64) -> Result<(), CriterionError> {
    let sf = squarefree_part_i64(delta).map_err(|e| CriterionError::Domain(e.to_string()))?;
    if sf == 1 || sf == -2 {
        return Err(CriterionError::DegreeNotFour(delta));
    }
    Ok(())
}

/// `−2` or `+2` as `Nm(α)` lies in `−2·ℚ^{×2}` or `−2Δ·ℚ^{×2}`.
pub fn cocycle_value(delta: i64, alpha: &QuadElem) -> Result<i64, CriterionError> {
    check_alpha(delta, alpha)?;
    match norm_class(alpha).map_err(|e| CriterionError::Domain(e.to_string()))? {
        NormClass::MinusTwoSquare => Ok(-2),
        NormClass::MinusTwoDeltaSquare => Ok(2),
        NormClass::Neither => Err(CriterionError::NotCompletelyDefined(alpha.to_string())),
    }
}

fn check_alpha(delta: i64, alpha: &QuadElem) -> Result<(), CriterionError> {
    check_degree_four(delta)?;
    if alpha.delta() != delta {
        return Err(CriterionError::Domain(format!("α = {alpha} does not lie in ℚ(√{delta})")));
    }
    if Ring::is_zero(alpha) {
        return Err(CriterionError::Domain("α = 0".into()));
    }
    Ok(())
}

/// `ℚ(√−2)` or `ℚ(√2)` by the norm class of `α`; `NotCompletelyDefined`
/// when neither class applies.
pub fn classify_end_algebra(delta: i64, alpha: &QuadElem) -> Result<EndAlgebra, CriterionError> {
    check_alpha(delta, alpha)?;
    Ok(match cocycle_value(delta, alpha) {
        Ok(-2) => EndAlgebra::QsqrtMinus2,
        Ok(_) => EndAlgebra::QsqrtPlus2,
        Err(CriterionError::NotCompletelyDefined(_)) => EndAlgebra::NotCompletelyDefined,
        Err(e) => return Err(e),
    })
}

/// Certificate for `C_α`, the twist by `α` of the family member at
/// `(a, b, c, Δ)`, with the end-algebra block filled.
#[allow(clippy::too_many_arguments)]
pub fn genuinely_gl4_certificate(
    a: &BigRational,
    b: &BigRational,
    c: &BigRational,
    delta: i64,
    alpha: &QuadElem,
    p: (u64, Option<u8>),
    q: (u64, Option<u8>),
) -> Result<Certificate, CriterionError> {
    let end_algebra = classify_end_algebra(delta, alpha)?;
    if end_algebra == EndAlgebra::NotCompletelyDefined {
        return Err(CriterionError::NotCompletelyDefined(alpha.to_string()));
    }
    let cocycle = cocycle_value(delta, alpha)?;
    let curve = family_curve(a, b, c, delta)
        .and_then(|c| c.twist(alpha))
        .map_err(|e| CriterionError::Curve(e.to_string()))?;
    let mut cert = certify_with_labels(&curve, p, q)?;
    let norm_class = norm_class(alpha).map_err(|e| CriterionError::Domain(e.to_string()))?;
    cert.gl4 = Some(Gl4Block {
        params: [a.to_string(), b.to_string(), c.to_string()],
        delta,
        alpha: alpha.clone(),
        norm_class,
        cocycle,
        end_algebra,
        end_algebra_label: end_algebra.label().into(),
        degree_four: true,
        genuinely_gl4: cert.end_is_z(),
    });
    Ok(cert)
}
