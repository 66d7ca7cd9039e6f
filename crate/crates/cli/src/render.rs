//! Plain-text renderings. Every value that appears in the JSON form appears
//! here verbatim.

use std::fmt::Write;

use fourfold_core::criterion::{Certificate, Conclusion, PrimeData};
use fourfold_core::curves::QuadCurve;

use crate::{ExampleChecks, FamilyVerification, FrobeniusReport};

fn verdict(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}

fn yes(ok: bool) -> &'static str {
    if ok {
        "yes"
    } else {
        "no"
    }
}

pub(crate) fn family(v: &FamilyVerification) -> String {
    let r = &v.report;
    let mut s = String::new();
    writeln!(s, "seed          {}", v.seed).unwrap();
    for (name, ok) in [
        ("delta", r.delta),
        ("conjugation", r.conjugation),
        ("product", r.product),
        ("transpose", r.transpose),
        ("l_quadratic", r.l_quadratic),
    ] {
        writeln!(s, "{name:<13} {}", verdict(ok)).unwrap();
    }
    writeln!(s, "determinant   {}", r.determinant).unwrap();
    let sc = &v.spot_checks;
    writeln!(s, "spot checks   {}/{} {}", sc.passed, sc.samples, verdict(sc.passed == sc.samples)).unwrap();
    for [a, b, c, d] in &sc.failures {
        writeln!(s, "  failed at a = {a}, b = {b}, c = {c}, delta = {d}").unwrap();
    }
    writeln!(s, "overall       {}", verdict(v.all_pass)).unwrap();
    s
}

fn prime(s: &mut String, d: &PrimeData) {
    let w = &d.weil;
    writeln!(s, "prime above {} ({:?}, label {})", d.p, d.splitting, d.label).unwrap();
    writeln!(s, "  q             {}", d.q).unwrap();
    writeln!(s, "  a1, a2        {}, {}", w.a1, w.a2).unwrap();
    writeln!(s, "  chi(T)        {}", d.chi).unwrap();
    writeln!(s, "  ordinary      {}", yes(d.ordinary)).unwrap();
    let st = &d.stable;
    let stable = match (st.irreducible, st.failing_t) {
        (false, _) => "no (chi is reducible)".to_string(),
        (true, Some(t)) => format!("no (Phi_{t} divides f)"),
        (true, None) => format!("yes ({} cyclotomic orders excluded)", st.tested_orders.len()),
    };
    writeln!(s, "  stable        {stable}").unwrap();
    let subs: Vec<String> = d.subfields.iter().map(|m| format!("Q(sqrt({m}))")).collect();
    writeln!(s, "  subfields     {}", if subs.is_empty() { "-".into() } else { subs.join(", ") }).unwrap();
}

pub(crate) fn certificate(c: &Certificate) -> String {
    let mut s = String::new();
    writeln!(s, "schema        {}", c.schema).unwrap();
    writeln!(s, "seed          {}", c.seed).unwrap();
    match QuadCurve::from_json(&c.curve) {
        Ok(curve) => writeln!(s, "curve         {curve}").unwrap(),
        Err(_) => writeln!(s, "curve         {:?}", c.curve.f).unwrap(),
    }
    prime(&mut s, &c.prime_p);
    prime(&mut s, &c.prime_q);
    writeln!(s, "fields meet in Q  {}", yes(c.intersection_is_q)).unwrap();
    match &c.conclusion {
        Conclusion::EndIsZ => writeln!(s, "conclusion    EndIsZ").unwrap(),
        Conclusion::Inconclusive(why) => writeln!(s, "conclusion    Inconclusive: {why}").unwrap(),
    }
    if let Some(g) = &c.gl4 {
        writeln!(s, "params        a = {}, b = {}, c = {}, delta = {}", g.params[0], g.params[1], g.params[2], g.delta).unwrap();
        writeln!(s, "alpha         {} ({:?})", g.alpha, g.norm_class).unwrap();
        writeln!(s, "cocycle       {}", g.cocycle).unwrap();
        writeln!(s, "End^0         {}", g.end_algebra_label).unwrap();
        writeln!(s, "GL4-type      {}", yes(g.genuinely_gl4)).unwrap();
    }
    s
}

pub(crate) fn checks(c: &ExampleChecks) -> String {
    let mut s = String::new();
    let sq = c.square_factor.as_deref().unwrap_or("-");
    writeln!(s, "printed equation  {} (square factor {sq})", verdict(c.printed_equation_matches)).unwrap();
    let ok = c.richelot_doubled == c.richelot_tested;
    writeln!(s, "richelot [2]      {}/{} {}", c.richelot_doubled, c.richelot_tested, verdict(ok)).unwrap();
    s
}

pub(crate) fn frobenius(r: &FrobeniusReport, curve: &QuadCurve) -> String {
    let mut s = String::new();
    writeln!(s, "seed          {}", r.seed).unwrap();
    writeln!(s, "curve         {curve}").unwrap();
    prime(&mut s, &r.prime);
    writeln!(s, "  #J(F_q)       {}", r.jacobian_order).unwrap();
    s
}
