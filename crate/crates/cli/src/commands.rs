use std::sync::Arc;

use chern::algebra::{parse_generators, parse_ring, Field, MonomialOrder, Polynomial, RingSpec};
use chern::families::{line_with_embedded_point, space_and_line};
use chern::groebner::{colon, krull_dim, vdim_artinian, Ideal};
use chern::invariants::{binomial, h0m, hilbert_coeffs_with, series_fit, socle_dim, QuotientModule};
use chern::monideal::{associated_primes, dimension_filtration, irreducible_decomposition, primary_decomposition};
use chern::sop::{
    cm_test, sample_distinguished_sop, sample_sop, theorem_report, verify_sop, ReportOptions,
};
use chern::{Error, Result};
use serde_json::{json, Value};

use crate::args::{CheckArgs, DecomposeArgs, GbArgs, InvariantsArgs, ModuleArgs, OrderArg, RingArgs, VerifyArgs};

const DEFAULT_PRIME: u64 = 32003;

/// A computed result, plus whether every asserted property held.
pub struct Outcome {
    pub result: Value,
    pub passed: bool,
}

impl Outcome {
    fn ok(result: Value) -> Outcome {
        Outcome { result, passed: true }
    }
}

pub fn parse_field(text: &str) -> Result<Field> {
    let t = text.trim();
    if t == "Q" {
        return Ok(Field::Rational);
    }
    if t == "Fp" {
        return Field::prime(DEFAULT_PRIME);
    }
    let digits = t
        .strip_prefix('F')
        .map(|rest| rest.strip_prefix('<').and_then(|r| r.strip_suffix('>')).unwrap_or(rest))
        .ok_or_else(|| Error::InvalidArgument(format!("unknown field `{t}`; use Q, Fp or F<p>")))?;
    let p = digits
        .parse::<u64>()
        .map_err(|_| Error::InvalidArgument(format!("unknown field `{t}`; use Q, Fp or F<p>")))?;
    Field::prime(p)
}

fn order(arg: OrderArg) -> MonomialOrder {
    match arg {
        OrderArg::Grevlex => MonomialOrder::Grevlex,
        OrderArg::Lex => MonomialOrder::Lex,
    }
}

fn apply_overrides(mut ring: Arc<RingSpec>, args: &RingArgs) -> Result<Arc<RingSpec>> {
    if let Some(f) = &args.field {
        ring = ring.with_field(parse_field(f)?);
    }
    if let Some(o) = args.order {
        ring = ring.with_order(order(o));
    }
    Ok(ring)
}

/// Parses `--ring`, or without it builds `Q[..]` over the variables of
/// `texts` in order of first appearance.
fn ring_from(args: &RingArgs, texts: &[&str]) -> Result<Arc<RingSpec>> {
    let ring = match args.ring.as_deref() {
        Some(text) => parse_ring(text)?,
        None => {
            let mut vars: Vec<String> = Vec::new();
            for text in texts {
                for word in text.split(|c: char| !(c.is_ascii_alphanumeric() || c == '_')) {
                    let is_var = word.chars().next().is_some_and(|c| c.is_ascii_alphabetic() || c == '_');
                    if is_var && !vars.iter().any(|v| v == word) {
                        vars.push(word.to_string());
                    }
                }
            }
            if vars.is_empty() {
                return Err(Error::InvalidArgument("--ring is required".into()));
            }
            RingSpec::new(Field::Rational, vars, MonomialOrder::Grevlex)?
        }
    };
    apply_overrides(ring, args)
}

/// Rewrites `ideal` over `ring`, which has the same variables.
fn transplant(ideal: &Ideal, ring: &Arc<RingSpec>) -> Result<Ideal> {
    let text: Vec<String> = ideal.generators().iter().map(ToString::to_string).collect();
    Ideal::new(ring, parse_generators(&text.join(", "), ring)?)
}

fn parse_pair(text: &str) -> Result<(u32, u32)> {
    let bad = || Error::InvalidArgument(format!("expected `A,B`, got `{text}`"));
    let (a, b) = text.split_once(',').ok_or_else(bad)?;
    Ok((a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?))
}

fn default_field(args: &RingArgs) -> Result<Field> {
    args.field.as_deref().map_or(Field::prime(DEFAULT_PRIME), parse_field)
}

/// The ring and `J` described by the input flags.
/// `extra` is another ideal over the same ring, consulted when the ring is
/// inferred.
pub fn module_from(args: &ModuleArgs, extra: Option<&str>) -> Result<(Arc<RingSpec>, Ideal)> {
    let (ring, j) = if let Some(d) = args.example_1 {
        space_and_line(d, default_field(&args.ring)?)?
    } else if let Some(pair) = &args.example_2 {
        let (a, b) = parse_pair(pair)?;
        line_with_embedded_point(a, b, default_field(&args.ring)?)?
    } else {
        let module = args.module.as_deref().unwrap_or("");
        let ring = ring_from(&args.ring, &[module, extra.unwrap_or("")])?;
        let j = Ideal::parse(module, &ring)?;
        return Ok((ring, j));
    };
    match args.ring.order {
        Some(o) => {
            let ring = ring.with_order(order(o));
            let j = transplant(&j, &ring)?;
            Ok((ring, j))
        }
        None => Ok((ring, j)),
    }
}

fn strings(polys: &[Polynomial]) -> Vec<String> {
    polys.iter().map(ToString::to_string).collect()
}

fn ring_json(ring: &RingSpec) -> Value {
    json!({
        "field": ring.field().to_string(),
        "variables": ring.vars(),
        "order": ring.order().to_string(),
    })
}

pub fn gb(args: &GbArgs) -> Result<Outcome> {
    let ring = ring_from(&args.ring, &[&args.ideal])?;
    let ideal = Ideal::parse(&args.ideal, &ring)?;
    let gb = ideal.gb()?;
    let one = ring.field().one();
    let leading: Vec<String> = gb
        .leading_monomials()
        .iter()
        .map(|m| Polynomial::term(&ring, *m, one.clone()).to_string())
        .collect();
    let dim = if gb.is_unit() { None } else { Some(krull_dim(&ideal)?) };
    Ok(Outcome::ok(json!({
        "ring": ring_json(&ring),
        "basis": strings(gb.basis()),
        "leading_monomials": leading,
        "unit": gb.is_unit(),
        "dim": dim,
    })))
}

pub fn invariants(args: &InvariantsArgs) -> Result<Outcome> {
    let (ring, j) = module_from(&args.input, args.ideal.as_deref())?;
    let module = QuotientModule::new(&j)?;
    let (q, sampled) = match &args.ideal {
        Some(text) => (Ideal::parse(text, &ring)?, false),
        None if module.dim() == 0 => (Ideal::zero(&ring), false),
        None => (sample_sop(&module, 1, args.seed, args.degree)?.remove(0).ideal(), true),
    };
    let parameter_ideal = match verify_sop(&module, q.generators()) {
        Ok(check) => check.is_valid(),
        Err(Error::InvalidArgument(_)) => false,
        Err(e) => return Err(e),
    };
    let length = vdim_artinian(&j.sum(&q)?)?;
    let ir = socle_dim(&module, &q)?;
    let h = h0m(&module)?;
    let fit = series_fit(&module, &q, args.nmax)?;
    Ok(Outcome::ok(json!({
        "ring": ring_json(&ring),
        "module": strings(j.generators()),
        "dim": module.dim(),
        "ideal": strings(q.generators()),
        "sampled": sampled,
        "parameter_ideal": parameter_ideal,
        "length": length,
        "ir": ir,
        "e": fit.e,
        "f": fit.f,
        "hilbert_series": fit.hilbert,
        "socle_series": fit.socle,
        "h0m": { "length": h.length, "exponent": h.exponent },
    })))
}

pub fn decompose(args: &DecomposeArgs) -> Result<Outcome> {
    let (ring, j) = module_from(&args.input, args.ideal.as_deref())?;
    let target = match &args.ideal {
        Some(text) => Ideal::parse(text, &ring)?,
        None => j,
    };
    let names = ring.vars();
    let irreducible: Vec<String> =
        irreducible_decomposition(&target)?.iter().map(|c| c.display(names).to_string()).collect();
    let primary: Vec<Value> = primary_decomposition(&target)?
        .iter()
        .map(|c| {
            json!({
                "component": c.ideal.display(names).to_string(),
                "prime": c.prime.display(names).to_string(),
                "dim": c.prime.dim(),
            })
        })
        .collect();
    let primes: Vec<String> = associated_primes(&target)?.iter().map(|p| p.display(names).to_string()).collect();
    let chain = dimension_filtration(&target)?;
    let levels: Vec<String> = (0..=chain.len()).map(|i| chain.monomial_level(i).display(names).to_string()).collect();
    Ok(Outcome::ok(json!({
        "ring": ring_json(&ring),
        "ideal": strings(target.generators()),
        "irreducible": irreducible,
        "primary": primary,
        "associated_primes": primes,
        "filtration": { "dims": chain.dims(), "levels": levels },
        "unmixed": levels[chain.len() - 1],
    })))
}

pub fn check(args: &CheckArgs) -> Result<Outcome> {
    let (ring, j) = module_from(&args.input, None)?;
    let module = QuotientModule::new(&j)?;
    let options = ReportOptions {
        samples: args.samples,
        seed: args.seed,
        degree: args.degree,
        nmax_cap: args.nmax,
    };
    let report = theorem_report(&module, options)?;
    let passed = report.all_hold();
    Ok(Outcome {
        result: json!({
            "ring": ring_json(&ring),
            "module": strings(j.generators()),
            "report": report,
        }),
        passed,
    })
}

struct Assertions {
    items: Vec<Value>,
    passed: bool,
}

impl Assertions {
    fn new() -> Assertions {
        Assertions { items: Vec::new(), passed: true }
    }

    fn push(&mut self, name: impl Into<String>, expected: Value, actual: Value) {
        let holds = expected == actual;
        self.passed &= holds;
        self.items.push(json!({ "name": name.into(), "expected": expected, "actual": actual, "holds": holds }));
    }
}

pub fn verify_paper(args: &VerifyArgs) -> Result<Outcome> {
    let field = args.field.as_deref().map_or(Field::prime(DEFAULT_PRIME), parse_field)?;
    match args.example {
        1 => verify_space_and_line(args, field),
        _ => verify_embedded_point(args, field),
    }
}

fn verify_space_and_line(args: &VerifyArgs, field: Field) -> Result<Outcome> {
    let d = args.d;
    if d < 3 {
        return Err(Error::InvalidArgument(format!("family 1 needs d >= 3, got {d}")));
    }
    let (ring, j) = space_and_line(d, field)?;
    let module = QuotientModule::new(&j)?;
    let mut checks = Assertions::new();
    checks.push("dim S/J", json!(d), json!(module.dim()));
    let cm = cm_test(&module, 3, args.seed)?;
    checks.push("Cohen-Macaulay", json!(false), json!(cm.cohen_macaulay));

    let count = args.samples.unwrap_or(1);
    let mut samples = Vec::new();
    for sys in sample_distinguished_sop(&module, count, args.seed, 2)? {
        let q = sys.ideal();
        let fit = series_fit(&module, &q, args.nmax)?;
        let f0 = fit.f.as_ref().map(|f| f.coefficients()[0]);
        let expected: Vec<u64> = (0..fit.socle.len() as u64)
            .map(|n| Ok(binomial(n + d as u64 - 1, d as u64 - 1)? as u64 + 1))
            .collect::<Result<_>>()?;
        let label = sys.strings().join(", ");
        checks.push(
            format!("ir(q^(n+1)) = C(n+d-1, d-1) + 1 for n < {}, q = ({label})", expected.len()),
            json!(expected),
            json!(fit.socle.values()),
        );
        checks.push(format!("f_0(q) = 1, q = ({label})"), json!(1), json!(f0));
        let qm = colon(&j.sum(&q)?, &Ideal::maximal(&ring))?;
        let gap = hilbert_coeffs_with(&module, &qm, args.nmax)?.coefficients()[1] - fit.e.coefficients()[1];
        checks.push(format!("e_1(q:m) - e_1(q) = 1, q = ({label})"), json!(1), json!(gap));
        samples.push(json!({ "sop": sys.strings(), "e": fit.e, "f": fit.f, "socle_series": fit.socle }));
    }
    Ok(Outcome {
        result: json!({
            "example": 1,
            "ring": ring_json(&ring),
            "module": strings(j.generators()),
            "assertions": checks.items,
            "samples": samples,
        }),
        passed: checks.passed,
    })
}

fn verify_embedded_point(args: &VerifyArgs, field: Field) -> Result<Outcome> {
    let (a, b) = (args.a, args.b);
    if a < 2 || b < 2 {
        return Err(Error::InvalidArgument(format!("family 2 needs a, b >= 2, got a = {a}, b = {b}")));
    }
    let (ring, j) = line_with_embedded_point(a, b, field)?;
    let module = QuotientModule::new(&j)?;
    let mut checks = Assertions::new();
    checks.push("dim S/J", json!(1), json!(module.dim()));
    let h = h0m(&module)?;
    checks.push("H^0_m(S/J) != 0", json!(true), json!(h.length > 0));
    let cm = cm_test(&module, 3, args.seed)?;
    checks.push("Cohen-Macaulay", json!(false), json!(cm.cohen_macaulay));

    let y = Polynomial::var(&ring, 1).terms()[0].monomial;
    let count = args.samples.unwrap_or(20);
    let mut degenerate = Vec::new();
    let mut irs = Vec::new();
    let mut forms = Vec::new();
    for sys in sample_sop(&module, count, args.seed, 1)? {
        let form = &sys.elements()[0];
        if form.coefficient(&y).is_none() {
            degenerate.push(form.to_string());
            continue;
        }
        irs.push(socle_dim(&module, &sys.ideal())?);
        forms.push(form.to_string());
        if forms.len() == 1 {
            let fit = series_fit(&module, &sys.ideal(), args.nmax)?;
            let f = fit.f.map(|f| f.coefficients().to_vec());
            checks.push(format!("f(q) = [2], q = ({form})"), json!([2]), json!(f));
        }
    }
    checks.push(
        format!("ir(q) = 2 for {} linear parameters", irs.len()),
        json!(vec![2u64; irs.len()]),
        json!(irs),
    );
    Ok(Outcome {
        result: json!({
            "example": 2,
            "ring": ring_json(&ring),
            "module": strings(j.generators()),
            "h0m": { "length": h.length, "exponent": h.exponent },
            "cm": cm,
            "assertions": checks.items,
            "parameters": forms,
            "degenerate": degenerate,
        }),
        passed: checks.passed,
    })
}
