//! Single-shot subcommands. Each prints either plain text or one JSON object
//! carrying a `schema` field.

use anyhow::Context;
use cubic_skein::colorings::count_fox_colorings;
use cubic_skein::pretzel::{eval_pretzel, eval_pretzel_in_order};
use cubic_skein::relations::{catalog as named_relations, check_corpus, hopf_relation, CheckStatus};
use cubic_skein::ring::{exact_divide, phi_mirror};
use cubic_skein::rta::{eval_code, torus_annulus, torus_link};
use cubic_skein::tangle3::{reduce_word_with, TwistSigns, Word3};
use cubic_skein::tangle_model::{closure_kind, negate_code, Closure};
use cubic_skein::{ConwayCode, LaurentPoly, PretzelCode};
use serde_json::{json, Value};

use crate::failure::Failure;
use crate::{Ambient, ClosureArg, Format, LinkInput, MirrorInput, SignsArg};

pub fn schema(kind: &str) -> String {
    format!("skein.{kind}/1")
}

fn emit(f: Format, kind: &str, text: String, mut body: Value) -> Result<(), Failure> {
    match f {
        Format::Text => println!("{text}"),
        Format::Json => {
            body["schema"] = Value::String(schema(kind));
            println!("{}", serde_json::to_string_pretty(&body)?);
        }
    }
    Ok(())
}

fn parse_poly(text: &str) -> Result<LaurentPoly, Failure> {
    LaurentPoly::parse(text).map_err(|e| Failure::Usage(anyhow::Error::from(e).context(format!("polynomial {text:?}"))))
}

fn closure_of(arg: ClosureArg, code: &ConwayCode) -> Closure {
    match arg {
        ClosureArg::Num => Closure::Numerator,
        ClosureArg::Den => Closure::Denominator,
        ClosureArg::Auto => closure_kind(code),
    }
}

/// Resolves a divisor or dividend: `hopf`, a catalog name, `@path`, or a
/// literal polynomial, in that order.
pub fn resolve_operand(spec: &str) -> Result<(String, LaurentPoly), Failure> {
    if spec.eq_ignore_ascii_case("hopf") {
        return Ok(("R_Hopf".into(), hopf_relation()));
    }
    if let Some(path) = spec.strip_prefix('@') {
        let text = std::fs::read_to_string(path)
            .with_context(|| format!("reading {path}"))
            .map_err(Failure::Usage)?;
        return Ok((spec.into(), parse_poly(text.trim())?));
    }
    if spec.starts_with("R_") {
        let rel = named_relations()?
            .into_iter()
            .find(|r| r.name == spec)
            .ok_or_else(|| Failure::usage(format!("no relation named {spec:?} (see `skein catalog`)")))?;
        let p = rel.value.to_poly().ok_or_else(|| Failure::usage(format!("{spec} is a fraction, not a polynomial")))?;
        return Ok((rel.name, p));
    }
    Ok((spec.into(), parse_poly(spec)?))
}

pub fn eval(f: Format, input: &LinkInput, closure: ClosureArg) -> Result<(), Failure> {
    let (label, used, value) = if let Some(text) = &input.code {
        let code = ConwayCode::parse(text)?;
        let c = closure_of(closure, &code);
        (code.to_string(), c, eval_code(&code, Some(c))?)
    } else {
        let text = input.pretzel.as_deref().unwrap_or_default();
        let code = PretzelCode::parse(text)?;
        if closure == ClosureArg::Den {
            return Err(Failure::usage("pretzel links only have the numerator closure"));
        }
        (code.to_string(), Closure::Numerator, eval_pretzel(&code)?)
    };
    let body = json!({"input": label, "closure": used.to_string(), "value": value.to_string()});
    emit(f, "eval", value.to_string(), body)
}

pub fn relation(
    f: Format,
    a: &str,
    b: &str,
    scale_a: &str,
    scale_b: &str,
    divide_by: Option<&str>,
) -> Result<(), Failure> {
    let (ca, cb) = (ConwayCode::parse(a)?, ConwayCode::parse(b)?);
    let (sa, sb) = (parse_poly(scale_a)?, parse_poly(scale_b)?);
    let diff = &(&sa * &eval_code(&ca, None)?) - &(&sb * &eval_code(&cb, None)?);
    let mut body = json!({
        "a": ca.to_string(),
        "b": cb.to_string(),
        "scale_a": sa.to_string(),
        "scale_b": sb.to_string(),
        "difference": diff.to_string(),
    });
    let Some(spec) = divide_by else {
        return emit(f, "relation", diff.to_string(), body);
    };
    let (name, d) = resolve_operand(spec)?;
    let q = exact_divide(&diff, &d)?;
    body["divisor"] = json!(name);
    body["quotient"] = q.as_ref().map_or(Value::Null, |q| json!(q.to_string()));
    let verdict = match &q {
        Some(q) => format!("quotient: {q}"),
        None => format!("not divisible by {name}"),
    };
    emit(f, "relation", format!("difference: {diff}\n{verdict}"), body)
}

pub fn divide(f: Format, num: &str, den: &str, require: bool) -> Result<(), Failure> {
    let (nn, n) = resolve_operand(num)?;
    let (dn, d) = resolve_operand(den)?;
    let q = exact_divide(&n, &d)?;
    let text = match &q {
        Some(q) => q.to_string(),
        None => format!("not divisible by {dn}"),
    };
    let body = json!({
        "num": nn,
        "den": dn,
        "quotient": q.as_ref().map_or(Value::Null, |q| json!(q.to_string())),
    });
    emit(f, "divide", text, body)?;
    if require && q.is_none() {
        return Err(Failure::Assertion(format!("{nn} is not divisible by {dn}")));
    }
    Ok(())
}

pub fn mirror(f: Format, input: &MirrorInput) -> Result<(), Failure> {
    if let Some(text) = &input.code {
        let code = ConwayCode::parse(text)?;
        let m = negate_code(&code)?;
        let v = eval_code(&m, None)?;
        let body = json!({"input": code.to_string(), "mirror": m.to_string(), "value": v.to_string()});
        return emit(f, "mirror", format!("code: {m}\nvalue: {v}"), body);
    }
    let p = parse_poly(input.poly.as_deref().unwrap_or_default())?;
    let m = phi_mirror(&p);
    emit(f, "mirror", m.to_string(), json!({"input": p.to_string(), "value": m.to_string()}))
}

pub fn torus(f: Format, n: i64, ambient: Ambient) -> Result<(), Failure> {
    match ambient {
        Ambient::S3 => {
            let v = torus_link(n)?;
            emit(f, "torus", v.to_string(), json!({"n": n, "ambient": "s3", "value": v.to_string()}))
        }
        Ambient::Annulus => {
            let c = torus_annulus(n)?;
            let text = format!("D1: {}\nD0: {}\nD-1: {}\nscalar: {}", c.d1, c.d0, c.dm1, c.scalar);
            let body = json!({
                "n": n,
                "ambient": "annulus",
                "d1": c.d1.to_string(),
                "d0": c.d0.to_string(),
                "dm1": c.dm1.to_string(),
                "scalar": c.scalar.to_string(),
            });
            emit(f, "torus", text, body)
        }
    }
}

fn parse_order(text: &str) -> Result<Vec<usize>, Failure> {
    text.split(',')
        .map(|s| s.trim().parse::<usize>().map_err(|_| Failure::usage(format!("bad column index {s:?} in --order"))))
        .collect()
}

pub fn pretzel(f: Format, code: &str, order: Option<&str>) -> Result<(), Failure> {
    let code = PretzelCode::parse(code)?;
    let order = match order {
        Some(o) => parse_order(o)?,
        None => (0..code.columns().len()).collect(),
    };
    let (v, trace) = eval_pretzel_in_order(&code, &order)?;
    let text = format!(
        "value: {v}\nzero terminals: {}\nzero terminals with inf columns: {}\ntorus terminals: {}",
        trace.zero_terminals, trace.zero_with_inf, trace.torus_terminals
    );
    let body = json!({
        "input": code.to_string(),
        "order": order,
        "value": v.to_string(),
        "zero_terminals": trace.zero_terminals,
        "zero_with_inf": trace.zero_with_inf,
        "torus_terminals": trace.torus_terminals,
    });
    emit(f, "pretzel", text, body)
}

pub fn reduce3(f: Format, word: &str, signs: SignsArg) -> Result<(), Failure> {
    let w = Word3::parse(word)?;
    let (signs, label) = match signs {
        SignsArg::Consistent => (TwistSigns::Consistent, "consistent"),
        SignsArg::Printed => (TwistSigns::Printed, "printed"),
    };
    let c = reduce_word_with(signs, &w);
    let terms: Vec<Value> = c.iter().map(|(b, p)| json!({"basis": b.name(), "coeff": p.to_string()})).collect();
    emit(f, "reduce3", c.to_string(), json!({"word": w.to_string(), "signs": label, "terms": terms}))
}

pub fn color(f: Format, code: &str, p: u64, closure: ClosureArg) -> Result<(), Failure> {
    let code = ConwayCode::parse(code)?;
    let c = closure_of(closure, &code);
    let n = count_fox_colorings(&code, p, Some(c))?;
    let body = json!({"code": code.to_string(), "p": p, "closure": c.to_string(), "colorings": n.to_string()});
    emit(f, "color", n.to_string(), body)
}

fn status_name(s: CheckStatus) -> &'static str {
    match s {
        CheckStatus::Equal => "equal",
        CheckStatus::Negated => "negated",
        CheckStatus::Differs => "differs",
        CheckStatus::NoComputed => "input-only",
    }
}

pub fn catalog(f: Format, check: bool) -> Result<(), Failure> {
    let rels = named_relations()?;
    let mut text: Vec<String> = rels.iter().map(|r| format!("{} = {}", r.name, r.value)).collect();
    let list: Vec<Value> = rels
        .iter()
        .map(|r| {
            let coeffs = r.coeffs.as_ref().map_or(Value::Null, |c| {
                json!({
                    "c3": c.c3.to_string(),
                    "c2": c.c2.to_string(),
                    "c1": c.c1.to_string(),
                    "c0": c.c0.to_string(),
                    "cinf": c.cinf.to_string(),
                })
            });
            json!({"name": r.name, "value": r.value.to_string(), "provenance": r.provenance, "coeffs": coeffs})
        })
        .collect();
    let mut body = json!({"relations": list});
    if check {
        let checks = check_corpus()?;
        text.push("corpus:".into());
        for c in &checks {
            text.push(format!("  {}: {}", c.name, status_name(c.status)));
            text.extend(c.diff.iter().map(|d| format!("    {d}")));
        }
        body["corpus"] = checks
            .iter()
            .map(|c| json!({"name": c.name, "status": status_name(c.status), "diff": c.diff}))
            .collect();
    }
    emit(f, "catalog", text.join("\n"), body)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn operands() {
        assert_eq!(resolve_operand("hopf").unwrap().1, hopf_relation());
        assert_eq!(resolve_operand("R_Hopf").unwrap().0, "R_Hopf");
        assert_eq!(resolve_operand("a + b0").unwrap().1, LaurentPoly::parse("b0 + a").unwrap());
        assert_eq!(resolve_operand("R_nope").unwrap_err().code(), 1);
        assert_eq!(resolve_operand("@/nonexistent/file").unwrap_err().code(), 1);
        assert_eq!(resolve_operand("a +").unwrap_err().code(), 1);
    }

    #[test]
    fn order_parsing() {
        assert_eq!(parse_order("2, 0,1").unwrap(), vec![2, 0, 1]);
        assert!(parse_order("1,x").is_err());
    }
}
