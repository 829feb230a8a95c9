//! Conjecture scans over grids of standard codes.
//!
//! Items are evaluated in parallel and collected in canonical order, so the
//! report is byte-identical across runs apart from the `meta` block.

use std::path::Path;
use std::time::Instant;

use cubic_skein::colorings::coloring_pairs;
use cubic_skein::pretzel::eval_pretzel;
use cubic_skein::relations::{hopf_relation, reverse_check, standard_codes};
use cubic_skein::ring::exact_divide;
use cubic_skein::rta::eval_code;
use cubic_skein::{ConwayCode, LaurentPoly, PretzelCode};
use rayon::prelude::*;
use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::commands::schema;
use crate::failure::Failure;
use crate::{Check, Mode};

#[derive(Clone, Debug, Serialize)]
pub struct ScanReport {
    pub schema: String,
    pub version: &'static str,
    pub parameters: Parameters,
    pub items: Vec<ScanItem>,
    /// Codes of the items that count against the check.
    pub counterexamples: Vec<String>,
    /// "pass" exactly when `counterexamples` is empty.
    pub verdict: &'static str,
    /// Run-dependent data; everything outside this block is deterministic.
    pub meta: Meta,
}

#[derive(Clone, Debug, Serialize)]
pub struct Parameters {
    pub check: &'static str,
    pub max_len: usize,
    pub max_entry: i64,
    /// "assert" or "report" after resolving `--mode auto`.
    pub mode: &'static str,
}

#[derive(Clone, Debug, Serialize)]
pub struct ScanItem {
    pub code: String,
    /// First 16 hex digits of SHA-256 over the canonical text of the item's polynomial.
    pub hash: String,
    pub verdict: String,
    pub summary: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct Meta {
    pub threads: usize,
    pub wall_time_ms: u128,
}

fn poly_hash(p: &LaurentPoly) -> String {
    let digest = Sha256::digest(p.to_string().as_bytes());
    digest.iter().take(8).map(|b| format!("{b:02x}")).collect()
}

fn check_name(c: Check) -> &'static str {
    match c {
        Check::HopfDivisibility => "hopf-divisibility",
        Check::Col7 => "col7",
        Check::PretzelBridge => "pretzel-bridge",
    }
}

/// Whether the scan is a hard assertion. Hopf divisibility is asserted on the
/// grid up to length 4 and entry 4 and reported beyond it; the other checks
/// are always report-only under `auto`.
fn asserts(check: Check, max_len: usize, max_entry: i64, mode: Mode) -> bool {
    match mode {
        Mode::Assert => true,
        Mode::Report => false,
        Mode::Auto => check == Check::HopfDivisibility && max_len <= 4 && max_entry <= 4,
    }
}

type Items = (Vec<ScanItem>, Vec<String>);

fn hopf_divisibility(max_len: usize, max_entry: i64) -> Result<Items, Failure> {
    let codes = standard_codes(max_len, max_entry);
    let rows: Vec<(ScanItem, bool)> = codes
        .par_iter()
        .map(|c| -> Result<_, Failure> {
            let value = eval_code(c, None)?;
            let r = reverse_check(c)?;
            let summary = match (&r.quotient, r.framing) {
                (Some(q), _) if q.is_zero() => format!("reverse {} has the same value", r.reversed),
                (Some(q), _) => format!("reverse {}; quotient has {} terms", r.reversed, q.len()),
                (None, Some(k)) => format!("reverse {}; divisible after scaling it by a^{k}", r.reversed),
                (None, None) => format!("reverse {}; no framing a^k with |k| <= 10 helps", r.reversed),
            };
            let verdict = if r.divisible { "divisible" } else { "not-divisible" };
            let item = ScanItem { code: c.to_string(), hash: poly_hash(&value), verdict: verdict.into(), summary };
            Ok((item, !r.divisible))
        })
        .collect::<Result<_, _>>()?;
    Ok(split(rows))
}

fn col7(max_len: usize, max_entry: i64) -> Result<Items, Failure> {
    let codes = standard_codes(max_len, max_entry);
    let valued: Vec<(ConwayCode, LaurentPoly)> = codes
        .into_par_iter()
        .map(|c| eval_code(&c, None).map(|v| (c, v)))
        .collect::<Result<_, _>>()?;
    let pairs = coloring_pairs(&valued, 7)?;
    let value_of = |c: &ConwayCode| valued.iter().find(|(d, _)| d == c).map(|(_, v)| v.clone()).unwrap_or_default();
    let rows = pairs
        .iter()
        .map(|q| {
            let kind = if q.exact { "equal values" } else { "values differ by a multiple of R_Hopf" };
            let item = ScanItem {
                code: format!("{} ~ {}", q.first, q.second),
                hash: poly_hash(&value_of(&q.first)),
                verdict: if q.differs() { "col7-differs" } else { "col7-equal" }.into(),
                summary: format!("{kind}; col7 {} and {}", q.col_first, q.col_second),
            };
            (item, q.differs())
        })
        .collect();
    Ok(split(rows))
}

fn compare_with_hopf(x: &LaurentPoly, y: &LaurentPoly) -> Result<(&'static str, String), Failure> {
    let d = x - y;
    if d.is_zero() {
        return Ok(("equal", "values agree".into()));
    }
    Ok(match exact_divide(&d, &hopf_relation())? {
        Some(q) => ("hopf-divisible", format!("quotient has {} terms", q.len())),
        None => ("not-divisible", "difference is not a multiple of R_Hopf".into()),
    })
}

/// P(m, 1, ..., 1) with n unit columns against [m, n], for 1 ≤ m ≤ max_entry
/// and 1 ≤ n ≤ max_len, followed by the fixed 6₃ comparison. The 6₃ item
/// never counts as a counterexample: whether its difference lies in the ideal
/// generated by R_Hopf and R_tr- is not decided.
fn pretzel_bridge(max_len: usize, max_entry: i64) -> Result<Items, Failure> {
    let mut grid: Vec<(ConwayCode, PretzelCode)> = Vec::new();
    for m in 1..=max_entry {
        for n in 1..=max_len as i64 {
            let Ok(code) = ConwayCode::from_ints(&[m, n]) else { continue };
            let mut cols = vec![m];
            cols.extend(std::iter::repeat_n(1, n as usize));
            grid.push((code, PretzelCode::from_ints(&cols)?));
        }
    }
    grid.sort();
    let mut rows: Vec<(ScanItem, bool)> = grid
        .par_iter()
        .map(|(code, pz)| -> Result<_, Failure> {
            let value = eval_pretzel(pz)?;
            let (verdict, summary) = compare_with_hopf(&value, &eval_code(code, None)?)?;
            let item = ScanItem { code: format!("{pz} vs {code}"), hash: poly_hash(&value), verdict: verdict.into(), summary };
            Ok((item, verdict == "not-divisible"))
        })
        .collect::<Result<_, _>>()?;
    let six = ConwayCode::from_ints(&[2, 1, 1, 2])?;
    let pz = PretzelCode::from_ints(&[2, 1, -3, 1])?;
    let value = eval_code(&six, None)?;
    let (verdict, summary) = compare_with_hopf(&value, &eval_pretzel(&pz)?)?;
    rows.push((
        ScanItem {
            code: format!("{six} vs {pz}"),
            hash: poly_hash(&value),
            verdict: verdict.into(),
            summary: format!("{summary}; membership in (R_Hopf, R_tr-) not decided"),
        },
        false,
    ));
    Ok(split(rows))
}

fn split(rows: Vec<(ScanItem, bool)>) -> Items {
    let bad = rows.iter().filter(|(_, b)| *b).map(|(i, _)| i.code.clone()).collect();
    (rows.into_iter().map(|(i, _)| i).collect(), bad)
}

pub fn build(check: Check, max_len: usize, max_entry: i64, mode: Mode) -> Result<ScanReport, Failure> {
    let start = Instant::now();
    let (items, counterexamples) = match check {
        Check::HopfDivisibility => hopf_divisibility(max_len, max_entry)?,
        Check::Col7 => col7(max_len, max_entry)?,
        Check::PretzelBridge => pretzel_bridge(max_len, max_entry)?,
    };
    let assert = asserts(check, max_len, max_entry, mode);
    Ok(ScanReport {
        schema: schema("scan"),
        version: env!("CARGO_PKG_VERSION"),
        parameters: Parameters {
            check: check_name(check),
            max_len,
            max_entry,
            mode: if assert { "assert" } else { "report" },
        },
        verdict: if counterexamples.is_empty() { "pass" } else { "fail" },
        items,
        counterexamples,
        meta: Meta { threads: rayon::current_num_threads(), wall_time_ms: start.elapsed().as_millis() },
    })
}

pub fn run(check: Check, max_len: usize, max_entry: i64, mode: Mode, out: Option<&Path>) -> Result<(), Failure> {
    let report = build(check, max_len, max_entry, mode)?;
    let json = serde_json::to_string_pretty(&report)?;
    match out {
        Some(path) => {
            std::fs::write(path, json + "\n")?;
            println!(
                "{}: {} items, {} counterexamples ({} mode)",
                report.verdict,
                report.items.len(),
                report.counterexamples.len(),
                report.parameters.mode
            );
        }
        None => println!("{json}"),
    }
    if report.parameters.mode == "assert" && report.verdict != "pass" {
        return Err(Failure::Assertion(format!(
            "{} counterexamples to {}: {}",
            report.counterexamples.len(),
            report.parameters.check,
            report.counterexamples.join(", ")
        )));
    }
    Ok(())
}
