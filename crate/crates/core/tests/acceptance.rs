//! Acceptance run: one PASS/FAIL line per criterion.
//!
//! Criteria that cannot hold as printed (the reasons are in each FAIL line)
//! are listed in `KNOWN_RED`. The run exits nonzero only if some other
//! criterion fails, so a regression is still caught by `cargo test`.

use std::time::Instant;

use anyhow::{anyhow, Result};
use cubic_skein::colorings::{count_fox_colorings, diagram_from_code};
use cubic_skein::pretzel::eval_pretzel;
use cubic_skein::relations::*;
use cubic_skein::ring::{
    alpha_substitute, exact_divide, kd_specialize, phi_mirror, sym, trivial_component, KdInfinity, LaurentPoly,
    RingFraction,
};
use cubic_skein::rta::{eval_code, p_prime, torus_via_expansion, two_tangle_product, u_closed, u_sum};
use cubic_skein::tangle3::{self, IdentityStatus, PairOutcome, TwistSigns};
use cubic_skein::tangle_model::{BaseTangle, Closure, ConwayCode, PretzelCode, TangleCombo};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

const KNOWN_RED: [u32; 5] = [3, 10, 11, 13, 14];

struct Outcome {
    pass: bool,
    notes: Vec<String>,
}

fn ok(pass: bool, notes: Vec<String>) -> Result<Outcome> {
    Ok(Outcome { pass, notes })
}

fn p(s: &str) -> LaurentPoly {
    s.parse().expect("static polynomial")
}

fn code(xs: &[i64]) -> ConwayCode {
    ConwayCode::from_ints(xs).expect("static code")
}

fn corpus_equal(name: &str) -> Result<(bool, Vec<String>)> {
    let printed = golden().get(name).ok_or_else(|| anyhow!("no corpus entry {name}"))?.value();
    let got = computed_value(name)?.ok_or_else(|| anyhow!("nothing computed for {name}"))?;
    if printed.frac_equal(&got) {
        return Ok((true, vec![]));
    }
    let mut notes = vec![format!("{name} differs from the printed value")];
    if let (Some(x), Some(y)) = (printed.to_poly(), got.to_poly()) {
        notes.extend(term_diff(&x, &y).into_iter().map(|d| format!("  {d}")));
    }
    Ok((false, notes))
}

fn all_equal(names: &[&str]) -> Result<(bool, Vec<String>)> {
    let mut pass = true;
    let mut notes = vec![];
    for n in names {
        let (ok, more) = corpus_equal(n)?;
        pass &= ok;
        notes.extend(more);
    }
    Ok((pass, notes))
}

fn hopf_divides(x: &LaurentPoly) -> Result<bool> {
    Ok(exact_divide(x, &hopf_relation())?.is_some())
}

fn c1() -> Result<Outcome> {
    let (pass, notes) = corpus_equal("t")?;
    let t = trivial_component();
    ok(pass && phi_mirror(&t) == t, notes)
}

fn c2() -> Result<Outcome> {
    let (mut pass, mut notes) = all_equal(&["H_plus", "H_minus"])?;
    let r = relation_between(&code(&[-1, -1]), &code(&[1, 1]), &LaurentPoly::one(), &LaurentPoly::one())?;
    if &r != golden().poly("R_Hopf") {
        pass = false;
        notes.push("relation_between((-1,-1),(1,1)) differs from the printed R_Hopf".into());
    }
    ok(pass, notes)
}

fn c3() -> Result<Outcome> {
    let (mut pass, mut notes) = all_equal(&["P2_prime", "P3_prime", "P4_prime"])?;
    let mut bad = 0;
    for n in -3..=6 {
        for k in 1..=8 {
            if !RingFraction::from_poly(u_sum(n, k)?).frac_equal(&u_closed(n, k)?) {
                bad += 1;
            }
        }
    }
    if bad > 0 {
        pass = false;
    }
    notes.push(format!("u_sum = u_closed in {} of 80 cases", 80 - bad));
    if !pass && corpus_equal("P4_prime")?.0 == false {
        notes.push(format!("recurrence value of P'_4: {}", p_prime(4)));
    }
    ok(pass, notes)
}

fn c4() -> Result<Outcome> {
    let mut bad = vec![];
    for n in 3..=10 {
        let direct = eval_code(&code(&[n]), Some(Closure::Numerator))?;
        for k in 1..=n {
            if torus_via_expansion(n, k)? != direct {
                bad.push(format!("n={n} k={k}"));
            }
        }
    }
    ok(bad.is_empty(), bad)
}

fn c5() -> Result<Outcome> {
    let (pass, notes) = all_equal(&["cinquefoil", "minus_three"])?;
    let five = eval_code(&code(&[5]), Some(Closure::Numerator))?;
    let three = phi_mirror(&eval_code(&code(&[3]), Some(Closure::Numerator))?);
    ok(pass && &five == golden().poly("cinquefoil") && &three == golden().poly("minus_three"), notes)
}

fn c6() -> Result<Outcome> {
    let (pass, notes) = corpus_equal("R_fig8")?;
    let q = exact_divide(&fig8_relation()?, &hopf_relation())?;
    let nonzero = q.as_ref().is_some_and(|q| !q.is_zero());
    ok(pass && nonzero, notes)
}

fn c7() -> Result<Outcome> {
    let plus = trefoil_relation_plus();
    let minus = trefoil_relation_minus();
    let a = exact_divide(&plus, &hopf_relation())?.is_none();
    let b = exact_divide(&hopf_relation(), &plus)?.is_none();
    let c = &sym::b3() * &minus == &(&sym::a() * &sym::b0()) * &plus;
    let notes = vec![format!("R_tr+ / R_Hopf absent: {a}, R_Hopf / R_tr+ absent: {b}, b3 R_tr- = a b0 R_tr+: {c}")];
    ok(a && b && c, notes)
}

fn c8() -> Result<Outcome> {
    let t = RingFraction::from_poly(trivial_component());
    let t2 = trivial_knot_second();
    let r_t = golden().get("R_t").ok_or_else(|| anyhow!("no R_t"))?.value();
    let first = (&t2 - &t).frac_equal(&r_t);
    let lhs = RingFraction::from_poly(&(&sym::b0() * &sym::b3()) * &hopf_relation());
    let rhs = &RingFraction::from_poly(&trivial_component() * &p("b0*b1 - b2*b3")) * &r_t;
    let second = lhs.frac_equal(&rhs);
    ok(first && second, vec![format!("t2 - t = R_t: {first}; b0 b3 R_Hopf = t(b0b1 - b2b3) R_t: {second}")])
}

fn c9() -> Result<Outcome> {
    let mut pass = true;
    let mut notes = vec![];
    for r in catalog()? {
        if !["R_Hopf", "R_t", "R_tr+", "R_tr-", "R_C", "R_Wh"].contains(&r.name.as_str()) {
            continue;
        }
        let mut zero = alpha_substitute(r.value.numer()).is_zero();
        if let Some(c) = &r.coeffs {
            zero &= c.as_array().iter().all(|x| alpha_substitute(x).is_zero());
        }
        pass &= zero;
        notes.push(format!("{}: {}", r.name, if zero { "alpha-zero" } else { "survives" }));
    }
    ok(pass, vec![notes.join(", ")])
}

fn c10() -> Result<Outcome> {
    let (quad_ok, mut notes) = all_equal(&["quad_c2", "quad_c1", "quad_c0", "quad_cinf"])?;
    let kd = |inf: KdInfinity| -> Result<(bool, bool)> {
        let mut shifted = true;
        let mut trivial = true;
        for eps in [1i64, -1] {
            let e = eps.to_string();
            let got: Vec<String> = cubic_coeffs()
                .as_array()
                .iter()
                .map(|c| kd_specialize(c, eps as i32, inf).map(|v| v.to_string()))
                .collect::<Result<_, _>>()?;
            let expect = ["0".to_string(), "1".into(), "-x".into(), e.clone(), if eps == 1 { "-a^-1*x".into() } else { "a^-1*x".into() }];
            shifted &= got == expect;
            for c in cubic2_coeffs().as_array() {
                trivial &= kd_specialize(c, eps as i32, inf)?.is_zero();
            }
        }
        Ok((shifted, trivial))
    };
    let (printed_shift, printed_trivial) = kd(KdInfinity::Printed)?;
    let (cons_shift, cons_trivial) = kd(KdInfinity::Consistent)?;
    notes.push(format!(
        "printed binf = a^-1 eps: cubic -> shifted KD {printed_shift}, cubic2 trivial {printed_trivial}; \
         binf = -eps a^-1 x: {cons_shift}, {cons_trivial}"
    ));
    ok(quad_ok && printed_shift && printed_trivial, notes)
}

fn c11() -> Result<Outcome> {
    let (mut printed, mut corrected) = (0, 0);
    for fam in ClosedFamily::ALL {
        for m in 1..=8 {
            for n in 1..=8 {
                let r = closed_family_relation(fam, m, n)?;
                if &closed_formula_printed(fam, m, n)? * &hopf_relation() == r {
                    printed += 1;
                }
                if &closed_formula(fam, m, n)? * &hopf_relation() == r {
                    corrected += 1;
                }
            }
        }
    }
    ok(
        printed == 256,
        vec![format!("printed quotients hold in {printed}/256 cases, corrected quotients in {corrected}/256")],
    )
}

fn c12() -> Result<Outcome> {
    let codes = standard_codes(4, 4);
    let mut bad = vec![];
    for c in &codes {
        let r = reverse_check(c)?;
        if !r.divisible {
            bad.push(format!("{c}: framing {:?}", r.framing));
        }
    }
    let mut notes = vec![format!("{} codes, {} not divisible", codes.len(), bad.len())];
    notes.extend(bad.into_iter().take(10));
    ok(notes.len() == 1, notes)
}

fn c13() -> Result<Outcome> {
    let mut notes = vec![];
    let mut pass = true;
    for signs in [TwistSigns::Consistent, TwistSigns::Printed] {
        let mut off: Vec<String> = vec![];
        for id in tangle3::printed_identities() {
            let s = id.check(signs);
            if s != IdentityStatus::Holds {
                let tag = format!("{} ({s})", id.family);
                if !off.contains(&tag) {
                    off.push(tag);
                }
            }
        }
        let spots = tangle3::forb34_spots();
        let mut by_word: Vec<(String, usize, usize)> = vec![];
        for s in &spots {
            let w = s.word.to_string();
            if by_word.last().map(|x| &x.0) != Some(&w) {
                by_word.push((w, 0, 0));
            }
            let e = by_word.last_mut().expect("pushed");
            e.2 += 1;
            if s.computed(signs) == s.printed {
                e.1 += 1;
            }
        }
        let mut rng = StdRng::seed_from_u64(7);
        let (mut exact, mut az, mut other) = (0, 0, 0);
        for _ in 0..500 {
            let mut word = || {
                let n = rng.gen_range(0..=6);
                tangle3::Word3((0..n).map(|_| tangle3::Gen::ALL[rng.gen_range(0..6)]).collect())
            };
            let (x, y) = (word(), word());
            match tangle3::check_pair(signs, &x, &y) {
                PairOutcome::Exact => exact += 1,
                PairOutcome::AlphaZero => az += 1,
                PairOutcome::Differs => other += 1,
            }
        }
        pass &= off.is_empty() && by_word.iter().all(|(_, m, _)| *m >= 6) && exact == 500;
        notes.push(format!("{signs:?} signs:"));
        notes.push(format!("  identities not holding: {}", if off.is_empty() { "none".into() } else { off.join(", ") }));
        let spots: Vec<String> = by_word.iter().map(|(w, m, n)| format!("{w}: {m}/{n}")).collect();
        notes.push(format!("  spot coefficients matching: {}", spots.join("; ")));
        notes.push(format!("  well-definedness on 500 pairs: {exact} exact, {az} alpha-zero, {other} other"));
    }
    ok(pass, notes)
}

fn c14() -> Result<Outcome> {
    use BaseTangle::*;
    let row = |terms: &[(BaseTangle, &str)]| {
        let mut c = TangleCombo::zero();
        for (b, k) in terms {
            c.add_term(*b, &p(k));
        }
        c
    };
    let t = trivial_component().to_string();
    let printed: Vec<(BaseTangle, BaseTangle, TangleCombo)> = vec![
        (T0, T0, row(&[(T0, "1")])),
        (T0, T1, row(&[(T1, "1")])),
        (T0, Tminus1, row(&[(Tminus1, "1")])),
        (T0, Tinf, row(&[(Tinf, "1")])),
        (T1, T0, row(&[(T1, "1")])),
        (
            T1,
            T1,
            row(&[(Tminus1, "b0*b3^-1"), (T0, "b1*b3^-1"), (T1, "b2*b3^-1"), (Tinf, "a*binf*b3^-1")]),
        ),
        (T1, Tminus1, row(&[(T0, "1")])),
        (T1, Tinf, row(&[(Tinf, "a^-1")])),
        (Tminus1, T0, row(&[(Tminus1, "1")])),
        (Tminus1, T1, row(&[(T0, "1")])),
        (
            Tminus1,
            Tminus1,
            row(&[(Tminus1, "b1*b0^-1"), (T0, "b2*b0^-1"), (T1, "b3*b0^-1"), (Tinf, "a^2*binf*b0^-1")]),
        ),
        (Tminus1, Tinf, row(&[(Tinf, "a")])),
        (Tinf, T0, row(&[(Tinf, "1")])),
        (Tinf, T1, row(&[(Tinf, "a^-1")])),
        (Tinf, Tminus1, row(&[(Tinf, "a")])),
        (Tinf, Tinf, row(&[(Tinf, &t)])),
    ];
    let mut notes = vec![];
    let mut matched = 0;
    for (x, y, want) in &printed {
        let got = two_tangle_product(*x, *y);
        if &got == want {
            matched += 1;
        } else if got == want.scale(&p("-1")) {
            notes.push(format!("{} * {}: computed is the negative of the printed entry", x.name(), y.name()));
        } else {
            notes.push(format!("{} * {}: differs", x.name(), y.name()));
        }
    }
    notes.insert(0, format!("{matched}/16 entries match"));
    ok(matched == 16, notes)
}

fn c15() -> Result<Outcome> {
    let mut pass = true;
    let mut notes = vec![];
    let col = |xs: &[i64], p: u64| -> Result<u64> {
        Ok(count_fox_colorings(&code(xs), p, None)?.try_into().map_err(|_| anyhow!("overflow"))?)
    };
    for p in [3, 5, 7] {
        pass &= col(&[1], p)? == p;
    }
    let tref = diagram_from_code(&code(&[3]), Closure::Numerator);
    let brute = |p: u64| -> u64 {
        let n = tref.arcs as u32;
        (0..p.pow(n))
            .filter(|&i| {
                let cs: Vec<u64> = (0..n).map(|k| i / p.pow(k) % p).collect();
                tref.satisfied_by(&cs, p)
            })
            .count() as u64
    };
    let (c3, c7) = (col(&[3], 3)?, col(&[3], 7)?);
    pass &= c3 == 9 && c7 == 7 && brute(3) == 9 && brute(7) == 7;
    notes.push(format!("col3(trefoil) = {c3}, col7(trefoil) = {c7}, brute force {} and {}", brute(3), brute(7)));
    let mut rng = StdRng::seed_from_u64(11);
    let mut moved_ok = 0;
    for _ in 0..50 {
        let len = rng.gen_range(1..=5);
        let mut xs: Vec<i64> = (0..len)
            .map(|_| {
                let v = rng.gen_range(1..=6);
                if rng.gen_bool(0.5) {
                    v
                } else {
                    -v
                }
            })
            .collect();
        let before = col(&xs, 7)?;
        xs[0] += 7;
        if col(&xs, 7)? == before {
            moved_ok += 1;
        }
    }
    pass &= moved_ok == 50;
    notes.push(format!("7-move invariance on {moved_ok}/50 random codes"));
    ok(pass, notes)
}

fn c16() -> Result<Outcome> {
    let mut notes = vec![];
    for n in 1..=6 {
        let mut cols = vec![2];
        cols.extend(std::iter::repeat(1).take(n));
        let pz = eval_pretzel(&PretzelCode::from_ints(&cols)?)?;
        let rat = eval_code(&code(&[2, n as i64]), None)?;
        let d = &pz - &rat;
        let status = if d.is_zero() {
            "equal".to_string()
        } else {
            format!("Hopf-divisible: {}", hopf_divides(&d)?)
        };
        notes.push(format!("P(2,1x{n}) vs [2,{n}]: {status}"));
    }
    let six = eval_code(&code(&[2, 1, 1, 2]), None)?;
    let pz = eval_pretzel(&PretzelCode::from_ints(&[2, 1, -3, 1])?)?;
    notes.push(format!("[2,1,1,2] vs P(2,1,-3,1): Hopf-divisible: {}", hopf_divides(&(&six - &pz))?));
    ok(true, notes)
}

fn main() {
    let criteria: [(u32, &str, fn() -> Result<Outcome>); 16] = [
        (1, "trivial component", c1),
        (2, "Hopf links and R_Hopf", c2),
        (3, "P' values and U closed form", c3),
        (4, "k-independence of the n-twist expansion", c4),
        (5, "cinquefoil and left trefoil", c5),
        (6, "figure-eight relation", c6),
        (7, "trefoil relations", c7),
        (8, "trivial knot relation", c8),
        (9, "alpha substitution", c9),
        (10, "quadratic relation and Kauffman/Dubrovnik", c10),
        (11, "closed quotient formulas", c11),
        (12, "Hopf divisibility scan", c12),
        (13, "3-tangle rewriting", c13),
        (14, "2-tangle multiplication table", c14),
        (15, "Fox colorings", c15),
        (16, "pretzel bridge and 6_3 (report)", c16),
    ];
    let mut regressions = vec![];
    for (n, name, f) in criteria {
        let start = Instant::now();
        let (pass, notes) = match f() {
            Ok(o) => (o.pass, o.notes),
            Err(e) => (false, vec![format!("error: {e:#}")]),
        };
        let tag = if pass { "PASS" } else { "FAIL" };
        println!("{tag} criterion {n}: {name} ({:.2?})", start.elapsed());
        for line in notes {
            println!("    {line}");
        }
        if !pass && !KNOWN_RED.contains(&n) {
            regressions.push(n);
        }
        if pass && KNOWN_RED.contains(&n) {
            println!("    (listed as known red but passed)");
        }
    }
    if !regressions.is_empty() {
        eprintln!("unexpected failures: {regressions:?}");
        std::process::exit(1);
    }
}
