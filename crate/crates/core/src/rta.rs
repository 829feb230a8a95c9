//! The rational tangle algorithm, the n-move recurrences behind it, and the
//! (2,n) torus link formulas.
//!
//! Everything is kept in the general (b3 invertible) form: the primed
//! coefficients bᵢ' = bᵢ/(−b3) are ordinary Laurent polynomials, so the
//! b3 = −1 normalization is only used when comparing with printed values.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use crate::error::{Error, Result};
use crate::ring::{phi_mirror, sym, trivial_component, LaurentPoly, RingFraction};
use crate::tangle_model::{closure_kind, BaseTangle, Closure, ConwayCode, Entry, TangleCombo};

/// bᵢ/(−b3) for the variable with index `i`.
fn primed(i: usize) -> LaurentPoly {
    -(&LaurentPoly::var(i) * &sym::b3_inv())
}

fn b0p() -> LaurentPoly {
    primed(crate::ring::var::B0)
}
fn b1p() -> LaurentPoly {
    primed(crate::ring::var::B1)
}
fn binfp() -> LaurentPoly {
    primed(crate::ring::var::BINF)
}

fn p_cache() -> &'static Mutex<Vec<LaurentPoly>> {
    static C: OnceLock<Mutex<Vec<LaurentPoly>>> = OnceLock::new();
    C.get_or_init(|| {
        Mutex::new(vec![LaurentPoly::zero(), LaurentPoly::one(), -(&sym::b2() * &sym::b3_inv())])
    })
}

/// Pₙ^h for n ≥ −1: P₋₁ = 0, P₀ = 1, P₁ = −b2/b3 and
/// Pₙ = (−b3)⁻¹(b2·Pₙ₋₁ + b1·Pₙ₋₂ + b0·Pₙ₋₃).
pub fn p_h(n: i64) -> LaurentPoly {
    assert!(n >= -1, "p_h is defined for n >= -1");
    let idx = (n + 1) as usize;
    {
        let c = p_cache().lock().expect("p cache");
        if let Some(v) = c.get(idx) {
            return v.clone();
        }
    }
    let mut c = p_cache().lock().expect("p cache");
    let factor = -sym::b3_inv();
    while c.len() <= idx {
        let k = c.len();
        let next = &(&(&sym::b2() * &c[k - 1]) + &(&sym::b1() * &c[k - 2]))
            + &(&sym::b0() * &c[k - 3]);
        c.push(&next * &factor);
    }
    c[idx].clone()
}

/// The homogeneous P′ₙ = (−b3)ⁿ·Pₙ^h.
pub fn p_prime(n: i64) -> LaurentPoly {
    let s = (-sym::b3()).pow(n.max(0) as u32);
    &s * &p_h(n)
}

/// U_{n,k} = Σ_{i=0}^{k−1} a^{3−n+i}·Pᵢ^h.
pub fn u_sum(n: i64, k: i64) -> Result<LaurentPoly> {
    if k < 1 {
        return Err(Error::InvalidArgument(format!("u_sum needs k >= 1, got {k}")));
    }
    Ok((0..k).map(|i| &sym::a_pow((3 - n + i) as i32) * &p_h(i)).sum())
}

/// The closed form of U_{n,k} as a fraction with denominator
/// b0 + b1·a⁻¹ + b2·a⁻² + b3·a⁻³ (that is, −binf·t).
pub fn u_closed(n: i64, k: i64) -> Result<RingFraction> {
    if k < 1 {
        return Err(Error::InvalidArgument(format!("u_closed needs k >= 1, got {k}")));
    }
    let a = |e: i64| sym::a_pow(e as i32);
    let num = -a(-n)
        + &a(k - n) * &p_h(k)
        + &a(k - n + 1) * &(&(&b1p() * &p_h(k - 1)) + &(&b0p() * &p_h(k - 2)))
        + &(&a(k - n + 2) * &b0p()) * &p_h(k - 1);
    let den = sym::b0() + &sym::b1() * &a(-1) + &sym::b2() * &a(-2) + &sym::b3() * &a(-3);
    // The primed denominator is den/(−b3); move that factor to the numerator.
    RingFraction::new(&num * &(-sym::b3()), den)
}

/// Coefficients of the expansion of n ≥ 2 half-twists over the states
/// 1, 0, −1, ∞ (in that order).
pub(crate) fn twist_coeffs(n: i64) -> [LaurentPoly; 4] {
    debug_assert!(n >= 2);
    [
        p_h(n - 1),
        &(&b1p() * &p_h(n - 2)) + &(&b0p() * &p_h(n - 3)),
        &b0p() * &p_h(n - 2),
        &binfp() * &u_sum(n, n - 1).expect("n >= 2"),
    ]
}

fn cache() -> &'static Mutex<HashMap<Vec<Entry>, TangleCombo>> {
    static C: OnceLock<Mutex<HashMap<Vec<Entry>, TangleCombo>>> = OnceLock::new();
    C.get_or_init(|| Mutex::new(HashMap::new()))
}

fn mirror_combo(c: &TangleCombo) -> TangleCombo {
    c.map(phi_mirror, BaseTangle::mirror)
}

fn with_head(head: &[Entry], rest: &[Entry]) -> Vec<Entry> {
    head.iter().chain(rest.iter()).copied().collect()
}

fn negated(e: &[Entry]) -> Vec<Entry> {
    e.iter().map(|x| x.neg()).collect()
}

fn combine(parts: &[(LaurentPoly, Vec<Entry>)]) -> Result<TangleCombo> {
    let mut out = TangleCombo::zero();
    for (c, code) in parts {
        if c.is_zero() {
            continue;
        }
        out.add_scaled(&reduce(code)?, c);
    }
    Ok(out)
}

fn reduce(e: &[Entry]) -> Result<TangleCombo> {
    if let Some(v) = cache().lock().expect("rta cache").get(e) {
        return Ok(v.clone());
    }
    let v = reduce_uncached(e)?;
    cache().lock().expect("rta cache").insert(e.to_vec(), v.clone());
    Ok(v)
}

fn bad(e: &[Entry]) -> Error {
    let s: Vec<String> = e.iter().map(|x| x.to_string()).collect();
    Error::Internal(format!("no rule applies to [{}]", s.join(",")))
}

fn reduce_uncached(e: &[Entry]) -> Result<TangleCombo> {
    use Entry::{Inf, Int};
    let r = e.len();
    if r == 0 {
        return Err(bad(e));
    }
    if r == 1 {
        if let Some(b) = BaseTangle::from_entry(e[0]) {
            return Ok(TangleCombo::single(b));
        }
    }
    if r == 2 {
        let base = |b| Ok(TangleCombo::single(b));
        match (e[0], e[1]) {
            (Inf, Int(0)) => return base(BaseTangle::Tinf),
            (Int(0), Int(0)) => return base(BaseTangle::T0),
            (Inf, Int(1)) => return base(BaseTangle::T1),
            (Inf, Int(-1)) => return base(BaseTangle::Tminus1),
            (Int(0), Inf) => return Ok(TangleCombo::term(BaseTangle::T0, trivial_component())),
            (Int(0), Int(n2)) => return Ok(TangleCombo::term(BaseTangle::T0, sym::a_pow(n2 as i32))),
            (Inf, Inf) => return base(BaseTangle::T0),
            _ => {}
        }
    }
    let rest = &e[1..];
    match e[0] {
        Int(n1) if n1 > 1 => {
            let [c1, c0, cm1, ci] = twist_coeffs(n1);
            combine(&[
                (c1, with_head(&[Int(1)], rest)),
                (c0, with_head(&[Int(0)], rest)),
                (cm1, with_head(&[Int(-1)], rest)),
                (ci, with_head(&[Inf], rest)),
            ])
        }
        Int(n1) if n1 < -1 => Ok(mirror_combo(&reduce(&negated(e))?)),
        Int(0) if r >= 3 => match e[1] {
            Int(n2) => Ok(reduce(&e[2..])?.scale(&sym::a_pow(n2 as i32))),
            Inf => Ok(reduce(&e[2..])?.scale(&trivial_component())),
        },
        Int(s @ (1 | -1)) => match e[1] {
            Int(n2) => reduce(&with_head(&[Inf, Int(n2 + s)], &e[2..])),
            Inf => Err(bad(e)),
        },
        Inf => match e[1] {
            Int(m) if m < -1 => {
                let [c1, c0, cm1, ci] = twist_coeffs(-m);
                let tail = &e[2..];
                combine(&[
                    (c1, with_head(&[Inf, Int(-1)], tail)),
                    (c0, with_head(&[Inf, Int(0)], tail)),
                    (cm1, with_head(&[Inf, Int(1)], tail)),
                    (ci, with_head(&[Inf, Inf], tail)),
                ])
            }
            Int(m) if m > 1 => {
                let mut flipped = vec![Inf];
                flipped.extend(negated(&e[1..]));
                Ok(mirror_combo(&reduce(&flipped)?))
            }
            Int(0) if r >= 3 => {
                let n3 = e[2].int().ok_or_else(|| bad(e))?;
                let scale = sym::a_pow(-n3 as i32);
                if r == 3 {
                    Ok(TangleCombo::term(BaseTangle::Tinf, scale))
                } else {
                    Ok(reduce(&with_head(&[Inf], &e[3..]))?.scale(&scale))
                }
            }
            Int(s @ (1 | -1)) if r >= 3 => {
                let n3 = e[2].int().ok_or_else(|| bad(e))?;
                reduce(&with_head(&[Inf, Inf, Int(n3 + s)], &e[3..]))
            }
            Inf if r >= 3 => reduce(&e[2..]),
            _ => Err(bad(e)),
        },
        _ => Err(bad(e)),
    }
}

/// Reduces a Conway code to a combination of the four base tangles.
pub fn reduce_code(code: &ConwayCode) -> Result<TangleCombo> {
    reduce(code.entries())
}

/// Evaluates the rational link of `code`; `closure` overrides the default.
pub fn eval_code(code: &ConwayCode, closure: Option<Closure>) -> Result<LaurentPoly> {
    let cl = closure.unwrap_or_else(|| closure_kind(code));
    Ok(reduce_code(code)?.close(cl))
}

/// Shorthand for evaluating a code given as integers.
pub fn eval_ints(xs: &[i64], closure: Option<Closure>) -> Result<LaurentPoly> {
    eval_code(&ConwayCode::from_ints(xs)?, closure)
}

/// Product (horizontal sum) of two base tangles.
pub fn two_tangle_product(x: BaseTangle, y: BaseTangle) -> TangleCombo {
    use BaseTangle::*;
    match (x, y) {
        (T0, b) | (b, T0) => TangleCombo::single(b),
        (T1, Tminus1) | (Tminus1, T1) => TangleCombo::single(T0),
        (T1, Tinf) | (Tinf, T1) => TangleCombo::term(Tinf, sym::a_pow(-1)),
        (Tminus1, Tinf) | (Tinf, Tminus1) => TangleCombo::term(Tinf, sym::a()),
        (Tinf, Tinf) => TangleCombo::term(Tinf, trivial_component()),
        (T1, T1) => reduce(&[Entry::Int(2)]).expect("[2] reduces"),
        (Tminus1, Tminus1) => reduce(&[Entry::Int(-2)]).expect("[-2] reduces"),
    }
}

/// The (2,n) torus link, the numerator closure of n half-twists.
pub fn torus_link(n: i64) -> Result<LaurentPoly> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!("torus_link needs n >= 2, got {n}")));
    }
    let t = trivial_component();
    let [c1, c0, cm1, ci] = twist_coeffs(n);
    let inner = &(&(&sym::a() * &c1) + &(&c0 * &t)) + &(&(&sym::a_pow(-1) * &cm1) + &ci);
    Ok(&t * &inner)
}

/// A (2,n) torus link in the thickened annulus over the annular closures
/// D₁, D₀, D₋₁ plus a scalar (the D∞ part, already closed to t).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnnulusCombo {
    pub d1: LaurentPoly,
    pub d0: LaurentPoly,
    pub dm1: LaurentPoly,
    pub scalar: LaurentPoly,
}

pub fn torus_annulus(n: i64) -> Result<AnnulusCombo> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!("torus_annulus needs n >= 2, got {n}")));
    }
    let [d1, d0, dm1, ci] = twist_coeffs(n);
    Ok(AnnulusCombo { d1, d0, dm1, scalar: &ci * &trivial_component() })
}

/// Lemma-style k-fold expansion of Dₙ: returns (twist count or ∞, coefficient)
/// for D_{n−k}, D_{n−k−1}, D_{n−k−2} and D∞.
pub fn expand_dn(n: i64, k: i64) -> Result<Vec<(Entry, LaurentPoly)>> {
    if k < 1 || k > n {
        return Err(Error::InvalidArgument(format!("need 1 <= k <= n, got n={n}, k={k}")));
    }
    Ok(vec![
        (Entry::Int(n - k), p_h(k)),
        (Entry::Int(n - k - 1), &(&b1p() * &p_h(k - 1)) + &(&b0p() * &p_h(k - 2))),
        (Entry::Int(n - k - 2), &b0p() * &p_h(k - 1)),
        (Entry::Inf, &binfp() * &u_sum(n, k)?),
    ])
}

/// Numerator closure of Dₙ computed through a k-fold expansion.
pub fn torus_via_expansion(n: i64, k: i64) -> Result<LaurentPoly> {
    let mut acc = LaurentPoly::zero();
    for (j, c) in expand_dn(n, k)? {
        acc += &(&c * &eval_code(&ConwayCode::extended(vec![j])?, Some(Closure::Numerator))?);
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::homogenize;

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn p_initial_values() {
        assert!(p_h(-1).is_zero());
        assert!(p_h(0).is_one());
        assert_eq!(p_h(1), p("-b2*b3^-1"));
        assert_eq!(p_prime(2), p("b2^2 - b1*b3"));
        assert_eq!(p_prime(3), p("b2^3 - 2*b1*b2*b3 + b0*b3^2"));
        assert_eq!(homogenize(&p("b2^2 + b1"), 2).unwrap(), p_prime(2));
    }

    #[test]
    fn u_shift_rules() {
        for n in -2..5 {
            assert_eq!(u_sum(n, 1).unwrap(), sym::a_pow((3 - n) as i32));
            for k in 1..5 {
                assert_eq!(u_sum(n + 1, k).unwrap(), &sym::a_pow(-1) * &u_sum(n, k).unwrap());
                let diff = u_sum(n, k + 1).unwrap() - u_sum(n, k).unwrap();
                assert_eq!(diff, &sym::a_pow((3 - n + k) as i32) * &p_h(k));
            }
        }
    }

    #[test]
    fn u_closed_matches_sum() {
        assert_eq!(u_closed(5, 4).unwrap(), RingFraction::from(u_sum(5, 4).unwrap()));
        assert!(u_closed(1, 0).is_err());
    }

    #[test]
    fn small_reductions() {
        let c = |s: &str| ConwayCode::parse(s).unwrap();
        assert_eq!(reduce_code(&c("[0]")).unwrap(), TangleCombo::single(BaseTangle::T0));
        assert_eq!(reduce_code(&c("[1,2]")).unwrap(), reduce(&[Entry::Inf, Entry::Int(3)]).unwrap());
        assert_eq!(eval_code(&c("[1]"), Some(Closure::Denominator)).unwrap(), &sym::a_pow(-1) * &trivial_component());
    }

    #[test]
    fn wrong_closure_of_single_twist_is_framed_unknot() {
        let t = trivial_component();
        for n in -5..=6 {
            let v = eval_ints(&[n], Some(Closure::Denominator)).unwrap();
            assert_eq!(v, &sym::a_pow(-n as i32) * &t, "n = {n}");
        }
    }

    #[test]
    fn table_products_close_consistently() {
        // D(x + y)·t = D(x)·D(y) for horizontal sums.
        let t = trivial_component();
        for x in BaseTangle::ALL {
            for y in BaseTangle::ALL {
                let lhs = &two_tangle_product(x, y).close(Closure::Denominator) * &t;
                let rhs = TangleCombo::single(x).close(Closure::Denominator)
                    * TangleCombo::single(y).close(Closure::Denominator);
                assert_eq!(lhs, rhs, "{x} {y}");
            }
        }
    }

    #[test]
    fn torus_matches_code() {
        for n in 2..7 {
            assert_eq!(torus_link(n).unwrap(), eval_ints(&[n], Some(Closure::Numerator)).unwrap());
        }
    }

    #[test]
    fn annulus_three() {
        let ann = torus_annulus(3).unwrap();
        let d = crate::ring::dehomogenize;
        assert_eq!(d(&ann.d1), p("b2^2 + b1"));
        assert_eq!(d(&ann.d0), p("b1*b2 + b0"));
        assert_eq!(d(&ann.dm1), p("b0*b2"));
    }
}
