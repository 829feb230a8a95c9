//! Exact division by a single Laurent polynomial.

use num_integer::Integer;
use num_traits::Zero;

use super::{Mono, Poly, VarSet, MAX_VARS};
use crate::error::{Error, Result};

fn shift<V: VarSet>(p: &Poly<V>, by: &[i32; MAX_VARS]) -> Poly<V> {
    let mut neg = [0i32; MAX_VARS];
    for i in 0..MAX_VARS {
        neg[i] = -by[i];
    }
    p.mul_mono(&Mono::from_raw(neg))
}

/// Minimum exponents restricted to invertible variables (0 elsewhere).
fn unit_content<V: VarSet>(p: &Poly<V>) -> [i32; MAX_VARS] {
    let mut m = p.min_exps();
    for (i, slot) in m.iter_mut().enumerate() {
        if i >= V::len() || !V::INVERTIBLE[i] {
            *slot = 0;
        }
    }
    m
}

/// Returns `q` with `q * d == p` if `p` lies in the principal ideal `(d)`.
///
/// Both sides are first shifted by monomials in the invertible variables so
/// that every exponent is non-negative and `d` has no monomial factor in
/// those variables. A monomial unit factor cannot then change divisibility,
/// so ordinary division under the graded-lex order decides membership. The
/// loop stops at the first leading term that `d` cannot cancel.
pub fn exact_divide<V: VarSet>(p: &Poly<V>, d: &Poly<V>) -> Result<Option<Poly<V>>> {
    if d.is_zero() {
        return Err(Error::DivisionByZero);
    }
    if p.is_zero() {
        return Ok(Some(Poly::zero()));
    }
    let mp = unit_content(p);
    let md = unit_content(d);
    let mut rem = shift(p, &mp);
    let dd = shift(d, &md);

    if let Some((m, c)) = dd.as_monomial() {
        // Monomial divisor: termwise.
        let mut q = Poly::zero();
        for (tm, tc) in rem.terms() {
            if !m.divides_plain(tm) || !tc.is_multiple_of(c) {
                return Ok(None);
            }
            let mut e = tm.raw();
            for (i, x) in e.iter_mut().enumerate() {
                *x -= m.raw()[i];
            }
            q.add_term(Mono::from_raw(e), tc / c);
        }
        return Ok(Some(restore(q, &mp, &md)));
    }

    let (lm, lc) = {
        let (m, c) = dd.leading().expect("nonzero");
        (*m, c.clone())
    };
    let mut q = Poly::zero();
    while let Some((tm, tc)) = rem.leading().map(|(m, c)| (*m, c.clone())) {
        if !lm.divides_plain(&tm) {
            return Ok(None);
        }
        let (qc, r) = tc.div_rem(&lc);
        if !r.is_zero() {
            return Ok(None);
        }
        let mut e = tm.raw();
        for (i, x) in e.iter_mut().enumerate() {
            *x -= lm.raw()[i];
        }
        let qm = Mono::from_raw(e);
        for (dm, dc) in dd.terms() {
            rem.add_term(dm.mul(&qm), -(dc * &qc));
        }
        q.add_term(qm, qc);
    }
    Ok(Some(restore(q, &mp, &md)))
}

fn restore<V: VarSet>(q: Poly<V>, mp: &[i32; MAX_VARS], md: &[i32; MAX_VARS]) -> Poly<V> {
    let mut e = [0i32; MAX_VARS];
    for i in 0..MAX_VARS {
        e[i] = mp[i] - md[i];
    }
    q.mul_mono(&Mono::from_raw(e))
}
