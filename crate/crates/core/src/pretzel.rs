//! Numerator closures of pretzel tangles `P(n1, ..., nr)`.
//!
//! Columns of two or more half-twists are expanded with the same n-twist
//! formula the rational tangle algorithm uses, negative columns go through
//! the mirror map, and once every column is one of −1, 0, 1, ∞ the diagram
//! is a framed trivial link or a (2, m) torus link.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::ring::{phi_mirror, sym, trivial_component, LaurentPoly};
use crate::tangle_model::{Closure, ConwayCode, Entry, PretzelCode};

/// Counters for the terminal cases hit during one evaluation.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct PretzelTrace {
    /// Terminal tuples with a 0 column.
    pub zero_terminals: usize,
    /// Of those, tuples that also had an ∞ column. The ∞ columns are dropped
    /// from the product of framings.
    pub zero_with_inf: usize,
    /// Terminal tuples closed as a (2, m) torus link.
    pub torus_terminals: usize,
}

/// Evaluates N(P(n1, ..., nr)), expanding columns left to right.
pub fn eval_pretzel(code: &PretzelCode) -> Result<LaurentPoly> {
    Ok(eval_pretzel_traced(code)?.0)
}

/// [`eval_pretzel`] together with the terminal-case counters.
pub fn eval_pretzel_traced(code: &PretzelCode) -> Result<(LaurentPoly, PretzelTrace)> {
    let order: Vec<usize> = (0..code.columns().len()).collect();
    eval_pretzel_in_order(code, &order)
}

/// Evaluates with the columns expanded in the given order, a permutation of
/// the column indices.
pub fn eval_pretzel_in_order(code: &PretzelCode, order: &[usize]) -> Result<(LaurentPoly, PretzelTrace)> {
    let r = code.columns().len();
    let mut seen = vec![false; r];
    for &i in order {
        if i >= r || std::mem::replace(&mut seen[i], true) {
            return Err(Error::InvalidArgument(format!("order {order:?} is not a permutation of 0..{r}")));
        }
    }
    if order.len() != r {
        return Err(Error::InvalidArgument(format!("order {order:?} is not a permutation of 0..{r}")));
    }
    let mut ev = Evaluator { order, memo: HashMap::new(), trace: PretzelTrace::default() };
    let v = ev.eval(code.columns().to_vec(), 0)?;
    Ok((v, ev.trace))
}

fn in_base(e: Entry) -> bool {
    match e {
        Entry::Inf => true,
        Entry::Int(n) => (-1..=1).contains(&n),
    }
}

struct Evaluator<'a> {
    order: &'a [usize],
    memo: HashMap<(Vec<Entry>, usize), LaurentPoly>,
    trace: PretzelTrace,
}

impl Evaluator<'_> {
    fn eval(&mut self, cols: Vec<Entry>, k: usize) -> Result<LaurentPoly> {
        let Some(step) = (k..self.order.len()).find(|&s| !in_base(cols[self.order[s]])) else {
            return self.terminal(&cols);
        };
        let key = (cols, step);
        if let Some(v) = self.memo.get(&key) {
            return Ok(v.clone());
        }
        let cols = &key.0;
        let i = self.order[step];
        let n = cols[i].int().expect("columns outside the base set are integers");
        let v = if n < 0 {
            let neg: Vec<Entry> = cols.iter().map(|e| e.neg()).collect();
            phi_mirror(&self.eval(neg, step)?)
        } else {
            let coeffs = crate::rta::twist_coeffs(n);
            let states = [Entry::Int(1), Entry::Int(0), Entry::Int(-1), Entry::Inf];
            let mut acc = LaurentPoly::zero();
            for (c, s) in coeffs.iter().zip(states) {
                if c.is_zero() {
                    continue;
                }
                let mut next = cols.clone();
                next[i] = s;
                acc += &(c * &self.eval(next, step + 1)?);
            }
            acc
        };
        self.memo.insert(key, v.clone());
        Ok(v)
    }

    fn terminal(&mut self, cols: &[Entry]) -> Result<LaurentPoly> {
        let ints: Vec<i64> = cols.iter().filter_map(|e| e.int()).collect();
        let zeros = ints.iter().filter(|&&n| n == 0).count();
        if zeros > 0 {
            self.trace.zero_terminals += 1;
            if ints.len() < cols.len() {
                self.trace.zero_with_inf += 1;
            }
            let framing: i64 = ints.iter().sum();
            return Ok(&trivial_component().pow(zeros as u32) * &sym::a_pow(framing as i32));
        }
        self.trace.torus_terminals += 1;
        let m = -ints.iter().sum::<i64>();
        let code = ConwayCode::extended(vec![Entry::Int(m)])?;
        Ok(crate::rta::reduce_code(&code)?.close(Closure::Numerator))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ev(xs: &[i64]) -> LaurentPoly {
        eval_pretzel(&PretzelCode::from_ints(xs).unwrap()).unwrap()
    }

    #[test]
    fn single_columns() {
        let t = trivial_component();
        assert_eq!(ev(&[0]), t);
        assert_eq!(ev(&[1]), &sym::a_pow(-1) * &t);
        assert_eq!(ev(&[-1]), &sym::a() * &t);
        assert_eq!(ev(&[1, -1]), &t * &t);
        assert_eq!(ev(&[-1, 1]), &t * &t);
        let inf = PretzelCode::new(vec![Entry::Inf]).unwrap();
        assert_eq!(eval_pretzel(&inf).unwrap(), &t * &t);
    }

    #[test]
    fn three_ones_is_left_trefoil() {
        assert_eq!(ev(&[1, 1, 1]), crate::rta::eval_ints(&[-3], None).unwrap());
    }

    #[test]
    fn one_column_is_framed_unknot() {
        for n in -5..6 {
            assert_eq!(ev(&[n]), &sym::a_pow(-n as i32) * &trivial_component());
        }
    }

    #[test]
    fn two_ones_is_hopf_link() {
        assert_eq!(ev(&[1, 1]), crate::rta::eval_ints(&[-2], None).unwrap());
        assert_eq!(ev(&[-1, -1]), crate::rta::eval_ints(&[2], None).unwrap());
    }

    #[test]
    fn mirror() {
        let x = ev(&[2, -3, 1]);
        assert_eq!(ev(&[-2, 3, -1]), phi_mirror(&x));
    }

    #[test]
    fn order_does_not_matter() {
        let code = PretzelCode::from_ints(&[3, -2, 2]).unwrap();
        let (a, _) = eval_pretzel_in_order(&code, &[0, 1, 2]).unwrap();
        let (b, _) = eval_pretzel_in_order(&code, &[2, 0, 1]).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn trace_and_bad_order() {
        let code = PretzelCode::new(vec![Entry::Int(0), Entry::Inf, Entry::Int(1)]).unwrap();
        let (v, tr) = eval_pretzel_traced(&code).unwrap();
        assert_eq!(v, &trivial_component() * &sym::a());
        assert_eq!(tr.zero_with_inf, 1);
        assert!(eval_pretzel_in_order(&code, &[0, 0, 1]).is_err());
        assert!(eval_pretzel_in_order(&code, &[0, 1]).is_err());
    }
}
