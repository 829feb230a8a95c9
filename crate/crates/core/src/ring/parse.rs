//! Text form of polynomials.
//!
//! Output is the canonical grammar described in the crate docs. Input is a
//! superset: parentheses, products of sums, integer powers (negative only on
//! units), unary minus and arbitrary whitespace are accepted, so factored
//! displays can be transcribed directly.

use num_bigint::BigInt;
use num_traits::{One, Signed};

use super::{Mono, Poly, VarSet};
use crate::error::{Error, Result};

pub(super) fn format_mono<V: VarSet>(m: &Mono<V>) -> Option<String> {
    let parts: Vec<String> = m
        .exps()
        .iter()
        .enumerate()
        .filter(|(_, &e)| e != 0)
        .map(|(i, &e)| {
            if e == 1 {
                V::NAMES[i].to_string()
            } else {
                format!("{}^{}", V::NAMES[i], e)
            }
        })
        .collect();
    if parts.is_empty() {
        None
    } else {
        Some(parts.join("*"))
    }
}

pub(super) fn format_poly<V: VarSet>(p: &Poly<V>) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (k, (m, c)) in p.terms().enumerate() {
        let neg = c.is_negative();
        match (k, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let abs = c.abs();
        match format_mono(m) {
            None => out.push_str(&abs.to_string()),
            Some(ms) if abs.is_one() => out.push_str(&ms),
            Some(ms) => {
                out.push_str(&abs.to_string());
                out.push('*');
                out.push_str(&ms);
            }
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

fn lex(s: &str) -> Result<Vec<(usize, Tok)>> {
    let mut out = Vec::new();
    let mut it = s.char_indices().peekable();
    while let Some(&(pos, ch)) = it.peek() {
        match ch {
            c if c.is_whitespace() => {
                it.next();
            }
            '+' => {
                it.next();
                out.push((pos, Tok::Plus));
            }
            '-' | '−' => {
                it.next();
                out.push((pos, Tok::Minus));
            }
            '*' | '·' => {
                it.next();
                out.push((pos, Tok::Star));
            }
            '^' => {
                it.next();
                out.push((pos, Tok::Caret));
            }
            '(' => {
                it.next();
                out.push((pos, Tok::LParen));
            }
            ')' => {
                it.next();
                out.push((pos, Tok::RParen));
            }
            c if c.is_ascii_digit() => {
                let mut buf = String::new();
                while let Some(&(_, d)) = it.peek() {
                    if d.is_ascii_digit() {
                        buf.push(d);
                        it.next();
                    } else {
                        break;
                    }
                }
                out.push((pos, Tok::Int(buf.parse().expect("digits"))));
            }
            c if c.is_alphabetic() || c == '∞' || c == '_' => {
                let mut buf = String::new();
                while let Some(&(_, d)) = it.peek() {
                    if d.is_alphanumeric() || d == '∞' || d == '_' {
                        buf.push(d);
                        it.next();
                    } else {
                        break;
                    }
                }
                out.push((pos, Tok::Ident(buf)));
            }
            other => {
                return Err(Error::Parse { pos, msg: format!("unexpected character {other:?}") })
            }
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: &'a [(usize, Tok)],
    i: usize,
    end: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.i).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.i).map(|(p, _)| *p).unwrap_or(self.end)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse { pos: self.pos(), msg: msg.into() })
    }

    fn sum<V: VarSet>(&mut self) -> Result<Poly<V>> {
        let mut acc = Poly::zero();
        let mut sign = match self.peek() {
            Some(Tok::Minus) => {
                self.i += 1;
                -1
            }
            Some(Tok::Plus) => {
                self.i += 1;
                1
            }
            _ => 1,
        };
        loop {
            let t = self.product()?;
            if sign < 0 {
                acc -= &t;
            } else {
                acc += &t;
            }
            sign = match self.peek() {
                Some(Tok::Plus) => 1,
                Some(Tok::Minus) => -1,
                _ => return Ok(acc),
            };
            self.i += 1;
        }
    }

    fn product<V: VarSet>(&mut self) -> Result<Poly<V>> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.i += 1;
                    let f = self.power()?;
                    acc = &acc * &f;
                }
                // Juxtaposition such as `2(a + b)` or `(a)(b)` multiplies too.
                Some(Tok::LParen) | Some(Tok::Ident(_)) | Some(Tok::Int(_)) => {
                    let f = self.power()?;
                    acc = &acc * &f;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn power<V: VarSet>(&mut self) -> Result<Poly<V>> {
        let base = self.atom()?;
        if self.peek() != Some(&Tok::Caret) {
            return Ok(base);
        }
        self.i += 1;
        let neg = if self.peek() == Some(&Tok::Minus) {
            self.i += 1;
            true
        } else {
            false
        };
        let e: i32 = match self.peek() {
            Some(Tok::Int(n)) => match i32::try_from(n.clone()) {
                Ok(v) => v,
                Err(_) => return self.err("exponent out of range"),
            },
            _ => return self.err("expected integer exponent"),
        };
        let pos = self.pos();
        self.i += 1;
        let e = if neg { -e } else { e };
        base.powi(e).map_err(|err| Error::Parse { pos, msg: err.to_string() })
    }

    fn atom<V: VarSet>(&mut self) -> Result<Poly<V>> {
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.i += 1;
                Ok(Poly::constant(n))
            }
            Some(Tok::Ident(name)) => {
                let idx = V::NAMES
                    .iter()
                    .position(|&v| v == name)
                    .or_else(|| V::ALIASES.iter().find(|(al, _)| *al == name).map(|&(_, i)| i));
                match idx {
                    Some(i) => {
                        self.i += 1;
                        Ok(Poly::var(i))
                    }
                    None => self.err(format!("unknown variable {name:?}")),
                }
            }
            Some(Tok::LParen) => {
                self.i += 1;
                let inner = self.sum()?;
                if self.peek() != Some(&Tok::RParen) {
                    return self.err("expected ')'");
                }
                self.i += 1;
                Ok(inner)
            }
            Some(Tok::Minus) => {
                self.i += 1;
                Ok(-self.power::<V>()?)
            }
            Some(t) => self.err(format!("unexpected token {t:?}")),
            None => self.err("unexpected end of input"),
        }
    }
}

pub(super) fn parse_poly<V: VarSet>(s: &str) -> Result<Poly<V>> {
    let toks = lex(s)?;
    if toks.is_empty() {
        return Err(Error::Parse { pos: 0, msg: "empty input".into() });
    }
    let mut p = Parser { toks: &toks, i: 0, end: s.len() };
    let v = p.sum()?;
    if p.i != toks.len() {
        return p.err("trailing input");
    }
    Ok(v)
}
