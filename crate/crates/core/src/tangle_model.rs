//! Conway codes, pretzel tuples, the four base 2-tangles and their closures.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::ring::{sym, trivial_component, LaurentPoly};

/// One entry of a Conway code or pretzel tuple.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Entry {
    Int(i64),
    Inf,
}

impl Entry {
    pub fn int(self) -> Option<i64> {
        match self {
            Entry::Int(n) => Some(n),
            Entry::Inf => None,
        }
    }

    pub fn is_inf(self) -> bool {
        self == Entry::Inf
    }

    pub fn neg(self) -> Entry {
        match self {
            Entry::Int(n) => Entry::Int(-n),
            Entry::Inf => Entry::Inf,
        }
    }
}

impl fmt::Display for Entry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Entry::Int(n) => write!(f, "{n}"),
            Entry::Inf => f.write_str("inf"),
        }
    }
}

impl From<i64> for Entry {
    fn from(n: i64) -> Self {
        Entry::Int(n)
    }
}

/// A Conway code `[n1, ..., nr]`.
///
/// Values built by [`ConwayCode::parse`] or [`ConwayCode::new`] are in
/// standard form. The rational tangle algorithm also passes through extended
/// codes with 0 or ∞ in the first two slots; those are built with
/// [`ConwayCode::extended`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ConwayCode {
    entries: Vec<Entry>,
}

/// Checks the standard-form rule: entries after the first are nonzero integers.
fn check_standard(entries: &[Entry]) -> Result<()> {
    if entries.is_empty() {
        return Err(Error::StandardForm { index: 0, msg: "empty code".into() });
    }
    for (i, e) in entries.iter().enumerate().skip(1) {
        match e {
            Entry::Int(0) => {
                return Err(Error::StandardForm { index: i + 1, msg: "zero entry".into() })
            }
            Entry::Inf => {
                return Err(Error::StandardForm { index: i + 1, msg: "inf entry".into() })
            }
            _ => {}
        }
    }
    Ok(())
}

impl ConwayCode {
    pub fn new(entries: Vec<Entry>) -> Result<Self> {
        check_standard(&entries)?;
        Ok(ConwayCode { entries })
    }

    pub fn from_ints(xs: &[i64]) -> Result<Self> {
        Self::new(xs.iter().map(|&n| Entry::Int(n)).collect())
    }

    /// An algorithm-internal code; only non-emptiness is checked.
    pub fn extended(entries: Vec<Entry>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::StandardForm { index: 0, msg: "empty code".into() });
        }
        Ok(ConwayCode { entries })
    }

    pub fn entries(&self) -> &[Entry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn is_standard(&self) -> bool {
        check_standard(&self.entries).is_ok()
    }

    /// Integer entries, or an error naming the first ∞.
    pub fn ints(&self) -> Result<Vec<i64>> {
        self.entries
            .iter()
            .map(|e| e.int().ok_or_else(|| Error::Unsupported("inf entry".into())))
            .collect()
    }

    /// Parses `[e1, e2, ...]` where each entry is a signed integer or `inf`.
    pub fn parse(text: &str) -> Result<Self> {
        let entries = parse_list(text, '[', ']', 0)?;
        Self::new(entries)
    }
}

impl fmt::Display for ConwayCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("]")
    }
}

impl std::str::FromStr for ConwayCode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

/// Shared list grammar: `open entry (',' entry)* close`, whitespace allowed.
fn parse_list(text: &str, open: char, close: char, offset: usize) -> Result<Vec<Entry>> {
    let err = |pos: usize, msg: &str| Error::Parse { pos: pos + offset, msg: msg.into() };
    let trimmed_start = text.len() - text.trim_start().len();
    let body = text.trim();
    if !body.starts_with(open) {
        return Err(err(trimmed_start, &format!("expected '{open}'")));
    }
    if !body.ends_with(close) || body.len() < 2 {
        return Err(err(trimmed_start + body.len(), &format!("expected '{close}'")));
    }
    let inner_start = trimmed_start + open.len_utf8();
    let inner = &body[open.len_utf8()..body.len() - close.len_utf8()];
    let mut out = Vec::new();
    let mut pos = inner_start;
    for piece in inner.split(',') {
        let lead = piece.len() - piece.trim_start().len();
        let tok = piece.trim();
        if tok.is_empty() {
            return Err(err(pos + lead, "empty entry"));
        }
        let e = if tok == "inf" || tok == "∞" {
            Entry::Inf
        } else {
            match tok.parse::<i64>() {
                Ok(n) => Entry::Int(n),
                Err(_) => return Err(err(pos + lead, &format!("bad entry {tok:?}"))),
            }
        };
        out.push(e);
        pos += piece.len() + 1;
    }
    Ok(out)
}

/// The four base tangles [−1], [0], [1], [∞].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BaseTangle {
    Tminus1,
    T0,
    T1,
    Tinf,
}

impl BaseTangle {
    pub const ALL: [BaseTangle; 4] = [BaseTangle::Tminus1, BaseTangle::T0, BaseTangle::T1, BaseTangle::Tinf];

    /// The base tangle named by a single entry, if there is one.
    pub fn from_entry(e: Entry) -> Option<Self> {
        match e {
            Entry::Int(-1) => Some(BaseTangle::Tminus1),
            Entry::Int(0) => Some(BaseTangle::T0),
            Entry::Int(1) => Some(BaseTangle::T1),
            Entry::Inf => Some(BaseTangle::Tinf),
            _ => None,
        }
    }

    /// Mirror image: T1 and Tminus1 swap, T0 and Tinf are fixed.
    pub fn mirror(self) -> Self {
        match self {
            BaseTangle::Tminus1 => BaseTangle::T1,
            BaseTangle::T1 => BaseTangle::Tminus1,
            b => b,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            BaseTangle::Tminus1 => "[-1]",
            BaseTangle::T0 => "[0]",
            BaseTangle::T1 => "[1]",
            BaseTangle::Tinf => "[inf]",
        }
    }
}

impl fmt::Display for BaseTangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A linear combination of the base tangles.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TangleCombo {
    coeffs: BTreeMap<BaseTangle, LaurentPoly>,
}

impl TangleCombo {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn single(b: BaseTangle) -> Self {
        Self::term(b, LaurentPoly::one())
    }

    pub fn term(b: BaseTangle, c: LaurentPoly) -> Self {
        let mut t = Self::zero();
        t.add_term(b, &c);
        t
    }

    pub fn get(&self, b: BaseTangle) -> LaurentPoly {
        self.coeffs.get(&b).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (BaseTangle, &LaurentPoly)> {
        self.coeffs.iter().map(|(b, c)| (*b, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add_term(&mut self, b: BaseTangle, c: &LaurentPoly) {
        let slot = self.coeffs.entry(b).or_default();
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&b);
        }
    }

    pub fn add_scaled(&mut self, o: &TangleCombo, s: &LaurentPoly) {
        for (b, c) in o.iter() {
            self.add_term(b, &(c * s));
        }
    }

    pub fn scale(&self, s: &LaurentPoly) -> Self {
        let mut out = Self::zero();
        out.add_scaled(self, s);
        out
    }

    /// Applies `f` to every coefficient and `g` to every base tangle.
    pub fn map(&self, f: impl Fn(&LaurentPoly) -> LaurentPoly, g: impl Fn(BaseTangle) -> BaseTangle) -> Self {
        let mut out = Self::zero();
        for (b, c) in self.iter() {
            out.add_term(g(b), &f(c));
        }
        out
    }

    /// Σ c[b]·close_base(b, closure).
    pub fn close(&self, closure: Closure) -> LaurentPoly {
        self.iter().map(|(b, c)| c * &close_base(b, closure)).sum()
    }
}

impl fmt::Display for TangleCombo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("{}");
        }
        f.write_str("{")?;
        for (i, (b, c)) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{b}: {c}")?;
        }
        f.write_str("}")
    }
}

/// Numerator or denominator closure of a 2-tangle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Closure {
    Numerator,
    Denominator,
}

impl Closure {
    pub fn other(self) -> Self {
        match self {
            Closure::Numerator => Closure::Denominator,
            Closure::Denominator => Closure::Numerator,
        }
    }
}

impl fmt::Display for Closure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Closure::Numerator => "num",
            Closure::Denominator => "den",
        })
    }
}

/// Default closure of a standard-form code: odd length closes with the
/// numerator, even length with the denominator.
///
/// This is the parity under which `[n]` closes to the (2,n) torus link and
/// `[1,1]` to the Hopf link, matching every worked evaluation (the
/// cinquefoil is N([5]), the Hopf link is D([1,1])).
pub fn closure_kind(code: &ConwayCode) -> Closure {
    if code.len() % 2 == 1 {
        Closure::Numerator
    } else {
        Closure::Denominator
    }
}

/// Closure values of the base tangles, t substituted.
pub fn close_base(b: BaseTangle, c: Closure) -> LaurentPoly {
    use BaseTangle::*;
    use Closure::*;
    let t = trivial_component();
    match (b, c) {
        (Tminus1, Numerator) => &sym::a_pow(-1) * &t,
        (Tminus1, Denominator) => &sym::a() * &t,
        (T0, Numerator) => &t * &t,
        (T0, Denominator) => t,
        (T1, Numerator) => &sym::a() * &t,
        (T1, Denominator) => &sym::a_pow(-1) * &t,
        (Tinf, Numerator) => t,
        (Tinf, Denominator) => &t * &t,
    }
}

/// Reversed code describing an isotopic link: odd length reverses, even
/// length reverses and negates. The sign is always +1.
pub fn reverse_code(code: &ConwayCode) -> Result<(ConwayCode, i32)> {
    let xs = code.ints()?;
    let mut rev: Vec<i64> = xs.into_iter().rev().collect();
    if rev.len().is_multiple_of(2) {
        for x in rev.iter_mut() {
            *x = -*x;
        }
    }
    Ok((ConwayCode::from_ints(&rev)?, 1))
}

/// Entrywise negation (mirror image).
pub fn negate_code(code: &ConwayCode) -> Result<ConwayCode> {
    let xs = code.ints()?;
    ConwayCode::new(xs.into_iter().map(|x| Entry::Int(-x)).collect())
}

/// A pretzel tuple `P(n1, ..., nr)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PretzelCode {
    columns: Vec<Entry>,
}

impl PretzelCode {
    pub fn new(columns: Vec<Entry>) -> Result<Self> {
        if columns.is_empty() {
            return Err(Error::InvalidArgument("empty pretzel tuple".into()));
        }
        Ok(PretzelCode { columns })
    }

    pub fn from_ints(xs: &[i64]) -> Result<Self> {
        Self::new(xs.iter().map(|&n| Entry::Int(n)).collect())
    }

    pub fn columns(&self) -> &[Entry] {
        &self.columns
    }

    /// Parses `P(n1, ..., nr)` with integer columns.
    pub fn parse(text: &str) -> Result<Self> {
        let lead = text.len() - text.trim_start().len();
        let body = text.trim();
        let rest = body
            .strip_prefix('P')
            .ok_or_else(|| Error::Parse { pos: lead, msg: "expected 'P('".into() })?;
        let cols = parse_list(rest, '(', ')', lead + 1)?;
        if let Some(i) = cols.iter().position(|c| c.is_inf()) {
            return Err(Error::StandardForm { index: i + 1, msg: "inf column".into() });
        }
        Self::new(cols)
    }

    pub fn negate(&self) -> Self {
        PretzelCode { columns: self.columns.iter().map(|c| c.neg()).collect() }
    }
}

impl fmt::Display for PretzelCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("P(")?;
        for (i, e) in self.columns.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str(")")
    }
}

impl std::str::FromStr for PretzelCode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format() {
        let c = ConwayCode::parse("[3, 2,-1,4]").unwrap();
        assert_eq!(c.ints().unwrap(), vec![3, 2, -1, 4]);
        assert_eq!(c.to_string(), "[3,2,-1,4]");
        assert_eq!(ConwayCode::parse("[inf]").unwrap().entries(), &[Entry::Inf]);
        assert_eq!(ConwayCode::parse("[0]").unwrap().to_string(), "[0]");
    }

    #[test]
    fn standard_form_violations() {
        match ConwayCode::parse("[3,0,2]") {
            Err(Error::StandardForm { index, .. }) => assert_eq!(index, 2),
            other => panic!("{other:?}"),
        }
        assert!(ConwayCode::parse("[1,inf]").is_err());
        assert!(ConwayCode::parse("[]").is_err());
        assert!(ConwayCode::parse("3,2").is_err());
        match ConwayCode::parse("[3,x]") {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 3),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn closure_parity() {
        let c = |s: &str| closure_kind(&ConwayCode::parse(s).unwrap());
        assert_eq!(c("[3]"), Closure::Numerator);
        assert_eq!(c("[3,2,1]"), Closure::Numerator);
        assert_eq!(c("[2,2]"), Closure::Denominator);
    }

    #[test]
    fn reverse_and_negate() {
        let c = |s: &str| ConwayCode::parse(s).unwrap();
        assert_eq!(reverse_code(&c("[3,2]")).unwrap().0, c("[-2,-3]"));
        assert_eq!(reverse_code(&c("[3]")).unwrap().0, c("[3]"));
        assert_eq!(reverse_code(&c("[1,1]")).unwrap().0, c("[-1,-1]"));
        assert_eq!(negate_code(&c("[3,-1]")).unwrap(), c("[-3,1]"));
        assert!(negate_code(&c("[inf]")).is_err());
    }

    #[test]
    fn pretzel_grammar() {
        let p = PretzelCode::parse("P(2, 1,-3,1)").unwrap();
        assert_eq!(p.to_string(), "P(2,1,-3,1)");
        assert!(PretzelCode::parse("P()").is_err());
        assert!(PretzelCode::parse("(1,2)").is_err());
        assert!(PretzelCode::parse("P(1,inf)").is_err());
    }

    #[test]
    fn base_closures() {
        let t = trivial_component();
        assert_eq!(close_base(BaseTangle::T0, Closure::Denominator), t);
        assert_eq!(close_base(BaseTangle::Tinf, Closure::Denominator), &t * &t);
        assert_eq!(close_base(BaseTangle::T1, Closure::Numerator), &sym::a() * &t);
    }
}
