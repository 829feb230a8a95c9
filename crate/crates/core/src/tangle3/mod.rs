//! The skein algebra of 3-algebraic tangles: words in S1, S2 (and inverses),
//! U1, U2 reduced to the 40 basic 3-tangles.
//!
//! The 24 invertible basis tangles are braids. The 16 non-invertible ones are
//! written `x U2 y` with halves x, y in {e, S, S⁻¹, U} acting on strands 1
//! and 2; this form absorbs every sliding identity (`S2 U1 = S1⁻¹ U2 U1` and
//! friends), so products with a non-invertible tangle only need the two
//! one-sided actions of a generator on a half.
//!
//! Braid products are reduced by expanding squares `Sᵢ^{±2}` with the cubic
//! relation, falling back on a fixed table of braid group rewrites when a
//! word has no square and is not basic. The rewrites are checked against the
//! (faithful) reduced Burau representation of B₃ in the tests.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::ring::{sym, trivial_component, LaurentPoly};

mod checks;

pub use checks::{
    check_pair, forb34_spots, parse_spots, printed_identities, reduce_sum, IdentityStatus, PairOutcome, PrintedIdentity,
    SpotCoefficient, WordSum,
};

/// A generator of the 3-tangle monoid.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Gen {
    S1,
    S1i,
    S2,
    S2i,
    U1,
    U2,
}

impl Gen {
    pub const ALL: [Gen; 6] = [Gen::S1, Gen::S1i, Gen::S2, Gen::S2i, Gen::U1, Gen::U2];

    pub fn name(self) -> &'static str {
        match self {
            Gen::S1 => "S1",
            Gen::S1i => "S1i",
            Gen::S2 => "S2",
            Gen::S2i => "S2i",
            Gen::U1 => "U1",
            Gen::U2 => "U2",
        }
    }

    fn index(self) -> usize {
        self as usize
    }

    /// Signed strand index of a braid generator: S1 = 1, S1i = −1, ...
    fn letter(self) -> Option<i8> {
        match self {
            Gen::S1 => Some(1),
            Gen::S1i => Some(-1),
            Gen::S2 => Some(2),
            Gen::S2i => Some(-2),
            _ => None,
        }
    }

    fn from_letter(l: i8) -> Gen {
        match l {
            1 => Gen::S1,
            -1 => Gen::S1i,
            2 => Gen::S2,
            -2 => Gen::S2i,
            _ => unreachable!("braid letters are ±1, ±2"),
        }
    }
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Gen {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Gen::ALL
            .into_iter()
            .find(|g| g.name() == s)
            .ok_or_else(|| Error::Parse { pos: 0, msg: format!("unknown generator {s:?}") })
    }
}

/// A word in the generators; the empty word is the identity tangle e.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Word3(pub Vec<Gen>);

impl Word3 {
    /// Whitespace-separated generator names.
    pub fn parse(text: &str) -> Result<Self> {
        let mut out = Vec::new();
        let mut pos = 0;
        for tok in text.split_whitespace() {
            let at = pos + text[pos..].find(tok).expect("token comes from the text");
            let g = tok.parse::<Gen>().map_err(|_| Error::Parse {
                pos: at,
                msg: format!("unknown generator {tok:?}"),
            })?;
            out.push(g);
            pos = at + tok.len();
        }
        Ok(Word3(out))
    }

    pub fn concat(&self, o: &Word3) -> Word3 {
        Word3(self.0.iter().chain(o.0.iter()).copied().collect())
    }
}

impl fmt::Display for Word3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("e");
        }
        let parts: Vec<&str> = self.0.iter().map(|g| g.name()).collect();
        f.write_str(&parts.join(" "))
    }
}

/// A 2-tangle on strands 1, 2: e, S, S⁻¹ or U.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
enum Half {
    E,
    S,
    Si,
    U,
}

const BRAIDS: [&[i8]; 24] = [
    &[],
    &[1],
    &[-1],
    &[2],
    &[-2],
    &[1, 2],
    &[1, -2],
    &[-1, 2],
    &[-1, -2],
    &[2, 1],
    &[2, -1],
    &[-2, 1],
    &[-2, -1],
    &[1, 2, 1],
    &[1, 2, -1],
    &[1, -2, 1],
    &[1, -2, -1],
    &[-1, 2, 1],
    &[-1, 2, -1],
    &[-1, -2, 1],
    &[-1, -2, -1],
    &[2, -1, 2],
    &[-2, 1, -2],
    &[1, -2, 1, -2],
];

/// The non-invertible basis as `x U2 y`, paired with its customary name.
const NON_INVERTIBLE: [(Half, Half, &str); 16] = [
    (Half::U, Half::U, "U1"),
    (Half::E, Half::E, "U2"),
    (Half::U, Half::E, "U1U2"),
    (Half::E, Half::U, "U2U1"),
    (Half::S, Half::E, "S1U2"),
    (Half::Si, Half::E, "S1iU2"),
    (Half::Si, Half::U, "S2U1"),
    (Half::S, Half::U, "S2iU1"),
    (Half::E, Half::S, "U2S1"),
    (Half::E, Half::Si, "U2S1i"),
    (Half::U, Half::Si, "U1S2"),
    (Half::U, Half::S, "U1S2i"),
    (Half::S, Half::S, "S1U2S1"),
    (Half::S, Half::Si, "S1U2S1i"),
    (Half::Si, Half::S, "S1iU2S1"),
    (Half::Si, Half::Si, "S1iU2S1i"),
];

/// Braid-group rewrites for square-free words that are not basic. Each right
/// side is equal in B₃ and is either basic or contains a square.
const REWRITES: &[(&[i8], &[i8])] = &[
    (&[-2, -1, -2], &[-1, -2, -1]),
    (&[-2, -1, 2], &[1, -2, -1]),
    (&[-2, 1, 2], &[1, 2, -1]),
    (&[2, -1, -2], &[-1, -2, 1]),
    (&[2, 1, -2], &[-1, 2, 1]),
    (&[2, 1, 2], &[1, 2, 1]),
    (&[-2, -1, -2, -1], &[-2, -2, -1, -2]),
    (&[-2, -1, -2, 1], &[-1, -2]),
    (&[-2, -1, 2, -1], &[1, -2, -1, -1]),
    (&[-2, -1, 2, 1], &[1, -2]),
    (&[-2, 1, -2, -1], &[-2, -2, -1, 2]),
    (&[-2, 1, -2, 1], &[-2, -2, -1, 2, 1, 1]),
    (&[-2, 1, 2, -1], &[-2, -2, 1, 2]),
    (&[-2, 1, 2, 1], &[1, 2]),
    (&[-1, -2, -1, -2], &[-2, -1, -2, -2]),
    (&[-1, -2, -1, 2], &[-2, -1]),
    (&[-1, -2, 1, -2], &[2, -1, -2, -2]),
    (&[-1, -2, 1, 2], &[2, -1]),
    (&[-1, 2, -1, -2], &[-1, -1, -2, 1]),
    (&[-1, 2, -1, 2], &[-1, -1, -2, 1, 2, 2]),
    (&[-1, 2, 1, -2], &[-1, -1, 2, 1]),
    (&[-1, 2, 1, 2], &[2, 1]),
    (&[1, -2, -1, -2], &[-2, -1]),
    (&[1, -2, -1, 2], &[-2, -1, 2, 2]),
    (&[1, -2, 1, 2], &[1, 1, 2, -1]),
    (&[1, 2, -1, -2], &[-2, 1]),
    (&[1, 2, -1, 2], &[-2, 1, 2, 2]),
    (&[1, 2, 1, -2], &[2, 1]),
    (&[1, 2, 1, 2], &[1, 1, 2, 1]),
    (&[2, -1, 2, -1], &[-1, -2, -2, 1, 1, 2]),
    (&[2, -1, 2, 1], &[2, 2, 1, -2]),
    (&[1, -2, 1, -2, -1], &[-2, -1, -1, 2, 2]),
    (&[1, -2, 1, -2, 1], &[-2, -1, -1, 2, 2, 1, 1]),
];

/// One of the 40 basic 3-tangles: indices 0..24 are the braids (0 is e),
/// 24..40 the non-invertible tangles.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Basis40(u8);

impl Basis40 {
    pub const COUNT: usize = 40;
    pub const E: Basis40 = Basis40(0);

    pub fn all() -> impl Iterator<Item = Basis40> {
        (0..Self::COUNT as u8).map(Basis40)
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn is_invertible(self) -> bool {
        self.index() < 24
    }

    /// The tangle as a word in the generators, in its customary spelling.
    pub fn word(self) -> Word3 {
        if self.is_invertible() {
            return Word3(BRAIDS[self.index()].iter().map(|&l| Gen::from_letter(l)).collect());
        }
        let name = NON_INVERTIBLE[self.index() - 24].2;
        let mut out = Vec::new();
        let mut rest = name;
        while !rest.is_empty() {
            let g = ["S1i", "S2i", "S1", "S2", "U1", "U2"]
                .into_iter()
                .find(|p| rest.starts_with(p))
                .expect("names are spelled in generators");
            out.push(g.parse().expect("generator name"));
            rest = &rest[g.len()..];
        }
        Word3(out)
    }

    /// Compact name: generator names run together, `e` for the identity.
    pub fn name(self) -> String {
        let w = self.word();
        if w.0.is_empty() {
            "e".into()
        } else {
            w.0.iter().map(|g| g.name()).collect()
        }
    }

    pub fn from_name(name: &str) -> Option<Basis40> {
        Basis40::all().find(|b| b.name() == name)
    }

    fn braid(word: &[i8]) -> Option<Basis40> {
        BRAIDS.iter().position(|b| *b == word).map(|i| Basis40(i as u8))
    }

    fn j(x: Half, y: Half) -> Basis40 {
        let i = NON_INVERTIBLE.iter().position(|&(a, b, _)| a == x && b == y).expect("16 half pairs");
        Basis40(24 + i as u8)
    }

    fn halves(self) -> Option<(Half, Half)> {
        (!self.is_invertible()).then(|| {
            let (x, y, _) = NON_INVERTIBLE[self.index() - 24];
            (x, y)
        })
    }
}

impl fmt::Display for Basis40 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

/// A linear combination of basic 3-tangles with nonzero coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Combo3(BTreeMap<Basis40, LaurentPoly>);

impl Combo3 {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn single(b: Basis40) -> Self {
        Self::term(b, LaurentPoly::one())
    }

    pub fn term(b: Basis40, c: LaurentPoly) -> Self {
        let mut out = Self::zero();
        out.add_term(b, &c);
        out
    }

    pub fn get(&self, b: Basis40) -> LaurentPoly {
        self.0.get(&b).cloned().unwrap_or_else(LaurentPoly::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (Basis40, &LaurentPoly)> {
        self.0.iter().map(|(b, c)| (*b, c))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn add_term(&mut self, b: Basis40, c: &LaurentPoly) {
        if c.is_zero() {
            return;
        }
        let e = self.0.entry(b).or_insert_with(LaurentPoly::zero);
        *e += c;
        if e.is_zero() {
            self.0.remove(&b);
        }
    }

    pub fn add_scaled(&mut self, o: &Combo3, s: &LaurentPoly) {
        for (b, c) in o.iter() {
            self.add_term(b, &(s * c));
        }
    }

    pub fn scale(&self, s: &LaurentPoly) -> Self {
        let mut out = Self::zero();
        out.add_scaled(self, s);
        out
    }

    pub fn sub(&self, o: &Combo3) -> Self {
        let mut out = self.clone();
        out.add_scaled(o, &-LaurentPoly::one());
        out
    }
}

/// `{name: coeff, ...}` in basis order, `{}` for zero.
impl fmt::Display for Combo3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
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

/// Sign in front of the square expansions Sᵢ² and Sᵢ⁻².
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TwistSigns {
    /// Sᵢ² = −b3⁻¹(b2Sᵢ + b1e + b0Sᵢ⁻¹ + a·binf·Uᵢ), the sign forced by the
    /// cubic relation.
    Consistent,
    /// The same expansions without the leading minus, as displayed alongside
    /// the table of 2-tangle products.
    Printed,
}

type HalfCombo = Vec<(Half, LaurentPoly)>;

struct Algebra {
    sigma: LaurentPoly,
    /// Product of each basis tangle with each generator.
    table: Vec<[Combo3; 6]>,
}

impl Algebra {
    fn sq_pos(&self) -> HalfCombo {
        let k = &self.sigma * &sym::b3_inv();
        vec![
            (Half::S, &k * &sym::b2()),
            (Half::E, &k * &sym::b1()),
            (Half::Si, &k * &sym::b0()),
            (Half::U, &(&k * &sym::a()) * &sym::binf()),
        ]
    }

    fn sq_neg(&self) -> HalfCombo {
        let k = &self.sigma * &sym::b0_inv();
        vec![
            (Half::Si, &k * &sym::b1()),
            (Half::E, &k * &sym::b2()),
            (Half::S, &k * &sym::b3()),
            (Half::U, &(&k * &sym::a_pow(2)) * &sym::binf()),
        ]
    }

    /// Product of two 2-tangles on strands 1, 2 (commutative).
    fn t2(&self, x: Half, y: Half) -> HalfCombo {
        use Half::*;
        match (x, y) {
            (E, o) | (o, E) => vec![(o, LaurentPoly::one())],
            (S, Si) | (Si, S) => vec![(E, LaurentPoly::one())],
            (U, U) => vec![(U, trivial_component())],
            (U, S) | (S, U) => vec![(U, sym::a_pow(-1))],
            (U, Si) | (Si, U) => vec![(U, sym::a())],
            (S, S) => self.sq_pos(),
            (Si, Si) => self.sq_neg(),
        }
    }

    /// (U2·y)·g as a combination of U2·y'. The left action g·(x·U2) is the
    /// mirror image under reversing words, so it is the same function.
    fn act(&self, y: Half, g: Gen) -> HalfCombo {
        use Half::*;
        let one = LaurentPoly::one();
        match g {
            Gen::S1 => self.t2(y, S),
            Gen::S1i => self.t2(y, Si),
            Gen::U1 => self.t2(y, U),
            Gen::U2 => {
                let c = match y {
                    E => trivial_component(),
                    S => sym::a(),
                    Si => sym::a_pow(-1),
                    U => one,
                };
                vec![(E, c)]
            }
            Gen::S2 => match y {
                E => vec![(E, sym::a_pow(-1))],
                U => vec![(Si, one)],
                S => vec![(U, one)],
                // U2 S1⁻¹ S2 = U2 U1 S2².
                Si => {
                    let k = &self.sigma * &sym::b3_inv();
                    vec![
                        (Si, &k * &sym::b2()),
                        (U, &k * &sym::b1()),
                        (S, &k * &sym::b0()),
                        (E, &(&k * &sym::a()) * &sym::binf()),
                    ]
                }
            },
            Gen::S2i => match y {
                E => vec![(E, sym::a())],
                U => vec![(S, one)],
                Si => vec![(U, one)],
                // U2 S1 S2⁻¹ = U2 U1 S2⁻².
                S => {
                    let k = &self.sigma * &sym::b0_inv();
                    vec![
                        (S, &k * &sym::b1()),
                        (U, &k * &sym::b2()),
                        (Si, &k * &sym::b3()),
                        (E, &(&k * &sym::a_pow(2)) * &sym::binf()),
                    ]
                }
            },
        }
    }

    fn j_right(&self, c: &Combo3, g: Gen) -> Combo3 {
        let mut out = Combo3::zero();
        for (b, v) in c.iter() {
            let (x, y) = b.halves().expect("non-invertible");
            for (y2, w) in self.act(y, g) {
                out.add_term(Basis40::j(x, y2), &(v * &w));
            }
        }
        out
    }

    fn j_left(&self, g: Gen, c: &Combo3) -> Combo3 {
        let mut out = Combo3::zero();
        for (b, v) in c.iter() {
            let (x, y) = b.halves().expect("non-invertible");
            for (x2, w) in self.act(x, g) {
                out.add_term(Basis40::j(x2, y), &(v * &w));
            }
        }
        out
    }

    /// p·Uᵢ·r for braid words p, r.
    fn braid_u_braid(&self, p: &[i8], i: i8, r: &[i8]) -> Combo3 {
        let u = if i == 1 { Basis40::j(Half::U, Half::U) } else { Basis40::j(Half::E, Half::E) };
        let mut c = Combo3::single(u);
        for &l in p.iter().rev() {
            c = self.j_left(Gen::from_letter(l), &c);
        }
        for &l in r {
            c = self.j_right(&c, Gen::from_letter(l));
        }
        c
    }

    fn build(signs: TwistSigns) -> Result<Self> {
        let sigma = match signs {
            TwistSigns::Consistent => -LaurentPoly::one(),
            TwistSigns::Printed => LaurentPoly::one(),
        };
        let mut alg = Algebra { sigma, table: Vec::new() };
        let mut braids = BraidReducer { alg: &alg, memo: HashMap::new(), stack: Vec::new() };
        let mut table = Vec::with_capacity(Basis40::COUNT);
        for b in Basis40::all() {
            let mut row: [Combo3; 6] = Default::default();
            for g in Gen::ALL {
                row[g.index()] = match (b.halves(), g.letter()) {
                    (Some(_), _) => braids.alg.j_right(&Combo3::single(b), g),
                    (None, Some(l)) => {
                        let mut w = BRAIDS[b.index()].to_vec();
                        w.push(l);
                        braids.eval(&w)?
                    }
                    (None, None) => {
                        let i = if g == Gen::U1 { 1 } else { 2 };
                        braids.alg.braid_u_braid(BRAIDS[b.index()], i, &[])
                    }
                };
            }
            table.push(row);
        }
        alg.table = table;
        Ok(alg)
    }
}

struct BraidReducer<'a> {
    alg: &'a Algebra,
    memo: HashMap<Vec<i8>, Combo3>,
    stack: Vec<Vec<i8>>,
}

fn free_reduce(w: &[i8]) -> Vec<i8> {
    let mut out: Vec<i8> = Vec::with_capacity(w.len());
    for &l in w {
        if out.last() == Some(&-l) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    out
}

impl BraidReducer<'_> {
    fn eval(&mut self, w: &[i8]) -> Result<Combo3> {
        let u = free_reduce(w);
        if let Some(b) = Basis40::braid(&u) {
            return Ok(Combo3::single(b));
        }
        if let Some(c) = self.memo.get(&u) {
            return Ok(c.clone());
        }
        if self.stack.contains(&u) || self.stack.len() > 64 {
            return Err(Error::Internal(format!("braid reduction loops at {u:?}")));
        }
        self.stack.push(u.clone());
        let out = self.expand(&u);
        self.stack.pop();
        let out = out?;
        self.memo.insert(u, out.clone());
        Ok(out)
    }

    fn expand(&mut self, u: &[i8]) -> Result<Combo3> {
        let Some(k) = u.windows(2).position(|p| p[0] == p[1]) else {
            let target = REWRITES
                .iter()
                .find(|(from, _)| *from == u)
                .map(|(_, to)| *to)
                .ok_or_else(|| Error::Internal(format!("no rewrite for braid word {u:?}")))?;
            return self.eval(target);
        };
        let (p, s, r) = (&u[..k], u[k], &u[k + 2..]);
        let sq = if s > 0 { self.alg.sq_pos() } else { self.alg.sq_neg() };
        let i = s.abs();
        let mut out = Combo3::zero();
        for (h, c) in sq {
            let part = match h {
                Half::S => self.eval(&[p, &[i], r].concat())?,
                Half::Si => self.eval(&[p, &[-i], r].concat())?,
                Half::E => self.eval(&[p, r].concat())?,
                Half::U => self.alg.braid_u_braid(p, i, r),
            };
            out.add_scaled(&part, &c);
        }
        Ok(out)
    }
}

fn algebra(signs: TwistSigns) -> &'static Algebra {
    static CONSISTENT: OnceLock<Algebra> = OnceLock::new();
    static PRINTED: OnceLock<Algebra> = OnceLock::new();
    let cell = match signs {
        TwistSigns::Consistent => &CONSISTENT,
        TwistSigns::Printed => &PRINTED,
    };
    cell.get_or_init(|| Algebra::build(signs).expect("3-tangle product table builds"))
}

/// b·g over the basis, with the consistent signs.
pub fn basis_times_gen(b: Basis40, g: Gen) -> Combo3 {
    basis_times_gen_with(TwistSigns::Consistent, b, g)
}

pub fn basis_times_gen_with(signs: TwistSigns, b: Basis40, g: Gen) -> Combo3 {
    algebra(signs).table[b.index()][g.index()].clone()
}

/// Reduces a word to the basis, with the consistent signs.
pub fn reduce_word(w: &Word3) -> Combo3 {
    reduce_word_with(TwistSigns::Consistent, w)
}

pub fn reduce_word_with(signs: TwistSigns, w: &Word3) -> Combo3 {
    let alg = algebra(signs);
    let mut c = Combo3::single(Basis40::E);
    for &g in &w.0 {
        c = times_gen(alg, &c, g);
    }
    c
}

fn times_gen(alg: &Algebra, c: &Combo3, g: Gen) -> Combo3 {
    let mut out = Combo3::zero();
    for (b, v) in c.iter() {
        out.add_scaled(&alg.table[b.index()][g.index()], v);
    }
    out
}

/// Bilinear product: concatenate basis words and reduce.
pub fn multiply3(x: &Combo3, y: &Combo3) -> Combo3 {
    multiply3_with(TwistSigns::Consistent, x, y)
}

pub fn multiply3_with(signs: TwistSigns, x: &Combo3, y: &Combo3) -> Combo3 {
    let alg = algebra(signs);
    let mut out = Combo3::zero();
    for (b2, v2) in y.iter() {
        let mut part = x.scale(v2);
        for &g in &b2.word().0 {
            part = times_gen(alg, &part, g);
        }
        out.add_scaled(&part, &LaurentPoly::one());
    }
    out
}
