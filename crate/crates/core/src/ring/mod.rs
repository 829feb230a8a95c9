//! Exact multivariate Laurent polynomials over ℤ.
//!
//! The main ring is ℤ[a^±1, b0^±1, b1, b2, b3^±1, binf^±1]. A second variable
//! set (`AlphaVars`) hosts the cube-root reparametrization a = α³, and a small
//! one (`KdVars`) hosts the Kauffman/Dubrovnik specialization. All three share
//! one generic implementation, [`Poly`].
//!
//! Terms are kept in a `BTreeMap` keyed by [`Mono`], whose `Ord` is the
//! graded-lex term order. Iteration from the back yields the leading term.

mod divide;
mod fraction;
mod parse;
mod subst;

pub use divide::exact_divide;
pub use fraction::{frac, RingFraction};
pub use subst::{
    alpha_substitute, dehomogenize, homogenize, kd_specialize, phi_mirror, KdInfinity, Subst,
};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::hash::Hash;
use std::marker::PhantomData;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use crate::error::{Error, Result};

/// Maximum number of variables any variable set may declare.
pub const MAX_VARS: usize = 6;

/// A fixed, ordered set of ring variables.
pub trait VarSet: Copy + Clone + Eq + Ord + Hash + fmt::Debug + Send + Sync + 'static {
    /// Variable names in term-order priority (first is the most significant).
    const NAMES: &'static [&'static str];
    /// Which variables may carry negative exponents.
    const INVERTIBLE: &'static [bool];
    /// Extra spellings accepted by the parser.
    const ALIASES: &'static [(&'static str, usize)] = &[];

    fn len() -> usize {
        Self::NAMES.len()
    }
}

/// The skein coefficient ring: (a, b0, b1, b2, b3, binf).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Std;

impl VarSet for Std {
    const NAMES: &'static [&'static str] = &["a", "b0", "b1", "b2", "b3", "binf"];
    const INVERTIBLE: &'static [bool] = &[true, true, false, false, true, true];
    const ALIASES: &'static [(&'static str, usize)] = &[("b∞", 5), ("bi", 5)];
}

/// Target of the α-substitution: (alpha, b0, b2, binf), b2 not invertible.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AlphaVars;

impl VarSet for AlphaVars {
    const NAMES: &'static [&'static str] = &["alpha", "b0", "b2", "binf"];
    const INVERTIBLE: &'static [bool] = &[true, true, false, true];
    const ALIASES: &'static [(&'static str, usize)] = &[("α", 0), ("b∞", 3)];
}

/// Target of the Kauffman/Dubrovnik specialization: (a, x). Both are units,
/// as in the usual Laurent ring of the Kauffman polynomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct KdVars;

impl VarSet for KdVars {
    const NAMES: &'static [&'static str] = &["a", "x"];
    const INVERTIBLE: &'static [bool] = &[true, true];
}

/// Variable indices of [`Std`].
pub mod var {
    pub const A: usize = 0;
    pub const B0: usize = 1;
    pub const B1: usize = 2;
    pub const B2: usize = 3;
    pub const B3: usize = 4;
    pub const BINF: usize = 5;
}

/// An exponent vector. Unused slots (beyond `V::len()`) stay zero.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Mono<V> {
    exps: [i32; MAX_VARS],
    _v: PhantomData<V>,
}

impl<V: VarSet> Mono<V> {
    pub fn one() -> Self {
        Mono { exps: [0; MAX_VARS], _v: PhantomData }
    }

    /// Builds a monomial, rejecting negative powers of non-invertible variables.
    pub fn new(exps: &[i32]) -> Result<Self> {
        if exps.len() != V::len() {
            return Err(Error::Arity { expected: V::len(), got: exps.len() });
        }
        let mut m = Self::one();
        for (i, &e) in exps.iter().enumerate() {
            if e < 0 && !V::INVERTIBLE[i] {
                return Err(Error::NonInvertible(V::NAMES[i].to_string()));
            }
            m.exps[i] = e;
        }
        Ok(m)
    }

    /// Single variable raised to `e`.
    pub fn var_pow(i: usize, e: i32) -> Result<Self> {
        let mut v = vec![0; V::len()];
        v[i] = e;
        Self::new(&v)
    }

    pub fn exps(&self) -> &[i32] {
        &self.exps[..V::len()]
    }

    pub fn exp(&self, i: usize) -> i32 {
        self.exps[i]
    }

    pub fn degree(&self) -> i64 {
        self.exps.iter().map(|&e| e as i64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    /// True when every exponent sits on an invertible variable.
    pub fn is_unit(&self) -> bool {
        self.exps().iter().enumerate().all(|(i, &e)| e == 0 || V::INVERTIBLE[i])
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut m = *self;
        for i in 0..MAX_VARS {
            m.exps[i] += o.exps[i];
        }
        m
    }

    /// Inverse of a unit monomial.
    pub fn inv(&self) -> Result<Self> {
        let mut m = *self;
        for i in 0..V::len() {
            if m.exps[i] != 0 && !V::INVERTIBLE[i] {
                return Err(Error::NonInvertible(V::NAMES[i].to_string()));
            }
            m.exps[i] = -m.exps[i];
        }
        Ok(m)
    }

    /// `self / o` as exponent difference; fails if a non-invertible exponent goes negative.
    pub fn div(&self, o: &Self) -> Result<Self> {
        let mut v = [0i32; MAX_VARS];
        for i in 0..MAX_VARS {
            v[i] = self.exps[i] - o.exps[i];
        }
        Self::new(&v[..V::len()])
    }

    /// Plain monomial divisibility with all exponents treated as ordinary (≥ 0) powers.
    pub(crate) fn divides_plain(&self, o: &Self) -> bool {
        (0..MAX_VARS).all(|i| self.exps[i] <= o.exps[i])
    }

    pub(crate) fn from_raw(exps: [i32; MAX_VARS]) -> Self {
        Mono { exps, _v: PhantomData }
    }

    pub(crate) fn raw(&self) -> [i32; MAX_VARS] {
        self.exps
    }
}

impl<V: VarSet> Ord for Mono<V> {
    fn cmp(&self, o: &Self) -> Ordering {
        self.degree().cmp(&o.degree()).then_with(|| self.exps.cmp(&o.exps))
    }
}

impl<V: VarSet> PartialOrd for Mono<V> {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl<V: VarSet> fmt::Debug for Mono<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", parse::format_mono(self).unwrap_or_else(|| "1".into()))
    }
}

/// A Laurent polynomial over `V` with big-integer coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly<V: VarSet> {
    terms: BTreeMap<Mono<V>, BigInt>,
}

/// The value type of every link evaluation.
pub type LaurentPoly = Poly<Std>;
/// Polynomials after the α-substitution.
pub type AlphaPoly = Poly<AlphaVars>;
/// Polynomials after the Kauffman/Dubrovnik specialization.
pub type KdPoly = Poly<KdVars>;

impl<V: VarSet> Default for Poly<V> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<V: VarSet> Poly<V> {
    pub fn zero() -> Self {
        Poly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::term(c, Mono::one())
    }

    pub fn term(c: impl Into<BigInt>, m: Mono<V>) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Poly { terms }
    }

    /// The variable with index `i`.
    pub fn var(i: usize) -> Self {
        Self::term(1, Mono::var_pow(i, 1).expect("positive power"))
    }

    /// `var(i)^e`; negative `e` only for invertible variables.
    pub fn var_pow(i: usize, e: i32) -> Result<Self> {
        Ok(Self::term(1, Mono::var_pow(i, e)?))
    }

    /// Monomial `c * x^exps`.
    pub fn mono(c: impl Into<BigInt>, exps: &[i32]) -> Result<Self> {
        Ok(Self::term(c, Mono::new(exps)?))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.iter().all(|(m, c)| m.is_one() && c.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms from the leading (largest) one downward.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Mono<V>, &BigInt)> + '_ {
        self.terms.iter().rev()
    }

    pub fn leading(&self) -> Option<(&Mono<V>, &BigInt)> {
        self.terms.iter().next_back()
    }

    pub fn coeff(&self, m: &Mono<V>) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// The sole term, if the polynomial is a single monomial.
    pub fn as_monomial(&self) -> Option<(&Mono<V>, &BigInt)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    /// ±1 times a unit monomial.
    pub fn is_unit(&self) -> bool {
        match self.as_monomial() {
            Some((m, c)) => m.is_unit() && c.abs().is_one(),
            None => false,
        }
    }

    pub(crate) fn add_term(&mut self, m: Mono<V>, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Poly { terms: self.terms.iter().map(|(m, x)| (*m, x * c)).collect() }
    }

    /// Multiplication by a monomial (exponents simply shift).
    pub fn mul_mono(&self, m: &Mono<V>) -> Self {
        Poly { terms: self.terms.iter().map(|(k, c)| (k.mul(m), c.clone())).collect() }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Inverse of a unit (±monomial in invertible variables).
    pub fn unit_inverse(&self) -> Result<Self> {
        match self.as_monomial() {
            Some((m, c)) if c.abs().is_one() => Ok(Self::term(c.clone(), m.inv()?)),
            _ => Err(Error::NotUnit(self.to_string())),
        }
    }

    /// Integer power that may be negative (units only).
    pub fn powi(&self, n: i32) -> Result<Self> {
        if n >= 0 {
            Ok(self.pow(n as u32))
        } else {
            Ok(self.unit_inverse()?.pow(n.unsigned_abs()))
        }
    }

    /// gcd of all coefficients (0 for the zero polynomial).
    pub fn content(&self) -> BigInt {
        use num_integer::Integer;
        self.terms.values().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Per-variable minimum exponent over all terms.
    pub fn min_exps(&self) -> [i32; MAX_VARS] {
        let mut mins = [i32::MAX; MAX_VARS];
        for m in self.terms.keys() {
            for (i, slot) in mins.iter_mut().enumerate() {
                *slot = (*slot).min(m.exps[i]);
            }
        }
        if self.terms.is_empty() {
            mins = [0; MAX_VARS];
        }
        mins
    }

    /// Divides every coefficient by `d`, which must divide each exactly.
    pub(crate) fn div_exact_int(&self, d: &BigInt) -> Self {
        Poly { terms: self.terms.iter().map(|(m, c)| (*m, c / d)).collect() }
    }

    /// Highest exponent of variable `i` among the terms.
    pub fn max_exp(&self, i: usize) -> Option<i32> {
        self.terms.keys().map(|m| m.exps[i]).max()
    }

    /// Lowest exponent of variable `i` among the terms.
    pub fn min_exp(&self, i: usize) -> Option<i32> {
        self.terms.keys().map(|m| m.exps[i]).min()
    }

    /// Collects terms into a map keyed by the exponent of variable `i`.
    pub fn split_by_var(&self, i: usize) -> BTreeMap<i32, Self> {
        let mut out: BTreeMap<i32, Self> = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut raw = m.raw();
            let e = raw[i];
            raw[i] = 0;
            out.entry(e).or_default().add_term(Mono::from_raw(raw), c.clone());
        }
        out
    }

    pub fn parse(s: &str) -> Result<Self> {
        parse::parse_poly(s)
    }

    /// Canonical text form (see the crate docs for the grammar).
    pub fn to_canonical(&self) -> String {
        parse::format_poly(self)
    }
}

impl<V: VarSet> fmt::Display for Poly<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_canonical())
    }
}

impl<V: VarSet> fmt::Debug for Poly<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({})", self.to_canonical())
    }
}

impl<V: VarSet> std::str::FromStr for Poly<V> {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse::parse_poly(s)
    }
}

impl<V: VarSet> From<i64> for Poly<V> {
    fn from(c: i64) -> Self {
        Self::constant(c)
    }
}

impl<'a, V: VarSet> AddAssign<&'a Poly<V>> for Poly<V> {
    fn add_assign(&mut self, o: &'a Poly<V>) {
        for (m, c) in &o.terms {
            self.add_term(*m, c.clone());
        }
    }
}

impl<'a, V: VarSet> SubAssign<&'a Poly<V>> for Poly<V> {
    fn sub_assign(&mut self, o: &'a Poly<V>) {
        for (m, c) in &o.terms {
            self.add_term(*m, -c);
        }
    }
}

impl<'a, V: VarSet> Add<&'a Poly<V>> for &'a Poly<V> {
    type Output = Poly<V>;
    fn add(self, o: &'a Poly<V>) -> Poly<V> {
        let mut r = self.clone();
        r += o;
        r
    }
}

impl<'a, V: VarSet> Sub<&'a Poly<V>> for &'a Poly<V> {
    type Output = Poly<V>;
    fn sub(self, o: &'a Poly<V>) -> Poly<V> {
        let mut r = self.clone();
        r -= o;
        r
    }
}

impl<'a, V: VarSet> Mul<&'a Poly<V>> for &'a Poly<V> {
    type Output = Poly<V>;
    fn mul(self, o: &'a Poly<V>) -> Poly<V> {
        let (small, big) = if self.len() <= o.len() { (self, o) } else { (o, self) };
        let mut acc: std::collections::HashMap<Mono<V>, BigInt> =
            std::collections::HashMap::with_capacity(small.len() * big.len());
        for (m1, c1) in &small.terms {
            for (m2, c2) in &big.terms {
                let m = m1.mul(m2);
                let p = c1 * c2;
                match acc.get_mut(&m) {
                    Some(x) => *x += p,
                    None => {
                        acc.insert(m, p);
                    }
                }
            }
        }
        Poly { terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect() }
    }
}

impl<V: VarSet> Neg for &Poly<V> {
    type Output = Poly<V>;
    fn neg(self) -> Poly<V> {
        Poly { terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect() }
    }
}

macro_rules! owned_ops {
    ($($tr:ident $f:ident),*) => {$(
        impl<V: VarSet> $tr<Poly<V>> for Poly<V> {
            type Output = Poly<V>;
            fn $f(self, o: Poly<V>) -> Poly<V> { (&self).$f(&o) }
        }
        impl<'a, V: VarSet> $tr<&'a Poly<V>> for Poly<V> {
            type Output = Poly<V>;
            fn $f(self, o: &'a Poly<V>) -> Poly<V> { (&self).$f(o) }
        }
        impl<'a, V: VarSet> $tr<Poly<V>> for &'a Poly<V> {
            type Output = Poly<V>;
            fn $f(self, o: Poly<V>) -> Poly<V> { self.$f(&o) }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul);

impl<V: VarSet> Neg for Poly<V> {
    type Output = Poly<V>;
    fn neg(self) -> Poly<V> {
        -&self
    }
}

impl<V: VarSet> std::iter::Sum for Poly<V> {
    fn sum<I: Iterator<Item = Poly<V>>>(iter: I) -> Self {
        let mut acc = Poly::zero();
        for p in iter {
            acc += &p;
        }
        acc
    }
}

/// Shorthands for building elements of the main ring.
pub mod sym {
    use super::{var, LaurentPoly, Poly};

    pub fn a() -> LaurentPoly {
        Poly::var(var::A)
    }
    pub fn a_pow(e: i32) -> LaurentPoly {
        Poly::var_pow(var::A, e).expect("a is invertible")
    }
    pub fn b0() -> LaurentPoly {
        Poly::var(var::B0)
    }
    pub fn b1() -> LaurentPoly {
        Poly::var(var::B1)
    }
    pub fn b2() -> LaurentPoly {
        Poly::var(var::B2)
    }
    pub fn b3() -> LaurentPoly {
        Poly::var(var::B3)
    }
    pub fn binf() -> LaurentPoly {
        Poly::var(var::BINF)
    }
    pub fn b0_inv() -> LaurentPoly {
        Poly::var_pow(var::B0, -1).expect("b0 is invertible")
    }
    pub fn b3_inv() -> LaurentPoly {
        Poly::var_pow(var::B3, -1).expect("b3 is invertible")
    }
    pub fn binf_inv() -> LaurentPoly {
        Poly::var_pow(var::BINF, -1).expect("binf is invertible")
    }
    pub fn int(c: i64) -> LaurentPoly {
        Poly::constant(c)
    }
}

/// The trivial-component scalar t = −(b0 + b1·a⁻¹ + b2·a⁻² + b3·a⁻³)·binf⁻¹.
pub fn trivial_component() -> LaurentPoly {
    use sym::*;
    let inner = b0() + b1() * a_pow(-1) + b2() * a_pow(-2) + b3() * a_pow(-3);
    -(inner * binf_inv())
}

/// Canonical sign for polynomials known only up to sign: leading coefficient positive.
pub fn normalize_sign<V: VarSet>(p: &Poly<V>) -> Poly<V> {
    match p.leading() {
        Some((_, c)) if c.is_negative() => -p,
        _ => p.clone(),
    }
}
