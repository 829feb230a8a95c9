//! Quotients of Laurent polynomials, normalized by integer content and
//! monomial factors only. Equality is decided by cross-multiplication.

use num_integer::Integer;
use num_traits::{One, Signed};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{exact_divide, LaurentPoly, Mono, Std, VarSet, MAX_VARS};
use crate::error::{Error, Result};

#[derive(Clone)]
pub struct RingFraction {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RingFraction {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalized(num, den))
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        RingFraction { num: p, den: LaurentPoly::one() }
    }

    pub fn numer(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denom(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn normalized(num: LaurentPoly, den: LaurentPoly) -> Self {
        if num.is_zero() {
            return RingFraction { num, den: LaurentPoly::one() };
        }
        let g = num.content().gcd(&den.content());
        let (mut num, mut den) = if g.is_one() {
            (num, den)
        } else {
            (num.div_exact_int(&g), den.div_exact_int(&g))
        };
        // Invertible variables: move the denominator's minimum exponent to 0.
        // Non-invertible ones: cancel the shared power.
        let mn = num.min_exps();
        let md = den.min_exps();
        let mut shift = [0i32; MAX_VARS];
        for i in 0..Std::len() {
            shift[i] = if Std::INVERTIBLE[i] { -md[i] } else { -(mn[i].min(md[i])) };
        }
        if shift.iter().any(|&s| s != 0) {
            let m = Mono::from_raw(shift);
            num = num.mul_mono(&m);
            den = den.mul_mono(&m);
        }
        if den.leading().map(|(_, c)| c.is_negative()).unwrap_or(false) {
            num = -num;
            den = -den;
        }
        RingFraction { num, den }
    }

    /// The polynomial value, if the denominator divides the numerator.
    pub fn to_poly(&self) -> Option<LaurentPoly> {
        exact_divide(&self.num, &self.den).expect("nonzero denominator")
    }

    pub fn inverse(&self) -> Result<Self> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn div(&self, o: &Self) -> Result<Self> {
        Ok(self * &o.inverse()?)
    }

    /// Cross-multiplication equality.
    pub fn frac_equal(&self, o: &Self) -> bool {
        &self.num * &o.den == &o.num * &self.den
    }

    /// Image under a coefficient map that is a ring homomorphism on both parts.
    pub fn map(&self, f: impl Fn(&LaurentPoly) -> LaurentPoly) -> Result<Self> {
        Self::new(f(&self.num), f(&self.den))
    }

    /// Canonical text: `(num)/(den)`, or just the numerator when the denominator is 1.
    pub fn to_canonical(&self) -> String {
        if self.den.is_one() {
            self.num.to_canonical()
        } else {
            format!("({})/({})", self.num, self.den)
        }
    }
}

/// `x / y` for polynomials, as a normalized fraction.
pub fn frac(x: LaurentPoly, y: LaurentPoly) -> Result<RingFraction> {
    RingFraction::new(x, y)
}

impl PartialEq for RingFraction {
    fn eq(&self, o: &Self) -> bool {
        self.frac_equal(o)
    }
}

impl Eq for RingFraction {}

impl From<LaurentPoly> for RingFraction {
    fn from(p: LaurentPoly) -> Self {
        Self::from_poly(p)
    }
}

impl fmt::Display for RingFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_canonical())
    }
}

impl fmt::Debug for RingFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RingFraction({})", self.to_canonical())
    }
}

impl<'a> Add<&'a RingFraction> for &'a RingFraction {
    type Output = RingFraction;
    fn add(self, o: &'a RingFraction) -> RingFraction {
        if self.den == o.den {
            return RingFraction::normalized(&self.num + &o.num, self.den.clone());
        }
        RingFraction::normalized(&self.num * &o.den + &o.num * &self.den, &self.den * &o.den)
    }
}

impl<'a> Sub<&'a RingFraction> for &'a RingFraction {
    type Output = RingFraction;
    fn sub(self, o: &'a RingFraction) -> RingFraction {
        self + &(-o)
    }
}

impl<'a> Mul<&'a RingFraction> for &'a RingFraction {
    type Output = RingFraction;
    fn mul(self, o: &'a RingFraction) -> RingFraction {
        RingFraction::normalized(&self.num * &o.num, &self.den * &o.den)
    }
}

impl Neg for &RingFraction {
    type Output = RingFraction;
    fn neg(self) -> RingFraction {
        RingFraction { num: -&self.num, den: self.den.clone() }
    }
}

impl Add for RingFraction {
    type Output = RingFraction;
    fn add(self, o: RingFraction) -> RingFraction {
        &self + &o
    }
}

impl Sub for RingFraction {
    type Output = RingFraction;
    fn sub(self, o: RingFraction) -> RingFraction {
        &self - &o
    }
}

impl Mul for RingFraction {
    type Output = RingFraction;
    fn mul(self, o: RingFraction) -> RingFraction {
        &self * &o
    }
}

impl Neg for RingFraction {
    type Output = RingFraction;
    fn neg(self) -> RingFraction {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn normalization_strips_content_and_monomials() {
        let f = frac(p("6*a^2*b1*b2"), p("-4*a^3*b1^2 - 2*a^3*b1")).unwrap();
        assert_eq!(f.numer(), &p("-3*b2*a^-1"));
        assert_eq!(f.denom(), &p("2*b1 + 1"));
    }

    #[test]
    fn equality_by_cross_multiplication() {
        let d = p("a + b1");
        let q = p("b0 - b2^2");
        let x = frac(&q * &d, d.clone()).unwrap();
        assert_eq!(x, RingFraction::from_poly(q.clone()));
        assert_eq!(x.to_poly(), Some(q));
    }

    #[test]
    fn arithmetic() {
        let x = frac(p("1"), p("a + b1")).unwrap();
        let y = frac(p("1"), p("a - b1")).unwrap();
        let s = &x + &y;
        assert_eq!(s, frac(p("2*a"), p("a^2 - b1^2")).unwrap());
        assert!((&s - &s).is_zero());
        assert!(frac(p("1"), LaurentPoly::zero()).is_err());
    }
}
