//! Ring homomorphisms given by substituting variables.

use num_bigint::BigInt;
use std::collections::HashMap;

use super::{var, AlphaPoly, AlphaVars, KdPoly, KdVars, LaurentPoly, Mono, Poly, Std, VarSet, MAX_VARS};
use crate::error::{Error, Result};

/// A substitution homomorphism from `Poly<V>` to `Poly<W>`.
///
/// Invertible source variables must map to ±(unit monomial); this is checked
/// by [`Subst::new`], so every negative exponent has an image.
#[derive(Clone, Debug)]
pub struct Subst<V: VarSet, W: VarSet> {
    images: Vec<Poly<W>>,
    _v: std::marker::PhantomData<V>,
}

impl<V: VarSet, W: VarSet> Subst<V, W> {
    pub fn new(images: Vec<Poly<W>>) -> Result<Self> {
        if images.len() != V::len() {
            return Err(Error::Arity { expected: V::len(), got: images.len() });
        }
        for (i, img) in images.iter().enumerate() {
            if V::INVERTIBLE[i] && !img.is_unit() {
                return Err(Error::NotUnit(format!("image of {} is {}", V::NAMES[i], img)));
            }
        }
        Ok(Subst { images, _v: std::marker::PhantomData })
    }

    pub fn apply(&self, p: &Poly<V>) -> Poly<W> {
        let mut cache: HashMap<(usize, i32), Poly<W>> = HashMap::new();
        let mut out = Poly::zero();
        for (m, c) in p.terms() {
            let mut exp = [0i32; MAX_VARS];
            let mut coef = c.clone();
            let mut rest = Poly::<W>::one();
            for (i, &e) in m.exps().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let img = &self.images[i];
                if img.is_zero() {
                    rest = Poly::zero();
                    break;
                }
                if let Some((um, uc)) = img.as_monomial() {
                    // Negative e only occurs for units, where uc = ±1.
                    for (k, x) in exp.iter_mut().enumerate() {
                        *x += um.exp(k) * e;
                    }
                    coef *= uc.pow(e.unsigned_abs());
                } else {
                    let pw = cache.entry((i, e)).or_insert_with(|| img.pow(e as u32));
                    rest = &rest * &*pw;
                }
            }
            if rest.is_zero() {
                continue;
            }
            out += &rest.mul_mono(&Mono::from_raw(exp)).scale(&coef);
        }
        out
    }
}

/// The mirror involution φ′: b0↔b3, b1↔b2, and aⁿ·binfᵏ ↦ a^{3k−n}·binfᵏ.
pub fn phi_mirror(p: &LaurentPoly) -> LaurentPoly {
    let mut out = LaurentPoly::zero();
    for (m, c) in p.terms() {
        let e = m.raw();
        let k = e[var::BINF];
        let mut f = [0i32; MAX_VARS];
        f[var::A] = 3 * k - e[var::A];
        f[var::B0] = e[var::B3];
        f[var::B1] = e[var::B2];
        f[var::B2] = e[var::B1];
        f[var::B3] = e[var::B0];
        f[var::BINF] = k;
        out.add_term(Mono::from_raw(f), c.clone());
    }
    out
}

fn alpha_subst() -> Subst<Std, AlphaVars> {
    let al = |s: &str| -> AlphaPoly { s.parse().expect("static") };
    Subst::new(vec![
        al("alpha^3"),
        al("b0"),
        al("-alpha*b2 - alpha^5*binf"),
        al("b2"),
        al("-alpha*b0"),
        al("binf"),
    ])
    .expect("units map to units")
}

/// a ↦ α³, b3 ↦ −α·b0, b1 ↦ −α·b2 − α⁵·binf; b0, b2, binf fixed.
pub fn alpha_substitute(p: &LaurentPoly) -> AlphaPoly {
    alpha_subst().apply(p)
}

/// Sets b3 = −1.
pub fn dehomogenize(p: &LaurentPoly) -> LaurentPoly {
    let mut imgs: Vec<LaurentPoly> = (0..6).map(LaurentPoly::var).collect();
    imgs[var::B3] = LaurentPoly::constant(-1);
    Subst::<Std, Std>::new(imgs).expect("units").apply(p)
}

/// Inverse of [`dehomogenize`] on elements of the given weight: substitutes
/// bᵢ ↦ bᵢ/(−b3) for i ∈ {0, 1, 2, ∞} and multiplies by (−b3)^degree.
pub fn homogenize(p: &LaurentPoly, degree: i32) -> Result<LaurentPoly> {
    if p.terms().any(|(m, _)| m.exp(var::B3) != 0) {
        return Err(Error::InvalidArgument("homogenize expects a b3-free polynomial".into()));
    }
    let neg_b3_inv: LaurentPoly = "-b3^-1".parse().expect("static");
    let mut imgs: Vec<LaurentPoly> = (0..6).map(LaurentPoly::var).collect();
    for i in [var::B0, var::B1, var::B2, var::BINF] {
        imgs[i] = &imgs[i] * &neg_b3_inv;
    }
    let s = Subst::<Std, Std>::new(imgs)?;
    let scale = LaurentPoly::mono(1, &[0, 0, 0, 0, 1, 0])?.scale(&BigInt::from(-1)).powi(degree)?;
    Ok(&s.apply(p) * &scale)
}

/// Which image of binf to use in [`kd_specialize`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KdInfinity {
    /// binf = a⁻¹ε, the substitution as usually quoted alongside b3 = 0.
    Printed,
    /// binf = −εa⁻¹x, the value for which t becomes (a + εa⁻¹ − εx)/x and
    /// the cubic relation turns into the shifted Kauffman/Dubrovnik relation.
    Consistent,
}

/// The Kauffman (ε = 1) / Dubrovnik (ε = −1) specialization
/// b0 = ε, b1 = −x, b2 = 1, b3 = 0, with binf chosen by `inf`.
///
/// Not a unit substitution (b3 ↦ 0), so it is only defined on elements with
/// no negative power of b3.
pub fn kd_specialize(p: &LaurentPoly, eps: i32, inf: KdInfinity) -> Result<KdPoly> {
    if eps != 1 && eps != -1 {
        return Err(Error::InvalidArgument(format!("epsilon must be ±1, got {eps}")));
    }
    if p.terms().any(|(m, _)| m.exp(var::B3) < 0) {
        return Err(Error::InvalidArgument("negative power of b3 under b3 = 0".into()));
    }
    let kd = |s: &str| -> KdPoly { s.parse().expect("static") };
    let e = KdPoly::constant(eps);
    let binf = match inf {
        KdInfinity::Printed => &kd("a^-1") * &e,
        KdInfinity::Consistent => -(&kd("a^-1*x") * &e),
    };
    // Terms containing b3 vanish; the rest never see the b3 image.
    let mut kept = LaurentPoly::zero();
    for (m, c) in p.terms().filter(|(m, _)| m.exp(var::B3) == 0) {
        kept.add_term(*m, c.clone());
    }
    let s = Subst::<Std, KdVars>::new(vec![kd("a"), e.clone(), kd("-x"), kd("1"), kd("1"), binf])?;
    Ok(s.apply(&kept))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::trivial_component;

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn phi_is_involution_and_fixes_t() {
        let q = p("a^2*b1*binf^-1 - 3*b0^2*b3 + a^-4*b2*binf^2");
        assert_eq!(phi_mirror(&phi_mirror(&q)), q);
        let t = trivial_component();
        assert_eq!(phi_mirror(&t), t);
    }

    #[test]
    fn homogenize_p2() {
        let p2h = p("b2^2 + b1");
        let h = homogenize(&p2h, 2).unwrap();
        assert_eq!(h, p("b2^2 - b1*b3"));
        assert_eq!(dehomogenize(&h), p2h);
    }

    #[test]
    fn rejects_non_unit_images_of_units() {
        let imgs: Vec<LaurentPoly> = vec![p("a + 1"), p("b0"), p("b1"), p("b2"), p("b3"), p("binf")];
        assert!(Subst::<Std, Std>::new(imgs).is_err());
    }

    #[test]
    fn alpha_of_generators() {
        assert_eq!(alpha_substitute(&p("a^-1*b3")).to_string(), "-alpha^-2*b0");
        assert_eq!(alpha_substitute(&p("b1")).to_string(), "-alpha^5*binf - alpha*b2");
        assert!(alpha_substitute(&LaurentPoly::zero()).is_zero());
    }

    #[test]
    fn kd_of_generators() {
        let q = p("b0*b1 + b2*b3 + a*binf");
        let k = kd_specialize(&q, -1, KdInfinity::Printed).unwrap();
        assert_eq!(k.to_string(), "x - 1");
        let k = kd_specialize(&q, -1, KdInfinity::Consistent).unwrap();
        assert_eq!(k.to_string(), "2*x");
        assert!(kd_specialize(&p("b3^-1"), 1, KdInfinity::Printed).is_err());
    }

    #[test]
    fn subst_with_integer_coefficients() {
        let imgs: Vec<LaurentPoly> = vec![p("-a"), p("b0"), p("3"), p("-2"), p("b3"), p("binf")];
        let s = Subst::<Std, Std>::new(imgs).unwrap();
        assert_eq!(s.apply(&p("a^-1*b1^2*b2")), p("18*a^-1"));
    }
}
