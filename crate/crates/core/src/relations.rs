//! Named skein relations, the second cubic relation, the quadratic relation
//! and the quadratic-to-cubic bridge.
//!
//! Small knot values (Hopf links, trefoils, figure-eight, 5₂, Whitehead link)
//! are assembled here from the hand skein computations they come from. The
//! rational ones are cross-checked against [`crate::rta`]. The printed values
//! live in `data/relations.golden` and are compared term by term in tests and
//! by [`check_corpus`].

use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::ring::{
    exact_divide, phi_mirror, sym, trivial_component, LaurentPoly, Poly, RingFraction, VarSet,
};
use crate::tangle_model::{Closure, ConwayCode, Entry};

/// A relation value together with where it comes from.
#[derive(Clone, Debug)]
pub struct NamedRelation {
    pub name: String,
    pub value: RingFraction,
    pub provenance: String,
    /// For a tangle relation, its coefficients on D₃, D₂, D₁, D₀, D∞; `value`
    /// is then its numerator closure.
    pub coeffs: Option<SkeinCoeffs>,
}

/// Coefficients of c₃D₃ + c₂D₂ + c₁D₁ + c₀D₀ + c∞D∞ = 0. A quadratic relation
/// has c₃ = 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkeinCoeffs<V: VarSet = crate::ring::Std> {
    pub c3: Poly<V>,
    pub c2: Poly<V>,
    pub c1: Poly<V>,
    pub c0: Poly<V>,
    pub cinf: Poly<V>,
}

impl<V: VarSet> SkeinCoeffs<V> {
    pub fn as_array(&self) -> [&Poly<V>; 5] {
        [&self.c3, &self.c2, &self.c1, &self.c0, &self.cinf]
    }

    pub fn map<W: VarSet>(&self, f: impl Fn(&Poly<V>) -> Poly<W>) -> SkeinCoeffs<W> {
        SkeinCoeffs {
            c3: f(&self.c3),
            c2: f(&self.c2),
            c1: f(&self.c1),
            c0: f(&self.c0),
            cinf: f(&self.cinf),
        }
    }

    pub fn scale(&self, s: &Poly<V>) -> Self {
        self.map(|c| c * s)
    }

    pub fn is_zero(&self) -> bool {
        self.as_array().iter().all(|c| c.is_zero())
    }
}

impl<V: VarSet> fmt::Display for SkeinCoeffs<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = ["D3", "D2", "D1", "D0", "Dinf"];
        for (n, c) in names.iter().zip(self.as_array()) {
            writeln!(f, "{n}: {c}")?;
        }
        Ok(())
    }
}

fn p(s: &str) -> LaurentPoly {
    s.parse().expect("static polynomial")
}

/// The original cubic relation b3D₃ + b2D₂ + b1D₁ + b0D₀ + binfD∞ = 0.
pub fn cubic_coeffs() -> SkeinCoeffs {
    SkeinCoeffs { c3: sym::b3(), c2: sym::b2(), c1: sym::b1(), c0: sym::b0(), cinf: sym::binf() }
}

/// The second cubic relation, obtained by resolving the right trefoil in the
/// D₃ position the other way.
pub fn cubic2_coeffs() -> SkeinCoeffs {
    SkeinCoeffs {
        c3: sym::b3(),
        c2: p("-b3*(b1*b3 - a^2*b0*binf)*a^-1*b0^-2"),
        c1: p("-b3*(a*b3*binf - b0*b2)*b0^-2"),
        c0: p("-b3^3*a^-1*b0^-2"),
        cinf: p("-b3*(b2*b3 - b0*b1)*a^-2*b0^-2"),
    }
}

/// Difference of the two cubic relations with the unit −a⁻²b0⁻² stripped.
pub fn quadratic_relation_coeffs() -> SkeinCoeffs {
    SkeinCoeffs {
        c3: LaurentPoly::zero(),
        c2: p("a^2*b0^2*b2 + a*b1*b3^2 - a^3*b0*b3*binf"),
        c1: p("a^2*b0^2*b1 - a^2*b0*b2*b3 + a^3*b3^2*binf"),
        c0: p("a^2*b0^3 + a*b3^3"),
        cinf: p("-b0*b1*b3 + b2*b3^2 + a^2*b0^2*binf"),
    }
}

/// The unit stripped from [`quadratic_relation_coeffs`].
pub fn quadratic_relation_unit() -> LaurentPoly {
    p("-a^-2*b0^-2")
}

/// s·(shifted quadratic) − (quadratic): the cubic relation
/// (s·c₂, s·c₁ − c₂, s·c₀ − c₁, −c₀, (a⁻¹s − 1)·c∞). Only c₂..c∞ of `q` are read.
pub fn quadratic_to_cubic<V: VarSet>(q: &SkeinCoeffs<V>, s: &Poly<V>, a: &Poly<V>) -> Result<SkeinCoeffs<V>> {
    let a_inv = a.unit_inverse()?;
    Ok(SkeinCoeffs {
        c3: s * &q.c2,
        c2: &(s * &q.c1) - &q.c2,
        c1: &(s * &q.c0) - &q.c1,
        c0: -&q.c0,
        cinf: &(&(&a_inv * s) - &Poly::one()) * &q.cinf,
    })
}

/// The Hopf relation forced by a quadratic relation:
/// (c₀² − c₂²)t + (a·c₀ − a⁻¹c₂)c₁ + (c₀ − a²c₂)c∞ with t = (a⁻²c₂ + a⁻¹c₁ + c₀)/(−c∞),
/// multiplied through by −c∞.
pub fn quadratic_hopf_relation<V: VarSet>(q: &SkeinCoeffs<V>, a: &Poly<V>) -> Result<Poly<V>> {
    if q.cinf.is_zero() {
        return Err(Error::InvalidArgument("c_inf must be nonzero".into()));
    }
    let a_inv = a.unit_inverse()?;
    let a2 = a * a;
    let a_inv2 = &a_inv * &a_inv;
    let t_num = &(&(&a_inv2 * &q.c2) + &(&a_inv * &q.c1)) + &q.c0;
    let sq = &(&q.c0 * &q.c0) - &(&q.c2 * &q.c2);
    let rest = &(&(&(a * &q.c0) - &(&a_inv * &q.c2)) * &q.c1) + &(&(&q.c0 - &(&a2 * &q.c2)) * &q.cinf);
    Ok(&(&sq * &t_num) - &(&q.cinf * &rest))
}

/// Values of the small knots and links that the named relations combine,
/// each computed by the skein step that produces it.
#[derive(Clone, Debug)]
pub struct KnotValues {
    pub t: LaurentPoly,
    pub h_plus: LaurentPoly,
    pub h_minus: LaurentPoly,
    /// Left trefoil 3₁ from the shifted relation.
    pub trefoil_left: LaurentPoly,
    /// Right trefoil in the D₃ position.
    pub trefoil_right: LaurentPoly,
    /// Right trefoil from the second cubic relation.
    pub trefoil_right_2: LaurentPoly,
    /// Left trefoil from the second diagram (a kink and the shifted relation).
    pub trefoil_left_2: LaurentPoly,
    pub fig8_plus: LaurentPoly,
    pub fig8_minus: LaurentPoly,
    pub five_two: LaurentPoly,
    pub whitehead_1: LaurentPoly,
    pub whitehead_2: LaurentPoly,
}

fn lc(terms: &[(&LaurentPoly, &LaurentPoly)]) -> LaurentPoly {
    terms.iter().map(|(c, v)| *c * *v).sum()
}

impl KnotValues {
    fn build() -> Self {
        let t = trivial_component();
        let t2 = &t * &t;
        let (a, b0, b1, b2, b3, bi) = (sym::a(), sym::b0(), sym::b1(), sym::b2(), sym::b3(), sym::binf());
        let am = |e: i32| sym::a_pow(e);
        let neg_b3i = -sym::b3_inv();
        let neg_b0i = -sym::b0_inv();

        let h_plus = &neg_b3i * &(&t * &(&(&(&b2 * &a) + &(&b0 * &am(-1))) + &(&(&bi * &a) + &(&b1 * &t))));
        let h_minus = &neg_b0i * &(&t * &(&(&(&b1 * &am(-1)) + &(&b2 * &t)) + &(&(&b3 * &a) + &(&bi * &am(2)))));

        let trefoil_left = &neg_b0i
            * &lc(&[(&b1, &h_minus), (&(&b2 * &am(-1)), &t), (&b3, &t2), (&(&am(3) * &bi), &t)]);
        let trefoil_right =
            &neg_b3i * &lc(&[(&b2, &h_plus), (&(&a * &b1), &t), (&b0, &t2), (&bi, &t)]);

        let c2 = cubic2_coeffs();
        // Second cubic relation with the right trefoil in the D₃ position: the
        // D₂, D₁, D₀, D∞ slots close to H₊, at, t², t.
        let trefoil_right_2 = &(-sym::b3_inv())
            * &lc(&[(&c2.c2, &h_plus), (&(&c2.c1 * &a), &t), (&c2.c0, &t2), (&c2.cinf, &t)]);
        let trefoil_left_2 = &(&(-&a) * &sym::b3_inv())
            * &lc(&[(&(&b2 * &a), &t), (&(&b1 * &am(-2)), &t), (&b0, &trefoil_right), (&bi, &h_plus)]);

        let fig8_plus = &neg_b3i
            * &lc(&[
                (&b2, &trefoil_left),
                (&(&b1 * &am(2)), &t),
                (&(&b0 * &am(-1)), &t),
                (&(&bi * &a), &h_minus),
            ]);
        let fig8_minus = &neg_b0i
            * &lc(&[
                (&b1, &trefoil_right),
                (&(&b2 * &am(-2)), &t),
                (&(&b3 * &a), &t),
                (&(&bi * &a), &h_plus),
            ]);
        let five_two = &neg_b3i
            * &lc(&[(&b2, &fig8_minus), (&b1, &trefoil_left), (&(&b0 * &am(2)), &t), (&bi, &h_minus)]);
        let whitehead_1 = &neg_b0i
            * &lc(&[
                (&b1, &fig8_minus),
                (&(&b2 * &am(-1)), &h_minus),
                (&(&b3 * &am(2)), &t),
                (&(&bi * &am(2)), &trefoil_left),
            ]);
        let whitehead_2 = &(&(-&a) * &sym::b3_inv())
            * &lc(&[
                (&b2, &trefoil_left),
                (&(&am(-2) * &b1), &h_minus),
                (&b0, &five_two),
                (&(&a * &bi), &fig8_minus),
            ]);
        KnotValues {
            t,
            h_plus,
            h_minus,
            trefoil_left,
            trefoil_right,
            trefoil_right_2,
            trefoil_left_2,
            fig8_plus,
            fig8_minus,
            five_two,
            whitehead_1,
            whitehead_2,
        }
    }
}

/// The shared knot values (built once).
pub fn knot_values() -> &'static KnotValues {
    static K: OnceLock<KnotValues> = OnceLock::new();
    K.get_or_init(KnotValues::build)
}

/// (H₊, H₋) from the skein steps on the two Hopf diagrams.
pub fn hopf_pair() -> (LaurentPoly, LaurentPoly) {
    let k = knot_values();
    (k.h_plus.clone(), k.h_minus.clone())
}

/// scale_a·eval(a) − scale_b·eval(b), each code closed by its default closure.
pub fn relation_between(
    a: &ConwayCode,
    b: &ConwayCode,
    scale_a: &LaurentPoly,
    scale_b: &LaurentPoly,
) -> Result<LaurentPoly> {
    let va = crate::rta::eval_code(a, None)?;
    let vb = crate::rta::eval_code(b, None)?;
    Ok(&(scale_a * &va) - &(scale_b * &vb))
}

/// R_Hopf = [−1,−1] − [1,1].
pub fn hopf_relation() -> LaurentPoly {
    static R: OnceLock<LaurentPoly> = OnceLock::new();
    R.get_or_init(|| {
        let one = LaurentPoly::one();
        relation_between(
            &ConwayCode::from_ints(&[-1, -1]).expect("code"),
            &ConwayCode::from_ints(&[1, 1]).expect("code"),
            &one,
            &one,
        )
        .expect("Hopf codes evaluate")
    })
    .clone()
}

/// t₂, the trivial component obtained from the second cubic relation.
pub fn trivial_knot_second() -> RingFraction {
    RingFraction::new(
        p("-b0^2 - a^2*b0*b2 + b1*b3 + a^2*b3^2 - a^2*b0*binf + a^3*b3*binf"),
        p("a*(b0*b1 - b2*b3)"),
    )
    .expect("nonzero denominator")
}

/// t₂ computed from the second cubic relation: the denominator closure of
/// c₃D₃ + … + c∞D∞ gives c₃a⁻³ + c₂a⁻² + c₁a⁻¹ + c₀ + c∞t₂ = 0 for the D₃..D₀
/// slots closing to framed unknots, and the D∞ slot closing to two circles.
pub fn trivial_knot_second_from_relation() -> Result<RingFraction> {
    let c = cubic2_coeffs();
    let s = lc(&[
        (&c.c3, &sym::a_pow(-3)),
        (&c.c2, &sym::a_pow(-2)),
        (&c.c1, &sym::a_pow(-1)),
        (&c.c0, &LaurentPoly::one()),
    ]);
    RingFraction::new(-s, c.cinf)
}

/// R_t = t₂ − t.
pub fn trivial_relation() -> RingFraction {
    &trivial_knot_second() - &RingFraction::from_poly(trivial_component())
}

/// R_{tr+} = (3̄₁)₂ − 3̄₁, the right trefoil from the second cubic relation
/// minus the one from the original relation. This is the orientation of the
/// expanded closed form.
pub fn trefoil_relation_plus() -> LaurentPoly {
    let k = knot_values();
    &k.trefoil_right_2 - &k.trefoil_right
}

/// The second left-trefoil formula −a·b3⁻¹(b2·a·t + b1·a⁻²·t + b0·X + binf·H₊)
/// with `x` in place of the right trefoil X.
pub fn left_trefoil_second(x: &LaurentPoly) -> LaurentPoly {
    let k = knot_values();
    let t = &k.t;
    let inner = lc(&[
        (&(&sym::b2() * &sym::a()), t),
        (&(&sym::b1() * &sym::a_pow(-2)), t),
        (&sym::b0(), x),
        (&sym::binf(), &k.h_plus),
    ]);
    &(&(-sym::a()) * &sym::b3_inv()) * &inner
}

/// R_{tr−}: the second left-trefoil formula fed the two right trefoil values,
/// 3̄₁ minus (3̄₁)₂. Equals a·b0·b3⁻¹·R_{tr+}.
pub fn trefoil_relation_minus() -> LaurentPoly {
    let k = knot_values();
    &left_trefoil_second(&k.trefoil_right) - &left_trefoil_second(&k.trefoil_right_2)
}

/// R_{4₁} = [2,2] − [−2,−2].
pub fn fig8_relation() -> Result<LaurentPoly> {
    let one = LaurentPoly::one();
    relation_between(&ConwayCode::from_ints(&[2, 2])?, &ConwayCode::from_ints(&[-2, -2])?, &one, &one)
}

/// R_Wh: the two Whitehead link values subtracted.
pub fn whitehead_relation() -> LaurentPoly {
    let k = knot_values();
    &k.whitehead_1 - &k.whitehead_2
}

/// R_{6₃} = (6₃)₊ − (6₃)₋. The two diagrams share every term except the b2
/// one, where the Whitehead diagrams differ, so the difference is
/// −b3⁻¹b2·(W₂ − W₁).
pub fn six_three_relation() -> LaurentPoly {
    let k = knot_values();
    &(&sym::b2() * &sym::b3_inv()) * &(&k.whitehead_1 - &k.whitehead_2)
}

/// Expansion of the tangle C₂,₋₂ (from the Conway knot [2, −n, m, …]) in base
/// tangles, after eliminating D₃ with the cubic relation.
pub fn conway_tangle_first() -> SkeinCoeffs {
    let (a, b0, b1, b2, b3, bi) = (sym::a(), sym::b0(), sym::b1(), sym::b2(), sym::b3(), sym::binf());
    let m = -(&sym::b3_inv() * &sym::b3_inv());
    SkeinCoeffs {
        c3: LaurentPoly::zero(),
        c2: &m * &(&(&b0 * &b2) - &(&(&a * &b3) * &bi)),
        c1: &m * &(&(&b0 * &b1) - &(&b2 * &b3)),
        c0: &m * &(&b0 * &b0),
        cinf: &m * &(&(&b0 * &bi) - &(&(&sym::a_pow(-2) * &b1) * &b3)),
    }
}

/// Expansion of C₋₂,₋₁ (from [−2, −n+1, m, …]) as printed:
/// b0⁻¹(b1D₂ + b2a⁻¹D∞ + b3D₀ + binf·a²D₁).
pub fn conway_tangle_second() -> SkeinCoeffs {
    let b0i = sym::b0_inv();
    SkeinCoeffs {
        c3: LaurentPoly::zero(),
        c2: &b0i * &sym::b1(),
        c1: &b0i * &(&sym::binf() * &sym::a_pow(2)),
        c0: &b0i * &sym::b3(),
        cinf: &b0i * &(&sym::b2() * &sym::a_pow(-1)),
    }
}

/// The Conway relation R_C as coefficients of D₂, D₁, D₀, D∞, oriented as
/// a⁻¹·C₋₂,₋₁ − C₂,₋₂ (the two tangles differ by a kink, framing a⁻¹).
pub fn conway_relation() -> SkeinCoeffs {
    let first = conway_tangle_first();
    let second = conway_tangle_second();
    let ai = sym::a_pow(-1);
    SkeinCoeffs {
        c3: LaurentPoly::zero(),
        c2: &(&ai * &second.c2) - &first.c2,
        c1: &(&ai * &second.c1) - &first.c1,
        c0: &(&ai * &second.c0) - &first.c0,
        cinf: &(&ai * &second.cinf) - &first.cinf,
    }
}

fn rel(name: &str, value: RingFraction, provenance: &str) -> NamedRelation {
    NamedRelation { name: name.into(), value, provenance: provenance.into(), coeffs: None }
}

/// Closes a relation on D₃, D₂, D₁, D₀, D∞ (Dₙ the n-twist tangle) with the
/// given closure, giving a relation between links.
pub fn close_combo(c: &SkeinCoeffs, closure: Closure) -> Result<LaurentPoly> {
    let mut out = LaurentPoly::zero();
    for (coef, entry) in c.as_array().into_iter().zip([
        Entry::Int(3),
        Entry::Int(2),
        Entry::Int(1),
        Entry::Int(0),
        Entry::Inf,
    ]) {
        if coef.is_zero() {
            continue;
        }
        let combo = crate::rta::reduce_code(&ConwayCode::extended(vec![entry])?)?;
        out += &(coef * &combo.close(closure));
    }
    Ok(out)
}

/// All named relations. Values with an independent rational tangle path are
/// checked against it; a mismatch is reported as an internal error.
pub fn catalog() -> Result<Vec<NamedRelation>> {
    let k = knot_values();
    let mismatch = |what: &str| Error::Internal(format!("catalog cross-check failed: {what}"));

    let hopf = hopf_relation();
    if hopf != &k.h_plus - &k.h_minus {
        return Err(mismatch("R_Hopf vs H+ - H-"));
    }
    if k.trefoil_right != crate::rta::eval_ints(&[3], None)? {
        return Err(mismatch("right trefoil vs [3]"));
    }
    if k.trefoil_left != crate::rta::eval_ints(&[-3], None)? {
        return Err(mismatch("left trefoil vs [-3]"));
    }
    if k.fig8_plus != crate::rta::eval_ints(&[2, 2], None)? {
        return Err(mismatch("figure-eight vs [2,2]"));
    }
    let r_tr_plus = trefoil_relation_plus();
    let r_tr_minus = trefoil_relation_minus();
    if &sym::b3() * &r_tr_minus != &(&sym::a() * &sym::b0()) * &r_tr_plus {
        return Err(mismatch("b3 R_tr- vs a b0 R_tr+"));
    }
    let rc = conway_relation();
    let rc_closed = close_combo(&rc, Closure::Numerator)?;
    let rwh = whitehead_relation();
    Ok(vec![
        rel("R_Hopf", hopf.into(), "[-1,-1] - [1,1]; equals H+ - H-"),
        rel("R_t", trivial_relation(), "t2 - t"),
        rel("R_tr+", r_tr_plus.into(), "second minus first right trefoil value"),
        rel("R_tr-", r_tr_minus.into(), "second left-trefoil formula on the two right trefoil values"),
        rel("R_4_1", fig8_relation()?.into(), "[2,2] - [-2,-2]"),
        rel("R_Wh", rwh.clone().into(), "Whitehead link: direct formula minus the kinked one"),
        NamedRelation {
            name: "R_C".into(),
            value: rc_closed.into(),
            provenance: "Conway relation a^-1 C(-2,-1) - C(2,-2) on D2, D1, D0, Dinf; value is its numerator closure".into(),
            coeffs: Some(rc),
        },
        rel("R_6_3", six_three_relation().into(), "(6_3)+ - (6_3)-"),
    ])
}

/// Result of comparing one corpus entry with its computed counterpart.
#[derive(Clone, Debug)]
pub struct CorpusCheck {
    pub name: String,
    pub status: CheckStatus,
    /// Term-level differences (computed minus printed), empty unless `Differs`.
    pub diff: Vec<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckStatus {
    Equal,
    /// Equal after multiplying by −1.
    Negated,
    Differs,
    /// The entry is an input to other entries, not a checkable value.
    NoComputed,
}

fn compare(name: &str, printed: &RingFraction, got: &RingFraction) -> CorpusCheck {
    let status = if printed == got {
        CheckStatus::Equal
    } else if printed == &-got {
        CheckStatus::Negated
    } else {
        CheckStatus::Differs
    };
    let diff = if status == CheckStatus::Differs {
        match (printed.to_poly(), got.to_poly()) {
            (Some(e), Some(g)) => term_diff(&e, &g),
            _ => vec![format!("fractions differ: printed {printed}, computed {got}")],
        }
    } else {
        Vec::new()
    };
    CorpusCheck { name: name.into(), status, diff }
}

/// The computed value matching a corpus name, if there is one.
pub fn computed_value(name: &str) -> Result<Option<RingFraction>> {
    let k = knot_values();
    let code = |xs: &[i64]| crate::rta::eval_ints(xs, None);
    let f = RingFraction::from_poly;
    let v = match name {
        "t" => f(k.t.clone()),
        "H_plus" => f(k.h_plus.clone()),
        "H_minus" => f(k.h_minus.clone()),
        "R_Hopf" | "R_Hopf_t" => f(hopf_relation()),
        "Q" => f(exact_divide(&(&hopf_relation() * &p("a^3*b0*b3*binf")), &k.t)?.expect("t divides")),
        "trefoil_left" => f(k.trefoil_left.clone()),
        "trefoil_right" => f(k.trefoil_right.clone()),
        "fig8_plus" => f(k.fig8_plus.clone()),
        "fig8_minus" => f(k.fig8_minus.clone()),
        "R_fig8" => f(fig8_relation()?),
        "P2_prime" => f(crate::rta::p_prime(2)),
        "P3_prime" => f(crate::rta::p_prime(3)),
        "P4_prime" => f(crate::rta::p_prime(4)),
        "five_T1" | "five_T0" | "five_Tm1" | "five_Tinf" => {
            use crate::tangle_model::BaseTangle::*;
            let r = crate::rta::reduce_code(&ConwayCode::from_ints(&[5])?)?;
            let b = match name {
                "five_T1" => T1,
                "five_T0" => T0,
                "five_Tm1" => Tminus1,
                _ => Tinf,
            };
            f(r.get(b))
        }
        "cinquefoil" => f(code(&[5])?),
        "three" => f(code(&[3])?),
        "minus_three" => f(phi_mirror(&code(&[3])?)),
        "t2" => trivial_knot_second_from_relation()?,
        "R_t" | "R_t_expanded" => trivial_relation(),
        "cubic2_c3" => f(cubic2_coeffs().c3),
        "cubic2_c2" => f(cubic2_coeffs().c2),
        "cubic2_c1" => f(cubic2_coeffs().c1),
        "cubic2_c0" => f(cubic2_coeffs().c0),
        "cubic2_cinf" => f(cubic2_coeffs().cinf),
        "trefoil_right_2" => f(k.trefoil_right_2.clone()),
        "R_tr_plus_H" => f(-trefoil_relation_plus()),
        "R_tr_plus" => f(trefoil_relation_plus()),
        "R_tr_minus" => f(trefoil_relation_minus()),
        "P_trefoil" => f(exact_divide(&(&trefoil_relation_plus() * &p("a^4*b0^2*b3^2*binf")), &k.t)?
            .expect("t divides")),
        "trefoil_left_2" => f(left_trefoil_second(&k.trefoil_right)),
        "five_two" => f(k.five_two.clone()),
        "whitehead_1" => f(k.whitehead_1.clone()),
        "whitehead_2" | "whitehead_2_kink" => f(k.whitehead_2.clone()),
        "R_Wh" => f(whitehead_relation()),
        "RC_D0" => f(conway_relation().c0),
        "RC_D1" => f(conway_relation().c1),
        "RC_D2" => f(conway_relation().c2),
        "RC_Dinf" => f(conway_relation().cinf),
        "quad_c2" | "quad_c1" | "quad_c0" | "quad_cinf" => {
            // (cubic2 − cubic) divided by the unit, coefficientwise.
            let (c, d) = (cubic_coeffs(), cubic2_coeffs());
            let (x, y) = match name {
                "quad_c2" => (c.c2, d.c2),
                "quad_c1" => (c.c1, d.c1),
                "quad_c0" => (c.c0, d.c0),
                _ => (c.cinf, d.cinf),
            };
            f(&(&y - &x) * &quadratic_relation_unit().unit_inverse()?)
        }
        _ => return Ok(None),
    };
    Ok(Some(v))
}

/// Compares every corpus entry with its computed counterpart.
pub fn check_corpus() -> Result<Vec<CorpusCheck>> {
    let mut out = Vec::new();
    for e in golden().entries() {
        match computed_value(&e.name)? {
            Some(v) => out.push(compare(&e.name, &e.value(), &v)),
            None => out.push(CorpusCheck { name: e.name.clone(), status: CheckStatus::NoComputed, diff: vec![] }),
        }
    }
    Ok(out)
}

/// The four difference families with closed Hopf quotients.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ClosedFamily {
    /// [m,n] − [−n,−m]
    PlusPlus,
    /// [m,−n] − [n,−m]
    PlusMinus,
    /// [−m,n] − [−n,m]
    MinusPlus,
    /// [−m,−n] − [n,m]
    MinusMinus,
}

impl ClosedFamily {
    pub const ALL: [ClosedFamily; 4] =
        [Self::PlusPlus, Self::PlusMinus, Self::MinusPlus, Self::MinusMinus];

    /// The two codes whose difference is taken.
    pub fn codes(self, m: i64, n: i64) -> ([i64; 2], [i64; 2]) {
        match self {
            Self::PlusPlus => ([m, n], [-n, -m]),
            Self::PlusMinus => ([m, -n], [n, -m]),
            Self::MinusPlus => ([-m, n], [-n, m]),
            Self::MinusMinus => ([-m, -n], [n, m]),
        }
    }
}

fn check_mn(m: i64, n: i64) -> Result<()> {
    if m < 1 || n < 1 {
        return Err(Error::InvalidArgument(format!("closed formulas need m, n >= 1, got {m}, {n}")));
    }
    Ok(())
}

/// The difference of the two codes of `fam`, each with its default closure.
pub fn closed_family_relation(fam: ClosedFamily, m: i64, n: i64) -> Result<LaurentPoly> {
    check_mn(m, n)?;
    let (x, y) = fam.codes(m, n);
    let one = LaurentPoly::one();
    relation_between(&ConwayCode::from_ints(&x)?, &ConwayCode::from_ints(&y)?, &one, &one)
}

/// The right-hand side as printed, with Pₖ = Pₖʰ.
pub fn closed_formula_printed(fam: ClosedFamily, m: i64, n: i64) -> Result<LaurentPoly> {
    check_mn(m, n)?;
    let p = crate::rta::p_h;
    let f = |k: i64| phi_mirror(&p(k));
    Ok(match fam {
        ClosedFamily::PlusPlus => &(&p(m - 1) * &f(n - 1)) - &(&p(m - 2) * &f(n - 2)),
        ClosedFamily::PlusMinus => &(&p(m - 1) * &p(n - 1)) - &(&p(m - 2) * &p(n - 2)),
        ClosedFamily::MinusPlus => &(&f(m - 1) * &p(n - 1)) - &(&f(m - 2) * &p(n - 2)),
        ClosedFamily::MinusMinus => &(&f(m - 1) * &f(n - 1)) - &(&f(m - 2) * &f(n - 2)),
    })
}

/// The quotient of the family relation by R_Hopf in closed form, with
/// Pₖ = Pₖʰ. The mixed-sign families are antisymmetric in (m, n), and the
/// all-negative family is the mirror of the all-positive one.
pub fn closed_formula(fam: ClosedFamily, m: i64, n: i64) -> Result<LaurentPoly> {
    check_mn(m, n)?;
    let p = crate::rta::p_h;
    let f = |k: i64| phi_mirror(&p(k));
    let b0b3 = &sym::b0() * &sym::b3_inv();
    Ok(match fam {
        ClosedFamily::PlusPlus => -(&(&p(m - 1) * &f(n - 1)) - &(&p(m - 2) * &f(n - 2))),
        ClosedFamily::PlusMinus => {
            &b0b3 * &(&(&p(m - 1) * &p(n - 2)) - &(&p(m - 2) * &p(n - 1)))
        }
        ClosedFamily::MinusPlus => {
            -(&phi_mirror(&b0b3) * &(&(&f(m - 1) * &f(n - 2)) - &(&f(m - 2) * &f(n - 1))))
        }
        ClosedFamily::MinusMinus => &(&f(m - 1) * &p(n - 1)) - &(&f(m - 2) * &p(n - 2)),
    })
}

/// Outcome of dividing `code − reverse(code)` by R_Hopf.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReverseCheck {
    pub code: ConwayCode,
    pub reversed: ConwayCode,
    pub divisible: bool,
    pub quotient: Option<LaurentPoly>,
    /// If the plain difference is not divisible, the smallest |k| ≤ 10 such
    /// that the difference after scaling the reversed side by aᵏ is.
    pub framing: Option<i32>,
}

/// Divides the reverse-code relation of `code` by R_Hopf.
pub fn reverse_check(code: &ConwayCode) -> Result<ReverseCheck> {
    let (reversed, _) = crate::tangle_model::reverse_code(code)?;
    let x = crate::rta::eval_code(code, None)?;
    let y = crate::rta::eval_code(&reversed, None)?;
    let hopf = hopf_relation();
    let quotient = exact_divide(&(&x - &y), &hopf)?;
    let mut framing = None;
    if quotient.is_none() {
        let mut ks: Vec<i32> = (-10..=10).filter(|&k| k != 0).collect();
        ks.sort_by_key(|k| (k.abs(), *k));
        for k in ks {
            if exact_divide(&(&x - &(&sym::a_pow(k) * &y)), &hopf)?.is_some() {
                framing = Some(k);
                break;
            }
        }
    }
    Ok(ReverseCheck { code: code.clone(), reversed, divisible: quotient.is_some(), quotient, framing })
}

/// All standard codes with 1 ≤ length ≤ `max_len` and nonzero entries of
/// absolute value ≤ `max_entry`, in lexicographic order.
pub fn standard_codes(max_len: usize, max_entry: i64) -> Vec<ConwayCode> {
    let vals: Vec<i64> = (-max_entry..=max_entry).filter(|&v| v != 0).collect();
    let mut out = Vec::new();
    let mut cur: Vec<Vec<i64>> = vec![vec![]];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for c in &cur {
            for &v in &vals {
                let mut d = c.clone();
                d.push(v);
                next.push(d);
            }
        }
        out.extend(next.iter().filter_map(|c| ConwayCode::from_ints(c).ok()));
        cur = next;
    }
    out.sort();
    out
}

/// One block of the golden corpus.
#[derive(Clone, Debug)]
pub struct GoldenEntry {
    pub name: String,
    pub poly: LaurentPoly,
    pub den: Option<LaurentPoly>,
    pub cite: String,
}

impl GoldenEntry {
    pub fn value(&self) -> RingFraction {
        match &self.den {
            None => RingFraction::from_poly(self.poly.clone()),
            Some(d) => RingFraction::new(self.poly.clone(), d.clone()).expect("checked nonzero at load"),
        }
    }
}

/// Printed values keyed by name, in file order.
#[derive(Clone, Debug, Default)]
pub struct GoldenCorpus {
    entries: Vec<GoldenEntry>,
    index: BTreeMap<String, usize>,
}

impl GoldenCorpus {
    pub fn get(&self, name: &str) -> Option<&GoldenEntry> {
        self.index.get(name).map(|&i| &self.entries[i])
    }

    /// The polynomial of a block without a denominator. Panics on a missing
    /// name, which is a bug in the caller.
    pub fn poly(&self, name: &str) -> &LaurentPoly {
        let e = self.get(name).unwrap_or_else(|| panic!("no golden entry {name:?}"));
        assert!(e.den.is_none(), "golden entry {name:?} is a fraction");
        &e.poly
    }

    pub fn entries(&self) -> &[GoldenEntry] {
        &self.entries
    }

    /// Parses the block format described at the top of the data file.
    pub fn parse(text: &str) -> Result<Self> {
        let mut out = GoldenCorpus::default();
        let mut cur: Vec<(String, String)> = Vec::new();
        let mut start_line = 0;
        for (no, raw) in text.lines().enumerate().chain(std::iter::once((usize::MAX, ""))) {
            let line = raw.trim_end();
            let is_comment = line.trim_start().starts_with('#');
            if line.trim().is_empty() || is_comment || no == usize::MAX {
                if !cur.is_empty() && (line.trim().is_empty() || no == usize::MAX) {
                    out.push_block(std::mem::take(&mut cur), start_line)?;
                }
                continue;
            }
            if line.starts_with(char::is_whitespace) {
                match cur.last_mut() {
                    Some((_, v)) => {
                        v.push(' ');
                        v.push_str(line.trim());
                    }
                    None => return Err(corpus_err(no + 1, "continuation line outside a block")),
                }
                continue;
            }
            let (key, val) = line
                .split_once(':')
                .ok_or_else(|| corpus_err(no + 1, "expected `key: value`"))?;
            if cur.is_empty() {
                start_line = no + 1;
            }
            cur.push((key.trim().to_string(), val.trim().to_string()));
        }
        Ok(out)
    }

    fn expand(&self, src: &str, line: usize) -> Result<String> {
        let mut out = String::with_capacity(src.len());
        let mut rest = src;
        while let Some(open) = rest.find('{') {
            out.push_str(&rest[..open]);
            let close = rest[open..]
                .find('}')
                .ok_or_else(|| corpus_err(line, "unclosed `{`"))?
                + open;
            let name = &rest[open + 1..close];
            let e = self.get(name).ok_or_else(|| corpus_err(line, &format!("unknown reference {{{name}}}")))?;
            if e.den.is_some() {
                return Err(corpus_err(line, &format!("{{{name}}} is a fraction")));
            }
            out.push('(');
            out.push_str(&e.poly.to_canonical());
            out.push(')');
            rest = &rest[close + 1..];
        }
        out.push_str(rest);
        Ok(out)
    }

    fn push_block(&mut self, kv: Vec<(String, String)>, line: usize) -> Result<()> {
        let (mut name, mut poly, mut den, mut cite) = (None, None, None, String::new());
        for (k, v) in kv {
            match k.as_str() {
                "name" => name = Some(v),
                "poly" => poly = Some(v),
                "den" => den = Some(v),
                "cite" => cite = v,
                other => return Err(corpus_err(line, &format!("unknown key {other:?}"))),
            }
        }
        let name = name.ok_or_else(|| corpus_err(line, "block without name"))?;
        let poly_src = poly.ok_or_else(|| corpus_err(line, "block without poly"))?;
        let poly: LaurentPoly = self.expand(&poly_src, line)?.parse().map_err(|e| corpus_err(line, &format!("{name}: {e}")))?;
        let den = match den {
            None => None,
            Some(d) => {
                let d: LaurentPoly =
                    self.expand(&d, line)?.parse().map_err(|e| corpus_err(line, &format!("{name}: {e}")))?;
                if d.is_zero() {
                    return Err(corpus_err(line, "zero denominator"));
                }
                Some(d)
            }
        };
        if self.index.contains_key(&name) {
            return Err(corpus_err(line, &format!("duplicate name {name:?}")));
        }
        self.index.insert(name.clone(), self.entries.len());
        self.entries.push(GoldenEntry { name, poly, den, cite });
        Ok(())
    }
}

fn corpus_err(line: usize, msg: &str) -> Error {
    Error::InvalidArgument(format!("golden corpus line {line}: {msg}"))
}

/// The bundled corpus of printed values.
pub fn golden() -> &'static GoldenCorpus {
    static G: OnceLock<GoldenCorpus> = OnceLock::new();
    G.get_or_init(|| {
        GoldenCorpus::parse(include_str!("../data/relations.golden")).expect("bundled corpus parses")
    })
}

/// Term-level differences `expected` → `got`: one line per monomial whose
/// coefficient differs. Empty when equal.
pub fn term_diff(expected: &LaurentPoly, got: &LaurentPoly) -> Vec<String> {
    let d = got - expected;
    d.terms()
        .map(|(m, _)| {
            let one = LaurentPoly::term(1, *m);
            let e = expected.coeff(m);
            let g = got.coeff(m);
            format!("{one}: expected {e}, got {g}")
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{alpha_substitute, KdPoly, KdVars};

    fn code(xs: &[i64]) -> ConwayCode {
        ConwayCode::from_ints(xs).unwrap()
    }

    fn hopf_divides(x: &LaurentPoly) -> bool {
        exact_divide(x, &hopf_relation()).unwrap().is_some()
    }

    #[test]
    fn hopf_pair_matches_rta_and_mirror() {
        let (hp, hm) = hopf_pair();
        assert_eq!(hp, crate::rta::eval_ints(&[-1, -1], None).unwrap());
        assert_eq!(hm, crate::rta::eval_ints(&[1, 1], None).unwrap());
        assert_eq!(phi_mirror(&hp), hm);
    }

    #[test]
    fn relation_between_self_is_zero() {
        let one = LaurentPoly::one();
        let c = code(&[3, -2, 1]);
        assert!(relation_between(&c, &c, &one, &one).unwrap().is_zero());
    }

    #[test]
    fn corpus_agrees_except_known_misprints() {
        let mut off = Vec::new();
        for c in check_corpus().unwrap() {
            match c.status {
                CheckStatus::Equal => {}
                _ => off.push((c.name, c.status)),
            }
        }
        assert_eq!(
            off,
            vec![
                ("P4_prime".to_string(), CheckStatus::Differs),
                ("R_t_expanded".to_string(), CheckStatus::Differs),
                ("whitehead_2".to_string(), CheckStatus::Differs),
                ("quad_unit".to_string(), CheckStatus::NoComputed),
            ]
        );
    }

    #[test]
    fn p4_misprint_is_one_term() {
        let printed = golden().poly("P4_prime");
        let diff = term_diff(printed, &crate::rta::p_prime(4));
        assert_eq!(diff, vec!["b0*b2*b3^2: expected -2, got 2".to_string()]);
    }

    #[test]
    fn second_trivial_knot() {
        assert_eq!(trivial_knot_second_from_relation().unwrap(), trivial_knot_second());
        let lhs = RingFraction::from_poly(&(&sym::b0() * &sym::b3()) * &hopf_relation());
        let rhs = &RingFraction::from_poly(&trivial_component() * &p("b0*b1 - b2*b3")) * &trivial_relation();
        assert!(lhs.frac_equal(&rhs));
    }

    #[test]
    fn quadratic_is_difference_of_cubics() {
        let (c, d, q) = (cubic_coeffs(), cubic2_coeffs(), quadratic_relation_coeffs());
        let u = quadratic_relation_unit();
        for ((x, y), z) in c.as_array().iter().zip(d.as_array()).zip(q.as_array()) {
            assert_eq!(&(y - *x), &(&u * z));
        }
    }

    #[test]
    fn cubics_coincide_under_alpha() {
        let (c, d) = (cubic_coeffs(), cubic2_coeffs());
        for (x, y) in c.as_array().iter().zip(d.as_array()) {
            assert!(alpha_substitute(&(y - *x)).is_zero());
        }
        for z in quadratic_relation_coeffs().as_array() {
            assert!(alpha_substitute(z).is_zero());
        }
    }

    #[test]
    fn quadratic_to_cubic_identity() {
        let q = quadratic_relation_coeffs();
        let s = p("a + b2");
        let c = quadratic_to_cubic(&q, &s, &sym::a()).unwrap();
        let lhs = &(&(&c.c3 + &(&s * &c.c2)) + &(&s.pow(2) * &c.c1)) + &(&s.pow(3) * &c.c0);
        assert!(lhs.is_zero());
        let c = quadratic_to_cubic(&q, &sym::a(), &sym::a()).unwrap();
        assert!(c.cinf.is_zero());
    }

    fn kd_quadratic(eps: i64) -> SkeinCoeffs<KdVars> {
        let k = |s: &str| s.parse::<KdPoly>().unwrap();
        let e = KdPoly::constant(eps);
        SkeinCoeffs {
            c3: KdPoly::zero(),
            c2: KdPoly::one(),
            c1: -k("x"),
            c0: e.clone(),
            cinf: &(-e) * &k("a^-1*x"),
        }
    }

    #[test]
    fn quadratic_hopf_relation_kauffman_dubrovnik() {
        let a = KdPoly::var(0);
        for eps in [1, -1] {
            assert!(quadratic_hopf_relation(&kd_quadratic(eps), &a).unwrap().is_zero());
        }
        let generic = quadratic_hopf_relation(&quadratic_relation_coeffs(), &sym::a()).unwrap();
        assert!(!generic.is_zero());
        let mut q = kd_quadratic(1);
        q.cinf = KdPoly::zero();
        assert!(quadratic_hopf_relation(&q, &a).is_err());
    }

    #[test]
    fn quadratic_kd_cubic_shape() {
        let q = kd_quadratic(-1);
        let s: KdPoly = "x + a".parse().unwrap();
        let c = quadratic_to_cubic(&q, &s, &KdPoly::var(0)).unwrap();
        assert_eq!(c.c1, &(&s * &q.c0) - &q.c1);
        assert_eq!(c.c0, KdPoly::one());
    }

    #[test]
    fn trefoil_relations() {
        let plus = trefoil_relation_plus();
        let minus = trefoil_relation_minus();
        assert_eq!(&sym::b3() * &minus, &(&sym::a() * &sym::b0()) * &plus);
        assert!(exact_divide(&plus, &hopf_relation()).unwrap().is_none());
        assert!(exact_divide(&hopf_relation(), &plus).unwrap().is_none());
        let flype = relation_between(&code(&[2, -2]), &code(&[-3]), &sym::a(), &LaurentPoly::one()).unwrap();
        assert!(!hopf_divides(&flype));
        assert!(hopf_divides(&(&flype - &minus)));
    }

    #[test]
    fn catalog_vanishes_under_alpha() {
        let cat = catalog().unwrap();
        let names: Vec<&str> = cat.iter().map(|r| r.name.as_str()).collect();
        assert_eq!(names, ["R_Hopf", "R_t", "R_tr+", "R_tr-", "R_4_1", "R_Wh", "R_C", "R_6_3"]);
        for r in &cat {
            assert!(!r.value.is_zero(), "{}", r.name);
            assert!(alpha_substitute(r.value.numer()).is_zero(), "{}", r.name);
        }
        let rc = cat.iter().find(|r| r.name == "R_C").unwrap();
        assert!(rc.coeffs.as_ref().unwrap().as_array().iter().all(|c| alpha_substitute(c).is_zero()));
    }

    #[test]
    fn fig8_and_six_three() {
        assert!(hopf_divides(&fig8_relation().unwrap()));
        let expected = &(&sym::b2() * &sym::b3_inv()) * &whitehead_relation();
        assert_eq!(six_three_relation(), expected);
    }

    #[test]
    fn closed_formulas_small() {
        for fam in ClosedFamily::ALL {
            for m in 1..=4 {
                for n in 1..=4 {
                    let r = closed_family_relation(fam, m, n).unwrap();
                    assert_eq!(&closed_formula(fam, m, n).unwrap() * &hopf_relation(), r, "{fam:?} {m} {n}");
                }
            }
        }
        // The printed all-positive formula is off by a sign only.
        let f = closed_formula_printed(ClosedFamily::PlusPlus, 3, 2).unwrap();
        assert_eq!(f, -closed_formula(ClosedFamily::PlusPlus, 3, 2).unwrap());
        assert!(closed_formula(ClosedFamily::PlusMinus, 0, 1).is_err());
    }

    #[test]
    fn mixed_families_are_antisymmetric() {
        for fam in [ClosedFamily::PlusMinus, ClosedFamily::MinusPlus] {
            let x = closed_formula(fam, 2, 3).unwrap();
            let y = closed_formula(fam, 3, 2).unwrap();
            assert_eq!(x, -y);
            assert!(closed_formula(fam, 3, 3).unwrap().is_zero());
        }
    }

    #[test]
    fn code_grid() {
        let codes = standard_codes(2, 2);
        assert_eq!(codes.len(), 4 + 16);
        assert!(codes.windows(2).all(|w| w[0] < w[1]));
        let r = reverse_check(&code(&[2, 3, -1])).unwrap();
        assert!(r.divisible);
        assert_eq!(r.reversed, code(&[-1, 3, 2]));
    }

    #[test]
    fn corpus_parse_errors() {
        let ok = "name: x\npoly: a + b0\ncite: c\n\nname: y\npoly: 2*{x}\n";
        let g = GoldenCorpus::parse(ok).unwrap();
        assert_eq!(g.poly("y"), &p("2*a + 2*b0"));
        assert!(GoldenCorpus::parse("name: x\npoly: a\n\nname: x\npoly: b0\n").is_err());
        assert!(GoldenCorpus::parse("name: x\nfoo: a\n").is_err());
        assert!(GoldenCorpus::parse("name: x\npoly: a\nden: b0\n\nname: y\npoly: {x}\n").is_err());
        assert!(GoldenCorpus::parse("name: x\npoly: {nope}\n").is_err());
        assert!(GoldenCorpus::parse("name: x\npoly: a\nden: 0\n").is_err());
    }

    #[test]
    fn close_combo_cubic_relation_gives_trivial_component_identity() {
        // Closing the cubic relation itself must give zero in the module.
        for c in [Closure::Numerator, Closure::Denominator] {
            assert!(close_combo(&cubic_coeffs(), c).unwrap().is_zero());
        }
    }
}
