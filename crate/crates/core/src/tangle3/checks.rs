//! Reference data for the 3-tangle reducer: the printed rewrite identities,
//! spot coefficients of the three expansions of alternating length-4 braid
//! words, and the well-definedness check on word pairs.

use std::fmt;

use super::{multiply3_with, reduce_word_with, Basis40, Combo3, TwistSigns, Word3};
use crate::error::{Error, Result};
use crate::ring::{alpha_substitute, trivial_component, LaurentPoly};

/// A linear combination of words, one side of an identity.
pub type WordSum = Vec<(LaurentPoly, Word3)>;

/// Evaluates a linear combination of words over the basis.
pub fn reduce_sum(signs: TwistSigns, sum: &WordSum) -> Combo3 {
    let mut out = Combo3::zero();
    for (k, w) in sum {
        out.add_scaled(&reduce_word_with(signs, w), k);
    }
    out
}

/// `lhs = rhs` as displayed, instantiated for one choice of i ≠ j.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrintedIdentity {
    /// Family label, shared by the (1, 2) and (2, 1) instances.
    pub family: &'static str,
    pub lhs: WordSum,
    pub rhs: WordSum,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IdentityStatus {
    Holds,
    /// The two sides reduce to negatives of each other.
    Negated,
    Fails,
}

impl fmt::Display for IdentityStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            IdentityStatus::Holds => "holds",
            IdentityStatus::Negated => "negated",
            IdentityStatus::Fails => "fails",
        })
    }
}

impl PrintedIdentity {
    pub fn check(&self, signs: TwistSigns) -> IdentityStatus {
        let l = reduce_sum(signs, &self.lhs);
        let r = reduce_sum(signs, &self.rhs);
        if l == r {
            IdentityStatus::Holds
        } else if l == r.scale(&LaurentPoly::constant(-1)) {
            IdentityStatus::Negated
        } else {
            IdentityStatus::Fails
        }
    }
}

fn show_sum(f: &mut fmt::Formatter<'_>, s: &WordSum) -> fmt::Result {
    if s.is_empty() {
        return f.write_str("0");
    }
    for (n, (k, w)) in s.iter().enumerate() {
        if n > 0 {
            f.write_str(" + ")?;
        }
        if k.is_one() {
            write!(f, "{w}")?;
        } else {
            write!(f, "({k}) {w}")?;
        }
    }
    Ok(())
}

impl fmt::Display for PrintedIdentity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        show_sum(f, &self.lhs)?;
        f.write_str(" = ")?;
        show_sum(f, &self.rhs)
    }
}

/// Identity templates. Words use `Si Sj Ui Uj` with a trailing `'` for the
/// inverse; a coefficient of `t` is the trivial component.
const TEMPLATES: &[(&str, &[(&str, &str)], &[(&str, &str)])] = &[
    ("UiUjUi", &[("1", "Ui Uj Ui")], &[("1", "Ui")]),
    ("Ui^2", &[("1", "Ui Ui")], &[("t", "Ui")]),
    ("UiSjUi", &[("1", "Ui Sj Ui")], &[("a", "Ui")]),
    ("UiSj'Ui", &[("1", "Ui Sj' Ui")], &[("a^-1", "Ui")]),
    ("UiSi", &[("1", "Ui Si")], &[("a", "Ui")]),
    ("SiUi", &[("1", "Si Ui")], &[("a", "Ui")]),
    ("UiSi'", &[("1", "Ui Si'")], &[("a^-1", "Ui")]),
    ("Si'Ui", &[("1", "Si' Ui")], &[("a^-1", "Ui")]),
    ("SiSjUi", &[("1", "Si Sj Ui")], &[("1", "Uj Ui")]),
    ("Si'Sj'Ui", &[("1", "Si' Sj' Ui")], &[("1", "Uj Ui")]),
    ("UiSjSi", &[("1", "Ui Sj Si")], &[("1", "Ui Uj")]),
    ("UiSj'Si'", &[("1", "Ui Sj' Si'")], &[("1", "Ui Uj")]),
    ("SiUj", &[("1", "Si Uj")], &[("1", "Sj' Ui Uj")]),
    ("Si'Uj", &[("1", "Si' Uj")], &[("1", "Sj Ui Uj")]),
    ("UiSj", &[("1", "Ui Sj")], &[("1", "Ui Uj Si'")]),
    ("UiSj'", &[("1", "Ui Sj'")], &[("1", "Ui Uj Si")]),
    ("SiUjSi", &[("1", "Si Uj Si")], &[("1", "Sj' Ui Sj'")]),
    ("SiUjSi'", &[("1", "Si Uj Si'")], &[("1", "Sj' Ui Sj")]),
    ("Si'UjSi", &[("1", "Si' Uj Si")], &[("1", "Sj Ui Sj'")]),
    ("Si'UjSi'", &[("1", "Si' Uj Si'")], &[("1", "Sj Ui Sj")]),
    ("SiSi'", &[("1", "Si Si'")], &[("1", "")]),
    ("Si'Si", &[("1", "Si' Si")], &[("1", "")]),
    ("SiSjSi", &[("1", "Si Sj Si")], &[("1", "Sj Si Sj")]),
    ("SiSjSi'", &[("1", "Si Sj Si'")], &[("1", "Sj' Si Sj")]),
    ("Si'Sj'Si", &[("1", "Si' Sj' Si")], &[("1", "Sj Si' Sj'")]),
    (
        "UiSjSi'",
        &[("b0", "Ui Sj Si'")],
        &[("b1", "Ui Sj"), ("b2", "Ui Uj"), ("b3", "Ui Sj'"), ("a^2*binf", "Ui")],
    ),
    (
        "Si'SjUi",
        &[("b0", "Si' Sj Ui")],
        &[("b1", "Sj Ui"), ("b2", "Uj Ui"), ("b3", "Sj' Ui"), ("a^2*binf", "Ui")],
    ),
    (
        "Sj^-2",
        &[("b0", "Sj' Sj'")],
        &[("b1", "Sj'"), ("b2", ""), ("b3", "Sj"), ("a^2*binf", "Uj")],
    ),
    (
        "UiSj'Si",
        &[("b3", "Ui Sj' Si")],
        &[("b0", "Ui Sj'"), ("b1", "Ui Uj"), ("b2", "Ui Sj"), ("a*binf", "Ui")],
    ),
    (
        "SiSj'Ui",
        &[("b3", "Si Sj' Ui")],
        &[("b2", "Sj Ui"), ("b1", "Uj Ui"), ("b0", "Sj' Ui"), ("a*binf", "Ui")],
    ),
    (
        "Sj^2",
        &[("b3", "Sj Sj")],
        &[("b0", "Sj'"), ("b1", ""), ("b2", "Sj"), ("a*binf", "Uj")],
    ),
];

fn instantiate(side: &[(&str, &str)], i: u8, j: u8) -> WordSum {
    side.iter()
        .map(|&(k, w)| {
            let k = if k == "t" { trivial_component() } else { k.parse().expect("template coefficient parses") };
            let text: Vec<String> = w
                .split_whitespace()
                .map(|tok| {
                    let (base, inv) = tok.strip_suffix('\'').map_or((tok, ""), |b| (b, "i"));
                    let (letter, idx) = base.split_at(1);
                    let n = if idx == "i" { i } else { j };
                    format!("{letter}{n}{inv}")
                })
                .collect();
            (k, Word3::parse(&text.join(" ")).expect("template word parses"))
        })
        .collect()
}

/// Every printed rewrite identity, instantiated for (i, j) = (1, 2) and
/// (2, 1). The inverse of a product `(SᵢSⱼ)⁻¹` is read letterwise as
/// Sᵢ⁻¹Sⱼ⁻¹, the only reading under which the braid identity holds in B₃.
pub fn printed_identities() -> Vec<PrintedIdentity> {
    let mut out = Vec::new();
    for &(family, lhs, rhs) in TEMPLATES {
        for (i, j) in [(1, 2), (2, 1)] {
            out.push(PrintedIdentity { family, lhs: instantiate(lhs, i, j), rhs: instantiate(rhs, i, j) });
        }
    }
    out
}

/// One printed coefficient of the expansion of a braid word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpotCoefficient {
    pub word: Word3,
    pub basis: Basis40,
    pub printed: LaurentPoly,
}

impl SpotCoefficient {
    pub fn computed(&self, signs: TwistSigns) -> LaurentPoly {
        reduce_word_with(signs, &self.word).get(self.basis)
    }
}

/// Parses the `word:` / `name: poly` block format of the bundled file.
pub fn parse_spots(text: &str) -> Result<Vec<SpotCoefficient>> {
    let mut out = Vec::new();
    let mut word: Option<Word3> = None;
    let mut offset = 0;
    for line in text.split_inclusive('\n') {
        let at = offset;
        offset += line.len();
        let body = line.trim();
        if body.is_empty() || body.starts_with('#') {
            continue;
        }
        let err = |msg: String| Error::Parse { pos: at, msg };
        let (key, val) = body.split_once(':').ok_or_else(|| err(format!("missing ':' in {body:?}")))?;
        let key = key.trim();
        if key == "word" {
            word = Some(Word3::parse(val).map_err(|e| err(e.to_string()))?);
            continue;
        }
        let w = word.clone().ok_or_else(|| err("coefficient before any word: line".into()))?;
        let basis = Basis40::from_name(key).ok_or_else(|| err(format!("unknown basis tangle {key:?}")))?;
        let printed = val.trim().parse().map_err(|e: Error| err(e.to_string()))?;
        out.push(SpotCoefficient { word: w, basis, printed });
    }
    Ok(out)
}

/// The bundled spot coefficients.
pub fn forb34_spots() -> Vec<SpotCoefficient> {
    parse_spots(include_str!("../../data/tangle3.golden")).expect("bundled coefficients parse")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PairOutcome {
    /// multiply-then-reduce equals reduce-concatenation.
    Exact,
    /// The two differ, but every coefficient of the difference vanishes under
    /// the alpha substitution.
    AlphaZero,
    Differs,
}

/// Compares multiply3(reduce(x), reduce(y)) with reduce(xy).
pub fn check_pair(signs: TwistSigns, x: &Word3, y: &Word3) -> PairOutcome {
    let split = multiply3_with(signs, &reduce_word_with(signs, x), &reduce_word_with(signs, y));
    let whole = reduce_word_with(signs, &x.concat(y));
    if split == whole {
        return PairOutcome::Exact;
    }
    if split.sub(&whole).iter().all(|(_, c)| alpha_substitute(c).is_zero()) {
        PairOutcome::AlphaZero
    } else {
        PairOutcome::Differs
    }
}
