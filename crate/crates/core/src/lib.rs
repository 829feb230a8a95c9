//! Exact computation in the cubic (4,∞) skein module.
//!
//! Link values live in ℤ[a^±1, b0^±1, b1, b2, b3^±1, binf^±1], see [`ring`].
//! Rational links are evaluated from Conway codes by [`rta`], pretzel links by
//! [`pretzel`], named skein relations are assembled in [`relations`], words of
//! 3-algebraic tangles are reduced in [`tangle3`], and Fox colorings of
//! rational diagrams are counted in [`colorings`].
//!
//! Canonical polynomial text: terms in descending graded-lex order joined by
//! `" + "` and `" - "`, each term `C*v1^e1*...`, exponent omitted when 1,
//! coefficient omitted when ±1 (except constants). Variables are written
//! `a b0 b1 b2 b3 binf`. The parser also accepts `−` (U+2212) and `b∞`.

pub mod colorings;
pub mod error;
pub mod pretzel;
pub mod relations;
pub mod ring;
pub mod rta;
pub mod tangle3;
pub mod tangle_model;

pub use error::{Error, Result};
pub use ring::{trivial_component, LaurentPoly, RingFraction};
pub use tangle_model::{BaseTangle, Closure, ConwayCode, Entry, PretzelCode, TangleCombo};
