//! Exact computable commutative algebra at desk scale.
//!
//! The crate is organised around a handful of decidable backends (the
//! integers, residue rings `Z/n`, univariate polynomials over the rationals,
//! monomial ideals of `Q[x0, x1, ...]` and the localisation `T`) together with
//! stage-indexed simulators for enumeration-based constructions. Every answer
//! is computed with exact arithmetic; where a question has no decision
//! procedure the API says so instead of guessing.

pub mod arith;
pub mod bezout;
pub mod frac;
pub mod ideal;
pub mod lab;
pub mod linalg;
pub mod pid_t;
pub mod poly;
pub mod ring;

pub use arith::Rational;
pub use poly::{ExponentVector, MultiPoly};
pub use ring::{Element, ElementClass, RingId};
