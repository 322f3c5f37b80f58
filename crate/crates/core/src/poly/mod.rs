//! Sparse exact polynomials in countably many variables `x0, x1, ...`.
//!
//! A [`MultiPoly`] maps exponent vectors to nonzero rational coefficients.
//! Univariate algorithms (both division routes, Euclid's gcd, content and
//! factorisation) live in the submodules and operate on polynomials whose
//! only variable is `x0`.

mod exponent;
pub mod factor;
mod parse;
pub mod univariate;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::arith::Rational;

pub use exponent::{meet_exponents, ExponentVector};
pub use parse::parse_poly;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("division by the zero polynomial")]
    DivisionByZeroPoly,
    #[error("deg(p) = {p_degree} is below deg(d) = {d_degree}; use long division")]
    DegreeTooSmall { p_degree: usize, d_degree: usize },
    #[error("gcd of two zero polynomials is undefined")]
    BothZero,
    #[error("operation undefined on the zero polynomial")]
    ZeroPolynomial,
    #[error("degree {degree} exceeds the factorisation bound {bound}")]
    DegreeBoundExceeded { degree: usize, bound: usize },
    #[error("polynomial is not univariate in x0")]
    NotUnivariate,
    #[error("polynomial has non-integer coefficients")]
    NotIntegral,
    #[error("meet of an empty set of exponent vectors")]
    EmptySet,
    #[error("syntax error at byte {position}: {message}")]
    Syntax { position: usize, message: String },
}

/// Sparse polynomial over the rationals. No stored coefficient is zero, so
/// the key set is exactly the support and the zero polynomial is the empty
/// map.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct MultiPoly {
    terms: BTreeMap<ExponentVector, Rational>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(ExponentVector::one(), c)
    }

    pub fn from_int(c: i64) -> Self {
        Self::constant(Rational::from_integer(BigInt::from(c)))
    }

    /// The variable `x_i`.
    pub fn var(i: usize) -> Self {
        Self::monomial(ExponentVector::var(i, 1), Rational::one())
    }

    pub fn monomial(e: ExponentVector, c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        Self { terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (ExponentVector, Rational)>>(it: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in it {
            p.add_term(e, c);
        }
        p
    }

    pub fn add_term(&mut self, e: ExponentVector, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&e);
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&ExponentVector::one())
                .is_some_and(|c| c.is_one())
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending graded-lexicographic order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&ExponentVector, &Rational)> {
        self.terms.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &ExponentVector> {
        self.terms.keys()
    }

    pub fn coefficient(&self, e: &ExponentVector) -> Rational {
        self.terms.get(e).cloned().unwrap_or_else(Rational::zero)
    }

    /// Graded-lex maximal term.
    pub fn leading_term(&self) -> Option<(&ExponentVector, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn total_degree(&self) -> Option<u64> {
        self.terms.keys().map(|e| e.degree()).max()
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.keys().map(|e| e.get(var)).max().unwrap_or(0)
    }

    /// Indices of variables that occur with positive exponent, ascending.
    pub fn variables(&self) -> Vec<usize> {
        let mut vs: Vec<usize> = self
            .terms
            .keys()
            .flat_map(|e| e.entries().iter().map(|&(i, _)| i))
            .collect();
        vs.sort_unstable();
        vs.dedup();
        vs
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| e.is_one())
    }

    pub fn constant_term(&self) -> Rational {
        self.coefficient(&ExponentVector::one())
    }

    /// A single nonzero term.
    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn as_monomial(&self) -> Option<(&ExponentVector, &Rational)> {
        if self.is_monomial() {
            self.terms.iter().next()
        } else {
            None
        }
    }

    /// True when no variable other than `x0` occurs.
    pub fn is_univariate(&self) -> bool {
        self.terms
            .keys()
            .all(|e| e.entries().iter().all(|&(i, _)| i == 0))
    }

    pub fn has_integer_coefficients(&self) -> bool {
        self.terms.values().all(|c| c.denom().is_one())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect(),
        }
    }

    /// Multiply by the monomial `x^e`.
    pub fn shift(&self, e: &ExponentVector) -> Self {
        Self {
            terms: self.terms.iter().map(|(f, v)| (f + e, v.clone())).collect(),
        }
    }

    pub fn pow(&self, mut n: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Positive rational `c` with `self / c` having coprime integer
    /// coefficients; the sign is carried by the primitive part.
    pub fn rational_content(&self) -> Rational {
        let mut num = BigInt::zero();
        let mut den = BigInt::one();
        for c in self.terms.values() {
            num = num.gcd(c.numer());
            den = den.lcm(c.denom());
        }
        if num.is_zero() {
            return Rational::zero();
        }
        Rational::new(num, den)
    }

    /// Substitute `x_var := value` (a polynomial).
    pub fn substitute(&self, var: usize, value: &MultiPoly) -> Self {
        let mut out = Self::zero();
        let mut powers: Vec<MultiPoly> = vec![Self::one()];
        for (e, c) in &self.terms {
            let k = e.get(var) as usize;
            while powers.len() <= k {
                let next = powers.last().unwrap() * value;
                powers.push(next);
            }
            let rest = e.without(var);
            out = &out + &powers[k].shift(&rest).scale(c);
        }
        out
    }

    /// Map variable indices through `f`; the map must be injective on the
    /// variables that occur.
    pub fn rename(&self, f: impl Fn(usize) -> usize) -> Self {
        Self::from_terms(self.terms.iter().map(|(e, c)| {
            let moved = ExponentVector::from_pairs(e.entries().iter().map(|&(i, k)| (f(i), k)));
            (moved, c.clone())
        }))
    }

    /// Exact division by a monomial `x^e`; `None` if some term is not
    /// divisible.
    pub fn div_monomial(&self, e: &ExponentVector) -> Option<Self> {
        let mut terms = BTreeMap::new();
        for (f, c) in &self.terms {
            terms.insert(f.checked_sub(e)?, c.clone());
        }
        Some(Self { terms })
    }

    /// Sign of the leading coefficient (zero for the zero polynomial).
    pub fn leading_sign(&self) -> i32 {
        match self.leading_term() {
            Some((_, c)) if c.is_negative() => -1,
            Some(_) => 1,
            None => 0,
        }
    }
}

impl PartialOrd for MultiPoly {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Canonical ordering used to sort factor lists: by total degree, then by
/// terms from the top down.
impl Ord for MultiPoly {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| {
                let a = self.terms.iter().rev();
                let b = other.terms.iter().rev();
                for ((ea, ca), (eb, cb)) in a.zip(b) {
                    let o = ea.cmp(eb).then_with(|| ca.cmp(cb));
                    if o != std::cmp::Ordering::Equal {
                        return o;
                    }
                }
                self.terms.len().cmp(&other.terms.len())
            })
    }
}

impl<'a> Add<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), -c.clone());
        }
        out
    }
}

impl<'a> Mul<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                out.add_term(ea + eb, ca * cb);
            }
        }
        out
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $m(self, rhs: MultiPoly) -> MultiPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        -&self
    }
}

fn write_coefficient(f: &mut fmt::Formatter<'_>, c: &Rational) -> fmt::Result {
    if c.denom().is_one() {
        write!(f, "{}", c.numer())
    } else {
        write!(f, "{}/{}", c.numer(), c.denom())
    }
}

/// Canonical text form: terms in descending graded-lex order, e.g.
/// `3*x0^2*x1 - 1/2`.
impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms.iter().rev().enumerate() {
            let magnitude = c.abs();
            if k == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if e.is_one() {
                write_coefficient(f, &magnitude)?;
            } else {
                if !magnitude.is_one() {
                    write_coefficient(f, &magnitude)?;
                    write!(f, "*")?;
                }
                write!(f, "{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly({self})")
    }
}

impl std::str::FromStr for MultiPoly {
    type Err = PolyError;
    fn from_str(s: &str) -> Result<Self, PolyError> {
        parse_poly(s)
    }
}
