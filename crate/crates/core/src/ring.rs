//! Rings, their runtime identifiers and element-level predicates.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::arith::{is_prime, Rational};
use crate::frac::StagedRingHandle;
use crate::pid_t::TElement;
use crate::poly::factor::{is_irreducible_over_q, FactorConfig};
use crate::poly::univariate::{self, divide_long, leading_coefficient, monic};
use crate::poly::{MultiPoly, PolyError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("element {element} does not belong to {ring}")]
    WrongRing { ring: String, element: String },
    #[error("modulus must be at least 1")]
    InvalidModulus,
    #[error("cannot parse ring literal {0:?}")]
    ParseRing(String),
    #[error("cannot parse element: {0}")]
    ParseElement(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    PidT(#[from] crate::pid_t::PidTError),
}

/// A commutative ring with unity.
pub trait Ring {
    type Elem: Clone + PartialEq + fmt::Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn is_zero(&self, a: &Self::Elem) -> bool {
        *a == self.zero()
    }
}

/// `a^n` by repeated squaring, with `a^0 = 1`.
pub fn power<R: Ring>(ring: &R, a: &R::Elem, mut n: u64) -> R::Elem {
    let mut acc = ring.one();
    let mut base = a.clone();
    while n > 0 {
        if n & 1 == 1 {
            acc = ring.mul(&acc, &base);
        }
        n >>= 1;
        if n > 0 {
            base = ring.mul(&base, &base);
        }
    }
    acc
}

/// Integral domain with a division algorithm and a canonical associate in
/// every class (positive integers, monic polynomials).
pub trait EuclideanDomain: Ring {
    /// `a = b q + r` with `r` smaller than `b` in the Euclidean norm.
    fn div_rem(&self, a: &Self::Elem, b: &Self::Elem) -> (Self::Elem, Self::Elem);
    /// The canonical associate of `a`.
    fn normalize(&self, a: &Self::Elem) -> Self::Elem;
    /// The unit `u` with `a = u * normalize(a)`; one for zero.
    fn unit_part(&self, a: &Self::Elem) -> Self::Elem;
    fn is_unit(&self, a: &Self::Elem) -> bool;

    fn divides(&self, a: &Self::Elem, b: &Self::Elem) -> bool {
        if self.is_zero(a) {
            return self.is_zero(b);
        }
        self.is_zero(&self.div_rem(b, a).1)
    }

    /// Exact quotient `b / a` when `a | b` and `a != 0`.
    fn div_exact(&self, b: &Self::Elem, a: &Self::Elem) -> Option<Self::Elem> {
        if self.is_zero(a) {
            return None;
        }
        let (q, r) = self.div_rem(b, a);
        self.is_zero(&r).then_some(q)
    }

    fn associates(&self, a: &Self::Elem, b: &Self::Elem) -> bool {
        self.normalize(a) == self.normalize(b)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Integers;

impl Ring for Integers {
    type Elem = BigInt;
    fn zero(&self) -> BigInt {
        BigInt::zero()
    }
    fn one(&self) -> BigInt {
        BigInt::one()
    }
    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a + b
    }
    fn neg(&self, a: &BigInt) -> BigInt {
        -a
    }
    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a * b
    }
}

impl EuclideanDomain for Integers {
    /// Floor division, so the remainder has the sign of the divisor and
    /// `|r| < |b|`.
    fn div_rem(&self, a: &BigInt, b: &BigInt) -> (BigInt, BigInt) {
        a.div_mod_floor(b)
    }
    fn normalize(&self, a: &BigInt) -> BigInt {
        a.abs()
    }
    fn unit_part(&self, a: &BigInt) -> BigInt {
        if a.is_negative() {
            -BigInt::one()
        } else {
            BigInt::one()
        }
    }
    fn is_unit(&self, a: &BigInt) -> bool {
        a.abs().is_one()
    }
}

/// `Z/n` with elements the least non-negative residues.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Modular {
    pub(crate) n: u64,
}

impl Modular {
    pub fn new(n: u64) -> Result<Self, RingError> {
        if n == 0 {
            return Err(RingError::InvalidModulus);
        }
        Ok(Self { n })
    }

    pub fn modulus(&self) -> u64 {
        self.n
    }

    pub fn reduce(&self, a: &BigInt) -> u64 {
        a.mod_floor(&BigInt::from(self.n))
            .to_u64()
            .expect("residue fits")
    }

    pub fn elements(&self) -> impl Iterator<Item = u64> {
        0..self.n
    }

    pub fn is_unit(&self, a: u64) -> bool {
        self.elements().any(|b| self.mul(&a, &b) == 1 % self.n)
    }

    pub fn is_zero_divisor(&self, a: u64) -> bool {
        self.elements().any(|b| b != 0 && self.mul(&a, &b) == 0)
    }

    /// Some power `a^k`, `1 <= k <= n`, vanishes; the powers of an element of
    /// an `n`-element ring repeat within `n` steps.
    pub fn is_nilpotent(&self, a: u64) -> bool {
        let mut p = a % self.n;
        for _ in 0..self.n {
            if p == 0 {
                return true;
            }
            p = self.mul(&p, &a);
        }
        false
    }

    pub fn divides(&self, a: u64, b: u64) -> bool {
        self.elements().any(|c| self.mul(&a, &c) == b)
    }

    pub fn is_irreducible(&self, r: u64) -> bool {
        if r == 0 || self.is_unit(r) {
            return false;
        }
        for a in self.elements() {
            for b in a..self.n {
                if self.mul(&a, &b) == r && !self.is_unit(a) && !self.is_unit(b) {
                    return false;
                }
            }
        }
        true
    }

    pub fn is_prime_element(&self, r: u64) -> bool {
        if r == 0 || self.is_unit(r) {
            return false;
        }
        // r | ab depends only on the ideal (r); testing a, b over all residues
        // is exhaustive.
        let multiples: Vec<bool> = self.elements().map(|x| self.divides(r, x)).collect();
        for a in self.elements() {
            if multiples[a as usize] {
                continue;
            }
            for b in self.elements() {
                if !multiples[b as usize] && multiples[self.mul(&a, &b) as usize] {
                    return false;
                }
            }
        }
        true
    }

    pub fn associates(&self, a: u64, b: u64) -> bool {
        self.elements()
            .any(|u| self.is_unit(u) && self.mul(&b, &u) == a)
    }
}

impl Ring for Modular {
    type Elem = u64;
    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1 % self.n
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 + *b as u128) % self.n as u128) as u64
    }
    fn neg(&self, a: &u64) -> u64 {
        (self.n - a % self.n) % self.n
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 * *b as u128) % self.n as u128) as u64
    }
}

/// `Q[x]` in the single variable `x0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct QPoly;

impl Ring for QPoly {
    type Elem = MultiPoly;
    fn zero(&self) -> MultiPoly {
        MultiPoly::zero()
    }
    fn one(&self) -> MultiPoly {
        MultiPoly::one()
    }
    fn add(&self, a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
        a + b
    }
    fn neg(&self, a: &MultiPoly) -> MultiPoly {
        -a
    }
    fn mul(&self, a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
        a * b
    }
}

impl EuclideanDomain for QPoly {
    fn div_rem(&self, a: &MultiPoly, b: &MultiPoly) -> (MultiPoly, MultiPoly) {
        let r = divide_long(a, b).expect("nonzero univariate divisor");
        (r.quotient, r.remainder)
    }
    fn normalize(&self, a: &MultiPoly) -> MultiPoly {
        monic(a)
    }
    fn unit_part(&self, a: &MultiPoly) -> MultiPoly {
        if a.is_zero() {
            MultiPoly::one()
        } else {
            MultiPoly::constant(leading_coefficient(a))
        }
    }
    fn is_unit(&self, a: &MultiPoly) -> bool {
        a.is_constant() && !a.is_zero()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldTag {
    Rationals,
}

/// Runtime ring identifier, parsed from `Z`, `Z/12`, `Q[x]`, `Q[X]`
/// (countably many variables) and `T`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RingId {
    Integers,
    Modular(u64),
    UnivariatePoly(FieldTag),
    MultiPoly,
    PidT,
    StagedRing(Arc<StagedRingHandle>),
}

impl RingId {
    pub fn modular(n: u64) -> Result<Self, RingError> {
        Modular::new(n).map(|_| Self::Modular(n))
    }

    pub fn parse_element(&self, text: &str) -> Result<Element, RingError> {
        let text = text.trim();
        let bad = |e: String| RingError::ParseElement(e);
        match self {
            RingId::Integers => text
                .parse::<BigInt>()
                .map(Element::Int)
                .map_err(|e| bad(format!("{text:?}: {e}"))),
            RingId::Modular(n) => {
                let v: BigInt = text.parse().map_err(|e| bad(format!("{text:?}: {e}")))?;
                Ok(Element::Mod(Modular::new(*n)?.reduce(&v)))
            }
            RingId::UnivariatePoly(_) => {
                let p: MultiPoly = text.parse()?;
                if !p.is_univariate() {
                    return Err(PolyError::NotUnivariate.into());
                }
                Ok(Element::Poly(p))
            }
            RingId::MultiPoly | RingId::StagedRing(_) => Ok(Element::Poly(text.parse()?)),
            RingId::PidT => Ok(Element::T(text.parse()?)),
        }
    }

    /// Checks that `e` is a valid element of this ring.
    pub fn validate(&self, e: &Element) -> Result<(), RingError> {
        let ok = match (self, e) {
            (RingId::Integers, Element::Int(_)) => true,
            (RingId::Modular(n), Element::Mod(v)) => v < n,
            (RingId::UnivariatePoly(_), Element::Poly(p)) => p.is_univariate(),
            (RingId::MultiPoly, Element::Poly(_)) => true,
            (RingId::StagedRing(_), Element::Poly(p)) => p.has_integer_coefficients(),
            (RingId::PidT, Element::T(t)) => t.is_valid(),
            _ => false,
        };
        if ok {
            Ok(())
        } else {
            Err(RingError::WrongRing {
                ring: self.to_string(),
                element: e.to_string(),
            })
        }
    }

    pub fn zero(&self) -> Element {
        match self {
            RingId::Integers => Element::Int(BigInt::zero()),
            RingId::Modular(_) => Element::Mod(0),
            RingId::PidT => Element::T(TElement::zero()),
            _ => Element::Poly(MultiPoly::zero()),
        }
    }

    pub fn one(&self) -> Element {
        match self {
            RingId::Integers => Element::Int(BigInt::one()),
            RingId::Modular(n) => Element::Mod(1 % n),
            RingId::PidT => Element::T(TElement::one()),
            _ => Element::Poly(MultiPoly::one()),
        }
    }

    pub fn add(&self, a: &Element, b: &Element) -> Result<Element, RingError> {
        self.binary(
            a,
            b,
            |x, y| x + y,
            |m, x, y| m.add(x, y),
            |x, y| x + y,
            |x, y| x.add(y),
        )
    }

    pub fn mul(&self, a: &Element, b: &Element) -> Result<Element, RingError> {
        self.binary(
            a,
            b,
            |x, y| x * y,
            |m, x, y| m.mul(x, y),
            |x, y| x * y,
            |x, y| x.mul(y),
        )
    }

    pub fn neg(&self, a: &Element) -> Result<Element, RingError> {
        self.validate(a)?;
        Ok(match (self, a) {
            (_, Element::Int(x)) => Element::Int(-x),
            (RingId::Modular(n), Element::Mod(x)) => Element::Mod(Modular { n: *n }.neg(x)),
            (_, Element::Poly(p)) => Element::Poly(-p),
            (_, Element::T(t)) => Element::T(t.neg()),
            _ => unreachable!("validated"),
        })
    }

    pub fn sub(&self, a: &Element, b: &Element) -> Result<Element, RingError> {
        self.add(a, &self.neg(b)?)
    }

    /// `a^n` by repeated squaring.
    pub fn power(&self, a: &Element, n: u64) -> Result<Element, RingError> {
        self.validate(a)?;
        let mut acc = self.one();
        let mut base = a.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = self.mul(&acc, &base)?;
            }
            n >>= 1;
            if n > 0 {
                base = self.mul(&base, &base)?;
            }
        }
        Ok(acc)
    }

    fn binary(
        &self,
        a: &Element,
        b: &Element,
        int: impl Fn(&BigInt, &BigInt) -> BigInt,
        modular: impl Fn(&Modular, &u64, &u64) -> u64,
        poly: impl Fn(&MultiPoly, &MultiPoly) -> MultiPoly,
        t: impl Fn(&TElement, &TElement) -> TElement,
    ) -> Result<Element, RingError> {
        self.validate(a)?;
        self.validate(b)?;
        Ok(match (self, a, b) {
            (_, Element::Int(x), Element::Int(y)) => Element::Int(int(x, y)),
            (RingId::Modular(n), Element::Mod(x), Element::Mod(y)) => {
                Element::Mod(modular(&Modular { n: *n }, x, y))
            }
            (_, Element::Poly(x), Element::Poly(y)) => Element::Poly(poly(x, y)),
            (_, Element::T(x), Element::T(y)) => Element::T(t(x, y)),
            _ => unreachable!("validated"),
        })
    }
}

impl fmt::Display for RingId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingId::Integers => write!(f, "Z"),
            RingId::Modular(n) => write!(f, "Z/{n}"),
            RingId::UnivariatePoly(FieldTag::Rationals) => write!(f, "Q[x]"),
            RingId::MultiPoly => write!(f, "Q[X]"),
            RingId::PidT => write!(f, "T"),
            RingId::StagedRing(_) => write!(f, "staged"),
        }
    }
}

impl FromStr for RingId {
    type Err = RingError;
    fn from_str(s: &str) -> Result<Self, RingError> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        match t.as_str() {
            "Z" => Ok(RingId::Integers),
            "Q[x]" | "Q[x0]" => Ok(RingId::UnivariatePoly(FieldTag::Rationals)),
            "Q[X]" => Ok(RingId::MultiPoly),
            "T" => Ok(RingId::PidT),
            _ => {
                if let Some(n) = t.strip_prefix("Z/") {
                    let n: u64 = n.parse().map_err(|_| RingError::ParseRing(s.into()))?;
                    RingId::modular(n)
                } else {
                    Err(RingError::ParseRing(s.into()))
                }
            }
        }
    }
}

/// An element tagged with its representation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Element {
    Int(BigInt),
    Mod(u64),
    Poly(MultiPoly),
    T(TElement),
}

impl Element {
    pub fn int(n: i64) -> Self {
        Element::Int(BigInt::from(n))
    }

    pub fn as_int(&self) -> Option<&BigInt> {
        match self {
            Element::Int(n) => Some(n),
            _ => None,
        }
    }

    pub fn as_mod(&self) -> Option<u64> {
        match self {
            Element::Mod(n) => Some(*n),
            _ => None,
        }
    }

    pub fn as_poly(&self) -> Option<&MultiPoly> {
        match self {
            Element::Poly(p) => Some(p),
            _ => None,
        }
    }

    pub fn as_t(&self) -> Option<&TElement> {
        match self {
            Element::T(t) => Some(t),
            _ => None,
        }
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::Int(n) => write!(f, "{n}"),
            Element::Mod(n) => write!(f, "{n}"),
            Element::Poly(p) => write!(f, "{p}"),
            Element::T(t) => write!(f, "{t}"),
        }
    }
}

/// Element predicates; `None` marks a predicate the backend cannot decide.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct ElementClass {
    pub unit: Option<bool>,
    pub zero_divisor: Option<bool>,
    pub nilpotent: Option<bool>,
    pub irreducible: Option<bool>,
    pub prime: Option<bool>,
}

impl ElementClass {
    fn decided(
        unit: bool,
        zero_divisor: bool,
        nilpotent: bool,
        irreducible: bool,
        prime: bool,
    ) -> Self {
        Self {
            unit: Some(unit),
            zero_divisor: Some(zero_divisor),
            nilpotent: Some(nilpotent),
            irreducible: Some(irreducible),
            prime: Some(prime),
        }
    }
}

/// Decides the element predicates: by factorisation in `Z` and `Q[x]`, by
/// exhaustive residue checks in `Z/n`, and through the exponent normal form
/// in `T`. Other backends leave the factorisation predicates undecided.
pub fn classify(ring: &RingId, a: &Element) -> Result<ElementClass, RingError> {
    ring.validate(a)?;
    Ok(match (ring, a) {
        (RingId::Integers, Element::Int(n)) => {
            let p = is_prime(n);
            ElementClass::decided(n.abs().is_one(), n.is_zero(), n.is_zero(), p, p)
        }
        (RingId::Modular(n), Element::Mod(v)) => {
            let m = Modular { n: *n };
            ElementClass::decided(
                m.is_unit(*v),
                m.is_zero_divisor(*v),
                m.is_nilpotent(*v),
                m.is_irreducible(*v),
                m.is_prime_element(*v),
            )
        }
        (RingId::UnivariatePoly(_), Element::Poly(p)) => {
            let zero = p.is_zero();
            let mut class = ElementClass::decided(QPoly.is_unit(p), zero, zero, false, false);
            if zero || p.is_constant() {
                return Ok(class);
            }
            let irr = is_irreducible_over_q(p, &FactorConfig::from_env()).ok();
            // Q[x] is a PID, where irreducible and prime coincide
            class.irreducible = irr;
            class.prime = irr;
            class
        }
        (RingId::PidT, Element::T(t)) => {
            let zero = t.is_zero();
            let degree = t.beta().map_or(0, |b| b.degree());
            ElementClass::decided(!zero && degree == 0, zero, zero, degree == 1, degree == 1)
        }
        (_, Element::Poly(p)) => {
            let zero = p.is_zero();
            ElementClass {
                unit: Some(p.is_constant() && !zero),
                zero_divisor: Some(zero),
                nilpotent: Some(zero),
                irreducible: None,
                prime: None,
            }
        }
        _ => unreachable!("validated"),
    })
}

/// Associates `a ~ b` where decidable.
pub fn associates(ring: &RingId, a: &Element, b: &Element) -> Result<Option<bool>, RingError> {
    ring.validate(a)?;
    ring.validate(b)?;
    Ok(match (ring, a, b) {
        (RingId::Integers, Element::Int(x), Element::Int(y)) => Some(x.abs() == y.abs()),
        (RingId::Modular(n), Element::Mod(x), Element::Mod(y)) => {
            Some(Modular { n: *n }.associates(*x, *y))
        }
        (RingId::UnivariatePoly(_), Element::Poly(x), Element::Poly(y)) => {
            Some(QPoly.associates(x, y))
        }
        (RingId::PidT, Element::T(x), Element::T(y)) => Some(x.associate_to(y)),
        (_, Element::Poly(x), Element::Poly(y)) => {
            if x.is_zero() || y.is_zero() {
                Some(x.is_zero() && y.is_zero())
            } else {
                let lx = x
                    .leading_term()
                    .map(|(_, c)| c.clone())
                    .unwrap_or_else(Rational::one);
                let ly = y
                    .leading_term()
                    .map(|(_, c)| c.clone())
                    .unwrap_or_else(Rational::one);
                // units of a polynomial ring over a field are the nonzero constants
                Some(x.scale(&(Rational::one() / lx)) == y.scale(&(Rational::one() / ly)))
            }
        }
        _ => None,
    })
}

/// Canonical associate in `Z` and `Q[x]`: positive, respectively monic.
pub fn normalize_unit(ring: &RingId, a: &Element) -> Result<Element, RingError> {
    ring.validate(a)?;
    Ok(match a {
        Element::Int(n) => Element::Int(n.abs()),
        Element::Poly(p) if matches!(ring, RingId::UnivariatePoly(_)) => {
            Element::Poly(univariate::monic(p))
        }
        other => other.clone(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::int;

    #[test]
    fn power_examples() {
        assert_eq!(power(&Integers, &int(2), 10), int(1024));
        let oracle = (0..10).fold(int(1), |acc, _| acc * 2);
        assert_eq!(power(&Integers, &int(2), 10), oracle);
        let z12 = Modular::new(12).unwrap();
        assert_eq!(power(&z12, &6, 2), 36 % 12);
        assert_eq!(power(&z12, &7, 0), 1);
        assert_eq!(
            power(&QPoly, &"x0 + 1".parse().unwrap(), 0),
            MultiPoly::one()
        );
        assert_eq!(power(&Modular::new(1).unwrap(), &0, 0), 0);
    }

    #[test]
    fn classify_examples() {
        let c = classify(&RingId::Integers, &Element::int(5)).unwrap();
        assert_eq!(
            (c.unit, c.irreducible, c.prime),
            (Some(false), Some(true), Some(true))
        );
        let c = classify(&RingId::Integers, &Element::int(1)).unwrap();
        assert_eq!(
            (c.unit, c.irreducible, c.prime),
            (Some(true), Some(false), Some(false))
        );
        let z12 = RingId::Modular(12);
        let c = classify(&z12, &Element::Mod(6)).unwrap();
        assert_eq!((c.nilpotent, c.zero_divisor), (Some(true), Some(true)));
        let c = classify(&z12, &Element::Mod(5)).unwrap();
        assert_eq!((c.unit, c.zero_divisor), (Some(true), Some(false)));
        assert!(classify(&z12, &Element::Mod(12)).is_err());
        assert!(classify(&RingId::Integers, &Element::Mod(1)).is_err());
    }

    #[test]
    fn classify_polynomials() {
        let q = RingId::UnivariatePoly(FieldTag::Rationals);
        let p = |s: &str| Element::Poly(s.parse().unwrap());
        let c = classify(&q, &p("x0^2 + 1")).unwrap();
        assert_eq!((c.irreducible, c.prime), (Some(true), Some(true)));
        let c = classify(&q, &p("x0^2 - 1")).unwrap();
        assert_eq!(c.irreducible, Some(false));
        let c = classify(&q, &p("3")).unwrap();
        assert_eq!(c.unit, Some(true));
        let c = classify(&RingId::MultiPoly, &p("x0*x1")).unwrap();
        assert_eq!(c.irreducible, None);
    }

    #[test]
    fn prime_elements_of_residue_rings() {
        // in Z/12 the prime elements generate the maximal ideals (2) and (3)
        let m = Modular::new(12).unwrap();
        let primes: Vec<u64> = m.elements().filter(|&r| m.is_prime_element(r)).collect();
        assert_eq!(primes, vec![2, 3, 9, 10]);
        // Z/4: 2 is prime and irreducible
        let m4 = Modular::new(4).unwrap();
        assert!(m4.is_prime_element(2));
        assert!(m4.is_irreducible(2));
    }

    #[test]
    fn ring_literals() {
        for s in ["Z", "Z/12", "Q[x]", "Q[X]", "T"] {
            assert_eq!(s.parse::<RingId>().unwrap().to_string(), s);
        }
        assert!("Z/0".parse::<RingId>().is_err());
        assert!("R".parse::<RingId>().is_err());
        let z5: RingId = "Z/5".parse().unwrap();
        assert_eq!(z5.parse_element("-3").unwrap(), Element::Mod(2));
    }
}
