use crate::bezout::euclid_gcd;
use crate::ring::EuclideanDomain;

use super::FracError;

/// `num / den` over a Euclidean domain. Arithmetic follows
/// `r/s + r'/s' = (rs' + r's)/(ss')` and `(r/s)(r'/s') = rr'/(ss')`;
/// equality is cross-multiplication, so unreduced values compare correctly.
#[derive(Debug, Clone)]
pub struct Fraction<E> {
    pub num: E,
    pub den: E,
}

impl<E: Clone + PartialEq> Fraction<E> {
    pub fn new<R: EuclideanDomain<Elem = E>>(ring: &R, num: E, den: E) -> Result<Self, FracError> {
        if ring.is_zero(&den) {
            return Err(FracError::ZeroDenominator);
        }
        Ok(Self { num, den })
    }

    /// The canonical embedding `r ↦ r/1`.
    pub fn embed<R: EuclideanDomain<Elem = E>>(ring: &R, r: E) -> Self {
        Self {
            num: r,
            den: ring.one(),
        }
    }

    /// Lowest terms with a canonical (positive or monic) denominator.
    pub fn normalize<R: EuclideanDomain<Elem = E>>(&self, ring: &R) -> Self {
        let g = euclid_gcd(ring, &self.num, &self.den);
        let num = ring
            .div_exact(&self.num, &g)
            .expect("gcd divides numerator");
        let den = ring
            .div_exact(&self.den, &g)
            .expect("gcd divides denominator");
        let u = ring.unit_part(&den);
        Self {
            num: ring.div_exact(&num, &u).expect("units divide everything"),
            den: ring.div_exact(&den, &u).expect("units divide everything"),
        }
    }

    pub fn add<R: EuclideanDomain<Elem = E>>(&self, ring: &R, other: &Self) -> Self {
        Self {
            num: ring.add(
                &ring.mul(&self.num, &other.den),
                &ring.mul(&other.num, &self.den),
            ),
            den: ring.mul(&self.den, &other.den),
        }
    }

    pub fn neg<R: EuclideanDomain<Elem = E>>(&self, ring: &R) -> Self {
        Self {
            num: ring.neg(&self.num),
            den: self.den.clone(),
        }
    }

    pub fn sub<R: EuclideanDomain<Elem = E>>(&self, ring: &R, other: &Self) -> Self {
        self.add(ring, &other.neg(ring))
    }

    pub fn mul<R: EuclideanDomain<Elem = E>>(&self, ring: &R, other: &Self) -> Self {
        Self {
            num: ring.mul(&self.num, &other.num),
            den: ring.mul(&self.den, &other.den),
        }
    }

    pub fn equals<R: EuclideanDomain<Elem = E>>(&self, ring: &R, other: &Self) -> bool {
        ring.mul(&self.num, &other.den) == ring.mul(&other.num, &self.den)
    }
}
