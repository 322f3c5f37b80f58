//! Gcd and lcm, Bézout certificates, comparison of factorisations,
//! Dedekind–Hasse norms and the structural steps for principal ideals.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

use crate::arith::factor_integer;
use crate::ideal::{self, FgIdeal, IdealError};
use crate::poly::factor::{factor_over_q, FactorConfig};
use crate::poly::{MultiPoly, PolyError};
use crate::ring::{power, Element, EuclideanDomain, Integers, QPoly, Ring};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BezoutError {
    #[error("both inputs are zero")]
    BothZero,
    #[error("no generators given")]
    EmptyGenerators,
    #[error("cannot factor zero")]
    ZeroElement,
    #[error("axiom ({axiom}) fails at {detail}")]
    AxiomViolation { axiom: &'static str, detail: String },
    #[error("no nonzero element enumerated within horizon {horizon}")]
    HorizonTooSmall { horizon: u64 },
    #[error("inconsistent witness: {0}")]
    InconsistentWitness(String),
    #[error("not a witness: {0}")]
    NotAWitness(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Ideal(#[from] IdealError),
}

/// Gcd by Euclid's algorithm, normalised; `gcd(0, 0) = 0`.
pub fn euclid_gcd<R: EuclideanDomain>(ring: &R, a: &R::Elem, b: &R::Elem) -> R::Elem {
    let (mut a, mut b) = (a.clone(), b.clone());
    while !ring.is_zero(&b) {
        let r = ring.div_rem(&a, &b).1;
        a = b;
        b = r;
    }
    ring.normalize(&a)
}

/// `(gcd, lcm)` with `lcm = a (b / gcd)`, both normalised.
pub fn gcd_lcm<R: EuclideanDomain>(ring: &R, a: &R::Elem, b: &R::Elem) -> (R::Elem, R::Elem) {
    let g = euclid_gcd(ring, a, b);
    if ring.is_zero(&g) {
        return (g, ring.zero());
    }
    let l = ring.mul(a, &ring.div_exact(b, &g).expect("gcd divides b"));
    (g, ring.normalize(&l))
}

/// A unit times a list of normalised irreducibles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization<E> {
    pub unit: E,
    pub factors: Vec<E>,
}

impl<E: Clone> Factorization<E> {
    pub fn product<R: EuclideanDomain<Elem = E>>(&self, ring: &R) -> E {
        self.factors
            .iter()
            .fold(self.unit.clone(), |acc, f| ring.mul(&acc, f))
    }
}

/// A Euclidean domain whose nonzero elements can be factored.
pub trait Factorize: EuclideanDomain {
    fn factor(&self, a: &Self::Elem) -> Result<Factorization<Self::Elem>, BezoutError>;
}

impl Factorize for Integers {
    fn factor(&self, a: &BigInt) -> Result<Factorization<BigInt>, BezoutError> {
        if a.is_zero() {
            return Err(BezoutError::ZeroElement);
        }
        let factors = factor_integer(a)
            .into_iter()
            .flat_map(|(p, e)| std::iter::repeat_n(p, e as usize))
            .collect();
        Ok(Factorization {
            unit: self.unit_part(a),
            factors,
        })
    }
}

impl Factorize for QPoly {
    fn factor(&self, a: &MultiPoly) -> Result<Factorization<MultiPoly>, BezoutError> {
        factor_q(a, &FactorConfig::from_env())
    }
}

/// `Q[x]` with an explicit factorisation degree bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BoundedQPoly {
    pub config: FactorConfig,
}

impl Ring for BoundedQPoly {
    type Elem = MultiPoly;
    fn zero(&self) -> MultiPoly {
        QPoly.zero()
    }
    fn one(&self) -> MultiPoly {
        QPoly.one()
    }
    fn add(&self, a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
        QPoly.add(a, b)
    }
    fn neg(&self, a: &MultiPoly) -> MultiPoly {
        QPoly.neg(a)
    }
    fn mul(&self, a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
        QPoly.mul(a, b)
    }
}

impl EuclideanDomain for BoundedQPoly {
    fn div_rem(&self, a: &MultiPoly, b: &MultiPoly) -> (MultiPoly, MultiPoly) {
        QPoly.div_rem(a, b)
    }
    fn normalize(&self, a: &MultiPoly) -> MultiPoly {
        QPoly.normalize(a)
    }
    fn unit_part(&self, a: &MultiPoly) -> MultiPoly {
        QPoly.unit_part(a)
    }
    fn is_unit(&self, a: &MultiPoly) -> bool {
        QPoly.is_unit(a)
    }
}

impl Factorize for BoundedQPoly {
    fn factor(&self, a: &MultiPoly) -> Result<Factorization<MultiPoly>, BezoutError> {
        factor_q(a, &self.config)
    }
}

pub fn factor_q(
    a: &MultiPoly,
    cfg: &FactorConfig,
) -> Result<Factorization<MultiPoly>, BezoutError> {
    if a.is_zero() {
        return Err(BezoutError::ZeroElement);
    }
    let f = factor_over_q(a, cfg)?;
    Ok(Factorization {
        unit: MultiPoly::constant(f.unit),
        factors: f.factors,
    })
}

/// Gcd by grouping factorisations: the product of the common irreducibles
/// raised to the smaller of their two multiplicities.
pub fn ufd_gcd<R: Factorize>(ring: &R, a: &R::Elem, b: &R::Elem) -> Result<R::Elem, BezoutError>
where
    R::Elem: Ord,
{
    if ring.is_zero(a) {
        return Ok(ring.normalize(b));
    }
    if ring.is_zero(b) {
        return Ok(ring.normalize(a));
    }
    let count = |f: Factorization<R::Elem>| {
        let mut m: BTreeMap<R::Elem, u64> = BTreeMap::new();
        for q in f.factors {
            *m.entry(ring.normalize(&q)).or_default() += 1;
        }
        m
    };
    let ca = count(ring.factor(a)?);
    let cb = count(ring.factor(b)?);
    let mut g = ring.one();
    for (q, ea) in &ca {
        if let Some(eb) = cb.get(q) {
            g = ring.mul(&g, &power(ring, q, *ea.min(eb)));
        }
    }
    Ok(g)
}

/// `d = Σ a_i c_i` over a list of generators `a_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BezoutCertificate<E> {
    pub d: E,
    pub coefficients: Vec<E>,
}

impl<E: PartialEq> BezoutCertificate<E> {
    /// `Σ a_i c_i = d` and `d | a_i` for every generator.
    pub fn verify<R: EuclideanDomain<Elem = E>>(&self, ring: &R, generators: &[E]) -> bool {
        if generators.len() != self.coefficients.len() {
            return false;
        }
        let sum = generators
            .iter()
            .zip(&self.coefficients)
            .fold(ring.zero(), |acc, (a, c)| ring.add(&acc, &ring.mul(a, c)));
        sum == self.d && generators.iter().all(|a| ring.divides(&self.d, a))
    }
}

/// Extended Euclid: `d = a x + b y` with `d` the normalised gcd.
pub fn extended_gcd<R: EuclideanDomain>(
    ring: &R,
    a: &R::Elem,
    b: &R::Elem,
) -> Result<BezoutCertificate<R::Elem>, BezoutError> {
    if ring.is_zero(a) && ring.is_zero(b) {
        return Err(BezoutError::BothZero);
    }
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut s0, mut s1) = (ring.one(), ring.zero());
    let (mut t0, mut t1) = (ring.zero(), ring.one());
    while !ring.is_zero(&r1) {
        let (q, r) = ring.div_rem(&r0, &r1);
        let s = ring.sub(&s0, &ring.mul(&q, &s1));
        let t = ring.sub(&t0, &ring.mul(&q, &t1));
        (r0, r1) = (r1, r);
        (s0, s1) = (s1, s);
        (t0, t1) = (t1, t);
    }
    let inv = ring
        .div_exact(&ring.one(), &ring.unit_part(&r0))
        .expect("unit part is invertible");
    Ok(BezoutCertificate {
        d: ring.mul(&r0, &inv),
        coefficients: vec![ring.mul(&s0, &inv), ring.mul(&t0, &inv)],
    })
}

/// Folds extended Euclid over the generators; `(a_1, ..., a_k) = (d)`.
pub fn principal_generator<R: EuclideanDomain>(
    ring: &R,
    generators: &[R::Elem],
) -> Result<BezoutCertificate<R::Elem>, BezoutError> {
    if generators.is_empty() {
        return Err(BezoutError::EmptyGenerators);
    }
    let mut cert = BezoutCertificate {
        d: ring.zero(),
        coefficients: Vec::with_capacity(generators.len()),
    };
    for g in generators {
        if ring.is_zero(&cert.d) && ring.is_zero(g) {
            cert.coefficients.push(ring.zero());
            continue;
        }
        let step = extended_gcd(ring, &cert.d, g)?;
        let (x, y) = (&step.coefficients[0], &step.coefficients[1]);
        for c in &mut cert.coefficients {
            *c = ring.mul(c, x);
        }
        cert.coefficients.push(y.clone());
        cert.d = step.d;
    }
    Ok(cert)
}

/// A bijection `h` with `f[i] ~ g[h[i]]`, if one exists.
///
/// Greedy matching suffices because being associate is an equivalence
/// relation.
pub fn factorization_equal<R: EuclideanDomain>(
    ring: &R,
    f: &[R::Elem],
    g: &[R::Elem],
) -> Option<Vec<usize>> {
    if f.len() != g.len() {
        return None;
    }
    let mut used = vec![false; g.len()];
    let mut h = Vec::with_capacity(f.len());
    for a in f {
        let j = (0..g.len()).find(|&j| !used[j] && ring.associates(a, &g[j]))?;
        used[j] = true;
        h.push(j);
    }
    Some(h)
}

/// Coefficient pair `(x, y)` of a combination `a x + b y`.
pub type Coefficients<R> = (<R as Ring>::Elem, <R as Ring>::Elem);

/// The norm `f(0) = 0`, `f(r) = 1 + Ω(r)` where `Ω` counts irreducible
/// factors with multiplicity.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DHNorm<R> {
    pub ring: R,
}

impl<R: Factorize> DHNorm<R> {
    pub fn new(ring: R) -> Self {
        Self { ring }
    }

    pub fn norm(&self, r: &R::Elem) -> Result<u64, BezoutError> {
        if self.ring.is_zero(r) {
            return Ok(0);
        }
        Ok(1 + self.ring.factor(r)?.factors.len() as u64)
    }

    /// For `b ∤ a`, the Bézout coefficients `(x, y)` of `d = gcd(a, b)`,
    /// which satisfy `0 < f(a x + b y) < f(b)`.
    pub fn witness(
        &self,
        a: &R::Elem,
        b: &R::Elem,
    ) -> Result<Option<Coefficients<R>>, BezoutError> {
        if self.ring.divides(b, a) {
            return Ok(None);
        }
        let c = extended_gcd(&self.ring, a, b)?;
        let [x, y]: [R::Elem; 2] = c.coefficients.try_into().expect("two coefficients");
        Ok(Some((x, y)))
    }
}

/// Outcome of checking the three norm axioms on a sample.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DHReport<E> {
    pub elements: usize,
    pub pairs: usize,
    pub witnesses: usize,
    /// Sample elements with `f(r) = f(1)`.
    pub units: Vec<E>,
}

/// Checks `f(r) = 0 ⇔ r = 0`, the gcd witness for every pair with `b ∤ a`,
/// and `f(a) ≤ f(ab)` over all nonzero pairs of the sample.
pub fn dh_build_check<R: Factorize>(
    norm: &DHNorm<R>,
    sample: &[R::Elem],
) -> Result<DHReport<R::Elem>, BezoutError>
where
    R::Elem: std::fmt::Display,
{
    let ring = &norm.ring;
    let f1 = norm.norm(&ring.one())?;
    let mut norms = Vec::with_capacity(sample.len());
    let mut units = Vec::new();
    for r in sample {
        let n = norm.norm(r)?;
        if (n == 0) != ring.is_zero(r) {
            return Err(BezoutError::AxiomViolation {
                axiom: "i",
                detail: format!("f({r}) = {n}"),
            });
        }
        if n == f1 {
            units.push(r.clone());
        }
        norms.push(n);
    }
    let (mut pairs, mut witnesses) = (0, 0);
    for (a, fa) in sample.iter().zip(&norms) {
        if ring.is_zero(a) {
            continue;
        }
        for (b, fb) in sample.iter().zip(&norms) {
            if ring.is_zero(b) {
                continue;
            }
            pairs += 1;
            if let Some((x, y)) = norm.witness(a, b)? {
                let d = ring.add(&ring.mul(a, &x), &ring.mul(b, &y));
                let fd = norm.norm(&d)?;
                if !(0 < fd && fd < *fb) {
                    return Err(BezoutError::AxiomViolation {
                        axiom: "ii",
                        detail: format!("a = {a}, b = {b}, f(ax + by) = {fd}"),
                    });
                }
                witnesses += 1;
            }
            let fab = norm.norm(&ring.mul(a, b))?;
            if *fa > fab {
                return Err(BezoutError::AxiomViolation {
                    axiom: "iii",
                    detail: format!("a = {a}, b = {b}"),
                });
            }
        }
    }
    Ok(DHReport {
        elements: sample.len(),
        pairs,
        witnesses,
        units,
    })
}

/// An element of minimal norm among those enumerated in stages
/// `0..=horizon`; the first such element is kept.
pub fn dh_generator<R: Factorize>(
    norm: &DHNorm<R>,
    enumeration: &mut dyn FnMut(u64) -> Vec<R::Elem>,
    horizon: u64,
) -> Result<R::Elem, BezoutError> {
    let mut best: Option<(u64, R::Elem)> = None;
    for s in 0..=horizon {
        for e in enumeration(s) {
            if norm.ring.is_zero(&e) {
                continue;
            }
            let n = norm.norm(&e)?;
            if best.as_ref().is_none_or(|(m, _)| n < *m) {
                best = Some((n, e));
            }
        }
    }
    best.map(|(_, e)| e)
        .ok_or(BezoutError::HorizonTooSmall { horizon })
}

/// Enumerates `(g_1, ..., g_k) ⊆ Z`: stage `s` lists `Σ c_i g_i` over the
/// coefficient vectors with `max |c_i| = s`.
pub fn integer_combinations(generators: Vec<BigInt>) -> impl FnMut(u64) -> Vec<BigInt> {
    move |s| {
        let s = s as i64;
        let k = generators.len();
        let mut out = Vec::new();
        let mut c = vec![-s; k];
        if k == 0 {
            return out;
        }
        loop {
            if c.iter().any(|x| x.abs() == s) {
                out.push(
                    generators
                        .iter()
                        .zip(&c)
                        .map(|(g, x)| g * BigInt::from(*x))
                        .sum(),
                );
            }
            let mut i = 0;
            while i < k && c[i] == s {
                c[i] = -s;
                i += 1;
            }
            if i == k {
                return out;
            }
            c[i] += 1;
        }
    }
}

/// Enumerates elements of `(g_1, ..., g_k)`: stage 0 lists the generators
/// and each later stage one remainder of the folded Euclidean algorithm.
pub fn euclid_enumeration<R: EuclideanDomain + Clone + 'static>(
    ring: R,
    generators: Vec<R::Elem>,
) -> impl FnMut(u64) -> Vec<R::Elem> {
    let mut remainders = Vec::new();
    let mut acc = ring.zero();
    for g in &generators {
        let (mut a, mut b) = (acc.clone(), g.clone());
        while !ring.is_zero(&b) {
            let r = ring.div_rem(&a, &b).1;
            remainders.push(r.clone());
            a = b;
            b = r;
        }
        acc = a;
    }
    move |s| {
        if s == 0 {
            generators.clone()
        } else {
            remainders
                .get(s as usize - 1)
                .cloned()
                .into_iter()
                .collect()
        }
    }
}

/// Data for recombining `I` from `(I, a) = (b)` and `(I : a) = (c)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrincExtWitness<E> {
    pub a: E,
    pub b: E,
    /// `a / b`
    pub a_over_b: E,
    /// `b = i + a d` with `i ∈ I`
    pub i: E,
    pub d: E,
    pub c: E,
}

/// Returns `bc`, which generates `I`, after checking the witnesses against
/// the membership oracle and every sampled member of `I` against `(bc)`.
pub fn princ_ext<R: EuclideanDomain>(
    ring: &R,
    w: &PrincExtWitness<R::Elem>,
    in_i: &dyn Fn(&R::Elem) -> bool,
    samples: &[R::Elem],
) -> Result<R::Elem, BezoutError>
where
    R::Elem: std::fmt::Display,
{
    let bad = |m: String| Err(BezoutError::InconsistentWitness(m));
    if in_i(&w.a) {
        return bad(format!("{} lies in I", w.a));
    }
    if ring.mul(&w.b, &w.a_over_b) != w.a {
        return bad(format!("{} * {} != {}", w.b, w.a_over_b, w.a));
    }
    if !in_i(&w.i) || ring.add(&w.i, &ring.mul(&w.a, &w.d)) != w.b {
        return bad(format!("{} is not i + a d with i in I", w.b));
    }
    if !in_i(&ring.mul(&w.a, &w.c)) {
        return bad(format!("{} is not in (I : a)", w.c));
    }
    let bc = ring.mul(&w.b, &w.c);
    if !in_i(&bc) {
        return bad(format!("{bc} is not in I"));
    }
    if let Some(r) = samples.iter().find(|r| in_i(r) && !ring.divides(&bc, r)) {
        return bad(format!("{r} is in I but not in ({bc})"));
    }
    Ok(bc)
}

/// One branching step: for `ab ∈ I` with `a, b ∉ I`, returns `((I, a), (I : a))`,
/// which contain `a` and `b` respectively.
pub fn prime_branch_step(
    i: &FgIdeal,
    a: &Element,
    b: &Element,
) -> Result<(FgIdeal, FgIdeal), BezoutError> {
    let ring = i.ring();
    let ab = ring.mul(a, b).map_err(IdealError::from)?;
    if !ideal::contains(i, &ab)? {
        return Err(BezoutError::NotAWitness(format!("{a} * {b} is not in I")));
    }
    for x in [a, b] {
        if ideal::contains(i, x)? {
            return Err(BezoutError::NotAWitness(format!("{x} is in I")));
        }
    }
    let left = i.with_generator(a.clone())?;
    let right = ideal::ideal_quotient(i, a)?;
    debug_assert!(ideal::contains(&left, a)? && ideal::contains(&right, b)?);
    Ok((left, right))
}

/// `(x, y)` with `x a + y b = 1`, scaled from a Bézout certificate.
pub fn unit_combination<R: EuclideanDomain>(
    ring: &R,
    a: &R::Elem,
    b: &R::Elem,
) -> Option<(R::Elem, R::Elem)> {
    let c = extended_gcd(ring, a, b).ok()?;
    if !ring.is_unit(&c.d) {
        return None;
    }
    let inv = ring.div_exact(&ring.one(), &c.d)?;
    Some((
        ring.mul(&c.coefficients[0], &inv),
        ring.mul(&c.coefficients[1], &inv),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::int;
    use crate::ring::RingId;
    use num_traits::Signed;

    fn p(s: &str) -> MultiPoly {
        s.parse().unwrap()
    }

    #[test]
    fn gcd_lcm_examples() {
        assert_eq!(gcd_lcm(&Integers, &int(4), &int(6)), (int(2), int(12)));
        assert_eq!(gcd_lcm(&Integers, &int(-5), &int(0)), (int(5), int(0)));
        assert_eq!(ufd_gcd(&Integers, &int(12), &int(18)).unwrap(), int(6));
        assert_eq!(
            gcd_lcm(&QPoly, &p("x0^2 - 1"), &p("2*x0 - 2")),
            (p("x0 - 1"), p("x0^2 - 1"))
        );
        assert_eq!(
            ufd_gcd(&QPoly, &p("x0^3 - x0"), &p("x0^2 + x0")).unwrap(),
            p("x0^2 + x0")
        );
    }

    #[test]
    fn gcd_lcm_brute_force() {
        for a in 1..=40i64 {
            for b in 1..=40i64 {
                let g = (1..=a.min(b))
                    .rev()
                    .find(|d| a % d == 0 && b % d == 0)
                    .unwrap();
                let l = (1..=a * b).find(|m| m % a == 0 && m % b == 0).unwrap();
                assert_eq!(gcd_lcm(&Integers, &int(a), &int(b)), (int(g), int(l)));
            }
        }
    }

    #[test]
    fn extended_gcd_examples() {
        let c = extended_gcd(&Integers, &int(240), &int(46)).unwrap();
        assert_eq!(
            (c.d.clone(), c.coefficients.clone()),
            (int(2), vec![int(-9), int(47)])
        );
        assert!(c.verify(&Integers, &[int(240), int(46)]));
        let c = extended_gcd(&Integers, &int(-7), &int(0)).unwrap();
        assert_eq!((c.d, c.coefficients), (int(7), vec![int(-1), int(0)]));
        let c = extended_gcd(&QPoly, &p("x0^2 - 1"), &p("x0 - 1")).unwrap();
        assert_eq!((c.d, c.coefficients), (p("x0 - 1"), vec![p("0"), p("1")]));
        assert_eq!(
            extended_gcd(&Integers, &int(0), &int(0)),
            Err(BezoutError::BothZero)
        );
    }

    #[test]
    fn principal_generator_examples() {
        let gens = [int(6), int(10), int(15)];
        let c = principal_generator(&Integers, &gens).unwrap();
        assert_eq!(c.d, int(1));
        assert!(c.verify(&Integers, &gens));
        let c = principal_generator(&Integers, &[int(9)]).unwrap();
        assert_eq!((c.d, c.coefficients), (int(9), vec![int(1)]));
        let gens = [p("x0^2 - 1"), p("x0^2 + 2*x0 + 1")];
        let c = principal_generator(&QPoly, &gens).unwrap();
        assert_eq!(c.d, p("x0 + 1"));
        assert!(c.verify(&QPoly, &gens));
        let c = principal_generator(&Integers, &[int(0), int(0), int(4)]).unwrap();
        assert!(c.verify(&Integers, &[int(0), int(0), int(4)]));
    }

    #[test]
    fn factorization_comparison() {
        let h = factorization_equal(
            &Integers,
            &[int(2), int(2), int(3)],
            &[int(-2), int(3), int(-2)],
        );
        assert_eq!(h, Some(vec![0, 2, 1]));
        assert_eq!(
            factorization_equal(&Integers, &[int(2), int(3)], &[int(2), int(3), int(1)]),
            None
        );
        assert_eq!(
            factorization_equal(&Integers, &[int(2), int(3)], &[int(2), int(5)]),
            None
        );
        let h = factorization_equal(
            &QPoly,
            &[p("x0 - 1"), p("x0 + 1")],
            &[p("2*x0 - 2"), p("1/2*x0 + 1/2")],
        );
        assert_eq!(h, Some(vec![0, 1]));
    }

    #[test]
    fn dh_norm_examples() {
        let f = DHNorm::new(Integers);
        assert_eq!(f.norm(&int(12)).unwrap(), 4);
        assert_eq!(f.norm(&int(1)).unwrap(), 1);
        assert_eq!(f.norm(&int(0)).unwrap(), 0);
        assert_eq!(
            f.witness(&int(3), &int(2)).unwrap(),
            Some((int(1), int(-1)))
        );
        assert_eq!(f.witness(&int(4), &int(2)).unwrap(), None);
        let sample: Vec<BigInt> = (-12..=12).map(int).collect();
        let report = dh_build_check(&f, &sample).unwrap();
        assert_eq!(report.units, vec![int(-1), int(1)]);
        assert_eq!(report.pairs, 24 * 24);
    }

    #[test]
    fn dh_generator_examples() {
        let f = DHNorm::new(Integers);
        let mut e = integer_combinations(vec![int(4), int(6)]);
        assert_eq!(dh_generator(&f, &mut e, 2).unwrap().abs(), int(2));
        let mut e = integer_combinations(vec![int(-15)]);
        assert_eq!(dh_generator(&f, &mut e, 3).unwrap().abs(), int(15));
        let mut e = integer_combinations(vec![int(0)]);
        assert_eq!(
            dh_generator(&f, &mut e, 3),
            Err(BezoutError::HorizonTooSmall { horizon: 3 })
        );
        let f = DHNorm::new(QPoly);
        let mut e = euclid_enumeration(QPoly, vec![p("x0^2 - 1"), p("x0 - 1")]);
        assert!(QPoly.associates(&dh_generator(&f, &mut e, 4).unwrap(), &p("x0 - 1")));
    }

    #[test]
    fn integer_combinations_cover_boxes() {
        let mut e = integer_combinations(vec![int(1), int(100)]);
        let mut seen = Vec::new();
        for s in 0..=3 {
            seen.extend(e(s));
        }
        assert_eq!(seen.len(), 49);
        seen.sort();
        seen.dedup();
        assert_eq!(seen.len(), 49);
    }

    #[test]
    fn princ_ext_polynomial() {
        let w = PrincExtWitness {
            a: p("x0 - 1"),
            b: p("x0 - 1"),
            a_over_b: p("1"),
            i: p("0"),
            d: p("1"),
            c: p("x0 + 1"),
        };
        let f = p("x0^2 - 1");
        let in_i = |r: &MultiPoly| QPoly.divides(&f, r);
        let samples = [p("x0^3 - x0"), p("x0^2 - 1"), p("x0")];
        assert_eq!(princ_ext(&QPoly, &w, &in_i, &samples).unwrap(), f);
        let w2 = PrincExtWitness { a: f.clone(), ..w };
        assert!(matches!(
            princ_ext(&QPoly, &w2, &in_i, &samples),
            Err(BezoutError::InconsistentWitness(_))
        ));
    }

    #[test]
    fn princ_ext_recombines_principal_integer_ideals() {
        for g in 1..=60i64 {
            let in_i = |r: &BigInt| (r % g).is_zero();
            for a in 1..=30i64 {
                if a % g == 0 {
                    continue;
                }
                let (ga, gb) = (int(g), int(a));
                let cert = extended_gcd(&Integers, &ga, &gb).unwrap();
                let b = cert.d.clone();
                let w = PrincExtWitness {
                    a: gb.clone(),
                    b: b.clone(),
                    a_over_b: &gb / &b,
                    i: &ga * &cert.coefficients[0],
                    d: cert.coefficients[1].clone(),
                    c: &ga / &b,
                };
                let samples: Vec<BigInt> = (-50..50).map(int).collect();
                let bc = princ_ext(&Integers, &w, &in_i, &samples).unwrap();
                assert!(Integers.associates(&bc, &ga));
            }
        }
    }

    #[test]
    fn branch_step() {
        let i = FgIdeal::new(RingId::Integers, vec![Element::int(12)]).unwrap();
        let (l, r) = prime_branch_step(&i, &Element::int(4), &Element::int(3)).unwrap();
        assert_eq!(ideal::principal(&l).unwrap(), Some(Element::int(4)));
        assert_eq!(ideal::principal(&r).unwrap(), Some(Element::int(3)));
        assert!(matches!(
            prime_branch_step(&i, &Element::int(2), &Element::int(3)),
            Err(BezoutError::NotAWitness(_))
        ));
        let m = FgIdeal::new(RingId::MultiPoly, vec![Element::Poly(p("x0*x1"))]).unwrap();
        let (l, r) =
            prime_branch_step(&m, &Element::Poly(p("x0")), &Element::Poly(p("x1"))).unwrap();
        assert!(ideal::contains(&l, &Element::Poly(p("x0"))).unwrap());
        assert!(ideal::contains(&r, &Element::Poly(p("x1"))).unwrap());
        assert!(!ideal::contains(&r, &Element::Poly(p("x0"))).unwrap());
    }
}
