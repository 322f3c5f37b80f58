//! Finitely generated ideals over the decidable backends: membership,
//! ideal quotients, radicals, classification, comaximality, quotient rings
//! and the ideal correspondence for `Z/n`.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::arith::{divisors_u64, is_prime, is_prime_power, squarefree_kernel};
use crate::bezout::{euclid_gcd, unit_combination};
use crate::frac::{staged_membership, FracError, StagedRingHandle};
use crate::pid_t::{t_divides, t_principal_generator, TElement};
use crate::poly::univariate::{divide_long, squarefree_part};
use crate::poly::{ExponentVector, MultiPoly, PolyError};
use crate::ring::{Element, EuclideanDomain, Integers, Modular, QPoly, RingError, RingId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IdealError {
    #[error("{operation} is not decidable for the {backend} backend")]
    UndecidableBackend {
        operation: &'static str,
        backend: Backend,
    },
    #[error("an ideal needs at least one generator")]
    EmptyGenerators,
    #[error("operation requires a finite ring")]
    NotFiniteRing,
    #[error("ideals live in different rings")]
    RingMismatch,
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Frac(#[from] FracError),
}

/// How membership is decided.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Backend {
    Integers,
    Modular,
    Univariate,
    Monomial,
    PidT,
    Staged,
}

impl fmt::Display for Backend {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Backend::Integers => "Z",
            Backend::Modular => "Z/n",
            Backend::Univariate => "Q[x]",
            Backend::Monomial => "monomial",
            Backend::PidT => "T",
            Backend::Staged => "staged",
        };
        f.write_str(s)
    }
}

/// `(a_1, ..., a_k)` in a ring with a membership procedure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FgIdeal {
    ring: RingId,
    generators: Vec<Element>,
    backend: Backend,
}

impl FgIdeal {
    /// Picks the backend from the ring; in `Q[X]` only monomial generators
    /// are accepted.
    pub fn new(ring: RingId, generators: Vec<Element>) -> Result<Self, IdealError> {
        if generators.is_empty() {
            return Err(IdealError::EmptyGenerators);
        }
        for g in &generators {
            ring.validate(g)?;
        }
        let backend = match &ring {
            RingId::Integers => Backend::Integers,
            RingId::Modular(_) => Backend::Modular,
            RingId::UnivariatePoly(_) => Backend::Univariate,
            RingId::PidT => Backend::PidT,
            RingId::StagedRing(_) => Backend::Staged,
            RingId::MultiPoly => {
                if generators
                    .iter()
                    .all(|g| g.as_poly().is_some_and(|p| p.num_terms() <= 1))
                {
                    Backend::Monomial
                } else {
                    return Err(IdealError::UndecidableBackend {
                        operation: "membership",
                        backend: Backend::Monomial,
                    });
                }
            }
        };
        Ok(Self {
            ring,
            generators,
            backend,
        })
    }

    /// The staged ideal, generated by `xy` and the scheduled powers.
    pub fn staged(handle: StagedRingHandle) -> Self {
        Self {
            ring: RingId::StagedRing(Arc::new(handle)),
            generators: vec![Element::Poly(crate::frac::staged_xy())],
            backend: Backend::Staged,
        }
    }

    pub fn integers(gens: &[i64]) -> Self {
        Self::new(
            RingId::Integers,
            gens.iter().map(|&g| Element::int(g)).collect(),
        )
        .expect("nonempty integer generators")
    }

    pub fn modular(n: u64, gens: &[u64]) -> Result<Self, IdealError> {
        Self::new(
            RingId::modular(n)?,
            gens.iter().map(|&g| Element::Mod(g % n)).collect(),
        )
    }

    pub fn univariate(gens: Vec<MultiPoly>) -> Result<Self, IdealError> {
        Self::new(
            RingId::UnivariatePoly(crate::ring::FieldTag::Rationals),
            gens.into_iter().map(Element::Poly).collect(),
        )
    }

    pub fn monomial(gens: Vec<MultiPoly>) -> Result<Self, IdealError> {
        Self::new(
            RingId::MultiPoly,
            gens.into_iter().map(Element::Poly).collect(),
        )
    }

    pub fn ring(&self) -> &RingId {
        &self.ring
    }

    pub fn generators(&self) -> &[Element] {
        &self.generators
    }

    pub fn backend(&self) -> Backend {
        self.backend
    }

    /// `(I, a)`.
    pub fn with_generator(&self, a: Element) -> Result<Self, IdealError> {
        let mut g = self.generators.clone();
        g.push(a);
        if self.backend == Backend::Staged {
            return Err(undecidable("extension", Backend::Staged));
        }
        Self::new(self.ring.clone(), g)
    }

    fn modulus(&self) -> u64 {
        match self.ring {
            RingId::Modular(n) => n,
            _ => unreachable!("modular backend"),
        }
    }
}

impl fmt::Display for FgIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.generators.iter().map(|g| g.to_string()).collect();
        write!(f, "({}) in {}", gens.join(", "), self.ring)
    }
}

fn undecidable(operation: &'static str, backend: Backend) -> IdealError {
    IdealError::UndecidableBackend { operation, backend }
}

fn ints(i: &FgIdeal) -> impl Iterator<Item = &BigInt> {
    i.generators.iter().filter_map(Element::as_int)
}

fn polys(i: &FgIdeal) -> impl Iterator<Item = &MultiPoly> {
    i.generators.iter().filter_map(Element::as_poly)
}

fn int_generator(i: &FgIdeal) -> BigInt {
    ints(i).fold(BigInt::zero(), |g, a| g.gcd(a))
}

/// The generator `d | n` of the ideal in `Z/n`, with `d = n` for zero.
fn mod_generator(i: &FgIdeal) -> u64 {
    let n = i.modulus();
    i.generators
        .iter()
        .filter_map(Element::as_mod)
        .fold(n, |g, a| g.gcd(&a))
}

fn poly_generator(i: &FgIdeal) -> MultiPoly {
    polys(i).fold(MultiPoly::zero(), |g, a| euclid_gcd(&QPoly, &g, a))
}

/// Minimal generating exponents of a monomial ideal; `None` for the zero
/// ideal.
fn monomial_exponents(i: &FgIdeal) -> Vec<ExponentVector> {
    let all: Vec<ExponentVector> = polys(i)
        .filter_map(|p| p.as_monomial().map(|(e, _)| e.clone()))
        .collect();
    minimalize(all)
}

fn minimalize(mut all: Vec<ExponentVector>) -> Vec<ExponentVector> {
    all.sort();
    all.dedup();
    let keep: Vec<ExponentVector> = all
        .iter()
        .filter(|e| !all.iter().any(|f| f != *e && f.divides(e)))
        .cloned()
        .collect();
    keep
}

fn monomial_ideal(exps: &[ExponentVector]) -> FgIdeal {
    let gens: Vec<MultiPoly> = if exps.is_empty() {
        vec![MultiPoly::zero()]
    } else {
        exps.iter()
            .map(|e| MultiPoly::monomial(e.clone(), crate::arith::rat(1)))
            .collect()
    };
    FgIdeal::monomial(gens).expect("monomial generators")
}

/// A single generator for principal backends.
pub fn principal(i: &FgIdeal) -> Result<Option<Element>, IdealError> {
    Ok(match i.backend {
        Backend::Integers => Some(Element::Int(int_generator(i))),
        Backend::Modular => Some(Element::Mod(mod_generator(i) % i.modulus())),
        Backend::Univariate => Some(Element::Poly(poly_generator(i))),
        Backend::PidT => {
            let ts: Vec<TElement> = i
                .generators
                .iter()
                .filter_map(|g| g.as_t().cloned())
                .collect();
            Some(Element::T(
                t_principal_generator(&ts).map_or_else(|_| TElement::zero(), |c| c.generator),
            ))
        }
        Backend::Monomial => {
            let e = monomial_exponents(i);
            match e.len() {
                0 => Some(Element::Poly(MultiPoly::zero())),
                1 => Some(Element::Poly(MultiPoly::monomial(
                    e[0].clone(),
                    crate::arith::rat(1),
                ))),
                _ => None,
            }
        }
        Backend::Staged => None,
    })
}

/// Decides `r ∈ I`.
pub fn contains(i: &FgIdeal, r: &Element) -> Result<bool, IdealError> {
    i.ring.validate(r)?;
    Ok(match (i.backend, r) {
        (Backend::Integers, Element::Int(r)) => Integers.divides(&int_generator(i), r),
        (Backend::Modular, Element::Mod(r)) => r % mod_generator(i) == 0,
        (Backend::Univariate, Element::Poly(r)) => QPoly.divides(&poly_generator(i), r),
        (Backend::Monomial, Element::Poly(r)) => {
            let exps = monomial_exponents(i);
            r.support().all(|e| exps.iter().any(|g| g.divides(e)))
        }
        (Backend::PidT, Element::T(r)) => match principal(i)? {
            Some(Element::T(g)) if !g.is_zero() => t_divides(&g, r),
            _ => r.is_zero(),
        },
        (Backend::Staged, Element::Poly(r)) => match &i.ring {
            RingId::StagedRing(h) => staged_membership(h, r)?,
            _ => unreachable!("staged backend"),
        },
        _ => unreachable!("validated"),
    })
}

/// `(I : a) = { r : r a ∈ I }`.
pub fn ideal_quotient(i: &FgIdeal, a: &Element) -> Result<FgIdeal, IdealError> {
    i.ring.validate(a)?;
    match (i.backend, a) {
        (Backend::Integers, Element::Int(a)) => {
            let m = int_generator(i);
            let q = if a.is_zero() {
                BigInt::one()
            } else {
                &m / m.gcd(a)
            };
            Ok(FgIdeal::new(RingId::Integers, vec![Element::Int(q)])?)
        }
        (Backend::Modular, Element::Mod(a)) => {
            let d = mod_generator(i);
            let q = d / d.gcd(a);
            Ok(FgIdeal::new(
                i.ring.clone(),
                vec![Element::Mod(q % i.modulus())],
            )?)
        }
        (Backend::Univariate, Element::Poly(a)) => {
            let f = poly_generator(i);
            let q = if a.is_zero() {
                MultiPoly::one()
            } else {
                let g = euclid_gcd(&QPoly, &f, a);
                QPoly.div_exact(&f, &g).expect("gcd divides")
            };
            Ok(FgIdeal::new(
                i.ring.clone(),
                vec![Element::Poly(QPoly.normalize(&q))],
            )?)
        }
        (Backend::Monomial, Element::Poly(a)) => {
            if a.is_zero() {
                return Ok(monomial_ideal(&[ExponentVector::one()]));
            }
            let (beta, _) = a
                .as_monomial()
                .ok_or(undecidable("quotient by a non-monomial", Backend::Monomial))?;
            let exps: Vec<ExponentVector> = monomial_exponents(i)
                .iter()
                .map(|e| e.saturating_sub(beta))
                .collect();
            Ok(monomial_ideal(&minimalize(exps)))
        }
        (b, _) => Err(undecidable("ideal quotient", b)),
    }
}

/// `√I`.
pub fn radical(i: &FgIdeal) -> Result<FgIdeal, IdealError> {
    match i.backend {
        Backend::Integers => Ok(FgIdeal::new(
            RingId::Integers,
            vec![Element::Int(squarefree_kernel(&int_generator(i)))],
        )?),
        Backend::Modular => {
            let n = i.modulus();
            let m = Modular::new(n)?;
            let members = member_set(i);
            // exponents up to n suffice: a^k for k ≥ n repeats an earlier power pattern
            let rad: Vec<u64> = m
                .elements()
                .filter(|&a| (1..=n.max(1)).any(|k| members.contains(&mod_pow(a, k, n))))
                .collect();
            let g = rad.iter().fold(n, |g, &a| g.gcd(&a));
            Ok(FgIdeal::new(i.ring.clone(), vec![Element::Mod(g % n)])?)
        }
        Backend::Monomial => {
            let exps: Vec<ExponentVector> = monomial_exponents(i)
                .iter()
                .map(|e| e.squarefree())
                .collect();
            Ok(monomial_ideal(&minimalize(exps)))
        }
        Backend::Univariate => {
            let f = poly_generator(i);
            Ok(FgIdeal::new(
                i.ring.clone(),
                vec![Element::Poly(squarefree_part(&f)?)],
            )?)
        }
        b => Err(undecidable("radical", b)),
    }
}

fn mod_pow(a: u64, k: u64, n: u64) -> u64 {
    let m = Modular { n };
    crate::ring::power(&m, &(a % n), k)
}

/// Residues in the ideal of `Z/n`.
fn member_set(i: &FgIdeal) -> BTreeSet<u64> {
    let n = i.modulus();
    let d = mod_generator(i);
    (0..n).filter(|r| r % d == 0).collect()
}

/// Ideal flags, with witnesses against primality and primariness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealClass {
    pub prime: bool,
    pub primary: bool,
    pub semiprime: bool,
    /// `None` where no decision procedure is implemented.
    pub primal: Option<bool>,
    pub maximal: bool,
    /// The adjoint `{a : ∃ b ∉ I, ab ∈ I}` for finite rings.
    pub adjoint: Option<Vec<Element>>,
    /// `(a, b)` with `ab ∈ I`, `a, b ∉ I`.
    pub prime_witness: Option<(Element, Element)>,
    /// `(a, b)` with `ab ∈ I`, `a ∉ I` and no power of `b` in `I`.
    pub primary_witness: Option<(Element, Element)>,
}

/// Classifies `I` exhaustively in `Z/n`, through `m` in `Z = mZ`, and
/// combinatorially for monomial ideals.
pub fn classify_ideal(i: &FgIdeal) -> Result<IdealClass, IdealError> {
    match i.backend {
        Backend::Integers => Ok(classify_integers(&int_generator(i))),
        Backend::Modular => Ok(classify_modular(i.modulus(), mod_generator(i))),
        Backend::Monomial => Ok(classify_monomial(&monomial_exponents(i))),
        b => Err(undecidable("classification", b)),
    }
}

fn classify_integers(m: &BigInt) -> IdealClass {
    let m = m.abs();
    if m.is_zero() {
        // Z is a domain: (0) is prime and its adjoint is (0)
        return IdealClass {
            prime: true,
            primary: true,
            semiprime: true,
            primal: Some(true),
            maximal: false,
            adjoint: None,
            prime_witness: None,
            primary_witness: None,
        };
    }
    if m.is_one() {
        return IdealClass {
            prime: true,
            primary: true,
            semiprime: true,
            primal: Some(false),
            maximal: false,
            adjoint: Some(Vec::new()),
            prime_witness: None,
            primary_witness: None,
        };
    }
    let prime = is_prime(&m);
    let primary = is_prime_power(&m);
    // residues suffice for witnesses; a power of b lies in mZ iff rad(m) | b
    let witness = |need_primary: bool| -> Option<(Element, Element)> {
        let mu = m.to_u64()?;
        if mu > 10_000 {
            return None;
        }
        let kernel = squarefree_kernel(&m).to_u64()?;
        for sum in 2..2 * mu {
            for b in 1..mu.min(sum) {
                let a = sum - b;
                if a >= mu {
                    continue;
                }
                let b_fails = if need_primary { b % kernel != 0 } else { true };
                if (a * b) % mu == 0 && b_fails {
                    return Some((Element::int(a as i64), Element::int(b as i64)));
                }
            }
        }
        None
    };
    IdealClass {
        prime,
        primary,
        semiprime: squarefree_kernel(&m) == m,
        // the adjoint is the union of (p) over primes p | m
        primal: Some(primary),
        maximal: prime,
        adjoint: None,
        prime_witness: if prime { None } else { witness(false) },
        primary_witness: if primary { None } else { witness(true) },
    }
}

fn classify_modular(n: u64, d: u64) -> IdealClass {
    let member = |r: u64| r.is_multiple_of(d);
    let has_power: Vec<bool> = (0..n)
        .map(|b| (1..=n).any(|k| member(mod_pow(b, k, n))))
        .collect();
    let mut prime_witness = None;
    let mut primary_witness = None;
    let mut adjoint = BTreeSet::new();
    for a in 0..n {
        for b in 0..n {
            if !member((a * b) % n) {
                continue;
            }
            if !member(b) {
                adjoint.insert(a);
            }
            if !member(a) && !member(b) {
                prime_witness.get_or_insert((a, b));
            }
            if !member(a) && !has_power[b as usize] {
                primary_witness.get_or_insert((a, b));
            }
        }
    }
    let semiprime = (0..n).all(|a| member(a) || !has_power[a as usize]);
    let proper = d != 1;
    // (e) lies strictly between (d) and (1) iff e | d with e ∉ {1, d}
    let maximal = proper && divisors_u64(d).iter().all(|&e| e == 1 || e == d);
    // additive subgroups of Z/n are ideals
    let adjoint_is_ideal = adjoint.contains(&0)
        && adjoint
            .iter()
            .all(|&a| adjoint.iter().all(|&b| adjoint.contains(&((a + b) % n))));
    IdealClass {
        prime: prime_witness.is_none(),
        primary: primary_witness.is_none(),
        semiprime,
        primal: Some(adjoint_is_ideal),
        maximal,
        adjoint: Some(adjoint.into_iter().map(Element::Mod).collect()),
        prime_witness: prime_witness.map(|(a, b)| (Element::Mod(a), Element::Mod(b))),
        primary_witness: primary_witness.map(|(a, b)| (Element::Mod(a), Element::Mod(b))),
    }
}

fn classify_monomial(exps: &[ExponentVector]) -> IdealClass {
    let unit = exps.iter().any(|e| e.is_one());
    if unit {
        return IdealClass {
            prime: true,
            primary: true,
            semiprime: true,
            primal: Some(false),
            maximal: false,
            adjoint: None,
            prime_witness: None,
            primary_witness: None,
        };
    }
    let prime = exps.iter().all(|e| e.degree() == 1);
    let semiprime = exps.iter().all(|e| e.squarefree() == *e);
    let vars: BTreeSet<usize> = exps
        .iter()
        .flat_map(|e| e.support().collect::<Vec<_>>())
        .collect();
    let pure: BTreeSet<usize> = exps
        .iter()
        .filter(|e| e.entries().len() == 1)
        .map(|e| e.entries()[0].0)
        .collect();
    let primary = vars.iter().all(|v| pure.contains(v));
    let mono = |e: ExponentVector| Element::Poly(MultiPoly::monomial(e, crate::arith::rat(1)));
    // a non-pure generator x^e splits as x_v^{e_v} * x^{e - e_v e_v}
    let split = exps.iter().find(|e| e.entries().len() > 1).map(|e| {
        let (v, k) = e.entries()[0];
        let head = ExponentVector::var(v, k);
        (e.checked_sub(&head).unwrap(), head)
    });
    let prime_witness = if prime {
        None
    } else if let Some((rest, head)) = split.clone() {
        Some((mono(head), mono(rest)))
    } else {
        // a pure power x_v^k with k > 1
        exps.iter().find(|e| e.degree() > 1).map(|e| {
            let (v, k) = e.entries()[0];
            (
                mono(ExponentVector::var(v, k - 1)),
                mono(ExponentVector::var(v, 1)),
            )
        })
    };
    let primary_witness = if primary {
        None
    } else {
        // some generator uses a variable v without a pure power of v in I
        exps.iter().find_map(|e| {
            let (v, k) = *e.entries().iter().find(|(v, _)| !pure.contains(v))?;
            let head = ExponentVector::var(v, k);
            Some((mono(e.checked_sub(&head).unwrap()), mono(head)))
        })
    };
    IdealClass {
        prime,
        primary,
        semiprime,
        primal: if primary { Some(true) } else { None },
        // Q[X] has infinitely many variables, so no monomial ideal is maximal
        maximal: false,
        adjoint: None,
        prime_witness,
        primary_witness,
    }
}

/// Comaximality with a certificate `i + j = 1`, `i ∈ I`, `j ∈ J`.
pub fn comaximal(
    i: &FgIdeal,
    j: &FgIdeal,
) -> Result<(bool, Option<(Element, Element)>), IdealError> {
    if i.ring != j.ring {
        return Err(IdealError::RingMismatch);
    }
    match i.backend {
        Backend::Integers => {
            let (a, b) = (int_generator(i), int_generator(j));
            Ok(match unit_combination(&Integers, &a, &b) {
                Some((x, y)) => (true, Some((Element::Int(&a * x), Element::Int(&b * y)))),
                None => (false, None),
            })
        }
        Backend::Univariate => {
            let (a, b) = (poly_generator(i), poly_generator(j));
            Ok(match unit_combination(&QPoly, &a, &b) {
                Some((x, y)) => (true, Some((Element::Poly(&a * &x), Element::Poly(&b * &y)))),
                None => (false, None),
            })
        }
        Backend::Modular => {
            let n = i.modulus();
            let (a, b) = (mod_generator(i), mod_generator(j));
            Ok(
                match unit_combination(&Integers, &BigInt::from(a), &BigInt::from(b)) {
                    Some((x, y)) => {
                        let m = Modular { n };
                        let x = m.reduce(&x);
                        let y = m.reduce(&y);
                        (
                            true,
                            Some((Element::Mod(a * x % n), Element::Mod(b * y % n))),
                        )
                    }
                    None => (false, None),
                },
            )
        }
        b => Err(undecidable("comaximality", b)),
    }
}

/// `R/I` with canonical representatives.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientRing {
    base: RingId,
    ideal: FgIdeal,
    modulus: Element,
}

pub fn quotient_ring(ideal: &FgIdeal) -> Result<QuotientRing, IdealError> {
    let modulus = match ideal.backend {
        Backend::Integers => Element::Int(int_generator(ideal)),
        Backend::Univariate => Element::Poly(poly_generator(ideal)),
        b => return Err(undecidable("quotient ring", b)),
    };
    Ok(QuotientRing {
        base: ideal.ring.clone(),
        ideal: ideal.clone(),
        modulus,
    })
}

impl QuotientRing {
    pub fn base(&self) -> &RingId {
        &self.base
    }

    pub fn ideal(&self) -> &FgIdeal {
        &self.ideal
    }

    /// The canonical representative `q(r)`: least non-negative residue, or
    /// remainder of long division. The zero ideal gives the identity.
    pub fn reduce(&self, r: &Element) -> Result<Element, IdealError> {
        self.base.validate(r)?;
        Ok(match (&self.modulus, r) {
            (Element::Int(m), Element::Int(r)) if !m.is_zero() => Element::Int(r.mod_floor(m)),
            (Element::Poly(f), Element::Poly(r)) if !f.is_zero() => {
                Element::Poly(divide_long(r, f)?.remainder)
            }
            _ => r.clone(),
        })
    }

    pub fn add(&self, a: &Element, b: &Element) -> Result<Element, IdealError> {
        self.reduce(&self.base.add(a, b)?)
    }

    pub fn mul(&self, a: &Element, b: &Element) -> Result<Element, IdealError> {
        self.reduce(&self.base.mul(a, b)?)
    }

    pub fn neg(&self, a: &Element) -> Result<Element, IdealError> {
        self.reduce(&self.base.neg(a)?)
    }

    pub fn equal(&self, a: &Element, b: &Element) -> Result<bool, IdealError> {
        Ok(self.reduce(a)? == self.reduce(b)?)
    }
}

/// One pair of the correspondence between ideals `dZ ⊇ nZ` and ideals of `Z/n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorrespondencePair {
    pub d: u64,
    pub upstairs: FgIdeal,
    pub downstairs: FgIdeal,
}

/// The pairs `(dZ, (d) ⊆ Z/n)` over the divisors `d | n`, ascending.
pub fn ideal_correspondence(n: u64) -> Result<Vec<CorrespondencePair>, IdealError> {
    let ring = RingId::modular(n)?;
    divisors_u64(n)
        .into_iter()
        .map(|d| {
            Ok(CorrespondencePair {
                d,
                upstairs: FgIdeal::integers(&[d as i64]),
                downstairs: FgIdeal::new(ring.clone(), vec![Element::Mod(d % n)])?,
            })
        })
        .collect()
}

/// A proper ideal strictly containing `√I`, with least positive generator,
/// or `None` when `√I` is maximal or `I` is the whole ring.
pub fn proper_extension(i: &FgIdeal) -> Result<Option<FgIdeal>, IdealError> {
    if i.backend != Backend::Modular {
        return Err(IdealError::NotFiniteRing);
    }
    let n = i.modulus();
    let r = match principal(&radical(i)?)? {
        Some(Element::Mod(r)) => {
            if r == 0 {
                n
            } else {
                r
            }
        }
        _ => unreachable!("modular ideals are principal"),
    };
    // (e) ⊋ (r) and proper iff e | r, e ∉ {1, r}
    let e = divisors_u64(r).into_iter().find(|&e| e != 1 && e != r);
    e.map(|e| FgIdeal::new(i.ring.clone(), vec![Element::Mod(e % n)]))
        .transpose()
}

/// Whether every proper ideal of `Z/n` strictly containing `√0` contains a
/// non-zero-divisor, by exhaustion over all ideals.
pub fn extensions_contain_nonzerodivisor(n: u64) -> Result<bool, IdealError> {
    let m = Modular::new(n)?;
    let zero = FgIdeal::modular(n, &[0])?;
    let nil = member_set(&radical(&zero)?);
    for d in divisors_u64(n) {
        let j = FgIdeal::modular(n, &[d])?;
        let members = member_set(&j);
        let proper = !members.contains(&(1 % n));
        let strictly_above = nil.is_subset(&members) && nil != members;
        if proper && strictly_above && !members.iter().any(|&a| !m.is_zero_divisor(a)) {
            return Ok(false);
        }
    }
    Ok(true)
}
