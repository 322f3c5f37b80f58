//! The principal ideal domain `T`: the localisation of `Q[x0, x1, ...]` at
//! the set `M` of polynomials lying in none of the ideals `(x_i)`.
//!
//! Every nonzero polynomial factors as `x^β m` with `β` the meet of its
//! support and `m ∈ M`, so up to units every element of `T` is a monic
//! monomial and divisibility is the pointwise order on exponent vectors.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::One;
use thiserror::Error;

use crate::arith::Rational;
use crate::lab::schedule::StageEnumeration;
use crate::poly::{meet_exponents, ExponentVector, MultiPoly, PolyError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PidTError {
    #[error("denominator {0} is not in M")]
    DenominatorNotInM(String),
    #[error("the zero element has no normal form")]
    ZeroElement,
    #[error("every generator is zero")]
    AllZero,
    #[error("schedule for index {index} enumerates at stage 0; stages start at 1")]
    StageZeroEntry { index: usize },
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// `p ∈ M`: `p != 0` and every variable occurring in `p` is omitted by some
/// term, i.e. the support has meet zero.
#[allow(non_snake_case)]
pub fn in_M(p: &MultiPoly) -> bool {
    meet_exponents(p.support()).is_ok_and(|m| m.is_one())
}

/// A fraction `num / den` with `den ∈ M`. Equality is cross-multiplication.
#[derive(Clone)]
pub struct TElement {
    num: MultiPoly,
    den: MultiPoly,
}

impl TElement {
    pub fn new(num: MultiPoly, den: MultiPoly) -> Result<Self, PidTError> {
        if !in_M(&den) {
            return Err(PidTError::DenominatorNotInM(den.to_string()));
        }
        Ok(Self { num, den })
    }

    pub fn from_poly(p: MultiPoly) -> Self {
        Self {
            num: p,
            den: MultiPoly::one(),
        }
    }

    pub fn monomial(beta: &ExponentVector) -> Self {
        Self::from_poly(MultiPoly::monomial(beta.clone(), Rational::one()))
    }

    pub fn zero() -> Self {
        Self::from_poly(MultiPoly::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(MultiPoly::one())
    }

    pub fn numerator(&self) -> &MultiPoly {
        &self.num
    }

    pub fn denominator(&self) -> &MultiPoly {
        &self.den
    }

    pub fn is_valid(&self) -> bool {
        in_M(&self.den)
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.den == other.den {
            return Self {
                num: &self.num + &other.num,
                den: self.den.clone(),
            };
        }
        Self {
            num: &(&self.num * &other.den) + &(&other.num * &self.den),
            den: &self.den * &other.den,
        }
    }

    pub fn neg(&self) -> Self {
        Self {
            num: -&self.num,
            den: self.den.clone(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    /// Cancels a numerator against the other denominator when one is a
    /// scalar multiple of the other.
    pub fn mul(&self, other: &Self) -> Self {
        let mut scale = Rational::one();
        let mut num = MultiPoly::one();
        let mut den = MultiPoly::one();
        for (n, d) in [(&self.num, &other.den), (&other.num, &self.den)] {
            match scalar_ratio(n, d) {
                Some(q) => scale *= q,
                None => {
                    num = &num * n;
                    den = &den * d;
                }
            }
        }
        Self {
            num: num.scale(&scale),
            den,
        }
    }

    /// `β`, the exponent of the monomial part; `None` for zero.
    pub fn beta(&self) -> Option<ExponentVector> {
        meet_exponents(self.num.support()).ok()
    }

    pub fn is_unit(&self) -> bool {
        self.beta().is_some_and(|b| b.is_one())
    }

    /// Associates share the same `β` (and zero is associate only to zero).
    pub fn associate_to(&self, other: &Self) -> bool {
        self.beta() == other.beta()
    }
}

impl PartialEq for TElement {
    fn eq(&self, other: &Self) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }
}

impl Eq for TElement {}

impl fmt::Debug for TElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TElement({self})")
    }
}

impl fmt::Display for TElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

/// Parses `p` or `(p)/(q)`.
impl FromStr for TElement {
    type Err = PidTError;
    fn from_str(s: &str) -> Result<Self, PidTError> {
        let s = s.trim();
        if let Some(split) = s.rfind(")/(") {
            if s.starts_with('(') && s.ends_with(')') {
                let num: MultiPoly = s[1..split].parse()?;
                let den: MultiPoly = s[split + 3..s.len() - 1].parse()?;
                return Self::new(num, den);
            }
        }
        let p = s
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .unwrap_or(s);
        Ok(Self::from_poly(p.parse()?))
    }
}

/// `q` with `a = q·b`, for nonzero `b`.
fn scalar_ratio(a: &MultiPoly, b: &MultiPoly) -> Option<Rational> {
    let (_, lb) = b.leading_term()?;
    let (_, la) = a.leading_term()?;
    let q = la / lb;
    (a.num_terms() == b.num_terms() && *a == b.scale(&q)).then_some(q)
}

/// `t = x^β · unit_num / unit_den` with both unit parts in `M`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalForm {
    pub beta: ExponentVector,
    pub unit_num: MultiPoly,
    pub unit_den: MultiPoly,
}

impl NormalForm {
    pub fn to_element(&self) -> TElement {
        TElement {
            num: &MultiPoly::monomial(self.beta.clone(), Rational::one()) * &self.unit_num,
            den: self.unit_den.clone(),
        }
    }
}

pub fn normal_form(t: &TElement) -> Result<NormalForm, PidTError> {
    let beta = t.beta().ok_or(PidTError::ZeroElement)?;
    let unit_num = t.num.div_monomial(&beta).expect("β divides every term");
    Ok(NormalForm {
        beta,
        unit_num,
        unit_den: t.den.clone(),
    })
}

/// `a | b` in `T`: `β(a) ≤ β(b)`; `0 | b` only for `b = 0`.
pub fn t_divides(a: &TElement, b: &TElement) -> bool {
    match (a.beta(), b.beta()) {
        (None, _) => b.is_zero(),
        (Some(_), None) => true,
        (Some(x), Some(y)) => x.divides(&y),
    }
}

/// The quotient `b / a` when `a | b` and `a != 0`.
pub fn t_quotient(b: &TElement, a: &TElement) -> Option<TElement> {
    if b.is_zero() {
        return (!a.is_zero()).then(TElement::zero);
    }
    let na = normal_form(a).ok()?;
    let nb = normal_form(b).ok()?;
    let gap = nb.beta.checked_sub(&na.beta)?;
    Some(TElement {
        num: &(&MultiPoly::monomial(gap, Rational::one()) * &nb.unit_num) * &na.unit_den,
        den: &nb.unit_den * &na.unit_num,
    })
}

/// `x^α` with `α` the meet of the generators' exponents, together with
/// coefficients `c_i` such that `x^α = Σ c_i g_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrincipalCertificate {
    pub generator: TElement,
    pub alpha: ExponentVector,
    pub coefficients: Vec<TElement>,
}

impl PrincipalCertificate {
    /// Checks `x^α = Σ c_i g_i` and `x^α | g_i` for every generator.
    pub fn verify(&self, generators: &[TElement]) -> bool {
        if generators.len() != self.coefficients.len() {
            return false;
        }
        let combo = generators
            .iter()
            .zip(&self.coefficients)
            .fold(TElement::zero(), |acc, (g, c)| acc.add(&c.mul(g)));
        combo == self.generator && generators.iter().all(|g| t_divides(&self.generator, g))
    }
}

/// Principal generator of the ideal `(g_1, ..., g_k)` of `T`.
///
/// For each variable `v` occurring in some `β_j`, choose a generator
/// `j(v)` whose exponent of `v` equals `α_v`. Then
/// `m = Σ_v x^(β_j(v) - α)` omits `x_v` in its `v`-th term, so `m ∈ M`, and
/// `x^α = Σ_v x^(β_j(v)) / m`. Writing `x^(β_j) = g_j · d_j / n_j` with
/// `n_j / d_j` the unit part of `g_j` gives the coefficients.
pub fn t_principal_generator(generators: &[TElement]) -> Result<PrincipalCertificate, PidTError> {
    let forms: Vec<Option<NormalForm>> = generators.iter().map(|g| normal_form(g).ok()).collect();
    let nonzero: Vec<(usize, &NormalForm)> = forms
        .iter()
        .enumerate()
        .filter_map(|(i, f)| f.as_ref().map(|f| (i, f)))
        .collect();
    if nonzero.is_empty() {
        return Err(PidTError::AllZero);
    }
    let alpha = meet_exponents(nonzero.iter().map(|(_, f)| &f.beta))?;
    let mut variables: Vec<usize> = nonzero
        .iter()
        .flat_map(|(_, f)| f.beta.support().collect::<Vec<_>>())
        .collect();
    variables.sort_unstable();
    variables.dedup();
    let mut chosen: Vec<usize> = variables
        .iter()
        .map(|&v| {
            nonzero
                .iter()
                .find(|(_, f)| f.beta.get(v) == alpha.get(v))
                .map(|&(i, _)| i)
                .expect("the meet is attained in every coordinate")
        })
        .collect();
    if chosen.is_empty() {
        // every β is zero: any nonzero generator is a unit
        chosen.push(nonzero[0].0);
    }
    let mut uses: BTreeMap<usize, u32> = BTreeMap::new();
    let mut m = MultiPoly::zero();
    for &j in &chosen {
        let f = forms[j].as_ref().unwrap();
        m = &m + &MultiPoly::monomial(f.beta.checked_sub(&alpha).unwrap(), Rational::one());
        *uses.entry(j).or_default() += 1;
    }
    debug_assert!(in_M(&m));
    let coefficients = forms
        .iter()
        .enumerate()
        .map(|(j, f)| match (f, uses.get(&j)) {
            (Some(f), Some(&count)) => TElement {
                num: f.unit_den.scale(&Rational::from_integer(count.into())),
                den: &f.unit_num * &m,
            },
            _ => TElement::zero(),
        })
        .collect();
    Ok(PrincipalCertificate {
        generator: TElement::monomial(&alpha),
        alpha,
        coefficients,
    })
}

/// `gcd = x^(a ∧ b)` and `lcm = x^(a ∨ b)` for nonzero `a, b`.
pub fn t_gcd_lcm(a: &TElement, b: &TElement) -> Result<(TElement, TElement), PidTError> {
    let x = a.beta().ok_or(PidTError::ZeroElement)?;
    let y = b.beta().ok_or(PidTError::ZeroElement)?;
    Ok((
        TElement::monomial(&x.meet(&y)),
        TElement::monomial(&x.join(&y)),
    ))
}

/// In `T` localised further at `{x_n : n enumerated by the horizon}`, a
/// nonzero `t` is a unit iff every variable of `β(t)` has been enumerated.
pub fn localized_units(schedule: &StageEnumeration, t: &TElement, horizon: u64) -> bool {
    match t.beta() {
        None => false,
        Some(beta) => beta
            .support()
            .all(|v| schedule.contains_at(v as u64, horizon)),
    }
}

/// Status of `x_e` after replaying the splitting construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Pi2Status {
    /// `x_e = y_{e,t} z_{e,t}` with `y_{e,t}` still a non-unit.
    Reducible { split_stage: u64 },
    /// An element entered `W_e` at the horizon itself: the previous `y` was
    /// just localised and no later split is visible yet.
    IrreducibleAtHorizon,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pi2Index {
    pub status: Pi2Status,
    /// Stages `t` whose `y_{e,t}` has been made a unit, ascending.
    pub localized: Vec<u64>,
}

/// Replays the construction: `x_e = y_{e,0} z_{e,0}` at the start, and when
/// a new element enters `W_e` at stage `s`, the latest `y_{e,t}` is made a
/// unit and `x_e` is re-split as `y_{e,s} z_{e,s}`. The new split becomes
/// visible at stage `s + 1`, so at horizon `h` the status reflects all
/// events at stages `<= h` with the split of an event at `h` still pending.
pub fn pi2_simulate(w: &[StageEnumeration], horizon: u64) -> Result<Vec<Pi2Index>, PidTError> {
    w.iter()
        .enumerate()
        .map(|(index, we)| {
            if we.entries().first().is_some_and(|&(_, s)| s == 0) {
                return Err(PidTError::StageZeroEntry { index });
            }
            let mut latest = 0u64;
            let mut localized = Vec::new();
            let mut pending = false;
            for s in 1..=horizon {
                if we.entering_at(s).is_empty() {
                    continue;
                }
                localized.push(latest);
                latest = s;
                pending = s == horizon;
            }
            let status = if pending {
                Pi2Status::IrreducibleAtHorizon
            } else {
                Pi2Status::Reducible {
                    split_stage: latest,
                }
            };
            Ok(Pi2Index { status, localized })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> MultiPoly {
        s.parse().unwrap()
    }

    fn t(s: &str) -> TElement {
        s.parse().unwrap()
    }

    fn ev(d: &[u32]) -> ExponentVector {
        ExponentVector::from_dense(d)
    }

    #[test]
    fn membership_in_m() {
        assert!(in_M(&p("x0 + x1")));
        assert!(!in_M(&p("x0")));
        assert!(in_M(&p("1")));
        assert!(!in_M(&p("0")));
        assert!(!in_M(&p("x0*x1 + x0")));
    }

    #[test]
    fn normal_form_examples() {
        let nf = normal_form(&t("x0^2*x1 + x0*x1^2")).unwrap();
        assert_eq!(nf.beta, ev(&[1, 1]));
        assert_eq!(nf.unit_num, p("x0 + x1"));
        assert_eq!(nf.to_element(), t("x0^2*x1 + x0*x1^2"));
        let nf = normal_form(&t("(x0 + 1)/(x1 + 2)")).unwrap();
        assert!(nf.beta.is_one());
        let nf = normal_form(&t("(x0^3)/(x0 + x1)")).unwrap();
        assert_eq!(nf.beta, ev(&[3]));
        assert_eq!((nf.unit_num, nf.unit_den), (p("1"), p("x0 + x1")));
        assert_eq!(normal_form(&TElement::zero()), Err(PidTError::ZeroElement));
    }

    #[test]
    fn divisibility_examples() {
        assert!(t_divides(&t("x0"), &t("x0^2*x1")));
        assert!(!t_divides(&t("x0"), &t("x1")));
        assert!(t_divides(&t("x0 + x1"), &t("x3^4 - 7")));
        assert!(t_divides(&TElement::zero(), &TElement::zero()));
        assert!(!t_divides(&TElement::zero(), &t("1")));
        let q = t_quotient(&t("x0^2*x1"), &t("(x0)/(x1 + 1)")).unwrap();
        assert_eq!(q.mul(&t("(x0)/(x1 + 1)")), t("x0^2*x1"));
    }

    #[test]
    fn product_cancels_scalar_multiples() {
        let a = t("(2*x1 + 2)/(x0 + x2)");
        let b = t("(3*x0 + 3*x2)/(x1 + 1)");
        let ab = a.mul(&b);
        assert_eq!((ab.numerator(), ab.denominator()), (&p("6"), &p("1")));
        let c = t("(x0)/(x1 + 3)");
        let naive = TElement {
            num: &a.num * &c.num,
            den: &a.den * &c.den,
        };
        assert_eq!(a.mul(&c), naive);
        let s = a.add(&t("(x1)/(x0 + x2)"));
        assert_eq!(s.denominator(), &p("x0 + x2"));
        assert_eq!(s, t("(3*x1 + 2)/(x0 + x2)"));
    }

    #[test]
    fn principal_generator_examples() {
        let gens = vec![t("x0^2*x1"), t("x0*x1^2")];
        let c = t_principal_generator(&gens).unwrap();
        assert_eq!(c.generator, t("x0*x1"));
        assert!(c.verify(&gens));

        let gens = vec![t("x0"), t("x1")];
        let c = t_principal_generator(&gens).unwrap();
        assert_eq!(c.generator, TElement::one());
        assert!(c.verify(&gens));

        let gens = vec![t("(3*x0^2 + 3*x0*x2)/(x1 + 1)")];
        let c = t_principal_generator(&gens).unwrap();
        assert_eq!(c.alpha, ev(&[1]));
        assert!(c.verify(&gens));

        assert_eq!(
            t_principal_generator(&[TElement::zero()]),
            Err(PidTError::AllZero)
        );
    }

    #[test]
    fn localized_unit_examples() {
        let k = StageEnumeration::from_entries([(3, 5)]);
        assert!(localized_units(&k, &t("x3"), 5));
        assert!(!localized_units(&k, &t("x3"), 4));
        assert!(localized_units(&k, &t("7"), 0));
        assert!(!localized_units(&k, &t("x0*x3"), 100));
    }

    #[test]
    fn pi2_examples() {
        let empty = StageEnumeration::empty();
        let every = StageEnumeration::from_fn(0..50, |n| n + 1);
        for h in 0..10 {
            let r = pi2_simulate(&[empty.clone(), every.clone()], h).unwrap();
            assert_eq!(r[0].status, Pi2Status::Reducible { split_stage: 0 });
            if h == 0 {
                assert_eq!(r[1].status, Pi2Status::Reducible { split_stage: 0 });
            } else {
                assert_eq!(r[1].status, Pi2Status::IrreducibleAtHorizon);
                assert_eq!(r[1].localized.len() as u64, h);
            }
        }
        let finite = StageEnumeration::from_entries([(0, 2), (1, 4)]);
        let r = pi2_simulate(&[finite], 9).unwrap();
        assert_eq!(r[0].status, Pi2Status::Reducible { split_stage: 4 });
        assert_eq!(r[0].localized, vec![0, 2]);
        assert!(pi2_simulate(&[StageEnumeration::from_entries([(0, 0)])], 3).is_err());
    }
}
