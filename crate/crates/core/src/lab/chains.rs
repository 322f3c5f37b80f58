//! Uniformly enumerated chains of ideals `I_0 ⊆ I_1 ⊆ ...` with decidable
//! membership, for the strictification and stabilisation searches.

use std::fmt;
use std::hash::Hash;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use super::LabError;
use crate::frac::integer_at;
use crate::poly::{ExponentVector, MultiPoly};

pub trait Sigma1Chain {
    type Elem: Clone + Eq + Hash + fmt::Debug + fmt::Display;

    /// The `t`-th element enumerated into `I_k`.
    fn enumerate(&self, k: usize, t: usize) -> Self::Elem;

    fn contains(&self, k: usize, e: &Self::Elem) -> bool;

    /// Membership in the ideal generated by a finite set.
    fn in_generated(&self, gens: &[Self::Elem], e: &Self::Elem) -> bool;
}

type MonomialGens = Arc<dyn Fn(usize) -> Vec<ExponentVector> + Send + Sync>;

/// Monomial ideals `I_k = (G_k)` in `Q[x_0, x_1, ...]`, elements carried as
/// monic monomials.
///
/// `I_k` enumerates `G_k` first, newest generator first, then `G_k x_0`,
/// `G_k x_1`, and so on.
#[derive(Clone)]
pub struct MonomialChain {
    gens: MonomialGens,
}

impl fmt::Debug for MonomialChain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let first: Vec<String> = (0..3).map(|k| format!("{:?}", (self.gens)(k))).collect();
        write!(f, "MonomialChain[{}, ...]", first.join(", "))
    }
}

impl MonomialChain {
    /// `I_k` generated by `gens(k)`; the caller keeps the chain increasing.
    pub fn from_fn(gens: impl Fn(usize) -> Vec<ExponentVector> + Send + Sync + 'static) -> Self {
        Self {
            gens: Arc::new(gens),
        }
    }

    /// `I_k = (x_0, ..., x_{g(k)})` for a nondecreasing `g`.
    pub fn prefix_variables(g: impl Fn(usize) -> usize + Send + Sync + 'static) -> Self {
        Self::from_fn(move |k| (0..=g(k)).map(|i| ExponentVector::var(i, 1)).collect())
    }

    /// `I_k = (a_0, ..., a_k)`, constant once the sequence runs out.
    pub fn from_sequence(seq: Vec<ExponentVector>) -> Self {
        Self::from_fn(move |k| seq[..(k + 1).min(seq.len())].to_vec())
    }

    pub fn generators(&self, k: usize) -> Vec<ExponentVector> {
        (self.gens)(k)
    }
}

fn monomial(e: ExponentVector) -> MultiPoly {
    MultiPoly::monomial(e, crate::arith::rat(1))
}

fn as_exponent(p: &MultiPoly) -> Option<&ExponentVector> {
    p.as_monomial().map(|(e, _)| e)
}

fn monomial_in(gens: impl IntoIterator<Item = ExponentVector>, e: &MultiPoly) -> bool {
    if e.is_zero() {
        return true;
    }
    match as_exponent(e) {
        Some(x) => gens.into_iter().any(|g| g.divides(x)),
        None => false,
    }
}

impl Sigma1Chain for MonomialChain {
    type Elem = MultiPoly;

    fn enumerate(&self, k: usize, t: usize) -> MultiPoly {
        let g = self.generators(k);
        if g.is_empty() {
            return MultiPoly::zero();
        }
        let (q, r) = (t / g.len(), t % g.len());
        let gen = &g[g.len() - 1 - r];
        if q == 0 {
            monomial(gen.clone())
        } else {
            monomial(gen + &ExponentVector::var(q - 1, 1))
        }
    }

    fn contains(&self, k: usize, e: &MultiPoly) -> bool {
        monomial_in(self.generators(k), e)
    }

    fn in_generated(&self, gens: &[MultiPoly], e: &MultiPoly) -> bool {
        monomial_in(gens.iter().filter_map(as_exponent).cloned(), e)
    }
}

/// Principal ideals `I_k = (g(k))` of the integers.
#[derive(Clone)]
pub struct IntegerChain {
    gens: Arc<dyn Fn(usize) -> BigInt + Send + Sync>,
}

impl fmt::Debug for IntegerChain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let first: Vec<String> = (0..3).map(|k| (self.gens)(k).to_string()).collect();
        write!(f, "IntegerChain[{}, ...]", first.join(", "))
    }
}

impl IntegerChain {
    pub fn from_fn(g: impl Fn(usize) -> BigInt + Send + Sync + 'static) -> Self {
        Self { gens: Arc::new(g) }
    }

    /// Generators from a list, the last one repeating forever.
    pub fn from_list(list: &[i64]) -> Self {
        let v: Vec<BigInt> = list.iter().map(|&x| BigInt::from(x)).collect();
        Self::from_fn(move |k| v[k.min(v.len() - 1)].clone())
    }

    pub fn generator(&self, k: usize) -> BigInt {
        (self.gens)(k)
    }
}

impl Sigma1Chain for IntegerChain {
    type Elem = BigInt;

    fn enumerate(&self, k: usize, t: usize) -> BigInt {
        self.generator(k) * integer_at(t as u64)
    }

    fn contains(&self, k: usize, e: &BigInt) -> bool {
        self.in_generated(&[self.generator(k)], e)
    }

    fn in_generated(&self, gens: &[BigInt], e: &BigInt) -> bool {
        let g = gens.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
        if g.is_zero() {
            e.is_zero()
        } else {
            e.is_multiple_of(&g)
        }
    }
}

/// A strictly increasing subchain `I_{n_0} ⊊ I_{n_1} ⊊ ...`;
/// `witnesses[j] ∈ I_{n_{j+1}} ∖ I_{n_j}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Strictification<E> {
    pub indices: Vec<usize>,
    pub witnesses: Vec<E>,
}

/// Greedy strict subchain among `I_0, ..., I_budget`, probing the first
/// `budget` enumerated elements of each ideal.
pub fn strictify_chain<C: Sigma1Chain>(
    chain: &C,
    budget: usize,
) -> Result<Strictification<C::Elem>, LabError> {
    let mut indices = vec![0];
    let mut witnesses = Vec::new();
    let mut current = 0;
    for n in 1..=budget {
        let fresh = (0..budget)
            .map(|t| chain.enumerate(n, t))
            .find(|e| !chain.contains(current, e));
        if let Some(w) = fresh {
            indices.push(n);
            witnesses.push(w);
            current = n;
        }
    }
    if witnesses.is_empty() {
        return Err(LabError::StabilizedWithinBudget { stage: 0 });
    }
    Ok(Strictification { indices, witnesses })
}

/// `(a_0) ⊆ (a_0, a_1) ⊆ ...` from a sequence of monomials; for a bad
/// sequence every step is strict, witnessed by the next element.
pub fn bad_seq_to_chain(seq: &[ExponentVector]) -> MonomialChain {
    MonomialChain::from_sequence(seq.to_vec())
}

/// The least `n` with every listed generator in `I_n`, searching
/// `I_0, ..., I_budget`.
pub fn chain_stabilization<C: Sigma1Chain>(
    chain: &C,
    union_generators: &[C::Elem],
    budget: usize,
) -> Result<usize, LabError> {
    let mut n = 0;
    for (index, g) in union_generators.iter().enumerate() {
        let k = (0..=budget)
            .find(|&k| chain.contains(k, g))
            .ok_or(LabError::GeneratorNotFound { index })?;
        n = n.max(k);
    }
    debug_assert!(union_generators.iter().all(|g| chain.contains(n, g)));
    Ok(n)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(i: usize) -> MultiPoly {
        MultiPoly::var(i)
    }

    #[test]
    fn monomial_enumeration() {
        let c = MonomialChain::prefix_variables(|k| k);
        let got: Vec<MultiPoly> = (0..5).map(|t| c.enumerate(1, t)).collect();
        let want: Vec<MultiPoly> = ["x1", "x0", "x0*x1", "x0^2", "x1^2"]
            .iter()
            .map(|s| s.parse().unwrap())
            .collect();
        assert_eq!(got, want);
        for t in 0..40 {
            assert!(c.contains(1, &c.enumerate(1, t)));
        }
        assert!(!c.contains(1, &x(2)));
    }

    #[test]
    fn strictify_half_chain() {
        let c = MonomialChain::prefix_variables(|n| n / 2);
        let s = strictify_chain(&c, 20).unwrap();
        assert_eq!(s.indices, (0..=20).step_by(2).collect::<Vec<_>>());
        let want: Vec<MultiPoly> = (1..=10).map(x).collect();
        assert_eq!(s.witnesses, want);
        for (j, w) in s.witnesses.iter().enumerate() {
            assert!(c.contains(s.indices[j + 1], w));
            assert!(!c.contains(s.indices[j], w));
        }
    }

    #[test]
    fn constant_chain_stabilises() {
        let c = MonomialChain::prefix_variables(|_| 3);
        assert_eq!(
            strictify_chain(&c, 10),
            Err(LabError::StabilizedWithinBudget { stage: 0 })
        );
        let z = IntegerChain::from_list(&[6]);
        assert_eq!(
            strictify_chain(&z, 10),
            Err(LabError::StabilizedWithinBudget { stage: 0 })
        );
    }

    #[test]
    fn bad_sequence_round_trip() {
        let seq: Vec<ExponentVector> = [3usize, 1, 4, 0, 5]
            .iter()
            .map(|&i| ExponentVector::var(i, 1))
            .collect();
        let c = bad_seq_to_chain(&seq);
        for k in 0..seq.len() - 1 {
            let next = monomial(seq[k + 1].clone());
            assert!(c.contains(k + 1, &next));
            assert!(!c.contains(k, &next));
        }
        let s = strictify_chain(&c, 6).unwrap();
        assert_eq!(s.indices, vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn stabilization_examples() {
        let z = IntegerChain::from_list(&[4, 2]);
        assert_eq!(chain_stabilization(&z, &[BigInt::from(2)], 10), Ok(1));
        assert_eq!(chain_stabilization(&z, &[BigInt::from(4)], 10), Ok(0));
        assert_eq!(
            chain_stabilization(&z, &[BigInt::from(3)], 10),
            Err(LabError::GeneratorNotFound { index: 0 })
        );
        let c = MonomialChain::prefix_variables(|n| n / 2);
        assert_eq!(chain_stabilization(&c, &[x(0), x(1)], 10), Ok(2));
    }

    #[test]
    fn integer_chain_membership() {
        let z = IntegerChain::from_list(&[12, 6, 3]);
        assert_eq!(z.enumerate(1, 2), BigInt::from(-6));
        assert!(z.contains(2, &BigInt::from(9)));
        assert!(!z.contains(1, &BigInt::from(9)));
        assert!(z.in_generated(&[BigInt::from(4), BigInt::from(6)], &BigInt::from(2)));
        assert!(z.in_generated(&[], &BigInt::zero()));
    }
}
