use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashMap, HashSet};
use std::fmt::Debug;
use std::hash::Hash;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{FracError, MultiplicativeSet};

/// A ring presented by a stage-wise enumeration of its elements together
/// with the ring operations on enumerated elements.
///
/// `stage(s)` returns the elements first enumerated at stage `s`; across all
/// stages every element appears exactly once.
pub trait Enumerator {
    type Elem: Clone + Eq + Hash + Debug;

    fn stage(&mut self, s: u64) -> Vec<Self::Elem>;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
}

/// The k-th integer in the order `0, 1, -1, 2, -2, ...`.
pub fn integer_at(k: u64) -> BigInt {
    let half = BigInt::from(k.div_ceil(2));
    if k % 2 == 1 {
        half
    } else {
        -half
    }
}

/// `Z` enumerated as `0, 1, -1, 2, -2, ...`, one element per stage.
#[derive(Debug, Clone, Copy, Default)]
pub struct IntegerEnumerator;

impl Enumerator for IntegerEnumerator {
    type Elem = BigInt;
    fn stage(&mut self, s: u64) -> Vec<BigInt> {
        vec![integer_at(s)]
    }
    fn zero(&self) -> BigInt {
        BigInt::zero()
    }
    fn one(&self) -> BigInt {
        BigInt::one()
    }
    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a + b
    }
    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a * b
    }
    fn neg(&self, a: &BigInt) -> BigInt {
        -a
    }
}

/// The zero ring, whose only element appears at stage 0.
#[derive(Debug, Clone, Copy, Default)]
pub struct ZeroRingEnumerator;

impl Enumerator for ZeroRingEnumerator {
    type Elem = ();
    fn stage(&mut self, s: u64) -> Vec<()> {
        if s == 0 {
            vec![()]
        } else {
            Vec::new()
        }
    }
    fn zero(&self) {}
    fn one(&self) {}
    fn add(&self, _: &(), _: &()) {}
    fn mul(&self, _: &(), _: &()) {}
    fn neg(&self, _: &()) {}
}

/// `Z` localised at a multiplicative set, elements as reduced `(num, den)`
/// with `den > 0`.
///
/// Stage `s` enumerates the fractions `n_i / d_j` with `i + j = s`, where
/// `n_i` runs through the integers and `d_j` through the positive elements
/// of `M` in increasing order, skipping values already enumerated.
#[derive(Debug, Clone)]
pub struct LocalizedIntegers {
    set: MultiplicativeSet,
    factors: Vec<BigInt>,
    denominators: Vec<BigInt>,
    heap: BinaryHeap<Reverse<BigInt>>,
    queued: HashSet<BigInt>,
    emitted: HashSet<(BigInt, BigInt)>,
}

impl LocalizedIntegers {
    pub fn new(set: MultiplicativeSet) -> Result<Self, FracError> {
        if set.contains_zero() {
            return Err(FracError::ZeroDivisorInM);
        }
        let gens = set.integer_generators().ok_or(FracError::Unsupported)?;
        let mut factors: Vec<BigInt> = gens
            .iter()
            .map(|g| g.abs())
            .filter(|g| *g > BigInt::one())
            .collect();
        factors.sort();
        factors.dedup();
        let mut heap = BinaryHeap::new();
        heap.push(Reverse(BigInt::one()));
        Ok(Self {
            set,
            factors,
            denominators: Vec::new(),
            heap,
            queued: HashSet::from([BigInt::one()]),
            emitted: HashSet::new(),
        })
    }

    pub fn set(&self) -> &MultiplicativeSet {
        &self.set
    }

    /// The j-th positive element of `M` up to sign, ascending.
    fn denominator(&mut self, j: usize) -> Option<BigInt> {
        while self.denominators.len() <= j {
            let Reverse(x) = self.heap.pop()?;
            for f in &self.factors {
                let y = &x * f;
                if self.queued.insert(y.clone()) {
                    self.heap.push(Reverse(y));
                }
            }
            self.denominators.push(x);
        }
        Some(self.denominators[j].clone())
    }

    /// Whether the reduced fraction belongs to the localisation.
    pub fn contains(&self, e: &(BigInt, BigInt)) -> bool {
        let support = self.set.prime_support();
        e.1.is_positive()
            && crate::arith::factor_integer(&e.1)
                .iter()
                .all(|(p, _)| support.contains(p))
    }

    pub fn reduce(num: BigInt, den: BigInt) -> (BigInt, BigInt) {
        let g = num.gcd(&den);
        let (mut n, mut d) = (num / &g, den / &g);
        if d.is_negative() {
            n = -n;
            d = -d;
        }
        (n, d)
    }
}

impl Enumerator for LocalizedIntegers {
    type Elem = (BigInt, BigInt);

    fn stage(&mut self, s: u64) -> Vec<(BigInt, BigInt)> {
        let mut out = Vec::new();
        for j in 0..=s {
            let Some(d) = self.denominator(j as usize) else {
                break;
            };
            let e = Self::reduce(integer_at(s - j), d);
            if self.emitted.insert(e.clone()) {
                out.push(e);
            }
        }
        out
    }
    fn zero(&self) -> Self::Elem {
        (BigInt::zero(), BigInt::one())
    }
    fn one(&self) -> Self::Elem {
        (BigInt::one(), BigInt::one())
    }
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        Self::reduce(&a.0 * &b.1 + &b.0 * &a.1, &a.1 * &b.1)
    }
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        Self::reduce(&a.0 * &b.0, &a.1 * &b.1)
    }
    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        (-&a.0, a.1.clone())
    }
}

/// An index in the carrier together with the stage at which its element was
/// first enumerated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StageCost {
    pub index: usize,
    pub stage: u64,
}

/// A computable copy of an enumerated ring on carrier `{0, ..., k-1}`: index
/// `i` stands for the i-th element enumerated, and every operation runs the
/// enumeration until its result shows up.
#[derive(Debug, Clone)]
pub struct IndexedRing<E: Enumerator> {
    enumerator: E,
    listed: Vec<(E::Elem, u64)>,
    index: HashMap<E::Elem, usize>,
    next_stage: u64,
    budget: u64,
}

/// Indexes `enumerator`, allowing stages `0..=budget`. Fails unless at least
/// one element is enumerated within the budget.
pub fn index_structure<E: Enumerator>(
    enumerator: E,
    budget: u64,
) -> Result<IndexedRing<E>, FracError> {
    let mut ring = IndexedRing {
        enumerator,
        listed: Vec::new(),
        index: HashMap::new(),
        next_stage: 0,
        budget,
    };
    while ring.listed.is_empty() {
        if !ring.run_stage() {
            return Err(FracError::StageBudgetExhausted { budget });
        }
    }
    Ok(ring)
}

impl<E: Enumerator> IndexedRing<E> {
    fn run_stage(&mut self) -> bool {
        if self.next_stage > self.budget {
            return false;
        }
        let s = self.next_stage;
        for e in self.enumerator.stage(s) {
            self.index.insert(e.clone(), self.listed.len());
            self.listed.push((e, s));
        }
        self.next_stage += 1;
        true
    }

    /// Number of elements enumerated so far.
    pub fn carrier_len(&self) -> usize {
        self.listed.len()
    }

    /// Stages run so far.
    pub fn stages_run(&self) -> u64 {
        self.next_stage
    }

    /// The isomorphism `index -> element`.
    pub fn element(&self, i: usize) -> Result<&E::Elem, FracError> {
        self.listed
            .get(i)
            .map(|(e, _)| e)
            .ok_or(FracError::UnknownIndex(i))
    }

    /// Runs the enumeration until `e` appears.
    pub fn index_of(&mut self, e: &E::Elem) -> Result<StageCost, FracError> {
        loop {
            if let Some(&i) = self.index.get(e) {
                return Ok(StageCost {
                    index: i,
                    stage: self.listed[i].1,
                });
            }
            if !self.run_stage() {
                return Err(FracError::StageBudgetExhausted {
                    budget: self.budget,
                });
            }
        }
    }

    pub fn zero(&mut self) -> Result<StageCost, FracError> {
        let z = self.enumerator.zero();
        self.index_of(&z)
    }

    pub fn one(&mut self) -> Result<StageCost, FracError> {
        let o = self.enumerator.one();
        self.index_of(&o)
    }

    pub fn add(&mut self, i: usize, j: usize) -> Result<StageCost, FracError> {
        let r = self.enumerator.add(self.element(i)?, self.element(j)?);
        self.index_of(&r)
    }

    pub fn mul(&mut self, i: usize, j: usize) -> Result<StageCost, FracError> {
        let r = self.enumerator.mul(self.element(i)?, self.element(j)?);
        self.index_of(&r)
    }

    pub fn neg(&mut self, i: usize) -> Result<StageCost, FracError> {
        let r = self.enumerator.neg(self.element(i)?);
        self.index_of(&r)
    }

    pub fn enumerator(&self) -> &E {
        &self.enumerator
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::int;

    #[test]
    fn integer_indexing() {
        let mut r = index_structure(IntegerEnumerator, 100).unwrap();
        let two = r.index_of(&int(2)).unwrap();
        assert_eq!(two, StageCost { index: 3, stage: 3 });
        let four = r.add(3, 3).unwrap();
        assert_eq!(four.index, 7);
        assert_eq!(r.element(four.index).unwrap(), &int(4));
        assert_eq!(r.neg(3).unwrap().index, 4);
        let mut tight = index_structure(IntegerEnumerator, 2).unwrap();
        assert_eq!(
            tight.index_of(&int(5)),
            Err(FracError::StageBudgetExhausted { budget: 2 })
        );
    }

    #[test]
    fn zero_ring() {
        let mut r = index_structure(ZeroRingEnumerator, 10).unwrap();
        assert_eq!(r.carrier_len(), 1);
        assert_eq!(r.add(0, 0).unwrap().index, 0);
        assert_eq!(r.mul(0, 0).unwrap().index, 0);
        assert_eq!(r.one().unwrap().index, 0);
    }

    #[test]
    fn dyadic_rationals() {
        let loc = LocalizedIntegers::new(MultiplicativeSet::PowersOf(int(2))).unwrap();
        let mut r = index_structure(loc, 50).unwrap();
        let half = r.index_of(&(int(1), int(2))).unwrap();
        // 1 is the integer at position 1 and 2 the denominator at position 1
        assert_eq!(half.stage, 2);
        let one = r.add(half.index, half.index).unwrap();
        assert_eq!(r.element(one.index).unwrap(), &(int(1), int(1)));
        let quarter = r.mul(half.index, half.index).unwrap();
        assert_eq!(r.element(quarter.index).unwrap(), &(int(1), int(4)));
        assert!(r.enumerator().contains(&(int(3), int(8))));
        assert!(!r.enumerator().contains(&(int(1), int(3))));
    }

    #[test]
    fn trivial_localization_is_z() {
        let loc = LocalizedIntegers::new(MultiplicativeSet::Trivial).unwrap();
        let mut r = index_structure(loc, 30).unwrap();
        let mut z = index_structure(IntegerEnumerator, 30).unwrap();
        for k in 0..20 {
            let n = integer_at(k);
            assert_eq!(
                r.index_of(&(n.clone(), int(1))).unwrap(),
                z.index_of(&n).unwrap()
            );
        }
    }
}
