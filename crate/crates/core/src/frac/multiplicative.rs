use std::collections::{BTreeSet, HashSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{FracError, LocalizedIntegers};
use crate::arith::factor_integer;
use crate::pid_t::in_M;
use crate::poly::MultiPoly;
use crate::ring::RingId;

/// A multiplicatively closed set containing one, given by a decidable
/// description.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MultiplicativeSet {
    /// `{1}`.
    Trivial,
    /// `{a^k : k >= 0}` in `Z`.
    PowersOf(BigInt),
    /// Products of the listed integers (with repetition), including the empty
    /// product `1`.
    GeneratedBy(Vec<BigInt>),
    /// `Q[x0, x1, ...]` minus the union of the ideals `(x_i)`.
    ComplementOfVariableIdeals,
}

impl MultiplicativeSet {
    /// Integer generators, or `None` for the polynomial set.
    pub fn integer_generators(&self) -> Option<Vec<BigInt>> {
        match self {
            MultiplicativeSet::Trivial => Some(Vec::new()),
            MultiplicativeSet::PowersOf(a) => Some(vec![a.clone()]),
            MultiplicativeSet::GeneratedBy(g) => Some(g.clone()),
            MultiplicativeSet::ComplementOfVariableIdeals => None,
        }
    }

    /// Membership of an integer; `None` for the polynomial set.
    pub fn contains(&self, x: &BigInt) -> Option<bool> {
        let gens = self.integer_generators()?;
        Some(product_of(x, &gens))
    }

    pub fn contains_poly(&self, p: &MultiPoly) -> Option<bool> {
        match self {
            MultiplicativeSet::ComplementOfVariableIdeals => Some(in_M(p)),
            _ => None,
        }
    }

    pub fn contains_zero(&self) -> bool {
        self.integer_generators()
            .is_some_and(|g| g.iter().any(Zero::is_zero))
    }

    /// Primes dividing some generator.
    pub fn prime_support(&self) -> BTreeSet<BigInt> {
        self.integer_generators()
            .unwrap_or_default()
            .iter()
            .filter(|g| !g.is_zero())
            .flat_map(|g| factor_integer(g).into_iter().map(|(p, _)| p))
            .collect()
    }
}

// x is a product of generators: depth-first division, with a sign flip when
// -1 is available
fn product_of(x: &BigInt, gens: &[BigInt]) -> bool {
    let mut stack = vec![x.clone()];
    let mut seen = HashSet::new();
    let minus_one = gens.iter().any(|g| *g == -BigInt::one());
    while let Some(y) = stack.pop() {
        if y.is_one() {
            return true;
        }
        if !seen.insert(y.clone()) {
            continue;
        }
        if y.is_zero() {
            if gens.iter().any(Zero::is_zero) {
                return true;
            }
            continue;
        }
        if minus_one {
            stack.push(-&y);
        }
        for g in gens {
            if g.abs() > BigInt::one() && y.is_multiple_of(g) {
                stack.push(&y / g);
            }
        }
    }
    false
}

/// The saturation `{r : ∃s, rs ∈ M}` restricted to `|r| <= bound`, ascending.
/// A nonzero `r` divides some element of `M` exactly when its primes all
/// divide generators.
pub fn saturate(set: &MultiplicativeSet, bound: u64) -> Result<Vec<BigInt>, FracError> {
    if set.contains_zero() {
        return Err(FracError::ZeroDivisorInM);
    }
    if set.integer_generators().is_none() {
        return Err(FracError::Unsupported);
    }
    let support = set.prime_support();
    let mut out = Vec::new();
    for r in 1..=bound {
        let r = BigInt::from(r);
        if factor_integer(&r).iter().all(|(p, _)| support.contains(p)) {
            out.push(-&r);
            out.push(r);
        }
    }
    out.sort();
    Ok(out)
}

/// The result of localising: an enumerated ring of fractions over `Z`, or
/// the principal ideal domain `T` (handled by [`crate::pid_t`]).
#[derive(Debug, Clone)]
pub enum Localization {
    Integers(LocalizedIntegers),
    PidT,
}

pub fn localize(ring: &RingId, set: &MultiplicativeSet) -> Result<Localization, FracError> {
    match (ring, set) {
        (RingId::Integers, MultiplicativeSet::ComplementOfVariableIdeals) => {
            Err(FracError::Unsupported)
        }
        (RingId::Integers, _) => Ok(Localization::Integers(LocalizedIntegers::new(set.clone())?)),
        (RingId::MultiPoly, MultiplicativeSet::ComplementOfVariableIdeals) => {
            Ok(Localization::PidT)
        }
        _ => Err(FracError::Unsupported),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::int;

    fn brute_saturation(gens: &[i64], bound: i64) -> Vec<BigInt> {
        // elements of M below a generous bound, then r | m
        let mut m: Vec<i64> = vec![1];
        let mut frontier = vec![1i64];
        while let Some(x) = frontier.pop() {
            for &g in gens {
                let y = x * g;
                if g.abs() > 1 && y.abs() <= 1 << 20 && !m.contains(&y) {
                    m.push(y);
                    frontier.push(y);
                }
            }
        }
        (-bound..=bound)
            .filter(|&r| r != 0 && m.iter().any(|&x| x % r == 0))
            .map(int)
            .collect()
    }

    #[test]
    fn saturation_examples() {
        let four = MultiplicativeSet::PowersOf(int(4));
        let expect: Vec<BigInt> = [-8, -4, -2, -1, 1, 2, 4, 8]
            .iter()
            .map(|&v| int(v))
            .collect();
        assert_eq!(saturate(&four, 10).unwrap(), expect);
        assert_eq!(saturate(&four, 10).unwrap(), brute_saturation(&[4], 10));
        assert_eq!(
            saturate(&MultiplicativeSet::Trivial, 10).unwrap(),
            vec![int(-1), int(1)]
        );
        let six = MultiplicativeSet::PowersOf(int(6));
        assert_eq!(saturate(&six, 10).unwrap(), brute_saturation(&[6], 10));
        assert_eq!(saturate(&six, 10).unwrap().len(), 14);
        assert_eq!(
            saturate(&MultiplicativeSet::PowersOf(int(0)), 3),
            Err(FracError::ZeroDivisorInM)
        );
    }

    #[test]
    fn membership() {
        let m = MultiplicativeSet::GeneratedBy(vec![int(2), int(-3)]);
        assert_eq!(m.contains(&int(-12)), Some(true));
        assert_eq!(m.contains(&int(12)), Some(false));
        assert_eq!(m.contains(&int(36)), Some(true));
        assert_eq!(m.contains(&int(1)), Some(true));
        let p = MultiplicativeSet::PowersOf(int(-1));
        assert_eq!(p.contains(&int(-1)), Some(true));
        assert_eq!(
            MultiplicativeSet::ComplementOfVariableIdeals.contains(&int(2)),
            None
        );
    }

    #[test]
    fn localize_dispatch() {
        assert!(matches!(
            localize(&RingId::Integers, &MultiplicativeSet::PowersOf(int(2))),
            Ok(Localization::Integers(_))
        ));
        assert!(matches!(
            localize(
                &RingId::MultiPoly,
                &MultiplicativeSet::ComplementOfVariableIdeals
            ),
            Ok(Localization::PidT)
        ));
        assert!(matches!(
            localize(&RingId::Integers, &MultiplicativeSet::PowersOf(int(0))),
            Err(FracError::ZeroDivisorInM)
        ));
    }
}
