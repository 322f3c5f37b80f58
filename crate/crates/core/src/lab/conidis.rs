//! The linear ring `Q[x_0, x_1, ...] / (x_i x_j)` and the domination bound
//! read off an independent sequence in its augmentation ideal.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_traits::{One, Signed, Zero};

use super::{LabError, StageEnumeration};
use crate::arith::Rational;

/// `q + Σ a_i x_i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct LinearRingElement {
    pub constant: Rational,
    coeffs: BTreeMap<usize, Rational>,
}

impl LinearRingElement {
    pub fn new(constant: Rational, coeffs: impl IntoIterator<Item = (usize, Rational)>) -> Self {
        let mut out = Self {
            constant,
            coeffs: BTreeMap::new(),
        };
        for (i, c) in coeffs {
            out.add_coeff(i, &c);
        }
        out
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(q: Rational) -> Self {
        Self::new(q, [])
    }

    pub fn var(i: usize) -> Self {
        Self::new(Rational::zero(), [(i, Rational::one())])
    }

    fn add_coeff(&mut self, i: usize, c: &Rational) {
        let v = self.coeffs.entry(i).or_insert_with(Rational::zero);
        *v += c;
        if v.is_zero() {
            self.coeffs.remove(&i);
        }
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(&i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coeffs(&self) -> &BTreeMap<usize, Rational> {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.constant.is_zero() && self.coeffs.is_empty()
    }

    pub fn max_variable(&self) -> Option<usize> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.constant += &other.constant;
        for (i, c) in &other.coeffs {
            out.add_coeff(*i, c);
        }
        out
    }

    pub fn scale(&self, k: &Rational) -> Self {
        Self::new(
            &self.constant * k,
            self.coeffs.iter().map(|(i, c)| (*i, c * k)),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-Rational::one()))
    }

    /// `(q + Σ a_i x_i)(r + Σ b_i x_i) = qr + Σ (r a_i + q b_i) x_i`.
    pub fn multiply(&self, other: &Self) -> Self {
        let (q, r) = (&self.constant, &other.constant);
        let mut out = Self::constant(q * r);
        for (i, a) in &self.coeffs {
            out.add_coeff(*i, &(r * a));
        }
        for (i, b) in &other.coeffs {
            out.add_coeff(*i, &(q * b));
        }
        out
    }

    /// `(q, a_0, ..., a_{len-1})`.
    pub fn coefficient_vector(&self, len: usize) -> Vec<Rational> {
        std::iter::once(self.constant.clone())
            .chain((0..len).map(|i| self.coeff(i)))
            .collect()
    }

    /// Rewrites `x_n` as `x_{n+1}` for every `n ∈ a`, leaving only variables
    /// outside `a`.
    pub fn reduce_mod(&self, a: &BTreeSet<u64>) -> Self {
        let mut out = Self::constant(self.constant.clone());
        for (i, c) in &self.coeffs {
            let mut j = *i as u64;
            while a.contains(&j) {
                j += 1;
            }
            out.add_coeff(j as usize, c);
        }
        out
    }
}

impl fmt::Display for LinearRingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<(bool, String)> = Vec::new();
        if !self.constant.is_zero() || self.coeffs.is_empty() {
            parts.push((self.constant.is_negative(), self.constant.abs().to_string()));
        }
        for (i, c) in &self.coeffs {
            let mag = c.abs();
            let body = if mag.is_one() {
                format!("x{i}")
            } else {
                format!("{mag}*x{i}")
            };
            parts.push((c.is_negative(), body));
        }
        for (k, (neg, body)) in parts.iter().enumerate() {
            match (k, neg) {
                (0, true) => write!(f, "-{body}")?,
                (0, false) => write!(f, "{body}")?,
                (_, true) => write!(f, " - {body}")?,
                (_, false) => write!(f, " + {body}")?,
            }
        }
        Ok(())
    }
}

/// Moves an independent sequence into the ideal `(x_0, x_1, ...)`: keep
/// `a_i` until the first `a_n` with constant `q ≠ 0`, then use
/// `q a_{i+1} - r_{i+1} a_n` for `i ≥ n`, `r_j` the constant of `a_j`.
/// Only the first `budget` terms are read.
pub fn normalize_independent(seq: &[LinearRingElement], budget: usize) -> Vec<LinearRingElement> {
    let seq = &seq[..seq.len().min(budget)];
    let Some(n) = seq.iter().position(|a| !a.constant.is_zero()) else {
        return seq.to_vec();
    };
    let q = seq[n].constant.clone();
    let mut out = seq[..n].to_vec();
    for a in &seq[n + 1..] {
        out.push(a.scale(&q).sub(&seq[n].scale(&a.constant)));
    }
    out
}

/// `f(n)`: the largest variable in `a'_0, ..., a'_{n+1}` after reduction
/// modulo `A`, next to the complement elements `c_0 < c_1 < ...` of `A`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DominationTable {
    pub f: Vec<Option<usize>>,
    pub complement: Vec<u64>,
}

impl DominationTable {
    /// `f(n) ≥ c_n` for `n ≤ limit`.
    pub fn verify(&self, limit: usize) -> Result<(), LabError> {
        for n in 0..=limit.min(self.f.len().saturating_sub(1)) {
            match self.f[n] {
                Some(v) if v as u64 >= self.complement[n] => {}
                _ => return Err(LabError::DominationViolation { index: n }),
            }
        }
        Ok(())
    }
}

pub fn dominating_f(seq: &[LinearRingElement], a: &StageEnumeration) -> DominationTable {
    let set = a.elements();
    let reduced: Vec<LinearRingElement> = seq.iter().map(|e| e.reduce_mod(&set)).collect();
    let mut f = Vec::new();
    let mut running: Option<usize> = None;
    for (i, e) in reduced.iter().enumerate() {
        running = running.max(e.max_variable());
        if i >= 1 {
            f.push(running);
        }
    }
    let complement = (0u64..)
        .filter(|c| !set.contains(c))
        .take(f.len() + 1)
        .collect();
    DominationTable { f, complement }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;
    use crate::lab::dense_set_build;
    use crate::linalg::rank;

    fn lin(q: i64, coeffs: &[(usize, i64)]) -> LinearRingElement {
        LinearRingElement::new(rat(q), coeffs.iter().map(|&(i, c)| (i, rat(c))))
    }

    #[test]
    fn multiplication_examples() {
        let a = lin(1, &[(0, 1)]);
        let b = lin(2, &[(1, 1)]);
        assert_eq!(a.multiply(&b), lin(2, &[(0, 2), (1, 1)]));
        assert_eq!(a.multiply(&b).to_string(), "2 + 2*x0 + x1");
        assert!(LinearRingElement::zero().multiply(&b).is_zero());
        assert!(LinearRingElement::var(3)
            .multiply(&LinearRingElement::var(3))
            .is_zero());
    }

    #[test]
    fn normalization_clears_constants() {
        let seq = vec![
            lin(0, &[(0, 1)]),
            lin(2, &[(1, 1)]),
            lin(3, &[(2, 1)]),
            lin(0, &[(3, 1)]),
        ];
        let out = normalize_independent(&seq, 10);
        assert_eq!(
            out,
            vec![
                lin(0, &[(0, 1)]),
                lin(0, &[(1, -3), (2, 2)]),
                lin(0, &[(3, 2)])
            ]
        );
        let vecs = |s: &[LinearRingElement]| {
            s.iter()
                .map(|e| e.coefficient_vector(4))
                .collect::<Vec<_>>()
        };
        assert_eq!(rank(&vecs(&seq)), 4);
        assert_eq!(rank(&vecs(&out)), 3);
        let zeros = vec![lin(0, &[(0, 1)]), lin(0, &[(1, 1)])];
        assert_eq!(normalize_independent(&zeros, 10), zeros);
    }

    #[test]
    fn complement_sequence_dominates() {
        let k = StageEnumeration::evens(8);
        let dense = dense_set_build(&k, 80, 16);
        let seq: Vec<LinearRingElement> = dense
            .complement_prefix
            .iter()
            .map(|&c| LinearRingElement::var(c as usize))
            .collect();
        let table = dominating_f(&seq, &dense.a);
        for n in 0..10 {
            assert_eq!(table.f[n], Some(dense.complement_prefix[n + 1] as usize));
        }
        table.verify(10).unwrap();
    }

    #[test]
    fn reduction_moves_to_complement() {
        let a = BTreeSet::from([1, 2, 5]);
        let e = lin(1, &[(1, 2), (3, 1), (5, 1)]);
        assert_eq!(e.reduce_mod(&a), lin(1, &[(3, 3), (6, 1)]));
    }
}
