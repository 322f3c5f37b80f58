use std::cmp::Ordering;
use std::fmt;
use std::ops::Add;

use super::PolyError;

/// A finitely supported map `variable index -> positive exponent`, i.e. an
/// element of the eventually-zero sequences under the pointwise order. The
/// empty vector is the exponent of the constant monomial `1`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct ExponentVector {
    // strictly increasing indices, no zero exponents
    entries: Vec<(usize, u32)>,
}

impl ExponentVector {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn var(i: usize, e: u32) -> Self {
        Self::from_pairs([(i, e)])
    }

    /// Builds a vector from arbitrary pairs; repeated indices add up and zero
    /// exponents are dropped.
    pub fn from_pairs<I: IntoIterator<Item = (usize, u32)>>(pairs: I) -> Self {
        let mut v: Vec<(usize, u32)> = pairs.into_iter().filter(|&(_, e)| e > 0).collect();
        v.sort_unstable_by_key(|&(i, _)| i);
        let mut entries: Vec<(usize, u32)> = Vec::with_capacity(v.len());
        for (i, e) in v {
            match entries.last_mut() {
                Some((j, f)) if *j == i => *f += e,
                _ => entries.push((i, e)),
            }
        }
        Self { entries }
    }

    /// From a dense exponent list `[e0, e1, ...]`.
    pub fn from_dense(dense: &[u32]) -> Self {
        Self::from_pairs(dense.iter().copied().enumerate())
    }

    pub fn entries(&self) -> &[(usize, u32)] {
        &self.entries
    }

    pub fn get(&self, i: usize) -> u32 {
        self.entries
            .binary_search_by_key(&i, |&(j, _)| j)
            .map(|k| self.entries[k].1)
            .unwrap_or(0)
    }

    pub fn degree(&self) -> u64 {
        self.entries.iter().map(|&(_, e)| e as u64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.entries.is_empty()
    }

    /// Pointwise `self <= other`, which is divisibility `x^self | x^other`.
    pub fn divides(&self, other: &Self) -> bool {
        self.entries.iter().all(|&(i, e)| other.get(i) >= e)
    }

    pub fn checked_sub(&self, other: &Self) -> Option<Self> {
        if !other.divides(self) {
            return None;
        }
        Some(Self::from_pairs(
            self.entries.iter().map(|&(i, e)| (i, e - other.get(i))),
        ))
    }

    /// Truncated difference `max(self - other, 0)`.
    pub fn saturating_sub(&self, other: &Self) -> Self {
        Self::from_pairs(
            self.entries
                .iter()
                .map(|&(i, e)| (i, e.saturating_sub(other.get(i)))),
        )
    }

    /// Pointwise minimum.
    pub fn meet(&self, other: &Self) -> Self {
        Self::from_pairs(self.entries.iter().map(|&(i, e)| (i, e.min(other.get(i)))))
    }

    /// Pointwise maximum.
    pub fn join(&self, other: &Self) -> Self {
        let mut pairs: Vec<(usize, u32)> = self
            .entries
            .iter()
            .map(|&(i, e)| (i, e.max(other.get(i))))
            .collect();
        pairs.extend(
            other
                .entries
                .iter()
                .filter(|&&(i, _)| self.get(i) == 0)
                .copied(),
        );
        Self::from_pairs(pairs)
    }

    /// Every positive exponent replaced by one.
    pub fn squarefree(&self) -> Self {
        Self::from_pairs(self.entries.iter().map(|&(i, _)| (i, 1)))
    }

    pub fn without(&self, var: usize) -> Self {
        Self {
            entries: self
                .entries
                .iter()
                .copied()
                .filter(|&(i, _)| i != var)
                .collect(),
        }
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.entries.iter().map(|&(i, _)| i)
    }

    /// Lexicographic comparison: the first index where the exponents differ
    /// decides, larger exponent is larger.
    pub fn lex_cmp(&self, other: &Self) -> Ordering {
        let (mut a, mut b) = (
            self.entries.iter().peekable(),
            other.entries.iter().peekable(),
        );
        loop {
            match (a.peek(), b.peek()) {
                (None, None) => return Ordering::Equal,
                (Some(_), None) => return Ordering::Greater,
                (None, Some(_)) => return Ordering::Less,
                (Some(&&(i, e)), Some(&&(j, f))) => {
                    if i < j {
                        return Ordering::Greater;
                    }
                    if j < i {
                        return Ordering::Less;
                    }
                    if e != f {
                        return e.cmp(&f);
                    }
                    a.next();
                    b.next();
                }
            }
        }
    }
}

/// Graded lexicographic order.
impl Ord for ExponentVector {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.lex_cmp(other))
    }
}

impl PartialOrd for ExponentVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<'a> Add<&'a ExponentVector> for &'a ExponentVector {
    type Output = ExponentVector;
    fn add(self, rhs: &ExponentVector) -> ExponentVector {
        ExponentVector::from_pairs(self.entries.iter().chain(rhs.entries.iter()).copied())
    }
}

impl fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.is_empty() {
            return write!(f, "1");
        }
        for (k, &(i, e)) in self.entries.iter().enumerate() {
            if k > 0 {
                write!(f, "*")?;
            }
            if e == 1 {
                write!(f, "x{i}")?;
            } else {
                write!(f, "x{i}^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x^({self})")
    }
}

/// Pointwise minimum of a nonempty finite set: a lower bound of every member
/// and above every other lower bound.
pub fn meet_exponents<'a, I>(set: I) -> Result<ExponentVector, PolyError>
where
    I: IntoIterator<Item = &'a ExponentVector>,
{
    let mut it = set.into_iter();
    let first = it.next().ok_or(PolyError::EmptySet)?.clone();
    Ok(it.fold(first, |acc, e| acc.meet(e)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ev(d: &[u32]) -> ExponentVector {
        ExponentVector::from_dense(d)
    }

    #[test]
    fn meet_examples() {
        assert_eq!(
            meet_exponents(&[ev(&[2, 1]), ev(&[1, 2])]).unwrap(),
            ev(&[1, 1])
        );
        assert_eq!(meet_exponents(&[ev(&[3, 0, 2])]).unwrap(), ev(&[3, 0, 2]));
        assert_eq!(
            meet_exponents(&[ev(&[1]), ev(&[0, 1])]).unwrap(),
            ExponentVector::one()
        );
        assert_eq!(meet_exponents(std::iter::empty()), Err(PolyError::EmptySet));
    }

    #[test]
    fn graded_lex_order() {
        // deg first
        assert!(ev(&[0, 0, 2]) > ev(&[1]));
        // then x0 dominates
        assert!(ev(&[1, 1]) > ev(&[0, 2]));
        assert!(ev(&[2]) > ev(&[1, 1]));
        assert_eq!(ev(&[1, 1]).cmp(&ev(&[1, 1])), Ordering::Equal);
    }

    #[test]
    fn join_and_sub() {
        assert_eq!(ev(&[2, 0, 1]).join(&ev(&[1, 3])), ev(&[2, 3, 1]));
        assert_eq!(ev(&[2, 1]).checked_sub(&ev(&[1, 1])), Some(ev(&[1])));
        assert_eq!(ev(&[2]).checked_sub(&ev(&[0, 1])), None);
        assert_eq!(ev(&[2, 1]).to_string(), "x0^2*x1");
    }
}
