use std::collections::BTreeSet;

use super::{LabError, StageEnumeration, Trace};

/// `μ_K(n)`: the least `s` with `K_s ∩ [0, n) = K ∩ [0, n)`, where the
/// schedule is taken as the whole of `K`.
pub fn modulus(k: &StageEnumeration, n: u64, horizon: u64) -> Result<u64, LabError> {
    let needed = k
        .entries()
        .into_iter()
        .filter(|&(x, _)| x < n)
        .map(|(_, s)| s)
        .max()
        .unwrap_or(0);
    if needed > horizon {
        return Err(LabError::HorizonTooSmall { n, needed, horizon });
    }
    Ok(needed)
}

/// Decides `n ∈ K` as `n ∈ K_{f(n+1)}`; correct whenever `f ≥ μ_K`.
pub fn decide_with_dominator(k: &StageEnumeration, f: impl Fn(u64) -> u64, n: u64) -> bool {
    k.contains_at(n, f(n + 1))
}

/// A replay of the dense set built against `K`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DenseSet {
    pub a: StageEnumeration,
    pub horizon: u64,
    /// `b_0 < b_1 < ...`, the complement of `A` at the horizon.
    pub complement_prefix: Vec<u64>,
    /// Indices `i` with `K ∩ [0, i]` complete by the horizon; `b_0..=b_i`
    /// can no longer be dumped.
    pub stable: usize,
    pub trace: Trace,
}

impl DenseSet {
    /// `b_i ≥ μ_K(i)` for every stable index up to `limit`; returns the
    /// first index that fails.
    pub fn check_domination(&self, k: &StageEnumeration, limit: usize) -> Result<(), LabError> {
        for i in 0..self.stable.min(limit + 1) {
            let mu = modulus(k, i as u64, self.horizon)?;
            if self.complement_prefix[i] < mu {
                return Err(LabError::DominationViolation { index: i });
            }
        }
        Ok(())
    }
}

/// Replays the construction through stage `horizon`: when `n` enters `K` at
/// stage `s`, the current complement elements `c_n, ..., c_s` are put into
/// `A`.
pub fn dense_set_build(k: &StageEnumeration, horizon: u64, prefix_len: usize) -> DenseSet {
    let mut in_a: BTreeSet<u64> = BTreeSet::new();
    let mut a = StageEnumeration::empty();
    let mut trace = Trace::new();
    for s in 0..=horizon {
        for n in k.entering_at(s) {
            if n > s {
                trace.push(s, format!("{n} enters K; nothing to dump"));
                continue;
            }
            let dumped: Vec<u64> = (0u64..)
                .filter(|c| !in_a.contains(c))
                .skip(n as usize)
                .take((s - n + 1) as usize)
                .collect();
            for &c in &dumped {
                in_a.insert(c);
                a.insert(c, s);
            }
            let list: Vec<String> = dumped.iter().map(u64::to_string).collect();
            trace.push(s, format!("{n} enters K; dump {}", list.join(",")));
        }
    }
    let complement_prefix: Vec<u64> = (0u64..)
        .filter(|c| !in_a.contains(c))
        .take(prefix_len)
        .collect();
    let stable = (0..prefix_len)
        .take_while(|&i| {
            k.entries()
                .iter()
                .all(|&(x, s)| x > i as u64 || s <= horizon)
        })
        .count();
    DenseSet {
        a,
        horizon,
        complement_prefix,
        stable,
        trace,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn modulus_examples() {
        let evens = StageEnumeration::evens(10);
        assert_eq!(modulus(&evens, 5, 100).unwrap(), 4);
        assert_eq!(modulus(&StageEnumeration::empty(), 7, 0).unwrap(), 0);
        assert_eq!(
            modulus(&evens, 7, 5),
            Err(LabError::HorizonTooSmall {
                n: 7,
                needed: 9,
                horizon: 5
            })
        );
        // replay oracle: least s with the restriction equal to the final one
        for n in 0..20 {
            let target: Vec<u64> = evens
                .at_stage(1000)
                .into_iter()
                .filter(|&x| x < n)
                .collect();
            let s = (0..)
                .find(|&s| {
                    evens
                        .at_stage(s)
                        .into_iter()
                        .filter(|&x| x < n)
                        .collect::<Vec<_>>()
                        == target
                })
                .unwrap();
            assert_eq!(modulus(&evens, n, 1000).unwrap(), s);
        }
    }

    #[test]
    fn dominator_decides() {
        let evens = StageEnumeration::evens(10);
        let mu = |n| modulus(&evens, n, 1000).unwrap();
        for n in 0..19 {
            assert_eq!(decide_with_dominator(&evens, mu, n), n % 2 == 0);
            assert_eq!(decide_with_dominator(&evens, |m| mu(m) + 3, n), n % 2 == 0);
        }
    }

    #[test]
    fn dense_set_examples() {
        let d = dense_set_build(&StageEnumeration::empty(), 20, 5);
        assert!(d.a.is_empty());
        assert_eq!(d.complement_prefix, vec![0, 1, 2, 3, 4]);

        let k = StageEnumeration::from_entries([(0, 3)]);
        let d = dense_set_build(&k, 10, 3);
        assert_eq!(d.a.elements(), BTreeSet::from([0, 1, 2, 3]));
        assert_eq!(d.complement_prefix[0], 4);
        assert_eq!(d.trace.lines(), ["stage 3: 0 enters K; dump 0,1,2,3"]);

        let evens = StageEnumeration::evens(12);
        let d = dense_set_build(&evens, 100, 16);
        assert!(d.stable > 10);
        d.check_domination(&evens, 10).unwrap();
    }
}
