//! Greedy chains through staged partial orders, and the block-merging order
//! whose chains dominate the modulus of `K`.

use super::{modulus, LabError, StageEnumeration, Trace};

/// A partial order revealed in stages: `below_at(a, b, k)` is `a ≺_k b`,
/// monotone in `k`.
pub trait StagedOrder {
    fn below_at(&self, a: u64, b: u64, k: u64) -> bool;
}

pub struct FnOrder<F>(pub F);

impl<F: Fn(u64, u64, u64) -> bool> StagedOrder for FnOrder<F> {
    fn below_at(&self, a: u64, b: u64, k: u64) -> bool {
        (self.0)(a, b, k)
    }
}

/// A chain `f(0) ≺ f(1) ≺ ...`; `certificates[i] = (n, k)` records that
/// `f(i+1) = a_n` was seen above `f(i)` at order stage `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZornChain {
    pub chain: Vec<u64>,
    pub certificates: Vec<(usize, u64)>,
    pub pairs_examined: usize,
    pub trace: Trace,
}

impl ZornChain {
    /// The last element, maximal among everything the search saw.
    pub fn maximal_so_far(&self) -> Option<u64> {
        self.chain.last().copied()
    }

    pub fn verify(&self, carrier: &[u64], order: &impl StagedOrder) -> Result<(), LabError> {
        for (i, &(n, k)) in self.certificates.iter().enumerate() {
            if carrier.get(n) != Some(&self.chain[i + 1])
                || !order.below_at(self.chain[i], self.chain[i + 1], k)
            {
                return Err(LabError::ChainViolation { index: i });
            }
        }
        Ok(())
    }
}

/// Carrier elements in enumeration order: by entry stage, then value.
pub fn carrier_order(carrier: &StageEnumeration) -> Vec<u64> {
    let mut e = carrier.entries();
    e.sort_by_key(|&(x, s)| (s, x));
    e.into_iter().map(|(x, _)| x).collect()
}

fn unpair(p: usize) -> (usize, u64) {
    // inverse Cantor pairing
    let w = (((8 * p + 1) as f64).sqrt() as usize - 1) / 2;
    let w = (w.saturating_sub(1)..=w + 1)
        .rev()
        .find(|&w| w * (w + 1) / 2 <= p)
        .unwrap();
    let k = p - w * (w + 1) / 2;
    (w - k, k as u64)
}

/// `f(0) = a_0`; then walks the pairs `⟨n, k⟩` once, extending the chain by
/// `a_n` whenever `a_n ≻_k f(i)`. Examines at most `steps` pairs.
pub fn zorn_greedy_chain(
    carrier: &StageEnumeration,
    order: &impl StagedOrder,
    steps: usize,
) -> ZornChain {
    let elems = carrier_order(carrier);
    let mut out = ZornChain {
        chain: Vec::new(),
        certificates: Vec::new(),
        pairs_examined: 0,
        trace: Trace::new(),
    };
    let Some(&first) = elems.first() else {
        return out;
    };
    out.chain.push(first);
    out.trace.push(0, format!("f(0) = {first}"));
    for p in 0..steps {
        out.pairs_examined = p + 1;
        let (n, k) = unpair(p);
        let Some(&a) = elems.get(n) else { continue };
        let top = *out.chain.last().unwrap();
        if order.below_at(top, a, k) {
            let i = out.chain.len();
            out.chain.push(a);
            out.certificates.push((n, k));
            out.trace
                .push(p, format!("f({i}) = {a} above {top} at order stage {k}"));
        }
    }
    out
}

/// The block order built against `K`: blocks are intervals, incomparable
/// inside, ordered across.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockPoset {
    pub k: StageEnumeration,
    pub stages: u64,
    /// Block starts `m_0 < m_1 < ...` after each stage with an event, as
    /// `(stage, starts)`; the first entry is stage 0 before any event.
    pub snapshots: Vec<(u64, Vec<u64>)>,
    pub trace: Trace,
}

fn block_index(starts: &[u64], a: u64) -> usize {
    match starts.binary_search(&a) {
        Ok(i) => i,
        Err(i) if i == starts.len() => i - 1 + (a - starts[i - 1]) as usize,
        Err(i) => i - 1,
    }
}

fn extend_to(starts: &mut Vec<u64>, len: usize) {
    while starts.len() < len {
        let next = starts.last().map_or(0, |x| x + 1);
        starts.push(next);
    }
}

impl BlockPoset {
    pub fn starts(&self) -> &[u64] {
        &self.snapshots.last().expect("at least one snapshot").1
    }

    /// Starts in force after stage `s`.
    pub fn starts_at(&self, s: u64) -> &[u64] {
        let i = self.snapshots.partition_point(|(t, _)| *t <= s);
        &self.snapshots[i.saturating_sub(1)].1
    }

    /// Blocks beyond the stored starts are singletons.
    pub fn block_of(&self, a: u64) -> usize {
        block_index(self.starts(), a)
    }

    pub fn block_of_at(&self, a: u64, s: u64) -> usize {
        block_index(self.starts_at(s), a)
    }

    /// `a ≺ b` at the final stage.
    pub fn below(&self, a: u64, b: u64) -> bool {
        self.block_of(a) < self.block_of(b)
    }

    pub fn below_at(&self, a: u64, b: u64, s: u64) -> bool {
        self.block_of_at(a, s) < self.block_of_at(b, s)
    }

    /// The elements of block `n`.
    pub fn block(&self, n: usize) -> std::ops::Range<u64> {
        let mut starts = self.starts().to_vec();
        extend_to(&mut starts, n + 2);
        starts[n]..starts[n + 1]
    }

    /// Checks that `chain` is strictly increasing and that
    /// `chain[n+1] ≥ μ_K(n)` wherever `K ∩ [0, n)` is complete by the final
    /// stage.
    pub fn check_chain(&self, chain: &[u64]) -> Result<(), LabError> {
        for (i, w) in chain.windows(2).enumerate() {
            if !self.below(w[0], w[1]) {
                return Err(LabError::ChainViolation { index: i });
            }
        }
        for n in 0..chain.len().saturating_sub(1) {
            if let Ok(mu) = modulus(&self.k, n as u64, self.stages) {
                if chain[n + 1] < mu {
                    return Err(LabError::DominationViolation { index: n });
                }
            }
        }
        Ok(())
    }
}

impl StagedOrder for BlockPoset {
    /// The final order, the same at every stage.
    fn below_at(&self, a: u64, b: u64, _k: u64) -> bool {
        self.below(a, b)
    }
}

/// Replays stages `0..=stages`: when `n` enters `K` at stage `s` and `s` lies
/// in `B_k` with `k > n`, the blocks `B_n, ..., B_k` merge.
pub fn block_merge_poset(k: &StageEnumeration, stages: u64) -> BlockPoset {
    let mut starts: Vec<u64> = Vec::new();
    extend_to(&mut starts, (stages + 2) as usize);
    let mut snapshots = vec![(0, starts.clone())];
    let mut trace = Trace::new();
    for s in 0..=stages {
        let mut changed = false;
        for n in k.entering_at(s) {
            extend_to(&mut starts, n as usize + 2);
            let b = block_index(&starts, s);
            if b > n as usize {
                starts.drain(n as usize + 1..=b);
                trace.push(s, format!("{n} enters K; merge B_{n}..B_{b}"));
                changed = true;
            } else {
                trace.push(s, format!("{n} enters K; no merge"));
            }
        }
        if changed {
            snapshots.push((s, starts.clone()));
        }
    }
    BlockPoset {
        k: k.clone(),
        stages,
        snapshots,
        trace,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unpair_inverts_cantor() {
        let mut p = 0;
        for w in 0..30usize {
            for k in 0..=w {
                assert_eq!(unpair(p), (w - k, k as u64));
                p += 1;
            }
        }
    }

    #[test]
    fn naturals_give_increasing_chain() {
        let carrier = StageEnumeration::from_fn(0..50, |_| 0);
        let chain = zorn_greedy_chain(&carrier, &FnOrder(|a: u64, b: u64, _k: u64| a < b), 500);
        assert!(chain.chain.len() > 5);
        assert!(chain.chain.windows(2).all(|w| w[0] < w[1]));
        chain
            .verify(
                &carrier_order(&carrier),
                &FnOrder(|a: u64, b: u64, _k: u64| a < b),
            )
            .unwrap();
    }

    #[test]
    fn finite_poset_with_top() {
        // divisibility on divisors of 12, top 12
        let carrier = StageEnumeration::from_fn([1, 2, 3, 4, 6, 12], |_| 0);
        let order = FnOrder(|a: u64, b: u64, _k: u64| a != b && b.is_multiple_of(a));
        let chain = zorn_greedy_chain(&carrier, &order, 200);
        assert_eq!(chain.maximal_so_far(), Some(12));
        chain.verify(&carrier_order(&carrier), &order).unwrap();
    }

    #[test]
    fn delayed_order_still_strict() {
        let carrier = StageEnumeration::from_fn(0..30, |_| 0);
        let delay = 7;
        let order = FnOrder(move |a: u64, b: u64, k: u64| a < b && k >= delay);
        let chain = zorn_greedy_chain(&carrier, &order, 2000);
        assert!(chain.chain.len() > 3);
        assert!(chain.certificates.iter().all(|&(_, k)| k >= delay));
        assert_eq!(chain.trace.len(), chain.chain.len());
        chain.verify(&carrier_order(&carrier), &order).unwrap();
    }

    #[test]
    fn empty_k_gives_usual_order() {
        let p = block_merge_poset(&StageEnumeration::empty(), 20);
        for a in 0..20 {
            assert_eq!(p.block(a as usize), a..a + 1);
            for b in 0..20 {
                assert_eq!(p.below(a, b), a < b);
            }
        }
    }

    #[test]
    fn single_entry_merges_through_stage_block() {
        let p = block_merge_poset(&StageEnumeration::from_entries([(0, 4)]), 10);
        assert_eq!(p.block(0), 0..5);
        assert_eq!(p.block(1), 5..6);
        assert!(!p.below(0, 4) && !p.below(4, 0));
        assert!(p.below(4, 5));
        assert_eq!(p.trace.lines(), ["stage 4: 0 enters K; merge B_0..B_4"]);
        assert!(p.below_at(0, 4, 3));
    }

    #[test]
    fn greedy_chain_through_evens_dominates() {
        let k = StageEnumeration::evens(8);
        let p = block_merge_poset(&k, 100);
        let carrier = StageEnumeration::from_fn(0..150, |_| 0);
        let chain = zorn_greedy_chain(&carrier, &p, 20_000);
        assert!(chain.chain.len() > 11);
        p.check_chain(&chain.chain[..12]).unwrap();
        assert_eq!(
            p.check_chain(&[3, 2]),
            Err(LabError::ChainViolation { index: 0 })
        );
    }
}
