//! Moving-marker merge of a non-stabilising chain into a strictly increasing
//! one.

use std::collections::HashMap;

use super::{LabError, Sigma1Chain, Trace};

/// Elements of `I_{m_i}` probed before the marker moves on.
pub const WITNESS_PROBE: usize = 64;

/// Cap on the elements probed in one fresh-witness search, across markers.
pub const WITNESS_SEARCH_CAP: usize = 4096;

/// The state after a finite run: `J_n` copies `I_{m_n}` and keeps a witness
/// `x_n` it believes lies outside `J_{n-1}`.
#[derive(Debug, Clone)]
pub struct PriorityRun<E> {
    pub stages: usize,
    pub markers: Vec<usize>,
    pub witnesses: Vec<E>,
    /// Markers after each stage.
    pub marker_history: Vec<Vec<usize>>,
    /// Witnesses after each stage.
    pub witness_history: Vec<Vec<E>>,
    /// Stage of the last move of each marker, counting the move made when
    /// the index is created.
    pub last_move: Vec<usize>,
    /// Moves caused by a witness entering `J_{n-1}` after creation.
    pub injuries: Vec<usize>,
    /// `(element, n)` for each element, `n` least with the element in `J_n`.
    pub enumerated: Vec<(E, usize)>,
    pub trace: Trace,
}

impl<E: Clone + Eq + std::hash::Hash> PriorityRun<E> {
    /// Elements enumerated into `J_n` so far.
    pub fn j_elements(&self, n: usize) -> Vec<E> {
        self.enumerated
            .iter()
            .filter(|(_, l)| *l <= n)
            .map(|(e, _)| e.clone())
            .collect()
    }

    /// The leading indices whose markers have not moved in the second half
    /// of the run.
    pub fn settled_bound(&self) -> usize {
        let cutoff = self.stages / 2;
        self.last_move.iter().take_while(|&&s| s <= cutoff).count()
    }

    /// For each settled `n ≥ 1`: `x_n` lies in `I_M` for `M = max_{j≤n} m_j`,
    /// sits in `J_n`, is outside the ideal generated by `J_{n-1}`, and is the
    /// witness held since the midpoint. Markers never decrease.
    pub fn verify<C: Sigma1Chain<Elem = E>>(&self, chain: &C) -> Result<(), LabError> {
        for w in self.marker_history.windows(2) {
            if let Some(n) = (0..w[0].len()).find(|&n| w[1][n] < w[0][n]) {
                return Err(LabError::ChainViolation { index: n });
            }
        }
        let mid = &self.witness_history[self.stages / 2];
        for n in 1..self.settled_bound() {
            let x = &self.witnesses[n];
            let top = self.markers[..=n].iter().copied().max().unwrap_or(0);
            let ok = chain.contains(top, x)
                && chain.in_generated(&self.j_elements(n), x)
                && !chain.in_generated(&self.j_elements(n - 1), x)
                && mid.get(n) == Some(x);
            if !ok {
                return Err(LabError::ChainViolation { index: n });
            }
        }
        Ok(())
    }
}

struct State<'a, C: Sigma1Chain> {
    chain: &'a C,
    markers: Vec<usize>,
    cursors: Vec<usize>,
    level: HashMap<C::Elem, usize>,
    order: Vec<C::Elem>,
}

impl<C: Sigma1Chain> State<'_, C> {
    /// Enumerates the next element of `I_{m_i}` into `J_i, J_{i+1}, ...`.
    fn step(&mut self, i: usize) -> C::Elem {
        let e = self.chain.enumerate(self.markers[i], self.cursors[i]);
        self.cursors[i] += 1;
        match self.level.get_mut(&e) {
            Some(l) => *l = (*l).min(i),
            None => {
                self.level.insert(e.clone(), i);
                self.order.push(e.clone());
            }
        }
        e
    }

    fn in_j(&self, n: usize, e: &C::Elem) -> bool {
        let gens: Vec<C::Elem> = self
            .order
            .iter()
            .filter(|x| self.level[*x] <= n)
            .cloned()
            .collect();
        self.chain.in_generated(&gens, e)
    }
}

/// Runs stages `0..stages` of the marker construction.
///
/// Membership in `J_{i-1}` is tested in the ideal generated by what has been
/// enumerated so far. A fresh-witness search that finds nothing among the
/// first `WITNESS_PROBE` elements of `I_{m_i}` moves the marker up again.
pub fn priority_merge<C: Sigma1Chain>(
    chain: &C,
    stages: usize,
) -> Result<PriorityRun<C::Elem>, LabError> {
    let mut st = State {
        chain,
        markers: vec![0],
        cursors: vec![0],
        level: HashMap::new(),
        order: Vec::new(),
    };
    let mut trace = Trace::new();
    let first = st.step(0);
    trace.push(0, format!("J_0 <- {first}"));
    let mut witnesses = vec![first];
    let mut last_move = vec![0];
    let mut injuries = vec![0];
    let mut marker_history = vec![st.markers.clone()];
    let mut witness_history = vec![witnesses.clone()];

    for s in 1..stages {
        st.markers.push(st.markers[s - 1] + 1);
        st.cursors.push(0);
        last_move.push(s);
        injuries.push(0);
        trace.push(s, format!("create J_{s} with m_{s} = {}", st.markers[s]));
        let mut new_witness = None;
        for i in 0..=s {
            let e = st.step(i);
            trace.push(s, format!("J_{i} <- {e}"));
            if i + 1 == s {
                new_witness = Some(e);
            }
        }
        witnesses.push(new_witness.expect("stage enumerates into J_{s-1}"));
        for i in 1..=s {
            if !st.in_j(i - 1, &witnesses[i]) {
                continue;
            }
            st.markers[i] += 1;
            st.cursors[i] = 0;
            if i < s {
                injuries[i] += 1;
            }
            last_move[i] = s;
            trace.push(
                s,
                format!(
                    "x_{i} = {} entered J_{}; m_{i} -> {}",
                    witnesses[i],
                    i - 1,
                    st.markers[i]
                ),
            );
            let mut probed = 0;
            let fresh = loop {
                if probed >= WITNESS_SEARCH_CAP {
                    return Err(LabError::NoFreshWitness { index: i, stage: s });
                }
                if st.cursors[i] >= WITNESS_PROBE {
                    st.markers[i] += 1;
                    st.cursors[i] = 0;
                    trace.push(
                        s,
                        format!(
                            "I_{} exhausted; m_{i} -> {}",
                            st.markers[i] - 1,
                            st.markers[i]
                        ),
                    );
                }
                probed += 1;
                let e = st.step(i);
                if !st.in_j(i - 1, &e) {
                    break e;
                }
            };
            trace.push(s, format!("x_{i} := {fresh}"));
            witnesses[i] = fresh;
        }
        marker_history.push(st.markers.clone());
        witness_history.push(witnesses.clone());
    }

    let enumerated = st.order.iter().map(|e| (e.clone(), st.level[e])).collect();
    Ok(PriorityRun {
        stages,
        markers: st.markers,
        witnesses,
        marker_history,
        witness_history,
        last_move,
        injuries,
        enumerated,
        trace,
    })
}
