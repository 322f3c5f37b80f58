//! Stage-by-stage replays of the computability constructions, driven by
//! explicit schedules in place of noncomputable sets.

pub mod chains;
pub mod conidis;
pub mod modulus;
pub mod priority;
pub mod schedule;
pub mod zorn;

use std::fmt;

use thiserror::Error;

pub use chains::{
    bad_seq_to_chain, chain_stabilization, strictify_chain, IntegerChain, MonomialChain,
    Sigma1Chain, Strictification,
};
pub use conidis::{dominating_f, normalize_independent, DominationTable, LinearRingElement};
pub use modulus::{decide_with_dominator, dense_set_build, modulus, DenseSet};
pub use priority::{priority_merge, PriorityRun};
pub use schedule::{
    parse_schedule, parse_schedules, render_schedules, ScheduleError, StageEnumeration,
};
pub use zorn::{block_merge_poset, zorn_greedy_chain, BlockPoset, FnOrder, StagedOrder, ZornChain};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LabError {
    #[error("K restricted to {n} settles only at stage {needed}, beyond horizon {horizon}")]
    HorizonTooSmall { n: u64, needed: u64, horizon: u64 },
    #[error("chain stabilised within the budget at stage {stage}")]
    StabilizedWithinBudget { stage: usize },
    #[error("generator {index} not found within the budget")]
    GeneratorNotFound { index: usize },
    #[error("no fresh witness for index {index} at stage {stage}")]
    NoFreshWitness { index: usize, stage: usize },
    #[error("chain is not strictly increasing at index {index}")]
    ChainViolation { index: usize },
    #[error("chain misses the modulus at index {index}")]
    DominationViolation { index: usize },
}

/// Per-stage event log, one `stage <s>: <event>` line per event.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Trace {
    lines: Vec<String>,
}

impl Trace {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, stage: impl fmt::Display, event: impl fmt::Display) {
        self.lines.push(format!("stage {stage}: {event}"));
    }

    pub fn lines(&self) -> &[String] {
        &self.lines
    }

    pub fn len(&self) -> usize {
        self.lines.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lines.is_empty()
    }
}

impl fmt::Display for Trace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.lines {
            writeln!(f, "{l}")?;
        }
        Ok(())
    }
}
