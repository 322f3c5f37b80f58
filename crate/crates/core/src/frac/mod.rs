//! Fractions, multiplicative sets, localisation as an enumerated structure,
//! indexing of enumerated structures, and the staged ideal of
//! `Z[x, y, z0, z1, ...]` built from two disjoint schedules.

mod enumerated;
mod fraction;
mod multiplicative;
mod staged;

use thiserror::Error;

pub use enumerated::{
    index_structure, integer_at, Enumerator, IndexedRing, IntegerEnumerator, LocalizedIntegers,
    StageCost, ZeroRingEnumerator,
};
pub use fraction::Fraction;
pub use multiplicative::{localize, saturate, Localization, MultiplicativeSet};
pub use staged::{
    extract_separator, staged_membership, staged_membership_at, xy as staged_xy, z_var,
    RadicalOracle, StagedRingHandle, X_VAR, Y_VAR,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FracError {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("the multiplicative set contains zero")]
    ZeroDivisorInM,
    #[error("element not enumerated within the stage budget {budget}")]
    StageBudgetExhausted { budget: u64 },
    #[error("index {0} is outside the enumerated carrier")]
    UnknownIndex(usize),
    #[error("oracle places both z_{index} and z_{index} - 1 in J")]
    SeparationViolation { index: u64 },
    #[error("oracle omits {element}, which lies in the radical")]
    OracleNotExtendingRadical { element: String },
    #[error("{element} is enumerated into both schedules")]
    SchedulesNotDisjoint { element: u64 },
    #[error("{element} enters at stage 0; the construction enumerates nothing at stage 0")]
    StageZeroEntry { element: u64 },
    #[error("polynomial must have integer coefficients")]
    NotIntegral,
    #[error("localisation is not supported for this ring and set")]
    Unsupported,
}
