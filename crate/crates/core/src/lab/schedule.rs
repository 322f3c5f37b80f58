//! Stage-indexed enumerations of natural numbers and their text format.
//!
//! A schedule file lists lines `enter <element> at <stage>`. Blank lines and
//! everything after `#` are ignored. A file may hold several schedules, each
//! introduced by a line `schedule <name>`; lines before the first header
//! belong to a schedule named `default`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScheduleError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("schedule {0:?} is defined twice")]
    DuplicateName(String),
}

/// A monotone enumeration `A_0 ⊆ A_1 ⊆ ...`: each element carries the first
/// stage at which it is enumerated.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct StageEnumeration {
    // element -> entry stage
    stage_of: BTreeMap<u64, u64>,
}

impl StageEnumeration {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Builds the enumeration from `(element, stage)` pairs; an element listed
    /// twice keeps its earliest stage.
    pub fn from_entries<I: IntoIterator<Item = (u64, u64)>>(entries: I) -> Self {
        let mut stage_of = BTreeMap::new();
        for (x, s) in entries {
            stage_of
                .entry(x)
                .and_modify(|t: &mut u64| *t = (*t).min(s))
                .or_insert(s);
        }
        Self { stage_of }
    }

    /// Each listed element enters at stage `f(element)`.
    pub fn from_fn(elements: impl IntoIterator<Item = u64>, f: impl Fn(u64) -> u64) -> Self {
        Self::from_entries(elements.into_iter().map(|x| (x, f(x))))
    }

    /// The even numbers `2m`, entering at stage `m^2`, for `m < count`.
    pub fn evens(count: u64) -> Self {
        Self::from_entries((0..count).map(|m| (2 * m, m * m)))
    }

    pub fn insert(&mut self, x: u64, s: u64) {
        let t = self.stage_of.entry(x).or_insert(s);
        *t = (*t).min(s);
    }

    /// `(element, stage)` pairs in order of stage, then element.
    pub fn entries(&self) -> Vec<(u64, u64)> {
        let mut v: Vec<(u64, u64)> = self.stage_of.iter().map(|(&x, &s)| (x, s)).collect();
        v.sort_by_key(|&(x, s)| (s, x));
        v
    }

    pub fn len(&self) -> usize {
        self.stage_of.len()
    }

    pub fn is_empty(&self) -> bool {
        self.stage_of.is_empty()
    }

    pub fn entry_stage(&self, x: u64) -> Option<u64> {
        self.stage_of.get(&x).copied()
    }

    /// `x ∈ A_s`.
    pub fn contains_at(&self, x: u64, s: u64) -> bool {
        self.entry_stage(x).is_some_and(|t| t <= s)
    }

    /// `A_s`.
    pub fn at_stage(&self, s: u64) -> BTreeSet<u64> {
        self.stage_of
            .iter()
            .filter(|&(_, &t)| t <= s)
            .map(|(&x, _)| x)
            .collect()
    }

    /// Elements entering exactly at stage `s`, ascending.
    pub fn entering_at(&self, s: u64) -> Vec<u64> {
        self.stage_of
            .iter()
            .filter(|&(_, &t)| t == s)
            .map(|(&x, _)| x)
            .collect()
    }

    /// All elements ever enumerated.
    pub fn elements(&self) -> BTreeSet<u64> {
        self.stage_of.keys().copied().collect()
    }

    pub fn last_stage(&self) -> Option<u64> {
        self.stage_of.values().copied().max()
    }

    /// Re-timed enumeration with `|A_s| = min(s, |A|)`: the k-th element in
    /// enumeration order enters at stage k.
    pub fn normalized(&self) -> Self {
        Self::from_entries(
            self.entries()
                .into_iter()
                .enumerate()
                .map(|(k, (x, _))| (x, k as u64 + 1)),
        )
    }
}

impl fmt::Display for StageEnumeration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (x, s) in self.entries() {
            writeln!(f, "enter {x} at {s}")?;
        }
        Ok(())
    }
}

pub const DEFAULT_SCHEDULE: &str = "default";

/// Parses a single-schedule file; headers are rejected.
pub fn parse_schedule(text: &str) -> Result<StageEnumeration, ScheduleError> {
    let mut all = parse_schedules(text)?;
    match all.len() {
        0 => Ok(StageEnumeration::empty()),
        1 => Ok(all.remove(0).1),
        _ => Err(ScheduleError::Parse {
            line: 0,
            message: "expected a single schedule".into(),
        }),
    }
}

/// Parses a file that may contain several named schedules, in file order.
pub fn parse_schedules(text: &str) -> Result<Vec<(String, StageEnumeration)>, ScheduleError> {
    let mut out: Vec<(String, StageEnumeration)> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let words: Vec<&str> = line.split_whitespace().collect();
        let err = |message: &str| ScheduleError::Parse {
            line: line_no,
            message: message.to_string(),
        };
        match words.as_slice() {
            ["schedule", name] => {
                if out.iter().any(|(n, _)| n == name) {
                    return Err(ScheduleError::DuplicateName(name.to_string()));
                }
                out.push((name.to_string(), StageEnumeration::empty()));
            }
            ["enter", x, "at", s] => {
                let x: u64 = x
                    .parse()
                    .map_err(|_| err("element is not a natural number"))?;
                let s: u64 = s
                    .parse()
                    .map_err(|_| err("stage is not a natural number"))?;
                if out.is_empty() {
                    out.push((DEFAULT_SCHEDULE.to_string(), StageEnumeration::empty()));
                }
                out.last_mut().unwrap().1.insert(x, s);
            }
            _ => {
                return Err(err(
                    "expected `enter <element> at <stage>` or `schedule <name>`",
                ))
            }
        }
    }
    Ok(out)
}

/// Renders several named schedules in the multi-schedule format.
pub fn render_schedules(schedules: &[(String, StageEnumeration)]) -> String {
    let mut out = String::new();
    for (name, s) in schedules {
        out.push_str(&format!("schedule {name}\n{s}"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stages_are_monotone() {
        let k = StageEnumeration::evens(5);
        let mut prev = BTreeSet::new();
        for s in 0..20 {
            let cur = k.at_stage(s);
            assert!(prev.is_subset(&cur));
            prev = cur;
        }
        assert_eq!(k.at_stage(4), BTreeSet::from([0, 2, 4]));
        assert_eq!(k.entry_stage(8), Some(16));
    }

    #[test]
    fn normalization_counts_stages() {
        let k = StageEnumeration::from_entries([(7, 3), (1, 3), (4, 10)]);
        let n = k.normalized();
        for s in 0..5u64 {
            assert_eq!(n.at_stage(s).len() as u64, s.min(3));
        }
        assert_eq!(n.elements(), k.elements());
        assert_eq!(n.entry_stage(1), Some(1));
    }

    #[test]
    fn file_format_round_trip() {
        let text = "# evens\nenter 0 at 0\nenter 2 at 1   # late\n\nenter 4 at 4\n";
        let k = parse_schedule(text).unwrap();
        assert_eq!(k, StageEnumeration::evens(3));
        assert_eq!(parse_schedule(&k.to_string()).unwrap(), k);
        let multi = "schedule A\nenter 1 at 2\nschedule B\nenter 2 at 3\n";
        let all = parse_schedules(multi).unwrap();
        assert_eq!(all.len(), 2);
        assert_eq!(all[1].0, "B");
        assert_eq!(parse_schedules(&render_schedules(&all)).unwrap(), all);
        assert!(matches!(
            parse_schedule("enter x at 1"),
            Err(ScheduleError::Parse { line: 1, .. })
        ));
        assert!(parse_schedules("schedule A\nschedule A\n").is_err());
    }
}
