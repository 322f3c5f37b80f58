use serde::Serialize;

/// Failure messages kept per suite; further failures are only counted.
pub const MAX_REPORTED_FAILURES: usize = 50;

/// Outcome of one suite run. Everything except `elapsed_ms` is a function
/// of `(suite, seed, scale)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub suite: String,
    pub seed: u64,
    pub scale: u64,
    pub cases: u64,
    pub failures: Vec<String>,
    pub failure_count: u64,
    pub elapsed_ms: u64,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.failure_count == 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialises")
    }

    /// One-line human summary.
    pub fn summary(&self) -> String {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        format!(
            "{status} {} (seed {}, scale {}): {} cases, {} failures, {} ms",
            self.suite, self.seed, self.scale, self.cases, self.failure_count, self.elapsed_ms
        )
    }
}

/// Accumulates cases and failures while a suite runs.
#[derive(Debug, Default)]
pub struct Tally {
    pub cases: u64,
    pub failures: Vec<String>,
    pub failure_count: u64,
}

impl Tally {
    /// Records one case; `detail` is only evaluated on failure.
    pub fn check(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.fail(detail());
        }
    }

    /// Records one case that produced a result or an error.
    pub fn check_result<T, E: std::fmt::Display>(
        &mut self,
        r: Result<T, E>,
        context: impl FnOnce() -> String,
    ) -> Option<T> {
        match r {
            Ok(v) => {
                self.cases += 1;
                Some(v)
            }
            Err(e) => {
                self.cases += 1;
                self.fail(format!("{}: {e}", context()));
                None
            }
        }
    }

    fn fail(&mut self, msg: String) {
        self.failure_count += 1;
        if self.failures.len() < MAX_REPORTED_FAILURES {
            self.failures.push(msg);
        }
    }
}
