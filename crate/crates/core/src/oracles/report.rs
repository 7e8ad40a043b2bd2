use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

/// Maximum number of counterexamples kept verbatim in a report.
pub const MAX_RECORDED_FAILURES: usize = 25;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub inputs: String,
    pub expected: String,
    pub actual: String,
}

/// Outcome of one suite run.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub suite: String,
    pub parameters: BTreeMap<String, String>,
    pub seed: Option<u64>,
    pub total_checks: u64,
    pub failure_count: u64,
    pub failures: Vec<Failure>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub derived_constants: BTreeMap<String, String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub discrepancies: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl VerificationReport {
    pub fn new(suite: impl Into<String>) -> Self {
        Self {
            suite: suite.into(),
            parameters: BTreeMap::new(),
            seed: None,
            total_checks: 0,
            failure_count: 0,
            failures: Vec::new(),
            derived_constants: BTreeMap::new(),
            discrepancies: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = Some(seed);
        self
    }

    pub fn param(mut self, key: &str, value: impl ToString) -> Self {
        self.parameters.insert(key.to_string(), value.to_string());
        self
    }

    pub fn passed(&self) -> bool {
        self.failure_count == 0
    }

    /// Records one check; a mismatch becomes a failure.
    pub fn check(&mut self, ok: bool, failure: impl FnOnce() -> Failure) {
        self.total_checks += 1;
        if !ok {
            self.fail(failure());
        }
    }

    pub fn fail(&mut self, failure: Failure) {
        self.failure_count += 1;
        if self.failures.len() < MAX_RECORDED_FAILURES {
            self.failures.push(failure);
        }
    }

    pub fn note(&mut self, s: impl Into<String>) {
        self.notes.push(s.into());
    }

    pub fn merge(&mut self, other: VerificationReport) {
        self.total_checks += other.total_checks;
        for f in other.failures {
            if self.failures.len() < MAX_RECORDED_FAILURES {
                self.failures.push(f);
            }
        }
        self.failure_count += other.failure_count;
        self.derived_constants.extend(other.derived_constants);
        self.discrepancies.extend(other.discrepancies);
        self.notes.extend(other.notes);
    }
}

impl Failure {
    pub fn new(inputs: impl ToString, expected: impl ToString, actual: impl ToString) -> Self {
        Self {
            inputs: inputs.to_string(),
            expected: expected.to_string(),
            actual: actual.to_string(),
        }
    }
}
