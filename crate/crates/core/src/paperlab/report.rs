use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// The computation contradicts a printed value, and every independent
    /// cross-check sides with the computation.
    Discrepancy,
}

/// Outcome of one verifier on one context.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub claim: String,
    pub context: String,
    pub status: Status,
    pub counts: BTreeMap<String, i64>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Vec<String>>,
    /// Files to write next to the report (name, contents), e.g. DOT dumps of a failed isomorphism.
    #[serde(skip)]
    pub attachments: Vec<(String, String)>,
}

impl Report {
    pub fn new(claim: impl Into<String>, context: impl Into<String>) -> Self {
        Report {
            claim: claim.into(),
            context: context.into(),
            status: Status::Pass,
            counts: BTreeMap::new(),
            notes: Vec::new(),
            counterexample: None,
            attachments: Vec::new(),
        }
    }

    pub fn count(&mut self, key: impl Into<String>, value: usize) -> &mut Self {
        self.counts.insert(key.into(), i64::try_from(value).expect("count fits in i64"));
        self
    }

    pub fn note(&mut self, note: impl Into<String>) -> &mut Self {
        self.notes.push(note.into());
        self
    }

    /// Marks the report failed; the first counterexample recorded is kept.
    pub fn fail(&mut self, reason: impl Into<String>, counterexample: Vec<String>) -> &mut Self {
        self.status = Status::Fail;
        self.notes.push(reason.into());
        if self.counterexample.is_none() {
            self.counterexample = Some(counterexample);
        }
        self
    }

    /// Equality check that fails the report on mismatch.
    pub fn expect_eq(&mut self, what: &str, left: usize, right: usize) -> bool {
        if left != right {
            self.fail(format!("{what}: {left} ≠ {right}"), vec![]);
            false
        } else {
            true
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn is_hard_failure(&self) -> bool {
        self.status == Status::Fail
    }

    /// One summary line, e.g. `pass  theorem-2.3  [A2_3 at 3]  tau_tilt_B=5 …`.
    pub fn summary(&self) -> String {
        let status = match self.status {
            Status::Pass => "pass",
            Status::Fail => "FAIL",
            Status::Discrepancy => "discrepancy",
        };
        let counts: Vec<String> = self.counts.iter().map(|(k, v)| format!("{k}={v}")).collect();
        format!("{status:<11} {:<16} [{}] {}", self.claim, self.context, counts.join(" "))
    }
}

/// Number of hard failures in a suite: the suite's exit status.
pub fn hard_failures(reports: &[Report]) -> usize {
    reports.iter().filter(|r| r.is_hard_failure()).count()
}
