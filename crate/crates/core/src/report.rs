//! Verification reports: one record per check, emitted as text or JSON.

use std::fmt::Write as _;
use std::time::Instant;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Warn,
}

impl Status {
    pub fn label(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Warn => "WARN",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub id: String,
    pub cite: String,
    pub status: Status,
    pub expected: String,
    pub actual: String,
    pub ms: u64,
}

impl Check {
    pub fn new(id: &str, cite: &str, ok: bool, expected: impl Into<String>, actual: impl Into<String>) -> Check {
        Check {
            id: id.to_string(),
            cite: cite.to_string(),
            status: if ok { Status::Pass } else { Status::Fail },
            expected: expected.into(),
            actual: actual.into(),
            ms: 0,
        }
    }

    /// Runs `f` and records its wall time. `f` returns `(ok, expected, actual)`.
    pub fn timed<F>(id: &str, cite: &str, f: F) -> Check
    where
        F: FnOnce() -> (bool, String, String),
    {
        let start = Instant::now();
        let (ok, expected, actual) = f();
        let mut c = Check::new(id, cite, ok, expected, actual);
        c.ms = start.elapsed().as_millis() as u64;
        c
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub suite: String,
    pub status: Status,
    pub checks: Vec<Check>,
}

impl VerificationReport {
    pub fn new(suite: &str, checks: Vec<Check>) -> VerificationReport {
        let mut r = VerificationReport {
            suite: suite.to_string(),
            status: Status::Pass,
            checks,
        };
        r.refresh_status();
        r
    }

    fn refresh_status(&mut self) {
        self.status = if self.checks.iter().all(Check::passed) {
            Status::Pass
        } else {
            Status::Fail
        };
    }

    pub fn push(&mut self, c: Check) {
        self.checks.push(c);
        self.refresh_status();
    }

    pub fn extend(&mut self, other: VerificationReport) {
        self.checks.extend(other.checks);
        self.refresh_status();
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn get(&self, id: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.id == id)
    }

    /// One line per check; failures add the expected and actual values.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let _ = writeln!(out, "{}  {}  {}", c.status.label(), c.id, c.cite);
            if c.status != Status::Pass {
                let _ = writeln!(out, "      expected: {}", c.expected);
                let _ = writeln!(out, "      actual:   {}", c.actual);
            }
        }
        let passed = self.checks.iter().filter(|c| c.passed()).count();
        let _ = writeln!(
            out,
            "{}: {} ({}/{} checks passed)",
            self.suite,
            self.status.label(),
            passed,
            self.checks.len()
        );
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(s: &str) -> serde_json::Result<VerificationReport> {
        serde_json::from_str(s)
    }

    /// Copy with all timings zeroed, for comparisons that ignore timing.
    pub fn without_timings(&self) -> VerificationReport {
        let mut r = self.clone();
        for c in &mut r.checks {
            c.ms = 0;
        }
        r
    }
}
