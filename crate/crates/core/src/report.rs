//! Check results and verification reports.
//!
//! Every verification operation produces a list of named checks. A check
//! that fails always carries the first offending basis tuple, rendered
//! with basis labels where available. Reports serialize deterministically:
//! same inputs, same bytes, regardless of parallelism.

use serde::Serialize;

/// Outcome of a single named identity check.
#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    /// Stable identifier, e.g. "hopf.mul-assoc".
    pub id: String,
    /// The identity being verified, written out.
    pub anchor: String,
    pub pass: bool,
    /// First offending basis tuple, when the check failed.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
}

impl CheckResult {
    pub fn pass(id: impl Into<String>, anchor: impl Into<String>) -> CheckResult {
        CheckResult {
            id: id.into(),
            anchor: anchor.into(),
            pass: true,
            counterexample: None,
        }
    }

    pub fn fail(
        id: impl Into<String>,
        anchor: impl Into<String>,
        counterexample: impl Into<String>,
    ) -> CheckResult {
        CheckResult {
            id: id.into(),
            anchor: anchor.into(),
            pass: false,
            counterexample: Some(counterexample.into()),
        }
    }

    pub fn from_counterexample(
        id: impl Into<String>,
        anchor: impl Into<String>,
        ce: Option<String>,
    ) -> CheckResult {
        match ce {
            None => CheckResult::pass(id, anchor),
            Some(c) => CheckResult::fail(id, anchor, c),
        }
    }
}

/// An ordered list of check results.
#[derive(Clone, Debug, Default, Serialize)]
pub struct Report {
    pub checks: Vec<CheckResult>,
}

impl Report {
    pub fn new() -> Report {
        Report { checks: Vec::new() }
    }

    pub fn push(&mut self, c: CheckResult) {
        self.checks.push(c);
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn first_failure(&self) -> Option<&CheckResult> {
        self.checks.iter().find(|c| !c.pass)
    }

    /// Looks up a check by id.
    pub fn check(&self, id: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.id == id)
    }
}

impl std::fmt::Display for Report {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for c in &self.checks {
            let status = if c.pass { "PASS" } else { "FAIL" };
            write!(f, "{status}  {}  [{}]", c.id, c.anchor)?;
            if let Some(ce) = &c.counterexample {
                write!(f, "  at {ce}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// One input the suite ran on, with a content digest.
#[derive(Clone, Debug, Serialize)]
pub struct InputRecord {
    pub name: String,
    pub sha256: String,
}

/// A check result qualified by the object it ran on.
#[derive(Clone, Debug, Serialize)]
pub struct ScopedCheck {
    pub scope: String,
    pub id: String,
    pub anchor: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
}

/// The full outcome of a suite run. The JSON rendering is deterministic:
/// same inputs, same bytes; wall-clock time appears only in the text
/// rendering.
#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub inputs: Vec<InputRecord>,
    pub checks: Vec<ScopedCheck>,
    pub pass: bool,
    #[serde(skip)]
    pub duration: std::time::Duration,
}

impl VerificationReport {
    pub fn new(suite: impl Into<String>) -> VerificationReport {
        VerificationReport {
            suite: suite.into(),
            inputs: Vec::new(),
            checks: Vec::new(),
            pass: true,
            duration: std::time::Duration::ZERO,
        }
    }

    pub fn absorb(&mut self, scope: &str, report: Report) {
        for c in report.checks {
            self.pass &= c.pass;
            self.checks.push(ScopedCheck {
                scope: scope.to_string(),
                id: c.id,
                anchor: c.anchor,
                pass: c.pass,
                counterexample: c.counterexample,
            });
        }
    }

    pub fn push(&mut self, scope: &str, check: CheckResult) {
        self.pass &= check.pass;
        self.checks.push(ScopedCheck {
            scope: scope.to_string(),
            id: check.id,
            anchor: check.anchor,
            pass: check.pass,
            counterexample: check.counterexample,
        });
    }

    pub fn merge(&mut self, other: VerificationReport) {
        self.pass &= other.pass;
        self.checks.extend(other.checks);
        for i in other.inputs {
            if !self.inputs.iter().any(|x| x.name == i.name) {
                self.inputs.push(i);
            }
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        use std::fmt::Write;
        let mut out = String::new();
        writeln!(out, "suite: {}", self.suite).unwrap();
        for i in &self.inputs {
            writeln!(out, "input: {}  sha256={}", i.name, i.sha256).unwrap();
        }
        for c in &self.checks {
            let status = if c.pass { "PASS" } else { "FAIL" };
            write!(out, "{status}  {}  {}  [{}]", c.scope, c.id, c.anchor).unwrap();
            if let Some(ce) = &c.counterexample {
                write!(out, "  at {ce}").unwrap();
            }
            writeln!(out).unwrap();
        }
        let (passed, total) = (
            self.checks.iter().filter(|c| c.pass).count(),
            self.checks.len(),
        );
        writeln!(
            out,
            "{}: {passed}/{total} checks passed in {:.3}s",
            if self.pass { "OK" } else { "FAILED" },
            self.duration.as_secs_f64()
        )
        .unwrap();
        out
    }
}
