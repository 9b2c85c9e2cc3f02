use std::fmt::Write as _;
use std::time::Duration;

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// Computed result disagrees with a recorded reference value; not a
    /// failure.
    Flagged,
}

impl Status {
    pub fn label(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "FAIL",
            Status::Flagged => "flagged",
        }
    }
}

/// One verified claim. `reference` names the result being checked, or is
/// `plumbing` for internal consistency checks.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub suite: String,
    pub id: String,
    pub reference: String,
    pub status: Status,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SuiteReport {
    pub name: String,
    pub checks: Vec<CheckRecord>,
    pub elapsed: Duration,
}

impl SuiteReport {
    pub fn new(name: &str) -> Self {
        SuiteReport { name: name.to_string(), checks: Vec::new(), elapsed: Duration::ZERO }
    }

    pub fn push(&mut self, id: impl Into<String>, reference: &str, status: Status, detail: impl Into<String>) {
        self.checks.push(CheckRecord {
            suite: self.name.clone(),
            id: id.into(),
            reference: reference.to_string(),
            status,
            detail: detail.into(),
        });
    }

    /// Record a pass, or a failure described by `detail`.
    pub fn check(&mut self, id: impl Into<String>, reference: &str, ok: bool, detail: impl Into<String>) {
        let status = if ok { Status::Pass } else { Status::Fail };
        self.push(id, reference, status, detail);
    }

    /// Record the outcome of a counted property: passes iff no violations.
    pub fn tally(&mut self, id: impl Into<String>, reference: &str, cases: usize, violations: &[String]) {
        let detail = match violations.first() {
            None => format!("{cases} cases"),
            Some(first) => format!("{} of {cases} cases violate; first: {first}", violations.len()),
        };
        self.check(id, reference, violations.is_empty(), detail);
    }

    pub fn absorb(&mut self, other: SuiteReport) {
        self.checks.extend(other.checks);
        self.elapsed += other.elapsed;
    }

    pub fn count(&self, status: Status) -> usize {
        self.checks.iter().filter(|c| c.status == status).count()
    }

    pub fn passed(&self) -> bool {
        self.count(Status::Fail) == 0
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckRecord> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }

    pub fn flagged(&self) -> impl Iterator<Item = &CheckRecord> {
        self.checks.iter().filter(|c| c.status == Status::Flagged)
    }

    pub fn find(&self, id: &str) -> Option<&CheckRecord> {
        self.checks.iter().find(|c| c.id == id)
    }

    /// One JSON object per check, newline terminated. Timing is left out so
    /// the output is reproducible.
    pub fn to_jsonl(&self) -> String {
        self.checks
            .iter()
            .map(|c| serde_json::to_string(c).expect("plain data serializes") + "\n")
            .collect()
    }

    pub fn from_jsonl(name: &str, text: &str) -> Result<Self, serde_json::Error> {
        let checks = text
            .lines()
            .filter(|l| !l.trim().is_empty())
            .map(serde_json::from_str)
            .collect::<Result<_, _>>()?;
        Ok(SuiteReport { name: name.to_string(), checks, elapsed: Duration::ZERO })
    }

    /// Aligned human-readable table followed by a totals line.
    pub fn summary_table(&self) -> String {
        let w_suite = self.checks.iter().map(|c| c.suite.len()).max().unwrap_or(5).max(5);
        let w_id = self.checks.iter().map(|c| c.id.len()).max().unwrap_or(2).max(5);
        let mut out = String::new();
        let _ = writeln!(out, "{:<w_suite$}  {:<w_id$}  {:<7}  detail", "suite", "check", "status");
        for c in &self.checks {
            let _ = writeln!(
                out,
                "{:<w_suite$}  {:<w_id$}  {:<7}  {}",
                c.suite,
                c.id,
                c.status.label(),
                c.detail
            );
        }
        let _ = writeln!(
            out,
            "{}: {} passed, {} failed, {} flagged in {:.2?}",
            self.name,
            self.count(Status::Pass),
            self.count(Status::Fail),
            self.count(Status::Flagged),
            self.elapsed
        );
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn jsonl_round_trip() {
        let mut r = SuiteReport::new("demo");
        r.check("a", "plumbing", true, "ok");
        r.push("b", "plumbing", Status::Flagged, "differs");
        r.tally("c", "plumbing", 3, &["x".into()]);
        let back = SuiteReport::from_jsonl("demo", &r.to_jsonl()).unwrap();
        assert_eq!(back.checks, r.checks);
        assert!(!r.passed());
        assert_eq!(r.count(Status::Flagged), 1);
        assert!(r.to_jsonl().contains("\"status\":\"flagged\""));
        assert!(r.summary_table().contains("1 passed, 1 failed, 1 flagged"));
    }
}
