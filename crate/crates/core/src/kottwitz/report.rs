use serde::Serialize;
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
        })
    }
}

/// One named check. `details` holds the case count on success, the reason
/// for skipping, or the first failure witnesses.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub details: String,
}

/// At most this many failure witnesses are kept per check.
pub const MAX_WITNESSES: usize = 8;

impl Check {
    pub fn skipped(name: &str, why: impl Into<String>) -> Self {
        Check { name: name.into(), status: Status::Skipped, details: why.into() }
    }

    /// Pass iff `failures` is empty.
    pub fn from_failures(name: &str, cases: usize, failures: Vec<String>) -> Self {
        if failures.is_empty() {
            return Check { name: name.into(), status: Status::Pass, details: format!("{cases} cases") };
        }
        let n = failures.len();
        let mut shown: Vec<String> = failures.into_iter().take(MAX_WITNESSES).collect();
        if n > MAX_WITNESSES {
            shown.push(format!("… {} more", n - MAX_WITNESSES));
        }
        Check { name: name.into(), status: Status::Fail, details: format!("{n} of {cases} cases fail: {}", shown.join("; ")) }
    }

    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }
}

/// Checks for one `(W, φ)`, sorted by name.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub group: String,
    pub phi: Vec<i64>,
    pub checks: Vec<Check>,
}

impl VerificationReport {
    pub fn new(group: String, phi: Vec<i64>, mut checks: Vec<Check>) -> Self {
        checks.sort_by(|a, b| a.name.cmp(&b.name));
        VerificationReport { group, phi, checks }
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}
