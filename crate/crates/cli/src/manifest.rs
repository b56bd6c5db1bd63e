//! The pinned acceptance set: which `(W, φ)` runs to perform and which
//! checks must pass on which runs for each acceptance criterion.

use anyhow::{bail, Context, Result};
use involcells::kottwitz::{Status, VerificationReport};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// The default manifest, shipped with the crate.
pub const DEFAULT_MANIFEST: &str = include_str!("../acceptance.toml");

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Manifest {
    pub version: u32,
    #[serde(rename = "run")]
    pub runs: Vec<RunSpec>,
    #[serde(rename = "criterion")]
    pub criteria: Vec<Criterion>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunSpec {
    pub group: String,
    pub weights: String,
    #[serde(default)]
    pub slow: bool,
}

impl RunSpec {
    pub fn id(&self) -> String {
        format!("{}:{}", self.group, self.weights)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Scope {
    All,
    Equal,
    Unequal,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Requirement {
    pub checks: Vec<String>,
    #[serde(default)]
    pub scope: Option<Scope>,
    #[serde(default)]
    pub runs: Vec<String>,
    /// accept `skipped`, as long as each check passes on some run
    #[serde(default)]
    pub allow_skipped: bool,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Criterion {
    pub id: u32,
    pub title: String,
    #[serde(rename = "require")]
    pub requirements: Vec<Requirement>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CriterionResult {
    pub id: u32,
    pub title: String,
    pub passed: bool,
    /// number of (run, check) pairs inspected
    pub cases: usize,
    pub problems: Vec<String>,
}

fn is_constant(weights: &str) -> bool {
    let vals: Vec<&str> = weights.split(',').map(|w| w.rsplit('=').next().unwrap_or(w).trim()).collect();
    vals.iter().all(|v| *v == vals[0])
}

impl Manifest {
    pub fn parse(text: &str) -> Result<Self> {
        let m: Manifest = toml::from_str(text).context("parsing acceptance manifest")?;
        if m.version != 1 {
            bail!("manifest version {} is not supported", m.version);
        }
        let ids: Vec<String> = m.runs.iter().map(RunSpec::id).collect();
        for c in &m.criteria {
            for r in &c.requirements {
                if r.scope.is_none() == r.runs.is_empty() {
                    bail!("criterion {}: give exactly one of scope and runs", c.id);
                }
                if let Some(bad) = r.runs.iter().find(|x| !ids.contains(x)) {
                    bail!("criterion {}: unknown run {bad}", c.id);
                }
            }
        }
        Ok(m)
    }

    pub fn default_set() -> Self {
        Self::parse(DEFAULT_MANIFEST).expect("shipped manifest is valid")
    }

    pub fn selected_runs(&self, slow: bool) -> Vec<&RunSpec> {
        self.runs.iter().filter(|r| slow || !r.slow).collect()
    }

    fn runs_for(&self, req: &Requirement) -> Vec<&RunSpec> {
        match req.scope {
            Some(scope) => self
                .runs
                .iter()
                .filter(|r| match scope {
                    Scope::All => true,
                    Scope::Equal => is_constant(&r.weights),
                    Scope::Unequal => !is_constant(&r.weights),
                })
                .collect(),
            None => self.runs.iter().filter(|r| req.runs.contains(&r.id())).collect(),
        }
    }

    /// Evaluate every criterion against reports keyed by run id. Slow runs
    /// without a report are left out; any other missing report is a problem.
    pub fn evaluate(&self, reports: &BTreeMap<String, VerificationReport>) -> Vec<CriterionResult> {
        self.criteria
            .iter()
            .map(|c| {
                let mut problems = Vec::new();
                let mut cases = 0;
                for req in &c.requirements {
                    for check in &req.checks {
                        let mut any_pass = false;
                        for run in self.runs_for(req) {
                            let Some(report) = reports.get(&run.id()) else {
                                if !run.slow {
                                    problems.push(format!("{}: no report", run.id()));
                                }
                                continue;
                            };
                            cases += 1;
                            match report.get(check).map(|x| (x.status, &x.details)) {
                                Some((Status::Pass, _)) => any_pass = true,
                                Some((Status::Skipped, _)) if req.allow_skipped => {}
                                Some((s, d)) => problems.push(format!("{} {check}: {s} ({d})", run.id())),
                                None => problems.push(format!("{} {check}: not reported", run.id())),
                            }
                        }
                        if !any_pass {
                            problems.push(format!("{check}: passes on no run"));
                        }
                    }
                }
                CriterionResult { id: c.id, title: c.title.clone(), passed: problems.is_empty(), cases, problems }
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use involcells::kottwitz::Check;

    #[test]
    fn shipped_manifest_covers_all_criteria() {
        let m = Manifest::default_set();
        let ids: Vec<u32> = m.criteria.iter().map(|c| c.id).collect();
        assert_eq!(ids, (1..=9).collect::<Vec<_>>());
        assert_eq!(m.selected_runs(false).len() + 1, m.selected_runs(true).len());
    }

    #[test]
    fn constant_weights() {
        assert!(is_constant("1") && is_constant("2,2") && is_constant("t=3,s=3"));
        assert!(!is_constant("2,1") && !is_constant("t=2,s=1"));
    }

    #[test]
    fn skipped_fails_unless_allowed() {
        let text = r#"
version = 1
[[run]]
group = "A1"
weights = "1"
[[criterion]]
id = 1
title = "t"
[[criterion.require]]
checks = ["x"]
scope = "all"
"#;
        let m = Manifest::parse(text).unwrap();
        let report = |s| {
            let c = Check { name: "x".into(), status: s, details: String::new() };
            BTreeMap::from([("A1:1".to_string(), VerificationReport::new("A1".into(), vec![1], vec![c]))])
        };
        assert!(m.evaluate(&report(Status::Pass))[0].passed);
        assert!(!m.evaluate(&report(Status::Skipped))[0].passed);
        assert!(!m.evaluate(&report(Status::Fail))[0].passed);
        assert!(!m.evaluate(&BTreeMap::new())[0].passed);
    }
}
