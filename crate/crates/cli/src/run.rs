use crate::cache::{Cache, CacheOutcome};
use anyhow::{Context, Result};
use involcells::analysis::Analysis;
use involcells::coxeter::CoxeterGroup;
use involcells::hecke::{KLTable, WeightFunction};
use involcells::kottwitz::{verify_all, VerificationReport};
use regex::Regex;
use std::path::PathBuf;
use std::sync::Arc;

/// Default largest group order accepted without an explicit `--budget`.
pub const DEFAULT_BUDGET: usize = 2000;

#[derive(Clone, Debug)]
pub struct RunConfig {
    /// type label such as `B3`, `I2(7)` or `A2xA1`
    pub group: String,
    /// `1`, `2,1` or `t=2,s=1`
    pub weights: String,
    pub budget: usize,
    /// check-name globs (`*`, `?`); empty selects everything
    pub checks: Vec<String>,
    pub cache_dir: Option<PathBuf>,
}

impl RunConfig {
    pub fn new(group: &str, weights: &str) -> Self {
        RunConfig {
            group: group.into(),
            weights: weights.into(),
            budget: DEFAULT_BUDGET,
            checks: Vec::new(),
            cache_dir: None,
        }
    }

    pub fn kl_table(&self) -> Result<(KLTable, CacheOutcome)> {
        let g = CoxeterGroup::from_label(&self.group, self.budget)
            .with_context(|| format!("group {} (budget {}; raise it with --budget)", self.group, self.budget))?;
        let g = Arc::new(g);
        let phi = WeightFunction::parse(g.system(), &self.weights)
            .with_context(|| format!("weights {:?} for {}", self.weights, self.group))?;
        match &self.cache_dir {
            Some(dir) => Cache::new(dir.clone()).load_or_build(g, phi),
            None => Ok((KLTable::build(g, phi)?, CacheOutcome::Disabled)),
        }
    }

    pub fn analysis(&self) -> Result<(Analysis, CacheOutcome)> {
        let (kl, outcome) = self.kl_table()?;
        Ok((Analysis::from_kl(kl)?, outcome))
    }

    pub fn verify(&self) -> Result<VerificationReport> {
        let (a, _) = self.analysis()?;
        select_checks(verify_all(&a, self.budget.max(DEFAULT_BUDGET)), &self.checks)
    }
}

fn glob_regex(pattern: &str) -> Result<Regex> {
    let mut re = String::from("^");
    for c in pattern.chars() {
        match c {
            '*' => re.push_str(".*"),
            '?' => re.push('.'),
            c => re.push_str(&regex::escape(&c.to_string())),
        }
    }
    re.push('$');
    Ok(Regex::new(&re)?)
}

/// Keep the checks whose name matches one of the globs (all if none given).
pub fn select_checks(mut report: VerificationReport, globs: &[String]) -> Result<VerificationReport> {
    if globs.is_empty() {
        return Ok(report);
    }
    let res = globs.iter().map(|g| glob_regex(g)).collect::<Result<Vec<_>>>()?;
    report.checks.retain(|c| res.iter().any(|r| r.is_match(&c.name)));
    anyhow::ensure!(!report.checks.is_empty(), "no check matches {globs:?}");
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn globs() {
        let r = glob_regex("typeB.*").unwrap();
        assert!(r.is_match("typeB.f") && !r.is_match("typeD.signs") && !r.is_match("xtypeB.f"));
        assert!(glob_regex("thm.?").unwrap().is_match("thm.a"));
        assert!(!glob_regex("thm.a").unwrap().is_match("thmxa"));
    }
}
