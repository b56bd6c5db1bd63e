use crate::manifest::CriterionResult;
use anyhow::Result;
use clap::ValueEnum;
use involcells::kottwitz::VerificationReport;
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Table,
}

/// Pretty canonical JSON: sorted keys, two-space indent, trailing newline.
pub fn json<T: Serialize>(x: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(&serde_json::to_value(x)?)?;
    s.push('\n');
    Ok(s)
}

pub fn report_table(r: &VerificationReport) -> String {
    let width = r.checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
    let phi: Vec<String> = r.phi.iter().map(|x| x.to_string()).collect();
    let mut out = format!("{} φ = ({})\n", r.group, phi.join(","));
    for c in &r.checks {
        out.push_str(&format!("  {:width$}  {:7}  {}\n", c.name, c.status.to_string(), c.details));
    }
    out
}

pub fn report(r: &VerificationReport, format: Format) -> Result<String> {
    match format {
        Format::Json => json(r),
        Format::Table => Ok(report_table(r)),
    }
}

pub fn criterion_line(c: &CriterionResult) -> String {
    let status = if c.passed { "PASS" } else { "FAIL" };
    let mut line = format!("criterion {} [{status}] {} ({} run/check pairs)", c.id, c.title, c.cases);
    if !c.passed {
        let shown: Vec<&str> = c.problems.iter().take(5).map(String::as_str).collect();
        line.push_str(&format!(": {}", shown.join("; ")));
        if c.problems.len() > 5 {
            line.push_str(&format!("; … {} more", c.problems.len() - 5));
        }
    }
    line
}
