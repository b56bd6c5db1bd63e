use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand};
use involcells::analysis::Analysis;
use involcells::kottwitz::{table1_expected, VerificationReport};
use involcells_cli::cache::{Cache, CACHE_ENV};
use involcells_cli::manifest::Manifest;
use involcells_cli::render::{self, Format};
use involcells_cli::run::{RunConfig, DEFAULT_BUDGET};
use rayon::prelude::*;
use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "involcells", version, about = "Kazhdan-Lusztig cells, leading coefficients and involution modules")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Common {
    /// Largest group order accepted
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: usize,
    /// Directory for cached KL tables (caching is off when unset)
    #[arg(long, env = CACHE_ENV)]
    cache_dir: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
}

#[derive(Subcommand)]
enum Command {
    /// Run the checks for one group, or the pinned acceptance set when no
    /// group is given
    Verify {
        #[arg(long)]
        group: Option<String>,
        #[arg(long, default_value = "1")]
        weights: String,
        /// Check-name globs, e.g. `typeB.*`; repeatable
        #[arg(long)]
        checks: Vec<String>,
        /// Write JSON reports into this directory
        #[arg(long)]
        out: Option<PathBuf>,
        /// Alternative acceptance manifest
        #[arg(long)]
        manifest: Option<PathBuf>,
        /// Include runs marked slow (F4)
        #[arg(long)]
        slow: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Number of two-sided cells and of smooth ones, against the reference counts
    Table1 {
        /// Repeatable; defaults to every desk-scale row
        #[arg(long)]
        group: Vec<String>,
        #[arg(long)]
        slow: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Write computed data as canonical JSON
    Export {
        #[arg(value_parser = involcells_cli::export::TARGETS)]
        what: String,
        #[arg(long)]
        group: String,
        #[arg(long, default_value = "1")]
        weights: String,
        /// Output file (stdout when unset)
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        common: Common,
    },
    /// Inspect or clear the KL cache
    Cache {
        #[command(subcommand)]
        action: CacheAction,
        #[arg(long, env = CACHE_ENV, global = true)]
        cache_dir: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum CacheAction {
    Ls,
    Purge,
}

const TABLE1_ROWS: [&str; 12] =
    ["I2(5)", "I2(6)", "I2(7)", "I2(8)", "I2(9)", "I2(10)", "I2(11)", "I2(12)", "B3", "B4", "D4", "H3"];

fn config(group: &str, weights: &str, common: &Common, checks: Vec<String>) -> RunConfig {
    RunConfig {
        group: group.into(),
        weights: weights.into(),
        budget: common.budget,
        checks,
        cache_dir: common.cache_dir.clone(),
    }
}

fn file_name(id: &str) -> String {
    let safe: String = id.chars().map(|c| if c.is_ascii_alphanumeric() { c } else { '_' }).collect();
    format!("report-{safe}.json")
}

fn write(path: &Path, text: &str) -> Result<()> {
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        std::fs::create_dir_all(dir)?;
    }
    std::fs::write(path, text).with_context(|| format!("writing {}", path.display()))
}

fn emit(report: &VerificationReport, id: &str, out: &Option<PathBuf>, format: Format) -> Result<()> {
    if let Some(dir) = out {
        write(&dir.join(file_name(id)), &render::json(report)?)?;
    }
    if out.is_none() || format == Format::Table {
        print!("{}", render::report(report, format)?);
    }
    Ok(())
}

fn verify(
    group: Option<String>,
    weights: String,
    checks: Vec<String>,
    out: Option<PathBuf>,
    manifest: Option<PathBuf>,
    slow: bool,
    common: Common,
) -> Result<bool> {
    if let Some(group) = group {
        let report = config(&group, &weights, &common, checks).verify()?;
        emit(&report, &format!("{group}:{weights}"), &out, common.format)?;
        return Ok(report.all_passed());
    }
    let manifest = match manifest {
        Some(p) => Manifest::parse(&std::fs::read_to_string(&p)?)?,
        None => Manifest::default_set(),
    };
    let runs = manifest.selected_runs(slow);
    let reports: Vec<(String, VerificationReport)> = runs
        .par_iter()
        .map(|r| Ok((r.id(), config(&r.group, &r.weights, &common, checks.clone()).verify()?)))
        .collect::<Result<_>>()?;
    let mut ok = true;
    for (id, report) in &reports {
        emit(report, id, &out, common.format)?;
        ok &= report.all_passed();
    }
    if checks.is_empty() {
        let reports: BTreeMap<String, VerificationReport> = reports.into_iter().collect();
        let results = manifest.evaluate(&reports);
        for c in &results {
            println!("{}", render::criterion_line(c));
        }
        if let Some(dir) = &out {
            write(&dir.join("acceptance.json"), &render::json(&results)?)?;
        }
        ok &= results.iter().all(|c| c.passed);
    }
    Ok(ok)
}

fn table1(groups: Vec<String>, slow: bool, common: Common) -> Result<bool> {
    let mut groups = if groups.is_empty() { TABLE1_ROWS.map(String::from).to_vec() } else { groups };
    if slow && !groups.iter().any(|g| g == "F4") {
        groups.push("F4".into());
    }
    let rows: Vec<serde_json::Value> = groups
        .par_iter()
        .map(|g| {
            let (a, _) = config(g, "1", &common, Vec::new()).analysis()?;
            let computed = (a.cells.two_sided_cells().len(), a.smooth.iter().filter(|s| s.smooth()).count());
            let expected = a.g().system().irreducible_type().and_then(table1_expected);
            Ok(serde_json::json!({
                "group": g,
                "cells": computed.0,
                "smooth": computed.1,
                "expected": expected.map(|e| [e.0, e.1]),
                "pass": expected == Some(computed),
            }))
        })
        .collect::<Result<_>>()?;
    match common.format {
        Format::Json => print!("{}", render::json(&rows)?),
        Format::Table => {
            println!("{:8} {:>6} {:>7} {:>10}  status", "group", "cells", "smooth", "expected");
            for r in &rows {
                let exp = match r["expected"].as_array() {
                    Some(e) => format!("({}, {})", e[0], e[1]),
                    None => "-".into(),
                };
                let status = if r["pass"].as_bool() == Some(true) { "pass" } else { "fail" };
                println!("{:8} {:>6} {:>7} {:>10}  {status}", r["group"].as_str().unwrap(), r["cells"].as_u64().unwrap(), r["smooth"].as_u64().unwrap(), exp);
            }
        }
    }
    Ok(rows.iter().all(|r| r["pass"].as_bool() == Some(true)))
}

fn export(what: String, group: String, weights: String, out: Option<PathBuf>, common: Common) -> Result<bool> {
    let (kl, _) = config(&group, &weights, &common, Vec::new()).kl_table()?;
    let a = Analysis::from_kl(kl)?;
    let text = render::json(&involcells_cli::export::export(&a, &what)?)?;
    match out {
        Some(p) => write(&p, &text)?,
        None => print!("{text}"),
    }
    Ok(true)
}

fn cache(action: CacheAction, dir: Option<PathBuf>) -> Result<bool> {
    let dir = dir.with_context(|| format!("no cache directory: pass --cache-dir or set {CACHE_ENV}"))?;
    let cache = Cache::new(dir);
    match action {
        CacheAction::Ls => {
            for e in cache.list()? {
                let phi: Vec<String> = e.phi.iter().map(|x| x.to_string()).collect();
                println!("{}  {}  φ = ({})  {} bytes", e.file, e.group, phi.join(","), e.bytes);
            }
        }
        CacheAction::Purge => println!("removed {} files from {}", cache.purge()?, cache.dir().display()),
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Verify { group, weights, checks, out, manifest, slow, common } => {
            verify(group, weights, checks, out, manifest, slow, common)
        }
        Command::Table1 { group, slow, common } => table1(group, slow, common),
        Command::Export { what, group, weights, out, common } => export(what, group, weights, out, common),
        Command::Cache { action, cache_dir } => cache(action, cache_dir),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
