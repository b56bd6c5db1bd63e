//! One line per acceptance criterion. Runs marked slow in the manifest
//! (F4) are included with `-- --slow` or `INVOLCELLS_SLOW=1`.

use involcells_cli::manifest::Manifest;
use involcells_cli::render::criterion_line;
use involcells_cli::RunConfig;
use rayon::prelude::*;
use std::collections::BTreeMap;
use std::process::ExitCode;

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().collect();
    // `cargo test --list` probes every target
    if args.iter().any(|a| a == "--list") {
        println!("acceptance: test");
        return ExitCode::SUCCESS;
    }
    let slow = args.iter().any(|a| a == "--slow") || std::env::var("INVOLCELLS_SLOW").is_ok_and(|v| v == "1");
    let manifest = Manifest::default_set();
    let runs = manifest.selected_runs(slow);
    println!("acceptance: {} runs{}", runs.len(), if slow { " (with slow runs)" } else { "" });
    let reports: BTreeMap<_, _> = runs
        .par_iter()
        .filter_map(|r| match RunConfig::new(&r.group, &r.weights).verify() {
            Ok(report) => Some((r.id(), report)),
            Err(e) => {
                eprintln!("{}: {e:#}", r.id());
                None
            }
        })
        .collect();
    let results = manifest.evaluate(&reports);
    for c in &results {
        println!("{}", criterion_line(c));
    }
    if !slow {
        println!("note: F4 rows skipped; rerun with `cargo test --test acceptance -- --slow`");
    }
    if results.iter().all(|c| c.passed) {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
