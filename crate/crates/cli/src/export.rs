//! Canonical JSON exports of computed data. Exact numbers are strings.

use anyhow::{bail, Result};
use involcells::analysis::Analysis;
use involcells::kottwitz::rho_character;
use serde_json::{json, Value};

pub const TARGETS: [&str; 4] = ["cells", "chars", "leading", "rho"];
/// Version of the export schemas below.
pub const SCHEMA_VERSION: u32 = 1;

fn header(a: &Analysis, what: &str) -> Value {
    json!({
        "schema": format!("involcells-{what}"),
        "version": SCHEMA_VERSION,
        "group": a.g().system().label(),
        "phi": a.phi.values(),
    })
}

fn words(a: &Analysis, elements: &[usize]) -> Vec<String> {
    elements.iter().map(|&w| a.g().word_string(w)).collect()
}

pub fn cells(a: &Analysis) -> Value {
    let p = &a.cells;
    let mut v = header(a, "cells");
    v["left_cells"] = p
        .left_cells()
        .iter()
        .enumerate()
        .map(|(c, cell)| {
            json!({
                "id": c,
                "two_sided": p.two_sided_of_left(c),
                "elements": words(a, cell),
                "multiplicities": a.cell_chars.multiplicities[c],
            })
        })
        .collect();
    v["two_sided_cells"] = p
        .two_sided_cells()
        .iter()
        .enumerate()
        .map(|(t, cell)| {
            json!({
                "id": t,
                "size": cell.len(),
                "left_cells": p.left_cells_in(t),
                "family": a.families.members[t],
                "smooth": a.smooth[t].smooth(),
            })
        })
        .collect();
    v
}

pub fn chars(a: &Analysis) -> Value {
    let t = &a.table;
    let mut v = header(a, "chars");
    v["classes"] = t
        .class_reps()
        .iter()
        .zip(t.class_sizes())
        .map(|(&w, &size)| json!({ "rep": a.g().word_string(w), "size": size }))
        .collect();
    v["characters"] = (0..t.len())
        .map(|chi| {
            json!({
                "index": chi,
                "degree": t.degree(chi),
                "values": t.row(chi).iter().map(|x| x.to_string()).collect::<Vec<_>>(),
                "a": a.leading.a[chi],
                "b": a.b[chi],
                "f": a.leading.f[chi].to_string(),
                "special": a.special[chi],
                "family": a.families.family_of_char[chi],
            })
        })
        .collect();
    v
}

pub fn leading(a: &Analysis) -> Value {
    let g = a.g();
    let mut v = header(a, "leading");
    v["c"] = (0..a.table.len())
        .map(|chi| {
            let nonzero: Vec<Value> = (0..g.order())
                .filter(|&w| a.leading.c[chi][w] != involcells::numfield::AlgebraicNumber::from_int(0))
                .map(|w| json!([g.word_string(w), a.leading.c[chi][w].to_string()]))
                .collect();
            json!({ "character": chi, "a": a.leading.a[chi], "nonzero": nonzero })
        })
        .collect();
    v["distinguished"] = a
        .leading
        .distinguished
        .iter()
        .map(|&d| json!([g.word_string(d), a.leading.n[d].to_string()]))
        .collect();
    v
}

pub fn rho(a: &Analysis) -> Result<Value> {
    let g = a.g();
    let mut v = header(a, "rho");
    let mut out = Vec::new();
    for k in g.involution_classes() {
        let r = rho_character(g, &[k])?;
        out.push(json!({
            "class": g.word_string(g.classes()[k].rep),
            "size": g.classes()[k].members.len(),
            "character": r,
            "decomposition": a.table.decompose_int(&r)?,
        }));
    }
    v["modules"] = Value::Array(out);
    Ok(v)
}

pub fn export(a: &Analysis, what: &str) -> Result<Value> {
    Ok(match what {
        "cells" => cells(a),
        "chars" => chars(a),
        "leading" => leading(a),
        "rho" => rho(a)?,
        _ => bail!("unknown export target {what:?} (expected one of {TARGETS:?})"),
    })
}
