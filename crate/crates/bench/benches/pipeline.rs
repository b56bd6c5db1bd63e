use criterion::{criterion_group, criterion_main, Criterion};
use involcells::analysis::Analysis;
use involcells::characters::CharacterTable;
use involcells::coxeter::CoxeterGroup;
use involcells::hecke::{KLTable, WeightFunction};
use involcells::kottwitz::{rho_character, verify_all};
use std::hint::black_box;
use std::sync::Arc;

fn group(label: &str) -> Arc<CoxeterGroup> {
    Arc::new(CoxeterGroup::from_label(label, 2000).unwrap())
}

fn kl(c: &mut Criterion) {
    let mut grp = c.benchmark_group("kl_build");
    grp.sample_size(10);
    for (label, w) in [("B3", "1"), ("B3", "2,1"), ("H3", "1"), ("A4", "1")] {
        let g = group(label);
        let phi = WeightFunction::parse(g.system(), w).unwrap();
        grp.bench_function(format!("{label}[{w}]"), |b| b.iter(|| KLTable::build(g.clone(), phi.clone()).unwrap()));
    }
    grp.finish();
}

fn tables(c: &mut Criterion) {
    let mut grp = c.benchmark_group("character_table");
    grp.sample_size(10);
    for label in ["B4", "H3", "D4"] {
        let g = group(label);
        grp.bench_function(label, |b| b.iter(|| CharacterTable::compute(black_box(&g)).unwrap()));
    }
    grp.finish();
}

fn rho(c: &mut Criterion) {
    let g = group("B4");
    let classes = g.involution_classes();
    c.bench_function("rho_all_involutions_B4", |b| b.iter(|| rho_character(&g, black_box(&classes)).unwrap()));
}

fn battery(c: &mut Criterion) {
    let mut grp = c.benchmark_group("verify_all");
    grp.sample_size(10);
    for label in ["B3", "D4"] {
        let a = Analysis::from_label(label, "1", 2000).unwrap();
        grp.bench_function(label, |b| b.iter(|| verify_all(black_box(&a), 2000)));
    }
    grp.finish();
}

criterion_group!(benches, kl, tables, rho, battery);
criterion_main!(benches);
