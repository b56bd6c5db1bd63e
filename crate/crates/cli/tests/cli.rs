use std::path::Path;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_involcells")).args(args).env_remove("INVOLCELLS_CACHE").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn verify_a3_passes() {
    let o = run(&["verify", "--group", "A3", "--weights", "1"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("kottwitz.conjecture"));
}

#[test]
fn verify_b2_unequal_passes() {
    let o = run(&["verify", "--group", "B2", "--weights", "t=2,s=1", "--checks", "unequal.*", "--checks", "conj.*"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("unequal.smoothness") && s.contains("all smooth = true"), "{s}");
}

#[test]
fn e8_needs_a_budget() {
    let o = run(&["verify", "--group", "E8"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("budget"));
}

#[test]
fn unknown_glob_is_an_error() {
    assert_eq!(run(&["verify", "--group", "A1", "--checks", "nothing.*"]).status.code(), Some(2));
}

#[test]
fn table1_rows() {
    let o = run(&["table1", "--group", "I2(7)", "--group", "B4", "--group", "H3", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let got: Vec<(u64, u64)> =
        v.as_array().unwrap().iter().map(|r| (r["cells"].as_u64().unwrap(), r["smooth"].as_u64().unwrap())).collect();
    assert_eq!(got, [(3, 2), (10, 5), (7, 4)]);
}

fn export(what: &str, group: &str, cache: Option<&Path>) -> serde_json::Value {
    let mut args = vec!["export", what, "--group", group];
    let c;
    if let Some(p) = cache {
        c = p.to_str().unwrap().to_string();
        args.extend(["--cache-dir", &c]);
    }
    let o = run(&args);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_str(&stdout(&o)).unwrap()
}

#[test]
fn export_shapes() {
    assert_eq!(export("cells", "A2", None)["left_cells"].as_array().unwrap().len(), 4);
    let chars = export("chars", "B2", None);
    let rows = chars["characters"].as_array().unwrap();
    assert_eq!((rows.len(), rows[0]["values"].as_array().unwrap().len()), (5, 5));
    let rho = export("rho", "A2", None);
    assert_eq!(rho["modules"].as_array().unwrap().len(), 2);
    let rho3 = export("rho", "A2", None);
    assert_eq!(rho, rho3);
    assert_eq!(run(&["export", "bogus", "--group", "A2"]).status.code(), Some(2));
}

#[test]
fn reports_are_deterministic() {
    let a = run(&["verify", "--group", "B3", "--format", "json"]);
    let b = run(&["verify", "--group", "B3", "--format", "json"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn cache_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let fresh = export("leading", "B3", Some(dir.path()));
    let ls = stdout(&run(&["cache", "ls", "--cache-dir", dir.path().to_str().unwrap()]));
    assert!(ls.contains("B3"), "{ls}");
    let cached = export("leading", "B3", Some(dir.path()));
    assert_eq!(fresh, cached);
    let purge = stdout(&run(&["cache", "purge", "--cache-dir", dir.path().to_str().unwrap()]));
    assert!(purge.starts_with("removed 1 "), "{purge}");
    assert_eq!(export("leading", "B3", Some(dir.path())), fresh);
}
