use std::path::Path;
use std::process::{Command, Output};

fn tritile(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tritile")).args(args).current_dir(dir).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn construct_then_verify() {
    let dir = tempfile::tempdir().unwrap();
    let o = tritile(&["construct", "--kind", "q-pent", "--n", "12", "-o", "q12.tritile"], dir.path());
    assert_eq!(o.status.code(), Some(0));
    let o = tritile(&["verify", "q12.tritile"], dir.path());
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "valid pentagon n=12 s=8 t_perfect=true");
    let o = tritile(&["verify", "q12.tritile", "--json"], dir.path());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["valid"], true);
    assert_eq!(v["stats"]["s"], 8);
    let o = tritile(&["stats", "q12.tritile"], dir.path());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["n"], 12);
    let o = tritile(&["gamma", "q12.tritile", "--json"], dir.path());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["census"]["v2"], 5);
}

#[test]
fn invalid_tiling_fails_verification() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("bad.tritile"), "tritile 1\nP 0 0\nP 2 0\nP 0 2\nT U 0 0 1\n").unwrap();
    let o = tritile(&["verify", "bad.tritile"], dir.path());
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("invalid"));
}

#[test]
fn reconstruct_prints_a_document() {
    let dir = tempfile::tempdir().unwrap();
    let o = tritile(&["reconstruct", "--shape", "hex", "--sizes", "1,3,3,3,4,4,5,5,6"], dir.path());
    assert_eq!(o.status.code(), Some(0));
    let t = tritile::format::parse(&stdout(&o)).unwrap();
    assert_eq!((t.len(), t.distinct_sizes()), (9, 5));
}

#[test]
fn enumerate_streams_documents() {
    let dir = tempfile::tempdir().unwrap();
    let o = tritile(&["enumerate", "--shape", "tri", "--max-tiles", "6", "--scale", "3", "--summary", "s.json"], dir.path());
    assert_eq!(o.status.code(), Some(0));
    let docs: Vec<_> = stdout(&o).split("---\n").map(|d| tritile::format::parse(d).unwrap()).collect();
    let summary: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(dir.path().join("s.json")).unwrap()).unwrap();
    assert_eq!(summary["tilings"].as_u64().unwrap() as usize, docs.len());
    assert!(docs.iter().all(|t| t.verify().valid));
}

#[test]
fn table2_and_render() {
    let dir = tempfile::tempdir().unwrap();
    let o = tritile(&["table2", "--shape", "tri", "--n", "15", "-o", "t.tritile"], dir.path());
    assert_eq!(o.status.code(), Some(0));
    let o = tritile(&["render", "t.tritile", "-o", "t.svg", "--labels", "--px-per-unit", "4"], dir.path());
    assert_eq!(o.status.code(), Some(0));
    let svg = std::fs::read_to_string(dir.path().join("t.svg")).unwrap();
    assert_eq!(svg.matches("<polygon").count(), 15);
    assert_eq!(svg.matches("<text").count(), 15);
}

#[test]
fn check_theorems_writes_a_report() {
    let dir = tempfile::tempdir().unwrap();
    let o = tritile(&["check-theorems", "--scale", "4", "--max-tiles", "6", "--report", "r.json"], dir.path());
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let r: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(dir.path().join("r.json")).unwrap()).unwrap();
    assert_eq!(r["passed"], true);
    assert_eq!(r["scan"]["violations"].as_array().unwrap().len(), 0);
}

#[test]
fn usage_errors_exit_two_with_json() {
    let dir = tempfile::tempdir().unwrap();
    for args in [&["frobnicate"][..], &["enumerate", "--shape", "blob", "--max-tiles", "3", "--scale", "2"], &["construct", "--kind", "derived", "--n", "6"]] {
        let o = tritile(args, dir.path());
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        let e: serde_json::Value = serde_json::from_slice(&o.stderr).unwrap();
        assert_eq!(e["error"], "usage");
    }
    let o = tritile(&["verify", "missing.tritile"], dir.path());
    assert_eq!(o.status.code(), Some(1));
}
