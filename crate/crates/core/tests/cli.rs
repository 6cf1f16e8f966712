use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_latdim"))
}

fn fixture(id: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "..", "fixtures", &format!("{id}.json")]
        .iter()
        .collect();
    p.to_string_lossy().into_owned()
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn run_stdin(args: &[&str], input: &[u8]) -> Output {
    let mut child = bin()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input).unwrap();
    child.wait_with_output().unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn dims_json_on_fig7() {
    let v = json(&run(&["dims", "--json", &fixture("fig7")]));
    assert_eq!(v["ind_large"], 3);
    assert_eq!(v["dim_covering"], 2);
}

#[test]
fn dims_table_by_default() {
    let o = run(&["dims", &fixture("fig8")]);
    let s = String::from_utf8(o.stdout).unwrap();
    assert!(s.lines().any(|l| l.split_whitespace().eq(["Ind", "1"])));
    assert!(s.lines().any(|l| l.split_whitespace().eq(["dim", "2"])));
}

#[test]
fn rect_product_piped_into_dims() {
    let c = fixture("chain3");
    let p = run(&["product", "--op", "rect", &c, &c]);
    assert!(p.status.success());
    let v = json(&run_stdin(&["dims", "--json", "-"], &p.stdout));
    assert_eq!(v["ind_large"], 1);
}

#[test]
fn validation_failure_exits_one() {
    let o = run(&["validate", &fixture("bad-no-top")]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("NotBounded"));
    let o = run_stdin(&["dims", "-"], b"{\"name\": 1}");
    assert_eq!(o.status.code(), Some(1));
    let o = run(&["dims", "/nonexistent/lattice.json"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn size_limit_exits_two() {
    let o = run(&["covers", &fixture("fig19")]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("SizeLimit"));
}

#[test]
fn covers_and_filters() {
    let v = json(&run(&["covers", "--minimal", &fixture("fig8")]));
    assert_eq!(v, serde_json::json!([["x2", "x3", "x4"]]));
    let all = json(&run(&["covers", &fixture("fig1.L1")]));
    assert!(all.as_array().unwrap().len() > 1);
    let v = json(&run(&["filters", "--prime", &fixture("fig5")]));
    assert_eq!(v.as_array().unwrap().len(), 2);
    assert!(v.as_array().unwrap().iter().all(|f| f["prime"] == true));
}

#[test]
fn constructions_round_trip() {
    let o = run(&["construct", "graft-m", "2"]);
    let v = json(&run_stdin(&["dims", "--json", "-"], &o.stdout));
    assert_eq!((v["ind_small"].as_i64(), v["ind_large"].as_i64()), (Some(1), Some(2)));
    let o = run(&["construct", "add-top", &fixture("fig7")]);
    let v = json(&run_stdin(&["dims", "--json", "-"], &o.stdout));
    assert_eq!(v["ind_large"], 0);
    assert_eq!(run(&["construct", "ind-k", "0"]).status.code(), Some(1));
}

#[test]
fn dot_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("fig4.dot");
    let o = run(&["dot", &fixture("fig4"), "--out", out.to_str().unwrap()]);
    assert!(o.status.success());
    let dot = std::fs::read_to_string(&out).unwrap();
    assert!(dot.starts_with("digraph"));
    let doc: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(fixture("fig4")).unwrap()).unwrap();
    assert_eq!(dot.matches("->").count(), doc["covers"].as_array().unwrap().len());
}

#[test]
fn catalog_search_finds_gap_three() {
    let v = json(&run(&["search", "--seed", "0", "--catalog-only"]));
    assert_eq!(v["ind_large_minus_ind_small"]["value"], 3);
    assert_eq!(v["ind_large_minus_ind_small"]["witness"], "fig18");
    assert_eq!(v["violations"].as_array().unwrap().len(), 0);
}

#[test]
fn seeded_search_is_clean_and_deterministic() {
    let args = ["search", "--seed", "42", "--max-n", "7", "--samples", "500"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn fixture_check_reports_the_single_mismatch() {
    let o = run(&["fixtures", "--check"]);
    let s = String::from_utf8(o.stdout).unwrap();
    let fails: Vec<&str> = s.lines().filter(|l| l.starts_with("FAIL")).collect();
    assert_eq!(fails, ["FAIL fig5 kdim: expected Some(AtLeast(1)), got Some(Exactly(0))"]);
    assert_eq!(o.status.code(), Some(1));
}
