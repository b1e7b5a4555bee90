use std::fs;
use std::path::Path;

use compat_tilings::cli::{run_captured, EXIT_DATA, EXIT_NONE, EXIT_NO_INPUT, EXIT_USAGE};
use serde_json::Value;

const K3: &str = "3 3\n0 1\n1 2\n0 2\n";

fn run(args: &[&str]) -> (i32, String, String) {
    run_captured(std::iter::once("compat-tilings").chain(args.iter().copied()))
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p.to_string_lossy().into_owned()
}

#[test]
fn missing_file_is_reported_as_no_input() {
    let (code, out, err) = run(&["invariants", "/nonexistent/k3.txt"]);
    assert_eq!(code, EXIT_NO_INPUT);
    assert!(out.is_empty());
    assert!(err.contains("nonexistent"));
}

#[test]
fn malformed_graph_is_a_data_error() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "g.txt", "3 1\n0 7\n");
    assert_eq!(run(&["invariants", &g]).0, EXIT_DATA);
    let g = write(dir.path(), "h.txt", "not a graph");
    assert_eq!(run(&["invariants", &g]).0, EXIT_DATA);
}

#[test]
fn invariants_json_carries_header() {
    let dir = tempfile::tempdir().unwrap();
    let k3 = write(dir.path(), "k3.txt", K3);
    let (code, out, _) = run(&["--json", "--seed", "5", "invariants", &k3]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["seed"], 5);
    assert_eq!(v["report"]["chi_star"], "3/1");
    assert_eq!(v["report"]["sigma"], 1);
}

#[test]
fn construct_then_solve_finds_no_factor() {
    let dir = tempfile::tempdir().unwrap();
    let k3 = write(dir.path(), "k3.txt", K3);
    let out = dir.path().join("inst");
    let (code, _, err) = run(&["construct", "--pattern", &k3, "--n", "6", "--out", out.to_str().unwrap()]);
    assert_eq!(code, 0, "{err}");
    let g = out.join("graph.txt");
    let (code, text, _) = run(&["solve", "--pattern", &k3, "--graph", g.to_str().unwrap()]);
    assert_eq!(code, EXIT_NONE);
    assert!(text.contains("no compatible factor"));
}

#[test]
fn augmented_instance_round_trips_through_files() {
    let dir = tempfile::tempdir().unwrap();
    let k3 = write(dir.path(), "k3.txt", K3);
    let out = dir.path().join("inst");
    let o = out.to_str().unwrap();
    let (code, _, err) = run(&["--json", "construct", "--pattern", &k3, "--n", "12", "--mu", "1/6", "--augment", "capped", "--out", o]);
    assert_eq!(code, 0, "{err}");
    let report: Value = serde_json::from_str(&fs::read_to_string(out.join("report.json")).unwrap()).unwrap();
    assert!(report.is_object());
    let (g, f) = (out.join("graph.txt"), out.join("incompat.txt"));
    let (code, _, _) = run(&["solve", "--pattern", &k3, "--graph", g.to_str().unwrap(), "--incompat", f.to_str().unwrap()]);
    assert_eq!(code, EXIT_NONE);
}

#[test]
fn solve_finds_factor_in_complete_graph() {
    let dir = tempfile::tempdir().unwrap();
    let k3 = write(dir.path(), "k3.txt", K3);
    let edges: Vec<String> = (0..6).flat_map(|u| (u + 1..6).map(move |v| format!("{u} {v}"))).collect();
    let k6 = write(dir.path(), "k6.txt", &format!("6 15\n{}\n", edges.join("\n")));
    let (code, out, _) = run(&["--json", "solve", "--pattern", &k3, "--graph", &k6]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["report"]["mode"], "factor");
    let (code, out, _) = run(&["solve", "--pattern", &k3, "--graph", &k6, "--mode", "count"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("20 "));
}

#[test]
fn lattice_membership_and_transferral() {
    let dir = tempfile::tempdir().unwrap();
    let gens = write(dir.path(), "gens.txt", "1,2\n2,1\n");
    let (code, out, _) = run(&["--json", "lattice", "--generators", &gens, "--target", "1,-1", "--transferral"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["report"]["membership"]["member"], true);
    assert_eq!(v["report"]["transferral"]["i"], 0);
}

#[test]
fn connector_commands() {
    let dir = tempfile::tempdir().unwrap();
    let k2 = write(dir.path(), "k2.txt", "2 1\n0 1\n");
    let k4 = write(dir.path(), "k4.txt", "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
    let base = ["--pattern", &k2, "--graph", &k4];
    let mut args = vec!["absorb", "find"];
    args.extend(base);
    args.extend(["--u", "0", "--v", "1", "--exclude", "3"]);
    let (code, out, _) = run(&args);
    assert_eq!(code, 0);
    assert!(out.contains("[2]"));
    let mut args = vec!["absorb", "verify", "connector"];
    args.extend(base);
    args.extend(["--u", "0", "--v", "1", "--set", "2,3", "--t", "2"]);
    let (code, out, _) = run(&args);
    assert_eq!(code, EXIT_NONE, "odd |S| + 1 violates the size condition");
    assert!(out.contains("Invalid"));
}

#[test]
fn sweep_emits_csv() {
    let dir = tempfile::tempdir().unwrap();
    let k4 = write(dir.path(), "k4.txt", "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
    let p = write(dir.path(), "p.txt", "0 1\n2 3\n");
    let (code, out, _) = run(&["regcount", "sweep", "--graph", &k4, "--partition", &p, "--spec", "1,1", "--mus", "0,1/4", "--csv"]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "mu,achieved_bound,total,compatible,c_observed");
    assert_eq!(lines.len(), 3);
}

#[test]
fn usage_errors() {
    assert_eq!(run(&["acceptance", "A99"]).0, EXIT_USAGE);
    assert_eq!(run(&["frobnicate"]).0, EXIT_USAGE);
    assert_eq!(run(&["solve"]).0, EXIT_USAGE);
    assert_eq!(run(&["--help"]).0, 0);
}

#[test]
fn single_acceptance_criterion() {
    let (code, out, _) = run(&["acceptance", "A1"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("PASS A1"));
}
