//! End-to-end tests of the command-line surface, driving the built binary.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_lielat"))
}

fn write(dir: &Path, name: &str, content: &str) -> PathBuf {
    let path = dir.join(name);
    std::fs::write(&path, content).unwrap();
    path
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn assert_code(out: &Output, code: i32) {
    assert_eq!(
        out.status.code(),
        Some(code),
        "stdout: {}\nstderr: {}",
        String::from_utf8_lossy(&out.stdout),
        String::from_utf8_lossy(&out.stderr)
    );
}

#[test]
fn build_ideals_lattice_hasse_pipeline() {
    let dir = tempfile::tempdir().unwrap();
    let spec = write(dir.path(), "spec.json", r#"{ "variant": "BI", "simples": ["sl2"], "modules": [[2]] }"#);
    let alg = dir.path().join("alg.json");
    let ids = dir.path().join("ids.json");
    let lat = dir.path().join("lat.json");

    assert_code(&run(&["build", spec.to_str().unwrap(), "-o", alg.to_str().unwrap()]), 0);

    let analyze = run(&["analyze", alg.to_str().unwrap()]);
    assert_code(&analyze, 0);
    let text = String::from_utf8_lossy(&analyze.stdout);
    assert!(text.contains("type: I"));
    assert!(text.contains("radical dim: 3"));

    assert_code(
        &run(&["ideals", alg.to_str().unwrap(), "-o", ids.to_str().unwrap()]),
        0,
    );

    let lattice = run(&["lattice", ids.to_str().unwrap(), "-o", lat.to_str().unwrap()]);
    assert_code(&lattice, 0);
    let line = String::from_utf8_lossy(&lattice.stdout);
    assert!(line.contains("size=3"));
    assert!(line.contains("distributive=true"));
    assert!(line.contains("complemented=false"));

    let hasse = run(&["hasse", lat.to_str().unwrap()]);
    assert_code(&hasse, 0);
    let dot = String::from_utf8_lossy(&hasse.stdout);
    assert_eq!(dot.matches(" -> ").count(), 2);
    assert!(dot.contains("shape = point"));

    let labeled = run(&["hasse", lat.to_str().unwrap(), "--labels"]);
    assert!(String::from_utf8_lossy(&labeled.stdout).contains("label = \"d3.0\""));

    // round trip: dualizing twice reloads the lattice file and reproduces
    // it byte for byte
    let dual1 = dir.path().join("dual1.json");
    let dual2 = dir.path().join("dual2.json");
    assert_code(&run(&["dual", lat.to_str().unwrap(), "-o", dual1.to_str().unwrap()]), 0);
    assert_code(&run(&["dual", dual1.to_str().unwrap(), "-o", dual2.to_str().unwrap()]), 0);
    assert_eq!(std::fs::read(&lat).unwrap(), std::fs::read(&dual2).unwrap());
}

#[test]
fn deterministic_outputs() {
    let dir = tempfile::tempdir().unwrap();
    let spec = write(
        dir.path(),
        "spec.json",
        r#"{ "variant": "C", "polys": [[1, 0, 1], [-1, 1]] }"#,
    );
    let a = run(&["build", spec.to_str().unwrap()]);
    let b = run(&["build", spec.to_str().unwrap()]);
    assert_code(&a, 0);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn infinite_lattice_exits_3_with_witness() {
    let dir = tempfile::tempdir().unwrap();
    let alg = write(dir.path(), "ab2.json", r#"{ "dim": 2, "basis": ["x", "y"], "brackets": [] }"#);
    let ids = dir.path().join("ids.json");
    let out = run(&["ideals", alg.to_str().unwrap(), "-o", ids.to_str().unwrap()]);
    assert_code(&out, 3);
    assert!(String::from_utf8_lossy(&out.stderr).contains("pencil"));
    let file = std::fs::read_to_string(&ids).unwrap();
    assert!(file.contains("\"status\": \"infinite\""));
    assert!(file.contains("\"witness\""));
    // the incomplete set cannot be turned into a lattice
    assert_code(&run(&["lattice", ids.to_str().unwrap()]), 2);
}

#[test]
fn budget_exceeded_exits_4() {
    let dir = tempfile::tempdir().unwrap();
    let spec = write(
        dir.path(),
        "spec.json",
        r#"{ "variant": "semisimple", "factors": ["sl2", "sl2"] }"#,
    );
    let alg = dir.path().join("alg.json");
    assert_code(&run(&["build", spec.to_str().unwrap(), "-o", alg.to_str().unwrap()]), 0);
    assert_code(&run(&["ideals", alg.to_str().unwrap(), "--budget", "3"]), 4);
}

#[test]
fn invalid_inputs_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write(dir.path(), "bad.json", "{ nope");
    assert_code(&run(&["build", bad.to_str().unwrap()]), 2);

    // isomorphic modules are rejected at validation
    let dup = write(
        dir.path(),
        "dup.json",
        r#"{ "variant": "BI", "simples": ["sl2"], "modules": [[2], [2]] }"#,
    );
    assert_code(&run(&["build", dup.to_str().unwrap()]), 2);

    // structure constants violating Jacobi are reported: [e,f] = e under
    // the usual h-action breaks the (e,f,h) triple
    let broken = write(
        dir.path(),
        "broken.json",
        r#"{ "dim": 3, "basis": ["e", "f", "h"],
             "brackets": [ { "i": "e", "j": "f", "value": ["1", "0", "0"] },
                           { "i": "e", "j": "h", "value": ["-2", "0", "0"] },
                           { "i": "f", "j": "h", "value": ["0", "2", "0"] } ] }"#,
    );
    let out = run(&["analyze", broken.to_str().unwrap()]);
    assert_code(&out, 2);

    assert_code(&run(&["analyze", dir.path().join("missing.json").to_str().unwrap()]), 2);
}

#[test]
fn enum_distributive_writes_files() {
    let dir = tempfile::tempdir().unwrap();
    let out_dir = dir.path().join("d3");
    let out = run(&["enum-distributive", "3", "--out-dir", out_dir.to_str().unwrap()]);
    assert_code(&out, 0);
    assert!(String::from_utf8_lossy(&out.stdout).contains("1 distributive lattices"));
    assert!(out_dir.join("d3.1.json").exists());
    assert!(out_dir.join("d3_all.dot").exists());
    // n = 3: exactly the 3-chain
    let file = std::fs::read_to_string(out_dir.join("d3.1.json")).unwrap();
    assert!(file.contains("\"size\": 3"));
    // the cap is enforced
    assert_code(&run(&["enum-distributive", "13", "--out-dir", out_dir.to_str().unwrap()]), 2);
}

#[test]
fn product_of_chains_is_a_cube() {
    let dir = tempfile::tempdir().unwrap();
    let chain2 = write(
        dir.path(),
        "c2.json",
        r#"{ "size": 2, "labels": ["0", "1"], "covers": [[0, 1]] }"#,
    );
    let prod = dir.path().join("prod.json");
    assert_code(
        &run(&["product", chain2.to_str().unwrap(), chain2.to_str().unwrap(), "-o", prod.to_str().unwrap()]),
        0,
    );
    let file = std::fs::read_to_string(&prod).unwrap();
    assert!(file.contains("\"size\": 4"));
    let parsed: serde_json::Value = serde_json::from_str(&file).unwrap();
    assert_eq!(parsed["covers"].as_array().unwrap().len(), 4);
}

#[test]
fn verify_reports_all_checks() {
    let out = run(&["verify"]);
    let text = String::from_utf8_lossy(&out.stdout);
    assert_code(&out, 0);
    assert_eq!(text.matches("[PASS]").count(), 10, "{text}");
    assert!(text.contains("all 10 checks passed"));
}
