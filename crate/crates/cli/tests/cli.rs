use std::io::Write;
use std::path::PathBuf;
use std::process::Command;

use qborel_cli::{run, Outcome, EXIT_PARSE, EXIT_PRECONDITION};
use serde_json::Value;

fn data(name: &str) -> String {
    let path: PathBuf = [env!("CARGO_MANIFEST_DIR"), "data", name].iter().collect();
    path.to_string_lossy().into_owned()
}

fn qborel(args: &[&str]) -> Outcome {
    run(std::iter::once("qborel").chain(args.iter().copied()))
}

fn ok(args: &[&str]) -> String {
    let out = qborel(args);
    assert_eq!(out.code, 0, "{args:?}: {}", out.stderr);
    out.stdout
}

#[test]
fn binary_matches_library_entry_point() {
    let q11 = data("q11.json");
    let out = Command::new(env!("CARGO_BIN_EXE_qborel"))
        .args(["gen", &q11, "x4*x9^2"])
        .output()
        .unwrap();
    assert!(out.status.success());
    assert_eq!(String::from_utf8(out.stdout).unwrap(), ok(&["gen", &q11, "x4*x9^2"]));
}

#[test]
fn binary_exit_code_for_bad_variable() {
    let out = Command::new(env!("CARGO_BIN_EXE_qborel"))
        .args(["gen", &data("q3.json"), "x9"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(EXIT_PARSE));
    assert!(out.stdout.is_empty());
}

#[test]
fn precondition_failures() {
    let q6 = data("q6.txt");
    assert_eq!(qborel(&["sfgen", &q6, "x1^2*x3"]).code, EXIT_PRECONDITION);
    assert_eq!(qborel(&["certify", &q6, "x1", "x2"]).code, EXIT_PRECONDITION);
    assert_eq!(qborel(&["gen", &q6, "1"]).code, EXIT_PRECONDITION);
}

#[test]
fn parse_failures() {
    let q3 = data("q3.json");
    assert_eq!(qborel(&["gen", &q3, "x1*y2"]).code, EXIT_PARSE);
    assert_eq!(qborel(&["gen", "/nonexistent/poset.json", "x1"]).code, EXIT_PARSE);
    assert_eq!(qborel(&["frobnicate"]).code, EXIT_PARSE);
    assert_eq!(qborel(&["sympow", &q3, "x1", "-d", "0"]).code, EXIT_PRECONDITION);
}

#[test]
fn cyclic_poset_file_is_rejected() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    writeln!(file, "3\nx1 < x2\nx2 < x3\nx3 < x1").unwrap();
    let out = qborel(&["gen", file.path().to_str().unwrap(), "x1"]);
    assert_eq!(out.code, EXIT_PARSE, "{}", out.stderr);
}

#[test]
fn text_and_json_posets_agree() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    writeln!(file, "# the three-element example\n3\n1 < 3").unwrap();
    let text = file.path().to_str().unwrap().to_string();
    for cmd in ["gen", "ass", "maxass", "spread", "lrg", "decompose"] {
        assert_eq!(ok(&[cmd, &text, "x2*x3"]), ok(&[cmd, &data("q3.json"), "x2*x3"]), "{cmd}");
    }
}

#[test]
fn json_output_has_sorted_keys() {
    let out = ok(&["--json", "invariants", &data("q11.json"), "x4*x9^2", "-d", "3"]);
    let value: Value = serde_json::from_str(&out).unwrap();
    let keys: Vec<&String> = value.as_object().unwrap().keys().collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);
    let text = ok(&["invariants", &data("q11.json"), "x4*x9^2", "-d", "3"]);
    assert!(text.contains("waldschmidt=3"), "{text}");
    assert!(text.contains("resurgence=1"), "{text}");
}

#[test]
fn symbolic_power_methods_agree() {
    let q11 = data("q11.json");
    let both = ok(&["sympow", &q11, "x4*x9^2", "-d", "2", "--method", "both"]);
    assert_eq!(both, ok(&["power", &q11, "x4*x9^2", "-d", "2"]));
    assert_eq!(both, ok(&["sympow", &q11, "x4*x9^2", "-d", "2", "--method", "oracle"]));
}

#[test]
fn certificate_moves() {
    let out = ok(&["certify", &data("q11.json"), "x4*x9^2", "x1*x6*x7"]);
    assert_eq!(out.lines().collect::<Vec<_>>(), ["x4 -> x1", "x9 -> x6", "x9 -> x7"]);
}

#[test]
fn decomposition_lists_components() {
    let out = ok(&["decompose", &data("q11.json"), "x4*x9^2"]);
    assert_eq!(out.lines().count(), 2, "{out}");
    assert!(out.starts_with("Q(x4) A={x1,x4}"), "{out}");
}

#[test]
fn verify_is_deterministic() {
    let args = ["--json", "verify", "--seed", "7", "--trials", "40", "--max-n", "5", "--max-deg", "3"];
    let first = qborel(&args);
    assert_eq!(first.code, 0, "{}", first.stderr);
    assert_eq!(first, qborel(&args));
    let report: Value = serde_json::from_str(&first.stdout).unwrap();
    for prop in report["properties"].as_array().unwrap() {
        assert_eq!(prop["passed"], prop["total"], "{prop}");
    }
}
