//! End-to-end runs of the `svcfc` binary against golden outputs.
//!
//! Commands run inside `tests/fixtures`. Set `UPDATE_GOLDEN=1` to rewrite
//! the files under `tests/golden`.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn root() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests")
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_svcfc"))
        .args(args)
        .current_dir(root().join("fixtures"))
        .output()
        .expect("binary runs")
}

/// Checks the exit code and compares stdout with `golden/<name>.out`.
fn golden(name: &str, args: &[&str], code: i32) -> Output {
    let out = run(args);
    let stdout = String::from_utf8(out.stdout.clone()).expect("utf-8 stdout");
    assert_eq!(
        out.status.code(),
        Some(code),
        "{name}: stdout {stdout}\nstderr {}",
        String::from_utf8_lossy(&out.stderr)
    );
    let path = root().join("golden").join(format!("{name}.out"));
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(&path, &stdout).unwrap();
    } else {
        let expected = std::fs::read_to_string(&path)
            .unwrap_or_else(|_| panic!("missing golden {}", path.display()));
        assert_eq!(stdout, expected, "{name} differs from golden");
    }
    out
}

fn stderr_of(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

#[test]
fn verify_gadget_canonical_coloring() {
    golden("verify_q4", &["verify", "q4.lab", "q4.col", "--oracle"], 0);
}

#[test]
fn verify_reports_failing_pair() {
    golden(
        "verify_p4_two",
        &["verify", "p4.dimacs", "p4-two.col", "--explain", "--oracle"],
        1,
    );
    golden(
        "verify_p4_two_json",
        &["--json", "verify", "p4.dimacs", "p4-two.col", "--explain"],
        1,
    );
}

#[test]
fn verify_input_errors() {
    let out = golden(
        "verify_bad_file",
        &["verify", "bad.dimacs", "p4-two.col"],
        2,
    );
    assert!(stderr_of(&out).contains("bad.dimacs: line 3: endpoint 5 outside 1..=3"));
    let out = golden(
        "verify_missing",
        &["verify", "nope.dimacs", "p4-two.col"],
        2,
    );
    assert!(stderr_of(&out).contains("nope.dimacs"));
    let out = golden(
        "verify_disconnected",
        &["verify", "two-k2.dimacs", "p4-two.col"],
        2,
    );
    assert!(stderr_of(&out).contains("not connected"));
    let out = golden("verify_length", &["verify", "c6.dimacs", "p4-two.col"], 2);
    assert!(stderr_of(&out).contains("4 entries"));
}

#[test]
fn verify_warns_on_checksum_mismatch() {
    let out = golden("verify_wrong_graph", &["verify", "sample.lab", "q4.col"], 2);
    assert!(stderr_of(&out).contains("13 entries"));
    let out = golden(
        "verify_checksum",
        &["verify", "c6.dimacs", "c6-foreign.col"],
        1,
    );
    assert!(stderr_of(&out).contains("checksum does not match"));
}

#[test]
fn solve_examples() {
    golden("solve_p7", &["solve", "p7.dimacs"], 0);
    golden("solve_p7_exact", &["solve", "p7.dimacs", "--exact"], 0);
    golden("solve_k33", &["solve", "k33.edges"], 0);
    golden("solve_k33_json", &["solve", "k33.edges", "--json"], 0);
    golden(
        "solve_p8_max_k",
        &["solve", "p8.dimacs", "--exact", "--max-k", "3"],
        1,
    );
    golden(
        "solve_p8_auto_max_k",
        &["solve", "p8.dimacs", "--max-k", "3"],
        1,
    );
    let out = golden("solve_cap", &["solve", "g30.dimacs", "--exact"], 3);
    assert!(stderr_of(&out).contains("exceeds cap 20"));
    let out = golden(
        "solve_usage",
        &["solve", "p7.dimacs", "--exact", "--auto"],
        2,
    );
    assert!(stderr_of(&out).contains("cannot be used with"));
}

#[test]
fn solve_writes_a_verifiable_witness() {
    let dir = tempfile::tempdir().unwrap();
    let col = dir.path().join("c6.col");
    let col = col.to_str().unwrap();
    let out = run(&["solve", "c6.dimacs", "--out", col]);
    assert_eq!(out.status.code(), Some(0));
    let text = std::fs::read_to_string(col).unwrap();
    assert!(text.starts_with("p coloring 6 3\ng "));
    let out = run(&["verify", "c6.dimacs", col]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stderr_of(&out).is_empty());
}

#[test]
fn props_examples() {
    golden("props_sample", &["props", "sample.lab"], 0);
    golden("props_c6", &["props", "c6.dimacs"], 0);
    golden("props_k23", &["props", "k23.edges"], 0);
    golden("props_k23_json", &["--json", "props", "k23.edges"], 0);
    golden("props_disconnected", &["props", "two-k2.dimacs"], 0);
}

#[test]
fn gen_examples() {
    golden("gen_qn_4", &["gen", "qn", "4"], 0);
    golden("gen_rn_3", &["gen", "rn", "3"], 0);
    let out = golden("gen_rn_1", &["gen", "rn", "1"], 2);
    assert!(stderr_of(&out).contains("n >= 2"));
    golden("gen_apex_c6", &["gen", "apex", "c6.dimacs"], 0);
    golden(
        "gen_highk_p4",
        &["--json", "gen", "extend-highk", "p4.dimacs", "4"],
        0,
    );
    golden(
        "gen_highk_low",
        &["gen", "extend-highk", "p4.dimacs", "2"],
        2,
    );
    golden("gen_k3_sample", &["gen", "extend-k3", "sample.lab", "4"], 0);
    golden(
        "gen_k3_plain_graph",
        &["gen", "extend-k3", "c6.dimacs", "4"],
        2,
    );
}

#[test]
fn gen_writes_files() {
    let dir = tempfile::tempdir().unwrap();
    let lab = dir.path().join("ext.lab");
    let out = run(&[
        "gen",
        "extend-k3",
        "sample.lab",
        "5",
        "--out",
        lab.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        String::from_utf8_lossy(&out.stdout),
        "extension to diameter 5: 26 vertices, 56 edges, diameter 5\n"
    );
    let props = run(&["props", lab.to_str().unwrap()]);
    assert!(String::from_utf8_lossy(&props.stdout).contains("diameter: 5\n"));
    let col = dir.path().join("x.col");
    let out = run(&[
        "gen",
        "apex",
        "c6.dimacs",
        "--coloring-out",
        col.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let out = run(&[
        "gen",
        "extend-k3",
        "sample.lab",
        "4",
        "--coloring-out",
        col.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn reduce_examples() {
    golden(
        "reduce_sample_unpadded",
        &["reduce", "sample.cnf", "--no-pad"],
        0,
    );
    golden("reduce_sample_padded", &["reduce", "sample.cnf"], 0);
    golden(
        "reduce_sample_json",
        &["--json", "reduce", "sample.cnf", "--no-pad"],
        0,
    );
    golden(
        "reduce_small_d5",
        &["reduce", "small.cnf", "--diameter", "5"],
        0,
    );
    let out = golden("reduce_tautology", &["reduce", "taut.cnf"], 2);
    assert!(stderr_of(&out).contains("tautology"));
    golden(
        "reduce_low_diameter",
        &["reduce", "small.cnf", "--diameter", "2"],
        2,
    );
}

#[test]
fn reduce_output_is_a_valid_instance() {
    let dir = tempfile::tempdir().unwrap();
    let lab = dir.path().join("sample.lab");
    let out = run(&[
        "reduce",
        "sample.cnf",
        "--no-pad",
        "--out",
        lab.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let written = std::fs::read_to_string(&lab).unwrap();
    let fixture = std::fs::read_to_string(root().join("fixtures/sample.lab")).unwrap();
    assert_eq!(written, fixture);
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(stdout.starts_with("reduction instance: 22 vertices"));
    assert!(stdout.contains("certificate domination-number 3 set 1 2 3"));
}

#[test]
fn dot_examples() {
    golden("dot_q4", &["dot", "q4.lab", "--coloring", "q4.col"], 0);
    golden("dot_p4", &["dot", "p4.dimacs"], 0);
}

#[test]
fn harness_runs_selected_suites() {
    for (suite, ids) in [("classes", vec![8, 9]), ("props", vec![2, 3, 4, 5, 11])] {
        let out = run(&["harness", suite, "--seed", "5"]);
        assert_eq!(out.status.code(), Some(0));
        let stdout = String::from_utf8_lossy(&out.stdout);
        for id in ids {
            assert!(
                stdout.contains(&format!("[PASS] criterion {id:>2} ")),
                "{stdout}"
            );
        }
        assert!(stdout.trim_end().ends_with("0 failed"));
    }
    let out = run(&["--json", "harness", "reduction"]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["criteria"].as_array().unwrap().len(), 3);
    assert!(doc["criteria"]
        .as_array()
        .unwrap()
        .iter()
        .all(|c| c["passed"] == true));
    let out = run(&["harness", "verifier", "--budget", "0"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stdout).contains("budget exhausted"));
    assert_eq!(run(&["harness", "everything"]).status.code(), Some(2));
}
