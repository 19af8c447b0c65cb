//! End-to-end tests of the `smg` binary: exit codes, output formats,
//! schema round-trips and determinism.

use std::path::Path;
use std::process::{Command, Output};

use smg_core::commuting::LeftPathResult;
use smg_core::invariants::InvariantReport;

fn smg(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_smg"))
        .args(args)
        .current_dir(dir)
        .env_remove("SMG_SEED")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn write_t2(dir: &Path) -> String {
    let path = dir.join("t2.smg");
    std::fs::write(
        &path,
        "elements: e s a b\ne s a b\ns e a b\na b a b\nb a a b\n",
    )
    .unwrap();
    path.display().to_string()
}

#[test]
fn validate_reports_basic_data_and_succeeds() {
    let dir = tempfile::tempdir().unwrap();
    let t2 = write_t2(dir.path());
    let out = smg(&["validate", &t2], dir.path());
    assert!(out.status.success());
    assert_eq!(
        stdout(&out).trim(),
        r#"{"order":4,"center_size":1,"commutative":false}"#
    );
}

#[test]
fn validate_rejects_non_associative_table_with_witness() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("broken.smg");
    std::fs::write(&path, "elements: a b\nb b\nb a\n").unwrap();
    let out = smg(&["validate", &path.display().to_string()], dir.path());
    assert_eq!(out.status.code(), Some(2));
    assert!(stdout(&out).is_empty());
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("not associative"), "stderr: {err}");
    assert!(err.contains('a') && err.contains('b'));
}

#[test]
fn usage_errors_exit_with_code_two() {
    let dir = tempfile::tempdir().unwrap();
    let out = smg(&["check", "whatever.smg"], dir.path()); // missing kind flag
    assert_eq!(out.status.code(), Some(2));
    let out = smg(&["frobnicate"], dir.path());
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn gen_graph_dot_shows_three_isolated_vertices() {
    let dir = tempfile::tempdir().unwrap();
    let out = smg(
        &[
            "gen",
            "--family",
            "full_transformation",
            "--order",
            "2",
            "-o",
            "t2.smg",
        ],
        dir.path(),
    );
    assert!(out.status.success());
    let out = smg(&["graph", "t2.smg", "--dot", "-"], dir.path());
    assert!(out.status.success());
    assert_eq!(
        stdout(&out),
        "graph commuting {\n  \"11\";\n  \"21\";\n  \"22\";\n}\n"
    );
}

#[test]
fn graph_json_lists_vertices_and_sorted_edges() {
    let dir = tempfile::tempdir().unwrap();
    let t2 = write_t2(dir.path());
    let out = smg(&["graph", &t2, "--extended", "--json"], dir.path());
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["vertices"], serde_json::json!(["e", "s", "a", "b"]));
    assert_eq!(v["edges"], serde_json::json!([[0, 1], [0, 2], [0, 3]]));
}

#[test]
fn invariants_output_parses_back_into_the_report_type() {
    let dir = tempfile::tempdir().unwrap();
    let t2 = write_t2(dir.path());
    let out = smg(&["invariants", &t2], dir.path());
    assert!(out.status.success());
    let report: InvariantReport = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert!(!report.connected);
    assert_eq!(report.clique_number, 1);

    let out = smg(&["invariants", &t2, "--extended"], dir.path());
    let report: InvariantReport = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert!(report.connected);
    assert_eq!(report.chromatic_number, 2);
}

#[test]
fn knit_star_output_parses_back_and_validates() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("n2.smg");
    std::fs::write(&path, "elements: z x\nz z\nz z\n").unwrap();
    let out = smg(&["knit", &path.display().to_string(), "--star"], dir.path());
    assert!(out.status.success());
    let result: LeftPathResult = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(result.length, Some(1));

    // The plain knit degree of a commutative semigroup is an input error.
    let out = smg(&["knit", &path.display().to_string()], dir.path());
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn construct_then_check_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let t2 = write_t2(dir.path());
    let out = smg(
        &["construct", "--zero-union", &t2, &t2, "-o", "union.smg"],
        dir.path(),
    );
    assert!(out.status.success());
    let out = smg(&["validate", "union.smg"], dir.path());
    assert_eq!(
        stdout(&out).trim(),
        r#"{"order":9,"center_size":3,"commutative":false}"#
    );

    let out = smg(&["check", "--zero-union", &t2, &t2], dir.path());
    assert!(
        out.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    let report: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(report["kind"], "zero_union");
    assert_eq!(report["order"], 9);
    let verdicts = report["verdicts"].as_array().unwrap();
    assert!(verdicts.iter().all(|v| v["outcome"] == "pass"));
    assert!(verdicts
        .iter()
        .any(|v| v["name"] == "knit-degree" && v["computed"] == "2"));
}

#[test]
fn check_reports_are_deterministic_modulo_timing() {
    let dir = tempfile::tempdir().unwrap();
    let t2 = write_t2(dir.path());
    let strip = |out: &Output| {
        let mut v: serde_json::Value = serde_json::from_str(stdout(out).trim()).unwrap();
        v.as_object_mut().unwrap().remove("wall_ms");
        v
    };
    let one = smg(&["check", "--product", &t2, &t2], dir.path());
    let two = smg(&["check", "--product", &t2, &t2], dir.path());
    assert_eq!(strip(&one), strip(&two));
}

#[test]
fn enumerate_counts_and_seeded_sampling() {
    let dir = tempfile::tempdir().unwrap();
    let out = smg(&["enumerate", "--order", "2"], dir.path());
    assert_eq!(
        stdout(&out).trim(),
        r#"{"order":2,"count":8,"canonical":false}"#
    );
    let out = smg(&["enumerate", "--order", "2", "--canonical"], dir.path());
    assert_eq!(
        stdout(&out).trim(),
        r#"{"order":2,"count":5,"canonical":true}"#
    );

    // Identical seeds agree; different seeds are allowed to differ.
    let a = smg(
        &[
            "enumerate",
            "--order",
            "5",
            "--sample",
            "4",
            "--seed",
            "9",
            "--emit",
        ],
        dir.path(),
    );
    let b = smg(
        &[
            "enumerate",
            "--order",
            "5",
            "--sample",
            "4",
            "--seed",
            "9",
            "--emit",
        ],
        dir.path(),
    );
    assert_eq!(stdout(&a), stdout(&b));

    // SMG_SEED is the fallback for --seed.
    let via_env = Command::new(env!("CARGO_BIN_EXE_smg"))
        .args(["enumerate", "--order", "5", "--sample", "4", "--emit"])
        .env("SMG_SEED", "9")
        .current_dir(dir.path())
        .output()
        .unwrap();
    assert_eq!(stdout(&a), stdout(&via_env));
}

#[test]
fn enumerate_check_runs_the_suite_clean() {
    let dir = tempfile::tempdir().unwrap();
    let out = smg(
        &[
            "enumerate",
            "--order",
            "3",
            "--check",
            "both",
            "--pair-cap",
            "30",
            "--triples",
            "5",
        ],
        dir.path(),
    );
    assert!(
        out.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    let report: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(report["checked"], 70);
    assert_eq!(report["passed"], 70);
    assert_eq!(report["failed"].as_array().unwrap().len(), 0);
}

#[test]
fn oversized_product_is_an_input_error() {
    let dir = tempfile::tempdir().unwrap();
    let t2 = write_t2(dir.path());
    let out = smg(
        &[
            "construct",
            "--product",
            &t2,
            &t2,
            "--product-cap",
            "10",
            "-o",
            "-",
        ],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("exceeding the cap"), "stderr: {err}");
}
