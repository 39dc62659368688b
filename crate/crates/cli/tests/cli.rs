//! End-to-end CLI tests: exit codes, JSON shape, byte stability.

use std::io::Write;
use std::path::Path;
use std::process::{Command, Output};

fn qproots(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qproots"))
        .args(args)
        .env_remove("QPROOTS_SEED")
        .output()
        .expect("binary runs")
}

fn stdout_str(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn write_file(dir: &Path, name: &str, contents: &str) -> String {
    let path = dir.join(name);
    let mut f = std::fs::File::create(&path).unwrap();
    f.write_all(contents.as_bytes()).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn check_weak_yes_exit_0() {
    let out = qproots(&["check", "(x^3-2)(x^2+x+1)", "--predicate", "weak"]);
    assert_eq!(out.status.code(), Some(0), "{out:?}");
    let s = stdout_str(&out);
    assert!(s.contains("\"verdict\":\"YES\""));
    assert!(s.contains("\"predicate\":\"weak\""));
    assert!(s.contains("\"mode\":\"computed\""));
}

#[test]
fn check_strong_no_exit_3() {
    let out = qproots(&["check", "(x^3-2)(x^2+x+1)", "--predicate", "strong"]);
    assert_eq!(out.status.code(), Some(3));
    let s = stdout_str(&out);
    assert!(s.contains("\"verdict\":\"NO\""));
    assert!(s.contains("\"witness_prime\":2"));
}

#[test]
fn check_triple_strong_yes() {
    let out = qproots(&["check", "(x^2-2)(x^2-17)(x^2-34)", "--predicate", "strong"]);
    assert_eq!(out.status.code(), Some(0), "{out:?}");
    assert!(stdout_str(&out).contains("\"verdict\":\"YES\""));
}

#[test]
fn check_irreducible_no_with_witness() {
    let out = qproots(&["check", "(x^2+1)", "--predicate", "weak"]);
    assert_eq!(out.status.code(), Some(3));
    let s = stdout_str(&out);
    assert!(s.contains("\"covered\":false"));
    assert!(s.contains("\"witness_prime\":3"));
}

#[test]
fn check_sample_only_modes() {
    let out = qproots(&["check", "(x^2+1)", "--group", "sample-only"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stdout_str(&out).contains("\"mode\":\"sampled-only\""));

    let out = qproots(&[
        "check",
        "(x^3-2)(x^2+x+1)",
        "--group",
        "sample-only",
    ]);
    assert_eq!(out.status.code(), Some(4));
    assert!(stdout_str(&out).contains("UNDECIDED"));
}

#[test]
fn byte_stable_output() {
    let args = ["check", "(x^2+1)", "--predicate", "weak"];
    let a = qproots(&args);
    let b = qproots(&args);
    assert_eq!(a.stdout, b.stdout);
    assert!(!a.stdout.is_empty());
}

#[test]
fn usage_errors_exit_1() {
    assert_eq!(
        qproots(&["check", "(x^2+1)", "--predicate", "medium"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(qproots(&["check", "x^2 +"]).status.code(), Some(1));
    assert_eq!(qproots(&["check", "(x^2-1)"]).status.code(), Some(1));
}

#[test]
fn report_file_written() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = qproots(&[
        "check",
        "(x^2+1)",
        "--report-file",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(3));
    let written = std::fs::read_to_string(&path).unwrap();
    assert_eq!(written.trim(), stdout_str(&out).trim());
}

#[test]
fn pretty_is_same_object() {
    let compact = qproots(&["check", "(x^2+1)"]);
    let pretty = qproots(&["check", "(x^2+1)", "--pretty"]);
    let a: serde_json::Value = serde_json::from_str(&stdout_str(&compact)).unwrap();
    let b: serde_json::Value = serde_json::from_str(&stdout_str(&pretty)).unwrap();
    assert_eq!(a, b);
}

#[test]
fn group_min_cover_and_frobenius() {
    let dir = tempfile::tempdir().unwrap();
    let s3 = write_file(
        dir.path(),
        "s3.json",
        r#"{"degree": 3, "generators": ["(1 2 3)", "(1 2)"]}"#,
    );
    let out = qproots(&["group", &s3, "--min-cover", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout_str(&out).contains("\"m\":2"));

    let d5 = write_file(
        dir.path(),
        "d5.json",
        r#"{"degree": 5, "generators": ["(1 2 3 4 5)", "(2 5)(3 4)"]}"#,
    );
    let out = qproots(&["group", &d5, "--frobenius", "--lemma24"]);
    assert_eq!(out.status.code(), Some(0));
    let s = stdout_str(&out);
    assert!(s.contains("\"kernel_order\":5"));
    assert!(s.contains("\"complement_order\":2"));
    assert!(s.contains("\"passed\":true"));

    let c4 = write_file(
        dir.path(),
        "c4.json",
        r#"{"degree": 4, "generators": ["(1 2 3 4)"]}"#,
    );
    let out = qproots(&["group", &c4, "--min-cover", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout_str(&out).contains("\"min_cover\":null"));
}

#[test]
fn group_covers_subfiles() {
    let dir = tempfile::tempdir().unwrap();
    let s3 = write_file(
        dir.path(),
        "s3.json",
        r#"{"degree": 3, "generators": ["(1 2 3)", "(1 2)"]}"#,
    );
    let c2 = write_file(
        dir.path(),
        "c2.json",
        r#"{"degree": 3, "generators": ["(1 2)"]}"#,
    );
    let a3 = write_file(
        dir.path(),
        "a3.json",
        r#"{"degree": 3, "generators": ["(1 2 3)"]}"#,
    );
    let out = qproots(&["group", &s3, "--covers", &c2, "--covers", &a3]);
    assert_eq!(out.status.code(), Some(0));
    let s = stdout_str(&out);
    assert!(s.contains("\"covered\":true"));
    assert!(s.contains("\"joint_core_trivial\":true"));
}

#[test]
fn family_commands() {
    let out = qproots(&["family", "brandl", "5", "--check", "weak"]);
    assert_eq!(out.status.code(), Some(0), "{out:?}");
    let s = stdout_str(&out);
    assert!(s.contains("\"verdict\":\"YES\""));
    assert!(s.contains("\"mode\":\"supplied\""));

    let out = qproots(&["family", "quadratic-triple", "2", "17", "--check", "strong"]);
    assert_eq!(out.status.code(), Some(0), "{out:?}");
    assert!(stdout_str(&out).contains("\"verdict\":\"YES\""));

    let out = qproots(&["family", "frobenius-catalog", "21"]);
    assert_eq!(out.status.code(), Some(0));
    let entries: serde_json::Value = serde_json::from_str(&stdout_str(&out)).unwrap();
    let orders: Vec<u64> = entries
        .as_array()
        .unwrap()
        .iter()
        .map(|e| e["order"].as_u64().unwrap())
        .collect();
    assert_eq!(orders, vec![6, 10, 12, 14, 18, 20, 21]);

    assert_eq!(qproots(&["family", "brandl", "4"]).status.code(), Some(1));
}

#[test]
fn search_commands() {
    let dir = tempfile::tempdir().unwrap();
    let pool = write_file(dir.path(), "pool.txt", "x^3-2\nx^2+x+1  # cyclotomic\n");
    let out = qproots(&["search", &pool, "--m", "2", "--predicate", "weak"]);
    assert_eq!(out.status.code(), Some(0), "{out:?}");
    let v: serde_json::Value = serde_json::from_str(&stdout_str(&out)).unwrap();
    assert_eq!(v["hits"].as_array().unwrap().len(), 1);

    let empty = write_file(dir.path(), "empty.txt", "# nothing here\n");
    assert_eq!(
        qproots(&["search", &empty, "--m", "1"]).status.code(),
        Some(1)
    );
}

#[test]
fn supplied_group_file_check() {
    // the order-20 Frobenius group for (x^5-2)*phi5 on 9 labeled roots
    let dir = tempfile::tempdir().unwrap();
    let gf = write_file(
        dir.path(),
        "f20.json",
        r#"{"degree": 9,
            "generators": ["(1 2 3 4 5)", "(2 3 5 4)(6 7 9 8)"],
            "blocks": [[1, 2, 3, 4, 5], [6, 7, 8, 9]]}"#,
    );
    let out = qproots(&[
        "check",
        "(x^5-2)(x^4+x^3+x^2+x+1)",
        "--predicate",
        "weak",
        "--group",
        &gf,
    ]);
    assert_eq!(out.status.code(), Some(0), "{out:?}");
    let s = stdout_str(&out);
    assert!(s.contains("\"verdict\":\"YES\""));
    assert!(s.contains("\"mode\":\"supplied\""));
}
