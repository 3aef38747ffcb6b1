use std::fs;
use std::path::{Path, PathBuf};
use std::process::Command;

use serde_json::Value;
use tempfile::TempDir;

use mpdr::cli::{run, EXIT_INPUT, EXIT_NEGATIVE, EXIT_OK, EXIT_PRECONDITION};

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

impl Run {
    fn json(&self) -> Value {
        serde_json::from_str(&self.stdout).expect("stdout is JSON")
    }
}

fn mpdr(args: &[&str]) -> Run {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(
        std::iter::once("mpdr").chain(args.iter().copied()),
        &mut out,
        &mut err,
    );
    Run {
        code,
        stdout: String::from_utf8(out).unwrap(),
        stderr: String::from_utf8(err).unwrap(),
    }
}

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn construct_z5_and_verify() {
    let dir = TempDir::new().unwrap();
    let spec = dir.path().join("z5.json");
    let r = mpdr(&[
        "construct",
        "--family",
        "cyclic-2pdr",
        "--n",
        "5",
        "--out",
        s(&spec),
    ]);
    assert_eq!(r.code, EXIT_OK, "{}", r.stderr);
    let summary = r.json();
    assert_eq!(summary["valency"], 3);
    assert!(summary["tool_version"]
        .as_str()
        .unwrap()
        .starts_with("mpdr "));

    let text = fs::read_to_string(&spec).unwrap();
    assert!(text.contains("\"elements\": [\n        0,\n        1,\n        2\n      ]"));

    let group = write(dir.path(), "z5.grp", "cyclic 5\n");
    let r = mpdr(&["verify", "--group", s(&group), "--spec", s(&spec)]);
    assert_eq!(r.code, EXIT_OK, "{}", r.stderr);
    let report = r.json();
    assert_eq!(report["is_pdr"], true);
    assert_eq!(report["aut_order"], "5");
    assert_eq!(report["color_blind"], true);
    assert_eq!(report["input_sha256"].as_object().unwrap().len(), 2);
}

#[test]
fn construct_excluded_case_exits_2() {
    let r = mpdr(&["construct", "--family", "cyclic-2pdr", "--n", "3"]);
    assert_eq!(r.code, EXIT_PRECONDITION);
    assert!(r.stderr.contains("no representation"), "{}", r.stderr);
    assert!(r.stdout.is_empty());
}

#[test]
fn construct_two_generated_from_group_file() {
    let dir = TempDir::new().unwrap();
    let group = write(dir.path(), "s3.grp", "# S_3\nperm 3\n(0 1 2)\n(0 1)\n");
    let spec = dir.path().join("s3m3.json");
    let r = mpdr(&[
        "construct",
        "--family",
        "two-gen-mpdr",
        "--group",
        s(&group),
        "--m",
        "3",
        "--out",
        s(&spec),
    ]);
    assert_eq!(r.code, EXIT_OK, "{}", r.stderr);
    let r = mpdr(&["verify", "--group", s(&group), "--spec", s(&spec)]);
    assert_eq!(r.code, EXIT_OK);
    assert_eq!(r.json()["aut_order"], "6");
}

#[test]
fn verify_negative_prints_witness() {
    let dir = TempDir::new().unwrap();
    let group = write(dir.path(), "z3.grp", "cyclic 3\n");
    let spec = write(
        dir.path(),
        "full.json",
        r#"{"m": 2, "n": 3, "sets": [
            {"i": 0, "j": 1, "elements": [0, 1, 2]},
            {"i": 1, "j": 0, "elements": [0, 1, 2]}]}"#,
    );
    let r = mpdr(&["verify", "--group", s(&group), "--spec", s(&spec)]);
    assert_eq!(r.code, EXIT_NEGATIVE);
    let report = r.json();
    assert_eq!(report["is_pdr"], false);
    assert!(report["extra_automorphism_witness"].is_string());
}

#[test]
fn malformed_inputs_exit_3() {
    let dir = TempDir::new().unwrap();
    let group = write(dir.path(), "z3.grp", "cyclic 3\n");
    let spec = write(dir.path(), "bad.json", "{\"m\": 2, \"n\": 3, \"sets\": [");
    let r = mpdr(&["verify", "--group", s(&group), "--spec", s(&spec)]);
    assert_eq!(r.code, EXIT_INPUT);
    assert!(r.stderr.contains("bad.json"), "{}", r.stderr);

    let dg = write(dir.path(), "bad.dg", "n 3\n0 1\n1\n");
    let r = mpdr(&["aut", "--digraph", s(&dg)]);
    assert_eq!(r.code, EXIT_INPUT);
    assert!(r.stderr.contains("line 3"), "{}", r.stderr);

    let r = mpdr(&["aut", "--digraph", s(&dir.path().join("missing.dg"))]);
    assert_eq!(r.code, EXIT_INPUT);
}

#[test]
fn aut_of_triangle() {
    let dir = TempDir::new().unwrap();
    let dg = write(dir.path(), "triangle.dg", "n 3\n0 1\n1 2\n2 0\n");
    for extra in [&[][..], &["--oracle"][..]] {
        let mut args = vec!["aut", "--digraph", s(&dg)];
        args.extend_from_slice(extra);
        let r = mpdr(&args);
        assert_eq!(r.code, EXIT_OK);
        let v = r.json();
        assert_eq!(v["order"], "3");
        assert_eq!(v["degree"], 3);
    }
}

#[test]
fn exhaust_negative_z4() {
    let r = mpdr(&["search", "--problem", "exhaust-negative", "--n", "4"]);
    assert_eq!(r.code, EXIT_OK);
    let v = r.json();
    let records = v["records"].as_array().unwrap();
    assert_eq!(records.len(), 16);
    for rec in records {
        let order: u64 = rec["aut_order"].as_str().unwrap().parse().unwrap();
        assert!(order > 4);
    }
    assert_eq!(v["verdict"], "none-exists");
}

#[test]
fn export_z2_four_parts_dot() {
    let dir = TempDir::new().unwrap();
    let group = write(dir.path(), "z2.grp", "cyclic 2\n");
    let spec = dir.path().join("z2m4.json");
    assert_eq!(
        mpdr(&[
            "construct",
            "--family",
            "cyclic-mpdr",
            "--n",
            "2",
            "--m",
            "4",
            "--out",
            s(&spec)
        ])
        .code,
        EXIT_OK
    );
    let r = mpdr(&[
        "export",
        "--format",
        "dot",
        "--group",
        s(&group),
        "--spec",
        s(&spec),
    ]);
    assert_eq!(r.code, EXIT_OK);
    let undirected = r
        .stdout
        .lines()
        .filter(|l| l.contains("[dir=none]"))
        .count();
    let arrows = r
        .stdout
        .lines()
        .filter(|l| l.contains("->") && !l.contains("dir=none"))
        .count();
    // 24 arcs: 10 digons and 4 one-way arcs.
    assert_eq!(undirected, 10);
    assert_eq!(arrows, 4);
    assert!(r.stdout.contains("\"1_0\" -> \"x_3\";"));

    let r = mpdr(&[
        "export",
        "--format",
        "text",
        "--group",
        s(&group),
        "--spec",
        s(&spec),
    ]);
    assert!(r.stdout.starts_with("n 8\n"));
    assert_eq!(r.stdout.lines().count(), 25);
}

#[test]
fn search_rigid3_and_orr2() {
    let r = mpdr(&["search", "--problem", "rigid3", "--m", "4"]);
    assert_eq!(r.code, EXIT_OK);
    assert_eq!(r.json()["verdict"], "none-exists");

    let one = mpdr(&["search", "--problem", "rigid3", "--m", "6", "--jobs", "1"]).json();
    let four = mpdr(&["search", "--problem", "rigid3", "--m", "6", "--jobs", "4"]).json();
    assert_eq!(one["verdict"], "found");
    assert_eq!(one["witness"], four["witness"]);
    assert_eq!(one["nodes_explored"], four["nodes_explored"]);

    let dir = TempDir::new().unwrap();
    let group = write(dir.path(), "a5.grp", "perm 5\n(0 1 2 3 4)\n(0 1 2)\n");
    let r = mpdr(&["search", "--problem", "orr2", "--group", s(&group)]);
    assert_eq!(r.json()["verdict"], "found");
    let z2 = write(dir.path(), "z2.grp", "cyclic 2\n");
    let r = mpdr(&["search", "--problem", "drr2", "--group", s(&z2)]);
    assert_eq!(r.json()["verdict"], "none-exists");
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(
        mpdr(&["construct", "--family", "cyclic-mpdr", "--n", "4"]).code,
        EXIT_PRECONDITION
    );
    assert_eq!(
        mpdr(&["construct", "--family", "nope"]).code,
        EXIT_PRECONDITION
    );
    assert_eq!(mpdr(&["frobnicate"]).code, EXIT_PRECONDITION);
    assert_eq!(mpdr(&["--version"]).code, EXIT_OK);
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_mpdr");
    let ok = Command::new(bin)
        .args(["construct", "--family", "cyclic-2pdr", "--n", "7"])
        .output()
        .unwrap();
    assert_eq!(ok.status.code(), Some(EXIT_OK));
    assert!(String::from_utf8_lossy(&ok.stdout).contains("\"m\": 2"));
    let bad = Command::new(bin)
        .args(["construct", "--family", "cyclic-2pdr", "--n", "4"])
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(EXIT_PRECONDITION));
}
