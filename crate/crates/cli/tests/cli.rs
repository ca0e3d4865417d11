//! End-to-end runs of the `knotcert` binary.

use std::process::{Command, Output};

use knotcert::report::ReportDocument;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_knotcert")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn exit_code_applies() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("out.json");
    let o = run(&["certify", "--family-j", "1", "--json", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["certificate"]["verdict"], "APPLIES");
    assert_eq!(v["schema_version"], "1");
    assert_eq!(v["alexander"], serde_json::json!([1, -7, 13, -7, 1]));
}

#[test]
fn exit_code_inapplicable() {
    let o = run(&["certify", "--pq", "3/1"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("verdict INAPPLICABLE_NO_ROOT"));
}

#[test]
fn exit_code_invalid() {
    for args in [
        &["certify", "--pq", "4/1"][..],
        &["certify", "--cf", "1,0,2"],
        &["certify", "--pq", "5/2", "--family-j", "1"],
        &["certify"],
        &["alexander", "--pq", "9/3"],
        &["verify-paper", "--j-max", "0"],
    ] {
        let o = run(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(!o.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn quiet_suppresses_summary() {
    let o = run(&["certify", "--pq", "5/2", "--quiet"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
}

#[test]
fn canonical_json_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let read = |name: &str, threads: &str| {
        let path = dir.path().join(name);
        let o = run(&["certify", "--pq", "53/31", "--canonical", "--threads", threads, "--json", path.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0));
        (std::fs::read(&path).unwrap(), o.stdout)
    };
    let (a, out_a) = read("a.json", "1");
    let (b, out_b) = read("b.json", "4");
    assert_eq!(a, b);
    let doc = ReportDocument::from_json(std::str::from_utf8(&a).unwrap()).unwrap();
    assert!(doc.timings.is_none());
    let strip = |s: Vec<u8>| String::from_utf8(s).unwrap();
    assert_eq!(strip(out_a), strip(out_b));
}

#[test]
fn alexander_family_member() {
    let o = run(&["alexander", "--family-j", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "2 -13 23 -13 2\n");
}

#[test]
fn alexander_roots_of_figure_eight() {
    let o = run(&["alexander", "--pq", "5/2", "--roots"]);
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "1 -3 1");
    assert_eq!(lines.len(), 3);
    assert!(lines[1].starts_with("root 0.381966 ") && lines[1].contains("qualifying"));
    assert!(lines[2].starts_with("root 2.618034 ") && lines[2].contains("qualifying"));
}

#[test]
fn alexander_digits_flag() {
    let o = run(&["alexander", "--pq", "5/2", "--roots", "--digits", "12"]);
    assert!(stdout(&o).contains("root 0.381966011250 "));
}

#[test]
fn continued_fraction_matches_fraction() {
    for sub in [&["alexander", "--roots"][..], &["certify"]] {
        let a = run(&[sub, &["--cf", "1,1,2,2,2"]].concat());
        let b = run(&[sub, &["--pq", "29/17"]].concat());
        assert_eq!(a.status.code(), b.status.code());
        let strip_cf = |s: String| s.lines().filter(|l| !l.starts_with("continued fraction")).collect::<Vec<_>>().join("\n");
        assert_eq!(strip_cf(stdout(&a)), strip_cf(stdout(&b)), "{sub:?}");
    }
}

#[test]
fn verify_paper_first_member() {
    let o = run(&["verify-paper", "--j-max", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(text.lines().filter(|l| l.starts_with("PASS")).count(), 6);
    assert!(!text.contains("FAIL"));
    assert!(text.ends_with("6 of 6 checks passed\n"));
}
