use std::collections::BTreeSet;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cliffspin"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8")
}

fn code(args: &[&str]) -> i32 {
    run(args).status.code().expect("exit code")
}

fn golden(name: &str) -> String {
    std::fs::read_to_string(format!(
        "{}/tests/golden/{name}",
        env!("CARGO_MANIFEST_DIR")
    ))
    .expect("golden file")
}

#[test]
fn golden_reports() {
    for (n, file) in [("3", "verify_n3.json"), ("8", "verify_n8.json")] {
        let o = run(&["verify", "--n", n]);
        assert_eq!(o.status.code(), Some(0));
        assert_eq!(stdout(&o), golden(file), "n={n}");
    }
}

#[test]
fn report_keys_are_stable() {
    let v: Value = serde_json::from_str(&stdout(&run(&["verify", "--n", "5"]))).unwrap();
    let r = &v[0];
    let keys: BTreeSet<&str> = r.as_object().unwrap().keys().map(String::as_str).collect();
    let want: BTreeSet<&str> = [
        "n",
        "closure_dim",
        "expected_dim",
        "delta",
        "bott_algebra",
        "max_compact",
        "checks",
        "timings_ms",
        "verdict",
    ]
    .into();
    assert_eq!(keys, want);
    let checks: BTreeSet<&str> = r["checks"]
        .as_object()
        .unwrap()
        .keys()
        .map(String::as_str)
        .collect();
    let want: BTreeSet<&str> = [
        "relations",
        "lemma",
        "identities",
        "killing",
        "rank",
        "split",
        "roots",
        "classify",
    ]
    .into();
    assert_eq!(checks, want);
    assert_eq!(
        r["checks"]["split"]["detail"],
        "halves (10, 10), cross brackets vanish: true, ideals closed: true"
    );
}

#[test]
fn exit_codes() {
    assert_eq!(code(&["closure", "--n", "2"]), 2);
    assert_eq!(code(&["verify", "--from", "1", "--to", "2"]), 2);
    assert_eq!(code(&["verify", "--from", "5", "--to", "4"]), 2);
    assert_eq!(code(&["verify", "--from", "3"]), 2);
    assert_eq!(code(&["closure", "--n", "17"]), 2);
    assert_eq!(code(&["closure", "--n", "25", "--allow-large"]), 2);
    assert_eq!(code(&["closure", "--n", "3", "--format", "yaml"]), 2);
    assert_eq!(code(&["frobnicate"]), 2);
    assert_eq!(code(&["verify", "--n", "4", "--jobs", "0"]), 2);
    assert_eq!(code(&["verify", "--from", "3", "--to", "6"]), 0);
    assert_eq!(code(&["--help"]), 0);
}

#[test]
fn infinite_type_roots() {
    let o = run(&["roots", "--n", "9"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("infinite type"));
}

#[test]
fn closure_outputs() {
    let v: Value = serde_json::from_str(&stdout(&run(&["closure", "--n", "3"]))).unwrap();
    assert_eq!(v["masks"], serde_json::json!(["0x3", "0x5", "0x6", "0x7"]));
    let md = stdout(&run(&["closure", "--n", "8", "--format", "markdown"]));
    assert!(md.contains("dim 120"));
    let csv = stdout(&run(&["closure", "--n", "4", "--format", "csv"]));
    assert_eq!(csv.lines().count(), 11);
    assert_eq!(csv.lines().next(), Some("index,mask,blade"));
}

#[test]
fn delta_and_classify() {
    let v: Value = serde_json::from_str(&stdout(&run(&["delta", "--n", "4"]))).unwrap();
    assert_eq!(v["delta"], serde_json::json!(["2", "4", "6", "4"]));
    assert_eq!(v["total"], "16");
    let first = stdout(&run(&["classify", "--n", "5", "--format", "markdown"]));
    assert_eq!(first.lines().next(), Some("sp(2) ⊕ sp(2)"));
    let v: Value = serde_json::from_str(&stdout(&run(&["classify", "--n", "3"]))).unwrap();
    assert_eq!(v["matched_type"]["name"], "u(2)");
}

#[test]
fn verify_is_reproducible() {
    let a = stdout(&run(&["verify", "--from", "3", "--to", "7"]));
    let b = stdout(&run(&["verify", "--from", "3", "--to", "7", "--jobs", "3"]));
    let c = stdout(&run(&["verify", "--from", "3", "--to", "7", "--seed", "0"]));
    assert_eq!(a, b);
    assert_eq!(a, c);
    let d = stdout(&run(&[
        "verify", "--from", "3", "--to", "7", "--seed", "11",
    ]));
    let v: Value = serde_json::from_str(&d).unwrap();
    assert!(v.as_array().unwrap().iter().all(|r| r["verdict"] == "pass"));
}

#[test]
fn timings_only_on_request() {
    let v: Value =
        serde_json::from_str(&stdout(&run(&["verify", "--n", "4", "--timings"]))).unwrap();
    assert!(v[0]["timings_ms"]
        .as_object()
        .unwrap()
        .contains_key("classify.rank"));
}

#[test]
fn markdown_verify_table() {
    let o = run(&["verify", "--from", "3", "--to", "8", "--format", "markdown"]);
    assert_eq!(o.status.code(), Some(0));
    let md = stdout(&o);
    for t in [
        "u(2)",
        "| sp(2) |",
        "sp(2) ⊕ sp(2)",
        "sp(4)",
        "su(8)",
        "so(16)",
    ] {
        assert!(md.contains(t), "{t}");
    }
    assert_eq!(
        md.lines()
            .filter(|l| l.starts_with("| ") && l.ends_with("| pass |"))
            .count(),
        6
    );
}

#[test]
fn csv_verify_rows() {
    let out = stdout(&run(&[
        "verify", "--from", "3", "--to", "5", "--format", "csv",
    ]));
    let mut rdr = csv::Reader::from_reader(out.as_bytes());
    let width = rdr.headers().unwrap().len();
    let rows: Vec<csv::StringRecord> = rdr.records().map(Result::unwrap).collect();
    assert_eq!(rows.len(), 3);
    assert!(rows
        .iter()
        .all(|r| r.len() == width && &r[width - 1] == "pass"));
    assert_eq!(&rows[2][7], "M(2,H) ⊕ M(2,H) ⊗ M(1,R)");
}

#[test]
fn algebra_report() {
    let v: Value = serde_json::from_str(&stdout(&run(&["report", "--to", "9"]))).unwrap();
    let rows = v.as_array().unwrap();
    assert_eq!(rows.len(), 8);
    assert_eq!(rows[0]["closure_dim"], Value::Null);
    assert_eq!(rows[7]["max_compact"], "so(16) ⊕ so(16)");
    assert_eq!(rows[7]["closure_dim"], 240);
    assert_eq!(code(&["report", "--to", "1"]), 2);
}
