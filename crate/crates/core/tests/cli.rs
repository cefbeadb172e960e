//! The binary end to end.

use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(name)
        .display()
        .to_string()
}

fn chibound(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_chibound"))
        .args(args)
        .env_remove("CHIBOUND_DESK_LIMIT")
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn chi_of_grotzsch_is_four() {
    let out = chibound(&["chi", &fixture("grotzsch.edges")]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["chi"], 4);
    let plain = chibound(&["--plain", "chi", &fixture("grotzsch.edges")]);
    assert_eq!(stdout(&plain), "4\n");
}

#[test]
fn chi_exact_writes_vertex_color_lines() {
    let out = chibound(&["--plain", "chi", "--exact", &fixture("c5.edges")]);
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("3"));
    let pairs: Vec<(usize, usize)> = lines
        .map(|l| {
            let mut it = l.split_whitespace().map(|t| t.parse().unwrap());
            (it.next().unwrap(), it.next().unwrap())
        })
        .collect();
    assert_eq!(pairs.len(), 5);
    for i in 0..5 {
        assert_ne!(pairs[i].1, pairs[(i + 1) % 5].1);
    }
}

#[test]
fn p6_coloring_of_grotzsch_fits_four() {
    let out = chibound(&["color", "--theorem", "p6", &fixture("grotzsch.edges")]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert!(v["palette"].as_u64().unwrap() <= 4);
    assert_eq!(v["proper"], true);
    assert_eq!(v["certificate"]["theorem"], "cor_p6_omega2");
}

#[test]
fn classify_sees_the_bull() {
    let out = chibound(&["classify", &fixture("bull.edges")]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["bull_free"], false);
    assert_eq!(v["diamond_free"], true);
    assert_eq!(v["witnesses"]["bull"], serde_json::json!([0, 1, 2, 3, 4]));
    let probe = json(&chibound(&["classify", "--probe-path", "5", &fixture("c5.edges")]));
    assert_eq!(
        (probe["path_probe"].clone(), probe["path_free"].clone()),
        (5.into(), true.into())
    );
}

#[test]
fn coloring_outside_the_class_exits_one() {
    let out = chibound(&["color", &fixture("bull.edges")]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("bull"));
    let out = chibound(&["color", "--theorem", "p5", &fixture("p6.edges")]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn decompose_reports_case_and_clauses() {
    let out = chibound(&["decompose", &fixture("planted/layering_two_part.edges")]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["layering"]["case"]["kind"], "two_part");
    assert!(v["clauses"].as_array().unwrap().iter().all(|c| c["holds"] == true));
    let prism = json(&chibound(&["decompose", &fixture("prism4.edges")]));
    assert_eq!(prism["layering"]["case"]["kind"], "prism");
    let tf = chibound(&["decompose", &fixture("c5.edges")]);
    assert_eq!(tf.status.code(), Some(2));
}

#[test]
fn bounds_use_six_decimals() {
    let out = chibound(&["bounds", &fixture("grotzsch.edges")]);
    let text = stdout(&out);
    assert!(text.contains("\"value\": 6.633250"), "{text}");
    let v = json(&out);
    assert_eq!(v["inputs"]["omega"], 2);
    assert_eq!(v["bounds"]["table1"]["value"].to_string(), "4.000000");
}

#[test]
fn sample_is_seeded_and_verifiable() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.edges");
    let b = dir.path().join("b.edges");
    for p in [&a, &b] {
        let out = chibound(&[
            "sample",
            "--n",
            "14",
            "--p",
            "0.3",
            "--forbid",
            "bull,diamond",
            "--seed",
            "11",
            "--out",
            p.to_str().unwrap(),
        ]);
        assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    }
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    let class = json(&chibound(&["classify", a.to_str().unwrap()]));
    assert_eq!(
        (class["bull_free"].clone(), class["diamond_free"].clone()),
        (true.into(), true.into())
    );

    let col = dir.path().join("a.col");
    let out = chibound(&["chi", "--exact", "--out", col.to_str().unwrap(), a.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let ok = chibound(&["verify", a.to_str().unwrap(), col.to_str().unwrap()]);
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(json(&ok)["verdict"]["proper"], true);
}

#[test]
fn verify_rejects_a_clash() {
    let dir = tempfile::tempdir().unwrap();
    let col = dir.path().join("bad.col");
    std::fs::write(&col, "0 1\n1 1\n2 2\n3 1\n4 2\n").unwrap();
    let out = chibound(&["--plain", "verify", &fixture("c5.edges"), col.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).starts_with("improper"));
}

#[test]
fn malformed_input_names_line_and_column() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.edges");
    std::fs::write(&bad, "0 1\n1 x\n").unwrap();
    let out = chibound(&["chi", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("line 2, column 3"), "{err}");
    assert_eq!(
        chibound(&["chi", "--frobnicate", &fixture("c5.edges")]).status.code(),
        Some(2)
    );
}

#[test]
fn desk_limit_comes_from_the_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_chibound"))
        .args(["chi", "--exact", &fixture("grotzsch.edges")])
        .env("CHIBOUND_DESK_LIMIT", "5")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("limit of 5"));
    let bad = Command::new(env!("CARGO_BIN_EXE_chibound"))
        .args(["chi", &fixture("c5.edges")])
        .env("CHIBOUND_DESK_LIMIT", "lots")
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn run_report_records_digest_and_outcome() {
    let dir = tempfile::tempdir().unwrap();
    let report = dir.path().join("run.json");
    let out = chibound(&["--report", report.to_str().unwrap(), "chi", &fixture("c5.edges")]);
    assert_eq!(out.status.code(), Some(0));
    let r: Value = serde_json::from_str(&std::fs::read_to_string(&report).unwrap()).unwrap();
    assert_eq!(r["command"][1], "--report");
    assert_eq!(r["inputs"][0]["sha256"].as_str().unwrap().len(), 64);
    assert_eq!(r["outputs"]["chi"], 3);
    assert_eq!(r["summary"]["passed"], true);
    assert_eq!(r["exit_code"], 0);
}

#[test]
fn suite_subset_is_deterministic() {
    let a = chibound(&["suite", "--seed", "7", "--only", "1,2,11"]);
    let b = chibound(&["suite", "--seed", "7", "--only", "1,2,11"]);
    assert_eq!(a.status.code(), Some(0));
    let strip = |v: Value| {
        let mut v = v;
        for c in v["criteria"].as_array_mut().unwrap() {
            c["millis"] = Value::Null;
        }
        v
    };
    assert_eq!(strip(json(&a)), strip(json(&b)));
    let plain = chibound(&["--plain", "suite", "--only", "2"]);
    assert!(stdout(&plain).starts_with("PASS  2 c5_witness"));
    assert_eq!(chibound(&["suite", "--only", "99"]).status.code(), Some(1));
}
