use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn mlog(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mlog"))
        .args(args)
        .output()
        .unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("mlog-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn write_problem(name: &str, text: &str) -> String {
    let p = scratch(name);
    std::fs::write(&p, text).unwrap();
    p.to_string_lossy().into_owned()
}

#[test]
fn analyze_writes_a_stable_json_report() {
    let out = mlog(&["analyze", "line-in-two-lines", "--no-timings"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout.clone()).unwrap();
    let top: Vec<&str> = text
        .lines()
        .filter_map(|l| l.strip_prefix("  \"")?.split('"').next())
        .collect();
    assert_eq!(
        top,
        [
            "schema_version",
            "tool",
            "problem",
            "geometry",
            "results",
            "properties",
            "passed"
        ]
    );
    let doc: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["geometry"]["k"], 2);
    assert_eq!(doc["geometry"]["fundamental_form"]["form"], "y*dx^dz");
    assert_eq!(doc["results"][0]["q"], 2);
    assert_eq!(doc["results"][0]["verdict"]["verdict"], "free");
    assert_eq!(doc["results"][0]["verdict"]["pdim"], 1);
    assert_eq!(doc["passed"], true);

    let timed = mlog(&["analyze", "line-in-two-lines"]);
    let doc: Value = serde_json::from_slice(&timed.stdout).unwrap();
    assert!(doc["timings_us"]["total"].is_u64());
}

#[test]
fn json_flag_writes_a_file_and_text_goes_to_stdout() {
    let path = scratch("report.json");
    let p = path.to_string_lossy();
    let out = mlog(&[
        "analyze",
        "two-lines",
        "--json",
        &p,
        "--text",
        "--no-timings",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("verdict: FREE"), "{text}");
    assert!(text.ends_with("PASSED\n"));
    let doc: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(doc["problem"]["complete_intersection"][0], "x*y");
}

#[test]
fn non_free_input_still_passes() {
    let out = mlog(&["analyze", "elliptic-cone", "--q", "2", "--no-timings"]);
    assert_eq!(out.status.code(), Some(0));
    let doc: Value = serde_json::from_slice(&out.stdout).unwrap();
    let results = doc["results"].as_array().unwrap();
    assert_eq!(results.len(), 1);
    assert_eq!(results[0]["verdict"]["verdict"], "not free");
    assert_eq!(results[0]["verdict"]["jacobian_depth"], 1);
    assert_eq!(results[0]["duality"]["reverse"], Value::Null);
}

#[test]
fn input_errors_exit_with_one() {
    let out = mlog(&["analyze", "two-lines", "--q", "3"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("outside the range"));

    let bad = write_problem("bad.json", "{ \"variables\": [\"x\"] ");
    assert_eq!(mlog(&["analyze", &bad]).status.code(), Some(1));

    let hyp = write_problem(
        "hyp.json",
        r#"{"variables": ["x", "y", "z"], "weights": [1, 1, 1],
            "complete_intersection": ["x", "x*y"], "space": ["x", "y"]}"#,
    );
    let out = mlog(&["analyze", &hyp]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("regular sequence"));

    assert_eq!(mlog(&["analyze", "no-such-problem"]).status.code(), Some(1));
    assert_eq!(mlog(&["corpus", "no-such-problem"]).status.code(), Some(1));
}

#[test]
fn checks_field_limits_the_report() {
    let only = write_problem(
        "only.json",
        r#"{"variables": ["x", "y", "z"], "weights": [1, 1, 1],
            "complete_intersection": ["x*y", "z"], "space": ["x", "z"],
            "q": [2], "checks": ["cor49"]}"#,
    );
    let out = mlog(&["analyze", &only, "--no-timings"]);
    assert_eq!(out.status.code(), Some(0));
    let doc: Value = serde_json::from_slice(&out.stdout).unwrap();
    let r = &doc["results"][0];
    assert!(r.get("verdict").is_none());
    assert!(r.get("duality").is_none());
    assert_eq!(r["cor49"]["passed"], true);
    assert_eq!(doc["properties"].as_array().unwrap().len(), 0);
}

#[test]
fn verify_levels() {
    let out = mlog(&["verify", "koszul", "--level", "basic"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text, "q = 3: free (pdim 2, k = 3)\nPASS\n");

    let out = mlog(&["verify", "monomial-curve-345", "--level", "full"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn corpus_lists_and_prints_entries() {
    let out = mlog(&["corpus"]);
    let text = String::from_utf8(out.stdout).unwrap();
    for name in [
        "two-lines",
        "monomial-curve-345",
        "line-in-two-lines",
        "koszul",
        "elliptic-cone",
    ] {
        assert!(text.contains(name));
    }
    let out = mlog(&["corpus", "koszul"]);
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["space"], serde_json::json!(["x", "y", "z"]));
}
