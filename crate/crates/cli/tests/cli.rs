//! End-to-end tests of the installed binary: the documented invocations,
//! the exit-code contract, and schema validity of every JSON output.

use serde_json::Value;
use std::process::{Command, Output};

fn klbasis(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_klbasis"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(args: &[&str]) -> String {
    let out = klbasis(args);
    assert!(
        out.status.success(),
        "command {args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).expect("utf-8 output")
}

fn json_of(args: &[&str]) -> Value {
    serde_json::from_str(&stdout_of(args)).expect("stdout parses as json")
}

fn assert_matches_schema(name: &str, doc: &Value) {
    let path = format!(
        "{}/../../schemas/v1/{name}.schema.json",
        env!("CARGO_MANIFEST_DIR")
    );
    let schema: Value =
        serde_json::from_str(&std::fs::read_to_string(&path).expect("schema file")).unwrap();
    let compiled = jsonschema::JSONSchema::compile(&schema).expect("schema compiles");
    let msgs: Vec<String> = match compiled.validate(doc) {
        Ok(()) => Vec::new(),
        Err(errors) => errors
            .map(|e| format!("{} at {}", e, e.instance_path))
            .collect(),
    };
    assert!(msgs.is_empty(), "{name} schema violations: {msgs:#?}");
}

#[test]
fn enumerate_compositions_b3() {
    let doc = json_of(&[
        "enumerate",
        "--type",
        "B",
        "--d",
        "3",
        "--compositions",
        "--format",
        "json",
    ]);
    assert_matches_schema("enumerate", &doc);
    assert_eq!(doc["count"], 8);
    let rows = doc["compositions"].as_array().unwrap();
    let find = |parts: &[u64]| {
        rows.iter()
            .find(|r| r["parts"].as_array().unwrap().iter().map(|v| v.as_u64().unwrap()).collect::<Vec<_>>() == parts)
            .unwrap_or_else(|| panic!("missing row {parts:?}"))
    };
    assert_eq!(find(&[1, 5, 1])["J"], serde_json::json!([0, 1]));
    assert_eq!(find(&[2, 3, 2])["J"], serde_json::json!([0, 2]));
    assert_eq!(find(&[3, 1, 3])["J"], serde_json::json!([1, 2]));
    assert_eq!(find(&[7])["subgroup_order"], 48);
}

#[test]
fn enumerate_std_shape_22() {
    let doc = json_of(&[
        "enumerate", "--type", "A", "--d", "4", "--std", "--shape", "2,2", "--format", "json",
    ]);
    assert_matches_schema("enumerate", &doc);
    assert_eq!(doc["count"], 2);
    assert_eq!(doc["tableaux"][0], serde_json::json!([[1, 2], [3, 4]]));
}

#[test]
fn enumerate_reps_b3_j12() {
    let doc = json_of(&[
        "enumerate", "--type", "B", "--d", "3", "--reps", "--J", "1,2", "--format", "json",
    ]);
    assert_matches_schema("enumerate", &doc);
    assert_eq!(doc["count"], 8);
    assert_eq!(doc["reps"][0]["window"], "|1,2,3|");
    assert_eq!(doc["reps"][7]["window"], "|-3,-2,-1|");
}

#[test]
fn enumerate_shape_b_parses_half_and_center() {
    let doc = json_of(&[
        "enumerate", "--type", "B", "--d", "3", "--row-std", "--shape-b", "2:3", "--format",
        "json",
    ]);
    assert_matches_schema("enumerate", &doc);
    assert_eq!(doc["shape"], serde_json::json!([2, 3, 2]));
    assert_eq!(doc["count"], 12);
}

#[test]
fn kl_a3_positive_pretty_agrees_with_json() {
    let base = ["kl", "--type", "A", "--d", "3", "--J", "1", "--side", "positive"];
    let pretty = stdout_of(&base);
    assert!(pretty.contains("m(|1,2,3|, |1,3,2|) = q\n"), "{pretty}");

    let mut jargs = base.to_vec();
    jargs.extend(["--format", "json"]);
    let doc = json_of(&jargs);
    assert_matches_schema("kl", &doc);
    let reps = doc["table"]["reps"].as_array().unwrap();
    assert_eq!(reps[0], "|1,2,3|");
    let s2 = reps.iter().position(|r| r == "|1,3,2|").unwrap();
    // The same number as the pretty line: the monomial q.
    assert_eq!(doc["table"]["m"][0][s2], serde_json::json!({"1": "1"}));
    assert_eq!(doc["table"]["p"][0][s2], serde_json::json!({"1": "-1"}));
}

#[test]
fn kl_a3_negative_has_strict_negative_entries() {
    let pretty = stdout_of(&[
        "kl", "--type", "A", "--d", "3", "--J", "1", "--side", "negative",
    ]);
    assert!(pretty.contains("m(|1,2,3|, |1,3,2|) = -q^-1\n"), "{pretty}");
}

#[test]
fn kl_b2_empty_j_has_unit_diagonal() {
    let doc = json_of(&[
        "kl", "--type", "B", "--d", "2", "--J", "", "--side", "positive", "--format", "json",
    ]);
    assert_matches_schema("kl", &doc);
    let n = doc["table"]["reps"].as_array().unwrap().len();
    assert_eq!(n, 8);
    for i in 0..n {
        assert_eq!(doc["table"]["m"][i][i], serde_json::json!({"0": "1"}));
        assert_eq!(doc["table"]["p"][i][i], serde_json::json!({"0": "1"}));
    }
}

#[test]
fn kl_csv_has_header_row() {
    let csv = stdout_of(&[
        "kl", "--type", "A", "--d", "3", "--J", "1", "--side", "positive", "--format", "csv",
    ]);
    assert!(csv.starts_with("x,w,m,p\n"));
    assert!(csv.contains("\"|1,2,3|\",\"|1,3,2|\",q,-q"));
}

#[test]
fn verify_lengths_b3_passes() {
    let doc = json_of(&[
        "verify", "--suite", "lengths", "--type", "B", "--d", "3", "--format", "json",
    ]);
    assert_matches_schema("verify", &doc);
    assert_eq!(doc["pass"], true);
    assert_eq!(doc["suites"][0]["suite"], "lengths");
}

#[test]
fn verify_discovery_names_a_survivor() {
    let pretty = stdout_of(&["verify", "--suite", "discovery", "--type", "A", "--max-d", "4"]);
    assert!(
        pretty.contains("negative/inverse-top/p/up-to-sign/reversed/support-extreme"),
        "{pretty}"
    );
    assert!(pretty.contains("verify: PASS"));
}

#[test]
fn verify_discovery_type_b_passes() {
    let doc = json_of(&[
        "verify", "--suite", "discovery", "--type", "B", "--max-d", "2", "--format", "json",
    ]);
    assert_matches_schema("verify", &doc);
    assert_eq!(doc["pass"], true);
}

#[test]
fn verify_runs_are_deterministic() {
    // CSV output carries no timing, so reruns must agree byte for byte.
    let args = [
        "verify", "--suite", "discovery", "--type", "A", "--max-d", "3", "--format", "csv",
        "--seed", "7",
    ];
    assert_eq!(stdout_of(&args), stdout_of(&args));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(
        klbasis(&["enumerate", "--type", "C", "--d", "3", "--group"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        klbasis(&["verify", "--suite", "nonsense"]).status.code(),
        Some(2)
    );
    // A tableau listing without a shape is rejected before any computation.
    assert_eq!(
        klbasis(&["enumerate", "--type", "A", "--d", "4", "--std"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn cap_exceeded_exits_3() {
    let out = klbasis(&[
        "--max-cosets", "2", "kl", "--type", "A", "--d", "3", "--J", "1", "--side", "positive",
    ]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("CAP_COSETS"));

    // The same cap through the environment variable.
    let out = Command::new(env!("CARGO_BIN_EXE_klbasis"))
        .args(["kl", "--type", "A", "--d", "3", "--J", "1", "--side", "positive"])
        .env("CAP_COSETS", "2")
        .output()
        .expect("binary runs");
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn output_flag_writes_whole_file() {
    let path = std::env::temp_dir().join(format!("klbasis-test-{}.json", std::process::id()));
    let _ = std::fs::remove_file(&path);
    let out = klbasis(&[
        "kl", "--type", "A", "--d", "3", "--J", "1", "--side", "positive", "--format", "json",
        "--output", path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let doc: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_matches_schema("kl", &doc);
    std::fs::remove_file(&path).unwrap();
}
