use std::path::Path;
use std::process::Command;

use serde_json::{json, Value};

fn repcalc(args: &[&str]) -> (i32, Value) {
    let out = Command::new(env!("CARGO_BIN_EXE_repcalc")).args(args).output().unwrap();
    let code = out.status.code().unwrap();
    let body = serde_json::from_slice(&out.stdout).unwrap_or(Value::Null);
    (code, body)
}

fn payload(args: &[&str]) -> Value {
    let (code, body) = repcalc(args);
    assert_eq!(code, 0, "{args:?}: {body}");
    body["payload"].clone()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn lr_coeff_reports_both_counts() {
    let (code, body) = repcalc(&["lr", "coeff", "2,1", "2,1", "3,2,1"]);
    assert_eq!(code, 0);
    assert_eq!(body["payload"], json!({"tableau": 2, "hive": 2, "agree": true}));
    assert_eq!(body["command"], json!(["lr", "coeff", "2,1", "2,1", "3,2,1"]));
    assert!(body["version"].is_string() && body["wall_time_ms"].is_u64());
}

#[test]
fn lr_positive_and_stretch() {
    assert_eq!(payload(&["lr", "positive", "2", "2", "2,1,1"])["positive"], false);
    let s = payload(&["lr", "stretch", "2,1", "2,1", "3,2,1", "--k", "6"]);
    assert_eq!(s["values"], json!([2, 3, 4, 5, 6, 7]));
    assert_eq!(s["fit"], json!({"period": 1, "components": [["1", "1"]]}));
}

#[test]
fn ehrhart_cube_and_fit() {
    let dir = tempfile::tempdir().unwrap();
    let cube = write(
        dir.path(),
        "cube2.json",
        r#"{"A": [["1","0"],["-1","0"],["0","1"],["0","-1"]], "b": ["1","0","1","0"]}"#,
    );
    assert_eq!(payload(&["ehrhart", "--polytope", &cube, "--k", "3"])["count"], 16);

    let half = write(dir.path(), "half.json", r#"{"A": [["1"],["-1"]], "b": ["1/2","0"]}"#);
    let p = payload(&["ehrhart", "--polytope", &half, "--k", "10", "--fit", "--holdout", "2"]);
    assert_eq!(p["values"], json!([1, 2, 2, 3, 3, 4, 4, 5, 5, 6]));
    assert_eq!(p["fit"]["period"], 2);
}

#[test]
fn ehrhart_unbounded_is_a_domain_error() {
    let dir = tempfile::tempdir().unwrap();
    let ray = write(dir.path(), "ray.json", r#"{"A": [["-1"]], "b": ["0"]}"#);
    let (code, body) = repcalc(&["ehrhart", "--polytope", &ray, "--k", "2"]);
    assert_eq!(code, 1);
    assert_eq!(body["error"]["kind"], "unbounded");
}

#[test]
fn symfunc_expansions() {
    assert_eq!(payload(&["symfunc", "plethysm", "2", "2"])["expansion"], json!({"4": 1, "2,2": 1}));
    let p = payload(&["symfunc", "product", "1", "1"]);
    assert_eq!(p["expansion"], json!({"2": 1, "1,1": 1}));
}

#[test]
fn kron_forms() {
    assert_eq!(payload(&["kron", "2,1", "2,1", "2,1"])["kronecker"], 1);
    assert_eq!(payload(&["kron", "det-invariant", "1,1", "--m", "2"])["multiplicity"], 0);
    let s = payload(&["kron", "g-stretch", "2", "--m", "2", "--k", "4"]);
    assert_eq!(s["values"], json!([1, 1, 1, 1]));
    let (code, body) = repcalc(&["kron", "g-stretch", "3,2", "--m", "2", "--k", "4"]);
    assert_eq!(code, 1);
    assert!(body["error"]["message"].as_str().unwrap().contains("k = 3"));
}

#[test]
fn weyl_commands() {
    assert_eq!(payload(&["weyl", "dim", "2,1", "3"])["dim"], 8);
    let b = payload(&["weyl", "dim", "1,1", "2", "--basis"]);
    assert_eq!(b["basis"][0]["poly"], "z11*z22 - z12*z21");
    assert_eq!(payload(&["weyl", "invariants", "--gamma", "3,1", "--n", "2"])["invariant_dim"], 0);
    assert_eq!(payload(&["weyl", "symcheck", "perm", "--size", "2"])["fixed_dim"], 1);
    assert_eq!(payload(&["weyl", "kempf", "--n", "3"])["stable"], true);
    assert_eq!(payload(&["symcheck", "det", "--size", "3"])["form_space_dim"], 165);
}

#[test]
fn obstruct_emit_and_verify() {
    let certs = payload(&["obstruct", "emit", "--max", "4"])["certificates"].clone();
    let gammas: Vec<&str> = certs.as_array().unwrap().iter().map(|c| c["gamma"].as_str().unwrap()).collect();
    assert_eq!(gammas, ["4", "6", "8"]);
    // field order of the published format
    let first = serde_json::to_string(&certs[0]).unwrap();
    assert_eq!(
        first,
        r#"{"n":2,"gamma":"4","checks":{"even":true,"alpha_neq_beta":true,"invariant_dim":null},"bitlength":5}"#
    );

    let dir = tempfile::tempdir().unwrap();
    let good = write(dir.path(), "good.json", &first);
    let v = payload(&["obstruct", "verify", &good, "--full"]);
    assert_eq!(v["certificates"][0]["checks"]["invariant_dim"], 1);

    let bad = write(
        dir.path(),
        "bad.json",
        r#"{"n":2,"gamma":"3,1","checks":{"even":true,"alpha_neq_beta":true,"invariant_dim":null},"bitlength":5}"#,
    );
    let (code, body) = repcalc(&["obstruct", "verify", &bad]);
    assert_eq!(code, 1);
    assert_eq!(body["error"]["message"], "not an obstruction: failed check `even`");
}

#[test]
fn magic_orbits() {
    let m = payload(&["magic", "--n", "3", "--r", "1", "--check"]);
    assert_eq!((m["count"].as_u64(), m["orbit_count"].as_u64()), (Some(6), Some(1)));
    assert_eq!(m["invariant_check"]["fixed_dim"], 1);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(repcalc(&["bogus"]).0, 2);
    assert_eq!(repcalc(&["lr", "coeff", "1"]).0, 2);
    assert_eq!(repcalc(&["kron", "1", "1"]).0, 2);
}

#[test]
fn domain_errors_exit_one() {
    let (code, body) = repcalc(&["lr", "coeff", "2,x", "1", "3"]);
    assert_eq!(code, 1);
    assert_eq!(body["error"]["kind"], "invalid_partition");
    let (code, _) = repcalc(&["symcheck", "det", "--size", "5"]);
    assert_eq!(code, 1);
}

#[test]
fn config_file_sets_budgets() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write(dir.path(), "cfg.json", r#"{"magic_weight_cap": 2}"#);
    let (code, body) = repcalc(&["--config", &cfg, "magic", "--n", "2", "--r", "3"]);
    assert_eq!(code, 1);
    assert_eq!(body["error"]["kind"], "weight_cap");
    let bad = write(dir.path(), "bad.json", r#"{"no_such_key": 1}"#);
    assert_eq!(repcalc(&["--config", &bad, "magic", "--n", "2", "--r", "1"]).0, 1);
}

#[test]
fn payloads_are_deterministic() {
    let args = ["symfunc", "plethysm", "3", "2"];
    assert_eq!(payload(&args), payload(&args));
}
