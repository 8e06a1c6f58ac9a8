//! End-to-end runs of the `phopf` binary.

use std::process::{Command, Output};

use serde_json::Value;

fn phopf(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_phopf")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn verify_family_point() {
    let out = phopf(&["verify-family", "A1a", "--p", "3", "--params", "e1=1,e2=1,l=2,s=0,t=0"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["pass"], true);
    assert_eq!(v["result"]["basisCount"], 27);
    assert_eq!(v["result"]["primitiveDim"], 1);
}

#[test]
fn verify_family_parametric_subbox() {
    let out = phopf(&["verify-family", "Ca", "--p", "3", "--params", "e3=1"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["result"]["boxSize"], 9);
    assert_eq!(v["result"]["failures"], Value::Array(vec![]));
}

#[test]
fn off_locus_point_fails_with_exit_one() {
    let out = phopf(&["verify-family", "A1a", "--p", "3", "--params", "e1=1,e2=1,l=0,s=1,t=0"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["result"]["confluent"], false);
}

#[test]
fn derive_constraints_matches_printed_locus() {
    let out = phopf(&["derive-constraints", "A1a", "--p", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["result"]["matches"], true);
    assert_eq!(v["result"]["printed"].as_array().unwrap().len(), 5);
}

#[test]
fn pthpower_lemma_has_four_passing_parts() {
    let out = phopf(&["lemmas", "pthpower", "--p", "5"]);
    assert_eq!(out.status.code(), Some(0));
    let lemmas = json(&out)["result"]["lemmas"].as_array().unwrap().clone();
    assert_eq!(lemmas.len(), 4);
    assert!(lemmas.iter().all(|l| l["pass"] == true));
}

#[test]
fn nichols_and_bosonize_verbs() {
    let v = json(&phopf(&["nichols", "jordan", "--p", "2"]));
    assert_eq!(v["result"]["dim"], 16);
    assert_eq!(v["result"]["basisMatches"], true);
    let v = json(&phopf(&["bosonize", "R-B", "--p", "3"]));
    assert_eq!(v["pass"], true);
    assert_eq!(v["result"]["partner"], "GR-B@p=3");
}

#[test]
fn cohomology_of_truncated_polynomial() {
    let v = json(&phopf(&["cohomology", "truncated", "--p", "5"]));
    assert_eq!(v["pass"], true);
    assert_eq!(v["result"]["report"]["dims"]["H2"], 1);
    assert_eq!(v["result"]["report"]["graded"]["(2,5)"], 1);
}

#[test]
fn list_counts_and_catalog() {
    let v = json(&phopf(&["list", "D1", "--p", "3"]));
    assert_eq!(v["result"]["counts"], serde_json::json!([6, 1]));
    let v = json(&phopf(&["list", "--p", "2,3"]));
    assert!(v["result"]["catalog"].as_array().unwrap().len() > 40);
}

#[test]
fn report_all_is_deterministic_across_thread_counts() {
    let a = phopf(&["report-all", "--p", "2,3", "--threads", "1"]);
    let b = phopf(&["report-all", "--p", "2,3", "--threads", "4"]);
    let c = phopf(&["report-all", "--p", "2,3"]);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.stdout, c.stdout);
    // The three inconsistent A3 rows fail criteria 1, 2 and 5 at p = 2.
    assert_eq!(a.status.code(), Some(1));
    let v = json(&a);
    for crit in v["result"]["criteria"].as_array().unwrap() {
        let n = crit["criterion"].as_u64().unwrap();
        if [1, 2, 5].contains(&n) {
            let f: Vec<&str> = crit["findings"].as_array().unwrap().iter().map(|s| s.as_str().unwrap()).collect();
            assert_eq!(f.len(), 3, "{:?}", f);
            assert!(f.iter().all(|s| s.starts_with("A3b@p=2") || s.starts_with("A3c@p=2") || s.starts_with("A3e@p=2")));
        } else {
            assert_eq!(crit["pass"], true, "{}", crit);
        }
    }
    assert_eq!(phopf(&["report-all", "--p", "3,5"]).status.code(), Some(0));
}

#[test]
fn invalid_input_yields_structured_error() {
    let out = phopf(&["verify-family", "A1a", "--p", "4"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(json(&out)["error"]["kind"], "Inadmissible");
    let out = phopf(&["verify-family", "B3", "--p", "2"]);
    assert_eq!(out.status.code(), Some(2));
    let out = phopf(&["no-such-verb"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(json(&out)["error"]["kind"], "Usage");
}

#[test]
fn enumeration_cap_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_phopf"))
        .args(["verify-family", "A1a", "--p", "3"])
        .env("PHOPF_ENUM_CAP", "10")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(json(&out)["error"]["kind"], "TooLarge");
}

#[test]
fn output_flag_writes_file() {
    let path = std::env::temp_dir().join(format!("phopf-out-{}.json", std::process::id()));
    let out = phopf(&["list", "A2", "--p", "3", "--output", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["result"]["counts"], serde_json::json!([5, 0]));
    let _ = std::fs::remove_file(path);
}

/// Checks an envelope against the versioned output schema by hand.
fn conforms(schema: &Value, v: &Value) -> Result<(), String> {
    let props = schema["properties"].as_object().unwrap();
    let obj = v.as_object().ok_or("not an object")?;
    for k in obj.keys() {
        props.get(k).ok_or(format!("unexpected key {}", k))?;
    }
    for k in schema["required"].as_array().unwrap() {
        obj.get(k.as_str().unwrap()).ok_or(format!("missing {}", k))?;
    }
    if v["schemaVersion"] != props["schemaVersion"]["const"] {
        return Err("schemaVersion".into());
    }
    if let Some(c) = obj.get("command") {
        if !props["command"]["enum"].as_array().unwrap().contains(c) {
            return Err(format!("command {}", c));
        }
    }
    let pass = v["pass"].as_bool().ok_or("pass")?;
    match (obj.get("result"), obj.get("error")) {
        (Some(r), None) if r.is_object() || r.is_array() => Ok(()),
        (None, Some(e)) if !pass => {
            let kinds = props["error"]["properties"]["kind"]["enum"].as_array().unwrap();
            if kinds.contains(&e["kind"]) && e["message"].is_string() && e.as_object().unwrap().len() == 2 {
                Ok(())
            } else {
                Err(format!("error {}", e))
            }
        }
        _ => Err("exactly one of result or error".into()),
    }
}

#[test]
fn outputs_conform_to_versioned_schema() {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/../../schemas/phopf-output.schema.json");
    let schema: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    let runs: [&[&str]; 12] = [
        &["verify-family", "A1a", "--p", "3", "--params", "e1=1,e2=1,l=2,s=0,t=0"],
        &["verify-family", "A1a", "--p", "3"],
        &["derive-constraints", "Ca", "--p", "3"],
        &["cohomology", "truncated", "--p", "2"],
        &["nichols", "jordan", "--p", "2"],
        &["bosonize", "R-B", "--p", "3"],
        &["lemmas", "pthpower", "--p", "3"],
        &["list", "--p", "3"],
        &["report-all", "--p", "3"],
        &["verify-family", "A1a", "--p", "4"],
        &["verify-family", "Nope", "--p", "3"],
        &["no-such-verb"],
    ];
    for args in runs {
        let out = phopf(args);
        let v = json(&out);
        conforms(&schema, &v).unwrap_or_else(|e| panic!("{:?}: {}", args, e));
        let expected = match (v.get("error"), v["pass"].as_bool()) {
            (Some(_), _) => 2,
            (None, Some(true)) => 0,
            _ => 1,
        };
        assert_eq!(out.status.code(), Some(expected), "{:?}", args);
    }
}
