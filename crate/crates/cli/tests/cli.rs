use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hypotrochoid"))
        .args(args)
        .env_remove("HYPOTROCHOID_OUT_DIR")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut full = args.to_vec();
    full.extend(["--format", "json"]);
    let o = run(&full);
    assert!(o.status.success(), "{args:?}: {}", stderr(&o));
    serde_json::from_str(&stdout(&o)).unwrap()
}

/// Checks the `required` keys of a shipped schema, recursing into objects.
fn conforms(value: &Value, schema: &Value) {
    if let Some(req) = schema.get("required").and_then(Value::as_array) {
        for key in req {
            let key = key.as_str().unwrap();
            assert!(value.get(key).is_some(), "missing '{key}' in {value}");
        }
    }
    if let (Some(props), Some(obj)) = (schema.get("properties").and_then(Value::as_object), value.as_object()) {
        for (k, sub) in props {
            if let Some(v) = obj.get(k) {
                if v.is_object() {
                    conforms(v, sub);
                }
            }
        }
    }
}

fn schema(name: &str) -> Value {
    let p = Path::new(env!("CARGO_MANIFEST_DIR")).join("schemas").join(format!("{name}.schema.json"));
    serde_json::from_str(&std::fs::read_to_string(p).unwrap()).unwrap()
}

fn check_schemas(doc: &Value, result_schema: &str) {
    conforms(doc, &schema("envelope"));
    conforms(&doc["result"], &schema(result_schema));
}

#[test]
fn coeffs_rows_and_range() {
    let doc = json(&["coeffs", "--m-max", "3"]);
    check_schemas(&doc, "coeffs");
    let rows = doc["result"]["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 7);
    assert!(rows.iter().all(|r| r["equal"] == true));
    let one = json(&["coeffs", "--m-max", "1"]);
    assert_eq!(one["result"]["rows"].as_array().unwrap().len(), 1);
    assert_eq!(one["result"]["rows"][0]["composition"], "(1)");
    assert_eq!(one["result"]["rows"][0]["c_coeff"], "1");
    assert_eq!(run(&["coeffs", "--m-max", "0"]).status.code(), Some(2));
    assert_eq!(run(&["coeffs", "--m-max", "13"]).status.code(), Some(2));
    let csv = stdout(&run(&["coeffs", "--m-max", "2", "--format", "csv"]));
    assert!(csv.starts_with("# command=coeffs m_max=2 seed="));
    assert_eq!(csv.lines().count(), 1 + 1 + 3);
}

#[test]
fn descendants_and_basis_solve() {
    let doc = json(&["descendant", "2", "3"]);
    check_schemas(&doc, "descendant");
    assert_eq!(doc["result"]["normal_form"], "L_{-2}^3 1 + 3 L_{-4}L_{-2} 1 + 6 L_{-6} 1");
    let t31 = json(&["descendant", "3", "1"]);
    assert_eq!(t31["result"]["normal_form"], "L_{-3} 1");
    let solved = json(&["descendant", "2", "3", "--solve-basis", "L[-2,-2,-2]"]);
    let display = solved["result"]["solve"]["display"].as_str().unwrap();
    assert!(display.starts_with("T[2,3] "), "{display}");
    assert_eq!(run(&["descendant", "1", "2"]).status.code(), Some(2));
}

#[test]
fn correlators() {
    let doc = json(&["correlator", "T[2,1]@x T[2,1]@y", "--at", "x=1", "--at", "y=0", "--c", "1/2"]);
    check_schemas(&doc, "correlator");
    let r = &doc["result"];
    assert_eq!(r["variables"], serde_json::json!(["x", "y"]));
    assert_eq!(r["denominator"], serde_json::json!([{ "pair": [0, 1], "power": 4 }]));
    assert_eq!(r["value"], "1/4");
    assert_eq!(json(&["correlator", "T[2,1]@x"])["result"]["display"], "0");
    assert_eq!(json(&["correlator", ""])["result"]["display"], "1");
    let bad = run(&["correlator", "T[2,1]@x T[2"]);
    assert_eq!(bad.status.code(), Some(2));
    assert!(stderr(&bad).contains("position"), "{}", stderr(&bad));
    assert_eq!(run(&["correlator", "T[2,1]@x T[2,1]@x"]).status.code(), Some(2));
}

#[test]
fn check_suites() {
    let ops = run(&["check", "operators"]);
    assert_eq!(ops.status.code(), Some(0), "{}", stdout(&ops));
    assert!(stdout(&ops).contains("[PASS]  5 operators"));
    let doc = json(&["check", "geometry"]);
    check_schemas(&doc, "check");
    assert_eq!(doc["result"]["all_passed"], true);
    assert_eq!(doc["result"]["criteria"][0]["name"], "geometry");
    assert_eq!(run(&["check", "everything"]).status.code(), Some(2));
}

#[test]
fn curves() {
    let dir = tempfile::tempdir().unwrap();
    let svg = dir.path().join("k4.svg");
    let o = run(&["curve", "--k", "4", "--b", "1.5", "--theta", "0", "--out", svg.to_str().unwrap()]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("simple: true"));
    let body = std::fs::read_to_string(&svg).unwrap();
    assert!(body.contains("<svg") && body.contains("k=4") && body.contains("n_samples=4096"));

    let csv = dir.path().join("k3.csv");
    let o = run(&["curve", "--k", "3", "--b", "1.0", "--format", "csv", "--out", csv.to_str().unwrap()]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("simple: false"));
    assert!(stderr(&o).contains("not simple"));
    assert!(csv.exists());

    let bad = run(&["curve", "--k", "3", "--b", "1.5", "--out", "/nonexistent/dir/x.svg"]);
    assert_eq!(bad.status.code(), Some(3));
    assert_eq!(run(&["curve", "--k", "3", "--b", "1.5", "--format", "json"]).status.code(), Some(2));
}

#[test]
fn out_dir_override() {
    let dir = tempfile::tempdir().unwrap();
    let o = Command::new(env!("CARGO_BIN_EXE_hypotrochoid"))
        .args(["kappa", "--kappa", "4", "--out", "kappa.txt"])
        .env("HYPOTROCHOID_OUT_DIR", dir.path())
        .output()
        .unwrap();
    assert!(o.status.success());
    let body = std::fs::read_to_string(dir.path().join("kappa.txt")).unwrap();
    assert!(body.contains("c (exact) = 1"));
}

#[test]
fn kappa_map() {
    for (k, c) in [("8/3", "0"), ("3", "1/2"), ("4", "1")] {
        let doc = json(&["kappa", "--kappa", k]);
        check_schemas(&doc, "kappa");
        assert_eq!(doc["result"]["c_exact"], c);
    }
    assert_eq!(run(&["kappa"]).status.code(), Some(2));
    assert_eq!(run(&["kappa", "--kappa", "5"]).status.code(), Some(2));
}

#[test]
fn expansion_report() {
    let doc = json(&["expand", "--k", "2", "--order", "1", "--eps", "0.2,0.1,0.05"]);
    check_schemas(&doc, "expand");
    let slope = doc["result"]["slope"].as_f64().unwrap();
    assert!((slope - 4.0).abs() < 0.3, "slope {slope}");
    assert_eq!(run(&["expand", "--order", "5"]).status.code(), Some(2));
    assert_eq!(run(&["expand", "--eps", "0.1,0.2"]).status.code(), Some(2));
}

#[test]
fn outputs_are_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    for args in [
        vec!["coeffs", "--m-max", "6", "--format", "json"],
        vec!["correlator", "T[2,1]@a T[3,1]@b T[2,2]@c"],
        vec!["curve", "--k", "5", "--b", "1.4", "--format", "csv"],
        vec!["check", "algebra", "--format", "json"],
    ] {
        let mut bodies = Vec::new();
        for i in 0..2 {
            let p = dir.path().join(format!("out{i}"));
            let mut full = args.clone();
            full.extend(["--out", p.to_str().unwrap()]);
            assert!(run(&full).status.success(), "{args:?}");
            bodies.push(std::fs::read(&p).unwrap());
        }
        assert_eq!(bodies[0], bodies[1], "{args:?}");
    }
}

#[test]
fn help_states_defaults() {
    let help = stdout(&run(&["--help"]));
    for needle in ["n_samples=4096", "n_theta=256", "2^-3..2^-10", "HYPOTROCHOID_OUT_DIR"] {
        assert!(help.contains(needle), "{needle}");
    }
}
