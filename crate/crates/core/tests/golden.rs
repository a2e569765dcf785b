//! Replays `examples/golden/cases.json` and compares the JSON reports with
//! the checked-in outputs. Set `LGFORGE_BLESS=1` to rewrite them.
//!
//! Floats are compared to a relative tolerance of 1e-9; everything else
//! must match exactly.

use std::path::{Path, PathBuf};

use serde::Deserialize;
use serde_json::Value;

#[derive(Deserialize)]
struct Case {
    name: String,
    args: Vec<String>,
}

fn root() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

fn run(args: &[String]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let full = std::iter::once("lgforge".to_string())
        .chain(args.iter().cloned())
        .chain(["--format".to_string(), "json".to_string()]);
    let code = lgforge::cli::main_with_args(full, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn close(a: &Value, b: &Value, path: &str, diffs: &mut Vec<String>) {
    match (a, b) {
        (Value::Object(x), Value::Object(y)) => {
            let keys: std::collections::BTreeSet<_> = x.keys().chain(y.keys()).collect();
            for k in keys {
                match (x.get(k), y.get(k)) {
                    (Some(u), Some(v)) => close(u, v, &format!("{path}.{k}"), diffs),
                    _ => diffs.push(format!("{path}.{k}: present on one side only")),
                }
            }
        }
        (Value::Array(x), Value::Array(y)) => {
            if x.len() != y.len() {
                diffs.push(format!("{path}: length {} vs {}", x.len(), y.len()));
                return;
            }
            for (i, (u, v)) in x.iter().zip(y).enumerate() {
                close(u, v, &format!("{path}[{i}]"), diffs);
            }
        }
        (Value::Number(x), Value::Number(y)) if x.is_f64() || y.is_f64() => {
            let (u, v) = (x.as_f64().unwrap(), y.as_f64().unwrap());
            if (u - v).abs() > 1e-9 * u.abs().max(v.abs()).max(1.0) {
                diffs.push(format!("{path}: {u} vs {v}"));
            }
        }
        _ if a == b => {}
        _ => diffs.push(format!("{path}: {a} vs {b}")),
    }
}

#[test]
fn golden_reports() {
    std::env::set_current_dir(root()).unwrap();
    let cases: Vec<Case> =
        serde_json::from_str(&std::fs::read_to_string("examples/golden/cases.json").unwrap()).unwrap();
    let bless = std::env::var_os("LGFORGE_BLESS").is_some();
    let mut failures = Vec::new();
    for case in &cases {
        let (code, out, err) = run(&case.args);
        assert_eq!(code, 0, "{}: exit {code}, stderr {err}", case.name);
        let golden = Path::new("examples/golden").join(format!("{}.json", case.name));
        if bless {
            std::fs::write(&golden, &out).unwrap();
            continue;
        }
        let want: Value = serde_json::from_str(
            &std::fs::read_to_string(&golden).unwrap_or_else(|e| panic!("{}: {e}", golden.display())),
        )
        .unwrap();
        let got: Value = serde_json::from_str(&out).unwrap();
        let mut diffs = Vec::new();
        close(&got, &want, "", &mut diffs);
        if !diffs.is_empty() {
            failures.push(format!("{}:\n  {}", case.name, diffs.join("\n  ")));
        }
    }
    assert!(failures.is_empty(), "golden mismatches:\n{}", failures.join("\n"));
}

#[test]
fn every_data_file_is_exercised() {
    let cases = std::fs::read_to_string(root().join("examples/golden/cases.json")).unwrap();
    for entry in std::fs::read_dir(root().join("examples/data")).unwrap() {
        let name = entry.unwrap().file_name().into_string().unwrap();
        assert!(cases.contains(&name), "{name} is not referenced by any golden case");
    }
}
