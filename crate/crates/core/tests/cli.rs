use std::io::Write;
use std::process::{Command, Output, Stdio};

fn lgforge(args: &[&str]) -> Output {
    lgforge_with(args, None, &[])
}

fn lgforge_with(args: &[&str], stdin: Option<&str>, env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_lgforge"));
    cmd.args(args)
        .current_dir(env!("CARGO_MANIFEST_DIR"))
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped());
    for (k, v) in env {
        cmd.env(k, v);
    }
    let mut child = cmd.spawn().expect("binary runs");
    let mut pipe = child.stdin.take().unwrap();
    if let Some(text) = stdin {
        pipe.write_all(text.as_bytes()).unwrap();
    }
    drop(pipe);
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn period_json_matches_known_coefficients() {
    let o = lgforge(&[
        "period",
        "--expr",
        "x+y+1/(x*y)",
        "--vars",
        "x,y",
        "-K",
        "9",
        "--format",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let v = json(&o);
    assert_eq!(
        v["result"]["coeffs"],
        serde_json::json!([1, 0, 0, 6, 0, 0, 90, 0, 0, 1680])
    );
    assert_eq!(v["provenance"]["seed"], 0);
    assert_eq!(v["provenance"]["input_sha256"].as_str().unwrap().len(), 64);
}

#[test]
fn text_mode_renders_a_table_and_provenance() {
    let o = lgforge(&["period", "--expr", "x+1/x", "--vars", "x", "-K", "4"]);
    let out = stdout(&o);
    assert!(out.contains("k  c_k"), "{out}");
    assert!(
        out.lines()
            .any(|l| l.split_whitespace().collect::<Vec<_>>() == ["4", "6"]),
        "{out}"
    );
    assert!(out.contains("-- lgforge"), "{out}");
}

#[test]
fn non_laurent_input_exits_with_one() {
    let o = lgforge(&["eval", "--expr", "(x+1)/(y+1)", "--vars", "x,y"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("not a Laurent polynomial"));
}

#[test]
fn usage_errors_exit_with_two() {
    for args in [
        vec!["eval", "--expr", "x +", "--vars", "x"],
        vec!["eval", "--expr", "z", "--vars", "x"],
        vec!["period", "--vars", "x"],
        vec!["frobnicate"],
        vec!["period", "--expr", "x", "--vars", "x", "-K", "many"],
        vec!["cover", "--spec", "does/not/exist.json"],
        vec!["quotient", "--expr", "x^2", "--vars", "x", "--weights", "1", "-r", "0"],
        vec!["tangency", "--expr", "x", "--vars", "x", "-r", "2", "--boundary", "1"],
    ] {
        let o = lgforge(&args);
        assert_eq!(o.status.code(), Some(2), "{args:?}: {}", stderr(&o));
        assert!(!stderr(&o).is_empty());
    }
}

#[test]
fn help_exits_with_zero() {
    let o = lgforge(&["--help"]);
    assert_eq!(o.status.code(), Some(0));
    for sub in [
        "period",
        "cover",
        "quotient",
        "crit",
        "mutate",
        "tangency",
        "compare",
        "check-weak-lg",
        "ledger",
    ] {
        assert!(stdout(&o).contains(sub), "{sub} missing from help");
    }
}

#[test]
fn expression_from_stdin() {
    let o = lgforge_with(
        &["period", "--expr", "-", "--vars", "x", "-K", "4", "--format", "json"],
        Some("x + 1/x\n"),
        &[],
    );
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert_eq!(json(&o)["result"]["coeffs"], serde_json::json!([1, 0, 2, 0, 6]));
    let inline = lgforge(&[
        "period", "--expr", "x + 1/x", "--vars", "x", "-K", "4", "--format", "json",
    ]);
    assert_eq!(json(&o)["provenance"], json(&inline)["provenance"]);
}

#[test]
fn spec_file_wins_with_a_warning() {
    let o = lgforge(&[
        "period",
        "--spec",
        "examples/data/plane.json",
        "--expr",
        "x",
        "--vars",
        "x",
        "-K",
        "3",
        "--format",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stderr(&o).contains("warning"), "{}", stderr(&o));
    assert_eq!(json(&o)["result"]["coeffs"], serde_json::json!([1, 0, 0, 6]));
}

#[test]
fn same_seed_gives_identical_bytes() {
    let args = [
        "crit",
        "--spec",
        "examples/data/hypersurface_2_2.json",
        "--seed",
        "7",
        "--starts",
        "60",
        "--format",
        "json",
    ];
    let a = lgforge(&args);
    let b = lgforge_with(&args, None, &[("LGFORGE_THREADS", "1")]);
    let c = lgforge_with(&args, None, &[("LGFORGE_THREADS", "3")]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.stdout, c.stdout);
}

#[test]
fn crit_finds_the_quadric_values() {
    let o = lgforge(&[
        "crit",
        "--expr",
        "x + (1+y)^2/(x*y)",
        "--vars",
        "x,y",
        "--seed",
        "7",
        "--format",
        "json",
    ]);
    let v = json(&o);
    let values: Vec<f64> = v["result"]["values"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| x["value"][0].as_f64().unwrap())
        .collect();
    assert_eq!(values.len(), 2);
    assert!(
        (values[0] + 4.0).abs() < 1e-9 && (values[1] - 4.0).abs() < 1e-9,
        "{values:?}"
    );
    assert!(v["result"]["report"]["points"]
        .as_array()
        .unwrap()
        .iter()
        .all(|p| p["nondegenerate"] == true && p["residual"].as_f64().unwrap() < 1e-9));
}

#[test]
fn output_file_option() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let o = lgforge(&[
        "cover",
        "--spec",
        "examples/data/delpezzo_stage1.json",
        "--format",
        "json",
        "-o",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["result"]["quotient"]["expr"], "x + x^-1*y + 2*x^-1 + x^-1*y^-1");
}

#[test]
fn weak_lg_failure_is_reported_not_an_error() {
    let o = lgforge(&[
        "check-weak-lg",
        "--spec",
        "examples/data/quadric.json",
        "--reference",
        "examples/data/plane_periods.csv",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("FAIL: first mismatch at k = 2"), "{out}");
}

#[test]
fn mutate_with_inline_images() {
    let o = lgforge(&[
        "mutate",
        "--spec",
        "examples/data/quadric.json",
        "--images",
        "x/(1+y); x*y/(1+y)",
        "--format",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert_eq!(json(&o)["result"]["image"]["expr"], "x + x^-1*y + 2*x^-1 + x^-1*y^-1");
}

#[test]
fn quotient_rejects_a_wrong_basis() {
    let o = lgforge(&[
        "quotient",
        "--spec",
        "examples/data/hirzebruch_upstairs.json",
        "--weights",
        "1,1",
        "-r",
        "2",
        "--basis=1,0;0,1",
    ]);
    assert_eq!(o.status.code(), Some(1));
}
