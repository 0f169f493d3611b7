use serde_json::Value;
use std::io::Write;
use std::process::{Command, Output, Stdio};

fn run(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_sixlines"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn sixlines");
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn report(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("report is JSON")
}

fn value<'a>(r: &'a Value, key: &str) -> &'a Value {
    &r["results"][key]["value"]
}

#[test]
fn invariants_of_the_reference_point() {
    let out = run(&["invariants", "--moduli", "2", "3", "4", "5"], "");
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    assert_eq!(r["schema"], "sixlines-report/1");
    assert_eq!(r["status"], "pass");
    assert_eq!(value(&r, "j"), &serde_json::json!(["63", "-243", "729", "-8748", "-32076"]));
    assert_eq!(value(&r, "t"), &serde_json::json!(["8", "1", "1", "8", "9", "5", "2", "2", "-2", "-2"]));
    assert_eq!(value(&r, "r"), "-12");
    assert_eq!(value(&r, "disc-a"), "170061120");
    assert_eq!(value(&r, "disc-s"), "0");
    assert_eq!(value(&r, "stratum"), "DiscSComponent(2b)");
}

#[test]
fn generic_point_classifies_as_generic() {
    let r = report(&run(&["classify", "--moduli", "3", "7", "11", "13"], ""));
    assert_eq!(value(&r, "stratum"), "Generic(0)");
    assert_eq!(value(&r, "confluence-row"), "Generic");
}

#[test]
fn y_alternate_fibration() {
    let out = run(&["fibration", "--model", "y-alt", "--moduli", "3", "7", "11", "13"], "");
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    let y = value(&r, "y-alt-fibers");
    assert_eq!(y["euler-sum"], 24);
    assert_eq!(y["two-torsion-order"], 2);
    assert_eq!(y["counts"], "I4* + 6I2 + 2I1");
}

#[test]
fn fibration_without_model_lists_every_model() {
    let r = report(&run(&["fibration", "--moduli", "3", "7", "11", "13"], ""));
    for m in ["natural", "natural-dual", "y-alt", "x-std", "x-alt", "x-alt-dual"] {
        assert_eq!(r["results"][format!("{m}-fibers")]["status"], "pass", "{m}");
    }
    let r = report(&run(&["fibration", "--rosenhain", "2", "3", "5"], ""));
    assert!(value(&r, "natural-fibers")["skipped"].is_string());
    assert_eq!(r["status"], "pass");
}

#[test]
fn explicit_model_without_its_input_is_a_precondition_error() {
    let out = run(&["fibration", "--model", "natural", "--rosenhain", "2", "3", "5"], "");
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn tangent_restriction_passes() {
    let out = run(&["tangent", "--rosenhain", "2", "3", "5"], "");
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    assert_eq!(r["results"]["igusa-clebsch-restriction"]["status"], "pass");
    assert_eq!(value(&r, "j")[2], "0");
}

#[test]
fn params_of_the_reference_point_are_quadratic() {
    let r = report(&run(&["params", "--from-config", "--moduli", "2", "3", "4", "5"], ""));
    assert_eq!(value(&r, "radicand"), 5);
    assert_eq!(value(&r, "params")["zeta"], serde_json::json!({ "base": "-6", "coeff": "4", "D": 5 }));
    assert_eq!(r["results"]["parameters-reproduce-j"]["status"], "pass");
}

#[test]
fn quadratic_params_from_flags() {
    let out = run(&["invariants", "--params", "1", "2", "1:1", "-3", "2", "0:1", "--radicand", "5"], "");
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(report(&out)["input"]["params"][2], serde_json::json!({ "base": "1", "coeff": "1", "D": 5 }));
}

#[test]
fn json_request_on_stdin() {
    let out = run(&["invariants"], r#"{"moduli": ["2", 3, "4", 5]}"#);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(value(&report(&out), "j")[0], "63");
}

#[test]
fn json_request_from_file() {
    let path = std::env::temp_dir().join(format!("sixlines-request-{}.json", std::process::id()));
    std::fs::write(&path, r#"{"rosenhain": ["2", "3", "5"]}"#).unwrap();
    let out = run(&["tangent", "--input", path.to_str().unwrap()], "");
    std::fs::remove_file(&path).ok();
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn malformed_input_exits_2() {
    for (args, stdin) in [
        (vec!["invariants"], "{not json"),
        (vec!["invariants"], r#"{"moduli": [1, 2, 3, 4], "colour": 1}"#),
        (vec!["invariants"], r#"{"moduli": [1, 2, 3]}"#),
        (vec!["invariants"], r#"{"moduli": [1, 2, 3, 4], "rosenhain": [2, 3, 5]}"#),
        (vec!["invariants", "--moduli", "1", "2", "x", "4"], ""),
        (vec!["fibration", "--model", "nope", "--moduli", "1", "2", "3", "4"], ""),
    ] {
        let out = run(&args, stdin);
        assert_eq!(out.status.code(), Some(2), "{args:?} {stdin}");
        assert_eq!(report(&out)["status"], "error");
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn degenerate_input_exits_3() {
    for r in [["0", "3", "5"], ["1", "3", "5"], ["2", "2", "5"]] {
        let out = run(&["tangent", "--rosenhain", r[0], r[1], r[2]], "");
        assert_eq!(out.status.code(), Some(3), "{r:?}");
        assert_eq!(report(&out)["error"]["kind"], "precondition");
    }
}

#[test]
fn output_is_deterministic() {
    let args = ["verify-all", "--moduli", "3", "7", "11", "13", "--samples", "5", "--seed", "11"];
    let a = run(&args, "");
    let b = run(&args, "");
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn output_file() {
    let path = std::env::temp_dir().join(format!("sixlines-report-{}.json", std::process::id()));
    let out = run(&["isogeny", "--verify", "--output", path.to_str().unwrap()], "");
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let r: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    std::fs::remove_file(&path).ok();
    assert_eq!(r["command"], "isogeny");
    assert_eq!(r["status"], "pass");
}
