mod common;
use common::w;
use proptest::prelude::*;
use serde_json::Value;
use std::path::PathBuf;
use std::process::Command;
use superbgg::cli::{parse_weight, run, weight_json};
use superbgg::error::Error;
use superbgg::scalar::{fmt_q, qf, Q};

fn out_path(tag: &str) -> PathBuf {
    std::env::temp_dir().join(format!("superbgg-{}-{tag}.json", std::process::id()))
}

/// Runs the CLI with `--out` and returns the exit code and parsed report.
fn run_json(tag: &str, args: &[&str]) -> (i32, Value) {
    let path = out_path(tag);
    let mut full = vec!["superbgg"];
    full.extend_from_slice(args);
    let p = path.to_string_lossy().to_string();
    full.extend_from_slice(&["--out", &p]);
    let code = run(full);
    let text = std::fs::read_to_string(&path).unwrap();
    let _ = std::fs::remove_file(&path);
    (code, serde_json::from_str(&text).unwrap())
}

fn strip_time(mut v: Value) -> Value {
    v.as_object_mut().unwrap().remove("wall_time_ms");
    v
}

#[test]
fn weight_strings() {
    assert_eq!(parse_weight("1,0|0", 2, 1).unwrap(), w(&[1, 0, 0]));
    assert_eq!(parse_weight("1,0|0,0,0", 2, 3).unwrap(), w(&[1, 0, 0, 0, 0]));
    assert_eq!(parse_weight(" -1/2 , 3|2", 2, 1).unwrap(), vec![qf(-1, 2), qf(3, 1), qf(2, 1)]);
    assert_eq!(parse_weight("|1", 0, 1).unwrap(), w(&[1]));
    assert_eq!(parse_weight("1", 0, 1).unwrap(), w(&[1]));
    assert!(matches!(parse_weight("1,0", 2, 1), Err(Error::LengthMismatch { .. })));
    assert!(matches!(parse_weight("1|0,0", 2, 1), Err(Error::LengthMismatch { .. })));
    assert_eq!(parse_weight("1,x|0", 2, 1).unwrap_err(), Error::ParseError { pos: 2, msg: "not a rational number: \"x\"".into() });
    assert!(matches!(parse_weight("1,0|1/0", 2, 1), Err(Error::ParseError { pos: 4, .. })));
}

#[test]
fn algebra_info_and_degenerate_form() {
    let (code, v) = run_json("info", &["alg", "info", "--alg", "osp", "--m", "4", "--n", "3"]);
    assert_eq!(code, 0);
    assert_eq!(v["schema"], "superbgg/1");
    assert_eq!(v["dimension"]["even"], 27);
    assert_eq!(v["dimension"]["odd"], 24);
    let (code, v) = run_json("gl22", &["rep", "build", "--alg", "gl", "--m", "2", "--n", "2", "--weight", "1,0|0,0"]);
    assert_eq!(code, 2);
    assert_eq!(v["error"]["kind"], "DegenerateForm");
}

#[test]
fn representation_report() {
    let (code, v) = run_json("rep", &["rep", "build", "--alg", "gl", "--m", "2", "--n", "1", "--weight", "1,0|0"]);
    assert_eq!(code, 0);
    assert_eq!(v["dimension"]["even"], 2);
    assert_eq!(v["dimension"]["odd"], 1);
    assert_eq!(v["star"], true);
    assert_eq!(v["input"]["weight"], serde_json::json!(["1", "0", "0"]));
}

#[test]
fn homology_report_is_deterministic() {
    let args = ["homology", "--alg", "osp", "--m", "1", "--n", "1", "--weight", "|2", "--kmax", "3"];
    let (c1, a) = run_json("h1", &args);
    let (c2, b) = run_json("h2", &args);
    assert_eq!((c1, c2), (0, 0));
    assert_eq!(strip_time(a.clone()), strip_time(b));
    assert_eq!(a["nilpotency"]["opposite"], true);
    assert_eq!(a["nilpotency"]["nilradical"], true);
    assert!(a["quabla_cross_check"].as_array().unwrap().iter().all(|x| x == true));
    assert_eq!(a["degrees"][1]["homology_weights"][0]["weight"], serde_json::json!(["-3"]));
}

#[test]
fn reproduce_and_input_errors() {
    let (code, v) = run_json("repro", &["reproduce", "osp12-counterexample", "--lambda", "1"]);
    assert_eq!(code, 0);
    assert_eq!(v["pass"], true);
    let (code, v) = run_json("unknown", &["reproduce", "nope"]);
    assert_eq!(code, 2);
    assert_eq!(v["error"]["kind"], "UnknownScenario");
    let (code, _) = run_json("badidx", &["bgg", "check", "--alg", "gl", "--m", "2", "--n", "1", "--weight", "1,0|0", "--levi", "5"]);
    assert_eq!(code, 2);
    assert_eq!(run(["superbgg", "bgg", "check", "--alg", "gl"]), 2);
}

#[test]
fn small_bgg_check() {
    let (code, v) = run_json("gl21", &["bgg", "check", "--alg", "gl", "--m", "2", "--n", "1", "--weight", "1,0|0", "--kmax", "2", "--workers", "2"]);
    assert_eq!(code, 0);
    assert_eq!(v["verdict"]["status"], "Exists");
    assert_eq!(v["verdict"]["basis_of_decision"], "StarCondition");
    assert_eq!(v["shape"]["truncated"], true);
    assert_eq!(v["closed_form_match"], Value::Null);
}

#[test]
fn osp46_bgg_check() {
    let (code, v) = run_json(
        "osp46",
        &["bgg", "check", "--alg", "osp", "--m", "4", "--n", "3", "--parabolic-drop", "0", "--weight", "1,0|0,0,0", "--kmax", "3"],
    );
    assert_eq!(code, 0);
    assert_eq!(v["verdict"]["status"], "Exists");
    assert_eq!(v["closed_form_match"], true);
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_superbgg");
    let st = Command::new(bin).args(["rep", "build", "--alg", "gl", "--m", "2", "--n", "2", "--weight", "1,0|0,0"]).output().unwrap();
    assert_eq!(st.status.code(), Some(2));
    let st = Command::new(bin).args(["alg", "info", "--alg", "gl", "--m", "2", "--n", "1"]).env("SUPERBGG_WORKERS", "1").output().unwrap();
    assert_eq!(st.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&st.stdout).unwrap();
    assert_eq!(v["schema"], "superbgg/1");
    let st = Command::new(bin).args(["alg", "info", "--alg", "gl", "--m", "2", "--n", "1"]).env("SUPERBGG_WORKERS", "0").output().unwrap();
    assert_eq!(st.status.code(), Some(2));
}

fn rational() -> impl Strategy<Value = Q> {
    (-50i64..50, 1i64..12).prop_map(|(a, b)| qf(a, b))
}

proptest! {
    #[test]
    fn weight_text_round_trips(left in prop::collection::vec(rational(), 0..4), right in prop::collection::vec(rational(), 0..4)) {
        let text = |v: &[Q]| v.iter().map(fmt_q).collect::<Vec<_>>().join(",");
        let s = format!("{}|{}", text(&left), text(&right));
        let parsed = parse_weight(&s, left.len(), right.len()).unwrap();
        let mut all = left.clone();
        all.extend(right.clone());
        prop_assert_eq!(&parsed, &all);
        let json = weight_json(&parsed);
        let back: Vec<Q> = json.as_array().unwrap().iter().map(|x| superbgg::scalar::parse_q(x.as_str().unwrap()).unwrap()).collect();
        prop_assert_eq!(back, all);
    }
}
