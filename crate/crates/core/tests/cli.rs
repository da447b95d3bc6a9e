use std::path::PathBuf;
use std::process::{Command, Output};

use multest::cli::scenario::ScenarioFile;
use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_multest"))
}

fn scenario(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("scenarios").join(name)
}

fn run(args: &[&str]) -> (i32, Value, String) {
    let Output { status, stdout, stderr } = bin().args(args).output().unwrap();
    let v = serde_json::from_slice(&stdout).unwrap_or(Value::Null);
    (status.code().unwrap(), v, String::from_utf8_lossy(&stderr).into_owned())
}

#[test]
fn ord_reports_value() {
    let (code, v, _) = run(&["ord", "--model", "gm", "--point", "1", "--poly", "(x1-x0)^3", "--tmax", "5"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["value"], 3);
    let (code, v, _) = run(&["ord", "--model", "gm", "--poly", "x0"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["value"], 0);
}

#[test]
fn ord_exit_codes() {
    let (code, v, err) = run(&["ord", "--model", "borel2", "--sub", "unipotent", "--poly", "x3-x0"]);
    assert_eq!(code, 2);
    assert!(v.is_null());
    assert!(err.contains("P ∈ I(Ḡ)"));
    let (code, _, _) = run(&["ord", "--model", "gm", "--poly", "x1-*"]);
    assert_eq!(code, 1);
    let (code, _, _) = run(&["ord", "--model", "gm", "--poly", "x1", "--point", "1,2"]);
    assert_eq!(code, 1);
}

#[test]
fn verify_builtin_suites() {
    for m in ["gm", "borel2"] {
        let (code, v, _) = run(&["verify", "--builtin-suite", m]);
        assert_eq!(code, 0, "{m}");
        assert_eq!(v["passed"], true);
        assert!(v["identities"].as_array().unwrap().iter().any(|o| o["identity"] == "right-partial-composition"));
    }
}

#[test]
fn verify_rejects_corrupted_model() {
    let path = scenario("bad_model.toml");
    let (code, v, err) = run(&["verify", "--scenario", path.to_str().unwrap()]);
    assert_eq!(code, 3);
    assert!(v.is_null());
    assert!(err.contains("(b)"), "{err}");
}

#[test]
fn verify_custom_instances() {
    let path = scenario("custom_gm.toml");
    let (code, v, _) = run(&["verify", "--scenario", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(v["model"], "gm-custom");
}

#[test]
fn search_flagship_and_borel() {
    let (code, v, _) = run(&["search", "--scenario", scenario("flagship_gm.toml").to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(v["report"]["bound_lhs"], "4");
    assert_eq!(v["report"]["bound_rhs"], "4");
    assert_eq!(v["verified"], true);
    let (code, v, _) = run(&["search", "--scenario", scenario("borel_theorem4.toml").to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(v["report"]["subgroup"]["matches"], "unipotent");
    assert_eq!(v["report"]["conclusions"]["normal"], true);
}

#[test]
fn search_reports_failed_bound() {
    let (code, v, _) = run(&["search", "--scenario", scenario("borel_theorem1.toml").to_str().unwrap()]);
    assert_eq!(code, 3);
    assert_eq!(v["verified"], false);
}

#[test]
fn search_hypothesis_failure() {
    let dir = std::env::temp_dir().join(format!("multest-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("low.toml");
    std::fs::write(&path, "version = 1\nmodel = \"gm\"\npoly = \"x0\"\nsigma1 = [[1]]\ns = 1\nt = 0\nd = 1\ntheorem = 2\n").unwrap();
    let (code, _, err) = run(&["search", "--scenario", path.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(err.contains("hypothesis"), "{err}");
}

#[test]
fn budget_exhaustion_exits_4() {
    let (code, _, err) = run(&["--budget-gb", "1", "search", "--scenario", scenario("borel_theorem4.toml").to_str().unwrap()]);
    assert_eq!(code, 4, "{err}");
}

#[test]
fn reports_are_byte_identical() {
    let path = scenario("borel_theorem4.toml");
    let a = bin().args(["search", "--scenario", path.to_str().unwrap()]).output().unwrap().stdout;
    let b = bin().args(["search", "--scenario", path.to_str().unwrap(), "--seed", "11"]).output().unwrap().stdout;
    assert_eq!(a, b);
}

#[test]
fn out_flag_writes_file() {
    let path = std::env::temp_dir().join(format!("multest-out-{}.json", std::process::id()));
    let (code, _, _) = run(&["constants", "--model", "gm", "--out", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["result"]["c1"], "1");
    let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);
}

#[test]
fn bezout_double_point() {
    let (code, v, _) = run(&["bezout", "--model", "gm", "--poly", "(x1-x0)^2"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["lhs"], "2");
    assert_eq!(v["result"]["rhs"], "2");
}

#[test]
fn scenario_format_is_strict() {
    assert!(ScenarioFile::parse("version = 1\nmodel = \"gm\"\nbogus = 3\n").is_err());
    assert!(ScenarioFile::parse("version = 2\nmodel = \"gm\"\n").is_err());
    let f = ScenarioFile::parse("version = 1\nmodel = \"gm\"\nsigma1 = [[\"1/2\"], [3]]\n").unwrap();
    let m = f.model().unwrap();
    assert_eq!(f.sigma1.len(), 2);
    assert!(multest::cli::scenario::point(&m, &f.sigma1[0]).is_ok());
}
