use std::process::{Command, Output};

use serde_json::Value;

fn isoindex(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_isoindex")).args(args).env_remove("ISOINDEX_BUDGET").output().unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn map_file(name: &str, body: &str) -> String {
    let dir = std::env::temp_dir().join(format!("isoindex-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, body).unwrap();
    path.to_string_lossy().into_owned()
}

const PLANE: &str = r#"{"dim_l":2,"dim_v":1,"gram":[[[0,1],[-1,0]]],"ring":"Q"}"#;

#[test]
fn eval_json_has_fixed_keys() {
    let o = isoindex(&["eval", "--ring", "GF(2)", "--json", "--brute-check", "RP3"]);
    assert_eq!(code(&o), 0);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
    assert_eq!(keys, ["b1", "bounds", "corank", "h", "h_interval", "oracle", "rank_set", "verdict"]);
    assert_eq!(v["verdict"], "AGREE");
    assert_eq!(v["h"], 0);
    assert_eq!(v["bounds"]["exception"], true);
}

#[test]
fn json_output_is_byte_stable() {
    let args = ["eval", "--ring", "GF(3)", "--json", "--brute-check", "Sg(2) x S(1)"];
    let first = isoindex(&args);
    assert_eq!(code(&first), 0);
    assert_eq!(first.stdout, isoindex(&args).stdout);
    let v: Value = serde_json::from_str(&stdout(&first)).unwrap();
    assert_eq!(v["rank_set"], serde_json::json!([1, 2]));

    let path = map_file("plane.json", PLANE);
    let a = isoindex(&["map", "--json", &path]);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, isoindex(&["map", "--json", &path]).stdout);
}

#[test]
fn integer_eval_text() {
    let o = isoindex(&["eval", "--ring", "Z", "Sg(2) x S(1)"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("{1,2}"), "{}", stdout(&o));
}

#[test]
fn usage_errors_exit_2() {
    let o = isoindex(&["eval", "S(2) # S(1)"]);
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("conn-sum dimension mismatch (2 vs 1)"), "{}", stderr(&o));
    assert_eq!(code(&isoindex(&["eval", "--ring", "GF2", "S(1)"])), 2);
    assert_eq!(code(&isoindex(&["frobnicate"])), 2);
    assert_eq!(code(&isoindex(&["realize", "3", "2"])), 2);
}

#[test]
fn schema_errors_exit_3() {
    let skew = map_file("skew.json", r#"{"dim_l":2,"dim_v":1,"gram":[[[0,1],[1,0]]],"ring":"GF(3)"}"#);
    let o = isoindex(&["map", &skew]);
    assert_eq!(code(&o), 3);
    assert!(stderr(&o).contains("gram[0][1][0]"), "{}", stderr(&o));
    let extra = map_file("extra.json", r#"{"dim_l":0,"dim_v":0,"gram":[],"ring":"Q","colour":1}"#);
    assert_eq!(code(&isoindex(&["map", &extra])), 3);
    assert_eq!(code(&isoindex(&["map", "/nonexistent/map.json"])), 3);
}

#[test]
fn budget_exit_4_and_env_var() {
    let path = map_file("plane-budget.json", PLANE);
    let o = isoindex(&["map", "--ring", "GF(3)", "--brute-check", "--budget", "5", &path]);
    assert_eq!(code(&o), 4);
    let via_env = Command::new(env!("CARGO_BIN_EXE_isoindex"))
        .args(["map", "--ring", "GF(3)", "--brute-check", &path])
        .env("ISOINDEX_BUDGET", "5")
        .output()
        .unwrap();
    assert_eq!(code(&via_env), 4);
    assert_eq!(stderr(&o), stderr(&via_env));
}

#[test]
fn realize_outputs() {
    let o = isoindex(&["realize", "0", "0"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o).lines().next(), Some("S(3)"));
    let o = isoindex(&["realize", "--dim3-mod2", "0", "2"]);
    assert_eq!(code(&o), 0);
    let o = isoindex(&["realize", "2", "5"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("h=2 b1=5"), "{}", stdout(&o));
}

#[test]
fn selftest_is_deterministic() {
    let a = isoindex(&["selftest"]);
    assert_eq!(code(&a), 0, "{}", stdout(&a));
    assert_eq!(a.stdout, isoindex(&["selftest"]).stdout);
    assert_eq!(code(&isoindex(&["selftest", "--budget", "10"])), 4);
}
