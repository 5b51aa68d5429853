use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name).display().to_string()
}

fn llt_schur(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_llt-schur"))
        .args(args)
        .env_remove("LLT_SCHUR_GUARD_CLASS")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("json output")
}

#[test]
fn normal_form_of_a_swapped_pair() {
    let o = llt_schur(&["nf", "--word", "2,1", "--k", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["rep"], serde_json::json!([1, 2]));
    assert_eq!(v["power"], 1);
    let zero = llt_schur(&["nf", "--word", "11"]);
    assert_eq!(json(&zero)["zero"], true);
}

#[test]
fn worked_qlr_coefficient() {
    let tuple = data("worked_tuple.json");
    let o = llt_schur(&["--format", "text", "llt", "qlr", "--tuple", &tuple, "--lambda", "4,3,1", "--oracle"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "q^4 + 2*q^5");
    let j = json(&llt_schur(&["llt", "qlr", "--tuple", &tuple, "--lambda", "4,3,1"]));
    assert_eq!(j["4,3,1"], serde_json::json!([[4, 1, 1], [5, 2, 1]]));
}

#[test]
fn tuple_action_and_class() {
    let o = llt_schur(&["--format", "text", "act", "--word", "8341275", "--delta", "1;1,1;2,1"]);
    assert_eq!(stdout(&o).trim(), "(2) (3,2) (3,3)");
    let o = llt_schur(&["act", "--word", "2"]);
    assert_eq!(json(&o)["mu"], serde_json::json!([3]));
    let class = json(&llt_schur(&["class", "--word", "8341275"]));
    assert!(class["words"].as_array().unwrap().contains(&serde_json::json!([8, 3, 4, 1, 2, 7, 5])));
}

#[test]
fn class_guard_aborts_with_status_three() {
    let o = Command::new(env!("CARGO_BIN_EXE_llt-schur"))
        .args(["class", "--word", "8341275"])
        .env("LLT_SCHUR_GUARD_CLASS", "3")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(3));
    assert!(o.stdout.is_empty());
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(llt_schur(&["nf", "--wrd", "1"]).status.code(), Some(2));
    assert_eq!(llt_schur(&["nf", "--word", "1,x"]).status.code(), Some(2));
    assert_eq!(llt_schur(&["--algebra", "rot-le", "nf", "--word", "21"]).status.code(), Some(2));
    assert_eq!(llt_schur(&["--k", "0", "nf", "--word", "21"]).status.code(), Some(2));
    assert_eq!(llt_schur(&["conjecture", "--a", "1", "--m", "2", "--x", "2"]).status.code(), Some(2));
}

#[test]
fn flagged_schur_two_columns() {
    let o = llt_schur(&["ncsf", "j", "--alpha", "3,3", "--flags", "6,6", "--reduce"]);
    assert_eq!(json(&o)["terms"].as_object().unwrap().len(), 5);
    let o = llt_schur(&["ncsf", "verify-main", "--lambda", "2,2,2", "--flags", "6,6"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["status"], "verified");
    assert_eq!(v["lhs_terms"], v["rhs_terms"]);
    assert!(v["diff"].as_object().unwrap().is_empty());
}

#[test]
fn small_sweeps_verify() {
    let o = llt_schur(&["--jobs", "1", "ncsf", "verify-main", "--max-size", "3", "--max-flag", "4"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(json(&o)["checked"].as_u64().unwrap() > 0);
    let o = llt_schur(&["ncsf", "verify-lemma", "--alpha", "1,1", "--flags", "2,2", "--j", "1", "--x", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let o = llt_schur(&["conjecture", "--a", "1", "--m", "1", "--x", "2", "--ys", "5", "--ns", "1"]);
    assert_eq!(json(&o)["status"], "verified");
}

#[test]
fn tableau_reading_and_arrows() {
    let t = data("intro_tableau.json");
    let o = llt_schur(&["rsst", "sqread", "--tableau", &t]);
    assert_eq!(json(&o)["sqread"], serde_json::json!([8, 3, 4, 1, 5, 2, 4, 7, 6]));
    let o = llt_schur(&["rsst", "arrows", "--tableau", &t]);
    assert_eq!(json(&o)["arrows"].as_array().unwrap().len(), 3);
    let o = llt_schur(&["rsst", "enumerate", "--rows", "2,1", "--flags", "2,3"]);
    assert_eq!(json(&o)["count"], 2);
}

#[test]
fn golden_suite_passes() {
    let o = llt_schur(&["golden"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(json(&o)["checks"].as_array().unwrap().len() >= 30);
}

#[test]
fn output_is_byte_stable() {
    let tuple = data("worked_tuple.json");
    let args = ["llt", "poly", "--tuple", tuple.as_str(), "--vars", "3"];
    assert_eq!(llt_schur(&args).stdout, llt_schur(&args).stdout);
}
