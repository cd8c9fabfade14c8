use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn fixture(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "fixtures", name].iter().collect();
    p.display().to_string()
}

fn adica(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_adica"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn json(o: &Output) -> Value {
    serde_json::from_str(stdout(o).trim()).expect("valid JSON on stdout")
}

#[test]
fn apply_fibonacci() {
    let o = adica(&["morphism", "apply", "--file", &fixture("fib.mor"), "--word", "ab"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "aba");
}

#[test]
fn apply_rejects_foreign_letter() {
    let o = adica(&["morphism", "apply", "--file", &fixture("fib.mor"), "--word", "abz"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn info_reports_properness_and_incidence() {
    let o = adica(&["--json", "morphism", "info", "--file", &fixture("fib.mor")]);
    assert!(o.status.success());
    let v = json(&o);
    assert_eq!(v["schema"], 1);
    assert_eq!(v["properness"]["kind"], "left");
    assert_eq!(v["primitive"], true);
    assert_eq!(v["incidence"], serde_json::json!([[1, 1], [1, 0]]));
    assert_eq!(v["left_conjugate"]["a"], "ba");
    assert!(v["right_conjugate"].is_null());
}

#[test]
fn compose_prints_mor_that_parses_back() {
    let fib = fixture("fib.mor");
    let o = adica(&["morphism", "compose", "--outer", &fib, "--inner", &fib]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("a -> aba"));
    assert!(text.contains("b -> ab"));
    let m = adica_core::words::parse_morphism(&text).unwrap();
    assert_eq!(m.apply_str("ab").unwrap().as_str(), "abaab");
}

#[test]
fn conjugate_sides() {
    let zeta = fixture("zeta.mor");
    let left = adica(&["morphism", "conjugate", "--file", &zeta, "--side", "left"]);
    assert!(stdout(&left).contains("a -> aba"));
    let right = adica(&["morphism", "conjugate", "--file", &zeta, "--side", "right"]);
    assert!(stdout(&right).contains("a -> baa"));
    let none = adica(&["morphism", "conjugate", "--file", &fixture("twopoint.mor"), "--side", "right"]);
    assert!(none.status.success(), "ab/ab is right proper too");
}

#[test]
fn products_of_fibonacci_are_proper_and_primitive() {
    let o = adica(&["--json", "morphism", "products", "--file", &fixture("fib.mor")]);
    let v = json(&o);
    assert_eq!(v["proper"], true);
    assert_eq!(v["primitive"], true);
    assert_eq!(v["sigma_tau"]["a"], "aab");
}

#[test]
fn random_conjugacy_check_prints_seed() {
    let o = adica(&["morphism", "check-conjugacy", "--random", "10", "--seed", "7", "--max-len", "5"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("seed: 0x7"));
    let o = adica(&["--json", "morphism", "check-conjugacy", "--random", "10", "--seed", "7", "--max-len", "5"]);
    let v = json(&o);
    assert_eq!(v["seed"], 7);
    assert_eq!(v["failures"].as_array().unwrap().len(), 0);
}

#[test]
fn conjugacy_identity_from_file() {
    let o = adica(&["morphism", "check-conjugacy", "--file", &fixture("fib.mor"), "--max-len", "6"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("holds"));
}

#[test]
fn language_complexity_of_fibonacci_is_sturmian() {
    let o = adica(&["--json", "lang", "--directive", &fixture("fib.dir"), "--max-len", "10"]);
    assert!(o.status.success());
    let v = json(&o);
    let p: Vec<u64> = v["p"].as_array().unwrap().iter().map(|x| x.as_u64().unwrap()).collect();
    assert_eq!(p, (2..=11).collect::<Vec<_>>());
    assert_eq!(v["stabilized"], true);
    assert!(v["witness"].is_null());
}

#[test]
fn language_witness_for_periodic_directive() {
    let o = adica(&["--json", "lang", "--directive", &fixture("twopoint.dir"), "--max-len", "6"]);
    let v = json(&o);
    assert_eq!(v["witness"], 2);
    assert_eq!(v["p"][1], 2);
}

#[test]
fn language_recurrence_gap() {
    let o = adica(&[
        "--json", "lang", "--directive", &fixture("fib.dir"), "--max-len", "3", "--recurrence", "2",
    ]);
    let v = json(&o);
    assert_eq!(v["recurrence"]["holds"], false);
}

#[test]
fn bv_build_dot_to_stdout_matches_golden() {
    let o = adica(&["bv", "build", "--directive", &fixture("odometer.dir"), "--depth", "2", "--dot", "-"]);
    assert!(o.status.success());
    let golden = include_str!("../../core/tests/golden/odometer_depth2.dot");
    assert_eq!(stdout(&o), golden);
}

#[test]
fn bv_build_dot_to_file() {
    let dir = std::env::temp_dir().join(format!("adica-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let out = dir.join("zeta.dot");
    let o = adica(&[
        "bv", "build", "--directive", &fixture("zeta.dir"), "--depth", "2", "--dot", out.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    let golden = include_str!("../../core/tests/golden/zeta_depth2.dot");
    assert_eq!(std::fs::read_to_string(&out).unwrap(), golden);
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn orbit_of_zeta() {
    let o = adica(&["bv", "orbit", "--directive", &fixture("zeta.dir"), "--depth", "3", "--steps", "8"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "aabaabab");
}

#[test]
fn orbit_stops_at_maximal_path_unless_wrapping() {
    let args = ["--json", "bv", "orbit", "--directive", &fixture("odometer.dir"), "--depth", "2", "--steps", "10"];
    let v = json(&adica(&args));
    assert_eq!(v["len"], 4);
    assert_eq!(v["complete"], false);
    let mut wrap = args.to_vec();
    wrap.push("--wrap");
    let v = json(&adica(&wrap));
    assert_eq!(v["len"], 10);
    assert_eq!(v["wraps"], 2);
}

#[test]
fn orbit_without_directive_is_usage_error() {
    let o = adica(&["bv", "orbit", "--depth", "2", "--steps", "3"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn check_extrema() {
    let zeta = adica(&["bv", "check", "--directive", &fixture("zeta.dir"), "--depth", "4"]);
    assert!(zeta.status.success(), "{}", stderr(&zeta));
    let fib = adica(&["bv", "check", "--directive", &fixture("fib.dir"), "--depth", "4", "--extrema"]);
    assert_eq!(fib.status.code(), Some(1));
    assert!(stderr(&fib).contains("NonUniqueExtrema"));
    let simple = adica(&["bv", "check", "--directive", &fixture("fib.dir"), "--depth", "4", "--simple"]);
    assert!(simple.status.success());
}

#[test]
fn build_zeta_report() {
    let o = adica(&["build", "--directive", &fixture("zeta.dir"), "--report", "json"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let v = json(&o);
    assert_eq!(v["schema"], 1);
    assert_eq!(v["depth"], 6);
    assert_eq!(v["rank_bound"], 2);
    assert_eq!(v["injectivity_scale"], 8);
    assert_eq!(v["periodic"], false);
    assert_eq!(v["coding_match_len"], 10);
}

#[test]
fn build_twopoint_is_rejected() {
    let o = adica(&["build", "--directive", &fixture("twopoint.dir")]);
    assert_eq!(o.status.code(), Some(1));
    let err = stderr(&o);
    assert!(err.contains("NotInjective"));
    assert!(err.contains("PeriodicLanguage"));
}

#[test]
fn build_fibonacci_needs_alternating_mode() {
    let strict = adica(&["build", "--directive", &fixture("fib.dir"), "--depth", "4"]);
    assert_eq!(strict.status.code(), Some(1));
    assert!(stderr(&strict).contains("NotProper"));
    let alt = adica(&["--json", "build", "--directive", &fixture("fib.dir"), "--depth", "4", "--mode", "alt"]);
    assert!(alt.status.success(), "{}", stderr(&alt));
    assert_eq!(json(&alt)["mode"], "alt");
}

#[test]
fn build_odometer_is_equicontinuous() {
    let o = adica(&["--json", "build", "--directive", &fixture("odometer.dir"), "--depth", "3"]);
    let v = json(&o);
    assert_eq!(v["rank_bound"], 1);
    assert_eq!(v["periodic"], true);
    assert_eq!(v["verdict"], "equicontinuous evidence");
}

#[test]
fn missing_file_is_usage_error() {
    let o = adica(&["build", "--directive", &fixture("nope.dir")]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("IoError"));
}

#[test]
fn s5_validate_given_marks() {
    let o = adica(&["--json", "s5", "validate", &fixture("s5_block.dir")]);
    assert!(o.status.success(), "{}", stderr(&o));
    let v = json(&o);
    assert_eq!(v["blocks"].as_array().unwrap().len(), 6);
    assert_eq!(v["blocks"][0]["images"], serde_json::json!(["abcabcc", "abcc", "abc"]));
}

#[test]
fn s5_search_marks_finds_blocks() {
    let o = adica(&["--json", "s5", "validate", &fixture("s5_unmarked.dir"), "--search-marks", "8"]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert_eq!(json(&o)["marks"], serde_json::json!([2, 10, 18, 26, 34]));
}

#[test]
fn s5_unmarked_without_search_is_usage_error() {
    let o = adica(&["s5", "validate", &fixture("s5_unmarked.dir")]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("InvalidMarks"));
}

#[test]
fn s5_missing_letter_is_rejected() {
    let o = adica(&["s5", "validate", &fixture("s5_missing.dir")]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("MissingLetter"));
}

#[test]
fn s5_harness_bounded_and_unbounded() {
    let o = adica(&["--json", "s5", "harness", &fixture("s5_unmarked.dir"), "--max-n", "20"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let v = json(&o);
    assert_eq!(v["bounded"], true);
    assert!(v["max_diff"].as_i64().unwrap() <= 2);
    let tm = adica(&["s5", "harness", &fixture("thue_morse.dir"), "--max-n", "20"]);
    assert_eq!(tm.status.code(), Some(1));
    assert!(stderr(&tm).contains("UnboundedDifferences"));
}

#[test]
fn s5_build_rank_three() {
    let o = adica(&["--json", "s5", "build", &fixture("s5_block.dir"), "--depth", "3"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let v = json(&o);
    assert_eq!(v["rank_bound"], 3);
    assert_eq!(v["verdict"], "expansive-subshift evidence");
}
