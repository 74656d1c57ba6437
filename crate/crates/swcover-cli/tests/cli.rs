//! End-to-end tests of the command line interface.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> &'static str {
    env!("CARGO_BIN_EXE_swcover")
}

fn run(args: &[&str]) -> Output {
    Command::new(bin()).args(args).output().expect("spawn swcover")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "command {args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn examples_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("examples")
}

fn write_temp(name: &str, contents: &str) -> PathBuf {
    let path = std::env::temp_dir().join(format!("swcover-test-{}-{name}", std::process::id()));
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn lens_delta_batch_rows() {
    assert_eq!(stdout(&["invariant", "lens-delta", "2", "1"]), "0: 1/8\n1: -1/8\n");
}

#[test]
fn prism_rows_show_deltas() {
    let out = stdout(&["invariant", "prism", "3"]);
    assert!(out.contains("(u=0,v=0): 5/8"));
    assert!(out.contains("(u=1,v=0): 1/8"));
    assert!(out.contains("(u=0,v=1): 0"));
}

#[test]
fn dedekind_value() {
    assert_eq!(stdout(&["invariant", "dedekind", "1", "3"]), "1/18\n");
}

#[test]
fn alpha_beta_values() {
    assert_eq!(stdout(&["invariant", "alpha", "0", "5"]), "2\n");
    assert_eq!(stdout(&["invariant", "beta", "0", "3"]), "1/3\n");
}

#[test]
fn printed_rationals_reparse() {
    use swcover::exactmath::rational::Rational;
    for (args, expect) in [
        (
            vec!["invariant", "dedekind", "7", "30"],
            swcover::exactmath::dedekind_sum(7, 30).unwrap(),
        ),
        (
            vec!["invariant", "lens-delta", "7", "2", "3"],
            swcover::spherical::lens_delta(7, 2, 3).unwrap(),
        ),
        (
            vec!["invariant", "rho-lens", "9", "3"],
            swcover::spherical::rho_lens_cover(9, 3).unwrap(),
        ),
    ] {
        let text = stdout(&args);
        let parsed: Rational = text.trim().parse().unwrap();
        assert_eq!(parsed, expect, "round trip through {args:?}");
    }
}

#[test]
fn mu_command_reduces_mod_p() {
    let out = stdout(&["mu", "--prime", "2", "--top", "2", "--parts", "1,3", "--j", "0"]);
    assert_eq!(out, "mu_0(2; 1,3) = 1 (mod 2)\n");
    // Half-integral top: the coefficient vanishes by the extension rule.
    let out = stdout(&["mu", "--prime", "3", "--top", "-3/2", "--parts", "0,1,2", "--j", "1"]);
    assert!(out.contains("= 0 (mod 3)"));
}

#[test]
fn plumbing_search_finds_borderline_vector() {
    let out = stdout(&[
        "plumbing", "search", "--weights", "-2", "--target", "-1/8", "--bound", "2",
    ]);
    assert!(out.contains("(2)"), "{out}");
    assert!(out.contains("(-2)"), "{out}");
}

#[test]
fn cover_report_contradiction_for_non_integral_family() {
    // A single (-4)-sphere with c = 4 at p = 2: d(cover) = 1 and the family
    // index is fractional, which the report flags as a contradiction.
    let path = write_temp(
        "cover-n4.json",
        r#"{
  "schema": 1,
  "manifold": {
    "b_plus": "3", "sigma": "-16", "simple_type": true, "h1_coprime": ["2"],
    "basic_classes": [ { "pairings": ["4"], "sw_mod_p": "1", "sw_family": ["1", "0"] } ]
  },
  "surfaces": { "kind": "spheres", "entries": [ { "self_intersection": "-4", "class_mod_p": ["0"] } ] },
  "cover": { "p": "2", "weights": ["1"] }
}"#,
    );
    let out = run(&["cover", "--scenario", path.to_str().unwrap()]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("d(cover) = 1"), "{text}");
    assert!(text.contains("CONTRADICTION"), "{text}");
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn cover_report_unbranched_case() {
    let path = write_temp(
        "cover-empty.json",
        r#"{
  "schema": 1,
  "manifold": {
    "b_plus": "3", "sigma": "-16", "simple_type": true, "h1_coprime": ["2"],
    "basic_classes": []
  },
  "surfaces": { "kind": "spheres", "entries": [] },
  "cover": { "p": "2" }
}"#,
    );
    let out = run(&["cover", "--scenario", path.to_str().unwrap()]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("rho = 0"), "{text}");
    assert!(text.contains("sigma(cover_0) = -32"), "{text}");
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn cover_report_non_simple_type_block() {
    let scenario = examples_dir().join("thm_p2_cover.json");
    let out = stdout(&["cover", "--scenario", scenario.to_str().unwrap()]);
    assert!(out.contains("NON-SIMPLE-TYPE CONSTRUCTION"), "{out}");
    assert!(out.contains("SW(cover) = 1 (mod 2)"), "{out}");
}

#[test]
fn check_exit_codes() {
    let obstructed = examples_dir().join("thm_rp2_single.json");
    let out = run(&["check", "--scenario", obstructed.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let consistent = examples_dir().join("thm_rp2_e6.json");
    let out = run(&["check", "--scenario", consistent.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn check_rp2_witness_text() {
    let scenario = examples_dir().join("thm_rp2_single.json");
    let out = run(&["check", "--scenario", scenario.to_str().unwrap()]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("rp2-euler-bound: OBSTRUCTED"), "{text}");
    assert!(text.contains("10 <= 6 is FALSE"), "{text}");
}

#[test]
fn json_out_is_machine_readable() {
    let scenario = examples_dir().join("thm_sphere_single.json");
    let out = run(&["check", "--scenario", scenario.to_str().unwrap(), "--json-out"]);
    let parsed: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let checks = parsed.as_array().unwrap();
    assert_eq!(checks.len(), 9);
    let partition = checks
        .iter()
        .find(|c| c["check"] == "cover-partition")
        .unwrap();
    assert_eq!(partition["status"], "obstructed");
    assert_eq!(partition["witness"]["holds"], false);
}

#[test]
fn malformed_scenario_reports_key_path() {
    let path = write_temp(
        "bad-key.json",
        r#"{
  "schema": 1,
  "manifold": { "b_plus": "3", "sigma": "0", "simple_type": true, "b_minus": "7" },
  "surfaces": { "kind": "rp2", "entries": [] }
}"#,
    );
    let out = run(&["check", "--scenario", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("b_minus"), "{err}");
}

#[test]
fn bare_numbers_are_rejected() {
    let path = write_temp(
        "bare-number.json",
        r#"{
  "schema": 1,
  "manifold": { "b_plus": 3, "sigma": "0", "simple_type": true },
  "surfaces": { "kind": "rp2", "entries": [] }
}"#,
    );
    let out = run(&["check", "--scenario", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("decimal string"), "{err}");
    assert!(err.contains("b_plus"), "{err}");
}

#[test]
fn wrong_schema_version_rejected() {
    let path = write_temp(
        "bad-schema.json",
        r#"{
  "schema": 2,
  "manifold": { "b_plus": "3", "sigma": "0", "simple_type": true },
  "surfaces": { "kind": "rp2", "entries": [] }
}"#,
    );
    let out = run(&["check", "--scenario", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn empty_scenario_exits_zero() {
    let path = write_temp(
        "empty.json",
        r#"{
  "schema": 1,
  "manifold": { "b_plus": "3", "sigma": "0", "simple_type": true },
  "surfaces": { "kind": "spheres", "entries": [] }
}"#,
    );
    let out = run(&["check", "--scenario", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(!text.contains("OBSTRUCTED"), "{text}");
}

#[test]
fn negative_positional_arguments() {
    assert_eq!(stdout(&["invariant", "rho-prism", "-6"]), "3\n");
    let out = stdout(&["invariant", "prism", "-3"]);
    assert!(out.contains("(u=0,v=0): -5/8"), "{out}");
    assert_eq!(stdout(&["invariant", "dedekind", "-1", "3"]), "-1/18\n");
}
