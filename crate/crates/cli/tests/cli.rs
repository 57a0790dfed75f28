//! End-to-end checks of the command-line interface: exit codes, output
//! formats, and flag validation, exercised through the compiled binary.

use std::process::{Command, Output};

fn toroidal(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_toroidal"))
        .args(args)
        .output()
        .expect("the binary runs")
}

fn exit_code(output: &Output) -> i32 {
    output.status.code().expect("the process exits normally")
}

fn stdout_json(output: &Output) -> serde_json::Value {
    serde_json::from_slice(&output.stdout).expect("stdout is valid JSON")
}

#[test]
fn verify_reports_a_passing_triality_run_as_json() {
    let output = toroidal(&["verify", "--family", "d4", "--format", "json"]);
    assert_eq!(exit_code(&output), 0, "a passing verification exits 0");
    let value = stdout_json(&output);
    assert_eq!(value["type"], "d4", "the report names its family token");
    assert_eq!(value["n"], 2, "the triality case fixes n = 2");
    assert_eq!(value["summary"]["fail"], 0, "no case fails");
    assert!(
        value["cases"].as_array().is_some_and(|c| !c.is_empty()),
        "the report lists individual cases"
    );
}

#[test]
fn verify_accepts_a_relation_filter_and_prints_text() {
    let output = toroidal(&["verify", "--family", "a-odd", "--n", "3", "--relations", "1,2,3"]);
    assert_eq!(exit_code(&output), 0, "the filtered run passes");
    let text = String::from_utf8_lossy(&output.stdout);
    assert!(
        text.contains("result: PASS"),
        "text output ends with a verdict, got: {text}"
    );
    assert!(
        text.contains("family=a-odd n=3"),
        "text output names the configuration, got: {text}"
    );
}

#[test]
fn verify_rejects_a_rank_below_the_family_minimum() {
    let output = toroidal(&["verify", "--family", "a-odd", "--n", "2"]);
    assert_eq!(exit_code(&output), 2, "an invalid rank is a usage error");
    let err = String::from_utf8_lossy(&output.stderr);
    assert!(err.contains("rank"), "the error explains the rank bound, got: {err}");
}

#[test]
fn unknown_flags_are_usage_errors() {
    let output = toroidal(&["verify", "--family", "d4", "--bogus"]);
    assert_eq!(exit_code(&output), 2, "clap rejects unknown flags with exit 2");
}

#[test]
fn verify_rejects_relation_numbers_outside_the_catalog() {
    let output = toroidal(&["verify", "--family", "d4", "--relations", "11"]);
    assert_eq!(exit_code(&output), 2, "relation numbers stop at 10");
}

#[test]
fn oracle_matches_the_symbolic_brackets_on_a_small_window() {
    let output = toroidal(&[
        "oracle", "--family", "a-even", "--n", "2", "--modes", "1", "--depth", "1",
        "--relations", "1,6", "--format", "json",
    ]);
    assert_eq!(exit_code(&output), 0, "the mode-level sweep passes");
    let value = stdout_json(&output);
    assert_eq!(value["scheme"], "half", "the default mode scheme is half-integral");
    assert_eq!(value["mode_bound"], 2, "component modes sweep |k|,|l| <= 2");
    assert_eq!(value["summary"]["fail"], 0, "every sampled component matches");
}

#[test]
fn oracle_covers_the_full_default_window() {
    let output = toroidal(&["oracle", "--family", "a-even", "--n", "2", "--modes", "2", "--depth", "2"]);
    assert_eq!(exit_code(&output), 0, "the default-depth sweep passes");
    let text = String::from_utf8_lossy(&output.stdout);
    assert!(text.contains("fail: 0"), "no case fails, got: {text}");
}

#[test]
fn oracle_under_int_without_a_convention_reports_failure() {
    let output = toroidal(&[
        "oracle", "--family", "a-even", "--scheme", "int", "--modes", "1", "--depth", "1",
        "--relations", "6",
    ]);
    assert_eq!(
        exit_code(&output),
        1,
        "an unspecified zero-mode action is a verification failure, not a usage error"
    );
    let text = String::from_utf8_lossy(&output.stdout);
    assert!(
        text.contains("zero-mode"),
        "the failure points at the missing convention, got: {text}"
    );
}

#[test]
fn zero_mode_flag_requires_the_integer_scheme() {
    let output = toroidal(&["oracle", "--family", "a-even", "--zero-mode", "annihilate"]);
    assert_eq!(exit_code(&output), 2, "half-integral modes have no zero mode");
}

#[test]
fn oracle_rejects_relations_beyond_the_bracket_catalog() {
    let output = toroidal(&["oracle", "--family", "d4", "--relations", "7"]);
    assert_eq!(exit_code(&output), 2, "mode-level checks cover relations 1-6 only");
}

#[test]
fn tables_print_the_level_and_the_triality_entry() {
    let output = toroidal(&["tables", "--family", "d4"]);
    assert_eq!(exit_code(&output), 0);
    let text = String::from_utf8_lossy(&output.stdout);
    assert!(text.contains("level: -2"), "the level is -2, got: {text}");
    assert!(
        text.contains("[-1, 2, -3]"),
        "the middle Cartan row carries the -3 entry, got: {text}"
    );
}

#[test]
fn tables_as_json_carry_the_structure_constants() {
    let output = toroidal(&["tables", "--family", "a-odd", "--format", "json"]);
    assert_eq!(exit_code(&output), 0);
    let value = stdout_json(&output);
    assert_eq!(value["type"], "a-odd");
    assert_eq!(value["n"], 3, "a-odd defaults to its smallest rank");
    assert_eq!(value["level"], -1, "the A-family level is -1");
    assert_eq!(
        value["cartan"][0][0], 2,
        "diagonal Cartan entries are 2"
    );
    assert!(
        value["k23"].as_array().is_some_and(|v| !v.is_empty()),
        "the stated diagonal central weights are listed"
    );
}

#[test]
fn dump_rho_lists_every_generator_image() {
    let output = toroidal(&["dump-rho", "--family", "d-series", "--n", "2", "--format", "json"]);
    assert_eq!(exit_code(&output), 0);
    let value = stdout_json(&output);
    assert_eq!(value["level"], -2, "the D-family level is -2");
    let generators = value["generators"].as_array().expect("generators listed");
    assert_eq!(
        generators.len(),
        10,
        "one central image plus alpha and ladder images for indices 0..=2"
    );
    assert!(
        generators.iter().any(|g| g["name"] == "alpha0"),
        "the head current is present"
    );
    assert!(
        value["kernel"].as_array().is_some(),
        "the diagonal-current kernel basis is reported"
    );
}

#[test]
fn kaehler_selftest_passes_and_reports_each_identity() {
    let output = toroidal(&["kaehler-selftest", "--format", "json"]);
    assert_eq!(exit_code(&output), 0);
    let value = stdout_json(&output);
    assert_eq!(value["central_identity"], "pass");
    assert_eq!(value["mixed_identity"], "pass");
    assert_eq!(value["antisymmetry"], "pass");
    assert_eq!(value["result"], "pass");
}

#[test]
fn json_reports_are_byte_deterministic_across_runs() {
    let args = ["verify", "--family", "d4", "--relations", "10", "--format", "json"];
    let first = toroidal(&args);
    let second = toroidal(&args);
    assert_eq!(exit_code(&first), 0);
    assert_eq!(
        first.stdout, second.stdout,
        "two runs with one config produce identical bytes"
    );
}

#[test]
fn proof_variant_is_selectable_and_verified() {
    let output = toroidal(&[
        "verify", "--family", "d-series", "--n", "2", "--variant", "proof", "--format", "json",
    ]);
    assert_eq!(exit_code(&output), 0, "the alternative tail reading verifies");
    let value = stdout_json(&output);
    assert_eq!(value["variant"], "proof");
    assert_eq!(value["summary"]["fail"], 0);
}
