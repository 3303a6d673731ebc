//! End-to-end runs of the compiled binary against the reference fixtures:
//! payload shapes, exit codes, determinism, and the error paths.

use std::path::PathBuf;
use std::process::Command;

use serde_json::Value;

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
        .to_str()
        .expect("utf8 path")
        .to_string()
}

fn run_with_env(args: &[&str], envs: &[(&str, &str)]) -> (i32, String, String) {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_hankel-interp"));
    cmd.args(args);
    for (k, v) in envs {
        cmd.env(k, v);
    }
    let out = cmd.output().expect("binary runs");
    (
        out.status.code().expect("exit code"),
        String::from_utf8(out.stdout).expect("utf8 stdout"),
        String::from_utf8(out.stderr).expect("utf8 stderr"),
    )
}

fn run(args: &[&str]) -> (i32, String, String) {
    run_with_env(args, &[])
}

fn payload(stdout: &str) -> Value {
    serde_json::from_str(stdout).expect("stdout is one JSON document")
}

/// Notices may precede the error document on the error stream.
fn stderr_code(stderr: &str) -> String {
    let start = stderr.find('{').expect("stderr holds a JSON document");
    let v: Value = serde_json::from_str(&stderr[start..]).expect("stderr JSON parses");
    v["code"].as_str().expect("code key").to_string()
}

fn strings(v: &Value) -> Vec<String> {
    v.as_array()
        .expect("array")
        .iter()
        .map(|s| s.as_str().expect("string").to_string())
        .collect()
}

#[test]
fn interp_reproduces_reference_polynomial() {
    let (code, out, _) = run(&["interp", "--table", &fixture("degree6_table.json")]);
    assert_eq!(code, 0);
    let v = payload(&out);
    assert_eq!(strings(&v["coefficients"]), ["-8", "0", "-6", "2", "0", "-4", "2"]);
    assert_eq!(v["degree"], 6);
    assert_eq!(v["method"], "hankel");
    assert_eq!(v["field"], "rational");
}

#[test]
fn all_methods_and_csv_agree() {
    let (_, reference, _) = run(&["interp", "--table", &fixture("degree6_table.json")]);
    let reference = payload(&reference)["coefficients"].clone();
    for method in ["lagrange", "sigma"] {
        let (code, out, _) =
            run(&["interp", "--table", &fixture("degree6_table.json"), "--method", method]);
        assert_eq!(code, 0);
        assert_eq!(payload(&out)["coefficients"], reference, "method {}", method);
    }
    let (code, out, _) = run(&["interp", "--table", &fixture("degree6_table.csv")]);
    assert_eq!(code, 0);
    assert_eq!(payload(&out)["coefficients"], reference, "csv table");
}

#[test]
fn repeated_runs_are_byte_identical() {
    let args = ["rational", "--table", &fixture("rational_values_table.json"), "--all", "--pretty"];
    let (c1, out1, _) = run(&args);
    let (c2, out2, _) = run(&args);
    assert_eq!(c1, 0);
    assert_eq!(c2, 0);
    assert_eq!(out1, out2);
}

#[test]
fn output_file_matches_stdout() {
    let dir = tempfile::tempdir().expect("tempdir");
    let path = dir.path().join("payload.json");
    let (code, out, _) = run(&["interp", "--table", &fixture("degree6_table.json")]);
    assert_eq!(code, 0);
    let (code_f, out_f, _) = run(&[
        "interp",
        "--table",
        &fixture("degree6_table.json"),
        "--output",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code_f, 0);
    assert!(out_f.is_empty());
    assert_eq!(std::fs::read_to_string(&path).expect("written payload"), out);
}

#[test]
fn correct_repairs_the_damaged_row() {
    let (code, out, _) =
        run(&["correct", "--table", &fixture("one_error_table.json"), "--degree", "2"]);
    assert_eq!(code, 0);
    let v = payload(&out);
    assert_eq!(v["status"], "Corrected");
    assert_eq!(v["degree"], 2);
    assert_eq!(strings(&v["polynomial"]), ["8", "-3", "4"]);
    let errors = v["errors"].as_array().expect("errors array");
    assert_eq!(errors.len(), 1);
    assert_eq!(errors[0]["node"], "-1");
    assert_eq!(errors[0]["given"], "12");
    assert_eq!(errors[0]["corrected"], "15");
}

#[test]
fn correct_refuses_over_budget_corruption() {
    let (code, out, _) =
        run(&["correct", "--table", &fixture("three_errors_table.json"), "--degree", "2"]);
    assert_eq!(code, 1);
    let v = payload(&out);
    assert_eq!(v["status"], "Undecodable");
    assert_eq!(v["polynomial"], Value::Null);
    assert_eq!(v["degree"], Value::Null);
    assert!(v["errors"].as_array().expect("errors array").is_empty());
}

#[test]
fn rational_family_lists_every_split() {
    let (code, out, _) = run(&["rational", "--table", &fixture("rational_values_table.json"), "--all"]);
    assert_eq!(code, 0);
    let v = payload(&out);
    let family = v["interpolants"].as_array().expect("interpolants");
    assert_eq!(family.len(), 7);
    let r24 = &family[2];
    assert_eq!(r24["n"], 2);
    assert_eq!(r24["m"], 4);
    assert_eq!(r24["valid"], true);
    assert_eq!(strings(&r24["numerator"]), ["2", "-11", "7"]);
    assert_eq!(strings(&r24["denominator"]), ["-4", "-5", "0", "-6", "3"]);
}

#[test]
fn rational_single_invalid_entry_exits_one() {
    let (code, out, _) =
        run(&["rational", "--table", &fixture("no_valid_split_table.json"), "--num-degree", "1"]);
    assert_eq!(code, 1);
    let v = payload(&out);
    assert_eq!(v["valid"], false);
    assert_eq!(v["degenerate"], false);
    assert_eq!(strings(&v["numerator"]), ["-2", "1"]);
    assert_eq!(strings(&v["denominator"]), ["-2", "-1", "-1", "1"]);
    assert_eq!(strings(&v["failure_nodes"]), ["2"]);
}

#[test]
fn hankel_ladder_matches_reference_and_naive_agrees() {
    let (code, out, _) =
        run(&["hankel", "--seq", &fixture("ladder_seq.json"), "--kmax", "4"]);
    assert_eq!(code, 0);
    let v = payload(&out);
    assert_eq!(v["method"], "recursive");
    let orders = v["orders"].as_array().expect("orders");
    assert_eq!(orders.len(), 4);
    assert_eq!(orders[3]["order"], 4);
    assert_eq!(
        strings(&orders[3]["coefficients"]),
        ["468", "93808", "-97864", "-278356", "19656"]
    );
    assert_eq!(orders[3]["minor"], "19656");

    let (code_n, out_n, _) =
        run(&["hankel", "--seq", &fixture("ladder_seq.json"), "--kmax", "4", "--naive"]);
    assert_eq!(code_n, 0);
    let vn = payload(&out_n);
    assert_eq!(vn["method"], "naive");
    assert_eq!(vn["orders"], v["orders"]);
}

#[test]
fn resultant_sample_mode_reports_minors_and_verdict() {
    let (code, out, _) = run(&[
        "resultant",
        "--table",
        &fixture("ratio_table.json"),
        "--num-degree",
        "3",
        "--den-degree",
        "2",
    ]);
    assert_eq!(code, 0);
    let v = payload(&out);
    assert_eq!(v["resultant_vanishes"], false);
    assert_eq!(v["minors"]["h_m_tau"], "-1/4704");
    assert_eq!(v["minors"]["h_m1_tau"], "-1/4704");
    assert_eq!(v["minors"]["h_n_ttau"], "1/5806080");
    assert_eq!(v["minors"]["h_n1_ttau"], "1/5806080");
}

#[test]
fn resultant_coefficient_mode_matches_sample_verdict() {
    let (code, out, _) = run(&[
        "resultant",
        "--p",
        &fixture("p_cubic.json"),
        "--q",
        &fixture("q_quadratic.json"),
    ]);
    assert_eq!(code, 0);
    let v = payload(&out);
    assert_eq!(v["resultant"], "144");
    assert_eq!(v["resultant_vanishes"], false);
}

#[test]
fn prime_field_reduction_emits_notice() {
    let (code, out, err) = run(&["interp", "--table", &fixture("gf7_table.json")]);
    assert_eq!(code, 0);
    assert!(err.contains("normalized modulo 7"), "stderr: {}", err);
    let v = payload(&out);
    assert_eq!(strings(&v["coefficients"]), ["0", "5"]);
    assert_eq!(v["field"]["prime"], "7");
}

#[test]
fn reduced_node_collision_is_rejected() {
    let (code, out, err) = run(&["interp", "--table", &fixture("gf7_collision.json")]);
    assert_eq!(code, 2);
    assert!(out.is_empty());
    assert_eq!(stderr_code(&err), "duplicate_nodes");
}

#[test]
fn duplicate_csv_rows_are_rejected_with_rows() {
    let (code, _, err) = run(&["interp", "--table", &fixture("duplicate.csv")]);
    assert_eq!(code, 2);
    assert_eq!(stderr_code(&err), "duplicate_nodes");
    let v: Value = serde_json::from_str(&err).unwrap();
    let msg = v["message"].as_str().unwrap();
    assert!(msg.contains('1') && msg.contains('2'), "rows in message: {}", msg);
}

#[test]
fn conflicting_field_declarations_are_refused() {
    let (code, _, err) =
        run(&["interp", "--table", &fixture("degree6_table.json"), "--field", "7"]);
    assert_eq!(code, 2);
    assert_eq!(stderr_code(&err), "field_mismatch");
}

#[test]
fn rational_without_mode_flag_is_usage_error() {
    let (code, _, err) = run(&["rational", "--table", &fixture("rational_values_table.json")]);
    assert_eq!(code, 2);
    assert_eq!(stderr_code(&err), "usage");
}

#[test]
fn oversized_input_scalar_is_rejected() {
    let (code, _, err) = run_with_env(
        &["interp", "--table", &fixture("degree6_table.json")],
        &[("HANKEL_INTERP_MAX_BITS", "10")],
    );
    assert_eq!(code, 2);
    assert_eq!(stderr_code(&err), "input_too_large");
}

#[test]
fn oversized_computed_scalar_is_a_domain_failure() {
    let (code, _, err) = run_with_env(
        &["rational", "--table", &fixture("rational_values_table.json"), "--num-degree", "0"],
        &[("HANKEL_INTERP_MAX_BITS", "16")],
    );
    assert_eq!(code, 1);
    assert_eq!(stderr_code(&err), "scalar_too_large");
}

#[test]
fn ladder_beyond_the_sequence_is_rejected() {
    let (code, _, err) =
        run(&["hankel", "--seq", &fixture("ladder_seq.json"), "--kmax", "9"]);
    assert_eq!(code, 2);
    assert_eq!(stderr_code(&err), "sequence_too_short");
}

#[test]
fn pretty_adds_descending_display() {
    let (code, out, _) =
        run(&["interp", "--table", &fixture("degree6_table.json"), "--pretty"]);
    assert_eq!(code, 0);
    let v = payload(&out);
    assert_eq!(v["display"], "2*x^6 - 4*x^5 + 2*x^3 - 6*x^2 - 8");
}
