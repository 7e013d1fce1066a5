//! End-to-end tests of the binary: exit codes, text output, and the JSON
//! schema.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_diracpoint"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8_lossy(&output.stdout).into_owned()
}

fn stderr(output: &Output) -> String {
    String::from_utf8_lossy(&output.stderr).into_owned()
}

#[test]
fn analyze_singular_entry() {
    let out = run(&["analyze", "CI:2"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("EmptyPointSpectrum"));
    assert!(text.contains("RhoKSingular"));
}

#[test]
fn analyze_zero_only_entry_as_json() {
    let out = run(&["--format", "json", "analyze", "AIII:1,2"]);
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["verdict"], "PointSpectrumIsZeroOnly");
    assert_eq!(report["reason"], "RhoKRegular");
    assert_eq!(report["genus"]["value_up_to_sign"], "-1/8");
    assert!(report["kernel"]["multiplicity_one"].as_bool().unwrap());
    // weights are arrays of exact rational strings
    let param = report["kernel"]["harish_chandra_param"].as_array().unwrap();
    assert_eq!(param[1], "1/2");
}

#[test]
fn analyze_product_expression() {
    let out = run(&["analyze", "AIII:1,2", "x", "CI:2"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("AIII:1,2 x CI:2"));
    assert!(text.contains("EmptyPointSpectrum"));
}

#[test]
fn analyze_unequal_rank_stub() {
    let out = run(&["analyze", "AI:3"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("UnequalRank"));
}

#[test]
fn genus_reports_exact_value() {
    let out = run(&["genus", "AIII:1,2"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("|A-hat|         : 1/8"));

    let json = run(&["--format", "json", "genus", "AIII:1,2"]);
    let report: serde_json::Value = serde_json::from_str(&stdout(&json)).unwrap();
    assert_eq!(report["value_up_to_sign"], "-1/8");
    assert_eq!(report["nonzero"], true);
}

#[test]
fn ktypes_prints_dimension_identity() {
    let out = run(&["ktypes", "CI:2"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("total dim = 8 (expected 2^3 = 8)"));
}

#[test]
fn sweep_json_round_trips() {
    let out = run(&["--format", "json", "sweep", "--max-rank", "4"]);
    assert!(out.status.success());
    let summary: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(summary["max_rank"], 4);
    assert!(summary["rows"].as_array().unwrap().len() > 10);
}

#[test]
fn catalog_list_mentions_families() {
    let out = run(&["catalog", "list"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("U(3)/U(1)xU(2)"));
    assert!(text.contains("EVII"));
}

#[test]
fn unknown_entry_exits_one_and_lists_known() {
    let out = run(&["analyze", "XIX:7"]);
    assert_eq!(out.status.code(), Some(1));
    let err = stderr(&out);
    assert!(err.contains("unknown catalog entry"));
    assert!(err.contains("AIII:1,2"));
}

#[test]
fn genus_of_stub_is_a_domain_error() {
    let out = run(&["genus", "AI:3"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("unequal ranks"));
}

#[test]
fn usage_errors_exit_two() {
    let out = run(&["sweep"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn custom_catalog_file() {
    let dir = std::env::temp_dir();
    let path = dir.join("diracpoint_cli_test.catalog");
    std::fs::write(
        &path,
        "name = CI:2\nfamily = CI\nparams = 2\nconstruction = classical\n\
         hermitian = true\ndual_spin = false\ndim = 6\nrho_k = 1/2, -1/2\n",
    )
    .unwrap();
    let out = run(&["--catalog", path.to_str().unwrap(), "catalog", "list"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("CI:2"));
    assert!(!text.contains("AIII:1,2"));
    std::fs::remove_file(&path).ok();
}
