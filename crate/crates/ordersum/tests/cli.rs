//! End-to-end checks of the `ordersum` binary: spec'd invocations, exit
//! codes, and report determinism.

use std::io::Write;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ordersum"))
        .args(args)
        .env_remove("ORDERSUM_CATALOG")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn psi_of_named_constructions() {
    let out = run(&["psi", "A4"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("psi(A4) = 31"));

    let out = run(&["psi", "C", "12"]);
    assert!(stdout(&out).contains("= 77"));

    let out = run(&["psi", "product", "C2", "D4"]);
    assert!(stdout(&out).contains("= 39"));

    let out = run(&["psi", "fixture", "SL(2,3)"]);
    assert!(stdout(&out).contains("= 99"));

    let out = run(&["psi", "catalog", "75", "1"]);
    assert!(stdout(&out).contains("= 3647"));
}

#[test]
fn psi_rejects_unknown_specs_with_usage_exit() {
    let out = run(&["psi", "Q8"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["psi"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn check_t_over_small_orders_is_clean() {
    let out = run(&["check", "t", "--orders", "1..30"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("0 violations"), "{text}");
    assert!(text.contains("equality cases: 12#"), "{text}");
}

#[test]
fn check_odd_over_small_orders_is_clean() {
    let out = run(&["check", "odd", "--orders", "1..99"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("0 violations"));
}

#[test]
fn check_hlm_reports_the_order_32_finding() {
    let out = run(&["check", "hlm", "--orders", "32"]);
    assert_eq!(out.status.code(), Some(0), "findings are not violations");
    let text = stdout(&out);
    assert!(text.contains("167"), "{text}");
    assert!(text.contains("156"), "{text}");
}

#[test]
fn check_on_a_single_group_spec() {
    let out = run(&["check", "t", "A4"]);
    assert_eq!(out.status.code(), Some(0));
    let out = run(&["check", "solvable", "S4"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn lemmas_over_small_orders() {
    let out = run(&[
        "lemmas",
        "--orders",
        "1..24",
        "--cyclic-sweep-limit",
        "2000",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("normal_subgroup_quotient_bound"));
    assert!(text.contains("cyclic_core_index"));
}

#[test]
fn catalog_stats_counts_the_whole_file() {
    let out = run(&["catalog", "stats"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("1048 groups over orders 1..100"));
}

#[test]
fn catalog_validate_small_orders() {
    let out = run(&["catalog", "validate", "--orders", "75"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("validated 3 entries"));
}

#[test]
fn corrupted_catalog_fails_with_data_exit_and_line_number() {
    let mut file = tempfile::NamedTempFile::new().expect("temp file");
    writeln!(file, "6:1::6:(1 2 3 4 5 6):21").expect("write");
    writeln!(file, "mangled line").expect("write");
    let out = Command::new(env!("CARGO_BIN_EXE_ordersum"))
        .args(["catalog", "validate"])
        .env("ORDERSUM_CATALOG", file.path())
        .output()
        .expect("binary runs");
    assert_eq!(out.status.code(), Some(3));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("line 2"), "{err}");
}

#[test]
fn json_reports_are_byte_identical_across_job_counts() {
    let a = run(&["check", "t", "--orders", "1..40", "--json", "--jobs", "1"]);
    let b = run(&["check", "t", "--orders", "1..40", "--json", "--jobs", "2"]);
    assert!(a.status.success() && b.status.success());
    assert_eq!(a.stdout, b.stdout);
    assert!(!a.stdout.is_empty());

    let a = run(&["check", "hlm", "--orders", "1..20", "--json", "--jobs", "2"]);
    let b = run(&["check", "hlm", "--orders", "1..20", "--json", "--jobs", "1"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn tsv_mode_emits_rows() {
    let out = run(&["check", "t", "--orders", "12", "--tsv"]);
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert!(lines[0].starts_with("group_id\torder\tpsi"));
    assert_eq!(lines.len(), 6); // header + five groups of order 12
}

#[test]
fn unknown_subcommand_kind_is_a_usage_error() {
    let out = run(&["check", "bogus"]);
    assert_eq!(out.status.code(), Some(2));
}
