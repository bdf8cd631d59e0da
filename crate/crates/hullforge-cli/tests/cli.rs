//! End-to-end tests of the command-line surface: every test drives
//! `run_command` exactly as the binary does and checks exit codes and
//! output text. A process-wide lock serializes the tests because some of
//! them mutate the budget environment variable.

use std::sync::Mutex;

use hullforge_cli::{run_command, BUDGET_ENV};

static LOCK: Mutex<()> = Mutex::new(());

fn run(args: &[&str]) -> (i32, String) {
    run_command(args.iter().copied())
}

fn fixture(name: &str) -> String {
    format!("{}/fixtures/{name}", env!("CARGO_MANIFEST_DIR"))
}

/// The generator rows of a serialized code embedded in command output
/// (skipping `#` comment lines), parsed back into a code.
fn parse_embedded(out: &str) -> hullforge::LinearCode {
    let body: String = out
        .lines()
        .filter(|l| !l.trim_start().starts_with('#'))
        .map(|l| format!("{l}\n"))
        .collect();
    hullforge_cli::codefile::parse_code_file(&body).expect("embedded code must parse")
}

#[test]
fn field_info_reports_frozen_gf9_data() {
    let _g = LOCK.lock().unwrap();
    let (code, out) = run(&["field-info", "3", "2"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("q=9"), "{out}");
    assert!(out.contains("x^2 + x + 2"), "{out}");
    assert!(out.contains("sqrt(q): 3"), "{out}");
}

#[test]
fn analyze_reports_hull_dimensions_and_classes() {
    let _g = LOCK.lock().unwrap();
    let (code, out) = run(&["analyze", &fixture("gf8_8_5.code")]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("hull dims: e=0:0, e=1:1, e=2:1"), "{out}");
    assert!(out.contains("e=0: LCD"), "{out}");
    assert!(out.contains("distance: 3 (exact)"), "{out}");
    assert!(out.contains("dual distance: 5 (exact)"), "{out}");
    assert!(out.contains("m-mds: 1"), "{out}");
}

#[test]
fn analyze_budget_flag_brackets_the_distance() {
    let _g = LOCK.lock().unwrap();
    let (code, out) = run(&[
        "analyze",
        &fixture("gf8_8_5.code"),
        "--dist-budget",
        "10",
    ]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains(">= "), "{out}");
    assert!(out.contains("lower bound; budget exhausted"), "{out}");
}

#[test]
fn budget_environment_variable_is_honored() {
    let _g = LOCK.lock().unwrap();
    std::env::set_var(BUDGET_ENV, "10");
    let (code, out) = run(&["analyze", &fixture("gf8_8_5.code")]);
    std::env::remove_var(BUDGET_ENV);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains(">= "), "{out}");

    std::env::set_var(BUDGET_ENV, "not-a-number");
    let (code, out) = run(&["analyze", &fixture("gf8_8_5.code")]);
    std::env::remove_var(BUDGET_ENV);
    assert_eq!(code, 2, "{out}");
    assert!(out.contains(BUDGET_ENV), "{out}");
}

#[test]
fn usage_errors_exit_with_two_and_help_with_zero() {
    let _g = LOCK.lock().unwrap();
    let (code, _) = run(&["no-such-command"]);
    assert_eq!(code, 2);
    let (code, _) = run(&["analyze"]);
    assert_eq!(code, 2);
    let (code, out) = run(&["table", "5"]);
    assert_eq!(code, 2, "{out}");
    assert!(out.contains("3, 6, 7, 8"), "{out}");
    let (code, out) = run(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("Usage"), "{out}");
}

#[test]
fn domain_errors_exit_with_one() {
    let _g = LOCK.lock().unwrap();
    // gf8_8_5 is not self-orthogonal, so it cannot be extended.
    let (code, out) = run(&["extend", &fixture("gf8_8_5.code"), "--e", "0", "--i", "2"]);
    assert_eq!(code, 1, "{out}");
    assert!(out.contains("not self-orthogonal"), "{out}");
    let (code, out) = run(&["analyze", "/nonexistent/path.code"]);
    assert_eq!(code, 1, "{out}");
}

#[test]
fn extend_emits_a_parsable_code_and_explicit_constants_match() {
    let _g = LOCK.lock().unwrap();
    let (code, out) = run(&["extend", &fixture("gf2_4_2.code"), "--e", "0", "--i", "2"]);
    assert_eq!(code, 0, "{out}");
    let ext = parse_embedded(&out);
    assert_eq!((ext.n(), ext.k()), (6, 2));
    let (code2, out2) = run(&[
        "extend",
        &fixture("gf2_4_2.code"),
        "--e",
        "0",
        "--i",
        "2",
        "--alphas",
        "1,1",
    ]);
    assert_eq!(code2, 0, "{out2}");
    assert_eq!(out, out2, "explicit (1,1) must match the automatic search");
}

#[test]
fn extend_one_reports_the_achieved_hull() {
    let _g = LOCK.lock().unwrap();
    let (code, out) = run(&[
        "extend-one",
        &fixture("gf9_14_4.code"),
        "--e",
        "0",
        "--l",
        "1",
        "--alpha",
        "w^6",
        "--beta",
        "w",
    ]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("hull dimension at e=0: 1"), "{out}");
    let ext = parse_embedded(&out);
    assert_eq!((ext.n(), ext.k()), (15, 4));
}

#[test]
fn reduce_hull_reports_the_achieved_hull() {
    let _g = LOCK.lock().unwrap();
    let (code, out) = run(&[
        "reduce-hull",
        &fixture("gf9_13_2.code"),
        "--e",
        "1",
        "--l",
        "1",
    ]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("hull dimension at e=1: 1"), "{out}");
    let red = parse_embedded(&out);
    assert_eq!((red.n(), red.k()), (13, 2));
}

#[test]
fn hso_coset_builds_the_frozen_shape() {
    let _g = LOCK.lock().unwrap();
    let (code, out) = run(&["hso-coset", "81", "2", "7", "2"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("kmax=2"), "{out}");
    let c = parse_embedded(&out);
    assert_eq!((c.n(), c.k()), (14, 2));
    let (code, out) = run(&["hso-coset", "10", "2", "7", "2"]);
    assert_eq!(code, 2, "{out}");
    assert!(out.contains("not a prime power"), "{out}");
}

#[test]
fn hso_product_builds_the_frozen_shape() {
    let _g = LOCK.lock().unwrap();
    let (code, out) = run(&["hso-product", "169", "14", "24", "5", "2"]);
    assert_eq!(code, 0, "{out}");
    let c = parse_embedded(&out);
    assert_eq!((c.n(), c.k()), (35, 2));
}

#[test]
fn eaqecc_derives_both_codes_over_the_subfield() {
    let _g = LOCK.lock().unwrap();
    let (code, out) = run(&[
        "eaqecc",
        &fixture("gf9_13_2.code"),
        "--e",
        "1",
        "--subfield",
    ]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("[[13,0,11;9]]_3"), "{out}");
    assert!(out.contains("[[13,9,2;0]]_3"), "{out}");
}

#[test]
fn propagate_extends_reduces_and_derives() {
    let _g = LOCK.lock().unwrap();
    let (code, out) = run(&[
        "propagate",
        &fixture("gf9_13_2.code"),
        "--e",
        "1",
        "--i",
        "2",
        "--l",
        "2",
        "--subfield",
    ]);
    assert_eq!(code, 0, "{out}");
    assert_eq!(out, "[[15,0,13;11]]_3\n[[15,11,2;0]]_3\n");
}

#[test]
fn table_seven_is_deterministic() {
    let _g = LOCK.lock().unwrap();
    let (code, first) = run(&["table", "7"]);
    assert_eq!(code, 0);
    let (_, second) = run(&["table", "7"]);
    assert_eq!(first, second, "re-derivation must be bit-identical");
    assert!(first.starts_with("q,n',t,n,k,d,c\n3^4,5,8,40,32,5,0\n"), "{first}");
}

#[test]
fn table_row_counts_match_the_datasets() {
    let _g = LOCK.lock().unwrap();
    for (id, lines) in [("3", 12), ("6", 15), ("8", 25)] {
        let (code, out) = run(&["table", id]);
        assert_eq!(code, 0, "{out}");
        assert_eq!(out.lines().count(), lines, "table {id}:\n{out}");
    }
}

#[test]
fn alphas_reports_case_and_congruence() {
    let _g = LOCK.lock().unwrap();
    let (code, out) = run(&["alphas", "3", "2", "0", "2"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("case: odd-case-2"), "{out}");
    assert!(out.contains("t0: 2"), "{out}");
    assert!(out.contains("tuple(i=2): (w^2, 1)"), "{out}");
}

#[test]
fn alphas_reports_an_empty_search_without_failing() {
    let _g = LOCK.lock().unwrap();
    let (code, out) = run(&["alphas", "3", "3", "0", "2"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("case: none"), "{out}");
    assert!(out.contains("tuple(i=2): none"), "{out}");
}

#[test]
fn parse_errors_carry_line_and_column() {
    let _g = LOCK.lock().unwrap();
    let path = std::env::temp_dir().join("hullforge_bad_literal.code");
    std::fs::write(&path, "p=3 h=2 modulus=2,2,1 n=4 k=2\n1 0 zz 1\n0 1 1 2\n").unwrap();
    let (code, out) = run(&["analyze", path.to_str().unwrap()]);
    std::fs::remove_file(&path).ok();
    assert_eq!(code, 1, "{out}");
    assert!(out.contains("line 2, column 5"), "{out}");
}

#[test]
fn verify_suite_is_green() {
    let _g = LOCK.lock().unwrap();
    let (code, out) = run(&["verify"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("0 failed"), "{out}");
}
