//! End-to-end tests of the command-line interface: exit codes, JSON
//! round-trips and the documented output formats.

use std::process::{Command, Output};

use semialg::json::{
    AnalyzeJson, ElementJson, QuotientJson, RootsJson, TowerJson, TowerReportJson, VerdictJson,
};

const NATURALS: &str = r#"{"ambient_rank":1,"generators":[[1]]}"#;
const NUMERICAL_23: &str = r#"{"ambient_rank":1,"generators":[[2],[3]]}"#;
const INTEGERS: &str = r#"{"ambient_rank":1,"generators":[[1],[-1]]}"#;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_semialg"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("utf8 output")
}

fn reparse<T: serde::de::DeserializeOwned + serde::Serialize + PartialEq>(text: &str) -> T {
    let first: T = serde_json::from_str(text).expect("output parses");
    let second: T =
        serde_json::from_str(&serde_json::to_string(&first).expect("serializes")).expect("parses");
    assert!(first == second, "round trip changed the value");
    first
}

#[test]
fn analyze_reports_hilbert_basis() {
    let output = run(&["analyze", NUMERICAL_23, "--json"]);
    assert!(output.status.success());
    let report: AnalyzeJson = reparse(&stdout_of(&output));
    assert!(report.pointed);
    assert_eq!(report.hilbert_basis, Some(vec![vec![2], vec![3]]));
}

#[test]
fn analyze_accepts_non_pointed_input() {
    let output = run(&["analyze", INTEGERS, "--json"]);
    assert!(output.status.success());
    let report: AnalyzeJson = reparse(&stdout_of(&output));
    assert!(!report.pointed);
    assert!(report.note.unwrap().contains("not pointed"));
}

#[test]
fn malformed_json_exits_two_with_position() {
    let output = run(&["analyze", r#"{"ambient_rank":1,"generators":"#]);
    assert_eq!(output.status.code(), Some(2));
    let err = String::from_utf8(output.stderr).unwrap();
    assert!(err.contains("line"), "diagnostic should locate the error: {err}");
}

#[test]
fn roots_of_the_naturals() {
    let output = run(&["roots", NATURALS, "--box", "3", "--json"]);
    assert!(output.status.success());
    let report: RootsJson = reparse(&stdout_of(&output));
    assert_eq!(report.roots.len(), 1);
    assert_eq!(report.roots[0].degree, vec![-1]);
    assert!(!report.roots[0].reducible);
}

#[test]
fn numerical_semigroup_has_no_roots() {
    let output = run(&["roots", NUMERICAL_23, "--box", "3", "--json"]);
    assert!(output.status.success());
    let report: RootsJson = reparse(&stdout_of(&output));
    assert!(report.roots.is_empty());
}

#[test]
fn empty_box_yields_no_roots() {
    let output = run(&["roots", NATURALS, "--box", "0", "--json"]);
    assert!(output.status.success());
    let report: RootsJson = reparse(&stdout_of(&output));
    assert!(report.roots.is_empty());
}

#[test]
fn roots_require_pointedness() {
    let output = run(&["roots", INTEGERS]);
    assert_eq!(output.status.code(), Some(3));
}

#[test]
fn classify_the_descending_derivation() {
    let output = run(&[
        "classify",
        NATURALS,
        "--derivation",
        r#"{"components":[{"degree":[-1],"phi":[1]}]}"#,
        "--json",
    ]);
    assert!(output.status.success());
    let verdict: VerdictJson = reparse(&stdout_of(&output));
    assert_eq!(verdict.verdict, "not-integrable");
    assert_eq!(verdict.branch.as_deref(), Some("lnd"));
    assert!(verdict.witness.is_some());
}

#[test]
fn classify_the_square_derivation_with_verification() {
    let output = run(&[
        "classify",
        NATURALS,
        "--derivation",
        r#"{"components":[{"degree":[1],"phi":[1]}]}"#,
        "--verify",
        "--json",
    ]);
    assert!(output.status.success(), "{output:?}");
    let text = stdout_of(&output);
    // verdict first, oracle report second
    assert!(text.contains("\"integrable\""));
    assert!(text.contains("\"agreement\": \"agree\""));
}

#[test]
fn multi_degree_images_are_out_of_scope() {
    let output = run(&[
        "classify",
        NATURALS,
        "--derivation",
        r#"{"images":{"[1]":"x^[2] + 3"}}"#,
    ]);
    assert_eq!(output.status.code(), Some(5));
}

#[test]
fn oracle_disagreement_exits_four() {
    // a degree outside a non-saturated semigroup: the closed-form rule says
    // not integrable while the bounded oracle finds no failure, and the
    // mismatch is surfaced instead of auto-resolved
    let output = run(&[
        "classify",
        NUMERICAL_23,
        "--derivation",
        r#"{"components":[{"degree":[1],"phi":[1]}]}"#,
        "--verify",
    ]);
    assert_eq!(output.status.code(), Some(4));
}

#[test]
fn quotient_table_matches_the_compactified_naturals() {
    let output = run(&["quotient", NATURALS, "--level", "3", "--json"]);
    assert!(output.status.success());
    let table: QuotientJson = reparse(&stdout_of(&output));
    assert_eq!(table.elements.len(), 5); // 0..=3 plus inf
    assert_eq!(table.table.len(), 5);
    // 2 + 2 overflows the level
    let text = stdout_of(&output);
    assert!(text.contains("\"inf\""));
}

#[test]
fn quotient_requires_pointedness() {
    let output = run(&["quotient", INTEGERS, "--level", "2"]);
    assert_eq!(output.status.code(), Some(3));
}

#[test]
fn apply_the_lifted_derivative() {
    let output = run(&[
        "apply",
        NATURALS,
        "--derivation",
        r#"{"components":[{"degree":[-1],"phi":[1]}]}"#,
        "--element",
        "x^[1]",
    ]);
    assert!(output.status.success());
    assert_eq!(stdout_of(&output).trim(), "1 - x^inf");
}

#[test]
fn apply_zero_iterations_is_the_identity() {
    let output = run(&[
        "apply",
        NATURALS,
        "--derivation",
        r#"{"components":[{"degree":[-1],"phi":[1]}]}"#,
        "--element",
        "2*x^[3] - x^inf",
        "--iterate",
        "0",
        "--json",
    ]);
    assert!(output.status.success());
    let element: ElementJson = reparse(&stdout_of(&output));
    assert_eq!(element.rendered, "2*x^[3] - x^inf");
}

#[test]
fn verify_tower_passes_on_the_naturals() {
    let output = run(&["verify-tower", NATURALS, "--levels", "4", "--json"]);
    assert!(output.status.success());
    let report: TowerReportJson = reparse(&stdout_of(&output));
    assert!(report.passed);
    assert_eq!(report.levels, 5);
}

#[test]
fn tower_example_is_compatible_but_not_algebraic() {
    let output = run(&["tower-example", "--levels", "5", "--json"]);
    assert!(output.status.success());
    let tower: TowerJson = reparse(&stdout_of(&output));
    assert!(tower.compatible);
    assert!(!tower.algebraic);
    assert_eq!(tower.levels.len(), 6);
}
