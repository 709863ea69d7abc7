//! End-to-end runs of the `g2verma` binary.

use std::process::{Command, Output};

use g2verma::wire::{
    classification_from_json, diagram_from_json, search_from_json, vector_from_json,
};
use g2verma::{is_singular, Rational};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_g2verma"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.ends_with('\n'));
    text
}

fn code(args: &[&str]) -> Option<i32> {
    run(args).status.code()
}

#[test]
fn classify_reports_all_five_types() {
    let text = stdout(&["classify", "--lw", "-1/4,-1/4"]);
    let c = classification_from_json::<Rational>(text.trim_end()).unwrap();
    assert_eq!(c.case.as_str(), "A12345");
    assert_eq!(c.findings.len(), 5);
}

#[test]
fn search_finds_the_lone_vector() {
    let text = stdout(&["search", "--lw", "1,1", "--grade", "1,-1"]);
    let r = search_from_json::<Rational>(text.trim_end()).unwrap();
    assert_eq!(r.basis.len(), 1);
    assert!(is_singular(&r.basis[0]).unwrap());
}

#[test]
fn sv_output_is_singular() {
    for args in [
        &["sv", "--type", "iii", "--p3", "5", "--q3", "2"][..],
        &["sv", "--type", "ii", "--p2", "2", "--lw", "1/3,-1/4"][..],
        &["sv", "--type", "i", "--p1", "1", "--lw", "-1/4,-1/4"][..],
    ] {
        let v = vector_from_json::<Rational>(stdout(args).trim_end()).unwrap();
        assert!(is_singular(&v).unwrap(), "{args:?}");
    }
}

#[test]
fn dot_output_matches_golden() {
    let text = stdout(&["diagram", "--lw", "3/4,1/4", "--format", "dot"]);
    assert_eq!(text, include_str!("../../core/tests/golden/a245.dot"));
}

#[test]
fn json_diagram_round_trips() {
    let text = stdout(&["diagram", "--lw", "-1/4,-1/4", "--format", "json"]);
    let d = diagram_from_json::<Rational>(text.trim_end()).unwrap();
    assert_eq!(g2verma::wire::diagram_to_json(&d), text.trim_end());
}

#[test]
fn output_is_deterministic() {
    let args = ["diagram", "--lw", "-1/4,-1/4", "--format", "json"];
    assert_eq!(stdout(&args), stdout(&args));
}

#[test]
fn exit_codes() {
    assert_eq!(
        code(&["sv", "--type", "ii", "--p2", "1", "--lw", "0,1/3"]),
        Some(1)
    );
    assert_eq!(
        code(&["sv", "--type", "iii", "--p3", "2", "--q3", "1"]),
        Some(1)
    );
    assert_eq!(code(&["sv", "--type", "ii", "--p2", "1"]), Some(2));
    assert_eq!(
        code(&["sv", "--type", "ii", "--p1", "1", "--lw", "0,0"]),
        Some(2)
    );
    assert_eq!(code(&["classify", "--lw", "1/0,1"]), Some(2));
    assert_eq!(code(&["classify", "--lw", "1"]), Some(2));
    assert_eq!(
        code(&[
            "diagram",
            "--lw",
            "0,1",
            "--format",
            "dot",
            "--max-depth",
            "0"
        ]),
        Some(2)
    );
    assert_eq!(code(&["verify", "--suite", "nonsense"]), Some(2));
    assert_eq!(code(&["verify", "--suite", "jacobi"]), Some(0));
}

#[test]
fn failed_verification_exits_with_three() {
    let out = run(&["verify", "--suite", "diagrams"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8(out.stdout)
        .unwrap()
        .starts_with("FAIL diagrams"));
}
