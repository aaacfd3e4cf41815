use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use hopfkit::builders::{builtin_group, drinfeld_double, parse_group};
use hopfkit::hopf::parse_hopf;

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name)
}

fn hopfkit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hopfkit")).args(args).output().unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn build_double_then_check_axioms() {
    let dir = tempfile::tempdir().unwrap();
    let grp = dir.path().join("c2.grp");
    let hopf = dir.path().join("dc2.hopf");
    assert_eq!(code(&hopfkit(&["build", "group", "C2", "-o", grp.to_str().unwrap()])), 0);
    assert_eq!(code(&hopfkit(&["build", "double", grp.to_str().unwrap(), "-o", hopf.to_str().unwrap()])), 0);
    let out = hopfkit(&["check-axioms", hopf.to_str().unwrap()]);
    assert_eq!(code(&out), 0, "{}", stdout(&out));
    let parsed = parse_hopf(&std::fs::read_to_string(&hopf).unwrap()).unwrap();
    let built = drinfeld_double(&builtin_group("C2").unwrap());
    assert_eq!(parsed.tensors(), built.tensors());
    assert_eq!(parsed.name(), built.name());
}

#[test]
fn tensor_build_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.hopf");
    let b = dir.path().join("b.hopf");
    let t = dir.path().join("t.hopf");
    hopfkit(&["build", "group-algebra", "S3", "-o", a.to_str().unwrap()]);
    hopfkit(&["build", "function-algebra", "C2", "-o", b.to_str().unwrap()]);
    let out = hopfkit(&["build", "tensor", a.to_str().unwrap(), b.to_str().unwrap(), "-o", t.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let out = hopfkit(&["wedderburn", t.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("degrees: 1, 1, 1, 1, 2, 2"), "{}", stdout(&out));
}

#[test]
fn shipped_group_file_parses() {
    let g = parse_group(&std::fs::read_to_string(data("s3.grp")).unwrap()).unwrap();
    assert_eq!(g.order(), 6);
}

#[test]
fn broken_file_fails_axiom_suite() {
    let out = hopfkit(&["verify", data("broken.hopf").to_str().unwrap(), "--suite", "axioms"]);
    assert_eq!(code(&out), 1);
    let text = stdout(&out);
    assert!(text.contains("FAIL coassociativity"), "{text}");
}

#[test]
fn verify_all_stops_after_failed_axioms() {
    let out = hopfkit(&["verify", data("broken.hopf").to_str().unwrap(), "--json"]);
    assert_eq!(code(&out), 1);
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["overall"], serde_json::json!(false));
    assert_eq!(report["suites"].as_array().unwrap().len(), 1);
}

#[test]
fn report_from_group_file() {
    let out = hopfkit(&["report", data("s3.grp").to_str().unwrap(), "--as", "group-algebra"]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["algebra"], serde_json::json!("kS3"));
    assert_eq!(report["dim"], serde_json::json!(6));
    let names: Vec<&str> = report["suites"].as_array().unwrap().iter().map(|s| s["name"].as_str().unwrap()).collect();
    assert_eq!(
        names,
        ["axioms", "integrals", "lemma1", "corollary", "proposition", "section4", "kaplansky", "central-fusion"]
    );
}

#[test]
fn report_to_file_matches_stdout() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.json");
    let printed = hopfkit(&["report", "C3", "--as", "double"]);
    let written = hopfkit(&["report", "C3", "--as", "double", "-o", path.to_str().unwrap()]);
    assert_eq!(code(&written), 0);
    assert_eq!(std::fs::read(&path).unwrap(), printed.stdout);
}

#[test]
fn parse_errors_exit_two_with_location() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.hopf");
    std::fs::write(&path, "hopf bad\ndim 2\nMULT\n0 0 7 1\n").unwrap();
    let out = hopfkit(&["check-axioms", path.to_str().unwrap()]);
    assert_eq!(code(&out), 2);
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("line 4"), "{err}");
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(code(&hopfkit(&["frobnicate"])), 2);
    assert_eq!(code(&hopfkit(&["verify", "x.hopf", "--suite", "lemma7"])), 2);
    assert_eq!(code(&hopfkit(&["wedderburn", "x.hopf", "--cyclotomic", "0"])), 2);
    assert_eq!(code(&hopfkit(&["check-axioms", data("s3.grp").to_str().unwrap()])), 2);
}

#[test]
fn small_field_is_reported() {
    let out = hopfkit(&["wedderburn", "C3", "--as", "group-algebra", "--cyclotomic", "1"]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("field too small"));
    let out = hopfkit(&["wedderburn", "C3", "--as", "group-algebra", "--cyclotomic", "6"]);
    assert_eq!(code(&out), 0);
}

#[test]
fn characters_json() {
    let out = hopfkit(&["characters", "S3", "--as", "group-algebra", "--json"]);
    assert_eq!(code(&out), 0);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["characters"].as_array().unwrap().len(), 3);
    assert!(v["characters"].as_array().unwrap().iter().all(|c| c["central"] == serde_json::json!(true)));
}

#[test]
fn integrals_text() {
    let out = hopfkit(&["integrals", "C2", "--as", "group-algebra"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("Λ  = [1, 1]"), "{text}");
    assert!(text.contains("λ  = [1, 0]"), "{text}");
}
