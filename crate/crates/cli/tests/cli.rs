use std::process::{Command, Output};

use capelli_core::verify::{CheckReport, Status};

fn capelli(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_capelli")).args(args).output().expect("binary runs")
}

fn json_report(args: &[&str]) -> (CheckReport, i32) {
    let mut full = vec!["verify"];
    full.extend_from_slice(args);
    full.extend_from_slice(&["--format", "json"]);
    let out = capelli(&full);
    let stdout = String::from_utf8(out.stdout).unwrap();
    let report = CheckReport::from_json(stdout.trim()).unwrap_or_else(|e| panic!("{e}: {stdout:?}"));
    (report, out.status.code().unwrap())
}

#[test]
fn identity_passes_with_exit_zero() {
    let (r, code) = json_report(&["--check", "identity", "--algebra", "sp", "--N", "2", "--k", "1", "--element", "D.sp"]);
    assert_eq!(code, 0);
    assert_eq!(r.status, Status::Pass);
    assert_eq!(r.witness, None);
    assert_eq!((r.n, r.k), (Some(2), Some(1)));
}

#[test]
fn noncentral_generator_fails_with_witness() {
    let (r, code) = json_report(&["--check", "central", "--algebra", "gl", "--N", "2", "--element", "E[1,1]"]);
    assert_eq!(code, 1);
    assert_eq!(r.status, Status::Fail);
    assert_eq!(r.witness.as_deref(), Some("[E[1,1], E[1,2]] = E[1,2]"));
}

#[test]
fn eigenvalue_checks() {
    let (r, code) = json_report(&[
        "--check", "eigenvalue", "--algebra", "gl", "--N", "3", "--k", "2", "--element", "C.gl.k", "--lambda", "2,1,0",
    ]);
    assert_eq!((r.status, code), (Status::Pass, 0));
    let (r, _) = json_report(&["--check", "eigenvalue", "--algebra", "o-split", "--N", "2", "--element", "C.oS0", "--lambda", "2"]);
    assert_eq!(r.status, Status::Pass);
    let (r, code) = json_report(&["--check", "eigenvalue", "--algebra", "o-id", "--N", "2", "--element", "C.o1"]);
    assert_eq!((r.status, code), (Status::Skipped, 0));
    assert!(r.witness.is_some());
}

#[test]
fn lemma_and_oracle_checks() {
    let (r, code) = json_report(&["--check", "lemma", "--lemma", "lem5.2", "--N", "2"]);
    assert_eq!((r.status, code), (Status::Pass, 0));
    assert_eq!(r.algebra, None);
    let args = ["--check", "oracle", "--algebra", "gl", "--N", "3", "--seed", "5"];
    let (a, _) = json_report(&args);
    let (b, _) = json_report(&args);
    assert_eq!(a.status, Status::Pass);
    assert_eq!((a.terms, a.witness), (b.terms, b.witness));
}

#[test]
fn pfaffian_with_custom_form() {
    let dir = std::env::temp_dir().join(format!("capelli-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("s.csv");
    std::fs::write(&path, "2,1,0\n1,1,0\n0,0,3\n").unwrap();
    let (r, code) = json_report(&[
        "--check", "pfaffian", "--algebra", "o-split", "--N", "3", "--k", "1", "--form-matrix", path.to_str().unwrap(),
    ]);
    assert_eq!((r.status, code), (Status::Pass, 0));
    let (r, _) = json_report(&["--check", "hafnian", "--algebra", "sp", "--N", "2", "--k", "1"]);
    assert_eq!(r.status, Status::Pass);
    std::fs::remove_dir_all(dir).ok();
}

#[test]
fn invalid_parameters_exit_two() {
    let out = capelli(&["verify", "--check", "identity", "--algebra", "sp", "--N", "3", "--k", "1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("even"));
    let out = capelli(&["verify", "--check", "lemma", "--lemma", "lem9.9"]);
    assert_eq!(out.status.code(), Some(2));
    let out = capelli(&["verify", "--check", "nonsense"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn text_output_and_list() {
    let out = capelli(&["verify", "--check", "central", "--algebra", "sp", "--N", "4", "--k", "2", "--element", "D.sp"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("PASS central sp N=4 k=2 D.sp"), "{text}");
    let out = capelli(&["list"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("D'.sp") && text.contains("lem5.12"));
}

#[test]
fn u_rational_smoke_mode() {
    let (r, code) = json_report(&["--check", "identity", "--algebra", "gl", "--N", "3", "--element", "C.gl", "--u-rational", "-3/2"]);
    assert_eq!((r.status, code), (Status::Pass, 0));
}
