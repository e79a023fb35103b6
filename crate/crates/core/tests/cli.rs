//! End-to-end tests of the command-line interface: exit codes, file
//! rejection messages, counterexample reporting, and report determinism.

use std::path::PathBuf;
use std::process::Command;
use std::sync::Arc;

use ydcheck::hopf::builtins::sweedler4;
use ydcheck::hopf::HopfAutomorphism;
use ydcheck::io::{self, AutRef, ComponentSpec};
use ydcheck::kernel::Field;
use ydcheck::ydmod::build_h_alpha_beta;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_ydcheck"))
}

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
}

#[test]
fn valid_run_exits_zero() {
    let out = bin()
        .args(["hopf", "--builtin", "c2", "--builtin", "sweedler4"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0), "{:?}", out);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("hopf.mul-assoc"));
    assert!(text.contains("OK:"));
}

#[test]
fn missing_file_exits_two() {
    let out = bin()
        .args(["hopf", "--input", "/nonexistent/thing.json"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("error:"), "{err}");
}

#[test]
fn unknown_suite_and_bad_field_exit_two() {
    let out = bin().args(["frobnicate"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = bin()
        .args(["hopf", "--builtin", "c2", "--field", "R"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn non_coassociative_file_is_rejected_naming_the_axiom() {
    // suites other than hopf require valid algebras up front
    let out = bin()
        .args(["yd", "--input"])
        .arg(fixture("c2_bad_comul.json"))
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("hopf.comul-coassoc"), "{err}");
    assert!(err.contains("(g)"), "{err}");
}

#[test]
fn hopf_suite_reports_the_corrupted_antipode_as_a_failure() {
    let out = bin()
        .args(["hopf", "--input"])
        .arg(fixture("sweedler4_bad_antipode.json"))
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("FAIL"), "{text}");
    assert!(text.contains("hopf.antipode-left"), "{text}");
    assert!(text.contains("at (x)"), "{text}");
}

#[test]
fn mislabeled_module_fails_with_the_documented_counterexample() {
    // an honest untwisted module, relabeled into the anti-twisted component
    let h = Arc::new(sweedler4(Field::Q).unwrap());
    let id = HopfAutomorphism::identity(&h);
    let honest = build_h_alpha_beta(&h, &id, &id).unwrap();
    let mut file = io::serialize_module(&honest);
    file.component = ComponentSpec {
        alpha: AutRef::SPower { s_power: 2 },
        beta: AutRef::Name("id".into()),
    };
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("mislabeled.json");
    std::fs::write(&path, serde_json::to_string_pretty(&file).unwrap()).unwrap();

    let out = bin()
        .args(["yd", "--builtin", "sweedler4", "--module"])
        .arg(&path)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1), "{out:?}");
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("yd.compat"), "{text}");
    assert!(text.contains("at (h=x, m=1)"), "{text}");
}

#[test]
fn json_reports_are_byte_identical_across_runs_and_threads() {
    let base = ["all", "--builtin", "c2", "--report", "json"];
    let run = |extra: &[&str]| {
        let mut cmd = bin();
        cmd.args(base).args(extra);
        let out = cmd.output().unwrap();
        assert_eq!(out.status.code(), Some(0));
        out.stdout
    };
    let a = run(&[]);
    let b = run(&[]);
    assert_eq!(a, b);
    let c = run(&["--parallel", "2"]);
    assert_eq!(a, c);
    let s1 = run(&["--sample", "3"]);
    let s2 = run(&["--sample", "3"]);
    assert_eq!(s1, s2, "sampling must be seeded and reproducible");
}

#[test]
fn max_dim_refusal_is_reported() {
    let out = bin()
        .args(["double", "--builtin", "s3", "--max-dim", "10"])
        .output()
        .unwrap();
    // refusal surfaces as a failed suite.refused check
    assert_eq!(out.status.code(), Some(1));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("suite.refused"), "{text}");
}

#[test]
fn prime_field_run_works() {
    let out = bin()
        .args(["hopf", "--builtin", "c3", "--field", "Fp:7"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0), "{out:?}");
}
