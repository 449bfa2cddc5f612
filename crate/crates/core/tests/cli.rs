//! The `monres` binary: exit codes, determinism and document round-trips.

use std::process::{Command, Output};

use monres::io::{emit_json, parse_report, ReportDocument};

fn monres(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_monres")).args(args).output().unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

const M2: &str = r#"{"n":2,"generators":[[2,0],[1,1],[0,2]]}"#;
const CI: &str = r#"{"n":2,"generators":[[2,0],[0,2]]}"#;

#[test]
fn exit_codes() {
    assert_eq!(code(&monres(&["certify", "--inline", M2])), 0);
    assert_eq!(code(&monres(&["certify", "--inline", CI])), 1);
    assert_eq!(code(&monres(&["bs", "--inline", CI])), 0);
    assert_eq!(code(&monres(&["closure", "--inline", CI])), 0);
    assert_eq!(code(&monres(&["residue", "--inline", M2, "--complex", "scarf"])), 0);
    // malformed, mismatched, non-Artinian, unsupported dimension
    assert_eq!(code(&monres(&["certify", "--inline", "{\"n\":2"])), 2);
    assert_eq!(code(&monres(&["certify", "--inline", r#"{"n":2,"generators":[[1,2,3]]}"#])), 2);
    assert_eq!(code(&monres(&["certify", "--inline", r#"{"n":2,"generators":[[1,0]]}"#])), 2);
    assert_eq!(code(&monres(&["fan", "--inline", r#"{"n":4,"generators":[[1,0,0,0],[0,1,0,0],[0,0,1,0],[0,0,0,1]]}"#])), 2);
    assert_eq!(code(&monres(&["corpus", "--bound", "9"])), 2);
    assert_eq!(code(&monres(&["certify", "--ideal", "/nonexistent/ideal.json"])), 2);
}

#[test]
fn output_is_deterministic_and_round_trips() {
    for sub in ["closure", "rees", "resolve", "residue", "certify", "fan", "bs"] {
        let a = monres(&[sub, "--inline", M2]);
        let b = monres(&[sub, "--inline", M2]);
        assert_eq!(a.stdout, b.stdout, "{sub}");
        let text = String::from_utf8(a.stdout).unwrap();
        let doc = parse_report(&text).unwrap();
        assert_eq!(emit_json(&doc), text.trim_end(), "{sub}");
    }
    let out = monres(&["corpus", "--bound", "2", "--check", "duality"]);
    assert_eq!(code(&out), 0);
    match parse_report(&String::from_utf8(out.stdout).unwrap()).unwrap() {
        ReportDocument::Corpus(r) => assert_eq!((r.total, r.passed), (5, 5)),
        other => panic!("unexpected report {other:?}"),
    }
}

#[test]
fn file_input_and_notice() {
    let dir = std::env::temp_dir().join(format!("monres-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("ideal.json");
    std::fs::write(&path, r#"{"n":2,"generators":[[2,0],[2,2],[0,3]],"name":"redundant"}"#).unwrap();
    let out = monres(&["rees", "--ideal", path.to_str().unwrap(), "--format", "text"]);
    assert_eq!(code(&out), 0);
    assert!(String::from_utf8_lossy(&out.stderr).contains("reduced 3"));
    assert!(String::from_utf8_lossy(&out.stdout).contains("(3,2)"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn timing_is_a_separate_section() {
    let out = monres(&["certify", "--inline", M2, "--timing"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(v["timing"]["elapsed_micros"].is_u64());
    assert_eq!(v["closed"], serde_json::Value::Bool(true));
}
