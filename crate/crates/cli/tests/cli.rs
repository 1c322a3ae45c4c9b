//! The binary itself: exit codes, streams, and round trips.

mod common;

use std::process::Command;

use common::{crate_dir, fixture_files, read};
use loewy_cli::{exit, parse, parse_many, print_many};

fn loewy(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_loewy"))
        .args(args)
        .current_dir(crate_dir())
        .output()
        .expect("binary runs")
}

fn json(out: &std::process::Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn series_on_the_four_chain() {
    let out = loewy(&["series", "tests/fixtures/chain4.lattice"]);
    assert_eq!(out.status.code(), Some(exit::OK));
    let v = json(&out);
    assert_eq!(v["radical_series"], serde_json::json!(["1", "y", "x", "0"]));
    assert_eq!(v["radical_length"], 3);
}

#[test]
fn germ_model_series() {
    let out = loewy(&["procedural", "germ_model", "--series"]);
    assert_eq!(out.status.code(), Some(exit::OK));
    let v = json(&out);
    let entries = v["entries"].as_array().unwrap();
    let n = entries.len();
    assert_eq!(entries[n - 2], serde_json::json!(["ω", "F"]));
    assert_eq!(entries[n - 1], serde_json::json!(["ω+1", "F"]));
    assert_eq!(v["status"]["StabilizedAt"]["ordinal"], "ω");
    assert_eq!(v["hyper_radical"], "F");
    assert_eq!(v["hyper_radical_nonzero"], true);
}

#[test]
fn exit_codes_by_category() {
    let code = |args: &[&str]| loewy(args).status.code();
    assert_eq!(code(&["validate", "tests/fixtures/invalid/covers_only.lattice"]), Some(exit::PARSE));
    assert_eq!(code(&["validate", "tests/fixtures/invalid/duplicate.lattice"]), Some(exit::PARSE));
    assert_eq!(code(&["validate", "tests/fixtures/invalid/unknown.lattice"]), Some(exit::PARSE));
    assert_eq!(code(&["validate", "tests/fixtures/missing.lattice"]), Some(exit::PARSE));
    assert_eq!(code(&["validate", "tests/fixtures/invalid/cycle.lattice"]), Some(exit::VALIDATION));
    assert_eq!(code(&["validate", "tests/fixtures/invalid/bowtie.lattice"]), Some(exit::VALIDATION));
    assert_eq!(code(&["validate", "tests/fixtures/invalid/two_tops.lattice"]), Some(exit::VALIDATION));
    assert_eq!(code(&["laws", "--n", "6"]), Some(exit::OK));
    assert_eq!(code(&["laws", "--n", "6", "--expect-violations"]), Some(exit::LAW_VIOLATION));
    assert_eq!(code(&["enumerate", "--n", "9"]), Some(exit::LIMIT));
    assert_eq!(code(&["procedural", "germ_model", "--series", "--cap", "ω"]), Some(exit::LIMIT));
    assert_eq!(code(&["bogus"]), Some(exit::PARSE));
}

#[test]
fn errors_carry_code_and_message() {
    let out = loewy(&["validate", "tests/fixtures/invalid/unknown.lattice"]);
    let v = json(&out);
    assert_eq!(v["error"]["code"], "unknown_element");
    assert_eq!(v["error"]["line"], 3);
    assert!(v["error"]["message"].as_str().unwrap().contains("\"c\""));

    let out = loewy(&["--human", "validate", "tests/fixtures/invalid/cycle.lattice"]);
    assert!(out.stdout.is_empty());
    assert!(String::from_utf8_lossy(&out.stderr).starts_with("error[not_a_poset]"));
}

#[test]
fn fixtures_round_trip() {
    for path in fixture_files() {
        let docs = parse_many(&read(&path)).unwrap();
        assert_eq!(parse_many(&print_many(&docs)).unwrap(), docs, "{}", path.display());
    }
}

#[test]
fn enumeration_export_is_parseable() {
    let out = loewy(&["enumerate", "--n", "6", "--filter", "modular"]);
    let docs = parse_many(&String::from_utf8(out.stdout).unwrap()).unwrap();
    let count = loewy(&["enumerate", "--n", "6", "--filter", "modular", "--count-only"]);
    assert_eq!(json(&count)["count"], docs.len());
    for doc in docs {
        let l = doc.to_lattice().unwrap();
        assert!(loewy_core::properties::is_modular(&l));
    }
}

#[test]
fn instance_output_validates() {
    let out = loewy(&["instance", "divisors", "12"]);
    let doc = parse(&String::from_utf8(out.stdout).unwrap()).unwrap();
    let reference = parse(&read(&crate_dir().join("tests/fixtures/d12.lattice"))).unwrap();
    assert!(loewy_core::is_isomorphic(&doc.to_lattice().unwrap(), &reference.to_lattice().unwrap()));
}
