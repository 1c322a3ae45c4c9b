//! Golden cases shared by the golden tests and the acceptance runner.

#![allow(dead_code)]

use std::path::{Path, PathBuf};

use loewy_cli::{run_args, Outcome};

pub fn crate_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

/// `(golden file stem, arguments after the program name)`. Paths are
/// relative to the crate directory.
pub const GOLDEN_CASES: &[(&str, &[&str])] = &[
    ("series_chain4", &["series", "tests/fixtures/chain4.lattice"]),
    ("series_d12", &["series", "tests/fixtures/d12.lattice"]),
    ("series_n5", &["series", "tests/fixtures/n5.lattice"]),
    ("series_mixed", &["series", "tests/fixtures/mixed.lattice"]),
    ("series_boolean3_human", &["--human", "series", "tests/fixtures/boolean3.lattice"]),
    ("props_n5", &["props", "tests/fixtures/n5.lattice"]),
    ("props_m3", &["props", "tests/fixtures/m3.lattice"]),
    ("props_d12", &["props", "tests/fixtures/d12.lattice"]),
    ("props_mixed", &["props", "tests/fixtures/mixed.lattice"]),
    ("validate_point", &["validate", "tests/fixtures/point.lattice"]),
    ("validate_bowtie", &["validate", "tests/fixtures/invalid/bowtie.lattice"]),
    ("validate_covers_only", &["validate", "tests/fixtures/invalid/covers_only.lattice"]),
    ("validate_cycle", &["validate", "tests/fixtures/invalid/cycle.lattice"]),
    ("procedural_germ_model_series", &["procedural", "germ_model", "--series", "--cap", "ω·2"]),
    ("procedural_omega_series", &["procedural", "omega_plus_one_chain", "--series"]),
    ("procedural_divisibility_series", &["procedural", "divisibility", "--series"]),
    ("procedural_omega_desc", &["procedural", "omega_plus_one_chain", "--witness", "desc", "--bound", "3"]),
    ("procedural_divisibility_asc", &["procedural", "divisibility", "--witness", "asc", "--bound", "8"]),
    ("procedural_germ_capped", &["procedural", "germ_model", "--series", "--cap", "10"]),
    ("instance_subgroups_2_4", &["instance", "subgroups", "2", "4"]),
    ("instance_ideals_12", &["instance", "ideals", "12"]),
    ("enumerate_5", &["enumerate", "--n", "5"]),
    ("enumerate_7_modular_count", &["enumerate", "--n", "7", "--filter", "modular", "--count-only"]),
    ("laws_4", &["laws", "--n", "4"]),
    ("laws_5_expect", &["laws", "--n", "5", "--expect-violations", "--show", "1"]),
];

/// Runs the binary logic in-process from the crate directory.
pub fn run_case(args: &[&str]) -> Outcome {
    let dir = crate_dir();
    let owned: Vec<String> = std::iter::once("loewy".to_string())
        .chain(args.iter().map(|a| {
            if a.starts_with("tests/") {
                dir.join(a).display().to_string()
            } else {
                a.to_string()
            }
        }))
        .collect();
    let mut out = run_args(owned);
    // reports echo file paths; keep them relative for stable goldens
    let prefix = format!("{}/", dir.display());
    out.stdout = out.stdout.replace(&prefix, "");
    out
}

/// Golden text: exit code line, then standard output.
pub fn golden_text(out: &Outcome) -> String {
    format!("exit {}\n{}", out.code, out.stdout)
}

pub fn golden_path(stem: &str) -> PathBuf {
    crate_dir().join("tests/golden").join(format!("{stem}.txt"))
}

pub fn fixture_files() -> Vec<PathBuf> {
    let root = crate_dir().join("tests/fixtures");
    let mut files: Vec<PathBuf> = std::fs::read_dir(&root)
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|e| e == "lattice"))
        .collect();
    files.sort();
    files
}

pub fn read(path: &Path) -> String {
    std::fs::read_to_string(path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}
