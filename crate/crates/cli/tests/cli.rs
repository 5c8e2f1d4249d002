use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

use monocat_core::fixtures::{bundled_fixtures, FixtureKind};

fn monocat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_monocat")).args(args).output().expect("binary runs")
}

fn golden_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

/// The command a bundled fixture is exercised with.
fn command_for(kind: FixtureKind) -> &'static str {
    match kind {
        FixtureKind::Fusion => "validate",
        FixtureKind::Watts => "watts",
    }
}

#[test]
fn golden_reports_for_every_bundled_fixture() {
    let bless = std::env::var_os("MONOCAT_BLESS").is_some();
    for e in bundled_fixtures().unwrap() {
        let out = monocat(&["--format", "json", "--seed", "0", command_for(e.kind), &e.name]);
        let expected_code = if e.mutant { 1 } else { 0 };
        assert_eq!(out.status.code(), Some(expected_code), "{}: {}", e.name, String::from_utf8_lossy(&out.stderr));
        let path = golden_dir().join(format!("{}.json", e.name));
        if bless {
            fs::write(&path, stdout(&out)).unwrap();
        }
        let golden = fs::read_to_string(&path).unwrap_or_else(|_| panic!("missing golden file for {}", e.name));
        assert_eq!(stdout(&out), golden, "{} differs from its golden report", e.name);
    }
}

#[test]
fn json_reports_are_byte_identical_across_runs() {
    let runs: [&[&str]; 3] = [
        &["--format", "json", "--seed", "11", "watts", "graded-f3-z2-cocycle"],
        &["--format", "json", "--seed", "11", "watts", "graded-f2-dual-truncated"],
        &["--format", "json", "--seed", "11", "bound", "ising", "sigma"],
    ];
    for args in runs {
        let a = monocat(args);
        let b = monocat(args);
        assert_eq!(a.stdout, b.stdout, "{args:?}");
        assert_eq!(a.status.code(), Some(0));
    }
}

#[test]
fn seed_and_schema_are_echoed() {
    let out = monocat(&["--format", "json", "--seed", "42", "watts", "strict-f3-z2", "--checks", "embedding"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["schema"], 1);
    assert_eq!(v["seed"], 42);
    assert_eq!(v["report"]["data"]["seed"], 42);
    assert!(v["report"]["checks"].as_array().unwrap().iter().all(|c| c["name"].as_str().unwrap().starts_with("embedding/")));
    let text = stdout(&monocat(&["--seed", "42", "validate", "z3"]));
    assert!(text.trim_end().ends_with("seed: 42"));
}

#[test]
fn embed_prints_the_block_matrix() {
    let cases: [(&str, &[[u64; 2]; 2]); 3] = [("tau", &[[0, 1], [1, 1]]), ("1", &[[1, 0], [0, 1]]), ("tau+tau", &[[0, 2], [2, 2]])];
    for (expr, expected) in cases {
        let out = monocat(&["--format", "json", "embed", "fibonacci", expr]);
        assert_eq!(out.status.code(), Some(0));
        let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
        let got: Vec<Vec<u64>> = serde_json::from_value(v["matrix"]["entries"].clone()).unwrap();
        assert_eq!(got, expected.iter().map(|r| r.to_vec()).collect::<Vec<_>>(), "{expr}");
    }
}

#[test]
fn bound_tables_match_known_sequences() {
    let rows = |args: &[&str]| -> Vec<(u64, u64)> {
        let out = monocat(args);
        assert_eq!(out.status.code(), Some(0), "{args:?}");
        let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
        v["rows"].as_array().unwrap().iter().map(|r| (r["end_dim"].as_u64().unwrap(), r["bound"].as_u64().unwrap())).collect()
    };
    assert_eq!(
        rows(&["--format", "json", "bound", "fibonacci", "tau", "--n-max", "5"]),
        vec![(1, 4), (2, 16), (5, 64), (13, 256), (34, 1024)]
    );
    assert_eq!(rows(&["--format", "json", "bound", "z2", "g1", "--n-max", "6"]).iter().map(|r| r.0).collect::<Vec<_>>(), vec![1; 6]);
    assert_eq!(rows(&["--format", "json", "bound", "ising", "sigma", "--n-max", "4"]).iter().map(|r| r.0).collect::<Vec<_>>(), vec![1, 2, 4, 8]);
}

#[test]
fn exit_codes_follow_the_contract() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    fs::write(&bad, "{ \"simples\": [").unwrap();
    let bad = bad.to_str().unwrap();
    assert_eq!(monocat(&["validate", bad]).status.code(), Some(2));
    assert_eq!(monocat(&["watts", bad]).status.code(), Some(2));
    assert_eq!(monocat(&["validate", "no-such-fixture"]).status.code(), Some(2));
    assert_eq!(monocat(&["validate", "z2-broken-unit"]).status.code(), Some(1));
    assert_eq!(monocat(&["embed", "fibonacci", "sigma"]).status.code(), Some(1));
    assert_eq!(monocat(&["embed", "fibonacci", "tau+"]).status.code(), Some(2));
    assert_eq!(monocat(&["bound", "fibonacci", "zero"]).status.code(), Some(1));
    assert_eq!(monocat(&["watts", "fibonacci"]).status.code(), Some(2));
    assert_eq!(monocat(&["watts", "strict-f3-z2", "--checks", "pentagons"]).status.code(), Some(2));
    assert_eq!(monocat(&["watts", "graded-f3-z2-cocycle-flip", "--checks", "axioms"]).status.code(), Some(1));
    assert_eq!(monocat(&["report"]).status.code(), Some(0));
}

#[test]
fn mutated_cocycle_reports_a_pentagon_witness() {
    let out = monocat(&["--format", "json", "watts", "graded-f3-z2-cocycle-flip", "--checks", "axioms,T"]);
    assert_eq!(out.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let checks = v["report"]["checks"].as_array().unwrap();
    let pent = checks.iter().find(|c| c["name"] == "T/t_pentagon").unwrap();
    assert!(pent["failures"].as_u64().unwrap() > 0);
    let w = &pent["witnesses"][0];
    assert_eq!(w["objects"], serde_json::json!(["R", "R", "R", "R"]));
    assert_ne!(w["lhs"], w["rhs"]);
}

#[test]
fn cocycle_fixture_notes_a_non_identity_associator() {
    let out = monocat(&["--format", "json", "watts", "graded-f3-z2-cocycle", "--checks", "T"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["report"]["data"]["T/alpha_prime_rrr_is_identity"], false);
}
