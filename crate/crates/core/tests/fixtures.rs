use std::fs;

use monocat_core::fixtures::{bundled_fixtures, fixtures_dir, load_path, CheckSet, Fixture, FixtureKind, Mutation};
use monocat_core::fusion::{bundled, bundled_names};
use monocat_core::report::CoherenceReport;

fn watts_report(name: &str) -> CoherenceReport {
    let path = fixtures_dir().join(if name.contains("-flip") || name.contains("-negate") || name.contains("-wrong") || name.contains("nonbif") { "mutants" } else { "watts" }).join(format!("{name}.json"));
    match load_path(&path).unwrap() {
        Fixture::Watts(w) => w.run(&CheckSet::all(), 1),
        Fixture::Fusion(_) => panic!("{name} is fusion data"),
    }
}

fn failing(rep: &CoherenceReport) -> Vec<String> {
    rep.checks().filter(|c| c.kind == monocat_core::report::CheckKind::Required && !c.passed()).map(|c| c.name.clone()).collect()
}

#[test]
fn fusion_files_match_the_built_in_tables() {
    let dir = fixtures_dir().join("fusion");
    for name in bundled_names() {
        let expected = bundled(name).unwrap().to_json();
        let path = dir.join(format!("{name}.json"));
        if std::env::var_os("MONOCAT_BLESS").is_some() {
            fs::write(&path, &expected).unwrap();
        }
        assert_eq!(fs::read_to_string(&path).unwrap(), expected, "{name}");
    }
}

#[test]
fn every_bundled_file_loads() {
    let all = bundled_fixtures().unwrap();
    assert!(all.iter().filter(|e| e.kind == FixtureKind::Fusion && !e.mutant).count() >= 9);
    assert_eq!(all.iter().filter(|e| e.kind == FixtureKind::Watts && !e.mutant).count(), 5);
    for e in all {
        assert!(load_path(&e.path).is_ok(), "{}", e.name);
    }
}

#[test]
fn unmutated_structures_pass() {
    for name in ["strict-f3-z2", "graded-f3-z2-trivial", "graded-f3-z2-cocycle", "strict-f2-dual", "graded-f2-dual-truncated"] {
        let rep = watts_report(name);
        assert!(rep.passed(), "{name}: {:?}", failing(&rep));
        assert_eq!(rep.data["seed"], 1);
    }
}

#[test]
fn truncated_dual_numbers_are_not_flat() {
    let rep = watts_report("graded-f2-dual-truncated");
    let probe = rep.check("embedding/left_exact").unwrap();
    assert_eq!((probe.instances, probe.failures), (1, 1));
    assert!(rep.check("embedding/right_exact").unwrap().passed());
    for name in ["strict-f2-dual", "strict-f3-z2", "graded-f3-z2-cocycle"] {
        let rep = watts_report(name);
        assert!(rep.check("embedding/left_exact").unwrap().passed(), "{name}");
    }
}

#[test]
fn mutants_fail_where_expected() {
    let cases = [
        ("graded-f3-z2-cocycle-flip", "axioms/pentagon"),
        ("graded-f3-z2-cocycle-flip", "T/t_pentagon"),
        ("graded-f3-z2-negate-xi", "functor/unit_left"),
        ("graded-f3-z2-wrong-db", "rigidity/snake_left"),
        ("strict-f3-z2-nonbifunctorial", "T/ran"),
    ];
    for (name, check) in cases {
        let rep = watts_report(name);
        let c = rep.check(check).unwrap_or_else(|| panic!("{name}: no {check}"));
        assert!(!c.passed(), "{name}: {check} passed");
        assert!(!c.witnesses.is_empty());
    }
    let rep = watts_report("strict-f3-z2-nonbifunctorial");
    let w = &rep.check("T/ran").unwrap().witnesses[0];
    assert!(w.detail.contains("do not commute"), "{}", w.detail);
}

#[test]
fn mutation_is_echoed() {
    let rep = watts_report("graded-f3-z2-cocycle-flip");
    let m: Mutation = serde_json::from_value(rep.data["mutation"].clone()).unwrap();
    assert_eq!(m, Mutation::CocycleFlip { entry: [0, 1, 1] });
}

#[test]
fn fusion_mutants_are_rejected() {
    for name in ["fibonacci-broken-reciprocity", "z2-broken-unit"] {
        let path = fixtures_dir().join("mutants").join(format!("{name}.json"));
        let fd = match load_path(&path) {
            Ok(Fixture::Fusion(fd)) => fd,
            Ok(_) => panic!("{name} is not fusion data"),
            Err(e) => panic!("{name}: {e}"),
        };
        let rep = fd.validate();
        assert!(!rep.passed(), "{name}");
    }
    for name in bundled_names() {
        assert!(bundled(name).unwrap().validate().passed(), "{name}");
    }
}
