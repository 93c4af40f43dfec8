use std::collections::{BTreeMap, BTreeSet};
use std::path::{Path, PathBuf};

use idealgraph::suite::{registry_ids, run_suite, Scope, SuiteOptions, Verdict};

fn corpus_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/data/corpus")
}

fn corpus_copy() -> tempfile::TempDir {
    let dir = tempfile::tempdir().unwrap();
    for entry in std::fs::read_dir(corpus_dir()).unwrap() {
        let p = entry.unwrap().path();
        std::fs::copy(&p, dir.path().join(p.file_name().unwrap())).unwrap();
    }
    dir
}

#[test]
fn boolean_sweep_covers_every_family_and_size() {
    let report = run_suite(&Scope::Boolean { lo: 2, hi: 8 }, &SuiteOptions::default()).unwrap();
    assert_eq!(report.failed, 0, "{}", report.to_table());
    let mut sizes: BTreeMap<&str, BTreeSet<String>> = BTreeMap::new();
    for c in report.checks.iter().filter(|c| c.verdict == Verdict::Pass) {
        sizes.entry(c.id).or_default().insert(c.instance.clone());
    }
    let full = sizes.values().filter(|s| s.len() >= 7).count();
    assert!(full >= 12, "only {full} checks pass at all seven sizes");
}

#[test]
fn corpus_expectations_hold_and_groups_are_vacuous() {
    let report = run_suite(&Scope::Corpus(corpus_dir()), &SuiteOptions::default()).unwrap();
    assert!(report.all_passed(), "{}", report.to_table());
    assert!(report.ids().contains("corpus-expectation"));
    let cyclic: Vec<_> = report
        .checks
        .iter()
        .filter(|c| c.instance.contains("cyclic3"))
        .collect();
    assert!(!cyclic.is_empty());
    assert!(cyclic
        .iter()
        .any(|c| c.verdict == Verdict::Vacuous && c.computed.contains("empty graph")));
    assert!(cyclic.iter().all(|c| c.verdict != Verdict::Fail));
}

#[test]
fn a_corrupted_expectation_fails_exactly_once() {
    let dir = corpus_copy();
    let target = dir.path().join("null3.txt");
    let text = std::fs::read_to_string(&target).unwrap();
    let line = text
        .lines()
        .find(|l| l.starts_with("# expect:"))
        .unwrap()
        .to_string();
    let (key, value) = line["# expect:".len()..].split_once('=').unwrap();
    let corrupted = format!(
        "# expect:{key}= {}",
        value
            .trim()
            .parse::<u64>()
            .map_or("999".into(), |v| (v + 100).to_string())
    );
    std::fs::write(&target, text.replacen(&line, &corrupted, 1)).unwrap();

    let report = run_suite(
        &Scope::Corpus(dir.path().to_path_buf()),
        &SuiteOptions::default(),
    )
    .unwrap();
    assert_eq!(report.failed, 1, "{}", report.to_table());
    let bad = report
        .checks
        .iter()
        .find(|c| c.verdict == Verdict::Fail)
        .unwrap();
    assert_eq!(bad.id, "corpus-expectation");
    assert!(bad.instance.contains("null3"));
}

#[test]
fn missing_corpus_is_an_error() {
    let dir = tempfile::tempdir().unwrap();
    assert!(run_suite(
        &Scope::Corpus(dir.path().join("absent")),
        &SuiteOptions::default()
    )
    .is_err());
}

#[test]
fn reports_are_deterministic_and_sorted_by_registry() {
    let opts = SuiteOptions {
        order4_samples: 50,
        ..SuiteOptions::default()
    };
    let a = run_suite(&Scope::Semigroups, &opts).unwrap();
    let b = run_suite(&Scope::Semigroups, &opts).unwrap();
    assert_eq!(a.to_json_string(), b.to_json_string());
    assert_eq!(a.failed, 0, "{}", a.to_table());

    let order = registry_ids();
    let idx: Vec<usize> = a
        .checks
        .iter()
        .map(|c| order.iter().position(|id| *id == c.id).unwrap())
        .collect();
    assert!(idx.windows(2).all(|w| w[0] <= w[1]));

    let other = run_suite(&Scope::Semigroups, &SuiteOptions { seed: 7, ..opts }).unwrap();
    assert_eq!(other.failed, 0);
}

#[test]
fn timings_are_opt_in() {
    let scope = Scope::Boolean { lo: 3, hi: 3 };
    let plain = run_suite(&scope, &SuiteOptions::default()).unwrap();
    assert!(plain.checks.iter().all(|c| c.elapsed_ms.is_none()));
    let timed = run_suite(
        &scope,
        &SuiteOptions {
            timings: true,
            ..SuiteOptions::default()
        },
    )
    .unwrap();
    assert!(timed.checks.iter().all(|c| c.elapsed_ms.is_some()));
    let json: serde_json::Value = serde_json::from_str(&plain.to_json_string()).unwrap();
    assert_eq!(json["checks"].as_array().unwrap().len(), plain.checks.len());
}
