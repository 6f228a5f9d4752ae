use std::collections::BTreeSet;

use bt_core::registry::{
    self, list_identities, replay_witness, verify, Corruption, RunContext, Selection, Status,
};
use bt_core::{ExecMode, Rational};

const LABELS: &str = include_str!("../data/labels.txt");

fn ids(v: &[&str]) -> Selection {
    Selection::Ids(v.iter().map(|s| s.to_string()).collect())
}

#[test]
fn registry_matches_the_label_table() {
    let expected: BTreeSet<(String, String)> = LABELS
        .lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| {
            let mut it = l.split_whitespace();
            (
                it.next().unwrap().to_string(),
                it.next().unwrap().to_string(),
            )
        })
        .collect();
    let actual: BTreeSet<(String, String)> = registry::registry()
        .iter()
        .map(|e| (e.id.to_string(), e.label.to_string()))
        .collect();
    let missing: Vec<_> = expected.difference(&actual).collect();
    let extra: Vec<_> = actual.difference(&expected).collect();
    assert!(
        missing.is_empty() && extra.is_empty(),
        "missing {missing:?}, extra {extra:?}"
    );
    assert!(actual.len() >= 35);
}

#[test]
fn listing_is_sorted_and_unique() {
    let all: Vec<&str> = list_identities(None).iter().map(|e| e.id).collect();
    let mut sorted = all.clone();
    sorted.sort();
    sorted.dedup();
    assert_eq!(all, sorted);
    let appell = list_identities(Some("appell"));
    assert!(!appell.is_empty());
    assert!(appell.iter().all(|e| e.module.name() == "appell"));
}

#[test]
fn bad_selections_are_configuration_errors() {
    let ctx = RunContext::default();
    assert!(verify(&ctx, &ids(&["NOPE"])).is_err());
    assert!(verify(&ctx, &Selection::Module("nope".into())).is_err());
    let mut small = RunContext::default();
    small.bounds.n_max = 3;
    assert!(verify(&small, &ids(&["BT.a"])).is_err());
    let skip = RunContext {
        skip: vec!["NOPE".into()],
        ..RunContext::default()
    };
    assert!(verify(&skip, &ids(&["BT.a"])).is_err());
}

#[test]
fn excluded_entries_are_reported_as_skipped() {
    let ctx = RunContext {
        skip: vec!["BT.b".into()],
        ..RunContext::default()
    };
    let rep = verify(&ctx, &ids(&["BT.a", "BT.b"])).unwrap();
    assert_eq!(rep.entry("BT.a").unwrap().status, Status::Pass);
    let b = rep.entry("BT.b").unwrap();
    assert_eq!(b.status, Status::Skipped);
    assert_eq!(b.reason.as_deref(), Some("excluded"));
}

#[test]
fn meixner_entry_passes_or_carries_its_gate_witness() {
    let rep = verify(&RunContext::default(), &ids(&["C.n"])).unwrap();
    let e = rep.entry("C.n").unwrap();
    match e.status {
        Status::Pass => {}
        Status::Skipped => {
            assert_eq!(e.reason.as_deref(), Some("gate-failed"));
            let w = e.witness.as_ref().expect("gate witness");
            assert_ne!(w.lhs, w.rhs);
            let again = replay_witness(&RunContext::default(), "C.n", w).unwrap();
            assert_ne!(again.lhs, again.rhs);
        }
        Status::Fail => panic!("C.n failed: {:?}", e.witness),
    }
}

#[test]
fn reports_are_deterministic() {
    let sel = ids(&["BT.a", "C.n", "P1.c", "PR.k2", "R.qto1"]);
    for mode in [ExecMode::Sequential, ExecMode::Parallel] {
        let ctx = RunContext {
            mode,
            ..RunContext::default()
        };
        let a = verify(&ctx, &sel).unwrap().without_timing().to_json();
        let b = verify(&ctx, &sel).unwrap().without_timing().to_json();
        assert_eq!(a, b);
    }
    let seq = RunContext {
        mode: ExecMode::Sequential,
        ..RunContext::default()
    };
    let par = RunContext {
        mode: ExecMode::Parallel,
        ..RunContext::default()
    };
    let a = verify(&seq, &sel).unwrap().without_timing();
    let b = verify(&par, &sel).unwrap().without_timing();
    assert_eq!(a.entries, b.entries);
}

#[test]
fn every_single_difference_corruption_is_caught_and_replays() {
    for n in 0..=8usize {
        for j in 0..=n {
            for delta in [Rational::one(), Rational::frac(-1, 7)] {
                let ctx = RunContext {
                    corruption: Some(Corruption {
                        n,
                        j,
                        delta: delta.clone(),
                    }),
                    ..RunContext::default()
                };
                let rep = verify(&ctx, &ids(&["P1.c"])).unwrap();
                let e = rep.entry("P1.c").unwrap();
                assert_eq!(
                    e.status,
                    Status::Fail,
                    "corruption at n={n} j={j} went unnoticed"
                );
                assert!(!rep.all_passed());
                let w = e.witness.as_ref().unwrap();
                let replayed = replay_witness(&ctx, "P1.c", w).unwrap();
                assert_eq!(replayed.lhs.to_string(), w.lhs);
                assert_eq!(replayed.rhs.to_string(), w.rhs);
                assert_ne!(replayed.lhs, replayed.rhs);
                // the same point is an equality once the corruption is gone
                let clean = replay_witness(&RunContext::default(), "P1.c", w).unwrap();
                assert_eq!(clean.lhs, clean.rhs);
            }
        }
    }
}

#[test]
fn json_report_has_the_documented_shape() {
    let rep = verify(&RunContext::default(), &ids(&["BT.kom"])).unwrap();
    let v: serde_json::Value = serde_json::from_str(&rep.to_json()).unwrap();
    assert_eq!(v["summary"]["passed"], 1);
    assert_eq!(v["entries"][0]["id"], "BT.kom");
    assert_eq!(v["entries"][0]["status"], "pass");
    assert_eq!(v["config"]["seed"], 42);
    let csv = rep.to_csv();
    assert!(csv.lines().count() >= 2);
    assert!(rep.to_pretty().contains("BT.kom"));
}
