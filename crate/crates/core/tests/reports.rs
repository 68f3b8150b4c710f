//! Report round trips and counterexample replay.

use egstab::verify::{self, write_atomic, CheckReport, Suite, VerifyConfig};

fn small(suite: Suite) -> VerifyConfig {
    let mut c = VerifyConfig::defaults(suite);
    c.n_max = c.n_max.min(7);
    c
}

#[test]
fn recorded_counterexamples_replay() {
    let mut c = VerifyConfig::defaults(Suite::PropPaths);
    c.k = vec![10];
    c.r = vec![2];
    c.n_max = 6;
    let r = verify::run(&c, Some(2)).unwrap();
    assert!(!r.counterexamples.is_empty());
    assert_eq!(verify::exit_code(std::slice::from_ref(&r)), 1);
    for rec in &r.counterexamples {
        assert!(verify::recheck(rec).unwrap(), "{rec:?}");
    }
}

#[test]
fn json_and_csv_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    for suite in [Suite::ErdosGallai, Suite::Fan, Suite::Classify] {
        let r = verify::run(&small(suite), None).unwrap();
        assert!(r.counts.is_consistent());
        let path = dir.path().join(format!("{suite}.json"));
        write_atomic(&path, r.to_json().unwrap().as_bytes()).unwrap();
        let back: CheckReport = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
        assert_eq!(back, r);
        let csv = r.to_csv();
        assert_eq!(csv.lines().count(), r.grid.len() + 1);
        assert!(csv
            .lines()
            .next()
            .unwrap()
            .contains("applied,passes,failures,skips,vacuous"));
    }
    let leftovers: Vec<_> = std::fs::read_dir(dir.path()).unwrap().filter_map(|e| e.ok()).collect();
    assert_eq!(leftovers.len(), 3);
}

#[test]
fn invalid_grids_are_rejected() {
    let mut c = VerifyConfig::defaults(Suite::KopylovLuo);
    c.s = vec![];
    assert!(verify::run(&c, None).is_err());
    let mut c = VerifyConfig::defaults(Suite::Fan);
    c.r = vec![3];
    assert!(verify::run(&c, None).is_err());
}
