use mmp_core::harness::{all_passed, check_ids, run_check, run_suite, Params, Status};
use mmp_core::Error;

#[test]
fn suite_keeps_registration_order() {
    let reports = run_suite(Some("constants"), &Params::default()).unwrap();
    let ids: Vec<&str> = reports.iter().map(|r| r.id.as_str()).collect();
    let registered: Vec<&str> = check_ids().into_iter().filter(|id| ids.contains(id)).collect();
    assert_eq!(ids, registered);
    assert!(reports.iter().all(|r| r.tags.iter().any(|t| t == "constants")));
    assert!(all_passed(&reports));
}

#[test]
fn filter_matches_id_fragments() {
    let reports = run_suite(Some("C24"), &Params::default()).unwrap();
    assert_eq!(reports.len(), 3);
    assert!(run_suite(Some("nonexistent"), &Params::default()).unwrap().is_empty());
}

#[test]
fn report_json_shape() {
    let r = run_check("C09-k1000-coefficients", &Params::default()).unwrap();
    let v = serde_json::to_value(&r).unwrap();
    for key in ["id", "params", "status", "witness", "runtimeMillis", "paperAnchor"] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
    assert_eq!(v["status"], "pass");
    assert_eq!(v["params"]["nMax"], 12);
    assert!(v["params"].get("order").is_none());
}

#[test]
fn overrides_only_touch_used_ranges() {
    let p = Params { n_max: Some(5), k_max: Some(2), order: Some(6) };
    let r = run_check("C12-second-highest-k000", &p).unwrap();
    assert_eq!(r.params, Params { n_max: Some(5), k_max: Some(2), order: None });
    assert_eq!(r.status, Status::Pass);
}

#[test]
fn empty_range_is_skipped() {
    let r = run_check("C09-k1000-coefficients", &Params { n_max: Some(0), ..Params::default() }).unwrap();
    assert_eq!(r.status, Status::Skipped);
    assert_eq!(r.cases, 0);
}

#[test]
fn limits_and_unknown_ids() {
    assert!(matches!(
        run_check("C01-catalan-count", &Params { n_max: Some(1_000_000), ..Params::default() }),
        Err(Error::ResourceLimit { .. })
    ));
    assert!(matches!(
        run_check("C22a-e0e0-fine", &Params { order: Some(65), ..Params::default() }),
        Err(Error::ResourceLimit { .. })
    ));
    assert!(matches!(run_check("C99", &Params::default()), Err(Error::UnknownCheck(_))));
}

#[test]
fn failures_carry_witnesses() {
    let reports = run_suite(None, &Params::default()).unwrap();
    for r in &reports {
        assert_eq!(r.status == Status::Fail, r.witness.is_some(), "{}", r.id);
    }
}
