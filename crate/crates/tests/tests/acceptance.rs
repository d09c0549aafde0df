//! Acceptance criteria. Each test prints one `criterion N ...: PASS|FAIL`
//! line to stderr (bypassing the test harness capture) and asserts it.
//! All comparisons are exact integer equality; the runtime budgets are
//! pinned per criterion.

use std::io::Write;
use std::time::{Duration, Instant};

use mmp_core::genfun::recursion_poly;
use mmp_core::harness::{run_check, run_suite, CheckReport, Params, Status};
use mmp_core::printed::series_corpus;

fn report(n: u32, title: &str, ok: bool, elapsed: Duration, budget: Duration, detail: &str) {
    let within = elapsed <= budget;
    let verdict = if ok && within { "PASS" } else { "FAIL" };
    let mut line = format!(
        "criterion {n} [{title}]: {verdict} ({:.2}s of {}s)",
        elapsed.as_secs_f64(),
        budget.as_secs()
    );
    if !detail.is_empty() {
        line.push_str(" -- ");
        line.push_str(detail);
    }
    let _ = writeln!(std::io::stderr(), "{line}");
    assert!(ok, "{line}");
    assert!(within, "{line}");
}

fn run_ids(ids: &[&str], overrides: &Params) -> Vec<CheckReport> {
    ids.iter()
        .map(|id| run_check(id, overrides).unwrap_or_else(|e| panic!("{id}: {e}")))
        .collect()
}

fn summarize(reports: &[CheckReport]) -> (bool, String) {
    let failed: Vec<String> = reports
        .iter()
        .filter(|r| r.status != Status::Pass)
        .map(|r| format!("{} {:?}: {}", r.id, r.status, r.witness.as_deref().unwrap_or("no cases")))
        .collect();
    let cases: u64 = reports.iter().map(|r| r.cases).sum();
    if failed.is_empty() {
        (true, format!("{} checks, {cases} cases", reports.len()))
    } else {
        (false, failed.join("; "))
    }
}

#[test]
fn criterion_1_series_regression() {
    let start = Instant::now();
    let mut entries = 0;
    let mut mismatches = Vec::new();
    for block in series_corpus().iter().filter(|b| b.family.k <= 4) {
        for e in &block.entries {
            entries += 1;
            let computed = recursion_poly(block.family, e.n);
            if computed != e.printed {
                mismatches.push(format!("{} t^{}: printed {}, computed {}", block.family, e.n, e.printed, computed));
            }
        }
    }
    let detail = if mismatches.is_empty() {
        format!("{entries} printed coefficients reproduced")
    } else {
        format!("{} of {entries} printed coefficients differ: {}", mismatches.len(), mismatches.join("; "))
    };
    report(1, "series regression", mismatches.is_empty(), start.elapsed(), Duration::from_secs(10), &detail);
}

#[test]
fn criterion_2_three_way_agreement() {
    let start = Instant::now();
    let reports = run_ids(&["C07-three-way"], &Params { n_max: Some(10), k_max: Some(4), order: None });
    let (ok, detail) = summarize(&reports);
    report(2, "three-way agreement", ok, start.elapsed(), Duration::from_secs(60), &detail);
}

#[test]
fn criterion_3_bijection_transport() {
    let start = Instant::now();
    let overrides = Params { n_max: Some(9), k_max: Some(4), order: None };
    let reports = run_ids(&["C03-dyck-heights", "C04-dyck-intervals", "C06-tree-transport"], &overrides);
    let (ok, detail) = summarize(&reports);
    report(3, "bijection transport", ok, start.elapsed(), Duration::from_secs(60), &detail);
}

#[test]
fn criterion_4_independent_oracles() {
    let start = Instant::now();
    let ids = [
        "C05-dyck-bounded",
        "C22c-e0e0-one-hill",
        "C08b-codewords",
        "C19-0020-fibonacci",
        "C25d-e020-fibonacci",
        "C22a-e0e0-fine",
        "C10-2k000-constants",
        "C14-4k000-closed-form",
        "C20-0k00-highest",
        "C12-second-highest-k000",
        "C16-00k0-highest",
        "C23b-k0e0-second",
        "C23c-k0e0-x-slice",
        "C25b-e010-top",
        "C25c-e0k0-catalan-powers",
    ];
    let reports = run_ids(&ids, &Params::default());
    let (ok, detail) = summarize(&reports);
    report(4, "independent oracles", ok, start.elapsed(), Duration::from_secs(120), &detail);
}

#[test]
fn criterion_5_map_properties() {
    let start = Instant::now();
    let ids = [
        "C24a-t-map",
        "C24b-y-map",
        "C24c-joint-swap",
        "C18-0010-palindromic",
        "C02-inverse-symmetry",
        "C26-substitution",
    ];
    let reports = run_ids(&ids, &Params { n_max: Some(9), k_max: None, order: None });
    let (ok, detail) = summarize(&reports);
    report(5, "map properties", ok, start.elapsed(), Duration::from_secs(60), &detail);
}

#[test]
fn criterion_6_typo_adjudication() {
    let start = Instant::now();
    let reports = run_ids(&["C08c-k7-numerator-typo", "C11b-k3-denominator-typo"], &Params::default());
    let (mut ok, mut detail) = summarize(&reports);
    // both verdicts must be reported
    for r in &reports {
        let note = r.note.as_deref().unwrap_or("");
        if !(note.contains("published") && note.contains("fails") && note.contains("corrected") && note.contains("matches")) {
            ok = false;
            detail = format!("{}: verdicts missing from note `{note}`", r.id);
        }
    }
    if ok {
        detail = reports.iter().map(|r| r.note.clone().unwrap_or_default()).collect::<Vec<_>>().join("; ");
    }
    report(6, "typo adjudication", ok, start.elapsed(), Duration::from_secs(10), &detail);
}

#[test]
fn criterion_7_full_verify_suite() {
    let start = Instant::now();
    let reports = run_suite(None, &Params::default()).expect("suite runs");
    let (ok, detail) = summarize(&reports);
    report(7, "full verify suite", ok, start.elapsed(), Duration::from_secs(300), &detail);
}
