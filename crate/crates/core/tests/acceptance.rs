//! One line per primary acceptance criterion. Known red criteria are listed in
//! `KNOWN_FAILURES`; the test fails if any other entry fails or a listed one starts passing.

use malmsten::cli::DEFAULT_FIXTURES;
use malmsten::identities::{catalog, Klass};
use malmsten::specfun::cmath::real;
use malmsten::specfun::{constants, zeta_derivative};
use malmsten::verify::*;
use std::f64::consts::PI;
use std::time::Instant;

/// Entries whose published closed form is wrong (quadrature agrees with an independent oracle).
const KNOWN_FAILURES: &[&str] = &["K6"];

struct Line {
    name: &'static str,
    pass: bool,
    detail: String,
}

fn line(name: &'static str, pass: bool, detail: String) -> Line {
    println!("[{}] {name}: {detail}", if pass { "PASS" } else { "FAIL" });
    Line { name, pass, detail }
}

fn theorem_sweep() -> Line {
    let t0 = Instant::now();
    let reports = sweep("THM", &Grid::default_for("THM").unwrap(), DEFAULT_SEED).unwrap();
    let secs = t0.elapsed().as_secs_f64();
    let within = |r: &VerificationReport| {
        let scale = r.rhs.map_or(0.0, |z| z.norm());
        !r.checks.is_empty() && r.checks.iter().all(|c| c.abs_err <= (1e-7 * scale).max(1e-9))
    };
    let good = reports.iter().filter(|r| within(r)).count();
    let worst = reports.iter().filter_map(|r| r.rel_err).fold(0.0, f64::max);
    line(
        "theorem sweep",
        reports.len() == 50 && good == 50 && secs <= 120.0,
        format!("{good}/{} within max(1e-7 rel, 1e-9 abs), worst rel {worst:.1e}, {secs:.1} s", reports.len()),
    )
}

fn gr2_sweep() -> Line {
    let reports = sweep("GR2", &Grid::default_for("GR2").unwrap(), DEFAULT_SEED).unwrap();
    let good = reports.iter().filter(|r| r.passed() && r.rel_err.is_some_and(|e| e <= 1e-8)).count();
    let good_min = reports.iter().filter(|r| r.passed()).count();
    line("GR2 sweep", reports.len() == 25 && good_min == 25, format!("{good_min}/{} pass at 1e-8 ({good} by relative error alone)", reports.len()))
}

fn regular_entries(all: &[VerificationReport]) -> (Line, Vec<String>) {
    let regular: Vec<_> = all
        .iter()
        .filter(|r| matches!(r.klass, Klass::Regular | Klass::ComplexBranch) && (r.id.starts_with('E') || r.id.starts_with('K')))
        .collect();
    let failed: Vec<String> = regular.iter().filter(|r| !r.passed()).map(|r| r.id.clone()).collect();
    let e29 = all.iter().find(|r| r.id == "E29").and_then(|r| r.lhs).unwrap();
    let e29_ok = e29.re.abs() <= 1e-9 && (e29.im - PI).abs() <= 1e-9;
    let tol_ok = regular.iter().all(|r| r.tol == 1e-8);
    let detail = format!(
        "{}/{} pass at 1e-8; failing: {}; E29 = {:.3e}{:+.12}i",
        regular.len() - failed.len(),
        regular.len(),
        if failed.is_empty() { "none".into() } else { failed.join(", ") },
        e29.re,
        e29.im
    );
    let l = line("regular entries", failed.is_empty() && e29_ok && tol_ok, detail);
    assert!(e29_ok && tol_ok, "E29 or tolerance requirement broken");
    (l, failed)
}

fn class_line(all: &[VerificationReport], name: &'static str, klass: Klass, tol: f64) -> Line {
    let rows: Vec<_> = all.iter().filter(|r| r.klass == klass).collect();
    let pass = rows.iter().filter(|r| r.passed() && r.tol == tol).count();
    let experimental = rows.iter().all(|r| r.experimental == (klass == Klass::FinitePart));
    let ids: Vec<&str> = rows.iter().map(|r| r.id.as_str()).collect();
    line(name, !rows.is_empty() && pass == rows.len() && experimental, format!("{pass}/{} pass at {tol:e} ({})", rows.len(), ids.join(" ")))
}

fn specfun_suite() -> Line {
    let cases = selftest();
    let failed: Vec<_> = cases.iter().filter(|c| !c.pass).map(|c| c.name).collect();
    let a = constants().log_glaisher;
    let d0 = (zeta_derivative(real(0.0)).unwrap() - real(-0.5 * (2.0 * PI).ln())).norm();
    let d1 = (zeta_derivative(real(-1.0)).unwrap() - real(1.0 / 12.0 - a)).norm();
    line(
        "specfun invariants",
        failed.is_empty() && d0 <= 1e-10 && d1 <= 1e-10,
        format!("{}/{} cases; zeta'(0) err {d0:.1e}, zeta'(-1) err {d1:.1e}", cases.len() - failed.len(), cases.len()),
    )
}

fn fixture_regression() -> Line {
    let check = check_fixtures(DEFAULT_FIXTURES).unwrap();
    let text = std::fs::read_to_string(DEFAULT_FIXTURES).unwrap();
    let mut set = FixtureSet::parse(&text).unwrap();
    let f = set.fixtures.iter_mut().find(|f| f.key.starts_with("THM(")).unwrap();
    let v: f64 = f.re.parse().unwrap();
    f.re = format!("{:.30e}", v * (1.0 + 1e-6));
    let perturbed = check_fixtures_text(&serde_json::to_string(&set).unwrap()).unwrap();
    line(
        "fixture regression",
        check.success() && check.checked > 0 && perturbed.mismatches.len() == 1,
        format!("{} checked, {} mismatches; perturbed set: {} mismatch", check.checked, check.mismatches.len(), perturbed.mismatches.len()),
    )
}

fn stirling() -> Line {
    let gate = stirling_gate(DEFAULT_SEED);
    let tallies: Vec<String> = gate.tallies.iter().map(|(k, t)| format!("{k:?} {}/{}", t.pass, t.pass + t.fail + t.skipped)).collect();
    line(
        "stirling gate",
        gate.holds() && gate.manifest == catalog().stirling,
        format!("{}; manifest {:?}", tallies.join(", "), gate.manifest),
    )
}

#[test]
fn acceptance() {
    let (thm, gr2) = (theorem_sweep(), gr2_sweep());
    let all = verify_all(&VerifyOptions::default());
    let (regular, failed) = regular_entries(&all);
    let lines = [
        thm,
        gr2,
        regular,
        class_line(&all, "pv entries", Klass::Pv, 1e-6),
        class_line(&all, "finite-part entries (experimental)", Klass::FinitePart, 1e-3),
        specfun_suite(),
        fixture_regression(),
        stirling(),
    ];
    let red: Vec<&Line> = lines.iter().filter(|l| !l.pass).collect();
    println!("{} of {} criteria pass", lines.len() - red.len(), lines.len());
    for l in &red {
        if l.name != "regular entries" {
            panic!("{}: {}", l.name, l.detail);
        }
    }
    assert_eq!(failed, KNOWN_FAILURES, "regular-entry failures changed");
}
