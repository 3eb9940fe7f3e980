use malmsten::identities::{catalog, entry, IdentityParameters, Klass};
use malmsten::verify::*;
use proptest::prelude::*;
use std::f64::consts::PI;

const GOLDEN: &str = include_str!("../fixtures/golden.json");

#[test]
fn e4_passes() {
    let r = verify_entry("E4", &IdentityParameters::default(), None).unwrap();
    assert_eq!(r.status, Status::Pass, "{r:?}");
    assert_eq!(r.tol, 1e-8);
    assert!(r.err().unwrap() <= 1e-8);
}

#[test]
fn e29_is_i_pi() {
    let r = verify_entry("E29", &IdentityParameters::default(), None).unwrap();
    assert!(r.passed(), "{r:?}");
    let lhs = r.lhs.unwrap();
    assert!(lhs.re.abs() <= 1e-9 && (lhs.im - PI).abs() <= 1e-9, "{lhs}");
    // both printed integrals are checked
    assert!(r.checks.len() >= 2);
}

#[test]
fn p9_is_experimental_finite_part() {
    let r = verify_entry("P9", &IdentityParameters::default(), None).unwrap();
    assert!(r.passed(), "{r:?}");
    assert_eq!(r.klass, Klass::FinitePart);
    assert!(r.experimental);
    assert_eq!(r.tol, 1e-3);
}

#[test]
fn pass_iff_min_error_within_tolerance() {
    for r in verify_all(&VerifyOptions::default()) {
        match &r.status {
            Status::Skipped(reason) => panic!("{} skipped: {reason}", r.id),
            s => {
                let ok = r.checks.iter().all(|c| c.abs_err.min(c.rel_err) <= r.tol);
                assert_eq!(*s == Status::Pass, ok, "{}", r.id);
                assert_eq!(r.err().unwrap(), r.checks.iter().map(|c| c.err()).fold(0.0, f64::max), "{}", r.id);
            }
        }
    }
}

#[test]
fn verify_entry_is_idempotent() {
    for id in ["E4", "THM", "P1", "P12"] {
        let p = entry(id).unwrap().defaults;
        let (a, b) = (verify_entry(id, &p, None).unwrap(), verify_entry(id, &p, None).unwrap());
        assert!(a.same_outcome(&b), "{id}");
    }
}

#[test]
fn limit_route_is_checked_for_real_m() {
    let thm = entry("THM").unwrap();
    let mut p = thm.defaults;
    p.assign("m=0.5").unwrap();
    let r = verify_point(thm, &p, &VerifyOptions::default());
    assert!(r.passed(), "{r:?}");
    assert!(r.checks.iter().any(|c| c.route == "theorem limit mode"));
    let gr2 = entry("GR2").unwrap();
    let r = verify_point(gr2, &gr2.defaults, &VerifyOptions::default());
    assert!(r.checks.iter().any(|c| c.route == "theorem limit mode"), "{r:?}");
}

#[test]
fn validator_rejection_is_skipped() {
    let mut p = entry("GR2").unwrap().defaults;
    p.assign("v=3.5").unwrap();
    let r = verify_entry("GR2", &p, None).unwrap();
    match &r.status {
        Status::Skipped(reason) => assert!(reason.contains("0< Re(v) < n"), "{reason}"),
        other => panic!("expected skipped, got {other:?}"),
    }
    assert!(r.lhs.is_none() && r.abs_err.is_none());
    assert!(verify_entry("NOPE", &p, None).is_err());
}

#[test]
fn tolerance_overrides() {
    let mut opts = VerifyOptions::default();
    assert_eq!(opts.tolerance(Klass::Pv), 1e-6);
    opts.class_tol.insert(Klass::Pv, 1e-4);
    assert_eq!(opts.tolerance(Klass::Pv), 1e-4);
    assert_eq!(opts.tolerance(Klass::Regular), 1e-8);
    opts.tol_override = Some(1e-2);
    assert_eq!(opts.tolerance(Klass::Pv), 1e-2);
}

#[test]
fn impossible_tolerance_fails() {
    let reports = verify_all(&VerifyOptions::with_tol(Some(1e-20)));
    let tally = Tally::of(&reports);
    assert!(!tally.success());
    // only an exact zero error survives
    for r in reports.iter().filter(|r| r.passed()) {
        assert_eq!(r.err(), Some(0.0), "{}", r.id);
    }
}

#[test]
fn records_round_trip() {
    let reports = verify_all(&VerifyOptions::default());
    let text = to_records(&reports);
    let back: Vec<VerificationReport> = text.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(back, reports);
    let skipped = verify_point(entry("GR2").unwrap(), &{
        let mut p = entry("GR2").unwrap().defaults;
        p.assign("v=3.5").unwrap();
        p
    }, &VerifyOptions::default());
    let line = to_records(std::slice::from_ref(&skipped));
    let value: serde_json::Value = serde_json::from_str(line.trim()).unwrap();
    assert_eq!(value["status"], "skipped");
    assert!(value["reason"].as_str().unwrap().contains("Re(v)"));
    assert_eq!(serde_json::from_str::<VerificationReport>(line.trim()).unwrap(), skipped);
}

#[test]
fn table_marks_experimental_rows() {
    let table = to_table(&verify_all(&VerifyOptions::default()));
    assert!(table.contains("(* experimental)"));
    assert!(table.lines().any(|l| l.starts_with("P9") && l.contains('*')));
}

#[test]
fn theorem_sweep_passes() {
    let grid = Grid::default_for("THM").unwrap();
    let reports = sweep("THM", &grid, DEFAULT_SEED).unwrap();
    assert_eq!(reports.len(), 50);
    let t = Tally::of(&reports);
    assert_eq!((t.pass, t.fail, t.skipped), (50, 0, 0));
    for r in &reports {
        let p = malmsten::identities::parse_complex(r.params.split(',').next().unwrap().trim_start_matches("m=")).unwrap();
        assert!(p.re > 0.0 && p.re < 1.0 && p.im > 0.0 && p.im < 1.0, "{}", r.params);
    }
}

#[test]
fn sweeps_pass_for_other_seeds() {
    for seed in 0..6 {
        for (id, n) in [("THM", 50), ("GR2", 25)] {
            let t = Tally::of(&sweep(id, &Grid::default_for(id).unwrap(), seed).unwrap());
            assert_eq!((t.pass, t.fail, t.skipped), (n, 0, 0), "{id} seed {seed}");
        }
    }
}

#[test]
fn gr2_sweep_passes() {
    let reports = sweep("GR2", &Grid::default_for("GR2").unwrap(), DEFAULT_SEED).unwrap();
    let t = Tally::of(&reports);
    assert_eq!((t.pass, t.fail, t.skipped), (25, 0, 0));
}

#[test]
fn e1_lattice() {
    let reports = sweep("E1", &Grid::default_for("E1").unwrap(), 0).unwrap();
    assert_eq!(reports.len(), 27);
    let t = Tally::of(&reports);
    assert_eq!((t.pass, t.fail, t.skipped), (18, 0, 9));
    // skipped exactly on the diagonal β = γ
    for r in &reports {
        let beta = r.params.split(',').find_map(|kv| kv.strip_prefix("beta=")).unwrap().to_string();
        let gamma = r.params.split(',').find_map(|kv| kv.strip_prefix("gamma=")).unwrap().to_string();
        assert_eq!(matches!(r.status, Status::Skipped(_)), beta == gamma, "{}", r.params);
    }
}

#[test]
fn sweeps_are_deterministic() {
    let grid = Grid::default_for("GR2").unwrap();
    let a = sweep("GR2", &grid, 11).unwrap();
    let b = sweep("GR2", &grid, 11).unwrap();
    assert!(a.iter().zip(&b).all(|(x, y)| x.same_outcome(y)));
    let c = sweep("GR2", &grid, 12).unwrap();
    assert_ne!(a.iter().map(|r| &r.params).collect::<Vec<_>>(), c.iter().map(|r| &r.params).collect::<Vec<_>>());
}

#[test]
fn grid_syntax() {
    let g: Grid = "points=5; m.re=0.1..0.9; m.im=0.2..0.8; k=0|2".parse().unwrap();
    assert_eq!(g.points, Some(5));
    assert_eq!(g.axes.len(), 3);
    let lattice: Grid = "k=1|2;n=1|2|3".parse().unwrap();
    assert_eq!(lattice.points(entry("THM").unwrap(), 0).len(), 6);
    for bad in ["m", "points=x", "m.re=0.1..0.9", "m.re=0.9..0.1;points=2", "q=1", "v.re=0.1..0.9*n;points=2", "m.re=1|2"] {
        assert!(bad.parse::<Grid>().is_err(), "{bad}");
    }
    assert!(matches!(Grid::default_for("E4"), Err(GridError::NoDefault(_))));
}

#[test]
fn stirling_reading_is_unique() {
    let gate = stirling_gate(DEFAULT_SEED);
    assert!(gate.holds(), "{gate:?}");
    assert_eq!(gate.manifest, catalog().stirling);
    let clean = gate.tallies.iter().filter(|(_, t)| t.fail == 0 && t.skipped == 0).count();
    assert_eq!(clean, 1);
}

#[test]
fn committed_fixtures_reproduce() {
    let check = check_fixtures_text(GOLDEN).unwrap();
    assert!(check.checked >= 60);
    assert!(check.success(), "{:#?}", check.mismatches);
    let set = FixtureSet::parse(GOLDEN).unwrap();
    assert!(set.generator.precision >= 30);
    for f in &set.fixtures {
        for s in [&f.re, &f.im] {
            let digits = s.chars().take_while(|c| *c != 'e').filter(|c| c.is_ascii_digit()).count();
            assert!(s == "0" || digits >= 30, "{}: {s}", f.key);
        }
    }
}

fn perturbed(key_prefix: &str) -> String {
    let mut set = FixtureSet::parse(GOLDEN).unwrap();
    let f = set.fixtures.iter_mut().find(|f| f.key.starts_with(key_prefix)).unwrap();
    let v: f64 = f.re.parse().unwrap();
    f.re = format!("{:.30e}", v * (1.0 + 1e-6));
    serde_json::to_string(&set).unwrap()
}

#[test]
fn perturbed_fixture_is_caught() {
    for key in ["hurwitz_zeta(", "E4(", "THM("] {
        let check = check_fixtures_text(&perturbed(key)).unwrap();
        assert_eq!(check.mismatches.len(), 1, "{key}: {:#?}", check.mismatches);
        assert!(check.mismatches[0].key.starts_with(key));
        assert!(check.mismatches[0].delta.unwrap() > check.mismatches[0].tol);
    }
}

#[test]
fn empty_fixture_file() {
    for text in ["", "  \n", "{\"fixtures\": []}"] {
        let check = check_fixtures_text(text).unwrap();
        assert_eq!(check.checked, 0);
        assert!(check.success());
    }
}

#[test]
fn malformed_fixture_files() {
    let dup = r#"{"fixtures": [{"key": "gamma(z=2.5)", "re": "1", "im": "0"}, {"key": "gamma(z=2.5)", "re": "1", "im": "0"}]}"#;
    assert!(matches!(check_fixtures_text(dup), Err(FixtureError::Duplicate(_))));
    let bad = r#"{"fixtures": [{"key": "gamma(z=2.5)", "re": "1.3.3", "im": "0"}]}"#;
    assert!(matches!(check_fixtures_text(bad), Err(FixtureError::Number { .. })));
    assert!(check_fixtures_text("{").is_err());
    let unknown = r#"{"fixtures": [{"key": "nosuch(x=1)", "re": "1", "im": "0"}]}"#;
    assert_eq!(check_fixtures_text(unknown).unwrap().mismatches.len(), 1);
    assert!(check_fixtures("/nonexistent/golden.json").is_err());
}

#[test]
fn selftest_passes() {
    let cases = selftest();
    assert!(cases.len() >= 8);
    for c in &cases {
        assert!(c.pass, "{c:?}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn tightening_never_flips_fail_to_pass(
        id in prop::sample::select(vec!["E1", "E4", "E13", "GR2", "P1", "K6"]),
        loose in -12.0..-1.0f64,
        factor in 1.0..1e4f64,
    ) {
        let p = entry(id).unwrap().defaults;
        let loose = 10f64.powf(loose);
        let a = verify_entry(id, &p, Some(loose)).unwrap();
        let b = verify_entry(id, &p, Some(loose / factor)).unwrap();
        prop_assert!(!(a.failed() && b.passed()));
    }
}
