use malmsten::identities::*;
use malmsten::quad::{integrate_finite, QuadStatus, SingularKind};
use malmsten::specfun::cmath::{c, real};
use malmsten::specfun::C64;
use malmsten::verify::{integrate_form, QUAD_TOL};
use proptest::prelude::*;
use std::f64::consts::PI;

fn params(entry: &IdentityEntry, assignments: &[&str]) -> IdentityParameters {
    let mut p = entry.defaults;
    for a in assignments {
        p.assign(a).unwrap();
    }
    p
}

fn thm(assignments: &[&str]) -> IdentityParameters {
    params(entry("THM").unwrap(), assignments)
}

fn lhs(id: &str, p: &IdentityParameters) -> C64 {
    let e = entry(id).unwrap();
    let form = &e.lhs_forms(p).unwrap()[0];
    let r = integrate_form(form, e.klass, QUAD_TOL);
    assert_eq!(r.status, QuadStatus::Converged, "{id}: {r:?}");
    r.value
}

fn rel(a: C64, b: C64) -> f64 {
    (a - b).norm() / b.norm()
}

#[test]
fn catalog_order_and_size() {
    let ids: Vec<String> = catalog_list().into_iter().map(|s| s.id).collect();
    let mut want = vec!["THM".to_string(), "GR2".to_string()];
    want.extend((1..=29).map(|i| format!("E{i}")));
    want.extend((1..=6).map(|i| format!("K{i}")));
    want.extend((1..=12).map(|i| format!("P{i}")));
    assert_eq!(ids, want);
    assert_eq!(ids.len(), 49);
}

#[test]
fn class_filters() {
    let of = |k: Klass| -> Vec<String> { catalog_list().into_iter().filter(|s| s.klass == k).map(|s| s.id).collect() };
    assert_eq!(of(Klass::FinitePart), vec!["P9", "P10", "P12"]);
    let pv = of(Klass::Pv);
    for id in ["P1", "P3", "P6"] {
        assert!(pv.iter().any(|x| x == id), "{id} not pv");
    }
    for s in catalog_list() {
        assert_eq!(s.experimental, s.klass == Klass::FinitePart, "{}", s.id);
    }
}

#[test]
fn manifest_binds_to_registry() {
    let fresh = Catalog::from_manifest(MANIFEST).unwrap();
    assert_eq!(fresh.ids().collect::<Vec<_>>(), catalog().ids().collect::<Vec<_>>());
    // dropping the last entry breaks the one-to-one binding
    let cut = MANIFEST.rfind("[[entry]]").unwrap();
    assert!(matches!(Catalog::from_manifest(&MANIFEST[..cut]), Err(IdentityError::Manifest(_))));
    // renaming an id breaks the ordering check
    let renamed = MANIFEST.replacen("id = \"E4\"", "id = \"E99\"", 1);
    assert!(matches!(Catalog::from_manifest(&renamed), Err(IdentityError::Manifest(_))));
}

#[test]
fn anchors_are_carried() {
    assert!(entry("THM").unwrap().anchor.contains("0< Re(m) < 1"));
    assert!(entry("GR2").unwrap().anchor.contains("0< Re(v) < n"));
    assert!(entry("thm").is_ok());
    assert!(matches!(entry("E30"), Err(IdentityError::UnknownId(_))));
}

#[test]
fn gr2_elementary_value() {
    let e = entry("GR2").unwrap();
    let p = params(e, &["v=0.5", "n=1", "b=1", "gamma=4"]);
    assert!(rel(eval_rhs_gr2(&p).unwrap(), real(PI / 6.0)) < 1e-14);
}

#[test]
fn gr2_removable_limit_at_b_equals_gamma() {
    // ∫ x^{-1/2} / (1+x)^2 dx = π/2
    let e = entry("GR2").unwrap();
    let at = |d: f64| {
        let mut p = params(e, &["v=0.5", "n=1", "b=1"]);
        p.gamma = c(1.0, d);
        eval_rhs_gr2(&p).unwrap()
    };
    let (f3, f4) = (at(1e-3), at(1e-4));
    assert!((f3 - f4).norm() <= 1e-2 * f4.norm());
    assert!((f4 - PI / 2.0).norm() < 1e-3);
    let p = params(e, &["v=0.5", "n=1", "b=1", "gamma=1"]);
    assert!(matches!(e.eval_rhs(&p), Err(IdentityError::Domain { .. }) | Err(IdentityError::Degenerate { .. })));
}

#[test]
fn gr2_matches_quadrature() {
    let e = entry("GR2").unwrap();
    let p = params(e, &["v=0.7", "n=3", "b=2", "gamma=5"]);
    assert!(rel(lhs("GR2", &p), eval_rhs_gr2(&p).unwrap()) < 1e-10);
}

#[test]
fn gr2_domain_error_carries_conditions() {
    let e = entry("GR2").unwrap();
    let p = params(e, &["v=3.5", "n=3"]);
    match eval_rhs_gr2(&p) {
        Err(IdentityError::Domain { id, conditions, .. }) => {
            assert_eq!(id, "GR2");
            assert!(conditions.contains("0< Re(v) < n"));
        }
        other => panic!("expected a domain error, got {other:?}"),
    }
}

#[test]
fn theorem_limit_mode_elementary_value() {
    let p = thm(&["m=0.5", "k=0", "n=1", "a=1", "b=4", "gamma=1"]);
    assert!(rel(eval_rhs_main_theorem_limit(&p).unwrap(), real(PI / 6.0)) < 1e-8);
}

#[test]
fn theorem_matches_quadrature() {
    for point in [
        ["m=0.4+0.3I", "k=1", "n=2", "a=1", "b=1", "gamma=2"],
        ["m=0.5+0.5I", "k=0", "n=3", "a=2", "b=3", "gamma=5"],
        ["m=0.2+0.7I", "k=3", "n=1", "a=0.5", "b=2.5", "gamma=4"],
    ] {
        let p = thm(&point);
        let (l, r) = (lhs("THM", &p), eval_rhs_main_theorem(&p).unwrap());
        assert!((l - r).norm() <= 1e-9_f64.max(1e-9 * r.norm()), "{point:?}: lhs {l}, rhs {r}");
    }
}

#[test]
fn theorem_rejects_points_outside_the_strip() {
    for m in ["m=1.2+0.3I", "m=0.5-0.2I", "m=0.5+1.5I"] {
        let p = thm(&[m]);
        assert!(matches!(eval_rhs_main_theorem(&p), Err(IdentityError::Domain { .. })), "{m}");
    }
    assert!(eval_rhs_main_theorem(&thm(&["m=0.5"])).is_err());
}

#[test]
fn limit_mode_is_stable() {
    // GR2 is the theorem at k = 0, a = 1, m = v
    let e = entry("GR2").unwrap();
    assert!(e.limit_mode);
    let p = e.defaults;
    let mut q = thm(&["k=0", "a=1"]);
    q.m = p.v;
    q.n = p.n;
    q.b = p.b;
    q.gamma = p.gamma;
    let at = |d: f64| {
        let mut r = q;
        r.m = C64::new(q.m.re, d);
        eval_rhs_main_theorem(&r).unwrap()
    };
    let (f3, f4) = (at(1e-3), at(1e-4));
    assert!((f3 - f4).norm() <= 1e-2 * f4.norm(), "{f3} vs {f4}");
    let limit = eval_rhs_main_theorem_limit(&q).unwrap();
    let printed = e.eval_rhs(&p).unwrap();
    assert!((limit - printed).norm() <= e.tolerance() * printed.norm(), "{limit} vs {printed}");
    assert!(LIMIT_DELTA > 0.0);
}

#[test]
fn real_parameter_values_are_real() {
    for k in ["k=0", "k=2"] {
        let p = thm(&["m=0.5", k, "n=2", "a=1.5", "b=2", "gamma=3"]);
        let v = eval_rhs_main_theorem_limit(&p).unwrap();
        assert!(v.im.abs() <= 1e-10 * (1.0 + v.norm()), "{k}: {v}");
    }
    let e1 = entry("E1").unwrap();
    let v = e1.eval_rhs(&params(e1, &["k=2", "beta=2", "gamma=3"])).unwrap();
    assert!(v.im.abs() <= 1e-10 * (1.0 + v.norm()), "E1: {v}");
    let gr2 = entry("GR2").unwrap();
    let v = gr2.eval_rhs(&gr2.defaults).unwrap();
    assert!(v.im.abs() <= 1e-10 * (1.0 + v.norm()), "GR2: {v}");
}

#[test]
fn closed_form_constants() {
    let e29 = entry("E29").unwrap().eval_rhs(&IdentityParameters::default()).unwrap();
    assert!(e29.re.abs() <= 1e-12 && (e29.im - PI).abs() <= 1e-12, "{e29}");
    let e4 = entry("E4").unwrap().eval_rhs(&IdentityParameters::default()).unwrap();
    assert!((e4.im - PI * PI / 4.0).abs() <= 1e-12, "{e4}");
}

#[test]
fn e1_closed_form_matches_quadrature() {
    let e = entry("E1").unwrap();
    let p = params(e, &["k=2", "beta=2", "gamma=3"]);
    let (l, r) = (lhs("E1", &p), e.eval_rhs(&p).unwrap());
    assert!(rel(l, r) < 1e-10, "lhs {l}, rhs {r}");
}

#[test]
fn e2_derivative_form_needs_the_corrected_factor() {
    let e = entry("E2").unwrap();
    for n in [1usize, 2] {
        let (alpha, theta) = (2.0, 0.7);
        let p = params(e, &[&format!("n={n}"), "alpha=2", "a=2", "theta=0.7"]);
        let rhs = e.eval_rhs(&p).unwrap();
        let corrected = e2_derivative_form(alpha, theta, n).unwrap();
        let published = e2_derivative_form_as_published(alpha, theta, n).unwrap();
        assert!(rel(corrected, rhs) <= 1e-8, "n={n}: {corrected} vs {rhs}");
        assert!(rel(published, rhs) > 1e-3, "n={n}: published form unexpectedly agrees");
    }
    assert!(e2_derivative_form(2.0, 0.7, 3).is_err());
}

#[test]
fn p9_as_published_fails() {
    let e = entry("P9").unwrap();
    let l = lhs("P9", &e.defaults);
    let corrected = e.eval_rhs(&e.defaults).unwrap();
    let printed = p9_as_published().unwrap();
    assert!((l - corrected).norm() <= 1e-3 * corrected.norm(), "{l} vs {corrected}");
    assert!((printed - corrected - c(0.0, PI * PI / 4.0)).norm() < 1e-12);
    assert!((l - printed).norm() > 1e-3 * printed.norm());
}

#[test]
fn e19_printed_interval_is_off() {
    let e = entry("E19").unwrap();
    let rhs = e.eval_rhs(&e.defaults).unwrap();
    let whole = lhs("E19", &e.defaults);
    assert!(rel(whole, rhs) < 1e-10);
    let r = integrate_finite(&e19_stated_interval_integrand(), 0.0, 1.0, 1e-12);
    let gap = (r.value - rhs).norm();
    assert!((gap - 4.06e-3).abs() < 1e-5, "gap {gap:e}");
}

#[test]
fn singular_annotations() {
    let points = |id: &str| -> Vec<(f64, SingularKind)> {
        let e = entry(id).unwrap();
        e.build_lhs(&e.defaults).unwrap().singular_points().iter().map(|p| (p.location, p.kind)).collect()
    };
    assert_eq!(points("E4"), vec![(1.0, SingularKind::BranchPoint)]);
    let p1 = entry("P1").unwrap();
    let p = params(p1, &["m=0.3", "s=0.6", "k=1", "a=1", "b=2"]);
    assert!(p1.build_lhs(&p).unwrap().poles().any(|s| s.location == 2.0 && s.kind == SingularKind::SimplePole));
    // ln x/(1-x) is finite at 1: no pole there for K5
    assert!(points("K5").iter().all(|(x, k)| *x != 1.0 || !k.is_pole()));
    for id in ["P9", "P10", "P12"] {
        assert!(points(id).contains(&(1.0, SingularKind::DoublePole)), "{id}");
    }
    let e23 = entry("E23").unwrap().lhs_forms(&IdentityParameters::default()).unwrap();
    assert_eq!(e23.len(), 2);
    assert_eq!(e23[0].domain, Domain::Finite { lo: 0.0, hi: PI / 2.0 });
    assert_eq!(e23[1].domain, Domain::SemiInfinite);
}

#[test]
fn large_values_only_near_declared_points() {
    for e in &catalog().entries {
        for form in e.lhs_forms(&e.defaults).unwrap() {
            let f = &form.integrand;
            let near = |x: f64| {
                f.singular_points().iter().any(|p| {
                    if p.location == 0.0 {
                        x < 1e-3
                    } else {
                        (x - p.location).abs() <= 0.05 * p.location.max(1.0)
                    }
                })
            };
            let xs: Vec<f64> = match form.domain {
                Domain::Finite { lo, hi } => (0..4000).map(|i| lo + (hi - lo) * (i as f64 + 0.5) / 4000.0).collect(),
                Domain::SemiInfinite => (0..4000).map(|i| 10f64.powf(-8.0 + 16.0 * (i as f64 + 0.5) / 4000.0)).collect(),
            };
            for x in xs {
                let v = f.eval(x).norm();
                assert!(v <= 1e6 || near(x), "{} ({}): |f({x})| = {v:e}", e.id, form.label);
            }
        }
    }
}

#[test]
fn every_entry_evaluates_at_its_defaults() {
    for e in &catalog().entries {
        let v = e.eval_rhs(&e.defaults).unwrap_or_else(|err| panic!("{}: {err}", e.id));
        assert!(v.re.is_finite() && v.im.is_finite(), "{}", e.id);
        for name in &e.active_params {
            assert!(PARAM_NAMES.contains(&name.as_str()), "{}: {name}", e.id);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn gr2_n1_reduction(vr in 0.05..0.95f64, vi in -0.5..0.5f64, b in 0.5..5.0f64, g in 0.5..5.0f64) {
        prop_assume!((b - g).abs() > 0.1);
        let e = entry("GR2").unwrap();
        let mut p = params(e, &["n=1"]);
        p.v = c(vr, vi);
        p.b = real(b);
        p.gamma = real(g);
        let v = p.v;
        // π csc(πv) (b^{v-1} - γ^{v-1}) / (γ - b)
        let direct = PI / (PI * v).sin() * ((v - 1.0) * b.ln()).exp() / (g - b)
            - PI / (PI * v).sin() * ((v - 1.0) * g.ln()).exp() / (g - b);
        let got = eval_rhs_gr2(&p).unwrap();
        prop_assert!(rel(got, direct) <= 1e-12, "{got} vs {direct}");
    }
}
