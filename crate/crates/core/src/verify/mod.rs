//! LHS-vs-RHS comparison, parameter sweeps, golden fixtures and the specfun self-test.

mod fixtures;
mod selftest;
mod sweep;

pub use fixtures::{check_fixtures, check_fixtures_text, FixtureCheck, FixtureError, FixtureMismatch, FixtureSet, GeneratorInfo, GoldenFixture};
pub use selftest::{selftest, SelfTestCase};
pub use sweep::{stirling_gate, sweep, sweep_with, Grid, GridAxis, GridError, StirlingGate, DEFAULT_SEED};

use crate::identities::{catalog, entry, Domain, IdentityEntry, IdentityError, IdentityParameters, Klass, LhsForm};
use crate::quad::{integrate_finite_with, integrate_indented_with, integrate_semi_infinite_with, QuadConfig, QuadResult, QuadStatus};
use crate::specfun::{StirlingKind, C64};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::time::Instant;

/// Accuracy requested from the quadrature routes.
pub const QUAD_TOL: f64 = 1e-12;

/// Run-wide settings for verification.
#[derive(Debug, Clone, PartialEq)]
pub struct VerifyOptions {
    /// Replaces every class tolerance.
    pub tol_override: Option<f64>,
    /// Replaces the tolerance of one class.
    pub class_tol: BTreeMap<Klass, f64>,
    pub quad: QuadConfig,
    pub stirling: StirlingKind,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self { tol_override: None, class_tol: BTreeMap::new(), quad: QuadConfig::default(), stirling: catalog().stirling }
    }
}

impl VerifyOptions {
    pub fn with_tol(tol_override: Option<f64>) -> Self {
        Self { tol_override, ..Self::default() }
    }

    pub fn tolerance(&self, klass: Klass) -> f64 {
        self.tol_override.or_else(|| self.class_tol.get(&klass).copied()).unwrap_or_else(|| klass.tolerance())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "status", content = "reason", rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    Skipped(String),
}

impl Status {
    pub fn label(&self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped(_) => "skipped",
        }
    }
}

/// One independent route compared against the closed form.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RouteCheck {
    pub route: String,
    pub value: C64,
    pub abs_err: f64,
    pub rel_err: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub quad_status: Option<QuadStatus>,
}

impl RouteCheck {
    fn new(route: impl Into<String>, value: C64, rhs: C64, quad_status: Option<QuadStatus>) -> Self {
        let abs_err = (value - rhs).norm();
        let rel_err = if rhs.norm() > 0.0 {
            abs_err / rhs.norm()
        } else if abs_err == 0.0 {
            0.0
        } else {
            f64::INFINITY
        };
        Self { route: route.into(), value, abs_err, rel_err, quad_status }
    }

    pub fn err(&self) -> f64 {
        self.abs_err.min(self.rel_err)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub id: String,
    /// Canonical `name=value` encoding of the active parameters.
    pub params: String,
    pub klass: Klass,
    pub experimental: bool,
    /// Value of the first integral form.
    pub lhs: Option<C64>,
    pub rhs: Option<C64>,
    /// Errors of the worst route; absent when skipped.
    pub abs_err: Option<f64>,
    pub rel_err: Option<f64>,
    pub tol: f64,
    #[serde(flatten)]
    pub status: Status,
    pub checks: Vec<RouteCheck>,
    pub nodes: usize,
    pub runtime_ms: u64,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// `min(abs_err, rel_err)` of the worst route.
    pub fn err(&self) -> Option<f64> {
        Some(self.abs_err?.min(self.rel_err?))
    }

    pub fn failed(&self) -> bool {
        self.status == Status::Fail
    }

    /// Equality ignoring `runtime_ms`.
    pub fn same_outcome(&self, other: &Self) -> bool {
        let mut a = self.clone();
        a.runtime_ms = other.runtime_ms;
        &a == other
    }

    fn skipped(e: &IdentityEntry, params: String, tol: f64, reason: String, started: Instant) -> Self {
        Self {
            id: e.id.clone(),
            params,
            klass: e.klass,
            experimental: e.klass.is_experimental(),
            lhs: None,
            rhs: None,
            abs_err: None,
            rel_err: None,
            tol,
            status: Status::Skipped(reason),
            checks: Vec::new(),
            nodes: 0,
            runtime_ms: started.elapsed().as_millis() as u64,
        }
    }
}

/// Integrates one LHS form by the route its class needs: finite intervals are
/// split at interior singular points, pole classes go around the poles from above.
pub fn integrate_form(form: &LhsForm, klass: Klass, tol: f64) -> QuadResult {
    integrate_form_with(form, klass, tol, &QuadConfig::default())
}

pub fn integrate_form_with(form: &LhsForm, klass: Klass, tol: f64, cfg: &QuadConfig) -> QuadResult {
    let f = &form.integrand;
    match form.domain {
        Domain::Finite { lo, hi } => {
            let mut cuts = vec![lo];
            let mut inner: Vec<f64> =
                f.singular_points().iter().map(|p| p.location).filter(|&x| x > lo && x < hi).collect();
            inner.sort_by(f64::total_cmp);
            inner.dedup();
            cuts.extend(inner);
            cuts.push(hi);
            cuts.windows(2)
                .map(|w| integrate_finite_with(f, w[0], w[1], tol, cfg))
                .reduce(QuadResult::merge)
                .expect("at least one panel")
        }
        Domain::SemiInfinite if klass.has_poles() => integrate_indented_with(f, tol, cfg),
        Domain::SemiInfinite => integrate_semi_infinite_with(f, tol, cfg),
    }
}

/// Verifies one entry at one parameter point with the manifest's Stirling reading.
pub fn verify_entry(id: &str, p: &IdentityParameters, tol_override: Option<f64>) -> Result<VerificationReport, IdentityError> {
    Ok(verify_point(entry(id)?, p, &VerifyOptions::with_tol(tol_override)))
}

/// As [`verify_entry`] for an already resolved entry.
pub fn verify_point(e: &IdentityEntry, p: &IdentityParameters, opts: &VerifyOptions) -> VerificationReport {
    let started = Instant::now();
    let tol = opts.tolerance(e.klass);
    let params = p.encode(&e.active_params);
    let forms = match e.lhs_forms(p) {
        Ok(f) => f,
        Err(err) => return VerificationReport::skipped(e, params, tol, err.to_string(), started),
    };
    let rhs = match e.eval_rhs_with(p, opts.stirling) {
        Ok(r) => r,
        Err(err) => return VerificationReport::skipped(e, params, tol, err.to_string(), started),
    };

    let mut checks = Vec::new();
    let mut nodes = 0;
    let mut lhs = None;
    for form in &forms {
        let q = integrate_form_with(form, e.klass, QUAD_TOL, &opts.quad);
        nodes += q.nodes;
        if q.status == QuadStatus::SuspectedDivergence || !(q.value.re.is_finite() && q.value.im.is_finite()) {
            let reason = format!("quadrature of {} reported {}", form.label, q.status.name());
            return VerificationReport::skipped(e, params, tol, reason, started);
        }
        lhs.get_or_insert(q.value);
        checks.push(RouteCheck::new(format!("quad: {}", form.label), q.value, rhs, Some(q.status)));
    }
    if let Some(limit) = limit_route(e, p, rhs) {
        checks.push(limit);
    }

    let worst = checks
        .iter()
        .max_by(|a, b| a.err().total_cmp(&b.err()))
        .expect("at least one route");
    let status = if checks.iter().all(|c| c.err() <= tol) { Status::Pass } else { Status::Fail };
    VerificationReport {
        id: e.id.clone(),
        params,
        klass: e.klass,
        experimental: e.klass.is_experimental(),
        lhs,
        rhs: Some(rhs),
        abs_err: Some(worst.abs_err),
        rel_err: Some(worst.rel_err),
        tol,
        status,
        nodes,
        runtime_ms: started.elapsed().as_millis() as u64,
        checks,
    }
}

/// Real-m cross-check against the theorem's Richardson limit, where it applies.
fn limit_route(e: &IdentityEntry, p: &IdentityParameters, rhs: C64) -> Option<RouteCheck> {
    use crate::identities::eval_rhs_main_theorem_limit;
    let q = match e.id.as_str() {
        "THM" if p.m.im == 0.0 => *p,
        "GR2" if e.limit_mode && p.v.im == 0.0 && p.v.re > 0.0 && p.v.re < 1.0 => {
            let mut q = *p;
            q.m = p.v;
            q.k = 0.0;
            q.a = C64::new(1.0, 0.0);
            q
        }
        _ => return None,
    };
    let value = eval_rhs_main_theorem_limit(&q).ok()?;
    Some(RouteCheck::new("theorem limit mode", value, rhs, None))
}

/// Every catalog entry at its default point, in catalog order.
pub fn verify_all(opts: &VerifyOptions) -> Vec<VerificationReport> {
    catalog().entries.par_iter().map(|e| verify_point(e, &e.defaults, opts)).collect()
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Tally {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
}

impl Tally {
    pub fn of(reports: &[VerificationReport]) -> Self {
        let mut t = Tally::default();
        for r in reports {
            match r.status {
                Status::Pass => t.pass += 1,
                Status::Fail => t.fail += 1,
                Status::Skipped(_) => t.skipped += 1,
            }
        }
        t
    }

    /// A run succeeds iff nothing failed.
    pub fn success(&self) -> bool {
        self.fail == 0
    }
}

/// One JSON record per line.
pub fn to_records(reports: &[VerificationReport]) -> String {
    reports
        .iter()
        .map(|r| serde_json::to_string(r).expect("reports serialize") + "\n")
        .collect()
}

fn fmt_c(z: Option<C64>) -> String {
    match z {
        Some(z) => format!("{:+.12e}{:+.12e}i", z.re, z.im),
        None => "-".into(),
    }
}

/// Human-readable table with a tally line.
pub fn to_table(reports: &[VerificationReport]) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{:<5} {:<14} {:<40} {:<40} {:>9} {:>7} {:>7} {:>7}  params",
        "id", "class", "lhs", "rhs", "err", "tol", "status", "ms"
    );
    for r in reports {
        let klass = if r.experimental { format!("{}*", r.klass.name()) } else { r.klass.name().to_string() };
        let err = r.err().map_or("-".to_string(), |e| format!("{e:.2e}"));
        let _ = writeln!(
            out,
            "{:<5} {:<14} {:<40} {:<40} {:>9} {:>7.0e} {:>7} {:>7}  {}",
            r.id,
            klass,
            fmt_c(r.lhs),
            fmt_c(r.rhs),
            err,
            r.tol,
            r.status.label(),
            r.runtime_ms,
            r.params
        );
        if let Status::Skipped(reason) = &r.status {
            let _ = writeln!(out, "      skipped: {reason}");
        }
    }
    let t = Tally::of(reports);
    let _ = writeln!(out, "{} pass, {} fail, {} skipped (* experimental)", t.pass, t.fail, t.skipped);
    out
}
