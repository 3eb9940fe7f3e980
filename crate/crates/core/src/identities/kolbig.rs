//! Power-times-log integrals of Kölbig type and two log-log companions.

use super::forms::{arg1, arg2, int_at_least, lerch_exponent, log_integrand, off_cut, phi, qsum, re_between, sign, HCache};
use super::{Def, IdentityError, IdentityParameters, LhsForm};
use crate::quad::{IntegrandSpec, SingularKind};
use crate::specfun::cmath::{c, ln, neg_one_pow, pow, powf, real, sqrt, I};
use crate::specfun::{
    binomial, constants, factorial, pochhammer, polylog, riemann_zeta, StirlingKind, C64,
};
use std::f64::consts::{PI, SQRT_2};

type R = Result<C64, IdentityError>;

fn none(_: &IdentityParameters) -> Result<(), String> {
    Ok(())
}

fn rf(x: f64, n: usize) -> f64 {
    pochhammer(real(x), n).re
}

/// `Σ e^{iπ(2+j-l+m)} (2+m)^{p-h-l} (2iπ)^{1-h+k} g^{e} C(p,l) C(p-l,h)/j!
/// Φ(2+m, h-k, A(g)) (1-h+k)_h` over `j < jn`.
fn kform(m: C64, k: usize, jn: usize, g: C64, gexp: C64, kind: StirlingKind) -> R {
    let kf = k as f64;
    let m2 = m + 2.0;
    let ag = arg1(g);
    let gp = pow(g, gexp);
    let mut phis = HCache::new(|h| phi(m2, h as f64 - kf, ag));
    qsum(jn, kind, |j, p, l, h| {
        let poch = rf(1.0 - h as f64 + kf, h);
        if poch == 0.0 {
            return Ok(C64::new(0.0, 0.0));
        }
        Ok((I * PI * (2.0 + j as f64 - l as f64 + m)).exp()
            * m2.powi(p as i32 - h as i32 - l as i32)
            * c(0.0, 2.0 * PI).powi(1 - h as i32 + k as i32)
            * gp
            * (binomial(p, l) * binomial(p - l, h) / factorial(j))
            * phis.get(h)?
            * poch)
    })
}

fn power_log_lhs(label: &'static str, m: C64, k: i32, shift: C64, npow: C64) -> Vec<LhsForm> {
    let f = IntegrandSpec::new(move |x: C64| pow(x, m) * pow(x + shift, -npow) * ln(x).powi(k), "principal powers")
        .with_singular(0.0, SingularKind::Algebraic);
    vec![LhsForm::semi_infinite(label, f)]
}

// K1, K2

fn k1_check(p: &IdentityParameters) -> Result<(), String> {
    int_at_least(p.k, "k", 0)?;
    let n = int_at_least(p.n, "n", 1)?;
    re_between(p.m, "m", -1.0, n as f64 - 1.0)?;
    lerch_exponent(p.m, "m")?;
    off_cut(p.gamma, "γ")
}

fn k1_lhs(p: &IdentityParameters) -> Vec<LhsForm> {
    power_log_lhs("x^m log^k x / (x+γ)^n", p.m, p.k as i32, p.gamma, real(p.n))
}

fn k1_rhs(p: &IdentityParameters, kind: StirlingKind) -> R {
    kform(p.m, p.k as usize, p.n as usize, p.gamma, 1.0 + p.m - p.n, kind)
}

fn k2_check(p: &IdentityParameters) -> Result<(), String> {
    int_at_least(p.k, "k", 0)?;
    let n = int_at_least(p.n, "n", 1)?;
    re_between(p.m, "m", -1.0, n as f64 - 1.0)?;
    lerch_exponent(p.m, "m")?;
    off_cut(-p.gamma, "-γ")
}

fn k2_lhs(p: &IdentityParameters) -> Vec<LhsForm> {
    power_log_lhs("x^m log^k x / (x-γ)^n", p.m, p.k as i32, -p.gamma, real(p.n))
}

fn k2_rhs(p: &IdentityParameters, kind: StirlingKind) -> R {
    let g = -p.gamma;
    kform(p.m, p.k as usize, p.n as usize, g, 1.0 + p.m - p.n, kind)
}

// K3: half-integer n

fn k3_check(p: &IdentityParameters) -> Result<(), String> {
    int_at_least(p.k, "k", 0)?;
    let half = p.n - 0.5;
    if half.fract() != 0.0 || half < 1.0 {
        return Err(format!("n = {} must be a half-integer >= 3/2", p.n));
    }
    re_between(p.m, "m", -1.0, p.n - 1.5)?;
    lerch_exponent(p.m, "m")?;
    off_cut(p.beta, "β")
}

fn k3_lhs(p: &IdentityParameters) -> Vec<LhsForm> {
    power_log_lhs("x^m (x+β)^{1/2-n} log^k x", p.m, p.k as i32, p.beta, real(p.n - 0.5))
}

fn k3_rhs(p: &IdentityParameters, kind: StirlingKind) -> R {
    let jn = (p.n - 1.5).floor() as usize + 1;
    kform(p.m, p.k as usize, jn, p.beta, 1.5 + p.m - p.n, kind)
}

// K4

fn k4_check(p: &IdentityParameters) -> Result<(), String> {
    int_at_least(p.k, "k", 0)?;
    let n = int_at_least(p.n, "n", 1)?;
    re_between(p.m, "m", -1.0, n as f64 - 1.0)?;
    re_between(p.s, "s", -1.0, n as f64 - 1.0)?;
    lerch_exponent(p.m, "m")?;
    lerch_exponent(p.s, "s")?;
    off_cut(p.a, "a")?;
    off_cut(p.gamma, "γ")
}

fn k4_lhs(p: &IdentityParameters) -> Vec<LhsForm> {
    let (m, s, k, n, a, g) = (p.m, p.s, p.k as i32, p.n as i32, p.a, p.gamma);
    let f = IntegrandSpec::new(
        move |x: C64| (pow(x, s) - pow(x, m)) * ln(a * x).powi(k) / (x + g).powi(n),
        "principal powers and log(ax)",
    )
    .with_singular(0.0, SingularKind::Algebraic);
    vec![LhsForm::semi_infinite("(x^s - x^m) log^k(ax) / (x+γ)^n", f)]
}

fn k4_rhs(p: &IdentityParameters, kind: StirlingKind) -> R {
    let (m, s, a, g) = (p.m, p.s, p.a, p.gamma);
    let (k, n) = (p.k as usize, p.n as usize);
    let kf = k as f64;
    let ag = arg2(a, g);
    let (m2, s2) = (m + 2.0, s + 2.0);
    let (sm1, ss) = (neg_one_pow(1.0 + m), neg_one_pow(s));
    let mut pm = HCache::new(|h| phi(m, h as f64 - kf, ag));
    let mut ps = HCache::new(|h| phi(s, h as f64 - kf, ag));
    qsum(n, kind, |j, pp, l, h| {
        let poch = rf(1.0 - h as f64 + kf, h);
        if poch == 0.0 {
            return Ok(C64::new(0.0, 0.0));
        }
        let (hi, hl) = (h as i32, (h + l) as i32);
        Ok(I * sign(j as i64 - l as i64)
            * I.powi(k as i32 - hi)
            * m2.powi(-hl)
            * (2.0 * PI).powi(1 - hi + k as i32)
            * s2.powi(-hl)
            * g.powi(1 - n as i32)
            * (binomial(pp, l) * binomial(pp - l, h) / factorial(j))
            * (sm1 * m2.powi(pp as i32) * s2.powi(hl) * pow(g, m) * pm.get(h)?
                + ss * m2.powi(hl) * s2.powi(pp as i32) * pow(g, s) * ps.get(h)?)
            * poch)
    })
}

// K5, K6

fn k5_lhs(_: &IdentityParameters) -> Vec<LhsForm> {
    let f = log_integrand("principal log(log x)", |x, lx, xm1| {
        // log(x)/(1-x) → -1 at x = 1
        let q = if xm1.norm() == 0.0 { real(-1.0) } else { -lx / xm1 };
        q * ln(lx) / sqrt(x)
    })
    .with_singular(0.0, SingularKind::Algebraic)
    .with_singular(1.0, SingularKind::BranchPoint);
    vec![LhsForm::semi_infinite("log x log(log x) / ((1-x) √x)", f)]
}

fn k5_rhs(_: &IdentityParameters, _: StirlingKind) -> R {
    let glaisher = constants().log_glaisher.exp();
    let den = c(0.0, 4.0 * 2f64.cbrt() * std::f64::consts::E * PI);
    Ok(PI * PI * ln(real(glaisher.powi(12)) / den))
}

fn k6_lhs(_: &IdentityParameters) -> Vec<LhsForm> {
    let f = log_integrand("principal √(log x), log(log x)", |x, lx, xm1| sqrt(lx) * ln(lx) / (-xm1 * sqrt(x)))
    .with_singular(0.0, SingularKind::Algebraic)
    .with_singular(1.0, SingularKind::Algebraic);
    vec![LhsForm::semi_infinite("√(log x) log(log x) / ((1-x) √x)", f)]
}

fn k6_rhs(_: &IdentityParameters, _: StirlingKind) -> R {
    let z = riemann_zeta(real(-0.5))?;
    let li = polylog(real(-0.5), -1.0)?;
    let inner = (2.0 * SQRT_2 - 1.0) * (PI - c(0.0, 2.0) * (2.0 * PI).ln()) * z + c(0.0, 2.0) * li;
    Ok(c(1.0, 1.0) * powf(real(PI), 1.5) * inner)
}

pub(crate) static DEFS: [Def; 6] = [
    Def::new("K1", k1_check, k1_lhs, k1_rhs),
    Def::new("K2", k2_check, k2_lhs, k2_rhs),
    Def::new("K3", k3_check, k3_lhs, k3_rhs),
    Def::new("K4", k4_check, k4_lhs, k4_rhs),
    Def::new("K5", none, k5_lhs, k5_rhs),
    Def::new("K6", none, k6_lhs, k6_rhs),
];
