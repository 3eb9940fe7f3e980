//! Worked examples of the general result: log powers, log-log integrands and
//! their special cases.

use super::forms::{
    arg1, arg2, distinct, gam, int_at_least, lerch_exponent, lgam, log_integrand, off_cut, phi, qsum, real_positive,
    re_between, sign, HCache,
};
use super::{Def, IdentityError, IdentityParameters, LhsForm};
use crate::quad::{IntegrandSpec, SingularKind};
use crate::specfun::cmath::{c, exprel, ln, neg_one_pow, pow, powf, real, sqrt, I};
use crate::specfun::{
    binomial, constants, factorial, gamma, harmonic, hurwitz_zeta, lerch_phi_s_derivative, pochhammer, polygamma,
    riemann_zeta, zeta_derivative, RationalExponent, StirlingKind, C64,
};
use std::f64::consts::{PI, SQRT_2};

type R = Result<C64, IdentityError>;

fn hz(s: f64, a: C64) -> R {
    Ok(hurwitz_zeta(real(s), a)?)
}

fn zr(s: f64) -> R {
    Ok(riemann_zeta(real(s))?)
}

fn gz(z: C64) -> R {
    Ok(gamma(z)?)
}

fn psi(z: C64) -> R {
    Ok(polygamma(0, z)?)
}

fn lnr(x: f64) -> C64 {
    ln(real(x))
}

fn rf(x: f64, n: usize) -> f64 {
    pochhammer(real(x), n).re
}

fn cc(p: usize, l: usize, h: usize) -> f64 {
    binomial(p, l) * binomial(p - l, h)
}

fn none(_: &IdentityParameters) -> Result<(), String> {
    Ok(())
}

/// `log(log x)` integrand with the branch point at 1 declared.
fn ll_spec<F>(f: F) -> IntegrandSpec
where
    F: Fn(C64) -> C64 + Send + Sync + 'static,
{
    log_integrand("principal log(log x); upper lip for x < 1", move |x, lx, _| f(x) * ln(lx))
        .with_singular(1.0, SingularKind::BranchPoint)
}

fn ll_form<F>(label: &'static str, f: F) -> Vec<LhsForm>
where
    F: Fn(C64) -> C64 + Send + Sync + 'static,
{
    vec![LhsForm::semi_infinite(label, ll_spec(f))]
}

// E1

fn e1_check(p: &IdentityParameters) -> Result<(), String> {
    if !(p.k > -1.0) {
        return Err(format!("k = {} must exceed -1", p.k));
    }
    off_cut(p.beta, "β")?;
    off_cut(p.gamma, "γ")?;
    distinct(p.beta, p.gamma, "β and γ")
}

fn e1_lhs(p: &IdentityParameters) -> Vec<LhsForm> {
    let (k, b, g) = (p.k, p.beta, p.gamma);
    let mut f = IntegrandSpec::new(move |x: C64| powf(ln(x), k) / ((x + b) * (x + g)), "principal log^k x");
    if k.fract() != 0.0 {
        f = f.with_singular(1.0, SingularKind::Algebraic);
    }
    vec![LhsForm::semi_infinite("log^k x / ((x+β)(x+γ))", f)]
}

fn e1_rhs(p: &IdentityParameters, _: StirlingKind) -> R {
    let (k, b, g) = (p.k, p.beta, p.gamma);
    Ok(pow(c(0.0, 2.0 * PI), real(1.0 + k)) * (-hz(-k, arg1(b))? + hz(-k, arg1(g))?) / (b - g))
}

// E2

fn e2_check(p: &IdentityParameters) -> Result<(), String> {
    int_at_least(p.n, "n", 1)?;
    if !(p.alpha > 0.0) {
        return Err(format!("α = {} must be positive", p.alpha));
    }
    let ac = p.a.re * p.theta.cos();
    if p.a.im != 0.0 {
        return Err("a must be real".into());
    }
    if ac < 0.0 && ac * ac >= p.alpha * p.alpha {
        return Err("x² + 2a x cos θ + α² vanishes on (0, ∞)".into());
    }
    if (ac * ac - p.alpha * p.alpha).abs() < 1e-12 * p.alpha * p.alpha {
        return Err("a² cos² θ = α² (double root)".into());
    }
    Ok(())
}

fn e2_lhs(p: &IdentityParameters) -> Vec<LhsForm> {
    let (n, al, a, th) = (p.n as i32, p.alpha, p.a.re, p.theta);
    let f = IntegrandSpec::new(move |x: C64| ln(x).powi(n) / (x * x + al * al + 2.0 * a * x * th.cos()), "log^n x");
    vec![LhsForm::semi_infinite("log^n x / (x² + α² + 2a x cos θ)", f)]
}

fn e2_rhs(p: &IdentityParameters, _: StirlingKind) -> R {
    let (n, al, a, th) = (p.n, p.alpha, p.a.re, p.theta);
    let d = sqrt(real(a * a - 2.0 * al * al + a * a * (2.0 * th).cos()));
    let ac = real(a * th.cos());
    let arg = |z: C64| (PI - I * ln(z)) / (2.0 * PI);
    Ok(powf(real(2.0), 0.5 + n) * c(0.0, PI).powi(1 + n as i32) / d
        * (hz(-n, arg(ac - d / SQRT_2))? - hz(-n, arg(ac + d / SQRT_2))?))
}

// E3 to E8

fn e3_check(p: &IdentityParameters) -> Result<(), String> {
    off_cut(p.beta, "β")?;
    off_cut(p.gamma, "γ")?;
    distinct(p.beta, p.gamma, "β and γ")
}

fn e3_lhs(p: &IdentityParameters) -> Vec<LhsForm> {
    let (b, g) = (p.beta, p.gamma);
    ll_form("log(log x) / ((x+β)(x+γ))", move |x| 1.0 / ((x + b) * (x + g)))
}

fn e3_rhs(p: &IdentityParameters, _: StirlingKind) -> R {
    let (b, g) = (p.beta, p.gamma);
    let ratio = powf(b, 0.25) * gz(arg1(b))? / (powf(g, 0.25) * gz(arg1(g))?);
    Ok((lnr(2.0 * PI) * ln(b / g) + c(0.0, 2.0 * PI) * ln(ratio)) / (b - g))
}

fn e4_lhs(_: &IdentityParameters) -> Vec<LhsForm> {
    ll_form("log(log x) / (1+x²)", |x| 1.0 / (1.0 + x * x))
}

fn e4_rhs(_: &IdentityParameters, _: StirlingKind) -> R {
    Ok(PI / 2.0 * ln(c(0.0, 2.0 * PI) * gam(0.75)?.powi(2) / gam(0.25)?.powi(2)))
}

fn e5_lhs(_: &IdentityParameters) -> Vec<LhsForm> {
    ll_form("log(log x) / (1+x+x²)", |x| 1.0 / (1.0 + x + x * x))
}

fn e5_rhs(_: &IdentityParameters, _: StirlingKind) -> R {
    let w = c(0.0, PI / 3.0).exp();
    Ok(PI / 3f64.sqrt() * ln(4.0 * w * PI.powf(5.0 / 3.0) / gam(1.0 / 6.0)?.powi(2)))
}

fn e6_lhs(_: &IdentityParameters) -> Vec<LhsForm> {
    ll_form("log(log x) / (1-x+x²)", |x| 1.0 / (1.0 - x + x * x))
}

fn e6_log() -> R {
    Ok(ln(4.0 * PI * PI * gam(5.0 / 6.0)?.powi(3) / gam(1.0 / 6.0)?.powi(3)))
}

fn e6_rhs(_: &IdentityParameters, _: StirlingKind) -> R {
    Ok(2.0 * PI / (3.0 * 3f64.sqrt()) * (c(0.0, PI) + e6_log()?))
}

fn e7_lhs(_: &IdentityParameters) -> Vec<LhsForm> {
    // zero below 1, so the semi-infinite route covers (1, ∞)
    let f = log_integrand("log(log x) real on (1, ∞); zero-extended below 1", |x, lx, xm1| {
        if xm1.re < 0.0 {
            C64::new(0.0, 0.0)
        } else {
            ln(lx) / (1.0 - x + x * x)
        }
    })
    .with_singular(1.0, SingularKind::BranchPoint);
    vec![LhsForm::semi_infinite("log(log x) / (1-x+x²) on (1, ∞)", f)]
}

fn e7_rhs(_: &IdentityParameters, _: StirlingKind) -> R {
    Ok(PI / (3.0 * 3f64.sqrt()) * e6_log()?)
}

fn e8_check(p: &IdentityParameters) -> Result<(), String> {
    if !(p.beta.re > 0.0) {
        return Err(format!("Re(β) = {} must be positive", p.beta.re));
    }
    Ok(())
}

fn e8_lhs(p: &IdentityParameters) -> Vec<LhsForm> {
    let b = p.beta;
    ll_form("log(log x) / (x²+β²)", move |x| 1.0 / (x * x + b * b))
}

fn e8_rhs(p: &IdentityParameters, _: StirlingKind) -> R {
    let b = p.beta;
    let r = c(1.0, 1.0) * PI.sqrt() * gz(arg1(I * b))? / gz(arg1(-I * b))?;
    Ok(PI / b * ln(r))
}

// E9

fn e9_check(p: &IdentityParameters) -> Result<(), String> {
    int_at_least(p.k, "k", 0)?;
    int_at_least(p.n, "n", 1).map(|_| ())
}

fn e9_lhs(p: &IdentityParameters) -> Vec<LhsForm> {
    let (k, n) = (p.k as i32, p.n as i32);
    let f = IntegrandSpec::new(
        move |x: C64| sqrt(x) * ln(-x).powi(k) / ((1.0 + x * x) * (1.0 + x).powi(n)),
        "log(-x) = ln x + iπ",
    )
    .with_singular(0.0, SingularKind::Algebraic);
    vec![LhsForm::semi_infinite("√x log^k(-x) / ((1+x²)(1+x)^n)", f)]
}

fn e9_rhs(p: &IdentityParameters, kind: StirlingKind) -> R {
    let (k, n) = (p.k as usize, p.n as usize);
    let (ki, ni) = (k as i32, n as i32);
    let kf = k as f64;
    let r8 = c(0.0, PI / 4.0).exp();
    let r38 = c(0.0, 3.0 * PI / 4.0).exp();
    let (mi, pi_) = (c(1.0, -1.0), c(1.0, 1.0));
    let head = I.powi(ki)
        * 2f64.powi(2 * ki - ni)
        * PI.powi(1 + ki)
        * (r8 * mi.powi(ni) * hz(-kf, real(3.0 / 8.0))? - r8 * mi.powi(ni) * hz(-kf, real(7.0 / 8.0))?
            - r38 * pi_.powi(ni) * (hz(-kf, real(5.0 / 8.0))? - hz(-kf, real(9.0 / 8.0))?));
    let sum = qsum(n, kind, |j, p, l, h| {
        let coef = (2f64.powi(1 + ki) - 2f64.powi(h as i32)) * rf(1.0 - h as f64 + kf, h);
        if coef == 0.0 {
            return Ok(C64::new(0.0, 0.0));
        }
        let ji = j as i32;
        Ok(sign(j as i64 - l as i64)
            * I.powi(ki - h as i32)
            * 2f64.powi(ki + l as i32 - h as i32 - ni - p as i32)
            * (mi.powi(ni) * pi_.powi(ji) + mi.powi(ji) * pi_.powi(ni))
            / factorial(j)
            * coef
            * PI.powi(1 - h as i32 + ki)
            * cc(p, l, h)
            * zr(h as f64 - kf)?)
    })?;
    Ok(head + sum)
}

// E10

fn e10_check(p: &IdentityParameters) -> Result<(), String> {
    let n = int_at_least(p.n, "n", 1)?;
    re_between(p.m, "m", 0.0, n as f64 + 1.0)?;
    re_between(p.s, "s", 0.0, n as f64 + 1.0)?;
    lerch_exponent(p.m, "m")?;
    lerch_exponent(p.s, "s")?;
    off_cut(p.b, "b")?;
    off_cut(p.gamma, "γ")?;
    distinct(p.b, p.gamma, "b and γ")
}

fn e10_lhs(p: &IdentityParameters) -> Vec<LhsForm> {
    let (m, s, n, b, g) = (p.m, p.s, p.n as i32, p.b, p.gamma);
    let f = IntegrandSpec::new(
        move |x: C64| {
            // (x^{s-1} - x^{m-1}) / log x without cancellation near x = 1
            let lx = ln(x);
            pow(x, m - 1.0) * (s - m) * exprel((s - m) * lx) * (x + g).powi(-n) / (b + x)
        },
        "principal powers",
    )
    .with_singular(0.0, SingularKind::Algebraic)
    .with_singular(1.0, SingularKind::Removable);
    vec![LhsForm::semi_infinite("(x^{s-1} - x^{m-1}) / ((b+x)(x+γ)^n log x)", f)]
}

fn e10_rhs(p: &IdentityParameters, kind: StirlingKind) -> R {
    let (m, s, b, g) = (p.m, p.s, p.b, p.gamma);
    let n = p.n as usize;
    let gbn = (g - b).powi(-(n as i32));
    let ab = arg1(b);
    let ag = arg1(g);
    let (sm, ss) = (neg_one_pow(m), neg_one_pow(s));
    let head = gbn * (sm * pow(b, m) * phi(m, 1.0, ab)? - ss * pow(b, s) * phi(s, 1.0, ab)?) / b;
    let mut pm = HCache::new(|h| phi(m, 1.0 + h as f64, ag));
    let mut ps = HCache::new(|h| phi(s, 1.0 + h as f64, ag));
    let sum = qsum(n, kind, |j, p, l, h| {
        let poch = rf(-(h as f64), h);
        if poch == 0.0 {
            return Ok(C64::new(0.0, 0.0));
        }
        let (hl, hi) = ((h + l) as i32, h as i32);
        Ok(I * sign(j as i64 - l as i64)
            * I.powi(-1 - hi)
            * m.powi(-hl)
            * (2.0 * PI).powi(-hi)
            * s.powi(-hl)
            * (1.0 - b / g).powi(j as i32)
            * gbn
            * cc(p, l, h)
            / (g * factorial(j))
            * (-sm * m.powi(p as i32) * s.powi(hl) * pow(g, m) * pm.get(h)?
                + ss * m.powi(hl) * s.powi(p as i32) * pow(g, s) * ps.get(h)?)
            * poch)
    })?;
    Ok(head + sum)
}

// E11

fn e11_check(p: &IdentityParameters) -> Result<(), String> {
    int_at_least(p.n, "n", 1)?;
    real_positive(p.b, "b")?;
    real_positive(p.gamma, "γ")?;
    distinct(p.b, p.gamma, "b and γ")
}

fn e11_lhs(p: &IdentityParameters) -> Vec<LhsForm> {
    let (n, b, g) = (p.n as i32, p.b, p.gamma);
    let f = IntegrandSpec::new(
        move |x: C64| {
            let l = ln(-x / b);
            (x + g).powi(-n) * l * l * ln(l) / (sqrt(x) * (b + x))
        },
        "log(-x/b) = ln(x/b) + iπ",
    )
    .with_singular(0.0, SingularKind::Algebraic);
    vec![LhsForm::semi_infinite("log²(-x/b) log(log(-x/b)) / (√x (b+x)(x+γ)^n)", f)]
}

fn e11_rhs(p: &IdentityParameters, kind: StirlingKind) -> R {
    let (b, g) = (p.b, p.gamma);
    let n = p.n as usize;
    let (lb, lg) = (ln(b), ln(g));
    let a1 = (4.0 * PI + I * lb - I * lg) / (4.0 * PI);
    let a2 = -I * (c(0.0, 2.0 * PI) - lb + lg) / (4.0 * PI);
    let a3 = -I * (c(0.0, 2.0 * PI) - lb + lg) / (2.0 * PI);
    let gbn = (g - b).powi(-(n as i32));
    let half = RationalExponent::new(1, 2)?;
    let k4 = real(3.0) + c(0.0, PI) + lnr(4.0) + 2.0 * lnr(PI);
    let sum = qsum(n, kind, |j, p, l, h| {
        let hi = h as i32;
        let base = sign(j as i64 - l as i64)
            * I.powi(-hi)
            * 2f64.powi(3 - hi + l as i32 - p as i32)
            * PI.powi(3 - hi)
            * (1.0 - b / g).powi(j as i32)
            * gbn
            * cc(p, l, h)
            / (sqrt(g) * factorial(j));
        if h >= 3 {
            // pole-limit of (3-h)_h ζ(h-2, ·)
            let nn = h - 3;
            let lim = sign(nn as i64 + 1) * factorial(nn) * 2.0;
            let dz = if h == 3 { psi(a2)? - psi(a1)? } else { hz(h as f64 - 2.0, a1)? - hz(h as f64 - 2.0, a2)? };
            return Ok(base * 2.0 * dz * (-2.0) * lim);
        }
        let dphi = lerch_phi_s_derivative(half, real(h as f64 - 2.0), a3)?;
        let hh = harmonic(real(2.0 - h as f64))?;
        Ok(base
            * rf(3.0 - h as f64, h)
            * (2.0 * (hz(h as f64 - 2.0, a1)? - hz(h as f64 - 2.0, a2)?) * (k4 - 2.0 * hh) + 2f64.powi(hi) * dphi))
    })?;
    Ok(14.0 * PI * gbn * zr(3.0)? / sqrt(b) - sum)
}

// E12

fn e12_check(p: &IdentityParameters) -> Result<(), String> {
    int_at_least(p.k, "k", 0)?;
    if p.b.im != 0.0 || !(p.b.re < 2.0) || p.b.re == -2.0 {
        return Err(format!("b = {} must be real, below 2 and not -2", p.b));
    }
    Ok(())
}

fn e12_lhs(p: &IdentityParameters) -> Vec<LhsForm> {
    let (k, b) = (p.k as i32, p.b.re);
    let f = IntegrandSpec::new(move |x: C64| ln(x).powi(1 + 2 * k) / (1.0 - b * x + x * x), "log^{2k+1} x");
    vec![LhsForm::semi_infinite("log^{2k+1} x / (1 - b x + x²)", f)]
}

fn e12_rhs(p: &IdentityParameters, _: StirlingKind) -> R {
    let (k, b) = (p.k, p.b.re);
    let sq = sqrt(real(b * b - 4.0));
    let s = -1.0 - 2.0 * k;
    Ok(I.powi(2 * k as i32) * (2.0 * PI).powf(2.0 * (1.0 + k)) / sq
        * (-hz(s, arg1((-b - sq) / 2.0))? + hz(s, arg1((-b + sq) / 2.0))?))
}

// E13, E22: one integral, two closed forms

fn sqrt_ll_lhs(label: &'static str, pow_: i32) -> Vec<LhsForm> {
    let f = ll_spec(move |x| sqrt(x) / (1.0 + x).powi(pow_)).with_singular(0.0, SingularKind::Algebraic);
    vec![LhsForm::semi_infinite(label, f)]
}

fn e13_lhs(_: &IdentityParameters) -> Vec<LhsForm> {
    sqrt_ll_lhs("√x log(log x) / (1+x)²", 2)
}

fn e13_rhs(_: &IdentityParameters, _: StirlingKind) -> R {
    let r = c(1.0 / 3.0, 1.0 / 3.0) * c(0.0, -0.5).exp() * (2.0 * PI).sqrt() * gam(-0.25)? / gam(-0.75)?;
    Ok(PI * ln(r))
}

fn e22_rhs(_: &IdentityParameters, _: StirlingKind) -> R {
    let r = 2.0 * c(0.0, PI / 4.0).exp() * c(0.0, -0.5).exp() * PI.sqrt() * gam(-0.25)? / (3.0 * gam(-0.75)?);
    Ok(PI * ln(r))
}

// E14, E15

fn e14_check(p: &IdentityParameters) -> Result<(), String> {
    int_at_least(p.k, "k", 0)?;
    int_at_least(p.n, "n", 2)?;
    off_cut(p.a, "a")?;
    off_cut(p.gamma, "γ")
}

fn e15_check(p: &IdentityParameters) -> Result<(), String> {
    int_at_least(p.k, "k", 0)?;
    int_at_least(p.n, "n", 2)?;
    off_cut(p.gamma, "γ")
}

fn e14_lhs(p: &IdentityParameters) -> Vec<LhsForm> {
    let (k, n, a, g) = (p.k as i32, p.n as i32, p.a, p.gamma);
    let f = IntegrandSpec::new(move |x: C64| ln(a * x).powi(k) / (x + g).powi(n), "principal log(ax)");
    vec![LhsForm::semi_infinite("log^k(ax) / (x+γ)^n", f)]
}

fn e15_lhs(p: &IdentityParameters) -> Vec<LhsForm> {
    let (k, n, g) = (p.k as i32, p.n as i32, p.gamma);
    let f = IntegrandSpec::new(move |x: C64| ln(x / g).powi(k) / (x + g).powi(n), "principal log(x/γ)");
    vec![LhsForm::semi_infinite("log^k(x/γ) / (x+γ)^n", f)]
}

fn e14_base(j: usize, p: usize, l: usize, h: usize, k: usize, g: C64, n: usize) -> C64 {
    let (hi, ki) = (h as i32, k as i32);
    sign(j as i64 - l as i64)
        * 2f64.powi(1 - 2 * hi + ki - l as i32 + p as i32)
        * c(0.0, PI).powi(1 - hi + ki)
        * g.powi(1 - n as i32)
        * cc(p, l, h)
        / factorial(j)
}

fn e14_rhs(p: &IdentityParameters, kind: StirlingKind) -> R {
    let (k, n, a, g) = (p.k as usize, p.n as usize, p.a, p.gamma);
    let ag = arg1(a * g);
    qsum(n, kind, |j, pp, l, h| {
        let base = e14_base(j, pp, l, h, k, g, n);
        if h == k + 1 {
            return Ok(-base * factorial(k));
        }
        let poch = rf(1.0 - h as f64 + k as f64, h);
        if poch == 0.0 {
            return Ok(C64::new(0.0, 0.0));
        }
        Ok(base * hz(h as f64 - k as f64, ag)? * poch)
    })
}

fn e15_rhs(p: &IdentityParameters, kind: StirlingKind) -> R {
    let (k, n, g) = (p.k as usize, p.n as usize, p.gamma);
    qsum(n, kind, |j, pp, l, h| {
        let base = e14_base(j, pp, l, h, k, g, n);
        if h == k + 1 {
            return Ok(-base * factorial(k));
        }
        let e = h as i32 - k as i32;
        let coef = rf(1.0 - h as f64 + k as f64, h) * (2f64.powi(e) - 1.0);
        if coef == 0.0 {
            return Ok(C64::new(0.0, 0.0));
        }
        Ok(base * zr(e as f64)? * coef)
    })
}

// E16, E17

fn e16_check(p: &IdentityParameters) -> Result<(), String> {
    int_at_least(p.n, "n", 2).map(|_| ())
}

fn e16_lhs(p: &IdentityParameters) -> Vec<LhsForm> {
    let n = p.n as i32;
    let f = log_integrand("principal √(log x), log(log x)", move |x, lx, _| (1.0 + x).powi(-n) * ln(lx) / sqrt(lx))
    .with_singular(1.0, SingularKind::Algebraic);
    vec![LhsForm::semi_infinite("log(log x) / ((1+x)^n √(log x))", f)]
}

fn e16_rhs(p: &IdentityParameters, kind: StirlingKind) -> R {
    let n = p.n as usize;
    let psi_half = psi(real(0.5))?;
    let lip = ln(c(0.0, PI));
    qsum(n, kind, |j, pp, l, h| {
        let hf = h as f64;
        let t2 = 2f64.powi(1 + h as i32);
        let z = zr(0.5 + hf)?;
        let dz = zeta_derivative(real(0.5 + hf))?;
        let inner = (SQRT_2 * 2f64.ln() + (SQRT_2 - t2) * (lip + psi_half) + (t2 - SQRT_2) * psi(real(0.5 - hf))?) * z
            + (t2 - SQRT_2) * dz;
        Ok(-c(0.0, PI * (0.25 + j as f64 - l as f64)).exp()
            * I.powi(-(h as i32))
            * 2f64.powi(-2 * h as i32 - l as i32 + pp as i32)
            * PI.powf(0.5 - hf)
            * cc(pp, l, h)
            * rf(0.5 - hf, h)
            / factorial(j)
            * inner)
    })
}

fn e17_lhs(_: &IdentityParameters) -> Vec<LhsForm> {
    let f = log_integrand("principal √(log x)", |x, lx, _| ln(lx) / ((1.0 + x).powi(2) * sqrt(lx)))
        .with_singular(1.0, SingularKind::Algebraic);
    vec![LhsForm::semi_infinite("log(log x) / ((1+x)² √(log x))", f)]
}

fn e17_rhs(_: &IdentityParameters, _: StirlingKind) -> R {
    let z = zr(1.5)?;
    let dz = zeta_derivative(real(1.5))?;
    let inner = (real(8.0 - 2.0 * SQRT_2) + c(0.0, 0.5) * (SQRT_2 - 4.0) * PI - 4.0 * PI.ln()
        + SQRT_2 * (2.0 * PI).ln())
        * z
        - (SQRT_2 - 4.0) * dz;
    Ok(c(0.0, 3.0 * PI / 4.0).exp() * inner / (4.0 * PI.sqrt()))
}

// E18

fn e18_check(p: &IdentityParameters) -> Result<(), String> {
    let n = int_at_least(p.n, "n", 1)?;
    if p.a.im == 0.0 {
        return Err("a must have a nonzero imaginary part".into());
    }
    re_between(p.m, "m", -1.0, n as f64)?;
    re_between(p.s, "s", -1.0, n as f64)?;
    lerch_exponent(p.m, "m")?;
    lerch_exponent(p.s, "s")?;
    off_cut(p.b, "b")?;
    off_cut(p.gamma, "γ")?;
    distinct(p.b, p.gamma, "b and γ")
}

fn e18_lhs(p: &IdentityParameters) -> Vec<LhsForm> {
    let (m, s, n, a, b, g) = (p.m, p.s, p.n as i32, p.a, p.b, p.gamma);
    let f = IntegrandSpec::new(
        move |x: C64| (pow(x, s) - pow(x, m)) * (x + g).powi(-n) / ((b + x) * (a + ln(x))),
        "principal powers",
    )
    .with_singular(0.0, SingularKind::Algebraic);
    vec![LhsForm::semi_infinite("(x^s - x^m) / ((b+x)(x+γ)^n (a + log x))", f)]
}

fn e18_rhs(p: &IdentityParameters, kind: StirlingKind) -> R {
    let (m, s, a, b, g) = (p.m, p.s, p.a, p.b, p.gamma);
    let n = p.n as usize;
    let at = |z: C64| -I * (c(0.0, PI) + a + ln(z)) / (2.0 * PI);
    let (ab, ag) = (at(b), at(g));
    let gbn = (g - b).powi(-(n as i32));
    let (sm, ss) = (neg_one_pow(m), neg_one_pow(s));
    let head = gbn * (-sm * pow(b, m) * phi(m, 1.0, ab)? + ss * pow(b, s) * phi(s, 1.0, ab)?);
    let (m1, s1) = (m + 1.0, s + 1.0);
    let mut pm = HCache::new(|h| phi(m, 1.0 + h as f64, ag));
    let mut ps = HCache::new(|h| phi(s, 1.0 + h as f64, ag));
    let sum = qsum(n, kind, |j, pp, l, h| {
        let poch = rf(-(h as f64), h);
        if poch == 0.0 {
            return Ok(C64::new(0.0, 0.0));
        }
        let hl = (h + l) as i32;
        Ok(-gbn
            * sign(j as i64 - l as i64)
            * m1.powi(-hl)
            * c(0.0, 2.0 * PI).powi(-(h as i32))
            * s1.powi(-hl)
            * (1.0 - b / g).powi(j as i32)
            * cc(pp, l, h)
            / factorial(j)
            * (-sm * m1.powi(pp as i32) * s1.powi(hl) * pow(g, m) * pm.get(h)?
                + ss * m1.powi(hl) * s1.powi(pp as i32) * pow(g, s) * ps.get(h)?)
            * poch)
    })?;
    Ok(head + sum)
}

// E19 to E24

fn e19_lhs(_: &IdentityParameters) -> Vec<LhsForm> {
    let f = ll_spec(|x| (x - 1.0) / (sqrt(x) * (1.0 + x) * (1.0 + x * x))).with_singular(0.0, SingularKind::Algebraic);
    vec![LhsForm::semi_infinite("(x-1) log(log x) / (√x (1+x)(1+x²)) on (0, ∞)", f)]
}

/// The E19 integrand over the printed interval (0, 1).
pub fn e19_stated_interval_integrand() -> IntegrandSpec {
    ll_spec(|x| (x - 1.0) / (sqrt(x) * (1.0 + x) * (1.0 + x * x)))
}

fn e19_rhs(_: &IdentityParameters, _: StirlingKind) -> R {
    let r8 = c(0.0, PI / 4.0).exp();
    let r38 = c(0.0, 3.0 * PI / 4.0).exp();
    let t = 2.0 * (SQRT_2 - 2.0) * ln(c(0.0, PI))
        + SQRT_2 * 16f64.ln()
        + 4.0 * r8 * ln(3.0 * gam(-3.0 / 8.0)? / (7.0 * gam(-7.0 / 8.0)?))
        + 8.0 * ln(3.0 * gam(-0.75)? / (2.0 * gam(-0.25)?))
        + 4.0 * r38 * ln(5.0 * gam(-5.0 / 8.0)? / gam(-1.0 / 8.0)?);
    Ok(PI / 4.0 * t)
}

fn e20_lhs(_: &IdentityParameters) -> Vec<LhsForm> {
    sqrt_ll_lhs("√x log(log x) / (1+x)⁴", 4)
}

fn e20_rhs(_: &IdentityParameters, _: StirlingKind) -> R {
    let cat = constants().catalan;
    let inner = c(0.0, 2.0) + (64.0 * PI.powi(3) / 729.0).ln() - 6.0 * lgam(-0.75)? + 6.0 * lgam(-0.25)?;
    Ok(-cat / (2.0 * PI) + PI / 96.0 * (c(0.0, 3.0 * PI) + 2.0 * inner))
}

fn e21_lhs(_: &IdentityParameters) -> Vec<LhsForm> {
    sqrt_ll_lhs("√x log(log x) / (1+x)⁵", 5)
}

fn e21_rhs(_: &IdentityParameters, _: StirlingKind) -> R {
    let cat = constants().catalan;
    let bracket = c(0.0, -16.0) + 30.0 * 3f64.ln() - 15.0 * 4f64.ln() - 15.0 * PI.ln() + 30.0 * lgam(-0.75)?
        - 30.0 * lgam(-0.25)?;
    let p3 = polygamma(3, real(0.25))? - polygamma(3, real(0.75))?;
    Ok((-896.0 * cat * PI * PI + c(0.0, 60.0 * PI.powi(5)) - 8.0 * PI.powi(4) * bracket + p3) / (3072.0 * PI.powi(3)))
}

fn e23_lhs(_: &IdentityParameters) -> Vec<LhsForm> {
    let q = PI / 4.0;
    let tan_form = IntegrandSpec::new(
        move |t: C64| {
            // log tan t = 2 atanh(tan(t - π/4)) keeps precision near π/4
            let u = t.re - q;
            let lt = if u.abs() < 0.3 { 2.0 * u.tan().atanh() } else { t.re.tan().ln() };
            ln(real(lt))
        },
        "log(log tan t), upper lip below π/4",
    )
        .with_singular(q, SingularKind::BranchPoint);
    vec![
        LhsForm::finite("log(log tan t) on (0, π/2)", tan_form, 0.0, PI / 2.0),
        LhsForm::semi_infinite("log(log x) / (1+x²)", ll_spec(|x| 1.0 / (1.0 + x * x))),
    ]
}

fn e23_rhs(_: &IdentityParameters, _: StirlingKind) -> R {
    Ok(PI * ln(c(1.0, 1.0) * PI.sqrt() * gam(-0.25)? / (3.0 * gam(-0.75)?)))
}

fn e24_lhs(_: &IdentityParameters) -> Vec<LhsForm> {
    sqrt_ll_lhs("√x log(log x) / (1+x)³", 3)
}

fn e24_rhs(_: &IdentityParameters, _: StirlingKind) -> R {
    let cat = constants().catalan;
    let r = 2.0 * c(0.0, PI / 4.0).exp() * PI.sqrt() * gam(-0.25)? / (3.0 * gam(-0.75)?);
    Ok(-cat / PI + PI / 4.0 * ln(r))
}

// E25

fn e25_check(p: &IdentityParameters) -> Result<(), String> {
    int_at_least(p.k, "k", 0)?;
    let n = int_at_least(p.n, "n", 1)?;
    re_between(p.m, "m", -1.0, n as f64 + 1.0)?;
    re_between(p.s, "s", -1.0, n as f64 + 1.0)?;
    lerch_exponent(p.m, "m")?;
    lerch_exponent(p.s, "s")?;
    for (z, nm) in [(p.a, "a"), (p.b, "b"), (p.c, "c"), (p.gamma, "γ")] {
        off_cut(z, nm)?;
    }
    distinct(p.b, p.c, "b and c")?;
    distinct(p.b, p.gamma, "b and γ")?;
    distinct(p.c, p.gamma, "c and γ")
}

fn e25_lhs(p: &IdentityParameters) -> Vec<LhsForm> {
    let (m, s, k, n, a, b, cc_, g) = (p.m, p.s, p.k as i32, p.n as i32, p.a, p.b, p.c, p.gamma);
    let f = IntegrandSpec::new(
        move |x: C64| (pow(x, s) - pow(x, m)) * (x + g).powi(-n) * ln(a * x).powi(k) / ((b + x) * (cc_ + x)),
        "principal powers and log(ax)",
    )
    .with_singular(0.0, SingularKind::Algebraic);
    vec![LhsForm::semi_infinite("(x^s - x^m) log^k(ax) / ((b+x)(c+x)(x+γ)^n)", f)]
}

fn e25_rhs(p: &IdentityParameters, kind: StirlingKind) -> R {
    let (m, s, a, b, cv, g) = (p.m, p.s, p.a, p.b, p.c, p.gamma);
    let (k, n) = (p.k as usize, p.n as usize);
    let (ki, ni) = (k as i32, n as i32);
    let kf = k as f64;
    let (sm, ss1) = (neg_one_pow(m), neg_one_pow(1.0 + s));
    let (ab, ac, ag) = (arg2(a, b), arg2(a, cv), arg2(a, g));
    let pre = c(0.0, 2.0 * PI).powi(1 + ki) * (g - b).powi(-ni) * (g - cv).powi(-ni) / (b - cv);
    let x = (g - cv).powi(ni) * (sm * pow(b, m) * phi(m, -kf, ab)? + ss1 * pow(b, s) * phi(s, -kf, ab)?)
        - (g - b).powi(ni) * (sm * pow(cv, m) * phi(m, -kf, ac)? + ss1 * pow(cv, s) * phi(s, -kf, ac)?);
    let (m1, s1) = (m + 1.0, s + 1.0);
    let mut pm = HCache::new(|h| phi(m, h as f64 - kf, ag));
    let mut ps = HCache::new(|h| phi(s, h as f64 - kf, ag));
    let sum = qsum(n, kind, |j, pp, l, h| {
        let poch = rf(1.0 - h as f64 + kf, h);
        if poch == 0.0 {
            return Ok(C64::new(0.0, 0.0));
        }
        let (hi, hl, ji) = (h as i32, (h + l) as i32, j as i32);
        Ok(I * sign(j as i64 - l as i64)
            * I.powi(ki - hi)
            * m1.powi(-hl)
            * (2.0 * PI).powi(1 - hi + ki)
            * s1.powi(-hl)
            * (g - b).powi(-ni)
            * (g - cv).powi(-ni)
            / ((b - cv) * factorial(j))
            * ((1.0 - cv / g).powi(ji) * (g - b).powi(ni) - (1.0 - b / g).powi(ji) * (g - cv).powi(ni))
            * cc(pp, l, h)
            * (sm * m1.powi(pp as i32) * s1.powi(hl) * pow(g, m) * pm.get(h)?
                + ss1 * m1.powi(hl) * s1.powi(pp as i32) * pow(g, s) * ps.get(h)?)
            * poch)
    })?;
    Ok(pre * x + sum)
}

// E26 to E29

fn one_minus_x_lhs(label: &'static str, den: fn(C64) -> C64) -> Vec<LhsForm> {
    let f = ll_spec(move |x| (1.0 - x) / (sqrt(x) * den(x))).with_singular(0.0, SingularKind::Algebraic);
    vec![LhsForm::semi_infinite(label, f)]
}

fn e26_lhs(_: &IdentityParameters) -> Vec<LhsForm> {
    one_minus_x_lhs("(1-x) log(log x) / (√x (1+x+x²))", |x| 1.0 + x + x * x)
}

fn e26_rhs(_: &IdentityParameters, _: StirlingKind) -> R {
    let inner = (1728f64 / 25.0).ln() + 2.0 * PI.ln() - 2.0 * (lgam(-5.0 / 6.0)? + lgam(-1.0 / 6.0)?);
    Ok(-PI * (4.0 * PI + I * inner))
}

fn e27_lhs(_: &IdentityParameters) -> Vec<LhsForm> {
    one_minus_x_lhs("(1-x) log(log x) / (√x (1+x)² (1+x+x²))", |x| (1.0 + x).powi(2) * (1.0 + x + x * x))
}

fn e27_rhs(_: &IdentityParameters, _: StirlingKind) -> R {
    let s3 = 3f64.sqrt();
    let t = c(0.0, 6.0) - c(0.0, 3.0) * (s3 - 2.0) * PI - 16.0 * s3 * 2f64.ln() - c(24.0, 3.0) * 3f64.ln()
        + 3.0 * (4.0 - 3.0 * s3) * PI.ln()
        + 6.0 * ln(16.0 * gam(-0.25)?.powi(4) / gam(-0.75)?.powi(4))
        + 6.0 * s3 * ln(5.0 * gam(-5.0 / 6.0)? * gam(1.0 / 6.0)? / gam(-1.0 / 6.0)?);
    Ok(PI / 6.0 * t)
}

fn e28_lhs(_: &IdentityParameters) -> Vec<LhsForm> {
    one_minus_x_lhs("(1-x) log(log x) / (√x (1+x)² (1-x+x²))", |x| (1.0 + x).powi(2) * (1.0 - x + x * x))
}

fn e28_rhs(_: &IdentityParameters, _: StirlingKind) -> R {
    let s3 = 3f64.sqrt();
    let acosh2 = 2f64.acosh();
    let r = 4.0 * PI * gam(-0.25)?.powi(2) / (3f64.powf(1.5) * gam(-0.75)?.powi(2));
    Ok(PI / 18.0 * (c(0.0, 6.0) + c(0.0, 3.0 * PI) + c(0.0, 2.0 * s3 * acosh2) + 6.0 * ln(r)))
}

fn e29_lhs(_: &IdentityParameters) -> Vec<LhsForm> {
    let mut forms = one_minus_x_lhs("(1-x) log(log x) / (√x (1+x)²)", |x| (1.0 + x).powi(2));
    forms.push(LhsForm::semi_infinite(
        "2(1-x²) log(log x) / (1+x²)²",
        ll_spec(|x| 2.0 * (1.0 - x * x) / (1.0 + x * x).powi(2)),
    ));
    forms
}

fn e29_rhs(_: &IdentityParameters, _: StirlingKind) -> R {
    Ok(c(0.0, PI))
}

pub(crate) static DEFS: [Def; 29] = [
    Def::new("E1", e1_check, e1_lhs, e1_rhs),
    Def::new("E2", e2_check, e2_lhs, e2_rhs),
    Def::new("E3", e3_check, e3_lhs, e3_rhs),
    Def::new("E4", none, e4_lhs, e4_rhs),
    Def::new("E5", none, e5_lhs, e5_rhs),
    Def::new("E6", none, e6_lhs, e6_rhs),
    Def::new("E7", none, e7_lhs, e7_rhs),
    Def::new("E8", e8_check, e8_lhs, e8_rhs),
    Def::new("E9", e9_check, e9_lhs, e9_rhs),
    Def::new("E10", e10_check, e10_lhs, e10_rhs),
    Def::new("E11", e11_check, e11_lhs, e11_rhs),
    Def::new("E12", e12_check, e12_lhs, e12_rhs),
    Def::new("E13", none, e13_lhs, e13_rhs),
    Def::new("E14", e14_check, e14_lhs, e14_rhs),
    Def::new("E15", e15_check, e15_lhs, e15_rhs),
    Def::new("E16", e16_check, e16_lhs, e16_rhs),
    Def::new("E17", none, e17_lhs, e17_rhs),
    Def::new("E18", e18_check, e18_lhs, e18_rhs),
    Def::new("E19", none, e19_lhs, e19_rhs),
    Def::new("E20", none, e20_lhs, e20_rhs),
    Def::new("E21", none, e21_lhs, e21_rhs),
    Def::new("E22", none, e13_lhs, e22_rhs),
    Def::new("E23", none, e23_lhs, e23_rhs),
    Def::new("E24", none, e24_lhs, e24_rhs),
    Def::new("E25", e25_check, e25_lhs, e25_rhs),
    Def::new("E26", none, e26_lhs, e26_rhs),
    Def::new("E27", none, e27_lhs, e27_rhs),
    Def::new("E28", none, e28_lhs, e28_rhs),
    Def::new("E29", none, e29_lhs, e29_rhs),
];
