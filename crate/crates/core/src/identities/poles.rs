//! Integrands with poles on the positive axis.
//!
//! Every left-hand side here is read along the real axis indented above each
//! pole, so the closed forms carry the matching `iπ` residue terms.

use super::forms::{arg2, distinct, gam, int_at_least, lerch_exponent, lgam, loglog, off_cut, phi, qsum, re_between, sign, HCache};
use super::{Def, IdentityError, IdentityParameters, LhsForm};
use crate::quad::{IntegrandSpec, SingularKind};
use crate::specfun::cmath::{c, ln, neg_one_pow, pow, powf, real, sqrt, I};
use crate::specfun::{binomial, factorial, gamma, log_gamma, pochhammer, stieltjes_gamma, StirlingKind, C64};
use std::f64::consts::{PI, SQRT_2};

type R = Result<C64, IdentityError>;

fn none(_: &IdentityParameters) -> Result<(), String> {
    Ok(())
}

fn rf(x: f64, n: usize) -> f64 {
    pochhammer(real(x), n).re
}

fn lgz(z: C64) -> R {
    Ok(log_gamma(z)?)
}

fn gz(z: C64) -> R {
    Ok(gamma(z)?)
}

/// Declares `x = |b|` a simple pole when `b` is real.
fn with_b_pole(f: IntegrandSpec, b: C64) -> IntegrandSpec {
    if b.im == 0.0 {
        f.with_singular(b.re.abs(), SingularKind::SimplePole)
    } else {
        f
    }
}

fn nonzero(z: C64, name: &str) -> Result<(), String> {
    if z.norm() == 0.0 {
        return Err(format!("{name} must be nonzero"));
    }
    Ok(())
}

// P1

fn p1_check(p: &IdentityParameters) -> Result<(), String> {
    int_at_least(p.k, "k", 0)?;
    re_between(p.m, "m", -1.0, 1.0)?;
    re_between(p.s, "s", -1.0, 1.0)?;
    lerch_exponent(p.m, "m")?;
    lerch_exponent(p.s, "s")?;
    off_cut(p.a, "a")?;
    nonzero(p.b, "b")?;
    if p.b.im < 0.0 {
        return Err(format!("Im(b) = {} must be >= 0", p.b.im));
    }
    Ok(())
}

fn p1_lhs(p: &IdentityParameters) -> Vec<LhsForm> {
    let (m, s, k, a, b) = (p.m, p.s, p.k as i32, p.a, p.b);
    let f = IntegrandSpec::new(
        move |x: C64| (pow(x, m) - pow(x, s)) * ln(a * x).powi(k) / (b * b - x * x),
        "principal powers and log(ax)",
    )
    .with_singular(0.0, SingularKind::Algebraic);
    vec![LhsForm::semi_infinite("(x^m - x^s) log^k(ax) / (b² - x²)", with_b_pole(f, b))]
}

fn p1_rhs(p: &IdentityParameters, _: StirlingKind) -> R {
    let (m, s, a, b) = (p.m, p.s, p.a, p.b);
    let kf = p.k;
    let (am, ap) = (arg2(a, -b), arg2(a, b));
    let (sm, ss) = (neg_one_pow(m), neg_one_pow(s));
    let t = (sm * pow(-b, m) * phi(m, -kf, am)? - sm * pow(b, m) * phi(m, -kf, ap)?)
        + ss * (-pow(-b, s) * phi(s, -kf, am)? + pow(b, s) * phi(s, -kf, ap)?);
    Ok(-(2f64.powf(kf)) * c(0.0, PI).powi(1 + p.k as i32) / b * t)
}

// P2

fn p2_lhs(_: &IdentityParameters) -> Vec<LhsForm> {
    let f = IntegrandSpec::new(|x: C64| loglog(x) / (sqrt(x) * (x + 1.0) * ln(x)), "principal log(log x)")
        .with_singular(0.0, SingularKind::Algebraic)
        .with_singular(1.0, SingularKind::SimplePole);
    vec![LhsForm::semi_infinite("log(log x) / (√x (x+1) log x)", f)]
}

fn p2_rhs(_: &IdentityParameters, _: StirlingKind) -> R {
    let g1 = stieltjes_gamma(1, 0.25)? - stieltjes_gamma(1, 0.75)?;
    Ok((real(PI * PI) - c(0.0, 2.0 * PI * (4.0 * PI).ln()) - c(0.0, 2.0 * g1)) / 4.0)
}

// P3

fn p3_check(p: &IdentityParameters) -> Result<(), String> {
    re_between(p.m, "m", -1.0, 1.0)?;
    re_between(p.s, "s", -1.0, 1.0)?;
    lerch_exponent(p.m, "m")?;
    lerch_exponent(p.s, "s")?;
    if !(p.b.im < 0.0 && p.b.re > 0.0) {
        return Err(format!("b = {} needs Im(b) < 0 and Re(b) > 0", p.b));
    }
    if p.a.im == 0.0 && !(p.a.re > 0.0) {
        return Err(format!("real a = {} must be positive", p.a.re));
    }
    Ok(())
}

fn p3_lhs(p: &IdentityParameters) -> Vec<LhsForm> {
    let (m, s, a, b) = (p.m, p.s, p.a, p.b);
    let mut f = IntegrandSpec::new(
        move |x: C64| {
            let l = ln(x);
            (pow(x, m) - pow(x, s)) / ((x * x - b * b) * (a * a - l * l))
        },
        "principal powers",
    )
    .with_singular(0.0, SingularKind::Algebraic);
    if a.im == 0.0 {
        f = f
            .with_singular((-a.re).exp(), SingularKind::SimplePole)
            .with_singular(a.re.exp(), SingularKind::SimplePole);
    }
    vec![LhsForm::semi_infinite("(x^m - x^s) / ((x² - b²)(a² - log² x))", f)]
}

fn p3_rhs(p: &IdentityParameters, _: StirlingKind) -> R {
    let (m, s, a, b) = (p.m, p.s, p.a, p.b);
    let ph = |mm: C64, bb: C64| -> R {
        let lb = ln(bb);
        Ok(phi(mm, 1.0, (I * a + PI - I * lb) / (2.0 * PI))? - phi(mm, 1.0, -I * (a + c(0.0, PI) + lb) / (2.0 * PI))?)
    };
    let terms = neg_one_pow(1.0 + m) * pow(-b, m) * ph(m, -b)?
        + neg_one_pow(m) * pow(b, m) * ph(m, b)?
        + neg_one_pow(s) * pow(-b, s) * ph(s, -b)?
        + neg_one_pow(1.0 + s) * pow(b, s) * ph(s, b)?;
    Ok(terms / (4.0 * a * b))
}

// P4

fn p4_check(p: &IdentityParameters) -> Result<(), String> {
    int_at_least(p.k, "k", 0)?;
    let n = int_at_least(p.n, "n", 1)?;
    re_between(p.m, "m", -1.0, n as f64 + 1.0)?;
    re_between(p.s, "s", -1.0, n as f64 + 1.0)?;
    lerch_exponent(p.m, "m")?;
    lerch_exponent(p.s, "s")?;
    off_cut(p.a, "a")?;
    off_cut(p.gamma, "γ")?;
    nonzero(p.b, "b")?;
    if p.b.im > 0.0 {
        return Err(format!("Im(b) = {} must be <= 0", p.b.im));
    }
    distinct(p.b, p.gamma, "b and γ")?;
    distinct(-p.b, p.gamma, "-b and γ")
}

fn p4_lhs(p: &IdentityParameters) -> Vec<LhsForm> {
    let (m, s, k, n, a, b, g) = (p.m, p.s, p.k as i32, p.n as i32, p.a, p.b, p.gamma);
    let f = IntegrandSpec::new(
        move |x: C64| (pow(x, m) - pow(x, s)) * (x + g).powi(-n) * ln(a * x).powi(k) / (b * b - x * x),
        "principal powers and log(ax)",
    )
    .with_singular(0.0, SingularKind::Algebraic);
    vec![LhsForm::semi_infinite("(x^m - x^s) log^k(ax) / ((b² - x²)(x+γ)^n)", with_b_pole(f, b))]
}

fn p4_rhs(p: &IdentityParameters, kind: StirlingKind) -> R {
    let (m, s, a, b, g) = (p.m, p.s, p.a, p.b, p.gamma);
    let (k, n) = (p.k as usize, p.n as usize);
    let (ki, ni) = (k as i32, n as i32);
    let kf = k as f64;
    let (am, ap, ag) = (arg2(a, -b), arg2(a, b), arg2(a, g));
    let (sm, ss) = (neg_one_pow(m), neg_one_pow(s));
    let head = -(2f64.powi(ki)) * c(0.0, PI).powi(1 + ki) / b
        * ((b + g).powi(-ni) * (sm * pow(-b, m) * phi(m, -kf, am)? - ss * pow(-b, s) * phi(s, -kf, am)?)
            + (g - b).powi(-ni) * (-sm * pow(b, m) * phi(m, -kf, ap)? + ss * pow(b, s) * phi(s, -kf, ap)?));
    let (m1, s1) = (m + 1.0, s + 1.0);
    let mut pm = HCache::new(|h| phi(m, h as f64 - kf, ag));
    let mut ps = HCache::new(|h| phi(s, h as f64 - kf, ag));
    let sum = qsum(n, kind, |j, pp, l, h| {
        let poch = rf(1.0 - h as f64 + kf, h);
        if poch == 0.0 {
            return Ok(C64::new(0.0, 0.0));
        }
        let (hi, hl, ji) = (h as i32, (h + l) as i32, j as i32);
        Ok(sign(1 + j as i64 - l as i64)
            * 2f64.powi(ki - hi)
            * m1.powi(-hl)
            * c(0.0, PI).powi(1 - hi + ki)
            * s1.powi(-hl)
            * (g - b).powi(-ni)
            * (g + b).powi(-ni)
            / (b * factorial(j))
            * (-(1.0 - b / g).powi(ji) * (b + g).powi(ni) + (g - b).powi(ni) * ((b + g) / g).powi(ji))
            * (binomial(pp, l) * binomial(pp - l, h))
            * (-sm * m1.powi(pp as i32) * s1.powi(hl) * pow(g, m) * pm.get(h)?
                + ss * m1.powi(hl) * s1.powi(pp as i32) * pow(g, s) * ps.get(h)?)
            * poch)
    })?;
    Ok(head + sum)
}

// P5, P7, P11: log-log with a rational factor vanishing at 1

fn bg_check(p: &IdentityParameters) -> Result<(), String> {
    nonzero(p.b, "b")?;
    if p.b.im > 0.0 {
        return Err(format!("Im(b) = {} must be <= 0", p.b.im));
    }
    off_cut(p.gamma, "γ")?;
    distinct(p.b, p.gamma, "b and γ")?;
    distinct(-p.b, p.gamma, "-b and γ")
}

fn p11_check(p: &IdentityParameters) -> Result<(), String> {
    bg_check(p)?;
    if p.b.re < 0.0 || p.gamma.im < 0.0 {
        return Err(format!("need Re(b) >= 0 and Im(γ) >= 0, got b = {}, γ = {}", p.b, p.gamma));
    }
    Ok(())
}

fn bg_form<F>(label: &'static str, b: C64, f: F) -> Vec<LhsForm>
where
    F: Fn(C64) -> C64 + Send + Sync + 'static,
{
    let spec = IntegrandSpec::new(move |x: C64| f(x) * loglog(x), "principal log(log x) and powers")
        .with_singular(0.0, SingularKind::Algebraic)
        .with_singular(1.0, SingularKind::BranchPoint);
    vec![LhsForm::semi_infinite(label, with_b_pole(spec, b))]
}

fn p5_lhs(p: &IdentityParameters) -> Vec<LhsForm> {
    let (b, g) = (p.b, p.gamma);
    bg_form("(1-x) log(log x) / (√x (x² - b²)(x+γ))", b, move |x| {
        (1.0 - x) / (sqrt(x) * (x * x - b * b) * (x + g))
    })
}

fn p5_rhs(p: &IdentityParameters, _: StirlingKind) -> R {
    let (b, g) = (p.b, p.gamma);
    let (lb, lmb) = (ln(b), ln(-b));
    let lg = ln(g);
    let l4 = 4f64.ln() + PI.ln();
    let h = (-(2f64.ln()) - PI.ln()) / 2.0;
    let sb = powf(b, 1.5);
    let smb = sqrt(-b);
    let sg = sqrt(g);
    let p2 = PI * PI;
    let q4 = |l: C64| -0.25 + I * l / (4.0 * PI);
    let h2 = |l: C64| 0.5 - (PI - I * l) / (4.0 * PI);
    let dg = (b - g) * sg * (b + g);
    let mut t = q4(lb) * (-I * (1.0 + b) * p2 / (2.0 * sb * (b - g)) - (1.0 + b) * PI * l4 / (sb * (b - g)))
        + h2(lb) * (I * (1.0 + b) * p2 / (2.0 * sb * (b - g)) + (1.0 + b) * PI * l4 / (sb * (b - g)))
        + h2(lmb) * (-I * (b - 1.0) * p2 / (2.0 * smb * b * (b + g)) + (1.0 - b) * PI * l4 / (smb * b * (b + g)))
        + q4(lmb) * (I * (b - 1.0) * p2 / (2.0 * smb * b * (b + g)) + (b - 1.0) * PI * l4 / (smb * b * (b + g)))
        + (-I * p2 * (1.0 + g) / dg - 2.0 * PI * (1.0 + g) * l4 / dg) * h2(lg)
        + (I * p2 * (1.0 + g) / dg + 2.0 * PI * (1.0 + g) * l4 / dg) * q4(lg);
    let q = |u: C64| -> R { Ok(h + ln(u) + lgz(u)?) };
    let u1 = |l: C64| -1.0 + (PI - I * l) / (4.0 * PI);
    let u2 = |l: C64| -0.25 - I * l / (4.0 * PI);
    t += (b - 1.0) * PI * q(u1(lmb))? / (smb * b * (b + g))
        + (1.0 - b) * PI * q(u2(lmb))? / (smb * b * (b + g))
        - (1.0 + b) * PI * q(u1(lb))? / (sb * (b - g))
        + (1.0 + b) * PI * q(u2(lb))? / (sb * (b - g))
        + 2.0 * PI * (1.0 + g) * q(u1(lg))? / dg
        - 2.0 * PI * (1.0 + g) * q(u2(lg))? / dg;
    Ok(t)
}

/// `(log(Γ(a)/(2Γ(b))))` pairs at eighth-shifted arguments.
fn r8(l: C64) -> Result<(C64, C64), IdentityError> {
    let lr = |a: C64, b: C64| -> R { Ok(ln(gz(a)? / (2.0 * gz(b)?))) };
    let e = I * l / (8.0 * PI);
    Ok((lr((PI - I * l) / (8.0 * PI), 0.625 - e)?, lr(0.375 - e, 0.875 - e)?))
}

fn p7_lhs(p: &IdentityParameters) -> Vec<LhsForm> {
    let (b, g) = (p.b, p.gamma);
    bg_form("(√x - 1) log(log x) / (x^{1/4} (b² - x²)(x+γ))", b, move |x| {
        (sqrt(x) - 1.0) / (powf(x, 0.25) * (b * b - x * x) * (x + g))
    })
}

fn p7_rhs(p: &IdentityParameters, _: StirlingKind) -> R {
    let (b, g) = (p.b, p.gamma);
    let q = |z: C64| powf(z, 0.25);
    let (lb, lmb, lg) = (ln(b), ln(-b), ln(g));
    let b125 = powf(b, 1.25);
    let pref = c(0.25, 0.25) * c(0.0, PI / 4.0).exp() * PI / (q(-b) * b125 * (b - g) * q(g) * (b + g));
    let w = (1.0 + sqrt(-b)) * q(b) * (b - g) + (1.0 + sqrt(b)) * q(-b) * (b + g);
    let (a1, a2) = r8(lmb)?;
    let (b1, b2) = r8(lb)?;
    let (c1, c2) = r8(lg)?;
    let sg = sqrt(g);
    let big = PI * q(g) * w
        + 4.0 * I * q(-b) * b125 * (1.0 + sg) * 2f64.ln()
        + 4.0 * I * q(-b) * b125 * (1.0 + sg) * ln(c(0.0, PI))
        - 2.0 * I * q(g) * w * (2.0 * PI).ln()
        + c(2.0, 2.0)
            * q(g)
            * (q(b) * (b - g) * ((I + sqrt(-b)) * a1 + (1.0 + I * sqrt(-b)) * a2)
                + q(-b) * (b + g) * ((I + sqrt(b)) * b1 + (1.0 + I * sqrt(b)) * b2))
        + c(4.0, 4.0) * powf(b, 2.25) * ((I + sg) * c1 + (1.0 + I * sg) * c2) / powf(-b, 0.75);
    Ok(pref * big)
}

fn p11_lhs(p: &IdentityParameters) -> Vec<LhsForm> {
    let (b, g) = (p.b, p.gamma);
    bg_form("(x^{1/4} - 1) log(log x) / (√x (x² - b²)(x+γ))", b, move |x| {
        (powf(x, 0.25) - 1.0) / (sqrt(x) * (x * x - b * b) * (x + g))
    })
}

fn p11_rhs(p: &IdentityParameters, _: StirlingKind) -> R {
    let (b, g) = (p.b, p.gamma);
    let (lb, lmb, lg) = (ln(b), ln(-b), ln(g));
    let sg = sqrt(g);
    let r1 = c(0.0, PI / 4.0).exp();
    let (a1, a2) = r8(lmb)?;
    let (b1, b2) = r8(lb)?;
    let (c1, c2) = r8(lg)?;
    let w = |l: C64, cc: f64| -> R {
        Ok((32.0 * PI.powi(3)).ln() - 2.0 * ln(-cc * PI - I * l) - 2.0 * lgz(-(cc * PI + I * l) / (4.0 * PI))?)
    };
    let b2_ = b * b;
    let g14 = powf(g, 0.25);
    let mb34 = powf(-b, 0.75);
    let b34 = powf(b, 0.75);
    let (smb, sb) = (sqrt(-b), sqrt(b));
    let l2 = c(0.0, PI / 2.0) + (2.0 * PI).ln();
    let l4 = c(0.0, PI / 2.0) + (4.0 * PI).ln();
    let s = -4.0 * SQRT_2 * b2_ * PI * g14 * l2 - 2.0 * SQRT_2 * mb34 * PI * (b - g) * sg * l2
        + smb * (b - g) * sg * (PI - I * lmb) * l4
        + smb * (b - g) * sg * (PI + I * lmb) * l4
        - sb * sg * (b + g) * (PI - I * lb) * l4
        - sb * sg * (b + g) * (PI + I * lb) * l4
        + SQRT_2 * b34 * PI * sg * (b + g) * (c(0.0, PI) + (4.0 * PI * PI).ln())
        + b2_ * (c(0.0, PI) + 2.0 * (4.0 * PI).ln()) * (PI - I * lg)
        + b2_ * (c(0.0, PI) + 2.0 * (4.0 * PI).ln()) * (PI + I * lg)
        + 4.0 * r1 * mb34 * PI * (b - g) * sg * (a1 - I * a2)
        - 4.0 * r1 * b34 * PI * sg * (b + g) * (b1 - I * b2)
        + 8.0 * r1 * b2_ * PI * g14 * (c1 - I * c2)
        - 2.0 * smb * PI * (b - g) * sg * w(lmb, 1.0)?
        + 2.0 * smb * PI * (b - g) * sg * w(lmb, 3.0)?
        + 2.0 * sb * PI * sg * (b + g) * w(lb, 1.0)?
        - 2.0 * sb * PI * sg * (b + g) * w(lb, 3.0)?
        - 4.0 * b2_ * PI * w(lg, 1.0)?
        + 4.0 * b2_ * PI * w(lg, 3.0)?;
    Ok(s / (4.0 * b2_ * (b - g) * sg * (b + g)))
}

// P6, P8: simple pole at the branch point

fn unit_pole_form<F>(label: &'static str, kind: SingularKind, f: F) -> Vec<LhsForm>
where
    F: Fn(C64) -> C64 + Send + Sync + 'static,
{
    let spec = IntegrandSpec::new(move |x: C64| f(x) * loglog(x), "principal log(log x) and powers")
        .with_singular(0.0, SingularKind::Algebraic)
        .with_singular(1.0, kind);
    vec![LhsForm::semi_infinite(label, spec)]
}

fn p6_lhs(_: &IdentityParameters) -> Vec<LhsForm> {
    unit_pole_form("log(log x) / (√x (1-x²))", SingularKind::SimplePole, |x| 1.0 / (sqrt(x) * (1.0 - x * x)))
}

fn p6_rhs(_: &IdentityParameters, _: StirlingKind) -> R {
    let r = PI * gam(-0.25)?.powi(2) / (9.0 * gam(-0.75)?.powi(2));
    Ok(PI / 4.0 * (c(-PI, PI) + c(4.0, 4.0) * 2f64.ln() + 2.0 * ln(r)))
}

fn p8_lhs(_: &IdentityParameters) -> Vec<LhsForm> {
    unit_pole_form("log(log x) / ((1+√x) x^{1/4} (1-x²))", SingularKind::SimplePole, |x| {
        1.0 / ((1.0 + sqrt(x)) * powf(x, 0.25) * (1.0 - x * x))
    })
}

fn p8_rhs(_: &IdentityParameters, _: StirlingKind) -> R {
    let e = c(-2.0 + 2.0 * SQRT_2, 1.0);
    let big = pow(real(64.0), e) * gam(0.25)?.powi(8) / gam(0.75)?.powi(8);
    let r = PI * gam(5.0 / 8.0)? * gam(7.0 / 8.0)? / (gam(1.0 / 8.0)? * gam(3.0 / 8.0)?);
    Ok(PI / 8.0 * (c(0.0, -2.0) + c(-1.0, 2.0 * SQRT_2) * PI - 4.0 * PI.ln() + ln(big) + 4.0 * SQRT_2 * ln(r)))
}

// P9, P10, P12: double pole at the branch point

fn p9_lhs(_: &IdentityParameters) -> Vec<LhsForm> {
    unit_pole_form("√x log(log x) / ((x-1)² (1+x))", SingularKind::DoublePole, |x| {
        sqrt(x) / ((x - 1.0).powi(2) * (1.0 + x))
    })
}

fn p9_value(factor: C64) -> R {
    let r = -factor * (2.0 / PI).sqrt() * gam(0.25)? / gam(-0.25)?;
    Ok(0.5 * (-(2f64.ln()) + PI * ln(r)))
}

fn p9_rhs(_: &IdentityParameters, _: StirlingKind) -> R {
    p9_value(c(1.0, -1.0))
}

/// The P9 closed form with the factor `(1+i)` as printed.
pub fn p9_as_published() -> Result<C64, IdentityError> {
    p9_value(c(1.0, 1.0))
}

fn p10_lhs(_: &IdentityParameters) -> Vec<LhsForm> {
    unit_pole_form("(√x - x) log(log x) / ((x-1)² (1-x²))", SingularKind::DoublePole, |x| {
        (sqrt(x) - x) / ((x - 1.0).powi(2) * (1.0 - x * x))
    })
}

fn p10_rhs(_: &IdentityParameters, _: StirlingKind) -> R {
    let r = -2.0 * gam(0.25)? / gam(-0.25)?;
    let inner = I - c(1.0, 2.0) * PI - 4.0 * PI.ln() + 8.0 * ln(r);
    Ok((-8.0 * 2f64.ln() + PI * inner) / 32.0)
}

fn p12_lhs(_: &IdentityParameters) -> Vec<LhsForm> {
    unit_pole_form("(x^{1/4} - 1) log(log x) / ((x-1)² √x (1+x))", SingularKind::DoublePole, |x| {
        (powf(x, 0.25) - 1.0) / ((x - 1.0).powi(2) * sqrt(x) * (1.0 + x))
    })
}

fn p12_rhs(_: &IdentityParameters, _: StirlingKind) -> R {
    let r1 = c(0.0, PI / 4.0).exp();
    let r3 = c(0.0, 3.0 * PI / 4.0).exp();
    let g58 = gam(5.0 / 8.0)? / gam(1.0 / 8.0)?;
    let g38 = gam(3.0 / 8.0)? / gam(7.0 / 8.0)?;
    let prod = 81.0 * pow(g58, 4.0 * r1) * pow(g38, 4.0 * r3);
    let inner = c(0.0, -1.0) - c(13.0, -1.0) * 2f64.ln() + SQRT_2 * 64f64.ln() + (2.0 * SQRT_2 - 5.0) * PI.ln()
        + 6.0 * gam(0.25)?.re.ln()
        - 6.0 * gam(0.75)?.re.ln()
        + ln(prod)
        + 4.0 * lgam(-0.75)?
        - 4.0 * lgam(-0.25)?;
    Ok((c(1.0, -5.0 + 2.0 * SQRT_2) * PI * PI + 16f64.ln() + 2.0 * PI * inner) / 16.0)
}

pub(crate) static DEFS: [Def; 12] = [
    Def::new("P1", p1_check, p1_lhs, p1_rhs),
    Def::new("P2", none, p2_lhs, p2_rhs),
    Def::new("P3", p3_check, p3_lhs, p3_rhs),
    Def::new("P4", p4_check, p4_lhs, p4_rhs),
    Def::new("P5", bg_check, p5_lhs, p5_rhs),
    Def::new("P6", none, p6_lhs, p6_rhs),
    Def::new("P7", bg_check, p7_lhs, p7_rhs),
    Def::new("P8", none, p8_lhs, p8_rhs),
    Def::new("P9", none, p9_lhs, p9_rhs),
    Def::new("P10", none, p10_lhs, p10_rhs),
    Def::new("P11", p11_check, p11_lhs, p11_rhs),
    Def::new("P12", none, p12_lhs, p12_rhs),
];
