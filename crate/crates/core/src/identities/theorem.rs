//! The general closed form and the corrected table entry it extends.

use super::forms::{arg2, int_at_least, lerch_exponent, off_cut, phi, qsum, sign, HCache};
use super::{catalog, IdentityError, IdentityParameters, LhsForm};
use crate::quad::{IntegrandSpec, SingularKind};
use crate::specfun::cmath::{ln, neg_one_pow, pow, real};
use crate::specfun::{binomial, factorial, pochhammer, richardson_derivative, StirlingKind, C64, RICHARDSON_STEP};
use std::f64::consts::PI;

/// Offsets used by the real-m limit mode: `δ, δ/2, δ/4`.
pub const LIMIT_DELTA: f64 = 1e-4;

pub(crate) fn check_theorem(p: &IdentityParameters) -> Result<(), String> {
    if !(p.m.re > 0.0 && p.m.re < 1.0) {
        return Err(format!("Re(m) = {} is outside (0, 1)", p.m.re));
    }
    if !(p.m.im > 0.0 && p.m.im < 1.0) {
        return Err(format!("Im(m) = {} is outside (0, 1); real m needs the limit mode", p.m.im));
    }
    check_common(p)
}

fn check_common(p: &IdentityParameters) -> Result<(), String> {
    int_at_least(p.k, "k", 0)?;
    int_at_least(p.n, "n", 1)?;
    off_cut(p.a, "a")?;
    off_cut(p.b, "b")?;
    off_cut(p.gamma, "γ")?;
    super::forms::distinct(p.b, p.gamma, "b and γ")
}

/// Closed form of `∫_0^∞ x^{m-1} log^k(ax) / ((b+x)(x+γ)^n) dx` for `m` in the strip.
pub fn eval_rhs_main_theorem(p: &IdentityParameters) -> Result<C64, IdentityError> {
    eval_rhs_main_theorem_with(p, catalog().stirling)
}

/// As [`eval_rhs_main_theorem`] with an explicit reading of `S_j^{(p)}`.
pub fn eval_rhs_main_theorem_with(p: &IdentityParameters, kind: StirlingKind) -> Result<C64, IdentityError> {
    check_theorem(p).map_err(|d| IdentityError::domain("THM", d))?;
    theorem_closed_form(p, kind)
}

/// Real-m limit mode: Richardson extrapolation of the strip values at
/// `m + iδ`, `m + iδ/2`, `m + iδ/4` with `δ = LIMIT_DELTA`.
pub fn eval_rhs_main_theorem_limit(p: &IdentityParameters) -> Result<C64, IdentityError> {
    if p.m.im != 0.0 || !(p.m.re > 0.0 && p.m.re < 1.0) {
        return Err(IdentityError::domain("THM", format!("limit mode needs real m in (0, 1), got m = {}", p.m)));
    }
    check_common(p).map_err(|d| IdentityError::domain("THM", d))?;
    let at = |d: f64| {
        let mut q = *p;
        q.m = C64::new(p.m.re, d);
        eval_rhs_main_theorem(&q)
    };
    let (f0, f1, f2) = (at(LIMIT_DELTA)?, at(LIMIT_DELTA / 2.0)?, at(LIMIT_DELTA / 4.0)?);
    let r0 = 2.0 * f1 - f0;
    let r1 = 2.0 * f2 - f1;
    Ok((4.0 * r1 - r0) / 3.0)
}

/// Evaluates the closed form for any `m` with `Im m >= 0` (rational when real).
pub(crate) fn theorem_closed_form(p: &IdentityParameters, kind: StirlingKind) -> Result<C64, IdentityError> {
    let (m, a, b, g) = (p.m, p.a, p.b, p.gamma);
    lerch_exponent(m, "m").map_err(|d| IdentityError::domain("THM", d))?;
    let k = p.k as usize;
    let n = p.n as usize;
    let kf = k as f64;
    let tpi = C64::new(0.0, 2.0 * PI);
    let gb = g - b;
    let gbn = gb.powi(-(n as i32));

    let mut total =
        pow(b, m - 1.0) * neg_one_pow(m + 1.0) * tpi.powi(k as i32 + 1) * gbn * phi(m, -kf, arg2(a, b))?;

    let ag = arg2(a, g);
    let mut phis = HCache::new(|h| phi(m, h as f64 - kf, ag));
    let sm = neg_one_pow(m);
    let gm = pow(g, m - 1.0);
    let ratio = gb / g;
    total += qsum(n, kind, |j, p, l, h| {
        let poch = pochhammer(real(1.0 + kf - h as f64), h);
        if poch == C64::new(0.0, 0.0) {
            return Ok(poch);
        }
        let e = p as i32 - l as i32 - h as i32;
        Ok(sign(j as i64 - l as i64)
            * sm
            * m.powi(e)
            * tpi.powi(1 + k as i32 - h as i32)
            * gm
            * gbn
            * ratio.powi(j as i32)
            * (binomial(p, l) * binomial(p - l, h) / factorial(j))
            * poch
            * phis.get(h)?)
    })?;
    Ok(total)
}

pub(crate) fn theorem_rhs(p: &IdentityParameters, kind: StirlingKind) -> Result<C64, IdentityError> {
    if p.m.im == 0.0 {
        // real m: the root-of-unity decomposition evaluates the boundary value directly
        return theorem_closed_form(p, kind);
    }
    eval_rhs_main_theorem_with(p, kind)
}

pub(crate) fn theorem_check(p: &IdentityParameters) -> Result<(), String> {
    if p.m.im == 0.0 && p.m.re > 0.0 && p.m.re < 1.0 {
        return check_common(p);
    }
    check_theorem(p)
}

pub(crate) fn theorem_lhs(p: &IdentityParameters) -> Vec<LhsForm> {
    let (m, a, b, g) = (p.m, p.a, p.b, p.gamma);
    let k = p.k as i32;
    let n = p.n as i32;
    let f = IntegrandSpec::new(
        move |x: C64| pow(x, m - 1.0) * ln(a * x).powi(k) / ((b + x) * (x + g).powi(n)),
        "principal-power",
    )
    .with_singular(0.0, SingularKind::Algebraic);
    vec![LhsForm::semi_infinite("x^{m-1} log^k(ax) / ((b+x)(x+γ)^n)", f)]
}

// Corrected table entry.

pub(crate) fn gr2_check(p: &IdentityParameters) -> Result<(), String> {
    let n = int_at_least(p.n, "n", 1)?;
    off_cut(p.b, "b")?;
    off_cut(p.gamma, "γ")?;
    if !(p.v.re > 0.0 && p.v.re < n as f64) {
        return Err(format!("Re(v) = {} is outside (0, n) with n = {n}", p.v.re));
    }
    if (p.v.re.fract() == 0.0) && p.v.im == 0.0 {
        return Err(format!("csc(πv) is singular at integer v = {}", p.v.re));
    }
    super::forms::distinct(p.b, p.gamma, "b and γ")
}

/// `π b^{v-1} csc(πv) (γ-b)^{-n} [1 - (γ/b)^{v-1} Σ_{j<n} (1-v)_j ((γ-b)/γ)^j / j!]`.
pub fn eval_rhs_gr2(p: &IdentityParameters) -> Result<C64, IdentityError> {
    gr2_check(p).map_err(|d| IdentityError::domain("GR2", d))?;
    gr2_closed_form(p)
}

fn gr2_closed_form(p: &IdentityParameters) -> Result<C64, IdentityError> {
    let (v, b, g) = (p.v, p.b, p.gamma);
    let n = p.n as usize;
    if b == g {
        return Err(IdentityError::Degenerate { id: "GR2".into(), detail: "b = γ".into() });
    }
    let ratio = (g - b) / g;
    let mut sum = C64::new(0.0, 0.0);
    for j in 0..n {
        sum += pochhammer(1.0 - v, j) * ratio.powi(j as i32) / factorial(j);
    }
    Ok(PI * pow(b, v - 1.0) / (PI * v).sin() * (g - b).powi(-(n as i32)) * (1.0 - pow(g / b, v - 1.0) * sum))
}

pub(crate) fn gr2_rhs(p: &IdentityParameters, _: StirlingKind) -> Result<C64, IdentityError> {
    gr2_closed_form(p)
}

pub(crate) fn gr2_lhs(p: &IdentityParameters) -> Vec<LhsForm> {
    let (v, b, g) = (p.v, p.b, p.gamma);
    let n = p.n as i32;
    let f = IntegrandSpec::new(move |x: C64| pow(x, v - 1.0) * (g + x).powi(-n) / (x + b), "principal-power")
        .with_singular(0.0, SingularKind::Algebraic);
    vec![LhsForm::semi_infinite("x^{v-1} (γ+x)^{-n} / (x+b)", f)]
}

/// Second form of E2 for `n ∈ {1, 2}` (with `a = α`):
/// `-π/sin θ · ∂ⁿ/∂sⁿ [α^{s-2} csc(sπ) sin((s-1)θ)]` at `s = 1`.
pub fn e2_derivative_form(alpha: f64, theta: f64, n: usize) -> Result<C64, IdentityError> {
    derivative_core(alpha, theta, n).map(|d| -PI / theta.sin() * d)
}

/// The same derivative with the published factor `-π cos θ`.
pub fn e2_derivative_form_as_published(alpha: f64, theta: f64, n: usize) -> Result<C64, IdentityError> {
    derivative_core(alpha, theta, n).map(|d| -PI * theta.cos() * d)
}

fn derivative_core(alpha: f64, theta: f64, n: usize) -> Result<C64, IdentityError> {
    let f = move |s: C64| -> Result<C64, crate::specfun::SpecError> {
        if (s - 1.0).norm() < 1e-300 {
            // removable point
            return Ok(real(-theta / (PI * alpha)));
        }
        Ok(pow(real(alpha), s - 2.0) / (PI * s).sin() * ((s - 1.0) * theta).sin())
    };
    let one = real(1.0);
    match n {
        1 => Ok(richardson_derivative(f, one, RICHARDSON_STEP)?.0),
        2 => {
            let d2 = |h: f64| -> Result<C64, IdentityError> {
                Ok((f(one + h)? - 2.0 * f(one)? + f(one - h)?) / (h * h))
            };
            let h = RICHARDSON_STEP;
            let (d0, d1, d2v) = (d2(h)?, d2(h / 2.0)?, d2(h / 4.0)?);
            let r0 = (4.0 * d1 - d0) / 3.0;
            let r1 = (4.0 * d2v - d1) / 3.0;
            Ok((16.0 * r1 - r0) / 15.0)
        }
        _ => Err(IdentityError::domain("E2", format!("the derivative form is implemented for n ∈ {{1, 2}}, got {n}"))),
    }
}

pub(crate) static THM_DEF: super::Def = super::Def::new("THM", theorem_check, theorem_lhs, theorem_rhs);
pub(crate) static GR2_DEF: super::Def = super::Def::new("GR2", gr2_check, gr2_lhs, gr2_rhs);
