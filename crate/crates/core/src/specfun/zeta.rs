//! Hurwitz and Riemann zeta, derivatives and Stieltjes constants.

use super::cmath::{as_integer, exprel, ln, pow, real, I};
use crate::quad::TanhSinh;
use super::combinatorics::{bernoulli_over_factorial, bernoulli_poly_unchecked, TABLE_MAX};
use super::{log_gamma, SpecError, C64};
use std::f64::consts::PI;

/// Euler–Maclaurin parameters: direct terms `shift`, correction order `order`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EulerMaclaurin {
    pub shift: usize,
    pub order: usize,
}

impl Default for EulerMaclaurin {
    fn default() -> Self {
        Self { shift: 25, order: 12 }
    }
}

/// `ζ(s, a)` with default Euler–Maclaurin parameters.
pub fn hurwitz_zeta(s: C64, a: C64) -> Result<C64, SpecError> {
    hurwitz_zeta_with(s, a, EulerMaclaurin::default())
}

pub fn hurwitz_zeta_with(s: C64, a: C64, em: EulerMaclaurin) -> Result<C64, SpecError> {
    if s == real(1.0) {
        return Err(SpecError::pole("hurwitz_zeta", s));
    }
    check_a(a)?;
    if let Some(n) = nonpositive_order(s) {
        return Ok(-bernoulli_poly_unchecked(n + 1, a) / (n + 1) as f64);
    }
    if s.re < 0.0 {
        return Ok(abel_plana(s, a));
    }
    Ok(euler_maclaurin(s, a, em, false))
}

/// `ζ(s, a) - 1/(s-1)`, analytic at `s = 1` where it equals `-ψ(a)`.
pub fn hurwitz_zeta_regular(s: C64, a: C64) -> Result<C64, SpecError> {
    check_a(a)?;
    if let Some(n) = nonpositive_order(s) {
        return Ok(-bernoulli_poly_unchecked(n + 1, a) / (n + 1) as f64 - 1.0 / (s - 1.0));
    }
    if s.re < 0.0 {
        return Ok(abel_plana(s, a) - 1.0 / (s - 1.0));
    }
    Ok(euler_maclaurin(s, a, EulerMaclaurin::default(), true))
}

fn check_a(a: C64) -> Result<(), SpecError> {
    if a.re <= 0.0 || !a.re.is_finite() || !a.im.is_finite() {
        return Err(SpecError::domain("hurwitz_zeta", format!("Re(a) must be positive, got a = {a}")));
    }
    Ok(())
}

fn nonpositive_order(s: C64) -> Option<usize> {
    match as_integer(s) {
        Some(n) if n <= 0 && (-n as usize) < TABLE_MAX => Some((-n) as usize),
        _ => None,
    }
}

fn euler_maclaurin(s: C64, a: C64, em: EulerMaclaurin, drop_pole: bool) -> C64 {
    let n = em.shift;
    let mut sum = C64::new(0.0, 0.0);
    for k in 0..n {
        sum += pow(a + k as f64, -s);
    }
    let x = a + n as f64;
    let lx = ln(x);
    let x_neg_s = (-s * lx).exp();
    // X^{1-s}/(s-1) = 1/(s-1) - ln X · exprel(-(s-1) ln X)
    let tail = -lx * exprel(-(s - 1.0) * lx);
    sum += tail;
    if !drop_pole {
        sum += 1.0 / (s - 1.0);
    }
    sum += 0.5 * x_neg_s;
    let b = bernoulli_over_factorial();
    let xinv = x.inv();
    let x2inv = xinv * xinv;
    // term_j = B_{2j}/(2j)! (s)_{2j-1} X^{-s-2j+1}
    let mut poch = s;
    let mut xp = x_neg_s * xinv;
    for j in 1..=em.order {
        let t = b[j] * poch * xp;
        sum += t;
        if t.norm() < 1e-18 * sum.norm() && j > 2 {
            break;
        }
        poch *= (s + (2 * j - 1) as f64) * (s + (2 * j) as f64);
        xp *= x2inv;
    }
    sum
}

/// Abel–Plana form for `Re s < 0`, where Euler–Maclaurin partial sums grow
/// like `N^{-Re s}` and cancel:
/// `ζ(s,a) = a^{-s}/2 + a^{1-s}/(s-1) + i∫_0^∞ [(a+it)^{-s} - (a-it)^{-s}]/(e^{2πt}-1) dt`.
fn abel_plana(s: C64, a: C64) -> C64 {
    let la = ln(a);
    let a_neg_s = (-s * la).exp();
    let head = 0.5 * a_neg_s + a_neg_s * a / (s - 1.0);
    let integrand = |t: f64| -> C64 {
        let u = t / a;
        // (a+it)^{-s} - (a-it)^{-s} = 2 exp(mean) sinh(-i s atan(t/a))
        let mean = -0.5 * s * (ln(a + I * t) + ln(a - I * t));
        let diff = 2.0 * mean.exp() * sinh_small(-I * s * atan_small(u));
        I * diff / (2.0 * PI * t).exp_m1()
    };
    let mut upper = 6.0f64;
    for _ in 0..8 {
        let log_size = -s.re * (a.norm() + upper).ln() + 0.5 * PI * s.im.abs();
        upper = ((40.0 + log_size.max(0.0)) / (2.0 * PI)).max(6.0);
    }
    let scale = head.norm().max(a_neg_s.norm()).max(1.0);
    let rule = TanhSinh { max_level: 10, node_cap: 50_000 };
    // the integrand is nearly singular at t = -ia when Im a > 0
    let mut cuts = vec![0.0];
    if a.im > 0.0 && a.im < upper {
        cuts.push(a.im);
    }
    cuts.push(upper);
    let mut acc = head;
    for w in cuts.windows(2) {
        acc += rule.integrate(integrand, w[0], w[1], 1e-16 * scale).value;
    }
    acc
}

pub(crate) fn atan_small(u: C64) -> C64 {
    if u.norm() < 0.25 {
        let u2 = u * u;
        let mut term = u;
        let mut acc = u;
        for k in 1..24 {
            term *= -u2;
            acc += term / (2 * k + 1) as f64;
        }
        acc
    } else {
        u.atan()
    }
}

pub(crate) fn sinh_small(w: C64) -> C64 {
    if w.norm() < 0.5 {
        let w2 = w * w;
        let mut term = w;
        let mut acc = w;
        for k in 1..14 {
            term *= w2 / ((2 * k) * (2 * k + 1)) as f64;
            acc += term;
        }
        acc
    } else {
        w.sinh()
    }
}

/// `∂ζ(s, a)/∂s` by term-wise differentiation of the Euler–Maclaurin formula.
pub(crate) fn hurwitz_zeta_s_derivative_em(s: C64, a: C64) -> Result<C64, SpecError> {
    if s == real(1.0) {
        return Err(SpecError::pole("hurwitz_zeta", s));
    }
    check_a(a)?;
    let em = EulerMaclaurin::default();
    let n = em.shift;
    let mut sum = C64::new(0.0, 0.0);
    for k in 0..n {
        let y = a + k as f64;
        let ly = ln(y);
        sum -= ly * (-s * ly).exp();
    }
    let x = a + n as f64;
    let lx = ln(x);
    let x1s = ((1.0 - s) * lx).exp();
    sum += -lx * x1s / (s - 1.0) - x1s / ((s - 1.0) * (s - 1.0));
    let x_neg_s = (-s * lx).exp();
    sum -= 0.5 * lx * x_neg_s;
    let b = bernoulli_over_factorial();
    for j in 1..=em.order {
        let m = 2 * j - 1;
        let mut poch = C64::new(1.0, 0.0);
        let mut dpoch = C64::new(0.0, 0.0);
        for i in 0..m {
            let f = s + i as f64;
            dpoch = dpoch * f + poch;
            poch *= f;
        }
        let xp = x_neg_s * x.powi(-(m as i32));
        sum += b[j] * (dpoch - poch * lx) * xp;
    }
    Ok(sum)
}

/// `ζ(s)`; the reflection formula is used for non-integer `Re s < -1`.
pub fn riemann_zeta(s: C64) -> Result<C64, SpecError> {
    if s.re < -1.0 && as_integer(s).is_none() {
        return riemann_zeta_reflected(s);
    }
    hurwitz_zeta(s, real(1.0))
}

/// Richardson-extrapolated central difference with steps `h, h/2, h/4`.
///
/// Returns the two-level estimate and the size of the last correction.
pub fn richardson_derivative<F>(f: F, s: C64, h: f64) -> Result<(C64, f64), SpecError>
where
    F: Fn(C64) -> Result<C64, SpecError>,
{
    let d = |h: f64| -> Result<C64, SpecError> { Ok((f(s + h)? - f(s - h)?) / (2.0 * h)) };
    let d0 = d(h)?;
    let d1 = d(h / 2.0)?;
    let d2 = d(h / 4.0)?;
    let r0 = (4.0 * d1 - d0) / 3.0;
    let r1 = (4.0 * d2 - d1) / 3.0;
    let r = (16.0 * r1 - r0) / 15.0;
    Ok((r, (r - r1).norm()))
}

/// Step cascade `{1e-2, 5e-3, 2.5e-3}`.
pub const RICHARDSON_STEP: f64 = 1e-2;

/// `ζ'(s)` by Richardson-extrapolated central differences.
pub fn zeta_derivative(s: C64) -> Result<C64, SpecError> {
    if s == real(1.0) {
        return Err(SpecError::pole("zeta_derivative", s));
    }
    let one = real(1.0);
    if (s - 1.0).norm() < 4.0 * RICHARDSON_STEP {
        // differentiate the entire part and restore the pole
        let (g, _) = richardson_derivative(|t| hurwitz_zeta_regular(t, one), s, RICHARDSON_STEP)?;
        return Ok(g - 1.0 / ((s - 1.0) * (s - 1.0)));
    }
    Ok(richardson_derivative(riemann_zeta, s, RICHARDSON_STEP)?.0)
}

const STIELTJES_SAMPLES: usize = 32;
const STIELTJES_RADIUS: f64 = 0.5;

/// Generalized Stieltjes constant `γ_n(a)` for `n <= 2`, `a > 0`.
///
/// Samples `ζ(s,a) - 1/(s-1)` on a circle around `s = 1` and inverts the
/// discrete Fourier transform.
pub fn stieltjes_gamma(n: usize, a: f64) -> Result<f64, SpecError> {
    if n > 2 || a <= 0.0 || !a.is_finite() {
        return Err(SpecError::domain("stieltjes_gamma", format!("need n <= 2 and a > 0, got n = {n}, a = {a}")));
    }
    let mut acc = C64::new(0.0, 0.0);
    for j in 0..STIELTJES_SAMPLES {
        let theta = 2.0 * PI * j as f64 / STIELTJES_SAMPLES as f64;
        let e = C64::from_polar(1.0, theta);
        let g = hurwitz_zeta_regular(1.0 + STIELTJES_RADIUS * e, real(a))?;
        acc += g * e.powi(-(n as i32));
    }
    let coeff = acc / (STIELTJES_SAMPLES as f64 * STIELTJES_RADIUS.powi(n as i32));
    let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
    Ok(sign * super::combinatorics::factorial(n) * coeff.re)
}

/// `ζ(s) = 2^s π^{s-1} sin(πs/2) Γ(1-s) ζ(1-s)`.
fn riemann_zeta_reflected(s: C64) -> Result<C64, SpecError> {
    let one_minus = 1.0 - s;
    let z = riemann_zeta(one_minus)?;
    let g = log_gamma(one_minus)?.exp();
    Ok(pow(real(2.0), s) * pow(real(PI), s - 1.0) * (PI * s / 2.0).sin() * g * z)
}
