//! Log-gamma, polygamma and harmonic numbers.

use super::cmath::{is_nonpositive_integer, ln};
use super::combinatorics::{bernoulli_number, factorial};
use super::{constants, SpecError, C64};
use std::f64::consts::PI;

const STIRLING_TERMS: usize = 14;
const SHIFT_RADIUS: f64 = 16.0;

/// Analytic `ln Γ(z)` on the plane cut along the negative real axis.
///
/// Negative real arguments take the limit from the upper half-plane.
pub fn log_gamma(z: C64) -> Result<C64, SpecError> {
    if is_nonpositive_integer(z) {
        return Err(SpecError::pole("log_gamma", z));
    }
    let shift = if z.re < SHIFT_RADIUS { (SHIFT_RADIUS - z.re).ceil() as usize } else { 0 };
    let mut correction = C64::new(0.0, 0.0);
    for k in 0..shift {
        correction += ln(z + k as f64);
    }
    Ok(stirling_series(z + shift as f64) - correction)
}

fn stirling_series(w: C64) -> C64 {
    let mut s = (w - 0.5) * ln(w) - w + 0.5 * (2.0 * PI).ln();
    let w2 = w * w;
    let mut wp = w;
    for k in 1..=STIRLING_TERMS {
        let b = bernoulli_number(2 * k);
        s += b / ((2 * k * (2 * k - 1)) as f64 * wp);
        wp *= w2;
    }
    s
}

/// `Γ(z)` as `exp(ln Γ(z))`.
pub fn gamma(z: C64) -> Result<C64, SpecError> {
    Ok(log_gamma(z)?.exp())
}

/// Polygamma `ψ^{(n)}(z)`; `n = 0` is the digamma function.
///
/// Upward recurrence to `|z| >= 20 + n`, then the asymptotic series.
pub fn polygamma(order: usize, z: C64) -> Result<C64, SpecError> {
    if is_nonpositive_integer(z) {
        return Err(SpecError::pole("polygamma", z));
    }
    let radius = 20.0 + order as f64;
    let shift = if z.re < radius { (radius - z.re).ceil() as usize } else { 0 };
    let w = z + shift as f64;
    let n = order as i32;
    let nf = factorial(order);
    let sign = if order % 2 == 0 { -1.0 } else { 1.0 };

    let mut recur = C64::new(0.0, 0.0);
    for k in 0..shift {
        recur += (z + k as f64).powi(-(n + 1));
    }

    let winv = w.inv();
    let asym = if order == 0 {
        let mut s = ln(w) - 0.5 * winv;
        let w2inv = winv * winv;
        let mut p = w2inv;
        for k in 1..=STIRLING_TERMS {
            s -= bernoulli_number(2 * k) / (2 * k) as f64 * p;
            p *= w2inv;
        }
        s
    } else {
        // (-1)^{n+1}[(n-1)!/w^n + n!/(2w^{n+1}) + Σ B_{2k}(2k+n-1)!/((2k)! w^{2k+n})]
        let mut s = factorial(order - 1) * winv.powi(n) + 0.5 * nf * winv.powi(n + 1);
        let w2inv = winv * winv;
        let mut p = winv.powi(n) * w2inv;
        let mut ratio = factorial(order + 1) / 2.0; // (2k+n-1)!/(2k)! at k = 1
        for k in 1..=STIRLING_TERMS {
            if k > 1 {
                let kk = 2 * k;
                ratio *= ((kk + order - 2) * (kk + order - 1)) as f64 / ((kk - 1) * kk) as f64;
            }
            s += bernoulli_number(2 * k) * ratio * p;
            p *= w2inv;
        }
        sign * s
    };
    // ψ^{(n)}(z) = ψ^{(n)}(z+N) - (-1)^n n! Σ (z+k)^{-n-1}
    Ok(asym + sign * nf * recur)
}

/// `H_z = ψ(z+1) + γ`.
pub fn harmonic(z: C64) -> Result<C64, SpecError> {
    if is_nonpositive_integer(z + 1.0) {
        return Err(SpecError::pole("harmonic", z));
    }
    Ok(polygamma(0, z + 1.0)? + constants().euler_gamma)
}
