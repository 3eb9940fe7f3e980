//! Building blocks shared by the closed forms.

use super::IdentityError;
use crate::quad::IntegrandSpec;
use std::sync::Arc;
use crate::specfun::cmath::{ln, real, I};
use crate::specfun::{gamma, lerch_phi_exp, log_gamma, StirlingKind, C64};
use std::f64::consts::PI;

/// `(π - i log x) / (2π)`.
pub(crate) fn arg1(x: C64) -> C64 {
    (PI - I * ln(x)) / (2.0 * PI)
}

/// `(π - i(log a + log x)) / (2π)`, logs taken separately.
pub(crate) fn arg2(a: C64, x: C64) -> C64 {
    (PI - I * (ln(a) + ln(x))) / (2.0 * PI)
}

/// `log(log z)`, principal at both levels.
pub(crate) fn loglog(z: C64) -> C64 {
    ln(ln(z))
}

/// Integrand given as `g(x, log x, x - 1)`. Near `x = 1` the last two
/// arguments come from the exact offset instead of the rounded `x`.
pub(crate) fn log_integrand<G>(note: &str, g: G) -> IntegrandSpec
where
    G: Fn(C64, C64, C64) -> C64 + Send + Sync + 'static,
{
    let g = Arc::new(g);
    let h = g.clone();
    IntegrandSpec::new(move |x: C64| g(x, ln(x), x - 1.0), note)
        .with_unit_offset(move |u: f64| h(real(1.0 + u), real(u.ln_1p()), real(u)))
}

/// `Φ(e^{2πim}, s, a)`.
pub(crate) fn phi(m: C64, s: f64, a: C64) -> Result<C64, IdentityError> {
    Ok(lerch_phi_exp(m, real(s), a)?)
}

/// `Γ(x)` for real `x`, as a real number.
pub(crate) fn gam(x: f64) -> Result<C64, IdentityError> {
    Ok(real(gamma(real(x))?.re))
}

/// `log Γ(x)` with the upper-lip convention on the negative axis.
pub(crate) fn lgam(x: f64) -> Result<C64, IdentityError> {
    Ok(log_gamma(real(x))?)
}

pub(crate) fn sign(e: i64) -> f64 {
    if e.rem_euclid(2) == 0 {
        1.0
    } else {
        -1.0
    }
}

/// `Σ_{j<jn} Σ_{p≤j} Σ_{l≤p} Σ_{h≤p-l} term(j,p,l,h) S_j^{(p)}`.
///
/// Terms with a vanishing coefficient are not evaluated.
pub(crate) fn qsum<F>(jn: usize, kind: StirlingKind, mut term: F) -> Result<C64, IdentityError>
where
    F: FnMut(usize, usize, usize, usize) -> Result<C64, IdentityError>,
{
    let mut acc = C64::new(0.0, 0.0);
    for j in 0..jn {
        for p in 0..=j {
            let s = kind.coefficient_f64(j, p);
            if s == 0.0 {
                continue;
            }
            for l in 0..=p {
                for h in 0..=(p - l) {
                    acc += term(j, p, l, h)? * s;
                }
            }
        }
    }
    Ok(acc)
}

/// Lazily filled table indexed by `h`.
pub(crate) struct HCache<F> {
    values: Vec<Option<C64>>,
    f: F,
}

impl<F: FnMut(usize) -> Result<C64, IdentityError>> HCache<F> {
    pub(crate) fn new(f: F) -> Self {
        Self { values: Vec::new(), f }
    }

    pub(crate) fn get(&mut self, h: usize) -> Result<C64, IdentityError> {
        if self.values.len() <= h {
            self.values.resize(h + 1, None);
        }
        if let Some(v) = self.values[h] {
            return Ok(v);
        }
        let v = (self.f)(h)?;
        self.values[h] = Some(v);
        Ok(v)
    }
}

// Validation helpers: each returns the offending detail.

pub(crate) fn int_at_least(x: f64, name: &str, min: i64) -> Result<usize, String> {
    if x.fract() != 0.0 || !x.is_finite() || (x as i64) < min {
        return Err(format!("{name} must be an integer >= {min}, got {x}"));
    }
    Ok(x as usize)
}

pub(crate) fn off_cut(z: C64, name: &str) -> Result<(), String> {
    if z.im == 0.0 && z.re <= 0.0 {
        return Err(format!("{name} = {z} lies on the cut (-∞, 0]"));
    }
    if !(z.re.is_finite() && z.im.is_finite()) {
        return Err(format!("{name} must be finite"));
    }
    Ok(())
}

pub(crate) fn real_positive(z: C64, name: &str) -> Result<f64, String> {
    if z.im != 0.0 || !(z.re > 0.0) || !z.re.is_finite() {
        return Err(format!("{name} must be a positive real, got {z}"));
    }
    Ok(z.re)
}

pub(crate) fn re_between(z: C64, name: &str, lo: f64, hi: f64) -> Result<(), String> {
    if !(z.re > lo && z.re < hi) {
        return Err(format!("Re({name}) = {} is outside ({lo}, {hi})", z.re));
    }
    Ok(())
}

/// Lerch exponents must have `Im ≥ 0` (|z| ≤ 1).
pub(crate) fn lerch_exponent(z: C64, name: &str) -> Result<(), String> {
    if z.im < 0.0 {
        return Err(format!("Im({name}) < 0 puts e^(2πi{name}) outside the unit disk"));
    }
    Ok(())
}

pub(crate) fn distinct(x: C64, y: C64, what: &str) -> Result<(), String> {
    if (x - y).norm() <= 1e-12 * (1.0 + x.norm()) {
        return Err(format!("{what} coincide (removable only as a limit)"));
    }
    Ok(())
}
