//! Hurwitz–Lerch transcendent `Φ(z, s, a)` and the polylogarithm.

use super::cmath::{as_integer, ln, pow, real, I};
use super::combinatorics::{binomial, factorial, StirlingKind};
use super::zeta::{atan_small, hurwitz_zeta_regular, sinh_small, richardson_derivative, RICHARDSON_STEP};
use super::{riemann_zeta, harmonic, log_gamma, SpecError, C64};
use num_integer::Integer;
use crate::quad::TanhSinh;
use std::f64::consts::PI;
use std::fmt;

/// Default bound on the denominator of a root-of-unity exponent.
pub const Q_MAX: u64 = 64;

/// Exponent `m = p/q` of `z = e^{2πim}` in lowest terms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RationalExponent {
    p: i64,
    q: u64,
}

impl RationalExponent {
    pub fn new(p: i64, q: u64) -> Result<Self, SpecError> {
        Self::with_max(p, q, Q_MAX)
    }

    pub fn with_max(p: i64, q: u64, q_max: u64) -> Result<Self, SpecError> {
        if q == 0 {
            return Err(SpecError::domain("RationalExponent", "zero denominator".into()));
        }
        let g = (p.unsigned_abs()).gcd(&q).max(1);
        let (p, q) = (p / g as i64, q / g);
        if q > q_max {
            return Err(SpecError::domain(
                "RationalExponent",
                format!("denominator {q} exceeds the configured maximum {q_max}"),
            ));
        }
        Ok(Self { p, q })
    }

    /// Recovers `p/q` from a float that is a rational with `q <= q_max` to 1e-12.
    pub fn from_f64(x: f64, q_max: u64) -> Result<Self, SpecError> {
        if !x.is_finite() {
            return Err(SpecError::domain("RationalExponent", format!("non-finite exponent {x}")));
        }
        for q in 1..=q_max {
            let p = (x * q as f64).round();
            if (p / q as f64 - x).abs() <= 1e-12 * x.abs().max(1.0) {
                return Self::with_max(p as i64, q, q_max);
            }
        }
        Err(SpecError::domain(
            "RationalExponent",
            format!("exponent {x} is not a rational with denominator <= {q_max}; only roots of unity are supported"),
        ))
    }

    pub fn p(self) -> i64 {
        self.p
    }

    pub fn q(self) -> u64 {
        self.q
    }

    pub fn value(self) -> f64 {
        self.p as f64 / self.q as f64
    }

    /// `e^{2πi·r·p/q}` with the angle reduced exactly.
    pub fn phase_power(self, r: i64) -> C64 {
        let k = (self.p * r).rem_euclid(self.q as i64);
        C64::from_polar(1.0, 2.0 * PI * k as f64 / self.q as f64)
    }

    /// `z = e^{2πip/q}`.
    pub fn z(self) -> C64 {
        self.phase_power(1)
    }

    pub fn is_unity(self) -> bool {
        self.p.rem_euclid(self.q as i64) == 0
    }
}

impl fmt::Display for RationalExponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.p, self.q)
    }
}

/// `Φ(e^{2πip/q}, s, a)` by the root-of-unity decomposition
/// `q^{-s} Σ_r e^{2πipr/q} ζ(s, (a+r)/q)` when `Re s >= 0`, by an Abel–Plana
/// integral otherwise.
pub fn lerch_phi(m: RationalExponent, s: C64, a: C64) -> Result<C64, SpecError> {
    if m.is_unity() {
        return Err(SpecError::domain(
            "lerch_phi",
            format!("z = 1 for m = {m}; use hurwitz_zeta"),
        ));
    }
    if a.re <= 0.0 {
        return Err(SpecError::domain("lerch_phi", format!("Re(a) must be positive, got a = {a}")));
    }
    if s.re < 0.0 {
        return Ok(lerch_abel_plana(m.p().rem_euclid(m.q() as i64) as f64 / m.q() as f64, s, a));
    }
    lerch_phi_decomposition(m, s, a)
}

/// The decomposition itself for every `s`. For `Re s < 0` the terms exceed the
/// result by up to `q^{-Re s}`, and so does the rounding error.
pub fn lerch_phi_decomposition(m: RationalExponent, s: C64, a: C64) -> Result<C64, SpecError> {
    if m.is_unity() {
        return Err(SpecError::domain("lerch_phi", format!("z = 1 for m = {m}; use hurwitz_zeta")));
    }
    if a.re <= 0.0 {
        return Err(SpecError::domain("lerch_phi", format!("Re(a) must be positive, got a = {a}")));
    }
    let q = m.q();
    let qf = q as f64;
    let mut acc = C64::new(0.0, 0.0);
    // Σ_r ω^r = 0 removes the common 1/(s-1) pole, so the regular part suffices.
    for r in 0..q {
        let w = m.phase_power(r as i64);
        acc += w * hurwitz_zeta_regular(s, (a + r as f64) / qf)?;
    }
    Ok(pow(real(qf), -s) * acc)
}

/// Abel–Plana form of `Φ(e^{2πiλ}, s, a)`, `0 < λ < 1`, for `Re s < 0`, where the
/// decomposition loses about `q^{-Re s}` to cancellation:
/// `a^{-s}/2 + i∫_0^∞ e^{-2πλy}(a+iy)^{-s} dy
///  + i∫_0^∞ [e^{-2πλt}(a+it)^{-s} - e^{2πλt}(a-it)^{-s}]/(e^{2πt}-1) dt`.
fn lerch_abel_plana(lambda: f64, s: C64, a: C64) -> C64 {
    let a_neg_s = pow(a, -s);
    let tau = 2.0 * PI * lambda;
    let ray = |y: f64| -> C64 { I * (-s * ln(a + I * y) - tau * y).exp() };
    let kernel = |t: f64| -> C64 {
        if t > 1.0 {
            let e = (-2.0 * PI * t).exp();
            let up = (-s * ln(a + I * t) - (tau + 2.0 * PI) * t).exp();
            let down = (-s * ln(a - I * t) + (tau - 2.0 * PI) * t).exp();
            return I * (up - down) / (1.0 - e);
        }
        // difference = 2 exp(mean) sinh(-2πλt - i s atan(t/a))
        let mean = -0.5 * s * (ln(a + I * t) + ln(a - I * t));
        let diff = 2.0 * mean.exp() * sinh_small(-tau * t - I * s * atan_small(t / a));
        I * diff / (2.0 * PI * t).exp_m1()
    };
    let decay = 2.0 * PI * lambda.min(1.0 - lambda);
    let mut upper = 6.0f64;
    for _ in 0..8 {
        let log_size = -s.re * (a.norm() + upper).ln() + 0.5 * PI * s.im.abs();
        upper = ((40.0 + log_size.max(0.0)) / decay).max(6.0);
    }
    // (a ± it) vanishes near t = |Im a|; geometric panels follow the slow decay
    let mut cuts = vec![0.0];
    if a.im != 0.0 && a.im.abs() < upper {
        cuts.push(a.im.abs());
    }
    let mut x = 1.0;
    while x < upper {
        if x > cuts[cuts.len() - 1] {
            cuts.push(x);
        }
        x *= 2.0;
    }
    cuts.push(upper);
    let tol = 1e-17 * a_neg_s.norm().max(1.0);
    let rule = TanhSinh { max_level: 10, node_cap: 50_000 };
    let mut acc = 0.5 * a_neg_s;
    for w in cuts.windows(2) {
        acc += rule.integrate(ray, w[0], w[1], tol).value;
        acc += rule.integrate(kernel, w[0], w[1], tol).value;
    }
    acc
}

/// `∂Φ/∂s` by Richardson-extrapolated central differences over [`lerch_phi`].
pub fn lerch_phi_s_derivative(m: RationalExponent, s: C64, a: C64) -> Result<C64, SpecError> {
    Ok(richardson_derivative(|t| lerch_phi(m, t, a), s, RICHARDSON_STEP)?.0)
}

const DISK_MAX_TERMS: usize = 2_000_000;

/// `Φ(z, s, a)` for `|z| < 1` by the defining series.
///
/// Nonpositive integer orders use the exact rational form
/// `Σ_j C(k,j) a^{k-j} Σ_n n^j z^n`, which stays accurate as `|z| → 1`.
pub fn lerch_phi_disk(z: C64, s: C64, a: C64) -> Result<C64, SpecError> {
    if z.norm() >= 1.0 {
        return Err(SpecError::domain("lerch_phi_disk", format!("|z| must be < 1, got |z| = {}", z.norm())));
    }
    if let Some(k) = as_integer(s).filter(|&k| k <= 0 && k >= -30) {
        let k = (-k) as usize;
        let mut acc = C64::new(0.0, 0.0);
        for j in 0..=k {
            acc += binomial(k, j) * a.powi((k - j) as i32) * power_sum(j, z);
        }
        return Ok(acc);
    }
    if a.re <= 0.0 && (a.im == 0.0 && a.re == a.re.round()) {
        return Err(SpecError::pole("lerch_phi_disk", a));
    }
    let mut sum = C64::new(0.0, 0.0);
    let mut zn = C64::new(1.0, 0.0);
    for n in 0..DISK_MAX_TERMS {
        let t = zn * pow(a + n as f64, -s);
        sum += t;
        if n > 8 && t.norm() <= 1e-17 * sum.norm() {
            return Ok(sum);
        }
        zn *= z;
    }
    Err(SpecError::domain("lerch_phi_disk", format!("series did not converge for |z| = {}", z.norm())))
}

/// `Σ_{n>=0} n^j z^n` (with `0^0 = 1`): `1/(1-z)` for `j = 0`, `Li_{-j}(z)` otherwise.
fn power_sum(j: usize, z: C64) -> C64 {
    let w = z / (1.0 - z);
    if j == 0 {
        return 1.0 + w;
    }
    // Li_{-j}(z) = Σ_{i=0}^{j} i! S(j+1, i+1) w^{i+1}
    let mut acc = C64::new(0.0, 0.0);
    let mut wp = w;
    for i in 0..=j {
        acc += factorial(i) * StirlingKind::Second.coefficient_f64(j + 1, i + 1) * wp;
        wp *= w;
    }
    acc
}

/// Polylogarithm `Li_s(x)` for real `x` in `[-1, 0) ∪ (0, 1)`.
pub fn polylog(s: C64, x: f64) -> Result<C64, SpecError> {
    if !(x >= -1.0 && x < 1.0) || x == 0.0 {
        return Err(SpecError::domain("polylog", format!("x must lie in [-1, 0) ∪ (0, 1), got {x}")));
    }
    if x == -1.0 {
        let half = RationalExponent::new(1, 2)?;
        return Ok(-lerch_phi(half, s, real(1.0))?);
    }
    if x.abs() <= 0.75 {
        return Ok(x * lerch_phi_disk(real(x), s, real(1.0))?);
    }
    if x < 0.0 {
        // Li_s(x) + Li_s(-x) = 2^{1-s} Li_s(x^2)
        return Ok(pow(real(2.0), 1.0 - s) * polylog(s, x * x)? - polylog(s, -x)?);
    }
    polylog_near_one(s, x.ln())
}

/// `Li_s(e^μ)` for small negative `μ` via the expansion in powers of `μ`.
fn polylog_near_one(s: C64, mu: f64) -> Result<C64, SpecError> {
    let mu_c = real(mu);
    let mut sum = C64::new(0.0, 0.0);
    let mut mk = C64::new(1.0, 0.0);
    let n_int = as_integer(s).filter(|&n| n >= 1);
    // trivial zeros of ζ make single terms vanish, so wait for two small ones
    let mut small = 0;
    for k in 0..80usize {
        if k > 0 {
            mk *= mu_c / k as f64;
        }
        if let Some(n) = n_int {
            if k as i64 == n - 1 {
                let h = harmonic(real((n - 1) as f64))?;
                sum += mk * (h - super::cmath::ln(real(-mu)));
                continue;
            }
        }
        let z = riemann_zeta(s - k as f64)?;
        let t = z * mk;
        sum += t;
        small = if t.norm() < 1e-18 * sum.norm() { small + 1 } else { 0 };
        if k > 4 && small >= 2 {
            break;
        }
    }
    if n_int.is_none() {
        sum += log_gamma(1.0 - s)?.exp() * pow(real(-mu), s - 1.0);
    }
    Ok(sum)
}

/// `Φ(e^{2πim}, s, a)` dispatched on the exponent: the disk series for
/// `Im m > 0`, the root-of-unity decomposition for real rational `m`.
pub fn lerch_phi_exp(m: C64, s: C64, a: C64) -> Result<C64, SpecError> {
    if m.im > 0.0 {
        let z = (2.0 * PI * I * m).exp();
        lerch_phi_disk(z, s, a)
    } else if m.im == 0.0 {
        lerch_phi(RationalExponent::from_f64(m.re, Q_MAX)?, s, a)
    } else {
        Err(SpecError::domain("lerch_phi_exp", format!("Im(m) < 0 puts z outside the unit disk (m = {m})")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::specfun::cmath::c;

    #[test]
    fn rational_exponent_reduces() {
        let r = RationalExponent::new(6, 8).unwrap();
        assert_eq!((r.p(), r.q()), (3, 4));
        let r = RationalExponent::from_f64(0.3, 64).unwrap();
        assert_eq!((r.p(), r.q()), (3, 10));
        assert!(RationalExponent::from_f64(std::f64::consts::FRAC_1_SQRT_2, 64).is_err());
        assert!(RationalExponent::new(1, 65).is_err());
    }

    #[test]
    fn alternating_values() {
        let half = RationalExponent::new(1, 2).unwrap();
        let v = lerch_phi(half, real(1.0), real(1.0)).unwrap();
        assert!((v - 2f64.ln()).norm() < 1e-15);
        let cat = lerch_phi(half, real(2.0), real(0.5)).unwrap();
        assert!((cat - 4.0 * 0.915_965_594_177_219_015).norm() < 1e-14);
        assert!(lerch_phi(RationalExponent::new(2, 2).unwrap(), real(2.0), real(1.0)).is_err());
    }

    #[test]
    fn disk_closed_form_matches_series() {
        let z = c(0.3, 0.4);
        let a = c(0.5, -0.2);
        let closed = lerch_phi_disk(z, real(-3.0), a).unwrap();
        let mut series = C64::new(0.0, 0.0);
        let mut zn = C64::new(1.0, 0.0);
        for n in 0..400 {
            series += zn * (a + n as f64).powi(3);
            zn *= z;
        }
        assert!((closed - series).norm() < 1e-12 * series.norm());
    }

    #[test]
    fn polylog_values() {
        let v = polylog(real(1.0), 0.5).unwrap();
        assert!((v - 2f64.ln()).norm() < 1e-15);
        let v = polylog(real(2.0), 0.9).unwrap();
        assert!((v.re - 1.299_714_723_004_958_8).abs() < 2e-15, "{v}");
        let v = polylog(real(-0.5), -1.0).unwrap();
        let z = riemann_zeta(real(-0.5)).unwrap();
        assert!((v - (2.0 * 2f64.sqrt() - 1.0) * z).norm() < 1e-14);
        let v = polylog(real(2.5), -0.95).unwrap();
        let direct: f64 = (1..200000).map(|n| (-0.95f64).powi(n) / (n as f64).powf(2.5)).sum();
        assert!((v.re - direct).abs() < 1e-13, "{v} {direct}");
        assert!(polylog(real(2.0), 1.0).is_err());
    }
}
