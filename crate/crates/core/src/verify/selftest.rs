//! Runtime invariant checks of the special functions.

use crate::specfun::cmath::{pow, real};
use crate::specfun::{
    bernoulli_poly, constants, factorial, gamma, hurwitz_zeta, hurwitz_zeta_regular, lerch_phi,
    lerch_phi_decomposition, log_gamma, polygamma, zeta_derivative,
    RationalExponent, SpecError, StirlingKind, C64,
};
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use std::f64::consts::PI;

const SEED: u64 = 7;
const SAMPLES: usize = 40;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SelfTestCase {
    pub name: &'static str,
    pub samples: usize,
    pub max_err: f64,
    pub tol: f64,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

fn case(name: &'static str, tol: f64, errs: Result<Vec<f64>, SpecError>) -> SelfTestCase {
    match errs {
        Ok(e) => {
            let max_err = e.iter().copied().fold(0.0, f64::max);
            let finite = e.iter().all(|x| x.is_finite());
            SelfTestCase { name, samples: e.len(), max_err, tol, pass: finite && max_err <= tol, error: None }
        }
        Err(err) => SelfTestCase { name, samples: 0, max_err: f64::NAN, tol, pass: false, error: Some(err.to_string()) },
    }
}

fn rng() -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(SEED)
}

/// `s ∈ [-5,5]²` away from 1, `Re a ∈ (0,3]`, `Im a ∈ [-1,1]`.
fn grid(n: usize) -> Vec<(C64, C64)> {
    let mut r = rng();
    let mut out = Vec::with_capacity(n);
    while out.len() < n {
        let s = C64::new(r.gen_range(-5.0..5.0), r.gen_range(-5.0..5.0));
        if (s - 1.0).norm() < 0.1 {
            continue;
        }
        let a = C64::new(r.gen_range(0.05..=3.0), r.gen_range(-1.0..=1.0));
        out.push((s, a));
    }
    out
}

fn hurwitz_shift() -> Result<Vec<f64>, SpecError> {
    grid(SAMPLES)
        .into_iter()
        .map(|(s, a)| {
            let z = hurwitz_zeta(s, a)?;
            Ok((z - hurwitz_zeta(s, a + 1.0)? - pow(a, -s)).norm() / (1.0 + z.norm()))
        })
        .collect()
}

fn bernoulli_reduction() -> Result<Vec<f64>, SpecError> {
    let mut out = Vec::new();
    for n in 0..=10usize {
        for a in [0.3, 1.0, 2.7] {
            let a = real(a);
            let z = hurwitz_zeta(real(-(n as f64)), a)?;
            let b = -bernoulli_poly(n + 1, a)? / (n as f64 + 1.0);
            out.push((z - b).norm() / b.norm().max(f64::MIN_POSITIVE));
        }
    }
    Ok(out)
}

fn lerch_recurrence() -> Result<Vec<f64>, SpecError> {
    let mut out = Vec::new();
    for q in [2u64, 3, 4, 6, 8] {
        let m = RationalExponent::new(1, q)?;
        for (s, a) in grid(8) {
            let lhs = lerch_phi(m, s, a)?;
            let next = m.z() * lerch_phi(m, s, a + 1.0)?;
            let tail = pow(a, -s);
            let scale = lhs.norm().max(next.norm()).max(tail.norm());
            out.push((lhs - next - tail).norm() / scale);
        }
    }
    Ok(out)
}

/// Abel–Plana route against the decomposition for `Re s < 0`, measured on the
/// decomposition's own scale `q^{-Re s} Σ_r |ζ(s, (a+r)/q)|`.
fn lerch_decomposition() -> Result<Vec<f64>, SpecError> {
    let mut out = Vec::new();
    for q in [2u64, 3, 4, 6, 8] {
        let m = RationalExponent::new(1, q)?;
        for (s, a) in grid(8) {
            let s = C64::new(-s.re.abs(), s.im);
            let qf = q as f64;
            let mut scale = 0.0;
            for r in 0..q {
                scale += hurwitz_zeta_regular(s, (a + r as f64) / qf)?.norm();
            }
            scale *= qf.powf(-s.re);
            out.push((lerch_phi(m, s, a)? - lerch_phi_decomposition(m, s, a)?).norm() / scale);
        }
    }
    Ok(out)
}

/// `Σ (-1)^n (n+a)^{-s}` by Cohen–Rodriguez Villegas–Zagier acceleration.
fn alternating(s: C64, a: f64) -> C64 {
    const N: usize = 40;
    let mut d = (3.0 + 8f64.sqrt()).powi(N as i32);
    d = (d + 1.0 / d) / 2.0;
    let (mut b, mut c) = (-1.0, -d);
    let mut sum = C64::new(0.0, 0.0);
    for k in 0..N {
        c = b - c;
        sum += c * pow(real(k as f64 + a), -s);
        let (kf, nf) = (k as f64, N as f64);
        b *= (kf + nf) * (kf - nf) / ((kf + 0.5) * (kf + 1.0));
    }
    sum / d
}

fn alternating_cross_check() -> Result<Vec<f64>, SpecError> {
    let half = RationalExponent::new(1, 2)?;
    let mut r = rng();
    (0..SAMPLES)
        .map(|_| {
            let s = C64::new(r.gen_range(0.1..5.0), r.gen_range(-1.0..1.0));
            let a = r.gen_range(0.1..3.0);
            let phi = lerch_phi(half, s, real(a))?;
            Ok((phi - alternating(s, a)).norm() / phi.norm())
        })
        .collect()
}

fn polygamma_bridge() -> Result<Vec<f64>, SpecError> {
    let mut r = rng();
    let mut out = Vec::new();
    for n in 1..=3usize {
        for _ in 0..10 {
            let z = C64::new(r.gen_range(0.1..5.0), r.gen_range(-3.0..3.0));
            let p = polygamma(n, z)?;
            let sign = if n % 2 == 1 { 1.0 } else { -1.0 };
            let h = sign * factorial(n) * hurwitz_zeta(real(n as f64 + 1.0), z)?;
            out.push((p - h).norm() / h.norm());
        }
    }
    Ok(out)
}

/// Exact check at integer `x`: 0 when every identity holds.
fn stirling_generating() -> Result<Vec<f64>, SpecError> {
    let falling = |x: i64, j: usize| (0..j as i64).map(|i| BigInt::from(x - i)).product::<BigInt>();
    let rising = |x: i64, j: usize| (0..j as i64).map(|i| BigInt::from(x + i)).product::<BigInt>();
    let mut out = Vec::new();
    for j in 0..=8usize {
        for x in 0..=8i64 {
            let poly = |kind: StirlingKind| -> BigInt {
                (0..=j).map(|p| kind.coefficient(j, p) * BigInt::from(x).pow(p as u32)).sum()
            };
            let second: BigInt = (0..=j).map(|p| StirlingKind::Second.coefficient(j, p) * falling(x, p)).sum();
            let ok = poly(StirlingKind::SignedFirst) == falling(x, j)
                && poly(StirlingKind::UnsignedFirst) == rising(x, j)
                && second == BigInt::from(x).pow(j as u32);
            out.push(if ok { 0.0 } else { 1.0 });
        }
    }
    Ok(out)
}

fn gamma_recurrence() -> Result<Vec<f64>, SpecError> {
    let mut r = rng();
    (0..SAMPLES)
        .map(|_| {
            let z = C64::new(r.gen_range(-6.0..6.0), r.gen_range(-4.0..4.0));
            if (z - z.re.round()).norm() < 0.05 && z.re <= 0.5 {
                return Ok(0.0);
            }
            let lhs = log_gamma(z + 1.0)?.exp();
            let rhs = z * log_gamma(z)?.exp();
            let direct = gamma(z)? * z;
            Ok(((lhs - rhs).norm() / lhs.norm()).max((lhs - direct).norm() / lhs.norm()))
        })
        .collect()
}

fn zeta_derivative_values() -> Result<Vec<f64>, SpecError> {
    let at0 = zeta_derivative(real(0.0))? - real(-0.5 * (2.0 * PI).ln());
    let at1 = zeta_derivative(real(-1.0))? - real(1.0 / 12.0 - constants().log_glaisher);
    Ok(vec![at0.norm(), at1.norm()])
}

/// The invariant suite, in a fixed order.
pub fn selftest() -> Vec<SelfTestCase> {
    vec![
        case("hurwitz shift", 1e-12, hurwitz_shift()),
        case("bernoulli reduction", 1e-13, bernoulli_reduction()),
        case("lerch recurrence", 1e-12, lerch_recurrence()),
        case("lerch decomposition cross-check", 1e-12, lerch_decomposition()),
        case("alternating cross-check", 1e-12, alternating_cross_check()),
        case("polygamma bridge", 1e-12, polygamma_bridge()),
        case("stirling generating identity", 0.0, stirling_generating()),
        case("gamma recurrence", 1e-12, gamma_recurrence()),
        case("zeta'(0), zeta'(-1)", 1e-10, zeta_derivative_values()),
    ]
}
