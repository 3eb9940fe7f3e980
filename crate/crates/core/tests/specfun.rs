use malmsten::specfun::cmath::{c, pow, real};
use malmsten::specfun::*;
use num_bigint::BigInt;
use proptest::prelude::*;
use std::f64::consts::PI;

fn rel(a: C64, b: C64) -> f64 {
    (a - b).norm() / b.norm()
}

fn close(got: C64, want: C64, tol: f64) {
    assert!(rel(got, want) <= tol, "got {got}, want {want}, rel {:e}", rel(got, want));
}

// Reference values from mpmath at 30 digits.

#[test]
fn hurwitz_reference_values() {
    close(hurwitz_zeta(c(1.5, 0.5), real(0.25)).unwrap(), c(7.3676262972854676949, 4.0964480164137250657), 1e-12);
    close(hurwitz_zeta(real(-2.3), c(0.6, 0.4)).unwrap(), c(-0.00073794317918976744349, 0.046773025923817411976), 1e-11);
    close(hurwitz_zeta(real(4.0), real(3.5)).unwrap(), real(0.011717641469542008543), 1e-12);
}

#[test]
fn zeta_derivative_reference() {
    close(zeta_derivative(real(-2.5)).unwrap(), real(-0.0062657363721897584033), 1e-10);
    let a = constants().log_glaisher;
    assert!((zeta_derivative(real(0.0)).unwrap() - real(-0.5 * (2.0 * PI).ln())).norm() <= 1e-10);
    assert!((zeta_derivative(real(-1.0)).unwrap() - real(1.0 / 12.0 - a)).norm() <= 1e-10);
}

#[test]
fn lerch_reference_values() {
    let m = RationalExponent::new(3, 8).unwrap();
    close(lerch_phi(m, real(0.7), real(1.9)).unwrap(), c(0.38073605752784878591, 0.12312422493768369891), 1e-12);
    close(lerch_phi_disk(c(0.0, 0.5), real(1.5), real(0.3)).unwrap(), c(6.0202941675848713501, 0.318701583230055299), 1e-12);
    // Φ(e^{2πi/3}, -2, 0.7)
    let third = RationalExponent::new(1, 3).unwrap();
    close(lerch_phi(third, real(-2.0), real(0.7)).unwrap(), c(-0.22166666666666666815, -0.050999273778416960479), 1e-12);
    // strong cancellation in q^{-s} Σ ω^r ζ(s, (a+r)/q) here
    let m = RationalExponent::new(7, 8).unwrap();
    let (s, a) = (c(-3.626309670217696, 3.4343466376098313), c(0.05, -0.8787225082321778));
    close(lerch_phi(m, s, a).unwrap(), c(0.081584558878838428801, -0.065064332062533139102), 1e-12);
}

#[test]
fn other_reference_values() {
    close(polylog(real(-1.5), 0.3).unwrap(), real(0.8038879282853406987), 1e-12);
    close(gamma(c(0.1, -2.2)).unwrap(), c(0.025627656401360780297, 0.051798094581064615052), 1e-12);
    close(log_gamma(c(-3.7, 0.01)).unwrap(), c(-1.3804817058744864258, -12.57480990881456866), 1e-12);
    close(polygamma(2, real(0.7)).unwrap(), real(-6.4349928741909236943), 1e-12);
    close(harmonic(c(-0.5, 1.0)).unwrap(), c(0.52545401390712031781, 1.5649405178158792826), 1e-12);
    close(bernoulli_poly(5, c(0.25, 0.5)).unwrap(), c(-0.2197265625, 0.061848958333333333333), 1e-13);
    assert!((stieltjes_gamma(1, 1.0).unwrap() - -0.072815845483676724861).abs() <= 1e-9);
    assert!((stieltjes_gamma(2, 0.3).unwrap() - 4.827796360506635827).abs() <= 1e-9);
}

#[test]
fn stirling_generating_identity_is_exact() {
    for j in 0..=8usize {
        for x in 0..=8i64 {
            let falling: BigInt = (0..j as i64).map(|i| BigInt::from(x - i)).product();
            let rising: BigInt = (0..j as i64).map(|i| BigInt::from(x + i)).product();
            let xp = |p: usize| BigInt::from(x).pow(p as u32);
            let signed: BigInt = (0..=j).map(|p| StirlingKind::SignedFirst.coefficient(j, p) * xp(p)).sum();
            let unsigned: BigInt = (0..=j).map(|p| StirlingKind::UnsignedFirst.coefficient(j, p) * xp(p)).sum();
            let second: BigInt = (0..=j)
                .map(|p| StirlingKind::Second.coefficient(j, p) * (0..p as i64).map(|i| BigInt::from(x - i)).product::<BigInt>())
                .sum();
            assert_eq!(signed, falling, "signed, j={j}, x={x}");
            assert_eq!(unsigned, rising, "unsigned, j={j}, x={x}");
            assert_eq!(second, xp(j), "second kind, j={j}, x={x}");
        }
    }
}

#[test]
fn irrational_exponent_is_rejected() {
    assert!(RationalExponent::from_f64(std::f64::consts::FRAC_1_SQRT_2, Q_MAX).is_err());
}

/// `Σ (-1)^n (n+a)^{-s}` accelerated (Cohen, Rodriguez Villegas, Zagier).
fn alternating(s: C64, a: f64) -> C64 {
    const N: usize = 40;
    let mut d = (3.0 + 8f64.sqrt()).powi(N as i32);
    d = (d + 1.0 / d) / 2.0;
    let (mut b, mut cc) = (-1.0, -d);
    let mut sum = C64::new(0.0, 0.0);
    for k in 0..N {
        cc = b - cc;
        sum += cc * pow(real(k as f64 + a), -s);
        let (kf, nf) = (k as f64, N as f64);
        b *= (kf + nf) * (kf - nf) / ((kf + 0.5) * (kf + 1.0));
    }
    sum / d
}

fn s_strip() -> impl Strategy<Value = C64> {
    (-5.0..5.0f64, -5.0..5.0f64)
        .prop_map(|(re, im)| c(re, im))
        .prop_filter("away from s = 1", |s| (s - 1.0).norm() > 0.1)
}

fn a_strip() -> impl Strategy<Value = C64> {
    (0.05..=3.0f64, -1.0..=1.0f64).prop_map(|(re, im)| c(re, im))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn hurwitz_shift(s in s_strip(), a in a_strip()) {
        let z = hurwitz_zeta(s, a).unwrap();
        let err = (z - hurwitz_zeta(s, a + 1.0).unwrap() - pow(a, -s)).norm();
        prop_assert!(err <= 1e-12 * (1.0 + z.norm()), "err {err:e}");
    }

    #[test]
    fn negative_integer_reduction(n in 0usize..=10, a in 0.05..3.0f64) {
        let b = -bernoulli_poly(n + 1, real(a)).unwrap() / (n as f64 + 1.0);
        // relative error is meaningless at the zeros of B_{n+1}
        prop_assume!(b.norm() > 1e-3);
        let z = hurwitz_zeta(real(-(n as f64)), real(a)).unwrap();
        prop_assert!(rel(z, b) <= 1e-13, "rel {:e}", rel(z, b));
    }

    #[test]
    fn lerch_recurrence(q in prop::sample::select(vec![2u64, 3, 4, 6, 8]), p in 1i64..8, s in s_strip(), a in a_strip()) {
        let m = RationalExponent::new(p % q as i64, q).unwrap();
        prop_assume!(!m.is_unity());
        let lhs = lerch_phi(m, s, a).unwrap();
        let next = m.z() * lerch_phi(m, s, a + 1.0).unwrap();
        let tail = pow(a, -s);
        let scale = lhs.norm().max(next.norm()).max(tail.norm());
        prop_assert!((lhs - next - tail).norm() <= 1e-12 * scale);
    }

    #[test]
    fn decomposition_cross_check(q in prop::sample::select(vec![2u64, 3, 4, 6, 8]), p in 1i64..8, s in s_strip(), a in a_strip()) {
        let m = RationalExponent::new(p % q as i64, q).unwrap();
        prop_assume!(!m.is_unity() && s.re < 0.0);
        let qf = q as f64;
        let scale: f64 = (0..q).map(|r| hurwitz_zeta_regular(s, (a + r as f64) / qf).unwrap().norm()).sum::<f64>()
            * qf.powf(-s.re);
        let err = (lerch_phi(m, s, a).unwrap() - lerch_phi_decomposition(m, s, a).unwrap()).norm();
        prop_assert!(err <= 1e-12 * scale, "err {err:e}, scale {scale:e}");
    }

    #[test]
    fn alternating_cross_check(re in 0.1..5.0f64, im in -1.0..1.0f64, a in 0.1..3.0f64) {
        let s = c(re, im);
        let phi = lerch_phi(RationalExponent::new(1, 2).unwrap(), s, real(a)).unwrap();
        prop_assert!(rel(phi, alternating(s, a)) <= 1e-12);
    }

    #[test]
    fn polygamma_bridge(n in 1usize..=3, re in 0.1..5.0f64, im in -3.0..3.0f64) {
        let z = c(re, im);
        let sign = if n % 2 == 1 { 1.0 } else { -1.0 };
        let h = sign * factorial(n) * hurwitz_zeta(real(n as f64 + 1.0), z).unwrap();
        prop_assert!(rel(polygamma(n, z).unwrap(), h) <= 1e-12);
    }

    #[test]
    fn gamma_recurrence(re in -6.0..6.0f64, im in -4.0..4.0f64) {
        let z = c(re, im);
        prop_assume!((z - z.re.round()).norm() > 0.05 || z.re > 0.5);
        let up = log_gamma(z + 1.0).unwrap().exp();
        prop_assert!(rel(z * log_gamma(z).unwrap().exp(), up) <= 1e-12);
        prop_assert!(rel(z * gamma(z).unwrap(), up) <= 1e-12);
    }

    #[test]
    fn disk_series_meets_root_of_unity(p in 1i64..6, s in -2.0..3.0f64, a in 0.2..2.0f64) {
        // Φ(e^{2πi(m+iδ)}) → Φ(e^{2πim}) as δ → 0
        let m = RationalExponent::new(p, 6).unwrap();
        prop_assume!(!m.is_unity());
        let exact = lerch_phi(m, real(s), real(a)).unwrap();
        let at = |d: f64| lerch_phi_exp(c(m.value(), d), real(s), real(a)).unwrap();
        let near = 2.0 * at(5e-5) - at(1e-4);
        prop_assert!((near - exact).norm() <= 1e-6 * (1.0 + exact.norm()));
    }
}
