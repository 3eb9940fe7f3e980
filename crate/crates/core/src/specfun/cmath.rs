//! Principal-branch complex primitives.
//!
//! A zero imaginary part is always read as `+0`, so negative reals sit on the
//! upper lip of every cut: `ln(-x) = ln x + iπ`.

use num_complex::Complex64 as C64;
use std::f64::consts::PI;

pub const I: C64 = C64::new(0.0, 1.0);

#[inline]
pub fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

#[inline]
pub fn real(x: f64) -> C64 {
    C64::new(x, 0.0)
}

#[inline]
fn canon(z: C64) -> C64 {
    if z.im == 0.0 {
        C64::new(z.re, 0.0)
    } else {
        z
    }
}

/// Principal logarithm, imaginary part in (-π, π].
#[inline]
pub fn ln(z: C64) -> C64 {
    let z = canon(z);
    C64::new(z.norm().ln(), z.im.atan2(z.re))
}

/// Principal power `z^w = exp(w ln z)`; `0^w = 0` for `Re w > 0`.
pub fn pow(z: C64, w: C64) -> C64 {
    if z.re == 0.0 && z.im == 0.0 {
        return if w.re > 0.0 { C64::new(0.0, 0.0) } else { C64::new(f64::INFINITY, 0.0) };
    }
    if w.im == 0.0 && w.re == w.re.round() && w.re.abs() <= 64.0 {
        return canon(z).powi(w.re as i32);
    }
    (w * ln(z)).exp()
}

#[inline]
pub fn powf(z: C64, w: f64) -> C64 {
    pow(z, real(w))
}

/// Principal square root.
#[inline]
pub fn sqrt(z: C64) -> C64 {
    canon(z).sqrt()
}

/// `(-1)^m = e^{iπm}`.
#[inline]
pub fn neg_one_pow(m: C64) -> C64 {
    (I * PI * m).exp()
}

/// `(e^w - 1) / w`, stable near `w = 0`.
pub fn exprel(w: C64) -> C64 {
    if w.norm() < 0.5 {
        let mut term = C64::new(1.0, 0.0);
        let mut sum = term;
        for k in 2..30 {
            term *= w / k as f64;
            sum += term;
            if term.norm() < 1e-18 * sum.norm() {
                break;
            }
        }
        sum
    } else {
        (w.exp() - 1.0) / w
    }
}

pub fn is_nonpositive_integer(z: C64) -> bool {
    z.im == 0.0 && z.re <= 0.0 && z.re == z.re.round()
}

pub fn as_integer(z: C64) -> Option<i64> {
    if z.im == 0.0 && z.re == z.re.round() && z.re.abs() < 1e15 {
        Some(z.re as i64)
    } else {
        None
    }
}

/// `max(|a|, |b|)`-scaled distance, used by tolerance checks.
pub fn rel_diff(a: C64, b: C64) -> f64 {
    let d = (a - b).norm();
    let s = a.norm().max(b.norm());
    if s == 0.0 {
        d
    } else {
        d / s
    }
}
