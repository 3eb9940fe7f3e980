//! Complex special functions used by the closed forms.
//!
//! Every function works in `f64` complex arithmetic with principal branches.
//! Hurwitz zeta is the workhorse: Lerch Φ at roots of unity, polygamma checks,
//! Stieltjes constants and the numeric derivatives all reduce to it.

pub mod cmath;
mod combinatorics;
mod constants;
mod gamma;
mod lerch;
mod zeta;

pub use num_complex::Complex64 as C64;

pub use combinatorics::{
    bernoulli_number, bernoulli_poly, binomial, factorial, pochhammer, stirling_first, StirlingKind,
};
pub use constants::{constants, ConstantsTable};
pub use gamma::{gamma, harmonic, log_gamma, polygamma};
pub use lerch::{
    lerch_phi, lerch_phi_decomposition, lerch_phi_disk, lerch_phi_exp, lerch_phi_s_derivative, polylog, RationalExponent, Q_MAX,
};
pub use zeta::{
    hurwitz_zeta, hurwitz_zeta_regular, hurwitz_zeta_with, richardson_derivative, riemann_zeta,
    stieltjes_gamma, zeta_derivative, EulerMaclaurin, RICHARDSON_STEP,
};

use thiserror::Error;

/// Failure of a special-function evaluation.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpecError {
    #[error("{func}: pole at {at}")]
    Pole { func: &'static str, at: String },
    #[error("{func}: {reason}")]
    Domain { func: &'static str, reason: String },
    #[error("{func}: {reason}")]
    Overflow { func: &'static str, reason: String },
}

impl SpecError {
    pub(crate) fn pole(func: &'static str, at: C64) -> Self {
        SpecError::Pole { func, at: at.to_string() }
    }

    pub(crate) fn domain(func: &'static str, reason: String) -> Self {
        SpecError::Domain { func, reason }
    }
}
