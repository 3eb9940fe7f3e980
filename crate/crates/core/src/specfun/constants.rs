//! Mathematical constants, computed once.

use super::cmath::real;
use super::zeta::hurwitz_zeta_s_derivative_em;
use super::{hurwitz_zeta, polygamma, riemann_zeta};
use std::f64::consts::PI;
use std::sync::OnceLock;

/// Constants appearing in the closed forms.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConstantsTable {
    /// `G = Σ (-1)^n/(2n+1)^2`.
    pub catalan: f64,
    /// `ζ(3)`.
    pub apery: f64,
    /// `ln A`, Glaisher–Kinkelin.
    pub log_glaisher: f64,
    /// `γ = -ψ(1)`.
    pub euler_gamma: f64,
}

impl ConstantsTable {
    fn compute() -> Self {
        let euler_gamma = -polygamma(0, real(1.0)).expect("ψ(1)").re;
        let catalan = (hurwitz_zeta(real(2.0), real(0.25)).expect("ζ(2,1/4)")
            - hurwitz_zeta(real(2.0), real(0.75)).expect("ζ(2,3/4)"))
        .re
            / 16.0;
        let apery = riemann_zeta(real(3.0)).expect("ζ(3)").re;
        // ζ'(2) = π²/6 (γ + ln 2π - 12 ln A)
        let dz2 = hurwitz_zeta_s_derivative_em(real(2.0), real(1.0)).expect("ζ'(2)").re;
        let log_glaisher = (euler_gamma + (2.0 * PI).ln()) / 12.0 - dz2 / (2.0 * PI * PI);
        Self { catalan, apery, log_glaisher, euler_gamma }
    }
}

/// The process-wide constants table.
pub fn constants() -> &'static ConstantsTable {
    static TABLE: OnceLock<ConstantsTable> = OnceLock::new();
    TABLE.get_or_init(ConstantsTable::compute)
}
