//! Tanh-sinh quadrature on log-log integrands with the upper-lip branch.

use malmsten::quad::{integrate_finite, integrate_semi_infinite, IntegrandSpec, SingularKind};
use malmsten::specfun::cmath::ln;

fn main() {
    // ∫_0^1 ln ln(1/x) dx = -γ; with ln(ln x) the upper lip adds iπ
    let f = IntegrandSpec::new(|x| ln(ln(x)), "principal log, upper lip");
    let r = integrate_finite(&f, 0.0, 1.0, 1e-12);
    println!("ln ln x on (0,1):         {} ± {:.1e} ({:?}, {} nodes)", r.value, r.err_estimate, r.status, r.nodes);

    // ∫_0^∞ ln ln x / (1+x²) dx = (π/2) ln(Γ(3/4)√(2π)/Γ(1/4)) + iπ²/4
    let g = IntegrandSpec::new(|x| ln(ln(x)) / (1.0 + x * x), "principal log, upper lip").with_singular(1.0, SingularKind::BranchPoint);
    let r = integrate_semi_infinite(&g, 1e-12);
    println!("ln ln x/(1+x²) on (0,∞): {} ± {:.1e} ({:?}, {} nodes)", r.value, r.err_estimate, r.status, r.nodes);
}
