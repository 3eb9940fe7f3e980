//! Hurwitz zeta, Lerch Φ at roots of unity, and friends.

use malmsten::specfun::cmath::{c, real};
use malmsten::specfun::*;

fn main() {
    let s = c(0.5, 14.134725141734693);
    println!("zeta(1/2 + 14.1347i)    = {:.3e}", riemann_zeta(s).unwrap());
    println!("zeta(-2.3, 0.6+0.4i)    = {}", hurwitz_zeta(real(-2.3), c(0.6, 0.4)).unwrap());
    println!("zeta'(-1)               = {}", zeta_derivative(real(-1.0)).unwrap().re);
    let m = RationalExponent::new(3, 8).unwrap();
    println!("Phi(e^(3πi/4), 0.7, 1.9) = {}", lerch_phi(m, real(0.7), real(1.9)).unwrap());
    println!("Li_-1.5(0.3)            = {}", polylog(real(-1.5), 0.3).unwrap().re);
    println!("Gamma(0.1-2.2i)         = {}", gamma(c(0.1, -2.2)).unwrap());
    println!("psi''(0.7)              = {}", polygamma(2, real(0.7)).unwrap().re);
    println!("gamma_1 (Stieltjes)     = {}", stieltjes_gamma(1, 1.0).unwrap());
    let row: Vec<String> = (0..=5).map(|p| stirling_first(5, p).to_string()).collect();
    println!("s(5, p)                 = {}", row.join(" "));
}
