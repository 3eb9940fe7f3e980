use super::ops::{real_pieces, run_pieces, window_radius, Piece, QuadConfig};
use super::{IntegrandSpec, QuadResult, QuadStatus, SingularKind};
use crate::specfun::C64;
use nalgebra::{DMatrix, DVector};

/// Ladder exponents: `ε = 2^{-k}`, `k = 4..=14`.
pub const FP_LADDER: std::ops::RangeInclusive<i32> = 4..=14;
const FIT_RUNGS: usize = 8;

/// One exclusion value `I(ε)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FiniteRung {
    pub eps: f64,
    pub value: C64,
}

/// Hadamard finite part of `∫_0^∞ f(x) dx` at a double pole.
///
/// The exclusion integrals `I(ε)` over `|x - pole| > ε` are fitted to
/// `A/ε + A' ln ε/ε + B ln ε + C + D ε ln ε + E ε`; the result is `C`.
/// Other declared poles are avoided by symmetric pairing.
pub fn integrate_finite_part(f: &IntegrandSpec, pole: f64, tol: f64) -> QuadResult {
    integrate_finite_part_with(f, pole, tol, &QuadConfig::default()).0
}

/// As [`integrate_finite_part`], also returning the ladder.
pub fn integrate_finite_part_with(
    f: &IntegrandSpec,
    pole: f64,
    tol: f64,
    cfg: &QuadConfig,
) -> (QuadResult, Vec<FiniteRung>) {
    let f = &f.clone().with_singular(pole, SingularKind::DoublePole);
    let r = window_radius(f, pole);
    // the ladder is rescaled when the window is narrower than its top rung
    let top = 2f64.powi(-FP_LADDER.start());
    let scale = if r > top { 1.0 } else { 0.5 * r / top };
    let eps: Vec<f64> = FP_LADDER.map(|k| scale * 2f64.powi(-k)).collect();

    let mut windows = vec![(pole - r, pole + r)];
    let mut pieces = Vec::new();
    for p in f.poles().filter(|p| p.location != pole) {
        let rp = window_radius(f, p.location);
        windows.push((p.location - rp, p.location + rp));
        pieces.push(Piece::Paired { pole: p.location, r: rp });
    }
    pieces.extend(real_pieces(f, &windows));
    let outer = run_pieces(f, &pieces, 0.1 * tol, cfg);

    // I(ε_k) = outer + ∫_{ε_k}^{r} [f(p+u) + f(p-u)] du, accumulated rung by rung
    let g = |u: f64| {
        let up = (pole + u) - pole;
        f.eval(pole + up) + f.eval(pole - up)
    };
    let mut bands = vec![(eps[0], r)];
    bands.extend(eps.windows(2).map(|w| (w[1], w[0])));
    let band_tol = 1e-3 * tol;
    let band_results: Vec<QuadResult> = bands
        .iter()
        .map(|&(lo, hi)| {
            let p = cfg.rule.integrate(g, lo, hi, band_tol * (hi - lo).max(1e-300) / r);
            QuadResult {
                value: p.value,
                err_estimate: p.err,
                nodes: p.nodes,
                status: if p.finite { QuadStatus::Converged } else { QuadStatus::SuspectedDivergence },
            }
        })
        .collect();

    let mut acc = outer.value;
    let mut nodes = outer.nodes;
    let mut ladder = Vec::with_capacity(eps.len());
    let mut status = outer.status;
    for (e, b) in eps.iter().zip(&band_results) {
        acc += b.value;
        nodes += b.nodes;
        status = status.max(b.status);
        ladder.push(FiniteRung { eps: *e, value: acc });
    }

    let n = ladder.len();
    let (c_top, resid_top) = fit_constant(&ladder[n - FIT_RUNGS..]);
    let (c_prev, _) = fit_constant(&ladder[n - FIT_RUNGS - 1..n - 1]);
    let err = (c_top - c_prev).norm() + resid_top + outer.err_estimate;
    if resid_top > 10.0 * tol {
        status = QuadStatus::SuspectedDivergence;
    }
    let res = QuadResult { value: c_top, err_estimate: err, nodes, status }.settle(tol);
    (res, ladder)
}

/// Least-squares constant term and RMS residual of the ε-model.
fn fit_constant(rungs: &[FiniteRung]) -> (C64, f64) {
    let cols: [fn(f64) -> f64; 6] = [
        |e| 1.0 / e,
        |e| e.ln() / e,
        |e| e.ln(),
        |_| 1.0,
        |e| e * e.ln(),
        |e| e,
    ];
    let m = rungs.len();
    let mut a = DMatrix::<f64>::zeros(m, cols.len());
    for (i, r) in rungs.iter().enumerate() {
        for (j, col) in cols.iter().enumerate() {
            a[(i, j)] = col(r.eps);
        }
    }
    // column equilibration
    let norms: Vec<f64> = (0..cols.len()).map(|j| a.column(j).norm()).collect();
    for (j, nj) in norms.iter().enumerate() {
        a.column_mut(j).unscale_mut(*nj);
    }
    let svd = a.clone().svd(true, true);
    let mut constant = C64::new(0.0, 0.0);
    let mut resid2 = 0.0;
    for part in 0..2 {
        let b = DVector::from_iterator(m, rungs.iter().map(|r| if part == 0 { r.value.re } else { r.value.im }));
        let x = svd.solve(&b, 1e-14).unwrap_or_else(|_| DVector::zeros(cols.len()));
        let c = x[3] / norms[3];
        if part == 0 {
            constant.re = c;
        } else {
            constant.im = c;
        }
        resid2 += (&a * &x - &b).norm_squared();
    }
    (constant, (resid2 / m as f64).sqrt())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_square_window() {
        // I(ε) = ∫_0^{1-ε} + ∫_{1+ε}^{2} of (x-1)^{-2} = 2/ε - 2
        let f = IntegrandSpec::new(|x: C64| if x.re <= 2.0 { 1.0 / ((x - 1.0) * (x - 1.0)) } else { C64::new(0.0, 0.0) }, "test")
            .with_singular(2.0, SingularKind::Removable);
        let r = integrate_finite_part(&f, 1.0, 1e-6);
        assert!((r.value + 2.0).norm() < 1e-7, "{r:?}");
    }
}
