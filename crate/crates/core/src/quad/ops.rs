use super::tanh_sinh::{Node, PanelResult, TanhSinh};
use super::{IntegrandSpec, QuadResult, QuadStatus, SingularKind};
use crate::specfun::C64;
use rayon::prelude::*;
use std::f64::consts::PI;

/// Panel rule and scheduling shared by every operation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadConfig {
    pub rule: TanhSinh,
    /// Evaluate independent panels on the rayon pool.
    pub parallel: bool,
}

impl Default for QuadConfig {
    fn default() -> Self {
        Self { rule: TanhSinh::default(), parallel: true }
    }
}

/// Paired integrands are integrated from `u_min = PAIR_FLOOR * r`; the rest
/// is the midpoint estimate `g(u_min)·u_min`.
const PAIR_FLOOR: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) enum Piece {
    Segment { lo: f64, hi: f64 },
    /// `[from, ∞)` through `x = from/t`.
    Tail { from: f64 },
    /// `∫_0^r [f(p+u) + f(p-u)] du`.
    Paired { pole: f64, r: f64 },
    /// Upper semicircle of radius `r` about `center`, from `center - r` to `center + r`.
    Arc { center: f64, r: f64 },
}

fn from_panel(p: PanelResult, tol: f64) -> QuadResult {
    let status = if !p.finite {
        QuadStatus::SuspectedDivergence
    } else if p.converged && p.err <= tol {
        QuadStatus::Converged
    } else {
        QuadStatus::MaxNodes
    };
    QuadResult { value: p.value, err_estimate: p.err, nodes: p.nodes, status }
}

/// True when `d·|f|` fails to shrink along `ds` (decreasing towards the singularity).
fn grows<G: Fn(f64) -> f64>(weighted: G, ds: &[f64]) -> bool {
    let vals: Vec<f64> = ds.iter().map(|&d| weighted(d)).collect();
    if vals.iter().any(|v| v.is_nan()) {
        return false;
    }
    let (first, last) = (vals[0], vals[vals.len() - 1]);
    last.is_infinite() || (last > 1e-300 && last >= 0.99 * first)
}

impl Piece {
    pub(crate) fn integrate(&self, f: &IntegrandSpec, tol: f64, rule: &TanhSinh) -> QuadResult {
        match *self {
            Piece::Segment { lo, hi } => {
                let w = hi - lo;
                // at 0 the probe can go deep enough for x^{ε-1} logᵏx to turn over
                let ds = |x: f64| if x == 0.0 { [1e-4 * w, 1e-100 * w, 1e-200 * w] } else { [1e-4 * w, 1e-8 * w, 1e-12 * w] };
                let singular_at = |x: f64| x == 0.0 || f.singular_points().iter().any(|p| p.location == x);
                let diverges = (singular_at(lo) && grows(|d| d * f.eval(lo + d).norm(), &ds(lo)))
                    || (singular_at(hi) && grows(|d| d * f.eval(hi - d).norm(), &ds(hi)));
                if diverges {
                    return divergent();
                }
                if f.has_unit_offset() && (lo == 1.0 || hi == 1.0) {
                    let g = |n: Node| {
                        let u = match (n.near_hi, hi == 1.0, lo == 1.0) {
                            (true, true, _) => -n.dist,
                            (false, _, true) => n.dist,
                            _ => return f.eval(n.x),
                        };
                        f.eval_unit_offset(u)
                    };
                    return from_panel(rule.integrate_nodes(g, lo, hi, tol), tol);
                }
                from_panel(rule.integrate(|x| f.eval(x), lo, hi, tol), tol)
            }
            Piece::Tail { from } => {
                if grows(|x| x * f.eval(x).norm(), &[1e20 * from, 1e40 * from, 1e80 * from]) {
                    return divergent();
                }
                if from == 1.0 && f.has_unit_offset() {
                    // x - 1 = (1 - t)/t with 1 - t exact near t = 1
                    let g = |n: Node| {
                        let t = n.x;
                        if n.near_hi {
                            f.eval_unit_offset(n.dist / (1.0 - n.dist)) / (t * t)
                        } else {
                            f.eval(1.0 / t) / (t * t)
                        }
                    };
                    return from_panel(rule.integrate_nodes(g, 0.0, 1.0, tol), tol);
                }
                let g = |t: f64| f.eval(from / t) * (from / (t * t));
                from_panel(rule.integrate(g, 0.0, 1.0, tol), tol)
            }
            Piece::Paired { pole, r } => {
                // p ± u' are exact when u' = (p + u) - p
                let g = |u: f64| {
                    let up = (pole + u) - pole;
                    f.eval(pole + up) + f.eval(pole - up)
                };
                let ds = [1e-3 * r, 1e-6 * r, 1e-9 * r];
                if grows(|u| u * g(u).norm(), &ds) {
                    return divergent();
                }
                let u_min = PAIR_FLOOR * r;
                let head = g(u_min) * u_min;
                let mut res = from_panel(rule.integrate(g, u_min, r, tol), tol);
                res.value += head;
                res
            }
            Piece::Arc { center, r } => {
                let g = |theta: f64| {
                    let e = C64::from_polar(1.0, theta);
                    -(f.eval_complex(center + r * e) * C64::new(0.0, r) * e)
                };
                from_panel(rule.integrate(g, 0.0, PI, tol), tol)
            }
        }
    }
}

fn divergent() -> QuadResult {
    QuadResult { value: C64::new(f64::NAN, f64::NAN), err_estimate: f64::INFINITY, nodes: 0, status: QuadStatus::SuspectedDivergence }
}

pub(crate) fn run_pieces(f: &IntegrandSpec, pieces: &[Piece], tol: f64, cfg: &QuadConfig) -> QuadResult {
    let per = tol / pieces.len().max(1) as f64;
    let results: Vec<QuadResult> = if cfg.parallel {
        pieces.par_iter().map(|p| p.integrate(f, per, &cfg.rule)).collect()
    } else {
        pieces.iter().map(|p| p.integrate(f, per, &cfg.rule)).collect()
    };
    results.into_iter().fold(QuadResult::zero(), QuadResult::merge).settle(tol)
}

/// Real-axis pieces covering `(0, ∞)` minus the open `windows`, split at
/// every non-pole singular point and at 1.
pub(crate) fn real_pieces(f: &IntegrandSpec, windows: &[(f64, f64)]) -> Vec<Piece> {
    let inside = |x: f64| windows.iter().any(|&(a, b)| x > a && x < b);
    let mut breaks = vec![0.0, 1.0];
    breaks.extend(f.singular_points().iter().filter(|p| !p.kind.is_pole()).map(|p| p.location));
    for &(a, b) in windows {
        breaks.push(a);
        breaks.push(b);
    }
    breaks.retain(|&x| x >= 0.0 && !inside(x));
    breaks.sort_by(f64::total_cmp);
    breaks.dedup();
    let mut pieces = Vec::new();
    for w in breaks.windows(2) {
        let (lo, hi) = (w[0], w[1]);
        if !windows.iter().any(|&(a, b)| lo == a && hi == b) {
            pieces.push(Piece::Segment { lo, hi });
        }
    }
    pieces.push(Piece::Tail { from: *breaks.last().unwrap_or(&1.0) });
    pieces
}

/// Exclusion radius for a pole: half the distance to the origin, a third of
/// the gap to any other singular point, at most 1/2.
pub(crate) fn window_radius(f: &IntegrandSpec, pole: f64) -> f64 {
    let mut r = (0.5 * pole).min(0.5);
    for p in f.singular_points() {
        if p.location != pole {
            r = r.min((p.location - pole).abs() / 3.0);
        }
    }
    r
}

/// `∫_lo^hi f(x) dx` by tanh–sinh; endpoint log and algebraic singularities
/// are absorbed by the rule. No interior singular points.
pub fn integrate_finite(f: &IntegrandSpec, lo: f64, hi: f64, tol: f64) -> QuadResult {
    integrate_finite_with(f, lo, hi, tol, &QuadConfig::default())
}

pub fn integrate_finite_with(f: &IntegrandSpec, lo: f64, hi: f64, tol: f64, cfg: &QuadConfig) -> QuadResult {
    assert!(lo < hi, "integrate_finite needs lo < hi, got [{lo}, {hi}]");
    Piece::Segment { lo, hi }.integrate(f, tol, &cfg.rule).settle(tol)
}

/// `∫_0^∞ f(x) dx`, split at the singular points and 1, tail through `x → 1/t`.
pub fn integrate_semi_infinite(f: &IntegrandSpec, tol: f64) -> QuadResult {
    integrate_semi_infinite_with(f, tol, &QuadConfig::default())
}

pub fn integrate_semi_infinite_with(f: &IntegrandSpec, tol: f64, cfg: &QuadConfig) -> QuadResult {
    run_pieces(f, &real_pieces(f, &[]), tol, cfg)
}

/// Principal value of `∫_0^∞ f(x) dx` across the simple pole `pole`.
///
/// Every other declared simple pole is paired the same way.
pub fn integrate_pv(f: &IntegrandSpec, pole: f64, tol: f64) -> QuadResult {
    integrate_pv_with(f, pole, tol, &QuadConfig::default())
}

pub fn integrate_pv_with(f: &IntegrandSpec, pole: f64, tol: f64, cfg: &QuadConfig) -> QuadResult {
    let f = &f.clone().with_singular(pole, SingularKind::SimplePole);
    let mut windows = Vec::new();
    let mut pieces = Vec::new();
    for p in f.poles() {
        let r = window_radius(f, p.location);
        windows.push((p.location - r, p.location + r));
        pieces.push(Piece::Paired { pole: p.location, r });
    }
    pieces.extend(real_pieces(f, &windows));
    run_pieces(f, &pieces, tol, cfg)
}

/// `∫_0^∞ f(x) dx` along the real axis indented into the upper half-plane
/// around every declared pole.
///
/// Each pole is avoided by a semicircle above it; by Cauchy the result does
/// not depend on the radius. Requires the evaluator to be analytic in the
/// upper half-plane near each pole.
pub fn integrate_indented(f: &IntegrandSpec, tol: f64) -> QuadResult {
    integrate_indented_with(f, tol, &QuadConfig::default())
}

pub fn integrate_indented_with(f: &IntegrandSpec, tol: f64, cfg: &QuadConfig) -> QuadResult {
    let mut windows = Vec::new();
    let mut pieces = Vec::new();
    for p in f.poles() {
        let r = window_radius(f, p.location);
        windows.push((p.location - r, p.location + r));
        pieces.push(Piece::Arc { center: p.location, r });
    }
    pieces.extend(real_pieces(f, &windows));
    run_pieces(f, &pieces, tol, cfg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::specfun::cmath::{c, ln};

    fn spec<F: Fn(C64) -> C64 + Send + Sync + 'static>(f: F) -> IntegrandSpec {
        IntegrandSpec::new(f, "test")
    }

    #[test]
    fn finite_examples() {
        let r = integrate_finite(&spec(ln), 0.0, 1.0, 1e-13);
        assert_eq!(r.status, QuadStatus::Converged);
        assert!((r.value + 1.0).norm() < 1e-13);
        let r = integrate_finite(&spec(|x: C64| x.powf(-0.5)), 0.0, 1.0, 1e-13);
        assert!((r.value - 2.0).norm() < 1e-13);
    }

    #[test]
    fn semi_infinite_examples() {
        let f = spec(|x: C64| 1.0 / ((1.0 + x) * (2.0 + x)));
        let r = integrate_semi_infinite(&f, 1e-13);
        assert_eq!(r.status, QuadStatus::Converged);
        assert!((r.value - 2f64.ln()).norm() < 1e-13);
        let f = spec(|x: C64| x.powf(-0.5) / (1.0 + x));
        let r = integrate_semi_infinite(&f, 1e-12);
        assert!((r.value - PI).norm() < 1e-12, "{r:?}");
    }

    #[test]
    fn divergent_tail_and_endpoint() {
        let r = integrate_semi_infinite(&spec(|x: C64| 1.0 / (1.0 + x)), 1e-10);
        assert_eq!(r.status, QuadStatus::SuspectedDivergence);
        let r = integrate_finite(&spec(|x: C64| 1.0 / x), 0.0, 1.0, 1e-10);
        assert_eq!(r.status, QuadStatus::SuspectedDivergence);
    }

    #[test]
    fn pv_examples() {
        let f = spec(|x: C64| x.powf(-0.5) / (1.0 - x)).with_singular(1.0, SingularKind::SimplePole);
        let r = integrate_pv(&f, 1.0, 1e-9);
        assert!(r.value.norm() < 1e-9, "{r:?}");
        let f = spec(|x: C64| 1.0 / ((1.0 - x) * (2.0 + x))).with_singular(1.0, SingularKind::SimplePole);
        let r = integrate_pv(&f, 1.0, 1e-10);
        // (1/3)[ln((L+2)/(L-1)) - ln 2] as L → ∞
        assert!((r.value + 2f64.ln() / 3.0).norm() < 1e-9, "{r:?}");
    }

    #[test]
    fn indented_simple_pole_is_pv_minus_i_pi_residue() {
        let f = spec(|x: C64| 1.0 / ((1.0 - x) * (2.0 + x))).with_singular(1.0, SingularKind::SimplePole);
        let pv = integrate_pv(&f, 1.0, 1e-10).value;
        let ind = integrate_indented(&f, 1e-12).value;
        // residue of 1/((1-x)(2+x)) at 1 is -1/3
        assert!((ind - (pv - c(0.0, PI) * (-1.0 / 3.0))).norm() < 1e-9, "{ind} {pv}");
    }

    #[test]
    fn loglog_pole_pairing_diverges() {
        let f = spec(|x: C64| ln(ln(x)) * x.powf(-0.5) / (1.0 - x * x)).with_singular(1.0, SingularKind::SimplePole);
        let r = integrate_pv(&f, 1.0, 1e-6);
        assert_eq!(r.status, QuadStatus::SuspectedDivergence);
        assert!(integrate_indented(&f, 1e-10).value.re.is_finite());
    }
}
