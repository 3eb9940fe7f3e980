//! Double-exponential (tanh–sinh) rule on a finite interval.

use num_complex::Complex64 as C64;
use std::cell::Cell;
use std::f64::consts::FRAC_PI_2;

/// Level and node limits for one panel.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TanhSinh {
    /// Number of step halvings after the unit step.
    pub max_level: usize,
    /// Maximum integrand evaluations per panel.
    pub node_cap: usize,
}

impl Default for TanhSinh {
    fn default() -> Self {
        Self { max_level: 12, node_cap: 200_000 }
    }
}

/// Distance to the nearest endpoint reaches ~1e-300 at this abscissa.
const T_MAX: f64 = 6.1;
const MIN_LEVEL: usize = 4;

/// A quadrature node; `dist` is exact while `x` is rounded.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Node {
    pub x: f64,
    pub dist: f64,
    pub near_hi: bool,
}

#[derive(Debug, Clone, Copy)]
pub struct PanelResult {
    pub value: C64,
    pub err: f64,
    pub nodes: usize,
    pub converged: bool,
    pub finite: bool,
}

impl TanhSinh {
    /// Integrates `f` over `[lo, hi]` to absolute tolerance `tol`.
    ///
    /// Nodes that round onto an endpoint are skipped.
    pub fn integrate<F>(&self, f: F, lo: f64, hi: f64, tol: f64) -> PanelResult
    where
        F: Fn(f64) -> C64,
    {
        self.run(|n: Node| f(n.x), lo, hi, tol, false)
    }

    /// As [`TanhSinh::integrate`], passing each node with its exact distance
    /// to the nearer endpoint. Nodes whose `x` rounds onto an endpoint are
    /// kept, since `dist` still locates them.
    pub fn integrate_nodes<F>(&self, f: F, lo: f64, hi: f64, tol: f64) -> PanelResult
    where
        F: Fn(Node) -> C64,
    {
        self.run(f, lo, hi, tol, true)
    }

    fn run<F>(&self, f: F, lo: f64, hi: f64, tol: f64, offsets: bool) -> PanelResult
    where
        F: Fn(Node) -> C64,
    {
        let half = 0.5 * (hi - lo);
        let nodes = Cell::new(0usize);
        let l1 = Cell::new(0.0f64);
        let finite = Cell::new(true);

        // abscissa offset k*h, returns contribution weight*f without the factor h
        let eval = |t: f64| -> C64 {
            let v = FRAC_PI_2 * t.sinh();
            let e = (-2.0 * v.abs()).exp();
            // distance from the nearer endpoint and 1/cosh^2(v)
            let dist = 2.0 * half * e / (1.0 + e);
            let sech2 = 4.0 * e / ((1.0 + e) * (1.0 + e));
            let w = half * FRAC_PI_2 * t.cosh() * sech2;
            let x = if t >= 0.0 { hi - dist } else { lo + dist };
            let outside = if offsets { dist <= 0.0 } else { x <= lo || x >= hi };
            if outside || w == 0.0 {
                return C64::new(0.0, 0.0);
            }
            nodes.set(nodes.get() + 1);
            let fx = f(Node { x, dist, near_hi: t >= 0.0 });
            if !(fx.re.is_finite() && fx.im.is_finite()) {
                if dist <= 1e-14 * half {
                    return C64::new(0.0, 0.0);
                }
                finite.set(false);
                return C64::new(0.0, 0.0);
            }
            let c = fx * w;
            l1.set(l1.get() + c.norm());
            c
        };

        let kmax = T_MAX.ceil() as i64;
        let mut sum = eval(0.0);
        for k in 1..=kmax {
            let t = k as f64;
            sum += eval(t);
            sum += eval(-t);
        }
        let mut h = 1.0;
        let mut estimate = sum * h;
        let mut err = f64::INFINITY;
        let mut converged = false;
        for level in 1..=self.max_level {
            h *= 0.5;
            let count = (T_MAX / h).ceil() as i64;
            let mut k = 1;
            while k <= count {
                let t = k as f64 * h;
                sum += eval(t);
                sum += eval(-t);
                k += 2;
            }
            let next = sum * h;
            let roundoff = 4.0 * f64::EPSILON * l1.get() * h;
            err = (next - estimate).norm().max(roundoff);
            estimate = next;
            if !finite.get() {
                break;
            }
            if level >= MIN_LEVEL && err <= tol {
                converged = true;
                break;
            }
            if nodes.get() >= self.node_cap {
                break;
            }
        }
        PanelResult { value: estimate, err, nodes: nodes.get(), converged, finite: finite.get() }
    }
}
