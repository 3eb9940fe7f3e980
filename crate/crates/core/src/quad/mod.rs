//! Adaptive quadrature for integrands with declared singular points.
//!
//! Integrands are complex functions of a complex argument. Ordinary panels
//! sample the positive real axis only; [`integrate_indented`] also evaluates
//! the analytic continuation on small upper semicircles around real poles.

mod finite_part;
mod ops;
pub mod tanh_sinh;

use crate::specfun::C64;
use std::fmt;
use std::sync::Arc;

pub use finite_part::{integrate_finite_part, FiniteRung, FP_LADDER};
pub use ops::{
    integrate_finite, integrate_finite_with, integrate_indented, integrate_indented_with, integrate_pv,
    integrate_pv_with, integrate_semi_infinite, integrate_semi_infinite_with, QuadConfig,
};
pub use tanh_sinh::TanhSinh;

pub type Evaluator = Arc<dyn Fn(C64) -> C64 + Send + Sync>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SingularKind {
    EndpointLog,
    Algebraic,
    SimplePole,
    DoublePole,
    BranchPoint,
    /// Finite limit, only used as a split point.
    Removable,
}

impl SingularKind {
    pub fn is_pole(self) -> bool {
        matches!(self, SingularKind::SimplePole | SingularKind::DoublePole)
    }

    pub fn name(self) -> &'static str {
        match self {
            SingularKind::EndpointLog => "endpoint-log",
            SingularKind::Algebraic => "algebraic",
            SingularKind::SimplePole => "simple-pole",
            SingularKind::DoublePole => "double-pole",
            SingularKind::BranchPoint => "branch-point",
            SingularKind::Removable => "removable",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SingularPoint {
    pub location: f64,
    pub kind: SingularKind,
}

/// A complex integrand on `(0, ∞)` with annotated singular points.
#[derive(Clone)]
pub struct IntegrandSpec {
    evaluator: Evaluator,
    unit_offset: Option<Arc<dyn Fn(f64) -> C64 + Send + Sync>>,
    singular_points: Vec<SingularPoint>,
    pub branch_note: String,
}

impl fmt::Debug for IntegrandSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("IntegrandSpec")
            .field("singular_points", &self.singular_points)
            .field("branch_note", &self.branch_note)
            .finish()
    }
}

impl IntegrandSpec {
    pub fn new<F>(f: F, branch_note: impl Into<String>) -> Self
    where
        F: Fn(C64) -> C64 + Send + Sync + 'static,
    {
        Self { evaluator: Arc::new(f), unit_offset: None, singular_points: Vec::new(), branch_note: branch_note.into() }
    }

    /// Adds a singular point, keeping the list sorted. A point already present
    /// keeps the stronger of the two kinds (poles win).
    pub fn with_singular(mut self, location: f64, kind: SingularKind) -> Self {
        if let Some(p) = self.singular_points.iter_mut().find(|p| p.location == location) {
            if kind.is_pole() && !p.kind.is_pole() || kind == SingularKind::DoublePole {
                p.kind = kind;
            }
            return self;
        }
        self.singular_points.push(SingularPoint { location, kind });
        self.singular_points.sort_by(|a, b| a.location.total_cmp(&b.location));
        self
    }

    /// Supplies `u ↦ f(1+u)` for real `u`, evaluated from the exact offset.
    /// Panels ending at 1 use it, so `log x` near 1 keeps full precision.
    pub fn with_unit_offset<G>(mut self, g: G) -> Self
    where
        G: Fn(f64) -> C64 + Send + Sync + 'static,
    {
        self.unit_offset = Some(Arc::new(g));
        self
    }

    /// `f(1+u)`, through the offset evaluator when present.
    pub fn eval_unit_offset(&self, u: f64) -> C64 {
        match &self.unit_offset {
            Some(g) => g(u),
            None => self.eval(1.0 + u),
        }
    }

    pub fn has_unit_offset(&self) -> bool {
        self.unit_offset.is_some()
    }

    pub fn singular_points(&self) -> &[SingularPoint] {
        &self.singular_points
    }

    pub fn poles(&self) -> impl Iterator<Item = &SingularPoint> {
        self.singular_points.iter().filter(|p| p.kind.is_pole())
    }

    pub fn eval(&self, x: f64) -> C64 {
        (self.evaluator)(C64::new(x, 0.0))
    }

    pub fn eval_complex(&self, z: C64) -> C64 {
        (self.evaluator)(z)
    }

    /// Linear combination `α·self + β·other` with the union of singular points.
    pub fn combine(&self, alpha: C64, other: &IntegrandSpec, beta: C64) -> IntegrandSpec {
        let (f, g) = (self.evaluator.clone(), other.evaluator.clone());
        let mut out = IntegrandSpec::new(move |z| alpha * f(z) + beta * g(z), self.branch_note.clone());
        for p in self.singular_points.iter().chain(other.singular_points.iter()) {
            out = out.with_singular(p.location, p.kind);
        }
        if self.has_unit_offset() || other.has_unit_offset() {
            let (a, b) = (self.clone(), other.clone());
            out = out.with_unit_offset(move |u| alpha * a.eval_unit_offset(u) + beta * b.eval_unit_offset(u));
        }
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum QuadStatus {
    Converged,
    MaxNodes,
    SuspectedDivergence,
}

impl QuadStatus {
    pub fn name(self) -> &'static str {
        match self {
            QuadStatus::Converged => "converged",
            QuadStatus::MaxNodes => "max-nodes",
            QuadStatus::SuspectedDivergence => "suspected-divergence",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadResult {
    pub value: C64,
    pub err_estimate: f64,
    pub nodes: usize,
    pub status: QuadStatus,
}

impl QuadResult {
    pub(crate) fn zero() -> Self {
        Self { value: C64::new(0.0, 0.0), err_estimate: 0.0, nodes: 0, status: QuadStatus::Converged }
    }

    /// Sum of independent pieces: values and errors add, the worst status wins.
    pub(crate) fn merge(self, other: QuadResult) -> QuadResult {
        QuadResult {
            value: self.value + other.value,
            err_estimate: self.err_estimate + other.err_estimate,
            nodes: self.nodes + other.nodes,
            status: self.status.max(other.status),
        }
    }

    /// Demotes `Converged` when the accumulated error exceeds `tol`.
    pub(crate) fn settle(mut self, tol: f64) -> QuadResult {
        if self.status == QuadStatus::Converged && self.err_estimate > tol {
            self.status = QuadStatus::MaxNodes;
        }
        self
    }
}
