//! The identity catalog: for each entry a validated parameter point, an
//! integrand for the left-hand side and a closed-form right-hand side.
//!
//! Metadata (anchor, class, active parameters, defaults, side conditions)
//! lives in `catalog/manifest.toml`; the evaluators are registered here by id.
//!
//! Entries with poles on the path (`pv`, `finite-part`) are integrated along
//! the real axis indented into the upper half-plane around each pole, which
//! is the reading that reproduces their closed forms.

mod examples;
mod forms;
mod kolbig;
mod params;
mod poles;
mod theorem;

pub use examples::e19_stated_interval_integrand;
pub use params::{format_complex, parse_complex, IdentityParameters, ParamError, PARAM_NAMES};
pub use poles::p9_as_published;
pub use theorem::{
    e2_derivative_form, e2_derivative_form_as_published, eval_rhs_gr2, eval_rhs_main_theorem,
    eval_rhs_main_theorem_limit, eval_rhs_main_theorem_with, LIMIT_DELTA,
};

use crate::quad::IntegrandSpec;
use crate::specfun::{SpecError, StirlingKind, C64};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::sync::OnceLock;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum IdentityError {
    #[error("unknown identity '{0}' (see `list`)")]
    UnknownId(String),
    #[error("{id}: {detail}; side conditions: {conditions}")]
    Domain { id: String, detail: String, conditions: String },
    #[error("{id}: degenerate parameters ({detail})")]
    Degenerate { id: String, detail: String },
    #[error("unresolved special-function value: {0}")]
    Spec(#[from] SpecError),
    #[error("manifest: {0}")]
    Manifest(String),
}

impl IdentityError {
    pub(crate) fn domain(id: &str, detail: String) -> Self {
        let conditions = catalog_conditions(id);
        IdentityError::Domain { id: id.to_string(), detail, conditions }
    }
}

fn catalog_conditions(id: &str) -> String {
    CATALOG
        .get()
        .and_then(|c| c.get(id).ok())
        .map(|e| e.conditions.clone())
        .unwrap_or_default()
}

/// Verification class; fixes the comparison tolerance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Klass {
    Regular,
    ComplexBranch,
    Pv,
    FinitePart,
    Experimental,
}

impl Klass {
    pub const ALL: [Klass; 5] = [Klass::Regular, Klass::ComplexBranch, Klass::Pv, Klass::FinitePart, Klass::Experimental];

    pub fn name(self) -> &'static str {
        match self {
            Klass::Regular => "regular",
            Klass::ComplexBranch => "complex-branch",
            Klass::Pv => "pv",
            Klass::FinitePart => "finite-part",
            Klass::Experimental => "experimental",
        }
    }

    pub fn parse(s: &str) -> Option<Klass> {
        Klass::ALL.into_iter().find(|k| k.name() == s)
    }

    /// Pass threshold on `min(abs_err, rel_err)`.
    pub fn tolerance(self) -> f64 {
        match self {
            Klass::Regular | Klass::ComplexBranch => 1e-8,
            Klass::Pv => 1e-6,
            Klass::FinitePart | Klass::Experimental => 1e-3,
        }
    }

    pub fn is_experimental(self) -> bool {
        matches!(self, Klass::FinitePart | Klass::Experimental)
    }

    /// Whether the path has poles to indent around.
    pub fn has_poles(self) -> bool {
        matches!(self, Klass::Pv | Klass::FinitePart)
    }
}

/// Integration range of a left-hand side.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Domain {
    SemiInfinite,
    Finite { lo: f64, hi: f64 },
}

/// One integral of a display; most entries have exactly one.
#[derive(Debug, Clone)]
pub struct LhsForm {
    pub label: &'static str,
    pub integrand: IntegrandSpec,
    pub domain: Domain,
}

impl LhsForm {
    pub(crate) fn semi_infinite(label: &'static str, integrand: IntegrandSpec) -> Self {
        Self { label, integrand, domain: Domain::SemiInfinite }
    }

    pub(crate) fn finite(label: &'static str, integrand: IntegrandSpec, lo: f64, hi: f64) -> Self {
        Self { label, integrand, domain: Domain::Finite { lo, hi } }
    }
}

type CheckFn = fn(&IdentityParameters) -> Result<(), String>;
type LhsFn = fn(&IdentityParameters) -> Vec<LhsForm>;
type RhsFn = fn(&IdentityParameters, StirlingKind) -> Result<C64, IdentityError>;

pub(crate) struct Def {
    id: &'static str,
    check: CheckFn,
    lhs: LhsFn,
    rhs: RhsFn,
}

impl Def {
    pub(crate) const fn new(id: &'static str, check: CheckFn, lhs: LhsFn, rhs: RhsFn) -> Self {
        Self { id, check, lhs, rhs }
    }
}

fn registry() -> Vec<&'static Def> {
    let mut defs: Vec<&'static Def> = vec![&theorem::THM_DEF, &theorem::GR2_DEF];
    defs.extend(examples::DEFS.iter());
    defs.extend(kolbig::DEFS.iter());
    defs.extend(poles::DEFS.iter());
    defs
}

#[derive(Debug, Clone, Deserialize)]
struct ManifestFile {
    stirling: String,
    entry: Vec<ManifestEntry>,
}

#[derive(Debug, Clone, Deserialize)]
struct ManifestEntry {
    id: String,
    anchor: String,
    klass: Klass,
    params: Vec<String>,
    #[serde(default)]
    defaults: BTreeMap<String, toml::Value>,
    conditions: String,
    #[serde(default)]
    notes: Option<String>,
    #[serde(default)]
    erratum: Option<String>,
    #[serde(default)]
    limit_mode: bool,
}

/// A catalog entry: manifest metadata plus its evaluators.
pub struct IdentityEntry {
    pub id: String,
    pub anchor: String,
    pub klass: Klass,
    pub active_params: Vec<String>,
    pub defaults: IdentityParameters,
    /// Side conditions as printed.
    pub conditions: String,
    pub notes: Option<String>,
    pub erratum: Option<String>,
    /// A real-m specialization of the theorem, cross-checked in limit mode.
    pub limit_mode: bool,
    def: &'static Def,
}

impl std::fmt::Debug for IdentityEntry {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("IdentityEntry")
            .field("id", &self.id)
            .field("klass", &self.klass)
            .field("active_params", &self.active_params)
            .finish()
    }
}

impl IdentityEntry {
    pub fn validate(&self, p: &IdentityParameters) -> Result<(), IdentityError> {
        for name in &self.active_params {
            let v = p.get(name).map_err(|e| IdentityError::Manifest(e.to_string()))?;
            if !(v.re.is_finite() && v.im.is_finite()) {
                return Err(self.reject(format!("{name} must be finite")));
            }
        }
        (self.def.check)(p).map_err(|d| self.reject(d))
    }

    fn reject(&self, detail: String) -> IdentityError {
        IdentityError::Domain { id: self.id.clone(), detail, conditions: self.conditions.clone() }
    }

    /// Every integral of the display, validated.
    pub fn lhs_forms(&self, p: &IdentityParameters) -> Result<Vec<LhsForm>, IdentityError> {
        self.validate(p)?;
        Ok((self.def.lhs)(p))
    }

    /// The primary integrand.
    pub fn build_lhs(&self, p: &IdentityParameters) -> Result<IntegrandSpec, IdentityError> {
        Ok(self.lhs_forms(p)?.remove(0).integrand)
    }

    pub fn eval_rhs(&self, p: &IdentityParameters) -> Result<C64, IdentityError> {
        self.eval_rhs_with(p, catalog().stirling)
    }

    pub fn eval_rhs_with(&self, p: &IdentityParameters, kind: StirlingKind) -> Result<C64, IdentityError> {
        self.validate(p)?;
        (self.def.rhs)(p, kind)
    }

    pub fn tolerance(&self) -> f64 {
        self.klass.tolerance()
    }

    pub fn summary(&self) -> EntrySummary {
        EntrySummary {
            id: self.id.clone(),
            anchor: self.anchor.clone(),
            klass: self.klass,
            active_params: self.active_params.clone(),
            experimental: self.klass.is_experimental(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EntrySummary {
    pub id: String,
    pub anchor: String,
    pub klass: Klass,
    pub active_params: Vec<String>,
    pub experimental: bool,
}

/// The immutable catalog.
#[derive(Debug)]
pub struct Catalog {
    pub entries: Vec<IdentityEntry>,
    /// Recorded reading of `S_j^{(p)}`.
    pub stirling: StirlingKind,
}

pub const MANIFEST: &str = include_str!("../../catalog/manifest.toml");

impl Catalog {
    /// Parses a manifest and binds it to the registered evaluators. Ids must
    /// match the registry one-to-one and in order.
    pub fn from_manifest(text: &str) -> Result<Catalog, IdentityError> {
        let file: ManifestFile = toml::from_str(text).map_err(|e| IdentityError::Manifest(e.to_string()))?;
        let stirling = StirlingKind::parse(&file.stirling)
            .ok_or_else(|| IdentityError::Manifest(format!("unknown stirling reading '{}'", file.stirling)))?;
        let defs = registry();
        if defs.len() != file.entry.len() {
            return Err(IdentityError::Manifest(format!(
                "{} manifest entries for {} registered evaluators",
                file.entry.len(),
                defs.len()
            )));
        }
        let mut entries = Vec::with_capacity(defs.len());
        for (m, def) in file.entry.into_iter().zip(defs) {
            if m.id != def.id {
                return Err(IdentityError::Manifest(format!("entry '{}' where '{}' was expected", m.id, def.id)));
            }
            let mut defaults = IdentityParameters::default();
            for (name, value) in &m.defaults {
                let z = match value {
                    toml::Value::Integer(i) => C64::new(*i as f64, 0.0),
                    toml::Value::Float(x) => C64::new(*x, 0.0),
                    toml::Value::String(s) => parse_complex(s).map_err(|e| IdentityError::Manifest(format!("{}: {e}", m.id)))?,
                    other => return Err(IdentityError::Manifest(format!("{}: bad default {name} = {other}", m.id))),
                };
                defaults.set(name, z).map_err(|e| IdentityError::Manifest(format!("{}: {e}", m.id)))?;
            }
            for name in &m.params {
                defaults.get(name).map_err(|e| IdentityError::Manifest(format!("{}: {e}", m.id)))?;
            }
            entries.push(IdentityEntry {
                id: m.id,
                anchor: m.anchor,
                klass: m.klass,
                active_params: m.params,
                defaults,
                conditions: m.conditions,
                notes: m.notes.map(|s| s.trim().to_string()),
                erratum: m.erratum.map(|s| s.trim().to_string()),
                limit_mode: m.limit_mode,
                def,
            });
        }
        Ok(Catalog { entries, stirling })
    }

    pub fn get(&self, id: &str) -> Result<&IdentityEntry, IdentityError> {
        self.entries
            .iter()
            .find(|e| e.id.eq_ignore_ascii_case(id))
            .ok_or_else(|| IdentityError::UnknownId(id.to_string()))
    }

    pub fn ids(&self) -> impl Iterator<Item = &str> {
        self.entries.iter().map(|e| e.id.as_str())
    }
}

static CATALOG: OnceLock<Catalog> = OnceLock::new();

/// The process-wide catalog built from the bundled manifest.
pub fn catalog() -> &'static Catalog {
    CATALOG.get_or_init(|| Catalog::from_manifest(MANIFEST).expect("bundled manifest is valid"))
}

pub fn entry(id: &str) -> Result<&'static IdentityEntry, IdentityError> {
    catalog().get(id)
}

/// Summaries in catalog order: THM, GR2, E1–E29, K1–K6, P1–P12.
pub fn catalog_list() -> Vec<EntrySummary> {
    catalog().entries.iter().map(IdentityEntry::summary).collect()
}

pub fn eval_identity_rhs(id: &str, p: &IdentityParameters) -> Result<C64, IdentityError> {
    entry(id)?.eval_rhs(p)
}

pub fn build_lhs(id: &str, p: &IdentityParameters) -> Result<IntegrandSpec, IdentityError> {
    entry(id)?.build_lhs(p)
}
