//! Golden fixtures: reference values with at least 30 significant digits.
//!
//! ```json
//! { "generator": { "name": "mpmath", "version": "1.3.0", "precision": 50 },
//!   "fixtures": [ { "key": "hurwitz_zeta(s=2.5,a=0.7)", "re": "...", "im": "..." } ] }
//! ```
//!
//! A key is `function(name=value,...)` for a special function or
//! `ID(name=value,...)` for the integral of a catalog entry's first form.

use super::integrate_form;
use super::QUAD_TOL;
use crate::identities::{entry, parse_complex, IdentityError};
use crate::specfun::{self as sf, RationalExponent, SpecError, C64};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, HashSet};
use std::path::Path;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GeneratorInfo {
    pub name: String,
    pub version: String,
    /// Working precision in decimal digits.
    pub precision: u32,
}

impl Default for GeneratorInfo {
    fn default() -> Self {
        Self { name: "none".into(), version: String::new(), precision: 0 }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GoldenFixture {
    pub key: String,
    pub re: String,
    pub im: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub method: Option<String>,
}

impl GoldenFixture {
    pub fn value(&self) -> Result<C64, FixtureError> {
        let p = |s: &str| s.trim().parse::<f64>().map_err(|_| FixtureError::Number { key: self.key.clone(), text: s.into() });
        Ok(C64::new(p(&self.re)?, p(&self.im)?))
    }
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct FixtureSet {
    #[serde(default)]
    pub generator: GeneratorInfo,
    #[serde(default)]
    pub fixtures: Vec<GoldenFixture>,
}

#[derive(Debug, thiserror::Error)]
pub enum FixtureError {
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("fixture file does not parse: {0}")]
    Json(#[from] serde_json::Error),
    #[error("duplicate fixture key {0}")]
    Duplicate(String),
    #[error("fixture {key}: '{text}' is not a decimal number")]
    Number { key: String, text: String },
}

impl FixtureSet {
    /// Parses a fixture file; blank text is an empty set.
    pub fn parse(text: &str) -> Result<Self, FixtureError> {
        if text.trim().is_empty() {
            return Ok(Self::default());
        }
        let set: FixtureSet = serde_json::from_str(text)?;
        let mut seen = HashSet::new();
        for f in &set.fixtures {
            if !seen.insert(f.key.as_str()) {
                return Err(FixtureError::Duplicate(f.key.clone()));
            }
            f.value()?;
        }
        Ok(set)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FixtureMismatch {
    pub key: String,
    pub expected: C64,
    pub observed: Option<C64>,
    pub delta: Option<f64>,
    pub tol: f64,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FixtureCheck {
    pub checked: usize,
    pub mismatches: Vec<FixtureMismatch>,
}

impl FixtureCheck {
    pub fn success(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Reads and checks a fixture file.
pub fn check_fixtures(path: impl AsRef<Path>) -> Result<FixtureCheck, FixtureError> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path)
        .map_err(|source| FixtureError::Io { path: path.display().to_string(), source })?;
    check_fixtures_text(&text)
}

pub fn check_fixtures_text(text: &str) -> Result<FixtureCheck, FixtureError> {
    let set = FixtureSet::parse(text)?;
    let mismatches = set
        .fixtures
        .par_iter()
        .filter_map(|f| check_one(f).err())
        .collect::<Vec<_>>();
    Ok(FixtureCheck { checked: set.fixtures.len(), mismatches })
}

/// How a comparison is scaled.
#[derive(Debug, Clone, Copy)]
enum Cmp {
    Rel(f64),
    Abs(f64),
    /// `min(abs, rel)` as for verification reports.
    Either(f64),
}

impl Cmp {
    fn tol(self) -> f64 {
        match self {
            Cmp::Rel(t) | Cmp::Abs(t) | Cmp::Either(t) => t,
        }
    }

    fn delta(self, expected: C64, observed: C64) -> f64 {
        let abs = (observed - expected).norm();
        let rel = if expected.norm() > 0.0 { abs / expected.norm() } else { abs };
        match self {
            Cmp::Rel(_) => rel,
            Cmp::Abs(_) => abs,
            Cmp::Either(_) => abs.min(rel),
        }
    }
}

fn check_one(f: &GoldenFixture) -> Result<(), FixtureMismatch> {
    let expected = f.value().unwrap_or_default();
    let miss = |observed: Option<C64>, delta: Option<f64>, tol: f64, detail: String| FixtureMismatch {
        key: f.key.clone(),
        expected,
        observed,
        delta,
        tol,
        detail,
    };
    let (observed, cmp) = evaluate_key(&f.key).map_err(|e| miss(None, None, 0.0, e))?;
    let delta = cmp.delta(expected, observed);
    if delta <= cmp.tol() {
        Ok(())
    } else {
        Err(miss(Some(observed), Some(delta), cmp.tol(), "outside tolerance".into()))
    }
}

fn split_key(key: &str) -> Result<(&str, BTreeMap<&str, &str>), String> {
    let open = key.find('(').ok_or_else(|| format!("key {key} has no argument list"))?;
    let body = key[open + 1..].strip_suffix(')').ok_or_else(|| format!("key {key} is not closed"))?;
    let mut args = BTreeMap::new();
    for item in body.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let (k, v) = item.split_once('=').ok_or_else(|| format!("argument '{item}' is not name=value"))?;
        args.insert(k.trim(), v.trim());
    }
    Ok((key[..open].trim(), args))
}

struct Args<'a>(BTreeMap<&'a str, &'a str>);

impl Args<'_> {
    fn raw(&self, name: &str) -> Result<&str, String> {
        self.0.get(name).copied().ok_or_else(|| format!("missing argument {name}"))
    }

    fn c(&self, name: &str) -> Result<C64, String> {
        parse_complex(self.raw(name)?).map_err(|e| e.to_string())
    }

    fn r(&self, name: &str) -> Result<f64, String> {
        self.raw(name)?.parse().map_err(|_| format!("argument {name} is not real"))
    }

    fn u(&self, name: &str) -> Result<usize, String> {
        self.raw(name)?.parse().map_err(|_| format!("argument {name} is not a nonnegative integer"))
    }

    fn ratio(&self, name: &str) -> Result<RationalExponent, String> {
        let text = self.raw(name)?;
        let (p, q) = text.split_once('/').unwrap_or((text, "1"));
        let p = p.trim().parse().map_err(|_| format!("argument {name} is not p/q"))?;
        let q = q.trim().parse().map_err(|_| format!("argument {name} is not p/q"))?;
        RationalExponent::new(p, q).map_err(|e| e.to_string())
    }
}

const CORE: Cmp = Cmp::Rel(1e-12);

fn evaluate_key(key: &str) -> Result<(C64, Cmp), String> {
    let (name, args) = split_key(key)?;
    if name.chars().next().is_some_and(|c| c.is_ascii_uppercase()) {
        return evaluate_entry(name, &args).map_err(|e| e.to_string());
    }
    let a = Args(args);
    let s = |r: Result<C64, SpecError>| r.map_err(|e| e.to_string());
    Ok(match name {
        "hurwitz_zeta" => (s(sf::hurwitz_zeta(a.c("s")?, a.c("a")?))?, CORE),
        "riemann_zeta" => (s(sf::riemann_zeta(a.c("s")?))?, CORE),
        "zeta_derivative" => (s(sf::zeta_derivative(a.c("s")?))?, Cmp::Rel(1e-10)),
        "lerch_phi" => (s(sf::lerch_phi(a.ratio("m")?, a.c("s")?, a.c("a")?))?, CORE),
        "lerch_phi_s_derivative" => (s(sf::lerch_phi_s_derivative(a.ratio("m")?, a.c("s")?, a.c("a")?))?, Cmp::Rel(1e-8)),
        "lerch_phi_disk" => (s(sf::lerch_phi_disk(a.c("z")?, a.c("s")?, a.c("a")?))?, CORE),
        "lerch_phi_exp" => (s(sf::lerch_phi_exp(a.c("m")?, a.c("s")?, a.c("a")?))?, CORE),
        "polylog" => (s(sf::polylog(a.c("s")?, a.r("x")?))?, CORE),
        "gamma" => (s(sf::gamma(a.c("z")?))?, CORE),
        "log_gamma" => (s(sf::log_gamma(a.c("z")?))?, CORE),
        "polygamma" => (s(sf::polygamma(a.u("n")?, a.c("z")?))?, CORE),
        "harmonic" => (s(sf::harmonic(a.c("z")?))?, CORE),
        "bernoulli_poly" => (s(sf::bernoulli_poly(a.u("n")?, a.c("x")?))?, CORE),
        "bernoulli_number" => (C64::new(sf::bernoulli_number(a.u("n")?), 0.0), CORE),
        "stieltjes_gamma" => {
            let v = sf::stieltjes_gamma(a.u("n")?, a.r("a")?).map_err(|e| e.to_string())?;
            (C64::new(v, 0.0), Cmp::Abs(1e-9))
        }
        other => return Err(format!("unknown fixture function {other}")),
    })
}

fn evaluate_entry(id: &str, args: &BTreeMap<&str, &str>) -> Result<(C64, Cmp), IdentityError> {
    let e = entry(id)?;
    let mut p = e.defaults;
    for (k, v) in args {
        p.assign(&format!("{k}={v}")).map_err(|err| IdentityError::Manifest(err.to_string()))?;
    }
    let forms = e.lhs_forms(&p)?;
    let q = integrate_form(&forms[0], e.klass, QUAD_TOL);
    Ok((q.value, Cmp::Either(e.tolerance())))
}
