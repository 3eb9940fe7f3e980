//! Seeded and lattice parameter sweeps.
//!
//! Grid syntax, items separated by `;`:
//!
//! - `points=N` number of random points
//! - `name=v1|v2|...` uniform choice (lattice axis when no random axis is present)
//! - `name=lo..hi`, `name.re=lo..hi`, `name.im=lo..hi` uniform real draw
//! - a range may end in `*other`, scaling the draw by another (discrete) parameter
//!
//! Without `points` and ranges the grid is the Cartesian product of its lists,
//! first axis slowest.

use super::{verify_point, Tally, VerificationReport, VerifyOptions};
use crate::identities::{entry, parse_complex, IdentityEntry, IdentityError, IdentityParameters, ParamError};
use crate::specfun::{StirlingKind, C64};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use std::str::FromStr;

pub const DEFAULT_SEED: u64 = 20240917;

const MAX_REDRAWS: usize = 1000;

const LATTICE: &str = "0.5|1|1.5|2|2.5|3|3.5|4|4.5|5";

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum GridError {
    #[error("grid item '{0}' is not name=value")]
    Item(String),
    #[error("bad range '{0}' (use lo..hi)")]
    Range(String),
    #[error("range on '{0}' needs points=N")]
    NeedsPoints(String),
    #[error("scale '{0}' must name a list axis")]
    Scale(String),
    #[error("bad point count '{0}'")]
    Points(String),
    #[error("no default grid for {0}; pass --grid")]
    NoDefault(String),
    #[error(transparent)]
    Param(#[from] ParamError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Part {
    Whole,
    Re,
    Im,
}

#[derive(Debug, Clone, PartialEq)]
pub enum GridAxis {
    Choice { name: String, values: Vec<C64> },
    Uniform { name: String, part: Part, lo: f64, hi: f64, scale: Option<String> },
}

#[derive(Debug, Clone, PartialEq)]
pub struct Grid {
    pub points: Option<usize>,
    pub axes: Vec<GridAxis>,
}

impl FromStr for Grid {
    type Err = GridError;

    fn from_str(text: &str) -> Result<Self, GridError> {
        let mut grid = Grid { points: None, axes: Vec::new() };
        for item in text.split(';').map(str::trim).filter(|s| !s.is_empty()) {
            let (key, value) = item.split_once('=').ok_or_else(|| GridError::Item(item.into()))?;
            let (key, value) = (key.trim(), value.trim());
            if key == "points" {
                grid.points = Some(value.parse().map_err(|_| GridError::Points(value.into()))?);
                continue;
            }
            let (name, part) = match key.rsplit_once('.') {
                Some((n, "re")) => (n, Part::Re),
                Some((n, "im")) => (n, Part::Im),
                _ => (key, Part::Whole),
            };
            // probe the name
            IdentityParameters::default().get(name)?;
            if let Some((range, scale)) = value.contains("..").then(|| match value.split_once('*') {
                Some((r, s)) => (r, Some(s.trim().to_string())),
                None => (value, None),
            }) {
                let (lo, hi) = range.split_once("..").ok_or_else(|| GridError::Range(value.into()))?;
                let lo: f64 = lo.trim().parse().map_err(|_| GridError::Range(value.into()))?;
                let hi: f64 = hi.trim().parse().map_err(|_| GridError::Range(value.into()))?;
                if !(lo <= hi) {
                    return Err(GridError::Range(value.into()));
                }
                grid.axes.push(GridAxis::Uniform { name: name.into(), part, lo, hi, scale });
            } else {
                if part != Part::Whole {
                    return Err(GridError::Item(item.into()));
                }
                let values = value.split('|').map(|v| parse_complex(v.trim())).collect::<Result<_, _>>()?;
                grid.axes.push(GridAxis::Choice { name: name.into(), values });
            }
        }
        let random = grid.axes.iter().find_map(|a| match a {
            GridAxis::Uniform { name, .. } => Some(name.clone()),
            _ => None,
        });
        if let (Some(name), None) = (random, grid.points) {
            return Err(GridError::NeedsPoints(name));
        }
        for a in &grid.axes {
            if let GridAxis::Uniform { scale: Some(s), .. } = a {
                let ok = grid.axes.iter().any(|b| matches!(b, GridAxis::Choice { name, .. } if name == s));
                if !ok {
                    return Err(GridError::Scale(s.clone()));
                }
            }
        }
        Ok(grid)
    }
}

impl Grid {
    /// Built-in grids for the theorem, the corrected table entry and E1.
    pub fn default_for(id: &str) -> Result<Grid, GridError> {
        let text = match id.to_ascii_uppercase().as_str() {
            "THM" => format!(
                "points=50;m.re=0.1..0.9;m.im=0.1..0.9;k=0|1|2|3;n=1|2|3|4;a={LATTICE};b={LATTICE};gamma={LATTICE}"
            ),
            "GR2" => format!("points=25;n=1|2|3|4;v.re=0.1..0.9*n;v.im=-0.5..0.5;b={LATTICE};gamma={LATTICE}"),
            "E1" => "beta=2|3|5;gamma=2|3|5;k=1|2|3".to_string(),
            other => return Err(GridError::NoDefault(other.to_string())),
        };
        text.parse()
    }

    fn is_lattice(&self) -> bool {
        self.points.is_none()
    }

    /// Parameter points over `base`. Random points are redrawn until the
    /// validator accepts them (bounded); lattice points are kept as is.
    pub fn points(&self, e: &IdentityEntry, seed: u64) -> Vec<IdentityParameters> {
        let base = e.defaults;
        if self.is_lattice() {
            let mut out = vec![base];
            for axis in &self.axes {
                if let GridAxis::Choice { name, values } = axis {
                    out = out
                        .iter()
                        .flat_map(|p| {
                            values.iter().map(move |&v| {
                                let mut q = *p;
                                let _ = q.set(name, v);
                                q
                            })
                        })
                        .collect();
                }
            }
            return out;
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        (0..self.points.unwrap_or(0))
            .map(|_| {
                let mut p = self.draw(&base, &mut rng);
                for _ in 0..MAX_REDRAWS {
                    if e.validate(&p).is_ok() {
                        break;
                    }
                    p = self.draw(&base, &mut rng);
                }
                p
            })
            .collect()
    }

    fn draw(&self, base: &IdentityParameters, rng: &mut ChaCha8Rng) -> IdentityParameters {
        let mut p = *base;
        for axis in &self.axes {
            if let GridAxis::Choice { name, values } = axis {
                let _ = p.set(name, values[rng.gen_range(0..values.len())]);
            }
        }
        for axis in &self.axes {
            if let GridAxis::Uniform { name, part, lo, hi, scale } = axis {
                let mut x = rng.gen_range(*lo..=*hi);
                if let Some(s) = scale {
                    x *= p.get(s).map(|z| z.re).unwrap_or(1.0);
                }
                let old = p.get(name).unwrap_or_default();
                let new = match part {
                    Part::Whole => C64::new(x, 0.0),
                    Part::Re => C64::new(x, old.im),
                    Part::Im => C64::new(old.re, x),
                };
                let _ = p.set(name, new);
            }
        }
        p
    }
}

/// Verifies every grid point of `id` with the manifest's Stirling reading.
pub fn sweep(id: &str, grid: &Grid, seed: u64) -> Result<Vec<VerificationReport>, IdentityError> {
    Ok(sweep_with(entry(id)?, grid, seed, &VerifyOptions::default()))
}

/// Points are drawn sequentially, verified in parallel and returned in draw order.
pub fn sweep_with(e: &IdentityEntry, grid: &Grid, seed: u64, opts: &VerifyOptions) -> Vec<VerificationReport> {
    grid.points(e, seed).par_iter().map(|p| verify_point(e, p, opts)).collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct StirlingGate {
    pub tallies: Vec<(StirlingKind, Tally)>,
    /// The single reading under which every point passes, if exactly one does.
    pub winner: Option<StirlingKind>,
    pub manifest: StirlingKind,
}

impl StirlingGate {
    pub fn holds(&self) -> bool {
        self.winner == Some(self.manifest)
    }
}

/// Runs the default theorem sweep under each reading of `S_j^{(p)}`.
pub fn stirling_gate(seed: u64) -> StirlingGate {
    let thm = entry("THM").expect("THM is in the catalog");
    let grid = Grid::default_for("THM").expect("THM has a default grid");
    let tallies: Vec<_> = StirlingKind::ALL
        .iter()
        .map(|&k| {
            let opts = VerifyOptions { stirling: k, ..VerifyOptions::default() };
            (k, Tally::of(&sweep_with(thm, &grid, seed, &opts)))
        })
        .collect();
    let clean: Vec<_> = tallies.iter().filter(|(_, t)| t.fail == 0 && t.skipped == 0).map(|(k, _)| *k).collect();
    StirlingGate { winner: (clean.len() == 1).then(|| clean[0]), tallies, manifest: crate::identities::catalog().stirling }
}
