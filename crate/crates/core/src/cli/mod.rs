//! Command-line front end. `main.rs` only forwards to [`run`].

use crate::identities::{catalog, entry, format_complex, IdentityEntry, IdentityError, Klass};
use crate::quad::{QuadConfig, TanhSinh};
use crate::verify::{
    check_fixtures, selftest, sweep_with, to_records, to_table, verify_all, verify_point, Grid, Tally,
    VerificationReport, VerifyOptions, DEFAULT_SEED,
};
use clap::{Args, Parser, Subcommand, ValueEnum};
use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

/// Environment variable naming the default fixture file.
pub const FIXTURES_ENV: &str = "MALMSTEN_FIXTURES";

/// Fixture file used when neither a path nor the environment variable is given.
pub const DEFAULT_FIXTURES: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/golden.json");

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Records,
}

#[derive(Debug, Parser)]
#[command(name = "malmsten", version, about = "Verify log-log integral identities numerically")]
pub struct Cli {
    #[command(flatten)]
    pub config: CliConfig,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct CliConfig {
    /// Report format.
    #[arg(long, global = true, value_enum, default_value = "table")]
    pub format: Format,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    /// Per-class tolerance, e.g. `pv=1e-7` (repeatable).
    #[arg(long = "class-tol", global = true, value_parser = parse_class_tol)]
    pub class_tol: Vec<(Klass, f64)>,
    /// tanh-sinh level cap per panel.
    #[arg(long, global = true, value_parser = clap::value_parser!(u32).range(1..=30))]
    pub max_level: Option<u32>,
    /// Integrand evaluations per panel.
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub node_cap: Option<u64>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List catalog entries.
    List,
    /// Print one entry's anchor, class, parameters and side conditions.
    Show { id: String },
    /// Compare LHS and RHS at the default point or at given parameters.
    Verify {
        /// Entry id or `all`.
        id: String,
        /// Parameter override `name=value`; complex values as `re+imI`.
        #[arg(long = "param", short = 'p')]
        params: Vec<String>,
        /// Tolerance replacing every class tolerance.
        #[arg(long, value_parser = positive)]
        tol: Option<f64>,
    },
    /// Verify an entry over a seeded or lattice parameter grid.
    Sweep {
        id: String,
        /// Grid spec, e.g. `points=20;m.re=0.1..0.9;k=0|1`; built-in for THM, GR2, E1.
        #[arg(long)]
        grid: Option<String>,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, value_parser = positive)]
        tol: Option<f64>,
    },
    /// Run the special-function invariant suite.
    Selftest,
    /// Check golden fixtures.
    Fixtures {
        /// Fixture file; defaults to $MALMSTEN_FIXTURES, then the bundled set.
        #[arg(long, num_args = 0..=1, default_missing_value = "")]
        check: Option<String>,
    },
}

fn positive(s: &str) -> Result<f64, String> {
    match s.parse::<f64>() {
        Ok(x) if x > 0.0 && x.is_finite() => Ok(x),
        _ => Err(format!("'{s}' is not a positive number")),
    }
}

fn parse_class_tol(s: &str) -> Result<(Klass, f64), String> {
    let (k, v) = s.split_once('=').ok_or_else(|| format!("'{s}' is not class=value"))?;
    let names: Vec<_> = Klass::ALL.iter().map(|k| k.name()).collect();
    let klass = Klass::parse(k.trim()).ok_or_else(|| format!("unknown class '{k}' (expected one of {})", names.join(", ")))?;
    Ok((klass, positive(v.trim())?))
}

impl CliConfig {
    fn options(&self, tol: Option<f64>) -> VerifyOptions {
        let mut rule = TanhSinh::default();
        if let Some(l) = self.max_level {
            rule.max_level = l as usize;
        }
        if let Some(n) = self.node_cap {
            rule.node_cap = n as usize;
        }
        VerifyOptions {
            tol_override: tol,
            class_tol: self.class_tol.iter().copied().collect::<BTreeMap<_, _>>(),
            quad: QuadConfig { rule, ..QuadConfig::default() },
            ..VerifyOptions::default()
        }
    }
}

struct Outcome {
    text: String,
    code: i32,
}

fn usage(msg: impl std::fmt::Display) -> Outcome {
    Outcome { text: format!("error: {msg}\n"), code: EXIT_USAGE }
}

/// Parses `args` (including the program name), runs the command and returns the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    let outcome = dispatch(&cli);
    if outcome.code == EXIT_USAGE {
        let _ = err.write_all(outcome.text.as_bytes());
        return EXIT_USAGE;
    }
    match &cli.config.output {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &outcome.text) {
                let _ = writeln!(err, "error: cannot write {}: {e}", path.display());
                return EXIT_USAGE;
            }
        }
        None => {
            let _ = out.write_all(outcome.text.as_bytes());
        }
    }
    outcome.code
}

fn dispatch(cli: &Cli) -> Outcome {
    let fmt = cli.config.format;
    match &cli.command {
        Command::List => list(fmt),
        Command::Show { id } => match entry(id) {
            Ok(e) => show(e, fmt),
            Err(e) => usage(e),
        },
        Command::Verify { id, params, tol } => verify(id, params, cli.config.options(*tol), fmt),
        Command::Sweep { id, grid, seed, tol } => sweep(id, grid.as_deref(), *seed, cli.config.options(*tol), fmt),
        Command::Selftest => self_test(fmt),
        Command::Fixtures { check } => fixtures(check.as_deref(), fmt),
    }
}

fn list(fmt: Format) -> Outcome {
    let text = match fmt {
        Format::Records => catalog()
            .entries
            .iter()
            .map(|e| serde_json::to_string(&e.summary()).expect("summary serializes") + "\n")
            .collect(),
        Format::Table => {
            let mut s = format!("{:<5} {:<15} {:<32} anchor\n", "id", "class", "params");
            for e in &catalog().entries {
                let klass = if e.klass.is_experimental() { format!("{}*", e.klass.name()) } else { e.klass.name().into() };
                s += &format!("{:<5} {:<15} {:<32} {}\n", e.id, klass, e.active_params.join(","), e.anchor);
            }
            s
        }
    };
    Outcome { text, code: EXIT_OK }
}

fn show(e: &IdentityEntry, fmt: Format) -> Outcome {
    let defaults: BTreeMap<_, _> = e
        .active_params
        .iter()
        .filter_map(|n| e.defaults.get(n).ok().map(|v| (n.clone(), format_complex(v))))
        .collect();
    let text = match fmt {
        Format::Records => {
            let v = serde_json::json!({
                "id": e.id,
                "anchor": e.anchor,
                "klass": e.klass,
                "experimental": e.klass.is_experimental(),
                "active_params": e.active_params,
                "defaults": defaults,
                "conditions": e.conditions,
                "limit_mode": e.limit_mode,
                "notes": e.notes,
                "erratum": e.erratum,
            });
            v.to_string() + "\n"
        }
        Format::Table => {
            let mut s = format!("id:         {}\n", e.id);
            s += &format!("anchor:     {}\n", e.anchor);
            s += &format!("class:      {}{}\n", e.klass.name(), if e.klass.is_experimental() { " (experimental)" } else { "" });
            s += &format!("params:     {}\n", if e.active_params.is_empty() { "-".into() } else { e.active_params.join(", ") });
            s += &format!("defaults:   {}\n", e.defaults.encode(&e.active_params));
            s += &format!("conditions: {}\n", e.conditions);
            s += &format!("tolerance:  {:e}\n", e.tolerance());
            if e.limit_mode {
                s += "limit mode: yes\n";
            }
            if let Some(n) = &e.notes {
                s += &format!("notes:      {}\n", n.trim());
            }
            if let Some(n) = &e.erratum {
                s += &format!("erratum:    {}\n", n.trim());
            }
            s
        }
    };
    Outcome { text, code: EXIT_OK }
}

fn report(reports: &[VerificationReport], fmt: Format) -> Outcome {
    let text = match fmt {
        Format::Table => to_table(reports),
        Format::Records => to_records(reports),
    };
    let code = if Tally::of(reports).success() { EXIT_OK } else { EXIT_FAIL };
    Outcome { text, code }
}

fn verify(id: &str, params: &[String], opts: VerifyOptions, fmt: Format) -> Outcome {
    if id.eq_ignore_ascii_case("all") {
        if !params.is_empty() {
            return usage("--param cannot be combined with 'all'");
        }
        return report(&verify_all(&opts), fmt);
    }
    let e = match entry(id) {
        Ok(e) => e,
        Err(err) => return usage(err),
    };
    let mut p = e.defaults;
    for a in params {
        let name = a.split_once('=').map_or(a.as_str(), |(n, _)| n.trim());
        if !e.active_params.iter().any(|n| n == name) && p.get(name).is_ok() {
            return usage(format!("{} does not use parameter '{name}' (active: {})", e.id, e.active_params.join(", ")));
        }
        if let Err(err) = p.assign(a) {
            return usage(err);
        }
    }
    if let Err(err) = e.validate(&p) {
        return usage(domain_message(err));
    }
    report(&[verify_point(e, &p, &opts)], fmt)
}

fn domain_message(err: IdentityError) -> String {
    match err {
        IdentityError::Domain { id, detail, conditions } => {
            format!("{id}: {detail}\n  side conditions: {conditions}")
        }
        other => other.to_string(),
    }
}

fn sweep(id: &str, grid: Option<&str>, seed: u64, opts: VerifyOptions, fmt: Format) -> Outcome {
    let e = match entry(id) {
        Ok(e) => e,
        Err(err) => return usage(err),
    };
    let grid = match grid {
        Some(g) => g.parse::<Grid>(),
        None => Grid::default_for(&e.id),
    };
    match grid {
        Ok(g) => report(&sweep_with(e, &g, seed, &opts), fmt),
        Err(err) => usage(err),
    }
}

fn self_test(fmt: Format) -> Outcome {
    let cases = selftest();
    let ok = cases.iter().all(|c| c.pass);
    let text = match fmt {
        Format::Records => cases.iter().map(|c| serde_json::to_string(c).expect("case serializes") + "\n").collect(),
        Format::Table => {
            let mut s = format!("{:<30} {:>7} {:>10} {:>8}  status\n", "invariant", "samples", "max err", "tol");
            for c in &cases {
                s += &format!(
                    "{:<30} {:>7} {:>10.2e} {:>8.0e}  {}\n",
                    c.name,
                    c.samples,
                    c.max_err,
                    c.tol,
                    if c.pass { "pass" } else { "fail" }
                );
                if let Some(e) = &c.error {
                    s += &format!("    error: {e}\n");
                }
            }
            s
        }
    };
    Outcome { text, code: if ok { EXIT_OK } else { EXIT_FAIL } }
}

fn fixtures(check: Option<&str>, fmt: Format) -> Outcome {
    let Some(path) = check else {
        return usage("fixtures needs --check [path]");
    };
    let path = if path.is_empty() {
        std::env::var(FIXTURES_ENV).unwrap_or_else(|_| DEFAULT_FIXTURES.to_string())
    } else {
        path.to_string()
    };
    let summary = match check_fixtures(&path) {
        Ok(s) => s,
        Err(e) => return usage(e),
    };
    let text = match fmt {
        Format::Records => serde_json::to_string(&summary).expect("summary serializes") + "\n",
        Format::Table => {
            let mut s = String::new();
            for m in &summary.mismatches {
                let obs = m.observed.map_or("-".to_string(), |z| format!("{:+.16e}{:+.16e}i", z.re, z.im));
                let delta = m.delta.map_or("-".to_string(), |d| format!("{d:.3e}"));
                s += &format!(
                    "mismatch {}: expected {:+.16e}{:+.16e}i observed {obs} delta {delta} tol {:e} ({})\n",
                    m.key, m.expected.re, m.expected.im, m.tol, m.detail
                );
            }
            s += &format!("{path}: {} checked, {} mismatches\n", summary.checked, summary.mismatches.len());
            s
        }
    };
    Outcome { text, code: if summary.success() { EXIT_OK } else { EXIT_FAIL } }
}
