//! Command-line front end: maximum-order queries, verification suites and
//! geometry export.
//!
//! Exit codes: 0 on success, 1 when a verification check fails, 2 on any
//! usage error.

use std::collections::BTreeMap;
use std::fmt;
use std::io::{self, Write};
use std::ops::RangeInclusive;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use maxsym::classify::{max_action, Kind, MaxActionResult};
use maxsym::constructions::{
    build_dipole, build_genus21, fixture, ribbon_surface_type, skeleton, to_json, to_obj, triacontahedron, BandOptions,
    EmbeddedGraph, FixtureModel, Solid, DEFAULT_TOL,
};
use maxsym::orbifold::SurfaceType;
use maxsym::verify::{all_passed, run_verify, Suite, VerifyOptions};
use serde::{Deserialize, Serialize};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "maxsym", version, about = "Maximum orders of extendable group actions on surfaces in R³")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Maximum order for one genus or a range of genera.
    Max(MaxArgs),
    /// Run self-check suites.
    Verify(VerifyArgs),
    /// Build an equivariant graph and write its geometry.
    Construct(ConstructArgs),
}

#[derive(Debug, Args)]
pub struct MaxArgs {
    /// CE°, CE, E°, E, CEA°, CEA, CEA-faithful, EA°, EA, CEG°, CEG, EG°, EG
    /// (`o` may stand for `°`).
    #[arg(long)]
    pub kind: String,
    #[arg(long, conflicts_with_all = ["alpha", "range"])]
    pub genus: Option<u64>,
    #[arg(long, conflicts_with = "range")]
    pub alpha: Option<u64>,
    /// Inclusive, written `lo..hi`.
    #[arg(long)]
    pub range: Option<String>,
    #[arg(long)]
    pub json: bool,
    /// Count only actions that are faithful on the surface.
    #[arg(long)]
    pub faithful: bool,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, default_value = "all")]
    pub suite: String,
    /// Inputs for the tables suite, `lo..hi`.
    #[arg(long)]
    pub range: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Obj,
}

#[derive(Debug, Args)]
pub struct ConstructArgs {
    /// `dipole:<g>:<variant>`, `platonic:<T|C|O|D|I>`, `triacontahedron` or `genus21`.
    #[arg(long)]
    pub model: String,
    /// `none`, `all` or `fixture:<name>`.
    #[arg(long, default_value = "none")]
    pub twist: String,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
    #[arg(short = 'o', long = "output")]
    pub output: PathBuf,
}

/// Text and JSON output share this record.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportRow {
    pub kind: Kind,
    pub input: u64,
    pub order: u64,
    pub surfaces: Vec<SurfaceType>,
    pub witnesses: Vec<String>,
    #[serde(default)]
    pub notes: Vec<String>,
    #[serde(default = "yes")]
    pub faithful: bool,
}

fn yes() -> bool {
    true
}

impl From<&MaxActionResult> for ReportRow {
    fn from(r: &MaxActionResult) -> Self {
        ReportRow {
            kind: r.kind,
            input: r.input,
            order: r.order,
            surfaces: r.surfaces.clone(),
            witnesses: r.witnesses.iter().map(|w| w.to_string()).collect(),
            notes: r.notes.iter().map(|n| n.to_string()).collect(),
            faithful: r.is_faithful(),
        }
    }
}

impl ReportRow {
    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("report rows serialize")
    }

    pub fn from_json_line(line: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(line)
    }

    /// `kind  g=19  order 60  surfaces`, padded to line up across a range.
    pub fn to_text(&self) -> String {
        let var = if self.kind.is_closed() { "g" } else { "α" };
        let input = format!("{var}={}", self.input);
        let mut line = format!("{:<13}{:<9}{:>8}", self.kind.to_string(), input, self.order);
        if !self.surfaces.is_empty() {
            let s: Vec<String> = self.surfaces.iter().map(|s| format!("{} {}", s.notation(), s)).collect();
            line.push_str("  ");
            line.push_str(&s.join(", "));
        }
        if !self.notes.is_empty() {
            line.push_str("  [");
            line.push_str(&self.notes.join("; "));
            line.push(']');
        }
        line
    }
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Io(io::Error),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "{m}"),
            CliError::Io(e) => write!(f, "{e}"),
        }
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

fn usage(m: impl Into<String>) -> CliError {
    CliError::Usage(m.into())
}

pub fn parse_range(text: &str) -> Result<RangeInclusive<u64>, CliError> {
    let bad = || usage(format!("invalid range {text:?}, expected lo..hi"));
    let (lo, hi) = text.split_once("..").ok_or_else(bad)?;
    let lo: u64 = lo.trim().parse().map_err(|_| bad())?;
    let hi: u64 = hi.trim().trim_start_matches('=').parse().map_err(|_| bad())?;
    if lo > hi {
        return Err(bad());
    }
    Ok(lo..=hi)
}

/// Geometric tolerance: `MAXSYM_TOL` when set, else the default.
pub fn tolerance(env: Option<String>) -> Result<f64, CliError> {
    match env {
        None => Ok(DEFAULT_TOL),
        Some(t) => match t.trim().parse::<f64>() {
            Ok(v) if v > 0.0 && v.is_finite() => Ok(v),
            _ => Err(usage(format!("MAXSYM_TOL must be a positive number, got {t:?}"))),
        },
    }
}

pub fn query_kind(args: &MaxArgs) -> Result<Kind, CliError> {
    let kind: Kind = args.kind.parse().map_err(|e| usage(format!("{e}")))?;
    Ok(match kind {
        Kind::Cea if args.faithful => Kind::CeaFaithful,
        k => k,
    })
}

/// Streams one row per input, flushing after each.
pub fn run_max(args: &MaxArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let kind = query_kind(args)?;
    let inputs = match (args.genus, args.alpha, &args.range) {
        (Some(g), None, None) => {
            if !kind.is_closed() {
                return Err(usage(format!("{kind} takes --alpha, not --genus")));
            }
            g..=g
        }
        (None, Some(a), None) => {
            if kind.is_closed() {
                return Err(usage(format!("{kind} takes --genus, not --alpha")));
            }
            a..=a
        }
        (None, None, Some(r)) => parse_range(r)?,
        _ => return Err(usage("give exactly one of --genus, --alpha or --range")),
    };
    // reject an unbounded start before writing anything
    if *inputs.start() <= 1 {
        let e = max_action(kind, *inputs.start()).expect_err("inputs below 2 are unbounded");
        return Err(usage(e.to_string()));
    }
    for x in inputs {
        let r = max_action(kind, x).map_err(|e| usage(e.to_string()))?;
        let row = ReportRow::from(&r);
        let line = if args.json { row.to_json_line() } else { row.to_text() };
        writeln!(out, "{line}")?;
        out.flush()?;
    }
    Ok(())
}

/// Returns whether every check passed.
pub fn run_verify_cmd(args: &VerifyArgs, tol: f64, out: &mut dyn Write) -> Result<bool, CliError> {
    let suite: Suite = args.suite.parse().map_err(usage)?;
    let mut opts = VerifyOptions { tol, ..Default::default() };
    if let Some(r) = &args.range {
        opts.range = parse_range(r)?;
    }
    let checks = run_verify(suite, &opts);
    for c in &checks {
        writeln!(out, "{c}")?;
    }
    let passed = checks.iter().filter(|c| c.passed).count();
    writeln!(out, "{passed}/{} checks passed", checks.len())?;
    if let Some(first) = checks.iter().find(|c| !c.passed) {
        writeln!(out, "first counterexample: {}", first.detail)?;
    }
    Ok(all_passed(&checks))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Model {
    Dipole { g: u64, variant: u8 },
    Platonic(Solid),
    Triacontahedron,
    Genus21,
}

pub fn parse_model(text: &str) -> Result<Model, CliError> {
    let parts: Vec<&str> = text.split(':').collect();
    let bad = || usage(format!("invalid model {text:?}, expected dipole:<g>:<variant>, platonic:<T|C|O|D|I>, triacontahedron or genus21"));
    match parts.as_slice() {
        ["dipole", g, v] => Ok(Model::Dipole {
            g: g.parse().map_err(|_| bad())?,
            variant: v.parse().map_err(|_| bad())?,
        }),
        ["platonic", s] => Ok(Model::Platonic(s.parse().map_err(|_| bad())?)),
        ["triacontahedron"] => Ok(Model::Triacontahedron),
        ["genus21"] => Ok(Model::Genus21),
        _ => Err(bad()),
    }
}

fn model_graph(model: &Model, tol: f64) -> Result<EmbeddedGraph, CliError> {
    let g = match model {
        Model::Dipole { g, variant } => build_dipole(*g, *variant, tol).map(|d| d.graph),
        Model::Platonic(s) => skeleton(*s),
        Model::Triacontahedron => triacontahedron(),
        Model::Genus21 => build_genus21(tol).map(|g| g.graph),
    };
    g.map_err(|e| usage(e.to_string()))
}

/// Builds the model, applies the twists, writes the file and reports the
/// ribbon surface.
pub fn run_construct(args: &ConstructArgs, tol: f64, out: &mut dyn Write) -> Result<SurfaceType, CliError> {
    let model = parse_model(&args.model)?;
    let mut graph = model_graph(&model, tol)?;
    match args.twist.as_str() {
        "none" => {}
        "all" => graph.set_twists(&(0..graph.edge_count()).collect::<Vec<_>>()),
        t => {
            let name = t
                .strip_prefix("fixture:")
                .ok_or_else(|| usage(format!("invalid twist {t:?}, expected none, all or fixture:<name>")))?;
            let f = fixture(name).map_err(|e| usage(e.to_string()))?;
            let fits = matches!(
                (f.model, &model),
                (FixtureModel::Icosahedron, Model::Platonic(Solid::Icosahedron))
                    | (FixtureModel::Triacontahedron, Model::Triacontahedron)
            );
            if !fits {
                return Err(usage(format!("fixture {name} does not belong to model {}", args.model)));
            }
            graph.set_twists(f.twisted);
        }
    }
    let surface = ribbon_surface_type(&graph).map_err(|e| usage(e.to_string()))?;
    let text = match args.format {
        Format::Json => {
            let mut meta = BTreeMap::new();
            meta.insert("model".to_string(), serde_json::json!(args.model));
            meta.insert("twist".to_string(), serde_json::json!(args.twist));
            meta.insert("surface".to_string(), serde_json::json!(surface.to_string()));
            to_json(&graph, meta)
        }
        Format::Obj => to_obj(&graph, Some(BandOptions::default())).map_err(|e| usage(e.to_string()))?,
    };
    std::fs::write(&args.output, text)?;
    writeln!(
        out,
        "{} {}: V={} E={} ribbon {} {}",
        args.model,
        args.twist,
        graph.vertex_count(),
        graph.edge_count(),
        surface.notation(),
        surface
    )?;
    Ok(surface)
}

/// Runs a parsed command line and returns the exit code.
pub fn run(cli: &Cli, tol_env: Option<String>, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let result = tolerance(tol_env).and_then(|tol| match &cli.command {
        Command::Max(a) => run_max(a, out).map(|()| EXIT_OK),
        Command::Verify(a) => {
            run_verify_cmd(a, tol, out).map(|ok| if ok { EXIT_OK } else { EXIT_VERIFY_FAILED })
        }
        Command::Construct(a) => run_construct(a, tol, out).map(|_| EXIT_OK),
    });
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}
