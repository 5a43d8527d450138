//! Command-line verbs.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use twogon_core::{Point, Tolerance};

use crate::report::{exit_code, run_bottema_sweep, run_scenario};
use crate::scenario::{parse_scenario, Kind, Scenario};
use crate::svg::render_svg;
use crate::sweep::{parse_n_range, run_sweep};

pub const EXIT_PASS: u8 = 0;
pub const EXIT_FAIL: u8 = 1;
pub const EXIT_INPUT: u8 = 2;

#[derive(Debug, Parser)]
#[command(name = "twogon", version, about = "Equal-distance points of regular polygon pairs")]
pub struct Cli {
    /// Relative tolerance, overriding the scenario value.
    #[arg(long, global = true)]
    pub tolerance_rel: Option<f64>,
    /// Absolute tolerance, overriding the scenario value.
    #[arg(long, global = true)]
    pub tolerance_abs: Option<f64>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SweepKind {
    Pair,
    SharedVertex,
    Bottema,
    IdentityCheck,
}

impl From<SweepKind> for Kind {
    fn from(k: SweepKind) -> Self {
        match k {
            SweepKind::Pair => Kind::Pair,
            SweepKind::SharedVertex => Kind::SharedVertex,
            SweepKind::Bottema => Kind::Bottema,
            SweepKind::IdentityCheck => Kind::IdentityCheck,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run every check for a scenario file and print the report.
    Verify {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Draw a scenario as SVG.
    Render {
        file: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Randomized checks over many generated configurations.
    Sweep {
        #[arg(long, value_enum)]
        kind: SweepKind,
        /// Polygon sizes, e.g. `5` or `3..12` (inclusive).
        #[arg(long, default_value = "3..12")]
        n: String,
        #[arg(long, default_value_t = 100)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
    /// Check that the center of the generalized Bottema figure ignores the apex.
    Bottema {
        #[arg(long, value_parser = parse_xy, allow_hyphen_values = true)]
        an: Point,
        #[arg(long, value_parser = parse_xy, allow_hyphen_values = true)]
        bn: Point,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
}

/// Parses `x,y`.
pub fn parse_xy(text: &str) -> Result<Point, String> {
    let (x, y) = text
        .split_once(',')
        .ok_or_else(|| format!("expected x,y, got `{text}`"))?;
    let x: f64 = x.trim().parse().map_err(|e| format!("bad x in `{text}`: {e}"))?;
    let y: f64 = y.trim().parse().map_err(|e| format!("bad y in `{text}`: {e}"))?;
    Point::try_new(x, y).map_err(|e| e.to_string())
}

fn tolerance(cli: &Cli) -> Result<Tolerance, String> {
    let d = Tolerance::default();
    Tolerance::new(cli.tolerance_rel.unwrap_or(d.rel), cli.tolerance_abs.unwrap_or(d.abs)).map_err(|e| e.to_string())
}

fn load(cli: &Cli, path: &Path) -> Result<Scenario, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let mut s = parse_scenario(&text).map_err(|e| format!("{}: {e}", path.display()))?;
    s.override_tolerance(cli.tolerance_rel, cli.tolerance_abs)
        .map_err(|e| e.to_string())?;
    Ok(s)
}

/// Executes one invocation; returns the process exit code.
pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> u8 {
    match execute(cli, out) {
        Ok(code) => code,
        Err(message) => {
            let _ = writeln!(err, "error: {message}");
            EXIT_INPUT
        }
    }
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Result<u8, String> {
    let io = |e: std::io::Error| e.to_string();
    match &cli.command {
        Command::Verify { file, json } => {
            let s = load(cli, file)?;
            let report = run_scenario(&s);
            let text = if *json {
                report.to_json() + "\n"
            } else {
                report.to_text()
            };
            out.write_all(text.as_bytes()).map_err(io)?;
            Ok(exit_code(&report))
        }
        Command::Render { file, output } => {
            let s = load(cli, file)?;
            let report = run_scenario(&s);
            std::fs::write(output, render_svg(&s, &report)).map_err(|e| format!("{}: {e}", output.display()))?;
            writeln!(out, "wrote {}", output.display()).map_err(io)?;
            Ok(EXIT_PASS)
        }
        Command::Sweep {
            kind,
            n,
            count,
            seed,
            json,
        } => {
            let ns = parse_n_range(n)?;
            let summary = run_sweep((*kind).into(), ns, *count, *seed, &tolerance(cli)?);
            let text = if *json {
                serde_json::to_string_pretty(&summary).expect("summary serializes") + "\n"
            } else {
                summary.to_text()
            };
            out.write_all(text.as_bytes()).map_err(io)?;
            Ok(if summary.passed { EXIT_PASS } else { EXIT_FAIL })
        }
        Command::Bottema {
            an,
            bn,
            n,
            samples,
            seed,
            json,
        } => {
            if *n < 3 {
                return Err(format!("n must be at least 3, got {n}"));
            }
            if *samples < 2 {
                return Err(format!("samples must be at least 2, got {samples}"));
            }
            if an.distance(*bn) == 0.0 {
                return Err("an and bn coincide".into());
            }
            let report = run_bottema_sweep(*an, *bn, *n, *samples, *seed, &tolerance(cli)?);
            let text = if *json {
                report.to_json() + "\n"
            } else {
                report.to_text()
            };
            out.write_all(text.as_bytes()).map_err(io)?;
            Ok(exit_code(&report))
        }
    }
}
