//! Command-line front end: `solve`, `config`, `compare` and `verify`.
//!
//! Exit codes: 0 success, 2 configuration error, 3 verification failure,
//! 64 usage error, 65 unreadable report.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::foldconfig::{self, Branch, FoldConfig, NishimuraReport};
use crate::foldsolve::{self, FoldSolution, Rejected, SolveOptions};
use crate::polynomial::{self, Quintic, Root};
use crate::render;

pub const EXIT_OK: i32 = 0;
pub const EXIT_CONFIG: i32 = 2;
pub const EXIT_VERIFY: i32 = 3;
pub const EXIT_USAGE: i32 = 64;
pub const EXIT_DATA: i32 = 65;

pub const TOL_ENV: &str = "ORIGAMI_QUINTIC_TOL";

#[derive(Debug, Parser)]
#[command(name = "quintic-fold", version, about = "Solve quintic equations with two simultaneous origami folds")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build the configuration, fold every real root and verify it.
    Solve(SolveArgs),
    /// Print only the configuration (h, b, c, k, p, q, D).
    Config(ConfigArgs),
    /// Compare the direct configuration with the depress-and-scale route.
    Compare(CompareArgs),
    /// Recheck a saved solve report.
    Verify(VerifyArgs),
}

#[derive(Debug, Args)]
struct QuinticArgs {
    /// Coefficients a5,a4,a3,a2,a1,a0; integers, decimals or fractions p/q.
    #[arg(long, allow_hyphen_values = true, value_parser = parse_coeffs)]
    coeffs: [f64; 6],
    /// Fix h instead of searching for one.
    #[arg(long)]
    h: Option<f64>,
    #[arg(long, default_value = "plus", value_parser = parse_branch)]
    branch: Branch,
}

#[derive(Debug, Args)]
struct TolArgs {
    /// Largest accepted incidence residual.
    #[arg(long, env = TOL_ENV, default_value_t = 1e-9)]
    tol: f64,
    /// Bracket width for root isolation.
    #[arg(long, default_value_t = 1e-12)]
    root_tol: f64,
}

#[derive(Debug, Args)]
struct SolveArgs {
    #[command(flatten)]
    quintic: QuinticArgs,
    #[command(flatten)]
    tols: TolArgs,
    /// Write the JSON report here instead of stdout.
    #[arg(long)]
    json: Option<PathBuf>,
    /// Write an SVG gallery with one panel per solution.
    #[arg(long)]
    svg: Option<PathBuf>,
    /// Include the depress-and-scale comparison in the report.
    #[arg(long)]
    compare: bool,
    /// Record wall-clock time in the report (makes output nondeterministic).
    #[arg(long)]
    timing: bool,
}

#[derive(Debug, Args)]
struct ConfigArgs {
    #[command(flatten)]
    quintic: QuinticArgs,
    #[arg(long)]
    json: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct CompareArgs {
    #[command(flatten)]
    quintic: QuinticArgs,
    #[command(flatten)]
    tols: TolArgs,
    /// Scale factor for the depressed quintic; searched for when omitted.
    #[arg(long, value_parser = parse_number)]
    scale: Option<f64>,
    #[arg(long)]
    json: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    /// Report written by `solve`.
    #[arg(long)]
    json: PathBuf,
    #[arg(long, env = TOL_ENV, default_value_t = 1e-9)]
    tol: f64,
}

/// Parses one number: integer, decimal, or fraction `p/q`.
pub fn parse_number(s: &str) -> Result<f64, String> {
    let s = s.trim();
    let value = match s.split_once('/') {
        Some((num, den)) => {
            let num: f64 = num.trim().parse().map_err(|_| format!("bad numerator in {s:?}"))?;
            let den: f64 = den.trim().parse().map_err(|_| format!("bad denominator in {s:?}"))?;
            if den == 0.0 {
                return Err(format!("zero denominator in {s:?}"));
            }
            num / den
        }
        None => s.parse().map_err(|_| format!("not a number: {s:?}"))?,
    };
    if value.is_finite() {
        Ok(value)
    } else {
        Err(format!("not finite: {s:?}"))
    }
}

/// Parses six comma-separated coefficients, highest degree first.
pub fn parse_coeffs(s: &str) -> Result<[f64; 6], String> {
    let values = s.split(',').map(parse_number).collect::<Result<Vec<_>, _>>()?;
    values
        .try_into()
        .map_err(|v: Vec<f64>| format!("expected 6 coefficients, got {}", v.len()))
}

fn parse_branch(s: &str) -> Result<Branch, String> {
    s.parse()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct QuinticReport {
    pub raw: [f64; 6],
    pub monic: Quintic,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Warning {
    pub code: String,
    pub message: String,
}

impl Warning {
    fn new(code: &str, message: impl Into<String>) -> Self {
        Self {
            code: code.to_string(),
            message: message.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConfigSummary {
    pub config: FoldConfig,
    pub max_magnitude: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Comparison {
    pub direct: ConfigSummary,
    pub nishimura: NishimuraReport,
    pub nishimura_max_magnitude: f64,
    pub direct_roots: Vec<f64>,
    /// Roots found through the scaled configuration, mapped back.
    pub nishimura_roots: Vec<f64>,
    pub max_root_difference: f64,
    pub nishimura_all_verified: bool,
}

/// Everything `solve` reports; `verify` reads it back.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub quintic: QuinticReport,
    pub config: Option<FoldConfig>,
    pub tol: f64,
    pub roots: Vec<Root>,
    pub solutions: Vec<FoldSolution>,
    #[serde(default)]
    pub rejected: Vec<Rejected>,
    #[serde(default)]
    pub warnings: Vec<Warning>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub comparison: Option<Comparison>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<f64>,
}

impl RunReport {
    pub fn all_accepted(&self) -> bool {
        self.solutions.iter().all(|s| s.accepted)
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::DegenerateDegree => EXIT_USAGE,
        _ => EXIT_CONFIG,
    }
}

/// Runs the full pipeline for one quintic.
pub fn solve_report(raw: [f64; 6], h: Option<f64>, branch: Branch, opts: &SolveOptions) -> Result<RunReport, Error> {
    let monic = polynomial::normalize_monic(raw)?;
    let roots = polynomial::real_roots(&monic, opts.root_tol);
    let mut report = RunReport {
        quintic: QuinticReport { raw, monic },
        config: None,
        tol: opts.tol,
        roots,
        solutions: Vec::new(),
        rejected: Vec::new(),
        warnings: Vec::new(),
        comparison: None,
        timing_ms: None,
    };
    if monic.epsilon() == 0.0 {
        let [_, a4, a3, a2, a1, _] = monic.coeffs();
        report.warnings.push(Warning::new(
            "ZeroConstantTerm",
            format!(
                "t = 0 is a root; the remaining factor t^4 + ({a4})t^3 + ({a3})t^2 + ({a2})t + ({a1}) is a quartic and has no two-fold construction"
            ),
        ));
        return Ok(report);
    }
    let cfg = foldconfig::build_config(&monic, h, branch)?;
    let out = foldsolve::solve_all(&cfg, &monic, opts)?;
    for rej in &out.rejected {
        report.warnings.push(Warning::new(
            "ChiEqualsN",
            format!("root t = {} folds n onto itself and is not reported as a solution", rej.t),
        ));
    }
    for sol in &out.solutions {
        if sol.diagnostics.contains(&foldsolve::Diagnostic::LowConfidence) {
            report.warnings.push(Warning::new(
                "LowConfidence",
                format!("root t = {}: P' is nearly P, so chi is poorly determined", sol.t),
            ));
        }
    }
    report.config = Some(cfg);
    report.solutions = out.solutions;
    report.rejected = out.rejected;
    Ok(report)
}

/// Direct configuration side by side with the depress-and-scale one.
pub fn compare(raw: [f64; 6], h: Option<f64>, branch: Branch, scale: Option<f64>, opts: &SolveOptions) -> Result<Comparison, Error> {
    let monic = polynomial::normalize_monic(raw)?;
    let direct = foldconfig::build_config(&monic, h, branch)?;
    let nishimura = foldconfig::nishimura_pipeline_with(&monic, scale, branch)?;

    let direct_out = foldsolve::solve_all(&direct, &monic, opts)?;
    let nish_out = foldsolve::solve_all(&nishimura.config, &nishimura.scaled, opts)?;
    let direct_roots: Vec<f64> = direct_out.solutions.iter().map(|s| s.t).collect();
    let mut nishimura_roots: Vec<f64> = nish_out.solutions.iter().map(|s| nishimura.map_root(s.t)).collect();
    nishimura_roots.sort_by(f64::total_cmp);
    let max_root_difference = if direct_roots.len() == nishimura_roots.len() {
        direct_roots
            .iter()
            .zip(&nishimura_roots)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    } else {
        f64::INFINITY
    };
    Ok(Comparison {
        direct: ConfigSummary {
            max_magnitude: direct.max_magnitude(),
            config: direct,
        },
        nishimura_max_magnitude: nishimura.config.max_magnitude(),
        nishimura,
        direct_roots,
        nishimura_roots,
        max_root_difference,
        nishimura_all_verified: nish_out.all_accepted(),
    })
}

/// Recomputes every residual in `report` from its stored configuration and
/// roots. Returns the number of failing solutions.
pub fn verify_report(report: &RunReport, tol: f64) -> usize {
    let monic = report.quintic.monic;
    let Some(cfg) = report.config else {
        return 0;
    };
    let config_ok = matches!(cfg.roundtrip_error(&monic), Ok(e) if e <= foldconfig::ROUNDTRIP_TOL);
    let failing = report
        .solutions
        .iter()
        .filter(|s| !foldsolve::verify_against(&cfg, &monic, s.t, tol).passes(tol))
        .count();
    failing + usize::from(!config_ok)
}

fn write_output(path: Option<&Path>, text: &str, out: &mut dyn Write) -> std::io::Result<()> {
    match path {
        Some(p) => std::fs::write(p, text),
        None => out.write_all(text.as_bytes()),
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report serializes");
    s.push('\n');
    s
}

fn solve_options(tols: &TolArgs) -> SolveOptions {
    SolveOptions {
        tol: tols.tol,
        root_tol: tols.root_tol,
    }
}

fn cmd_solve(args: &SolveArgs, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let started = Instant::now();
    let opts = solve_options(&args.tols);
    let q = &args.quintic;
    let mut report = match solve_report(q.coeffs, q.h, q.branch, &opts) {
        Ok(r) => r,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return exit_code(&e);
        }
    };
    if args.compare && report.config.is_some() {
        match compare(q.coeffs, q.h, q.branch, None, &opts) {
            Ok(c) => report.comparison = Some(c),
            Err(e) => report
                .warnings
                .push(Warning::new("CompareFailed", format!("comparison unavailable: {e}"))),
        }
    }
    if let Some(path) = &args.svg {
        match (&report.config, report.solutions.is_empty()) {
            (Some(cfg), false) => {
                let svg = render::render_gallery(cfg, &report.solutions).expect("solutions present");
                if let Err(e) = std::fs::write(path, svg) {
                    let _ = writeln!(err, "error: cannot write {}: {e}", path.display());
                    return EXIT_USAGE;
                }
            }
            _ => report
                .warnings
                .push(Warning::new("NoDiagram", "no fold solutions to draw; SVG not written")),
        }
    }
    if args.timing {
        report.timing_ms = Some(started.elapsed().as_secs_f64() * 1e3);
    }
    if let Err(e) = write_output(args.json.as_deref(), &to_json(&report), out) {
        let _ = writeln!(err, "error: cannot write report: {e}");
        return EXIT_USAGE;
    }
    for w in &report.warnings {
        let _ = writeln!(err, "warning [{}]: {}", w.code, w.message);
    }
    if report.all_accepted() {
        EXIT_OK
    } else {
        let _ = writeln!(err, "verification failed for at least one solution");
        EXIT_VERIFY
    }
}

fn cmd_config(args: &ConfigArgs, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let q = &args.quintic;
    let cfg = polynomial::normalize_monic(q.coeffs).and_then(|m| foldconfig::build_config(&m, q.h, q.branch));
    match cfg {
        Ok(cfg) => match write_output(args.json.as_deref(), &to_json(&cfg), out) {
            Ok(()) => EXIT_OK,
            Err(e) => {
                let _ = writeln!(err, "error: cannot write report: {e}");
                EXIT_USAGE
            }
        },
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn cmd_compare(args: &CompareArgs, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let q = &args.quintic;
    match compare(q.coeffs, q.h, q.branch, args.scale, &solve_options(&args.tols)) {
        Ok(c) => match write_output(args.json.as_deref(), &to_json(&c), out) {
            Ok(()) => EXIT_OK,
            Err(e) => {
                let _ = writeln!(err, "error: cannot write report: {e}");
                EXIT_USAGE
            }
        },
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn cmd_verify(args: &VerifyArgs, err: &mut dyn Write) -> i32 {
    let text = match std::fs::read_to_string(&args.json) {
        Ok(t) => t,
        Err(e) => {
            let _ = writeln!(err, "error: cannot read {}: {e}", args.json.display());
            return EXIT_DATA;
        }
    };
    let report: RunReport = match serde_json::from_str(&text) {
        Ok(r) => r,
        Err(e) => {
            let _ = writeln!(err, "error: malformed report: {e}");
            return EXIT_DATA;
        }
    };
    match verify_report(&report, args.tol) {
        0 => EXIT_OK,
        n => {
            let _ = writeln!(err, "{n} check(s) failed at tol = {:e}", args.tol);
            EXIT_VERIFY
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{}", e.render());
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{}", e.render());
                    EXIT_USAGE
                }
            };
        }
    };
    match &cli.command {
        Command::Solve(a) => cmd_solve(a, out, err),
        Command::Config(a) => cmd_config(a, out, err),
        Command::Compare(a) => cmd_compare(a, out, err),
        Command::Verify(a) => cmd_verify(a, err),
    }
}
