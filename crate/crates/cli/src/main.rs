//! `opdam-a1`: evaluation, expansion, operator application and the
//! verification suites from the command line.
//!
//! Exit codes: 0 success, 1 runtime or verification failure, 2 bad arguments.

use std::f64::consts::PI;
use std::fmt;
use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use opdam_a1::expr::Expr;
use opdam_a1::poisson::{poisson_series_auto, PoissonKernel};
use opdam_a1::quadrature::QuadratureRule;
use opdam_a1::singular::{hilbert_via_kernel, HilbertKernel, Support};
use opdam_a1::special_fn::{e_eval, p_eval};
use opdam_a1::spectral::{
    analyze, convolve_spectral, fractional_spectral, hilbert_spectral, poisson_extend, required_order,
    translate_spectral, DEFAULT_TRUNCATION,
};
use opdam_a1::verify::{self, CheckReport, VerifyConfig};
use opdam_a1::{Multiplicity, SpectralExpansion};
use rayon::prelude::*;
use serde::ser::{SerializeMap, Serializer};
use serde::Serialize;

const DEFAULT_K: f64 = 0.5;
const DEFAULT_TOL: f64 = 1e-10;
const DEFAULT_POINTS: usize = 16;
const THREADS_VAR: &str = "OPDAM_A1_THREADS";

#[derive(Parser)]
#[command(name = "opdam-a1", version, about = "Heckman-Opdam analysis on the circle (type A1)")]
struct Cli {
    /// Multiplicity k; `verify` accepts a comma-separated list.
    #[arg(long, global = true, value_delimiter = ',')]
    k: Vec<f64>,
    /// Truncation degree N of spectral expansions.
    #[arg(long = "n-trunc", global = true)]
    n_trunc: Option<usize>,
    /// Circle-rule order m (default 4N).
    #[arg(long = "quad-order", global = true)]
    quad_order: Option<usize>,
    /// Tolerance for truncated series.
    #[arg(long, global = true)]
    tol: Option<f64>,
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Write output to FILE instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Rows x, Re E_n, Im E_n, P_|n|.
    #[command(allow_negative_numbers = true)]
    Eval {
        #[arg(long, default_value_t = 0)]
        n: i64,
        #[command(flatten)]
        grid: GridArgs,
    },
    /// Coefficients of f in the basis E_n.
    #[command(allow_negative_numbers = true)]
    Expand {
        #[arg(long, allow_hyphen_values = true)]
        f: String,
    },
    /// Samples of a JSON expansion (`-` reads stdin).
    #[command(allow_negative_numbers = true)]
    Synth {
        #[arg(long)]
        input: PathBuf,
        #[command(flatten)]
        grid: GridArgs,
    },
    /// Poisson kernel by truncated series and by its integral form.
    Poisson {
        #[arg(long, value_delimiter = ',', default_value = "0.3,0.6,0.8")]
        r: Vec<f64>,
        /// Points per axis of the (x, y) grid.
        #[arg(long, default_value_t = DEFAULT_POINTS)]
        points: usize,
    },
    /// Generalized translate of f by `--shift`.
    #[command(allow_negative_numbers = true)]
    Translate {
        #[arg(long, allow_hyphen_values = true)]
        f: String,
        #[arg(long, allow_hyphen_values = true)]
        shift: f64,
        #[command(flatten)]
        grid: GridArgs,
    },
    /// Convolution f ⋆ g.
    #[command(allow_negative_numbers = true)]
    Convolve {
        #[arg(long, allow_hyphen_values = true)]
        f: String,
        #[arg(long, allow_hyphen_values = true)]
        g: String,
        #[command(flatten)]
        grid: GridArgs,
    },
    /// Hilbert transform of f at one point.
    #[command(allow_negative_numbers = true)]
    Hilbert {
        #[arg(long, allow_hyphen_values = true)]
        f: String,
        #[arg(long, allow_hyphen_values = true)]
        x: f64,
        #[arg(long, value_enum, default_value_t = Mode::Spectral)]
        mode: Mode,
        /// Support `a:b` of f for the kernel mode (bumps supply their own).
        #[arg(long, allow_hyphen_values = true)]
        support: Option<String>,
    },
    /// Fractional integral of order alpha.
    #[command(allow_negative_numbers = true)]
    Fracint {
        #[arg(long, allow_hyphen_values = true)]
        f: String,
        #[arg(long, allow_hyphen_values = true)]
        alpha: f64,
        #[command(flatten)]
        grid: GridArgs,
    },
    /// Apply an operator to f and sample the result.
    #[command(allow_negative_numbers = true)]
    Transform {
        #[arg(value_enum)]
        op: Operator,
        #[arg(long, allow_hyphen_values = true)]
        f: String,
        #[arg(long, allow_hyphen_values = true)]
        g: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        alpha: Option<f64>,
        #[arg(long)]
        r: Option<f64>,
        #[arg(long, allow_hyphen_values = true)]
        shift: Option<f64>,
        #[command(flatten)]
        grid: GridArgs,
    },
    /// Run verification suites; exit 0 iff every check passes.
    Verify {
        /// Suites to run (default: all).
        #[arg(long, value_delimiter = ',')]
        suite: Vec<String>,
        #[arg(long)]
        seed: Option<u64>,
    },
}

#[derive(Args)]
struct GridArgs {
    /// Evaluation points (comma-separated); overrides `--points`.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    x: Vec<f64>,
    /// Number of equispaced points on [-π, π).
    #[arg(long, default_value_t = DEFAULT_POINTS)]
    points: usize,
}

impl GridArgs {
    fn points(&self) -> Result<Vec<f64>, Failure> {
        if !self.x.is_empty() {
            return Ok(self.x.clone());
        }
        if self.points == 0 {
            return Err(Failure::usage("--points must be positive"));
        }
        Ok(uniform_grid(self.points))
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Spectral,
    Kernel,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Spectral => "spectral",
            Mode::Kernel => "kernel",
        })
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Operator {
    Hilbert,
    Fracint,
    Poisson,
    Convolve,
    Translate,
}

/// An error tagged with its exit code.
#[derive(Debug)]
struct Failure {
    code: u8,
    error: anyhow::Error,
}

impl Failure {
    fn usage(msg: impl fmt::Display) -> Self {
        Failure {
            code: 2,
            error: anyhow!("{msg}"),
        }
    }

    fn runtime(error: anyhow::Error) -> Self {
        Failure { code: 1, error }
    }
}

impl From<opdam_a1::Error> for Failure {
    fn from(e: opdam_a1::Error) -> Self {
        let code = match e {
            opdam_a1::Error::NoConvergence => 1,
            _ => 2,
        };
        Failure {
            code,
            error: e.into(),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::runtime(e.into())
    }
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::runtime(e)
    }
}

/// Resolved global options.
struct RunConfig {
    k: Multiplicity,
    n_trunc: usize,
    order: usize,
    tol: f64,
    format: Format,
}

impl RunConfig {
    fn from_cli(cli: &Cli) -> Result<Self, Failure> {
        let k = match cli.k.as_slice() {
            [] => DEFAULT_K,
            [k] => *k,
            _ => return Err(Failure::usage("--k takes a single value outside `verify`")),
        };
        let k = Multiplicity::new(k)?;
        let n_trunc = cli.n_trunc.unwrap_or(DEFAULT_TRUNCATION);
        if n_trunc < 1 {
            return Err(Failure::usage("--n-trunc must be at least 1"));
        }
        let order = cli.quad_order.unwrap_or(4 * n_trunc);
        if order < required_order(n_trunc) {
            return Err(Failure::usage(format!(
                "--quad-order {order} cannot resolve --n-trunc {n_trunc} (need at least {})",
                required_order(n_trunc)
            )));
        }
        if order < 4 * n_trunc {
            eprintln!("warning: quadrature order {order} is below the recommended 4N = {}", 4 * n_trunc);
        }
        let tol = cli.tol.unwrap_or(DEFAULT_TOL);
        if !(tol > 0.0 && tol.is_finite()) {
            return Err(Failure::usage(format!("--tol must be positive, got {tol}")));
        }
        Ok(RunConfig {
            k,
            n_trunc,
            order,
            tol,
            format: cli.format.unwrap_or(Format::Csv),
        })
    }

    fn rule(&self) -> Result<QuadratureRule, Failure> {
        Ok(QuadratureRule::circle(self.k, self.order)?)
    }

    fn expand(&self, src: &str) -> Result<SpectralExpansion, Failure> {
        let f: Expr = src.parse()?;
        let k = self.k;
        Ok(analyze(|x| f.eval(x, k), k, self.n_trunc, &self.rule()?)?)
    }
}

fn uniform_grid(p: usize) -> Vec<f64> {
    (0..p).map(|j| -PI + 2.0 * PI * j as f64 / p as f64).collect()
}

#[derive(Clone)]
enum Cell {
    Int(i64),
    Num(f64),
    Text(String),
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Cell::Int(v) => write!(f, "{v}"),
            // shortest round-trip digits; exponent form only for extreme magnitudes
            Cell::Num(v) if *v == 0.0 || !v.is_finite() || (1e-4..1e16).contains(&v.abs()) => write!(f, "{v}"),
            Cell::Num(v) => write!(f, "{v:e}"),
            Cell::Text(s) => f.write_str(s),
        }
    }
}

impl Serialize for Cell {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Cell::Int(v) => s.serialize_i64(*v),
            Cell::Num(v) => s.serialize_f64(*v),
            Cell::Text(t) => s.serialize_str(t),
        }
    }
}

/// Rows with a fixed column order, rendered as CSV or as a JSON array of objects.
struct Table {
    columns: &'static [&'static str],
    rows: Vec<Vec<Cell>>,
}

struct Row<'a> {
    columns: &'a [&'a str],
    cells: &'a [Cell],
}

impl Serialize for Row<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.columns.len()))?;
        for (c, v) in self.columns.iter().zip(self.cells) {
            map.serialize_entry(c, v)?;
        }
        map.end()
    }
}

impl Table {
    fn render(&self, format: Format) -> anyhow::Result<String> {
        match format {
            Format::Csv => {
                let mut w = csv::Writer::from_writer(Vec::new());
                w.write_record(self.columns)?;
                for row in &self.rows {
                    w.write_record(row.iter().map(Cell::to_string))?;
                }
                Ok(String::from_utf8(w.into_inner()?)?)
            }
            Format::Json => {
                let rows: Vec<Row> = self
                    .rows
                    .iter()
                    .map(|cells| Row {
                        columns: self.columns,
                        cells,
                    })
                    .collect();
                Ok(serde_json::to_string_pretty(&rows)? + "\n")
            }
        }
    }
}

fn sample_table(exp: &SpectralExpansion, xs: &[f64]) -> Table {
    let values = exp.synthesize_many(xs);
    Table {
        columns: &["x", "re", "im"],
        rows: xs
            .iter()
            .zip(values)
            .map(|(&x, v)| vec![Cell::Num(x), Cell::Num(v.re), Cell::Num(v.im)])
            .collect(),
    }
}

fn coefficient_table(exp: &SpectralExpansion) -> Table {
    Table {
        columns: &["n", "re", "im"],
        rows: exp
            .indices()
            .zip(exp.coeffs())
            .map(|(n, a)| vec![Cell::Int(n), Cell::Num(a.re), Cell::Num(a.im)])
            .collect(),
    }
}

/// Expansion as versioned JSON, or its samples on the grid as CSV.
fn expansion_output(exp: &SpectralExpansion, grid: &GridArgs, format: Format) -> Result<String, Failure> {
    match format {
        Format::Json => Ok(exp.to_json() + "\n"),
        Format::Csv => Ok(sample_table(exp, &grid.points()?).render(Format::Csv)?),
    }
}

fn read_input(path: &PathBuf) -> Result<String, Failure> {
    let mut s = String::new();
    if path.as_os_str() == "-" {
        io::stdin().read_to_string(&mut s)?;
    } else {
        s = fs::read_to_string(path)
            .with_context(|| format!("reading {}", path.display()))
            .map_err(|e| Failure { code: 2, error: e })?;
    }
    Ok(s)
}

fn parse_support(s: &str) -> Result<Support, Failure> {
    let (a, b) = s
        .split_once(':')
        .ok_or_else(|| Failure::usage(format!("--support must be a:b, got {s:?}")))?;
    let parse = |t: &str| {
        t.trim()
            .parse::<f64>()
            .map_err(|_| Failure::usage(format!("bad number {t:?} in --support")))
    };
    Ok(Support::new(parse(a)?, parse(b)?)?)
}

#[derive(Serialize)]
struct HilbertValue {
    x: f64,
    value_re: f64,
    value_im: f64,
    mode: String,
}

fn cmd_hilbert(cfg: &RunConfig, f: &str, x: f64, mode: Mode, support: Option<&str>) -> Result<String, Failure> {
    let value = match mode {
        Mode::Spectral => hilbert_spectral(&cfg.expand(f)?).synthesize(x),
        Mode::Kernel => {
            let expr: Expr = f.parse()?;
            let support = match support {
                Some(s) => parse_support(s)?,
                None => expr
                    .support()
                    .ok_or_else(|| Failure::usage("kernel mode needs --support unless f is a sum of bumps"))?,
            };
            let kernel = HilbertKernel::new(cfg.k)?;
            let k = cfg.k;
            hilbert_via_kernel(|y| expr.eval(y, k), x, support, &kernel)?
        }
    };
    let out = HilbertValue {
        x,
        value_re: value.re,
        value_im: value.im,
        mode: mode.to_string(),
    };
    match cfg.format {
        Format::Json => Ok(serde_json::to_string_pretty(&out).map_err(anyhow::Error::from)? + "\n"),
        Format::Csv => Ok(Table {
            columns: &["x", "value_re", "value_im", "mode"],
            rows: vec![vec![
                Cell::Num(out.x),
                Cell::Num(out.value_re),
                Cell::Num(out.value_im),
                Cell::Text(out.mode),
            ]],
        }
        .render(Format::Csv)?),
    }
}

fn cmd_poisson(cfg: &RunConfig, rs: &[f64], points: usize) -> Result<String, Failure> {
    if points == 0 {
        return Err(Failure::usage("--points must be positive"));
    }
    for &r in rs {
        if !(0.0..1.0).contains(&r) {
            return Err(Failure::usage(format!("--r must lie in [0, 1), got {r}")));
        }
    }
    let grid = uniform_grid(points);
    let kernel = PoissonKernel::new(cfg.k)?;
    let mut jobs = Vec::with_capacity(rs.len() * points * points);
    for &r in rs {
        for &x in &grid {
            for &y in &grid {
                jobs.push((r, x, y));
            }
        }
    }
    let rows: Vec<Vec<Cell>> = jobs
        .par_iter()
        .map(|&(r, x, y)| -> Result<Vec<Cell>, opdam_a1::Error> {
            let series = poisson_series_auto(r, x, y, cfg.k, cfg.tol)?.value;
            let integral = kernel.eval(r, x, y)?;
            Ok(vec![
                Cell::Num(r),
                Cell::Num(x),
                Cell::Num(y),
                Cell::Num(series),
                Cell::Num(integral),
                Cell::Num((series - integral).abs()),
            ])
        })
        .collect::<Result<_, _>>()?;
    Ok(Table {
        columns: &["r", "x", "y", "value_series", "value_integral", "abs_diff"],
        rows,
    }
    .render(cfg.format)?)
}

#[allow(clippy::too_many_arguments)]
fn cmd_transform(
    cfg: &RunConfig,
    op: Operator,
    f: &str,
    g: Option<&str>,
    alpha: Option<f64>,
    r: Option<f64>,
    shift: Option<f64>,
    grid: &GridArgs,
) -> Result<String, Failure> {
    let exp = cfg.expand(f)?;
    let out = match op {
        Operator::Hilbert => hilbert_spectral(&exp),
        Operator::Fracint => {
            fractional_spectral(&exp, alpha.ok_or_else(|| Failure::usage("fracint needs --alpha"))?)?
        }
        Operator::Poisson => poisson_extend(&exp, r.ok_or_else(|| Failure::usage("poisson needs --r"))?)?,
        Operator::Convolve => {
            let g = g.ok_or_else(|| Failure::usage("convolve needs --g"))?;
            convolve_spectral(&exp, &cfg.expand(g)?)?
        }
        Operator::Translate => {
            translate_spectral(&exp, shift.ok_or_else(|| Failure::usage("translate needs --shift"))?)
        }
    };
    Ok(sample_table(&out, &grid.points()?).render(cfg.format)?)
}

fn check_table(reports: &[CheckReport]) -> Table {
    Table {
        columns: &["suite", "criterion", "name", "status", "observed", "tolerance", "detail"],
        rows: reports
            .iter()
            .map(|r| {
                let status = if !r.passed {
                    "FAIL"
                } else if r.reporting_only {
                    "INFO"
                } else {
                    "PASS"
                };
                vec![
                    Cell::Text(r.suite.to_string()),
                    Cell::Int(r.criterion.into()),
                    Cell::Text(r.name.clone()),
                    Cell::Text(status.to_string()),
                    Cell::Num(r.observed),
                    Cell::Num(r.tolerance),
                    Cell::Text(r.detail.clone()),
                ]
            })
            .collect(),
    }
}

/// Returns the rendered report and whether every check passed.
fn cmd_verify(cli: &Cli, suites: &[String], seed: Option<u64>) -> Result<(String, bool), Failure> {
    let mut cfg = VerifyConfig::default();
    if !cli.k.is_empty() {
        cfg.ks = Some(cli.k.clone());
    }
    if let Some(n) = cli.n_trunc {
        cfg.n_trunc = n;
    }
    if let Some(m) = cli.quad_order {
        cfg.order = m;
    }
    if let Some(s) = seed {
        cfg.seed = s;
    }
    cfg.validate()?;
    let names: Vec<&str> = if suites.is_empty() {
        verify::SUITES.to_vec()
    } else {
        suites.iter().map(String::as_str).collect()
    };
    for name in &names {
        if !verify::SUITES.contains(name) {
            return Err(Failure::usage(format!(
                "unknown suite {name:?}; expected one of {}",
                verify::SUITES.join(", ")
            )));
        }
    }
    let mut reports = Vec::new();
    for name in names {
        reports.extend(verify::run_suite(name, &cfg)?);
    }
    let failed = reports.iter().filter(|r| !r.passed).count();
    eprintln!("{} checks, {failed} failed", reports.len());
    let text = match cli.format.unwrap_or(Format::Csv) {
        Format::Json => serde_json::to_string_pretty(&reports).map_err(anyhow::Error::from)? + "\n",
        Format::Csv => check_table(&reports).render(Format::Csv)?,
    };
    Ok((text, failed == 0))
}

fn configure_threads() -> Result<(), Failure> {
    let Ok(v) = std::env::var(THREADS_VAR) else {
        return Ok(());
    };
    let n: usize = v
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| Failure::usage(format!("{THREADS_VAR} must be a positive integer, got {v:?}")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| Failure::runtime(e.into()))
}

fn run(cli: &Cli) -> Result<bool, Failure> {
    configure_threads()?;
    let (text, ok) = if let Command::Verify { suite, seed } = &cli.command {
        cmd_verify(cli, suite, *seed)?
    } else {
        let cfg = RunConfig::from_cli(cli)?;
        let text = match &cli.command {
            Command::Eval { n, grid } => {
                let k = cfg.k;
                let rows = grid
                    .points()?
                    .into_iter()
                    .map(|x| -> Result<Vec<Cell>, Failure> {
                        let e: Complex64 = e_eval(*n, k, x);
                        Ok(vec![Cell::Num(x), Cell::Num(e.re), Cell::Num(e.im), Cell::Num(p_eval(n.abs(), k, x)?)])
                    })
                    .collect::<Result<_, _>>()?;
                Table {
                    columns: &["x", "re", "im", "p"],
                    rows,
                }
                .render(cfg.format)?
            }
            Command::Expand { f } => {
                let exp = cfg.expand(f)?;
                match cfg.format {
                    Format::Json => exp.to_json() + "\n",
                    Format::Csv => coefficient_table(&exp).render(Format::Csv)?,
                }
            }
            Command::Synth { input, grid } => {
                let exp = SpectralExpansion::from_json(&read_input(input)?)?;
                sample_table(&exp, &grid.points()?).render(cfg.format)?
            }
            Command::Poisson { r, points } => cmd_poisson(&cfg, r, *points)?,
            Command::Translate { f, shift, grid } => {
                expansion_output(&translate_spectral(&cfg.expand(f)?, *shift), grid, cfg.format)?
            }
            Command::Convolve { f, g, grid } => {
                let out = convolve_spectral(&cfg.expand(f)?, &cfg.expand(g)?)?;
                expansion_output(&out, grid, cfg.format)?
            }
            Command::Hilbert { f, x, mode, support } => cmd_hilbert(&cfg, f, *x, *mode, support.as_deref())?,
            Command::Fracint { f, alpha, grid } => {
                expansion_output(&fractional_spectral(&cfg.expand(f)?, *alpha)?, grid, cfg.format)?
            }
            Command::Transform {
                op,
                f,
                g,
                alpha,
                r,
                shift,
                grid,
            } => cmd_transform(&cfg, *op, f, g.as_deref(), *alpha, *r, *shift, grid)?,
            Command::Verify { .. } => unreachable!("handled above"),
        };
        (text, true)
    };
    match &cli.out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display()))?,
        None => {
            let mut stdout = io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            stdout.flush()?;
        }
    }
    Ok(ok)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(f) => {
            eprintln!("error: {:#}", f.error);
            ExitCode::from(f.code)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cli_definition_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }

    #[test]
    fn csv_quotes_text_with_commas() {
        let t = Table {
            columns: &["a", "b"],
            rows: vec![vec![Cell::Text("x, y".into()), Cell::Int(3)]],
        };
        assert_eq!(t.render(Format::Csv).unwrap(), "a,b\n\"x, y\",3\n");
    }

    #[test]
    fn json_keeps_column_order() {
        let t = Table {
            columns: &["z", "a"],
            rows: vec![vec![Cell::Num(1.5), Cell::Num(-2.0)]],
        };
        let s = t.render(Format::Json).unwrap();
        assert!(s.find("\"z\"").unwrap() < s.find("\"a\"").unwrap());
    }

    #[test]
    fn support_parsing() {
        let s = parse_support("0.5:1.5").unwrap();
        assert_eq!((s.a, s.b), (0.5, 1.5));
        assert_eq!(parse_support("0.5").unwrap_err().code, 2);
        assert_eq!(parse_support("2:1").unwrap_err().code, 2);
    }
}
