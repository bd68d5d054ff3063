//! `gausscube`: evaluate, tabulate and verify the law of the cube of a
//! Gaussian from the command line.
//!
//! Exit codes: 0 success, 1 a verification check failed, 2 usage error,
//! 3 a quadrature could not meet its tolerance.

use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{Map, Value};

use gausscube::asymptotics::{
    a_series_coefficients, bessel_third_coefficients, eval_truncated_a_scaled, first_omitted_scaled,
    DEFAULT_ORDER,
};
use gausscube::charfn::{charfn_cube, charfn_cube_half, charfn_cube_std};
use gausscube::density::{cdf_cube_half, cdf_cube_sigma, density_cube_half, density_cube_sigma};
use gausscube::distributions::GaussianSpec;
use gausscube::moments::{carleman_partial_sums, carleman_term, moment, rational_to_f64};
use gausscube::montecarlo::{sample_cube, SampleRun};
use gausscube::oracle::{oracle_charfn_general, QuadratureConfig};
use gausscube::special::{bessel_k, BesselOrder};
use gausscube::verify::{run_suite, tabulate_charfn, Suite, VerifyOptions};
use gausscube::Error;

/// Directory that relative `--out` paths are resolved against.
const OUTPUT_DIR_ENV: &str = "GAUSSCUBE_OUTPUT_DIR";

#[derive(Parser)]
#[command(name = "gausscube", version, about = "Law of the cube of a Gaussian: characteristic function, density, moments")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Characteristic function E[e^{itY}] of the cube Y.
    Charfn(CharfnArgs),
    /// Closed form against the quadrature oracle for X ~ N(0, 1/2).
    Tabulate(TabulateArgs),
    /// Density of the cube.
    Density(PointArgs),
    /// Distribution function of the cube.
    Cdf(PointArgs),
    /// Exact even moments E[Y^{2k}].
    Moments(MomentsArgs),
    /// Carleman partial sums Σ m_{2k}^{−1/(2k)}.
    Carleman(CarlemanArgs),
    /// Truncated small-t expansion against the Bessel closed form.
    Asympt(AsymptArgs),
    /// Seeded samples of the cube.
    Sample(SampleArgs),
    /// Run a verification suite and report PASS/FAIL per check.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Dist {
    /// X ~ N(0, 1/2)
    Half,
    /// T ~ N(0, 1)
    Std,
    /// S ~ N(0, σ²)
    Sigma,
    /// W ~ N(μ, σ²), by quadrature only
    General,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Args)]
struct Output {
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
    /// Write to this file; relative paths resolve against $GAUSSCUBE_OUTPUT_DIR when set.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Grid {
    /// A single point.
    #[arg(long, allow_negative_numbers = true)]
    t: Option<f64>,
    /// Inclusive linear grid start:stop:count.
    #[arg(long, allow_hyphen_values = true)]
    t_grid: Option<String>,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct XGrid {
    #[arg(long, allow_negative_numbers = true)]
    x: Option<f64>,
    /// Inclusive linear grid start:stop:count.
    #[arg(long, allow_hyphen_values = true)]
    x_grid: Option<String>,
}

#[derive(Args)]
struct CharfnArgs {
    #[arg(long, value_enum, default_value = "half")]
    dist: Dist,
    /// Mean, for `general`.
    #[arg(long, allow_negative_numbers = true)]
    mu: Option<f64>,
    /// Standard deviation, for `sigma` and `general`.
    #[arg(long)]
    sigma: Option<f64>,
    #[command(flatten)]
    grid: Grid,
    #[command(flatten)]
    output: Output,
}

#[derive(Args)]
struct TabulateArgs {
    #[command(flatten)]
    grid: Grid,
    #[command(flatten)]
    output: Output,
}

#[derive(Args)]
struct PointArgs {
    /// Standard deviation of the Gaussian; defaults to 1/√2.
    #[arg(long)]
    sigma: Option<f64>,
    #[command(flatten)]
    grid: XGrid,
    #[command(flatten)]
    output: Output,
}

#[derive(Args)]
struct MomentsArgs {
    /// Order: reports E[Y^{2k}].
    #[arg(long)]
    k: u32,
    /// Report every k' = 0..=k instead of k alone.
    #[arg(long)]
    all: bool,
    #[command(flatten)]
    output: Output,
}

#[derive(Args)]
struct CarlemanArgs {
    /// Number of terms.
    #[arg(long, default_value_t = 100)]
    k: u32,
    #[command(flatten)]
    output: Output,
}

#[derive(Args)]
struct AsymptArgs {
    /// Highest power t^{2N} kept.
    #[arg(long, default_value_t = 2)]
    order: u32,
    /// List the exact coefficients up to `order` instead of evaluating.
    #[arg(long)]
    coefficients: bool,
    #[arg(long, allow_negative_numbers = true)]
    t: Option<f64>,
    /// Inclusive linear grid start:stop:count.
    #[arg(long, allow_hyphen_values = true)]
    t_grid: Option<String>,
    #[command(flatten)]
    output: Output,
}

#[derive(Args)]
struct SampleArgs {
    #[arg(long, default_value_t = 42)]
    seed: u64,
    #[arg(long, default_value_t = 10)]
    n: u64,
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    mu: f64,
    /// Standard deviation; defaults to 1/√2.
    #[arg(long)]
    sigma: Option<f64>,
    #[command(flatten)]
    output: Output,
}

#[derive(Args)]
struct VerifyArgs {
    /// charfn, ode, krein, moments, asympt, mc, bessel, general or all.
    suite: String,
    /// Replaces the headline tolerance of the suite.
    #[arg(long)]
    tol: Option<f64>,
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Sample count for the Monte Carlo suite.
    #[arg(long, default_value_t = 1_000_000)]
    n: u64,
    /// Emit the report as JSON instead of text.
    #[arg(long)]
    json: bool,
}

enum Failure {
    Usage(String),
    Tolerance(String),
    Io(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::ToleranceNotMet { .. } => Failure::Tolerance(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        Failure::Io(io::Error::other(e))
    }
}

type CmdResult<T> = std::result::Result<T, Failure>;

/// A cell of an output table.
enum Cell {
    Num(f64),
    Int(u64),
    Text(String),
}

impl Cell {
    fn csv(&self) -> String {
        match self {
            Cell::Num(v) => format_float(*v),
            Cell::Int(v) => v.to_string(),
            Cell::Text(s) => s.clone(),
        }
    }

    fn json(&self) -> Value {
        match self {
            Cell::Num(v) => serde_json::Number::from_f64(*v)
                .map(Value::Number)
                .unwrap_or_else(|| Value::String(format_float(*v))),
            Cell::Int(v) => Value::from(*v),
            Cell::Text(s) => Value::String(s.clone()),
        }
    }
}

/// Shortest representation that parses back to the same f64.
fn format_float(v: f64) -> String {
    if v.is_nan() {
        "NaN".into()
    } else if v.is_infinite() {
        if v > 0.0 { "inf".into() } else { "-inf".into() }
    } else {
        format!("{v:?}")
    }
}

struct Table {
    headers: Vec<&'static str>,
    rows: Vec<Vec<Cell>>,
}

impl Table {
    fn new(headers: Vec<&'static str>) -> Self {
        Self { headers, rows: Vec::new() }
    }

    fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.headers.len());
        self.rows.push(row);
    }

    fn write(&self, output: &Output) -> CmdResult<()> {
        let mut sink: Box<dyn Write> = match &output.out {
            Some(path) => Box::new(File::create(resolve_out(path))?),
            None => Box::new(io::stdout().lock()),
        };
        match output.format {
            Format::Csv => {
                let mut w = csv::Writer::from_writer(&mut sink);
                w.write_record(&self.headers)?;
                for row in &self.rows {
                    w.write_record(row.iter().map(Cell::csv))?;
                }
                w.flush()?;
            }
            Format::Json => {
                let records: Vec<Value> = self
                    .rows
                    .iter()
                    .map(|row| {
                        let m: Map<String, Value> =
                            self.headers.iter().zip(row).map(|(h, c)| (h.to_string(), c.json())).collect();
                        Value::Object(m)
                    })
                    .collect();
                serde_json::to_writer_pretty(&mut sink, &records).map_err(io::Error::other)?;
                writeln!(sink)?;
            }
        }
        sink.flush()?;
        Ok(())
    }
}

fn resolve_out(path: &PathBuf) -> PathBuf {
    match std::env::var_os(OUTPUT_DIR_ENV) {
        Some(dir) if path.is_relative() => PathBuf::from(dir).join(path),
        _ => path.clone(),
    }
}

fn parse_grid(spec: &str) -> CmdResult<Vec<f64>> {
    let bad = || Failure::Usage(format!("grid `{spec}` is not start:stop:count"));
    let parts: Vec<&str> = spec.split(':').collect();
    let [a, b, n] = parts.as_slice() else { return Err(bad()) };
    let a: f64 = a.trim().parse().map_err(|_| bad())?;
    let b: f64 = b.trim().parse().map_err(|_| bad())?;
    let n: usize = n.trim().parse().map_err(|_| bad())?;
    if n == 0 || !a.is_finite() || !b.is_finite() {
        return Err(bad());
    }
    Ok(gausscube::verify::linear_grid(a, b, n))
}

fn points(single: Option<f64>, grid: Option<&str>) -> CmdResult<Vec<f64>> {
    match (single, grid) {
        (Some(v), None) => Ok(vec![v]),
        (None, Some(g)) => parse_grid(g),
        _ => Err(Failure::Usage("give exactly one of a point or a grid".into())),
    }
}

fn cmd_charfn(args: &CharfnArgs) -> CmdResult<()> {
    let ts = points(args.grid.t, args.grid.t_grid.as_deref())?;
    if args.dist == Dist::General {
        let (Some(mu), Some(sigma)) = (args.mu, args.sigma) else {
            return Err(Failure::Usage("--dist general needs --mu and --sigma".into()));
        };
        let spec = GaussianSpec::general(mu, sigma)?;
        let cfg = QuadratureConfig::default();
        let mut table = Table::new(vec!["t", "re", "im", "est_error"]);
        for t in ts {
            let r = oracle_charfn_general(&spec, t, &cfg)?;
            table.push(vec![Cell::Num(t), Cell::Num(r.value.re), Cell::Num(r.value.im), Cell::Num(r.est_error)]);
        }
        return table.write(&args.output);
    }
    if args.mu.is_some_and(|m| m != 0.0) {
        return Err(Failure::Usage("a nonzero mean needs --dist general".into()));
    }
    let mut table = Table::new(vec!["t", "re", "im"]);
    for t in ts {
        let v = match args.dist {
            Dist::Half => charfn_cube_half(t),
            Dist::Std => charfn_cube_std(t),
            _ => {
                let sigma = args.sigma.ok_or_else(|| Failure::Usage("--dist sigma needs --sigma".into()))?;
                charfn_cube(&GaussianSpec::scaled(sigma)?, t)?
            }
        };
        table.push(vec![Cell::Num(t), Cell::Num(v.re), Cell::Num(v.im)]);
    }
    table.write(&args.output)
}

fn cmd_tabulate(args: &TabulateArgs) -> CmdResult<()> {
    let ts = points(args.grid.t, args.grid.t_grid.as_deref())?;
    let rows = tabulate_charfn(&ts, &QuadratureConfig::default())?;
    let mut table = Table::new(vec!["t", "closed_form", "oracle", "abs_err", "rel_err"]);
    for r in rows {
        table.push(vec![
            Cell::Num(r.t),
            Cell::Num(r.closed_form),
            Cell::Num(r.oracle),
            Cell::Num(r.abs_err),
            Cell::Num(r.rel_err),
        ]);
    }
    table.write(&args.output)
}

fn cmd_density(args: &PointArgs, cdf: bool) -> CmdResult<()> {
    let xs = points(args.grid.x, args.grid.x_grid.as_deref())?;
    let mut table = Table::new(vec!["x", if cdf { "cdf" } else { "density" }]);
    for x in xs {
        let v = match (cdf, args.sigma) {
            (true, None) => cdf_cube_half(x),
            (true, Some(s)) => cdf_cube_sigma(s, x)?,
            // the pole at the origin is reported as +inf
            (false, None) => density_cube_half(x).or_else(pole)?,
            (false, Some(s)) => density_cube_sigma(s, x).or_else(pole)?,
        };
        table.push(vec![Cell::Num(x), Cell::Num(v)]);
    }
    table.write(&args.output)
}

fn pole(e: Error) -> gausscube::Result<f64> {
    match e {
        Error::Singularity => Ok(f64::INFINITY),
        other => Err(other),
    }
}

fn cmd_moments(args: &MomentsArgs) -> CmdResult<()> {
    let ks: Vec<u32> = if args.all { (0..=args.k).collect() } else { vec![args.k] };
    let mut table = Table::new(vec!["k", "order", "exact", "value"]);
    for k in ks {
        let m = moment(k);
        table.push(vec![
            Cell::Int(k as u64),
            Cell::Int(2 * k as u64),
            Cell::Text(m.to_string()),
            Cell::Num(rational_to_f64(&m)),
        ]);
    }
    table.write(&args.output)
}

fn cmd_carleman(args: &CarlemanArgs) -> CmdResult<()> {
    let sums = carleman_partial_sums(args.k)?;
    let mut table = Table::new(vec!["k", "term", "partial_sum"]);
    for (i, s) in sums.into_iter().enumerate() {
        let k = i as u32 + 1;
        table.push(vec![Cell::Int(k as u64), Cell::Num(carleman_term(k)?), Cell::Num(s)]);
    }
    table.write(&args.output)
}

fn cmd_asympt(args: &AsymptArgs) -> CmdResult<()> {
    if args.order > 4 * DEFAULT_ORDER {
        return Err(Failure::Usage(format!("--order above {} is not supported", 4 * DEFAULT_ORDER)));
    }
    if args.coefficients {
        let k_series = bessel_third_coefficients(args.order, false);
        let mut table = Table::new(vec!["n", "power", "coefficient", "value", "matches_bessel"]);
        for (n, term) in a_series_coefficients(args.order).into_iter().enumerate() {
            table.push(vec![
                Cell::Int(n as u64),
                Cell::Int(term.power as u64),
                Cell::Text(term.coefficient.to_string()),
                Cell::Num(term.coefficient_f64()),
                Cell::Text((term == k_series[n]).to_string()),
            ]);
        }
        return table.write(&args.output);
    }
    let ts = points(args.t, args.t_grid.as_deref())?;
    let mut table = Table::new(vec!["t", "truncated", "bessel", "abs_err", "first_omitted"]);
    for t in ts {
        let trunc = eval_truncated_a_scaled(t, args.order)?;
        let exact = bessel_k(BesselOrder::one_third(), 2.0 / (27.0 * t * t))?.scaled_value;
        table.push(vec![
            Cell::Num(t),
            Cell::Num(trunc),
            Cell::Num(exact),
            Cell::Num((trunc - exact).abs()),
            Cell::Num(first_omitted_scaled(t, args.order)?),
        ]);
    }
    table.write(&args.output)
}

fn cmd_sample(args: &SampleArgs) -> CmdResult<()> {
    let sigma = args.sigma.unwrap_or(std::f64::consts::FRAC_1_SQRT_2);
    let run = SampleRun::new(args.seed, args.n, GaussianSpec::general(args.mu, sigma)?)?;
    let mut table = Table::new(vec!["index", "y"]);
    for (i, y) in sample_cube(&run).enumerate() {
        table.push(vec![Cell::Int(i as u64), Cell::Num(y)]);
    }
    table.write(&args.output)
}

fn cmd_verify(args: &VerifyArgs) -> CmdResult<bool> {
    let suites: Vec<Suite> = if args.suite == "all" {
        Suite::ALL.to_vec()
    } else {
        vec![args.suite.parse()?]
    };
    let opts = VerifyOptions { tol: args.tol, seed: args.seed, n_samples: args.n, ..VerifyOptions::default() };
    if let Some(tol) = args.tol {
        if !(tol > 0.0) || !tol.is_finite() {
            return Err(Failure::Usage(format!("--tol must be positive, got {tol}")));
        }
    }
    let mut all_passed = true;
    let mut reports = Vec::new();
    let mut out = io::stdout().lock();
    for suite in suites {
        let report = run_suite(suite, &opts)?;
        all_passed &= report.passed();
        if !args.json {
            for check in &report.checks {
                writeln!(out, "[{suite}] {check}")?;
            }
            writeln!(out, "[{suite}] {}", if report.passed() { "PASS" } else { "FAIL" })?;
        }
        reports.push(report);
    }
    if args.json {
        serde_json::to_writer_pretty(&mut out, &reports).map_err(io::Error::other)?;
        writeln!(out)?;
    }
    Ok(all_passed)
}

fn run(cli: Cli) -> CmdResult<bool> {
    match &cli.command {
        Command::Charfn(a) => cmd_charfn(a)?,
        Command::Tabulate(a) => cmd_tabulate(a)?,
        Command::Density(a) => cmd_density(a, false)?,
        Command::Cdf(a) => cmd_density(a, true)?,
        Command::Moments(a) => cmd_moments(a)?,
        Command::Carleman(a) => cmd_carleman(a)?,
        Command::Asympt(a) => cmd_asympt(a)?,
        Command::Sample(a) => cmd_sample(a)?,
        Command::Verify(a) => return cmd_verify(a),
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Tolerance(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
