//! Command-line interface: tabulate potentials, eigenfunctions and spectra,
//! run the verification battery, and export the reference figure data.
//!
//! Output conventions shared by every subcommand:
//!
//! * CSV: `#`-prefixed metadata lines echoing the parameters, then a header
//!   row, then data rows. Floats are printed with 17 significant digits
//!   (`{:.16e}`), so a parsed value is bit-identical to the computed one.
//! * JSON: the same content as a single document (also lossless — floats
//!   serialize in shortest round-trip form).
//! * `--out FILE` writes atomically (temp file + rename); without it the
//!   document goes to stdout.
//!
//! Exit codes: `0` success (and, for `verify`, every check passed);
//! `1` a verification check failed or a numerical routine did not converge;
//! `2` invalid parameters (also used by the argument parser itself);
//! `3` an I/O failure.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

use crate::error::Error;
use crate::models::SemiconfinedModel;
use crate::pct;
use crate::verify::{self, ReportOptions};

/// Exit code for a failed verification or non-converged computation.
pub const EXIT_VERIFICATION_FAILED: i32 = 1;
/// Exit code for invalid parameters.
pub const EXIT_INVALID_PARAMS: i32 = 2;
/// Exit code for I/O failures.
pub const EXIT_IO: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "semiconfined",
    version,
    about = "Closed-form semiconfined oscillator models with built-in numerical verification"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Tabulate the potential V(x) on a wall-clustered sample.
    Potential(PotentialArgs),
    /// Tabulate a normalized eigenfunction from the wall to underflow.
    Wavefunction(WavefunctionArgs),
    /// Compare closed-form energies with the discretized operator's.
    Spectrum(SpectrumArgs),
    /// Run the full verification battery and emit its report.
    Verify(VerifyArgs),
    /// Export the reference potential curves for m = 0.5, 1, 1.5.
    Figure1(Figure1Args),
}

/// Model parameters shared by every subcommand.
#[derive(Debug, Args)]
struct ModelArgs {
    /// Oscillator frequency ω (> 0).
    #[arg(long, default_value_t = 1.0)]
    omega: f64,
    /// Wall position a (> 0); the model lives on (-a, ∞).
    #[arg(long, default_value_t = 2.0)]
    a: f64,
    /// Confinement strength α (> max(0, (m-1)/(2-m))).
    #[arg(long, default_value_t = 4.0)]
    alpha: f64,
    /// Mass exponent m in (0, 2); the mass is (1 + x/a)^{-m}.
    #[arg(long, default_value_t = 1.0)]
    m: f64,
}

impl ModelArgs {
    fn build(&self) -> Result<SemiconfinedModel, Error> {
        SemiconfinedModel::new(self.omega, self.a, self.alpha, self.m)
    }
}

#[derive(Debug, Args)]
struct PotentialArgs {
    #[command(flatten)]
    model: ModelArgs,
    /// Number of sample rows.
    #[arg(long, default_value_t = 500)]
    grid_points: usize,
    /// Right edge of the sample window (the last row lands exactly here).
    #[arg(long, default_value_t = 10.0)]
    x_max: f64,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
    /// Output file (atomic write); stdout when absent.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct WavefunctionArgs {
    #[command(flatten)]
    model: ModelArgs,
    /// State index n.
    #[arg(long, default_value_t = 0)]
    n: usize,
    /// Largest admissible state index (n must not exceed it).
    #[arg(long, default_value_t = 3)]
    n_max: usize,
    /// Number of sample rows.
    #[arg(long, default_value_t = 2000)]
    grid_points: usize,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
    /// Output file (atomic write); stdout when absent.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct SpectrumArgs {
    #[command(flatten)]
    model: ModelArgs,
    /// Highest state index to compare (k = n_max + 1 levels).
    #[arg(long, default_value_t = 3)]
    n_max: usize,
    /// Grid size for the discretized operator.
    #[arg(long, default_value_t = 4000)]
    grid_points: usize,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
    /// Output file (atomic write); stdout when absent.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[command(flatten)]
    model: ModelArgs,
    /// Highest state index entering the spectrum section (k = n_max + 1).
    #[arg(long, default_value_t = 3)]
    n_max: usize,
    /// Grid size for the spectrum section.
    #[arg(long, default_value_t = 4000)]
    grid_points: usize,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
    /// Output file (atomic write); stdout when absent.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct Figure1Args {
    /// Directory receiving the three CSV curves and manifest.json.
    #[arg(long, default_value = ".")]
    out_dir: PathBuf,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

/// A failure routed to a process exit code.
#[derive(Debug)]
struct CliFailure {
    code: i32,
    message: String,
}

impl CliFailure {
    fn io(err: std::io::Error, path: &Path) -> Self {
        CliFailure {
            code: EXIT_IO,
            message: format!("{}: {}", path.display(), err),
        }
    }
}

impl From<Error> for CliFailure {
    fn from(err: Error) -> Self {
        let code = match err {
            Error::InvalidParameter { .. }
            | Error::OutOfDomain { .. }
            | Error::TooManyEigenvalues { .. } => EXIT_INVALID_PARAMS,
            Error::QuadratureDidNotConverge { .. } | Error::NormalizationOverflow { .. } => {
                EXIT_VERIFICATION_FAILED
            }
        };
        CliFailure {
            code,
            message: err.to_string(),
        }
    }
}

/// Parses `std::env::args`, runs the selected subcommand, and returns the
/// process exit code. Argument-syntax errors terminate inside the parser
/// with its native exit code (2), which coincides with
/// [`EXIT_INVALID_PARAMS`].
pub fn run() -> i32 {
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(code) => code,
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            failure.code
        }
    }
}

fn dispatch(cli: Cli) -> Result<i32, CliFailure> {
    match cli.command {
        Command::Potential(args) => cmd_potential(args),
        Command::Wavefunction(args) => cmd_wavefunction(args),
        Command::Spectrum(args) => cmd_spectrum(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Figure1(args) => cmd_figure1(args),
    }
}

// ---------------------------------------------------------------------------
// Tables and their two serializations.

/// Metadata value kept typed so JSON can carry real numbers while CSV
/// echoes them in the same 17-digit format as the data rows.
#[derive(Debug, Clone)]
enum MetaValue {
    Float(f64),
    Int(u64),
    Text(String),
}

impl MetaValue {
    fn render_csv(&self) -> String {
        match self {
            MetaValue::Float(v) => fmt_float(*v),
            MetaValue::Int(v) => v.to_string(),
            MetaValue::Text(v) => v.clone(),
        }
    }

    fn to_json(&self) -> Value {
        match self {
            MetaValue::Float(v) => Value::from(*v),
            MetaValue::Int(v) => Value::from(*v),
            MetaValue::Text(v) => Value::from(v.clone()),
        }
    }
}

struct Table {
    metadata: Vec<(String, MetaValue)>,
    columns: Vec<&'static str>,
    rows: Vec<Vec<f64>>,
}

/// JSON shape of a tabulated result.
#[derive(Serialize, Deserialize)]
struct TableDoc {
    metadata: Map<String, Value>,
    columns: Vec<String>,
    rows: Vec<Vec<f64>>,
}

fn fmt_float(v: f64) -> String {
    format!("{v:.16e}")
}

impl Table {
    fn render(&self, format: Format) -> String {
        match format {
            Format::Csv => self.render_csv(),
            Format::Json => self.render_json(),
        }
    }

    fn render_csv(&self) -> String {
        let mut out = String::new();
        for (key, value) in &self.metadata {
            let _ = writeln!(out, "# {key} = {}", value.render_csv());
        }
        let _ = writeln!(out, "{}", self.columns.join(","));
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(|v| fmt_float(*v)).collect();
            let _ = writeln!(out, "{}", cells.join(","));
        }
        out
    }

    fn render_json(&self) -> String {
        let mut metadata = Map::new();
        for (key, value) in &self.metadata {
            metadata.insert(key.clone(), value.to_json());
        }
        let doc = TableDoc {
            metadata,
            columns: self.columns.iter().map(|c| c.to_string()).collect(),
            rows: self.rows.clone(),
        };
        let mut text = serde_json::to_string_pretty(&doc).expect("tables always serialize");
        text.push('\n');
        text
    }
}

fn model_metadata(command: &str, model: &SemiconfinedModel) -> Vec<(String, MetaValue)> {
    vec![
        ("command".into(), MetaValue::Text(command.into())),
        ("omega".into(), MetaValue::Float(model.omega())),
        ("a".into(), MetaValue::Float(model.a())),
        ("alpha".into(), MetaValue::Float(model.alpha())),
        ("m".into(), MetaValue::Float(model.m())),
    ]
}

fn emit(text: &str, out: &Option<PathBuf>) -> Result<(), CliFailure> {
    match out {
        None => {
            print!("{text}");
            Ok(())
        }
        Some(path) => write_atomic(path, text).map_err(|e| CliFailure::io(e, path)),
    }
}

/// Writes through a sibling temp file and renames it into place, so a
/// crash mid-write never leaves a truncated file behind.
fn write_atomic(path: &Path, contents: &str) -> std::io::Result<()> {
    let file_name = path
        .file_name()
        .ok_or_else(|| std::io::Error::other("output path has no file name"))?;
    let mut tmp_name = file_name.to_owned();
    tmp_name.push(".tmp");
    let tmp = path.with_file_name(tmp_name);
    fs::write(&tmp, contents)?;
    fs::rename(&tmp, path)
}

// ---------------------------------------------------------------------------
// Sampling.

/// Wall-clustered sample of `(x_lo, x_max]`: uniform in the stretched
/// coordinate `v(x) = ∫√M dx`, mapped back to `x`. Near the wall the mass
/// blows up, so uniform-in-v points bunch where the potential varies
/// fastest. The first sample is pinned to `x_lo` and the last to `x_max`
/// exactly.
fn wall_clustered_sample(
    model: &SemiconfinedModel,
    x_lo: f64,
    x_max: f64,
    count: usize,
) -> Result<Vec<f64>, Error> {
    if count < 2 {
        return Err(Error::invalid(
            "grid_points",
            count as f64,
            "at least 2 sample points",
        ));
    }
    if x_max <= x_lo {
        return Err(Error::invalid("x_max", x_max, "x_max > x_lo of the window"));
    }
    let a = model.a();
    let s = 2.0 - model.m();
    let profile = pct::MassProfile::new(a, model.m())?;
    let v_lo = pct::velocity_integral(&profile, x_lo)?;
    let v_hi = pct::velocity_integral(&profile, x_max)?;
    let x_of_v = |v: f64| a * ((s * v / (2.0 * a)).powf(2.0 / s) - 1.0);
    let mut xs = Vec::with_capacity(count);
    for i in 0..count {
        let x = if i == 0 {
            x_lo
        } else if i == count - 1 {
            x_max
        } else {
            let v = v_lo + (v_hi - v_lo) * i as f64 / (count - 1) as f64;
            x_of_v(v)
        };
        xs.push(x);
    }
    Ok(xs)
}

/// Smallest sampled coordinate past which the state's amplitude underflows
/// to exactly `0.0`, found by doubling the distance from the wall. Two
/// probes guard against stopping on a node: underflow is an entire tail,
/// a node is a point.
fn underflow_edge(model: &SemiconfinedModel, n: usize) -> f64 {
    let a = model.a();
    let mut offset = 2.0 * a;
    for _ in 0..200 {
        let x = -a + offset;
        if model.wavefunction(n, x) == 0.0 && model.wavefunction(n, -a + 1.5 * offset) == 0.0 {
            return x;
        }
        offset *= 2.0;
    }
    -a + offset
}

/// Rightmost scan point past which the state's amplitude stays below
/// 1e-13 of its peak. Between here and the underflow edge the density
/// contributes less than ~1e-25 to the norm, so the table can skip the
/// dead tail without the skipped panel showing up in any reconstruction.
/// Returns `x_zero` itself (no cut) when the scan resolves no amplitude,
/// which keeps exotic parameter scales merely coarse instead of wrong.
fn amplitude_tail(model: &SemiconfinedModel, n: usize, x_zero: f64) -> f64 {
    const SCAN: usize = 2048;
    let a = model.a();
    let span = x_zero + a;
    let sample = |i: usize| -a + span * i as f64 / SCAN as f64;
    let amps: Vec<f64> = (1..=SCAN)
        .map(|i| model.wavefunction(n, sample(i)).abs())
        .collect();
    let peak = amps.iter().cloned().fold(0.0f64, f64::max);
    if peak == 0.0 {
        return x_zero;
    }
    let threshold = 1e-13 * peak;
    match (1..=SCAN).rev().find(|&i| amps[i - 1] >= threshold) {
        Some(i) if i < SCAN => sample(i + 1),
        _ => x_zero,
    }
}

// ---------------------------------------------------------------------------
// Subcommands.

fn cmd_potential(args: PotentialArgs) -> Result<i32, CliFailure> {
    let model = args.model.build()?;
    let x_lo = -model.a() + 1e-3;
    let xs = wall_clustered_sample(&model, x_lo, args.x_max, args.grid_points)?;
    let mut rows = Vec::with_capacity(xs.len());
    for x in xs {
        rows.push(vec![x, model.potential(x)?]);
    }
    let mut metadata = model_metadata("potential", &model);
    metadata.push(("x_lo".into(), MetaValue::Float(x_lo)));
    metadata.push(("x_max".into(), MetaValue::Float(args.x_max)));
    metadata.push(("rows".into(), MetaValue::Int(rows.len() as u64)));
    let table = Table {
        metadata,
        columns: vec!["x", "potential"],
        rows,
    };
    emit(&table.render(args.format), &args.out)?;
    Ok(0)
}

fn cmd_wavefunction(args: WavefunctionArgs) -> Result<i32, CliFailure> {
    let model = args.model.build()?;
    if args.n > args.n_max {
        return Err(Error::invalid("n", args.n as f64, "n <= n_max").into());
    }
    if args.grid_points < 2 {
        return Err(Error::invalid(
            "grid_points",
            args.grid_points as f64,
            "at least 2 sample points",
        )
        .into());
    }
    let a = model.a();
    let x_zero = underflow_edge(&model, args.n);
    let x_tail = amplitude_tail(&model, args.n, x_zero);
    let count = args.grid_points;
    let mut rows = Vec::with_capacity(count);
    if x_tail < x_zero {
        // Uniform from the wall (where ψ = 0 by definition) to the point
        // where the amplitude has died, then one closing row at the
        // underflow edge (where ψ is 0 again, this time in f64). The
        // first and last rows are exact zeros, and the rows in between
        // are spent where the density actually lives, so a trapezoid
        // over the table reconstructs the unit norm to better than 1e-3.
        for i in 0..count - 1 {
            let x = -a + (x_tail + a) * i as f64 / (count - 2).max(1) as f64;
            rows.push(vec![x, model.wavefunction(args.n, x)]);
        }
        rows.push(vec![x_zero, model.wavefunction(args.n, x_zero)]);
    } else {
        // The amplitude scan saw nothing (state narrower than the scan
        // resolution); keep the plain uniform table.
        for i in 0..count {
            let x = -a + (x_zero + a) * i as f64 / (count - 1) as f64;
            rows.push(vec![x, model.wavefunction(args.n, x)]);
        }
    }
    let mut metadata = model_metadata("wavefunction", &model);
    metadata.push(("n".into(), MetaValue::Int(args.n as u64)));
    metadata.push(("n_max".into(), MetaValue::Int(args.n_max as u64)));
    metadata.push(("x_zero".into(), MetaValue::Float(x_zero)));
    metadata.push(("rows".into(), MetaValue::Int(rows.len() as u64)));
    let table = Table {
        metadata,
        columns: vec!["x", "psi"],
        rows,
    };
    emit(&table.render(args.format), &args.out)?;
    Ok(0)
}

fn cmd_spectrum(args: SpectrumArgs) -> Result<i32, CliFailure> {
    let model = args.model.build()?;
    let k = args.n_max + 1;
    let grid = verify::default_grid(&model, args.grid_points)?;
    let check = verify::spectrum_check(&model, &grid, k)?;
    let rows: Vec<Vec<f64>> = (0..k)
        .map(|n| {
            vec![
                n as f64,
                check.analytic[n],
                check.numeric[n],
                check.rel_errors[n],
            ]
        })
        .collect();
    let mut metadata = model_metadata("spectrum", &model);
    metadata.push(("grid_points".into(), MetaValue::Int(grid.n_points() as u64)));
    metadata.push(("x_lo".into(), MetaValue::Float(grid.x_lo())));
    metadata.push(("x_hi".into(), MetaValue::Float(grid.x_hi())));
    metadata.push(("tolerance".into(), MetaValue::Float(check.tolerance)));
    let table = Table {
        metadata,
        columns: vec!["n", "energy_analytic", "energy_numeric", "rel_error"],
        rows,
    };
    emit(&table.render(args.format), &args.out)?;
    Ok(0)
}

fn cmd_verify(args: VerifyArgs) -> Result<i32, CliFailure> {
    let model = args.model.build()?;
    let options = ReportOptions {
        n_points: args.grid_points,
        k: args.n_max + 1,
        ..ReportOptions::default()
    };
    let report = verify::full_report(&model, &options)?;
    let text = match args.format {
        Format::Json => {
            let mut text = serde_json::to_string_pretty(&report).expect("reports always serialize");
            text.push('\n');
            text
        }
        Format::Csv => render_report_csv(&report),
    };
    emit(&text, &args.out)?;
    eprintln!(
        "verification {}",
        if report.passed { "passed" } else { "FAILED" }
    );
    Ok(if report.passed {
        0
    } else {
        EXIT_VERIFICATION_FAILED
    })
}

/// CSV rendering of a verification report: metadata echo, then one row
/// per check with its value, the threshold it was held to, the direction
/// of the comparison, and the verdict.
fn render_report_csv(report: &verify::VerificationReport) -> String {
    let mut out = String::new();
    let meta = [
        ("command".to_string(), MetaValue::Text("verify".into())),
        ("omega".to_string(), MetaValue::Float(report.model.omega)),
        ("a".to_string(), MetaValue::Float(report.model.a)),
        ("alpha".to_string(), MetaValue::Float(report.model.alpha)),
        ("m".to_string(), MetaValue::Float(report.model.m)),
        ("omega_bar".to_string(), MetaValue::Float(report.omega_bar)),
        ("grid_x_lo".to_string(), MetaValue::Float(report.grid.x_lo)),
        ("grid_x_hi".to_string(), MetaValue::Float(report.grid.x_hi)),
        (
            "grid_points".to_string(),
            MetaValue::Int(report.grid.n_points as u64),
        ),
        ("x_min".to_string(), MetaValue::Float(report.minimum.x_min)),
        ("v_min".to_string(), MetaValue::Float(report.minimum.v_min)),
        (
            "passed".to_string(),
            MetaValue::Text(report.passed.to_string()),
        ),
    ];
    for (key, value) in &meta {
        let _ = writeln!(out, "# {key} = {}", value.render_csv());
    }
    let _ = writeln!(out, "check,value,threshold,direction,passed");
    for check in &report.checks {
        let direction = match check.direction {
            verify::Direction::AtMost => "at_most",
            verify::Direction::AtLeast => "at_least",
        };
        let _ = writeln!(
            out,
            "{},{},{},{},{}",
            check.name,
            fmt_float(check.value),
            fmt_float(check.threshold),
            direction,
            check.passed
        );
    }
    out
}

/// Manifest accompanying the exported figure curves.
#[derive(Debug, Serialize, Deserialize)]
pub struct FigureManifest {
    pub omega: f64,
    pub a: f64,
    pub alpha: f64,
    pub x_lo: f64,
    pub x_max: f64,
    pub samples: usize,
    pub curves: Vec<FigureCurve>,
}

/// One exported curve and its closed-form minimum.
#[derive(Debug, Serialize, Deserialize)]
pub struct FigureCurve {
    pub m: f64,
    pub file: String,
    pub x_min: f64,
    pub v_min: f64,
}

fn cmd_figure1(args: Figure1Args) -> Result<i32, CliFailure> {
    const OMEGA: f64 = 1.0;
    const A: f64 = 2.0;
    const ALPHA: f64 = 4.0;
    const X_MAX: f64 = 10.0;
    const SAMPLES: usize = 500;

    fs::create_dir_all(&args.out_dir).map_err(|e| CliFailure::io(e, &args.out_dir))?;

    let mut curves = Vec::new();
    for (label, m) in [("0.5", 0.5), ("1", 1.0), ("1.5", 1.5)] {
        let model = SemiconfinedModel::new(OMEGA, A, ALPHA, m)?;
        let x_lo = -A + 1e-3;
        let xs = wall_clustered_sample(&model, x_lo, X_MAX, SAMPLES)?;
        let mut rows = Vec::with_capacity(xs.len());
        for x in xs {
            rows.push(vec![x, model.potential(x)?]);
        }
        let mut metadata = model_metadata("figure1", &model);
        metadata.push(("x_lo".into(), MetaValue::Float(x_lo)));
        metadata.push(("x_max".into(), MetaValue::Float(X_MAX)));
        metadata.push(("rows".into(), MetaValue::Int(rows.len() as u64)));
        let table = Table {
            metadata,
            columns: vec!["x", "potential"],
            rows,
        };
        let file = format!("potential_m{label}.csv");
        let path = args.out_dir.join(&file);
        write_atomic(&path, &table.render_csv()).map_err(|e| CliFailure::io(e, &path))?;

        let minimum = model.potential_minimum();
        curves.push(FigureCurve {
            m,
            file,
            x_min: minimum.x_min,
            v_min: minimum.v_min,
        });
    }

    let manifest = FigureManifest {
        omega: OMEGA,
        a: A,
        alpha: ALPHA,
        x_lo: -A + 1e-3,
        x_max: X_MAX,
        samples: SAMPLES,
        curves,
    };
    let mut text = serde_json::to_string_pretty(&manifest).expect("manifest always serializes");
    text.push('\n');
    let path = args.out_dir.join("manifest.json");
    write_atomic(&path, &text).map_err(|e| CliFailure::io(e, &path))?;
    Ok(0)
}
