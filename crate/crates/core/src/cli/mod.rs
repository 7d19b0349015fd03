//! Command-line front end. [`run`] parses arguments, dispatches a subcommand
//! and returns the process exit status.

mod svg;

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_rational::BigRational;
use rayon::prelude::*;
use serde::{Serialize, Serializer};
use serde_json::{json, Value};

use crate::fit::{fit_ellipse, EllipseSpec};
use crate::poly::{
    cycle_charpoly, cycle_recursion_check, cycle_recursion_literal_check, lemma_fib_sweep,
    path_charpoly,
};
use crate::roots::{solve, ShiftedProblem, SolveConfig};
use crate::seq::{fibonacci, pell};
use crate::verify::{
    conjecture_suite_with, containment_check_with, eq1_monotonicity_check, float_value,
    imaginary_root_check, pell_root_count_check, real_count_conjecture_check, CloudSummary,
    Tolerance, VerificationReport, DEFAULT_CONTAINMENT_TOL,
};
use crate::{Error, Result};

/// Process exit statuses.
pub mod exit {
    pub const SUCCESS: i32 = 0;
    pub const USAGE: i32 = 1;
    pub const COMPUTATION: i32 = 2;
    pub const ASSERTION: i32 = 3;
    /// The root cloud admits no ellipse fit.
    pub const DEGENERATE_GEOMETRY: i32 = 4;
}

#[derive(Debug, Parser, Serialize)]
#[command(
    name = "pathspec",
    version,
    about = "Path-graph characteristic polynomials, shifted roots, ellipse fits and identity checks"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand, Serialize)]
#[serde(tag = "subcommand", rename_all = "lowercase")]
pub enum Command {
    /// Print the characteristic polynomial of a path or cycle graph.
    Poly(PolyArgs),
    /// Solve f_n(λ) = c and print every complex root.
    Roots(RootsArgs),
    /// Fit an axis-aligned ellipse to the roots of f_n(λ) = c.
    Fit(FitArgs),
    /// Run identity, theorem and conjecture checks.
    Verify(VerifyArgs),
    /// Solve and fit over a range of n, writing sweep.csv and sweep.json.
    Sweep(SweepArgs),
}

#[derive(Debug, Clone, Copy, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Graph {
    Path,
    Cycle,
}

#[derive(Debug, Clone, Copy, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum OutFormat {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Lemma,
    Imaginary,
    Realcount,
    Containment,
    Eq1,
    Pell,
    Cycle,
    /// The cycle recursion read literally in the det(A - λI) convention
    CycleLiteral,
    Conjecture,
    All,
}

/// `fib` (meaning `F_{n+1}`) or an explicit integer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Constant {
    Fib,
    Int(BigInt),
}

impl Constant {
    pub fn resolve(&self, n: usize) -> BigInt {
        match self {
            Constant::Fib => fibonacci(n + 1),
            Constant::Int(c) => c.clone(),
        }
    }
}

impl FromStr for Constant {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        if s == "fib" {
            return Ok(Constant::Fib);
        }
        BigInt::from_str(s)
            .map(Constant::Int)
            .map_err(|_| format!("expected `fib` or an integer, got `{s}`"))
    }
}

impl Serialize for Constant {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Constant::Fib => s.serialize_str("fib"),
            Constant::Int(c) => s.serialize_str(&c.to_string()),
        }
    }
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct SolverArgs {
    /// Starting working precision in bits
    #[arg(long, env = "PATHSPEC_PRECISION", default_value_t = 128,
          value_parser = clap::value_parser!(u32).range(53..))]
    pub precision: u32,
    /// Bound on each root's relative residual and inclusion radius
    #[arg(long, default_value_t = 1e-12)]
    pub tol: f64,
}

impl SolverArgs {
    fn config(&self) -> SolveConfig {
        SolveConfig::default()
            .with_start_bits(self.precision)
            .with_tolerance(self.tol)
    }
}

#[derive(Debug, Args, Serialize)]
pub struct PolyArgs {
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub n: u64,
    #[arg(long, value_enum, default_value_t = Graph::Path)]
    pub graph: Graph,
}

#[derive(Debug, Args, Serialize)]
pub struct RootsArgs {
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub n: u64,
    /// `fib` for F_{n+1}, or an integer
    #[arg(long, default_value = "fib", allow_negative_numbers = true)]
    pub c: Constant,
    #[arg(long, value_enum, default_value_t = OutFormat::Csv)]
    pub out: OutFormat,
    #[command(flatten)]
    pub solver: SolverArgs,
}

#[derive(Debug, Args, Serialize)]
pub struct FitArgs {
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub n: u64,
    /// `fib` for F_{n+1}, or an integer
    #[arg(long, default_value = "fib", allow_negative_numbers = true)]
    pub c: Constant,
    #[arg(long, value_enum, default_value_t = OutFormat::Json)]
    pub out: OutFormat,
    /// Also write a plot of the roots and both ellipses
    #[arg(long)]
    pub svg: Option<PathBuf>,
    #[command(flatten)]
    pub solver: SolverArgs,
}

#[derive(Debug, Args, Serialize)]
pub struct VerifyArgs {
    #[arg(long, value_enum)]
    pub suite: Suite,
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    pub n_min: u64,
    #[arg(long, default_value_t = 20, value_parser = clap::value_parser!(u64).range(1..))]
    pub n_max: u64,
    /// Absolute slack for the containment and |Im| bounds
    #[arg(long, default_value_t = DEFAULT_CONTAINMENT_TOL)]
    pub tol: f64,
    /// Starting working precision in bits
    #[arg(long, env = "PATHSPEC_PRECISION", default_value_t = 128,
          value_parser = clap::value_parser!(u32).range(53..))]
    pub precision: u32,
}

#[derive(Debug, Args, Serialize)]
pub struct SweepArgs {
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub n_min: u64,
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub n_max: u64,
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    pub step: u64,
    /// `fib` for F_{n+1}, or an integer
    #[arg(long, default_value = "fib", allow_negative_numbers = true)]
    pub c: Constant,
    #[arg(long, default_value = ".")]
    pub out_dir: PathBuf,
    #[command(flatten)]
    pub solver: SolverArgs,
}

/// Exit status for a failed computation.
pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::InvalidArgument(_) | Error::Parse(_) => exit::USAGE,
        Error::DegenerateGeometry(_) => exit::DEGENERATE_GEOMETRY,
        _ => exit::COMPUTATION,
    }
}

/// Parses `args` (including the program name), runs the subcommand and
/// returns the exit status. Diagnostics go to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                exit::USAGE
            } else {
                let _ = write!(out, "{text}");
                exit::SUCCESS
            };
        }
    };
    match dispatch(&cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> Result<i32> {
    let meta = json!({
        "version": env!("CARGO_PKG_VERSION"),
        "config": serde_json::to_value(&cli.command)?,
    });
    match &cli.command {
        Command::Poly(a) => cmd_poly(a, out),
        Command::Roots(a) => cmd_roots(a, meta, out),
        Command::Fit(a) => cmd_fit(a, meta, out),
        Command::Verify(a) => cmd_verify(a, meta, out),
        Command::Sweep(a) => cmd_sweep(a, meta, out),
    }
}

fn num(x: f64) -> String {
    format!("{x:.16e}")
}

fn emit_json(out: &mut dyn Write, meta: Value, results: Vec<Value>) -> Result<()> {
    let doc = json!({ "meta": meta, "results": results });
    serde_json::to_writer_pretty(&mut *out, &doc)?;
    writeln!(out)?;
    Ok(())
}

fn to_usize(n: u64) -> Result<usize> {
    usize::try_from(n).map_err(|_| Error::InvalidArgument(format!("n = {n} is too large")))
}

fn cmd_poly(a: &PolyArgs, out: &mut dyn Write) -> Result<i32> {
    let n = to_usize(a.n)?;
    let p = match a.graph {
        Graph::Path => path_charpoly(n)?,
        Graph::Cycle => cycle_charpoly(n)?,
    };
    writeln!(out, "{}", p.to_coeff_string())?;
    writeln!(out, "{}", p.pretty("λ"))?;
    Ok(exit::SUCCESS)
}

fn cmd_roots(a: &RootsArgs, meta: Value, out: &mut dyn Write) -> Result<i32> {
    let n = to_usize(a.n)?;
    let problem = ShiftedProblem::new(n, a.c.resolve(n))?;
    let roots = solve(&problem, &a.solver.config())?;
    let c = problem.c().to_string();
    let rows = roots.to_points().into_iter().zip(roots.residuals());
    match a.out {
        OutFormat::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            w.write_record(["n", "c", "re", "im", "residual"])?;
            for ((re, im), res) in rows {
                w.write_record([n.to_string(), c.clone(), num(re), num(im), num(*res)])?;
            }
            w.flush()?;
        }
        OutFormat::Json => {
            let results = rows
                .zip(roots.error_radii())
                .map(|(((re, im), res), radius)| {
                    json!({
                        "n": n,
                        "c": c,
                        "re": float_value(re),
                        "im": float_value(im),
                        "residual": float_value(*res),
                        "error_radius": float_value(*radius),
                    })
                })
                .collect();
            emit_json(out, meta, results)?;
        }
    }
    Ok(exit::SUCCESS)
}

fn cmd_fit(a: &FitArgs, meta: Value, out: &mut dyn Write) -> Result<i32> {
    let n = to_usize(a.n)?;
    let problem = ShiftedProblem::new(n, a.c.resolve(n))?;
    let points = solve(&problem, &a.solver.config())?.to_points();
    let fit = fit_ellipse(&points)?;
    let c = problem.c().to_string();
    match a.out {
        OutFormat::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            w.write_record(["n", "c", "a_tilde", "b_tilde", "rmse", "eccentricity"])?;
            w.write_record([
                n.to_string(),
                c.clone(),
                num(fit.a_tilde),
                num(fit.b_tilde),
                num(fit.rmse),
                num(fit.eccentricity),
            ])?;
            w.flush()?;
        }
        OutFormat::Json => {
            let result = json!({
                "n": n,
                "c": c,
                "a_tilde": float_value(fit.a_tilde),
                "b_tilde": float_value(fit.b_tilde),
                "rmse": float_value(fit.rmse),
                "eccentricity": float_value(fit.eccentricity),
                "coeff_a": float_value(fit.coeff_a),
                "coeff_b": float_value(fit.coeff_b),
            });
            emit_json(out, meta, vec![result])?;
        }
    }
    if let Some(path) = &a.svg {
        let title = format!("roots of f_{n}(λ) = {c}");
        fs::write(
            path,
            svg::render(&title, &points, &fit, &EllipseSpec::sqrt5_by_1()),
        )?;
    }
    Ok(exit::SUCCESS)
}

/// Outcome of one suite entry; a computation error becomes a failing report.
fn settle(
    name: &str,
    subject: (&str, Value),
    outcome: Result<VerificationReport>,
    errored: &mut bool,
) -> VerificationReport {
    outcome.unwrap_or_else(|e| {
        *errored = true;
        VerificationReport::new(name, Tolerance::Exact)
            .subject(subject.0, subject.1)
            .witness("error", e.to_string())
            .finish(false)
    })
}

fn cmd_verify(a: &VerifyArgs, meta: Value, out: &mut dyn Write) -> Result<i32> {
    if a.n_min > a.n_max {
        return Err(Error::InvalidArgument(format!(
            "n-min ({}) exceeds n-max ({})",
            a.n_min, a.n_max
        )));
    }
    if !(a.tol >= 0.0 && a.tol.is_finite()) {
        return Err(Error::InvalidArgument(format!(
            "tolerance must be nonnegative, got {}",
            a.tol
        )));
    }
    let (lo, hi) = (to_usize(a.n_min)?, to_usize(a.n_max)?);
    let cfg = SolveConfig::default().with_start_bits(a.precision);
    let suites: &[Suite] = if a.suite == Suite::All {
        &[
            Suite::Lemma,
            Suite::Imaginary,
            Suite::Realcount,
            Suite::Containment,
            Suite::Eq1,
            Suite::Pell,
            Suite::Cycle,
        ]
    } else {
        std::slice::from_ref(&a.suite)
    };

    let mut errored = false;
    let mut reports = Vec::new();
    for &suite in suites {
        reports.extend(run_suite(suite, lo, hi, a.tol, &cfg, &mut errored));
    }
    let failed = reports.iter().any(|r| !r.ok());
    let results = reports
        .iter()
        .map(serde_json::to_value)
        .collect::<std::result::Result<Vec<_>, _>>()?;
    emit_json(out, meta, results)?;
    Ok(if errored {
        exit::COMPUTATION
    } else if failed {
        exit::ASSERTION
    } else {
        exit::SUCCESS
    })
}

fn sample_rationals() -> Vec<BigRational> {
    [(1, 2), (-1, 2), (2, 1), (-2, 1), (3, 2), (-3, 2)]
        .iter()
        .map(|&(p, q)| BigRational::new(BigInt::from(p), BigInt::from(q)))
        .collect()
}

fn eq1_points() -> Vec<BigRational> {
    [
        (0, 1),
        (1, 2),
        (-1, 2),
        (1, 1),
        (-1, 1),
        (3, 2),
        (-3, 2),
        (2, 1),
        (-2, 1),
    ]
    .iter()
    .map(|&(p, q)| BigRational::new(BigInt::from(p), BigInt::from(q)))
    .collect()
}

fn run_suite(
    suite: Suite,
    lo: usize,
    hi: usize,
    tol: f64,
    cfg: &SolveConfig,
    errored: &mut bool,
) -> Vec<VerificationReport> {
    // the k-indexed suites cover every k with lo <= 4k <= hi
    let ks = (lo.div_ceil(4).max(1))..=(hi / 4);
    match suite {
        Suite::Lemma => lemma_fib_sweep(hi).into_iter().skip(lo - 1).collect(),
        Suite::Imaginary => {
            let samples = sample_rationals();
            ks.map(|k| {
                settle(
                    "imaginary_root",
                    ("k", k.into()),
                    imaginary_root_check(k, &samples),
                    errored,
                )
            })
            .collect()
        }
        Suite::Realcount => (lo..=hi)
            .map(|n| {
                settle(
                    "real_count_conjecture",
                    ("n", n.into()),
                    real_count_conjecture_check(n),
                    errored,
                )
            })
            .collect(),
        Suite::Containment => {
            let outcomes: Vec<_> = (lo..=hi)
                .filter(|n| n % 4 == 0)
                .collect::<Vec<_>>()
                .into_par_iter()
                .map(|n| (n, containment_check_with(n, tol, cfg)))
                .collect();
            outcomes
                .into_iter()
                .map(|(n, r)| settle("containment", ("n", n.into()), r, errored))
                .collect()
        }
        Suite::Eq1 => {
            let points = eq1_points();
            ks.flat_map(|k| points.iter().map(move |a| (k, a)))
                .map(|(k, a)| {
                    settle(
                        "eq1_monotonicity",
                        ("k", k.into()),
                        eq1_monotonicity_check(k, a),
                        errored,
                    )
                })
                .collect()
        }
        Suite::Pell => (lo..=hi)
            .flat_map(|n| {
                let p = pell(n + 1);
                let one = BigInt::from(1);
                let constants = [p.clone(), &p + &one, &p * 2];
                constants
                    .into_iter()
                    .flat_map(|c| [-c.clone(), c])
                    .map(move |c| (n, c))
            })
            .map(|(n, c)| {
                settle(
                    "pell_root_count",
                    ("n", n.into()),
                    pell_root_count_check(n, &c),
                    errored,
                )
            })
            .collect(),
        Suite::Cycle => (lo.max(3)..=hi)
            .map(|n| {
                settle(
                    "cycle_recursion",
                    ("n", n.into()),
                    cycle_recursion_check(n),
                    errored,
                )
            })
            .collect(),
        Suite::CycleLiteral => (lo.max(3)..=hi)
            .map(|n| {
                let r = cycle_recursion_literal_check(n);
                settle("cycle_recursion_literal", ("n", n.into()), r, errored)
            })
            .collect(),
        Suite::Conjecture => {
            let reports = conjecture_suite_with(hi, tol, cfg);
            if reports.iter().any(|r| r.witnesses.contains_key("error")) {
                *errored = true;
            }
            reports.into_iter().skip(lo - 1).collect()
        }
        Suite::All => Vec::new(),
    }
}

const SWEEP_HEADER: [&str; 8] = [
    "n",
    "a_tilde",
    "b_tilde",
    "rmse",
    "eccentricity",
    "boundary_residual",
    "max_re",
    "max_im",
];

fn cmd_sweep(a: &SweepArgs, meta: Value, out: &mut dyn Write) -> Result<i32> {
    if a.n_min > a.n_max {
        return Err(Error::InvalidArgument(format!(
            "n-min ({}) exceeds n-max ({})",
            a.n_min, a.n_max
        )));
    }
    let cfg = a.solver.config();
    let ns: Vec<usize> = (to_usize(a.n_min)?..=to_usize(a.n_max)?)
        .step_by(to_usize(a.step)?)
        .collect();
    let summaries: Vec<(usize, Result<CloudSummary>)> = ns
        .into_par_iter()
        .map(|n| {
            let s =
                ShiftedProblem::new(n, a.c.resolve(n)).and_then(|p| CloudSummary::solve(&p, &cfg));
            (n, s)
        })
        .collect();

    fs::create_dir_all(&a.out_dir)?;
    let csv_path = a.out_dir.join("sweep.csv");
    let json_path = a.out_dir.join("sweep.json");
    let mut w = csv::Writer::from_path(&csv_path)?;
    w.write_record(SWEEP_HEADER)?;
    let mut results = Vec::with_capacity(summaries.len());
    let mut errored = false;
    for (n, summary) in &summaries {
        let nan = f64::NAN;
        let (row, record) = match summary {
            Ok(s) => {
                let (at, bt, rmse, ecc) = match &s.fit {
                    Ok(f) => (f.a_tilde, f.b_tilde, f.rmse, f.eccentricity),
                    Err(_) => (nan, nan, nan, nan),
                };
                (
                    [at, bt, rmse, ecc, s.boundary_residual, s.max_re, s.max_im],
                    s.to_json(),
                )
            }
            Err(e) => {
                errored = true;
                ([nan; 7], json!({ "n": n, "error": e.to_string() }))
            }
        };
        let mut fields = vec![n.to_string()];
        fields.extend(row.iter().map(|&x| num(x)));
        w.write_record(&fields)?;
        results.push(record);
    }
    w.flush()?;

    let mut file = fs::File::create(&json_path)?;
    emit_json(&mut file, meta, results)?;
    writeln!(out, "wrote {}", csv_path.display())?;
    writeln!(out, "wrote {}", json_path.display())?;
    Ok(if errored {
        exit::COMPUTATION
    } else {
        exit::SUCCESS
    })
}
