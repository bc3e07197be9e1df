//! Command-line front end.
//!
//! Exit codes: `0` success, `1` a check or solve failed, `2` usage or I/O error.

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

use crate::bessel::bessel_half;
use crate::coeffs::{build_coeffs, Family, CSV_HEADER};
use crate::complex::ComplexValue;
use crate::helmholtz::{solve_with, write_reports, RayRule, SolveReport, SolverConfig};
use crate::transforms::transform;
use crate::verify::run_verification;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "orthofourier",
    version,
    about = "Finite Fourier transforms of orthogonal polynomials"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Write the exact coefficient table of one transform as CSV.
    Coeffs {
        #[arg(long)]
        family: Family,
        #[arg(long)]
        m: usize,
        /// Output file (stdout when omitted).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Evaluate a transform at a complex point; prints the value and the path taken.
    Eval {
        #[arg(long)]
        family: Family,
        #[arg(long)]
        m: usize,
        /// Complex literal such as `1.5-2i`.
        #[arg(long, allow_hyphen_values = true)]
        lambda: ComplexValue,
    },
    /// Evaluate J_{m+1/2}(λ).
    Bessel {
        #[arg(long)]
        m: usize,
        #[arg(long, allow_hyphen_values = true)]
        lambda: ComplexValue,
    },
    /// Run the invariant sweep for degrees 0..=max-m.
    Verify {
        #[arg(long, default_value_t = 20)]
        max_m: usize,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
    },
    /// Solve the Helmholtz problem once and write a report row.
    Solve {
        #[arg(long)]
        basis: usize,
        #[arg(long)]
        points: usize,
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        rays: RayArgs,
    },
    /// Sweep basis sizes and collocation factors (M = round(factor · N)).
    Study {
        #[arg(long, value_delimiter = ',', required = true)]
        basis: Vec<usize>,
        #[arg(long, value_delimiter = ',', default_value = "0.5,1,1.5,2")]
        factors: Vec<f64>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        rays: RayArgs,
    },
}

/// Overrides of the collocation ray rule; unset fields keep the per-basis default.
#[derive(Debug, Args)]
struct RayArgs {
    /// Smallest collocation modulus.
    #[arg(long)]
    ray_min: Option<f64>,
    /// Upper end of the modulus range (default max(5, 2N)).
    #[arg(long)]
    ray_max: Option<f64>,
    /// Ray angles in radians, comma separated.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    ray_angles: Option<Vec<f64>>,
}

impl RayArgs {
    fn rule(&self, basis: usize) -> Result<RayRule, String> {
        let mut rule = RayRule::for_basis(basis);
        if let Some(v) = self.ray_min {
            rule.min_modulus = v;
        }
        if let Some(v) = self.ray_max {
            rule.max_modulus = v;
        }
        if let Some(a) = &self.ray_angles {
            rule.angles = a.clone();
        }
        if rule.angles.is_empty() || rule.angles.iter().any(|a| !a.is_finite()) {
            return Err("--ray-angles needs at least one finite angle".into());
        }
        if !(rule.min_modulus > 0.0 && rule.max_modulus > rule.min_modulus && rule.max_modulus.is_finite()) {
            return Err(format!(
                "ray moduli must satisfy 0 < min < max, got [{}, {})",
                rule.min_modulus, rule.max_modulus
            ));
        }
        Ok(rule)
    }
}

/// Basis sizes and collocation factors of a `study` run.
#[derive(Clone, Debug)]
pub struct StudyConfig {
    pub basis: Vec<usize>,
    pub factors: Vec<f64>,
}

impl StudyConfig {
    /// `(N, M)` pairs in sweep order.
    pub fn pairs(&self) -> Result<Vec<(usize, usize)>, String> {
        let mut pairs = Vec::new();
        for &n in &self.basis {
            if n == 0 {
                return Err("basis sizes must be at least 1".into());
            }
            for &f in &self.factors {
                if !(f > 0.0 && f.is_finite()) {
                    return Err(format!("factor {f} must be positive"));
                }
                let m = (f * n as f64).round() as usize;
                if m == 0 {
                    return Err(format!("factor {f} gives no collocation points for N={n}"));
                }
                pairs.push((n, m));
            }
        }
        Ok(pairs)
    }
}

/// Runs the command line against the process's stdout and stderr.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = io::stdout();
    let stderr = io::stderr();
    run_with(args, &mut stdout.lock(), &mut stderr.lock())
}

/// Runs the command line with injected output streams.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    match dispatch(cli.command, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

/// Usage and I/O problems come back as `Err`; check and solve failures as `Ok(1)`.
fn dispatch(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, String> {
    match command {
        Command::Coeffs { family, m, out: path } => {
            let table = build_coeffs(family, m);
            with_output(path.as_deref(), out, |w| {
                writeln!(w, "{CSV_HEADER}")?;
                table.write_csv_rows(w)
            })?;
            Ok(EXIT_OK)
        }
        Command::Eval { family, m, lambda } => match transform(family, m, lambda.0) {
            Ok(r) => {
                writeln!(out, "{}\t{}", ComplexValue(r.value), r.path).map_err(io_message)?;
                Ok(EXIT_OK)
            }
            Err(e) => {
                writeln!(err, "error: {e}").map_err(io_message)?;
                Ok(EXIT_FAILURE)
            }
        },
        Command::Bessel { m, lambda } => match bessel_half(m, lambda.0) {
            Ok(v) => {
                writeln!(out, "{}", ComplexValue(v)).map_err(io_message)?;
                Ok(EXIT_OK)
            }
            Err(e) => {
                writeln!(err, "error: {e}").map_err(io_message)?;
                Ok(EXIT_FAILURE)
            }
        },
        Command::Verify { max_m, tol } => {
            if !(tol > 0.0 && tol.is_finite()) {
                return Err(format!("--tol must be positive, got {tol}"));
            }
            let report = run_verification(max_m, tol);
            for check in &report.checks {
                let status = if check.passed() { "ok  " } else { "FAIL" };
                writeln!(
                    out,
                    "{status} {:<36} cases={:<5} worst={:.3e}",
                    check.name, check.evaluated, check.worst
                )
                .map_err(io_message)?;
                for failure in &check.failures {
                    writeln!(err, "  {}: {failure}", check.name).map_err(io_message)?;
                }
            }
            Ok(if report.passed() { EXIT_OK } else { EXIT_FAILURE })
        }
        Command::Solve {
            basis,
            points,
            out: path,
            rays,
        } => {
            let rule = rays.rule(basis)?;
            let (reports, ok) = run_solves(&[(basis, points)], |_| rule.clone(), err)?;
            with_output(path.as_deref(), out, |w| write_reports(w, &reports))?;
            Ok(if ok { EXIT_OK } else { EXIT_FAILURE })
        }
        Command::Study {
            basis,
            factors,
            out: path,
            rays,
        } => {
            let pairs = StudyConfig { basis, factors }.pairs()?;
            // Validate overrides once up front so a bad flag is a usage error.
            rays.rule(pairs[0].0)?;
            let (reports, ok) = run_solves(&pairs, |n| rays.rule(n).expect("validated"), err)?;
            with_output(path.as_deref(), out, |w| write_reports(w, &reports))?;
            Ok(if ok { EXIT_OK } else { EXIT_FAILURE })
        }
    }
}

fn run_solves(
    pairs: &[(usize, usize)],
    rule_for: impl Fn(usize) -> RayRule,
    err: &mut dyn Write,
) -> Result<(Vec<SolveReport>, bool), String> {
    let mut reports = Vec::new();
    let mut ok = true;
    for &(n, m) in pairs {
        let config = SolverConfig {
            rays: rule_for(n),
            ..SolverConfig::new(n, m)
        };
        match solve_with(&config) {
            Ok((_, report)) => reports.push(report),
            Err(e) => {
                ok = false;
                writeln!(err, "error: N={n}, M={m}: {e}").map_err(io_message)?;
            }
        }
    }
    Ok((reports, ok))
}

fn with_output(
    path: Option<&Path>,
    stdout: &mut dyn Write,
    body: impl FnOnce(&mut dyn Write) -> io::Result<()>,
) -> Result<(), String> {
    match path {
        Some(p) => {
            let file = File::create(p).map_err(|e| format!("cannot create {}: {e}", p.display()))?;
            let mut w = BufWriter::new(file);
            body(&mut w)
                .and_then(|_| w.flush())
                .map_err(|e| format!("cannot write {}: {e}", p.display()))
        }
        None => body(stdout).map_err(io_message),
    }
}

fn io_message(e: io::Error) -> String {
    format!("write failed: {e}")
}
