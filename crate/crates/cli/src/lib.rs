//! Command-line pipelines for the `fracbessel` binary.
//!
//! Every command reads one TOML equation document, scans for characteristic
//! roots and prints the analysis. `solve`, `eval` and `verify` then write CSV
//! artifacts; nothing is written unless the whole run succeeds (verification
//! failures still write their residual tables so they can be inspected).

use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use thiserror::Error;

use fracbessel::characteristic::{self, classify, find_roots_with};
use fracbessel::series::{self, choose_truncation};
use fracbessel::verifier::{self, VERIFY_TOL};
use fracbessel::{CharacteristicRoot, Diagnosis, EquationSpec, ScanConfig, SeriesSolution};

pub mod input;
pub mod output;

pub use input::parse_input;
use output::Artifact;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error(transparent)]
    Solver(#[from] fracbessel::Error),
    #[error("verification failed: max excess {max_excess:e} exceeds {tol:e}")]
    Verification { max_excess: f64, tol: f64 },
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
}

impl CliError {
    /// 2 input, 3 numerical failure, 4 verification failure.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 2,
            CliError::Solver(e) if e.is_input_error() => 2,
            CliError::Solver(_) | CliError::Io { .. } => 3,
            CliError::Verification { .. } => 4,
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "fracbessel",
    version,
    about = "Series solutions of multi-term fractional Bessel equations"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Print the threshold, uniqueness class, IVP bound and root table.
    Analyze(Options),
    /// Also write coefficient tables for every valid root and branch.
    Solve(Options),
    /// Also write u(x) on a grid for every valid root and branch.
    Eval(Options),
    /// Also write residual tables; exits with 4 if any excess is above 1e-6.
    Verify(Options),
}

#[derive(Debug, Clone, Args)]
pub struct Options {
    /// Equation document (TOML with `terms`, `beta`, `nu2`).
    pub input: PathBuf,
    /// Lower end of the root scan.
    #[arg(long, allow_hyphen_values = true)]
    pub scan_lo: Option<f64>,
    /// Upper end of the root scan; disables automatic extension.
    #[arg(long, allow_hyphen_values = true)]
    pub scan_hi: Option<f64>,
    /// Scan grid step.
    #[arg(long)]
    pub step: Option<f64>,
    /// Fixed truncation order N instead of choosing it from --target.
    #[arg(long)]
    pub order: Option<usize>,
    /// Bound on the truncation tail at x_max.
    #[arg(long, default_value_t = 1e-12)]
    pub target: f64,
    #[arg(long, default_value_t = 0.01)]
    pub x_min: f64,
    #[arg(long, default_value_t = 5.0)]
    pub x_max: f64,
    #[arg(long, default_value_t = 101)]
    pub points: usize,
    /// Interval end for the IVP uniqueness bound.
    #[arg(long, default_value_t = 1.0)]
    pub b: f64,
    /// Output directory (default: current directory; `analyze` writes only when given).
    #[arg(long)]
    pub out: Option<PathBuf>,
}

impl Command {
    pub fn options(&self) -> &Options {
        match self {
            Command::Analyze(o) | Command::Solve(o) | Command::Eval(o) | Command::Verify(o) => o,
        }
    }
}

/// Everything `analyze` reports.
pub struct Analysis {
    pub spec: EquationSpec,
    pub scan: ScanConfig,
    pub roots: Vec<CharacteristicRoot>,
    pub diagnosis: Diagnosis,
}

pub fn scan_config(spec: &EquationSpec, opts: &Options) -> ScanConfig {
    let mut cfg = ScanConfig::default_for(spec);
    if let Some(lo) = opts.scan_lo {
        cfg.lo = lo;
    }
    if let Some(hi) = opts.scan_hi {
        cfg.hi = hi;
        cfg.auto_extend = false;
    }
    if let Some(step) = opts.step {
        cfg.step = step;
    }
    cfg
}

pub fn analyze(spec: EquationSpec, opts: &Options) -> Result<Analysis, CliError> {
    let scan = scan_config(&spec, opts);
    let roots = find_roots_with(&spec, &scan)?;
    let diagnosis = classify(&spec, &roots, opts.b);
    Ok(Analysis {
        spec,
        scan,
        roots,
        diagnosis,
    })
}

fn describe(a: &Analysis) -> Result<String, CliError> {
    let spec = &a.spec;
    let d = &a.diagnosis;
    let mut s = String::new();
    let mut eq = String::new();
    for (i, t) in spec.terms().iter().rev().enumerate() {
        let sign = match (i, t.d < 0.0) {
            (0, false) => "",
            (0, true) => "-",
            (_, false) => " + ",
            (_, true) => " - ",
        };
        write!(eq, "{sign}{} x^{a} D^{a} u", t.d.abs(), a = t.alpha).ok();
    }
    writeln!(eq, " + (x^{} - {}) u = 0", spec.beta(), spec.nu2()).ok();
    s.push_str("equation: ");
    s.push_str(&eq);
    match d.nu2_min {
        Some(m) => writeln!(
            s,
            "nu2_min: {m:.6} (nu2 = {} {})",
            spec.nu2(),
            if d.nu2_satisfied {
                "meets it"
            } else {
                "is below it"
            }
        ),
        None => writeln!(s, "nu2_min: not applicable (integer orders only)"),
    }
    .ok();
    writeln!(s, "class: {}", d.uniqueness_class).ok();
    writeln!(
        s,
        "ivp bound (b = {}): {:.6} (nu2 above bound: {})",
        d.b,
        d.ivp_bound,
        if d.ivp_unique { "yes" } else { "no" }
    )
    .ok();
    let (lo, hi) = characteristic::effective_window(spec, &a.scan)?;
    writeln!(s, "scan: [{lo}, {hi}] step {}", a.scan.step).ok();
    if a.roots.is_empty() {
        writeln!(s, "no roots found").ok();
    } else {
        writeln!(
            s,
            "{:>3}  {:>20}  {:>4}  {:<16} {:>10}  note",
            "#", "gamma", "mult", "status", "F(gamma)"
        )
        .ok();
        for (i, r) in a.roots.iter().enumerate() {
            let f = characteristic::g(spec, r.gamma)? - spec.nu2() + 0.0;
            writeln!(
                s,
                "{:>3}  {:>20.12}  {:>4}  {:<16} {:>10.2e}  {}",
                i + 1,
                r.gamma,
                r.multiplicity,
                r.status.to_string(),
                f,
                r.reject_info.as_deref().unwrap_or("")
            )
            .ok();
        }
    }
    if d.valid_roots == 0 {
        writeln!(s, "no valid roots").ok();
    }
    Ok(s)
}

fn roots_csv(a: &Analysis) -> Result<Artifact, CliError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let csv_err = |e: csv::Error| CliError::Input(e.to_string());
    w.write_record([
        "index",
        "gamma",
        "multiplicity",
        "status",
        "f_value",
        "reason",
    ])
    .map_err(csv_err)?;
    for (i, r) in a.roots.iter().enumerate() {
        let f = characteristic::g(&a.spec, r.gamma)? - a.spec.nu2();
        w.write_record([
            (i + 1).to_string(),
            format!("{:.17e}", r.gamma),
            r.multiplicity.to_string(),
            r.status.to_string(),
            format!("{f:.17e}"),
            r.reject_info.clone().unwrap_or_default(),
        ])
        .map_err(csv_err)?;
    }
    Ok(Artifact::new(
        "roots.csv",
        w.into_inner().map_err(|e| CliError::Input(e.to_string()))?,
    ))
}

/// A built branch with its position in the root table.
pub struct Branch {
    pub root_index: usize,
    pub order: usize,
    pub solution: SeriesSolution,
}

pub fn build_branches(a: &Analysis, opts: &Options) -> Result<Vec<Branch>, CliError> {
    let mut out = Vec::new();
    for (i, root) in a.roots.iter().enumerate().filter(|(_, r)| r.is_valid()) {
        let order = match opts.order {
            Some(n) => n,
            None => choose_truncation(&a.spec, root, opts.x_max, opts.target)?,
        };
        for solution in series::build(&a.spec, root, order)? {
            out.push(Branch {
                root_index: i + 1,
                order,
                solution,
            });
        }
    }
    Ok(out)
}

pub fn grid(opts: &Options) -> Result<Vec<f64>, CliError> {
    if opts.points < 2 {
        return Err(CliError::Input(format!(
            "--points must be at least 2 (got {})",
            opts.points
        )));
    }
    if !(opts.x_min > 0.0) || !(opts.x_max > opts.x_min) || !opts.x_max.is_finite() {
        return Err(CliError::Input(format!(
            "the grid needs 0 < x_min < x_max (got {} and {})",
            opts.x_min, opts.x_max
        )));
    }
    let last = (opts.points - 1) as f64;
    Ok((0..opts.points)
        .map(|i| {
            if i + 1 == opts.points {
                opts.x_max
            } else {
                opts.x_min + (opts.x_max - opts.x_min) * i as f64 / last
            }
        })
        .collect())
}

fn coeff_csv(b: &Branch) -> Result<Artifact, CliError> {
    let mut bytes = Vec::new();
    b.solution.write_csv(&mut bytes)?;
    Ok(Artifact::new(
        format!(
            "coeffs_root{}_branch{}.csv",
            b.root_index, b.solution.branch
        ),
        bytes,
    ))
}

fn values_csv(b: &Branch, xs: &[f64]) -> Result<Artifact, CliError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let csv_err = |e: csv::Error| CliError::Input(e.to_string());
    w.write_record(["x", "u"]).map_err(csv_err)?;
    for &x in xs {
        let u = b.solution.evaluate(x)?;
        if !u.is_finite() {
            return Err(CliError::Solver(fracbessel::Error::Domain {
                function: "series evaluation",
                arg: "x",
                value: x,
            }));
        }
        w.write_record([format!("{x:.17e}"), format!("{u:.17e}")])
            .map_err(csv_err)?;
    }
    Ok(Artifact::new(
        format!("u_root{}_branch{}.csv", b.root_index, b.solution.branch),
        w.into_inner().map_err(|e| CliError::Input(e.to_string()))?,
    ))
}

/// Runs one command, printing the report to `stdout`.
pub fn run<W: Write>(command: &Command, stdout: &mut W) -> Result<(), CliError> {
    let opts = command.options();
    let text = std::fs::read_to_string(&opts.input)
        .map_err(|e| CliError::Input(format!("{}: {e}", opts.input.display())))?;
    let spec = parse_input(&text)?;
    let analysis = analyze(spec, opts)?;
    let io = |source| CliError::Io {
        path: PathBuf::from("<stdout>"),
        source,
    };
    stdout
        .write_all(describe(&analysis)?.as_bytes())
        .map_err(io)?;

    let mut artifacts = vec![roots_csv(&analysis)?];
    if let Command::Analyze(_) = command {
        if let Some(dir) = &opts.out {
            output::commit(dir, &artifacts)?;
        }
        return Ok(());
    }

    let branches = build_branches(&analysis, opts)?;
    let xs = match command {
        Command::Eval(_) | Command::Verify(_) => grid(opts)?,
        _ => Vec::new(),
    };
    let mut worst = 0.0_f64;
    for b in &branches {
        artifacts.push(coeff_csv(b)?);
        let mut line = format!(
            "root {} (gamma = {:.10}) branch {}: N = {}",
            b.root_index, b.solution.gamma, b.solution.branch, b.order
        );
        match command {
            Command::Eval(_) => artifacts.push(values_csv(b, &xs)?),
            Command::Verify(_) => {
                let report = verifier::residual(&analysis.spec, &b.solution, &xs)?;
                let mut bytes = Vec::new();
                report.write_csv(&mut bytes)?;
                artifacts.push(Artifact::new(
                    format!(
                        "residual_root{}_branch{}.csv",
                        b.root_index, b.solution.branch
                    ),
                    bytes,
                ));
                let verdict = if report.passes(VERIFY_TOL) {
                    "pass"
                } else {
                    "FAIL"
                };
                write!(line, ", max excess {:.3e} {verdict}", report.max_excess).ok();
                worst = worst.max(report.max_excess);
            }
            _ => {}
        }
        writeln!(stdout, "{line}").map_err(io)?;
    }
    let dir = opts.out.clone().unwrap_or_else(|| PathBuf::from("."));
    output::commit(&dir, &artifacts)?;
    writeln!(
        stdout,
        "wrote {} files to {}",
        artifacts.len(),
        dir.display()
    )
    .map_err(io)?;
    if worst > VERIFY_TOL || worst.is_nan() {
        return Err(CliError::Verification {
            max_excess: worst,
            tol: VERIFY_TOL,
        });
    }
    Ok(())
}
