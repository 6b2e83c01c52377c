use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hodelta::exact::{CouplingStrength, ExactSolver};
use hodelta::excited::{default_alpha_grid, default_z_grid, scan_excited_surface};
use hodelta::oracle::{fd_ground_epsilon, GridSpec};
use hodelta::report::{self, comparison_table, CsvTable, FigureId, FigureParams};
use hodelta::specfn::GammaBackend;
use hodelta::variational::{variational_ground, Family};

mod output;

use output::{Format, Output};

/// Harmonic oscillator with a central delta potential: exact levels,
/// variational estimates, tables and figure data.
#[derive(Parser)]
#[command(name = "hodelta", version)]
struct Cli {
    #[command(flatten)]
    global: GlobalOpts,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct GlobalOpts {
    /// Solver tolerance (bracket width for bisection).
    #[arg(long, global = true, default_value_t = 1e-9, value_parser = positive_real)]
    tol: f64,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write results into this directory instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Gamma function implementation used by the exact solver.
    #[arg(long, global = true, value_enum, default_value_t = BackendArg::Highprec)]
    gamma_backend: BackendArg,
    /// Print numbers with full precision instead of fixed decimals.
    #[arg(long, global = true)]
    full_precision: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum BackendArg {
    #[value(name = "appendixB", alias = "appendix-b")]
    AppendixB,
    Highprec,
}

impl From<BackendArg> for GammaBackend {
    fn from(b: BackendArg) -> Self {
        match b {
            BackendArg::AppendixB => GammaBackend::AppendixB,
            BackendArg::Highprec => GammaBackend::HighPrecision,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Attractive,
    Repulsive,
}

#[derive(Subcommand)]
enum Command {
    /// Exact even-parity level from the transcendental condition.
    Exact {
        #[arg(long, allow_negative_numbers = true)]
        g: f64,
        /// Even level index; 0 is the ground state.
        #[arg(long, default_value_t = 0)]
        level: u32,
    },
    /// Variational ground state; the family follows the sign of g unless overridden.
    Variational {
        #[arg(long, allow_negative_numbers = true)]
        g: f64,
        #[arg(long, value_enum)]
        family: Option<FamilyArg>,
    },
    /// Comparison rows over an evenly spaced range of g.
    Sweep {
        #[arg(long, allow_negative_numbers = true)]
        g_min: f64,
        #[arg(long, allow_negative_numbers = true)]
        g_max: f64,
        #[arg(long, value_parser = positive_real)]
        step: f64,
    },
    /// Iteration snapshots (1) or the summary table (2).
    Table {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=2))]
        which: u8,
    },
    /// Data behind one figure, by name or as fig1..fig8.
    Figure {
        #[arg(long)]
        id: String,
        /// Comma-separated couplings replacing the default sample set.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        g: Option<Vec<f64>>,
    },
    /// First excited state energy surface over (alpha, Z).
    Excited {
        /// `lo:hi:step` or a comma-separated list.
        #[arg(long, allow_hyphen_values = true)]
        alpha_grid: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        z_grid: Option<String>,
    },
    /// Finite-difference ground state compared with the exact level.
    Oracle {
        #[arg(long, allow_negative_numbers = true)]
        g: f64,
        /// Grid points (odd).
        #[arg(long, default_value_t = 4801)]
        n: usize,
        #[arg(long, default_value_t = 12.0)]
        half_width: f64,
    },
}

fn positive_real(s: &str) -> Result<f64, String> {
    let v: f64 = s.parse().map_err(|e| format!("{e}"))?;
    if v > 0.0 && v.is_finite() {
        Ok(v)
    } else {
        Err(format!("expected a positive number, got {s}"))
    }
}

/// Failure inside a solver or emitter; exits with status 1.
#[derive(Debug)]
struct Failure(String);

impl From<hodelta::Error> for Failure {
    fn from(e: hodelta::Error) -> Self {
        Failure(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure(e.to_string())
    }
}

/// Inclusive grid from `lo:hi:step` or a comma list.
fn parse_grid(text: &str) -> Result<Vec<f64>, Failure> {
    let bad = |m: &str| Failure(format!("bad grid `{text}`: {m}"));
    if text.contains(':') {
        let parts: Vec<f64> = text
            .split(':')
            .map(|p| p.trim().parse::<f64>())
            .collect::<Result<_, _>>()
            .map_err(|e| bad(&e.to_string()))?;
        let [lo, hi, step] = parts[..] else {
            return Err(bad("expected lo:hi:step"));
        };
        evenly_spaced(lo, hi, step).map_err(|m| bad(&m))
    } else {
        text.split(',')
            .map(|p| p.trim().parse::<f64>())
            .collect::<Result<_, _>>()
            .map_err(|e| bad(&e.to_string()))
    }
}

fn evenly_spaced(lo: f64, hi: f64, step: f64) -> Result<Vec<f64>, String> {
    if !(step > 0.0 && lo.is_finite() && hi.is_finite() && hi >= lo) {
        return Err(format!(
            "need finite lo <= hi and step > 0 (got {lo}, {hi}, {step})"
        ));
    }
    let n = ((hi - lo) / step + 1e-9).floor();
    if n > 1e6 {
        return Err(format!("{n} steps is too many"));
    }
    Ok((0..=n as usize).map(|k| lo + step * k as f64).collect())
}

fn run(cli: Cli) -> Result<Vec<Output>, Failure> {
    let opts = &cli.global;
    let solver = ExactSolver::new(opts.tol, opts.gamma_backend.into())?;
    let outputs = match cli.command {
        Command::Exact { g, level } => {
            let e = solver.solve_even_level(CouplingStrength::new(g)?, level)?;
            let mut t = CsvTable::new(["g", "level", "nu", "epsilon"]);
            t.push_values(&[g, level as f64, e.nu, e.epsilon]);
            vec![Output::record("exact", t).with_integer_columns(&["level"])]
        }
        Command::Variational { g, family } => {
            let family = family.map(|f| match f {
                FamilyArg::Attractive => Family::Attractive,
                FamilyArg::Repulsive => Family::Repulsive,
            });
            let r = variational_ground(CouplingStrength::new(g)?, family, opts.tol)?;
            let iterations = r.trace.as_ref().map(|t| t.iterations.len() as f64);
            let mut t = CsvTable::new(["g", "alpha_min", "nu", "epsilon", "iterations"]);
            t.push(vec![
                Some(g),
                Some(r.params.alpha),
                Some(r.energy.nu),
                Some(r.energy.epsilon),
                iterations,
            ]);
            let label = match r.family {
                Family::Attractive => "attractive",
                Family::Repulsive => "repulsive",
            };
            vec![Output::record("variational", t)
                .with_integer_columns(&["iterations"])
                .with_label("family", label)]
        }
        Command::Sweep { g_min, g_max, step } => {
            let gs = evenly_spaced(g_min, g_max, step).map_err(Failure)?;
            let rows = report::build_summary_table(&gs, &solver, opts.tol)?;
            vec![Output::table("sweep", comparison_table(&rows))]
        }
        Command::Table { which: 1 } => vec![Output::table("table1", report::table1()?)],
        Command::Table { .. } => vec![Output::table("table2", report::table2(&solver, opts.tol)?)],
        Command::Figure { id, g } => {
            let id: FigureId = id.parse()?;
            let params = FigureParams {
                g_values: g,
                solver,
                tol: opts.tol,
            };
            let stem = format!("fig{}", id.number());
            vec![Output::table(&stem, report::figure_data(id, &params)?)]
        }
        Command::Excited { alpha_grid, z_grid } => {
            let alphas = alpha_grid
                .as_deref()
                .map(parse_grid)
                .transpose()?
                .unwrap_or_else(default_alpha_grid);
            let zs = z_grid
                .as_deref()
                .map(parse_grid)
                .transpose()?
                .unwrap_or_else(default_z_grid);
            let surface = scan_excited_surface(&alphas, &zs)?;
            let mut t = CsvTable::new(["alpha", "z", "epsilon"]);
            for p in surface.points() {
                t.push_values(&[p.alpha, p.z, p.epsilon]);
            }
            let best = surface.argmin();
            let note = format!(
                "minimum at alpha = {}, z = {}, epsilon = {}",
                report::format_fixed(best.alpha, 6),
                report::format_fixed(best.z, 6),
                report::format_fixed(best.epsilon, 6)
            );
            vec![Output::table("excited", t).with_note(note)]
        }
        Command::Oracle { g, n, half_width } => {
            let coupling = CouplingStrength::new(g)?;
            let grid = GridSpec::new(half_width, n)?;
            let fd = fd_ground_epsilon(coupling, &grid)?;
            let exact = solver.solve_ground(coupling)?;
            let mut t = CsvTable::new([
                "g",
                "points",
                "half_width",
                "spacing",
                "epsilon_fd",
                "epsilon_exact",
                "difference",
                "boundary_ratio",
            ]);
            t.push_values(&[
                g,
                n as f64,
                half_width,
                grid.spacing(),
                fd.epsilon,
                exact.epsilon,
                fd.epsilon - exact.epsilon,
                fd.boundary_ratio,
            ]);
            let mut out = Output::record("oracle", t)
                .with_integer_columns(&["points"])
                .with_scientific_columns(&["boundary_ratio", "difference"]);
            if let Some(w) = fd.warning {
                out = out.with_warning(w);
            }
            vec![out]
        }
    };
    Ok(outputs)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = cli.global.format;
    let full = cli.global.full_precision;
    let out_dir = cli.global.out.clone();
    let result = run(cli).and_then(|outputs| {
        for o in &outputs {
            o.emit(format, full, out_dir.as_deref())?;
        }
        Ok(())
    });
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
