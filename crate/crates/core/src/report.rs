//! Comparison tables and figure data as CSV.

use std::io::Write;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::attractive::{energy_attractive, minimize_attractive_with, WindowSchedule};
use crate::error::{Error, Result};
use crate::exact::{CouplingStrength, ExactSolver};
use crate::excited::{default_alpha_grid, default_z_grid, scan_excited_surface};
use crate::repulsive::energy_repulsive;
use crate::variational::{variational_ground, Family};

/// The sixteen couplings of the summary table.
pub const SUMMARY_COUPLINGS: [f64; 16] = [
    -5.0, -3.0, -2.5, -2.0, -1.5, -1.0, -0.5, 0.1, 0.25, 0.5, 1.0, 1.5, 2.0, 2.5, 3.0, 5.0,
];

/// Fixed-parameter model (`alpha = 1`, `Z = g`) values for the summary couplings.
/// Transcribed, not recomputed.
pub const REFERENCE_NU: [f64; 16] = [
    -12.981750, -4.955630, -3.565851, -2.418161, -1.506601, -0.819484, -0.333176, 0.054944,
    0.131190, 0.241000, 0.404884, 0.516372, 0.595116, 0.652967, 0.696958, 0.800388,
];

/// Alpha windows of the four iteration snapshots for `g = -0.5`.
pub const TABLE1_WINDOWS: [(f64, f64); 4] = [
    (0.10, 0.91),
    (0.855, 0.864),
    (0.86075, 0.86120),
    (0.860_947_50, 0.860_948_67),
];

pub const TABLE1_COUPLING: f64 = -0.5;

pub fn reference_nu(g: f64) -> Option<f64> {
    SUMMARY_COUPLINGS
        .iter()
        .position(|&c| c == g)
        .map(|i| REFERENCE_NU[i])
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ComparisonRow {
    pub g: f64,
    pub alpha_min: f64,
    pub nu_variational: f64,
    pub nu_exact: f64,
    pub nu_reference: Option<f64>,
    /// `nu_variational - nu_exact`
    pub error: f64,
    /// `100 error / |nu_exact|`; absent when `nu_exact = 0`.
    pub rpe_nu: Option<f64>,
    /// `100 error / |eps_exact|`
    pub rpe_eps: f64,
}

impl ComparisonRow {
    pub fn new(g: f64, alpha_min: f64, nu_variational: f64, nu_exact: f64) -> Self {
        let error = nu_variational - nu_exact;
        let eps_exact = nu_exact + 0.5;
        ComparisonRow {
            g,
            alpha_min,
            nu_variational,
            nu_exact,
            nu_reference: reference_nu(g),
            error,
            rpe_nu: (nu_exact != 0.0).then(|| 100.0 * error / nu_exact.abs()),
            rpe_eps: 100.0 * error / eps_exact.abs(),
        }
    }
}

/// One row per coupling; `tol` is the repulsive bisection width.
pub fn build_summary_table(
    g_values: &[f64],
    solver: &ExactSolver,
    tol: f64,
) -> Result<Vec<ComparisonRow>> {
    g_values
        .iter()
        .map(|&gv| {
            let g = CouplingStrength::new(gv)?;
            let exact = solver.solve_ground(g)?;
            let var = variational_ground(g, None, tol)?;
            Ok(ComparisonRow::new(
                gv,
                var.params.alpha,
                var.energy.nu,
                exact.nu,
            ))
        })
        .collect()
}

/// `-g^2/2 - 1/2 + 1/(4 g^2)` for strong attraction.
pub fn asymptote_attractive(g: f64) -> Result<f64> {
    if !(g < 0.0 && g.abs() >= 1e-6 && g.is_finite()) {
        return Err(Error::AsymptoteDomain(g));
    }
    let g2 = g * g;
    Ok(-0.5 * g2 - 0.5 + 0.25 / g2)
}

/// Round to `decimals` places, ties to even.
pub fn round_half_even(x: f64, decimals: u32) -> f64 {
    let scale = 10f64.powi(decimals as i32);
    (x * scale).round_ties_even() / scale
}

/// `x` rounded half-even and printed with exactly `decimals` places.
pub fn format_fixed(x: f64, decimals: u32) -> String {
    let r = round_half_even(x, decimals);
    let s = format!("{r:.*}", decimals as usize);
    // avoid "-0.000000"
    if r == 0.0 {
        s.trim_start_matches('-').to_string()
    } else {
        s
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FigureId {
    MinimaCurves,
    IterationTrace,
    ErrorAttractive,
    AlphaMinVsG,
    EnergyVsAlphaRepulsive,
    ErrorRepulsive,
    NuVsG,
    ExcitedSurface,
}

impl FigureId {
    pub const ALL: [FigureId; 8] = [
        FigureId::MinimaCurves,
        FigureId::IterationTrace,
        FigureId::ErrorAttractive,
        FigureId::AlphaMinVsG,
        FigureId::EnergyVsAlphaRepulsive,
        FigureId::ErrorRepulsive,
        FigureId::NuVsG,
        FigureId::ExcitedSurface,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FigureId::MinimaCurves => "minima_curves",
            FigureId::IterationTrace => "iteration_trace",
            FigureId::ErrorAttractive => "error_attractive",
            FigureId::AlphaMinVsG => "alpha_min_vs_g",
            FigureId::EnergyVsAlphaRepulsive => "energy_vs_alpha_repulsive",
            FigureId::ErrorRepulsive => "error_repulsive",
            FigureId::NuVsG => "nu_vs_g",
            FigureId::ExcitedSurface => "excited_surface",
        }
    }

    /// 1-based position in [`FigureId::ALL`].
    pub fn number(self) -> usize {
        FigureId::ALL.iter().position(|&f| f == self).unwrap() + 1
    }

    pub fn file_name(self) -> String {
        format!("fig{}.csv", self.number())
    }
}

impl FromStr for FigureId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        FigureId::ALL
            .into_iter()
            .find(|f| f.name() == s || format!("fig{}", f.number()) == s)
            .ok_or_else(|| Error::UnknownFigure(s.to_string()))
    }
}

impl std::fmt::Display for FigureId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// Header plus rows of optional numbers; `None` becomes an empty cell.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CsvTable {
    pub headers: Vec<String>,
    pub rows: Vec<Vec<Option<f64>>>,
    /// Places used for fixed-precision output.
    pub decimals: u32,
}

impl CsvTable {
    pub fn new<S: Into<String>>(headers: impl IntoIterator<Item = S>) -> Self {
        CsvTable {
            headers: headers.into_iter().map(Into::into).collect(),
            rows: Vec::new(),
            decimals: 6,
        }
    }

    pub fn with_decimals(mut self, decimals: u32) -> Self {
        self.decimals = decimals;
        self
    }

    pub fn push(&mut self, row: Vec<Option<f64>>) {
        debug_assert_eq!(row.len(), self.headers.len());
        self.rows.push(row);
    }

    pub fn push_values(&mut self, row: &[f64]) {
        self.push(row.iter().copied().map(Some).collect());
    }

    /// Column by header name.
    pub fn column(&self, header: &str) -> Option<Vec<Option<f64>>> {
        let i = self.headers.iter().position(|h| h == header)?;
        Some(self.rows.iter().map(|r| r[i]).collect())
    }

    pub fn cell(&self, value: Option<f64>, full_precision: bool) -> String {
        match value {
            None => String::new(),
            Some(v) if full_precision => format!("{v:?}"),
            Some(v) => format_fixed(v, self.decimals),
        }
    }

    pub fn write_csv<W: Write>(&self, writer: W, full_precision: bool) -> csv::Result<()> {
        let mut w = csv::Writer::from_writer(writer);
        w.write_record(&self.headers)?;
        for row in &self.rows {
            w.write_record(row.iter().map(|v| self.cell(*v, full_precision)))?;
        }
        w.flush()?;
        Ok(())
    }

    pub fn to_csv_string(&self, full_precision: bool) -> String {
        let mut buf = Vec::new();
        self.write_csv(&mut buf, full_precision)
            .expect("writing to memory");
        String::from_utf8(buf).expect("csv output is utf-8")
    }
}

/// The four iteration snapshots, side by side: `alpha_k, epsilon_k` for k = 1..4.
pub fn table1() -> Result<CsvTable> {
    let headers = (1..=4).flat_map(|k| [format!("alpha_{k}"), format!("epsilon_{k}")]);
    let mut table = CsvTable::new(headers).with_decimals(14);
    let g = CouplingStrength::new(TABLE1_COUPLING)?;
    let blocks = TABLE1_WINDOWS
        .iter()
        .map(|&(lo, hi)| {
            window_samples(lo, hi, 10)
                .into_iter()
                .map(|a| energy_attractive(a, g).map(|e| (a, e)))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    for i in 0..10 {
        table.push(
            blocks
                .iter()
                .flat_map(|b| [Some(b[i].0), Some(b[i].1)])
                .collect(),
        );
    }
    Ok(table)
}

pub fn table2(solver: &ExactSolver, tol: f64) -> Result<CsvTable> {
    Ok(comparison_table(&build_summary_table(
        &SUMMARY_COUPLINGS,
        solver,
        tol,
    )?))
}

pub fn comparison_table(rows: &[ComparisonRow]) -> CsvTable {
    let mut table = CsvTable::new([
        "g",
        "alpha_min",
        "nu_variational",
        "nu_exact",
        "nu_reference",
        "error",
        "rpe_nu",
        "rpe_eps",
    ]);
    for r in rows {
        table.push(vec![
            Some(r.g),
            Some(r.alpha_min),
            Some(r.nu_variational),
            Some(r.nu_exact),
            r.nu_reference,
            Some(r.error),
            r.rpe_nu,
            Some(r.rpe_eps),
        ]);
    }
    table
}

/// `n` equally spaced points on `[lo, hi]` with both ends exact.
fn window_samples(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    let step = (hi - lo) / (n - 1) as f64;
    (0..n)
        .map(|i| if i + 1 == n { hi } else { lo + step * i as f64 })
        .collect()
}

/// `k / denom` for `k` in `first..=last`.
fn ratio_grid(first: i32, last: i32, denom: f64) -> Vec<f64> {
    (first..=last).map(|k| k as f64 / denom).collect()
}

/// Knobs for figure generation; `None` selects the default sample set.
#[derive(Debug, Clone, PartialEq)]
pub struct FigureParams {
    pub g_values: Option<Vec<f64>>,
    pub solver: ExactSolver,
    pub tol: f64,
}

impl Default for FigureParams {
    fn default() -> Self {
        FigureParams {
            g_values: None,
            solver: ExactSolver::default(),
            tol: 1e-9,
        }
    }
}

impl FigureParams {
    fn g_or(&self, default: impl FnOnce() -> Vec<f64>) -> Vec<f64> {
        self.g_values.clone().unwrap_or_else(default)
    }
}

fn coupling(g: f64) -> Result<CouplingStrength> {
    CouplingStrength::new(g)
}

pub fn figure_data(id: FigureId, params: &FigureParams) -> Result<CsvTable> {
    match id {
        FigureId::MinimaCurves => {
            let gs = params.g_or(|| vec![-1.5, -2.0]);
            energy_curves(&gs, &ratio_grid(10, 240, 200.0), energy_attractive)
        }
        FigureId::IterationTrace => {
            let g = coupling(params.g_or(|| vec![TABLE1_COUPLING])[0])?;
            let (lo, hi) = TABLE1_WINDOWS[0];
            let m = minimize_attractive_with(g, &WindowSchedule::with_window(lo, hi))?;
            let mut t = CsvTable::new(["iteration", "window_lo", "window_hi", "alpha", "epsilon"])
                .with_decimals(14);
            for (k, it) in m.trace.iterations.iter().enumerate() {
                for &(a, e) in &it.samples {
                    t.push_values(&[k as f64, it.lo, it.hi, a, e]);
                }
            }
            Ok(t)
        }
        FigureId::ErrorAttractive => {
            let gs = params.g_or(|| ratio_grid(-100, -1, 20.0));
            error_table(&gs, params, Family::Attractive)
        }
        FigureId::AlphaMinVsG => {
            let gs = params.g_or(|| ratio_grid(-200, 100, 20.0));
            let mut t = CsvTable::new(["g", "alpha_min", "nu_variational"]);
            for g in gs {
                let r = variational_ground(coupling(g)?, None, params.tol)?;
                t.push_values(&[g, r.params.alpha, r.energy.nu]);
            }
            Ok(t)
        }
        FigureId::EnergyVsAlphaRepulsive => {
            let gs = params.g_or(|| vec![0.5, 2.5]);
            energy_curves(&gs, &ratio_grid(100, 400, 200.0), energy_repulsive)
        }
        FigureId::ErrorRepulsive => {
            let gs = params.g_or(|| ratio_grid(1, 100, 20.0));
            error_table(&gs, params, Family::Repulsive)
        }
        FigureId::NuVsG => {
            let abs_g = params.g_or(|| ratio_grid(1, 100, 10.0));
            let mut t = CsvTable::new([
                "abs_g",
                "nu_exact_attractive",
                "nu_exact_repulsive",
                "asymptote_leading",
                "asymptote_corrected",
                "repulsive_limit",
            ]);
            for a in abs_g {
                let a = a.abs();
                let attractive = params.solver.solve_ground(coupling(-a)?)?.nu;
                let repulsive = params.solver.solve_ground(coupling(a)?)?.nu;
                let corrected = asymptote_attractive(-a).ok();
                t.push(vec![
                    Some(a),
                    Some(attractive),
                    Some(repulsive),
                    Some(-0.5 * a * a - 0.5),
                    corrected,
                    Some(1.0),
                ]);
            }
            Ok(t)
        }
        FigureId::ExcitedSurface => {
            let s = scan_excited_surface(&default_alpha_grid(), &default_z_grid())?;
            let mut t = CsvTable::new(["alpha", "z", "epsilon"]);
            for p in s.points() {
                t.push_values(&[p.alpha, p.z, p.epsilon]);
            }
            Ok(t)
        }
    }
}

fn energy_curves(
    gs: &[f64],
    alphas: &[f64],
    energy: fn(f64, CouplingStrength) -> Result<f64>,
) -> Result<CsvTable> {
    let headers =
        std::iter::once("alpha".to_string()).chain(gs.iter().map(|g| format!("epsilon_g={g}")));
    let mut t = CsvTable::new(headers);
    let couplings = gs
        .iter()
        .map(|&g| coupling(g))
        .collect::<Result<Vec<_>>>()?;
    for &a in alphas {
        let mut row = vec![Some(a)];
        for &g in &couplings {
            row.push(Some(energy(a, g)?));
        }
        t.push(row);
    }
    Ok(t)
}

/// Error of the optimized and of the `alpha = 1` trial state against the exact level.
fn error_table(gs: &[f64], params: &FigureParams, family: Family) -> Result<CsvTable> {
    let energy = match family {
        Family::Attractive => energy_attractive,
        Family::Repulsive => energy_repulsive,
    };
    let mut t = CsvTable::new([
        "g",
        "nu_exact",
        "nu_alpha_min",
        "error_alpha_min",
        "rpe_nu_alpha_min",
        "rpe_eps_alpha_min",
        "nu_alpha_one",
        "error_alpha_one",
        "rpe_nu_alpha_one",
        "rpe_eps_alpha_one",
    ]);
    for &gv in gs {
        let g = coupling(gv)?;
        let exact = params.solver.solve_ground(g)?.nu;
        let best = variational_ground(g, Some(family), params.tol)?;
        let opt = ComparisonRow::new(gv, best.params.alpha, best.energy.nu, exact);
        let unit = ComparisonRow::new(gv, 1.0, energy(1.0, g)? - 0.5, exact);
        t.push(vec![
            Some(gv),
            Some(exact),
            Some(opt.nu_variational),
            Some(opt.error),
            opt.rpe_nu,
            Some(opt.rpe_eps),
            Some(unit.nu_variational),
            Some(unit.error),
            unit.rpe_nu,
            Some(unit.rpe_eps),
        ]);
    }
    Ok(t)
}
