//! Independent checks: a finite-difference eigensolver for
//! `H = -1/2 d^2/dy^2 + y^2/2 + g delta(y)` and a first-derivative Rayleigh quotient.

use serde::{Deserialize, Serialize};

use crate::error::{ensure_alpha, ensure_finite, Error, Result};
use crate::exact::CouplingStrength;
use crate::quadrature::{half_line_cutoff, integrate};

/// Uniform grid on `[-L, L]` with an odd number of nodes, so one sits at `y = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GridSpec {
    half_width: f64,
    points: usize,
}

impl Default for GridSpec {
    fn default() -> Self {
        GridSpec {
            half_width: 12.0,
            points: 4801,
        }
    }
}

impl GridSpec {
    pub fn new(half_width: f64, points: usize) -> Result<Self> {
        if !(half_width.is_finite() && half_width > 0.0) {
            return Err(Error::InvalidGrid(format!(
                "half-width must be positive, got {half_width}"
            )));
        }
        if points < 3 || points.is_multiple_of(2) {
            return Err(Error::InvalidGrid(format!(
                "point count must be odd and >= 3, got {points}"
            )));
        }
        Ok(GridSpec { half_width, points })
    }

    pub fn half_width(&self) -> f64 {
        self.half_width
    }

    pub fn points(&self) -> usize {
        self.points
    }

    pub fn spacing(&self) -> f64 {
        2.0 * self.half_width / (self.points - 1) as f64
    }
}

/// Symmetric tridiagonal matrix with constant off-diagonal.
struct Tridiagonal {
    diag: Vec<f64>,
    off: f64,
}

impl Tridiagonal {
    /// Dirichlet ends; the delta becomes `g/h` on the centre node.
    fn hamiltonian(g: f64, grid: &GridSpec) -> Self {
        let h = grid.spacing();
        let n = grid.points();
        let kinetic = 1.0 / (h * h);
        let mut diag: Vec<f64> = (0..n)
            .map(|i| {
                let y = -grid.half_width() + h * i as f64;
                kinetic + 0.5 * y * y
            })
            .collect();
        diag[n / 2] += g / h;
        Tridiagonal {
            diag,
            off: -0.5 * kinetic,
        }
    }

    /// Number of eigenvalues strictly below `lambda`.
    fn count_below(&self, lambda: f64) -> usize {
        let e2 = self.off * self.off;
        let mut count = 0;
        let mut q = 1.0;
        for (i, &d) in self.diag.iter().enumerate() {
            q = if i == 0 {
                d - lambda
            } else {
                d - lambda - e2 / q
            };
            if q == 0.0 {
                q = -f64::EPSILON * (d.abs() + lambda.abs()).max(f64::MIN_POSITIVE);
            }
            if q < 0.0 {
                count += 1;
            }
        }
        count
    }

    fn gershgorin(&self) -> (f64, f64) {
        let r = 2.0 * self.off.abs();
        let lo = self.diag.iter().fold(f64::INFINITY, |m, &d| m.min(d - r));
        let hi = self
            .diag
            .iter()
            .fold(f64::NEG_INFINITY, |m, &d| m.max(d + r));
        (lo, hi)
    }

    /// `index`-th smallest eigenvalue (0-based) by Sturm bisection.
    fn eigenvalue(&self, index: usize) -> Result<f64> {
        let (mut lo, mut hi) = self.gershgorin();
        if self.count_below(lo) > index || self.count_below(hi) <= index {
            return Err(Error::BracketFailure {
                lo,
                hi,
                context: "Sturm count outside Gershgorin bounds",
            });
        }
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi {
                break;
            }
            if self.count_below(mid) > index {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        Ok(0.5 * (lo + hi))
    }

    /// `|x_0| / max |x_i|` over the left half for the eigenvector at `lambda`,
    /// built inward from the boundary by the three-term recurrence.
    fn boundary_ratio(&self, lambda: f64) -> f64 {
        let mid = self.diag.len() / 2;
        let mut prev = 0.0;
        let mut cur = 1.0_f64;
        let mut max = 1.0_f64;
        for d in &self.diag[..mid] {
            let next = ((lambda - d) * cur - self.off * prev) / self.off;
            prev = cur;
            cur = next;
            max = max.max(cur.abs());
        }
        1.0 / max
    }
}

/// Boundary ratio above which the grid is flagged as too small.
pub const CONFINEMENT_THRESHOLD: f64 = 1e-6;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FdGroundState {
    pub epsilon: f64,
    pub boundary_ratio: f64,
    pub warning: Option<String>,
}

pub fn fd_ground_epsilon(g: CouplingStrength, grid: &GridSpec) -> Result<FdGroundState> {
    let matrix = Tridiagonal::hamiltonian(g.value(), grid);
    let epsilon = matrix.eigenvalue(0)?;
    let boundary_ratio = matrix.boundary_ratio(epsilon);
    let warning = (boundary_ratio > CONFINEMENT_THRESHOLD).then(|| {
        format!(
            "eigenvector at y = -{} is {boundary_ratio:.1e} of its maximum; widen the grid",
            grid.half_width()
        )
    });
    Ok(FdGroundState {
        epsilon,
        boundary_ratio,
        warning,
    })
}

/// `index`-th eigenvalue of the discretized Hamiltonian (both parities).
pub fn fd_eigenvalue(g: CouplingStrength, grid: &GridSpec, index: usize) -> Result<f64> {
    if index >= grid.points() {
        return Err(Error::InvalidGrid(format!(
            "eigenvalue index {index} out of range for {} points",
            grid.points()
        )));
    }
    Tridiagonal::hamiltonian(g.value(), grid).eigenvalue(index)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum TrialFamily {
    /// `exp(Z|y|) exp(-alpha^2 y^2 / 2)`
    ExponentialCusp,
    /// `(1 + Z|y|) exp(-alpha^2 y^2 / 2)`
    LinearCusp,
    /// `y exp(Z|y|) exp(-alpha^2 y^2 / 2)`
    OddExponential,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TrialFunction {
    pub family: TrialFamily,
    pub alpha: f64,
    pub z: f64,
}

impl TrialFunction {
    pub fn new(family: TrialFamily, alpha: f64, z: f64) -> Result<Self> {
        ensure_alpha(alpha)?;
        ensure_finite("z", z)?;
        Ok(TrialFunction { family, alpha, z })
    }

    /// `psi(y)` for `y >= 0`; `|psi|` is even in every family.
    pub fn value(&self, y: f64) -> f64 {
        let gauss = (-0.5 * self.alpha * self.alpha * y * y).exp();
        match self.family {
            TrialFamily::ExponentialCusp => (self.z * y).exp() * gauss,
            TrialFamily::LinearCusp => (1.0 + self.z * y) * gauss,
            TrialFamily::OddExponential => y * (self.z * y).exp() * gauss,
        }
    }

    /// `psi'(y)` for `y > 0`.
    pub fn slope(&self, y: f64) -> f64 {
        let a2 = self.alpha * self.alpha;
        let gauss = (-0.5 * a2 * y * y).exp();
        match self.family {
            TrialFamily::ExponentialCusp => (self.z - a2 * y) * (self.z * y).exp() * gauss,
            TrialFamily::LinearCusp => (self.z - a2 * y * (1.0 + self.z * y)) * gauss,
            TrialFamily::OddExponential => {
                (1.0 + y * (self.z - a2 * y)) * (self.z * y).exp() * gauss
            }
        }
    }

    fn cutoff(&self) -> f64 {
        match self.family {
            TrialFamily::LinearCusp => half_line_cutoff(self.alpha, 0.0),
            _ => half_line_cutoff(self.alpha, self.z),
        }
    }
}

/// `<psi|H|psi> / <psi|psi>` with kinetic energy `1/2 integral |psi'|^2`,
/// integrated over the half line and doubled.
pub fn rayleigh_quotient(psi: &TrialFunction, g: CouplingStrength) -> Result<f64> {
    let upper = psi.cutoff();
    let numerator = integrate(
        |y| {
            let v = psi.value(y);
            let s = psi.slope(y);
            s * s + y * y * v * v
        },
        0.0,
        upper,
    )?;
    let norm = integrate(
        |y| {
            let v = psi.value(y);
            v * v
        },
        0.0,
        upper,
    )?;
    let at_origin = psi.value(0.0);
    let rq = (numerator + g.value() * at_origin * at_origin) / (2.0 * norm);
    ensure_finite("Rayleigh quotient", rq)
}
