//! Exact even-parity eigenvalues from the transcendental condition
//! `nu = g * Gamma(1 - nu/2) / Gamma(1/2 - nu/2)`.

use serde::{Deserialize, Serialize};

use crate::error::{ensure_finite, Error, Result};
use crate::specfn::{GammaBackend, POLE_GUARD};

/// Dimensionless delta strength `g = m a gamma / hbar^2`; negative is attractive.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CouplingStrength(f64);

impl CouplingStrength {
    pub fn new(g: f64) -> Result<Self> {
        ensure_finite("coupling g", g).map(CouplingStrength)
    }

    pub fn value(self) -> f64 {
        self.0
    }

    pub fn is_attractive(self) -> bool {
        self.0 < 0.0
    }

    pub fn is_repulsive(self) -> bool {
        self.0 > 0.0
    }
}

impl std::fmt::Display for CouplingStrength {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.0.fmt(f)
    }
}

/// Energy in oscillator units, `epsilon = nu + 1/2`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EnergyResult {
    pub nu: f64,
    pub epsilon: f64,
}

impl EnergyResult {
    pub fn from_nu(nu: f64) -> Self {
        EnergyResult {
            nu,
            epsilon: nu + 0.5,
        }
    }

    pub fn from_epsilon(epsilon: f64) -> Self {
        EnergyResult {
            nu: epsilon - 0.5,
            epsilon,
        }
    }
}

/// `f(nu) = nu - g Gamma(1 - nu/2) / Gamma(1/2 - nu/2)`; zero exactly at even-parity levels.
pub fn transcendental_residual(nu: f64, g: CouplingStrength, backend: GammaBackend) -> Result<f64> {
    ensure_finite("nu", nu)?;
    let g = g.value();
    if g == 0.0 {
        return Ok(nu);
    }
    let a = 0.5 - 0.5 * nu;
    let ratio = if a > 0.0 {
        backend.half_step_ratio(a)?
    } else {
        backend.gamma(a + 0.5)? / backend.gamma(a)?
    };
    Ok(nu - g * ratio)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExactSolver {
    /// Bisection stops once the bracket is narrower than this (in nu).
    pub tol: f64,
    pub backend: GammaBackend,
}

impl Default for ExactSolver {
    fn default() -> Self {
        ExactSolver {
            tol: 1e-9,
            backend: GammaBackend::HighPrecision,
        }
    }
}

impl ExactSolver {
    pub fn new(tol: f64, backend: GammaBackend) -> Result<Self> {
        if !(tol > 0.0 && tol.is_finite()) {
            return Err(Error::InvalidParameter(format!(
                "tolerance must be positive, got {tol}"
            )));
        }
        Ok(ExactSolver { tol, backend })
    }

    fn residual(&self, nu: f64, g: CouplingStrength) -> Result<f64> {
        transcendental_residual(nu, g, self.backend)
    }

    /// Ground state: root in `(0, 1)` for `g > 0`, below zero for `g < 0`.
    pub fn solve_ground(&self, g: CouplingStrength) -> Result<EnergyResult> {
        let gv = g.value();
        if gv == 0.0 {
            return Ok(EnergyResult::from_nu(0.0));
        }
        if gv > 0.0 {
            // f(0) = -g/sqrt(pi) < 0 and f -> 1 as nu -> 1 (denominator pole)
            return self.bisect(g, 0.0, 1.0 - 1e-10, "ground state, g > 0");
        }
        // f(0) = |g|/sqrt(pi) > 0; f ~ nu + |g| sqrt(|nu|/2) turns negative below ~ -g^2/2
        let floor = -(gv * gv + 10.0);
        let mut hi = 0.0;
        let mut lo = -1.0_f64;
        loop {
            if self.residual(lo, g)? < 0.0 {
                break;
            }
            if lo <= floor {
                return Err(Error::BracketFailure {
                    lo: floor,
                    hi: 0.0,
                    context: "ground state, g < 0: no sign change above -(g^2 + 10)",
                });
            }
            hi = lo;
            lo = (2.0 * lo).max(floor);
        }
        self.bisect(g, lo, hi, "ground state, g < 0")
    }

    /// k-th even level (k = 0 is the ground state).
    ///
    /// For `k >= 1` the root sits between the residual's pole at `nu = 2k` and the
    /// unperturbed odd level: in `(2k - 1, 2k)` when attractive, `(2k, 2k + 1)` when repulsive.
    pub fn solve_even_level(&self, g: CouplingStrength, k: u32) -> Result<EnergyResult> {
        if k == 0 {
            return self.solve_ground(g);
        }
        let pole = 2.0 * k as f64;
        let nudge = 1e-9;
        match g.value() {
            0.0 => Ok(EnergyResult::from_nu(pole)),
            v if v < 0.0 => self.solve_in_bracket(g, pole - 1.0 + nudge, pole - nudge),
            _ => self.solve_in_bracket(g, pole + nudge, pole + 1.0 - nudge),
        }
    }

    /// Bisection on a caller-supplied bracket; endpoints are moved off Gamma poles.
    pub fn solve_in_bracket(&self, g: CouplingStrength, lo: f64, hi: f64) -> Result<EnergyResult> {
        ensure_finite("bracket", lo)?;
        ensure_finite("bracket", hi)?;
        let (lo, hi) = if lo <= hi { (lo, hi) } else { (hi, lo) };
        self.bisect(g, off_pole(lo, 1.0), off_pole(hi, -1.0), "caller bracket")
    }

    fn bisect(
        &self,
        g: CouplingStrength,
        lo: f64,
        hi: f64,
        context: &'static str,
    ) -> Result<EnergyResult> {
        let mut lo = lo;
        let mut hi = hi;
        let f_lo = self.residual(lo, g)?;
        let f_hi = self.residual(hi, g)?;
        if f_lo == 0.0 {
            return Ok(EnergyResult::from_nu(lo));
        }
        if f_hi == 0.0 {
            return Ok(EnergyResult::from_nu(hi));
        }
        if f_lo.signum() == f_hi.signum() {
            return Err(Error::BracketFailure { lo, hi, context });
        }
        let lo_negative = f_lo < 0.0;
        while hi - lo > self.tol {
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi {
                break;
            }
            let f_mid = self.residual(mid, g)?;
            if f_mid == 0.0 {
                return Ok(EnergyResult::from_nu(mid));
            }
            if (f_mid < 0.0) == lo_negative {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        Ok(EnergyResult::from_nu(0.5 * (lo + hi)))
    }
}

/// Residual poles sit where `1 - nu/2` or `1/2 - nu/2` is a non-positive integer,
/// i.e. at integers `nu >= 1`.
fn off_pole(nu: f64, direction: f64) -> f64 {
    let n = nu.round();
    if n >= 1.0 && (nu - n).abs() < 2.0 * POLE_GUARD {
        n + direction * 1e-9
    } else {
        nu
    }
}

/// Ground-state `nu` with the default (high-precision) Gamma backend.
pub fn solve_ground_nu(g: CouplingStrength, tol: f64) -> Result<EnergyResult> {
    ExactSolver::new(tol, GammaBackend::HighPrecision)?.solve_ground(g)
}
