//! Variational ground state for a repulsive delta with the trial function
//! `(1 + g|y|) exp(-alpha^2 y^2 / 2)`, minimized by bisection on the analytic derivative.

use serde::{Deserialize, Serialize};

use crate::attractive::TrialParams;
use crate::error::{ensure_alpha, ensure_finite, Error, Result};
use crate::exact::{CouplingStrength, EnergyResult};

const SQRT_PI: f64 = 1.772_453_850_905_516;

/// Which expression to use for `dB/dalpha`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub enum BAlphaForm {
    /// Term-by-term derivative of `B`; last term `-3 g^2 sqrt(pi) / (4 alpha^4)`.
    #[default]
    Analytic,
    /// Last term with `alpha^3` in the denominator, as sometimes printed.
    /// Kept only as a negative control for the derivative check.
    Printed,
}

/// `I`, `B` and their alpha-derivatives.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RepulsiveEnergyParts {
    pub i: f64,
    pub b: f64,
    pub i_alpha: f64,
    pub b_alpha: f64,
}

impl RepulsiveEnergyParts {
    pub fn new(alpha: f64, g: f64, form: BAlphaForm) -> Self {
        let a = alpha;
        let (a2, a3) = (a * a, a * a * a);
        let (a4, a5, a6) = (a2 * a2, a2 * a3, a3 * a3);
        let g2 = g * g;
        let i = SQRT_PI / (4.0 * a3) + g / a4 + 3.0 * g2 * SQRT_PI / (8.0 * a5);
        let b = SQRT_PI / (2.0 * a) + g / a2 + g2 * SQRT_PI / (4.0 * a3);
        let i_alpha = -3.0 * SQRT_PI / (4.0 * a4) - 4.0 * g / a5 - 15.0 * g2 * SQRT_PI / (8.0 * a6);
        let last = match form {
            BAlphaForm::Analytic => a4,
            BAlphaForm::Printed => a3,
        };
        let b_alpha = -SQRT_PI / (2.0 * a2) - 2.0 * g / a3 - 3.0 * g2 * SQRT_PI / (4.0 * last);
        RepulsiveEnergyParts {
            i,
            b,
            i_alpha,
            b_alpha,
        }
    }
}

/// `eps = alpha^2/2 + (1 - alpha^4)/2 * I/B + (g^2/2)(sqrt(pi)/alpha)/(2B) + g/(2B)`
pub fn energy_repulsive(alpha: f64, g: CouplingStrength) -> Result<f64> {
    ensure_alpha(alpha)?;
    let g = g.value();
    let p = RepulsiveEnergyParts::new(alpha, g, BAlphaForm::Analytic);
    let a2 = alpha * alpha;
    let eps = 0.5 * a2
        + 0.5 * (1.0 - a2 * a2) * p.i / p.b
        + 0.5 * g * g * (SQRT_PI / alpha) / (2.0 * p.b)
        + g / (2.0 * p.b);
    ensure_finite("repulsive energy", eps)
}

pub fn energy_repulsive_derivative(alpha: f64, g: CouplingStrength) -> Result<f64> {
    energy_repulsive_derivative_with(alpha, g, BAlphaForm::Analytic)
}

/// `d eps / d alpha` assembled from `I`, `B`, `I_alpha`, `B_alpha`.
pub fn energy_repulsive_derivative_with(
    alpha: f64,
    g: CouplingStrength,
    form: BAlphaForm,
) -> Result<f64> {
    ensure_alpha(alpha)?;
    let g = g.value();
    let RepulsiveEnergyParts {
        i,
        b,
        i_alpha,
        b_alpha,
    } = RepulsiveEnergyParts::new(alpha, g, form);
    let a = alpha;
    let a2 = a * a;
    let a4 = a2 * a2;
    let g2 = g * g;
    let half_span = 0.5 * (1.0 - a4);
    let d = a
        - g2 * SQRT_PI / (4.0 * a2 * b)
        - g2 * SQRT_PI / (4.0 * a * b * b) * b_alpha
        - 2.0 * a * a2 * i / b
        + half_span * i_alpha / b
        - half_span * i * b_alpha / (b * b)
        - g * b_alpha / (2.0 * b * b);
    ensure_finite("repulsive energy derivative", d)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RepulsiveMinimum {
    pub params: TrialParams,
    pub energy: EnergyResult,
}

pub const REPULSIVE_BRACKET: (f64, f64) = (0.5, 2.0);

/// Bisection for the zero of the derivative on `[0.5, 2]`, to bracket width `tol`.
pub fn minimize_repulsive(g: CouplingStrength, tol: f64) -> Result<RepulsiveMinimum> {
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(Error::InvalidParameter(format!(
            "tolerance must be positive, got {tol}"
        )));
    }
    let (mut lo, mut hi) = REPULSIVE_BRACKET;
    let d_lo = energy_repulsive_derivative(lo, g)?;
    let d_hi = energy_repulsive_derivative(hi, g)?;
    if !(d_lo < 0.0 && d_hi > 0.0) {
        return Err(Error::BracketFailure {
            lo,
            hi,
            context: "repulsive derivative has no minimum crossing",
        });
    }
    while hi - lo > tol {
        let mid = 0.5 * (lo + hi);
        if energy_repulsive_derivative(mid, g)? < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let alpha = 0.5 * (lo + hi);
    Ok(RepulsiveMinimum {
        params: TrialParams {
            alpha,
            z: g.value(),
        },
        energy: EnergyResult::from_epsilon(energy_repulsive(alpha, g)?),
    })
}
