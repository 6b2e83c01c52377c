//! First excited (odd) state: energy surface of `y exp(Z|y|) exp(-alpha^2 y^2 / 2)`.

use serde::{Deserialize, Serialize};

use crate::error::{ensure_alpha, ensure_finite, Error, Result};
use crate::quadrature::{half_line_cutoff, integrate};

/// `eps = 3 alpha^2/2 + (1 - alpha^4)/2 * M4/M2 + Z^2/2`,
/// `Mk = integral over [0, inf) of y^k exp(2 Z y - alpha^2 y^2)`.
///
/// Does not depend on `g`: the trial function vanishes at the origin.
pub fn energy_excited(alpha: f64, z: f64) -> Result<f64> {
    ensure_alpha(alpha)?;
    ensure_finite("z", z)?;
    let a2 = alpha * alpha;
    let upper = half_line_cutoff(alpha, z);
    let weight = |y: f64| y * y * (2.0 * z * y - a2 * y * y).exp();
    let m2 = integrate(weight, 0.0, upper)?;
    let m4 = integrate(|y| y * y * weight(y), 0.0, upper)?;
    let eps = 1.5 * a2 + 0.5 * (1.0 - a2 * a2) * m4 / m2 + 0.5 * z * z;
    ensure_finite("excited energy", eps)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExcitedSurface {
    pub alphas: Vec<f64>,
    pub zs: Vec<f64>,
    /// `values[i][j] = energy_excited(alphas[i], zs[j])`.
    pub values: Vec<Vec<f64>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SurfacePoint {
    pub alpha: f64,
    pub z: f64,
    pub epsilon: f64,
}

impl ExcitedSurface {
    pub fn points(&self) -> impl Iterator<Item = SurfacePoint> + '_ {
        self.alphas
            .iter()
            .zip(&self.values)
            .flat_map(move |(&alpha, row)| {
                self.zs
                    .iter()
                    .zip(row)
                    .map(move |(&z, &epsilon)| SurfacePoint { alpha, z, epsilon })
            })
    }

    /// Smallest sampled energy; the first one wins on ties.
    pub fn argmin(&self) -> SurfacePoint {
        self.points()
            .reduce(|best, p| if p.epsilon < best.epsilon { p } else { best })
            .expect("surface is non-empty")
    }
}

pub fn scan_excited_surface(alphas: &[f64], zs: &[f64]) -> Result<ExcitedSurface> {
    if alphas.is_empty() || zs.is_empty() {
        return Err(Error::InvalidGrid(
            "excited-state grids must be non-empty".into(),
        ));
    }
    if let Some(a) = alphas.iter().find(|a| !(a.is_finite() && **a > 0.0)) {
        return Err(Error::InvalidGrid(format!(
            "alpha grid value {a} is not a positive number"
        )));
    }
    if let Some(z) = zs.iter().find(|z| !z.is_finite()) {
        return Err(Error::InvalidGrid(format!(
            "z grid value {z} is not finite"
        )));
    }
    let values = alphas
        .iter()
        .map(|&a| {
            zs.iter()
                .map(|&z| energy_excited(a, z))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ExcitedSurface {
        alphas: alphas.to_vec(),
        zs: zs.to_vec(),
        values,
    })
}

/// `numerator / 50` for `numerator` in `first..=last`; keeps 0 and 1 exact.
fn fiftieths(first: i32, last: i32) -> Vec<f64> {
    (first..=last).map(|k| k as f64 / 50.0).collect()
}

/// alpha from 0.6 to 1.6 in steps of 0.02.
pub fn default_alpha_grid() -> Vec<f64> {
    fiftieths(30, 80)
}

/// Z from -1 to 1 in steps of 0.02.
pub fn default_z_grid() -> Vec<f64> {
    fiftieths(-50, 50)
}
