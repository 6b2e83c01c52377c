//! Browser bindings for the demo page in `www/`.

use hodelta::attractive::energy_attractive;
use hodelta::exact::{CouplingStrength, ExactSolver};
use hodelta::repulsive::energy_repulsive;
use hodelta::variational::{variational_ground, Family};
use wasm_bindgen::prelude::*;

const TOL: f64 = 1e-9;

fn coupling(g: f64) -> Result<CouplingStrength, JsError> {
    Ok(CouplingStrength::new(g)?)
}

/// Exact and variational ground state for one coupling.
#[wasm_bindgen]
pub struct GroundState {
    #[wasm_bindgen(readonly)]
    pub g: f64,
    #[wasm_bindgen(readonly)]
    pub alpha_min: f64,
    #[wasm_bindgen(readonly)]
    pub nu_variational: f64,
    #[wasm_bindgen(readonly)]
    pub nu_exact: f64,
    attractive: bool,
}

#[wasm_bindgen]
impl GroundState {
    #[wasm_bindgen(getter)]
    pub fn family(&self) -> String {
        if self.attractive {
            "attractive"
        } else {
            "repulsive"
        }
        .to_string()
    }
}

#[wasm_bindgen]
pub fn ground_state(g: f64) -> Result<GroundState, JsError> {
    let c = coupling(g)?;
    let exact = ExactSolver::default().solve_ground(c)?;
    let var = variational_ground(c, None, TOL)?;
    Ok(GroundState {
        g,
        alpha_min: var.params.alpha,
        nu_variational: var.energy.nu,
        nu_exact: exact.nu,
        attractive: var.family == Family::Attractive,
    })
}

/// Trial energy at `n` evenly spaced alpha in `[lo, hi]`, as `[alpha, eps, alpha, eps, ...]`.
#[wasm_bindgen]
pub fn energy_curve(g: f64, lo: f64, hi: f64, n: usize) -> Result<Vec<f64>, JsError> {
    let c = coupling(g)?;
    if !(lo > 0.0 && hi > lo && n >= 2) {
        return Err(JsError::new("need 0 < lo < hi and at least two points"));
    }
    let energy = if c.is_attractive() {
        energy_attractive
    } else {
        energy_repulsive
    };
    let mut out = Vec::with_capacity(2 * n);
    for i in 0..n {
        let alpha = lo + (hi - lo) * i as f64 / (n - 1) as f64;
        out.push(alpha);
        out.push(energy(alpha, c)?);
    }
    Ok(out)
}

/// `[g, nu_exact, nu_variational, ...]` at `n` evenly spaced couplings in `[lo, hi]`.
#[wasm_bindgen]
pub fn nu_sweep(lo: f64, hi: f64, n: usize) -> Result<Vec<f64>, JsError> {
    if !(hi > lo && n >= 2 && lo.is_finite() && hi.is_finite()) {
        return Err(JsError::new("need lo < hi and at least two points"));
    }
    let solver = ExactSolver::default();
    let mut out = Vec::with_capacity(3 * n);
    for i in 0..n {
        let g = lo + (hi - lo) * i as f64 / (n - 1) as f64;
        let c = coupling(g)?;
        out.push(g);
        out.push(solver.solve_ground(c)?.nu);
        out.push(variational_ground(c, None, TOL)?.energy.nu);
    }
    Ok(out)
}
