//! Variational ground state for an attractive delta with the cusped Gaussian
//! trial function `exp(g|y|) exp(-alpha^2 y^2 / 2)`.

use serde::{Deserialize, Serialize};

use crate::error::{ensure_alpha, ensure_finite, Error, Result};
use crate::exact::{CouplingStrength, EnergyResult};
use crate::quadrature::{half_line_cutoff, integrate};
use crate::specfn::erfcx;

const SQRT_PI: f64 = 1.772_453_850_905_516;

/// Variational parameters; `z` is tied to `g` by the cusp condition.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TrialParams {
    pub alpha: f64,
    pub z: f64,
}

impl TrialParams {
    pub fn new(alpha: f64, z: f64) -> Result<Self> {
        ensure_alpha(alpha)?;
        ensure_finite("z", z)?;
        Ok(TrialParams { alpha, z })
    }
}

/// Closed-form energy expectation.
///
/// With `z = -g/alpha` and `Q(z) = 1/2 + z^2 - z exp(-z^2) / (sqrt(pi) erfc(z))`
/// (the mean of `t^2` under `exp(-t^2 - 2 z t)` on the half line), the energy is
///
/// `eps = -g^2/2 + Q(z) (1 + alpha^4) / (2 alpha^2)`
pub fn energy_attractive(alpha: f64, g: CouplingStrength) -> Result<f64> {
    let g = g.value();
    let eps = binding_offset(alpha, g)? - 0.5 * g * g;
    ensure_finite("attractive energy", eps)
}

/// `eps + g^2/2`, which keeps full relative precision when `|g|` is large.
fn binding_offset(alpha: f64, g: f64) -> Result<f64> {
    ensure_alpha(alpha)?;
    let a2 = alpha * alpha;
    let offset = second_moment(-g / alpha) * (1.0 + a2 * a2) / (2.0 * a2);
    ensure_finite("attractive energy", offset)
}

/// `Q(z) = J2/J0` with `Jn = integral over [0, inf) of t^n exp(-t^2 - 2 z t)`.
///
/// The closed form `1/2 + z^2 - z m` cancels badly once `z` is large, where
/// `Q ~ 1/(2 z^2)`; there the ratios `Jn/J(n-1) = n / (2z + 2 J(n+1)/Jn)` are
/// run backwards instead.
fn second_moment(z: f64) -> f64 {
    const SWITCH: f64 = 2.0;
    const TERMS: usize = 80;
    if z < SWITCH {
        let m = 1.0 / (SQRT_PI * erfcx(z));
        return 0.5 + z * z - z * m;
    }
    let mut r = 0.0;
    for n in (2..=TERMS).rev() {
        r = n as f64 / (2.0 * z + 2.0 * r);
    }
    let r1 = 1.0 / (2.0 * z + 2.0 * r);
    r1 * r
}

/// The same energy from the ratio-of-integrals form, evaluated by quadrature.
///
/// `eps = alpha^2/2 + (1 - alpha^4)/2 * N2/N0 + g^2/2 + g/N0` with
/// `Nk = integral of y^k exp(2g|y| - alpha^2 y^2)` over the real line.
pub fn quadrature_energy_attractive(alpha: f64, g: CouplingStrength) -> Result<f64> {
    ensure_alpha(alpha)?;
    let g = g.value();
    let a2 = alpha * alpha;
    let upper = half_line_cutoff(alpha, g);
    let weight = |y: f64| (2.0 * g * y - a2 * y * y).exp();
    let n0 = 2.0 * integrate(weight, 0.0, upper)?;
    let n2 = 2.0 * integrate(|y| y * y * weight(y), 0.0, upper)?;
    let eps = 0.5 * a2 + 0.5 * (1.0 - a2 * a2) * n2 / n0 + 0.5 * g * g + g / n0;
    ensure_finite("attractive energy", eps)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct WindowSchedule {
    pub initial_lo: f64,
    pub initial_hi: f64,
    /// Equally spaced samples per window, endpoints included.
    pub samples: usize,
    /// Stop once the window is narrower than this.
    pub min_width: f64,
    pub max_iterations: usize,
}

impl Default for WindowSchedule {
    fn default() -> Self {
        WindowSchedule {
            initial_lo: 0.01,
            initial_hi: 1.2,
            samples: 10,
            min_width: 1e-7,
            max_iterations: 200,
        }
    }
}

impl WindowSchedule {
    pub fn with_window(lo: f64, hi: f64) -> Self {
        WindowSchedule {
            initial_lo: lo,
            initial_hi: hi,
            ..WindowSchedule::default()
        }
    }

    fn validate(&self) -> Result<()> {
        let ok = self.initial_lo > 0.0
            && self.initial_hi > self.initial_lo
            && self.initial_hi.is_finite()
            && self.samples >= 3
            && self.min_width > 0.0;
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidParameter(format!(
                "bad window schedule {self:?}"
            )))
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WindowIteration {
    pub lo: f64,
    pub hi: f64,
    /// `(alpha, epsilon)` pairs in ascending alpha.
    pub samples: Vec<(f64, f64)>,
}

impl WindowIteration {
    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct MinimizationTrace {
    pub iterations: Vec<WindowIteration>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AttractiveMinimum {
    pub params: TrialParams,
    pub energy: EnergyResult,
    pub trace: MinimizationTrace,
}

/// Sample `n` equally spaced points on `[lo, hi]`, endpoints included.
/// Returns the window and the index of its lowest sample.
fn sample_window(
    lo: f64,
    hi: f64,
    n: usize,
    g: CouplingStrength,
) -> Result<(WindowIteration, usize)> {
    let step = (hi - lo) / (n - 1) as f64;
    let shift = 0.5 * g.value() * g.value();
    let mut samples = Vec::with_capacity(n);
    let mut best = (0, f64::INFINITY);
    for i in 0..n {
        let alpha = if i + 1 == n { hi } else { lo + step * i as f64 };
        let offset = binding_offset(alpha, g.value())?;
        if offset < best.1 {
            best = (i, offset);
        }
        samples.push((alpha, offset - shift));
    }
    Ok((WindowIteration { lo, hi, samples }, best.0))
}

/// Minimize over alpha by repeated window refinement with the default schedule.
pub fn minimize_attractive(g: CouplingStrength) -> Result<AttractiveMinimum> {
    minimize_attractive_with(g, &WindowSchedule::default())
}

/// Each pass samples the window, then narrows it to the two neighbours of the
/// sampled minimum (clamped at the ends).
pub fn minimize_attractive_with(
    g: CouplingStrength,
    schedule: &WindowSchedule,
) -> Result<AttractiveMinimum> {
    schedule.validate()?;
    let n = schedule.samples;
    let (mut lo, mut hi) = (schedule.initial_lo, schedule.initial_hi);
    let mut trace = MinimizationTrace::default();
    let mut on_edge_before = false;
    loop {
        let (iteration, k) = sample_window(lo, hi, n, g)?;
        let on_edge = k == 0 || k == n - 1;
        if on_edge && on_edge_before {
            return Err(Error::NonUnimodal {
                iteration: trace.iterations.len(),
                lo,
                hi,
            });
        }
        on_edge_before = on_edge;
        let (alpha, epsilon) = iteration.samples[k];
        let next_lo = iteration.samples[k.saturating_sub(1)].0;
        let next_hi = iteration.samples[(k + 1).min(n - 1)].0;
        let done = hi - lo < schedule.min_width;
        trace.iterations.push(iteration);
        if done || trace.iterations.len() >= schedule.max_iterations {
            return Ok(AttractiveMinimum {
                params: TrialParams {
                    alpha,
                    z: g.value(),
                },
                energy: EnergyResult::from_epsilon(epsilon),
                trace,
            });
        }
        lo = next_lo;
        hi = next_hi;
    }
}
