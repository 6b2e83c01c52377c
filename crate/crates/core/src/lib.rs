//! Harmonic oscillator with a central delta potential, in reduced units:
//! `H = -1/2 d^2/dy^2 + y^2/2 + g delta(y)`.
//!
//! Exact even-parity levels come from a Gamma-function root condition;
//! variational estimates use cusped Gaussian trial functions; the `oracle`
//! module checks both independently.

#![allow(clippy::excessive_precision)]

pub mod attractive;
pub mod error;
pub mod exact;
pub mod excited;
pub mod oracle;
pub mod quadrature;
pub mod report;
pub mod repulsive;
pub mod specfn;
pub mod variational;

pub use error::{Error, Result};
pub use exact::{CouplingStrength, EnergyResult, ExactSolver};
pub use specfn::GammaBackend;
pub use variational::{variational_ground, Family, VariationalResult};
