use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Argument fell within the pole guard of a non-positive integer.
    #[error("gamma pole: x = {x} is within {guard:e} of a non-positive integer")]
    GammaPole { x: f64, guard: f64 },

    #[error("non-finite {what}: {value}")]
    NonFinite { what: &'static str, value: f64 },

    #[error("alpha must be positive, got {0}")]
    NonPositiveAlpha(f64),

    /// No sign change in the bracket. For the built-in brackets this points
    /// at a defect in the special functions rather than at the caller.
    #[error("no sign change in [{lo}, {hi}] ({context})")]
    BracketFailure {
        lo: f64,
        hi: f64,
        context: &'static str,
    },

    #[error("window minimum sat on a boundary twice in a row (iteration {iteration}, window [{lo}, {hi}])")]
    NonUnimodal { iteration: usize, lo: f64, hi: f64 },

    #[error("quadrature on [{a}, {b}] exceeded {segments} segments (error estimate {estimate:e})")]
    QuadratureBudget {
        a: f64,
        b: f64,
        segments: usize,
        estimate: f64,
    },

    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    #[error("asymptote needs g < 0 with |g| >= 1e-6, got {0}")]
    AsymptoteDomain(f64),

    #[error("unknown figure id `{0}`")]
    UnknownFigure(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub(crate) fn ensure_finite(what: &'static str, value: f64) -> Result<f64> {
    if value.is_finite() {
        Ok(value)
    } else {
        Err(Error::NonFinite { what, value })
    }
}

pub(crate) fn ensure_alpha(alpha: f64) -> Result<f64> {
    ensure_finite("alpha", alpha)?;
    if alpha > 0.0 {
        Ok(alpha)
    } else {
        Err(Error::NonPositiveAlpha(alpha))
    }
}
