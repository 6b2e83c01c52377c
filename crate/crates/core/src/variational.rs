//! Sign-based dispatch between the two variational families.

use serde::{Deserialize, Serialize};

use crate::attractive::{minimize_attractive, MinimizationTrace, TrialParams};
use crate::error::{Error, Result};
use crate::exact::{CouplingStrength, EnergyResult};
use crate::repulsive::minimize_repulsive;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    /// Cusped Gaussian with window refinement.
    Attractive,
    /// Linear cusp with derivative bisection.
    Repulsive,
}

impl Family {
    /// `g < 0` is attractive; `g = 0` goes to the repulsive family, whose
    /// derivative vanishes exactly at `alpha = 1` there.
    pub fn for_coupling(g: CouplingStrength) -> Self {
        if g.is_attractive() {
            Family::Attractive
        } else {
            Family::Repulsive
        }
    }
}

impl std::str::FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "attractive" => Ok(Family::Attractive),
            "repulsive" => Ok(Family::Repulsive),
            other => Err(Error::InvalidParameter(format!(
                "unknown family `{other}` (expected attractive or repulsive)"
            ))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VariationalResult {
    pub family: Family,
    pub params: TrialParams,
    pub energy: EnergyResult,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trace: Option<MinimizationTrace>,
}

/// Minimize with `family`, or pick it from the sign of `g`.
/// `tol` is the bracket width for the repulsive bisection.
pub fn variational_ground(
    g: CouplingStrength,
    family: Option<Family>,
    tol: f64,
) -> Result<VariationalResult> {
    let family = family.unwrap_or_else(|| Family::for_coupling(g));
    match family {
        Family::Attractive => {
            let m = minimize_attractive(g)?;
            Ok(VariationalResult {
                family,
                params: m.params,
                energy: m.energy,
                trace: Some(m.trace),
            })
        }
        Family::Repulsive => {
            let m = minimize_repulsive(g, tol)?;
            Ok(VariationalResult {
                family,
                params: m.params,
                energy: m.energy,
                trace: None,
            })
        }
    }
}
