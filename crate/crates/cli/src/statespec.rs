//! JSON state specifications accepted by `eval` and emitted in reports.

use crate::error::CliError;
use crate::render::round_sig12;
use qubit_geometry::linalg::ComplexMatrix;
use qubit_geometry::spinops::Sector;
use qubit_geometry::states::{
    density_from_pure, ensemble_density, pure_state, DensityMatrix, Ensemble, EnsembleTerm,
    PureStateParams,
};
use qubit_geometry::Complex64;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SectorSpec {
    S0,
    S1,
}

impl From<SectorSpec> for Sector {
    fn from(spec: SectorSpec) -> Sector {
        match spec {
            SectorSpec::S0 => Sector::S0,
            SectorSpec::S1 => Sector::S1,
        }
    }
}

impl From<Sector> for SectorSpec {
    fn from(sector: Sector) -> SectorSpec {
        match sector {
            Sector::S0 => SectorSpec::S0,
            Sector::S1 => SectorSpec::S1,
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermSpec {
    pub weight: f64,
    pub sector: SectorSpec,
    pub theta: f64,
    pub phi: f64,
}

/// The JSON state description: a parametrized pure state, a weighted
/// ensemble, or a raw 4×4 density matrix as 32 row-major re/im interleaved
/// reals.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum StateSpec {
    Pure {
        sector: SectorSpec,
        theta: f64,
        phi: f64,
    },
    Ensemble {
        terms: Vec<TermSpec>,
    },
    Matrix {
        entries: Vec<f64>,
    },
}

impl StateSpec {
    pub fn parse(raw: &str) -> Result<Self, CliError> {
        serde_json::from_str(raw).map_err(|e| CliError::Input(format!("malformed state spec: {e}")))
    }

    /// Builds the density matrix, converting angles from degrees first when
    /// asked. Any contract violation is an input error.
    pub fn to_density(&self, degrees: bool) -> Result<DensityMatrix, CliError> {
        let angle = |x: f64| if degrees { x.to_radians() } else { x };
        match self {
            StateSpec::Pure { sector, theta, phi } => {
                let params = PureStateParams::new((*sector).into(), angle(*theta), angle(*phi))?;
                Ok(density_from_pure(&pure_state(&params)))
            }
            StateSpec::Ensemble { terms } => {
                let built: Result<Vec<EnsembleTerm>, CliError> = terms
                    .iter()
                    .map(|t| {
                        let params =
                            PureStateParams::new(t.sector.into(), angle(t.theta), angle(t.phi))?;
                        Ok(EnsembleTerm::new(t.weight, params)?)
                    })
                    .collect();
                Ok(ensemble_density(&Ensemble::new(built?)?))
            }
            StateSpec::Matrix { entries } => {
                if entries.len() != 32 {
                    return Err(CliError::Input(format!(
                        "matrix kind needs 32 reals (row-major re/im interleaved), got {}",
                        entries.len()
                    )));
                }
                let complexes: Vec<Complex64> = entries
                    .chunks_exact(2)
                    .map(|pair| Complex64::new(pair[0], pair[1]))
                    .collect();
                let matrix = ComplexMatrix::from_entries(4, complexes)?;
                Ok(DensityMatrix::from_matrix(matrix)?)
            }
        }
    }

    /// Records an ensemble in spec form, with angles and weights rounded to
    /// the output precision.
    pub fn from_ensemble(ensemble: &Ensemble) -> StateSpec {
        StateSpec::Ensemble {
            terms: ensemble
                .terms()
                .iter()
                .map(|t| TermSpec {
                    weight: round_sig12(t.weight()),
                    sector: t.params().sector().into(),
                    theta: round_sig12(t.params().theta()),
                    phi: round_sig12(t.params().phi()),
                })
                .collect(),
        }
    }
}
