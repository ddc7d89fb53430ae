//! JSON config for the `spectrum` subcommand.
//!
//! ```json
//! {
//!   "n": 16,
//!   "u": "1 + 0.2*cos(2*pi*x1)",
//!   "f": "0",
//!   "solver": { "tol": 1e-10, "zero_band_factor": 10.0 }
//! }
//! ```
//!
//! `u` and `f` use the grammar in [`super::expr`]; `f` is interpreted in the
//! flat gauge (weight −2). The `solver` block is optional and falls back to
//! the library defaults field by field.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::expr::{Expr, ExprError};
use crate::confgrid::{ConformalGrid, GridError, WeightedField};
use crate::spectrum::SolverConfig;

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("cannot read config {path}: {source}")]
    Read {
        path: String,
        source: std::io::Error,
    },
    #[error("config json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("config field `{field}`: {source}")]
    Expr {
        field: &'static str,
        source: ExprError,
    },
    #[error("config field `u`: {0}")]
    Grid(#[from] GridError),
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SpectrumConfig {
    /// Nodes per axis.
    pub n: usize,
    /// Conformal factor expression; must be positive on the grid.
    #[serde(default = "default_one")]
    pub u: String,
    /// Weight −2 perturbation expression in the flat gauge.
    #[serde(default = "default_zero")]
    pub f: String,
    #[serde(default)]
    pub solver: SolverConfig,
}

fn default_one() -> String {
    "1".to_string()
}

fn default_zero() -> String {
    "0".to_string()
}

impl SpectrumConfig {
    pub fn from_json(text: &str) -> Result<Self, ConfigError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn from_file(path: &str) -> Result<Self, ConfigError> {
        let text = std::fs::read_to_string(path).map_err(|source| ConfigError::Read {
            path: path.to_string(),
            source,
        })?;
        Self::from_json(&text)
    }

    /// Materializes the grid and the perturbation field.
    pub fn build(&self) -> Result<(ConformalGrid, WeightedField), ConfigError> {
        let u_expr =
            Expr::parse(&self.u).map_err(|source| ConfigError::Expr { field: "u", source })?;
        let f_expr =
            Expr::parse(&self.f).map_err(|source| ConfigError::Expr { field: "f", source })?;
        let grid = ConformalGrid::new(self.n, u_expr.sample(self.n))?;
        let f = WeightedField::new(self.n, -2, f_expr.sample(self.n))?;
        Ok((grid, f))
    }
}
