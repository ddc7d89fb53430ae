//! The perturbed Yamabe Laplacian `◇ = □ − f` and its lowest eigenvalue.
//!
//! For a metric `g = u²δ` and a weight −2 perturbation `f`, the operator
//! transforms by `◇_g φ = u⁻³·◇_δ(uφ)`. That identity *is* the assembly here:
//! the discrete curved operator is defined as `u⁻³(6Δ_δ(uφ) − f_δ·uφ)`, so
//! conformal covariance holds to rounding by construction, and the direct
//! stencil expansion ([`PerturbedOperator::apply_independent`]) serves as an
//! independent consistency check converging at second order.
//!
//! Perturbations are always handed over in the flat gauge: an `f` of weight
//! −2 stores its values relative to `δ`, and the operator uses `f_g = u⁻²f_δ`
//! internally. Replacing `u` by `u·v` with the same flat-gauge `f` moves
//! within one conformal problem, which is what the trichotomy invariance
//! statements quantify.
//!
//! One torus-specific caveat: every conformal class modeled here is that of
//! the scalar-flat torus, and the torus carries no positive-scalar-curvature
//! metric, so the positive branch of the trichotomy can only be reached
//! through the perturbation — it requires `f < 0` somewhere. All three
//! branches are still exercised (constant `f` of either sign suffices).

mod descent;
mod solve;

pub use descent::{
    default_descent_step, yamabe_constant_estimate, yamabe_descent, yamabe_quotient, DescentResult,
};
pub use solve::lowest_eigenpair;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::confgrid::{self, ConformalGrid, GridError, WeightedField};
use crate::numeric;

#[derive(Debug, Error)]
pub enum SpectrumError {
    #[error("perturbation must have conformal weight -2, got {0}")]
    WrongWeight(i32),
    #[error(transparent)]
    Grid(#[from] GridError),
    #[error("field has {got} values, operator expects {expected}")]
    SizeMismatch { expected: usize, got: usize },
    #[error("eigensolver did not reach tolerance {tol} in {iterations} iterations (residual {residual})")]
    NotConverged {
        tol: f64,
        iterations: usize,
        residual: f64,
    },
    #[error("inner conjugate-gradient solve stalled at relative residual {residual}")]
    CgStalled { residual: f64 },
    #[error("ground state has a non-positive node (min {min}); the minimum principle forbids this, so the discretization is too coarse or the setup is inconsistent")]
    GroundStateNotPositive { min: f64 },
    #[error("trial function must be positive; node {index} has {value}")]
    NonPositiveTrial { index: usize, value: f64 },
    #[error("descent could not restore positivity after {halvings} step halvings")]
    DescentPositivityLost { halvings: usize },
    #[error("solver tolerance must be positive, got {0}")]
    NonPositiveTolerance(f64),
}

/// Solver knobs; the defaults match the verification suites.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SolverConfig {
    /// Eigen-residual target `‖◇ψ − λψ‖_g / ‖ψ‖_g`.
    #[serde(default = "default_tol")]
    pub tol: f64,
    /// Cap on inverse-power iterations.
    #[serde(default = "default_max_power_iterations")]
    pub max_power_iterations: usize,
    /// Relative residual target for the inner conjugate-gradient solves.
    #[serde(default = "default_cg_tol")]
    pub cg_tol: f64,
    /// Cap on conjugate-gradient iterations per solve.
    #[serde(default = "default_max_cg_iterations")]
    pub max_cg_iterations: usize,
    /// The trichotomy zero band is `zero_band_factor · h² · (1 + |λ|)`:
    /// the continuum trichotomy is exact, so the band only needs to absorb
    /// the scheme's own O(h²) error.
    #[serde(default = "default_zero_band_factor")]
    pub zero_band_factor: f64,
}

fn default_tol() -> f64 {
    1e-10
}
fn default_max_power_iterations() -> usize {
    200
}
fn default_cg_tol() -> f64 {
    1e-12
}
fn default_max_cg_iterations() -> usize {
    100_000
}
fn default_zero_band_factor() -> f64 {
    10.0
}

impl Default for SolverConfig {
    fn default() -> Self {
        Self {
            tol: default_tol(),
            max_power_iterations: default_max_power_iterations(),
            cg_tol: default_cg_tol(),
            max_cg_iterations: default_max_cg_iterations(),
            zero_band_factor: default_zero_band_factor(),
        }
    }
}

/// Assembled `◇_g` for `g = u²δ`, acting on nodal functions and self-adjoint
/// in the `L²(g)` inner product with nodal measure `u⁴h⁴`.
#[derive(Debug, Clone)]
pub struct PerturbedOperator {
    grid: ConformalGrid,
    /// Perturbation values in the flat gauge.
    f_flat: Vec<f64>,
    /// `u⁻³` per node.
    inv_u3: Vec<f64>,
    /// Nodal `L²(g)` measure `u⁴h⁴`.
    mass: Vec<f64>,
}

impl PerturbedOperator {
    /// Builds the discrete `◇_g = 6Δ_g + s_g − f_g` through the covariance
    /// law; `f` must carry weight −2 and live on the same grid.
    ///
    /// `f` is consumed nodewise with no smoothing. That is exactly right for
    /// Lipschitz data like `|ω|`; for merely Hölder perturbations the scheme
    /// still converges but the order can drop below 2.
    pub fn assemble(grid: &ConformalGrid, f: &WeightedField) -> Result<Self, SpectrumError> {
        if f.weight() != -2 {
            return Err(SpectrumError::WrongWeight(f.weight()));
        }
        if f.n() != grid.n() {
            return Err(SpectrumError::SizeMismatch {
                expected: grid.node_count(),
                got: f.values().len(),
            });
        }
        let inv_u3 = grid
            .conformal_factor()
            .iter()
            .map(|&ui| 1.0 / (ui * ui * ui))
            .collect();
        Ok(Self {
            grid: grid.clone(),
            f_flat: f.values().to_vec(),
            inv_u3,
            mass: grid.volume_weights(),
        })
    }

    /// Unperturbed operator `□_g` (i.e. `f ≡ 0`).
    pub fn unperturbed(grid: &ConformalGrid) -> Self {
        let f = WeightedField::constant(grid.n(), -2, 0.0);
        Self::assemble(grid, &f).expect("zero perturbation is valid")
    }

    pub fn grid(&self) -> &ConformalGrid {
        &self.grid
    }

    pub fn node_count(&self) -> usize {
        self.grid.node_count()
    }

    /// Nodal `L²(g)` weights `u⁴h⁴`.
    pub fn mass(&self) -> &[f64] {
        &self.mass
    }

    pub fn perturbation_flat(&self) -> &[f64] {
        &self.f_flat
    }

    /// `◇_g φ` by the covariance route `u⁻³(6Δ_δ(uφ) − f_δ·uφ)`.
    /// `scratch` and `out` must have node length.
    pub fn apply_into(&self, phi: &[f64], scratch: &mut [f64], out: &mut [f64]) {
        let u = self.grid.conformal_factor();
        for i in 0..phi.len() {
            scratch[i] = u[i] * phi[i];
        }
        confgrid::laplacian_flat(self.grid.n(), self.grid.spacing(), scratch, out);
        for i in 0..phi.len() {
            out[i] = self.inv_u3[i] * (6.0 * out[i] - self.f_flat[i] * scratch[i]);
        }
    }

    pub fn apply(&self, phi: &[f64]) -> Result<Vec<f64>, SpectrumError> {
        if phi.len() != self.node_count() {
            return Err(SpectrumError::SizeMismatch {
                expected: self.node_count(),
                got: phi.len(),
            });
        }
        let mut scratch = vec![0.0; phi.len()];
        let mut out = vec![0.0; phi.len()];
        self.apply_into(phi, &mut scratch, &mut out);
        Ok(out)
    }

    /// `◇_g φ` by the direct stencil expansion
    /// `6[u⁻²Δφ − 2u⁻³∇u·∇φ] + s_g φ − u⁻²f_δ φ` with central differences
    /// and `s_g = u⁻³·6Δu`.
    ///
    /// This route never feeds the solver; it exists to check the covariance
    /// construction against an independent discretization of the same
    /// operator (the two agree at second order).
    pub fn apply_independent(&self, phi: &[f64]) -> Result<Vec<f64>, SpectrumError> {
        if phi.len() != self.node_count() {
            return Err(SpectrumError::SizeMismatch {
                expected: self.node_count(),
                got: phi.len(),
            });
        }
        let n = self.grid.n();
        let h = self.grid.spacing();
        let u = self.grid.conformal_factor();
        let len = phi.len();

        let mut lap_phi = vec![0.0; len];
        confgrid::laplacian_flat(n, h, phi, &mut lap_phi);
        let mut lap_u = vec![0.0; len];
        confgrid::laplacian_flat(n, h, u, &mut lap_u);

        let mut grad_dot = vec![0.0; len];
        let mut du = vec![0.0; len];
        let mut dphi = vec![0.0; len];
        for axis in 0..4 {
            confgrid::gradient_axis(n, h, axis, u, &mut du);
            confgrid::gradient_axis(n, h, axis, phi, &mut dphi);
            for i in 0..len {
                grad_dot[i] += du[i] * dphi[i];
            }
        }

        let mut out = vec![0.0; len];
        for i in 0..len {
            let ui = u[i];
            let inv_u2 = 1.0 / (ui * ui);
            let inv_u3 = self.inv_u3[i];
            let laplace_curved = inv_u2 * lap_phi[i] - 2.0 * inv_u3 * grad_dot[i];
            let s_curved = 6.0 * inv_u3 * lap_u[i];
            out[i] = 6.0 * laplace_curved + s_curved * phi[i] - inv_u2 * self.f_flat[i] * phi[i];
        }
        Ok(out)
    }

    /// `L²(g)` inner product `Σ a·b·u⁴h⁴`.
    pub fn inner(&self, a: &[f64], b: &[f64]) -> f64 {
        numeric::weighted_dot(a, b, &self.mass)
    }

    /// `L²(g)` norm.
    pub fn norm(&self, a: &[f64]) -> f64 {
        self.inner(a, a).sqrt()
    }
}

/// Sign branch of the conformally normalized modified scalar curvature.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum TrichotomySign {
    #[serde(rename = "+")]
    Positive,
    #[serde(rename = "0")]
    Zero,
    #[serde(rename = "-")]
    Negative,
}

impl std::fmt::Display for TrichotomySign {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            TrichotomySign::Positive => "+",
            TrichotomySign::Zero => "0",
            TrichotomySign::Negative => "-",
        };
        write!(f, "{s}")
    }
}

/// Lowest eigenpair of `◇_g`: eigenvalue, `L²(g)`-normalized positive
/// eigenfunction, and the final residual `‖◇ψ − λψ‖_g`.
#[derive(Debug, Clone)]
pub struct SpectralResult {
    pub lambda: f64,
    pub eigenfunction: Vec<f64>,
    pub residual: f64,
}

/// Everything produced by the conformal normalization of `(g, f)`.
#[derive(Debug, Clone)]
pub struct ConformalNormalization {
    /// The rescaled grid with conformal factor `u·ψ`.
    pub grid: ConformalGrid,
    pub sign: TrichotomySign,
    pub spectral: SpectralResult,
    /// Modified scalar curvature of the normalized metric, `σ = ψ⁻²·λ`.
    pub modified_scalar: WeightedField,
}

fn classify(lambda: f64, spacing: f64, zero_band_factor: f64) -> TrichotomySign {
    let band = zero_band_factor * spacing * spacing * (1.0 + lambda.abs());
    if lambda.abs() < band {
        TrichotomySign::Zero
    } else if lambda > 0.0 {
        TrichotomySign::Positive
    } else {
        TrichotomySign::Negative
    }
}

/// Rescales the metric by the ground state of `◇_g`: for `ĝ = ψ²g` the
/// modified scalar curvature becomes `σ = ψ⁻²λ`, which is everywhere
/// positive, everywhere negative, or identically zero according to the sign
/// of the lowest eigenvalue (read through the `O(h²)` zero band).
pub fn conformal_normalize(
    grid: &ConformalGrid,
    f: &WeightedField,
    config: &SolverConfig,
) -> Result<ConformalNormalization, SpectrumError> {
    let op = PerturbedOperator::assemble(grid, f)?;
    let spectral = lowest_eigenpair(&op, config)?;
    let sign = classify(spectral.lambda, grid.spacing(), config.zero_band_factor);
    let rescaled = grid.rescaled(&spectral.eigenfunction)?;
    let sigma: Vec<f64> = spectral
        .eigenfunction
        .iter()
        .map(|&p| spectral.lambda / (p * p))
        .collect();
    let modified_scalar = WeightedField::new(grid.n(), 0, sigma)?;
    Ok(ConformalNormalization {
        grid: rescaled,
        sign,
        spectral,
        modified_scalar,
    })
}

/// Just the sign branch. The sign is a conformal invariant: recomputing
/// after `u ↦ u·v` (same flat-gauge `f`) must give the same answer.
pub fn trichotomy_sign(
    grid: &ConformalGrid,
    f: &WeightedField,
    config: &SolverConfig,
) -> Result<TrichotomySign, SpectrumError> {
    let op = PerturbedOperator::assemble(grid, f)?;
    let spectral = lowest_eigenpair(&op, config)?;
    Ok(classify(
        spectral.lambda,
        grid.spacing(),
        config.zero_band_factor,
    ))
}
