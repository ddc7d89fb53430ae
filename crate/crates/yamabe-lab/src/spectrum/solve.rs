//! Lowest eigenpair by shifted inverse-power iteration.
//!
//! The eigenproblem `◇ψ = λψ` in `L²(g)` is the generalized symmetric
//! problem `Kψ = λMψ` with `M = diag(u⁴h⁴)` and `K = M·◇` (symmetric because
//! `◇` is self-adjoint in the `M`-inner product). The energy identity
//! `⟨◇φ,φ⟩_g = 6⟨Δ(uφ),uφ⟩_δ − ⟨f·uφ,uφ⟩_δ` gives the a-priori lower bound
//! `λ ≥ −max(f⁺)·max(u⁻²)`, so a shift `μ` one unit below it makes `K − μM`
//! positive definite and plain conjugate gradients (Jacobi preconditioned)
//! can run the inner solves. Only the lowest pair is ever needed, and the
//! spectral gap of the Yamabe operator is large compared to `λ − μ`, so a
//! handful of outer iterations suffices.

use super::{PerturbedOperator, SolverConfig, SpectralResult, SpectrumError};
use crate::numeric;

/// Workspace for the matrix-free shifted operator `A = K − μM`.
struct ShiftedSystem<'a> {
    op: &'a PerturbedOperator,
    shift: f64,
    scratch: Vec<f64>,
    diamond: Vec<f64>,
}

impl<'a> ShiftedSystem<'a> {
    fn new(op: &'a PerturbedOperator, shift: f64) -> Self {
        let len = op.node_count();
        Self {
            op,
            shift,
            scratch: vec![0.0; len],
            diamond: vec![0.0; len],
        }
    }

    /// `out = M·(◇x − μx)`.
    fn apply(&mut self, x: &[f64], out: &mut [f64]) {
        self.op.apply_into(x, &mut self.scratch, &mut self.diamond);
        let mass = self.op.mass();
        for i in 0..x.len() {
            out[i] = mass[i] * (self.diamond[i] - self.shift * x[i]);
        }
    }

    /// Jacobi diagonal of `A`: `u²h⁴(48/h² − f) − μ·u⁴h⁴` per node.
    fn jacobi_diagonal(&self) -> Vec<f64> {
        let grid = self.op.grid();
        let h = grid.spacing();
        let h4 = h.powi(4);
        let u = grid.conformal_factor();
        let f = self.op.perturbation_flat();
        let mass = self.op.mass();
        (0..u.len())
            .map(|i| {
                let d = u[i] * u[i] * h4 * (48.0 / (h * h) - f[i]) - self.shift * mass[i];
                if d > 0.0 {
                    d
                } else {
                    mass[i]
                }
            })
            .collect()
    }
}

/// Preconditioned conjugate gradients on `A z = b`; `z` enters as the warm
/// start and leaves as the solution.
fn pcg(
    system: &mut ShiftedSystem,
    b: &[f64],
    z: &mut [f64],
    diag: &[f64],
    rel_tol: f64,
    max_iterations: usize,
) -> Result<(), SpectrumError> {
    let len = b.len();
    let mut r = vec![0.0; len];
    let mut ap = vec![0.0; len];

    system.apply(z, &mut r);
    for i in 0..len {
        r[i] = b[i] - r[i];
    }
    let b_norm = norm2(b).max(f64::MIN_POSITIVE);
    let mut precond: Vec<f64> = (0..len).map(|i| r[i] / diag[i]).collect();
    let mut p = precond.clone();
    let mut rz: f64 = r.iter().zip(&precond).map(|(a, b)| a * b).sum();

    for _ in 0..max_iterations {
        if norm2(&r) <= rel_tol * b_norm {
            return Ok(());
        }
        system.apply(&p, &mut ap);
        let p_ap: f64 = p.iter().zip(&ap).map(|(a, b)| a * b).sum();
        if p_ap.is_nan() || p_ap <= 0.0 {
            // The shifted system is positive definite by construction; a
            // non-positive curvature term means numbers degenerated.
            return Err(SpectrumError::CgStalled {
                residual: norm2(&r) / b_norm,
            });
        }
        let alpha = rz / p_ap;
        for i in 0..len {
            z[i] += alpha * p[i];
            r[i] -= alpha * ap[i];
        }
        for i in 0..len {
            precond[i] = r[i] / diag[i];
        }
        let rz_next: f64 = r.iter().zip(&precond).map(|(a, b)| a * b).sum();
        let beta = rz_next / rz;
        rz = rz_next;
        for i in 0..len {
            p[i] = precond[i] + beta * p[i];
        }
    }
    if norm2(&r) <= rel_tol * b_norm {
        Ok(())
    } else {
        Err(SpectrumError::CgStalled {
            residual: norm2(&r) / b_norm,
        })
    }
}

fn norm2(v: &[f64]) -> f64 {
    v.iter().map(|x| x * x).sum::<f64>().sqrt()
}

/// A-priori lower bound on the spectrum: `λ ≥ −max(f⁺)·max(u⁻²)`.
fn spectral_lower_bound(op: &PerturbedOperator) -> f64 {
    let max_f_plus = op
        .perturbation_flat()
        .iter()
        .fold(0.0_f64, |m, &x| m.max(x));
    if max_f_plus == 0.0 {
        return 0.0;
    }
    let max_inv_u2 = op
        .grid()
        .conformal_factor()
        .iter()
        .fold(0.0_f64, |m, &u| m.max(1.0 / (u * u)));
    -max_f_plus * max_inv_u2
}

/// Lowest eigenpair of `◇_g`, with the eigenfunction `L²(g)`-normalized,
/// sign-fixed to positive mean, and asserted positive at every node (a
/// sign-changing ground state violates the minimum principle and is an
/// error, not something to be patched).
pub fn lowest_eigenpair(
    op: &PerturbedOperator,
    config: &SolverConfig,
) -> Result<SpectralResult, SpectrumError> {
    if config.tol.is_nan() || config.tol <= 0.0 {
        return Err(SpectrumError::NonPositiveTolerance(config.tol));
    }
    let len = op.node_count();
    let shift = spectral_lower_bound(op) - 1.0;
    let mut system = ShiftedSystem::new(op, shift);
    let diag = system.jacobi_diagonal();

    // The ground state is positive, so the constant function always has a
    // non-trivial component along it; it is also deterministic.
    let mut x = vec![1.0; len];
    let norm = numeric::weighted_dot(&x, &x, op.mass()).sqrt();
    for v in &mut x {
        *v /= norm;
    }

    let mut z = x.clone();
    let mut b = vec![0.0; len];
    let mut diamond = vec![0.0; len];
    let mut scratch = vec![0.0; len];
    let mut lambda = 0.0;
    let mut residual = f64::INFINITY;

    let mut iterations = 0;
    for iter in 0..config.max_power_iterations {
        iterations = iter + 1;
        let mass = op.mass();
        for i in 0..len {
            b[i] = mass[i] * x[i];
        }
        pcg(
            &mut system,
            &b,
            &mut z,
            &diag,
            config.cg_tol,
            config.max_cg_iterations,
        )?;
        let z_norm = numeric::weighted_dot(&z, &z, mass).sqrt();
        for i in 0..len {
            x[i] = z[i] / z_norm;
        }

        op.apply_into(&x, &mut scratch, &mut diamond);
        lambda = numeric::weighted_dot(&x, &diamond, mass);
        let mut acc = numeric::CompensatedSum::new();
        for i in 0..len {
            let r = diamond[i] - lambda * x[i];
            acc.add(mass[i] * r * r);
        }
        residual = acc.value().max(0.0).sqrt();
        if residual < config.tol {
            break;
        }
    }

    if residual >= config.tol {
        return Err(SpectrumError::NotConverged {
            tol: config.tol,
            iterations,
            residual,
        });
    }

    // Global sign choice: positive mean in L²(g).
    let mean = numeric::compensated_sum(x.iter().zip(op.mass()).map(|(&xi, &mi)| xi * mi));
    if mean < 0.0 {
        for v in &mut x {
            *v = -*v;
        }
    }
    let min = x.iter().copied().fold(f64::INFINITY, f64::min);
    if min.is_nan() || min <= 0.0 {
        return Err(SpectrumError::GroundStateNotPositive { min });
    }

    Ok(SpectralResult {
        lambda,
        eigenfunction: x,
        residual,
    })
}
