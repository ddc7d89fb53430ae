//! Pointwise spin algebra on the rank-2 bundle `V₊`.
//!
//! A self-dual 2-form at a point is written in the basis
//! `ω₁ = dx¹∧dx² + dx³∧dx⁴`, `ω₂ = dx¹∧dx³ − dx²∧dx⁴`,
//! `ω₃ = dx¹∧dx⁴ + dx²∧dx³` (each of norm `√2`), and acts on `V₊` through
//! the traceless anti-Hermitian matrix `ρ(ω) = −2i(a₁σ₁ + a₂σ₂ + a₃σ₃)`.
//! The normative fact is the eigenvalue magnitude: `ρ(ω)² = −2|ω|²·Id`, so
//! the eigenvalues are `±i√2|ω|`. The sign/phase conventions are a choice;
//! the magnitude `√2` is what the Weitzenböck obstruction consumes.
//!
//! Only the algebraic consequences of the spin^c package are implemented —
//! the index lives in [`crate::lattice`], the eigenvalue bound and the
//! scalar-curvature margin live here. Connections and spinor fields are out
//! of scope.

use num_complex::Complex64;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CliffordError {
    #[error("fields have different lengths: {0} vs {1}")]
    ShapeMismatch(usize, usize),
}

/// Coefficients of a self-dual 2-form at a point in the `ω₁, ω₂, ω₃` basis.
/// The pointwise norm satisfies `|ω|² = 2(a₁² + a₂² + a₃²)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SelfDualPoint {
    pub a1: f64,
    pub a2: f64,
    pub a3: f64,
}

impl SelfDualPoint {
    pub fn new(a1: f64, a2: f64, a3: f64) -> Self {
        Self { a1, a2, a3 }
    }

    pub fn zero() -> Self {
        Self::new(0.0, 0.0, 0.0)
    }

    pub fn norm_sq(&self) -> f64 {
        2.0 * (self.a1 * self.a1 + self.a2 * self.a2 + self.a3 * self.a3)
    }

    pub fn norm(&self) -> f64 {
        self.norm_sq().sqrt()
    }

    /// Pointwise inner product of self-dual forms; the basis forms are
    /// orthogonal with `⟨ωₖ, ωₖ⟩ = 2`.
    pub fn inner(&self, other: &Self) -> f64 {
        2.0 * (self.a1 * other.a1 + self.a2 * other.a2 + self.a3 * other.a3)
    }
}

/// 2×2 complex endomorphism of `V₊`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpinorEndomorphism {
    /// Row-major entries.
    pub m: [[Complex64; 2]; 2],
}

impl SpinorEndomorphism {
    pub fn zero() -> Self {
        Self {
            m: [[Complex64::ZERO; 2]; 2],
        }
    }

    pub fn identity() -> Self {
        Self {
            m: [
                [Complex64::ONE, Complex64::ZERO],
                [Complex64::ZERO, Complex64::ONE],
            ],
        }
    }

    pub fn trace(&self) -> Complex64 {
        self.m[0][0] + self.m[1][1]
    }

    pub fn det(&self) -> Complex64 {
        self.m[0][0] * self.m[1][1] - self.m[0][1] * self.m[1][0]
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for i in 0..2 {
            for j in 0..2 {
                out.m[i][j] = self.m[i][0] * other.m[0][j] + self.m[i][1] * other.m[1][j];
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = *self;
        for i in 0..2 {
            for j in 0..2 {
                out.m[i][j] += other.m[i][j];
            }
        }
        out
    }

    pub fn scale(&self, factor: Complex64) -> Self {
        let mut out = *self;
        for row in &mut out.m {
            for e in row {
                *e *= factor;
            }
        }
        out
    }

    pub fn adjoint(&self) -> Self {
        Self {
            m: [
                [self.m[0][0].conj(), self.m[1][0].conj()],
                [self.m[0][1].conj(), self.m[1][1].conj()],
            ],
        }
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.m
            .iter()
            .flatten()
            .map(|e| e.norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    /// Eigenvalues by the closed 2×2 formula `λ = tr/2 ± √(tr²/4 − det)`.
    pub fn eigenvalues(&self) -> [Complex64; 2] {
        let half_trace = self.trace() / 2.0;
        let disc = (half_trace * half_trace - self.det()).sqrt();
        [half_trace + disc, half_trace - disc]
    }
}

/// Clifford action of a self-dual form on `V₊`:
/// `ρ(ω) = −2i(a₁σ₁ + a₂σ₂ + a₃σ₃)` with the standard Pauli generators.
///
/// The contract is `ρ(ω)² = −2|ω|²·Id`, hence eigenvalues `±i√2|ω|`; for an
/// imaginary-valued curvature form `F⁺ = −2πi·φ⁺` the Hermitian operator
/// `ρ/2` then has eigenvalues `±2π√2·|φ⁺|/2`, which is where the margin in
/// [`weitzenboeck_margin`] comes from.
pub fn clifford_action(omega: SelfDualPoint) -> SpinorEndomorphism {
    let i = Complex64::I;
    let (a1, a2, a3) = (omega.a1, omega.a2, omega.a3);
    // a₁σ₁ + a₂σ₂ + a₃σ₃ = [[a₃, a₁ − i a₂], [a₁ + i a₂, −a₃]].
    let pauli_sum = SpinorEndomorphism {
        m: [
            [Complex64::new(a3, 0.0), Complex64::new(a1, 0.0) - i * a2],
            [Complex64::new(a1, 0.0) + i * a2, Complex64::new(-a3, 0.0)],
        ],
    };
    pauli_sum.scale(-2.0 * i)
}

/// Frobenius norm of `ρ(ω)ρ(ω′) + ρ(ω′)ρ(ω) + 4⟨ω,ω′⟩·Id`, which vanishes
/// identically: the representation satisfies the Clifford anticommutation
/// relation with the `|ωₖ|² = 2` normalization.
pub fn anticommutator_check(omega: SelfDualPoint, omega_prime: SelfDualPoint) -> f64 {
    let r = clifford_action(omega);
    let rp = clifford_action(omega_prime);
    let anti = r.mul(&rp).add(&rp.mul(&r));
    let expected =
        SpinorEndomorphism::identity().scale(Complex64::new(4.0 * omega.inner(&omega_prime), 0.0));
    anti.add(&expected).frobenius_norm()
}

/// Pointwise Weitzenböck margin `m(x) = s(x) − 4π√2·|φ⁺|(x)` and its global
/// minimum.
///
/// A strictly positive minimum certifies that the scalar curvature dominates
/// the Clifford eigenvalue bound everywhere, so the Weitzenböck identity
/// leaves no room for a harmonic spinor.
pub fn weitzenboeck_margin(
    scalar_curvature: &[f64],
    phi_plus_norm: &[f64],
) -> Result<(Vec<f64>, f64), CliffordError> {
    if scalar_curvature.len() != phi_plus_norm.len() {
        return Err(CliffordError::ShapeMismatch(
            scalar_curvature.len(),
            phi_plus_norm.len(),
        ));
    }
    let factor = 4.0 * std::f64::consts::PI * 2.0_f64.sqrt();
    let margin: Vec<f64> = scalar_curvature
        .iter()
        .zip(phi_plus_norm)
        .map(|(&s, &p)| s - factor * p)
        .collect();
    let min = margin.iter().copied().fold(f64::INFINITY, f64::min);
    Ok((margin, min))
}
