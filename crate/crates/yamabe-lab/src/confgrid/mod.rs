//! Conformally flat geometry on the periodic 4-torus.
//!
//! The background is the unit coordinate torus (period 1 per axis) with the
//! flat metric `δ`, discretized on an `N⁴` lattice with spacing `h = 1/N` and
//! second-order central differences. A [`ConformalGrid`] carries a positive
//! conformal factor `u`, representing the metric `g = u²·δ`; everything
//! curved is reached through conformal transformation laws rather than
//! meshing, e.g. the scalar curvature of `u²δ` is `u⁻³·(6Δu)`.
//!
//! Conventions, fixed once and used everywhere:
//!
//! * node `(i₁,i₂,i₃,i₄)` sits at `xₖ = iₖ·h`, and linear storage runs with
//!   `x₄` fastest: `idx = ((i₁·N + i₂)·N + i₃)·N + i₄`;
//! * `Δ` is the positive (geometer's) Laplacian, so plane waves have symbol
//!   `+|2πk|²` up to discretization;
//! * the orientation is `dx¹∧dx²∧dx³∧dx⁴ > 0`; reversing it swaps the
//!   self-dual and anti-self-dual bundles.

mod forms;
mod io;

pub use forms::{harmonic_two_form, wedge_integral_constant, TwoFormField, COMPONENT_LABELS};
pub use io::FieldIoError;

use thiserror::Error;

use crate::numeric;

#[derive(Debug, Error, PartialEq)]
pub enum GridError {
    #[error("grid size must be at least 2, got {0}")]
    TooSmall(usize),
    #[error("field has {got} values, grid expects {expected}")]
    SizeMismatch { expected: usize, got: usize },
    #[error("conformal factor must be positive everywhere; node {index} has {value}")]
    NonPositiveFactor { index: usize, value: f64 },
    #[error("rescaling factor must be positive everywhere; node {index} has {value}")]
    NonPositiveRescale { index: usize, value: f64 },
    #[error("grids have different sizes: {0} vs {1}")]
    GridSizeMismatch(usize, usize),
}

/// Periodic `N⁴` grid over the unit 4-torus carrying a positive conformal
/// factor `u`, i.e. the metric `g = u²·δ`.
#[derive(Debug, Clone)]
pub struct ConformalGrid {
    n: usize,
    spacing: f64,
    u: Vec<f64>,
}

impl ConformalGrid {
    /// Flat grid, `u ≡ 1`.
    pub fn flat(n: usize) -> Self {
        Self::new(n, vec![1.0; n * n * n * n]).expect("constant 1 is positive")
    }

    pub fn new(n: usize, u: Vec<f64>) -> Result<Self, GridError> {
        if n < 2 {
            return Err(GridError::TooSmall(n));
        }
        let expected = n * n * n * n;
        if u.len() != expected {
            return Err(GridError::SizeMismatch {
                expected,
                got: u.len(),
            });
        }
        for (index, &value) in u.iter().enumerate() {
            if !(value.is_finite() && value > 0.0) {
                return Err(GridError::NonPositiveFactor { index, value });
            }
        }
        Ok(Self {
            n,
            spacing: 1.0 / n as f64,
            u,
        })
    }

    /// Grid with `u` sampled from a function of the torus coordinates.
    pub fn from_fn(n: usize, f: impl Fn([f64; 4]) -> f64) -> Result<Self, GridError> {
        if n < 2 {
            return Err(GridError::TooSmall(n));
        }
        let u = sample(n, f);
        Self::new(n, u)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn spacing(&self) -> f64 {
        self.spacing
    }

    pub fn node_count(&self) -> usize {
        self.u.len()
    }

    pub fn conformal_factor(&self) -> &[f64] {
        &self.u
    }

    #[inline]
    pub fn index(&self, coords: [usize; 4]) -> usize {
        ((coords[0] * self.n + coords[1]) * self.n + coords[2]) * self.n + coords[3]
    }

    /// Torus coordinates of the node with the given linear index.
    pub fn coords(&self, index: usize) -> [f64; 4] {
        let n = self.n;
        let i4 = index % n;
        let i3 = (index / n) % n;
        let i2 = (index / (n * n)) % n;
        let i1 = index / (n * n * n);
        [
            i1 as f64 * self.spacing,
            i2 as f64 * self.spacing,
            i3 as f64 * self.spacing,
            i4 as f64 * self.spacing,
        ]
    }

    /// Nodal volume element of `g = u²δ`: `dμ_g = u⁴·h⁴` per node.
    pub fn volume_weights(&self) -> Vec<f64> {
        let h4 = self.spacing.powi(4);
        self.u.iter().map(|&ui| ui * ui * ui * ui * h4).collect()
    }

    /// Replaces `u` by `u·v` (the conformal class is unchanged).
    pub fn rescaled(&self, v: &[f64]) -> Result<Self, GridError> {
        if v.len() != self.u.len() {
            return Err(GridError::SizeMismatch {
                expected: self.u.len(),
                got: v.len(),
            });
        }
        for (index, &value) in v.iter().enumerate() {
            if !(value.is_finite() && value > 0.0) {
                return Err(GridError::NonPositiveRescale { index, value });
            }
        }
        let u = self.u.iter().zip(v).map(|(a, b)| a * b).collect();
        Self::new(self.n, u)
    }

    /// Replaces `u` by `u·v` with `v` sampled from a coordinate function.
    pub fn rescaled_by(&self, v: impl Fn([f64; 4]) -> f64) -> Result<Self, GridError> {
        self.rescaled(&sample(self.n, v))
    }
}

/// Samples a coordinate function on the `N⁴` lattice in storage order.
pub fn sample(n: usize, f: impl Fn([f64; 4]) -> f64) -> Vec<f64> {
    let h = 1.0 / n as f64;
    let mut values = Vec::with_capacity(n * n * n * n);
    for i1 in 0..n {
        for i2 in 0..n {
            for i3 in 0..n {
                for i4 in 0..n {
                    values.push(f([
                        i1 as f64 * h,
                        i2 as f64 * h,
                        i3 as f64 * h,
                        i4 as f64 * h,
                    ]));
                }
            }
        }
    }
    values
}

/// Positive flat Laplacian `(Δφ)(x) = Σ_axes (2φ(x) − φ(x+h·eᵢ) − φ(x−h·eᵢ))/h²`
/// with periodic wrap.
pub(crate) fn laplacian_flat(n: usize, h: f64, src: &[f64], dst: &mut [f64]) {
    debug_assert_eq!(src.len(), n * n * n * n);
    debug_assert_eq!(dst.len(), src.len());
    let inv_h2 = 1.0 / (h * h);
    let s1 = n * n * n;
    let s2 = n * n;
    let next: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
    let prev: Vec<usize> = (0..n).map(|i| (i + n - 1) % n).collect();
    for i1 in 0..n {
        let (b1, b1p, b1m) = (i1 * s1, next[i1] * s1, prev[i1] * s1);
        for i2 in 0..n {
            let (b2, b2p, b2m) = (i2 * s2, next[i2] * s2, prev[i2] * s2);
            for i3 in 0..n {
                let (b3, b3p, b3m) = (i3 * n, next[i3] * n, prev[i3] * n);
                let row = b1 + b2 + b3;
                for i4 in 0..n {
                    let c = row + i4;
                    let neighbors = src[b1p + b2 + b3 + i4]
                        + src[b1m + b2 + b3 + i4]
                        + src[b1 + b2p + b3 + i4]
                        + src[b1 + b2m + b3 + i4]
                        + src[b1 + b2 + b3p + i4]
                        + src[b1 + b2 + b3m + i4]
                        + src[row + next[i4]]
                        + src[row + prev[i4]];
                    dst[c] = (8.0 * src[c] - neighbors) * inv_h2;
                }
            }
        }
    }
}

/// Central first difference along one axis: `(φ(x+h·eᵢ) − φ(x−h·eᵢ))/(2h)`.
pub(crate) fn gradient_axis(n: usize, h: f64, axis: usize, src: &[f64], dst: &mut [f64]) {
    debug_assert!(axis < 4);
    let strides = [n * n * n, n * n, n, 1];
    let stride = strides[axis];
    let inv_2h = 1.0 / (2.0 * h);
    let next: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
    let prev: Vec<usize> = (0..n).map(|i| (i + n - 1) % n).collect();
    for i1 in 0..n {
        for i2 in 0..n {
            for i3 in 0..n {
                for i4 in 0..n {
                    let idx = [i1, i2, i3, i4];
                    let c = i1 * strides[0] + i2 * strides[1] + i3 * strides[2] + i4;
                    let base = c - idx[axis] * stride;
                    let plus = base + next[idx[axis]] * stride;
                    let minus = base + prev[idx[axis]] * stride;
                    dst[c] = (src[plus] - src[minus]) * inv_2h;
                }
            }
        }
    }
}

/// Flat Yamabe operator `□_δ φ = 6Δ_δ φ` (the flat metric is scalar-flat).
pub fn yamabe_operator_flat(grid: &ConformalGrid, phi: &[f64]) -> Result<Vec<f64>, GridError> {
    if phi.len() != grid.node_count() {
        return Err(GridError::SizeMismatch {
            expected: grid.node_count(),
            got: phi.len(),
        });
    }
    let mut out = vec![0.0; phi.len()];
    laplacian_flat(grid.n, grid.spacing, phi, &mut out);
    for v in &mut out {
        *v *= 6.0;
    }
    Ok(out)
}

/// Real-valued grid function together with its conformal weight `w`: under
/// `g ↦ v²g` the values transform by `v^w`. Weight −2 is the natural weight
/// of `|ω|_g` for 2-forms.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightedField {
    n: usize,
    weight: i32,
    values: Vec<f64>,
}

impl WeightedField {
    pub fn new(n: usize, weight: i32, values: Vec<f64>) -> Result<Self, GridError> {
        let expected = n * n * n * n;
        if values.len() != expected {
            return Err(GridError::SizeMismatch {
                expected,
                got: values.len(),
            });
        }
        Ok(Self { n, weight, values })
    }

    pub fn constant(n: usize, weight: i32, value: f64) -> Self {
        Self {
            n,
            weight,
            values: vec![value; n * n * n * n],
        }
    }

    pub fn from_fn(n: usize, weight: i32, f: impl Fn([f64; 4]) -> f64) -> Self {
        Self {
            n,
            weight,
            values: sample(n, f),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn weight(&self) -> i32 {
        self.weight
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn into_values(self) -> Vec<f64> {
        self.values
    }
}

/// Scalar curvature of `g = u²δ` via the conformal transformation law
/// `s_g = u⁻³·□_δ u = u⁻³·(6Δ_δ u)`, returned as a plain (weight-0) function
/// of the metric `g`.
pub fn scalar_curvature(grid: &ConformalGrid) -> WeightedField {
    let mut lap = vec![0.0; grid.node_count()];
    laplacian_flat(grid.n, grid.spacing, &grid.u, &mut lap);
    let values: Vec<f64> = grid
        .u
        .iter()
        .zip(&lap)
        .map(|(&ui, &li)| 6.0 * li / (ui * ui * ui))
        .collect();
    WeightedField {
        n: grid.n,
        weight: 0,
        values,
    }
}

/// Applies the conformal rescaling `g ↦ v²g` to a weighted field: values are
/// multiplied pointwise by `v^w`; the weight tag is unchanged.
pub fn apply_conformal_rescale(
    field: &WeightedField,
    v: &[f64],
) -> Result<WeightedField, GridError> {
    if v.len() != field.values.len() {
        return Err(GridError::SizeMismatch {
            expected: field.values.len(),
            got: v.len(),
        });
    }
    for (index, &value) in v.iter().enumerate() {
        if !(value.is_finite() && value > 0.0) {
            return Err(GridError::NonPositiveRescale { index, value });
        }
    }
    let w = field.weight;
    let values = field
        .values
        .iter()
        .zip(v)
        .map(|(&f, &vi)| f * vi.powi(w))
        .collect();
    Ok(WeightedField {
        n: field.n,
        weight: w,
        values,
    })
}

/// L²(g) inner product `Σ a·b·dμ_g` with `dμ_g = u⁴h⁴` nodal weights.
pub fn l2_inner(grid: &ConformalGrid, a: &[f64], b: &[f64]) -> f64 {
    let h4 = grid.spacing.powi(4);
    numeric::compensated_sum(
        a.iter()
            .zip(b)
            .zip(&grid.u)
            .map(|((&x, &y), &ui)| x * y * (ui * ui * ui * ui * h4)),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    /// Discrete symbol of the 1-D second difference on frequency 1:
    /// `Δ_h cos(2πx) = λ_h·cos(2πx)` with `λ_h = (2 − 2cos(2πh))/h²`.
    fn symbol(n: usize) -> f64 {
        let h = 1.0 / n as f64;
        (2.0 - 2.0 * (2.0 * PI * h).cos()) / (h * h)
    }

    #[test]
    fn grid_construction_checks() {
        assert_eq!(ConformalGrid::flat(4).node_count(), 256);
        assert!(matches!(
            ConformalGrid::new(4, vec![1.0; 10]),
            Err(GridError::SizeMismatch {
                expected: 256,
                got: 10
            })
        ));
        let mut u = vec![1.0; 16];
        u[3] = 0.0;
        assert!(matches!(
            ConformalGrid::new(2, u),
            Err(GridError::NonPositiveFactor { index: 3, .. })
        ));
    }

    #[test]
    fn indexing_roundtrip_x4_fastest() {
        let grid = ConformalGrid::flat(5);
        assert_eq!(grid.index([0, 0, 0, 1]), 1);
        assert_eq!(grid.index([1, 0, 0, 0]), 125);
        let idx = grid.index([2, 4, 1, 3]);
        let x = grid.coords(idx);
        for (got, want) in x.iter().zip([0.4, 0.8, 0.2, 0.6]) {
            assert!((got - want).abs() < 1e-15);
        }
    }

    #[test]
    fn flat_operator_kills_constants() {
        let grid = ConformalGrid::flat(6);
        let phi = vec![3.25; grid.node_count()];
        let out = yamabe_operator_flat(&grid, &phi).unwrap();
        assert!(numeric::sup_norm(&out) < 1e-11);
    }

    #[test]
    fn flat_operator_plane_wave_symbol() {
        let n = 8;
        let grid = ConformalGrid::flat(n);
        let phi = sample(n, |x| (2.0 * PI * x[0]).cos());
        let out = yamabe_operator_flat(&grid, &phi).unwrap();
        let expected: Vec<f64> = phi.iter().map(|&p| 6.0 * symbol(n) * p).collect();
        assert!(numeric::sup_norm_diff(&out, &expected) < 1e-9);
    }

    #[test]
    fn flat_operator_second_order_convergence() {
        // Residual against the analytic symbol 6(2π)² shrinks by ≈4 per
        // doubling of N.
        let analytic = 6.0 * (2.0 * PI).powi(2);
        let residual = |n: usize| (6.0 * symbol(n) - analytic).abs();
        let r8 = residual(8);
        let r16 = residual(16);
        let r32 = residual(32);
        let ratio1 = r8 / r16;
        let ratio2 = r16 / r32;
        assert!((3.5..=4.5).contains(&ratio1), "ratio {ratio1}");
        assert!((3.5..=4.5).contains(&ratio2), "ratio {ratio2}");
    }

    #[test]
    fn flat_operator_linearity() {
        let n = 8;
        let grid = ConformalGrid::flat(n);
        let a = sample(n, |x| (2.0 * PI * x[0]).cos());
        let b = sample(n, |x| (2.0 * PI * x[1]).cos());
        let sum: Vec<f64> = a.iter().zip(&b).map(|(x, y)| x + y).collect();
        let out_sum = yamabe_operator_flat(&grid, &sum).unwrap();
        let out_a = yamabe_operator_flat(&grid, &a).unwrap();
        let out_b = yamabe_operator_flat(&grid, &b).unwrap();
        let combined: Vec<f64> = out_a.iter().zip(&out_b).map(|(x, y)| x + y).collect();
        // Exact up to reassociation of ~450-sized stencil sums.
        assert!(numeric::sup_norm_diff(&out_sum, &combined) < 1e-11);
    }

    #[test]
    fn scalar_curvature_of_flat_and_homothetic_metrics_vanishes() {
        for c in [1.0, 2.5] {
            let grid = ConformalGrid::from_fn(6, |_| c).unwrap();
            let s = scalar_curvature(&grid);
            assert_eq!(s.weight(), 0);
            assert!(numeric::sup_norm(s.values()) < 1e-10);
        }
    }

    #[test]
    fn scalar_curvature_matches_independent_stencil() {
        // Oracle: direct pointwise evaluation of u⁻³·6·(second difference)
        // along axis 1 with explicit coordinate arithmetic.
        let n = 8;
        let h = 1.0 / n as f64;
        let u_of = |x1: f64| 1.0 + 0.1 * (2.0 * PI * x1).cos();
        let grid = ConformalGrid::from_fn(n, |x| u_of(x[0])).unwrap();
        let s = scalar_curvature(&grid);
        for i1 in 0..n {
            let x1 = i1 as f64 * h;
            let lap = (2.0 * u_of(x1) - u_of(x1 + h) - u_of(x1 - h)) / (h * h);
            let expected = 6.0 * lap / u_of(x1).powi(3);
            let idx = grid.index([i1, 3, 1, 5]);
            assert!(
                (s.values()[idx] - expected).abs() < 1e-10,
                "node {i1}: got {}, want {expected}",
                s.values()[idx]
            );
        }
    }

    #[test]
    fn rescale_by_constant_and_pointwise_factor() {
        let n = 4;
        let f = WeightedField::from_fn(n, -2, |x| 1.0 + x[0] + 2.0 * x[1]);
        let quartered = apply_conformal_rescale(&f, &vec![2.0; f.values().len()]).unwrap();
        for (a, b) in f.values().iter().zip(quartered.values()) {
            assert!((a / 4.0 - b).abs() < 1e-15);
        }
        assert_eq!(quartered.weight(), -2);

        let zero_weight = WeightedField::from_fn(n, 0, |x| x[2]);
        let unchanged = apply_conformal_rescale(&zero_weight, &vec![7.0; 256]).unwrap();
        assert_eq!(unchanged.values(), zero_weight.values());

        let v = sample(n, |x| (2.0 * PI * x[0]).cos().exp());
        let rescaled = apply_conformal_rescale(&f, &v).unwrap();
        for ((a, b), vi) in f.values().iter().zip(rescaled.values()).zip(&v) {
            assert!((a * vi.powi(-2) - b).abs() < 1e-14);
        }

        let mut bad = vec![1.0; 256];
        bad[10] = -0.5;
        assert!(matches!(
            apply_conformal_rescale(&f, &bad),
            Err(GridError::NonPositiveRescale { index: 10, .. })
        ));
    }

    #[test]
    fn l2_inner_uses_curved_volume() {
        // ⟨1, 1⟩_g = ∫dμ_g = mean(u⁴) on the unit torus.
        let n = 4;
        let grid = ConformalGrid::from_fn(n, |x| 1.0 + 0.5 * x[0]).unwrap();
        let ones = vec![1.0; grid.node_count()];
        let volume = l2_inner(&grid, &ones, &ones);
        let expected = grid
            .conformal_factor()
            .iter()
            .map(|u| u.powi(4))
            .sum::<f64>()
            / grid.node_count() as f64;
        assert!((volume - expected).abs() < 1e-13);
    }

    #[test]
    fn gradient_axis_central_difference() {
        let n = 8;
        let h = 1.0 / n as f64;
        let src = sample(n, |x| (2.0 * PI * x[2]).sin());
        let mut dst = vec![0.0; src.len()];
        gradient_axis(n, h, 2, &src, &mut dst);
        // Central difference of sin on frequency 1: sin(2π(x+h)) − sin(2π(x−h))
        // over 2h equals cos(2πx)·sin(2πh)/h.
        let factor = (2.0 * PI * h).sin() / h;
        let expected = sample(n, |x| factor * (2.0 * PI * x[2]).cos());
        assert!(numeric::sup_norm_diff(&dst, &expected) < 1e-10);
        // Other axes see a constant function.
        gradient_axis(n, h, 0, &src, &mut dst);
        assert!(numeric::sup_norm(&dst) < 1e-12);
    }
}
