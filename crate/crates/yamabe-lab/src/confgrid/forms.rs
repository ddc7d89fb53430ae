//! Pointwise 2-form algebra: Hodge star, self-dual split, and norms.
//!
//! Components are stored in the coordinate basis order
//! `(dx¹∧dx², dx¹∧dx³, dx¹∧dx⁴, dx²∧dx³, dx²∧dx⁴, dx³∧dx⁴)`.
//! With the orientation `dx¹∧dx²∧dx³∧dx⁴ > 0` the flat Hodge star acts by
//! `⋆: dx¹∧dx² ↔ dx³∧dx⁴`, `dx¹∧dx³ ↔ −dx²∧dx⁴`, `dx¹∧dx⁴ ↔ dx²∧dx³`.
//! On middle-dimensional forms the star depends only on the conformal class,
//! so the flat star is used for every metric `u²δ`.

use super::{ConformalGrid, GridError, WeightedField};
use crate::numeric;

/// Human-readable labels matching the component storage order.
pub const COMPONENT_LABELS: [&str; 6] = ["dx12", "dx13", "dx14", "dx23", "dx24", "dx34"];

/// 2-form on the grid: six real component fields in the coordinate basis.
#[derive(Debug, Clone, PartialEq)]
pub struct TwoFormField {
    n: usize,
    comps: [Vec<f64>; 6],
}

impl TwoFormField {
    pub fn zero(n: usize) -> Self {
        let len = n * n * n * n;
        Self {
            n,
            comps: std::array::from_fn(|_| vec![0.0; len]),
        }
    }

    /// Constant-coefficient form.
    pub fn constant(n: usize, coeffs: [f64; 6]) -> Self {
        let len = n * n * n * n;
        Self {
            n,
            comps: std::array::from_fn(|k| vec![coeffs[k]; len]),
        }
    }

    pub fn from_components(n: usize, comps: [Vec<f64>; 6]) -> Result<Self, GridError> {
        let expected = n * n * n * n;
        for c in &comps {
            if c.len() != expected {
                return Err(GridError::SizeMismatch {
                    expected,
                    got: c.len(),
                });
            }
        }
        Ok(Self { n, comps })
    }

    pub fn from_fn(n: usize, f: impl Fn([f64; 4]) -> [f64; 6]) -> Self {
        let len = n * n * n * n;
        let mut comps: [Vec<f64>; 6] = std::array::from_fn(|_| Vec::with_capacity(len));
        let h = 1.0 / n as f64;
        for i1 in 0..n {
            for i2 in 0..n {
                for i3 in 0..n {
                    for i4 in 0..n {
                        let v = f([i1 as f64 * h, i2 as f64 * h, i3 as f64 * h, i4 as f64 * h]);
                        for (k, c) in comps.iter_mut().enumerate() {
                            c.push(v[k]);
                        }
                    }
                }
            }
        }
        Self { n, comps }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn node_count(&self) -> usize {
        self.n * self.n * self.n * self.n
    }

    pub fn component(&self, k: usize) -> &[f64] {
        &self.comps[k]
    }

    pub fn components(&self) -> &[Vec<f64>; 6] {
        &self.comps
    }

    /// Flat (= conformally invariant) Hodge star on 2-forms.
    pub fn hodge_star(&self) -> Self {
        let negated = |k: usize| self.comps[k].iter().map(|v| -v).collect();
        let comps = [
            self.comps[5].clone(), // ⋆(dx12) picks up c34
            negated(4),            // ⋆(dx13) picks up −c24
            self.comps[3].clone(), // ⋆(dx14) picks up c23
            self.comps[2].clone(), // ⋆(dx23) picks up c14
            negated(1),            // ⋆(dx24) picks up −c13
            self.comps[0].clone(), // ⋆(dx34) picks up c12
        ];
        Self { n: self.n, comps }
    }

    /// Self-dual projection `ω⁺ = (ω + ⋆ω)/2`.
    pub fn self_dual_part(&self) -> Self {
        let star = self.hodge_star();
        self.add(&star).scale(0.5)
    }

    /// Anti-self-dual projection `ω⁻ = (ω − ⋆ω)/2`.
    pub fn anti_self_dual_part(&self) -> Self {
        let star = self.hodge_star();
        self.sub(&star).scale(0.5)
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "forms live on different grids");
        let comps = std::array::from_fn(|k| {
            self.comps[k]
                .iter()
                .zip(&other.comps[k])
                .map(|(a, b)| a + b)
                .collect()
        });
        Self { n: self.n, comps }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "forms live on different grids");
        let comps = std::array::from_fn(|k| {
            self.comps[k]
                .iter()
                .zip(&other.comps[k])
                .map(|(a, b)| a - b)
                .collect()
        });
        Self { n: self.n, comps }
    }

    pub fn scale(&self, factor: f64) -> Self {
        let comps = std::array::from_fn(|k| self.comps[k].iter().map(|a| a * factor).collect());
        Self { n: self.n, comps }
    }

    /// Pointwise norm `|ω|_g` for `g = u²δ`, i.e. `u⁻²·|ω|_δ` with
    /// `|ω|_δ² = Σ_{i<j} ω_{ij}²`. The result carries conformal weight −2.
    pub fn pointwise_norm(&self, grid: &ConformalGrid) -> Result<WeightedField, GridError> {
        if grid.n() != self.n {
            return Err(GridError::GridSizeMismatch(grid.n(), self.n));
        }
        let u = grid.conformal_factor();
        let values: Vec<f64> = (0..self.comps[0].len())
            .map(|i| {
                let sq: f64 = self.comps.iter().map(|c| c[i] * c[i]).sum();
                sq.sqrt() / (u[i] * u[i])
            })
            .collect();
        WeightedField::new(self.n, -2, values)
    }

    /// Conformally invariant L² norm `(∫ |ω|_g² dμ_g)^{1/2}`.
    ///
    /// Deliberately computed through the curved-metric route — the weight −2
    /// pointwise norm squared against `dμ_g = u⁴h⁴` — so the analytic
    /// cancellation of `u` is exercised numerically rather than assumed.
    pub fn l2_norm(&self, grid: &ConformalGrid) -> Result<f64, GridError> {
        let pointwise = self.pointwise_norm(grid)?;
        let h4 = grid.spacing().powi(4);
        let u = grid.conformal_factor();
        let total = numeric::compensated_sum(
            pointwise
                .values()
                .iter()
                .zip(u)
                .map(|(&p, &ui)| p * p * (ui * ui * ui * ui * h4)),
        );
        Ok(total.sqrt())
    }
}

/// Harmonic representative on the flat torus: the constant-coefficient form
/// with the given components (flat-torus harmonic 2-forms are exactly the
/// constant ones). Its self-dual/anti-self-dual parts realize the `H±` split
/// of the corresponding cohomology class.
pub fn harmonic_two_form(n: usize, coeffs: [f64; 6]) -> TwoFormField {
    TwoFormField::constant(n, coeffs)
}

/// `∫ α∧β` over the unit torus for constant-coefficient forms, read off the
/// `dx¹∧dx²∧dx³∧dx⁴` coefficient: `a₁₂b₃₄ + a₃₄b₁₂ − a₁₃b₂₄ − a₂₄b₁₃ +
/// a₁₄b₂₃ + a₂₃b₁₄`. For `α = β` this is the cup-product square `[α]²`.
pub fn wedge_integral_constant(a: &[f64; 6], b: &[f64; 6]) -> f64 {
    a[0] * b[5] + a[5] * b[0] - a[1] * b[4] - a[4] * b[1] + a[2] * b[3] + a[3] * b[2]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::confgrid::sample;
    use std::f64::consts::PI;

    fn basis_form(n: usize, k: usize) -> TwoFormField {
        let mut coeffs = [0.0; 6];
        coeffs[k] = 1.0;
        TwoFormField::constant(n, coeffs)
    }

    #[test]
    fn star_on_basis_forms() {
        let n = 2;
        // dx12 → dx34
        let s = basis_form(n, 0).hodge_star();
        assert_eq!(s.component(5)[0], 1.0);
        assert_eq!(s.component(0)[0], 0.0);
        // dx13 → −dx24
        let s = basis_form(n, 1).hodge_star();
        assert_eq!(s.component(4)[0], -1.0);
        // dx14 → dx23
        let s = basis_form(n, 2).hodge_star();
        assert_eq!(s.component(3)[0], 1.0);
    }

    #[test]
    fn star_is_an_involution() {
        let n = 4;
        let omega = TwoFormField::from_fn(n, |x| {
            [
                (2.0 * PI * x[0]).cos(),
                x[1] - 0.3,
                (2.0 * PI * (x[2] + x[3])).sin(),
                1.5,
                x[0] * x[1],
                -0.7 * (2.0 * PI * x[3]).cos(),
            ]
        });
        let twice = omega.hodge_star().hodge_star();
        for k in 0..6 {
            assert!(numeric::sup_norm_diff(twice.component(k), omega.component(k)) == 0.0);
        }
    }

    #[test]
    fn selfdual_projection_examples() {
        let n = 2;
        // dx12 → (dx12 + dx34)/2.
        let p = basis_form(n, 0).self_dual_part();
        assert_eq!(p.component(0)[0], 0.5);
        assert_eq!(p.component(5)[0], 0.5);
        // Self-dual forms are fixed.
        let sd = TwoFormField::constant(n, [1.0, 0.0, 0.0, 0.0, 0.0, 1.0]);
        let p = sd.self_dual_part();
        for k in 0..6 {
            assert_eq!(p.component(k), sd.component(k));
        }
        // Anti-self-dual forms project to zero.
        let asd = TwoFormField::constant(n, [1.0, 0.0, 0.0, 0.0, 0.0, -1.0]);
        let p = asd.self_dual_part();
        for k in 0..6 {
            assert!(numeric::sup_norm(p.component(k)) == 0.0);
        }
    }

    #[test]
    fn projections_split_and_star_eigenvalues() {
        let n = 3;
        let omega = TwoFormField::from_fn(n, |x| {
            [
                x[0],
                (2.0 * PI * x[1]).sin(),
                0.4,
                -x[2] * x[3],
                (2.0 * PI * x[0]).cos(),
                x[3] - 0.25,
            ]
        });
        let plus = omega.self_dual_part();
        let minus = omega.anti_self_dual_part();
        let sum = plus.add(&minus);
        let star_plus = plus.hodge_star();
        let star_minus = minus.hodge_star();
        for k in 0..6 {
            assert!(numeric::sup_norm_diff(sum.component(k), omega.component(k)) < 1e-15);
            assert!(numeric::sup_norm_diff(star_plus.component(k), plus.component(k)) < 1e-15);
            let negated: Vec<f64> = minus.component(k).iter().map(|v| -v).collect();
            assert!(numeric::sup_norm_diff(star_minus.component(k), &negated) < 1e-15);
        }
        // Idempotence.
        let again = plus.self_dual_part();
        for k in 0..6 {
            assert!(numeric::sup_norm_diff(again.component(k), plus.component(k)) < 1e-15);
        }
    }

    #[test]
    fn pointwise_norm_examples() {
        let n = 4;
        let unit = basis_form(n, 0);
        let flat = ConformalGrid::flat(n);
        let norm = unit.pointwise_norm(&flat).unwrap();
        assert_eq!(norm.weight(), -2);
        assert!(norm.values().iter().all(|&v| (v - 1.0).abs() < 1e-15));

        let sd = TwoFormField::constant(n, [1.0, 0.0, 0.0, 0.0, 0.0, 1.0]);
        let norm = sd.pointwise_norm(&flat).unwrap();
        let root2 = 2.0_f64.sqrt();
        assert!(norm.values().iter().all(|&v| (v - root2).abs() < 1e-15));

        let doubled = ConformalGrid::from_fn(n, |_| 2.0).unwrap();
        let norm = sd.pointwise_norm(&doubled).unwrap();
        assert!(norm
            .values()
            .iter()
            .all(|&v| (v - root2 / 4.0).abs() < 1e-15));
    }

    #[test]
    fn pointwise_norm_has_weight_minus_two_transformation() {
        let n = 4;
        let omega =
            TwoFormField::from_fn(n, |x| [(2.0 * PI * x[0]).cos(), 0.0, x[1], 0.2, 0.0, -x[3]]);
        let grid = ConformalGrid::from_fn(n, |x| 1.0 + 0.2 * (2.0 * PI * x[1]).cos()).unwrap();
        let v = sample(n, |x| (0.4 * (2.0 * PI * x[0]).sin()).exp());
        let rescaled_grid = grid.rescaled(&v).unwrap();

        let direct = omega.pointwise_norm(&rescaled_grid).unwrap();
        let transformed =
            super::super::apply_conformal_rescale(&omega.pointwise_norm(&grid).unwrap(), &v)
                .unwrap();
        assert!(numeric::sup_norm_diff(direct.values(), transformed.values()) < 1e-13);
    }

    #[test]
    fn l2_norm_is_conformally_invariant() {
        let n = 8;
        let sd = TwoFormField::constant(n, [1.0, 0.0, 0.0, 0.0, 0.0, 1.0]);
        let flat = ConformalGrid::flat(n);
        let reference = sd.l2_norm(&flat).unwrap();
        assert!((reference - 2.0_f64.sqrt()).abs() < 1e-13);

        let curved = ConformalGrid::from_fn(n, |x| 1.0 + 0.3 * (2.0 * PI * x[0]).cos()).unwrap();
        let value = sd.l2_norm(&curved).unwrap();
        assert!(
            ((value - reference) / reference).abs() <= 1e-12,
            "relative deviation {}",
            ((value - reference) / reference).abs()
        );
    }

    #[test]
    fn l2_norm_squared_equals_cup_product_for_selfdual_constants() {
        let n = 6;
        let coeffs = [0.7, -0.3, 1.1, 1.1, 0.3, 0.7]; // a₁ω₁ + a₂ω₂ + a₃ω₃ form
        let omega = TwoFormField::constant(n, coeffs);
        // Safety: really self-dual.
        let minus = omega.anti_self_dual_part();
        for k in 0..6 {
            assert!(numeric::sup_norm(minus.component(k)) < 1e-15);
        }
        let grid = ConformalGrid::from_fn(n, |x| 1.0 + 0.25 * (2.0 * PI * x[2]).sin()).unwrap();
        let norm = omega.l2_norm(&grid).unwrap();
        let cup = wedge_integral_constant(&coeffs, &coeffs);
        assert!(
            (norm * norm - cup).abs() < 1e-12,
            "‖ω‖² = {} vs cup {cup}",
            norm * norm
        );
    }

    #[test]
    fn harmonic_split_of_a_single_basis_form() {
        let n = 4;
        let zeta = harmonic_two_form(n, [1.0, 0.0, 0.0, 0.0, 0.0, 0.0]);
        let plus = zeta.self_dual_part();
        let minus = zeta.anti_self_dual_part();
        let plus_coeffs: [f64; 6] = std::array::from_fn(|k| plus.component(k)[0]);
        let minus_coeffs: [f64; 6] = std::array::from_fn(|k| minus.component(k)[0]);
        // (ζ⁺)² = ∫ζ⁺∧ζ⁺ = 1/2 for ζ = dx¹∧dx².
        assert!((wedge_integral_constant(&plus_coeffs, &plus_coeffs) - 0.5).abs() < 1e-15);
        // ζ⁺ and ζ⁻ are cup-orthogonal.
        assert!(wedge_integral_constant(&plus_coeffs, &minus_coeffs).abs() < 1e-15);
        // Self-dual input has no anti-self-dual part.
        let sd = harmonic_two_form(n, [0.0, 1.0, 0.0, 0.0, -1.0, 0.0]);
        let asd = sd.anti_self_dual_part();
        for k in 0..6 {
            assert!(numeric::sup_norm(asd.component(k)) == 0.0);
        }
    }

    #[test]
    fn selfdual_constant_norm_matches_clifford_convention() {
        // The basis forms ω₁, ω₂, ω₃ each have |ω|² = 2.
        let n = 2;
        let flat = ConformalGrid::flat(n);
        for coeffs in [
            [1.0, 0.0, 0.0, 0.0, 0.0, 1.0],
            [0.0, 1.0, 0.0, 0.0, -1.0, 0.0],
            [0.0, 0.0, 1.0, 1.0, 0.0, 0.0],
        ] {
            let omega = TwoFormField::constant(n, coeffs);
            let norm = omega.pointwise_norm(&flat).unwrap();
            assert!((norm.values()[0] - 2.0_f64.sqrt()).abs() < 1e-15);
        }
    }
}

#[cfg(test)]
mod prop_tests {
    use super::*;
    use crate::numeric;
    use proptest::prelude::*;

    fn small_form(n: usize) -> impl Strategy<Value = TwoFormField> {
        let len = n * n * n * n;
        proptest::collection::vec(-10.0f64..10.0, 6 * len).prop_map(move |data| {
            let comps: [Vec<f64>; 6] =
                std::array::from_fn(|k| data[k * len..(k + 1) * len].to_vec());
            TwoFormField::from_components(n, comps).unwrap()
        })
    }

    proptest! {
        #[test]
        fn star_squares_to_identity(omega in small_form(2)) {
            let twice = omega.hodge_star().hodge_star();
            for k in 0..6 {
                prop_assert!(numeric::sup_norm_diff(twice.component(k), omega.component(k)) == 0.0);
            }
        }

        #[test]
        fn projection_parts_reassemble(omega in small_form(2)) {
            let plus = omega.self_dual_part();
            let minus = omega.anti_self_dual_part();
            let sum = plus.add(&minus);
            for k in 0..6 {
                prop_assert!(
                    numeric::sup_norm_diff(sum.component(k), omega.component(k)) < 1e-12
                );
            }
        }
    }
}
