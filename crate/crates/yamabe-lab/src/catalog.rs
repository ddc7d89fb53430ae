//! Closed-form Yamabe values and bound intervals for the manifolds in the
//! bound tables.
//!
//! The two anchor constants are `Y(S⁴) = 8√6π` (Aubin's bound, attained by
//! the round metric) and `Y(CP²) = 12√2π` (Fubini–Study from below, the
//! spin^c index bound from above). For `kCP² # m(S¹×S³)` with `k ∈ {1,2,3}`
//! the interval `[12√2π, 4π√(2k+16)]` is assembled twice — once from the
//! closed form and once through the lattice search plus Kobayashi's
//! connected-sum inequality — and the routes are required to agree.

use num_rational::Ratio;
use serde::Serialize;
use thiserror::Error;

use crate::exact::ExactConstant;
use crate::lattice::{
    kobayashi_lower_bound, min_characteristic_square, upper_bound_from_eta_sq, IntersectionForm,
    LatticeError,
};

#[derive(Debug, Error)]
pub enum CatalogError {
    #[error("sphere dimension {0} is outside the tabulated range 3..=8")]
    UnsupportedDimension(u32),
    #[error("k must be 1, 2, or 3, got {0}")]
    KOutOfRange(usize),
    #[error("bound routes disagree: closed form {closed_form}, recomputed {recomputed}")]
    RouteMismatch { closed_form: f64, recomputed: f64 },
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}

/// Volume of the unit round n-sphere, `V_n = 2π^{(n+1)/2}/Γ((n+1)/2)`,
/// tabulated for `n = 3..=8` as `(rational coefficient, π power)`.
fn sphere_volume(n: u32) -> Result<(Ratio<i64>, i32), CatalogError> {
    let v = match n {
        3 => (Ratio::from_integer(2), 2),
        4 => (Ratio::new(8, 3), 2),
        5 => (Ratio::from_integer(1), 3),
        6 => (Ratio::new(16, 15), 3),
        7 => (Ratio::new(1, 3), 4),
        8 => (Ratio::new(32, 105), 4),
        other => return Err(CatalogError::UnsupportedDimension(other)),
    };
    Ok(v)
}

/// Aubin's sphere value `Y(Sⁿ) = n(n−1)·V_n^{2/n}` for `n ∈ 3..=8`.
pub fn aubin_sphere_value(n: u32) -> Result<f64, CatalogError> {
    let (coeff, pi_power) = sphere_volume(n)?;
    let volume =
        (*coeff.numer() as f64 / *coeff.denom() as f64) * std::f64::consts::PI.powi(pi_power);
    Ok((n * (n - 1)) as f64 * volume.powf(2.0 / n as f64))
}

/// `Y(S⁴) = 12·√V₄ = 8√6π` in closed form.
pub fn sphere_4_exact() -> ExactConstant {
    ExactConstant::new(Ratio::from_integer(12), 1, Ratio::new(8, 3))
}

/// `Y(CP²) = 12√2π` in closed form.
pub fn cp2_exact() -> ExactConstant {
    ExactConstant::pi_sqrt(12, 2)
}

/// Closed interval `[lo, hi]` of exact constants.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundInterval {
    pub lo: ExactConstant,
    pub hi: ExactConstant,
}

impl BoundInterval {
    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }
}

const ROUTE_TOLERANCE: f64 = 1e-12;

/// Yamabe-invariant bounds for `kCP² # m(S¹×S³)`:
/// `[12√2π, 4π√(2k+16)]`, independent of `m`.
///
/// The closed form is cross-checked against both constituent routes: the
/// upper endpoint against the exhaustive minimal characteristic square
/// (`η² = 8 + k`) fed through the index bound, and the lower endpoint
/// against Kobayashi's inequality over the summands (`k` copies of `CP²`
/// and `m` copies of `S¹×S³`, the latter with value `Y(S⁴)`).
pub fn connected_sum_bounds(k: usize, m: usize) -> Result<BoundInterval, CatalogError> {
    if !(1..=3).contains(&k) {
        return Err(CatalogError::KOutOfRange(k));
    }
    let lo = cp2_exact();
    let hi = ExactConstant::pi_sqrt(4, 2 * k as i64 + 16);

    // Route 1: minimal characteristic square on the definite form.
    let (eta_sq, _witness) = min_characteristic_square(&IntersectionForm::identity(k), 5)?;
    let from_lattice = upper_bound_from_eta_sq(eta_sq)?;
    let hi_float = hi.to_f64();
    if ((from_lattice - hi_float) / hi_float).abs() > ROUTE_TOLERANCE {
        return Err(CatalogError::RouteMismatch {
            closed_form: hi_float,
            recomputed: from_lattice,
        });
    }

    // Route 2: connected-sum lower bound over the summands.
    let mut summands = vec![cp2_exact().to_f64(); k];
    summands.extend(std::iter::repeat_n(aubin_sphere_value(4)?, m));
    let from_kobayashi = kobayashi_lower_bound(&summands)?;
    let lo_float = lo.to_f64();
    if ((from_kobayashi - lo_float) / lo_float).abs() > ROUTE_TOLERANCE {
        return Err(CatalogError::RouteMismatch {
            closed_form: lo_float,
            recomputed: from_kobayashi,
        });
    }

    Ok(BoundInterval { lo, hi })
}

/// The values of a primary Hopf surface (`= Y(S⁴)`) and of its one-point
/// blow-up (`= Y(CP²)`); they differ, so blowing up changes the invariant.
pub fn hopf_comparison() -> (ExactConstant, ExactConstant) {
    let hopf = sphere_4_exact();
    let blowup = cp2_exact();
    assert!(
        hopf.exact_cmp(&blowup) != Some(std::cmp::Ordering::Equal),
        "the pair must be distinct"
    );
    (hopf, blowup)
}

/// Either an exactly known value or a two-sided bound.
#[derive(Debug, Clone, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum YamabeValue {
    Exact {
        value: ExactConstant,
    },
    Interval {
        lo: ExactConstant,
        hi: ExactConstant,
    },
}

impl YamabeValue {
    pub fn lo(&self) -> &ExactConstant {
        match self {
            YamabeValue::Exact { value } => value,
            YamabeValue::Interval { lo, .. } => lo,
        }
    }

    pub fn hi(&self) -> &ExactConstant {
        match self {
            YamabeValue::Exact { value } => value,
            YamabeValue::Interval { hi, .. } => hi,
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, YamabeValue::Exact { .. })
    }
}

/// One record of the closed-form catalog.
#[derive(Debug, Clone, Serialize)]
pub struct CatalogEntry {
    /// Lookup key, e.g. `cp2-handles`.
    pub name: &'static str,
    /// Human-readable manifold description.
    pub manifold: &'static str,
    pub value: YamabeValue,
    /// Mathematical source of the value.
    pub provenance: &'static str,
}

/// The full catalog in deterministic order.
pub fn catalog_entries() -> Vec<CatalogEntry> {
    let interval = |k: usize| {
        let b = connected_sum_bounds(k, 0).expect("k in range");
        YamabeValue::Interval { lo: b.lo, hi: b.hi }
    };
    vec![
        CatalogEntry {
            name: "s4",
            manifold: "S4",
            value: YamabeValue::Exact {
                value: sphere_4_exact(),
            },
            provenance: "round metric attains Aubin's bound n(n-1)*V_n^(2/n)",
        },
        CatalogEntry {
            name: "cp2",
            manifold: "CP2",
            value: YamabeValue::Exact { value: cp2_exact() },
            provenance: "Fubini-Study (Einstein, hence Yamabe) from below; \
                         spin-c index bound 4*pi*sqrt(2*9) from above",
        },
        CatalogEntry {
            name: "cp2-handles",
            manifold: "CP2 # m(S1xS3), any m",
            value: YamabeValue::Exact { value: cp2_exact() },
            provenance: "0-surgeries: Kobayashi gluing from below meets the k=1 \
                         index bound from above",
        },
        CatalogEntry {
            name: "2cp2-handles",
            manifold: "2CP2 # m(S1xS3), any m",
            value: interval(2),
            provenance: "Kobayashi gluing from below; minimal characteristic \
                         square 8+k from above",
        },
        CatalogEntry {
            name: "3cp2-handles",
            manifold: "3CP2 # m(S1xS3), any m",
            value: interval(3),
            provenance: "Kobayashi gluing from below; minimal characteristic \
                         square 8+k from above",
        },
        CatalogEntry {
            name: "s1xs3",
            manifold: "S1 x S3",
            value: YamabeValue::Exact {
                value: sphere_4_exact(),
            },
            provenance: "Y(S1xS3) = Y(S4) (Kobayashi; Schoen)",
        },
        CatalogEntry {
            name: "hopf-surface",
            manifold: "primary Hopf surface",
            value: YamabeValue::Exact {
                value: sphere_4_exact(),
            },
            provenance: "diffeomorphic to S1 x S3",
        },
        CatalogEntry {
            name: "hopf-blowup",
            manifold: "blown-up Hopf surface",
            value: YamabeValue::Exact { value: cp2_exact() },
            provenance: "the blow-up is CP2 # (S1xS3) with reversed orientation",
        },
    ]
}

pub fn catalog_lookup(name: &str) -> Option<CatalogEntry> {
    catalog_entries().into_iter().find(|e| e.name == name)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    /// Independent oracle for sphere volumes: V₁ = 2π, V₂ = 4π, and
    /// V_n = (2π/(n−1))·V_{n−2}.
    fn sphere_volume_recursion(n: u32) -> f64 {
        match n {
            1 => 2.0 * PI,
            2 => 4.0 * PI,
            n => 2.0 * PI / (n - 1) as f64 * sphere_volume_recursion(n - 2),
        }
    }

    #[test]
    fn sphere_volumes_match_the_recursion() {
        for n in 3..=8 {
            let (coeff, pi_power) = sphere_volume(n).unwrap();
            let tabulated = (*coeff.numer() as f64 / *coeff.denom() as f64) * PI.powi(pi_power);
            let oracle = sphere_volume_recursion(n);
            assert!(
                ((tabulated - oracle) / oracle).abs() < 1e-14,
                "V_{n}: {tabulated} vs {oracle}"
            );
        }
    }

    #[test]
    fn aubin_values() {
        let s4 = aubin_sphere_value(4).unwrap();
        assert!(((s4 - 8.0 * 6.0_f64.sqrt() * PI) / s4).abs() <= 1e-12);
        assert!(((s4 - sphere_4_exact().to_f64()) / s4).abs() <= 1e-12);

        let s3 = aubin_sphere_value(3).unwrap();
        let v3 = sphere_volume_recursion(3);
        assert!(((s3 - 6.0 * v3.powf(2.0 / 3.0)) / s3).abs() < 1e-14);

        assert!(matches!(
            aubin_sphere_value(9),
            Err(CatalogError::UnsupportedDimension(9))
        ));
    }

    #[test]
    fn connected_sum_table() {
        for m in 0..=10 {
            let b1 = connected_sum_bounds(1, m).unwrap();
            assert!(b1.is_exact(), "k = 1 interval degenerates to 12*sqrt(2)*pi");
            assert_eq!(b1.lo, cp2_exact());

            let b2 = connected_sum_bounds(2, m).unwrap();
            assert_eq!(b2.hi, ExactConstant::pi_sqrt(8, 5));
            assert!(!b2.is_exact());

            let b3 = connected_sum_bounds(3, m).unwrap();
            assert_eq!(b3.hi, ExactConstant::pi_sqrt(4, 22));
        }
        assert!(matches!(
            connected_sum_bounds(0, 0),
            Err(CatalogError::KOutOfRange(0))
        ));
        assert!(matches!(
            connected_sum_bounds(4, 0),
            Err(CatalogError::KOutOfRange(4))
        ));
    }

    #[test]
    fn intervals_are_ordered_and_below_the_sphere() {
        let s4 = sphere_4_exact();
        for k in 1..=3 {
            let b = connected_sum_bounds(k, 0).unwrap();
            let cmp = b.lo.exact_cmp(&b.hi).unwrap();
            assert!(cmp != std::cmp::Ordering::Greater);
            assert_eq!(cmp == std::cmp::Ordering::Equal, k == 1);
            assert_eq!(
                b.hi.exact_cmp(&s4),
                Some(std::cmp::Ordering::Less),
                "upper endpoint for k = {k} must sit strictly below Y(S4)"
            );
        }
    }

    #[test]
    fn hopf_pair_differs() {
        let (hopf, blowup) = hopf_comparison();
        assert!((hopf.to_f64() - aubin_sphere_value(4).unwrap()).abs() < 1e-12);
        assert_eq!(blowup, connected_sum_bounds(1, 3).unwrap().lo);
        let gap = hopf.to_f64() - blowup.to_f64();
        assert!((gap - 8.2478).abs() < 1e-3, "gap {gap}");
        assert!(gap > 0.0);
    }

    #[test]
    fn catalog_is_listed_and_indexed() {
        let entries = catalog_entries();
        assert_eq!(entries.len(), 8);
        assert!(catalog_lookup("cp2").is_some());
        assert!(catalog_lookup("nope").is_none());
        for e in &entries {
            assert!(e.value.lo().exact_cmp(e.value.hi()) != Some(std::cmp::Ordering::Greater));
            assert_eq!(
                e.value.is_exact(),
                e.value.lo() == e.value.hi(),
                "{} exactness flag",
                e.name
            );
        }
    }
}
