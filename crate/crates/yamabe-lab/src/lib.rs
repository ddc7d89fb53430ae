//! Desk-scale computations around the Yamabe invariant of 4-manifolds.
//!
//! The library has two independent halves that meet in the bound tables:
//!
//! * **Exact integer topology** — [`lattice`] does arithmetic on unimodular
//!   intersection forms (signature, characteristic vectors, the twisted Dirac
//!   index `(η² − τ)/8`) and turns minimal characteristic squares into upper
//!   bounds `4π√(2η²)` for the Yamabe invariant.
//! * **Discretized conformal geometry** — [`confgrid`] models conformally flat
//!   metrics `g = u²·δ` on the periodic 4-torus, with weighted fields, the
//!   Hodge star on 2-forms, and conformally invariant norms; [`spectrum`]
//!   builds the perturbed Yamabe Laplacian `◇ = 6Δ + s − f`, finds its lowest
//!   eigenpair, and classifies conformal classes by the sign trichotomy.
//!
//! [`clifford`] supplies the pointwise spin algebra behind the Weitzenböck
//! obstruction (eigenvalues `±i√2|ω|` of the Clifford action of a self-dual
//! 2-form), and [`catalog`] assembles the resulting closed-form values and
//! bound intervals for connected sums `kCP² # m(S¹×S³)`.
//!
//! Every major capability has a runnable demo under `examples/`; the
//! `yamabe-lab` binary exposes `bounds`, `spectrum`, and `verify`
//! subcommands over the same library calls.

pub mod catalog;
pub mod cli;
pub mod clifford;
pub mod confgrid;
pub mod exact;
pub mod lattice;
pub(crate) mod numeric;
pub mod spectrum;

pub use catalog::{aubin_sphere_value, connected_sum_bounds, hopf_comparison, CatalogEntry};
pub use confgrid::{ConformalGrid, TwoFormField, WeightedField};
pub use exact::ExactConstant;
pub use lattice::{CohomologyVector, IntersectionForm, ManifoldDescriptor};
pub use spectrum::{PerturbedOperator, SpectralResult, TrichotomySign};
