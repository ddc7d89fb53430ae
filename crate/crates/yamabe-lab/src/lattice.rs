//! Exact arithmetic on unimodular intersection forms.
//!
//! Everything in this module is integer or rational arithmetic: signatures
//! come from congruence diagonalization over `BigRational` (Sylvester's law
//! of inertia), never from floating-point eigenvalues, and pairings use
//! checked 64-bit arithmetic that reports overflow instead of wrapping.
//!
//! The bridge to geometry is [`upper_bound_from_eta_sq`]: a characteristic
//! class `η` with `η² > τ` forces a positive twisted Dirac index, and the
//! Weitzenböck obstruction then caps the Yamabe invariant at `4π√(2η²)`.

use std::f64::consts::PI;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum LatticeError {
    #[error("matrix must be square and non-empty")]
    NotSquare,
    #[error("matrix is not symmetric at ({0},{1})")]
    NotSymmetric(usize, usize),
    #[error("form is not unimodular: |det| = {0}")]
    NotUnimodular(BigInt),
    #[error("vector length {vector} does not match form rank {rank}")]
    DimensionMismatch { vector: usize, rank: usize },
    #[error("64-bit integer overflow in pairing")]
    Overflow,
    #[error("class is not characteristic for the form")]
    NotCharacteristic,
    #[error("characteristic square {0} is not congruent to the signature mod 8")]
    IndexNotIntegral(i64),
    #[error("search requires a positive-definite diagonal form")]
    NotPositiveDefiniteDiagonal,
    #[error("search box bound must be at least 3, got {0}")]
    BoundTooSmall(i64),
    #[error("search space (2B+1)^rank exceeds the enumeration budget")]
    SearchSpaceTooLarge,
    #[error("no characteristic vector with square above rank found in the box")]
    NoCharacteristicVector,
    #[error("self-pairing {0} must be positive")]
    NonPositiveSquare(i64),
    #[error("Yamabe values must be non-negative, got {0}")]
    NegativeYamabeValue(f64),
    #[error("cannot take a minimum over an empty list")]
    EmptyList,
    #[error("descriptor ranks are inconsistent: b+ + b- = {sum}, form rank {rank}")]
    BettiRankMismatch { sum: usize, rank: usize },
}

/// Symmetric unimodular integer matrix: the cup product on free `H²`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntersectionForm {
    rank: usize,
    /// Row-major `rank × rank` entries.
    entries: Vec<i64>,
}

impl IntersectionForm {
    /// Builds a form from a square matrix, validating symmetry and
    /// `|det| = 1` (computed exactly).
    #[allow(clippy::needless_range_loop)] // (i,j)/(j,i) index juggling
    pub fn new(matrix: Vec<Vec<i64>>) -> Result<Self, LatticeError> {
        let rank = matrix.len();
        if rank == 0 || matrix.iter().any(|row| row.len() != rank) {
            return Err(LatticeError::NotSquare);
        }
        for i in 0..rank {
            for j in (i + 1)..rank {
                if matrix[i][j] != matrix[j][i] {
                    return Err(LatticeError::NotSymmetric(i, j));
                }
            }
        }
        let entries: Vec<i64> = matrix.into_iter().flatten().collect();
        let form = Self { rank, entries };
        let det = form.determinant_exact();
        if det.abs() != BigInt::one() {
            return Err(LatticeError::NotUnimodular(det.abs()));
        }
        Ok(form)
    }

    /// Diagonal form; each entry must be `±1` for unimodularity.
    pub fn diagonal(diag: &[i64]) -> Result<Self, LatticeError> {
        let rank = diag.len();
        let mut matrix = vec![vec![0_i64; rank]; rank];
        for (i, &d) in diag.iter().enumerate() {
            matrix[i][i] = d;
        }
        Self::new(matrix)
    }

    /// The rank-`k` identity form (cup product of `kCP²`).
    pub fn identity(rank: usize) -> Self {
        Self::diagonal(&vec![1; rank]).expect("identity form is unimodular")
    }

    /// The rank-2 hyperbolic form `[[0,1],[1,0]]`.
    pub fn hyperbolic() -> Self {
        Self::new(vec![vec![0, 1], vec![1, 0]]).expect("hyperbolic form is unimodular")
    }

    /// Block direct sum of two forms.
    pub fn direct_sum(&self, other: &Self) -> Self {
        let rank = self.rank + other.rank;
        let mut entries = vec![0_i64; rank * rank];
        for i in 0..self.rank {
            for j in 0..self.rank {
                entries[i * rank + j] = self.entry(i, j);
            }
        }
        for i in 0..other.rank {
            for j in 0..other.rank {
                entries[(self.rank + i) * rank + (self.rank + j)] = other.entry(i, j);
            }
        }
        Self { rank, entries }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    #[inline]
    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.rank + j]
    }

    pub fn is_positive_definite_diagonal(&self) -> bool {
        for i in 0..self.rank {
            for j in 0..self.rank {
                let e = self.entry(i, j);
                if i == j && e <= 0 {
                    return false;
                }
                if i != j && e != 0 {
                    return false;
                }
            }
        }
        true
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    fn determinant_exact(&self) -> BigInt {
        let n = self.rank;
        let mut m: Vec<Vec<BigInt>> = (0..n)
            .map(|i| (0..n).map(|j| BigInt::from(self.entry(i, j))).collect())
            .collect();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n.saturating_sub(1) {
            if m[k][k].is_zero() {
                match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                    Some(r) => {
                        m.swap(k, r);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in (k + 1)..n {
                for j in (k + 1)..n {
                    let num = &m[k][k] * &m[i][j] - &m[i][k] * &m[k][j];
                    m[i][j] = num / &prev;
                }
                m[i][k] = BigInt::zero();
            }
            prev = m[k][k].clone();
        }
        sign * m[n - 1][n - 1].clone()
    }

    /// Signature `τ = b⁺ − b⁻` by exact rational congruence diagonalization.
    ///
    /// By Sylvester's law of inertia the diagonal sign pattern after any
    /// congruence `A ↦ PᵀAP` is an invariant, so the count below equals the
    /// difference of positive and negative eigenvalue counts without ever
    /// leaving exact arithmetic.
    #[allow(clippy::needless_range_loop)] // symmetric row/column operations
    pub fn signature(&self) -> i64 {
        let n = self.rank;
        let mut a: Vec<Vec<BigRational>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| BigRational::from_integer(BigInt::from(self.entry(i, j))))
                    .collect()
            })
            .collect();
        let mut signature = 0_i64;
        for k in 0..n {
            if a[k][k].is_zero() {
                if let Some(j) = (k + 1..n).find(|&j| !a[j][j].is_zero()) {
                    // Swap basis vectors k and j (a congruence).
                    a.swap(k, j);
                    for row in a.iter_mut() {
                        row.swap(k, j);
                    }
                } else if let Some(j) = (k + 1..n).find(|&j| !a[k][j].is_zero()) {
                    // All later diagonal entries vanish; replace e_k by
                    // e_k + e_j, which puts 2·a[k][j] on the diagonal.
                    for t in 0..n {
                        let v = a[j][t].clone();
                        a[k][t] += v;
                    }
                    for row in a.iter_mut() {
                        let v = row[j].clone();
                        row[k] += v;
                    }
                } else {
                    // Null direction: contributes nothing to the signature.
                    continue;
                }
            }
            let pivot = a[k][k].clone();
            signature += if pivot.is_positive() { 1 } else { -1 };
            for j in (k + 1)..n {
                if a[j][k].is_zero() {
                    continue;
                }
                let factor = &a[j][k] / &pivot;
                for t in k..n {
                    let v = &factor * &a[k][t];
                    a[j][t] -= v;
                }
                for t in k..n {
                    let v = &factor * &a[t][k];
                    a[t][j] -= v;
                }
            }
        }
        signature
    }
}

impl fmt::Display for IntersectionForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rank {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "[")?;
            for j in 0..self.rank {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.entry(i, j))?;
            }
            write!(f, "]")?;
        }
        Ok(())
    }
}

/// Integer coordinate vector for a class in free `H²(M, Z)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CohomologyVector(Vec<i64>);

impl CohomologyVector {
    pub fn new(coords: Vec<i64>) -> Self {
        Self(coords)
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl From<Vec<i64>> for CohomologyVector {
    fn from(coords: Vec<i64>) -> Self {
        Self(coords)
    }
}

impl fmt::Display for CohomologyVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

fn check_dims(class: &CohomologyVector, form: &IntersectionForm) -> Result<(), LatticeError> {
    if class.len() != form.rank() {
        return Err(LatticeError::DimensionMismatch {
            vector: class.len(),
            rank: form.rank(),
        });
    }
    Ok(())
}

/// Checked bilinear pairing `aᵀQb`.
pub fn pairing(
    a: &CohomologyVector,
    b: &CohomologyVector,
    form: &IntersectionForm,
) -> Result<i64, LatticeError> {
    check_dims(a, form)?;
    check_dims(b, form)?;
    let mut total: i64 = 0;
    for (i, &ai) in a.coords().iter().enumerate() {
        for (j, &bj) in b.coords().iter().enumerate() {
            let term = ai
                .checked_mul(form.entry(i, j))
                .and_then(|t| t.checked_mul(bj))
                .ok_or(LatticeError::Overflow)?;
            total = total.checked_add(term).ok_or(LatticeError::Overflow)?;
        }
    }
    Ok(total)
}

/// Self-pairing `η² = ηᵀQη`, with overflow reported rather than wrapped.
pub fn self_pairing(
    class: &CohomologyVector,
    form: &IntersectionForm,
) -> Result<i64, LatticeError> {
    pairing(class, class, form)
}

/// Whether `η` is characteristic: `η·x ≡ x·x (mod 2)` for all `x`, which on a
/// basis reduces to `(Qη)ᵢ ≡ Qᵢᵢ (mod 2)` for every `i`.
pub fn is_characteristic(
    class: &CohomologyVector,
    form: &IntersectionForm,
) -> Result<bool, LatticeError> {
    check_dims(class, form)?;
    for i in 0..form.rank() {
        // (Qη)_i mod 2 only needs parities, so plain wrapping arithmetic on
        // parities avoids any overflow concern.
        let mut row_parity = 0_i64;
        for (j, &cj) in class.coords().iter().enumerate() {
            row_parity = (row_parity + form.entry(i, j) * (cj & 1)) & 1;
        }
        if row_parity != form.entry(i, i) & 1 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Index of the twisted Dirac operator attached to a characteristic class:
/// `(η² − τ)/8`.
///
/// For characteristic `η` on a unimodular form, `η² ≡ τ (mod 8)` (van der
/// Blij), so the division is exact; a failure of that congruence means the
/// inputs violate the contract and is reported as an error rather than
/// silently truncated.
pub fn dirac_index(class: &CohomologyVector, form: &IntersectionForm) -> Result<i64, LatticeError> {
    if !is_characteristic(class, form)? {
        return Err(LatticeError::NotCharacteristic);
    }
    let square = self_pairing(class, form)?;
    let numerator = square
        .checked_sub(form.signature())
        .ok_or(LatticeError::Overflow)?;
    if numerator.rem_euclid(8) != 0 {
        return Err(LatticeError::IndexNotIntegral(numerator));
    }
    Ok(numerator / 8)
}

/// Exhaustive search for the minimal characteristic square exceeding `b₂`.
///
/// Enumerates all characteristic vectors with `|coordᵢ| ≤ bound` on a
/// positive-definite diagonal form and returns the least `η²` subject to
/// `η² > rank`, together with a witness. Enumeration order is lexicographic,
/// so the witness is deterministic; its sign is normalized to make the first
/// non-zero coordinate positive (`−η` is characteristic whenever `η` is).
pub fn min_characteristic_square(
    form: &IntersectionForm,
    bound: i64,
) -> Result<(i64, CohomologyVector), LatticeError> {
    if !form.is_positive_definite_diagonal() {
        return Err(LatticeError::NotPositiveDefiniteDiagonal);
    }
    if bound < 3 {
        return Err(LatticeError::BoundTooSmall(bound));
    }
    let rank = form.rank();
    let width = 2 * bound as u64 + 1;
    let mut budget: u64 = 1;
    for _ in 0..rank {
        budget = budget
            .checked_mul(width)
            .filter(|&b| b <= 100_000_000)
            .ok_or(LatticeError::SearchSpaceTooLarge)?;
    }

    let b2 = rank as i64;
    let mut best: Option<(i64, Vec<i64>)> = None;
    let mut coords = vec![-bound; rank];
    loop {
        let candidate = CohomologyVector::new(coords.clone());
        if is_characteristic(&candidate, form)? {
            let square = self_pairing(&candidate, form)?;
            if square > b2 && best.as_ref().is_none_or(|(s, _)| square < *s) {
                best = Some((square, coords.clone()));
            }
        }
        // Advance the odometer, last coordinate fastest.
        let mut axis = rank;
        loop {
            if axis == 0 {
                break;
            }
            axis -= 1;
            if coords[axis] < bound {
                coords[axis] += 1;
                break;
            }
            coords[axis] = -bound;
            if axis == 0 {
                axis = usize::MAX;
                break;
            }
        }
        if axis == usize::MAX {
            break;
        }
    }

    let (square, mut witness) = best.ok_or(LatticeError::NoCharacteristicVector)?;
    if let Some(&first) = witness.iter().find(|&&c| c != 0) {
        if first < 0 {
            for c in &mut witness {
                *c = -*c;
            }
        }
    }
    Ok((square, CohomologyVector::new(witness)))
}

/// The Dirac-obstruction upper bound `4π√(2η²)` for the Yamabe invariant.
pub fn upper_bound_from_eta_sq(eta_sq: i64) -> Result<f64, LatticeError> {
    if eta_sq <= 0 {
        return Err(LatticeError::NonPositiveSquare(eta_sq));
    }
    Ok(4.0 * PI * (2.0 * eta_sq as f64).sqrt())
}

/// Connected-sum lower bound: `Y(M₁ # … # Mₙ) ≥ min_j Y(Mⱼ)` provided every
/// summand has non-negative Yamabe invariant.
pub fn kobayashi_lower_bound(values: &[f64]) -> Result<f64, LatticeError> {
    if values.is_empty() {
        return Err(LatticeError::EmptyList);
    }
    let mut min = f64::INFINITY;
    for &v in values {
        if v.is_nan() || v < 0.0 {
            return Err(LatticeError::NegativeYamabeValue(v));
        }
        min = min.min(v);
    }
    Ok(min)
}

/// Topological data for the manifolds entering the bound tables,
/// `M = kCP² # m(S¹×S³)` and friends.
#[derive(Debug, Clone)]
pub struct ManifoldDescriptor {
    pub name: String,
    pub b_plus: usize,
    pub b_minus: usize,
    /// Intersection form on the definite part used by the upper bound.
    pub form: Option<IntersectionForm>,
    /// Number of `S¹×S³` connected summands.
    pub handles_m: usize,
    /// Number of `CP²` connected summands.
    pub cp2_k: usize,
}

impl ManifoldDescriptor {
    pub fn new(
        name: impl Into<String>,
        b_plus: usize,
        b_minus: usize,
        form: Option<IntersectionForm>,
        handles_m: usize,
        cp2_k: usize,
    ) -> Result<Self, LatticeError> {
        if let Some(ref q) = form {
            if b_plus + b_minus != q.rank() {
                return Err(LatticeError::BettiRankMismatch {
                    sum: b_plus + b_minus,
                    rank: q.rank(),
                });
            }
        }
        Ok(Self {
            name: name.into(),
            b_plus,
            b_minus,
            form,
            handles_m,
            cp2_k,
        })
    }

    /// Descriptor for `kCP² # m(S¹×S³)` with its identity intersection form.
    pub fn connected_sum_cp2(k: usize, m: usize) -> Self {
        let name = match (k, m) {
            (1, 0) => "CP2".to_string(),
            (k, 0) => format!("{k}CP2"),
            (1, m) => format!("CP2 # {m}(S1xS3)"),
            (k, m) => format!("{k}CP2 # {m}(S1xS3)"),
        };
        Self::new(name, k, 0, Some(IntersectionForm::identity(k)), m, k)
            .expect("identity form rank matches b+")
    }
}


#[cfg(test)]
mod prop_tests {
    use super::*;
    use proptest::prelude::*;

    #[derive(Debug, Clone)]
    enum ElementaryOp {
        Swap(usize, usize),
        Negate(usize),
        /// row/column shear: e_dst ← e_dst + c·e_src.
        Add {
            src: usize,
            dst: usize,
            c: i64,
        },
    }

    fn identity_matrix(n: usize) -> Vec<Vec<i64>> {
        let mut m = vec![vec![0; n]; n];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = 1;
        }
        m
    }

    fn mat_mul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
        let n = a.len();
        let mut out = vec![vec![0; n]; n];
        for i in 0..n {
            for k in 0..n {
                if a[i][k] == 0 {
                    continue;
                }
                for j in 0..n {
                    out[i][j] += a[i][k] * b[k][j];
                }
            }
        }
        out
    }

    fn transpose(a: &[Vec<i64>]) -> Vec<Vec<i64>> {
        let n = a.len();
        let mut out = vec![vec![0; n]; n];
        for i in 0..n {
            for j in 0..n {
                out[j][i] = a[i][j];
            }
        }
        out
    }

    fn op_matrix(op: &ElementaryOp, n: usize, inverse: bool) -> Vec<Vec<i64>> {
        let mut m = identity_matrix(n);
        match *op {
            ElementaryOp::Swap(i, j) => {
                let (i, j) = (i % n, j % n);
                if i != j {
                    m[i][i] = 0;
                    m[j][j] = 0;
                    m[i][j] = 1;
                    m[j][i] = 1;
                }
            }
            ElementaryOp::Negate(i) => {
                let i = i % n;
                m[i][i] = -1;
            }
            ElementaryOp::Add { src, dst, c } => {
                let (src, dst) = (src % n, dst % n);
                if src != dst {
                    m[src][dst] = if inverse { -c } else { c };
                }
            }
        }
        m
    }

    fn elementary_op() -> impl Strategy<Value = ElementaryOp> {
        prop_oneof![
            (0usize..6, 0usize..6).prop_map(|(i, j)| ElementaryOp::Swap(i, j)),
            (0usize..6).prop_map(ElementaryOp::Negate),
            (0usize..6, 0usize..6, -2i64..=2).prop_map(|(src, dst, c)| ElementaryOp::Add {
                src,
                dst,
                c
            }),
        ]
    }

    fn base_form(rank: usize, selector: u8) -> IntersectionForm {
        match selector % 3 {
            0 => IntersectionForm::identity(rank),
            1 => {
                let mut diag = vec![1_i64; rank];
                diag[rank - 1] = -1;
                IntersectionForm::diagonal(&diag).unwrap()
            }
            _ => {
                if rank >= 2 {
                    let rest = rank - 2;
                    let h = IntersectionForm::hyperbolic();
                    if rest == 0 {
                        h
                    } else {
                        h.direct_sum(&IntersectionForm::identity(rest))
                    }
                } else {
                    IntersectionForm::identity(rank)
                }
            }
        }
    }

    proptest! {
        /// Characteristic-ness and self-pairing are invariant under basis
        /// change by any unimodular U: Q ↦ UᵀQU, η ↦ U⁻¹η.
        #[test]
        fn basis_change_invariance(
            rank in 2usize..=4,
            selector in 0u8..3,
            ops in proptest::collection::vec(elementary_op(), 1..6),
            coords in proptest::collection::vec(-3i64..=3, 4),
        ) {
            let q = base_form(rank, selector);
            let mut u = identity_matrix(rank);
            let mut u_inv = identity_matrix(rank);
            for op in &ops {
                u = mat_mul(&u, &op_matrix(op, rank, false));
                u_inv = mat_mul(&op_matrix(op, rank, true), &u_inv);
            }
            // Sanity: U · U⁻¹ = I.
            prop_assert_eq!(mat_mul(&u, &u_inv), identity_matrix(rank));

            let q_mat: Vec<Vec<i64>> = (0..rank)
                .map(|i| (0..rank).map(|j| q.entry(i, j)).collect())
                .collect();
            let q_changed = IntersectionForm::new(mat_mul(&transpose(&u), &mat_mul(&q_mat, &u)))
                .expect("congruence by unimodular U preserves unimodularity");

            let eta = CohomologyVector::new(coords[..rank].to_vec());
            let eta_changed = CohomologyVector::new(
                (0..rank)
                    .map(|i| (0..rank).map(|j| u_inv[i][j] * eta.coords()[j]).sum())
                    .collect(),
            );

            prop_assert_eq!(
                is_characteristic(&eta, &q).unwrap(),
                is_characteristic(&eta_changed, &q_changed).unwrap()
            );
            prop_assert_eq!(
                self_pairing(&eta, &q).unwrap(),
                self_pairing(&eta_changed, &q_changed).unwrap()
            );
            prop_assert_eq!(q.signature(), q_changed.signature());
        }

        #[test]
        fn upper_bound_strictly_increasing(a in 1i64..10_000, b in 1i64..10_000) {
            prop_assume!(a < b);
            let fa = upper_bound_from_eta_sq(a).unwrap();
            let fb = upper_bound_from_eta_sq(b).unwrap();
            prop_assert!(fa < fb);
        }
    }
}
