//! Deterministic floating-point reductions.
//!
//! All norms and inner products in the crate run through Neumaier-compensated
//! sums in a fixed order, so results are bitwise reproducible for a given grid
//! size and accumulation error stays at a few ulps regardless of node count.

/// Neumaier (improved Kahan) compensated accumulator.
#[derive(Debug, Clone, Copy, Default)]
pub struct CompensatedSum {
    sum: f64,
    compensation: f64,
}

impl CompensatedSum {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn add(&mut self, value: f64) {
        let t = self.sum + value;
        if self.sum.abs() >= value.abs() {
            self.compensation += (self.sum - t) + value;
        } else {
            self.compensation += (value - t) + self.sum;
        }
        self.sum = t;
    }

    #[inline]
    pub fn value(&self) -> f64 {
        self.sum + self.compensation
    }
}

/// Compensated sum of an iterator of terms.
pub fn compensated_sum(values: impl IntoIterator<Item = f64>) -> f64 {
    let mut acc = CompensatedSum::new();
    for v in values {
        acc.add(v);
    }
    acc.value()
}

/// Compensated weighted dot product `Σ wᵢ·aᵢ·bᵢ`.
pub fn weighted_dot(a: &[f64], b: &[f64], w: &[f64]) -> f64 {
    debug_assert_eq!(a.len(), b.len());
    debug_assert_eq!(a.len(), w.len());
    compensated_sum(a.iter().zip(b).zip(w).map(|((x, y), wi)| wi * x * y))
}

/// `max_i |aᵢ|`.
pub fn sup_norm(a: &[f64]) -> f64 {
    a.iter().fold(0.0_f64, |m, &x| m.max(x.abs()))
}

/// `max_i |aᵢ − bᵢ|`.
pub fn sup_norm_diff(a: &[f64], b: &[f64]) -> f64 {
    debug_assert_eq!(a.len(), b.len());
    a.iter()
        .zip(b)
        .fold(0.0_f64, |m, (&x, &y)| m.max((x - y).abs()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compensated_sum_beats_naive_on_cancellation() {
        // 1 + 1e-16 repeated: naive summation loses the small terms entirely.
        let n = 1_000_000;
        let mut values = vec![1e-16; n];
        values.push(1.0);
        let exact = 1.0 + 1e-16 * n as f64;
        let got = compensated_sum(values.iter().copied());
        assert!((got - exact).abs() < 1e-18, "got {got}, want {exact}");
    }

    #[test]
    fn sup_norms() {
        assert_eq!(sup_norm(&[1.0, -3.0, 2.0]), 3.0);
        assert_eq!(sup_norm_diff(&[1.0, 2.0], &[0.5, 4.0]), 2.0);
    }
}
