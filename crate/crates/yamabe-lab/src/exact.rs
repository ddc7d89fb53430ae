//! Closed-form constants of the shape `q · πᵏ · √r`.
//!
//! The bound tables compare values like `12√2π`, `8√5π`, and `8√6π` at
//! tolerances near machine precision, so the constants are carried
//! symbolically — a rational coefficient, a π power, and a square-free
//! radicand — and only lowered to `f64` at the presentation boundary.
//! Equality and ordering between constants with the same π power are decided
//! by exact rational arithmetic.

use std::cmp::Ordering;
use std::f64::consts::PI;
use std::fmt;

use num_rational::Ratio;
use num_traits::{Signed, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

/// `coeff · π^pi_power · √radicand` with `radicand` square-free.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactConstant {
    coeff: Ratio<i64>,
    pi_power: i32,
    radicand: u64,
}

/// Splits `n` as `s²·r` with `r` square-free, returning `(s, r)`.
fn extract_square_part(mut n: u64) -> (u64, u64) {
    let mut square = 1_u64;
    let mut p = 2_u64;
    while p * p <= n {
        while n.is_multiple_of(p * p) {
            n /= p * p;
            square *= p;
        }
        p += 1;
    }
    (square, n)
}

impl ExactConstant {
    /// Builds `coeff · π^pi_power · √radicand`, normalizing the radicand.
    ///
    /// The radicand may be rational: `√(p/q)` is rewritten as `√(pq)/q`
    /// before square-part extraction, keeping the representation exact.
    pub fn new(coeff: Ratio<i64>, pi_power: i32, radicand: Ratio<i64>) -> Self {
        assert!(
            !radicand.is_negative(),
            "radicand must be non-negative, got {radicand}"
        );
        if coeff.is_zero() || radicand.is_zero() {
            return Self {
                coeff: Ratio::zero(),
                pi_power: 0,
                radicand: 1,
            };
        }
        let p = *radicand.numer() as u64;
        let q = *radicand.denom() as u64;
        let (square, free) = extract_square_part(p * q);
        let coeff = coeff * Ratio::new(square as i64, q as i64);
        if free == 1 {
            Self {
                coeff,
                pi_power,
                radicand: 1,
            }
        } else {
            Self {
                coeff,
                pi_power,
                radicand: free,
            }
        }
    }

    /// Constant with integer radicand, e.g. `ExactConstant::pi_sqrt(4, 18)`
    /// for `4π√18 = 12√2π`.
    pub fn pi_sqrt(coeff: i64, radicand: i64) -> Self {
        Self::new(Ratio::from_integer(coeff), 1, Ratio::from_integer(radicand))
    }

    pub fn rational(coeff: Ratio<i64>) -> Self {
        Self::new(coeff, 0, Ratio::from_integer(1))
    }

    pub fn coeff(&self) -> Ratio<i64> {
        self.coeff
    }

    pub fn pi_power(&self) -> i32 {
        self.pi_power
    }

    pub fn radicand(&self) -> u64 {
        self.radicand
    }

    pub fn is_zero(&self) -> bool {
        self.coeff.is_zero()
    }

    pub fn mul_rational(&self, factor: Ratio<i64>) -> Self {
        Self::new(
            self.coeff * factor,
            self.pi_power,
            Ratio::from_integer(self.radicand as i64),
        )
    }

    /// Exact comparison; defined whenever the π powers agree (or either side
    /// is zero), which covers every comparison the catalog performs.
    pub fn exact_cmp(&self, other: &Self) -> Option<Ordering> {
        if self.is_zero() || other.is_zero() || self.pi_power == other.pi_power {
            let sign = |c: &Self| -> i32 {
                if c.coeff.is_zero() {
                    0
                } else if c.coeff.is_positive() {
                    1
                } else {
                    -1
                }
            };
            let (sa, sb) = (sign(self), sign(other));
            if sa != sb {
                return Some(sa.cmp(&sb));
            }
            if sa == 0 {
                return Some(Ordering::Equal);
            }
            // Same sign and π power: compare coeff²·radicand exactly.
            let a = self.coeff * self.coeff * Ratio::from_integer(self.radicand as i64);
            let b = other.coeff * other.coeff * Ratio::from_integer(other.radicand as i64);
            let magnitude = a.cmp(&b);
            return Some(if sa > 0 {
                magnitude
            } else {
                magnitude.reverse()
            });
        }
        None
    }

    pub fn to_f64(&self) -> f64 {
        let c = *self.coeff.numer() as f64 / *self.coeff.denom() as f64;
        c * PI.powi(self.pi_power) * (self.radicand as f64).sqrt()
    }

    /// ASCII symbolic form, e.g. `12*sqrt(2)*pi` or `(8/3)*pi^2`.
    pub fn symbolic(&self) -> String {
        if self.coeff.is_zero() {
            return "0".to_string();
        }
        let mut parts: Vec<String> = Vec::new();
        let coeff = if self.coeff.denom() == &1 {
            format!("{}", self.coeff.numer())
        } else {
            format!("({}/{})", self.coeff.numer(), self.coeff.denom())
        };
        parts.push(coeff);
        if self.radicand > 1 {
            parts.push(format!("sqrt({})", self.radicand));
        }
        match self.pi_power {
            0 => {}
            1 => parts.push("pi".to_string()),
            k => parts.push(format!("pi^{k}")),
        }
        parts.join("*")
    }
}

impl fmt::Display for ExactConstant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbolic())
    }
}

impl PartialOrd for ExactConstant {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        self.exact_cmp(other)
    }
}

impl Serialize for ExactConstant {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("ExactConstant", 6)?;
        s.serialize_field("coeff_num", self.coeff.numer())?;
        s.serialize_field("coeff_den", self.coeff.denom())?;
        s.serialize_field("pi_power", &self.pi_power)?;
        s.serialize_field("radicand", &self.radicand)?;
        s.serialize_field("symbolic", &self.symbolic())?;
        s.serialize_field("value", &self.to_f64())?;
        s.end()
    }
}
