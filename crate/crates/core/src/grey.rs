//! Grey numbers: closed real intervals standing in for an unknown real value.

use std::fmt;
use std::ops::Add;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GreyError {
    #[error("grey number endpoints must be finite, got [{lower}; {upper}]")]
    NonFinite { lower: f64, upper: f64 },
    #[error("grey number lower bound {lower} exceeds upper bound {upper}")]
    Inverted { lower: f64, upper: f64 },
    #[error("scalar factor must be a positive finite number, got {0}")]
    NonPositiveScalar(f64),
}

/// A grey number `T ∈ [lower, upper]`.
///
/// The endpoints are finite and ordered. A degenerate interval
/// (`lower == upper`) is a crisp number.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawGrey", into = "RawGrey")]
pub struct GreyNumber {
    lower: f64,
    upper: f64,
}

#[derive(Serialize, Deserialize)]
struct RawGrey {
    lower: f64,
    upper: f64,
}

impl TryFrom<RawGrey> for GreyNumber {
    type Error = GreyError;

    fn try_from(raw: RawGrey) -> Result<Self, Self::Error> {
        GreyNumber::new(raw.lower, raw.upper)
    }
}

impl From<GreyNumber> for RawGrey {
    fn from(g: GreyNumber) -> Self {
        RawGrey {
            lower: g.lower,
            upper: g.upper,
        }
    }
}

impl GreyNumber {
    pub const ZERO: GreyNumber = GreyNumber {
        lower: 0.0,
        upper: 0.0,
    };

    pub fn new(lower: f64, upper: f64) -> Result<Self, GreyError> {
        if !lower.is_finite() || !upper.is_finite() {
            return Err(GreyError::NonFinite { lower, upper });
        }
        if lower > upper {
            return Err(GreyError::Inverted { lower, upper });
        }
        Ok(GreyNumber { lower, upper })
    }

    /// A degenerate interval `[x, x]`.
    pub fn crisp(x: f64) -> Result<Self, GreyError> {
        GreyNumber::new(x, x)
    }

    pub fn lower(&self) -> f64 {
        self.lower
    }

    pub fn upper(&self) -> f64 {
        self.upper
    }

    pub fn width(&self) -> f64 {
        self.upper - self.lower
    }

    /// Interval addition `[a.lower + b.lower, a.upper + b.upper]`.
    ///
    /// Both sums are rounded the same way, so the ordering of the
    /// endpoints survives floating-point addition.
    #[allow(clippy::should_implement_trait)]
    pub fn add(self, other: GreyNumber) -> GreyNumber {
        GreyNumber {
            lower: self.lower + other.lower,
            upper: self.upper + other.upper,
        }
    }

    /// Multiplication by a positive scalar, `[k·lower, k·upper]`.
    pub fn scale(self, k: f64) -> Result<GreyNumber, GreyError> {
        if !(k.is_finite() && k > 0.0) {
            return Err(GreyError::NonPositiveScalar(k));
        }
        GreyNumber::new(k * self.lower, k * self.upper)
    }

    /// The representative crisp value: the midpoint of the interval.
    pub fn value(&self) -> f64 {
        (self.lower + self.upper) / 2.0
    }

    /// Whether the interval lies inside `[0, 1]`.
    pub fn within_unit(&self) -> bool {
        self.lower >= 0.0 && self.upper <= 1.0
    }

    /// Closed-interval intersection test.
    pub fn overlaps(&self, other: &GreyNumber) -> bool {
        self.lower <= other.upper && other.lower <= self.upper
    }
}

impl Add for GreyNumber {
    type Output = GreyNumber;

    fn add(self, rhs: GreyNumber) -> GreyNumber {
        GreyNumber::add(self, rhs)
    }
}

impl std::iter::Sum for GreyNumber {
    fn sum<I: Iterator<Item = GreyNumber>>(iter: I) -> GreyNumber {
        iter.fold(GreyNumber::ZERO, GreyNumber::add)
    }
}

impl fmt::Display for GreyNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{};{}]", self.lower, self.upper)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gn(a: f64, b: f64) -> GreyNumber {
        GreyNumber::new(a, b).unwrap()
    }

    #[test]
    fn rejects_inverted_and_non_finite() {
        assert!(matches!(
            GreyNumber::new(0.6, 0.5),
            Err(GreyError::Inverted { .. })
        ));
        assert!(matches!(
            GreyNumber::new(f64::NAN, 0.5),
            Err(GreyError::NonFinite { .. })
        ));
        assert!(matches!(
            GreyNumber::new(0.0, f64::INFINITY),
            Err(GreyError::NonFinite { .. })
        ));
        assert!(GreyNumber::new(0.4, 0.4).is_ok());
    }

    #[test]
    fn addition_of_c_and_d() {
        let sum = gn(0.6, 0.74) + gn(0.5, 0.59);
        assert!((sum.lower() - 1.1).abs() < 1e-12);
        assert!((sum.upper() - 1.33).abs() < 1e-12);
        assert!((sum.value() - 1.215).abs() < 1e-12);
    }

    #[test]
    fn additive_identity() {
        assert_eq!(gn(0.3, 0.8) + GreyNumber::ZERO, gn(0.3, 0.8));
    }

    #[test]
    fn scaling() {
        let doubled = gn(0.6, 0.74).scale(2.0).unwrap();
        assert_eq!(doubled, gn(1.2, 1.48));
        assert!((doubled.value() - 1.34).abs() < 1e-12);
        assert_eq!(gn(0.4, 0.9).scale(1.0).unwrap(), gn(0.4, 0.9));
        assert_eq!(gn(0.2, 0.6).scale(0.5).unwrap(), gn(0.1, 0.3));
    }

    #[test]
    fn scaling_rejects_non_positive() {
        for k in [0.0, -1.0, f64::NAN, f64::INFINITY] {
            assert!(matches!(
                gn(0.2, 0.6).scale(k),
                Err(GreyError::NonPositiveScalar(_))
            ));
        }
    }

    #[test]
    fn representative_values() {
        assert!((gn(0.6, 0.74).value() - 0.67).abs() < 1e-12);
        assert_eq!(gn(0.0, 0.0).value(), 0.0);
        assert!((gn(0.0, 0.49).value() - 0.245).abs() < 1e-12);
    }

    #[test]
    fn display_uses_semicolon() {
        assert_eq!(gn(0.85, 1.0).to_string(), "[0.85;1]");
    }

    #[test]
    fn serde_rejects_inverted() {
        let err = serde_json::from_str::<GreyNumber>(r#"{"lower":1.0,"upper":0.0}"#);
        assert!(err.is_err());
    }
}
