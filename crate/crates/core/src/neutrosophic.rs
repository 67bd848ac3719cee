//! Single-valued neutrosophic triplets `(t, i, f)`.
//!
//! A [`NeutrosophicTriplet`] keeps each degree inside `[0, 1]`. Sums and
//! scalings of triplets can leave that box, so they are carried in a
//! [`TripletAccumulator`], which only requires non-negative components.
//! Averaging brings the result back into the box.

use std::fmt;
use std::ops::Add;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Default tolerance for [`classify_information`].
pub const DEFAULT_EPSILON: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum NeutrosophicError {
    #[error("{component} degree must lie in [0, 1], got {value}")]
    OutOfRange { component: &'static str, value: f64 },
    #[error("accumulator component {component} must be finite and non-negative, got {value}")]
    NegativeComponent { component: &'static str, value: f64 },
    #[error("scalar factor must be a positive finite number, got {0}")]
    NonPositiveScalar(f64),
    #[error("mean of an empty collection of triplets")]
    EmptyMean,
    #[error("multiplicity must be at least 1")]
    ZeroMultiplicity,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawTriplet", into = "RawTriplet")]
pub struct NeutrosophicTriplet {
    t: f64,
    i: f64,
    f: f64,
}

#[derive(Serialize, Deserialize)]
struct RawTriplet {
    t: f64,
    i: f64,
    f: f64,
}

impl TryFrom<RawTriplet> for NeutrosophicTriplet {
    type Error = NeutrosophicError;

    fn try_from(raw: RawTriplet) -> Result<Self, Self::Error> {
        NeutrosophicTriplet::new(raw.t, raw.i, raw.f)
    }
}

impl From<NeutrosophicTriplet> for RawTriplet {
    fn from(x: NeutrosophicTriplet) -> Self {
        RawTriplet {
            t: x.t,
            i: x.i,
            f: x.f,
        }
    }
}

fn unit_component(component: &'static str, value: f64) -> Result<f64, NeutrosophicError> {
    if (0.0..=1.0).contains(&value) {
        Ok(value)
    } else {
        Err(NeutrosophicError::OutOfRange { component, value })
    }
}

impl NeutrosophicTriplet {
    /// Binary `1` embedded as full truth.
    pub const TRUE: NeutrosophicTriplet = NeutrosophicTriplet {
        t: 1.0,
        i: 0.0,
        f: 0.0,
    };
    /// Binary `0` embedded as full falsity.
    pub const FALSE: NeutrosophicTriplet = NeutrosophicTriplet {
        t: 0.0,
        i: 0.0,
        f: 1.0,
    };

    pub fn new(t: f64, i: f64, f: f64) -> Result<Self, NeutrosophicError> {
        let t = unit_component("truth", t)?;
        let i = unit_component("indeterminacy", i)?;
        let f = unit_component("falsity", f)?;
        debug_assert!((0.0..=3.0).contains(&(t + i + f)));
        Ok(NeutrosophicTriplet { t, i, f })
    }

    pub fn from_bool(value: bool) -> Self {
        if value {
            Self::TRUE
        } else {
            Self::FALSE
        }
    }

    pub fn truth(&self) -> f64 {
        self.t
    }

    pub fn indeterminacy(&self) -> f64 {
        self.i
    }

    pub fn falsity(&self) -> f64 {
        self.f
    }

    pub fn sum(&self) -> f64 {
        self.t + self.i + self.f
    }

    pub fn classify(&self, epsilon: f64) -> Information {
        classify_information(self, epsilon)
    }
}

impl fmt::Display for NeutrosophicTriplet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({};{};{})", self.t, self.i, self.f)
    }
}

/// Unconstrained sum of triplets. Components are finite and `>= 0`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct TripletAccumulator {
    t: f64,
    i: f64,
    f: f64,
}

fn non_negative(component: &'static str, value: f64) -> Result<f64, NeutrosophicError> {
    if value.is_finite() && value >= 0.0 {
        Ok(value)
    } else {
        Err(NeutrosophicError::NegativeComponent { component, value })
    }
}

impl TripletAccumulator {
    pub const ZERO: TripletAccumulator = TripletAccumulator {
        t: 0.0,
        i: 0.0,
        f: 0.0,
    };

    pub fn new(t: f64, i: f64, f: f64) -> Result<Self, NeutrosophicError> {
        Ok(TripletAccumulator {
            t: non_negative("t", t)?,
            i: non_negative("i", i)?,
            f: non_negative("f", f)?,
        })
    }

    pub fn truth(&self) -> f64 {
        self.t
    }

    pub fn indeterminacy(&self) -> f64 {
        self.i
    }

    pub fn falsity(&self) -> f64 {
        self.f
    }

    /// Componentwise sum.
    #[allow(clippy::should_implement_trait)]
    pub fn add(self, other: TripletAccumulator) -> TripletAccumulator {
        TripletAccumulator {
            t: self.t + other.t,
            i: self.i + other.i,
            f: self.f + other.f,
        }
    }

    /// Componentwise product with a positive scalar.
    pub fn scale(self, k: f64) -> Result<TripletAccumulator, NeutrosophicError> {
        if !(k.is_finite() && k > 0.0) {
            return Err(NeutrosophicError::NonPositiveScalar(k));
        }
        TripletAccumulator::new(k * self.t, k * self.i, k * self.f)
    }

    /// Converts back into a triplet if every component is inside `[0, 1]`.
    pub fn into_triplet(self) -> Result<NeutrosophicTriplet, NeutrosophicError> {
        NeutrosophicTriplet::new(self.t, self.i, self.f)
    }
}

impl From<NeutrosophicTriplet> for TripletAccumulator {
    fn from(x: NeutrosophicTriplet) -> Self {
        TripletAccumulator {
            t: x.t,
            i: x.i,
            f: x.f,
        }
    }
}

impl Add for TripletAccumulator {
    type Output = TripletAccumulator;

    fn add(self, rhs: TripletAccumulator) -> TripletAccumulator {
        TripletAccumulator::add(self, rhs)
    }
}

impl std::iter::Sum for TripletAccumulator {
    fn sum<I: Iterator<Item = TripletAccumulator>>(iter: I) -> TripletAccumulator {
        iter.fold(TripletAccumulator::ZERO, TripletAccumulator::add)
    }
}

impl fmt::Display for TripletAccumulator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({};{};{})", self.t, self.i, self.f)
    }
}

/// Weighted mean of triplets, each listed with its multiplicity.
///
/// The weighted sum is accumulated in list order and divided by the
/// total multiplicity once at the end. Every partial sum of a component
/// is bounded by the matching partial sum of multiplicities, so the
/// quotient never rounds above 1. If every listed triplet is the same,
/// that triplet is returned unchanged.
pub fn mean(items: &[(NeutrosophicTriplet, u32)]) -> Result<NeutrosophicTriplet, NeutrosophicError> {
    let (first, _) = items.first().ok_or(NeutrosophicError::EmptyMean)?;
    if items.iter().any(|&(_, n)| n == 0) {
        return Err(NeutrosophicError::ZeroMultiplicity);
    }
    if items.iter().all(|(x, _)| x == first) {
        return Ok(*first);
    }

    let mut total = 0.0_f64;
    let mut acc = TripletAccumulator::ZERO;
    for &(x, n) in items {
        let n = f64::from(n);
        total += n;
        acc = acc + TripletAccumulator::from(x).scale(n)?;
    }
    TripletAccumulator::new(acc.t / total, acc.i / total, acc.f / total)?.into_triplet()
}

/// Mean of a sequence where every element has multiplicity one.
pub fn mean_of<I>(items: I) -> Result<NeutrosophicTriplet, NeutrosophicError>
where
    I: IntoIterator<Item = NeutrosophicTriplet>,
{
    let items: Vec<_> = items.into_iter().map(|x| (x, 1)).collect();
    mean(&items)
}

/// How much information a triplet carries, read from `t + i + f`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Information {
    /// `t + i + f < 1`: leaves room for missing information.
    Incomplete,
    /// `t + i + f = 1`.
    Complete,
    /// `t + i + f > 1`: contradiction-tolerant.
    Inconsistent,
}

impl fmt::Display for Information {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Information::Incomplete => "incomplete",
            Information::Complete => "complete",
            Information::Inconsistent => "inconsistent",
        })
    }
}

/// Classifies a triplet by its component sum, treating sums within
/// `epsilon` of 1 as complete.
pub fn classify_information(x: &NeutrosophicTriplet, epsilon: f64) -> Information {
    let sum = x.sum();
    if (sum - 1.0).abs() <= epsilon {
        Information::Complete
    } else if sum < 1.0 {
        Information::Incomplete
    } else {
        Information::Inconsistent
    }
}
