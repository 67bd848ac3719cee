//! Qualitative grade labels mapped to grey numbers.

use std::collections::HashSet;
use std::fmt;

use thiserror::Error;

use crate::grey::GreyNumber;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown grade `{0}`")]
pub struct UnknownGrade(pub String);

/// A broken grade scale invariant.
#[derive(Debug, Clone, PartialEq)]
pub enum ScaleViolation {
    Empty,
    EmptyLabel { position: usize },
    DuplicateLabel(String),
    OutsideUnit { label: String, interval: GreyNumber },
    Overlap { first: String, second: String },
    NotDescending { previous: String, next: String },
}

impl fmt::Display for ScaleViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ScaleViolation::Empty => write!(f, "scale has no grades"),
            ScaleViolation::EmptyLabel { position } => {
                write!(f, "grade #{} has an empty label", position + 1)
            }
            ScaleViolation::DuplicateLabel(l) => write!(f, "grade `{l}` is listed more than once"),
            ScaleViolation::OutsideUnit { label, interval } => {
                write!(f, "grade `{label}` interval {interval} is not inside [0;1]")
            }
            ScaleViolation::Overlap { first, second } => {
                write!(f, "grades `{first}` and `{second}` have overlapping intervals")
            }
            ScaleViolation::NotDescending { previous, next } => write!(
                f,
                "grade `{next}` must have a lower bound strictly below that of `{previous}`"
            ),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
#[error("invalid grade scale: {}", join(.0))]
pub struct InvalidScale(pub Vec<ScaleViolation>);

fn join(v: &[ScaleViolation]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join("; ")
}

/// Checks every grade scale invariant and returns all violations found.
///
/// Labels must be non-empty and unique, intervals must lie in `[0, 1]`,
/// be pairwise disjoint, and appear in strictly descending order of
/// their lower bound. Gaps between intervals are allowed.
pub fn validate_scale(entries: &[(String, GreyNumber)]) -> Vec<ScaleViolation> {
    let mut out = Vec::new();
    if entries.is_empty() {
        out.push(ScaleViolation::Empty);
    }
    let mut seen = HashSet::new();
    for (position, (label, interval)) in entries.iter().enumerate() {
        if label.is_empty() {
            out.push(ScaleViolation::EmptyLabel { position });
        } else if !seen.insert(label.as_str()) {
            out.push(ScaleViolation::DuplicateLabel(label.clone()));
        }
        if !interval.within_unit() {
            out.push(ScaleViolation::OutsideUnit {
                label: label.clone(),
                interval: *interval,
            });
        }
    }
    for (a, (la, ga)) in entries.iter().enumerate() {
        for (lb, gb) in &entries[a + 1..] {
            if ga.overlaps(gb) {
                out.push(ScaleViolation::Overlap {
                    first: la.clone(),
                    second: lb.clone(),
                });
            }
        }
    }
    for pair in entries.windows(2) {
        let ((prev, gp), (next, gn)) = (&pair[0], &pair[1]);
        if gn.lower() >= gp.lower() {
            out.push(ScaleViolation::NotDescending {
                previous: prev.clone(),
                next: next.clone(),
            });
        }
    }
    out
}

/// An ordered list of grades, best first.
#[derive(Debug, Clone, PartialEq)]
pub struct GradeScale {
    entries: Vec<(String, GreyNumber)>,
}

impl GradeScale {
    pub fn new(entries: Vec<(String, GreyNumber)>) -> Result<Self, InvalidScale> {
        let violations = validate_scale(&entries);
        if violations.is_empty() {
            Ok(GradeScale { entries })
        } else {
            Err(InvalidScale(violations))
        }
    }

    pub fn entries(&self) -> &[(String, GreyNumber)] {
        &self.entries
    }

    pub fn labels(&self) -> impl Iterator<Item = &str> {
        self.entries.iter().map(|(l, _)| l.as_str())
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// The interval bound to `label`. Labels are case-sensitive.
    pub fn grade_to_gn(&self, label: &str) -> Result<GreyNumber, UnknownGrade> {
        self.entries
            .iter()
            .find(|(l, _)| l == label)
            .map(|(_, g)| *g)
            .ok_or_else(|| UnknownGrade(label.to_owned()))
    }
}

impl Default for GradeScale {
    fn default() -> Self {
        default_scale()
    }
}

fn fixed(entries: &[(&str, f64, f64)]) -> GradeScale {
    let entries = entries
        .iter()
        .map(|&(l, a, b)| (l.to_owned(), GreyNumber::new(a, b).expect("valid interval")))
        .collect();
    GradeScale::new(entries).expect("built-in scale is valid")
}

/// A = [0.85, 1], B = [0.75, 0.84], C = [0.6, 0.74], D = [0.5, 0.59], F = [0, 0.49].
pub fn default_scale() -> GradeScale {
    fixed(&[
        ("A", 0.85, 1.0),
        ("B", 0.75, 0.84),
        ("C", 0.6, 0.74),
        ("D", 0.5, 0.59),
        ("F", 0.0, 0.49),
    ])
}

/// The stricter variant: A = [0.9, 1], B = [0.8, 0.89], C = [0.7, 0.79],
/// D = [0.6, 0.69], F = [0, 0.59].
pub fn strict_scale() -> GradeScale {
    fixed(&[
        ("A", 0.9, 1.0),
        ("B", 0.8, 0.89),
        ("C", 0.7, 0.79),
        ("D", 0.6, 0.69),
        ("F", 0.0, 0.59),
    ])
}
