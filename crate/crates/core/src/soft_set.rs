//! Soft sets over a finite universe and their binary tabular form.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SoftSetError {
    #[error("identifier must not be empty")]
    EmptyIdentifier,
    #[error("duplicate {kind} identifier `{id}`")]
    DuplicateIdentifier { kind: &'static str, id: String },
    #[error("parameter `{0}` has no value set")]
    MissingValueSet(String),
    #[error("value set given for unknown parameter `{0}`")]
    UnknownParameter(String),
    #[error("value set of `{parameter}` contains `{element}`, which is not in the universe")]
    ForeignElement { parameter: String, element: String },
    #[error("table has {found} rows of cells but {expected} row identifiers")]
    RowCount { expected: usize, found: usize },
    #[error("row `{row}` has {found} cells but there are {expected} columns")]
    ColumnCount {
        row: String,
        expected: usize,
        found: usize,
    },
    #[error("membership degree of `{element}` must lie in [0, 1], got {value}")]
    MembershipOutOfRange { element: String, value: f64 },
    #[error("alpha level must lie in [0, 1], got {0}")]
    AlphaOutOfRange(f64),
    #[error("alpha level {0} listed twice")]
    DuplicateAlpha(f64),
}

pub(crate) fn check_ids<S: AsRef<str>>(kind: &'static str, ids: &[S]) -> Result<(), SoftSetError> {
    let mut seen = HashSet::with_capacity(ids.len());
    for id in ids {
        let id = id.as_ref();
        if id.is_empty() {
            return Err(SoftSetError::EmptyIdentifier);
        }
        if !seen.insert(id) {
            return Err(SoftSetError::DuplicateIdentifier {
                kind,
                id: id.to_owned(),
            });
        }
    }
    Ok(())
}

/// A parametrized family of subsets of `universe`: each parameter `e`
/// maps to its value set `f(e)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SoftSet {
    universe: Vec<String>,
    parameters: Vec<String>,
    value_sets: BTreeMap<String, BTreeSet<String>>,
}

impl SoftSet {
    pub fn new(
        universe: Vec<String>,
        parameters: Vec<String>,
        value_sets: BTreeMap<String, BTreeSet<String>>,
    ) -> Result<Self, SoftSetError> {
        check_ids("element", &universe)?;
        check_ids("parameter", &parameters)?;
        for p in &parameters {
            if !value_sets.contains_key(p) {
                return Err(SoftSetError::MissingValueSet(p.clone()));
            }
        }
        let members: HashSet<&str> = universe.iter().map(String::as_str).collect();
        let params: HashSet<&str> = parameters.iter().map(String::as_str).collect();
        for (p, set) in &value_sets {
            if !params.contains(p.as_str()) {
                return Err(SoftSetError::UnknownParameter(p.clone()));
            }
            if let Some(x) = set.iter().find(|x| !members.contains(x.as_str())) {
                return Err(SoftSetError::ForeignElement {
                    parameter: p.clone(),
                    element: x.clone(),
                });
            }
        }
        Ok(SoftSet {
            universe,
            parameters,
            value_sets,
        })
    }

    /// Builds a soft set from `(parameter, members)` pairs, in parameter order.
    pub fn from_pairs<U, P, M, X>(universe: U, pairs: P) -> Result<Self, SoftSetError>
    where
        U: IntoIterator,
        U::Item: Into<String>,
        P: IntoIterator<Item = (X, M)>,
        X: Into<String>,
        M: IntoIterator,
        M::Item: Into<String>,
    {
        let universe: Vec<String> = universe.into_iter().map(Into::into).collect();
        let mut parameters = Vec::new();
        let mut value_sets = BTreeMap::new();
        for (p, members) in pairs {
            let p: String = p.into();
            let set: BTreeSet<String> = members.into_iter().map(Into::into).collect();
            if value_sets.insert(p.clone(), set).is_some() {
                return Err(SoftSetError::DuplicateIdentifier {
                    kind: "parameter",
                    id: p,
                });
            }
            parameters.push(p);
        }
        SoftSet::new(universe, parameters, value_sets)
    }

    pub fn universe(&self) -> &[String] {
        &self.universe
    }

    pub fn parameters(&self) -> &[String] {
        &self.parameters
    }

    /// The value set `f(e)` of a parameter.
    pub fn value_set(&self, parameter: &str) -> Option<&BTreeSet<String>> {
        self.value_sets.get(parameter)
    }

    /// `(e, f(e))` pairs in parameter order.
    pub fn pairs(&self) -> impl Iterator<Item = (&str, &BTreeSet<String>)> {
        self.parameters
            .iter()
            .map(move |p| (p.as_str(), &self.value_sets[p]))
    }

    pub fn contains(&self, element: &str, parameter: &str) -> bool {
        self.value_sets
            .get(parameter)
            .is_some_and(|s| s.contains(element))
    }

    /// The binary matrix with one row per element and one column per
    /// parameter; a cell is set when the element is in the parameter's
    /// value set.
    pub fn tabulate(&self) -> BinaryTable {
        let cells = self
            .universe
            .iter()
            .map(|x| self.parameters.iter().map(|p| self.contains(x, p)).collect())
            .collect();
        BinaryTable {
            row_ids: self.universe.clone(),
            col_ids: self.parameters.clone(),
            cells,
        }
    }

    /// Inverse of [`SoftSet::tabulate`].
    pub fn from_table(table: &BinaryTable) -> SoftSet {
        let value_sets = table
            .col_ids
            .iter()
            .enumerate()
            .map(|(j, p)| {
                let members = table
                    .row_ids
                    .iter()
                    .zip(&table.cells)
                    .filter(|(_, row)| row[j])
                    .map(|(x, _)| x.clone())
                    .collect();
                (p.clone(), members)
            })
            .collect();
        SoftSet {
            universe: table.row_ids.clone(),
            parameters: table.col_ids.clone(),
            value_sets,
        }
    }
}

/// Tabular representation of a soft set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinaryTable {
    row_ids: Vec<String>,
    col_ids: Vec<String>,
    cells: Vec<Vec<bool>>,
}

impl BinaryTable {
    pub fn new(
        row_ids: Vec<String>,
        col_ids: Vec<String>,
        cells: Vec<Vec<bool>>,
    ) -> Result<Self, SoftSetError> {
        check_ids("row", &row_ids)?;
        check_ids("column", &col_ids)?;
        if cells.len() != row_ids.len() {
            return Err(SoftSetError::RowCount {
                expected: row_ids.len(),
                found: cells.len(),
            });
        }
        for (id, row) in row_ids.iter().zip(&cells) {
            if row.len() != col_ids.len() {
                return Err(SoftSetError::ColumnCount {
                    row: id.clone(),
                    expected: col_ids.len(),
                    found: row.len(),
                });
            }
        }
        Ok(BinaryTable {
            row_ids,
            col_ids,
            cells,
        })
    }

    /// Same as [`BinaryTable::new`] with `0`/`1` cells. Any non-zero
    /// value counts as `1`.
    pub fn from_bits(
        row_ids: Vec<String>,
        col_ids: Vec<String>,
        bits: &[Vec<u8>],
    ) -> Result<Self, SoftSetError> {
        let cells = bits
            .iter()
            .map(|r| r.iter().map(|&b| b != 0).collect())
            .collect();
        BinaryTable::new(row_ids, col_ids, cells)
    }

    pub fn row_ids(&self) -> &[String] {
        &self.row_ids
    }

    pub fn col_ids(&self) -> &[String] {
        &self.col_ids
    }

    pub fn cells(&self) -> &[Vec<bool>] {
        &self.cells
    }

    pub fn get(&self, row: usize, col: usize) -> Option<bool> {
        self.cells.get(row)?.get(col).copied()
    }

    /// Cells as `0`/`1`.
    pub fn bits(&self) -> Vec<Vec<u8>> {
        self.cells
            .iter()
            .map(|r| r.iter().map(|&b| u8::from(b)).collect())
            .collect()
    }
}

/// Canonical parameter name of an alpha level.
pub fn alpha_label(alpha: f64) -> String {
    format!("{alpha}")
}

/// The soft set of alpha-cuts of a fuzzy set: for each level `α`,
/// the value set is `{x : m(x) >= α}`.
///
/// `membership` gives the universe in order together with each
/// element's membership degree. Parameters are named by
/// [`alpha_label`].
pub fn fuzzy_to_soft(membership: &[(String, f64)], alphas: &[f64]) -> Result<SoftSet, SoftSetError> {
    for (x, m) in membership {
        if !(0.0..=1.0).contains(m) {
            return Err(SoftSetError::MembershipOutOfRange {
                element: x.clone(),
                value: *m,
            });
        }
    }
    for (k, &a) in alphas.iter().enumerate() {
        if !(0.0..=1.0).contains(&a) {
            return Err(SoftSetError::AlphaOutOfRange(a));
        }
        if alphas[..k].contains(&a) {
            return Err(SoftSetError::DuplicateAlpha(a));
        }
    }
    let universe: Vec<String> = membership.iter().map(|(x, _)| x.clone()).collect();
    let pairs = alphas.iter().map(|&a| {
        let cut: Vec<String> = membership
            .iter()
            .filter(|(_, m)| *m >= a)
            .map(|(x, _)| x.clone())
            .collect();
        (alpha_label(a), cut)
    });
    SoftSet::from_pairs(universe, pairs)
}
