//! Choice values over decision tables and the ranking criteria applied
//! to them.
//!
//! A [`DecisionTable`] holds one row per candidate and one column per
//! parameter. Three procedures turn a row into a choice value:
//!
//! * binary: the row sum of `0`/`1` cells;
//! * grey: the row sum of binary cells plus the representative value of
//!   the sum of the row's grey numbers (grades are first mapped through
//!   a [`GradeScale`]);
//! * neutrosophic: the mean triplet of the row, with `1 ↦ (1,0,0)` and
//!   `0 ↦ (0,0,1)`.
//!
//! Winners are every candidate within `epsilon` of the best score,
//! ordered by score and then by table position.

use std::cmp::Ordering;
use std::fmt;

use indexmap::IndexMap;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::grade_scale::{default_scale, GradeScale, UnknownGrade};
use crate::grey::GreyNumber;
use crate::neutrosophic::{self, NeutrosophicError, NeutrosophicTriplet, DEFAULT_EPSILON};
use crate::soft_set::{check_ids, BinaryTable, SoftSetError};

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Bin(bool),
    Grade(String),
    Grey(GreyNumber),
    Neutro(NeutrosophicTriplet),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CellKind {
    Bin,
    Grade,
    Grey,
    Neutro,
}

impl Cell {
    pub fn kind(&self) -> CellKind {
        match self {
            Cell::Bin(_) => CellKind::Bin,
            Cell::Grade(_) => CellKind::Grade,
            Cell::Grey(_) => CellKind::Grey,
            Cell::Neutro(_) => CellKind::Neutro,
        }
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Cell::Bin(b) => write!(f, "{}", u8::from(*b)),
            Cell::Grade(l) => f.write_str(l),
            Cell::Grey(g) => write!(f, "{g}"),
            Cell::Neutro(x) => write!(f, "{x}"),
        }
    }
}

impl fmt::Display for CellKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CellKind::Bin => "a binary value",
            CellKind::Grade => "a grade",
            CellKind::Grey => "a grey number",
            CellKind::Neutro => "a neutrosophic triplet",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Binary,
    Grey,
    Neutrosophic,
}

impl Method {
    fn accepts(self, kind: CellKind) -> bool {
        match self {
            Method::Binary => kind == CellKind::Bin,
            Method::Grey => kind != CellKind::Neutro,
            Method::Neutrosophic => matches!(kind, CellKind::Bin | CellKind::Neutro),
        }
    }

    fn expectation(self) -> &'static str {
        match self {
            Method::Binary => "accepts only 0/1 cells",
            Method::Grey => "accepts 0/1, grade and grey-number cells",
            Method::Neutrosophic => {
                "accepts only 0/1 and triplet cells; replace it with a triplet (t;i;f) \
                 or use the grey method"
            }
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Binary => "binary",
            Method::Grey => "grey",
            Method::Neutrosophic => "neutrosophic",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Criterion {
    /// Greatest truth degree.
    Optimistic,
    /// Lowest falsity degree.
    Conservative,
    /// Candidates chosen by both of the above.
    #[default]
    Combined,
}

impl fmt::Display for Criterion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Criterion::Optimistic => "optimistic",
            Criterion::Conservative => "conservative",
            Criterion::Combined => "combined",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum TableError {
    #[error("a decision table needs at least one candidate")]
    NoCandidates,
    #[error("a decision table needs at least one parameter")]
    NoParameters,
    #[error(transparent)]
    Identifiers(#[from] SoftSetError),
    #[error("expected {expected} candidate rows, found {found}")]
    RowCount { expected: usize, found: usize },
    #[error("candidate `{candidate}` has {found} cells, expected {expected}")]
    ColumnCount {
        candidate: String,
        expected: usize,
        found: usize,
    },
    #[error("cell ({candidate}, {parameter}): grey number {interval} is not inside [0;1]")]
    GreyOutsideUnit {
        candidate: String,
        parameter: String,
        interval: GreyNumber,
    },
    #[error("cell ({candidate}, {parameter}): grade label `{label}` must match [A-Za-z][A-Za-z0-9_]*")]
    BadGradeLabel {
        candidate: String,
        parameter: String,
        label: String,
    },
    #[error("identifier `{0}` must not contain commas or line breaks, nor start or end with whitespace")]
    BadIdentifier(String),
}

/// Grade labels are a letter followed by letters, digits or underscores.
pub fn is_grade_label(s: &str) -> bool {
    let mut chars = s.chars();
    chars.next().is_some_and(|c| c.is_ascii_alphabetic())
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Identifiers must survive a trip through the comma-separated table format.
pub fn is_plain_identifier(s: &str) -> bool {
    !s.is_empty() && s.trim() == s && !s.contains([',', '\n', '\r'])
}

/// Candidates × parameters matrix of cells.
#[derive(Debug, Clone, PartialEq)]
pub struct DecisionTable {
    candidates: Vec<String>,
    parameters: Vec<String>,
    cells: Vec<Vec<Cell>>,
}

impl DecisionTable {
    pub fn new(
        candidates: Vec<String>,
        parameters: Vec<String>,
        cells: Vec<Vec<Cell>>,
    ) -> Result<Self, TableError> {
        if candidates.is_empty() {
            return Err(TableError::NoCandidates);
        }
        if parameters.is_empty() {
            return Err(TableError::NoParameters);
        }
        check_ids("candidate", &candidates)?;
        check_ids("parameter", &parameters)?;
        if let Some(bad) = candidates.iter().chain(&parameters).find(|id| !is_plain_identifier(id)) {
            return Err(TableError::BadIdentifier(bad.clone()));
        }
        if cells.len() != candidates.len() {
            return Err(TableError::RowCount {
                expected: candidates.len(),
                found: cells.len(),
            });
        }
        for (candidate, row) in candidates.iter().zip(&cells) {
            if row.len() != parameters.len() {
                return Err(TableError::ColumnCount {
                    candidate: candidate.clone(),
                    expected: parameters.len(),
                    found: row.len(),
                });
            }
            for (parameter, cell) in parameters.iter().zip(row) {
                match cell {
                    Cell::Grey(g) if !g.within_unit() => {
                        return Err(TableError::GreyOutsideUnit {
                            candidate: candidate.clone(),
                            parameter: parameter.clone(),
                            interval: *g,
                        })
                    }
                    Cell::Grade(l) if !is_grade_label(l) => {
                        return Err(TableError::BadGradeLabel {
                            candidate: candidate.clone(),
                            parameter: parameter.clone(),
                            label: l.clone(),
                        })
                    }
                    _ => {}
                }
            }
        }
        Ok(DecisionTable {
            candidates,
            parameters,
            cells,
        })
    }

    /// An all-binary decision table with the same rows and columns.
    pub fn from_binary(table: &BinaryTable) -> Result<Self, TableError> {
        let cells = table
            .cells()
            .iter()
            .map(|row| row.iter().map(|&b| Cell::Bin(b)).collect())
            .collect();
        DecisionTable::new(table.row_ids().to_vec(), table.col_ids().to_vec(), cells)
    }

    pub fn candidates(&self) -> &[String] {
        &self.candidates
    }

    pub fn parameters(&self) -> &[String] {
        &self.parameters
    }

    pub fn rows(&self) -> &[Vec<Cell>] {
        &self.cells
    }

    pub fn cell(&self, row: usize, col: usize) -> Option<&Cell> {
        self.cells.get(row)?.get(col)
    }

    fn check_method(&self, method: Method) -> Result<(), DecisionError> {
        for (r, row) in self.cells.iter().enumerate() {
            for (c, cell) in row.iter().enumerate() {
                if !method.accepts(cell.kind()) {
                    return Err(DecisionError::CellMismatch {
                        location: self.location(r, c),
                        found: cell.kind(),
                        token: cell.to_string(),
                        method,
                    });
                }
            }
        }
        Ok(())
    }

    fn location(&self, row: usize, col: usize) -> CellLocation {
        CellLocation {
            row,
            col,
            candidate: self.candidates[row].clone(),
            parameter: self.parameters[col].clone(),
        }
    }
}

/// Position of a cell, by index and by identifier.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellLocation {
    pub row: usize,
    pub col: usize,
    pub candidate: String,
    pub parameter: String,
}

impl fmt::Display for CellLocation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "cell ({}, {})", self.candidate, self.parameter)
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum DecisionError {
    #[error("{location} holds {found} `{token}`; the {method} method {}", .method.expectation())]
    CellMismatch {
        location: CellLocation,
        found: CellKind,
        token: String,
        method: Method,
    },
    #[error("{location}: {source}")]
    UnknownGrade {
        location: CellLocation,
        #[source]
        source: UnknownGrade,
    },
    #[error("inconsistent options: {0}")]
    InvalidOptions(String),
    #[error("triplet arithmetic failed: {0}")]
    Neutrosophic(#[from] NeutrosophicError),
}

/// Row sums of an all-binary table.
pub fn choice_values_binary(table: &DecisionTable) -> Result<IndexMap<String, u32>, DecisionError> {
    table.check_method(Method::Binary)?;
    Ok(table
        .candidates
        .iter()
        .zip(&table.cells)
        .map(|(c, row)| {
            let ones = row.iter().filter(|cell| matches!(cell, Cell::Bin(true))).count();
            (c.clone(), ones as u32)
        })
        .collect())
}

/// Binary row sum plus the representative value of the summed grey
/// numbers of the row. Grades are resolved through `scale`.
pub fn choice_values_grey(
    table: &DecisionTable,
    scale: &GradeScale,
) -> Result<IndexMap<String, f64>, DecisionError> {
    table.check_method(Method::Grey)?;
    let mut out = IndexMap::with_capacity(table.candidates.len());
    for (r, (candidate, row)) in table.candidates.iter().zip(&table.cells).enumerate() {
        let mut ones = 0u32;
        let mut grey: Option<GreyNumber> = None;
        for (c, cell) in row.iter().enumerate() {
            let g = match cell {
                Cell::Bin(b) => {
                    ones += u32::from(*b);
                    continue;
                }
                Cell::Grey(g) => *g,
                Cell::Grade(label) => {
                    scale
                        .grade_to_gn(label)
                        .map_err(|source| DecisionError::UnknownGrade {
                            location: table.location(r, c),
                            source,
                        })?
                }
                Cell::Neutro(_) => unreachable!("rejected by check_method"),
            };
            grey = Some(match grey {
                Some(acc) => acc + g,
                None => g,
            });
        }
        let score = f64::from(ones) + grey.map_or(0.0, |g| g.value());
        out.insert(candidate.clone(), score);
    }
    Ok(out)
}

/// Mean triplet of each row, with binary cells embedded as full truth
/// or full falsity.
pub fn choice_values_neutrosophic(
    table: &DecisionTable,
) -> Result<IndexMap<String, NeutrosophicTriplet>, DecisionError> {
    table.check_method(Method::Neutrosophic)?;
    let mut out = IndexMap::with_capacity(table.candidates.len());
    for (candidate, row) in table.candidates.iter().zip(&table.cells) {
        let triplets = row.iter().map(|cell| match cell {
            Cell::Bin(b) => NeutrosophicTriplet::from_bool(*b),
            Cell::Neutro(x) => *x,
            _ => unreachable!("rejected by check_method"),
        });
        out.insert(candidate.clone(), neutrosophic::mean_of(triplets)?);
    }
    Ok(out)
}

/// Every key whose `key` value is within `epsilon` of the greatest,
/// greatest first. Ties keep map order.
fn best_within<T, K>(scores: &IndexMap<String, T>, epsilon: f64, key: K) -> Vec<String>
where
    K: Fn(&T) -> f64,
{
    let Some(best) = scores.values().map(&key).reduce(f64::max) else {
        return Vec::new();
    };
    let mut hits: Vec<(&String, f64)> = scores
        .iter()
        .map(|(c, s)| (c, key(s)))
        .filter(|&(_, v)| v >= best - epsilon)
        .collect();
    hits.sort_by(|a, b| b.1.partial_cmp(&a.1).unwrap_or(Ordering::Equal));
    hits.into_iter().map(|(c, _)| c.clone()).collect()
}

/// Candidates with the greatest truth degree.
pub fn rank_optimistic(scores: &IndexMap<String, NeutrosophicTriplet>, epsilon: f64) -> Vec<String> {
    best_within(scores, epsilon, NeutrosophicTriplet::truth)
}

/// Candidates with the lowest falsity degree.
pub fn rank_conservative(scores: &IndexMap<String, NeutrosophicTriplet>, epsilon: f64) -> Vec<String> {
    best_within(scores, epsilon, |x| -x.falsity())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CombinedRanking {
    pub winners: Vec<String>,
    /// The optimistic and conservative winners were disjoint.
    pub fallback: bool,
}

/// Candidates chosen by both the optimistic and the conservative
/// criterion.
///
/// When no candidate satisfies both, a single winner is picked by the
/// greatest `t - f`; near-ties (within `epsilon`) go to the lowest
/// indeterminacy and then to table order.
pub fn rank_combined(scores: &IndexMap<String, NeutrosophicTriplet>, epsilon: f64) -> CombinedRanking {
    let optimistic = rank_optimistic(scores, epsilon);
    let conservative = rank_conservative(scores, epsilon);
    let mut both: Vec<(usize, &String, &NeutrosophicTriplet)> = scores
        .iter()
        .enumerate()
        .filter(|(_, (c, _))| optimistic.contains(c) && conservative.contains(c))
        .map(|(k, (c, x))| (k, c, x))
        .collect();

    if !both.is_empty() {
        both.sort_by(|a, b| {
            let margin = |x: &NeutrosophicTriplet| x.truth() - x.falsity();
            margin(b.2)
                .partial_cmp(&margin(a.2))
                .unwrap_or(Ordering::Equal)
                .then(a.0.cmp(&b.0))
        });
        return CombinedRanking {
            winners: both.into_iter().map(|(_, c, _)| c.clone()).collect(),
            fallback: false,
        };
    }

    let Some(best) = scores
        .values()
        .map(|x| x.truth() - x.falsity())
        .reduce(f64::max)
    else {
        return CombinedRanking {
            winners: Vec::new(),
            fallback: false,
        };
    };
    let winner = scores
        .iter()
        .filter(|(_, x)| x.truth() - x.falsity() >= best - epsilon)
        .min_by(|a, b| {
            a.1.indeterminacy()
                .partial_cmp(&b.1.indeterminacy())
                .unwrap_or(Ordering::Equal)
        })
        .map(|(c, _)| c.clone());
    CombinedRanking {
        winners: winner.into_iter().collect(),
        fallback: true,
    }
}

/// Options for [`decide`].
#[derive(Debug, Clone, PartialEq)]
pub struct DecideOptions {
    /// Grade scale for the grey method. `None` means the default A–F scale.
    pub scale: Option<GradeScale>,
    /// Ranking criterion for the neutrosophic method. `None` means combined.
    pub criterion: Option<Criterion>,
    /// Tie tolerance for winner detection.
    pub epsilon: f64,
}

impl Default for DecideOptions {
    fn default() -> Self {
        DecideOptions {
            scale: None,
            criterion: None,
            epsilon: DEFAULT_EPSILON,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "method", content = "values", rename_all = "lowercase")]
pub enum Scores {
    Binary(IndexMap<String, u32>),
    Grey(IndexMap<String, f64>),
    Neutrosophic(IndexMap<String, NeutrosophicTriplet>),
}

impl Scores {
    pub fn method(&self) -> Method {
        match self {
            Scores::Binary(_) => Method::Binary,
            Scores::Grey(_) => Method::Grey,
            Scores::Neutrosophic(_) => Method::Neutrosophic,
        }
    }

    pub fn len(&self) -> usize {
        match self {
            Scores::Binary(m) => m.len(),
            Scores::Grey(m) => m.len(),
            Scores::Neutrosophic(m) => m.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn contains(&self, candidate: &str) -> bool {
        match self {
            Scores::Binary(m) => m.contains_key(candidate),
            Scores::Grey(m) => m.contains_key(candidate),
            Scores::Neutrosophic(m) => m.contains_key(candidate),
        }
    }
}

/// Indeterminacy of a contending candidate compared with the others.
///
/// Higher indeterminacy means more doubt about the candidate's grades,
/// so choosing it carries more risk.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RiskNote {
    pub indeterminacy: f64,
    /// Contenders with strictly lower indeterminacy.
    pub riskier_than: Vec<String>,
    /// Contenders with strictly higher indeterminacy.
    pub safer_than: Vec<String>,
}

/// Remarks on where a result relies on a rule of this tool rather than
/// on an unambiguous textbook procedure.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ReportFlag {
    /// Combined winners are the intersection of the optimistic and
    /// conservative winner sets.
    CombinedIsIntersection,
    /// The intersection was empty and the `t - f` fallback picked the winner.
    CombinedFallback,
}

impl fmt::Display for ReportFlag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ReportFlag::CombinedIsIntersection => {
                "combined criterion: winners are the candidates chosen by both the optimistic \
                 and the conservative criterion (tool convention)"
            }
            ReportFlag::CombinedFallback => {
                "combined criterion: no candidate is chosen by both criteria; the winner has the \
                 greatest t - f, then the lowest indeterminacy, then the earliest table position \
                 (tool convention)"
            }
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct DecisionReport {
    pub method: Method,
    pub scores: Scores,
    pub winners: Vec<String>,
    pub criterion: Option<Criterion>,
    pub optimistic: Vec<String>,
    pub conservative: Vec<String>,
    pub risk_notes: IndexMap<String, RiskNote>,
    pub flags: Vec<ReportFlag>,
}

fn risk_notes(
    scores: &IndexMap<String, NeutrosophicTriplet>,
    contenders: &[&String],
    epsilon: f64,
) -> IndexMap<String, RiskNote> {
    contenders
        .iter()
        .map(|&c| {
            let i = scores[c].indeterminacy();
            let others = || contenders.iter().filter(move |&&o| o != c);
            let riskier_than = others()
                .filter(|&&o| scores[o].indeterminacy() < i - epsilon)
                .map(|&o| o.clone())
                .collect();
            let safer_than = others()
                .filter(|&&o| scores[o].indeterminacy() > i + epsilon)
                .map(|&o| o.clone())
                .collect();
            (
                c.clone(),
                RiskNote {
                    indeterminacy: i,
                    riskier_than,
                    safer_than,
                },
            )
        })
        .collect()
}

/// Runs one procedure over `table` and packages scores, winners and
/// (for the neutrosophic method) the criteria outcome with risk notes.
pub fn decide(
    table: &DecisionTable,
    method: Method,
    options: &DecideOptions,
) -> Result<DecisionReport, DecisionError> {
    let epsilon = options.epsilon;
    if !(epsilon.is_finite() && epsilon > 0.0) {
        return Err(DecisionError::InvalidOptions(format!(
            "epsilon must be a positive finite number, got {epsilon}"
        )));
    }
    if options.scale.is_some() && method != Method::Grey {
        return Err(DecisionError::InvalidOptions(format!(
            "a grade scale only applies to the grey method, not {method}"
        )));
    }
    if options.criterion.is_some() && method != Method::Neutrosophic {
        return Err(DecisionError::InvalidOptions(format!(
            "a ranking criterion only applies to the neutrosophic method, not {method}"
        )));
    }

    let mut report = DecisionReport {
        method,
        scores: Scores::Binary(IndexMap::new()),
        winners: Vec::new(),
        criterion: None,
        optimistic: Vec::new(),
        conservative: Vec::new(),
        risk_notes: IndexMap::new(),
        flags: Vec::new(),
    };

    match method {
        Method::Binary => {
            let scores = choice_values_binary(table)?;
            report.winners = best_within(&scores, epsilon, |&s| f64::from(s));
            report.scores = Scores::Binary(scores);
        }
        Method::Grey => {
            let default;
            let scale = match &options.scale {
                Some(s) => s,
                None => {
                    default = default_scale();
                    &default
                }
            };
            let scores = choice_values_grey(table, scale)?;
            report.winners = best_within(&scores, epsilon, |&s| s);
            report.scores = Scores::Grey(scores);
        }
        Method::Neutrosophic => {
            let criterion = options.criterion.unwrap_or_default();
            let scores = choice_values_neutrosophic(table)?;
            report.optimistic = rank_optimistic(&scores, epsilon);
            report.conservative = rank_conservative(&scores, epsilon);
            report.winners = match criterion {
                Criterion::Optimistic => report.optimistic.clone(),
                Criterion::Conservative => report.conservative.clone(),
                Criterion::Combined => {
                    let combined = rank_combined(&scores, epsilon);
                    report.flags.push(if combined.fallback {
                        ReportFlag::CombinedFallback
                    } else {
                        ReportFlag::CombinedIsIntersection
                    });
                    combined.winners
                }
            };
            let contenders: Vec<&String> = scores
                .keys()
                .filter(|c| {
                    report.optimistic.contains(c)
                        || report.conservative.contains(c)
                        || report.winners.contains(c)
                })
                .collect();
            report.risk_notes = risk_notes(&scores, &contenders, epsilon);
            report.criterion = Some(criterion);
            report.scores = Scores::Neutrosophic(scores);
        }
    }
    Ok(report)
}
