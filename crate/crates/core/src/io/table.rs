//! Comma-separated decision tables.
//!
//! ```text
//! candidate,e1,e2,e3,e4
//! P1,1,0,0,C
//! P3,[0.6;0.74],1,1,(0.6;0.2;0.2)
//! ```
//!
//! The first line is the header: a corner field (ignored) followed by the
//! parameter identifiers. Every following line is a candidate identifier
//! followed by one cell token per parameter. Cell tokens are `0`, `1`, a
//! grade label, a grey interval `[x;y]` or a triplet `(t;i;f)`. Numbers
//! are unsigned decimals with an optional fractional part. Blank lines
//! are skipped, `\r\n` line endings are accepted, and whitespace around a
//! field is ignored.

use std::fmt;

use thiserror::Error;

use crate::decision::{is_grade_label, Cell, DecisionTable, TableError};
use crate::grey::GreyNumber;
use crate::neutrosophic::NeutrosophicTriplet;

/// Corner field written by [`write_table`].
pub const CORNER: &str = "candidate";

/// Why a single cell token was rejected.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum CellTokenError {
    #[error("empty cell")]
    Empty,
    #[error("expected {expected} components, found {found}")]
    Arity { expected: usize, found: usize },
    #[error("`{0}` is not an unsigned decimal number")]
    BadNumber(String),
    #[error("{0} degree must lie in [0, 1]")]
    TripletRange(&'static str),
    #[error("grey interval lower bound exceeds upper bound")]
    InvertedInterval,
    #[error("grey interval must lie inside [0;1]")]
    IntervalRange,
    #[error("not a cell token (expected 0, 1, a grade label, [x;y] or (t;i;f))")]
    Unrecognized,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ParseErrorKind {
    #[error("input has no header line")]
    MissingHeader,
    #[error("header declares no parameters")]
    NoParameters,
    #[error("table has no candidate rows")]
    NoCandidates,
    #[error("row has {found} fields, expected {expected}")]
    Ragged { expected: usize, found: usize },
    #[error("empty identifier")]
    EmptyIdentifier,
    #[error("duplicate {0} identifier")]
    Duplicate(&'static str),
    #[error("malformed cell: {0}")]
    Cell(#[from] CellTokenError),
    #[error("{0}")]
    Table(TableError),
}

/// A table parse failure with its 1-based position and the offending text.
#[derive(Debug, Clone, PartialEq, Error)]
#[error("line {line}, column {column}: {kind} (at `{token}`)")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub token: String,
    pub kind: ParseErrorKind,
}

/// A parsed table together with where each cell came from.
#[derive(Debug, Clone, PartialEq)]
pub struct TableDocument {
    pub table: DecisionTable,
    /// `(line, column)` of every cell, indexed like the table.
    pub positions: Vec<Vec<(usize, usize)>>,
}

impl TableDocument {
    pub fn position(&self, row: usize, col: usize) -> Option<(usize, usize)> {
        self.positions.get(row)?.get(col).copied()
    }
}

fn is_decimal(s: &str) -> bool {
    let (int, frac) = match s.split_once('.') {
        Some((i, f)) => (i, Some(f)),
        None => (s, None),
    };
    let digits = |p: &str| !p.is_empty() && p.bytes().all(|b| b.is_ascii_digit());
    digits(int) && frac.is_none_or(digits)
}

fn number(s: &str) -> Result<f64, CellTokenError> {
    if !is_decimal(s) {
        return Err(CellTokenError::BadNumber(s.to_owned()));
    }
    s.parse::<f64>()
        .ok()
        .filter(|x| x.is_finite())
        .ok_or_else(|| CellTokenError::BadNumber(s.to_owned()))
}

fn components<const N: usize>(inner: &str) -> Result<[f64; N], CellTokenError> {
    let parts: Vec<&str> = inner.split(';').collect();
    if parts.len() != N {
        return Err(CellTokenError::Arity {
            expected: N,
            found: parts.len(),
        });
    }
    let mut out = [0.0; N];
    for (slot, p) in out.iter_mut().zip(parts) {
        *slot = number(p)?;
    }
    Ok(out)
}

/// Parses a grey interval token `[x;y]`.
pub fn parse_grey(token: &str) -> Result<GreyNumber, CellTokenError> {
    let inner = token
        .strip_prefix('[')
        .and_then(|t| t.strip_suffix(']'))
        .ok_or(CellTokenError::Unrecognized)?;
    let [lower, upper] = components::<2>(inner)?;
    let g = GreyNumber::new(lower, upper).map_err(|_| CellTokenError::InvertedInterval)?;
    if !g.within_unit() {
        return Err(CellTokenError::IntervalRange);
    }
    Ok(g)
}

/// Parses a triplet token `(t;i;f)`.
pub fn parse_triplet(token: &str) -> Result<NeutrosophicTriplet, CellTokenError> {
    let inner = token
        .strip_prefix('(')
        .and_then(|t| t.strip_suffix(')'))
        .ok_or(CellTokenError::Unrecognized)?;
    let [t, i, f] = components::<3>(inner)?;
    for (name, v) in [("truth", t), ("indeterminacy", i), ("falsity", f)] {
        if v > 1.0 {
            return Err(CellTokenError::TripletRange(name));
        }
    }
    NeutrosophicTriplet::new(t, i, f).map_err(|_| CellTokenError::TripletRange("triplet"))
}

/// Parses one cell token.
pub fn parse_cell(token: &str) -> Result<Cell, CellTokenError> {
    match token {
        "" => Err(CellTokenError::Empty),
        "0" => Ok(Cell::Bin(false)),
        "1" => Ok(Cell::Bin(true)),
        t if t.starts_with('[') => parse_grey(t).map(Cell::Grey),
        t if t.starts_with('(') => parse_triplet(t).map(Cell::Neutro),
        t if is_grade_label(t) => Ok(Cell::Grade(t.to_owned())),
        _ => Err(CellTokenError::Unrecognized),
    }
}

struct Field<'a> {
    text: &'a str,
    column: usize,
}

/// Splits a line on commas, trimming each field and recording its
/// 1-based character column.
fn fields(line: &str) -> Vec<Field<'_>> {
    let mut out = Vec::new();
    let mut start = 0;
    for piece in line.split(',') {
        let lead = piece.len() - piece.trim_start().len();
        let column = line[..start + lead].chars().count() + 1;
        out.push(Field {
            text: piece.trim(),
            column,
        });
        start += piece.len() + 1;
    }
    out
}

/// Parses a table and keeps each cell's source position.
pub fn parse_table_document(text: &str) -> Result<TableDocument, ParseError> {
    let text = text.strip_prefix('\u{feff}').unwrap_or(text);
    let mut lines = text
        .split('\n')
        .enumerate()
        .map(|(k, l)| (k + 1, l.strip_suffix('\r').unwrap_or(l)))
        .filter(|(_, l)| !l.trim().is_empty());

    let err = |line: usize, column: usize, token: &str, kind: ParseErrorKind| ParseError {
        line,
        column,
        token: token.to_owned(),
        kind,
    };

    let (header_line, header) = lines
        .next()
        .ok_or_else(|| err(1, 1, "", ParseErrorKind::MissingHeader))?;
    let header = fields(header);
    let width = header.len();
    if width < 2 {
        return Err(err(header_line, 1, header[0].text, ParseErrorKind::NoParameters));
    }
    let mut parameters: Vec<String> = Vec::with_capacity(width - 1);
    for f in &header[1..] {
        if f.text.is_empty() {
            return Err(err(header_line, f.column, f.text, ParseErrorKind::EmptyIdentifier));
        }
        if parameters.iter().any(|p| p == f.text) {
            return Err(err(header_line, f.column, f.text, ParseErrorKind::Duplicate("parameter")));
        }
        parameters.push(f.text.to_owned());
    }

    let mut candidates: Vec<String> = Vec::new();
    let mut cells = Vec::new();
    let mut positions = Vec::new();
    for (line_no, line) in lines {
        let row = fields(line);
        if row.len() != width {
            return Err(err(
                line_no,
                1,
                line.trim(),
                ParseErrorKind::Ragged {
                    expected: width,
                    found: row.len(),
                },
            ));
        }
        let id = &row[0];
        if id.text.is_empty() {
            return Err(err(line_no, id.column, id.text, ParseErrorKind::EmptyIdentifier));
        }
        if candidates.iter().any(|c| c == id.text) {
            return Err(err(line_no, id.column, id.text, ParseErrorKind::Duplicate("candidate")));
        }
        let mut row_cells = Vec::with_capacity(width - 1);
        let mut row_pos = Vec::with_capacity(width - 1);
        for f in &row[1..] {
            let cell = parse_cell(f.text).map_err(|e| err(line_no, f.column, f.text, e.into()))?;
            row_cells.push(cell);
            row_pos.push((line_no, f.column));
        }
        candidates.push(id.text.to_owned());
        cells.push(row_cells);
        positions.push(row_pos);
    }
    if candidates.is_empty() {
        return Err(err(header_line, 1, "", ParseErrorKind::NoCandidates));
    }

    let table = DecisionTable::new(candidates, parameters, cells)
        .map_err(|e| err(header_line, 1, "", ParseErrorKind::Table(e)))?;
    Ok(TableDocument { table, positions })
}

pub fn parse_table(text: &str) -> Result<DecisionTable, ParseError> {
    parse_table_document(text).map(|d| d.table)
}

/// Renders a table in the format read by [`parse_table`]. Numbers use
/// the shortest decimal that reads back to the same `f64`, so the
/// round trip is exact.
pub fn write_table(table: &DecisionTable) -> String {
    let mut out = String::new();
    write_table_to(&mut out, table).expect("writing to a String cannot fail");
    out
}

fn write_table_to(out: &mut impl fmt::Write, table: &DecisionTable) -> fmt::Result {
    out.write_str(CORNER)?;
    for p in table.parameters() {
        write!(out, ",{p}")?;
    }
    out.write_char('\n')?;
    for (c, row) in table.candidates().iter().zip(table.rows()) {
        out.write_str(c)?;
        for cell in row {
            write!(out, ",{cell}")?;
        }
        out.write_char('\n')?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    const TABLE3: &str = "candidate,e1,e2,e3,e4\n\
        P1,1,0,0,C\n\
        P2,1,1,0,F\n\
        P3,C,1,1,C\n\
        P4,D,0,0,1\n\
        P5,D,1,1,C\n\
        P6,1,1,0,D\n";

    #[test]
    fn cell_tokens() {
        assert_eq!(parse_cell("0"), Ok(Cell::Bin(false)));
        assert_eq!(parse_cell("1"), Ok(Cell::Bin(true)));
        assert_eq!(parse_cell("C"), Ok(Cell::Grade("C".into())));
        assert_eq!(parse_cell("Very_good2"), Ok(Cell::Grade("Very_good2".into())));
        assert_eq!(
            parse_cell("[0.6;0.74]"),
            Ok(Cell::Grey(GreyNumber::new(0.6, 0.74).unwrap()))
        );
        assert_eq!(
            parse_cell("(0.6;0.3;0.1)"),
            Ok(Cell::Neutro(NeutrosophicTriplet::new(0.6, 0.3, 0.1).unwrap()))
        );
    }

    #[test]
    fn malformed_cell_tokens() {
        assert_eq!(
            parse_cell("(0.6;0.3)"),
            Err(CellTokenError::Arity { expected: 3, found: 2 })
        );
        assert_eq!(
            parse_cell("[0.6]"),
            Err(CellTokenError::Arity { expected: 2, found: 1 })
        );
        assert_eq!(parse_cell("(1.2;0;0)"), Err(CellTokenError::TripletRange("truth")));
        assert_eq!(parse_cell("[0.7;0.6]"), Err(CellTokenError::InvertedInterval));
        assert_eq!(parse_cell("[0.5;1.5]"), Err(CellTokenError::IntervalRange));
        for bad in ["(-0.1;0;0)", "(0.1; 0.2;0.3)", "(.5;0;0)", "(1e-3;0;0)", "[0,1]", "[0.5;0.6"] {
            assert!(parse_cell(bad).is_err(), "{bad}");
        }
        assert_eq!(parse_cell("2"), Err(CellTokenError::Unrecognized));
        assert_eq!(parse_cell("1.0"), Err(CellTokenError::Unrecognized));
        assert_eq!(parse_cell("_A"), Err(CellTokenError::Unrecognized));
        assert_eq!(parse_cell(""), Err(CellTokenError::Empty));
    }

    #[test]
    fn parses_grades_and_round_trips() {
        let table = parse_table(TABLE3).unwrap();
        assert_eq!(table.candidates().len(), 6);
        assert_eq!(table.cell(0, 3), Some(&Cell::Grade("C".into())));
        assert_eq!(write_table(&table), TABLE3);
    }

    #[test]
    fn accepts_crlf_blank_lines_and_padding() {
        let text = "\u{feff}x , a , b\r\n\r\n p , 1 , (0.5;0.25;0) \r\n";
        let table = parse_table(text).unwrap();
        assert_eq!(table.parameters(), ["a", "b"]);
        assert_eq!(write_table(&table), "candidate,a,b\np,1,(0.5;0.25;0)\n");
    }

    #[test]
    fn error_positions() {
        let e = parse_table("c,e1,e2\nP1,1,(0.6;0.3)\n").unwrap_err();
        assert_eq!((e.line, e.column), (2, 6));
        assert_eq!(e.token, "(0.6;0.3)");
        assert!(matches!(e.kind, ParseErrorKind::Cell(CellTokenError::Arity { .. })));

        let e = parse_table("c,e1,e2\n\nP1,1\n").unwrap_err();
        assert_eq!(e.line, 3);
        assert_eq!(e.kind, ParseErrorKind::Ragged { expected: 3, found: 2 });

        let e = parse_table("c,e1,e1\nP1,1,0\n").unwrap_err();
        assert_eq!((e.line, e.column), (1, 6));
        assert_eq!(e.kind, ParseErrorKind::Duplicate("parameter"));

        let e = parse_table("c,e1\nP1,1\nP1,0\n").unwrap_err();
        assert_eq!(e.line, 3);
        assert_eq!(e.kind, ParseErrorKind::Duplicate("candidate"));

        assert_eq!(parse_table("").unwrap_err().kind, ParseErrorKind::MissingHeader);
        assert_eq!(parse_table("c\n").unwrap_err().kind, ParseErrorKind::NoParameters);
        assert_eq!(parse_table("c,e1\n").unwrap_err().kind, ParseErrorKind::NoCandidates);
        assert_eq!(parse_table("c,e1\n,1\n").unwrap_err().kind, ParseErrorKind::EmptyIdentifier);
    }

    #[test]
    fn message_carries_location_and_token() {
        let e = parse_table("c,e1\nP1,[0.9;0.1]\n").unwrap_err();
        assert_eq!(
            e.to_string(),
            "line 2, column 4: malformed cell: grey interval lower bound exceeds upper bound (at `[0.9;0.1]`)"
        );
    }
}
