//! File formats: decision tables, grade scales and reports.

mod report;
mod scale;
mod table;

pub use report::{FlagEntry, ReportDocument, RiskEntry, ScoreEntry, ScoreValue};
pub use scale::{parse_scale, write_scale, ScaleParseError};
pub use table::{
    parse_cell, parse_grey, parse_table, parse_table_document, parse_triplet, write_table,
    CellTokenError, ParseError, ParseErrorKind, TableDocument, CORNER,
};
