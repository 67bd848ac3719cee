//! Grade scale files.
//!
//! A scale file lists `LABEL=[lower;upper]` entries, best grade first,
//! separated by whitespace or line breaks. `#` starts a comment that runs
//! to the end of the line. Labels follow the grade-label grammar
//! `[A-Za-z][A-Za-z0-9_]*`.
//!
//! ```text
//! # default scale
//! A=[0.85;1]
//! B=[0.75;0.84]
//! C=[0.6;0.74]
//! D=[0.5;0.59]
//! F=[0;0.49]
//! ```

use thiserror::Error;

use super::table::{parse_grey, CellTokenError};
use crate::decision::is_grade_label;
use crate::grade_scale::{GradeScale, InvalidScale};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ScaleParseError {
    #[error("line {line}, column {column}: expected LABEL=[lower;upper] (at `{token}`)")]
    Entry {
        line: usize,
        column: usize,
        token: String,
    },
    #[error("line {line}, column {column}: `{label}` is not a valid grade label")]
    Label {
        line: usize,
        column: usize,
        label: String,
    },
    #[error("line {line}, column {column}: {source} (at `{token}`)")]
    Interval {
        line: usize,
        column: usize,
        token: String,
        #[source]
        source: CellTokenError,
    },
    #[error(transparent)]
    Invalid(#[from] InvalidScale),
}

/// Parses and validates a grade scale.
pub fn parse_scale(text: &str) -> Result<GradeScale, ScaleParseError> {
    let text = text.strip_prefix('\u{feff}').unwrap_or(text);
    let mut entries = Vec::new();
    for (k, raw) in text.split('\n').enumerate() {
        let line = k + 1;
        let raw = raw.strip_suffix('\r').unwrap_or(raw);
        let content = raw.split_once('#').map_or(raw, |(before, _)| before);
        let mut offset = 0;
        for token in content.split_whitespace() {
            let at = offset + content[offset..].find(token).expect("token is in line");
            offset = at + token.len();
            let column = content[..at].chars().count() + 1;

            let Some((label, interval)) = token.split_once('=') else {
                return Err(ScaleParseError::Entry {
                    line,
                    column,
                    token: token.to_owned(),
                });
            };
            if !is_grade_label(label) {
                return Err(ScaleParseError::Label {
                    line,
                    column,
                    label: label.to_owned(),
                });
            }
            let grey = parse_grey(interval).map_err(|source| ScaleParseError::Interval {
                line,
                column: column + label.chars().count() + 1,
                token: interval.to_owned(),
                source,
            })?;
            entries.push((label.to_owned(), grey));
        }
    }
    Ok(GradeScale::new(entries)?)
}

/// One `LABEL=[lower;upper]` line per grade.
pub fn write_scale(scale: &GradeScale) -> String {
    scale
        .entries()
        .iter()
        .map(|(label, g)| format!("{label}={g}\n"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grade_scale::{default_scale, strict_scale, ScaleViolation};

    #[test]
    fn default_scale_text() {
        let s = parse_scale("A=[0.85;1] B=[0.75;0.84] C=[0.6;0.74] D=[0.5;0.59] F=[0;0.49]").unwrap();
        assert_eq!(s, default_scale());
        assert_eq!(parse_scale(&write_scale(&s)).unwrap(), s);
    }

    #[test]
    fn strict_scale_text_with_comments() {
        let text = "# stricter\r\nA=[0.9;1]\nB=[0.8;0.89]  # very good\nC=[0.7;0.79]\nD=[0.6;0.69]\nF=[0;0.59]\n";
        assert_eq!(parse_scale(text).unwrap(), strict_scale());
    }

    #[test]
    fn overlap_is_a_validation_error() {
        match parse_scale("A=[0.9;1]\nB=[0.85;0.95]\n") {
            Err(ScaleParseError::Invalid(InvalidScale(v))) => {
                assert!(v.contains(&ScaleViolation::Overlap {
                    first: "A".into(),
                    second: "B".into()
                }))
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn grammar_errors() {
        assert!(matches!(
            parse_scale("A=[0.9;1]\n  B:[0.8;0.89]"),
            Err(ScaleParseError::Entry { line: 2, column: 3, .. })
        ));
        assert!(matches!(
            parse_scale("9=[0.9;1]"),
            Err(ScaleParseError::Label { .. })
        ));
        assert!(matches!(
            parse_scale("A=[0.9;1] B=[0.89;0.8]"),
            Err(ScaleParseError::Interval { line: 1, column: 13, .. })
        ));
        assert!(matches!(
            parse_scale("# nothing here\n"),
            Err(ScaleParseError::Invalid(_))
        ));
    }
}
