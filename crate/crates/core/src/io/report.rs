//! Text and JSON renderings of a [`DecisionReport`].
//!
//! Both renderings come from the same [`ReportDocument`], field for
//! field. Numbers are printed as the shortest decimal that reads back to
//! the same `f64`.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::decision::{Criterion, DecisionReport, Method, ReportFlag, Scores};
use crate::neutrosophic::NeutrosophicTriplet;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ScoreValue {
    Integer(u32),
    Real(f64),
    Triplet(NeutrosophicTriplet),
}

impl std::fmt::Display for ScoreValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ScoreValue::Integer(n) => write!(f, "{n}"),
            ScoreValue::Real(x) => write!(f, "{x}"),
            ScoreValue::Triplet(x) => write!(f, "{x}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScoreEntry {
    pub candidate: String,
    pub score: ScoreValue,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RiskEntry {
    pub candidate: String,
    pub indeterminacy: f64,
    pub riskier_than: Vec<String>,
    pub safer_than: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FlagEntry {
    pub code: ReportFlag,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub method: Method,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub criterion: Option<Criterion>,
    pub scores: Vec<ScoreEntry>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub optimistic: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub conservative: Vec<String>,
    pub winners: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub risk: Vec<RiskEntry>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<FlagEntry>,
}

impl From<&DecisionReport> for ReportDocument {
    fn from(r: &DecisionReport) -> Self {
        let scores = match &r.scores {
            Scores::Binary(m) => m
                .iter()
                .map(|(c, &v)| (c, ScoreValue::Integer(v)))
                .collect::<Vec<_>>(),
            Scores::Grey(m) => m.iter().map(|(c, &v)| (c, ScoreValue::Real(v))).collect(),
            Scores::Neutrosophic(m) => m.iter().map(|(c, &v)| (c, ScoreValue::Triplet(v))).collect(),
        };
        ReportDocument {
            method: r.method,
            criterion: r.criterion,
            scores: scores
                .into_iter()
                .map(|(c, score)| ScoreEntry {
                    candidate: c.clone(),
                    score,
                })
                .collect(),
            optimistic: r.optimistic.clone(),
            conservative: r.conservative.clone(),
            winners: r.winners.clone(),
            risk: r
                .risk_notes
                .iter()
                .map(|(c, n)| RiskEntry {
                    candidate: c.clone(),
                    indeterminacy: n.indeterminacy,
                    riskier_than: n.riskier_than.clone(),
                    safer_than: n.safer_than.clone(),
                })
                .collect(),
            notes: r
                .flags
                .iter()
                .map(|&code| FlagEntry {
                    code,
                    message: code.to_string(),
                })
                .collect(),
        }
    }
}

impl ReportDocument {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let list = |v: &[String]| v.join(", ");
        let _ = writeln!(out, "method: {}", self.method);
        if let Some(c) = self.criterion {
            let _ = writeln!(out, "criterion: {c}");
        }
        let width = self
            .scores
            .iter()
            .map(|s| s.candidate.chars().count())
            .max()
            .unwrap_or(0);
        out.push_str("scores:\n");
        for s in &self.scores {
            let _ = writeln!(out, "  {:<width$}  {}", s.candidate, s.score);
        }
        if !self.optimistic.is_empty() {
            let _ = writeln!(out, "optimistic: {}", list(&self.optimistic));
        }
        if !self.conservative.is_empty() {
            let _ = writeln!(out, "conservative: {}", list(&self.conservative));
        }
        let _ = writeln!(out, "winners: {}", list(&self.winners));
        if !self.risk.is_empty() {
            out.push_str("risk:\n");
            for r in &self.risk {
                let _ = write!(out, "  {}: indeterminacy {}", r.candidate, r.indeterminacy);
                if !r.riskier_than.is_empty() {
                    let _ = write!(out, "; riskier than {}", list(&r.riskier_than));
                }
                if !r.safer_than.is_empty() {
                    let _ = write!(out, "; safer than {}", list(&r.safer_than));
                }
                out.push('\n');
            }
        }
        if !self.notes.is_empty() {
            out.push_str("notes:\n");
            for n in &self.notes {
                let _ = writeln!(out, "  - {}", n.message);
            }
        }
        out
    }
}
