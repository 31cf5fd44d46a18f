use thiserror::Error;

use crate::rubric::{CatalogRef, IntegrityIssue};

#[derive(Debug, Error)]
pub enum CatalogError {
    #[error("rubric parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("rubric integrity error: {}", join(.0))]
    Integrity(Vec<IntegrityIssue>),
}

/// Structural failure reading an intake document.
#[derive(Debug, Error)]
#[error("intake syntax error at line {line}, column {column}: {message}")]
pub struct IntakeSyntaxError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ScoringError {
    #[error("intake was written against {intake} but the active catalog is {catalog}")]
    VersionMismatch { intake: CatalogRef, catalog: CatalogRef },
    #[error("area {0} has no applicable criteria")]
    NoApplicableCriteria(String),
    #[error("score {0} lies outside [-1, 1]")]
    OutOfRange(String),
    #[error("no response recorded for {0}")]
    MissingResponse(String),
    #[error("{criterion}: option `{option}` does not exist")]
    UnknownOption { criterion: String, option: String },
}

#[derive(Debug, Error)]
pub enum ReportError {
    #[error("recommendation catalog has no entry for key `{0}`")]
    MissingRecommendation(String),
    #[error("unknown scorecard format `{0}`")]
    UnknownFormat(String),
    #[error("batch summary needs at least one evaluation")]
    EmptyBatch,
    #[error("batch mixes catalogs {0} and {1}")]
    MixedCatalogs(CatalogRef, CatalogRef),
    #[error("malformed machine scorecard: {0}")]
    Machine(#[from] serde_json::Error),
    #[error("recommendation catalog: {0}")]
    RecommendationCatalog(String),
}

fn join(issues: &[IntegrityIssue]) -> String {
    issues.iter().map(ToString::to_string).collect::<Vec<_>>().join("; ")
}

/// serde_json's message without its trailing " at line L column C".
pub(crate) fn json_message(e: &serde_json::Error) -> String {
    let text = e.to_string();
    let suffix = format!(" at line {} column {}", e.line(), e.column());
    text.strip_suffix(&suffix).map(str::to_string).unwrap_or(text)
}
