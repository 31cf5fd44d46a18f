//! Dataset development scorecards.
//!
//! A [`rubric::RubricCatalog`] defines five assessment areas of categorical
//! criteria scored -1, 0 or +1. Completed intake documents are validated
//! against it ([`intake`]), averaged per area and banded red/yellow/green
//! ([`scoring`]), and turned into scorecards ([`reporting`]).

pub mod error;
pub mod intake;
pub mod reporting;
pub mod rubric;
pub mod scoring;

pub use error::{CatalogError, IntakeSyntaxError, ReportError, ScoringError};
pub use intake::{
    blank_intake, parse_intake, read_intake, validate_intake, IntakeForm, IntakeTemplate, ValidatedIntake,
    ValidationReport,
};
pub use reporting::{batch_summary, build_scorecard, deficiencies, RecommendationCatalog, RendererRegistry, Scorecard};
pub use rubric::{builtin_catalog, load_catalog, RubricCatalog};
pub use scoring::{classify, evaluate, evaluate_at, score_area, score_response, Color, Evaluation};
