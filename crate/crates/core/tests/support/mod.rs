#![allow(dead_code)]

pub mod checks;
pub mod strategies;

use std::path::PathBuf;

use chrono::{DateTime, TimeZone, Utc};
use scorecard_core::{builtin_catalog, evaluate_at, read_intake, Evaluation, IntakeForm};

pub const FIXTURES: [&str; 4] = ["lfw", "mimic-iv", "recidivism", "bcm-a"];

pub fn fixtures_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures")
}

pub fn fixture_text(stem: &str) -> String {
    let path = fixtures_dir().join(format!("{stem}.intake.json"));
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

pub fn fixture_form(stem: &str) -> IntakeForm {
    let validated = read_intake(&fixture_text(stem), &builtin_catalog())
        .expect("fixture parses")
        .unwrap_or_else(|report| panic!("{stem} fails validation: {report:?}"));
    assert!(validated.warnings.is_empty(), "{stem}: {:?}", validated.warnings);
    validated.form
}

pub fn pinned() -> DateTime<Utc> {
    Utc.with_ymd_and_hms(2025, 1, 15, 12, 0, 0).unwrap()
}

pub fn fixture_evaluation(stem: &str) -> Evaluation {
    evaluate_at(&fixture_form(stem), &builtin_catalog(), pinned()).unwrap()
}
