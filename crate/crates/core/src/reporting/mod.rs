//! Scorecards: per-area rows, remarks, an overall assessment and
//! recommendations, built from an [`Evaluation`].
//!
//! Text comes from a keyed [`RecommendationCatalog`]. Rendering to concrete
//! formats lives in [`render`].

pub mod render;

use std::collections::BTreeMap;
use std::fmt::Write as _;

use chrono::{DateTime, Utc};
use serde::{Deserialize, Serialize};

use crate::error::ReportError;
use crate::intake::{Selection, OVERALL_REMARKS_KEY};
use crate::rubric::{CatalogRef, RubricCatalog};
use crate::scoring::{rfc3339, Color, Evaluation};

pub use render::{RendererRegistry, ScorecardRenderer};

const BUILTIN_RECOMMENDATIONS: &str = include_str!("../../data/recommendations.json");

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RecommendationText {
    pub finding: String,
    pub remediation: String,
}

/// Advisory prose keyed by recommendation key.
///
/// Besides the per-criterion keys referenced by rubric options, two optional
/// area-level keys are consulted: `area.<AREA>.no_document` and
/// `area.<AREA>.maintain`. Generic wording is used when they are absent.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RecommendationCatalog {
    pub version: String,
    pub entries: BTreeMap<String, RecommendationText>,
}

impl RecommendationCatalog {
    pub fn builtin() -> Self {
        Self::from_json(BUILTIN_RECOMMENDATIONS).expect("bundled recommendation catalog parses")
    }

    pub fn from_json(text: &str) -> Result<Self, ReportError> {
        serde_json::from_str(text).map_err(|e| ReportError::RecommendationCatalog(e.to_string()))
    }

    pub fn get(&self, key: &str) -> Result<&RecommendationText, ReportError> {
        self.entries
            .get(key)
            .ok_or_else(|| ReportError::MissingRecommendation(key.to_string()))
    }

    /// Fails on the first rubric recommendation key with no entry.
    pub fn check_covers(&self, catalog: &RubricCatalog) -> Result<(), ReportError> {
        for key in catalog.recommendation_keys() {
            self.get(key)?;
        }
        Ok(())
    }

    fn no_document(&self, area_id: &str, title: &str) -> RecommendationText {
        self.entries
            .get(&format!("area.{area_id}.no_document"))
            .cloned()
            .unwrap_or_else(|| RecommendationText {
                finding: format!("No {title} document is provided."),
                remediation: format!("Publish documentation covering {title}."),
            })
    }

    fn maintain(&self, area_id: &str, title: &str) -> RecommendationText {
        self.entries
            .get(&format!("area.{area_id}.maintain"))
            .cloned()
            .unwrap_or_else(|| RecommendationText {
                finding: format!("{title} meets the rubric in full."),
                remediation: format!("Maintain the current {title} documentation as the dataset evolves."),
            })
    }
}

/// An applicable finding that fell short of +1.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Deficiency {
    pub area_id: String,
    pub criterion_id: String,
    pub criterion_name: String,
    pub option: String,
    pub option_label: String,
    pub score: i8,
    pub recommendation_key: Option<String>,
}

/// Every applicable finding scoring below +1, by area and then catalog order.
pub fn deficiencies(evaluation: &Evaluation) -> Vec<Deficiency> {
    evaluation
        .areas
        .iter()
        .flat_map(|area| {
            area.findings.iter().filter_map(move |f| match (&f.selection, f.score) {
                (Selection::Option(key), Some(score)) if score < 1 => Some(Deficiency {
                    area_id: area.area_id.clone(),
                    criterion_id: f.criterion_id.clone(),
                    criterion_name: f.criterion_name.clone(),
                    option: key.clone(),
                    option_label: f.option_label.clone().unwrap_or_default(),
                    score,
                    recommendation_key: f.recommendation_key.clone(),
                }),
                _ => None,
            })
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScorecardRow {
    pub area_id: String,
    pub title: String,
    pub document_available: bool,
    pub display_score: String,
    pub color: Color,
    pub remarks: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RecommendationBullet {
    pub key: String,
    pub text: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AreaRecommendations {
    pub area_id: String,
    pub title: String,
    pub bullets: Vec<RecommendationBullet>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Scorecard {
    pub dataset_name: String,
    pub description: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub owner_contact: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dataset_version: Option<String>,
    pub catalog: CatalogRef,
    #[serde(with = "rfc3339")]
    pub evaluated_at: DateTime<Utc>,
    pub rows: Vec<ScorecardRow>,
    pub overall_assessment: String,
    pub recommendations: Vec<AreaRecommendations>,
}

impl Scorecard {
    /// Parses the machine format produced by the `machine` renderer.
    pub fn from_machine(text: &str) -> Result<Self, ReportError> {
        Ok(serde_json::from_str(text)?)
    }
}

pub fn build_scorecard(evaluation: &Evaluation, recs: &RecommendationCatalog) -> Result<Scorecard, ReportError> {
    let deficiencies = deficiencies(evaluation);
    let meta = &evaluation.meta;

    let mut rows = Vec::with_capacity(evaluation.areas.len());
    let mut recommendations = Vec::with_capacity(evaluation.areas.len());
    for area in &evaluation.areas {
        let document_available = meta.document_available.get(&area.area_id).copied().unwrap_or(false);
        let area_defs: Vec<&Deficiency> = deficiencies.iter().filter(|d| d.area_id == area.area_id).collect();

        let mut remarks = Vec::new();
        if let Some(text) = meta.evaluator_remarks.get(&area.area_id) {
            remarks.push(text.trim().to_string());
        }
        let mut bullets: Vec<RecommendationBullet> = Vec::new();

        if !document_available {
            let text = recs.no_document(&area.area_id, &area.title);
            remarks.push(text.finding);
            push_bullet(
                &mut bullets,
                format!("area.{}.no_document", area.area_id),
                text.remediation,
            );
        }

        let mut remarked = Vec::new();
        for d in &area_defs {
            let key = d.recommendation_key.clone().ok_or_else(|| {
                ReportError::MissingRecommendation(format!("{} (option `{}`)", d.criterion_id, d.option))
            })?;
            let text = recs.get(&key)?;
            if !remarked.contains(&key) {
                remarks.push(format!("{} ({}: {}.)", text.finding, d.criterion_name, d.option_label));
                remarked.push(key.clone());
            }
            push_bullet(&mut bullets, key, text.remediation.clone());
        }

        if area_defs.is_empty() {
            remarks.push(match area.applicable_count {
                1 => "The single applicable criterion is at the top rubric level.".to_string(),
                n => format!("All {n} applicable criteria are at the top rubric level."),
            });
        }
        if bullets.is_empty() {
            let text = recs.maintain(&area.area_id, &area.title);
            push_bullet(
                &mut bullets,
                format!("area.{}.maintain", area.area_id),
                text.remediation,
            );
        }

        rows.push(ScorecardRow {
            area_id: area.area_id.clone(),
            title: area.title.clone(),
            document_available,
            display_score: area.display_score.clone(),
            color: area.color,
            remarks,
        });
        recommendations.push(AreaRecommendations {
            area_id: area.area_id.clone(),
            title: area.title.clone(),
            bullets,
        });
    }

    Ok(Scorecard {
        dataset_name: meta.dataset_name.clone(),
        description: meta.description.clone(),
        owner_contact: meta.owner_contact.clone(),
        dataset_version: meta.dataset_version.clone(),
        catalog: evaluation.catalog.clone(),
        evaluated_at: evaluation.timestamp,
        overall_assessment: overall_assessment(evaluation),
        rows,
        recommendations,
    })
}

fn push_bullet(bullets: &mut Vec<RecommendationBullet>, key: String, text: String) {
    if !bullets.iter().any(|b| b.key == key) {
        bullets.push(RecommendationBullet { key, text });
    }
}

fn overall_assessment(evaluation: &Evaluation) -> String {
    let titles = |color: Color| -> Vec<&str> {
        evaluation
            .areas
            .iter()
            .filter(|a| a.color == color)
            .map(|a| a.title.as_str())
            .collect()
    };
    let green = titles(Color::Green);
    let yellow = titles(Color::Yellow);
    let red = titles(Color::Red);

    let mut sentences = Vec::new();
    if !green.is_empty() {
        sentences.push(format!("The dataset shows strong practice in {}.", join_list(&green)));
    }
    if !yellow.is_empty() {
        let verb = if yellow.len() == 1 { "shows" } else { "show" };
        sentences.push(format!(
            "{} {verb} partial adherence and would benefit from targeted improvement.",
            join_list(&yellow)
        ));
    }
    if !red.is_empty() {
        sentences.push(format!(
            "Critical gaps remain in {}, where documentation falls well short of the rubric.",
            join_list(&red)
        ));
    }
    if let Some(extra) = evaluation.meta.evaluator_remarks.get(OVERALL_REMARKS_KEY) {
        sentences.push(extra.trim().to_string());
    }
    sentences.join(" ")
}

fn join_list(items: &[&str]) -> String {
    match items {
        [] => String::new(),
        [one] => (*one).to_string(),
        [init @ .., last] => format!("{} and {last}", init.join(", ")),
    }
}

/// Markdown matrix with a score/color column pair per area, one row per
/// evaluation in the order given.
pub fn batch_summary(evaluations: &[Evaluation]) -> Result<String, ReportError> {
    let first = evaluations.first().ok_or(ReportError::EmptyBatch)?;
    if let Some(other) = evaluations.iter().find(|e| e.catalog != first.catalog) {
        return Err(ReportError::MixedCatalogs(first.catalog.clone(), other.catalog.clone()));
    }

    let mut out = String::new();
    out.push_str("| Dataset |");
    for area in &first.areas {
        let _ = write!(out, " {} Score | {} Color |", area.title, area.title);
    }
    out.push_str("\n| --- |");
    for _ in &first.areas {
        out.push_str(" ---: | --- |");
    }
    out.push('\n');
    for evaluation in evaluations {
        let _ = write!(out, "| {} |", escape_cell(&evaluation.meta.dataset_name));
        for area in &evaluation.areas {
            let _ = write!(out, " {} | {} |", area.display_score, area.color);
        }
        out.push('\n');
    }
    Ok(out)
}

pub(crate) fn escape_cell(text: &str) -> String {
    text.replace('|', "\\|").replace(['\n', '\r'], " ")
}
