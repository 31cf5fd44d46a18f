//! Criterion scores, per-area means and the red/yellow/green bands.
//!
//! Area scores are exact rationals. Classification compares rationals
//! against the thresholds directly; the two-decimal display string is
//! derived separately and never fed back into classification.

use std::fmt;
use std::str::FromStr;

use chrono::{DateTime, SecondsFormat, Utc};
use num_rational::Ratio;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::ScoringError;
use crate::intake::{DatasetMeta, IntakeForm, Selection};
use crate::rubric::{AreaSpec, CatalogRef, CriterionSpec, RubricCatalog};

/// Below this an area is red.
pub fn yellow_threshold() -> Ratio<i64> {
    Ratio::new(39, 100)
}

/// Above this an area is green.
pub fn green_threshold() -> Ratio<i64> {
    Ratio::new(79, 100)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Color {
    Red,
    Yellow,
    Green,
}

impl Color {
    pub fn token(self) -> &'static str {
        match self {
            Color::Red => "red",
            Color::Yellow => "yellow",
            Color::Green => "green",
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Color::Red => "Red",
            Color::Yellow => "Yellow",
            Color::Green => "Green",
        }
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Red below 0.39, green above 0.79, yellow in between with both endpoints
/// inclusive.
pub fn classify(score: Ratio<i64>) -> Result<Color, ScoringError> {
    if score < -Ratio::one() || score > Ratio::one() {
        return Err(ScoringError::OutOfRange(score.to_string()));
    }
    Ok(if score < yellow_threshold() {
        Color::Red
    } else if score > green_threshold() {
        Color::Green
    } else {
        Color::Yellow
    })
}

/// Rounds half away from zero to two decimals. Never prints `-0.00`.
pub fn display_two_places(score: Ratio<i64>) -> String {
    let numer = score.numer().abs();
    let denom = *score.denom();
    let scaled = numer * 100;
    let mut hundredths = scaled / denom;
    if 2 * (scaled % denom) >= denom {
        hundredths += 1;
    }
    let sign = if score.is_negative() && hundredths != 0 {
        "-"
    } else {
        ""
    };
    format!("{sign}{}.{:02}", hundredths / 100, hundredths % 100)
}

/// Exact area score. Serialized as `"numerator/denominator"` in lowest terms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AreaScore(pub Ratio<i64>);

impl AreaScore {
    pub fn ratio(self) -> Ratio<i64> {
        self.0
    }
}

impl fmt::Display for AreaScore {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.0.numer(), self.0.denom())
    }
}

impl FromStr for AreaScore {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (n, d) = s.split_once('/').ok_or_else(|| format!("expected n/d, got `{s}`"))?;
        let n: i64 = n.trim().parse().map_err(|e| format!("bad numerator in `{s}`: {e}"))?;
        let d: i64 = d.trim().parse().map_err(|e| format!("bad denominator in `{s}`: {e}"))?;
        if d <= 0 {
            return Err(format!("denominator must be positive in `{s}`"));
        }
        Ok(AreaScore(Ratio::new(n, d)))
    }
}

impl Serialize for AreaScore {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for AreaScore {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriterionFinding {
    pub criterion_id: String,
    pub criterion_name: String,
    pub selection: Selection,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub option_label: Option<String>,
    /// `None` when the criterion did not apply.
    pub score: Option<i8>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub recommendation_key: Option<String>,
}

impl CriterionFinding {
    pub fn is_applicable(&self) -> bool {
        self.score.is_some()
    }

    fn not_applicable(criterion: &CriterionSpec) -> Self {
        CriterionFinding {
            criterion_id: criterion.criterion_id.clone(),
            criterion_name: criterion.name.clone(),
            selection: Selection::NotApplicable,
            option_label: None,
            score: None,
            recommendation_key: None,
        }
    }

    fn retire(&mut self) {
        self.selection = Selection::NotApplicable;
        self.option_label = None;
        self.score = None;
        self.recommendation_key = None;
    }
}

pub fn score_response(criterion: &CriterionSpec, selection: &Selection) -> Result<CriterionFinding, ScoringError> {
    match selection {
        Selection::NotApplicable => Ok(CriterionFinding::not_applicable(criterion)),
        Selection::Option(key) => {
            let option = criterion.option(key).ok_or_else(|| ScoringError::UnknownOption {
                criterion: criterion.criterion_id.clone(),
                option: key.clone(),
            })?;
            Ok(CriterionFinding {
                criterion_id: criterion.criterion_id.clone(),
                criterion_name: criterion.name.clone(),
                selection: selection.clone(),
                option_label: Some(option.label.clone()),
                score: Some(option.score),
                recommendation_key: option.recommendation_key.clone(),
            })
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AreaEvaluation {
    pub area_id: String,
    pub title: String,
    pub applicable_count: u32,
    pub exact_score: AreaScore,
    pub display_score: String,
    pub color: Color,
    /// One per area criterion, in catalog order.
    pub findings: Vec<CriterionFinding>,
    /// Set when the data was reported as unprocessed and the rest of the
    /// area was retired.
    pub short_circuited: bool,
}

/// Averages the applicable findings of one area.
///
/// `findings` may arrive in any order but must cover every criterion of the
/// area. If the area's gate criterion scored -1, every other criterion is
/// forced to not-applicable and the area scores -1.
pub fn score_area(area: &AreaSpec, findings: &[CriterionFinding]) -> Result<AreaEvaluation, ScoringError> {
    let mut ordered: Vec<CriterionFinding> = area
        .criteria
        .iter()
        .map(|c| {
            findings
                .iter()
                .find(|f| f.criterion_id == c.criterion_id)
                .cloned()
                .ok_or_else(|| ScoringError::MissingResponse(c.criterion_id.clone()))
        })
        .collect::<Result<_, _>>()?;

    let status_id = area.status_criterion().map(|c| c.criterion_id.as_str());
    let short_circuited =
        status_id.is_some_and(|id| ordered.iter().any(|f| f.criterion_id == id && f.score == Some(-1)));
    if short_circuited {
        for finding in ordered.iter_mut() {
            if Some(finding.criterion_id.as_str()) != status_id {
                finding.retire();
            }
        }
    }

    let (sum, count) = ordered
        .iter()
        .filter_map(|f| f.score)
        .fold((0i64, 0i64), |(s, n), score| (s + i64::from(score), n + 1));
    if count.is_zero() {
        return Err(ScoringError::NoApplicableCriteria(area.area_id.clone()));
    }
    let exact = Ratio::new(sum, count);
    Ok(AreaEvaluation {
        area_id: area.area_id.clone(),
        title: area.title.clone(),
        applicable_count: count as u32,
        exact_score: AreaScore(exact),
        display_score: display_two_places(exact),
        color: classify(exact)?,
        findings: ordered,
        short_circuited,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Evaluation {
    pub catalog: CatalogRef,
    pub meta: DatasetMeta,
    pub areas: Vec<AreaEvaluation>,
    #[serde(with = "rfc3339")]
    pub timestamp: DateTime<Utc>,
}

impl Evaluation {
    pub fn area(&self, area_id: &str) -> Option<&AreaEvaluation> {
        self.areas.iter().find(|a| a.area_id == area_id)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("evaluation serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }
}

pub fn evaluate(form: &IntakeForm, catalog: &RubricCatalog) -> Result<Evaluation, ScoringError> {
    evaluate_at(form, catalog, Utc::now())
}

/// Like [`evaluate`] with the timestamp supplied by the caller.
pub fn evaluate_at(
    form: &IntakeForm,
    catalog: &RubricCatalog,
    timestamp: DateTime<Utc>,
) -> Result<Evaluation, ScoringError> {
    let active = catalog.catalog_ref();
    if form.catalog != active {
        return Err(ScoringError::VersionMismatch {
            intake: form.catalog.clone(),
            catalog: active,
        });
    }
    let areas = catalog
        .areas
        .iter()
        .map(|area| {
            let findings = area
                .criteria
                .iter()
                .map(|c| {
                    let selection = form
                        .responses
                        .get(&c.criterion_id)
                        .ok_or_else(|| ScoringError::MissingResponse(c.criterion_id.clone()))?;
                    score_response(c, selection)
                })
                .collect::<Result<Vec<_>, _>>()?;
            score_area(area, &findings)
        })
        .collect::<Result<_, _>>()?;
    Ok(Evaluation {
        catalog: active,
        meta: form.meta.clone(),
        areas,
        timestamp: truncate_to_seconds(timestamp),
    })
}

fn truncate_to_seconds(ts: DateTime<Utc>) -> DateTime<Utc> {
    DateTime::from_timestamp(ts.timestamp(), 0).unwrap_or(ts)
}

pub(crate) mod rfc3339 {
    use super::*;

    pub fn serialize<S: Serializer>(ts: &DateTime<Utc>, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&ts.to_rfc3339_opts(SecondsFormat::Secs, true))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<DateTime<Utc>, D::Error> {
        let s = String::deserialize(d)?;
        DateTime::parse_from_rfc3339(&s)
            .map(|t| t.with_timezone(&Utc))
            .map_err(serde::de::Error::custom)
    }
}
