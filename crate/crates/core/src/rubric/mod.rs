//! Rubric catalog: assessment areas, their criteria, and the scored options
//! behind each dropdown.
//!
//! A catalog is immutable once built. [`builtin_catalog`] returns the bundled
//! five-area rubric; [`load_catalog`] reads any catalog written in the same
//! JSON layout and checks it before handing it out.

mod builtin;

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::CatalogError;

pub use builtin::{builtin_catalog, BUILTIN_CATALOG_ID, BUILTIN_VERSION};

/// The full set of areas, criteria and options that an intake is answered
/// against.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RubricCatalog {
    pub catalog_id: String,
    pub version: String,
    pub areas: Vec<AreaSpec>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AreaSpec {
    pub area_id: String,
    pub title: String,
    pub criteria: Vec<CriterionSpec>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CriterionSpec {
    pub criterion_id: String,
    pub name: String,
    pub description: String,
    /// Section header the criterion is listed under. Presentation only.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub group: Option<String>,
    pub applicability: Applicability,
    pub special_role: SpecialRole,
    pub options: Vec<OptionSpec>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OptionSpec {
    pub key: String,
    pub label: String,
    pub score: i8,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub recommendation_key: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Applicability {
    Always,
    Conditional,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SpecialRole {
    None,
    /// Gate criterion: selecting its lowest (-1) option marks the data as
    /// unprocessed and retires every conditional criterion in the same area.
    PreprocessingStatus,
}

/// `(catalog_id, version)` pair recorded on intakes and evaluations.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CatalogRef {
    pub id: String,
    pub version: String,
}

impl fmt::Display for CatalogRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}@{}", self.id, self.version)
    }
}

/// Why a selector string failed to pick exactly one option.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OptionLookupError {
    Unknown,
    Ambiguous(Vec<String>),
}

impl RubricCatalog {
    pub fn catalog_ref(&self) -> CatalogRef {
        CatalogRef {
            id: self.catalog_id.clone(),
            version: self.version.clone(),
        }
    }

    pub fn area(&self, area_id: &str) -> Option<&AreaSpec> {
        self.areas.iter().find(|a| a.area_id == area_id)
    }

    /// Looks a criterion up by its full ID, returning the owning area too.
    pub fn criterion(&self, criterion_id: &str) -> Option<(&AreaSpec, &CriterionSpec)> {
        self.areas.iter().find_map(|area| {
            area.criteria
                .iter()
                .find(|c| c.criterion_id == criterion_id)
                .map(|c| (area, c))
        })
    }

    /// All criteria in catalog order.
    pub fn criteria(&self) -> impl Iterator<Item = (&AreaSpec, &CriterionSpec)> {
        self.areas
            .iter()
            .flat_map(|area| area.criteria.iter().map(move |c| (area, c)))
    }

    pub fn criterion_count(&self) -> usize {
        self.areas.iter().map(|a| a.criteria.len()).sum()
    }

    /// Every recommendation key referenced by an option, in catalog order,
    /// without repeats.
    pub fn recommendation_keys(&self) -> Vec<&str> {
        let mut seen = HashSet::new();
        self.criteria()
            .flat_map(|(_, c)| c.options.iter())
            .filter_map(|o| o.recommendation_key.as_deref())
            .filter(|k| seen.insert(*k))
            .collect()
    }

    /// Serializes to the rubric-definition file format. Output is stable
    /// byte-for-byte for equal catalogs.
    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("catalog serializes");
        out.push('\n');
        out
    }

    /// Checks every structural invariant, collecting all problems found.
    pub fn check_integrity(&self) -> Result<(), CatalogError> {
        let mut issues = Vec::new();
        let mut push = |location: &str, problem: String| {
            issues.push(IntegrityIssue {
                location: location.to_string(),
                problem,
            })
        };

        if self.catalog_id.trim().is_empty() {
            push("catalog_id", "catalog_id is empty".into());
        }
        if self.version.trim().is_empty() {
            push("version", "version is empty".into());
        }
        if self.areas.is_empty() {
            push("areas", "catalog has no areas".into());
        }

        let mut area_ids = HashSet::new();
        let mut criterion_ids = HashSet::new();
        for area in &self.areas {
            if area.area_id.trim().is_empty() {
                push("areas", "area with empty area_id".into());
            }
            if !area_ids.insert(area.area_id.as_str()) {
                push(&area.area_id, "duplicate area id".into());
            }
            if area.criteria.is_empty() {
                push(&area.area_id, "area has no criteria".into());
            }
            let status_count = area
                .criteria
                .iter()
                .filter(|c| c.special_role == SpecialRole::PreprocessingStatus)
                .count();
            if status_count > 1 {
                push(&area.area_id, "more than one preprocessing_status criterion".into());
            }

            for criterion in &area.criteria {
                let id = criterion.criterion_id.as_str();
                if !criterion_ids.insert(id) {
                    push(id, "duplicate criterion id".into());
                }
                let prefix_ok = id
                    .strip_prefix(area.area_id.as_str())
                    .and_then(|rest| rest.strip_prefix('.'))
                    .is_some_and(|rest| !rest.is_empty());
                if !prefix_ok {
                    push(id, format!("criterion id must be `{}.<name>`", area.area_id));
                }
                if criterion.name.trim().is_empty() {
                    push(id, "criterion name is empty".into());
                }
                if criterion.special_role == SpecialRole::PreprocessingStatus
                    && criterion.applicability != Applicability::Always
                {
                    push(id, "preprocessing_status criterion must always apply".into());
                }
                check_options(criterion, &mut push);
            }
        }

        if issues.is_empty() {
            Ok(())
        } else {
            Err(CatalogError::Integrity(issues))
        }
    }
}

fn check_options(criterion: &CriterionSpec, push: &mut impl FnMut(&str, String)) {
    let id = criterion.criterion_id.as_str();
    if criterion.options.len() < 2 {
        push(id, format!("needs at least 2 options, has {}", criterion.options.len()));
    }
    let mut labels = HashSet::new();
    let mut keys = HashSet::new();
    for option in &criterion.options {
        if !(-1..=1).contains(&option.score) {
            push(
                id,
                format!(
                    "option `{}` has score {} outside {{-1, 0, 1}}",
                    option.key, option.score
                ),
            );
        }
        if option.key.trim().is_empty() {
            push(id, "option with empty key".into());
        }
        if option.label.trim().is_empty() {
            push(id, format!("option `{}` has an empty label", option.key));
        }
        if !keys.insert(option.key.as_str()) {
            push(id, format!("duplicate option key `{}`", option.key));
        }
        if !labels.insert(normalize_label(&option.label)) {
            push(id, format!("duplicate option label `{}`", option.label));
        }
        if option.score < 1 && option.recommendation_key.as_deref().is_none_or(str::is_empty) {
            push(
                id,
                format!("option `{}` scores below +1 but has no recommendation_key", option.key),
            );
        }
    }
    if !criterion.options.is_empty() && !criterion.options.iter().any(|o| o.score == 1) {
        push(id, "no +1 option".into());
    }
}

impl CriterionSpec {
    pub fn option(&self, key: &str) -> Option<&OptionSpec> {
        self.options.iter().find(|o| o.key == key)
    }

    /// Resolves a user-supplied selector against this criterion's options.
    ///
    /// Matches an option key exactly, or an option label after collapsing
    /// runs of whitespace. A selector that hits two different options is
    /// ambiguous.
    pub fn resolve_option(&self, selector: &str) -> Result<&OptionSpec, OptionLookupError> {
        let normalized = normalize_label(selector);
        let hits: Vec<&OptionSpec> = self
            .options
            .iter()
            .filter(|o| o.key == selector || normalize_label(&o.label) == normalized)
            .collect();
        match hits.as_slice() {
            [] => Err(OptionLookupError::Unknown),
            [one] => Ok(one),
            many => Err(OptionLookupError::Ambiguous(
                many.iter().map(|o| o.key.clone()).collect(),
            )),
        }
    }

    pub fn is_preprocessing_status(&self) -> bool {
        self.special_role == SpecialRole::PreprocessingStatus
    }

    pub fn max_score(&self) -> i8 {
        self.options.iter().map(|o| o.score).max().unwrap_or(0)
    }
}

impl AreaSpec {
    pub fn status_criterion(&self) -> Option<&CriterionSpec> {
        self.criteria.iter().find(|c| c.is_preprocessing_status())
    }
}

/// Trims and collapses interior whitespace runs to single spaces.
pub fn normalize_label(label: &str) -> String {
    label.split_whitespace().collect::<Vec<_>>().join(" ")
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegrityIssue {
    /// Area or criterion ID, or a top-level field name.
    pub location: String,
    pub problem: String,
}

impl fmt::Display for IntegrityIssue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.location, self.problem)
    }
}

/// Parses a rubric-definition document and checks its integrity.
pub fn load_catalog(text: &str) -> Result<RubricCatalog, CatalogError> {
    let catalog: RubricCatalog = serde_json::from_str(text).map_err(|e| CatalogError::Parse {
        line: e.line(),
        column: e.column(),
        message: crate::error::json_message(&e),
    })?;
    catalog.check_integrity()?;
    Ok(catalog)
}
