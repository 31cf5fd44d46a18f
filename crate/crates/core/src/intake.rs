//! Intake documents: structural parsing, validation against a catalog, and
//! blank templates.
//!
//! Parsing knows nothing about the rubric. It keeps every top-level field and
//! every response entry in document order, duplicates included, so that the
//! validator can report each defect individually.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;

use chrono::{DateTime, Utc};
use serde::de::{self, Deserializer, IgnoredAny, MapAccess, SeqAccess, Visitor};
use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};

use crate::error::IntakeSyntaxError;
use crate::rubric::{Applicability, AreaSpec, CatalogRef, CriterionSpec, OptionLookupError, RubricCatalog};

/// Key in `evaluator_remarks` that holds free text for the overall assessment.
pub const OVERALL_REMARKS_KEY: &str = "overall";

const TOP_LEVEL_FIELDS: &[&str] = &["catalog", "meta", "responses", "timestamp"];
const META_FIELDS: &[&str] = &[
    "dataset_name",
    "description",
    "owner_contact",
    "dataset_version",
    "document_available",
    "evaluator_remarks",
];
// `criterion`, `group`, `choices` and `applicability` are informational
// fields written by `blank_intake`; validation ignores them.
const RESPONSE_FIELDS: &[&str] = &[
    "option",
    "not_applicable",
    "criterion",
    "group",
    "choices",
    "applicability",
];

// ---------------------------------------------------------------------------
// Raw tree

/// Structural parse of an intake document.
#[derive(Debug, Clone, PartialEq)]
pub struct RawIntake {
    /// Top-level fields other than `responses`, in document order.
    pub fields: Vec<(String, Value)>,
    pub responses: Option<RawResponses>,
}

#[derive(Debug, Clone, PartialEq)]
pub enum RawResponses {
    /// Entries in document order; repeated criterion IDs are kept.
    Entries(Vec<(String, Value)>),
    /// `responses` was present but not an object. Holds the JSON type name.
    NotAnObject(&'static str),
}

impl RawIntake {
    pub fn field(&self, name: &str) -> Option<&Value> {
        self.fields.iter().find(|(k, _)| k == name).map(|(_, v)| v)
    }
}

pub fn parse_intake(text: &str) -> Result<RawIntake, IntakeSyntaxError> {
    serde_json::from_str(text).map_err(|e| IntakeSyntaxError {
        line: e.line(),
        column: e.column(),
        message: crate::error::json_message(&e),
    })
}

impl<'de> Deserialize<'de> for RawIntake {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct TopVisitor;

        impl<'de> Visitor<'de> for TopVisitor {
            type Value = RawIntake;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("an intake document object")
            }

            fn visit_map<A: MapAccess<'de>>(self, mut map: A) -> Result<RawIntake, A::Error> {
                let mut fields = Vec::new();
                let mut responses = None;
                while let Some(key) = map.next_key::<String>()? {
                    if key == "responses" && responses.is_none() {
                        responses = Some(map.next_value::<RawResponses>()?);
                    } else {
                        fields.push((key, map.next_value::<Value>()?));
                    }
                }
                Ok(RawIntake { fields, responses })
            }
        }

        deserializer.deserialize_map(TopVisitor)
    }
}

impl<'de> Deserialize<'de> for RawResponses {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct EntriesVisitor;

        impl<'de> Visitor<'de> for EntriesVisitor {
            type Value = RawResponses;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("any JSON value")
            }

            fn visit_map<A: MapAccess<'de>>(self, mut map: A) -> Result<RawResponses, A::Error> {
                let mut entries = Vec::new();
                while let Some(key) = map.next_key::<String>()? {
                    entries.push((key, map.next_value::<Value>()?));
                }
                Ok(RawResponses::Entries(entries))
            }

            fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> Result<RawResponses, A::Error> {
                while seq.next_element::<IgnoredAny>()?.is_some() {}
                Ok(RawResponses::NotAnObject("array"))
            }

            fn visit_bool<E: de::Error>(self, _: bool) -> Result<RawResponses, E> {
                Ok(RawResponses::NotAnObject("boolean"))
            }
            fn visit_i64<E: de::Error>(self, _: i64) -> Result<RawResponses, E> {
                Ok(RawResponses::NotAnObject("number"))
            }
            fn visit_u64<E: de::Error>(self, _: u64) -> Result<RawResponses, E> {
                Ok(RawResponses::NotAnObject("number"))
            }
            fn visit_f64<E: de::Error>(self, _: f64) -> Result<RawResponses, E> {
                Ok(RawResponses::NotAnObject("number"))
            }
            fn visit_str<E: de::Error>(self, _: &str) -> Result<RawResponses, E> {
                Ok(RawResponses::NotAnObject("string"))
            }
            fn visit_unit<E: de::Error>(self) -> Result<RawResponses, E> {
                Ok(RawResponses::NotAnObject("null"))
            }
        }

        deserializer.deserialize_any(EntriesVisitor)
    }
}

// ---------------------------------------------------------------------------
// Validated form

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DatasetMeta {
    pub dataset_name: String,
    pub description: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub owner_contact: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dataset_version: Option<String>,
    pub document_available: BTreeMap<String, bool>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub evaluator_remarks: BTreeMap<String, String>,
}

/// What was chosen for one criterion.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Selection {
    /// Stable option key.
    Option(String),
    NotApplicable,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntakeForm {
    pub catalog: CatalogRef,
    pub meta: DatasetMeta,
    /// Exactly one entry per catalog criterion.
    pub responses: BTreeMap<String, Selection>,
}

impl IntakeForm {
    /// Writes the form back out in the intake file format, selecting options
    /// by key.
    pub fn to_document(&self) -> Value {
        let responses: Map<String, Value> = self
            .responses
            .iter()
            .map(|(id, sel)| {
                let v = match sel {
                    Selection::Option(key) => json!({ "option": key }),
                    Selection::NotApplicable => json!({ "not_applicable": true }),
                };
                (id.clone(), v)
            })
            .collect();
        json!({
            "catalog": { "id": self.catalog.id, "version": self.catalog.version },
            "meta": self.meta,
            "responses": responses,
        })
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_document()).expect("intake serializes");
        s.push('\n');
        s
    }
}

/// A form that passed validation, with any warnings and the optional
/// timestamp pin carried by the document.
#[derive(Debug, Clone, PartialEq)]
pub struct ValidatedIntake {
    pub form: IntakeForm,
    pub warnings: Vec<Finding>,
    pub timestamp: Option<DateTime<Utc>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Severity {
    Error,
    Warning,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FindingKind {
    MissingResponse,
    UnknownCriterion,
    UnknownOption,
    AmbiguousOption,
    NotApplicableDisallowed,
    DuplicateResponse,
    MalformedResponse,
    MissingDocumentFlag,
    InvalidMeta,
    InvalidCatalogRef,
    VersionMismatch,
    InvalidTimestamp,
    DuplicateField,
    UnknownField,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Finding {
    pub severity: Severity,
    pub kind: FindingKind,
    /// Criterion ID, or a dotted path to the offending document field.
    pub target: String,
    pub message: String,
}

impl fmt::Display for Finding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sev = match self.severity {
            Severity::Error => "error",
            Severity::Warning => "warning",
        };
        write!(f, "{sev}: {}: {}", self.target, self.message)
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub findings: Vec<Finding>,
}

impl ValidationReport {
    pub fn errors(&self) -> impl Iterator<Item = &Finding> {
        self.findings.iter().filter(|f| f.severity == Severity::Error)
    }

    pub fn has_errors(&self) -> bool {
        self.errors().next().is_some()
    }

    pub fn count(&self, kind: FindingKind) -> usize {
        self.findings.iter().filter(|f| f.kind == kind).count()
    }

    fn error(&mut self, kind: FindingKind, target: impl Into<String>, message: impl Into<String>) {
        self.findings.push(Finding {
            severity: Severity::Error,
            kind,
            target: target.into(),
            message: message.into(),
        });
    }

    fn warn(&mut self, kind: FindingKind, target: impl Into<String>, message: impl Into<String>) {
        self.findings.push(Finding {
            severity: Severity::Warning,
            kind,
            target: target.into(),
            message: message.into(),
        });
    }
}

// ---------------------------------------------------------------------------
// Validation

enum Answer {
    Option(String),
    NotApplicable,
    Unanswered,
}

/// Checks a raw intake against `catalog`.
///
/// Returns the form when no error-severity finding was raised; otherwise the
/// full report, warnings included.
pub fn validate_intake(raw: &RawIntake, catalog: &RubricCatalog) -> Result<ValidatedIntake, ValidationReport> {
    let mut report = ValidationReport::default();

    let mut seen_fields = HashSet::new();
    for (name, _) in &raw.fields {
        if !seen_fields.insert(name.as_str()) {
            report.error(
                FindingKind::DuplicateField,
                name.clone(),
                "field appears more than once",
            );
        } else if !TOP_LEVEL_FIELDS.contains(&name.as_str()) {
            report.warn(FindingKind::UnknownField, name.clone(), "unknown field ignored");
        }
    }

    check_catalog_ref(raw.field("catalog"), catalog, &mut report);
    let meta = check_meta(raw.field("meta"), catalog, &mut report);
    let timestamp = check_timestamp(raw.field("timestamp"), &mut report);
    let responses = check_responses(raw.responses.as_ref(), catalog, &mut report);

    if report.has_errors() {
        return Err(report);
    }
    let form = IntakeForm {
        catalog: catalog.catalog_ref(),
        meta: meta.expect("meta is present when no errors were raised"),
        responses,
    };
    Ok(ValidatedIntake {
        form,
        warnings: report.findings,
        timestamp,
    })
}

/// Parses then validates. The outer `Err` is a syntax failure.
pub fn read_intake(
    text: &str,
    catalog: &RubricCatalog,
) -> Result<Result<ValidatedIntake, ValidationReport>, IntakeSyntaxError> {
    parse_intake(text).map(|raw| validate_intake(&raw, catalog))
}

fn check_catalog_ref(value: Option<&Value>, catalog: &RubricCatalog, report: &mut ValidationReport) {
    let Some(obj) = value.and_then(Value::as_object) else {
        report.error(
            FindingKind::InvalidCatalogRef,
            "catalog",
            "missing `catalog` object with `id` and `version`",
        );
        return;
    };
    let id = obj.get("id").and_then(Value::as_str);
    let version = obj.get("version").and_then(Value::as_str);
    match (id, version) {
        (Some(id), Some(version)) => {
            if id != catalog.catalog_id || version != catalog.version {
                report.error(
                    FindingKind::VersionMismatch,
                    "catalog",
                    format!(
                        "intake targets {id}@{version} but the active catalog is {}",
                        catalog.catalog_ref()
                    ),
                );
            }
        }
        _ => report.error(
            FindingKind::InvalidCatalogRef,
            "catalog",
            "`catalog.id` and `catalog.version` must both be strings",
        ),
    }
}

fn check_meta(value: Option<&Value>, catalog: &RubricCatalog, report: &mut ValidationReport) -> Option<DatasetMeta> {
    let Some(obj) = value.and_then(Value::as_object) else {
        report.error(FindingKind::InvalidMeta, "meta", "missing `meta` object");
        return None;
    };
    for key in obj.keys() {
        if !META_FIELDS.contains(&key.as_str()) {
            report.warn(
                FindingKind::UnknownField,
                format!("meta.{key}"),
                "unknown field ignored",
            );
        }
    }

    let dataset_name = match obj.get("dataset_name").and_then(Value::as_str) {
        Some(name) if !name.trim().is_empty() => name.to_string(),
        _ => {
            report.error(
                FindingKind::InvalidMeta,
                "meta.dataset_name",
                "dataset_name must be a non-empty string",
            );
            String::new()
        }
    };
    let description = match obj.get("description") {
        Some(Value::String(s)) => s.clone(),
        _ => {
            report.error(
                FindingKind::InvalidMeta,
                "meta.description",
                "description must be a string",
            );
            String::new()
        }
    };
    let owner_contact = optional_string(obj, "owner_contact", report);
    let dataset_version = optional_string(obj, "dataset_version", report);

    let mut document_available = BTreeMap::new();
    match obj.get("document_available") {
        Some(Value::Object(flags)) => {
            for area in &catalog.areas {
                let target = format!("meta.document_available.{}", area.area_id);
                match flags.get(&area.area_id) {
                    Some(Value::Bool(b)) => {
                        document_available.insert(area.area_id.clone(), *b);
                    }
                    Some(Value::Null) | None => report.error(
                        FindingKind::MissingDocumentFlag,
                        target,
                        "document availability flag is missing",
                    ),
                    Some(_) => report.error(FindingKind::InvalidMeta, target, "flag must be true or false"),
                }
            }
            for key in flags.keys() {
                if catalog.area(key).is_none() {
                    report.warn(
                        FindingKind::UnknownField,
                        format!("meta.document_available.{key}"),
                        "not an area of the active catalog",
                    );
                }
            }
        }
        _ => {
            for area in &catalog.areas {
                report.error(
                    FindingKind::MissingDocumentFlag,
                    format!("meta.document_available.{}", area.area_id),
                    "document availability flag is missing",
                );
            }
        }
    }

    let mut evaluator_remarks = BTreeMap::new();
    match obj.get("evaluator_remarks") {
        None | Some(Value::Null) => {}
        Some(Value::Object(remarks)) => {
            for (key, text) in remarks {
                let target = format!("meta.evaluator_remarks.{key}");
                let Some(text) = text.as_str() else {
                    report.error(FindingKind::InvalidMeta, target, "remark must be a string");
                    continue;
                };
                if key != OVERALL_REMARKS_KEY && catalog.area(key).is_none() {
                    report.warn(FindingKind::UnknownField, target, "not an area of the active catalog");
                    continue;
                }
                if !text.trim().is_empty() {
                    evaluator_remarks.insert(key.clone(), text.to_string());
                }
            }
        }
        Some(_) => report.error(FindingKind::InvalidMeta, "meta.evaluator_remarks", "must be an object"),
    }

    Some(DatasetMeta {
        dataset_name,
        description,
        owner_contact,
        dataset_version,
        document_available,
        evaluator_remarks,
    })
}

fn optional_string(obj: &Map<String, Value>, key: &str, report: &mut ValidationReport) -> Option<String> {
    match obj.get(key) {
        None | Some(Value::Null) => None,
        Some(Value::String(s)) => Some(s.clone()),
        Some(_) => {
            report.error(FindingKind::InvalidMeta, format!("meta.{key}"), "must be a string");
            None
        }
    }
}

fn check_timestamp(value: Option<&Value>, report: &mut ValidationReport) -> Option<DateTime<Utc>> {
    match value {
        None | Some(Value::Null) => None,
        Some(Value::String(s)) => match DateTime::parse_from_rfc3339(s) {
            Ok(ts) => Some(ts.with_timezone(&Utc)),
            Err(e) => {
                report.error(FindingKind::InvalidTimestamp, "timestamp", format!("not RFC 3339: {e}"));
                None
            }
        },
        Some(_) => {
            report.error(FindingKind::InvalidTimestamp, "timestamp", "must be an RFC 3339 string");
            None
        }
    }
}

fn check_responses(
    raw: Option<&RawResponses>,
    catalog: &RubricCatalog,
    report: &mut ValidationReport,
) -> BTreeMap<String, Selection> {
    let empty = Vec::new();
    let entries = match raw {
        None => &empty,
        Some(RawResponses::Entries(entries)) => entries,
        Some(RawResponses::NotAnObject(kind)) => {
            report.error(
                FindingKind::MalformedResponse,
                "responses",
                format!("`responses` must be an object, found {kind}"),
            );
            &empty
        }
    };

    let index: HashMap<&str, (&AreaSpec, &CriterionSpec)> = catalog
        .criteria()
        .map(|(a, c)| (c.criterion_id.as_str(), (a, c)))
        .collect();

    let mut answers: HashMap<&str, Answer> = HashMap::new();
    for (id, value) in entries {
        let Some(&(_, criterion)) = index.get(id.as_str()) else {
            report.error(
                FindingKind::UnknownCriterion,
                id.clone(),
                "criterion is not part of the active catalog",
            );
            continue;
        };
        if answers.contains_key(id.as_str()) {
            report.error(
                FindingKind::DuplicateResponse,
                id.clone(),
                "criterion answered more than once",
            );
            continue;
        }
        let answer = read_answer(criterion, value, report).unwrap_or(Answer::Unanswered);
        answers.insert(criterion.criterion_id.as_str(), answer);
    }

    // Areas whose gate criterion selected its -1 option: conditional criteria
    // there are implied not-applicable.
    let unprocessed: HashSet<&str> = catalog
        .areas
        .iter()
        .filter(|area| {
            area.status_criterion()
                .is_some_and(|status| match answers.get(status.criterion_id.as_str()) {
                    Some(Answer::Option(key)) => status.option(key).is_some_and(|o| o.score == -1),
                    _ => false,
                })
        })
        .map(|area| area.area_id.as_str())
        .collect();

    let mut responses = BTreeMap::new();
    for (area, criterion) in catalog.criteria() {
        let id = criterion.criterion_id.as_str();
        let conditional = criterion.applicability == Applicability::Conditional;
        let gated = area.status_criterion().is_some();
        let raw_area = unprocessed.contains(area.area_id.as_str());
        match answers.remove(id) {
            Some(Answer::Option(key)) => {
                responses.insert(id.to_string(), Selection::Option(key));
            }
            Some(Answer::NotApplicable) => {
                if !conditional {
                    report.error(
                        FindingKind::NotApplicableDisallowed,
                        id,
                        "criterion is always applicable",
                    );
                } else if gated && !raw_area {
                    report.error(
                        FindingKind::NotApplicableDisallowed,
                        id,
                        "not_applicable is only allowed when the data remains unprocessed",
                    );
                } else {
                    responses.insert(id.to_string(), Selection::NotApplicable);
                }
            }
            Some(Answer::Unanswered) | None => {
                if conditional && raw_area {
                    responses.insert(id.to_string(), Selection::NotApplicable);
                } else {
                    report.error(FindingKind::MissingResponse, id, "no option selected");
                }
            }
        }
    }
    responses
}

/// Reads one response entry. `None` means an error was already reported.
fn read_answer(criterion: &CriterionSpec, value: &Value, report: &mut ValidationReport) -> Option<Answer> {
    let id = criterion.criterion_id.as_str();
    let Some(obj) = value.as_object() else {
        report.error(
            FindingKind::MalformedResponse,
            id,
            "response must be an object with `option` or `not_applicable`",
        );
        return None;
    };
    for key in obj.keys() {
        if !RESPONSE_FIELDS.contains(&key.as_str()) {
            report.warn(
                FindingKind::UnknownField,
                format!("{id}.{key}"),
                "unknown field ignored",
            );
        }
    }
    let not_applicable = match obj.get("not_applicable") {
        None | Some(Value::Null) | Some(Value::Bool(false)) => false,
        Some(Value::Bool(true)) => true,
        Some(_) => {
            report.error(FindingKind::MalformedResponse, id, "`not_applicable` must be a boolean");
            return None;
        }
    };
    let option = match obj.get("option") {
        None | Some(Value::Null) => None,
        Some(Value::String(s)) => Some(s.as_str()),
        Some(_) => {
            report.error(FindingKind::MalformedResponse, id, "`option` must be a string");
            return None;
        }
    };
    match (option, not_applicable) {
        (Some(_), true) => {
            report.error(
                FindingKind::MalformedResponse,
                id,
                "response sets both `option` and `not_applicable`",
            );
            None
        }
        (None, true) => Some(Answer::NotApplicable),
        (None, false) => Some(Answer::Unanswered),
        (Some(selector), false) => match criterion.resolve_option(selector) {
            Ok(opt) => Some(Answer::Option(opt.key.clone())),
            Err(OptionLookupError::Unknown) => {
                report.error(
                    FindingKind::UnknownOption,
                    id,
                    format!("`{selector}` matches no option"),
                );
                None
            }
            Err(OptionLookupError::Ambiguous(keys)) => {
                report.error(
                    FindingKind::AmbiguousOption,
                    id,
                    format!("`{selector}` matches several options: {}", keys.join(", ")),
                );
                None
            }
        },
    }
}

// ---------------------------------------------------------------------------
// Template

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TemplateChoice {
    pub key: String,
    pub label: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TemplateSlot {
    pub criterion_id: String,
    pub area_id: String,
    pub name: String,
    pub group: Option<String>,
    pub choices: Vec<TemplateChoice>,
    pub applicability: Applicability,
}

/// An unanswered intake: placeholders for the metadata and one empty slot
/// per criterion, in catalog order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntakeTemplate {
    pub catalog: CatalogRef,
    pub area_ids: Vec<String>,
    pub slots: Vec<TemplateSlot>,
}

pub fn blank_intake(catalog: &RubricCatalog) -> IntakeTemplate {
    IntakeTemplate {
        catalog: catalog.catalog_ref(),
        area_ids: catalog.areas.iter().map(|a| a.area_id.clone()).collect(),
        slots: catalog
            .criteria()
            .map(|(area, c)| TemplateSlot {
                criterion_id: c.criterion_id.clone(),
                area_id: area.area_id.clone(),
                name: c.name.clone(),
                group: c.group.clone(),
                choices: c
                    .options
                    .iter()
                    .map(|o| TemplateChoice {
                        key: o.key.clone(),
                        label: o.label.clone(),
                    })
                    .collect(),
                applicability: c.applicability,
            })
            .collect(),
    }
}

impl IntakeTemplate {
    /// Renders the template in the intake file format. Option scores are not
    /// included.
    pub fn to_document(&self) -> Value {
        let flags: Map<String, Value> = self
            .area_ids
            .iter()
            .map(|id| (id.clone(), Value::Bool(false)))
            .collect();
        let responses: Map<String, Value> = self
            .slots
            .iter()
            .map(|slot| {
                let mut entry = Map::new();
                entry.insert("criterion".into(), Value::String(slot.name.clone()));
                if let Some(group) = &slot.group {
                    entry.insert("group".into(), Value::String(group.clone()));
                }
                if slot.applicability == Applicability::Conditional {
                    entry.insert("applicability".into(), json!("conditional"));
                }
                entry.insert(
                    "choices".into(),
                    serde_json::to_value(&slot.choices).expect("choices serialize"),
                );
                entry.insert("option".into(), Value::Null);
                (slot.criterion_id.clone(), Value::Object(entry))
            })
            .collect();
        json!({
            "catalog": { "id": self.catalog.id, "version": self.catalog.version },
            "meta": {
                "dataset_name": "[Dataset Name]",
                "description": "[Brief description of the dataset]",
                "owner_contact": null,
                "dataset_version": null,
                "document_available": flags,
                "evaluator_remarks": {},
            },
            "responses": responses,
        })
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_document()).expect("template serializes");
        s.push('\n');
        s
    }
}
