//! Proptest strategies shared by the core property tests and the acceptance
//! runner.

#![allow(dead_code)]

use std::collections::BTreeMap;

use chrono::{DateTime, TimeZone, Utc};
use proptest::prelude::*;
use scorecard_core::intake::{DatasetMeta, Selection};
use scorecard_core::rubric::{Applicability, AreaSpec, CriterionSpec, OptionSpec, RubricCatalog, SpecialRole};
use scorecard_core::IntakeForm;

pub fn score() -> impl Strategy<Value = i8> {
    -1i8..=1
}

pub fn scores(max_len: usize) -> impl Strategy<Value = Vec<i8>> {
    prop::collection::vec(score(), 1..=max_len)
}

pub fn timestamp() -> impl Strategy<Value = DateTime<Utc>> {
    // 2000-01-01 .. 2100-01-01, whole seconds
    (946_684_800i64..4_102_444_800).prop_map(|secs| Utc.timestamp_opt(secs, 0).unwrap())
}

fn text() -> impl Strategy<Value = String> {
    "\\PC{1,40}".prop_filter("needs a visible character", |s| !s.trim().is_empty())
}

pub fn meta(catalog: &RubricCatalog) -> impl Strategy<Value = DatasetMeta> {
    let area_ids: Vec<String> = catalog.areas.iter().map(|a| a.area_id.clone()).collect();
    let mut remark_keys = area_ids.clone();
    remark_keys.push("overall".to_string());
    (
        text(),
        "\\PC{0,60}",
        proptest::option::of(text()),
        proptest::option::of("[0-9]{1,2}\\.[0-9]{1,2}"),
        prop::collection::vec(any::<bool>(), area_ids.len()),
        prop::collection::btree_map(prop::sample::select(remark_keys), text(), 0..3),
    )
        .prop_map(move |(name, description, owner, version, flags, remarks)| DatasetMeta {
            dataset_name: name,
            description,
            owner_contact: owner,
            dataset_version: version,
            document_available: area_ids.iter().cloned().zip(flags).collect(),
            evaluator_remarks: remarks,
        })
}

/// Any option of the criterion, by key.
fn option_of(c: &CriterionSpec) -> BoxedStrategy<Selection> {
    let keys: Vec<String> = c.options.iter().map(|o| o.key.clone()).collect();
    prop::sample::select(keys).prop_map(Selection::Option).boxed()
}

fn option_or_na(c: &CriterionSpec) -> BoxedStrategy<Selection> {
    prop_oneof![3 => option_of(c), 1 => Just(Selection::NotApplicable)].boxed()
}

/// Responses for one area that pass validation.
fn area_responses(area: &AreaSpec) -> BoxedStrategy<Vec<(String, Selection)>> {
    let status = area.status_criterion().cloned();
    let others: Vec<CriterionSpec> = area
        .criteria
        .iter()
        .filter(|c| c.special_role != SpecialRole::PreprocessingStatus)
        .cloned()
        .collect();
    match status {
        None => {
            let parts: Vec<BoxedStrategy<Selection>> = others
                .iter()
                .map(|c| match c.applicability {
                    Applicability::Always => option_of(c),
                    Applicability::Conditional => option_or_na(c),
                })
                .collect();
            let ids: Vec<String> = others.iter().map(|c| c.criterion_id.clone()).collect();
            parts
                .prop_map(move |sels| ids.iter().cloned().zip(sels).collect())
                .prop_filter("at least one applicable criterion", |v: &Vec<(String, Selection)>| {
                    v.iter().any(|(_, s)| *s != Selection::NotApplicable)
                })
                .boxed()
        }
        Some(status) => {
            let raw_key = status.options.iter().find(|o| o.score == -1).map(|o| o.key.clone());
            let status_id = status.criterion_id.clone();
            option_of(&status)
                .prop_flat_map(move |status_sel| {
                    let raw = matches!((&status_sel, &raw_key), (Selection::Option(k), Some(r)) if k == r);
                    let parts: Vec<BoxedStrategy<Selection>> = others
                        .iter()
                        .map(|c| match (c.applicability, raw) {
                            (Applicability::Conditional, true) => option_or_na(c),
                            _ => option_of(c),
                        })
                        .collect();
                    let ids: Vec<String> = others.iter().map(|c| c.criterion_id.clone()).collect();
                    let status_id = status_id.clone();
                    parts.prop_map(move |sels| {
                        let mut v = vec![(status_id.clone(), status_sel.clone())];
                        v.extend(ids.iter().cloned().zip(sels));
                        v
                    })
                })
                .boxed()
        }
    }
}

/// A complete, valid intake form for `catalog`.
pub fn form(catalog: &RubricCatalog) -> impl Strategy<Value = IntakeForm> {
    let reference = catalog.catalog_ref();
    let areas: Vec<BoxedStrategy<Vec<(String, Selection)>>> = catalog.areas.iter().map(area_responses).collect();
    (meta(catalog), areas).prop_map(move |(meta, areas)| IntakeForm {
        catalog: reference.clone(),
        meta,
        responses: areas.into_iter().flatten().collect::<BTreeMap<_, _>>(),
    })
}

fn option_set() -> impl Strategy<Value = Vec<OptionSpec>> {
    // +1 is always present; 1..=3 further options with any score
    prop::collection::vec(score(), 1..=3).prop_map(|extra| {
        std::iter::once(1i8)
            .chain(extra)
            .enumerate()
            .map(|(i, score)| OptionSpec {
                key: format!("opt_{i}"),
                label: format!("Option {i} scoring {score}"),
                score,
                recommendation_key: None,
            })
            .collect()
    })
}

fn criterion(area_id: String, index: usize) -> impl Strategy<Value = CriterionSpec> {
    (
        text(),
        "\\PC{0,60}",
        proptest::option::of("[A-Z][a-z]{2,10}"),
        option_set(),
    )
        .prop_map(move |(name, description, group, options)| {
            let criterion_id = format!("{area_id}.c{index}");
            let options = options
                .into_iter()
                .map(|o| OptionSpec {
                    recommendation_key: (o.score < 1).then(|| criterion_id.clone()),
                    ..o
                })
                .collect();
            CriterionSpec {
                criterion_id,
                name,
                description,
                group,
                applicability: Applicability::Always,
                special_role: SpecialRole::None,
                options,
            }
        })
}

fn area(index: usize) -> impl Strategy<Value = AreaSpec> {
    let area_id = format!("A{index}");
    (text(), 1usize..=6).prop_flat_map(move |(title, n)| {
        let criteria: Vec<_> = (0..n).map(|i| criterion(area_id.clone(), i)).collect();
        let area_id = area_id.clone();
        criteria.prop_map(move |criteria| AreaSpec {
            area_id: area_id.clone(),
            title: title.clone(),
            criteria,
        })
    })
}

/// A random catalog that passes the integrity checks.
pub fn catalog() -> impl Strategy<Value = RubricCatalog> {
    ("[a-z][a-z0-9-]{0,15}", "v[0-9]{1,3}", 1usize..=4).prop_flat_map(|(id, version, n)| {
        let areas: Vec<_> = (0..n).map(area).collect();
        areas.prop_map(move |areas| RubricCatalog {
            catalog_id: id.clone(),
            version: version.clone(),
            areas,
        })
    })
}
