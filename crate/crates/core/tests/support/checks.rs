//! Property bodies, written once and driven both by `proptest!` and by the
//! acceptance runner.

#![allow(dead_code)]

use chrono::{DateTime, Utc};
use num_rational::Ratio;
use proptest::prelude::*;
use proptest::test_runner::TestCaseError;
use scorecard_core::intake::Selection;
use scorecard_core::reporting::render::MachineRenderer;
use scorecard_core::reporting::ScorecardRenderer;
use scorecard_core::rubric::SpecialRole;
use scorecard_core::scoring::CriterionFinding;
use scorecard_core::{
    build_scorecard, evaluate_at, load_catalog, read_intake, score_area, Color, Evaluation, IntakeForm,
    RecommendationCatalog, RubricCatalog, Scorecard,
};

fn option_score(catalog: &RubricCatalog, criterion_id: &str, key: &str) -> i64 {
    let (_, c) = catalog.criterion(criterion_id).expect("criterion exists");
    i64::from(c.options.iter().find(|o| o.key == key).expect("option exists").score)
}

fn oracle_color(n: i64, d: i64) -> Color {
    if 100 * n < 39 * d {
        Color::Red
    } else if 100 * n > 79 * d {
        Color::Green
    } else {
        Color::Yellow
    }
}

/// Area score equals the mean of applicable option scores looked up straight
/// from the catalog, or -1 over one criterion when the area was gated off.
pub fn mean_identity(catalog: &RubricCatalog, form: &IntakeForm, at: DateTime<Utc>) -> Result<(), TestCaseError> {
    let eval = evaluate_at(form, catalog, at).map_err(|e| TestCaseError::fail(e.to_string()))?;
    for (area, spec) in eval.areas.iter().zip(&catalog.areas) {
        let gated = spec.criteria.iter().any(|c| {
            c.special_role == SpecialRole::PreprocessingStatus
                && matches!(&form.responses[&c.criterion_id], Selection::Option(k) if option_score(catalog, &c.criterion_id, k) == -1)
        });
        let (sum, n) = if gated {
            (-1, 1)
        } else {
            spec.criteria
                .iter()
                .filter_map(|c| match &form.responses[&c.criterion_id] {
                    Selection::Option(k) => Some(option_score(catalog, &c.criterion_id, k)),
                    Selection::NotApplicable => None,
                })
                .fold((0, 0), |(s, n), v| (s + v, n + 1))
        };
        prop_assert_eq!(area.short_circuited, gated);
        prop_assert_eq!(area.applicable_count as i64, n);
        prop_assert_eq!(area.exact_score.ratio(), Ratio::new(sum, n));
    }
    Ok(())
}

pub fn bounds(catalog: &RubricCatalog, form: &IntakeForm, at: DateTime<Utc>) -> Result<(), TestCaseError> {
    let eval = evaluate_at(form, catalog, at).map_err(|e| TestCaseError::fail(e.to_string()))?;
    for area in &eval.areas {
        let r = area.exact_score.ratio();
        prop_assert!(r >= Ratio::from_integer(-1) && r <= Ratio::from_integer(1));
        let shown: f64 = area.display_score.parse().unwrap();
        prop_assert!((-1.0..=1.0).contains(&shown));
        prop_assert!(area.display_score != "-0.00");
        prop_assert_eq!(area.color, oracle_color(*r.numer(), *r.denom()));
    }
    Ok(())
}

/// Shuffling findings before aggregation changes nothing.
pub fn permutation_invariance(
    catalog: &RubricCatalog,
    form: &IntakeForm,
    at: DateTime<Utc>,
    sort_keys: &[u32],
) -> Result<(), TestCaseError> {
    let eval = evaluate_at(form, catalog, at).map_err(|e| TestCaseError::fail(e.to_string()))?;
    let mut k = sort_keys.iter().cycle();
    for (area, spec) in eval.areas.iter().zip(&catalog.areas) {
        let mut shuffled: Vec<(u32, CriterionFinding)> =
            area.findings.iter().map(|f| (*k.next().unwrap(), f.clone())).collect();
        shuffled.sort_by_key(|(key, _)| *key);
        let shuffled: Vec<CriterionFinding> = shuffled.into_iter().map(|(_, f)| f).collect();
        let again = score_area(spec, &shuffled).map_err(|e| TestCaseError::fail(e.to_string()))?;
        prop_assert_eq!(&again, area);
    }
    Ok(())
}

/// Moving one non-gate criterion to a higher-scoring option never lowers its
/// area score.
pub fn monotonicity(
    catalog: &RubricCatalog,
    form: &IntakeForm,
    at: DateTime<Utc>,
    pick: usize,
) -> Result<(), TestCaseError> {
    let candidates: Vec<(String, String)> = catalog
        .criteria()
        .filter(|(_, c)| c.special_role != SpecialRole::PreprocessingStatus)
        .filter_map(|(_, c)| match &form.responses[&c.criterion_id] {
            Selection::Option(k) => {
                let current = option_score(catalog, &c.criterion_id, k);
                c.options
                    .iter()
                    .filter(|o| i64::from(o.score) > current)
                    .max_by_key(|o| o.score)
                    .map(|o| (c.criterion_id.clone(), o.key.clone()))
            }
            Selection::NotApplicable => None,
        })
        .collect();
    if candidates.is_empty() {
        return Ok(());
    }
    let (criterion_id, better) = &candidates[pick % candidates.len()];
    let mut raised = form.clone();
    raised
        .responses
        .insert(criterion_id.clone(), Selection::Option(better.clone()));
    let area_id = catalog.criterion(criterion_id).unwrap().0.area_id.clone();
    let before = evaluate_at(form, catalog, at).unwrap();
    let after = evaluate_at(&raised, catalog, at).unwrap();
    let (b, a) = (before.area(&area_id).unwrap(), after.area(&area_id).unwrap());
    prop_assert!(
        a.exact_score.ratio() >= b.exact_score.ratio(),
        "{} -> {}",
        b.exact_score,
        a.exact_score
    );
    Ok(())
}

pub fn intake_round_trip(catalog: &RubricCatalog, form: &IntakeForm) -> Result<(), TestCaseError> {
    let text = form.to_json();
    let back = read_intake(&text, catalog)
        .map_err(|e| TestCaseError::fail(e.to_string()))?
        .map_err(|r| TestCaseError::fail(format!("{r:?}")))?;
    prop_assert!(back.warnings.is_empty());
    prop_assert_eq!(&back.form, form);
    prop_assert_eq!(back.form.to_json(), text);
    Ok(())
}

pub fn evaluation_round_trip(
    catalog: &RubricCatalog,
    form: &IntakeForm,
    at: DateTime<Utc>,
) -> Result<(), TestCaseError> {
    let eval = evaluate_at(form, catalog, at).map_err(|e| TestCaseError::fail(e.to_string()))?;
    let text = eval.to_json();
    let back = Evaluation::from_json(&text).map_err(|e| TestCaseError::fail(e.to_string()))?;
    prop_assert_eq!(&back, &eval);
    prop_assert_eq!(back.to_json(), text);
    Ok(())
}

pub fn scorecard_round_trip(
    catalog: &RubricCatalog,
    recs: &RecommendationCatalog,
    form: &IntakeForm,
    at: DateTime<Utc>,
) -> Result<(), TestCaseError> {
    let eval = evaluate_at(form, catalog, at).map_err(|e| TestCaseError::fail(e.to_string()))?;
    let card = build_scorecard(&eval, recs).map_err(|e| TestCaseError::fail(e.to_string()))?;
    let text = MachineRenderer.render(&card);
    let back = Scorecard::from_machine(&text).map_err(|e| TestCaseError::fail(e.to_string()))?;
    prop_assert_eq!(&back, &card);
    prop_assert_eq!(MachineRenderer.render(&back), text);
    Ok(())
}

pub fn catalog_identity(catalog: &RubricCatalog) -> Result<(), TestCaseError> {
    let text = catalog.to_json();
    let back = load_catalog(&text).map_err(|e| TestCaseError::fail(e.to_string()))?;
    prop_assert_eq!(&back, catalog);
    prop_assert_eq!(back.to_json(), text);
    Ok(())
}
