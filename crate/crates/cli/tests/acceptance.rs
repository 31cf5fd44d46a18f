//! Acceptance runner: one PASS/FAIL line per criterion, nonzero exit if any
//! fails. Run with `cargo test -p scorecard-cli --test acceptance`.

#[path = "../../core/tests/support/checks.rs"]
mod checks;
#[path = "../../core/tests/support/strategies.rs"]
mod strategies;
mod support;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_rational::Ratio;
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};
use scorecard_core::intake::Selection;
use scorecard_core::{
    builtin_catalog, classify, evaluate_at, read_intake, score_area, score_response, Color, Evaluation,
    RecommendationCatalog, Scorecard,
};
use serde_json::Value;
use support::*;

type Outcome = Result<String, String>;
type Criterion = (&'static str, &'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn evaluation(stem: &str) -> Evaluation {
    let catalog = builtin_catalog();
    let form = read_intake(&read(&fixture(stem)), &catalog).unwrap().unwrap().form;
    evaluate_at(&form, &catalog, PINNED.parse().unwrap()).unwrap()
}

const PUBLISHED_COLORS: [(&str, [&str; 5]); 4] = [
    ("Labeled Faces in the Wild", ["Red", "Red", "Yellow", "Green", "Green"]),
    ("MIMIC-IV", ["Green", "Red", "Green", "Green", "Yellow"]),
    ("Recidivism", ["Green", "Red", "Green", "Green", "Red"]),
    ("BCM-A", ["Green", "Red", "Green", "Green", "Red"]),
];

fn ac1_color_matrix() -> Outcome {
    let out_dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let started = Instant::now();
    let out = scorecard([
        "batch",
        "--timestamp",
        PINNED,
        "-o",
        out_dir.path().to_str().unwrap(),
        fixtures_dir().to_str().unwrap(),
    ]);
    let elapsed = started.elapsed();
    ensure(out.status.success(), || {
        format!("batch exited {:?}: {}", out.status.code(), stderr(&out))
    })?;
    let summary = read(&out_dir.path().join("summary.md"));
    let mut matched = 0;
    for (name, colors) in PUBLISHED_COLORS {
        let row = summary
            .lines()
            .find(|l| l.starts_with(&format!("| {name} |")))
            .ok_or_else(|| format!("no summary row for {name}"))?;
        let cells: Vec<&str> = row.trim_matches('|').split('|').map(str::trim).collect();
        let got: Vec<&str> = cells[2..].iter().step_by(2).copied().collect();
        ensure(got == colors, || format!("{name}: {got:?} != {colors:?}"))?;
        matched += got.len();
    }
    ensure(matched == 20, || format!("{matched} cells"))?;
    ensure(elapsed < Duration::from_secs(1), || format!("batch took {elapsed:?}"))?;
    Ok(format!("20/20 colors, batch {} ms", elapsed.as_millis()))
}

fn ac2_exact_scores() -> Outcome {
    let mut cases = vec![
        ("lfw", "C111", "-1.00"),
        ("recidivism", "C111", "1.00"),
        ("bcm-a", "C111", "1.00"),
        ("lfw", "C115", "0.80"),
        ("mimic-iv", "C115", "0.70"),
        ("recidivism", "C115", "-1.00"),
        ("bcm-a", "C115", "-1.00"),
    ];
    for stem in FIXTURES {
        cases.push((stem, "C114", "1.00"));
    }
    for (stem, area, want) in &cases {
        let got = evaluation(stem).area(area).unwrap().display_score.clone();
        ensure(got == *want, || format!("{stem} {area}: {got} != {want}"))?;
    }
    Ok(format!("{} display strings exact", cases.len()))
}

fn ac3_tolerance_areas() -> Outcome {
    let published = [
        ("lfw", "C112", 0.17, Color::Red),
        ("mimic-iv", "C112", 0.33, Color::Red),
        ("recidivism", "C112", -0.08, Color::Red),
        ("bcm-a", "C112", 0.08, Color::Red),
        ("lfw", "C113", 0.77, Color::Yellow),
        ("mimic-iv", "C113", 0.85, Color::Green),
        ("recidivism", "C113", 0.85, Color::Green),
        ("bcm-a", "C113", 0.92, Color::Green),
        ("mimic-iv", "C111", 0.82, Color::Green),
    ];
    let mut worst: f64 = 0.0;
    for (stem, area, value, color) in published {
        let eval = evaluation(stem);
        let a = eval.area(area).unwrap();
        let shown: f64 = a.display_score.parse().unwrap();
        let diff = (shown - value).abs();
        worst = worst.max(diff);
        ensure(diff <= 0.05 + 1e-9, || format!("{stem} {area}: {shown} vs {value}"))?;
        ensure(a.color == color, || format!("{stem} {area}: {} != {color}", a.color))?;
    }
    Ok(format!("9 areas, max deviation {worst:.2}"))
}

fn ac4_boundaries() -> Outcome {
    let r = Ratio::new;
    let cases = [
        (r(39, 100), Color::Yellow),
        (r(79, 100), Color::Yellow),
        (r(79, 100) + r(1, 1000), Color::Green),
        (r(39, 100) - r(1, 1000), Color::Red),
    ];
    for (score, want) in cases {
        let got = classify(score).map_err(|e| e.to_string())?;
        ensure(got == want, || format!("classify({score}) = {got}, want {want}"))?;
    }
    Ok("4 boundary cases".into())
}

fn ac5_brute_force() -> Outcome {
    let catalog = builtin_catalog();
    let area = catalog.area("C114").unwrap();
    let started = Instant::now();
    let mut checked = 0;
    for mut n in 0..3usize.pow(7) {
        let mut findings = Vec::new();
        let mut sum = 0i64;
        for c in &area.criteria {
            let score = (n % 3) as i8 - 1;
            n /= 3;
            let key = &c.options.iter().find(|o| o.score == score).unwrap().key;
            findings.push(score_response(c, &Selection::Option(key.clone())).unwrap());
            sum += i64::from(score);
        }
        let eval = score_area(area, &findings).map_err(|e| e.to_string())?;
        // mean = sum/7; compare 100*sum against 39*7 and 79*7 in integers
        let oracle = if 100 * sum < 39 * 7 {
            Color::Red
        } else if 100 * sum > 79 * 7 {
            Color::Green
        } else {
            Color::Yellow
        };
        ensure(eval.exact_score.ratio() == Ratio::new(sum, 7), || {
            format!("score for sum {sum}")
        })?;
        ensure(eval.color == oracle, || format!("color for sum {sum}"))?;
        checked += 1;
    }
    let elapsed = started.elapsed();
    ensure(elapsed < Duration::from_secs(5), || format!("took {elapsed:?}"))?;
    Ok(format!("{checked} combinations in {} ms", elapsed.as_millis()))
}

fn fail<T: std::fmt::Debug>(name: &str, e: proptest::test_runner::TestError<T>) -> String {
    format!("{name}: {e}")
}

fn ac6_properties() -> Outcome {
    let catalog = builtin_catalog();
    let recs = RecommendationCatalog::builtin();
    let runner = || {
        TestRunner::new(Config {
            cases: 1000,
            failure_persistence: None,
            ..Config::default()
        })
    };
    let form = || strategies::form(&builtin_catalog());
    let at = strategies::timestamp;

    runner()
        .run(&(form(), at()), |(f, t)| checks::mean_identity(&catalog, &f, t))
        .map_err(|e| fail("mean identity", e))?;
    runner()
        .run(
            &(
                strategies::catalog().prop_flat_map(|c| (strategies::form(&c), Just(c))),
                at(),
            ),
            |((f, c), t)| checks::mean_identity(&c, &f, t),
        )
        .map_err(|e| fail("mean identity (random catalogs)", e))?;
    runner()
        .run(&(form(), at()), |(f, t)| checks::bounds(&catalog, &f, t))
        .map_err(|e| fail("bounds", e))?;
    runner()
        .run(&(form(), at(), prop::collection::vec(any::<u32>(), 57)), |(f, t, k)| {
            checks::permutation_invariance(&catalog, &f, t, &k)
        })
        .map_err(|e| fail("permutation invariance", e))?;
    runner()
        .run(&(form(), at(), any::<usize>()), |(f, t, p)| {
            checks::monotonicity(&catalog, &f, t, p)
        })
        .map_err(|e| fail("monotonicity", e))?;
    runner()
        .run(&form(), |f| checks::intake_round_trip(&catalog, &f))
        .map_err(|e| fail("intake round-trip", e))?;
    runner()
        .run(&(form(), at()), |(f, t)| checks::evaluation_round_trip(&catalog, &f, t))
        .map_err(|e| fail("evaluation round-trip", e))?;
    runner()
        .run(&(form(), at()), |(f, t)| {
            checks::scorecard_round_trip(&catalog, &recs, &f, t)
        })
        .map_err(|e| fail("scorecard round-trip", e))?;
    runner()
        .run(&strategies::catalog(), |c| checks::catalog_identity(&c))
        .map_err(|e| fail("catalog identity", e))?;
    checks::catalog_identity(&catalog).map_err(|e| format!("builtin catalog identity: {e}"))?;
    Ok("9 suites x 1000 cases, 0 failures".into())
}

fn ac7_golden() -> Outcome {
    let expected_rows = [
        (
            "lfw",
            [
                "| **Data Dictionary** | No | [-1.0] [Red]",
                "| **Collection Process** | Yes | [0.18] [Red]",
                "| **Composition** | Yes | [0.75] [Yellow]",
                "| **Motivation** | Yes | [1.0] [Green]",
                "| **Preprocessing** | Yes | [0.80] [Green]",
            ],
        ),
        (
            "mimic-iv",
            [
                "| **Data Dictionary** | Yes | [0.82] [Green]",
                "| **Collection Process** | Yes | [0.36] [Red]",
                "| **Composition** | Yes | [0.83] [Green]",
                "| **Motivation** | Yes | [1.0] [Green]",
                "| **Preprocessing** | Yes | [0.70] [Yellow]",
            ],
        ),
    ];
    let mut bullets_checked = 0;
    for (stem, rows) in expected_rows {
        let path = fixture(stem);
        let render = || scorecard(["render", "--timestamp", PINNED, path.to_str().unwrap()]);
        let first = render();
        ensure(first.status.success(), || {
            format!("{stem}: render failed: {}", stderr(&first))
        })?;
        let md = stdout(&first);
        ensure(md == stdout(&render()), || {
            format!("{stem}: output differs between runs")
        })?;
        let golden = read(&fixtures_dir().join("golden").join(format!("{stem}.scorecard.md")));
        ensure(md == golden, || format!("{stem}: differs from golden file"))?;
        for needle in ["Overall Assessment:", "Recommendations:"] {
            ensure(md.contains(needle), || format!("{stem}: missing {needle}"))?;
        }
        let table_rows = md.lines().filter(|l| l.starts_with("| **")).count();
        ensure(table_rows == 5, || format!("{stem}: {table_rows} area rows"))?;
        for row in rows {
            ensure(md.contains(row), || format!("{stem}: missing row {row:?}"))?;
        }

        let machine = scorecard([
            "render",
            "--format",
            "machine",
            "--timestamp",
            PINNED,
            path.to_str().unwrap(),
        ]);
        let card = Scorecard::from_machine(&stdout(&machine)).map_err(|e| e.to_string())?;
        let eval = evaluation(stem);
        for area in eval.areas.iter().filter(|a| a.color == Color::Red) {
            let recs = card.recommendations.iter().find(|r| r.area_id == area.area_id).unwrap();
            for f in area.findings.iter().filter(|f| f.score.is_some_and(|s| s < 1)) {
                let key = f.recommendation_key.as_deref().unwrap_or_default();
                let bullet = recs
                    .bullets
                    .iter()
                    .find(|b| b.key == key)
                    .ok_or_else(|| format!("{stem} {}: no bullet for {key}", area.area_id))?;
                ensure(md.contains(&bullet.text), || {
                    format!("{stem}: bullet {key} not rendered")
                })?;
                bullets_checked += 1;
            }
        }
    }
    Ok(format!("2 golden files, {bullets_checked} red-area bullets"))
}

fn ac8_cli_service_equivalence() -> Outcome {
    let server = spawn_server(&[]);
    for stem in FIXTURES {
        let path = fixture(stem);
        let cli = scorecard([
            "score",
            "--format",
            "machine",
            "--timestamp",
            PINNED,
            path.to_str().unwrap(),
        ]);
        ensure(cli.status.success(), || format!("{stem}: cli failed: {}", stderr(&cli)))?;
        let mut doc: Value = serde_json::from_str(&read(&path)).unwrap();
        doc["timestamp"] = Value::String(PINNED.into());
        let (status, body) = http(server.port, "POST", "/api/v1/score", &doc.to_string());
        ensure(status == 200, || format!("{stem}: HTTP {status}: {body}"))?;
        let a: Value = serde_json::from_str(&stdout(&cli)).unwrap();
        let b: Value = serde_json::from_str(&body).unwrap();
        ensure(a == b, || format!("{stem}: CLI and service evaluations differ"))?;
    }
    Ok("4 fixtures identical".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("AC1", "color matrix reproduction", ac1_color_matrix),
        ("AC2", "exact expressible scores", ac2_exact_scores),
        ("AC3", "tolerance areas within 0.05, colors exact", ac3_tolerance_areas),
        ("AC4", "threshold boundaries", ac4_boundaries),
        ("AC5", "brute-force C114 oracle", ac5_brute_force),
        ("AC6", "property suites", ac6_properties),
        ("AC7", "golden scorecards", ac7_golden),
        ("AC8", "CLI/service equivalence", ac8_cli_service_equivalence),
    ];
    let mut failures = 0;
    for (id, title, check) in criteria {
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|panic| {
            let msg = panic
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| panic.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panicked".into());
            Err(msg)
        });
        match outcome {
            Ok(detail) => println!("[PASS] {id} {title}: {detail}"),
            Err(reason) => {
                failures += 1;
                println!("[FAIL] {id} {title}: {reason}");
            }
        }
    }
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
