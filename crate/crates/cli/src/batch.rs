use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use rayon::prelude::*;
use scorecard_core::{batch_summary, Evaluation};
use serde_json::json;

use crate::failure::Failure;
use crate::Context;

const SUFFIX: &str = ".intake.json";

fn intake_files(dir: &Path) -> Result<Vec<PathBuf>, Failure> {
    let entries = std::fs::read_dir(dir).map_err(|e| Failure::input(format!("{}: {e}", dir.display())))?;
    let mut files = Vec::new();
    for entry in entries {
        let path = entry.map_err(|e| Failure::io(e.to_string()))?.path();
        let is_intake = path
            .file_name()
            .and_then(|n| n.to_str())
            .is_some_and(|n| n.ends_with(SUFFIX));
        if is_intake && path.is_file() {
            files.push(path);
        }
    }
    files.sort();
    Ok(files)
}

fn stem(path: &Path) -> String {
    let name = path.file_name().and_then(|n| n.to_str()).unwrap_or_default();
    name.strip_suffix(SUFFIX).unwrap_or(name).to_string()
}

fn process(ctx: &Context, path: &Path, out_dir: &Path, format: &str, ext: &str) -> Result<Evaluation, Failure> {
    let eval = ctx.evaluate(&ctx.read(path)?)?;
    let rendered = ctx.render(&eval, format)?;
    let target = out_dir.join(format!("{}.scorecard.{ext}", stem(path)));
    std::fs::write(&target, rendered).map_err(|e| Failure::io(format!("{}: {e}", target.display())))?;
    Ok(eval)
}

/// Scores every intake in `dir` concurrently. One bad intake does not stop
/// the others; it is listed under "Failed" in the summary and the run exits 1.
pub fn run(ctx: &Context, dir: &Path, out_dir: &Path, format: &str) -> Result<ExitCode, Failure> {
    let files = intake_files(dir)?;
    if files.is_empty() {
        return Err(Failure::input(format!("no *{SUFFIX} files in {}", dir.display())));
    }
    std::fs::create_dir_all(out_dir).map_err(|e| Failure::io(format!("{}: {e}", out_dir.display())))?;
    let ext = ctx.renderers.get(format).map_err(Failure::report)?.extension();

    let results: Vec<(PathBuf, Result<Evaluation, Failure>)> = files
        .par_iter()
        .map(|path| (path.clone(), process(ctx, path, out_dir, format, ext)))
        .collect();

    let mut done = Vec::new();
    let mut failed = Vec::new();
    for (path, result) in results {
        match result {
            Ok(eval) => done.push((stem(&path), eval)),
            Err(failure) => failed.push((path, failure)),
        }
    }
    done.sort_by(|(a_stem, a), (b_stem, b)| {
        (a.meta.dataset_name.as_str(), a_stem.as_str()).cmp(&(b.meta.dataset_name.as_str(), b_stem.as_str()))
    });

    let mut summary = String::from("# Batch Summary\n\n");
    if !done.is_empty() {
        let evaluations: Vec<Evaluation> = done.into_iter().map(|(_, e)| e).collect();
        summary.push_str(&batch_summary(&evaluations).map_err(Failure::report)?);
    }
    if !failed.is_empty() {
        summary.push_str("\n## Failed\n\n");
        for (path, failure) in &failed {
            let _ = writeln!(summary, "- `{}`: {}", path.display(), failure.message);
            eprintln!(
                "{}",
                json!({ "file": path.display().to_string(), "error": failure.to_json() })
            );
        }
    }
    let summary_path = out_dir.join("summary.md");
    std::fs::write(&summary_path, &summary).map_err(|e| Failure::io(format!("{}: {e}", summary_path.display())))?;
    print!("{summary}");

    Ok(if failed.is_empty() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}
