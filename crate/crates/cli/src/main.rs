//! `scorecard` command-line tool.
//!
//! Exit status: 0 success, 1 validation failure, 2 usage or input-format
//! error, 3 internal or I/O failure. Nonzero exits print a JSON object with
//! `code`, `message` and optional `findings` on stderr.

mod batch;
mod failure;

use std::net::SocketAddr;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use chrono::{DateTime, Utc};
use clap::{Parser, Subcommand};
use scorecard_core::{
    blank_intake, build_scorecard, builtin_catalog, evaluate_at, load_catalog, read_intake, Evaluation,
    RecommendationCatalog, RendererRegistry, RubricCatalog, ValidatedIntake,
};
use scorecard_service::AppState;

use failure::Failure;

#[derive(Debug, Parser)]
#[command(name = "scorecard", version, about = "Score dataset documentation against a rubric")]
struct Cli {
    /// Rubric catalog file to use instead of the built-in one.
    #[arg(long, global = true, value_name = "FILE")]
    catalog: Option<PathBuf>,
    /// Recommendation text file to use instead of the built-in one.
    #[arg(long, global = true, value_name = "FILE")]
    recommendations: Option<PathBuf>,
    /// Evaluation time (RFC 3339). Overrides any `timestamp` in the intake.
    #[arg(long, global = true, value_parser = parse_timestamp)]
    timestamp: Option<DateTime<Utc>>,
    /// Output format; the accepted values depend on the command.
    #[arg(long, global = true)]
    format: Option<String>,
    /// Output file, or output directory for `batch`.
    #[arg(short = 'o', long = "output", global = true, value_name = "PATH")]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Write a blank intake document.
    Init,
    /// Check an intake document and report findings.
    Validate { intake: PathBuf },
    /// Score an intake (`--format table|machine`).
    Score { intake: PathBuf },
    /// Render a scorecard (`--format markdown|html|machine`).
    Render { intake: PathBuf },
    /// Score every `*.intake.json` in a directory and write a summary.
    Batch { dir: PathBuf },
    /// Write the active rubric catalog.
    Rubric,
    /// Run the HTTP API.
    Serve {
        #[arg(long, default_value = "127.0.0.1:8080")]
        bind: SocketAddr,
        /// Directory of static UI files served at `/`.
        #[arg(long, value_name = "DIR")]
        ui: Option<PathBuf>,
    },
}

fn parse_timestamp(s: &str) -> Result<DateTime<Utc>, String> {
    DateTime::parse_from_rfc3339(s)
        .map(|t| t.with_timezone(&Utc))
        .map_err(|e| format!("expected RFC 3339: {e}"))
}

/// Settings shared by every command.
pub(crate) struct Context {
    pub catalog: RubricCatalog,
    pub recommendations: RecommendationCatalog,
    pub renderers: RendererRegistry,
    pub timestamp: Option<DateTime<Utc>>,
}

impl Context {
    fn load(cli: &Cli) -> Result<Self, Failure> {
        let catalog = match &cli.catalog {
            Some(path) => {
                load_catalog(&read_file(path)?).map_err(|e| Failure::input(format!("{}: {e}", path.display())))?
            }
            None => builtin_catalog(),
        };
        let recommendations = match &cli.recommendations {
            Some(path) => RecommendationCatalog::from_json(&read_file(path)?)
                .map_err(|e| Failure::input(format!("{}: {e}", path.display())))?,
            None => RecommendationCatalog::builtin(),
        };
        Ok(Context {
            catalog,
            recommendations,
            renderers: RendererRegistry::builtin(),
            timestamp: cli.timestamp,
        })
    }

    pub fn read(&self, path: &Path) -> Result<ValidatedIntake, Failure> {
        let text = read_file(path)?;
        read_intake(&text, &self.catalog)
            .map_err(|e| Failure::input(format!("{}: {e}", path.display())))?
            .map_err(Failure::validation)
    }

    pub fn evaluate(&self, intake: &ValidatedIntake) -> Result<Evaluation, Failure> {
        let at = self.timestamp.or(intake.timestamp).unwrap_or_else(Utc::now);
        evaluate_at(&intake.form, &self.catalog, at).map_err(Failure::scoring)
    }

    pub fn render(&self, eval: &Evaluation, format: &str) -> Result<String, Failure> {
        let renderer = self.renderers.get(format).map_err(Failure::report)?;
        let card = build_scorecard(eval, &self.recommendations).map_err(Failure::report)?;
        Ok(renderer.render(&card))
    }
}

pub(crate) fn read_file(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::io(format!("{}: {e}", path.display())))
}

fn emit(output: Option<&Path>, text: &str) -> Result<(), Failure> {
    match output {
        Some(path) => std::fs::write(path, text).map_err(|e| Failure::io(format!("{}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, Failure> {
    let ctx = Context::load(&cli)?;
    let output = cli.output.as_deref();
    let format = cli.format.as_deref();
    match &cli.command {
        Command::Init => {
            reject_format(format, "init")?;
            emit(output, &blank_intake(&ctx.catalog).to_json())?;
        }
        Command::Validate { intake } => {
            reject_format(format, "validate")?;
            let valid = ctx.read(intake)?;
            if !valid.warnings.is_empty() {
                failure::print_findings(&valid.warnings);
            }
        }
        Command::Score { intake } => {
            let format = format.unwrap_or("table");
            if !matches!(format, "table" | "machine") {
                return Err(Failure::input(format!(
                    "unknown score format `{format}` (expected table or machine)"
                )));
            }
            let eval = ctx.evaluate(&ctx.read(intake)?)?;
            let text = if format == "machine" {
                eval.to_json()
            } else {
                score_table(&eval)
            };
            emit(output, &text)?;
        }
        Command::Render { intake } => {
            let format = format.unwrap_or("markdown");
            ctx.renderers.get(format).map_err(Failure::report)?;
            let eval = ctx.evaluate(&ctx.read(intake)?)?;
            emit(output, &ctx.render(&eval, format)?)?;
        }
        Command::Batch { dir } => {
            let format = format.unwrap_or("markdown");
            ctx.renderers.get(format).map_err(Failure::report)?;
            let out_dir = output.unwrap_or(dir);
            return batch::run(&ctx, dir, out_dir, format);
        }
        Command::Rubric => {
            reject_format(format, "rubric")?;
            emit(output, &ctx.catalog.to_json())?;
        }
        Command::Serve { bind, ui } => {
            reject_format(format, "serve")?;
            serve(ctx, *bind, ui.clone())?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn reject_format(format: Option<&str>, command: &str) -> Result<(), Failure> {
    match format {
        Some(f) => Err(Failure::input(format!("`{command}` takes no --format (got `{f}`)"))),
        None => Ok(()),
    }
}

fn score_table(eval: &Evaluation) -> String {
    eval.areas
        .iter()
        .map(|a| format!("{} {} {}\n", a.area_id, a.display_score, a.color))
        .collect()
}

fn serve(ctx: Context, bind: SocketAddr, ui: Option<PathBuf>) -> Result<(), Failure> {
    let runtime = tokio::runtime::Builder::new_multi_thread()
        .enable_all()
        .build()
        .map_err(|e| Failure::io(e.to_string()))?;
    runtime.block_on(async move {
        let listener = scorecard_service::bind(bind)
            .await
            .map_err(|e| Failure::io(format!("cannot bind {bind}: {e}")))?;
        let state = AppState::new(ctx.catalog, ctx.recommendations, ctx.renderers);
        scorecard_service::serve(listener, scorecard_service::app(state, ui))
            .await
            .map_err(|e| Failure::io(e.to_string()))
    })
}

fn main() -> ExitCode {
    tracing_subscriber::fmt()
        .with_env_filter(tracing_subscriber::EnvFilter::try_from_default_env().unwrap_or_else(|_| "info".into()))
        .with_writer(std::io::stderr)
        .init();
    match Cli::try_parse() {
        Ok(cli) => run(cli).unwrap_or_else(|failure| failure.report_and_exit_code()),
        Err(e) => {
            let _ = e.print();
            match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(2),
            }
        }
    }
}
