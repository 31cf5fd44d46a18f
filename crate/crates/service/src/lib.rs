//! Local HTTP API over the scorecard engine.
//!
//! Routes, all under `/api/v1`:
//!
//! | method | path         | body            | response                          |
//! |--------|--------------|-----------------|-----------------------------------|
//! | GET    | `/rubric`    |                 | active catalog, rubric file format |
//! | POST   | `/validate`  | intake document | `{"findings": [...]}`, always 200 |
//! | POST   | `/score`     | intake document | evaluation document               |
//! | POST   | `/scorecard` | intake document | rendered scorecard (`?format=`)   |
//!
//! Failures use [`ApiError`]. The server keeps no state between requests;
//! an optional directory of static files is served at `/`.

mod error;

use std::net::SocketAddr;
use std::path::PathBuf;
use std::sync::Arc;

use axum::body::Bytes;
use axum::extract::{Query, State};
use axum::http::header::CONTENT_TYPE;
use axum::response::{IntoResponse, Response};
use axum::routing::{get, post};
use axum::{Json, Router};
use chrono::Utc;
use scorecard_core::intake::{FindingKind, ValidatedIntake};
use scorecard_core::{
    build_scorecard, evaluate_at, read_intake, RecommendationCatalog, RendererRegistry, RubricCatalog, ScoringError,
    ValidationReport,
};
use serde::Deserialize;
use tokio::net::TcpListener;
use tower_http::services::ServeDir;

pub use error::{ApiError, ErrorCode};

/// Everything a request may read. Immutable once the router is built.
pub struct AppState {
    catalog: RubricCatalog,
    rubric_body: String,
    renderers: RendererRegistry,
    recommendations: RecommendationCatalog,
}

impl AppState {
    pub fn new(catalog: RubricCatalog, recommendations: RecommendationCatalog, renderers: RendererRegistry) -> Self {
        let rubric_body = catalog.to_json();
        AppState {
            catalog,
            rubric_body,
            renderers,
            recommendations,
        }
    }

    pub fn builtin() -> Self {
        Self::new(
            scorecard_core::builtin_catalog(),
            RecommendationCatalog::builtin(),
            RendererRegistry::builtin(),
        )
    }
}

type Shared = Arc<AppState>;

pub fn router(state: AppState) -> Router {
    Router::new()
        .route("/api/v1/rubric", get(get_rubric))
        .route("/api/v1/validate", post(post_validate))
        .route("/api/v1/score", post(post_score))
        .route("/api/v1/scorecard", post(post_scorecard))
        .with_state(Arc::new(state))
}

/// [`router`] plus static files from `ui_dir`, when the directory exists.
pub fn app(state: AppState, ui_dir: Option<PathBuf>) -> Router {
    let api = router(state);
    match ui_dir {
        Some(dir) if dir.is_dir() => api.fallback_service(ServeDir::new(dir)),
        _ => api,
    }
}

/// Binds first so callers can tell an occupied port from a runtime failure.
pub async fn bind(addr: SocketAddr) -> std::io::Result<TcpListener> {
    TcpListener::bind(addr).await
}

pub async fn serve(listener: TcpListener, app: Router) -> std::io::Result<()> {
    if let Ok(addr) = listener.local_addr() {
        tracing::info!(%addr, "scorecard service listening");
    }
    axum::serve(listener, app).await
}

async fn get_rubric(State(state): State<Shared>) -> Response {
    ([(CONTENT_TYPE, "application/json")], state.rubric_body.clone()).into_response()
}

fn body_text(body: &Bytes) -> Result<&str, ApiError> {
    std::str::from_utf8(body).map_err(|e| ApiError::new(ErrorCode::BadRequest, format!("body is not UTF-8: {e}")))
}

fn read(state: &AppState, body: &Bytes) -> Result<Result<ValidatedIntake, ValidationReport>, ApiError> {
    read_intake(body_text(body)?, &state.catalog).map_err(|e| ApiError::new(ErrorCode::BadRequest, e.to_string()))
}

async fn post_validate(State(state): State<Shared>, body: Bytes) -> Result<Json<ValidationReport>, ApiError> {
    Ok(Json(match read(&state, &body)? {
        Ok(valid) => ValidationReport {
            findings: valid.warnings,
        },
        Err(report) => report,
    }))
}

fn validated(state: &AppState, body: &Bytes) -> Result<ValidatedIntake, ApiError> {
    read(state, body)?.map_err(|report| {
        let code = if report.errors().any(|f| f.kind == FindingKind::VersionMismatch) {
            ErrorCode::VersionMismatch
        } else {
            ErrorCode::ValidationFailed
        };
        ApiError::with_findings(code, report.findings)
    })
}

fn evaluation(state: &AppState, body: &Bytes) -> Result<scorecard_core::Evaluation, ApiError> {
    let intake = validated(state, body)?;
    let at = intake.timestamp.unwrap_or_else(Utc::now);
    evaluate_at(&intake.form, &state.catalog, at).map_err(|e| match e {
        ScoringError::VersionMismatch { .. } => ApiError::new(ErrorCode::VersionMismatch, e.to_string()),
        other => ApiError::new(ErrorCode::Internal, other.to_string()),
    })
}

async fn post_score(State(state): State<Shared>, body: Bytes) -> Result<Response, ApiError> {
    let eval = evaluation(&state, &body)?;
    Ok(([(CONTENT_TYPE, "application/json")], eval.to_json()).into_response())
}

#[derive(Debug, Deserialize)]
struct FormatQuery {
    format: Option<String>,
}

async fn post_scorecard(
    State(state): State<Shared>,
    Query(query): Query<FormatQuery>,
    body: Bytes,
) -> Result<Response, ApiError> {
    let format = query.format.as_deref().unwrap_or("markdown");
    let renderer = state
        .renderers
        .get(format)
        .map_err(|e| ApiError::new(ErrorCode::BadRequest, e.to_string()))?;
    let eval = evaluation(&state, &body)?;
    let card = build_scorecard(&eval, &state.recommendations)
        .map_err(|e| ApiError::new(ErrorCode::Internal, e.to_string()))?;
    Ok(([(CONTENT_TYPE, renderer.media_type())], renderer.render(&card)).into_response())
}
