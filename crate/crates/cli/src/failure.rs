use std::process::ExitCode;

use scorecard_core::intake::Finding;
use scorecard_core::{ReportError, ScoringError, ValidationReport};
use serde_json::{json, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    Validation,
    Input,
    Internal,
}

impl Kind {
    fn code(self) -> &'static str {
        match self {
            Kind::Validation => "validation_failed",
            Kind::Input => "bad_input",
            Kind::Internal => "internal",
        }
    }

    pub fn exit_status(self) -> u8 {
        match self {
            Kind::Validation => 1,
            Kind::Input => 2,
            Kind::Internal => 3,
        }
    }
}

#[derive(Debug)]
pub struct Failure {
    pub kind: Kind,
    pub message: String,
    pub findings: Vec<Finding>,
}

impl Failure {
    fn new(kind: Kind, message: impl Into<String>) -> Self {
        Failure {
            kind,
            message: message.into(),
            findings: Vec::new(),
        }
    }

    pub fn input(message: impl Into<String>) -> Self {
        Self::new(Kind::Input, message)
    }

    pub fn io(message: impl Into<String>) -> Self {
        Self::new(Kind::Internal, message)
    }

    pub fn validation(report: ValidationReport) -> Self {
        let errors = report.errors().count();
        Failure {
            kind: Kind::Validation,
            message: format!("intake has {errors} error(s)"),
            findings: report.findings,
        }
    }

    pub fn scoring(e: ScoringError) -> Self {
        Self::new(Kind::Internal, e.to_string())
    }

    pub fn report(e: ReportError) -> Self {
        match e {
            ReportError::UnknownFormat(_) | ReportError::MissingRecommendation(_) => Self::input(e.to_string()),
            other => Self::new(Kind::Internal, other.to_string()),
        }
    }

    pub fn to_json(&self) -> Value {
        let mut body = json!({ "code": self.kind.code(), "message": self.message });
        if !self.findings.is_empty() {
            body["findings"] = serde_json::to_value(&self.findings).expect("findings serialize");
        }
        body
    }

    pub fn report_and_exit_code(self) -> ExitCode {
        eprintln!("{}", self.to_json());
        ExitCode::from(self.kind.exit_status())
    }
}

/// Non-fatal findings (warnings) on stderr.
pub fn print_findings(findings: &[Finding]) {
    eprintln!("{}", json!({ "findings": findings }));
}
