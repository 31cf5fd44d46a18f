//! Scorecard output formats.
//!
//! Each format is a [`ScorecardRenderer`] registered under a name in a
//! [`RendererRegistry`]; callers pick one at runtime (`--format`,
//! `?format=`). The built-in registry carries `markdown`, `html` and
//! `machine`.

use std::fmt::Write as _;

use super::{escape_cell, Scorecard};
use crate::error::ReportError;
use crate::scoring::Color;

pub trait ScorecardRenderer: Send + Sync {
    /// Registry name, e.g. `markdown`.
    fn name(&self) -> &'static str;
    fn media_type(&self) -> &'static str;
    /// Suffix used for `<dataset>.scorecard.<ext>` files.
    fn extension(&self) -> &'static str;
    fn render(&self, scorecard: &Scorecard) -> String;
}

pub struct RendererRegistry {
    renderers: Vec<Box<dyn ScorecardRenderer>>,
}

impl RendererRegistry {
    pub fn empty() -> Self {
        RendererRegistry { renderers: Vec::new() }
    }

    pub fn builtin() -> Self {
        let mut registry = Self::empty();
        registry.register(Box::new(MarkdownRenderer));
        registry.register(Box::new(HtmlRenderer));
        registry.register(Box::new(MachineRenderer));
        registry
    }

    /// Adds a renderer, replacing any existing one with the same name.
    pub fn register(&mut self, renderer: Box<dyn ScorecardRenderer>) {
        self.renderers.retain(|r| r.name() != renderer.name());
        self.renderers.push(renderer);
    }

    pub fn get(&self, name: &str) -> Result<&dyn ScorecardRenderer, ReportError> {
        self.renderers
            .iter()
            .find(|r| r.name() == name)
            .map(|r| r.as_ref())
            .ok_or_else(|| ReportError::UnknownFormat(name.to_string()))
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.renderers.iter().map(|r| r.name()).collect()
    }

    pub fn render(&self, format: &str, scorecard: &Scorecard) -> Result<String, ReportError> {
        Ok(self.get(format)?.render(scorecard))
    }
}

impl Default for RendererRegistry {
    fn default() -> Self {
        Self::builtin()
    }
}

/// Scorecard rows drop the second trailing zero of whole numbers:
/// `-1.00` prints as `-1.0`, `0.80` stays `0.80`.
pub fn compact_score(display: &str) -> String {
    match display.strip_suffix(".00") {
        Some(whole) => format!("{whole}.0"),
        None => display.to_string(),
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "Yes"
    } else {
        "No"
    }
}

fn inline(text: &str) -> String {
    text.split_whitespace().collect::<Vec<_>>().join(" ")
}

pub struct MarkdownRenderer;

impl ScorecardRenderer for MarkdownRenderer {
    fn name(&self) -> &'static str {
        "markdown"
    }

    fn media_type(&self) -> &'static str {
        "text/markdown; charset=utf-8"
    }

    fn extension(&self) -> &'static str {
        "md"
    }

    fn render(&self, card: &Scorecard) -> String {
        let mut out = String::new();
        out.push_str("# Dataset Development Scorecard\n\n");
        let _ = writeln!(out, "**Dataset Name:** {}\n", inline(&card.dataset_name));
        let _ = writeln!(out, "**Description:** {}\n", inline(&card.description));
        if let Some(owner) = &card.owner_contact {
            let _ = writeln!(out, "**Owner:** {}\n", inline(owner));
        }
        if let Some(version) = &card.dataset_version {
            let _ = writeln!(out, "**Version:** {}\n", inline(version));
        }
        let _ = writeln!(out, "**Rubric:** {}\n", card.catalog);
        let _ = writeln!(
            out,
            "**Evaluated:** {}\n",
            card.evaluated_at.format("%Y-%m-%dT%H:%M:%SZ")
        );
        out.push_str("---\n\n");

        out.push_str("| Criteria | Document Available? | Score / Assessment Status |\n");
        out.push_str("| --- | --- | --- |\n");
        for row in &card.rows {
            let _ = writeln!(
                out,
                "| **{}** | {} | [{}] [{}] <!-- status:{} --> |",
                escape_cell(&row.title),
                yes_no(row.document_available),
                compact_score(&row.display_score),
                row.color,
                row.color.token(),
            );
        }
        out.push('\n');

        out.push_str("**Remarks:**\n\n");
        for row in &card.rows {
            let _ = writeln!(out, "- **{}:** {}", row.title, inline(&row.remarks.join(" ")));
        }
        out.push_str("\n---\n\n");

        let _ = writeln!(out, "**Overall Assessment:** {}\n", inline(&card.overall_assessment));
        out.push_str("---\n\n");

        out.push_str("**Recommendations:**\n\n");
        for area in &card.recommendations {
            let _ = writeln!(out, "- **{}:**", area.title);
            for bullet in &area.bullets {
                let _ = writeln!(out, "  - {}", inline(&bullet.text));
            }
        }
        out
    }
}

pub struct HtmlRenderer;

fn badge_color(color: Color) -> &'static str {
    match color {
        Color::Red => "#c62828",
        Color::Yellow => "#f9a825",
        Color::Green => "#2e7d32",
    }
}

fn esc(text: &str) -> String {
    let mut out = String::with_capacity(text.len());
    for ch in text.chars() {
        match ch {
            '&' => out.push_str("&amp;"),
            '<' => out.push_str("&lt;"),
            '>' => out.push_str("&gt;"),
            '"' => out.push_str("&quot;"),
            '\'' => out.push_str("&#39;"),
            c => out.push(c),
        }
    }
    out
}

impl ScorecardRenderer for HtmlRenderer {
    fn name(&self) -> &'static str {
        "html"
    }

    fn media_type(&self) -> &'static str {
        "text/html; charset=utf-8"
    }

    fn extension(&self) -> &'static str {
        "html"
    }

    fn render(&self, card: &Scorecard) -> String {
        let mut out = String::new();
        out.push_str("<!DOCTYPE html>\n<html lang=\"en\">\n<head>\n<meta charset=\"utf-8\"/>\n");
        let _ = writeln!(out, "<title>Scorecard: {}</title>", esc(&card.dataset_name));
        out.push_str("</head>\n<body>\n<section class=\"scorecard\">\n");
        out.push_str("<h1>Dataset Development Scorecard</h1>\n<dl class=\"header\">\n");
        let mut field = |label: &str, value: &str| {
            let _ = writeln!(out, "<dt>{label}</dt><dd>{}</dd>", esc(value));
        };
        field("Dataset Name:", &card.dataset_name);
        field("Description:", &card.description);
        if let Some(owner) = &card.owner_contact {
            field("Owner:", owner);
        }
        if let Some(version) = &card.dataset_version {
            field("Version:", version);
        }
        field("Rubric:", &card.catalog.to_string());
        field(
            "Evaluated:",
            &card.evaluated_at.format("%Y-%m-%dT%H:%M:%SZ").to_string(),
        );
        out.push_str("</dl>\n<hr/>\n<table class=\"areas\">\n<thead><tr><th>Criteria</th><th>Document Available?</th><th>Score / Assessment Status</th></tr></thead>\n<tbody>\n");
        for row in &card.rows {
            let _ = writeln!(
                out,
                "<tr class=\"area-row\" data-area=\"{id}\" data-status=\"{token}\"><th scope=\"row\">{title}</th><td>{doc}</td><td><span class=\"score\">[{score}]</span> <span class=\"badge status-{token}\" style=\"background:{bg};color:#fff;padding:0 0.4em;border-radius:3px\">{color}</span><p class=\"remarks\"><strong>Remarks:</strong> {remarks}</p></td></tr>",
                id = esc(&row.area_id),
                token = row.color.token(),
                title = esc(&row.title),
                doc = yes_no(row.document_available),
                score = esc(&compact_score(&row.display_score)),
                bg = badge_color(row.color),
                color = row.color,
                remarks = esc(&row.remarks.join(" ")),
            );
        }
        out.push_str("</tbody>\n</table>\n<hr/>\n");
        let _ = writeln!(
            out,
            "<p class=\"overall\"><strong>Overall Assessment:</strong> {}</p>\n<hr/>",
            esc(&card.overall_assessment)
        );
        out.push_str("<div class=\"recommendations\"><strong>Recommendations:</strong>\n<ul>\n");
        for area in &card.recommendations {
            let _ = writeln!(
                out,
                "<li data-area=\"{}\"><strong>{}:</strong><ul>",
                esc(&area.area_id),
                esc(&area.title)
            );
            for bullet in &area.bullets {
                let _ = writeln!(out, "<li data-key=\"{}\">{}</li>", esc(&bullet.key), esc(&bullet.text));
            }
            out.push_str("</ul></li>\n");
        }
        out.push_str("</ul>\n</div>\n</section>\n</body>\n</html>\n");
        out
    }
}

/// Lossless JSON mirror of [`Scorecard`].
pub struct MachineRenderer;

impl ScorecardRenderer for MachineRenderer {
    fn name(&self) -> &'static str {
        "machine"
    }

    fn media_type(&self) -> &'static str {
        "application/json"
    }

    fn extension(&self) -> &'static str {
        "json"
    }

    fn render(&self, card: &Scorecard) -> String {
        let mut s = serde_json::to_string_pretty(card).expect("scorecard serializes");
        s.push('\n');
        s
    }
}
