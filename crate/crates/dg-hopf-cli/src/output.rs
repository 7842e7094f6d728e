//! Deterministic text and JSON rendering of command results.
//!
//! Every command produces a [`CommandOutput`]: free-form note lines,
//! structured verification [`Report`]s, and named result maps. The text
//! form is what a person reads; the JSON form is self-describing and
//! carries per-identity pass/fail verdicts with witnesses plus the full
//! matrix blocks of every result map, in the same entry format the bundle
//! files use.

use crate::bundle::{map_to_doc, MapDoc};
use clap::ValueEnum;
use dg_hopf::report::Report;
use dg_hopf::{GradedMap, Rat};
use serde::Serialize;
use std::fmt::Write as _;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
}

pub struct CommandOutput {
    pub command: &'static str,
    pub bundle: String,
    pub notes: Vec<String>,
    pub reports: Vec<Report>,
    pub results: Vec<(String, GradedMap<Rat>)>,
}

impl CommandOutput {
    pub fn new(command: &'static str, bundle: &str) -> CommandOutput {
        CommandOutput {
            command,
            bundle: bundle.to_string(),
            notes: Vec::new(),
            reports: Vec::new(),
            results: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.reports.iter().all(Report::passed)
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.render_text(),
            Format::Json => self.render_json(),
        }
    }

    fn render_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "dghopf {} — bundle `{}`", self.command, self.bundle);
        for note in &self.notes {
            let _ = writeln!(out, "{note}");
        }
        for report in &self.reports {
            let _ = write!(out, "{report}");
        }
        for (name, map) in &self.results {
            let _ = writeln!(
                out,
                "{name}: {} → {} (degree {})",
                map.source(),
                map.target(),
                map.degree()
            );
            let src = map.source_basis();
            for (n, i) in src.elements() {
                let _ = writeln!(out, "  {} ↦ {}", src.label(n, i), map.image_of_basis(n, i));
            }
        }
        let _ = writeln!(out, "{}", if self.passed() { "PASS" } else { "FAIL" });
        out
    }

    fn render_json(&self) -> String {
        #[derive(Serialize)]
        struct JsonWitness<'a> {
            element: &'a str,
            lhs: &'a str,
            rhs: &'a str,
        }
        #[derive(Serialize)]
        struct JsonCheck<'a> {
            name: &'a str,
            pass: bool,
            witness: Option<JsonWitness<'a>>,
        }
        #[derive(Serialize)]
        struct JsonReport<'a> {
            subject: &'a str,
            passed: bool,
            checks: Vec<JsonCheck<'a>>,
        }
        #[derive(Serialize)]
        struct JsonOutput<'a> {
            command: &'a str,
            bundle: &'a str,
            passed: bool,
            notes: &'a [String],
            reports: Vec<JsonReport<'a>>,
            results: Vec<MapDoc>,
        }

        let reports = self
            .reports
            .iter()
            .map(|r| JsonReport {
                subject: &r.subject,
                passed: r.passed(),
                checks: r
                    .checks
                    .iter()
                    .map(|c| JsonCheck {
                        name: &c.name,
                        pass: c.pass,
                        witness: c.witness.as_ref().map(|w| JsonWitness {
                            element: &w.element,
                            lhs: &w.lhs,
                            rhs: &w.rhs,
                        }),
                    })
                    .collect(),
            })
            .collect();
        let results = self.results.iter().map(|(name, map)| map_to_doc(name, map)).collect();
        let doc = JsonOutput {
            command: self.command,
            bundle: &self.bundle,
            passed: self.passed(),
            notes: &self.notes,
            reports,
            results,
        };
        let mut text = serde_json::to_string_pretty(&doc).expect("command output serializes");
        text.push('\n');
        text
    }
}
