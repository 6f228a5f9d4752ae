//! Verification reports and their renderings.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;

use super::{Bounds, Corruption, Entry, RunContext};
use crate::error::{Error, Result};
use crate::grid::Witness;
use crate::rational::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl Status {
    pub fn name(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
        }
    }
}

/// A failing point: which case, the variable values and both sides.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WitnessReport {
    pub case: String,
    pub point: BTreeMap<String, String>,
    pub lhs: String,
    pub rhs: String,
}

impl WitnessReport {
    pub fn new(case: &str, w: Witness) -> Self {
        WitnessReport {
            case: case.to_string(),
            point: w
                .point
                .iter()
                .map(|(k, v)| (k.clone(), v.to_string()))
                .collect(),
            lhs: w.lhs.to_string(),
            rhs: w.rhs.to_string(),
        }
    }

    fn point_text(&self) -> String {
        let parts: Vec<String> = self.point.iter().map(|(k, v)| format!("{k}={v}")).collect();
        parts.join(";")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EntryReport {
    pub id: String,
    pub label: String,
    pub module: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    pub cases_run: usize,
    pub points: usize,
    pub millis: u64,
}

impl EntryReport {
    pub(super) fn new(e: &Entry) -> Self {
        EntryReport {
            id: e.id.to_string(),
            label: e.label.to_string(),
            module: e.module.name().to_string(),
            status: Status::Skipped,
            reason: None,
            witness: None,
            note: None,
            cases_run: 0,
            points: 0,
            millis: 0,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConfigEcho {
    pub bounds: Bounds,
    pub grid_base: Vec<Rational>,
    pub grid_overrides: BTreeMap<String, Vec<Rational>>,
    pub min_points: usize,
    pub seed: u64,
    pub mc_trials: u64,
    pub meixner: String,
    pub exec: String,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub skip: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub corruption: Option<Corruption>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
    pub millis: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub config: ConfigEcho,
    pub entries: Vec<EntryReport>,
    pub summary: Summary,
}

impl VerificationReport {
    pub(super) fn new(ctx: &RunContext, entries: Vec<EntryReport>, millis: u64) -> Self {
        let count = |s: Status| entries.iter().filter(|e| e.status == s).count();
        let summary = Summary {
            total: entries.len(),
            passed: count(Status::Pass),
            failed: count(Status::Fail),
            skipped: count(Status::Skipped),
            millis,
        };
        VerificationReport {
            config: ConfigEcho {
                bounds: ctx.bounds.clone(),
                grid_base: ctx.grid.base.clone(),
                grid_overrides: ctx.grid.overrides.clone(),
                min_points: ctx.grid.min_points,
                seed: ctx.seed,
                mc_trials: ctx.mc_trials,
                meixner: ctx.meixner.name().to_string(),
                exec: ctx.mode.name().to_string(),
                skip: ctx.skip.clone(),
                corruption: ctx.corruption.clone(),
            },
            entries,
            summary,
        }
    }

    pub fn all_passed(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn entry(&self, id: &str) -> Option<&EntryReport> {
        self.entries.iter().find(|e| e.id == id)
    }

    /// The report with every timing field zeroed.
    pub fn without_timing(&self) -> VerificationReport {
        let mut r = self.clone();
        r.summary.millis = 0;
        for e in &mut r.entries {
            e.millis = 0;
        }
        r
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from(
            "id,label,module,status,reason,case,point,lhs,rhs,cases_run,points,millis\n",
        );
        for e in &self.entries {
            let w = e.witness.as_ref();
            let row = [
                e.id.clone(),
                e.label.clone(),
                e.module.clone(),
                e.status.name().to_string(),
                e.reason.clone().unwrap_or_default(),
                w.map(|w| w.case.clone()).unwrap_or_default(),
                w.map(WitnessReport::point_text).unwrap_or_default(),
                w.map(|w| w.lhs.clone()).unwrap_or_default(),
                w.map(|w| w.rhs.clone()).unwrap_or_default(),
                e.cases_run.to_string(),
                e.points.to_string(),
                e.millis.to_string(),
            ];
            let cells: Vec<String> = row.iter().map(|c| csv_cell(c)).collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        out
    }

    pub fn to_pretty(&self) -> String {
        let mut out = String::new();
        for e in &self.entries {
            let _ = write!(out, "{:<10} {:<12} {:<8}", e.id, e.module, e.status.name());
            if let Some(r) = &e.reason {
                let _ = write!(out, " ({r})");
            }
            let _ = writeln!(
                out,
                "  cases={} points={} {}ms",
                e.cases_run, e.points, e.millis
            );
            if let Some(w) = &e.witness {
                let _ = writeln!(
                    out,
                    "           witness [{}] {{{}}}: lhs={} rhs={}",
                    w.case,
                    w.point_text(),
                    w.lhs,
                    w.rhs
                );
            }
            if let Some(n) = &e.note {
                let _ = writeln!(out, "           note: {n}");
            }
        }
        let s = &self.summary;
        let _ = writeln!(
            out,
            "total={} passed={} failed={} skipped={} in {}ms",
            s.total, s.passed, s.failed, s.skipped, s.millis
        );
        out
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => self.to_json(),
            Format::Csv => self.to_csv(),
            Format::Pretty => self.to_pretty(),
        }
    }
}

fn csv_cell(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// Output format for reports and command results.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    #[default]
    Pretty,
}

/// Environment variable consulted for the default output format.
pub const FORMAT_ENV: &str = "BT_FORMAT";

impl Format {
    pub fn parse(s: &str) -> Result<Format> {
        match s.trim().to_ascii_lowercase().as_str() {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            "pretty" | "text" => Ok(Format::Pretty),
            other => Err(Error::Config(format!(
                "unknown format `{other}` (json|csv|pretty)"
            ))),
        }
    }

    /// `BT_FORMAT` when set, pretty otherwise.
    pub fn from_env() -> Result<Format> {
        match std::env::var(FORMAT_ENV) {
            Ok(v) if !v.trim().is_empty() => Format::parse(&v),
            _ => Ok(Format::Pretty),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Format::Json => "json",
            Format::Csv => "csv",
            Format::Pretty => "pretty",
        }
    }
}
