//! Machine-readable (JSON) and flat `key=value` text reports.
//!
//! Stable key names used across reports: `beta_def_lower`, `beta_def_upper`,
//! `beta_examples`, `tail_bound`, `radius_variant`, `error_bound_worst`,
//! `error_bound_tight`, `clamp_count`, `uncertainty`. The text form flattens
//! nested keys with `.` and numbers array elements from 1.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use serde::Serialize;
use serde_json::Value;

use crate::error::{CliError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum BetaVariant {
    Definition,
    Examples,
    #[default]
    Both,
}

impl BetaVariant {
    pub fn definition(self) -> bool {
        matches!(self, BetaVariant::Definition | BetaVariant::Both)
    }

    pub fn examples(self) -> bool {
        matches!(self, BetaVariant::Examples | BetaVariant::Both)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct BetaRow {
    pub system: usize,
    pub name: String,
    pub lambda: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub beta_def_lower: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub beta_def_upper: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub beta_examples: Option<f64>,
}

#[derive(Debug, Clone, Serialize)]
pub struct BetaSection {
    pub theta: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tail_bound: Option<f64>,
    pub betas: Vec<BetaRow>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ApproximationSection {
    pub resolution: u32,
    pub epsilon: f64,
    pub diam: f64,
    pub lambda_script_r: f64,
    pub k: usize,
    pub error_bound_tight: f64,
    pub error_bound_worst: f64,
    pub clamp_count: u64,
    pub cells: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct AttractorReport {
    pub command: &'static str,
    pub system: usize,
    pub name: String,
    pub lambda: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub delta: Option<f64>,
    #[serde(flatten)]
    pub approximation: ApproximationSection,
    pub image_file: String,
    pub cells_file: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct BlendReport {
    pub command: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub z_file: Option<String>,
    #[serde(flatten)]
    pub approximation: ApproximationSection,
    #[serde(flatten)]
    pub beta: BetaSection,
    pub image_file: String,
    pub cells_file: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct HausdorffRow {
    pub a: String,
    pub b: String,
    pub directed_ab: f64,
    pub directed_ba: f64,
    pub symmetric: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct HausdorffReport {
    pub command: &'static str,
    pub resolution: u32,
    pub k: usize,
    /// One cell diagonal plus twice the worst attractor error bound.
    pub uncertainty: f64,
    pub pairs: Vec<HausdorffRow>,
}

#[derive(Debug, Clone, Serialize)]
pub struct BetaReportFile {
    pub command: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(flatten)]
    pub beta: BetaSection,
}

#[derive(Debug, Clone, Serialize)]
pub struct DeltaRow {
    pub i0: usize,
    pub name: String,
    pub delta: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct DeltaReport {
    pub command: &'static str,
    pub resolution: u32,
    pub k: usize,
    pub uncertainty: f64,
    pub deltas: Vec<DeltaRow>,
}

#[derive(Debug, Clone, Serialize)]
pub struct RadiiRow {
    pub radius_variant: &'static str,
    pub radii: Vec<f64>,
}

#[derive(Debug, Clone, Serialize)]
pub struct EnvelopeReport {
    pub command: &'static str,
    pub resolution: u32,
    pub k: usize,
    pub names: Vec<String>,
    pub lambdas: Vec<f64>,
    pub m_value: f64,
    pub m_uncertainty: f64,
    pub covering: Vec<RadiiRow>,
}

/// Flattens a JSON value into `key=value` lines.
pub fn flatten(value: &Value) -> String {
    fn walk(prefix: &str, v: &Value, out: &mut String) {
        match v {
            Value::Object(map) => {
                for (k, v) in map {
                    let key = if prefix.is_empty() { k.clone() } else { format!("{prefix}.{k}") };
                    walk(&key, v, out);
                }
            }
            Value::Array(items) if items.iter().all(|v| v.is_number()) => {
                let list: Vec<String> = items.iter().map(Value::to_string).collect();
                let _ = writeln!(out, "{prefix}={}", list.join(","));
            }
            Value::Array(items) => {
                for (n, v) in items.iter().enumerate() {
                    walk(&format!("{prefix}.{}", n + 1), v, out);
                }
            }
            Value::String(s) => {
                let _ = writeln!(out, "{prefix}={s}");
            }
            other => {
                let _ = writeln!(out, "{prefix}={other}");
            }
        }
    }
    let mut out = String::new();
    walk("", value, &mut out);
    out
}

/// Writes `<stem>.json` and `<stem>.txt` into `dir`, returning both paths.
pub fn write_reports<T: Serialize>(dir: &Path, stem: &str, report: &T) -> Result<[PathBuf; 2]> {
    let value = serde_json::to_value(report).expect("reports serialize");
    let json_path = dir.join(format!("{stem}.json"));
    let txt_path = dir.join(format!("{stem}.txt"));
    let mut json = serde_json::to_string_pretty(&value).expect("reports serialize");
    json.push('\n');
    std::fs::write(&json_path, json).map_err(|e| CliError::io(&json_path, e))?;
    std::fs::write(&txt_path, flatten(&value)).map_err(|e| CliError::io(&txt_path, e))?;
    Ok([json_path, txt_path])
}
