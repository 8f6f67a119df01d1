//! JSON run configuration.
//!
//! ```json
//! {
//!   "bbox": [0.0, 0.0, 1.0, 1.0],
//!   "resolution": 1024,
//!   "delta": 0.05,
//!   "seed": 7,
//!   "out": "out",
//!   "systems": [
//!     { "name": "R1", "maps": [ { "a": 0.5, "b": 0.0, "c": 0.0, "d": 0.5, "e": 0.0, "f": 0.0 } ] }
//!   ]
//! }
//! ```
//!
//! `delta`, `seed` and `out` are optional.

use std::path::{Path, PathBuf};

use blendifs_core::{AffineMap2, BlendSystem, Ifs, Rect};
use serde::{Deserialize, Serialize};

use crate::error::{CliError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MapSpec {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
    pub e: f64,
    pub f: f64,
}

impl From<MapSpec> for AffineMap2 {
    fn from(m: MapSpec) -> Self {
        AffineMap2::new(m.a, m.b, m.c, m.d, m.e, m.f)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SystemSpec {
    pub name: String,
    pub maps: Vec<MapSpec>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawConfig {
    pub bbox: [f64; 4],
    pub resolution: u32,
    pub systems: Vec<SystemSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub delta: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub out: Option<PathBuf>,
}

/// A validated configuration.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub system: BlendSystem,
    pub resolution: u32,
    pub delta: Option<f64>,
    pub seed: Option<u64>,
    pub out: Option<PathBuf>,
}

impl RunConfig {
    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
        Self::from_json(&text).map_err(|e| match e {
            CliError::Config { detail, .. } => CliError::Config { path: path.to_path_buf(), detail },
            other => other,
        })
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let raw: RawConfig =
            serde_json::from_str(text).map_err(|e| CliError::Config { path: PathBuf::new(), detail: e.to_string() })?;
        Self::from_raw(raw)
    }

    pub fn from_raw(raw: RawConfig) -> Result<Self> {
        let bad = |detail: String| CliError::Config { path: PathBuf::new(), detail };
        let [x0, y0, x1, y1] = raw.bbox;
        let bbox = Rect::new(x0, y0, x1, y1).map_err(|e| bad(format!("bbox: {e}")))?;
        if raw.resolution == 0 {
            return Err(bad("resolution must be at least 1".into()));
        }
        if let Some(d) = raw.delta {
            if d.is_nan() || d <= 0.0 {
                return Err(bad(format!("delta must be positive, got {d}")));
            }
        }
        let mut systems = Vec::with_capacity(raw.systems.len());
        for spec in raw.systems {
            if systems.iter().any(|s: &Ifs| s.name() == spec.name) {
                return Err(bad(format!("duplicate system name `{}`", spec.name)));
            }
            let maps = spec.maps.into_iter().map(AffineMap2::from).collect();
            let ifs =
                Ifs::new(spec.name.clone(), maps).map_err(|source| CliError::System { system: spec.name, source })?;
            systems.push(ifs);
        }
        if systems.is_empty() {
            return Err(bad("no systems".into()));
        }
        let system = BlendSystem::new(bbox, systems)?;
        Ok(RunConfig { system, resolution: raw.resolution, delta: raw.delta, seed: raw.seed, out: raw.out })
    }

    pub fn names(&self) -> Vec<String> {
        self.system.systems().iter().map(|s| s.name().to_string()).collect()
    }

    /// 1-based index of a system given by name or by its 1-based number.
    pub fn lookup(&self, name: &str) -> Result<usize> {
        if let Some(p) = self.system.systems().iter().position(|s| s.name() == name) {
            return Ok(p + 1);
        }
        match name.parse::<usize>() {
            Ok(i) if (1..=self.system.len()).contains(&i) => Ok(i),
            _ => Err(CliError::UnknownIfs { name: name.to_string(), available: self.names() }),
        }
    }
}
