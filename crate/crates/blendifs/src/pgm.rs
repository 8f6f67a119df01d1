//! Binary 8-bit grayscale PGM (`P5`) rendering of discrete sets.

use std::path::Path;

use blendifs_core::{CellIndex, DiscreteSet};

use crate::error::{CliError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RenderSpec {
    /// Image size in pixels; `None` means one pixel per grid node.
    pub width: Option<u32>,
    pub height: Option<u32>,
    pub foreground: u8,
    pub background: u8,
    /// Row 0 of the image is the top of the box (largest y).
    pub y_up: bool,
}

impl Default for RenderSpec {
    fn default() -> Self {
        RenderSpec { width: None, height: None, foreground: 0, background: 255, y_up: true }
    }
}

/// Full file contents. With a custom size each pixel samples its nearest node.
pub fn render(set: &DiscreteSet, spec: &RenderSpec) -> Vec<u8> {
    let side = set.grid().side();
    let w = spec.width.unwrap_or(side).max(1);
    let h = spec.height.unwrap_or(side).max(1);
    let header = format!("P5\n{w} {h}\n255\n");
    let mut out = Vec::with_capacity(header.len() + (w as usize) * (h as usize));
    out.extend_from_slice(header.as_bytes());
    let body = out.len();
    out.resize(body + (w as usize) * (h as usize), spec.background);

    let to_pixel = |c: CellIndex| -> (usize, usize) {
        let px = (c.i as u64 * w as u64 / side as u64) as usize;
        let py = (c.j as u64 * h as u64 / side as u64) as usize;
        let row = if spec.y_up { h as usize - 1 - py } else { py };
        (px, row)
    };
    if w == side && h == side {
        for c in set.iter() {
            let (px, row) = to_pixel(c);
            out[body + row * w as usize + px] = spec.foreground;
        }
    } else {
        // sample: pixel centre -> nearest node
        for row in 0..h as usize {
            let py = if spec.y_up { h as usize - 1 - row } else { row };
            let j = ((py as f64 + 0.5) * side as f64 / h as f64) as u32;
            for px in 0..w as usize {
                let i = ((px as f64 + 0.5) * side as f64 / w as f64) as u32;
                if set.contains(CellIndex::new(i.min(side - 1), j.min(side - 1))) {
                    out[body + row * w as usize + px] = spec.foreground;
                }
            }
        }
    }
    out
}

pub fn write(path: &Path, set: &DiscreteSet, spec: &RenderSpec) -> Result<()> {
    std::fs::write(path, render(set, spec)).map_err(|e| CliError::io(path, e))
}
