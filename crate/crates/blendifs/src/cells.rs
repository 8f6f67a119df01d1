//! Cell-list text format: a header line `M=<resolution>` followed by one
//! `i,j` line per cell in canonical (row-major) order.

use std::fmt::Write as _;
use std::path::Path;

use blendifs_core::{CellIndex, DiscreteSet, Grid};

use crate::error::{CliError, Result};

pub fn to_string(set: &DiscreteSet) -> String {
    let mut out = String::with_capacity(12 * set.len() + 16);
    let _ = writeln!(out, "M={}", set.grid().resolution());
    for c in set.iter() {
        let _ = writeln!(out, "{},{}", c.i, c.j);
    }
    out
}

/// Parses a cell list onto `grid`; the header must match its resolution.
pub fn parse(text: &str, grid: Grid) -> std::result::Result<DiscreteSet, String> {
    let mut lines = text.lines().enumerate();
    let (_, header) = lines.next().ok_or("empty cell list")?;
    let m: u32 = header
        .trim()
        .strip_prefix("M=")
        .and_then(|v| v.parse().ok())
        .ok_or_else(|| format!("bad header `{header}`, expected M=<resolution>"))?;
    if m != grid.resolution() {
        return Err(format!("cell list has M={m} but the run uses M={}", grid.resolution()));
    }
    let mut cells = Vec::new();
    for (n, line) in lines {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let bad = || format!("line {}: expected `i,j` with 0 <= i,j <= {m}, got `{line}`", n + 1);
        let (i, j) = line.split_once(',').ok_or_else(bad)?;
        let i: u32 = i.trim().parse().map_err(|_| bad())?;
        let j: u32 = j.trim().parse().map_err(|_| bad())?;
        if i > m || j > m {
            return Err(bad());
        }
        cells.push(CellIndex::new(i, j));
    }
    if cells.is_empty() {
        return Err("cell list has no cells".into());
    }
    Ok(DiscreteSet::from_cells(grid, cells))
}

pub fn write(path: &Path, set: &DiscreteSet) -> Result<()> {
    std::fs::write(path, to_string(set)).map_err(|e| CliError::io(path, e))
}

pub fn read(path: &Path, grid: Grid) -> Result<DiscreteSet> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
    parse(&text, grid).map_err(|detail| CliError::Format { path: path.to_path_buf(), detail })
}
