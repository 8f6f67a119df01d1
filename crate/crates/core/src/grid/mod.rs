//! ε-nets over a rectangle and sets of grid nodes.
//!
//! The net is the `(M+1)×(M+1)` lattice of nodes
//! `(x0 + i·dx/M, y0 + j·dy/M)`. Its resolution `ε` is half the cell diagonal:
//! every point of the box lies within `ε` of its nearest node.

mod operator;
mod set;

pub use operator::{hb_apply_discrete, hb_apply_discrete_counted, HbOutcome};
pub use set::{CellIter, DiscreteSet, DENSE_LIMIT};

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::ifs::{Point2, Rect};

/// Column `i` and row `j` of a grid node, both in `0..=M`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CellIndex {
    pub i: u32,
    pub j: u32,
}

impl CellIndex {
    pub const fn new(i: u32, j: u32) -> Self {
        CellIndex { i, j }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Grid {
    bbox: Rect,
    m: u32,
    epsilon: f64,
}

impl Grid {
    pub fn new(bbox: Rect, resolution: u32) -> Result<Self> {
        if resolution == 0 || bbox.width() <= 0.0 || bbox.height() <= 0.0 {
            return Err(Error::InvalidGrid);
        }
        let epsilon = bbox.diam() / (2.0 * resolution as f64);
        Ok(Grid { bbox, m: resolution, epsilon })
    }

    pub fn bbox(&self) -> Rect {
        self.bbox
    }

    /// The resolution `M`.
    pub fn resolution(&self) -> u32 {
        self.m
    }

    /// Nodes per axis, `M + 1`.
    pub fn side(&self) -> u32 {
        self.m + 1
    }

    pub fn node_count(&self) -> u64 {
        let s = self.side() as u64;
        s * s
    }

    pub fn epsilon(&self) -> f64 {
        self.epsilon
    }

    /// Cell diagonal, `2ε`.
    pub fn cell_diagonal(&self) -> f64 {
        2.0 * self.epsilon
    }

    /// Node spacing along x and y.
    pub fn spacing(&self) -> (f64, f64) {
        (self.bbox.width() / self.m as f64, self.bbox.height() / self.m as f64)
    }

    #[inline]
    fn coord(lo: f64, hi: f64, k: u32, m: u32) -> f64 {
        if k == m {
            hi
        } else {
            lo + (k as f64) * (hi - lo) / m as f64
        }
    }

    /// Coordinates of a node.
    #[inline]
    pub fn node(&self, c: CellIndex) -> Point2 {
        Point2::new(
            Self::coord(self.bbox.x0, self.bbox.x1, c.i, self.m),
            Self::coord(self.bbox.y0, self.bbox.y1, c.j, self.m),
        )
    }

    #[inline]
    fn axis_index(v: f64, lo: f64, hi: f64, m: u32) -> (u32, bool) {
        // ties go toward +∞; for u ≥ 0 truncation is floor
        let u = (v - lo) / (hi - lo) * m as f64 + 0.5;
        if u.is_nan() || u < 0.0 {
            return (0, true);
        }
        let k = u as u64;
        if k > m as u64 {
            (m, true)
        } else {
            (k as u32, false)
        }
    }

    /// Nearest node; out-of-box points are clamped onto the box first.
    #[inline]
    pub fn project(&self, p: Point2) -> CellIndex {
        self.project_counted(p).0
    }

    /// Like [`Grid::project`], also reporting whether the nearest lattice node
    /// fell outside the grid and had to be clamped.
    #[inline]
    pub fn project_counted(&self, p: Point2) -> (CellIndex, bool) {
        let (i, ci) = Self::axis_index(p.x, self.bbox.x0, self.bbox.x1, self.m);
        let (j, cj) = Self::axis_index(p.y, self.bbox.y0, self.bbox.y1, self.m);
        (CellIndex { i, j }, ci || cj)
    }

    #[inline]
    pub(crate) fn linear(&self, c: CellIndex) -> u64 {
        c.j as u64 * self.side() as u64 + c.i as u64
    }

    #[inline]
    pub(crate) fn unlinear(&self, k: u64) -> CellIndex {
        let s = self.side();
        if let Ok(k) = u32::try_from(k) {
            return CellIndex { i: k % s, j: k / s };
        }
        let s = s as u64;
        CellIndex { i: (k % s) as u32, j: (k / s) as u32 }
    }

    pub fn contains_index(&self, c: CellIndex) -> bool {
        c.i <= self.m && c.j <= self.m
    }

    /// Projects every point, deduplicating into canonical order.
    pub fn discretize(&self, pts: &[Point2]) -> Result<DiscreteSet> {
        if pts.is_empty() {
            return Err(Error::EmptyInput);
        }
        Ok(DiscreteSet::from_cells(*self, pts.iter().map(|&p| self.project(p))))
    }

    /// Node coordinates of every cell of `s`, in canonical order.
    pub fn realize(&self, s: &DiscreteSet) -> Result<Vec<Point2>> {
        if s.grid() != self {
            return Err(Error::GridMismatch);
        }
        Ok(s.iter().map(|c| self.node(c)).collect())
    }
}
