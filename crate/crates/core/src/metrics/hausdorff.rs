//! Hausdorff distances between finite point sets.
//!
//! Two routes are provided: a brute-force `O(|A|·|B|)` scan over arbitrary
//! points, and a grid route for [`DiscreteSet`]s that builds an exact
//! Euclidean distance transform of one set (separable lower-envelope
//! algorithm, one pass per axis) and reads it at the nodes of the other.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::grid::{CellIndex, DiscreteSet, Grid, DENSE_LIMIT};
use crate::ifs::Point2;
use crate::math;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Hausdorff {
    /// `max_{a∈A} min_{b∈B} |a − b|`
    pub directed_ab: f64,
    /// `max_{b∈B} min_{a∈A} |a − b|`
    pub directed_ba: f64,
    pub symmetric: f64,
}

impl Hausdorff {
    fn new(directed_ab: f64, directed_ba: f64) -> Self {
        Hausdorff { directed_ab, directed_ba, symmetric: directed_ab.max(directed_ba) }
    }
}

fn nearest_sq(p: Point2, b: &[Point2]) -> f64 {
    b.iter().fold(f64::INFINITY, |acc, q| {
        let (dx, dy) = (p.x - q.x, p.y - q.y);
        acc.min(dx * dx + dy * dy)
    })
}

/// Directed distance by exhaustive search.
pub fn directed_points(a: &[Point2], b: &[Point2]) -> Result<f64> {
    if a.is_empty() || b.is_empty() {
        return Err(Error::EmptyInput);
    }
    #[cfg(feature = "parallel")]
    let worst = {
        use rayon::prelude::*;
        a.par_iter().map(|&p| nearest_sq(p, b)).reduce(|| 0.0, f64::max)
    };
    #[cfg(not(feature = "parallel"))]
    let worst = a.iter().map(|&p| nearest_sq(p, b)).fold(0.0, f64::max);
    Ok(math::sqrt(worst))
}

/// Brute-force Hausdorff distance between two point collections.
pub fn hausdorff_points(a: &[Point2], b: &[Point2]) -> Result<Hausdorff> {
    Ok(Hausdorff::new(directed_points(a, b)?, directed_points(b, a)?))
}

/// Brute-force Hausdorff distance between two discrete sets on the same grid.
pub fn hausdorff_sets_brute(a: &DiscreteSet, b: &DiscreteSet) -> Result<Hausdorff> {
    if a.grid() != b.grid() {
        return Err(Error::GridMismatch);
    }
    let g = a.grid();
    hausdorff_points(&g.realize(a)?, &g.realize(b)?)
}

/// Grid-accelerated Hausdorff distance between two discrete sets.
///
/// Grids above [`DENSE_LIMIT`] fall back to the brute-force route, since the
/// distance transform needs one float per node.
pub fn hausdorff_sets(a: &DiscreteSet, b: &DiscreteSet) -> Result<Hausdorff> {
    if a.grid() != b.grid() {
        return Err(Error::GridMismatch);
    }
    if a.is_empty() || b.is_empty() {
        return Err(Error::EmptyInput);
    }
    if a.grid().resolution() > DENSE_LIMIT {
        return hausdorff_sets_brute(a, b);
    }
    let fa = DistanceField::new(a)?;
    let fb = DistanceField::new(b)?;
    Ok(Hausdorff::new(fb.max_over(a), fa.max_over(b)))
}

/// Squared Euclidean distance from every grid node to the nearest member of a set.
#[derive(Debug, Clone)]
pub struct DistanceField {
    grid: Grid,
    sq: Vec<f64>,
}

impl DistanceField {
    pub fn new(set: &DiscreteSet) -> Result<Self> {
        if set.is_empty() {
            return Err(Error::EmptyInput);
        }
        let grid = *set.grid();
        let side = grid.side() as usize;
        let (hx, hy) = grid.spacing();
        let mut sq = vec![f64::INFINITY; side * side];
        for c in set.iter() {
            sq[c.j as usize * side + c.i as usize] = 0.0;
        }

        let mut env = Envelope::with_capacity(side);
        let mut col = vec![0.0; side];
        let mut out = vec![0.0; side];
        // columns: vary j with i fixed
        for i in 0..side {
            for j in 0..side {
                col[j] = sq[j * side + i];
            }
            env.transform(&col, hy, &mut out);
            for j in 0..side {
                sq[j * side + i] = out[j];
            }
        }
        // rows are contiguous
        for row in sq.chunks_mut(side) {
            col.copy_from_slice(row);
            env.transform(&col, hx, row);
        }
        Ok(DistanceField { grid, sq })
    }

    pub fn grid(&self) -> &Grid {
        &self.grid
    }

    /// Distance from node `c` to the set.
    pub fn distance(&self, c: CellIndex) -> f64 {
        math::sqrt(self.sq[c.j as usize * self.grid.side() as usize + c.i as usize])
    }

    /// `max` of the distance over the members of `set` (same grid).
    pub fn max_over(&self, set: &DiscreteSet) -> f64 {
        let worst = set.linear_iter().map(|k| self.sq[k as usize]).fold(0.0, f64::max);
        math::sqrt(worst)
    }
}

/// Lower envelope of parabolas `(x − q·h)² + f[q]` for the 1-D transform.
struct Envelope {
    sites: Vec<usize>,
    bounds: Vec<f64>,
}

impl Envelope {
    fn with_capacity(n: usize) -> Self {
        Envelope { sites: Vec::with_capacity(n), bounds: Vec::with_capacity(n + 1) }
    }

    fn transform(&mut self, f: &[f64], h: f64, out: &mut [f64]) {
        self.sites.clear();
        self.bounds.clear();
        for (q, &fq) in f.iter().enumerate() {
            if fq == f64::INFINITY {
                continue;
            }
            let xq = q as f64 * h;
            loop {
                let Some(&p) = self.sites.last() else {
                    self.sites.push(q);
                    self.bounds.push(f64::NEG_INFINITY);
                    break;
                };
                let xp = p as f64 * h;
                let s = ((fq + xq * xq) - (f[p] + xp * xp)) / (2.0 * (xq - xp));
                if s <= *self.bounds.last().unwrap() {
                    self.sites.pop();
                    self.bounds.pop();
                } else {
                    self.sites.push(q);
                    self.bounds.push(s);
                    break;
                }
            }
        }
        if self.sites.is_empty() {
            out.fill(f64::INFINITY);
            return;
        }
        let mut k = 0;
        for (q, o) in out.iter_mut().enumerate() {
            let x = q as f64 * h;
            while k + 1 < self.sites.len() && self.bounds[k + 1] < x {
                k += 1;
            }
            let p = self.sites[k];
            let d = x - p as f64 * h;
            *o = d * d + f[p];
        }
    }
}
