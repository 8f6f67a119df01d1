//! The discrete Hutchinson–Barnsley operator `r(⋃_j f_j(S))`.

use super::set::Builder;
use alloc::vec::Vec;

use super::{CellIndex, DiscreteSet, Grid};
use crate::error::{Error, Result};
use crate::ifs::{AffineMap2, Ifs, Point2};

/// Output of one discrete operator application.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HbOutcome {
    pub set: DiscreteSet,
    /// Map images whose nearest lattice node lay outside the grid.
    pub clamped: u64,
}

/// Applies every map of `ifs` to every node of `s`, projects, and deduplicates.
pub fn hb_apply_discrete(grid: &Grid, ifs: &Ifs, s: &DiscreteSet) -> Result<DiscreteSet> {
    hb_apply_discrete_counted(grid, ifs, s).map(|o| o.set)
}

/// [`hb_apply_discrete`] plus the number of clamped images.
pub fn hb_apply_discrete_counted(grid: &Grid, ifs: &Ifs, s: &DiscreteSet) -> Result<HbOutcome> {
    if s.grid() != grid {
        return Err(Error::GridMismatch);
    }
    if s.is_empty() {
        return Err(Error::EmptyInput);
    }
    let (builder, clamped) = run(grid, ifs.maps(), s);
    Ok(HbOutcome { set: builder.finish(*grid), clamped })
}

fn apply_cells(grid: &Grid, maps: &[AffineMap2], cells: impl Iterator<Item = u64>, out: &mut Builder) -> u64 {
    let side = grid.side();
    let xs: Vec<f64> = (0..side).map(|i| grid.node(CellIndex::new(i, 0)).x).collect();
    let ys: Vec<f64> = (0..side).map(|j| grid.node(CellIndex::new(0, j)).y).collect();
    let mut clamped = 0;
    for k in cells {
        let c = grid.unlinear(k);
        let p = Point2::new(xs[c.i as usize], ys[c.j as usize]);
        for m in maps {
            let (c, cl) = grid.project_counted(m.apply(p));
            clamped += cl as u64;
            out.insert(grid.linear(c));
        }
    }
    clamped
}

#[cfg(not(feature = "parallel"))]
fn run(grid: &Grid, maps: &[AffineMap2], s: &DiscreteSet) -> (Builder, u64) {
    let mut b = Builder::new(grid);
    let clamped = apply_cells(grid, maps, s.linear_iter(), &mut b);
    (b, clamped)
}

#[cfg(feature = "parallel")]
fn run(grid: &Grid, maps: &[AffineMap2], s: &DiscreteSet) -> (Builder, u64) {
    use super::set::LinearIter;
    use rayon::prelude::*;

    // Small inputs are not worth the per-worker bitmaps.
    if s.len() < 1 << 14 {
        let mut b = Builder::new(grid);
        let clamped = apply_cells(grid, maps, s.linear_iter(), &mut b);
        return (b, clamped);
    }
    let workers = rayon::current_num_threads().max(1);
    let identity = || (Builder::new(grid), 0u64);
    let merge = |(a, ca): (Builder, u64), (b, cb): (Builder, u64)| (a.merge(b), ca + cb);
    match s.dense_words() {
        Some(words) => {
            let chunk = words.len().div_ceil(workers * 2).max(1);
            words
                .par_chunks(chunk)
                .enumerate()
                .fold(identity, |(mut b, c), (n, ws)| {
                    let it =
                        LinearIter::Dense { words: ws, word: 0, bits: ws[0] }.map(move |k| k + (n * chunk * 64) as u64);
                    let cl = apply_cells(grid, maps, it, &mut b);
                    (b, c + cl)
                })
                .reduce(identity, merge)
        }
        None => {
            let idx = s.linear_indices();
            let chunk = idx.len().div_ceil(workers * 2).max(1);
            idx.par_chunks(chunk)
                .fold(identity, |(mut b, c), ks| {
                    let cl = apply_cells(grid, maps, ks.iter().copied(), &mut b);
                    (b, c + cl)
                })
                .reduce(identity, merge)
        }
    }
}
