#![allow(dead_code)]

use blendifs_core::grid::hb_apply_discrete;
use blendifs_core::rng::SplitMix64;
use blendifs_core::{DiscreteSet, Grid, Ifs, Point2, Rect};

pub fn unit_grid(m: u32) -> Grid {
    Grid::new(Rect::unit_square(), m).unwrap()
}

pub fn random_points(rng: &mut SplitMix64, bbox: Rect, n: usize) -> Vec<Point2> {
    (0..n)
        .map(|_| Point2::new(bbox.x0 + rng.next_f64() * bbox.width(), bbox.y0 + rng.next_f64() * bbox.height()))
        .collect()
}

pub fn random_set(rng: &mut SplitMix64, grid: Grid, n: usize) -> DiscreteSet {
    let pts = random_points(rng, grid.bbox(), n);
    grid.discretize(&pts).unwrap()
}

/// Iterates the discrete operator from `seed` until the set stops changing.
pub fn iterate_to_fixed_set(grid: &Grid, ifs: &Ifs, seed: DiscreteSet, cap: usize) -> (DiscreteSet, usize) {
    let mut s = seed;
    for step in 1..=cap {
        let next = hb_apply_discrete(grid, ifs, &s).unwrap();
        if next == s {
            return (s, step);
        }
        s = next;
    }
    panic!("no fixed set within {cap} steps");
}
