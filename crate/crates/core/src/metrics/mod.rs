//! Similarity measures between blends and the individual attractors.

mod beta;
mod covering;
mod hausdorff;

pub use beta::{beta_definition, beta_examples, beta_report, BetaEntry, BetaInterval, BetaReport};
pub use covering::{covering_radii_selfmax, covering_radii_thm31, CoveringRadii, RadiusVariant};
pub use hausdorff::{
    directed_points, hausdorff_points, hausdorff_sets, hausdorff_sets_brute, DistanceField, Hausdorff,
};

use crate::blend::{blend_approx, BlendResult, BlendingSequence};
use crate::error::{Error, Result};
use crate::grid::{hb_apply_discrete, DiscreteSet, Grid};
use crate::ifs::BlendSystem;

/// How far the foreign operators move attractor `i0`:
/// `max_i d_H(F_i(A_{i0}), A_{i0})`, computed on discrete attractors.
///
/// `attractors[i - 1]` is the discrete attractor of system `i`.
pub fn delta_self_dissimilarity(sys: &BlendSystem, grid: &Grid, i0: usize, attractors: &[DiscreteSet]) -> Result<f64> {
    let a = attractor_of(sys, i0, attractors)?;
    let mut delta: f64 = 0.0;
    for ifs in sys.systems() {
        let image = hb_apply_discrete(grid, ifs, a)?;
        delta = delta.max(hausdorff_sets(&image, a)?.symmetric);
    }
    Ok(delta)
}

fn attractor_of<'a>(sys: &BlendSystem, i0: usize, attractors: &'a [DiscreteSet]) -> Result<&'a DiscreteSet> {
    sys.system(i0)?;
    if attractors.len() != sys.len() {
        return Err(Error::EmptyInput);
    }
    Ok(&attractors[i0 - 1])
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundCheck {
    /// `d_H(blend(θ), A_{i0})` on the grid.
    pub measured: f64,
    /// `β_upper(θ, i0)·δ_{i0} + 2·worst error bound`.
    pub bound: f64,
    pub beta_upper: f64,
    pub delta: f64,
    pub slack_ok: bool,
}

/// Checks the blend of `θ` (seeded with the full grid) against the
/// coefficient bound `d_H(blend, A_{i0}) ≤ β(θ, i0)·δ_{i0}`, widened by the
/// discretization error of both sets.
pub fn bound_check(
    sys: &BlendSystem,
    grid: &Grid,
    theta: &BlendingSequence,
    i0: usize,
    attractors: &[DiscreteSet],
) -> Result<BoundCheck> {
    let delta = delta_self_dissimilarity(sys, grid, i0, attractors)?;
    bound_check_with_delta(sys, grid, theta, i0, &attractors[i0 - 1], delta)
}

/// [`bound_check`] with `δ_{i0}` already computed, for checking many recipes.
pub fn bound_check_with_delta(
    sys: &BlendSystem,
    grid: &Grid,
    theta: &BlendingSequence,
    i0: usize,
    attractor: &DiscreteSet,
    delta: f64,
) -> Result<BoundCheck> {
    let blend = blend_approx(sys, grid, theta, &DiscreteSet::full(*grid))?;
    bound_check_blend(sys, &blend, i0, attractor, delta)
}

/// [`bound_check_with_delta`] for a blend that is already computed, so one
/// blend can be checked against several attractors.
pub fn bound_check_blend(
    sys: &BlendSystem,
    blend: &BlendResult,
    i0: usize,
    attractor: &DiscreteSet,
    delta: f64,
) -> Result<BoundCheck> {
    let beta_upper = beta_definition(&blend.theta, &sys.lambdas(), i0)?.upper;
    let measured = hausdorff_sets(&blend.output, attractor)?.symmetric;
    let bound = beta_upper * delta + 2.0 * blend.error_bound_worst;
    Ok(BoundCheck { measured, bound, beta_upper, delta, slack_ok: measured <= bound })
}

/// Largest pairwise Hausdorff distance among the sets (`0` for a single set).
pub fn attractor_spread(attractors: &[DiscreteSet]) -> Result<f64> {
    if attractors.is_empty() {
        return Err(Error::EmptyInput);
    }
    let mut m: f64 = 0.0;
    for (p, a) in attractors.iter().enumerate() {
        for b in &attractors[p + 1..] {
            m = m.max(hausdorff_sets(a, b)?.symmetric);
        }
    }
    Ok(m)
}

/// Uncertainty attached to distances measured between discrete attractors:
/// one cell diagonal plus twice the worst-case approximation error.
pub fn measurement_uncertainty(grid: &Grid, error_bound_worst: f64) -> f64 {
    grid.cell_diagonal() + 2.0 * error_bound_worst
}
