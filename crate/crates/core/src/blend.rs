//! Discrete blends of IFS attractors with certified Hausdorff error bounds.
//!
//! For a recipe `θ = (θ_1, …, θ_k)` the blend is approximated by
//! `Y = r(F_{θ_1}(… r(F_{θ_k}(Z)) …))`: the operator of `θ_k` runs first and
//! the operator of `θ_1` last, `k` applications in total. With `λ` the largest
//! contractivity constant and `ε` the grid resolution,
//!
//! ```text
//! worst = λ^k · diam + ε / (1 − λ)
//! tight = (Π_j λ_{θ_j}) · diam + ε · (1 + Σ_{m=1}^{k−1} Π_{j=1}^{m} λ_{θ_j})
//! ```
//!
//! both bound the Hausdorff distance from `Y` to the true blend.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::grid::{hb_apply_discrete_counted, DiscreteSet, Grid};
use crate::ifs::{BlendSystem, Rect};
use crate::math;
use crate::rng::SplitMix64;

/// A finite blending recipe over systems `1..=N`; `θ_1` is the outermost operator.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BlendingSequence {
    symbols: Vec<usize>,
}

impl BlendingSequence {
    pub fn new(symbols: Vec<usize>, n_systems: usize) -> Result<Self> {
        if symbols.is_empty() {
            return Err(Error::BadLength);
        }
        check_symbols(&symbols, n_systems)?;
        Ok(BlendingSequence { symbols })
    }

    /// `(i, i, …, i)` of length `k`.
    pub fn constant(i: usize, k: usize, n_systems: usize) -> Result<Self> {
        BlendingSequence::new(vec![i; k], n_systems)
    }

    pub fn symbols(&self) -> &[usize] {
        &self.symbols
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub(crate) fn check(&self, n_systems: usize) -> Result<()> {
        check_symbols(&self.symbols, n_systems)
    }
}

fn check_symbols(symbols: &[usize], bound: usize) -> Result<()> {
    match symbols.iter().find(|&&s| s == 0 || s > bound) {
        Some(&symbol) => Err(Error::SymbolOutOfRange { symbol, bound }),
        None => Ok(()),
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BlendResult {
    pub output: DiscreteSet,
    pub theta: BlendingSequence,
    pub error_bound_worst: f64,
    pub error_bound_tight: f64,
    /// Map images clamped onto the box over all `k` applications.
    pub clamp_count: u64,
}

/// `λ^k · diam + ε / (1 − λ)`.
pub fn error_bound_worst(lambda: f64, k: usize, diam: f64, epsilon: f64) -> f64 {
    math::powu(lambda, k as u64) * diam + epsilon / (1.0 - lambda)
}

/// The bound that tracks the actual factors `λ_{θ_1}, …, λ_{θ_k}` in recipe order.
pub fn error_bound_tight(factors: &[f64], diam: f64, epsilon: f64) -> f64 {
    let mut prefix = 1.0;
    let mut sum = 1.0;
    for (m, &l) in factors.iter().enumerate() {
        prefix *= l;
        if m + 1 < factors.len() {
            sum += prefix;
        }
    }
    prefix * diam + epsilon * sum
}

/// Approximates the blend of `sys` by `theta` starting from the seed set `z`.
pub fn blend_approx(sys: &BlendSystem, grid: &Grid, theta: &BlendingSequence, z: &DiscreteSet) -> Result<BlendResult> {
    if theta.is_empty() {
        return Err(Error::EmptyInput);
    }
    theta.check(sys.len())?;
    if z.grid() != grid || grid.bbox() != sys.bbox() {
        return Err(Error::GridMismatch);
    }
    if z.is_empty() {
        return Err(Error::EmptyInput);
    }

    let mut clamp_count = 0;
    let mut current = z.clone();
    for &s in theta.symbols().iter().rev() {
        let out = hb_apply_discrete_counted(grid, sys.system(s)?, &current)?;
        clamp_count += out.clamped;
        current = out.set;
    }

    let diam = grid.bbox().diam();
    let eps = grid.epsilon();
    let factors: Vec<f64> = theta.symbols().iter().map(|&s| sys.systems()[s - 1].lambda_r()).collect();
    Ok(BlendResult {
        output: current,
        theta: theta.clone(),
        error_bound_worst: error_bound_worst(sys.lambda_script_r(), theta.len(), diam, eps),
        error_bound_tight: error_bound_tight(&factors, diam, eps),
        clamp_count,
    })
}

/// Discrete attractor of system `i`: the constant recipe `(i, …, i)` of length
/// `k` applied to the full grid.
pub fn discrete_attractor(sys: &BlendSystem, grid: &Grid, i: usize, k: usize) -> Result<BlendResult> {
    let theta = BlendingSequence::constant(i, k, sys.len())?;
    blend_approx(sys, grid, &theta, &DiscreteSet::full(*grid))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Parameters {
    /// Recipe length making `λ^k · diam < δ/2`.
    pub k: usize,
    /// Largest resolution with `ε / (1 − λ) ≤ δ/2`.
    pub epsilon_max: f64,
    /// Smallest grid resolution whose `ε` does not exceed `epsilon_max`.
    pub m_min: u32,
}

/// Picks `k` and the grid resolution so that the worst-case bound is at most `delta`.
pub fn choose_parameters(delta: f64, sys: &BlendSystem) -> Result<Parameters> {
    choose_parameters_for(delta, sys.lambda_script_r(), sys.bbox())
}

/// [`choose_parameters`] for an explicit contractivity constant and box.
pub fn choose_parameters_for(delta: f64, lambda: f64, bbox: Rect) -> Result<Parameters> {
    if delta.is_nan() || delta <= 0.0 || !delta.is_finite() {
        return Err(Error::DeltaNonPositive(delta));
    }
    if !(0.0..1.0).contains(&lambda) {
        return Err(Error::LambdaOutOfRange(lambda));
    }
    let diam = bbox.diam();

    // smallest integer strictly above ln(δ / 2diam) / ln λ, at least 1
    let mut k = if lambda == 0.0 {
        1
    } else {
        let ratio = math::ln(delta / (2.0 * diam)) / math::ln(lambda);
        if ratio < 0.0 {
            1
        } else {
            (math::floor(ratio) as usize + 1).max(1)
        }
    };
    while math::powu(lambda, k as u64) * diam >= delta / 2.0 {
        k += 1;
    }

    let epsilon_max = delta * (1.0 - lambda) / 2.0;
    let m = math::ceil(diam / (2.0 * epsilon_max));
    if m.is_nan() || m > u32::MAX as f64 {
        return Err(Error::InvalidGrid);
    }
    let mut m_min = (m as u32).max(1);
    while diam / (2.0 * m_min as f64) > epsilon_max {
        m_min = m_min.checked_add(1).ok_or(Error::InvalidGrid)?;
    }
    Ok(Parameters { k, epsilon_max, m_min })
}

/// Reproducible pseudo-random recipe of `length` symbols over `1..=n_systems`,
/// drawn from [`SplitMix64`] seeded with `seed`.
pub fn generate_theta(seed: u64, length: usize, n_systems: usize) -> Result<BlendingSequence> {
    if length == 0 || n_systems == 0 {
        return Err(Error::BadLength);
    }
    let mut rng = SplitMix64::new(seed);
    let symbols = (0..length).map(|_| 1 + rng.below(n_systems as u64) as usize).collect();
    BlendingSequence::new(symbols, n_systems)
}
