//! Blending coefficients.
//!
//! Two formulas are kept side by side because they disagree by an index shift:
//!
//! - [`beta_definition`]: `β = γ_1 + Σ_{k≥2, θ_k≠i} γ_k` with
//!   `γ_k = λ_{θ_1}⋯λ_{θ_{k−1}}`. A finite recipe only gives a lower bound;
//!   the unseen tail adds at most `γ_{|θ|+1} / (1 − λ)`.
//! - [`beta_examples`]: `β = 1 + Σ_{k≥1, θ_k≠i} λ_{θ_1}⋯λ_{θ_k}`, the version
//!   that reproduces the reference coefficient values digit for digit.

use alloc::vec::Vec;

use crate::blend::BlendingSequence;
use crate::error::{Error, Result};

/// Truncation interval for the defining series.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BetaInterval {
    pub lower: f64,
    pub upper: f64,
    pub tail_bound: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BetaEntry {
    pub beta_def_lower: f64,
    pub beta_def_upper: f64,
    pub beta_examples: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BetaReport {
    pub theta: BlendingSequence,
    /// One entry per system, in system order (entry `0` is system `1`).
    pub entries: Vec<BetaEntry>,
    pub tail_bound: f64,
}

fn validate(theta: &BlendingSequence, lambdas: &[f64], i: usize) -> Result<f64> {
    let n = lambdas.len();
    if i == 0 || i > n {
        return Err(Error::SymbolOutOfRange { symbol: i, bound: n });
    }
    theta.check(n)?;
    if let Some(&bad) = lambdas.iter().find(|l| !(0.0..1.0).contains(*l)) {
        return Err(Error::LambdaOutOfRange(bad));
    }
    Ok(lambdas.iter().copied().fold(0.0, f64::max))
}

/// Coefficient of `θ` with respect to system `i` (1-based), as an interval.
pub fn beta_definition(theta: &BlendingSequence, lambdas: &[f64], i: usize) -> Result<BetaInterval> {
    let lambda_max = validate(theta, lambdas, i)?;
    let mut gamma = 1.0;
    let mut lower = 1.0;
    for (k, &s) in theta.symbols().iter().enumerate() {
        if k > 0 && s != i {
            lower += gamma;
        }
        gamma *= lambdas[s - 1];
    }
    // gamma is now γ_{|θ|+1}
    let tail_bound = gamma / (1.0 - lambda_max);
    Ok(BetaInterval { lower, upper: lower + tail_bound, tail_bound })
}

/// Coefficient of `θ` with respect to system `i`, products taken through index `k`.
pub fn beta_examples(theta: &BlendingSequence, lambdas: &[f64], i: usize) -> Result<f64> {
    validate(theta, lambdas, i)?;
    let mut prefix = 1.0;
    let mut beta = 1.0;
    for &s in theta.symbols() {
        prefix *= lambdas[s - 1];
        if s != i {
            beta += prefix;
        }
    }
    Ok(beta)
}

/// Both coefficients for every system.
pub fn beta_report(theta: &BlendingSequence, lambdas: &[f64]) -> Result<BetaReport> {
    let mut entries = Vec::with_capacity(lambdas.len());
    let mut tail_bound = 0.0;
    for i in 1..=lambdas.len() {
        let def = beta_definition(theta, lambdas, i)?;
        tail_bound = def.tail_bound;
        entries.push(BetaEntry {
            beta_def_lower: def.lower,
            beta_def_upper: def.upper,
            beta_examples: beta_examples(theta, lambdas, i)?,
        });
    }
    Ok(BetaReport { theta: theta.clone(), entries, tail_bound })
}
