//! Covering radii: balls in the Hausdorff metric around the individual
//! attractors whose union contains every blend.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RadiusVariant {
    /// Closed form that pairs each radius with the largest *other* radius.
    OtherMax,
    /// Every radius uses the global maximum radius `r̃ = λ_max·M / (1 − λ_max)`.
    SelfMax,
}

impl RadiusVariant {
    pub fn as_str(self) -> &'static str {
        match self {
            RadiusVariant::OtherMax => "thm31",
            RadiusVariant::SelfMax => "selfmax",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CoveringRadii {
    /// Largest pairwise Hausdorff distance between the attractors.
    pub m_value: f64,
    /// One radius per system, in system order.
    pub radii: Vec<f64>,
    pub variant: RadiusVariant,
}

fn check(lambdas: &[f64], m_value: f64) -> Result<()> {
    if let Some(&l) = lambdas.iter().find(|l| !(**l > 0.0 && **l < 1.0)) {
        return Err(Error::LambdaOutOfRange(l));
    }
    if m_value.is_nan() || m_value < 0.0 || !m_value.is_finite() {
        return Err(Error::NonFinite);
    }
    if lambdas.is_empty() {
        return Err(Error::EmptyInput);
    }
    Ok(())
}

/// `r_i = λ_i (M + r̃)` with `r̃ = λ_max·M / (1 − λ_max)`.
pub fn covering_radii_selfmax(lambdas: &[f64], m_value: f64) -> Result<CoveringRadii> {
    check(lambdas, m_value)?;
    let lmax = lambdas.iter().copied().fold(0.0, f64::max);
    let r_tilde = lmax * m_value / (1.0 - lmax);
    let radii = lambdas.iter().map(|l| l * (m_value + r_tilde)).collect();
    Ok(CoveringRadii { m_value, radii, variant: RadiusVariant::SelfMax })
}

/// Closed-form radii: with `λ_{(1)} ≤ … ≤ λ_{(N)}` sorted ascending,
/// `r_{(j)} = M λ_{(j)} (1 + λ_{(N)}) / (1 − λ_{(N−1)} λ_{(N)})` for `j < N` and
/// `r_{(N)} = M λ_{(N)} (1 + λ_{(N−1)}) / (1 − λ_{(N−1)} λ_{(N)})`.
pub fn covering_radii_thm31(lambdas: &[f64], m_value: f64) -> Result<CoveringRadii> {
    if lambdas.len() < 2 {
        return Err(Error::NeedTwoSystems);
    }
    check(lambdas, m_value)?;
    let mut order: Vec<usize> = (0..lambdas.len()).collect();
    order.sort_by(|&a, &b| lambdas[a].total_cmp(&lambdas[b]));
    let top = lambdas[order[order.len() - 1]];
    let second = lambdas[order[order.len() - 2]];
    let denom = 1.0 - second * top;
    let mut radii = vec![0.0; lambdas.len()];
    for (rank, &idx) in order.iter().enumerate() {
        radii[idx] = if rank + 1 < order.len() {
            m_value * lambdas[idx] * (1.0 + top) / denom
        } else {
            m_value * top * (1.0 + second) / denom
        };
    }
    Ok(CoveringRadii { m_value, radii, variant: RadiusVariant::OtherMax })
}
