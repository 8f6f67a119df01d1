//! Discrete, error-certified approximation of blended IFS attractors.
//!
//! A *blend* interleaves the Hutchinson–Barnsley operators of several
//! contractive iterated function systems according to a finite recipe
//! `θ = (θ_1, …, θ_k)`; the outermost operator is `θ_1`. This crate holds the
//! pure algorithmic part:
//!
//! - [`ifs`]: planar affine maps, contractivity constants, code words.
//! - [`grid`]: ε-nets over a bounding box, ε-projection, discrete sets and the
//!   discrete Hutchinson–Barnsley operator.
//! - [`blend`]: the blend approximation loop with both certified error bounds,
//!   parameter selection and reproducible random recipes.
//! - [`metrics`]: Hausdorff distances, blending coefficients, self-dissimilarity
//!   and covering radii.
//!
//! The crate is `no_std` (it needs `alloc`). All transcendental functions go
//! through `libm`, so results are bit-identical with and without `std`.
//! The `parallel` feature enables rayon inside the grid operator and the
//! brute-force Hausdorff distance; outputs do not depend on the thread count.

#![cfg_attr(not(feature = "std"), no_std)]
#![warn(missing_debug_implementations)]

extern crate alloc;
#[cfg(any(test, feature = "std"))]
extern crate std;

pub mod blend;
mod error;
pub mod grid;
pub mod ifs;
pub(crate) mod math;
pub mod metrics;
pub mod presets;
pub mod rng;

pub use blend::{blend_approx, choose_parameters, generate_theta, BlendResult, BlendingSequence, Parameters};
pub use error::{Error, Result};
pub use grid::{CellIndex, DiscreteSet, Grid};
pub use ifs::{AffineMap2, BlendSystem, CodeWord, Ifs, Point2, Rect};
