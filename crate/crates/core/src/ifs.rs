//! Planar affine contractions, IFSs built from them, and finite code words.

use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::math;

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Point2 {
    pub x: f64,
    pub y: f64,
}

impl Point2 {
    pub const fn new(x: f64, y: f64) -> Self {
        Point2 { x, y }
    }

    /// Euclidean distance.
    pub fn dist(self, other: Point2) -> f64 {
        math::hypot(self.x - other.x, self.y - other.y)
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }
}

/// Axis-aligned rectangle `[x0, x1] × [y0, y1]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Rect {
    pub x0: f64,
    pub y0: f64,
    pub x1: f64,
    pub y1: f64,
}

impl Rect {
    pub fn new(x0: f64, y0: f64, x1: f64, y1: f64) -> Result<Self> {
        if !(x0.is_finite() && y0.is_finite() && x1.is_finite() && y1.is_finite()) {
            return Err(Error::NonFinite);
        }
        if x1 <= x0 || y1 <= y0 {
            return Err(Error::InvalidGrid);
        }
        Ok(Rect { x0, y0, x1, y1 })
    }

    pub const fn unit_square() -> Self {
        Rect { x0: 0.0, y0: 0.0, x1: 1.0, y1: 1.0 }
    }

    pub fn width(&self) -> f64 {
        self.x1 - self.x0
    }

    pub fn height(&self) -> f64 {
        self.y1 - self.y0
    }

    /// Length of the diagonal, i.e. the diameter under the Euclidean metric.
    pub fn diam(&self) -> f64 {
        math::hypot(self.width(), self.height())
    }

    pub fn corners(&self) -> [Point2; 4] {
        [
            Point2::new(self.x0, self.y0),
            Point2::new(self.x1, self.y0),
            Point2::new(self.x0, self.y1),
            Point2::new(self.x1, self.y1),
        ]
    }

    pub fn contains(&self, p: Point2, slack: f64) -> bool {
        p.x >= self.x0 - slack && p.x <= self.x1 + slack && p.y >= self.y0 - slack && p.y <= self.y1 + slack
    }
}

/// `(x, y) ↦ (a·x + b·y + e, c·x + d·y + f)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AffineMap2 {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
    pub e: f64,
    pub f: f64,
}

impl AffineMap2 {
    pub const fn new(a: f64, b: f64, c: f64, d: f64, e: f64, f: f64) -> Self {
        AffineMap2 { a, b, c, d, e, f }
    }

    /// Uniform scaling about the origin followed by a translation.
    pub const fn scale_translate(s: f64, e: f64, f: f64) -> Self {
        AffineMap2::new(s, 0.0, 0.0, s, e, f)
    }

    #[inline]
    pub fn apply(&self, p: Point2) -> Point2 {
        Point2 { x: self.a * p.x + self.b * p.y + self.e, y: self.c * p.x + self.d * p.y + self.f }
    }

    /// Spectral norm of the linear part.
    ///
    /// Uses the closed form of the 2×2 singular value decomposition,
    /// `σ_max = (‖(a+d, c−b)‖ + ‖(a−d, c+b)‖) / 2`, which avoids forming `MᵀM`
    /// and is exact for scaled rotations and uniform scalings.
    pub fn lipschitz(&self) -> f64 {
        let s = math::hypot(self.a + self.d, self.c - self.b);
        let t = math::hypot(self.a - self.d, self.c + self.b);
        (s + t) / 2.0
    }

    /// Fixed point, when the linear part minus identity is invertible.
    pub fn fixed_point(&self) -> Option<Point2> {
        // (I - L) p = t
        let m11 = 1.0 - self.a;
        let m12 = -self.b;
        let m21 = -self.c;
        let m22 = 1.0 - self.d;
        let det = m11 * m22 - m12 * m21;
        if det == 0.0 || !det.is_finite() {
            return None;
        }
        Some(Point2::new((self.e * m22 - m12 * self.f) / det, (m11 * self.f - m21 * self.e) / det))
    }

    fn is_finite(&self) -> bool {
        [self.a, self.b, self.c, self.d, self.e, self.f].iter().all(|v| v.is_finite())
    }
}

/// A validated contractive IFS.
#[derive(Debug, Clone, PartialEq)]
pub struct Ifs {
    name: String,
    maps: Vec<AffineMap2>,
    lambdas: Vec<f64>,
    lambda_r: f64,
}

impl Ifs {
    /// Validates `maps` and computes the per-map Lipschitz constants.
    ///
    /// Fails with [`Error::NotContractive`] on the first map whose spectral
    /// norm is at least one.
    pub fn new(name: impl Into<String>, maps: Vec<AffineMap2>) -> Result<Self> {
        if maps.is_empty() {
            return Err(Error::EmptyIfs);
        }
        if maps.iter().any(|m| !m.is_finite()) {
            return Err(Error::NonFinite);
        }
        let lambdas: Vec<f64> = maps.iter().map(AffineMap2::lipschitz).collect();
        if let Some((index, &lambda)) = lambdas.iter().enumerate().find(|(_, &l)| l >= 1.0) {
            return Err(Error::NotContractive { index, lambda });
        }
        let lambda_r = lambdas.iter().copied().fold(0.0, f64::max);
        Ok(Ifs { name: name.into(), maps, lambdas, lambda_r })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn maps(&self) -> &[AffineMap2] {
        &self.maps
    }

    pub fn lambdas(&self) -> &[f64] {
        &self.lambdas
    }

    /// Contractivity constant: the largest per-map Lipschitz constant.
    pub fn lambda_r(&self) -> f64 {
        self.lambda_r
    }

    pub fn len(&self) -> usize {
        self.maps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.maps.is_empty()
    }

    /// `f_{w_1}(f_{w_2}(… f_{w_k}(x0)))`; the last symbol is applied first.
    pub fn code_map_point(&self, word: &CodeWord, x0: Point2) -> Result<Point2> {
        let n = self.maps.len();
        if let Some(&symbol) = word.symbols().iter().find(|&&s| s == 0 || s > n) {
            return Err(Error::SymbolOutOfRange { symbol, bound: n });
        }
        Ok(word.symbols().iter().rev().fold(x0, |p, &s| self.maps[s - 1].apply(p)))
    }
}

/// A map corner that lands outside the shared bounding box.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BboxViolation {
    /// 1-based system index.
    pub system: usize,
    /// 1-based map index within the system.
    pub map: usize,
    pub corner: Point2,
    pub image: Point2,
}

/// Several IFSs acting on one bounding box.
#[derive(Debug, Clone, PartialEq)]
pub struct BlendSystem {
    bbox: Rect,
    systems: Vec<Ifs>,
    lambda_script_r: f64,
}

impl BlendSystem {
    pub fn new(bbox: Rect, systems: Vec<Ifs>) -> Result<Self> {
        if systems.is_empty() {
            return Err(Error::EmptyInput);
        }
        let lambda_script_r = systems.iter().map(Ifs::lambda_r).fold(0.0, f64::max);
        Ok(BlendSystem { bbox, systems, lambda_script_r })
    }

    pub fn bbox(&self) -> Rect {
        self.bbox
    }

    pub fn systems(&self) -> &[Ifs] {
        &self.systems
    }

    /// 1-based lookup.
    pub fn system(&self, i: usize) -> Result<&Ifs> {
        if i == 0 || i > self.systems.len() {
            return Err(Error::SymbolOutOfRange { symbol: i, bound: self.systems.len() });
        }
        Ok(&self.systems[i - 1])
    }

    pub fn len(&self) -> usize {
        self.systems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.systems.is_empty()
    }

    /// The largest contractivity constant over all systems.
    pub fn lambda_script_r(&self) -> f64 {
        self.lambda_script_r
    }

    /// Per-system contractivity constants, in system order.
    pub fn lambdas(&self) -> Vec<f64> {
        self.systems.iter().map(Ifs::lambda_r).collect()
    }

    /// Corners of the box whose images leave the box.
    ///
    /// An affine map sends the box onto the convex hull of the corner images,
    /// so an empty result means every map keeps the box invariant. A nonempty
    /// result is not fatal: out-of-box images are clamped at projection.
    pub fn bbox_violations(&self) -> Vec<BboxViolation> {
        let slack = 1e-12 * self.bbox.diam();
        let mut out = Vec::new();
        for (si, ifs) in self.systems.iter().enumerate() {
            for (mi, m) in ifs.maps().iter().enumerate() {
                for corner in self.bbox.corners() {
                    let image = m.apply(corner);
                    if !self.bbox.contains(image, slack) {
                        out.push(BboxViolation { system: si + 1, map: mi + 1, corner, image });
                    }
                }
            }
        }
        out
    }
}

/// A finite word over the alphabet `{1, …, n}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CodeWord {
    symbols: Vec<usize>,
}

impl CodeWord {
    pub fn new(symbols: Vec<usize>, alphabet: usize) -> Result<Self> {
        if let Some(&symbol) = symbols.iter().find(|&&s| s == 0 || s > alphabet) {
            return Err(Error::SymbolOutOfRange { symbol, bound: alphabet });
        }
        Ok(CodeWord { symbols })
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

    /// Concatenation `self ++ other`.
    pub fn concat(&self, other: &CodeWord) -> CodeWord {
        let mut symbols = self.symbols.clone();
        symbols.extend_from_slice(&other.symbols);
        CodeWord { symbols }
    }
}

/// Ultrametric on words: `λ^k` where `k` is the first (1-based) position at
/// which the words differ, `0` for equal words.
///
/// A position past the end of the shorter word counts as a difference.
pub fn d_lambda(a: &CodeWord, b: &CodeWord, lambda: f64) -> Result<f64> {
    if !(lambda > 0.0 && lambda < 1.0) {
        return Err(Error::LambdaOutOfRange(lambda));
    }
    let len = a.len().max(b.len());
    let first_diff = (0..len).find(|&j| a.symbols.get(j) != b.symbols.get(j));
    Ok(match first_diff {
        None => 0.0,
        Some(j) => math::powu(lambda, j as u64 + 1),
    })
}
