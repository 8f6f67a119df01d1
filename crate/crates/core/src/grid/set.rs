use alloc::vec;
use alloc::vec::Vec;

use super::{CellIndex, Grid};

/// Largest resolution stored as a dense bit array; above it a sorted index
/// list is used. Both storages iterate in the same canonical order.
pub const DENSE_LIMIT: u32 = 4096;

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum Cells {
    /// One bit per node, linear index `j·(M+1) + i`.
    Dense { words: Vec<u64>, len: u64 },
    /// Sorted, deduplicated linear indices.
    Sparse(Vec<u64>),
}

/// A deduplicated set of grid nodes, iterated in row-major order (`j`, then `i`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiscreteSet {
    grid: GridKey,
    cells: Cells,
}

// `Grid` holds floats, so equality of sets compares the grid bit patterns.
#[derive(Debug, Clone, Copy)]
struct GridKey(Grid);

impl PartialEq for GridKey {
    fn eq(&self, other: &Self) -> bool {
        let (a, b) = (self.0.bbox(), other.0.bbox());
        self.0.resolution() == other.0.resolution()
            && a.x0.to_bits() == b.x0.to_bits()
            && a.y0.to_bits() == b.y0.to_bits()
            && a.x1.to_bits() == b.x1.to_bits()
            && a.y1.to_bits() == b.y1.to_bits()
    }
}

impl Eq for GridKey {}

/// Accumulates linear indices into the storage chosen for a grid.
#[derive(Debug, Clone)]
pub(crate) enum Builder {
    Dense(Vec<u64>),
    Sparse(Vec<u64>),
}

impl Builder {
    pub(crate) fn new(grid: &Grid) -> Self {
        if grid.resolution() <= DENSE_LIMIT {
            Builder::Dense(vec![0; grid.node_count().div_ceil(64) as usize])
        } else {
            Builder::Sparse(Vec::new())
        }
    }

    #[inline]
    pub(crate) fn insert(&mut self, k: u64) {
        match self {
            Builder::Dense(w) => w[(k >> 6) as usize] |= 1 << (k & 63),
            Builder::Sparse(v) => v.push(k),
        }
    }

    /// Order-independent union.
    #[cfg_attr(not(feature = "parallel"), allow(dead_code))]
    pub(crate) fn merge(mut self, other: Builder) -> Builder {
        match (&mut self, other) {
            (Builder::Dense(a), Builder::Dense(b)) => {
                for (x, y) in a.iter_mut().zip(b) {
                    *x |= y;
                }
            }
            (Builder::Sparse(a), Builder::Sparse(b)) => a.extend(b),
            _ => unreachable!("builders for one grid share a storage kind"),
        }
        self
    }

    pub(crate) fn finish(self, grid: Grid) -> DiscreteSet {
        let cells = match self {
            Builder::Dense(words) => {
                let len = words.iter().map(|w| w.count_ones() as u64).sum();
                Cells::Dense { words, len }
            }
            Builder::Sparse(mut v) => {
                v.sort_unstable();
                v.dedup();
                Cells::Sparse(v)
            }
        };
        DiscreteSet { grid: GridKey(grid), cells }
    }
}

impl DiscreteSet {
    /// Builds a set from arbitrary cells. Out-of-range indices are clamped.
    pub fn from_cells(grid: Grid, cells: impl IntoIterator<Item = CellIndex>) -> Self {
        let m = grid.resolution();
        let mut b = Builder::new(&grid);
        for c in cells {
            b.insert(grid.linear(CellIndex::new(c.i.min(m), c.j.min(m))));
        }
        b.finish(grid)
    }

    /// Every node of the grid.
    pub fn full(grid: Grid) -> Self {
        let n = grid.node_count();
        if grid.resolution() <= DENSE_LIMIT {
            let mut words = vec![u64::MAX; n.div_ceil(64) as usize];
            let tail = n % 64;
            if tail != 0 {
                *words.last_mut().unwrap() = (1u64 << tail) - 1;
            }
            DiscreteSet { grid: GridKey(grid), cells: Cells::Dense { words, len: n } }
        } else {
            DiscreteSet { grid: GridKey(grid), cells: Cells::Sparse((0..n).collect()) }
        }
    }

    pub fn grid(&self) -> &Grid {
        &self.grid.0
    }

    pub fn len(&self) -> usize {
        match &self.cells {
            Cells::Dense { len, .. } => *len as usize,
            Cells::Sparse(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn is_dense(&self) -> bool {
        matches!(self.cells, Cells::Dense { .. })
    }

    pub fn contains(&self, c: CellIndex) -> bool {
        if !self.grid().contains_index(c) {
            return false;
        }
        self.contains_linear(self.grid().linear(c))
    }

    #[inline]
    pub(crate) fn contains_linear(&self, k: u64) -> bool {
        match &self.cells {
            Cells::Dense { words, .. } => words[(k >> 6) as usize] >> (k & 63) & 1 == 1,
            Cells::Sparse(v) => v.binary_search(&k).is_ok(),
        }
    }

    /// Cells in canonical row-major order.
    pub fn iter(&self) -> CellIter<'_> {
        CellIter { grid: *self.grid(), inner: self.linear_iter() }
    }

    pub(crate) fn linear_iter(&self) -> LinearIter<'_> {
        match &self.cells {
            Cells::Dense { words, .. } => {
                LinearIter::Dense { words, word: 0, bits: words.first().copied().unwrap_or(0) }
            }
            Cells::Sparse(v) => LinearIter::Sparse(v.iter()),
        }
    }

    #[cfg_attr(not(feature = "parallel"), allow(dead_code))]
    /// Linear indices of the members, in canonical order.
    pub(crate) fn linear_indices(&self) -> Vec<u64> {
        self.linear_iter().collect()
    }

    #[cfg_attr(not(feature = "parallel"), allow(dead_code))]
    pub(crate) fn dense_words(&self) -> Option<&[u64]> {
        match &self.cells {
            Cells::Dense { words, .. } => Some(words),
            Cells::Sparse(_) => None,
        }
    }

    pub fn is_subset(&self, other: &DiscreteSet) -> bool {
        if self.grid != other.grid {
            return false;
        }
        match (&self.cells, &other.cells) {
            (Cells::Dense { words: a, .. }, Cells::Dense { words: b, .. }) => a.iter().zip(b).all(|(x, y)| x & !y == 0),
            _ => self.linear_iter().all(|k| other.contains_linear(k)),
        }
    }

    pub fn union(&self, other: &DiscreteSet) -> Option<DiscreteSet> {
        if self.grid != other.grid {
            return None;
        }
        let mut b = Builder::new(self.grid());
        for k in self.linear_iter().chain(other.linear_iter()) {
            b.insert(k);
        }
        Some(b.finish(*self.grid()))
    }
}

pub(crate) enum LinearIter<'a> {
    Dense { words: &'a [u64], word: usize, bits: u64 },
    Sparse(core::slice::Iter<'a, u64>),
}

impl Iterator for LinearIter<'_> {
    type Item = u64;

    #[inline]
    fn next(&mut self) -> Option<u64> {
        match self {
            LinearIter::Dense { words, word, bits } => loop {
                if *bits != 0 {
                    let t = bits.trailing_zeros() as u64;
                    *bits &= *bits - 1;
                    return Some((*word as u64) * 64 + t);
                }
                *word += 1;
                if *word >= words.len() {
                    return None;
                }
                *bits = words[*word];
            },
            LinearIter::Sparse(it) => it.next().copied(),
        }
    }
}

/// Iterator over the cells of a [`DiscreteSet`], see [`DiscreteSet::iter`].
pub struct CellIter<'a> {
    grid: Grid,
    inner: LinearIter<'a>,
}

impl core::fmt::Debug for CellIter<'_> {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_struct("CellIter").field("grid", &self.grid).finish_non_exhaustive()
    }
}

impl Iterator for CellIter<'_> {
    type Item = CellIndex;

    #[inline]
    fn next(&mut self) -> Option<CellIndex> {
        self.inner.next().map(|k| self.grid.unlinear(k))
    }
}

impl<'a> IntoIterator for &'a DiscreteSet {
    type Item = CellIndex;
    type IntoIter = CellIter<'a>;

    fn into_iter(self) -> CellIter<'a> {
        self.iter()
    }
}
