use core::cmp::Ordering;
use core::fmt;

use crate::edge::{edge_count, Edge, Vertex};
use crate::error::{Error, Result};
use crate::twisted::MAX_VERTICES;

/// A set of edges of `T_n`.
///
/// Stored as a bitmask over the lexicographic edge listing, so iteration
/// always yields edges sorted by `(lo, hi)` and equal sets compare equal.
/// Sets order lexicographically by their sorted edge lists.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct EdgeSet {
    n: u8,
    bits: u128,
}

impl EdgeSet {
    /// The empty set over `T_n`.
    pub fn new(n: usize) -> Result<Self> {
        if !(2..=MAX_VERTICES).contains(&n) {
            return Err(Error::InvalidVertexCount { n });
        }
        Ok(EdgeSet { n: n as u8, bits: 0 })
    }

    /// All edges of `T_n`.
    pub fn complete(n: usize) -> Result<Self> {
        let mut set = Self::new(n)?;
        set.bits = full_mask(n);
        Ok(set)
    }

    pub fn from_edges<I: IntoIterator<Item = Edge>>(n: usize, edges: I) -> Result<Self> {
        let mut set = Self::new(n)?;
        for e in edges {
            if e.hi() > n {
                return Err(Error::VertexOutOfRange { vertex: e.hi(), n });
            }
            set.insert(e);
        }
        Ok(set)
    }

    /// Builds a set from unordered vertex pairs, normalizing each pair.
    /// Repeated pairs collapse into one edge.
    pub fn from_pairs<I: IntoIterator<Item = (Vertex, Vertex)>>(n: usize, pairs: I) -> Result<Self> {
        let mut set = Self::new(n)?;
        for (a, b) in pairs {
            set.insert(Edge::new(n, a, b)?);
        }
        Ok(set)
    }

    pub(crate) const fn from_bits(n: usize, bits: u128) -> Self {
        EdgeSet { n: n as u8, bits }
    }

    #[inline]
    pub(crate) const fn bits(&self) -> u128 {
        self.bits
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n as usize
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    #[inline]
    pub fn contains(&self, e: Edge) -> bool {
        e.hi() <= self.n() && self.bits & self.bit(e) != 0
    }

    /// Adds `e`; returns `false` if it was already present.
    ///
    /// Panics if `e` does not belong to `T_n`.
    pub fn insert(&mut self, e: Edge) -> bool {
        assert!(e.hi() <= self.n(), "edge {e} outside T_{}", self.n);
        let bit = self.bit(e);
        let fresh = self.bits & bit == 0;
        self.bits |= bit;
        fresh
    }

    /// Removes `e`; returns `false` if it was absent.
    pub fn remove(&mut self, e: Edge) -> bool {
        if !self.contains(e) {
            return false;
        }
        self.bits &= !self.bit(e);
        true
    }

    #[must_use]
    pub fn with(mut self, e: Edge) -> Self {
        self.insert(e);
        self
    }

    #[must_use]
    pub fn without(mut self, e: Edge) -> Self {
        self.remove(e);
        self
    }

    pub fn iter(&self) -> Edges {
        Edges {
            n: self.n(),
            bits: self.bits,
        }
    }

    /// Edges not in this set.
    #[must_use]
    pub fn complement(&self) -> Self {
        Self::from_bits(self.n(), !self.bits & full_mask(self.n()))
    }

    #[must_use]
    pub fn union(&self, other: &Self) -> Self {
        self.check_same(other);
        Self::from_bits(self.n(), self.bits | other.bits)
    }

    #[must_use]
    pub fn intersection(&self, other: &Self) -> Self {
        self.check_same(other);
        Self::from_bits(self.n(), self.bits & other.bits)
    }

    #[must_use]
    pub fn difference(&self, other: &Self) -> Self {
        self.check_same(other);
        Self::from_bits(self.n(), self.bits & !other.bits)
    }

    #[must_use]
    pub fn symmetric_difference(&self, other: &Self) -> Self {
        self.check_same(other);
        Self::from_bits(self.n(), self.bits ^ other.bits)
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.n == other.n && self.bits & !other.bits == 0
    }

    /// Number of edges incident to `v`.
    pub fn degree(&self, v: Vertex) -> usize {
        self.iter().filter(|e| e.touches(v)).count()
    }

    #[inline]
    fn bit(&self, e: Edge) -> u128 {
        1u128 << e.index(self.n())
    }

    fn check_same(&self, other: &Self) {
        assert_eq!(self.n, other.n, "edge sets over different T_n");
    }
}

#[inline]
pub(crate) fn full_mask(n: usize) -> u128 {
    // At most 120 edges for n <= MAX_VERTICES, so the shift never overflows.
    (1u128 << edge_count(n)) - 1
}

impl Ord for EdgeSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.n.cmp(&other.n).then_with(|| {
            let diff = self.bits ^ other.bits;
            if diff == 0 {
                return Ordering::Equal;
            }
            // Both sorted lists agree up to the lowest differing edge `d`. The
            // list holding `d` is smaller unless the other list ends right there.
            let d = diff.trailing_zeros();
            let (holder, rest) = if self.bits >> d & 1 == 1 {
                (Ordering::Less, other.bits)
            } else {
                (Ordering::Greater, self.bits)
            };
            let above = if d == 127 { 0 } else { rest >> (d + 1) };
            if above != 0 {
                holder
            } else {
                holder.reverse()
            }
        })
    }
}

impl PartialOrd for EdgeSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl IntoIterator for &EdgeSet {
    type Item = Edge;
    type IntoIter = Edges;

    fn into_iter(self) -> Edges {
        self.iter()
    }
}

impl fmt::Debug for EdgeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "T_{}", self.n)?;
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for EdgeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, e) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("}")
    }
}

/// Iterator over an [`EdgeSet`] in lexicographic order.
#[derive(Debug, Clone)]
pub struct Edges {
    n: usize,
    bits: u128,
}

impl Iterator for Edges {
    type Item = Edge;

    fn next(&mut self) -> Option<Edge> {
        if self.bits == 0 {
            return None;
        }
        let index = self.bits.trailing_zeros() as usize;
        self.bits &= self.bits - 1;
        Some(Edge::from_index(self.n, index))
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let len = self.bits.count_ones() as usize;
        (len, Some(len))
    }
}

impl ExactSizeIterator for Edges {}
