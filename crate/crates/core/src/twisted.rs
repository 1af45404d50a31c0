use alloc::vec::Vec;
use core::fmt;

use crate::edge::{crosses, edge_count, Edge};
use crate::edge_set::{full_mask, EdgeSet};
use crate::error::{Error, Result};

/// Largest `n` whose edge set fits the 128-bit representation.
pub const MAX_VERTICES: usize = 16;

/// Guards for exhaustive enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest `n` for which maximal plane subgraphs are enumerated.
    pub max_plane: usize,
    /// Largest `n` for which plane perfect matchings are enumerated.
    pub matchings: usize,
}

impl Limits {
    /// Ceiling that no configuration can lift for maximal plane subgraphs.
    pub const MAX_PLANE_HARD_CAP: usize = 12;
    pub const MATCHINGS_HARD_CAP: usize = MAX_VERTICES;

    pub fn check_max_plane(&self, n: usize) -> Result<()> {
        let limit = self.max_plane.min(Self::MAX_PLANE_HARD_CAP);
        if n > limit {
            return Err(Error::LimitExceeded { n, limit });
        }
        Ok(())
    }

    pub fn check_matchings(&self, n: usize) -> Result<()> {
        let limit = self.matchings.min(Self::MATCHINGS_HARD_CAP);
        if n > limit {
            return Err(Error::LimitExceeded { n, limit });
        }
        Ok(())
    }
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_plane: 9,
            matchings: 12,
        }
    }
}

/// The twisted graph `T_n` together with its precomputed crossing table.
#[derive(Clone)]
pub struct TwistedGraph {
    n: usize,
    /// `crossing[i]` is the set of edges crossing the edge with index `i`.
    crossing: Vec<u128>,
}

impl TwistedGraph {
    pub fn new(n: usize) -> Result<Self> {
        if !(2..=MAX_VERTICES).contains(&n) {
            return Err(Error::InvalidVertexCount { n });
        }
        let m = edge_count(n);
        let crossing = (0..m)
            .map(|i| {
                let e = Edge::from_index(n, i);
                (0..m)
                    .filter(|&j| crosses(e, Edge::from_index(n, j)))
                    .fold(0u128, |acc, j| acc | 1 << j)
            })
            .collect();
        Ok(TwistedGraph { n, crossing })
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of edges of `T_n`.
    #[inline]
    pub fn edge_count(&self) -> usize {
        self.crossing.len()
    }

    /// Every edge of `T_n`.
    pub fn all_edges(&self) -> EdgeSet {
        EdgeSet::from_bits(self.n, full_mask(self.n))
    }

    /// Edges of `T_n` that cross `e`.
    pub fn crossing_edges(&self, e: Edge) -> EdgeSet {
        EdgeSet::from_bits(self.n, self.crossing_bits(e.index(self.n)))
    }

    #[inline]
    pub(crate) fn crossing_bits(&self, index: usize) -> u128 {
        self.crossing[index]
    }

    pub fn is_plane(&self, set: &EdgeSet) -> bool {
        self.check_ambient(set).is_ok() && self.plane_bits(set.bits())
    }

    /// Plane, and every edge of `T_n` outside the set crosses a member.
    pub fn is_maximal_plane(&self, set: &EdgeSet) -> bool {
        self.check_ambient(set).is_ok() && self.maximal_plane_bits(set.bits())
    }

    #[inline]
    pub(crate) fn plane_bits(&self, bits: u128) -> bool {
        ones(bits).all(|i| self.crossing[i] & bits == 0)
    }

    #[inline]
    pub(crate) fn maximal_plane_bits(&self, bits: u128) -> bool {
        self.plane_bits(bits)
            && ones(!bits & full_mask(self.n)).all(|i| self.crossing[i] & bits != 0)
    }

    /// Greedily extends a plane set: edges of `T_n` are scanned in
    /// lexicographic order and added whenever they cross nothing already
    /// present.
    pub fn complete_to_maximal(&self, set: &EdgeSet) -> Result<MaxPlaneSubgraph> {
        self.check_ambient(set)?;
        let mut bits = set.bits();
        if !self.plane_bits(bits) {
            return Err(Error::NotPlane);
        }
        for i in 0..self.edge_count() {
            if self.crossing[i] & bits == 0 {
                bits |= 1 << i;
            }
        }
        debug_assert!(self.maximal_plane_bits(bits));
        Ok(MaxPlaneSubgraph(EdgeSet::from_bits(self.n, bits)))
    }

    /// Validates `set` as a maximal plane subgraph of this `T_n`.
    pub fn max_plane(&self, set: EdgeSet) -> Result<MaxPlaneSubgraph> {
        self.check_ambient(&set)?;
        if !self.plane_bits(set.bits()) {
            return Err(Error::NotPlane);
        }
        if !self.maximal_plane_bits(set.bits()) {
            return Err(Error::NotMaximal);
        }
        Ok(MaxPlaneSubgraph(set))
    }

    pub(crate) fn check_ambient(&self, set: &EdgeSet) -> Result<()> {
        if set.n() != self.n {
            return Err(Error::MismatchedAmbient {
                left: self.n,
                right: set.n(),
            });
        }
        Ok(())
    }
}

impl fmt::Debug for TwistedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("TwistedGraph").field("n", &self.n).finish()
    }
}

/// Indices of set bits, ascending.
#[inline]
pub(crate) fn ones(mut bits: u128) -> impl Iterator<Item = usize> {
    core::iter::from_fn(move || {
        if bits == 0 {
            return None;
        }
        let i = bits.trailing_zeros() as usize;
        bits &= bits - 1;
        Some(i)
    })
}

/// A maximal plane subgraph of `T_n`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MaxPlaneSubgraph(EdgeSet);

impl MaxPlaneSubgraph {
    /// Validates `set` against `T_{set.n()}`.
    pub fn new(set: EdgeSet) -> Result<Self> {
        TwistedGraph::new(set.n())?.max_plane(set)
    }

    pub(crate) fn new_unchecked(set: EdgeSet) -> Self {
        MaxPlaneSubgraph(set)
    }

    #[inline]
    pub fn edges(&self) -> &EdgeSet {
        &self.0
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.0.n()
    }

    #[inline]
    pub fn contains(&self, e: Edge) -> bool {
        self.0.contains(e)
    }

    pub fn into_edge_set(self) -> EdgeSet {
        self.0
    }
}

impl fmt::Debug for MaxPlaneSubgraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(&self.0, f)
    }
}

impl fmt::Display for MaxPlaneSubgraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

/// Pairwise crossing check without building a crossing table.
pub fn is_plane(set: &EdgeSet) -> bool {
    let edges: Vec<Edge> = set.iter().collect();
    edges
        .iter()
        .enumerate()
        .all(|(i, &e)| edges[i + 1..].iter().all(|&f| !crosses(e, f)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(n: usize, pairs: &[(usize, usize)]) -> EdgeSet {
        EdgeSet::from_pairs(n, pairs.iter().copied()).unwrap()
    }

    #[test]
    fn planarity_examples() {
        let t4 = TwistedGraph::new(4).unwrap();
        assert!(t4.is_plane(&set(4, &[(1, 2), (1, 3), (1, 4)])));
        assert!(!t4.is_plane(&set(4, &[(1, 4), (2, 3)])));
        assert!(t4.is_plane(&EdgeSet::new(4).unwrap()));
        assert!(is_plane(&set(4, &[(1, 2), (1, 3), (1, 4)])));
        assert!(!is_plane(&set(4, &[(1, 4), (2, 3)])));
    }

    #[test]
    fn maximality_examples() {
        let t4 = TwistedGraph::new(4).unwrap();
        let all = t4.all_edges();
        let e14 = Edge::new(4, 1, 4).unwrap();
        let e23 = Edge::new(4, 2, 3).unwrap();
        assert!(t4.is_maximal_plane(&all.without(e14)));
        assert!(!t4.is_maximal_plane(&all.without(e14).without(e23)));
        assert!(!t4.is_maximal_plane(&set(4, &[(1, 4), (2, 3)])));
        assert_eq!(
            t4.max_plane(all.without(e14).without(e23)),
            Err(Error::NotMaximal)
        );
        assert_eq!(t4.max_plane(all), Err(Error::NotPlane));
    }

    #[test]
    fn completion_examples() {
        let t3 = TwistedGraph::new(3).unwrap();
        let g = t3.complete_to_maximal(&EdgeSet::new(3).unwrap()).unwrap();
        assert_eq!(*g.edges(), t3.all_edges());

        let t4 = TwistedGraph::new(4).unwrap();
        let g = t4.complete_to_maximal(&set(4, &[(2, 3)])).unwrap();
        assert_eq!(
            *g.edges(),
            set(4, &[(1, 2), (1, 3), (2, 3), (2, 4), (3, 4)])
        );
        assert_eq!(
            t4.complete_to_maximal(&set(4, &[(1, 4), (2, 3)])),
            Err(Error::NotPlane)
        );
    }

    #[test]
    fn ambient_mismatch_is_reported() {
        let t4 = TwistedGraph::new(4).unwrap();
        assert_eq!(
            t4.complete_to_maximal(&EdgeSet::new(5).unwrap()),
            Err(Error::MismatchedAmbient { left: 4, right: 5 })
        );
        assert!(!t4.is_plane(&EdgeSet::new(5).unwrap()));
    }

    #[test]
    fn limits() {
        let limits = Limits::default();
        assert!(limits.check_max_plane(9).is_ok());
        assert_eq!(
            limits.check_max_plane(10),
            Err(Error::LimitExceeded { n: 10, limit: 9 })
        );
        let lifted = Limits {
            max_plane: 40,
            matchings: 40,
        };
        assert_eq!(
            lifted.check_max_plane(13),
            Err(Error::LimitExceeded { n: 13, limit: 12 })
        );
        assert!(lifted.check_matchings(16).is_ok());
    }
}
