use core::fmt;

use crate::error::{Error, Result};
use crate::twisted::MAX_VERTICES;

/// 1-based vertex index `i` standing for `v_i`.
pub type Vertex = usize;

/// Edge `v_lo v_hi` of `T_n`, always stored with `lo < hi`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    lo: u8,
    hi: u8,
}

impl Edge {
    /// Builds the canonical edge joining `a` and `b` in `T_n`.
    pub fn new(n: usize, a: Vertex, b: Vertex) -> Result<Self> {
        if !(2..=MAX_VERTICES).contains(&n) {
            return Err(Error::InvalidVertexCount { n });
        }
        for v in [a, b] {
            if v < 1 || v > n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
        }
        if a == b {
            return Err(Error::Loop { vertex: a });
        }
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        Ok(Edge {
            lo: lo as u8,
            hi: hi as u8,
        })
    }

    /// Caller guarantees `1 <= lo < hi <= MAX_VERTICES`.
    pub(crate) const fn raw(lo: usize, hi: usize) -> Self {
        Edge {
            lo: lo as u8,
            hi: hi as u8,
        }
    }

    #[inline]
    pub fn lo(self) -> Vertex {
        self.lo as usize
    }

    #[inline]
    pub fn hi(self) -> Vertex {
        self.hi as usize
    }

    /// True if `v` is an endpoint.
    #[inline]
    pub fn touches(self, v: Vertex) -> bool {
        self.lo() == v || self.hi() == v
    }

    #[inline]
    pub fn shares_endpoint(self, other: Edge) -> bool {
        self.touches(other.lo()) || self.touches(other.hi())
    }

    /// Position of this edge in the lexicographic listing of the edges of `T_n`.
    #[inline]
    pub(crate) fn index(self, n: usize) -> usize {
        let lo = self.lo();
        (lo - 1) * n - (lo - 1) * lo / 2 + (self.hi() - lo - 1)
    }

    pub(crate) fn from_index(n: usize, mut index: usize) -> Self {
        let mut lo = 1;
        while index >= n - lo {
            index -= n - lo;
            lo += 1;
        }
        Edge::raw(lo, lo + 1 + index)
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.lo, self.hi)
    }
}

/// Whether two edges of `T_n` cross: one index interval strictly contains the
/// other.
#[inline]
pub fn crosses(e: Edge, f: Edge) -> bool {
    let (i, j, s, t) = (e.lo, e.hi, f.lo, f.hi);
    (i < s && t < j) || (s < i && j < t)
}

/// Number of edges of `T_n`.
#[inline]
pub(crate) const fn edge_count(n: usize) -> usize {
    n * (n - 1) / 2
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(a: usize, b: usize) -> Edge {
        Edge::new(9, a, b).unwrap()
    }

    #[test]
    fn canonical_orientation() {
        assert_eq!(Edge::new(5, 2, 5).unwrap(), Edge::raw(2, 5));
        assert_eq!(Edge::new(5, 5, 2).unwrap(), Edge::raw(2, 5));
    }

    #[test]
    fn rejects_loops_and_out_of_range() {
        assert_eq!(Edge::new(5, 3, 3), Err(Error::Loop { vertex: 3 }));
        assert_eq!(
            Edge::new(5, 0, 3),
            Err(Error::VertexOutOfRange { vertex: 0, n: 5 })
        );
        assert_eq!(
            Edge::new(5, 2, 6),
            Err(Error::VertexOutOfRange { vertex: 6, n: 5 })
        );
        assert_eq!(Edge::new(1, 1, 2), Err(Error::InvalidVertexCount { n: 1 }));
    }

    #[test]
    fn crossing_examples() {
        assert!(crosses(e(1, 4), e(2, 3)));
        assert!(crosses(e(2, 3), e(1, 4)));
        assert!(!crosses(e(1, 3), e(2, 4)));
        assert!(!crosses(e(1, 3), e(3, 5)));
    }

    #[test]
    fn index_roundtrip_is_lexicographic() {
        for n in 2..=MAX_VERTICES {
            let mut expected = 0;
            for lo in 1..=n {
                for hi in lo + 1..=n {
                    let edge = Edge::raw(lo, hi);
                    assert_eq!(edge.index(n), expected);
                    assert_eq!(Edge::from_index(n, expected), edge);
                    expected += 1;
                }
            }
            assert_eq!(expected, edge_count(n));
        }
    }
}
