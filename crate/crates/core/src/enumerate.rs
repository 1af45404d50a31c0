//! Maximal plane subgraphs as maximal independent sets of the crossing
//! relation, found by Bron–Kerbosch with pivoting on the complement
//! ("compatibility") graph.

use alloc::vec::Vec;

use crate::edge_set::{full_mask, EdgeSet};
use crate::error::Result;
use crate::twisted::{ones, Limits, MaxPlaneSubgraph, TwistedGraph};

impl TwistedGraph {
    /// All maximal plane subgraphs of `T_n`, sorted by edge list.
    pub fn enumerate_maximal_plane(&self, limits: &Limits) -> Result<Vec<MaxPlaneSubgraph>> {
        limits.check_max_plane(self.n())?;
        let all = full_mask(self.n());
        let compatible: Vec<u128> = (0..self.edge_count())
            .map(|i| all & !self.crossing_bits(i) & !(1 << i))
            .collect();
        let mut found = Vec::new();
        bron_kerbosch(&compatible, 0, all, 0, &mut found);
        let mut out: Vec<MaxPlaneSubgraph> = found
            .into_iter()
            .map(|bits| MaxPlaneSubgraph::new_unchecked(EdgeSet::from_bits(self.n(), bits)))
            .collect();
        out.sort_unstable();
        Ok(out)
    }
}

/// Shorthand for [`TwistedGraph::enumerate_maximal_plane`] with default limits.
pub fn enumerate_maximal_plane(n: usize) -> Result<Vec<MaxPlaneSubgraph>> {
    TwistedGraph::new(n)?.enumerate_maximal_plane(&Limits::default())
}

fn bron_kerbosch(compatible: &[u128], r: u128, mut p: u128, mut x: u128, out: &mut Vec<u128>) {
    if p == 0 {
        if x == 0 {
            out.push(r);
        }
        return;
    }
    let pivot = ones(p | x)
        .max_by_key(|&u| (p & compatible[u]).count_ones())
        .expect("p is non-empty");
    for v in ones(p & !compatible[pivot]) {
        let bit = 1u128 << v;
        bron_kerbosch(compatible, r | bit, p & compatible[v], x & compatible[v], out);
        p &= !bit;
        x |= bit;
    }
}
