//! The edge-exchange graph `MP(T_n, F)` on maximal plane subgraphs.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::edge::Edge;
use crate::edge_set::EdgeSet;
use crate::error::{Error, Result};
use crate::twisted::{ones, Limits, MaxPlaneSubgraph, TwistedGraph};

/// Replace `removed` by `added`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExchangeMove {
    pub removed: Edge,
    pub added: Edge,
}

impl ExchangeMove {
    pub fn apply(&self, set: &EdgeSet) -> EdgeSet {
        set.without(self.removed).with(self.added)
    }

    /// The move undoing this one.
    pub fn inverse(&self) -> Self {
        ExchangeMove {
            removed: self.added,
            added: self.removed,
        }
    }
}

impl fmt::Display for ExchangeMove {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "-{}/+{}", self.removed, self.added)
    }
}

impl TwistedGraph {
    /// Every `(G - g) + h` with `g` in `G`, `h` outside `G`, that is again
    /// maximal plane. Ordered by `g`, then `h`.
    pub fn exchange_neighbors(&self, g: &MaxPlaneSubgraph) -> Vec<(ExchangeMove, MaxPlaneSubgraph)> {
        let n = self.n();
        let bits = g.edges().bits();
        let outside = g.edges().complement().bits();
        let mut out = Vec::new();
        for gi in ones(bits) {
            let rest = bits & !(1 << gi);
            for hi in ones(outside) {
                // `h` may only cross the edge being removed.
                if self.crossing_bits(hi) & rest != 0 {
                    continue;
                }
                let next = rest | 1 << hi;
                if self.maximal_plane_bits(next) {
                    out.push((
                        ExchangeMove {
                            removed: Edge::from_index(n, gi),
                            added: Edge::from_index(n, hi),
                        },
                        MaxPlaneSubgraph::new_unchecked(EdgeSet::from_bits(n, next)),
                    ));
                }
            }
        }
        out
    }

    /// `MP(T_n, F)`: maximal plane subgraphs containing `constraint`, linked
    /// by single exchanges. An empty constraint gives `MP(T_n)`.
    pub fn build_flip_graph(&self, constraint: &EdgeSet, limits: &Limits) -> Result<FlipGraph> {
        self.check_ambient(constraint)?;
        if !self.plane_bits(constraint.bits()) {
            return Err(Error::NotPlane);
        }
        let nodes = self
            .enumerate_maximal_plane(limits)?
            .into_iter()
            .filter(|g| constraint.is_subset(g.edges()))
            .collect();
        Ok(FlipGraph::from_nodes(self, *constraint, nodes))
    }
}

/// An undirected link; `exchange` turns node `a` into node `b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Link {
    pub a: usize,
    pub b: usize,
    pub exchange: ExchangeMove,
}

/// Explicit exchange graph over a set of maximal plane subgraphs.
#[derive(Debug, Clone)]
pub struct FlipGraph {
    n: usize,
    constraint: EdgeSet,
    nodes: Vec<MaxPlaneSubgraph>,
    links: Vec<Link>,
    /// Per node: `(neighbor, link index)`, neighbors ascending.
    adjacency: Vec<Vec<(usize, usize)>>,
}

impl FlipGraph {
    /// Induced exchange graph on `nodes` (sorted and deduplicated here).
    pub fn from_nodes(tg: &TwistedGraph, constraint: EdgeSet, mut nodes: Vec<MaxPlaneSubgraph>) -> Self {
        nodes.sort_unstable();
        nodes.dedup();
        let mut links = Vec::new();
        let mut adjacency = vec![Vec::new(); nodes.len()];
        for (a, g) in nodes.iter().enumerate() {
            for (exchange, h) in tg.exchange_neighbors(g) {
                let Ok(b) = nodes.binary_search(&h) else {
                    continue;
                };
                if b > a {
                    adjacency[a].push((b, links.len()));
                    adjacency[b].push((a, links.len()));
                    links.push(Link { a, b, exchange });
                }
            }
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        FlipGraph {
            n: tg.n(),
            constraint,
            nodes,
            links,
            adjacency,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn constraint(&self) -> &EdgeSet {
        &self.constraint
    }

    pub fn nodes(&self) -> &[MaxPlaneSubgraph] {
        &self.nodes
    }

    pub fn links(&self) -> &[Link] {
        &self.links
    }

    pub fn node_index(&self, g: &MaxPlaneSubgraph) -> Option<usize> {
        self.nodes.binary_search(g).ok()
    }

    /// Neighbor indices of node `i`, ascending.
    pub fn neighbors(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        self.adjacency[i].iter().map(|&(j, _)| j)
    }

    /// Shortest path from `from` to `to`; `None` if they lie in different
    /// components. Among shortest paths, lower node indices win.
    pub fn bfs_path(&self, from: &MaxPlaneSubgraph, to: &MaxPlaneSubgraph) -> Result<Option<FlipPath>> {
        let start = self.node_index(from).ok_or(Error::UnknownNode)?;
        let goal = self.node_index(to).ok_or(Error::UnknownNode)?;
        let parents = self.bfs(start);
        if parents[goal].is_none() {
            return Ok(None);
        }
        let mut trail = vec![goal];
        let mut cur = goal;
        while cur != start {
            let (prev, _) = parents[cur].expect("reached nodes have parents");
            trail.push(prev);
            cur = prev;
        }
        trail.reverse();
        let moves = trail
            .windows(2)
            .map(|w| {
                let (_, link) = parents[w[1]].expect("on path");
                let link = &self.links[link];
                if link.a == w[0] {
                    link.exchange
                } else {
                    link.exchange.inverse()
                }
            })
            .collect();
        Ok(Some(FlipPath {
            n: self.n,
            constraint: self.constraint,
            nodes: trail.into_iter().map(|i| self.nodes[i]).collect(),
            moves,
            constructive: false,
        }))
    }

    /// Whether a single traversal reaches every node.
    pub fn is_connected(&self) -> Result<bool> {
        if self.nodes.is_empty() {
            return Err(Error::EmptyGraph);
        }
        Ok(self.bfs(0).iter().all(Option::is_some))
    }

    /// `parents[v] = Some((parent, link))`; the root is its own parent.
    fn bfs(&self, start: usize) -> Vec<Option<(usize, usize)>> {
        let mut parents = vec![None; self.nodes.len()];
        parents[start] = Some((start, usize::MAX));
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            for &(v, link) in &self.adjacency[u] {
                if parents[v].is_none() {
                    parents[v] = Some((u, link));
                    queue.push_back(v);
                }
            }
        }
        parents
    }
}

/// A walk in `MP(T_n, F)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlipPath {
    pub n: usize,
    /// Edge set every node must contain.
    pub constraint: EdgeSet,
    pub nodes: Vec<MaxPlaneSubgraph>,
    /// `moves[i]` turns `nodes[i]` into `nodes[i + 1]`.
    pub moves: Vec<ExchangeMove>,
    /// False when produced by search instead of construction.
    pub constructive: bool,
}

impl FlipPath {
    pub fn trivial(g: MaxPlaneSubgraph, constraint: EdgeSet, constructive: bool) -> Self {
        FlipPath {
            n: g.n(),
            constraint,
            nodes: vec![g],
            moves: Vec::new(),
            constructive,
        }
    }

    /// Rebuilds a path from raw edge sets and checks it with [`Self::validate`].
    pub fn from_parts(
        constraint: EdgeSet,
        nodes: Vec<EdgeSet>,
        moves: Vec<ExchangeMove>,
        constructive: bool,
    ) -> Result<Self> {
        let n = constraint.n();
        let tg = TwistedGraph::new(n)?;
        let nodes = nodes
            .into_iter()
            .map(|s| tg.max_plane(s))
            .collect::<Result<Vec<_>>>()?;
        let path = FlipPath {
            n,
            constraint,
            nodes,
            moves,
            constructive,
        };
        path.validate(&tg)?;
        Ok(path)
    }

    /// Number of exchanges.
    pub fn len(&self) -> usize {
        self.moves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.moves.is_empty()
    }

    pub fn start(&self) -> &MaxPlaneSubgraph {
        &self.nodes[0]
    }

    pub fn end(&self) -> &MaxPlaneSubgraph {
        self.nodes.last().expect("paths have at least one node")
    }

    #[must_use]
    pub fn reversed(&self) -> Self {
        FlipPath {
            n: self.n,
            constraint: self.constraint,
            nodes: self.nodes.iter().rev().copied().collect(),
            moves: self.moves.iter().rev().map(ExchangeMove::inverse).collect(),
            constructive: self.constructive,
        }
    }

    /// Checks every node is maximal plane and contains the constraint, and
    /// every move is a genuine single exchange between consecutive nodes.
    pub fn validate(&self, tg: &TwistedGraph) -> Result<()> {
        if self.nodes.is_empty() {
            return Err(Error::InvalidPath { step: 0 });
        }
        if self.nodes.len() != self.moves.len() + 1 {
            return Err(Error::InvalidPath {
                step: self.nodes.len().min(self.moves.len()),
            });
        }
        for (i, g) in self.nodes.iter().enumerate() {
            if g.n() != self.n
                || !tg.is_maximal_plane(g.edges())
                || !self.constraint.is_subset(g.edges())
            {
                return Err(Error::InvalidPath { step: i });
            }
        }
        for (i, mv) in self.moves.iter().enumerate() {
            let (cur, next) = (self.nodes[i].edges(), self.nodes[i + 1].edges());
            if !cur.contains(mv.removed) || cur.contains(mv.added) || mv.apply(cur) != *next {
                return Err(Error::InvalidPath { step: i + 1 });
            }
        }
        Ok(())
    }
}
