//! Plane perfect matchings of `T_2m` and the matching graph `M(T_2m)`, in
//! which two matchings are adjacent when their symmetric difference is a
//! plane cycle of length four.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::edge::{crosses, Edge};
use crate::edge_set::EdgeSet;
use crate::error::{Error, Result};
use crate::twisted::{Limits, MaxPlaneSubgraph, TwistedGraph};

/// `n/2` pairwise non-crossing edges covering every vertex exactly once.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PlanePerfectMatching(EdgeSet);

impl PlanePerfectMatching {
    pub fn new(set: EdgeSet) -> Result<Self> {
        let n = set.n();
        if !n.is_multiple_of(2) {
            return Err(Error::OddVertexCount { n });
        }
        if set.len() != n / 2 || (1..=n).any(|v| set.degree(v) != 1) {
            return Err(Error::NotPerfectMatching);
        }
        if !crate::twisted::is_plane(&set) {
            return Err(Error::NotPlane);
        }
        Ok(PlanePerfectMatching(set))
    }

    pub fn edges(&self) -> &EdgeSet {
        &self.0
    }

    pub fn n(&self) -> usize {
        self.0.n()
    }
}

impl fmt::Debug for PlanePerfectMatching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(&self.0, f)
    }
}

impl fmt::Display for PlanePerfectMatching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl TwistedGraph {
    /// Every plane perfect matching of `T_n`, sorted by edge list.
    pub fn enumerate_plane_perfect_matchings(&self, limits: &Limits) -> Result<Vec<PlanePerfectMatching>> {
        let n = self.n();
        if !n.is_multiple_of(2) {
            return Err(Error::OddVertexCount { n });
        }
        limits.check_matchings(n)?;
        Ok(self.matchings_within(self.all_edges().bits()))
    }

    /// Perfect matchings using only edges of `g`; plane because `g` is.
    pub fn perfect_matchings_of(&self, g: &MaxPlaneSubgraph) -> Result<Vec<PlanePerfectMatching>> {
        self.check_ambient(g.edges())?;
        let n = self.n();
        if !n.is_multiple_of(2) {
            return Err(Error::OddVertexCount { n });
        }
        Ok(self.matchings_within(g.edges().bits()))
    }

    /// Whether `g` has at least one perfect matching; odd `n` never does.
    pub fn has_perfect_matching(&self, g: &MaxPlaneSubgraph) -> bool {
        self.n().is_multiple_of(2) && !self.matchings_within(g.edges().bits()).is_empty()
    }

    /// Backtracking over the lowest uncovered vertex. Output is in
    /// lexicographic order because partners are tried in ascending order.
    fn matchings_within(&self, allowed: u128) -> Vec<PlanePerfectMatching> {
        let mut out = Vec::new();
        self.extend_matching(allowed, 0, 0, &mut out);
        out
    }

    fn extend_matching(&self, allowed: u128, covered: u32, chosen: u128, out: &mut Vec<PlanePerfectMatching>) {
        let n = self.n();
        let Some(v) = (1..=n).find(|&v| covered & (1 << v) == 0) else {
            out.push(PlanePerfectMatching(EdgeSet::from_bits(n, chosen)));
            return;
        };
        for w in v + 1..=n {
            if covered & (1 << w) != 0 {
                continue;
            }
            let index = Edge::raw(v, w).index(n);
            if allowed & (1 << index) == 0 || self.crossing_bits(index) & chosen != 0 {
                continue;
            }
            self.extend_matching(allowed, covered | 1 << v | 1 << w, chosen | 1 << index, out);
        }
    }

    /// `M(T_n)` with nodes sorted by edge list.
    pub fn build_matching_graph(&self, limits: &Limits) -> Result<MatchingGraph> {
        let nodes = self.enumerate_plane_perfect_matchings(limits)?;
        let mut links = Vec::new();
        for (a, l) in nodes.iter().enumerate() {
            let edges: Vec<Edge> = l.edges().iter().collect();
            let mut found = Vec::new();
            for (i, &e) in edges.iter().enumerate() {
                for &f in &edges[i + 1..] {
                    let (p, q, r, s) = (e.lo(), e.hi(), f.lo(), f.hi());
                    for (x, y) in [((p, r), (q, s)), ((p, s), (q, r))] {
                        let swapped = l
                            .edges()
                            .without(e)
                            .without(f)
                            .with(Edge::raw(x.0.min(x.1), x.0.max(x.1)))
                            .with(Edge::raw(y.0.min(y.1), y.0.max(y.1)));
                        let Ok(b) = nodes.binary_search_by(|m| m.edges().cmp(&swapped)) else {
                            continue;
                        };
                        if b > a && matchings_adjacent(l, &nodes[b])? {
                            found.push(b);
                        }
                    }
                }
            }
            found.sort_unstable();
            found.dedup();
            links.extend(found.into_iter().map(|b| (a, b)));
        }
        links.sort_unstable();
        Ok(MatchingGraph::new(self.n(), nodes, links))
    }
}

/// Adjacency in `M(T_2m)`: the symmetric difference is exactly four edges
/// forming one closed walk through four vertices of degree two, with no two
/// of those edges crossing.
pub fn matchings_adjacent(l: &PlanePerfectMatching, m: &PlanePerfectMatching) -> Result<bool> {
    if l.n() != m.n() {
        return Err(Error::MismatchedAmbient {
            left: l.n(),
            right: m.n(),
        });
    }
    let diff = l.edges().symmetric_difference(m.edges());
    if diff.len() != 4 {
        return Ok(false);
    }
    let cycle: Vec<Edge> = diff.iter().collect();
    let mut vertices: Vec<usize> = cycle.iter().flat_map(|e| [e.lo(), e.hi()]).collect();
    vertices.sort_unstable();
    vertices.dedup();
    if vertices.len() != 4 || vertices.iter().any(|&v| diff.degree(v) != 2) {
        return Ok(false);
    }
    // Walk the cycle from its first edge and make sure all four edges are used.
    let mut used = [false; 4];
    used[0] = true;
    let start = cycle[0].lo();
    let mut at = cycle[0].hi();
    let mut steps = 1;
    while at != start {
        let Some(next) = (0..4).find(|&i| !used[i] && cycle[i].touches(at)) else {
            return Ok(false);
        };
        used[next] = true;
        at = if cycle[next].lo() == at { cycle[next].hi() } else { cycle[next].lo() };
        steps += 1;
    }
    if steps != 4 {
        return Ok(false);
    }
    Ok(cycle
        .iter()
        .enumerate()
        .all(|(i, &e)| cycle[i + 1..].iter().all(|&f| !crosses(e, f))))
}

/// The matching graph `M(T_n)` for even `n`.
#[derive(Debug, Clone)]
pub struct MatchingGraph {
    n: usize,
    nodes: Vec<PlanePerfectMatching>,
    links: Vec<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
}

impl MatchingGraph {
    fn new(n: usize, nodes: Vec<PlanePerfectMatching>, links: Vec<(usize, usize)>) -> Self {
        let mut adjacency = vec![Vec::new(); nodes.len()];
        for &(a, b) in &links {
            adjacency[a].push(b);
            adjacency[b].push(a);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        MatchingGraph {
            n,
            nodes,
            links,
            adjacency,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn nodes(&self) -> &[PlanePerfectMatching] {
        &self.nodes
    }

    /// Links `(a, b)` with `a < b`, sorted.
    pub fn links(&self) -> &[(usize, usize)] {
        &self.links
    }

    pub fn node_index(&self, m: &PlanePerfectMatching) -> Option<usize> {
        self.nodes.binary_search(m).ok()
    }

    pub fn is_connected(&self) -> Result<bool> {
        if self.nodes.is_empty() {
            return Err(Error::EmptyGraph);
        }
        Ok(self.bfs(0).iter().all(Option::is_some))
    }

    /// Shortest path from `from` to `to`, lowest indices first on ties.
    /// [`Error::NoPath`] means the graph is disconnected.
    pub fn matching_path(&self, from: &PlanePerfectMatching, to: &PlanePerfectMatching) -> Result<Vec<PlanePerfectMatching>> {
        let start = self.node_index(from).ok_or(Error::UnknownNode)?;
        let goal = self.node_index(to).ok_or(Error::UnknownNode)?;
        let parents = self.bfs(start);
        let mut cur = goal;
        let mut trail = vec![self.nodes[goal]];
        while cur != start {
            cur = parents[cur].ok_or(Error::NoPath)?;
            trail.push(self.nodes[cur]);
        }
        trail.reverse();
        Ok(trail)
    }

    fn bfs(&self, start: usize) -> Vec<Option<usize>> {
        let mut parents = vec![None; self.nodes.len()];
        parents[start] = Some(start);
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            for &v in &self.adjacency[u] {
                if parents[v].is_none() {
                    parents[v] = Some(u);
                    queue.push_back(v);
                }
            }
        }
        parents
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pm(n: usize, pairs: &[(usize, usize)]) -> PlanePerfectMatching {
        PlanePerfectMatching::new(EdgeSet::from_pairs(n, pairs.iter().copied()).unwrap()).unwrap()
    }

    #[test]
    fn construction_validates() {
        let set = |pairs: &[(usize, usize)]| EdgeSet::from_pairs(4, pairs.iter().copied()).unwrap();
        assert_eq!(
            PlanePerfectMatching::new(set(&[(1, 4), (2, 3)])),
            Err(Error::NotPlane)
        );
        assert_eq!(
            PlanePerfectMatching::new(set(&[(1, 2), (1, 3)])),
            Err(Error::NotPerfectMatching)
        );
        assert_eq!(
            PlanePerfectMatching::new(EdgeSet::new(3).unwrap()),
            Err(Error::OddVertexCount { n: 3 })
        );
    }

    #[test]
    fn enumeration_examples() {
        let limits = Limits::default();
        let t2 = TwistedGraph::new(2).unwrap();
        assert_eq!(t2.enumerate_plane_perfect_matchings(&limits).unwrap(), [pm(2, &[(1, 2)])]);
        let t4 = TwistedGraph::new(4).unwrap();
        assert_eq!(
            t4.enumerate_plane_perfect_matchings(&limits).unwrap(),
            [pm(4, &[(1, 2), (3, 4)]), pm(4, &[(1, 3), (2, 4)])]
        );
        let t5 = TwistedGraph::new(5).unwrap();
        assert_eq!(
            t5.enumerate_plane_perfect_matchings(&limits),
            Err(Error::OddVertexCount { n: 5 })
        );
        let t14 = TwistedGraph::new(14).unwrap();
        assert_eq!(
            t14.enumerate_plane_perfect_matchings(&limits),
            Err(Error::LimitExceeded { n: 14, limit: 12 })
        );
    }

    #[test]
    fn adjacency_examples() {
        let l = pm(4, &[(1, 2), (3, 4)]);
        let m = pm(4, &[(1, 3), (2, 4)]);
        assert!(matchings_adjacent(&l, &m).unwrap());
        assert!(!matchings_adjacent(&l, &l).unwrap());
        let l6 = pm(6, &[(1, 2), (3, 4), (5, 6)]);
        let m6 = pm(6, &[(1, 2), (3, 5), (4, 6)]);
        assert!(matchings_adjacent(&l6, &m6).unwrap());
        assert_eq!(
            matchings_adjacent(&l, &l6),
            Err(Error::MismatchedAmbient { left: 4, right: 6 })
        );
    }

    #[test]
    fn six_edge_difference_is_not_adjacent() {
        let l = pm(6, &[(1, 2), (3, 4), (5, 6)]);
        let m = pm(6, &[(1, 3), (2, 5), (4, 6)]);
        assert!(!matchings_adjacent(&l, &m).unwrap());
    }

    #[test]
    fn matching_graph_examples() {
        let limits = Limits::default();
        let t4 = TwistedGraph::new(4).unwrap();
        let mg = t4.build_matching_graph(&limits).unwrap();
        assert_eq!((mg.nodes().len(), mg.links().len()), (2, 1));
        let path = mg.matching_path(&mg.nodes()[0], &mg.nodes()[1]).unwrap();
        assert_eq!(path.len(), 2);
        assert_eq!(mg.matching_path(&mg.nodes()[0], &mg.nodes()[0]).unwrap().len(), 1);
        let t2 = TwistedGraph::new(2).unwrap();
        let mg2 = t2.build_matching_graph(&limits).unwrap();
        assert_eq!((mg2.nodes().len(), mg2.links().len()), (1, 0));
    }

    #[test]
    fn unknown_matching_is_rejected() {
        let limits = Limits::default();
        let mg = TwistedGraph::new(4).unwrap().build_matching_graph(&limits).unwrap();
        let foreign = pm(6, &[(1, 2), (3, 4), (5, 6)]);
        assert_eq!(mg.matching_path(&mg.nodes()[0], &foreign), Err(Error::UnknownNode));
    }

    #[test]
    fn matchings_of_subgraphs() {
        let t4 = TwistedGraph::new(4).unwrap();
        let g = t4.max_plane(t4.all_edges().without(Edge::raw(1, 4))).unwrap();
        assert_eq!(
            t4.perfect_matchings_of(&g).unwrap(),
            [pm(4, &[(1, 2), (3, 4)]), pm(4, &[(1, 3), (2, 4)])]
        );
        let t2 = TwistedGraph::new(2).unwrap();
        let only = t2.max_plane(t2.all_edges()).unwrap();
        assert_eq!(t2.perfect_matchings_of(&only).unwrap(), [pm(2, &[(1, 2)])]);

        let t5 = TwistedGraph::new(5).unwrap();
        let g5 = t5.complete_to_maximal(&EdgeSet::new(5).unwrap()).unwrap();
        assert_eq!(t5.perfect_matchings_of(&g5), Err(Error::OddVertexCount { n: 5 }));
    }
}
