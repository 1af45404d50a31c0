//! Constructive flip paths.
//!
//! [`fixed_edge_flip_path`] joins two maximal plane subgraphs `R`, `Q` inside
//! `MP(T_n, F)` by induction on the forward-degree signature. Let `k` be the
//! length of the common prefix of forward degrees and `p = k + 1` the first
//! vertex where they differ. On the side with the larger forward degree at
//! `v_p`, repeatedly exchange `v_p v_max` for `v_{p+1} v_{max-1}` (where
//! `max` is the largest forward neighbor of `v_p`) until the degrees at `v_p`
//! agree. That extends the common prefix, so at most `n - 1` rounds are
//! needed. Steps taken on `Q`'s side are reversed when the path is assembled.
//!
//! Nothing guarantees a priori that each exchange lands on a maximal plane
//! subgraph containing `F`, so every step is validated and a failure is
//! reported as a [`ClaimViolation`] instead of being repaired.
//!
//! [`matching_preserving_path`] composes such paths along a path of the
//! matching graph, so every intermediate subgraph keeps a perfect matching.

use alloc::boxed::Box;
use alloc::vec::Vec;
use core::fmt;

use crate::edge::Edge;
use crate::edge_set::EdgeSet;
use crate::error::{Error, Result};
use crate::flip::{ExchangeMove, FlipPath};
use crate::matching::MatchingGraph;
use crate::twisted::{Limits, MaxPlaneSubgraph, TwistedGraph};

/// Forward neighborhoods `N⁺(v_i) = { j > i : v_i v_j ∈ E }` for `i < n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeSignature {
    n: usize,
    forward: Vec<Vec<usize>>,
}

impl DegreeSignature {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Sorted forward neighbors of `v_i`, `1 <= i < n`.
    pub fn forward_neighbors(&self, i: usize) -> &[usize] {
        &self.forward[i - 1]
    }

    pub fn forward_degree(&self, i: usize) -> usize {
        self.forward[i - 1].len()
    }

    /// Largest forward neighbor of `v_i`; `None` when it has none.
    pub fn max_forward(&self, i: usize) -> Option<usize> {
        self.forward[i - 1].last().copied()
    }

    /// Forward degrees of `v_1, ..., v_{n-1}`.
    pub fn degrees(&self) -> Vec<usize> {
        self.forward.iter().map(Vec::len).collect()
    }

    pub fn maxima(&self) -> Vec<Option<usize>> {
        self.forward.iter().map(|f| f.last().copied()).collect()
    }
}

pub fn degree_signature(g: &MaxPlaneSubgraph) -> DegreeSignature {
    signature_of(g.edges())
}

fn signature_of(set: &EdgeSet) -> DegreeSignature {
    let n = set.n();
    let mut forward = alloc::vec![Vec::new(); n - 1];
    for e in set {
        forward[e.lo() - 1].push(e.hi());
    }
    DegreeSignature { n, forward }
}

/// `k`: number of leading vertices `v_1, ..., v_k` whose forward degrees
/// agree in both graphs. `m = n - 1 - k` is zero exactly when all agree.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PairMeasure {
    pub k: usize,
    pub m: usize,
}

/// Prefix agreement of forward degrees. A later coincidental agreement after
/// a disagreement does not count.
pub fn pair_measure(r: &MaxPlaneSubgraph, q: &MaxPlaneSubgraph) -> Result<PairMeasure> {
    if r.n() != q.n() {
        return Err(Error::MismatchedAmbient {
            left: r.n(),
            right: q.n(),
        });
    }
    Ok(measure(&degree_signature(r), &degree_signature(q)))
}

fn measure(r: &DegreeSignature, q: &DegreeSignature) -> PairMeasure {
    let n = r.n;
    let k = (1..n)
        .take_while(|&i| r.forward_degree(i) == q.forward_degree(i))
        .count();
    PairMeasure { k, m: n - 1 - k }
}

/// What went wrong in a constructed step.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ViolationKind {
    /// The replacement `v_{p+1} v_{max-1}` is a loop or runs backwards.
    DegenerateEdge { lo: usize, hi: usize },
    /// The replacement edge is already present.
    AddedEdgePresent(Edge),
    /// The removed edge belongs to the fixed set.
    FixedEdgeRemoved(Edge),
    NotPlane,
    NotMaximal,
    /// Forward degree at the pivot did not drop by exactly one.
    DegreeNotDecreased,
    /// The common prefix did not grow after a round.
    MeasureNotIncreased { before: usize, after: usize },
    /// All forward degrees agree yet the graphs differ.
    EqualSignatureDistinctGraphs,
    /// Lowering the pivot degree took a different number of exchanges than
    /// the gap between the two largest forward neighbors of the pivot.
    StepCountMismatch { expected: usize, taken: usize },
    /// The union of consecutive matchings is not plane.
    MatchingUnionNotPlane,
}

/// Diagnostic for a constructed step that failed validation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClaimViolation {
    /// Index of the exchange (0-based, counted over both sides).
    pub step: usize,
    /// Induction round, i.e. how many pivots were already settled.
    pub round: usize,
    pub pivot: usize,
    pub kind: ViolationKind,
    /// The subgraph the step started from.
    pub from: EdgeSet,
    /// The rejected edge set, when one was formed.
    pub offending: Option<EdgeSet>,
}

impl fmt::Display for ClaimViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "step {} (round {}, pivot v{}): {:?} from {}",
            self.step, self.round, self.pivot, self.kind, self.from
        )?;
        if let Some(set) = &self.offending {
            write!(f, " -> {set}")?;
        }
        Ok(())
    }
}

/// How to react when a constructed step fails validation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum PathMode {
    /// Surface every failure as [`Error::ClaimViolation`].
    #[default]
    Strict,
    /// Substitute a shortest search path in `MP(T_n, F)` and mark the result
    /// as non-constructive.
    FallbackToSearch(Limits),
}

/// Path from `r` to `q` in `MP(T_n, F)`, built by the forward-degree
/// induction. `fixed` must lie in both endpoints; it may be smaller than
/// their intersection.
pub fn fixed_edge_flip_path(
    tg: &TwistedGraph,
    r: &MaxPlaneSubgraph,
    q: &MaxPlaneSubgraph,
    fixed: &EdgeSet,
    mode: PathMode,
) -> Result<FlipPath> {
    for set in [r.edges(), q.edges(), fixed] {
        tg.check_ambient(set)?;
    }
    if !fixed.is_subset(r.edges()) || !fixed.is_subset(q.edges()) {
        return Err(Error::FixedSetViolation);
    }
    match Builder::new(tg, *fixed).run(*r, *q) {
        Err(Error::ClaimViolation(_)) if matches!(mode, PathMode::FallbackToSearch(_)) => {
            let PathMode::FallbackToSearch(limits) = mode else {
                unreachable!()
            };
            tg.build_flip_graph(fixed, &limits)?
                .bfs_path(r, q)?
                .ok_or(Error::NoPath)
        }
        other => other,
    }
}

struct Builder<'a> {
    tg: &'a TwistedGraph,
    fixed: EdgeSet,
    steps: usize,
}

/// One end of the path under construction.
struct Side {
    nodes: Vec<MaxPlaneSubgraph>,
    moves: Vec<ExchangeMove>,
}

impl Side {
    fn new(start: MaxPlaneSubgraph) -> Self {
        Side {
            nodes: alloc::vec![start],
            moves: Vec::new(),
        }
    }

    fn last(&self) -> MaxPlaneSubgraph {
        *self.nodes.last().expect("sides are never empty")
    }
}

impl<'a> Builder<'a> {
    fn new(tg: &'a TwistedGraph, fixed: EdgeSet) -> Self {
        Builder { tg, fixed, steps: 0 }
    }

    fn run(mut self, r: MaxPlaneSubgraph, q: MaxPlaneSubgraph) -> Result<FlipPath> {
        let n = self.tg.n();
        let mut head = Side::new(r);
        let mut tail = Side::new(q);
        for round in 0.. {
            let (left, right) = (head.last(), tail.last());
            let (sig_left, sig_right) = (degree_signature(&left), degree_signature(&right));
            let before = measure(&sig_left, &sig_right);
            if before.m == 0 {
                if left != right {
                    return Err(self.violation(round, n, ViolationKind::EqualSignatureDistinctGraphs, &left, None));
                }
                break;
            }
            let pivot = before.k + 1;
            let (side, other) = if sig_left.forward_degree(pivot) > sig_right.forward_degree(pivot) {
                (&mut head, &sig_right)
            } else {
                (&mut tail, &sig_left)
            };
            self.lower_degree(side, pivot, other, round)?;

            let after = measure(&degree_signature(&head.last()), &degree_signature(&tail.last()));
            if after.k <= before.k {
                let kind = ViolationKind::MeasureNotIncreased {
                    before: before.k,
                    after: after.k,
                };
                return Err(self.violation(round, pivot, kind, &head.last(), Some(*tail.last().edges())));
            }
        }

        let mut nodes = head.nodes;
        let mut moves = head.moves;
        nodes.extend(tail.nodes.iter().rev().skip(1));
        moves.extend(tail.moves.iter().rev().map(ExchangeMove::inverse));
        let path = FlipPath {
            n,
            constraint: self.fixed,
            nodes,
            moves,
            constructive: true,
        };
        debug_assert_eq!(path.validate(self.tg), Ok(()));
        Ok(path)
    }

    /// Exchanges `v_p v_max` for `v_{p+1} v_{max-1}` until the forward degree
    /// of `v_p` matches `other`. When `other` has a forward neighbor at the
    /// pivot, this must take exactly `max - max_other` exchanges.
    fn lower_degree(&mut self, side: &mut Side, pivot: usize, other: &DegreeSignature, round: usize) -> Result<()> {
        let target = other.forward_degree(pivot);
        let start = side.last();
        let expected = match (degree_signature(&start).max_forward(pivot), other.max_forward(pivot)) {
            (Some(a), Some(b)) => Some(a.saturating_sub(b)),
            _ => None,
        };
        let mut taken = 0;
        loop {
            let cur = side.last();
            let sig = degree_signature(&cur);
            let degree = sig.forward_degree(pivot);
            if degree <= target {
                return match expected {
                    Some(expected) if expected != taken => {
                        let kind = ViolationKind::StepCountMismatch { expected, taken };
                        Err(self.violation(round, pivot, kind, &start, Some(*cur.edges())))
                    }
                    _ => Ok(()),
                };
            }
            let max = sig.max_forward(pivot).expect("positive degree");
            let removed = Edge::raw(pivot, max);
            let (lo, hi) = (pivot + 1, max - 1);
            if hi <= lo {
                return Err(self.violation(round, pivot, ViolationKind::DegenerateEdge { lo, hi }, &cur, None));
            }
            let added = Edge::raw(lo, hi);
            if cur.contains(added) {
                return Err(self.violation(round, pivot, ViolationKind::AddedEdgePresent(added), &cur, None));
            }
            let exchange = ExchangeMove { removed, added };
            let next = exchange.apply(cur.edges());
            let kind = if self.fixed.contains(removed) {
                Some(ViolationKind::FixedEdgeRemoved(removed))
            } else if !self.tg.is_plane(&next) {
                Some(ViolationKind::NotPlane)
            } else if !self.tg.is_maximal_plane(&next) {
                Some(ViolationKind::NotMaximal)
            } else if signature_of(&next).forward_degree(pivot) + 1 != degree {
                Some(ViolationKind::DegreeNotDecreased)
            } else {
                None
            };
            if let Some(kind) = kind {
                return Err(self.violation(round, pivot, kind, &cur, Some(next)));
            }
            side.nodes.push(MaxPlaneSubgraph::new_unchecked(next));
            side.moves.push(exchange);
            self.steps += 1;
            taken += 1;
        }
    }

    fn violation(
        &self,
        round: usize,
        pivot: usize,
        kind: ViolationKind,
        from: &MaxPlaneSubgraph,
        offending: Option<EdgeSet>,
    ) -> Error {
        Error::ClaimViolation(Box::new(ClaimViolation {
            step: self.steps,
            round,
            pivot,
            kind,
            from: *from.edges(),
            offending,
        }))
    }
}

/// Path from `s` to `r` through maximal plane subgraphs that each contain a
/// perfect matching.
///
/// Takes the lexicographically least perfect matchings `M_0` of `s` and `M_k`
/// of `r`, a shortest path `M_0, ..., M_k` in `matchings`, greedy maximal
/// extensions `S_i` of `M_{i-1} ∪ M_i`, and joins consecutive
/// `S_i, S_{i+1}` with [`fixed_edge_flip_path`] under the fixed set `M_i`.
/// Every node therefore contains some `M_i`.
pub fn matching_preserving_path(
    tg: &TwistedGraph,
    matchings: &MatchingGraph,
    s: &MaxPlaneSubgraph,
    r: &MaxPlaneSubgraph,
    mode: PathMode,
) -> Result<FlipPath> {
    let n = tg.n();
    if matchings.n() != n {
        return Err(Error::MismatchedAmbient {
            left: n,
            right: matchings.n(),
        });
    }
    let first = *tg
        .perfect_matchings_of(s)?
        .first()
        .ok_or(Error::NoPerfectMatching)?;
    let last = *tg
        .perfect_matchings_of(r)?
        .first()
        .ok_or(Error::NoPerfectMatching)?;
    let route = matchings.matching_path(&first, &last)?;

    let mut stops = Vec::with_capacity(route.len() + 1);
    stops.push(*s);
    for (i, pair) in route.windows(2).enumerate() {
        let union = pair[0].edges().union(pair[1].edges());
        match tg.complete_to_maximal(&union) {
            Ok(g) => stops.push(g),
            Err(Error::NotPlane) => {
                return Err(Error::ClaimViolation(Box::new(ClaimViolation {
                    step: i,
                    round: 0,
                    pivot: 0,
                    kind: ViolationKind::MatchingUnionNotPlane,
                    from: *pair[0].edges(),
                    offending: Some(union),
                })))
            }
            Err(e) => return Err(e),
        }
    }
    stops.push(*r);

    let mut path = FlipPath::trivial(*s, EdgeSet::new(n)?, true);
    for (i, fixed) in route.iter().enumerate() {
        let segment = fixed_edge_flip_path(tg, &stops[i], &stops[i + 1], fixed.edges(), mode)?;
        path.constructive &= segment.constructive;
        path.nodes.extend(segment.nodes.into_iter().skip(1));
        path.moves.extend(segment.moves);
    }
    Ok(path)
}
