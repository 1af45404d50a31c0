//! Exhaustive verification suites.
//!
//! Reports carry no timing information so that two runs with the same
//! parameters serialize to identical bytes.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;
use twisted_core::{
    crosses, fixed_edge_flip_path, matching_preserving_path, Edge, EdgeSet, Error, FlipGraph,
    FlipPath, Limits, MaxPlaneSubgraph, PathMode, TwistedGraph, MAX_VERTICES,
};

/// Largest `n` at which constructive paths are cross-checked against search.
pub const SEARCH_CROSS_CHECK_MAX: usize = 6;

/// Largest `n` at which `MP(T_n, F)` is searched for every intersection `F`.
pub const FIXED_SET_SEARCH_MAX: usize = 7;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    Crossing,
    Theorem1,
    Theorem2,
    Theorem3,
    Fig3,
    All,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Crossing => "crossing",
            Suite::Theorem1 => "theorem1",
            Suite::Theorem2 => "theorem2",
            Suite::Theorem3 => "theorem3",
            Suite::Fig3 => "fig3",
            Suite::All => "all",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub n: usize,
    pub passed: bool,
    pub counts: BTreeMap<String, u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl Check {
    fn new(name: &str, n: usize) -> Self {
        Check {
            name: name.to_string(),
            n,
            passed: true,
            counts: BTreeMap::new(),
            detail: None,
        }
    }

    fn count(&mut self, key: &str, value: usize) {
        self.counts.insert(key.to_string(), value as u64);
    }

    /// Records the first failure only.
    fn fail(&mut self, detail: String) {
        if self.passed {
            self.detail = Some(detail);
        }
        self.passed = false;
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub n_max: usize,
    pub passed: bool,
    pub checks: Vec<Check>,
}

impl VerificationReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }
}

/// Runs `suite` for every applicable `n <= n_max`.
pub fn run(suite: Suite, n_max: usize, limits: &Limits) -> Result<VerificationReport, Error> {
    let wants = |s: Suite| suite == s || suite == Suite::All;
    let largest_even = n_max - n_max % 2;
    if wants(Suite::Crossing) && n_max > MAX_VERTICES {
        return Err(Error::LimitExceeded { n: n_max, limit: MAX_VERTICES });
    }
    if wants(Suite::Theorem1) || wants(Suite::Theorem3) {
        limits.check_matchings(largest_even)?;
    }
    if wants(Suite::Theorem2) {
        limits.check_max_plane(n_max)?;
    }
    if wants(Suite::Theorem3) || wants(Suite::Fig3) {
        limits.check_max_plane(largest_even)?;
    }

    let mut checks = Vec::new();
    if wants(Suite::Crossing) {
        checks.extend((2..=n_max).map(crossing));
    }
    if wants(Suite::Theorem1) {
        for n in (2..=n_max).step_by(2) {
            checks.push(theorem1(n, limits)?);
        }
    }
    if wants(Suite::Theorem2) {
        for n in 2..=n_max {
            checks.extend(theorem2(n, limits)?);
        }
    }
    if wants(Suite::Theorem3) {
        for n in (2..=n_max).step_by(2) {
            checks.extend(theorem3(n, limits)?);
        }
    }
    if wants(Suite::Fig3) {
        for n in (6..=n_max).step_by(2) {
            checks.push(fig3(n, limits)?);
        }
    }
    Ok(VerificationReport {
        suite: suite.name().to_string(),
        n_max,
        passed: checks.iter().all(|c| c.passed),
        checks,
    })
}

/// Symmetry, shared-endpoint non-crossing, and interval containment over all
/// ordered edge pairs of `T_n`.
pub fn crossing(n: usize) -> Check {
    let mut check = Check::new("crossing", n);
    let edges: Vec<Edge> = EdgeSet::complete(n).expect("n in range").iter().collect();
    let mut pairs = 0;
    let mut crossing_pairs = 0;
    for &e in &edges {
        for &f in &edges {
            pairs += 1;
            let c = crosses(e, f);
            crossing_pairs += usize::from(c);
            let inside = |a: Edge, b: Edge| a.lo() < b.lo() && b.hi() < a.hi();
            if c != crosses(f, e) {
                check.fail(format!("asymmetric on {e} {f}"));
            }
            if c && e.shares_endpoint(f) {
                check.fail(format!("{e} and {f} share an endpoint yet cross"));
            }
            if c != (inside(e, f) || inside(f, e)) {
                check.fail(format!("{e} {f} disagree with interval containment"));
            }
        }
    }
    let tg = TwistedGraph::new(n).expect("n in range");
    let star = EdgeSet::from_pairs(n, (2..=n).map(|j| (1, j))).expect("valid");
    let path = EdgeSet::from_pairs(n, (1..n).map(|i| (i, i + 1))).expect("valid");
    if !tg.is_plane(&star) || !tg.is_plane(&path) {
        check.fail("star or path at v1 is not plane".into());
    }
    check.count("ordered_pairs", pairs);
    check.count("crossing_pairs", crossing_pairs);
    check
}

/// The matching graph is connected, and a search path between every ordered
/// pair of plane perfect matchings has only adjacent consecutive matchings.
pub fn theorem1(n: usize, limits: &Limits) -> Result<Check, Error> {
    let tg = TwistedGraph::new(n)?;
    let mg = tg.build_matching_graph(limits)?;
    let mut check = Check::new("matching_graph_connected", n);
    check.count("nodes", mg.nodes().len());
    check.count("links", mg.links().len());
    if !mg.is_connected()? {
        check.fail("matching graph is disconnected".into());
    }
    let nodes = mg.nodes();
    let outcomes: Vec<Result<usize, String>> = nodes
        .par_iter()
        .flat_map_iter(|l| {
            let mg = &mg;
            nodes.iter().map(move |m| {
                let path = mg.matching_path(l, m).map_err(|e| format!("{l} -> {m}: {e}"))?;
                for w in path.windows(2) {
                    if !twisted_core::matching::matchings_adjacent(&w[0], &w[1]).unwrap_or(false) {
                        return Err(format!("{} and {} are not adjacent", w[0], w[1]));
                    }
                }
                Ok(path.len() - 1)
            })
        })
        .collect();
    let mut longest = 0;
    for outcome in &outcomes {
        match outcome {
            Ok(len) => longest = longest.max(*len),
            Err(e) => check.fail(e.clone()),
        }
    }
    check.count("paths", outcomes.len());
    check.count("longest_path", longest);
    Ok(check)
}

fn validate_path(tg: &TwistedGraph, path: &FlipPath, from: &MaxPlaneSubgraph, to: &MaxPlaneSubgraph) -> Result<(), String> {
    path.validate(tg).map_err(|e| e.to_string())?;
    if path.start() != from || path.end() != to {
        return Err("path endpoints differ from the requested subgraphs".into());
    }
    Ok(())
}

/// Constructive paths under `F = E(R) ∩ E(Q)` for every ordered pair, with
/// search cross-checks at small `n`.
pub fn theorem2(n: usize, limits: &Limits) -> Result<Vec<Check>, Error> {
    let tg = TwistedGraph::new(n)?;
    let all = tg.enumerate_maximal_plane(limits)?;
    let mut constructive = Check::new("fixed_edge_flip_path", n);
    constructive.count("subgraphs", all.len());
    let sizes: Vec<usize> = all.iter().map(|g| g.edges().len()).collect();
    constructive.count("edges_min", sizes.iter().copied().min().unwrap_or(0));
    constructive.count("edges_max", sizes.iter().copied().max().unwrap_or(0));

    let cross_check = n <= SEARCH_CROSS_CHECK_MAX;
    let outcomes: Vec<Result<usize, String>> = all
        .par_iter()
        .flat_map_iter(|r| {
            let (tg, all) = (&tg, &all);
            all.iter().map(move |q| {
                let fixed = r.edges().intersection(q.edges());
                let path = fixed_edge_flip_path(tg, r, q, &fixed, PathMode::Strict)
                    .map_err(|e| format!("{r} -> {q}: {e}"))?;
                validate_path(tg, &path, r, q).map_err(|e| format!("{r} -> {q}: {e}"))?;
                if cross_check {
                    let nodes = all.iter().filter(|g| fixed.is_subset(g.edges())).copied().collect();
                    let graph = FlipGraph::from_nodes(tg, fixed, nodes);
                    if graph.bfs_path(r, q).map_err(|e| e.to_string())?.is_none() {
                        return Err(format!("{r} -> {q}: search finds no path"));
                    }
                }
                Ok(path.len())
            })
        })
        .collect();
    let mut longest = 0;
    let mut violations = 0;
    for outcome in &outcomes {
        match outcome {
            Ok(len) => longest = longest.max(*len),
            Err(e) => {
                violations += 1;
                constructive.fail(e.clone());
            }
        }
    }
    constructive.count("ordered_pairs", outcomes.len());
    constructive.count("failures", violations);
    constructive.count("longest_path", longest);
    if cross_check {
        constructive.count("search_cross_checks", outcomes.len());
    }
    let mut checks = vec![constructive];

    if n <= FIXED_SET_SEARCH_MAX {
        let mut fixed_sets: Vec<EdgeSet> = all
            .iter()
            .flat_map(|r| all.iter().map(move |q| r.edges().intersection(q.edges())))
            .collect();
        fixed_sets.sort_unstable();
        fixed_sets.dedup();
        let mut search = Check::new("fixed_set_graph_connected", n);
        search.count("fixed_sets", fixed_sets.len());
        let disconnected: Vec<String> = fixed_sets
            .par_iter()
            .filter_map(|fixed| {
                let nodes = all.iter().filter(|g| fixed.is_subset(g.edges())).copied().collect();
                let graph = FlipGraph::from_nodes(&tg, *fixed, nodes);
                match graph.is_connected() {
                    Ok(true) => None,
                    Ok(false) => Some(format!("MP(T_{n}, {fixed}) is disconnected")),
                    Err(e) => Some(format!("MP(T_{n}, {fixed}): {e}")),
                }
            })
            .collect();
        for d in disconnected {
            search.fail(d);
        }
        checks.push(search);
    }
    Ok(checks)
}

/// Matching-preserving paths for every ordered pair of matching-containing
/// subgraphs, plus connectivity of the induced subgraph by search.
pub fn theorem3(n: usize, limits: &Limits) -> Result<Vec<Check>, Error> {
    let tg = TwistedGraph::new(n)?;
    let mg = tg.build_matching_graph(limits)?;
    let with_matching: Vec<MaxPlaneSubgraph> = tg
        .enumerate_maximal_plane(limits)?
        .into_iter()
        .filter(|g| tg.has_perfect_matching(g))
        .collect();

    let mut constructive = Check::new("matching_preserving_path", n);
    constructive.count("subgraphs_with_matching", with_matching.len());
    let outcomes: Vec<Result<usize, String>> = with_matching
        .par_iter()
        .flat_map_iter(|s| {
            let (tg, mg, nodes) = (&tg, &mg, &with_matching);
            nodes.iter().map(move |r| {
                let path = matching_preserving_path(tg, mg, s, r, PathMode::Strict)
                    .map_err(|e| format!("{s} -> {r}: {e}"))?;
                validate_path(tg, &path, s, r).map_err(|e| format!("{s} -> {r}: {e}"))?;
                if let Some(g) = path.nodes.iter().find(|g| !tg.has_perfect_matching(g)) {
                    return Err(format!("{s} -> {r}: node {g} has no perfect matching"));
                }
                Ok(path.len())
            })
        })
        .collect();
    let mut longest = 0;
    for outcome in &outcomes {
        match outcome {
            Ok(len) => longest = longest.max(*len),
            Err(e) => constructive.fail(e.clone()),
        }
    }
    constructive.count("ordered_pairs", outcomes.len());
    constructive.count("longest_path", longest);

    let mut search = Check::new("matching_subgraph_graph_connected", n);
    let induced = FlipGraph::from_nodes(&tg, EdgeSet::new(n)?, with_matching);
    search.count("nodes", induced.nodes().len());
    search.count("links", induced.links().len());
    match induced.is_connected() {
        Ok(true) => {}
        Ok(false) => search.fail("induced subgraph is disconnected".into()),
        Err(e) => search.fail(e.to_string()),
    }
    Ok(vec![constructive, search])
}

/// Some maximal plane subgraph of `T_n` has no perfect matching.
pub fn fig3(n: usize, limits: &Limits) -> Result<Check, Error> {
    let tg = TwistedGraph::new(n)?;
    let all = tg.enumerate_maximal_plane(limits)?;
    let witnesses: Vec<_> = all.iter().filter(|g| !tg.has_perfect_matching(g)).collect();
    let mut check = Check::new("subgraph_without_perfect_matching", n);
    check.count("subgraphs", all.len());
    check.count("witnesses", witnesses.len());
    match witnesses.first() {
        Some(w) => check.detail = Some(format!("first witness {w}")),
        None => check.fail("every maximal plane subgraph has a perfect matching".into()),
    }
    Ok(check)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_suites_pass() {
        let limits = Limits::default();
        for suite in [Suite::Crossing, Suite::Theorem1, Suite::Theorem2, Suite::Theorem3, Suite::Fig3] {
            let report = run(suite, 5, &limits).unwrap();
            assert!(report.passed, "{}", report.to_json());
        }
    }

    #[test]
    fn limits_are_enforced() {
        let limits = Limits::default();
        assert_eq!(
            run(Suite::Theorem2, 10, &limits).unwrap_err(),
            Error::LimitExceeded { n: 10, limit: 9 }
        );
        assert_eq!(
            run(Suite::Crossing, 17, &limits).unwrap_err(),
            Error::LimitExceeded { n: 17, limit: MAX_VERTICES }
        );
    }

    #[test]
    fn fig3_witness_at_six() {
        let check = fig3(6, &Limits::default()).unwrap();
        assert!(check.passed);
        assert!(check.counts["witnesses"] >= 1);
    }

    #[test]
    fn failures_keep_the_first_detail() {
        let mut check = Check::new("x", 1);
        check.fail("first".into());
        check.fail("second".into());
        assert!(!check.passed);
        assert_eq!(check.detail.as_deref(), Some("first"));
    }
}
