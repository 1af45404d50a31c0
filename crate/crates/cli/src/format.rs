//! JSON and DOT representations.
//!
//! Every edge set is written as `{"n": <int>, "edges": [[lo, hi], ...]}` with
//! 1-based, sorted edges. Graph exports share one schema:
//! `{"n", "constraint", "nodes", "links": [[a, b, move], ...]}` where `move`
//! is `{"remove": [i, j], "add": [s, t]}` for flip graphs and `null` for
//! matching graphs (whose `constraint` is also `null`).

use std::fmt::Write as _;
use std::path::Path;

use serde::{Deserialize, Serialize};
use twisted_core::{
    Edge, EdgeSet, Error as CoreError, ExchangeMove, FlipGraph, FlipPath, MatchingGraph,
};

pub type EdgePair = [usize; 2];

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Invalid(#[from] CoreError),
}

impl FormatError {
    pub fn code(&self) -> &'static str {
        match self {
            FormatError::Io { .. } => "Io",
            FormatError::Json(_) => "MalformedJson",
            FormatError::Invalid(e) => e.code(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeSetJson {
    pub n: usize,
    pub edges: Vec<EdgePair>,
}

impl From<&EdgeSet> for EdgeSetJson {
    fn from(set: &EdgeSet) -> Self {
        EdgeSetJson {
            n: set.n(),
            edges: pairs(set),
        }
    }
}

impl EdgeSetJson {
    /// Input edges may come in any order or orientation; they are normalized.
    pub fn to_edge_set(&self) -> Result<EdgeSet, CoreError> {
        EdgeSet::from_pairs(self.n, self.edges.iter().map(|&[a, b]| (a, b)))
    }
}

fn pairs(set: &EdgeSet) -> Vec<EdgePair> {
    set.iter().map(|e| [e.lo(), e.hi()]).collect()
}

fn edge(n: usize, [a, b]: EdgePair) -> Result<Edge, CoreError> {
    Edge::new(n, a, b)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MoveJson {
    pub remove: EdgePair,
    pub add: EdgePair,
}

impl From<&ExchangeMove> for MoveJson {
    fn from(mv: &ExchangeMove) -> Self {
        MoveJson {
            remove: [mv.removed.lo(), mv.removed.hi()],
            add: [mv.added.lo(), mv.added.hi()],
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub constraint: Option<Vec<EdgePair>>,
    pub nodes: Vec<EdgeSetJson>,
    pub links: Vec<(usize, usize, Option<MoveJson>)>,
}

impl From<&FlipGraph> for GraphJson {
    fn from(g: &FlipGraph) -> Self {
        GraphJson {
            n: g.n(),
            constraint: Some(pairs(g.constraint())),
            nodes: g.nodes().iter().map(|s| s.edges().into()).collect(),
            links: g
                .links()
                .iter()
                .map(|l| (l.a, l.b, Some((&l.exchange).into())))
                .collect(),
        }
    }
}

impl From<&MatchingGraph> for GraphJson {
    fn from(g: &MatchingGraph) -> Self {
        GraphJson {
            n: g.n(),
            constraint: None,
            nodes: g.nodes().iter().map(|m| m.edges().into()).collect(),
            links: g.links().iter().map(|&(a, b)| (a, b, None)).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlipPathJson {
    pub n: usize,
    pub constraint: Vec<EdgePair>,
    pub nodes: Vec<EdgeSetJson>,
    pub moves: Vec<MoveJson>,
    pub constructive: bool,
}

impl From<&FlipPath> for FlipPathJson {
    fn from(p: &FlipPath) -> Self {
        FlipPathJson {
            n: p.n,
            constraint: pairs(&p.constraint),
            nodes: p.nodes.iter().map(|g| g.edges().into()).collect(),
            moves: p.moves.iter().map(MoveJson::from).collect(),
            constructive: p.constructive,
        }
    }
}

impl FlipPathJson {
    /// Rebuilds and fully revalidates the path.
    pub fn to_path(&self) -> Result<FlipPath, CoreError> {
        let n = self.n;
        let constraint = EdgeSet::from_pairs(n, self.constraint.iter().map(|&[a, b]| (a, b)))?;
        let nodes = self
            .nodes
            .iter()
            .map(|s| {
                if s.n != n {
                    return Err(CoreError::MismatchedAmbient { left: n, right: s.n });
                }
                s.to_edge_set()
            })
            .collect::<Result<Vec<_>, _>>()?;
        let moves = self
            .moves
            .iter()
            .map(|m| {
                Ok(ExchangeMove {
                    removed: edge(n, m.remove)?,
                    added: edge(n, m.add)?,
                })
            })
            .collect::<Result<Vec<_>, CoreError>>()?;
        FlipPath::from_parts(constraint, nodes, moves, self.constructive)
    }
}

pub fn read_edge_set(path: &Path) -> Result<EdgeSet, FormatError> {
    let text = std::fs::read_to_string(path).map_err(|source| FormatError::Io {
        path: path.display().to_string(),
        source,
    })?;
    let json: EdgeSetJson = serde_json::from_str(&text)?;
    Ok(json.to_edge_set()?)
}

fn edge_key(set: &EdgeSet) -> String {
    set.iter()
        .map(|e| format!("{}-{}", e.lo(), e.hi()))
        .collect::<Vec<_>>()
        .join(" ")
}

/// One undirected graph per edge set, drawn on `v1 .. vn`.
pub fn edge_sets_dot<'a, I>(name: &str, sets: I) -> String
where
    I: IntoIterator<Item = &'a EdgeSet>,
{
    let mut out = String::new();
    for (i, set) in sets.into_iter().enumerate() {
        writeln!(out, "graph {name}_{i} {{").unwrap();
        for v in 1..=set.n() {
            writeln!(out, "  v{v};").unwrap();
        }
        for e in set {
            writeln!(out, "  v{} -- v{};", e.lo(), e.hi()).unwrap();
        }
        out.push_str("}\n");
    }
    out
}

pub fn flip_graph_dot(g: &FlipGraph) -> String {
    let mut out = String::from("graph flip_graph {\n");
    for (i, node) in g.nodes().iter().enumerate() {
        writeln!(out, "  n{i} [label=\"{}\"];", edge_key(node.edges())).unwrap();
    }
    for l in g.links() {
        writeln!(out, "  n{} -- n{} [label=\"{}\"];", l.a, l.b, l.exchange).unwrap();
    }
    out.push_str("}\n");
    out
}

pub fn matching_graph_dot(g: &MatchingGraph) -> String {
    let mut out = String::from("graph matching_graph {\n");
    for (i, node) in g.nodes().iter().enumerate() {
        writeln!(out, "  n{i} [label=\"{}\"];", edge_key(node.edges())).unwrap();
    }
    for &(a, b) in g.links() {
        writeln!(out, "  n{a} -- n{b};").unwrap();
    }
    out.push_str("}\n");
    out
}
