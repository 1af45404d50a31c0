use alloc::boxed::Box;
use core::fmt;

use crate::constructive::ClaimViolation;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Both endpoints of an edge are the same vertex.
    Loop { vertex: usize },
    VertexOutOfRange { vertex: usize, n: usize },
    /// `n` is below 2 or above what an [`EdgeSet`](crate::EdgeSet) can hold.
    InvalidVertexCount { n: usize },
    /// Enumeration refused because `n` exceeds the configured limit.
    LimitExceeded { n: usize, limit: usize },
    NotPlane,
    NotMaximal,
    OddVertexCount { n: usize },
    MismatchedAmbient { left: usize, right: usize },
    NotPerfectMatching,
    UnknownNode,
    EmptyGraph,
    /// Two matchings in the same matching graph are not joined by any path.
    NoPath,
    /// The fixed edge set is not contained in both endpoints.
    FixedSetViolation,
    /// A maximal plane subgraph without any perfect matching was given where
    /// one was required.
    NoPerfectMatching,
    /// A constructed exchange step failed validation.
    ClaimViolation(Box<ClaimViolation>),
    /// A path does not satisfy its structural invariants.
    InvalidPath { step: usize },
}

impl Error {
    /// Stable machine-readable identifier.
    pub fn code(&self) -> &'static str {
        match self {
            Error::Loop { .. } => "Loop",
            Error::VertexOutOfRange { .. } => "VertexOutOfRange",
            Error::InvalidVertexCount { .. } => "InvalidVertexCount",
            Error::LimitExceeded { .. } => "LimitExceeded",
            Error::NotPlane => "NotPlane",
            Error::NotMaximal => "NotMaximal",
            Error::OddVertexCount { .. } => "OddVertexCount",
            Error::MismatchedAmbient { .. } => "MismatchedAmbient",
            Error::NotPerfectMatching => "NotPerfectMatching",
            Error::UnknownNode => "UnknownNode",
            Error::EmptyGraph => "EmptyGraph",
            Error::NoPath => "NoPath",
            Error::FixedSetViolation => "FixedSetViolation",
            Error::NoPerfectMatching => "NoPerfectMatching",
            Error::ClaimViolation(_) => "ClaimViolation",
            Error::InvalidPath { .. } => "InvalidPath",
        }
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Loop { vertex } => write!(f, "edge has both endpoints at v{vertex}"),
            Error::VertexOutOfRange { vertex, n } => {
                write!(f, "vertex {vertex} is outside 1..={n}")
            }
            Error::InvalidVertexCount { n } => write!(f, "unsupported vertex count {n}"),
            Error::LimitExceeded { n, limit } => {
                write!(f, "n = {n} exceeds the enumeration limit {limit}")
            }
            Error::NotPlane => f.write_str("edge set contains a crossing pair"),
            Error::NotMaximal => f.write_str("edge set is plane but not maximal"),
            Error::OddVertexCount { n } => write!(f, "perfect matchings need an even n, got {n}"),
            Error::MismatchedAmbient { left, right } => {
                write!(f, "ambient vertex counts differ ({left} vs {right})")
            }
            Error::NotPerfectMatching => f.write_str("edge set is not a perfect matching"),
            Error::UnknownNode => f.write_str("subgraph is not a node of the graph"),
            Error::EmptyGraph => f.write_str("graph has no nodes"),
            Error::NoPath => f.write_str("no path between the given nodes"),
            Error::FixedSetViolation => {
                f.write_str("fixed edge set is not contained in both endpoints")
            }
            Error::NoPerfectMatching => f.write_str("subgraph contains no perfect matching"),
            Error::ClaimViolation(v) => write!(f, "constructed step rejected: {v}"),
            Error::InvalidPath { step } => write!(f, "path is invalid at step {step}"),
        }
    }
}

impl core::error::Error for Error {}
