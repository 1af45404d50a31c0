//! Combinatorics of the twisted complete graph `T_n`.
//!
//! In `T_n` the vertices are `v_1, ..., v_n` and two edges cross exactly when
//! the index interval of one strictly contains the index interval of the
//! other. This crate provides:
//!
//! * edges, edge sets and the crossing predicate ([`Edge`], [`EdgeSet`], [`crosses`]),
//! * planarity, maximality, greedy completion and exhaustive enumeration of
//!   maximal plane subgraphs ([`TwistedGraph`], [`MaxPlaneSubgraph`]),
//! * the edge-exchange flip graph `MP(T_n, F)` with search-based paths ([`flip`]),
//! * plane perfect matchings and the matching graph of `T_2m` ([`matching`]),
//! * constructive flip paths: under a fixed edge set, and through
//!   matching-containing subgraphs ([`constructive`]).
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]
#![warn(missing_debug_implementations, rust_2018_idioms)]

extern crate alloc;

pub mod constructive;
mod edge;
mod edge_set;
mod enumerate;
mod error;
pub mod flip;
pub mod matching;
mod twisted;

pub use constructive::{
    degree_signature, fixed_edge_flip_path, matching_preserving_path, pair_measure,
    ClaimViolation, DegreeSignature, PairMeasure, PathMode, ViolationKind,
};
pub use edge::{crosses, Edge, Vertex};
pub use edge_set::{EdgeSet, Edges};
pub use enumerate::enumerate_maximal_plane;
pub use error::{Error, Result};
pub use flip::{ExchangeMove, FlipGraph, FlipPath, Link};
pub use matching::{MatchingGraph, PlanePerfectMatching};
pub use twisted::{Limits, MaxPlaneSubgraph, TwistedGraph, MAX_VERTICES};
