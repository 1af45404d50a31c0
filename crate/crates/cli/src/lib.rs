//! File formats, verification suites and command plumbing for the `twisted`
//! command-line tool.

pub mod format;
pub mod verify;
