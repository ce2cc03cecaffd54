//! Watching systems in graphs.
//!
//! A watcher is a pair `(location, zone)` whose zone lies inside the radius-r
//! ball of its location; a watching system gives every vertex a nonempty,
//! unique label (the set of watchers covering it). This crate provides the
//! data model and verifier, an exact branch-and-bound solver for minimum
//! systems (any radius, any set-identification level), constructive
//! algorithms with proven size guarantees, and the polynomial reduction from
//! vertex cover, together with a CLI exposing all of it.

pub mod bits;
pub mod cli;
pub mod construct;
pub mod enumerate;
pub mod graph;
pub mod reduce;
pub mod solver;
pub mod watch;

pub use bits::{BitSet, Label, VertexSet};
pub use graph::{Graph, GraphError, VertexId};
pub use watch::{VerificationReport, Violation, Watcher, WatchingSystem};
