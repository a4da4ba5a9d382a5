//! Partitioning graphs into vertex-disjoint cycles that each carry at least
//! `c` chords.
//!
//! The pipeline finds `k` disjoint `c`-chorded cycles ([`packing`]) and then
//! grows them by exchange moves until they cover every vertex
//! ([`partitioner`]). [`testlab`] holds exhaustive oracles and instance
//! generators.

pub mod chorded;
pub mod error;
pub mod graph;
pub mod packing;
pub mod partitioner;
pub mod search;
pub mod testlab;

pub use chorded::{chord_count, OrientedCycle};
pub use error::{Error, Result};
pub use graph::{Graph, Sigma2, Vertex};
