//! Graph compaction that preserves 3-connectivity, decomposition trees over
//! 2-cuts, and a two disjoint rooted paths solver with checkable certificates.

pub mod compactor;
pub mod connectivity;
pub mod decomposition;
pub mod drp;
pub mod generators;
pub mod graph;
pub mod oracles;

pub use graph::{Graph, Vertex};
