//! Spanning subgraphs of regular multigraphs whose degree classes are
//! nearly balanced.

pub mod adjust;
pub mod cubic;
pub mod error;
pub mod general;
pub mod generators;
pub mod io;
pub mod irregularity;
pub mod multigraph;
pub mod oracle;
pub mod scalar;
pub mod strength;

pub use error::{Error, Result};
pub use irregularity::{AVector, BVector, Improvement, ScaledAVector, ScaledBVector, SortedC};
pub use multigraph::{CubicOpRecord, EdgeId, Multigraph, SpanningSubgraph, VertexId};
pub use scalar::Scalar;
