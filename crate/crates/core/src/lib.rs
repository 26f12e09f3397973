//! Weak degeneracy, strictly f-degenerate transversals and discharging on plane graphs.

pub mod blocks;
pub mod graph;
pub mod io;
pub mod plane;
pub mod weak;

pub use graph::{build_graph, Graph, GraphError, VertexId};
pub use plane::{FaceId, FacialWalk, PlaneGraph};
pub mod class;
pub mod covers;
pub mod structure;
pub mod corpus;
pub mod discharging;
pub mod reducer;
