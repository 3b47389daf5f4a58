use thiserror::Error;

use crate::graph::{EdgeId, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range (graph has {vertex_count} vertices)")]
    InvalidVertex { vertex: VertexId, vertex_count: usize },

    #[error("edge {0} does not exist or has been deleted")]
    InvalidEdge(EdgeId),

    #[error("edge {0} is not undirected and cannot be assigned a direction")]
    NotUndirected(EdgeId),

    #[error("invalid trail partition: {0}")]
    InvalidTrails(String),

    #[error("graph is not 2-edge connected")]
    NotTwoEdgeConnected,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("instance has {trails} trails, above the enumeration cap of {cap}")]
    TrailCap { trails: usize, cap: usize },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
