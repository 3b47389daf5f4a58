//! Strong trail orientations of undirected and mixed multigraphs.

pub mod bench;
pub mod connectivity;
pub mod error;
pub mod graph;
pub mod instance;
pub mod io;
pub mod linear;
pub mod mixed;
pub mod naive;
pub mod oracle;
pub mod trails;

pub use error::{Error, Result};
pub use graph::{Direction, EdgeId, EdgeRecord, EdgeState, MultiGraph, Orientation, VertexId};
pub use instance::{Instance, Solution};
pub use trails::{TrailPartition, Walk};
