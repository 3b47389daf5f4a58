use crate::error::Result;
use crate::graph::{MultiGraph, Orientation};
use crate::trails::TrailPartition;

/// A graph together with a trail partition of its undirected edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    pub graph: MultiGraph,
    pub trails: TrailPartition,
}

impl Instance {
    pub fn new(graph: MultiGraph, trails: TrailPartition) -> Result<Self> {
        trails.check(&graph)?;
        Ok(Instance { graph, trails })
    }

    /// Every undirected edge in its own trail.
    pub fn with_singleton_trails(graph: MultiGraph) -> Self {
        let trails = TrailPartition::singletons(&graph);
        Instance { graph, trails }
    }
}

/// Outcome of an orientation algorithm.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Solution {
    Feasible(Orientation),
    Infeasible,
}

impl Solution {
    pub fn is_feasible(&self) -> bool {
        matches!(self, Solution::Feasible(_))
    }

    pub fn orientation(&self) -> Option<&Orientation> {
        match self {
            Solution::Feasible(o) => Some(o),
            Solution::Infeasible => None,
        }
    }

    pub fn into_orientation(self) -> Option<Orientation> {
        match self {
            Solution::Feasible(o) => Some(o),
            Solution::Infeasible => None,
        }
    }
}
