//! Mixed multigraph storage shared by every algorithm in the crate.
//!
//! Edges keep their id for the lifetime of a graph: deleting an edge clears its
//! `alive` flag and unlinks it from the incidence lists, but never compacts the
//! edge array. Parallel edges and self-loops are ordinary edges.

use std::fmt;

use smallvec::SmallVec;

use crate::error::{Error, Result};

pub type VertexId = usize;
pub type EdgeId = usize;

/// Direction of an edge relative to its stored `(tail, head)` order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Direction {
    Forward,
    Reversed,
}

impl Direction {
    pub fn from_forward(forward: bool) -> Self {
        if forward {
            Direction::Forward
        } else {
            Direction::Reversed
        }
    }

    pub fn is_forward(self) -> bool {
        self == Direction::Forward
    }

    pub fn flip(self) -> Self {
        match self {
            Direction::Forward => Direction::Reversed,
            Direction::Reversed => Direction::Forward,
        }
    }

    /// Flips `self` when `flip` is set.
    pub fn flipped_if(self, flip: bool) -> Self {
        if flip {
            self.flip()
        } else {
            self
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EdgeState {
    Undirected,
    /// Directed `tail -> head` as part of the input. Never reoriented.
    FixedForward,
    OrientedForward,
    OrientedReversed,
}

impl EdgeState {
    pub fn is_undirected(self) -> bool {
        self == EdgeState::Undirected
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EdgeRecord {
    pub tail: VertexId,
    pub head: VertexId,
    pub state: EdgeState,
    pub alive: bool,
}

impl EdgeRecord {
    pub fn is_loop(&self) -> bool {
        self.tail == self.head
    }

    /// The endpoint opposite to `v`. For a self-loop this is `v` itself.
    pub fn other(&self, v: VertexId) -> VertexId {
        if self.tail == v {
            self.head
        } else {
            self.tail
        }
    }

    /// `(from, to)` if the edge is directed, `None` if it is undirected.
    pub fn arc(&self) -> Option<(VertexId, VertexId)> {
        match self.state {
            EdgeState::Undirected => None,
            EdgeState::FixedForward | EdgeState::OrientedForward => Some((self.tail, self.head)),
            EdgeState::OrientedReversed => Some((self.head, self.tail)),
        }
    }

    /// Whether the edge may be traversed from `from` to its other endpoint.
    pub fn traversable_from(&self, from: VertexId) -> bool {
        match self.arc() {
            None => true,
            Some((t, _)) => t == from,
        }
    }

    /// `(from, to)` once the edge is given direction `dir`.
    pub fn endpoints_along(&self, dir: Direction) -> (VertexId, VertexId) {
        match dir {
            Direction::Forward => (self.tail, self.head),
            Direction::Reversed => (self.head, self.tail),
        }
    }
}

/// One end of an edge as seen from a vertex. `slot` is 0 for the tail end and
/// 1 for the head end, so a self-loop contributes two incidences. Packed into
/// one word to keep adjacency lists small.
#[derive(Clone, Copy, PartialEq, Eq)]
pub struct Incidence(usize);

impl Incidence {
    pub fn new(edge: EdgeId, slot: u8) -> Self {
        Incidence(edge << 1 | usize::from(slot & 1))
    }

    pub fn edge(self) -> EdgeId {
        self.0 >> 1
    }

    pub fn slot(self) -> u8 {
        (self.0 & 1) as u8
    }
}

impl fmt::Debug for Incidence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Incidence")
            .field("edge", &self.edge())
            .field("slot", &self.slot())
            .finish()
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MultiGraph {
    vertex_count: usize,
    edges: Vec<EdgeRecord>,
    adjacency: Vec<SmallVec<[Incidence; 3]>>,
}

impl MultiGraph {
    pub fn new(vertex_count: usize) -> Self {
        MultiGraph {
            vertex_count,
            edges: Vec::new(),
            adjacency: vec![SmallVec::new(); vertex_count],
        }
    }

    /// Undirected multigraph from an edge list.
    pub fn from_edges(vertex_count: usize, edges: &[(VertexId, VertexId)]) -> Result<Self> {
        let mut g = MultiGraph::new(vertex_count);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    /// Number of edge slots, including deleted edges.
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn live_edge_count(&self) -> usize {
        self.edges.iter().filter(|e| e.alive).count()
    }

    pub fn add_vertex(&mut self) -> VertexId {
        self.adjacency.push(SmallVec::new());
        self.vertex_count += 1;
        self.vertex_count - 1
    }

    fn check_vertex(&self, v: VertexId) -> Result<()> {
        if v < self.vertex_count {
            Ok(())
        } else {
            Err(Error::InvalidVertex {
                vertex: v,
                vertex_count: self.vertex_count,
            })
        }
    }

    fn push_edge(&mut self, tail: VertexId, head: VertexId, state: EdgeState) -> Result<EdgeId> {
        self.check_vertex(tail)?;
        self.check_vertex(head)?;
        let id = self.edges.len();
        self.edges.push(EdgeRecord {
            tail,
            head,
            state,
            alive: true,
        });
        self.adjacency[tail].push(Incidence::new(id, 0));
        self.adjacency[head].push(Incidence::new(id, 1));
        Ok(id)
    }

    pub fn add_edge(&mut self, u: VertexId, v: VertexId) -> Result<EdgeId> {
        self.push_edge(u, v, EdgeState::Undirected)
    }

    /// Adds an input arc `tail -> head` that no algorithm may reverse.
    pub fn add_fixed_edge(&mut self, tail: VertexId, head: VertexId) -> Result<EdgeId> {
        self.push_edge(tail, head, EdgeState::FixedForward)
    }

    pub fn edge(&self, e: EdgeId) -> &EdgeRecord {
        &self.edges[e]
    }

    pub fn get_edge(&self, e: EdgeId) -> Option<&EdgeRecord> {
        self.edges.get(e).filter(|r| r.alive)
    }

    pub fn is_live(&self, e: EdgeId) -> bool {
        self.edges.get(e).is_some_and(|r| r.alive)
    }

    /// All edge records indexed by id, deleted ones included.
    pub fn edge_records(&self) -> &[EdgeRecord] {
        &self.edges
    }

    /// Live edges with their ids, in id order.
    pub fn edges(&self) -> impl Iterator<Item = (EdgeId, &EdgeRecord)> + '_ {
        self.edges.iter().enumerate().filter(|(_, r)| r.alive)
    }

    /// Live undirected edge ids, in id order.
    pub fn undirected_edges(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.edges()
            .filter(|(_, r)| r.state.is_undirected())
            .map(|(id, _)| id)
    }

    pub fn incident(&self, v: VertexId) -> &[Incidence] {
        &self.adjacency[v]
    }

    /// Degree counting a self-loop twice.
    pub fn degree(&self, v: VertexId) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_directed_edges(&self) -> bool {
        self.edges().any(|(_, r)| !r.state.is_undirected())
    }

    pub fn delete_edge(&mut self, e: EdgeId) -> Result<()> {
        let rec = *self.get_edge(e).ok_or(Error::InvalidEdge(e))?;
        self.edges[e].alive = false;
        self.adjacency[rec.tail].retain(|inc| inc.edge() != e);
        if !rec.is_loop() {
            self.adjacency[rec.head].retain(|inc| inc.edge() != e);
        }
        Ok(())
    }

    pub(crate) fn set_state(&mut self, e: EdgeId, state: EdgeState) {
        self.edges[e].state = state;
    }

    /// Orients an undirected edge in place.
    pub fn orient_edge(&mut self, e: EdgeId, dir: Direction) -> Result<()> {
        let rec = self.get_edge(e).ok_or(Error::InvalidEdge(e))?;
        if !rec.state.is_undirected() {
            return Err(Error::NotUndirected(e));
        }
        self.edges[e].state = match dir {
            Direction::Forward => EdgeState::OrientedForward,
            Direction::Reversed => EdgeState::OrientedReversed,
        };
        Ok(())
    }

    /// Copy of the graph with every assigned edge oriented. Fails if the
    /// assignment touches a fixed, already oriented or deleted edge.
    pub fn apply_orientation(&self, o: &Orientation) -> Result<MultiGraph> {
        let mut g = self.clone();
        for (e, dir) in o.iter() {
            g.orient_edge(e, dir)?;
        }
        Ok(g)
    }

    /// Collapses `block` into one vertex.
    ///
    /// Returns the quotient graph and the old-to-new vertex map. Surviving
    /// edges keep their ids; edges with both endpoints in `block` are deleted
    /// in the quotient.
    pub fn contract(&self, block: &[VertexId]) -> Result<(MultiGraph, Vec<VertexId>)> {
        if block.is_empty() {
            return Err(Error::Precondition("cannot contract an empty vertex set".into()));
        }
        let mut in_block = vec![false; self.vertex_count];
        for &v in block {
            self.check_vertex(v)?;
            in_block[v] = true;
        }
        let mut map = vec![usize::MAX; self.vertex_count];
        let mut next = 0;
        let mut block_id = None;
        for v in 0..self.vertex_count {
            if in_block[v] {
                let id = *block_id.get_or_insert_with(|| {
                    next += 1;
                    next - 1
                });
                map[v] = id;
            } else {
                map[v] = next;
                next += 1;
            }
        }
        let mut q = MultiGraph::new(next);
        for rec in &self.edges {
            let (t, h) = (map[rec.tail], map[rec.head]);
            let dropped = in_block[rec.tail] && in_block[rec.head];
            let alive = rec.alive && !dropped;
            let id = q.edges.len();
            q.edges.push(EdgeRecord {
                tail: t,
                head: h,
                state: rec.state,
                alive,
            });
            if alive {
                q.adjacency[t].push(Incidence::new(id, 0));
                q.adjacency[h].push(Incidence::new(id, 1));
            }
        }
        Ok((q, map))
    }
}

/// Per-edge direction assignment, indexed by edge id. May be partial.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Orientation {
    assignment: Vec<Option<Direction>>,
}

impl Orientation {
    pub fn new() -> Self {
        Orientation::default()
    }

    pub fn with_capacity(edge_count: usize) -> Self {
        Orientation {
            assignment: vec![None; edge_count],
        }
    }

    pub fn get(&self, e: EdgeId) -> Option<Direction> {
        self.assignment.get(e).copied().flatten()
    }

    pub fn set(&mut self, e: EdgeId, dir: Direction) {
        if e >= self.assignment.len() {
            self.assignment.resize(e + 1, None);
        }
        self.assignment[e] = Some(dir);
    }

    pub fn clear(&mut self, e: EdgeId) {
        if let Some(slot) = self.assignment.get_mut(e) {
            *slot = None;
        }
    }

    /// Assigned `(edge, direction)` pairs in edge order.
    pub fn iter(&self) -> impl Iterator<Item = (EdgeId, Direction)> + '_ {
        self.assignment
            .iter()
            .enumerate()
            .filter_map(|(e, d)| d.map(|d| (e, d)))
    }

    pub fn assigned_count(&self) -> usize {
        self.assignment.iter().filter(|d| d.is_some()).count()
    }

    pub fn is_empty(&self) -> bool {
        self.assigned_count() == 0
    }

    /// Every assigned direction swapped.
    pub fn reverse_all(&self) -> Orientation {
        Orientation {
            assignment: self.assignment.iter().map(|d| d.map(Direction::flip)).collect(),
        }
    }
}

impl FromIterator<(EdgeId, Direction)> for Orientation {
    fn from_iter<I: IntoIterator<Item = (EdgeId, Direction)>>(iter: I) -> Self {
        let mut o = Orientation::new();
        for (e, d) in iter {
            o.set(e, d);
        }
        o
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle() -> MultiGraph {
        MultiGraph::from_edges(3, &[(0, 1), (1, 2), (2, 0)]).unwrap()
    }

    #[test]
    fn contract_one_triangle_edge_leaves_parallel_pair() {
        let g = triangle();
        let (q, map) = g.contract(&[0, 1]).unwrap();
        assert_eq!(q.vertex_count(), 2);
        assert_eq!(map, vec![0, 0, 1]);
        assert!(!q.is_live(0));
        assert_eq!(q.live_edge_count(), 2);
        let e1 = q.edge(1);
        let e2 = q.edge(2);
        assert_eq!((e1.tail, e1.head), (0, 1));
        assert_eq!((e2.tail, e2.head), (1, 0));
    }

    #[test]
    fn contract_everything() {
        let g = triangle();
        let (q, map) = g.contract(&[0, 1, 2]).unwrap();
        assert_eq!(q.vertex_count(), 1);
        assert_eq!(map, vec![0, 0, 0]);
        assert_eq!(q.live_edge_count(), 0);
        assert_eq!(q.degree(0), 0);
    }

    #[test]
    fn contract_empty_block_is_rejected() {
        assert!(matches!(triangle().contract(&[]), Err(Error::Precondition(_))));
    }

    #[test]
    fn contract_keeps_edge_ids_and_preexisting_loops() {
        let mut g = MultiGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 3)]).unwrap();
        g.delete_edge(0).unwrap();
        let (q, map) = g.contract(&[1, 2]).unwrap();
        assert_eq!(map, vec![0, 1, 1, 2]);
        assert!(!q.is_live(0));
        assert!(!q.is_live(1));
        assert!(q.is_live(2));
        assert!(q.edge(3).is_loop());
        assert_eq!(q.degree(2), 3);
    }

    #[test]
    fn apply_orientation_directs_triangle() {
        let g = triangle();
        let o: Orientation = (0..3).map(|e| (e, Direction::Forward)).collect();
        let d = g.apply_orientation(&o).unwrap();
        for (_, r) in d.edges() {
            assert_eq!(r.state, EdgeState::OrientedForward);
        }
        assert_eq!(g.apply_orientation(&Orientation::new()).unwrap(), g);
    }

    #[test]
    fn apply_orientation_rejects_fixed_and_dead_edges() {
        let mut g = MultiGraph::new(2);
        g.add_edge(0, 1).unwrap();
        g.add_fixed_edge(1, 0).unwrap();
        g.add_edge(0, 1).unwrap();
        g.delete_edge(2).unwrap();
        let fixed: Orientation = [(1, Direction::Forward)].into_iter().collect();
        assert_eq!(g.apply_orientation(&fixed), Err(Error::NotUndirected(1)));
        let dead: Orientation = [(2, Direction::Forward)].into_iter().collect();
        assert_eq!(g.apply_orientation(&dead), Err(Error::InvalidEdge(2)));
    }

    #[test]
    fn reverse_all_swaps() {
        let o: Orientation = [(0, Direction::Forward), (1, Direction::Reversed)]
            .into_iter()
            .collect();
        let r = o.reverse_all();
        assert_eq!(r.get(0), Some(Direction::Reversed));
        assert_eq!(r.get(1), Some(Direction::Forward));
        assert_eq!(r.reverse_all(), o);
        assert!(Orientation::new().reverse_all().is_empty());
    }

    #[test]
    fn delete_edge_cleans_incidences() {
        let mut g = MultiGraph::from_edges(2, &[(0, 1), (0, 1), (1, 1)]).unwrap();
        g.delete_edge(2).unwrap();
        g.delete_edge(0).unwrap();
        assert_eq!(g.degree(0), 1);
        assert_eq!(g.degree(1), 1);
        assert_eq!(g.delete_edge(0), Err(Error::InvalidEdge(0)));
    }
}
