//! Replacing every vertex by a cycle so that the graph becomes cubic.

use crate::connectivity::is_two_edge_connected;
use crate::error::{Error, Result};
use crate::graph::{EdgeId, EdgeRecord, MultiGraph, Orientation, VertexId};
use crate::trails::{TrailPartition, Walk};

pub(crate) const NONE: usize = usize::MAX;

/// How the cubic graph relates to the graph it was built from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionMap {
    /// Reduced edge -> original edge; `None` for cycle edges.
    pub orig_edge_of: Vec<Option<EdgeId>>,
    /// Original edge -> reduced edge; `None` for dead original edges.
    pub reduced_edge_of: Vec<Option<EdgeId>>,
    /// Original vertex -> its cycle of reduced vertices, in cycle order.
    pub cycle_of_vertex: Vec<Vec<VertexId>>,
    /// Reduced trail -> original trail; `None` for new length-1 trails.
    pub trail_map: Vec<Option<usize>>,
}

impl ReductionMap {
    /// Orientation of the original edges read off a reduced orientation.
    pub fn pull_back(&self, o: &Orientation) -> Orientation {
        let mut out = Orientation::with_capacity(self.reduced_edge_of.len());
        for (e, r) in self.reduced_edge_of.iter().enumerate() {
            if let Some(d) = r.and_then(|r| o.get(r)) {
                out.set(e, d);
            }
        }
        out
    }
}

/// Slot of the end at which a walk leaves `from` along `rec`.
pub(crate) fn leave_slot(rec: &EdgeRecord, from: VertexId) -> usize {
    usize::from(rec.tail != from)
}

/// Partner edge end (`2 * edge + slot`) of every edge end, given by
/// consecutive edges of the walks. Edges marked in `skip` split walks.
pub(crate) fn transitions(g: &MultiGraph, walks: &[Walk], skip: &[bool]) -> Vec<usize> {
    let mut partner = vec![NONE; 2 * g.edge_count()];
    for w in walks {
        for k in 0..w.len().saturating_sub(1) {
            let (a, b) = (w.edges[k], w.edges[k + 1]);
            if skip[a] || skip[b] {
                continue;
            }
            let arrive = 2 * a + 1 - leave_slot(g.edge(a), w.verts[k]);
            let leave = 2 * b + leave_slot(g.edge(b), w.verts[k + 1]);
            partner[arrive] = leave;
            partner[leave] = arrive;
        }
    }
    partner
}

/// Cubic reduction of a 2-edge-connected undirected multigraph.
///
/// A vertex of degree `d` becomes a `d`-cycle whose vertices each inherit one
/// edge end. Ends that follow each other on a trail sit next to each other on
/// the cycle, and the cycle edge between them joins that trail; the other
/// cycle edges become trails of their own. The result has `2m` vertices and
/// `3m` edges.
pub fn reduce_to_cubic(
    g: &MultiGraph,
    p: &TrailPartition,
) -> Result<(MultiGraph, TrailPartition, ReductionMap)> {
    p.check(g)?;
    if let Some((e, _)) = g.edges().find(|(_, r)| !r.state.is_undirected()) {
        return Err(Error::NotUndirected(e));
    }
    if !is_two_edge_connected(g) {
        return Err(Error::NotTwoEdgeConnected);
    }
    let (h, walks, map) = reduce_walks(g, &p.walks(g));
    let trails = TrailPartition::new(walks.into_iter().map(|w| w.edges).collect());
    Ok((h, trails, map))
}

pub(crate) fn reduce_walks(g: &MultiGraph, walks: &[Walk]) -> (MultiGraph, Vec<Walk>, ReductionMap) {
    let n = g.vertex_count();
    let skip = vec![false; g.edge_count()];
    let partner = transitions(g, walks, &skip);

    // cycle position of every edge end
    let mut base = vec![0usize; n + 1];
    for v in 0..n {
        base[v + 1] = base[v] + g.degree(v);
    }
    let mut vertex_of_end = vec![NONE; 2 * g.edge_count()];
    let mut cycle_of_vertex = Vec::with_capacity(n);
    for v in 0..n {
        let mut next = base[v];
        for inc in g.incident(v) {
            let end = 2 * inc.edge() + inc.slot() as usize;
            if vertex_of_end[end] != NONE {
                continue;
            }
            vertex_of_end[end] = next;
            next += 1;
            let q = partner[end];
            if q != NONE {
                vertex_of_end[q] = next;
                next += 1;
            }
        }
        debug_assert_eq!(next, base[v + 1]);
        cycle_of_vertex.push((base[v]..base[v + 1]).collect());
    }

    let mut h = MultiGraph::new(base[n]);
    let mut orig_edge_of = Vec::new();
    let mut reduced_edge_of = vec![None; g.edge_count()];
    for (e, _) in g.edges() {
        let r = h
            .add_edge(vertex_of_end[2 * e], vertex_of_end[2 * e + 1])
            .expect("reduced vertices exist");
        reduced_edge_of[e] = Some(r);
        orig_edge_of.push(Some(e));
    }
    // cycle edge j of v joins positions j and j + 1
    let mut cycle_edge_at = vec![NONE; base[n]];
    for v in 0..n {
        let d = base[v + 1] - base[v];
        for j in 0..d {
            let a = base[v] + j;
            let b = base[v] + (j + 1) % d;
            let c = h.add_edge(a, b).expect("reduced vertices exist");
            orig_edge_of.push(None);
            cycle_edge_at[a] = c;
        }
    }
    let first_cycle_edge = g.live_edge_count();
    let mut used = vec![false; h.edge_count() - first_cycle_edge];

    let mut out_walks = Vec::with_capacity(walks.len());
    let mut trail_map = Vec::with_capacity(walks.len());
    for (t, w) in walks.iter().enumerate() {
        let mut edges = Vec::with_capacity(2 * w.len());
        let mut verts = Vec::with_capacity(2 * w.len() + 1);
        for k in 0..w.len() {
            let e = w.edges[k];
            let s = leave_slot(g.edge(e), w.verts[k]);
            let (from, to) = (vertex_of_end[2 * e + s], vertex_of_end[2 * e + 1 - s]);
            if k == 0 {
                verts.push(from);
            } else {
                // transition inside the cycle of w.verts[k]
                let prev = *verts.last().unwrap();
                let c = cycle_edge_at[prev.min(from)];
                debug_assert_eq!(prev.max(from) - prev.min(from), 1);
                used[c - first_cycle_edge] = true;
                edges.push(c);
                verts.push(from);
            }
            edges.push(reduced_edge_of[e].unwrap());
            verts.push(to);
        }
        out_walks.push(Walk { edges, verts });
        trail_map.push(Some(t));
    }
    for (i, &u) in used.iter().enumerate() {
        if !u {
            let c = first_cycle_edge + i;
            let r = h.edge(c);
            out_walks.push(Walk {
                edges: vec![c],
                verts: vec![r.tail, r.head],
            });
            trail_map.push(None);
        }
    }
    let map = ReductionMap {
        orig_edge_of,
        reduced_edge_of,
        cycle_of_vertex,
        trail_map,
    };
    (h, out_walks, map)
}
