//! Solution checking and exhaustive search over trail directions.
//!
//! Nothing here calls into the orientation algorithms or the connectivity
//! module; reachability is recomputed from scratch so that agreement between
//! an algorithm and this oracle means something.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{Direction, EdgeId, EdgeState, MultiGraph, Orientation, VertexId};
use crate::instance::Solution;
use crate::trails::{is_trail_consistent, TrailPartition, Walk};

/// Default bound on the number of trails `brute_force_feasible` accepts.
pub const DEFAULT_TRAIL_CAP: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    InvalidPartition(String),
    Unassigned(EdgeId),
    AssignedNonUndirected(EdgeId),
    InconsistentTrail(usize),
    NotStronglyConnected,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::InvalidPartition(msg) => write!(f, "invalid trail partition: {msg}"),
            Violation::Unassigned(e) => write!(f, "undirected edge {e} has no direction"),
            Violation::AssignedNonUndirected(e) => {
                write!(f, "edge {e} is fixed, oriented or deleted but was assigned a direction")
            }
            Violation::InconsistentTrail(t) => write!(f, "trail {t} is not consistently directed"),
            Violation::NotStronglyConnected => write!(f, "not strongly connected"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail(Violation),
}

impl Verdict {
    pub fn is_pass(&self) -> bool {
        *self == Verdict::Pass
    }
}

/// Forward and backward reachability from vertex 0 over explicit arcs.
fn arcs_strongly_connected(n: usize, arcs: &[(VertexId, VertexId)]) -> bool {
    if n <= 1 {
        return true;
    }
    let mut out_start = vec![0usize; n + 1];
    let mut in_start = vec![0usize; n + 1];
    for &(u, v) in arcs {
        out_start[u + 1] += 1;
        in_start[v + 1] += 1;
    }
    for i in 0..n {
        out_start[i + 1] += out_start[i];
        in_start[i + 1] += in_start[i];
    }
    let mut out_adj = vec![0; arcs.len()];
    let mut in_adj = vec![0; arcs.len()];
    let (mut oc, mut ic) = (out_start.clone(), in_start.clone());
    for &(u, v) in arcs {
        out_adj[oc[u]] = v;
        oc[u] += 1;
        in_adj[ic[v]] = u;
        ic[v] += 1;
    }
    let reach_all = |start: &[usize], adj: &[usize]| {
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &w in &adj[start[v]..start[v + 1]] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == n
    };
    reach_all(&out_start, &out_adj) && reach_all(&in_start, &in_adj)
}

/// Checks that `o` is a strong trail orientation of `(g, p)`.
///
/// Passes iff `o` directs exactly the live undirected edges, directs every
/// trail consistently and makes the graph strongly connected.
pub fn verify(g: &MultiGraph, p: &TrailPartition, o: &Orientation) -> Verdict {
    if let Err(err) = p.check(g) {
        let msg = match err {
            Error::InvalidTrails(m) => m,
            other => other.to_string(),
        };
        return Verdict::Fail(Violation::InvalidPartition(msg));
    }
    for (e, _) in o.iter() {
        let ok = g
            .get_edge(e)
            .is_some_and(|r| r.state == EdgeState::Undirected);
        if !ok {
            return Verdict::Fail(Violation::AssignedNonUndirected(e));
        }
    }
    let mut arcs = Vec::with_capacity(g.live_edge_count());
    for (e, rec) in g.edges() {
        let arc = match rec.arc() {
            Some(arc) => arc,
            None => match o.get(e) {
                Some(d) => rec.endpoints_along(d),
                None => return Verdict::Fail(Violation::Unassigned(e)),
            },
        };
        arcs.push(arc);
    }
    for (t, trail) in p.trails.iter().enumerate() {
        if !is_trail_consistent(g, trail, o) {
            return Verdict::Fail(Violation::InconsistentTrail(t));
        }
    }
    if !arcs_strongly_connected(g.vertex_count(), &arcs) {
        return Verdict::Fail(Violation::NotStronglyConnected);
    }
    Verdict::Pass
}

/// Tries every one of the `2^t` trail direction assignments and returns the
/// first strong one, in binary counting order over trail indices.
pub fn brute_force_feasible(g: &MultiGraph, p: &TrailPartition, cap: usize) -> Result<Solution> {
    p.check(g)?;
    let t = p.len();
    if t > cap || t >= usize::BITS as usize {
        return Err(Error::TrailCap { trails: t, cap });
    }
    let walks: Vec<Walk> = p.walks(g);
    let mut fixed_arcs = Vec::new();
    for (_, rec) in g.edges() {
        if let Some(arc) = rec.arc() {
            fixed_arcs.push(arc);
        }
    }
    // arcs of every trail when traversed forward
    let trail_arcs: Vec<Vec<(VertexId, VertexId)>> = walks
        .iter()
        .map(|w| (0..w.len()).map(|i| (w.verts[i], w.verts[i + 1])).collect())
        .collect();
    let mut arcs = Vec::with_capacity(g.live_edge_count());
    for mask in 0usize..(1usize << t) {
        arcs.clear();
        arcs.extend_from_slice(&fixed_arcs);
        for (i, ta) in trail_arcs.iter().enumerate() {
            if mask >> i & 1 == 0 {
                arcs.extend_from_slice(ta);
            } else {
                arcs.extend(ta.iter().map(|&(u, v)| (v, u)));
            }
        }
        if arcs_strongly_connected(g.vertex_count(), &arcs) {
            let dirs: Vec<Direction> = (0..t)
                .map(|i| Direction::from_forward(mask >> i & 1 == 0))
                .collect();
            return Ok(Solution::Feasible(p.orientation(g, &dirs)));
        }
    }
    Ok(Solution::Infeasible)
}

/// Number of edge-disjoint `s`-`t` paths in the undirected graph underlying
/// `g` (directions and deleted edges ignored, loops never help), by unit
/// augmenting paths. Stops counting at `limit`.
pub fn local_edge_connectivity(g: &MultiGraph, s: VertexId, t: VertexId, limit: usize) -> usize {
    if s == t {
        return limit;
    }
    // Net flow along each edge from tail to head: -1, 0 or 1.
    let mut flow = vec![0i8; g.edge_count()];
    let mut paths = 0;
    while paths < limit {
        let mut via: Vec<Option<EdgeId>> = vec![None; g.vertex_count()];
        let mut seen = vec![false; g.vertex_count()];
        seen[s] = true;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for (e, rec) in g.edges() {
                if !rec.alive || rec.is_loop() || (rec.tail != u && rec.head != u) {
                    continue;
                }
                let v = rec.other(u);
                let room = if rec.tail == u { flow[e] < 1 } else { flow[e] > -1 };
                if room && !seen[v] {
                    seen[v] = true;
                    via[v] = Some(e);
                    queue.push_back(v);
                }
            }
        }
        if !seen[t] {
            break;
        }
        let mut v = t;
        while v != s {
            let e = via[v].expect("on the path");
            let rec = g.edge(e);
            let u = rec.other(v);
            flow[e] += if rec.tail == u { 1 } else { -1 };
            v = u;
        }
        paths += 1;
    }
    paths
}
