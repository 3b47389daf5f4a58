//! Recursive trail orientation for undirected multigraphs.
//!
//! Trail-end edges are peeled off while the rest stays 2-edge connected.
//! When removing the chosen edge `e` creates a bridge `b`, `{e, b}` is a
//! 2-edge cut and the graph splits into two smaller instances, each closed up
//! by a glue edge that stands in for the path through the other side.
//! Bridges are recomputed from scratch at every step.

use crate::connectivity::{bridge_mask, components_without, is_two_edge_connected};
use crate::error::{Error, Result};
use crate::graph::{Direction, EdgeId, MultiGraph, Orientation, VertexId};
use crate::instance::Solution;
use crate::trails::{TrailPartition, Walk};

/// Bookkeeping for one split along a 2-edge cut `{e, b}`.
///
/// Side 1 holds the tail of `e`. With `u_i` the endpoint of `e` and `w_i` the
/// endpoint of `b` on side `i`, the glue edge of side `i` is `(u_i, w_i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitRecord {
    pub cut: (EdgeId, EdgeId),
    pub sides: [Vec<VertexId>; 2],
    /// Glue edge ids inside G1 and G2.
    pub glue_edges: (EdgeId, EdgeId),
    /// For every input trail, the `(side, trail index)` pairs it went to.
    /// The trails through `e` and `b` both map into the merged trails.
    pub trail_surgery: Vec<Vec<(usize, usize)>>,
    /// Per side: local edge id -> parent edge id, glue excluded.
    pub edge_maps: [Vec<EdgeId>; 2],
    /// Index of the merged trail in P1 and P2.
    pub merged: [usize; 2],
}

#[derive(Clone, Debug)]
pub struct Split {
    pub g1: MultiGraph,
    pub p1: TrailPartition,
    pub g2: MultiGraph,
    pub p2: TrailPartition,
    pub record: SplitRecord,
}

/// Strong trail orientation of a fully undirected multigraph, or
/// `Infeasible` when the graph is not 2-edge connected.
pub fn orient_trails(g: &MultiGraph, p: &TrailPartition) -> Result<Solution> {
    p.check(g)?;
    if let Some((e, _)) = g.edges().find(|(_, r)| !r.state.is_undirected()) {
        return Err(Error::NotUndirected(e));
    }
    if !is_two_edge_connected(g) {
        return Ok(Solution::Infeasible);
    }
    Ok(Solution::Feasible(solve(g.clone(), p.walks(g))))
}

/// Lowest live edge id that is first or last in its trail.
pub fn pick_end_edge(g: &MultiGraph, p: &TrailPartition) -> Result<EdgeId> {
    p.trails
        .iter()
        .filter_map(|t| {
            let ends = [t.first()?, t.last()?];
            ends.into_iter().copied().filter(|&e| g.is_live(e)).min()
        })
        .min()
        .ok_or_else(|| Error::Precondition("graph has no edges".into()))
}

/// Splits `(g, p)` along `e` and the lowest-id bridge of `G - e`.
pub fn split_on_cut(g: &MultiGraph, p: &TrailPartition, e: EdgeId) -> Result<Split> {
    p.check(g)?;
    let walks = p.walks(g);
    let ranges: Vec<(usize, usize)> = walks.iter().map(|w| (0, w.len())).collect();
    let (t, k) = position_in(&walks, e)
        .ok_or_else(|| Error::Precondition(format!("edge {e} is in no trail")))?;
    if k != 0 && k + 1 != walks[t].len() {
        return Err(Error::Precondition(format!("edge {e} is not at the end of its trail")));
    }
    let mut work = g.clone();
    work.delete_edge(e)?;
    let bridges = bridge_mask(&work);
    let b = (0..bridges.len())
        .find(|&x| bridges[x])
        .ok_or_else(|| Error::Precondition(format!("G - {e} has no bridge")))?;
    let pos = positions(&walks, g.edge_count());
    let (sides, record) = split(&work, &walks, &ranges, &pos, e, b);
    let [s1, s2] = sides;
    let to_partition = |s: &Side| TrailPartition::new(s.walks.iter().map(|w| w.edges.clone()).collect());
    Ok(Split {
        p1: to_partition(&s1),
        p2: to_partition(&s2),
        g1: s1.graph,
        g2: s2.graph,
        record,
    })
}

fn position_in(walks: &[Walk], e: EdgeId) -> Option<(usize, usize)> {
    walks
        .iter()
        .enumerate()
        .find_map(|(t, w)| w.edges.iter().position(|&x| x == e).map(|k| (t, k)))
}

/// `(trail, index)` of every edge.
fn positions(walks: &[Walk], edge_count: usize) -> Vec<(usize, usize)> {
    let mut pos = vec![(usize::MAX, usize::MAX); edge_count];
    for (t, w) in walks.iter().enumerate() {
        for (k, &e) in w.edges.iter().enumerate() {
            pos[e] = (t, k);
        }
    }
    pos
}

/// Assumes `g` is 2-edge connected, fully undirected and that `walks`
/// partition its live edges.
pub(crate) fn solve(mut g: MultiGraph, walks: Vec<Walk>) -> Orientation {
    let pos = positions(&walks, g.edge_count());
    let mut ranges: Vec<(usize, usize)> = walks.iter().map(|w| (0, w.len())).collect();
    let mut o = Orientation::with_capacity(g.edge_count());
    loop {
        let Some(e) = ranges
            .iter()
            .enumerate()
            .filter(|(_, &(lo, hi))| lo < hi)
            .flat_map(|(t, &(lo, hi))| [walks[t].edges[lo], walks[t].edges[hi - 1]])
            .min()
        else {
            break;
        };
        g.delete_edge(e).expect("live edge");
        let bridges = bridge_mask(&g);
        match (0..bridges.len()).find(|&x| bridges[x]) {
            None => {
                let (t, k) = pos[e];
                if k == ranges[t].0 {
                    ranges[t].0 += 1;
                } else {
                    ranges[t].1 -= 1;
                }
            }
            Some(b) => {
                let (sides, record) = split(&g, &walks, &ranges, &pos, e, b);
                let [s1, s2] = sides;
                let flip1 = {
                    let so = solve(s1.graph.clone(), s1.walks.clone());
                    let dir = s1.walks[record.merged[0]].direction_in(&s1.graph, &so);
                    (so, dir == Some(Direction::Reversed))
                };
                let flip2 = {
                    let so = solve(s2.graph.clone(), s2.walks.clone());
                    let dir = s2.walks[record.merged[1]].direction_in(&s2.graph, &so);
                    (so, dir != Some(Direction::Reversed))
                };
                for (side, (so, flip)) in [(&s1, flip1), (&s2, flip2)] {
                    for (local, &parent) in side.edges.iter().enumerate() {
                        let d = so.get(local).expect("sub-solution is total");
                        o.set(parent, d.flipped_if(flip));
                    }
                }
                // e runs u1 -> u2 and side 1 holds the tail of e
                o.set(e, Direction::Forward);
                let w2_is_tail = s2.vertex_set[g.edge(b).tail];
                o.set(b, Direction::from_forward(w2_is_tail));
                break;
            }
        }
    }
    // peeled edges follow their trails
    for w in &walks {
        w.complete_in(&g, &mut o);
    }
    o
}

struct Side {
    graph: MultiGraph,
    walks: Vec<Walk>,
    /// local edge id -> parent edge id; the glue edge is the last local id
    edges: Vec<EdgeId>,
    vertex_set: Vec<bool>,
}

/// Half-open index range of a trail together with the direction in which
/// it is read.
#[derive(Clone, Copy, PartialEq, Eq)]
struct Segment {
    trail: usize,
    a: usize,
    b: usize,
    reversed: bool,
}

impl Segment {
    fn walk(&self, walks: &[Walk]) -> Walk {
        let w = &walks[self.trail];
        let sub = Walk {
            edges: w.edges[self.a..self.b].to_vec(),
            verts: w.verts[self.a..=self.b].to_vec(),
        };
        if self.reversed {
            sub.reversed()
        } else {
            sub
        }
    }

    fn same_range(&self, other: &Segment) -> bool {
        (self.trail, self.a, self.b) == (other.trail, other.a, other.b)
    }
}

/// `g` has `e` deleted already and `b` is a bridge of it.
fn split(
    g: &MultiGraph,
    walks: &[Walk],
    ranges: &[(usize, usize)],
    pos: &[(usize, usize)],
    e: EdgeId,
    b: EdgeId,
) -> ([Side; 2], SplitRecord) {
    let er = *g.edge(e);
    let br = *g.edge(b);
    let mut skip = vec![false; g.edge_count()];
    skip[b] = true;
    let (count, label) = components_without(g, &skip);
    debug_assert_eq!(count, 2);
    let side_of = |v: VertexId| usize::from(label[v] != label[er.tail]);
    let u = [er.tail, er.head];
    let w = if side_of(br.tail) == 0 {
        [br.tail, br.head]
    } else {
        [br.head, br.tail]
    };

    let cuts_in = |t: usize| -> Vec<usize> {
        let mut c: Vec<usize> = [e, b]
            .iter()
            .filter(|&&x| pos[x].0 == t)
            .map(|&x| pos[x].1)
            .collect();
        c.sort_unstable();
        c
    };
    let before = |t: usize, k: usize, reversed: bool| {
        let a = cuts_in(t).into_iter().filter(|&c| c < k).max().map_or(ranges[t].0, |c| c + 1);
        Segment { trail: t, a, b: k, reversed }
    };
    let after = |t: usize, k: usize, reversed: bool| {
        let end = cuts_in(t).into_iter().find(|&c| c > k).unwrap_or(ranges[t].1);
        Segment { trail: t, a: k + 1, b: end, reversed }
    };

    // e_seg[i] ends at u_i, b_seg[i] starts at w_i
    let (te, ke) = pos[e];
    let e_seg = if walks[te].verts[ke] == u[0] {
        [before(te, ke, false), after(te, ke, true)]
    } else {
        [after(te, ke, true), before(te, ke, false)]
    };
    let (tb, kb) = pos[b];
    let b_seg = if side_of(walks[tb].verts[kb]) == 0 {
        [before(tb, kb, true), after(tb, kb, false)]
    } else {
        [after(tb, kb, false), before(tb, kb, true)]
    };

    let n = g.vertex_count();
    let mut local = vec![usize::MAX; n];
    let mut side_vertices: [Vec<VertexId>; 2] = [Vec::new(), Vec::new()];
    for v in 0..n {
        let s = side_of(v);
        local[v] = side_vertices[s].len();
        side_vertices[s].push(v);
    }
    let mut graphs = [
        MultiGraph::new(side_vertices[0].len()),
        MultiGraph::new(side_vertices[1].len()),
    ];
    let mut edge_maps: [Vec<EdgeId>; 2] = [Vec::new(), Vec::new()];
    let mut local_edge = vec![usize::MAX; g.edge_count()];
    for (x, r) in g.edges() {
        if x == b {
            continue;
        }
        let s = side_of(r.tail);
        local_edge[x] = graphs[s].add_edge(local[r.tail], local[r.head]).unwrap();
        edge_maps[s].push(x);
    }
    let glue = [0, 1].map(|s| graphs[s].add_edge(local[u[s]], local[w[s]]).unwrap());

    let to_local = |walk: &Walk| Walk {
        edges: walk.edges.iter().map(|&x| local_edge[x]).collect(),
        verts: walk.verts.iter().map(|&v| local[v]).collect(),
    };
    let mut side_walks: [Vec<Walk>; 2] = [Vec::new(), Vec::new()];
    let mut surgery = vec![Vec::new(); walks.len()];
    for (t, walk) in walks.iter().enumerate() {
        let (lo, hi) = ranges[t];
        if t == te || t == tb || lo == hi {
            continue;
        }
        let s = side_of(walk.verts[lo]);
        let sub = Walk {
            edges: walk.edges[lo..hi].to_vec(),
            verts: walk.verts[lo..=hi].to_vec(),
        };
        surgery[t].push((s, side_walks[s].len()));
        side_walks[s].push(to_local(&sub));
    }
    let mut merged = [0; 2];
    for s in 0..2 {
        let mut m = to_local(&e_seg[s].walk(walks));
        debug_assert_eq!(m.end(), local[u[s]]);
        m.edges.push(glue[s]);
        m.verts.push(local[w[s]]);
        if !e_seg[s].same_range(&b_seg[s]) {
            m.extend(&to_local(&b_seg[s].walk(walks)));
        }
        merged[s] = side_walks[s].len();
        surgery[te].push((s, merged[s]));
        if tb != te {
            surgery[tb].push((s, merged[s]));
        }
        side_walks[s].push(m);
    }

    let [g1, g2] = graphs;
    let [w1, w2] = side_walks;
    let [m1, m2] = edge_maps;
    debug_assert!(is_two_edge_connected(&g1) && is_two_edge_connected(&g2));
    let record = SplitRecord {
        cut: (e, b),
        sides: side_vertices,
        glue_edges: (glue[0], glue[1]),
        trail_surgery: surgery,
        edge_maps: [m1.clone(), m2.clone()],
        merged,
    };
    let vertex_set = |s: usize| (0..n).map(|v| side_of(v) == s).collect();
    let sides = [
        Side {
            graph: g1,
            walks: w1,
            edges: m1,
            vertex_set: vertex_set(0),
        },
        Side {
            graph: g2,
            walks: w2,
            edges: m2,
            vertex_set: vertex_set(1),
        },
    ];
    (sides, record)
}
