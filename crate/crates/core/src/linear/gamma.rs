//! Component graphs of the cactus and how their orientations are glued.

use crate::connectivity::{Cactus, CutPair};
use crate::error::{Error, Result};
use crate::graph::{Direction, EdgeId, MultiGraph, Orientation, VertexId};
use crate::trails::{TrailPartition, Walk};

use super::cubic::{transitions, NONE};

/// Where an edge of a component graph comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GammaEdge {
    /// A host edge inside the component.
    Host(EdgeId),
    /// The new edge closing junction `i` of the component, i.e.
    /// `cactus.junctions(component)[i]`.
    Junction(usize),
}

/// A 3-edge-connected component `C` of the host graph in which every 2-edge
/// cut `{e, f}` leaving `C` is replaced by one new edge between the
/// endpoints of `e` and `f` inside `C`.
///
/// New edge `i` runs from `out_end` to `in_end` of junction `i`, so it is
/// `Forward` exactly when the cactus cycle is traversed in its positive
/// direction.
#[derive(Clone, Debug)]
pub struct GammaGraph {
    pub graph: MultiGraph,
    pub walks: Vec<Walk>,
    pub host_component: usize,
    /// Local vertex -> host vertex.
    pub vertices: Vec<VertexId>,
    pub edge_origin: Vec<GammaEdge>,
    /// Local id of the new edge of every junction of the component.
    pub junction_edges: Vec<EdgeId>,
}

impl GammaGraph {
    pub fn trails(&self) -> TrailPartition {
        TrailPartition::new(self.walks.iter().map(|w| w.edges.clone()).collect())
    }

    /// The replaced cut pairs together with their new edges.
    pub fn replaced_cuts(&self, cactus: &Cactus) -> Vec<(CutPair, EdgeId)> {
        cactus
            .junctions(self.host_component)
            .iter()
            .zip(&self.junction_edges)
            .map(|(j, &e)| (j.cut_pair(), e))
            .collect()
    }

    /// Host edges of every trail, in trail order; new edges are left out.
    pub fn trail_map(&self) -> Vec<Vec<EdgeId>> {
        self.walks
            .iter()
            .map(|w| {
                w.edges
                    .iter()
                    .filter_map(|&e| match self.edge_origin[e] {
                        GammaEdge::Host(h) => Some(h),
                        GammaEdge::Junction(_) => None,
                    })
                    .collect()
            })
            .collect()
    }
}

/// Per-host-graph scratch space shared by the components of one level.
pub(crate) struct GammaBuilder<'a> {
    host: &'a MultiGraph,
    cactus: &'a Cactus,
    /// partner edge end within the host trails
    partner: Vec<usize>,
    local_vertex: Vec<usize>,
    /// host edge end -> component edge end
    gamma_end: Vec<usize>,
}

impl<'a> GammaBuilder<'a> {
    pub(crate) fn new(host: &'a MultiGraph, cactus: &'a Cactus, walks: &[Walk]) -> Self {
        let skip: Vec<bool> = (0..host.edge_count()).map(|e| !host.is_live(e)).collect();
        GammaBuilder {
            host,
            cactus,
            partner: transitions(host, walks, &skip),
            local_vertex: vec![NONE; host.vertex_count()],
            gamma_end: vec![NONE; 2 * host.edge_count()],
        }
    }

    pub(crate) fn build(&mut self, c: usize) -> GammaGraph {
        let h = self.host;
        let members = self.cactus.members(c);
        for (i, &v) in members.iter().enumerate() {
            self.local_vertex[v] = i;
        }
        let mut graph = MultiGraph::new(members.len());
        let mut edge_origin = Vec::new();
        // component edge end -> host edge end
        let mut host_end = Vec::new();
        for &v in members {
            for inc in h.incident(v) {
                let e = inc.edge();
                let r = h.edge(e);
                if inc.slot() != 0 || self.cactus.is_critical(e) {
                    continue;
                }
                let id = graph
                    .add_edge(self.local_vertex[r.tail], self.local_vertex[r.head])
                    .expect("component vertices");
                edge_origin.push(GammaEdge::Host(e));
                for s in 0..2 {
                    self.gamma_end[2 * e + s] = 2 * id + s;
                    host_end.push(2 * e + s);
                }
            }
        }
        let mut junction_edges = Vec::new();
        for (i, j) in self.cactus.junctions(c).iter().enumerate() {
            let id = graph
                .add_edge(self.local_vertex[j.out_end], self.local_vertex[j.in_end])
                .expect("component vertices");
            edge_origin.push(GammaEdge::Junction(i));
            junction_edges.push(id);
            let out_slot = usize::from(h.edge(j.out_edge).tail != j.out_end);
            let in_slot = usize::from(h.edge(j.in_edge).tail != j.in_end);
            self.gamma_end[2 * j.out_edge + out_slot] = 2 * id;
            self.gamma_end[2 * j.in_edge + in_slot] = 2 * id + 1;
            host_end.push(2 * j.out_edge + out_slot);
            host_end.push(2 * j.in_edge + in_slot);
        }

        let m = graph.edge_count();
        let partner: Vec<usize> = host_end
            .iter()
            .map(|&x| match self.partner[x] {
                NONE => NONE,
                q => self.gamma_end[q],
            })
            .collect();
        let walks = chains(&graph, &partner);
        debug_assert_eq!(walks.iter().map(Walk::len).sum::<usize>(), m);
        GammaGraph {
            graph,
            walks,
            host_component: c,
            vertices: members.to_vec(),
            edge_origin,
            junction_edges,
        }
    }
}

/// Trails of a transition system: `partner[2e + s]` is the edge end that
/// follows end `s` of edge `e`. Closed chains are cut at their first edge.
fn chains(g: &MultiGraph, partner: &[usize]) -> Vec<Walk> {
    let m = g.edge_count();
    let mut used = vec![false; m];
    let mut walks = Vec::new();
    let end_vertex = |x: usize| {
        let r = g.edge(x / 2);
        if x.is_multiple_of(2) {
            r.tail
        } else {
            r.head
        }
    };
    let follow = |start_end: usize, used: &mut Vec<bool>| {
        let mut walk = Walk::empty(end_vertex(start_end));
        let mut x = start_end;
        loop {
            let e = x / 2;
            used[e] = true;
            let out = x ^ 1;
            walk.edges.push(e);
            walk.verts.push(end_vertex(out));
            let next = partner[out];
            if next == NONE || used[next / 2] {
                break;
            }
            x = next;
        }
        walk
    };
    for x in 0..2 * m {
        if partner[x] == NONE && !used[x / 2] {
            walks.push(follow(x, &mut used));
        }
    }
    for e in 0..m {
        if !used[e] {
            walks.push(follow(2 * e, &mut used));
        }
    }
    walks
}

/// Component graph of cactus node `c` of the host `h`, whose live edges are
/// partitioned into the trails `p`.
pub fn build_gamma(h: &MultiGraph, p: &TrailPartition, cactus: &Cactus, c: usize) -> Result<GammaGraph> {
    p.check(h)?;
    if c >= cactus.node_count() {
        return Err(Error::Precondition(format!("no cactus node {c}")));
    }
    Ok(GammaBuilder::new(h, cactus, &p.walks(h)).build(c))
}

/// Orientation of the host edges obtained by flipping each component so
/// that every cactus cycle becomes a directed cycle.
///
/// Components are visited depth-first from node 0. The first component on a
/// cycle fixes the cycle's direction through its new edge; every other
/// component on that cycle is flipped if its new edge disagrees. New edges
/// that are loops carry no direction and impose nothing.
pub fn combine_components(
    h: &MultiGraph,
    cactus: &Cactus,
    gammas: &[GammaGraph],
    orients: &[Orientation],
) -> Orientation {
    let parts: Vec<Option<(&GammaGraph, &Orientation)>> =
        gammas.iter().zip(orients).map(Some).collect();
    combine(h, cactus, &parts)
}

/// Like `combine_components`, with `None` for single-vertex components,
/// whose component graphs are bare loops and constrain nothing.
pub(crate) fn combine(
    h: &MultiGraph,
    cactus: &Cactus,
    parts: &[Option<(&GammaGraph, &Orientation)>],
) -> Orientation {
    let k = cactus.node_count();
    let mut o = Orientation::with_capacity(h.edge_count());
    if k == 0 {
        return o;
    }
    // (node, junction index) leaving by each cactus edge
    let mut at_edge = vec![(NONE, NONE); cactus.edge_count()];
    for c in 0..k {
        for (i, j) in cactus.junctions(c).iter().enumerate() {
            at_edge[cactus.cactus_edge_index(j.out_edge).expect("critical")] = (c, i);
        }
    }
    // Some(true) when the new edge says the cycle is positive, None for loops
    let says_positive = |c: usize, i: usize| -> Option<bool> {
        let (gamma, o) = parts[c]?;
        let e = gamma.junction_edges[i];
        if gamma.graph.edge(e).is_loop() {
            return None;
        }
        Some(o.get(e).expect("component orientation is total").is_forward())
    };

    let mut flip: Vec<Option<bool>> = vec![None; k];
    let mut positive: Vec<Option<bool>> = vec![None; cactus.cycle_count()];
    flip[0] = Some(false);
    let mut stack = vec![0];
    while let Some(c) = stack.pop() {
        let fc = flip[c].unwrap();
        for (i, j) in cactus.junctions(c).iter().enumerate() {
            let y = j.cycle;
            if positive[y].is_some() {
                continue;
            }
            let dir = says_positive(c, i).is_none_or(|p| p != fc);
            positive[y] = Some(dir);
            for &(d, di) in &at_edge[cactus.cycle_range(y)] {
                if d == c {
                    continue;
                }
                let fd = says_positive(d, di).is_some_and(|p| p != dir);
                assert!(
                    flip[d].is_none() || flip[d] == Some(fd),
                    "cactus cycle {y} meets node {d} twice"
                );
                if flip[d].is_none() {
                    flip[d] = Some(fd);
                    stack.push(d);
                }
            }
        }
    }

    for (c, part) in parts.iter().enumerate() {
        let Some((gamma, orient)) = part else {
            continue;
        };
        let fc = flip[c].expect("cactus is connected");
        for (local, origin) in gamma.edge_origin.iter().enumerate() {
            if let GammaEdge::Host(e) = *origin {
                let d = orient.get(local).expect("component orientation is total");
                o.set(e, d.flipped_if(fc));
            }
        }
    }
    for (y, cycle) in cactus.cycles().enumerate() {
        let dir = positive[y].expect("cactus is connected");
        for (&e, &(start, _)) in cycle.edges.iter().zip(cycle.ends) {
            let along = h.edge(e).tail == start;
            o.set(e, Direction::from_forward(along == dir));
        }
    }
    o
}
