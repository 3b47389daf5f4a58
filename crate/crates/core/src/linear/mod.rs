//! Linear-time strong trail orientation of undirected multigraphs.
//!
//! The graph is first made cubic. On a cubic graph the algorithm deletes as
//! many trail-end edges as it can while staying 2-edge connected, splits the
//! rest into 3-edge-connected components, solves each component graph
//! recursively and glues the pieces along the cactus. Deleted edges finally
//! follow their trails.

mod cubic;
mod gamma;
mod subgraph;

pub use cubic::{reduce_to_cubic, ReductionMap};
pub use gamma::{build_gamma, combine_components, GammaEdge, GammaGraph};
pub use subgraph::{minimal_2ecc_subgraph, trail_spanning_tree, MinimalSubgraph};

use crate::connectivity::{is_three_edge_connected, three_edge_components};
use crate::error::{Error, Result};
use crate::graph::{EdgeId, MultiGraph, Orientation, VertexId};
use crate::instance::Solution;
use crate::naive;
use crate::trails::{TrailPartition, Walk};

use cubic::NONE;
use gamma::GammaBuilder;

/// Components with at least this many vertices count as large.
pub const LARGE_COMPONENT: usize = 10;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct LinearOptions {
    /// Check that every component graph is cubic and 3-edge connected and
    /// that only trail-end edges are deleted. Costs a lot more time.
    pub check_invariants: bool,
}

/// Totals over all cubic graphs solved at one recursion depth.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct LevelStats {
    pub calls: usize,
    pub vertices: usize,
    /// Non-tree edges before deletion.
    pub non_tree: usize,
    pub components: usize,
    /// Vertices in components with at least `LARGE_COMPONENT` vertices.
    pub large_mass: usize,
    /// Calls whose minimal subgraph was already 3-edge connected and were
    /// handed to the recursive splitter.
    pub fallbacks: usize,
    /// Calls where `5 * components < 2 * non_tree`.
    pub component_bound_violations: usize,
    /// Calls where `9 * large_mass >= 8 * vertices`.
    pub shrink_bound_violations: usize,
}

impl LevelStats {
    /// Fraction of vertices that sit in large components.
    pub fn large_fraction(&self) -> f64 {
        if self.vertices == 0 {
            0.0
        } else {
            self.large_mass as f64 / self.vertices as f64
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LinearStats {
    /// `levels[0]` is the top-level cubic graph.
    pub levels: Vec<LevelStats>,
    /// Vertex and edge count of the cubic graph actually solved.
    pub cubic_vertices: usize,
    pub cubic_edges: usize,
    /// Failed invariant checks, empty unless checking was requested.
    pub invariant_failures: Vec<String>,
}

impl LinearStats {
    pub fn depth(&self) -> usize {
        self.levels.len()
    }

    pub fn bound_violations(&self) -> usize {
        self.levels
            .iter()
            .map(|l| l.component_bound_violations + l.shrink_bound_violations)
            .sum()
    }
}

struct Ctx {
    options: LinearOptions,
    stats: LinearStats,
}

impl Ctx {
    fn level(&mut self, depth: usize) -> &mut LevelStats {
        if self.stats.levels.len() <= depth {
            self.stats.levels.resize(depth + 1, LevelStats::default());
        }
        &mut self.stats.levels[depth]
    }

    fn fail(&mut self, msg: String) {
        self.stats.invariant_failures.push(msg);
    }
}

fn orient_along(g: &MultiGraph, walks: &[Walk]) -> Orientation {
    let mut o = Orientation::with_capacity(g.edge_count());
    for w in walks {
        w.complete_in(g, &mut o);
    }
    o
}

/// Strong trail orientation of a cubic multigraph, `None` when it is not
/// 2-edge connected. Only the top level can see such a graph.
fn solve(g: &MultiGraph, walks: &[Walk], depth: usize, ctx: &mut Ctx) -> Option<Orientation> {
    let n = g.vertex_count();
    if n <= 1 {
        return Some(orient_along(g, walks));
    }
    // cubic trail interiors are a forest, so an error means disconnected
    let in_tree = subgraph::spanning_tree_mask(g, walks).ok()?;
    let deleted = subgraph::minimal_deletions(g, &in_tree).ok()?;
    let mut h = g.clone();
    for &x in &deleted {
        h.delete_edge(x).expect("live edge");
    }
    let cactus = three_edge_components(&h).expect("minimal subgraph is 2-edge connected");

    let non_tree = g.live_edge_count() + 1 - n;
    let components = cactus.node_count();
    let large_mass: usize = (0..components)
        .map(|c| cactus.members(c).len())
        .filter(|&s| s >= LARGE_COMPONENT)
        .sum();
    {
        let l = ctx.level(depth);
        l.calls += 1;
        l.vertices += n;
        l.non_tree += non_tree;
        l.components += components;
        l.large_mass += large_mass;
        if 5 * components < 2 * non_tree {
            l.component_bound_violations += 1;
        }
        if 9 * large_mass >= 8 * n {
            l.shrink_bound_violations += 1;
        }
    }
    if ctx.options.check_invariants {
        let is_end: Vec<bool> = {
            let mut v = vec![false; g.edge_count()];
            for w in walks.iter().filter(|w| !w.is_empty()) {
                v[w.edges[0]] = true;
                v[w.edges[w.len() - 1]] = true;
            }
            v
        };
        if let Some(&x) = deleted.iter().find(|&&x| !is_end[x]) {
            ctx.fail(format!("depth {depth}: deleted edge {x} is inside its trail"));
        }
    }

    let mut o = if components == 1 {
        ctx.level(depth).fallbacks += 1;
        naive::solve(h.clone(), split_walks(&h, walks))
    } else {
        let mut builder = GammaBuilder::new(&h, &cactus, walks);
        let mut solved = Vec::with_capacity(components);
        for c in 0..components {
            // a single vertex only carries loops for the new edges
            if cactus.members(c).len() == 1 {
                solved.push(None);
                continue;
            }
            let gamma = builder.build(c);
            if ctx.options.check_invariants {
                let cubic = (0..gamma.graph.vertex_count()).all(|v| gamma.graph.degree(v) == 3);
                if !cubic || !is_three_edge_connected(&gamma.graph) {
                    ctx.fail(format!("depth {depth}: component graph {c} is not cubic and 3-edge connected"));
                }
            }
            let o = solve(&gamma.graph, &gamma.walks, depth + 1, ctx)
                .expect("component graphs are 3-edge connected");
            solved.push(Some((gamma, o)));
        }
        let parts: Vec<_> = solved.iter().map(|s| s.as_ref().map(|(g, o)| (g, o))).collect();
        gamma::combine(&h, &cactus, &parts)
    };
    for w in walks {
        w.complete_in(g, &mut o);
    }
    Some(o)
}

/// Pieces of the walks that avoid deleted edges.
fn split_walks(h: &MultiGraph, walks: &[Walk]) -> Vec<Walk> {
    let mut out = Vec::new();
    for w in walks {
        let mut cur = Walk::empty(w.verts[0]);
        for (k, &e) in w.edges.iter().enumerate() {
            if h.is_live(e) {
                cur.edges.push(e);
                cur.verts.push(w.verts[k + 1]);
            } else {
                if !cur.is_empty() {
                    out.push(cur);
                }
                cur = Walk::empty(w.verts[k + 1]);
            }
        }
        if !cur.is_empty() {
            out.push(cur);
        }
    }
    out
}

/// Copy of `g` with vertices numbered in depth-first preorder and edges in
/// the order the search meets them, the walks rewritten to match, and the
/// old id of every new edge. Tree paths and components then sit close
/// together in memory, which matters once the graph outgrows the cache.
fn relabel(g: &MultiGraph, walks: &[Walk]) -> (MultiGraph, Vec<Walk>, Vec<EdgeId>) {
    let n = g.vertex_count();
    let mut new_vertex = vec![NONE; n];
    let mut new_edge = vec![NONE; g.edge_count()];
    let mut old_edge = Vec::with_capacity(g.edge_count());
    // (edge, tail, head) for every taken edge, with the new vertex ids
    let mut taken: Vec<(EdgeId, VertexId, VertexId)> = Vec::with_capacity(g.edge_count());
    let mut next = 0;
    // (vertex, edge it was reached by, next incidence)
    let mut stack: Vec<(VertexId, EdgeId, usize)> = Vec::new();
    for root in 0..n {
        if new_vertex[root] != NONE {
            continue;
        }
        new_vertex[root] = next;
        next += 1;
        stack.push((root, NONE, 0));
        while let Some(top) = stack.last_mut() {
            let (v, parent_edge, i) = *top;
            let Some(inc) = g.incident(v).get(i) else {
                stack.pop();
                continue;
            };
            top.2 += 1;
            let e = inc.edge();
            let r = g.edge(e);
            let w = r.other(v);
            // every edge is taken once: on discovery, from its later
            // endpoint, or from the tail end of a loop
            let take = if new_vertex[w] == NONE {
                new_vertex[w] = next;
                next += 1;
                stack.push((w, e, 0));
                true
            } else if w == v {
                inc.slot() == 0
            } else {
                e != parent_edge && new_vertex[w] < new_vertex[v]
            };
            if take {
                taken.push((e, r.tail, r.head));
            }
        }
    }
    let mut h = MultiGraph::new(n);
    for (e, tail, head) in taken {
        new_edge[e] = old_edge.len();
        old_edge.push(e);
        h.add_edge(new_vertex[tail], new_vertex[head]).expect("relabelled vertices exist");
    }
    let walks = walks
        .iter()
        .map(|w| Walk {
            edges: w.edges.iter().map(|&e| new_edge[e]).collect(),
            verts: w.verts.iter().map(|&v| new_vertex[v]).collect(),
        })
        .collect();
    (h, walks, old_edge)
}

/// Strong trail orientation of an undirected multigraph, or `Infeasible`
/// when the graph is not 2-edge connected.
pub fn orient_linear(g: &MultiGraph, p: &TrailPartition) -> Result<Solution> {
    orient_linear_with_stats(g, p, LinearOptions::default()).map(|(s, _)| s)
}

pub fn orient_linear_with_stats(
    g: &MultiGraph,
    p: &TrailPartition,
    options: LinearOptions,
) -> Result<(Solution, LinearStats)> {
    let walks = p.checked_walks(g)?;
    if let Some((e, _)) = g.edges().find(|(_, r)| !r.state.is_undirected()) {
        return Err(Error::NotUndirected(e));
    }
    let mut ctx = Ctx {
        options,
        stats: LinearStats::default(),
    };
    let n = g.vertex_count();
    if n <= 1 {
        return Ok((Solution::Feasible(orient_along(g, &walks)), ctx.stats));
    }
    // isolated vertices vanish in the cubic graph; every other way of not
    // being 2-edge connected survives the reduction and is caught in solve
    if (0..n).any(|v| g.degree(v) == 0) {
        return Ok((Solution::Infeasible, ctx.stats));
    }
    let cubic = (0..n).all(|v| g.degree(v) == 3);
    let reduced = (!cubic).then(|| cubic::reduce_walks(g, &walks));
    let (cg, cw) = match &reduced {
        Some((h, hw, _)) => (h, hw.as_slice()),
        None => (g, walks.as_slice()),
    };
    ctx.stats.cubic_vertices = cg.vertex_count();
    ctx.stats.cubic_edges = cg.live_edge_count();
    let (rg, rw, old_edge) = relabel(cg, cw);
    let mut o = Orientation::with_capacity(cg.edge_count());
    let Some(ro) = solve(&rg, &rw, 0, &mut ctx) else {
        return Ok((Solution::Infeasible, LinearStats::default()));
    };
    for (e, d) in ro.iter() {
        o.set(old_edge[e], d);
    }
    let o = match &reduced {
        Some((_, _, map)) => map.pull_back(&o),
        None => o,
    };
    Ok((Solution::Feasible(o), ctx.stats))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::connectivity::is_two_edge_connected;
    use crate::oracle::generate::{connected_multigraphs, cycle, random_cubic, random_trail_partition, TrailPartitions};
    use crate::oracle::verify::verify;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn checked(g: &MultiGraph, p: &TrailPartition) -> (Solution, LinearStats) {
        let opts = LinearOptions { check_invariants: true };
        let (s, stats) = orient_linear_with_stats(g, p, opts).unwrap();
        assert!(stats.invariant_failures.is_empty(), "{:?} {g:?} {p}", stats.invariant_failures);
        if let Some(o) = s.orientation() {
            let v = verify(g, p, o);
            assert!(v.is_pass(), "{p}: {v:?}");
        }
        (s, stats)
    }

    #[test]
    fn triangle() {
        let inst = cycle(3);
        assert!(checked(&inst.graph, &inst.trails).0.is_feasible());
    }

    #[test]
    fn bridge_is_infeasible() {
        let g = MultiGraph::from_edges(3, &[(0, 1), (1, 2), (2, 0), (2, 2)]).unwrap();
        assert!(checked(&g, &TrailPartition::singletons(&g)).0.is_feasible());
        let g = MultiGraph::from_edges(2, &[(0, 1), (1, 1)]).unwrap();
        assert_eq!(checked(&g, &TrailPartition::singletons(&g)).0, Solution::Infeasible);
    }

    #[test]
    fn loops_only() {
        let g = MultiGraph::from_edges(1, &[(0, 0), (0, 0)]).unwrap();
        let p = TrailPartition::new(vec![vec![0, 1]]);
        assert!(checked(&g, &p).0.is_feasible());
    }

    #[test]
    fn exhaustive_small_graphs_match_two_edge_connectivity() {
        for g in connected_multigraphs(4, 6, true) {
            let tec = is_two_edge_connected(&g);
            for p in TrailPartitions::new(&g) {
                let (s, _) = checked(&g, &p);
                assert_eq!(s.is_feasible(), tec, "{g:?} {p}");
            }
        }
    }

    #[test]
    fn random_cubic_graphs_respect_the_bounds() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for n in [10, 50, 200, 1000] {
            for _ in 0..5 {
                let g = random_cubic(n, &mut rng).unwrap();
                let p = random_trail_partition(&g, &mut rng);
                let (s, stats) = checked(&g, &p);
                assert!(s.is_feasible());
                assert_eq!(stats.bound_violations(), 0, "{stats:?}");
            }
        }
    }
}
