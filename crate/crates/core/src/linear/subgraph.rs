//! Spanning tree through the trail interiors, and the inclusion-minimal
//! 2-edge-connected subgraph containing it.

use crate::error::{Error, Result};
use crate::graph::{EdgeId, MultiGraph, VertexId};
use crate::trails::{TrailPartition, Walk};

use super::cubic::NONE;

struct Dsu {
    parent: Vec<usize>,
}

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        let mut root = x;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        while self.parent[x] != root {
            let next = self.parent[x];
            self.parent[x] = root;
            x = next;
        }
        root
    }
}

/// Tree-edge mask of a spanning tree containing every edge that is neither
/// first nor last on its trail. `Err` if those edges contain a cycle or the
/// graph is disconnected.
pub(crate) fn spanning_tree_mask(g: &MultiGraph, walks: &[Walk]) -> Result<Vec<bool>> {
    let n = g.vertex_count();
    let mut dsu = Dsu::new(n);
    let mut in_tree = vec![false; g.edge_count()];
    let mut size = 0;
    for w in walks {
        for &e in w.edges.iter().take(w.len().saturating_sub(1)).skip(1) {
            let r = g.edge(e);
            let (a, b) = (dsu.find(r.tail), dsu.find(r.head));
            if a == b {
                return Err(Error::Precondition(format!(
                    "interior trail edges contain a cycle through edge {e}"
                )));
            }
            dsu.parent[a] = b;
            in_tree[e] = true;
            size += 1;
        }
    }
    for (e, r) in g.edges() {
        if in_tree[e] {
            continue;
        }
        let (a, b) = (dsu.find(r.tail), dsu.find(r.head));
        if a != b {
            dsu.parent[a] = b;
            in_tree[e] = true;
            size += 1;
        }
    }
    if n > 0 && size != n - 1 {
        return Err(Error::Precondition("graph is disconnected".into()));
    }
    Ok(in_tree)
}

/// Spanning tree containing every edge that is not at the end of its trail,
/// as sorted edge ids. Interior edges go in first, the remaining edges follow
/// in id order.
pub fn trail_spanning_tree(g: &MultiGraph, p: &TrailPartition) -> Result<Vec<EdgeId>> {
    p.check(g)?;
    let mask = spanning_tree_mask(g, &p.walks(g))?;
    Ok((0..mask.len()).filter(|&e| mask[e]).collect())
}

/// Rooted view of a spanning tree.
struct RootedTree {
    parent: Vec<VertexId>,
    parent_edge: Vec<EdgeId>,
    depth: Vec<usize>,
}

impl RootedTree {
    fn new(g: &MultiGraph, in_tree: &[bool]) -> Self {
        let n = g.vertex_count();
        let mut parent = vec![NONE; n];
        let mut parent_edge = vec![NONE; n];
        let mut depth = vec![0; n];
        let mut seen = vec![false; n];
        let mut stack = Vec::new();
        if n > 0 {
            seen[0] = true;
            stack.push(0);
        }
        while let Some(v) = stack.pop() {
            for inc in g.incident(v) {
                if !in_tree[inc.edge()] {
                    continue;
                }
                let w = g.edge(inc.edge()).other(v);
                if !seen[w] {
                    seen[w] = true;
                    parent[w] = v;
                    parent_edge[w] = inc.edge();
                    depth[w] = depth[v] + 1;
                    stack.push(w);
                }
            }
        }
        RootedTree {
            parent,
            parent_edge,
            depth,
        }
    }

    /// Calls `visit` on every tree edge of the `a`-`b` path that is not yet
    /// marked in `jump`, then marks them. `jump` is a union-find over vertices
    /// where a vertex points to its parent once its parent edge is marked.
    fn mark_path(&self, jump: &mut Dsu, a: VertexId, b: VertexId, mut visit: impl FnMut(EdgeId)) {
        let (mut u, mut v) = (jump.find(a), jump.find(b));
        while u != v {
            if self.depth[u] < self.depth[v] {
                std::mem::swap(&mut u, &mut v);
            }
            visit(self.parent_edge[u]);
            jump.parent[u] = self.parent[u];
            u = jump.find(u);
        }
    }
}

/// Non-tree edges to delete so that the rest is an inclusion-minimal
/// 2-edge-connected subgraph containing the tree, in decreasing id order.
///
/// Equivalent to trying the non-tree edges in decreasing id order and
/// deleting each one whose removal keeps the graph 2-edge connected. A tree
/// edge only ever blocks the deletion of the smallest non-tree edge covering
/// it, and only if no kept larger edge covers it; both facts are found by
/// painting tree paths with a union-find.
pub(crate) fn minimal_deletions(g: &MultiGraph, in_tree: &[bool]) -> Result<Vec<EdgeId>> {
    let n = g.vertex_count();
    let tree = RootedTree::new(g, in_tree);
    let non_tree: Vec<EdgeId> = g.edges().map(|(e, _)| e).filter(|&e| !in_tree[e]).collect();

    // smallest covering non-tree edge of every tree edge
    let mut lowest = vec![NONE; g.edge_count()];
    let mut jump = Dsu::new(n);
    for &x in &non_tree {
        let r = g.edge(x);
        tree.mark_path(&mut jump, r.tail, r.head, |t| lowest[t] = x);
    }
    // guards of x are guard_list[guard_start[x]..guard_start[x + 1]]
    let mut guard_start = vec![0usize; g.edge_count() + 1];
    for v in 1..n {
        let t = tree.parent_edge[v];
        if t == NONE {
            return Err(Error::Precondition("tree does not span the graph".into()));
        }
        if lowest[t] == NONE {
            return Err(Error::NotTwoEdgeConnected);
        }
        guard_start[lowest[t] + 1] += 1;
    }
    for x in 0..g.edge_count() {
        guard_start[x + 1] += guard_start[x];
    }
    let mut fill = guard_start.clone();
    let mut guard_list = vec![NONE; n.saturating_sub(1)];
    for v in 1..n {
        let t = tree.parent_edge[v];
        guard_list[fill[lowest[t]]] = t;
        fill[lowest[t]] += 1;
    }

    let mut covered = vec![false; g.edge_count()];
    let mut jump = Dsu::new(n);
    let mut deleted = Vec::new();
    for &x in non_tree.iter().rev() {
        let guards = &guard_list[guard_start[x]..guard_start[x + 1]];
        if guards.iter().any(|&t| !covered[t]) {
            let r = g.edge(x);
            tree.mark_path(&mut jump, r.tail, r.head, |t| covered[t] = true);
        } else {
            deleted.push(x);
        }
    }
    Ok(deleted)
}

/// The inclusion-minimal 2-edge-connected subgraph containing `tree`.
#[derive(Clone, Debug)]
pub struct MinimalSubgraph {
    /// The host graph with the deleted edges removed; edge ids are kept.
    pub graph: MultiGraph,
    /// Deleted edges, in decreasing id order.
    pub deleted: Vec<EdgeId>,
}

pub fn minimal_2ecc_subgraph(g: &MultiGraph, tree: &[EdgeId]) -> Result<MinimalSubgraph> {
    let mut in_tree = vec![false; g.edge_count()];
    for &e in tree {
        if !g.is_live(e) {
            return Err(Error::InvalidEdge(e));
        }
        in_tree[e] = true;
    }
    if g.vertex_count() > 0 && tree.len() + 1 != g.vertex_count() {
        return Err(Error::Precondition("not a spanning tree".into()));
    }
    let deleted = minimal_deletions(g, &in_tree)?;
    let mut graph = g.clone();
    for &x in &deleted {
        graph.delete_edge(x)?;
    }
    Ok(MinimalSubgraph { graph, deleted })
}
