//! Bridges, 2- and 3-edge connectivity, mixed strong connectivity and the
//! cactus of 3-edge-connected components.

use std::collections::HashMap;
use std::hash::{BuildHasherDefault, Hasher};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{EdgeId, MultiGraph, VertexId};

const NONE: usize = usize::MAX;

/// Connected components of the underlying undirected graph, ignoring the
/// edges flagged in `skip`. Returns the component count and a label per vertex.
pub fn components_without(g: &MultiGraph, skip: &[bool]) -> (usize, Vec<usize>) {
    let n = g.vertex_count();
    let mut label = vec![NONE; n];
    let mut count = 0;
    let mut stack = Vec::new();
    for s in 0..n {
        if label[s] != NONE {
            continue;
        }
        label[s] = count;
        stack.push(s);
        while let Some(v) = stack.pop() {
            for inc in g.incident(v) {
                if skip.get(inc.edge()).copied().unwrap_or(false) {
                    continue;
                }
                let w = g.edge(inc.edge()).other(v);
                if label[w] == NONE {
                    label[w] = count;
                    stack.push(w);
                }
            }
        }
        count += 1;
    }
    (count, label)
}

pub fn components(g: &MultiGraph) -> (usize, Vec<usize>) {
    components_without(g, &[])
}

pub fn is_connected(g: &MultiGraph) -> bool {
    components(g).0 <= 1
}

/// Per-edge bridge flags of the underlying undirected graph.
pub fn bridge_mask(g: &MultiGraph) -> Vec<bool> {
    let n = g.vertex_count();
    let mut is_bridge = vec![false; g.edge_count()];
    let mut pre = vec![NONE; n];
    let mut low = vec![0; n];
    let mut clock = 0;
    // (vertex, edge to parent, next incidence index)
    let mut stack: Vec<(VertexId, EdgeId, usize)> = Vec::new();
    for root in 0..n {
        if pre[root] != NONE {
            continue;
        }
        pre[root] = clock;
        low[root] = clock;
        clock += 1;
        stack.push((root, NONE, 0));
        while let Some(top) = stack.last_mut() {
            let (v, parent_edge, i) = *top;
            if let Some(inc) = g.incident(v).get(i) {
                top.2 += 1;
                if inc.edge() == parent_edge {
                    continue;
                }
                let w = g.edge(inc.edge()).other(v);
                if pre[w] == NONE {
                    pre[w] = clock;
                    low[w] = clock;
                    clock += 1;
                    stack.push((w, inc.edge(), 0));
                } else {
                    low[v] = low[v].min(pre[w]);
                }
            } else {
                stack.pop();
                if parent_edge != NONE {
                    let u = g.edge(parent_edge).other(v);
                    low[u] = low[u].min(low[v]);
                    if low[v] > pre[u] {
                        is_bridge[parent_edge] = true;
                    }
                }
            }
        }
    }
    is_bridge
}

/// Edges whose removal disconnects their component, in id order.
pub fn find_bridges(g: &MultiGraph) -> Vec<EdgeId> {
    bridge_mask(g)
        .into_iter()
        .enumerate()
        .filter_map(|(e, b)| b.then_some(e))
        .collect()
}

/// Connected and bridgeless. A single vertex counts as 2-edge connected.
pub fn is_two_edge_connected(g: &MultiGraph) -> bool {
    is_connected(g) && !bridge_mask(g).contains(&true)
}

/// Mixed-graph strong connectivity with edge `skip` removed: undirected edges
/// are usable both ways, directed and oriented edges only along their arc.
pub fn is_strongly_connected_without(g: &MultiGraph, skip: Option<EdgeId>) -> bool {
    let n = g.vertex_count();
    if n <= 1 {
        return true;
    }
    let mut seen = vec![false; n];
    let mut stack = Vec::new();
    for backward in [false, true] {
        seen.iter_mut().for_each(|s| *s = false);
        seen[0] = true;
        stack.push(0);
        let mut reached = 1;
        while let Some(v) = stack.pop() {
            for inc in g.incident(v) {
                if Some(inc.edge()) == skip {
                    continue;
                }
                let rec = g.edge(inc.edge());
                let w = rec.other(v);
                let usable = match rec.arc() {
                    None => true,
                    Some((from, to)) => {
                        if backward {
                            to == v
                        } else {
                            from == v
                        }
                    }
                };
                if usable && !seen[w] {
                    seen[w] = true;
                    reached += 1;
                    stack.push(w);
                }
            }
        }
        if reached < n {
            return false;
        }
    }
    true
}

pub fn is_strongly_connected(g: &MultiGraph) -> bool {
    is_strongly_connected_without(g, None)
}

/// Two edges whose joint removal disconnects the host graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CutPair {
    pub e: EdgeId,
    pub f: EdgeId,
}

/// A 2-edge-critical host edge seen as an edge of the cactus.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CactusEdge {
    pub a: usize,
    pub b: usize,
    pub edge: EdgeId,
    pub cycle: usize,
}

/// One cycle of the cactus: a maximal class of host edges any two of which
/// form a 2-edge cut. `edges[i]` runs from `nodes[i]` to `nodes[i + 1]`
/// (cyclically) in the cycle's positive direction.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CactusCycle<'a> {
    pub edges: &'a [EdgeId],
    pub nodes: &'a [usize],
    /// Host endpoints of `edges[i]` as `(start, end)` in the positive direction.
    pub ends: &'a [(VertexId, VertexId)],
}

/// Where a cactus cycle passes through a node: in the positive direction the
/// cycle enters the node by `in_edge` at `in_end` and leaves by `out_edge` at
/// `out_end`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Junction {
    pub cycle: usize,
    pub out_edge: EdgeId,
    pub out_end: VertexId,
    pub in_edge: EdgeId,
    pub in_end: VertexId,
}

impl Junction {
    pub fn cut_pair(&self) -> CutPair {
        CutPair {
            e: self.out_edge,
            f: self.in_edge,
        }
    }
}

/// Quotient of a 2-edge-connected graph by its 3-edge-connected components.
///
/// Members, cycles and junctions are stored flat; use the accessors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cactus {
    pub vertex_to_node: Vec<usize>,
    /// Cactus edges grouped by cycle, in cycle order.
    pub cactus_edges: Vec<CactusEdge>,
    /// Cycle of each host edge, `None` for edges inside a component.
    pub edge_cycle: Vec<Option<usize>>,
    members: Vec<VertexId>,
    member_start: Vec<usize>,
    cycle_start: Vec<usize>,
    cycle_edges: Vec<EdgeId>,
    cycle_nodes: Vec<usize>,
    cycle_ends: Vec<(VertexId, VertexId)>,
    /// Index into the cycle arrays of every critical host edge.
    edge_slot: Vec<usize>,
    junction_list: Vec<Junction>,
    junction_start: Vec<usize>,
}

impl Cactus {
    pub fn node_count(&self) -> usize {
        self.member_start.len() - 1
    }

    pub fn edge_count(&self) -> usize {
        self.cactus_edges.len()
    }

    /// Host vertices of node `c`, ascending.
    pub fn members(&self, c: usize) -> &[VertexId] {
        &self.members[self.member_start[c]..self.member_start[c + 1]]
    }

    pub fn cycle_count(&self) -> usize {
        self.cycle_start.len() - 1
    }

    pub fn cycle(&self, y: usize) -> CactusCycle<'_> {
        let r = self.cycle_start[y]..self.cycle_start[y + 1];
        CactusCycle {
            edges: &self.cycle_edges[r.clone()],
            nodes: &self.cycle_nodes[r.clone()],
            ends: &self.cycle_ends[r],
        }
    }

    pub fn cycles(&self) -> impl Iterator<Item = CactusCycle<'_>> + '_ {
        (0..self.cycle_count()).map(|y| self.cycle(y))
    }

    /// Junctions of node `c`, one per cycle through it.
    pub fn junctions(&self, c: usize) -> &[Junction] {
        &self.junction_list[self.junction_start[c]..self.junction_start[c + 1]]
    }

    pub fn is_critical(&self, e: EdgeId) -> bool {
        self.edge_cycle.get(e).copied().flatten().is_some()
    }

    /// Indices into `cactus_edges` of cycle `y`.
    pub fn cycle_range(&self, y: usize) -> std::ops::Range<usize> {
        self.cycle_start[y]..self.cycle_start[y + 1]
    }

    /// Index into `cactus_edges` of a critical host edge.
    pub fn cactus_edge_index(&self, e: EdgeId) -> Option<usize> {
        self.is_critical(e).then(|| self.edge_slot[e])
    }

    /// Position of a critical edge within its cycle.
    pub fn position_in_cycle(&self, e: EdgeId) -> Option<usize> {
        let y = self.edge_cycle.get(e).copied().flatten()?;
        Some(self.edge_slot[e] - self.cycle_start[y])
    }

    /// Every 2-edge cut of the host graph.
    pub fn cut_pairs(&self) -> Vec<CutPair> {
        let mut out = Vec::new();
        for c in self.cycles() {
            for i in 0..c.edges.len() {
                for j in i + 1..c.edges.len() {
                    out.push(CutPair {
                        e: c.edges[i],
                        f: c.edges[j],
                    });
                }
            }
        }
        out
    }
}

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
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (a, b) = (self.find(a), self.find(b));
        if a != b {
            self.parent[a.max(b)] = a.min(b);
        }
    }
}

/// The cover labels are uniformly random already, so their low bits serve
/// as the hash.
#[derive(Default)]
struct LabelHasher(u64);

impl Hasher for LabelHasher {
    fn finish(&self) -> u64 {
        self.0
    }

    fn write(&mut self, bytes: &[u8]) {
        for &b in bytes {
            self.0 = (self.0 << 8) ^ u64::from(b);
        }
    }

    fn write_u128(&mut self, x: u128) {
        self.0 = x as u64;
    }
}

/// Fixed seed for the random cover labels; results are deterministic.
const COVER_SEED: u64 = 0x7472_6169_6c73;

/// The cactus of 3-edge-connected components of a 2-edge-connected graph.
///
/// Builds a DFS tree and labels every back edge with a random 128-bit value.
/// A tree edge's label is the xor of the back edges covering it, so two edges
/// form a 2-edge cut exactly when their labels agree (up to a collision
/// probability of about `m^2 / 2^128`). The tree edges of one class lie on a
/// root path, which fixes the cyclic order of the cactus cycle; endpoints of
/// consecutive class edges and of non-critical edges are then merged into
/// components.
pub fn three_edge_components(h: &MultiGraph) -> Result<Cactus> {
    let n = h.vertex_count();
    if n == 0 {
        return Ok(Cactus {
            vertex_to_node: Vec::new(),
            cactus_edges: Vec::new(),
            edge_cycle: vec![None; h.edge_count()],
            members: Vec::new(),
            member_start: vec![0],
            cycle_start: vec![0],
            cycle_edges: Vec::new(),
            cycle_nodes: Vec::new(),
            cycle_ends: Vec::new(),
            edge_slot: vec![NONE; h.edge_count()],
            junction_list: Vec::new(),
            junction_start: vec![0],
        });
    }

    let mut pre = vec![NONE; n];
    let mut parent_edge = vec![NONE; n];
    let mut order = Vec::with_capacity(n);
    let mut stack: Vec<(VertexId, usize)> = vec![(0, 0)];
    pre[0] = 0;
    order.push(0);
    while let Some(top) = stack.last_mut() {
        let (v, i) = *top;
        if let Some(inc) = h.incident(v).get(i) {
            top.1 += 1;
            let w = h.edge(inc.edge()).other(v);
            if pre[w] == NONE {
                pre[w] = order.len();
                order.push(w);
                parent_edge[w] = inc.edge();
                stack.push((w, 0));
            }
        } else {
            stack.pop();
        }
    }
    if order.len() < n {
        return Err(Error::NotTwoEdgeConnected);
    }

    let mut rng = ChaCha8Rng::seed_from_u64(COVER_SEED);
    let mut vertex_xor = vec![0u128; n];
    let mut edge_label = vec![0u128; h.edge_count()];
    let mut is_tree = vec![false; h.edge_count()];
    for &v in &order[1..] {
        is_tree[parent_edge[v]] = true;
    }
    for (e, rec) in h.edges() {
        if is_tree[e] || rec.is_loop() {
            continue;
        }
        let label: u128 = rng.gen();
        edge_label[e] = label;
        vertex_xor[rec.tail] ^= label;
        vertex_xor[rec.head] ^= label;
    }
    for &v in order[1..].iter().rev() {
        let e = parent_edge[v];
        edge_label[e] = vertex_xor[v];
        let p = h.edge(e).other(v);
        vertex_xor[p] ^= vertex_xor[v];
        if vertex_xor[v] == 0 {
            return Err(Error::NotTwoEdgeConnected);
        }
    }

    let mut class_of_label: HashMap<u128, usize, BuildHasherDefault<LabelHasher>> =
        HashMap::with_capacity_and_hasher(n, Default::default());
    // class of every tree edge, visited top-down in DFS preorder of the child
    let mut tree_class = Vec::with_capacity(n.saturating_sub(1));
    let mut class_size: Vec<usize> = Vec::new();
    for &v in &order[1..] {
        let label = edge_label[parent_edge[v]];
        let c = *class_of_label.entry(label).or_insert_with(|| {
            class_size.push(0);
            class_size.len() - 1
        });
        class_size[c] += 1;
        tree_class.push(c);
    }
    let mut back_of_class = vec![NONE; class_size.len()];
    for (e, rec) in h.edges() {
        if is_tree[e] || rec.is_loop() {
            continue;
        }
        // a back edge whose label matches no tree edge forms no 2-edge cut
        if let Some(&c) = class_of_label.get(&edge_label[e]) {
            assert!(back_of_class[c] == NONE, "cover label collision between back edges");
            back_of_class[c] = e;
        }
    }
    drop(class_of_label);
    // tree edges of class c are class_tree[class_start[c]..class_start[c + 1]]
    let mut class_start = vec![0usize; class_size.len() + 1];
    for c in 0..class_size.len() {
        class_start[c + 1] = class_start[c] + class_size[c];
    }
    let mut fill = class_start.clone();
    let mut class_tree = vec![NONE; tree_class.len()];
    for (&v, &c) in order[1..].iter().zip(&tree_class) {
        class_tree[fill[c]] = parent_edge[v];
        fill[c] += 1;
    }

    // child endpoint of a tree edge, ancestor endpoint of a back edge
    let child = |e: EdgeId| {
        let r = h.edge(e);
        if parent_edge[r.tail] == e {
            r.tail
        } else {
            r.head
        }
    };
    let ancestor_end = |e: EdgeId| {
        let r = h.edge(e);
        if pre[r.tail] <= pre[r.head] {
            (r.tail, r.head)
        } else {
            (r.head, r.tail)
        }
    };

    let mut dsu = Dsu::new(n);
    let mut critical = vec![false; h.edge_count()];
    // cycles in positive direction, stored flat
    let mut cycle_start = vec![0];
    let mut cycle_edges = Vec::new();
    let mut cycle_ends = Vec::new();
    for c in 0..class_size.len() {
        let tree = &class_tree[class_start[c]..class_start[c + 1]];
        let back = back_of_class[c];
        if tree.len() + usize::from(back != NONE) < 2 {
            continue;
        }
        let first = cycle_edges.len();
        // deepest tree edge first, each traversed child -> parent
        for &e in tree.iter().rev() {
            let c = child(e);
            cycle_edges.push(e);
            cycle_ends.push((c, h.edge(e).other(c)));
        }
        if back != NONE {
            cycle_edges.push(back);
            cycle_ends.push(ancestor_end(back));
        }
        let k = cycle_edges.len() - first;
        for i in 0..k {
            critical[cycle_edges[first + i]] = true;
            let next = first + (i + 1) % k;
            dsu.union(cycle_ends[first + i].1, cycle_ends[next].0);
        }
        cycle_start.push(cycle_edges.len());
    }
    for (e, rec) in h.edges() {
        if !critical[e] {
            dsu.union(rec.tail, rec.head);
        }
    }

    let mut vertex_to_node = vec![NONE; n];
    let mut node_of_root = vec![NONE; n];
    let mut node_size = Vec::new();
    for v in 0..n {
        let r = dsu.find(v);
        if node_of_root[r] == NONE {
            node_of_root[r] = node_size.len();
            node_size.push(0);
        }
        vertex_to_node[v] = node_of_root[r];
        node_size[node_of_root[r]] += 1;
    }
    let k = node_size.len();
    let member_start = prefix_sums(&node_size);
    let mut fill = member_start.clone();
    let mut members = vec![NONE; n];
    for v in 0..n {
        let c = vertex_to_node[v];
        members[fill[c]] = v;
        fill[c] += 1;
    }

    let cycle_nodes: Vec<usize> = cycle_ends.iter().map(|&(s, _)| vertex_to_node[s]).collect();
    let mut edge_cycle = vec![None; h.edge_count()];
    let mut edge_slot = vec![NONE; h.edge_count()];
    let mut cactus_edges = Vec::with_capacity(cycle_edges.len());
    let mut junction_count = vec![0usize; k];
    for y in 0..cycle_start.len() - 1 {
        let (lo, hi) = (cycle_start[y], cycle_start[y + 1]);
        for i in lo..hi {
            let next = if i + 1 == hi { lo } else { i + 1 };
            let e = cycle_edges[i];
            edge_cycle[e] = Some(y);
            edge_slot[e] = i;
            debug_assert_eq!(vertex_to_node[cycle_ends[i].1], cycle_nodes[next]);
            cactus_edges.push(CactusEdge {
                a: cycle_nodes[i],
                b: cycle_nodes[next],
                edge: e,
                cycle: y,
            });
            junction_count[cycle_nodes[i]] += 1;
        }
    }
    let junction_start = prefix_sums(&junction_count);
    let mut fill = junction_start.clone();
    let mut junction_list = vec![
        Junction {
            cycle: NONE,
            out_edge: NONE,
            out_end: NONE,
            in_edge: NONE,
            in_end: NONE,
        };
        cycle_edges.len()
    ];
    for y in 0..cycle_start.len() - 1 {
        let (lo, hi) = (cycle_start[y], cycle_start[y + 1]);
        for i in lo..hi {
            let prev = if i == lo { hi - 1 } else { i - 1 };
            let c = cycle_nodes[i];
            junction_list[fill[c]] = Junction {
                cycle: y,
                out_edge: cycle_edges[i],
                out_end: cycle_ends[i].0,
                in_edge: cycle_edges[prev],
                in_end: cycle_ends[prev].1,
            };
            fill[c] += 1;
        }
    }

    Ok(Cactus {
        vertex_to_node,
        cactus_edges,
        edge_cycle,
        members,
        member_start,
        cycle_start,
        cycle_edges,
        cycle_nodes,
        cycle_ends,
        edge_slot,
        junction_list,
        junction_start,
    })
}

fn prefix_sums(counts: &[usize]) -> Vec<usize> {
    let mut out = Vec::with_capacity(counts.len() + 1);
    out.push(0);
    for &c in counts {
        out.push(out.last().unwrap() + c);
    }
    out
}

/// No edge cut of size below 3. Graphs with at most one vertex qualify.
pub fn is_three_edge_connected(g: &MultiGraph) -> bool {
    if g.vertex_count() <= 1 {
        return true;
    }
    match three_edge_components(g) {
        Ok(c) => c.node_count() == 1,
        Err(_) => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Direction;

    fn g(n: usize, edges: &[(usize, usize)]) -> MultiGraph {
        MultiGraph::from_edges(n, edges).unwrap()
    }

    fn k4() -> MultiGraph {
        g(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
    }

    /// Component count after deleting each edge, compared to the original.
    fn brute_bridges(graph: &MultiGraph) -> Vec<EdgeId> {
        let base = components(graph).0;
        graph
            .edges()
            .map(|(e, _)| e)
            .filter(|&e| {
                let mut skip = vec![false; graph.edge_count()];
                skip[e] = true;
                components_without(graph, &skip).0 > base
            })
            .collect()
    }

    #[test]
    fn bridges_of_small_graphs() {
        assert_eq!(find_bridges(&g(3, &[(0, 1), (1, 2)])), vec![0, 1]);
        assert!(find_bridges(&g(3, &[(0, 1), (1, 2), (2, 0)])).is_empty());
        let two_triangles = g(6, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 3)]);
        assert_eq!(brute_bridges(&two_triangles), vec![3]);
        assert_eq!(find_bridges(&two_triangles), vec![3]);
        assert!(find_bridges(&g(2, &[(0, 1), (0, 1)])).is_empty());
        assert!(find_bridges(&g(1, &[(0, 0)])).is_empty());
    }

    #[test]
    fn two_edge_connectivity() {
        assert!(is_two_edge_connected(&MultiGraph::new(1)));
        assert!(!is_two_edge_connected(&g(3, &[(0, 1), (1, 2)])));
        assert!(is_two_edge_connected(&g(2, &[(0, 1), (0, 1)])));
        assert!(!is_two_edge_connected(&MultiGraph::new(2)));
    }

    #[test]
    fn strong_connectivity_of_mixed_graphs() {
        let mut c3 = MultiGraph::new(3);
        for (u, v) in [(0, 1), (1, 2), (2, 0)] {
            c3.add_fixed_edge(u, v).unwrap();
        }
        assert!(is_strongly_connected(&c3));
        assert!(!is_strongly_connected_without(&c3, Some(0)));

        let mut path = g(3, &[(0, 1), (1, 2), (2, 0)]);
        assert!(is_strongly_connected(&path));
        path.orient_edge(0, Direction::Forward).unwrap();
        path.orient_edge(1, Direction::Reversed).unwrap();
        assert!(!is_strongly_connected(&path));
    }

    #[test]
    fn cactus_of_k4_is_one_node() {
        let c = three_edge_components(&k4()).unwrap();
        assert_eq!(c.node_count(), 1);
        assert_eq!(c.edge_count(), 0);
        assert!(is_three_edge_connected(&k4()));
    }

    #[test]
    fn cactus_of_four_cycle() {
        let c4 = g(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
        let c = three_edge_components(&c4).unwrap();
        assert_eq!(c.node_count(), 4);
        assert_eq!(c.cycle_count(), 1);
        assert_eq!(c.cycle(0).edges.len(), 4);
        assert!((0..4).all(|e| c.is_critical(e)));
        assert_eq!(c.cut_pairs().len(), 6);
        assert!(!is_three_edge_connected(&c4));
    }

    #[test]
    fn cactus_of_two_blocks_joined_by_cut_pair() {
        // K4 minus edge {0,1} and K4 minus edge {4,5}, joined by (0,4), (1,5)
        let h = g(
            8,
            &[
                (0, 2), (0, 3), (1, 2), (1, 3), (2, 3),
                (4, 6), (4, 7), (5, 6), (5, 7), (6, 7),
                (0, 4), (1, 5),
            ],
        );
        let c = three_edge_components(&h).unwrap();
        assert_eq!(c.node_count(), 2);
        assert_eq!(c.members(0), &[0, 1, 2, 3]);
        assert_eq!(c.cycle_count(), 1);
        let mut edges = c.cycle(0).edges.to_vec();
        edges.sort();
        assert_eq!(edges, vec![10, 11]);
        for node in 0..2 {
            assert_eq!(c.junctions(node).len(), 1);
        }
    }

    #[test]
    fn theta_components_are_not_induced_connected() {
        // u=0, v=1 joined by three paths of length two
        let h = g(5, &[(0, 2), (2, 1), (0, 3), (3, 1), (0, 4), (4, 1)]);
        let c = three_edge_components(&h).unwrap();
        let node = c.vertex_to_node[0];
        assert_eq!(c.vertex_to_node[1], node);
        assert_eq!(c.node_count(), 4);
        assert_eq!(c.junctions(node).len(), 3);
    }

    #[test]
    fn cactus_rejects_bridges() {
        assert_eq!(
            three_edge_components(&g(3, &[(0, 1), (1, 2)])),
            Err(Error::NotTwoEdgeConnected)
        );
        assert_eq!(
            three_edge_components(&MultiGraph::new(2)),
            Err(Error::NotTwoEdgeConnected)
        );
        let single = three_edge_components(&MultiGraph::new(1)).unwrap();
        assert_eq!(single.node_count(), 1);
        assert_eq!(single.edge_count(), 0);
    }
}
