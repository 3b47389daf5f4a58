//! Instance generators: exhaustive small multigraphs with all their trail
//! partitions, seeded random families, and fixed gadgets.

use std::collections::{HashSet, VecDeque};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::connectivity::is_two_edge_connected;
use crate::error::{Error, Result};
use crate::graph::{EdgeId, MultiGraph, VertexId};
use crate::instance::Instance;
use crate::trails::TrailPartition;

/// Which instances `gen_instances` produces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InstanceSpec {
    /// All connected loopless multigraphs with `1..=max_vertices` vertices
    /// and at most `max_edges` edges, each with every trail partition. With
    /// `directions` set, also every assignment of {undirected, forward,
    /// backward} to the edges.
    Exhaustive {
        max_vertices: usize,
        max_edges: usize,
        directions: bool,
        up_to_isomorphism: bool,
    },
    /// A 2-edge-connected cubic multigraph with `n` vertices (n even).
    RandomCubic { n: usize, seed: u64 },
    /// Random ear-built 2-edge-connected multigraphs.
    RandomTwoEdgeConnected {
        n: usize,
        extra_edges: usize,
        loops: bool,
        count: usize,
        seed: u64,
    },
    /// Random mixed graphs: each edge of a random 2-edge-connected graph is
    /// directed with probability `directed_percent`. With `motifs`, every
    /// other instance carries a glued copy of the `fig1` gadget.
    MixedRandom {
        n: usize,
        extra_edges: usize,
        directed_percent: u32,
        motifs: bool,
        count: usize,
        seed: u64,
    },
}

pub type Instances = Box<dyn Iterator<Item = Instance>>;

pub fn gen_instances(spec: &InstanceSpec) -> Result<Instances> {
    match *spec {
        InstanceSpec::Exhaustive {
            max_vertices,
            max_edges,
            directions,
            up_to_isomorphism,
        } => {
            if max_vertices == 0 {
                return Err(Error::Precondition("exhaustive mode needs max_vertices >= 1".into()));
            }
            if max_edges + 1 < max_vertices {
                return Err(Error::Precondition(format!(
                    "no connected graph on {max_vertices} vertices has at most {max_edges} edges"
                )));
            }
            let graphs = connected_multigraphs(max_vertices, max_edges, up_to_isomorphism);
            Ok(Box::new(graphs.into_iter().flat_map(move |g| {
                let patterns: Box<dyn Iterator<Item = MultiGraph>> = if directions {
                    Box::new(direction_patterns(&g))
                } else {
                    Box::new(std::iter::once(g))
                };
                patterns.flat_map(|g| {
                    TrailPartitions::new(&g).map(move |trails| Instance {
                        graph: g.clone(),
                        trails,
                    })
                })
            })))
        }
        InstanceSpec::RandomCubic { n, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let graph = random_cubic(n, &mut rng)?;
            let trails = random_trail_partition(&graph, &mut rng);
            Ok(Box::new(std::iter::once(Instance { graph, trails })))
        }
        InstanceSpec::RandomTwoEdgeConnected {
            n,
            extra_edges,
            loops,
            count,
            seed,
        } => {
            if n == 0 {
                return Err(Error::Precondition("need at least one vertex".into()));
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            Ok(Box::new((0..count).map(move |_| {
                let graph = random_two_edge_connected(n, extra_edges, loops, &mut rng);
                let trails = random_trail_partition(&graph, &mut rng);
                Instance { graph, trails }
            })))
        }
        InstanceSpec::MixedRandom {
            n,
            extra_edges,
            directed_percent,
            motifs,
            count,
            seed,
        } => {
            if n == 0 || directed_percent > 100 {
                return Err(Error::Precondition(
                    "need n >= 1 and directed_percent <= 100".into(),
                ));
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            Ok(Box::new((0..count).map(move |i| {
                let base = random_two_edge_connected(n, extra_edges, false, &mut rng);
                let mut g = random_directions(&base, directed_percent, &mut rng);
                if motifs && i % 2 == 1 {
                    g = glue_fig1(&g, &mut rng);
                }
                let trails = random_trail_partition(&g, &mut rng);
                Instance { graph: g, trails }
            })))
        }
    }
}

/// The 5-vertex mixed gadget that is strongly connected with a bridgeless
/// underlying graph, yet has no strong trail orientation: the undirected
/// trail a-b-c is forced both ways. Vertices a, b, c, d, e are 0..5.
pub fn fig1() -> Instance {
    let mut g = MultiGraph::new(5);
    let (a, b, c, d, e) = (0, 1, 2, 3, 4);
    g.add_edge(a, b).unwrap();
    g.add_edge(b, c).unwrap();
    g.add_fixed_edge(a, d).unwrap();
    g.add_fixed_edge(d, b).unwrap();
    g.add_fixed_edge(c, e).unwrap();
    g.add_fixed_edge(e, b).unwrap();
    Instance {
        graph: g,
        trails: TrailPartition::new(vec![vec![0, 1]]),
    }
}

/// Path with `len` edges, singleton trails.
pub fn path(len: usize) -> Instance {
    let edges: Vec<_> = (0..len).map(|i| (i, i + 1)).collect();
    Instance::with_singleton_trails(MultiGraph::from_edges(len + 1, &edges).unwrap())
}

/// Cycle with `len` edges (`len >= 1`; a 1-cycle is a loop), singleton trails.
pub fn cycle(len: usize) -> Instance {
    let edges: Vec<_> = (0..len).map(|i| (i, (i + 1) % len)).collect();
    Instance::with_singleton_trails(MultiGraph::from_edges(len.max(1), &edges).unwrap())
}

/// Random cubic multigraph from the configuration model, with self-loops
/// switched away and resampled until 2-edge connected.
pub fn random_cubic<R: Rng>(n: usize, rng: &mut R) -> Result<MultiGraph> {
    if n < 2 || n % 2 == 1 {
        return Err(Error::Precondition(format!(
            "a cubic multigraph needs an even number of at least 2 vertices, got {n}"
        )));
    }
    loop {
        let mut stubs: Vec<VertexId> = (0..3 * n).map(|s| s / 3).collect();
        stubs.shuffle(rng);
        let mut pairs: Vec<(VertexId, VertexId)> =
            stubs.chunks_exact(2).map(|c| (c[0], c[1])).collect();
        let mut attempts = 0;
        let mut i = 0;
        while i < pairs.len() {
            let (a, b) = pairs[i];
            if a != b {
                i += 1;
                continue;
            }
            attempts += 1;
            if attempts > 100 * pairs.len() {
                break;
            }
            let j = rng.gen_range(0..pairs.len());
            let (c, d) = pairs[j];
            if j == i || c == a || d == a {
                continue;
            }
            pairs[i] = (a, c);
            pairs[j] = (a, d);
        }
        if pairs.iter().any(|&(a, b)| a == b) {
            continue;
        }
        let g = MultiGraph::from_edges(n, &pairs)?;
        if is_two_edge_connected(&g) {
            return Ok(g);
        }
    }
}

/// Random 2-edge-connected multigraph on `n` vertices built from ears,
/// followed by `extra_edges` random chords.
pub fn random_two_edge_connected<R: Rng>(
    n: usize,
    extra_edges: usize,
    loops: bool,
    rng: &mut R,
) -> MultiGraph {
    assert!(n >= 1);
    let mut edges: Vec<(VertexId, VertexId)> = Vec::new();
    let mut placed = 1;
    while placed < n {
        let a = rng.gen_range(0..placed);
        let b = rng.gen_range(0..placed);
        let max_inner = n - placed;
        let inner = rng.gen_range(1..=max_inner.min(4));
        let mut prev = a;
        for k in 0..inner {
            let v = placed + k;
            edges.push((prev, v));
            prev = v;
        }
        edges.push((prev, b));
        placed += inner;
    }
    for _ in 0..extra_edges {
        let a = rng.gen_range(0..n);
        let b = rng.gen_range(0..n);
        if a == b && !loops {
            if n == 1 {
                continue;
            }
            edges.push((a, (a + 1) % n));
        } else {
            edges.push((a, b));
        }
    }
    // shuffle vertex labels and edge order
    let mut perm: Vec<VertexId> = (0..n).collect();
    perm.shuffle(rng);
    edges.shuffle(rng);
    let edges: Vec<_> = edges
        .into_iter()
        .map(|(u, v)| {
            if rng.gen_bool(0.5) {
                (perm[u], perm[v])
            } else {
                (perm[v], perm[u])
            }
        })
        .collect();
    let g = MultiGraph::from_edges(n, &edges).expect("vertices in range");
    debug_assert!(is_two_edge_connected(&g));
    g
}

fn random_directions<R: Rng>(g: &MultiGraph, percent: u32, rng: &mut R) -> MultiGraph {
    let mut out = MultiGraph::new(g.vertex_count());
    for (_, r) in g.edges() {
        if rng.gen_range(0..100) < percent {
            if rng.gen_bool(0.5) {
                out.add_fixed_edge(r.tail, r.head).unwrap();
            } else {
                out.add_fixed_edge(r.head, r.tail).unwrap();
            }
        } else {
            out.add_edge(r.tail, r.head).unwrap();
        }
    }
    out
}

/// Disjoint union of `g` and the `fig1` gadget, with the gadget's vertex b
/// identified with a random vertex of `g`. Any instance built this way has no
/// strong trail orientation, because the gadget has none.
fn glue_fig1<R: Rng>(g: &MultiGraph, rng: &mut R) -> MultiGraph {
    let gadget = fig1().graph;
    let n = g.vertex_count();
    let anchor = rng.gen_range(0..n);
    // gadget vertices: b (1) -> anchor, others -> n..n+4
    let map = |v: VertexId| match v {
        1 => anchor,
        0 => n,
        _ => n + v - 1,
    };
    let mut out = g.clone();
    for _ in 0..4 {
        out.add_vertex();
    }
    for (_, r) in gadget.edges() {
        if r.state.is_undirected() {
            out.add_edge(map(r.tail), map(r.head)).unwrap();
        } else {
            out.add_fixed_edge(map(r.tail), map(r.head)).unwrap();
        }
    }
    out
}

/// Grows maximal random trails over unused undirected edges until every
/// undirected edge is covered.
pub fn random_trail_partition<R: Rng>(g: &MultiGraph, rng: &mut R) -> TrailPartition {
    let mut order: Vec<EdgeId> = g.undirected_edges().collect();
    order.shuffle(rng);
    let mut used = vec![false; g.edge_count()];
    let mut trails = Vec::new();
    let mut candidates = Vec::new();
    let mut extend = |from: VertexId, used: &mut Vec<bool>, rng: &mut R, out: &mut Vec<EdgeId>| {
        let mut at = from;
        loop {
            candidates.clear();
            candidates.extend(
                g.incident(at)
                    .iter()
                    .map(|inc| inc.edge())
                    .filter(|&e| !used[e] && g.edge(e).state.is_undirected()),
            );
            let Some(&e) = candidates.choose(rng) else {
                break;
            };
            used[e] = true;
            out.push(e);
            at = g.edge(e).other(at);
        }
    };
    for e0 in order {
        if used[e0] {
            continue;
        }
        used[e0] = true;
        let rec = *g.edge(e0);
        let mut forward = Vec::new();
        extend(rec.head, &mut used, rng, &mut forward);
        let mut backward = Vec::new();
        extend(rec.tail, &mut used, rng, &mut backward);
        let mut trail: Vec<EdgeId> = backward.into_iter().rev().collect();
        trail.push(e0);
        trail.extend(forward);
        trails.push(trail);
    }
    TrailPartition::new(trails)
}

/// All connected loopless multigraphs with `1..=max_vertices` vertices and at
/// most `max_edges` edges. Up to isomorphism, only graphs whose degree
/// sequence is non-increasing are considered and each class is kept once.
pub fn connected_multigraphs(
    max_vertices: usize,
    max_edges: usize,
    up_to_isomorphism: bool,
) -> Vec<MultiGraph> {
    let mut out = Vec::new();
    for n in 1..=max_vertices {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        let mut seen: HashSet<Vec<(usize, usize)>> = HashSet::new();
        for m in n.saturating_sub(1)..=max_edges {
            if n == 1 && m > 0 {
                break;
            }
            let mut choice = vec![0usize; m];
            loop {
                let edges: Vec<(usize, usize)> = choice.iter().map(|&i| pairs[i]).collect();
                if let Some(g) = accept_graph(n, &edges, up_to_isomorphism, &mut seen) {
                    out.push(g);
                }
                if !next_multiset(&mut choice, pairs.len()) {
                    break;
                }
            }
        }
    }
    out
}

/// Advances a non-decreasing index sequence; false when exhausted.
fn next_multiset(choice: &mut [usize], k: usize) -> bool {
    let m = choice.len();
    if m == 0 || k == 0 {
        return false;
    }
    let mut i = m;
    while i > 0 {
        i -= 1;
        if choice[i] + 1 < k {
            let v = choice[i] + 1;
            for c in &mut choice[i..] {
                *c = v;
            }
            return true;
        }
    }
    false
}

fn accept_graph(
    n: usize,
    edges: &[(usize, usize)],
    up_to_isomorphism: bool,
    seen: &mut HashSet<Vec<(usize, usize)>>,
) -> Option<MultiGraph> {
    let mut deg = vec![0usize; n];
    for &(u, v) in edges {
        deg[u] += 1;
        deg[v] += 1;
    }
    if up_to_isomorphism && deg.windows(2).any(|w| w[0] < w[1]) {
        return None;
    }
    if n > 1 && deg.contains(&0) {
        return None;
    }
    let g = MultiGraph::from_edges(n, edges).unwrap();
    if !crate::connectivity::is_connected(&g) {
        return None;
    }
    if up_to_isomorphism && !seen.insert(canonical_form(n, edges, &deg)) {
        return None;
    }
    Some(g)
}

/// Lexicographically least sorted edge list over vertex permutations that
/// keep the (non-increasing) degree sequence in place.
fn canonical_form(n: usize, edges: &[(usize, usize)], deg: &[usize]) -> Vec<(usize, usize)> {
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best: Option<Vec<(usize, usize)>> = None;
    let mut relabelled = Vec::with_capacity(edges.len());
    loop {
        relabelled.clear();
        relabelled.extend(edges.iter().map(|&(u, v)| {
            let (a, b) = (perm[u], perm[v]);
            (a.min(b), a.max(b))
        }));
        relabelled.sort_unstable();
        if best.as_ref().is_none_or(|b| relabelled < *b) {
            best = Some(relabelled.clone());
        }
        if !next_degree_preserving_perm(&mut perm, deg) {
            break;
        }
    }
    best.unwrap()
}

/// Next permutation that only permutes within runs of equal degree.
fn next_degree_preserving_perm(perm: &mut [usize], deg: &[usize]) -> bool {
    // runs are contiguous because deg is non-increasing; advance the last run
    // that still has a next permutation and reset the runs after it
    let n = perm.len();
    let mut runs = Vec::new();
    let mut s = 0;
    for i in 1..=n {
        if i == n || deg[i] != deg[s] {
            runs.push((s, i));
            s = i;
        }
    }
    for &(a, b) in runs.iter().rev() {
        if next_permutation(&mut perm[a..b]) {
            return true;
        }
        perm[a..b].sort_unstable();
    }
    false
}

fn next_permutation(xs: &mut [usize]) -> bool {
    let n = xs.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && xs[i - 1] >= xs[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while xs[j] <= xs[i - 1] {
        j -= 1;
    }
    xs.swap(i - 1, j);
    xs[i..].reverse();
    true
}

/// Every way to leave each edge undirected or fix it in one of its two
/// directions (`3^m` graphs).
pub fn direction_patterns(g: &MultiGraph) -> impl Iterator<Item = MultiGraph> {
    let edges: Vec<(VertexId, VertexId)> = g.edges().map(|(_, r)| (r.tail, r.head)).collect();
    let n = g.vertex_count();
    let total = 3usize.pow(edges.len() as u32);
    (0..total).map(move |mut code| {
        let mut out = MultiGraph::new(n);
        for &(u, v) in &edges {
            match code % 3 {
                0 => out.add_edge(u, v).unwrap(),
                1 => out.add_fixed_edge(u, v).unwrap(),
                _ => out.add_fixed_edge(v, u).unwrap(),
            };
            code /= 3;
        }
        out
    })
}

/// Every trail partition of the undirected edges of a graph.
///
/// A partition is determined by which pairs of edge ends are chained at each
/// vertex, so this enumerates the product over vertices of all partial
/// matchings of their incident undirected edge ends. Transition systems with a
/// closed chain are skipped, since cutting the chain gives a partition that
/// an open system already yields.
pub struct TrailPartitions {
    graph: MultiGraph,
    /// per vertex: its undirected edge ends and all their partial matchings
    ends: Vec<Vec<(EdgeId, u8)>>,
    matchings: Vec<Vec<Vec<(usize, usize)>>>,
    counter: Vec<usize>,
    done: bool,
}

impl TrailPartitions {
    pub fn new(g: &MultiGraph) -> Self {
        let n = g.vertex_count();
        let mut ends = vec![Vec::new(); n];
        for (v, list) in ends.iter_mut().enumerate() {
            for inc in g.incident(v) {
                if g.edge(inc.edge()).state.is_undirected() {
                    list.push((inc.edge(), inc.slot()));
                }
            }
        }
        let matchings = ends.iter().map(|l| partial_matchings(l.len())).collect();
        TrailPartitions {
            graph: g.clone(),
            ends,
            matchings,
            counter: vec![0; n],
            done: false,
        }
    }


    fn build(&self) -> Option<TrailPartition> {
        let g = &self.graph;
        let m = g.edge_count();
        // partner[2e + slot] = partner end
        let mut partner = vec![usize::MAX; 2 * m];
        for (v, &c) in self.counter.iter().enumerate() {
            for &(a, b) in &self.matchings[v][c] {
                let (ea, sa) = self.ends[v][a];
                let (eb, sb) = self.ends[v][b];
                partner[2 * ea + sa as usize] = 2 * eb + sb as usize;
                partner[2 * eb + sb as usize] = 2 * ea + sa as usize;
            }
        }
        let mut used = vec![false; m];
        let mut trails = Vec::new();
        let walk = |start: EdgeId, leave_slot: usize, used: &mut Vec<bool>| {
            let mut trail = vec![start];
            used[start] = true;
            let mut end = 2 * start + leave_slot;
            loop {
                let p = partner[end];
                if p == usize::MAX {
                    break;
                }
                let e = p / 2;
                if used[e] {
                    break;
                }
                used[e] = true;
                trail.push(e);
                end = 2 * e + (1 - p % 2);
            }
            trail
        };
        let undirected: Vec<EdgeId> = g.undirected_edges().collect();
        for &e in &undirected {
            if used[e] {
                continue;
            }
            if partner[2 * e] == usize::MAX {
                trails.push(walk(e, 1, &mut used));
            } else if partner[2 * e + 1] == usize::MAX {
                trails.push(walk(e, 0, &mut used));
            }
        }
        if undirected.iter().any(|&e| !used[e]) {
            return None;
        }
        Some(TrailPartition::new(trails))
    }
}

impl Iterator for TrailPartitions {
    type Item = TrailPartition;

    fn next(&mut self) -> Option<TrailPartition> {
        loop {
            if self.done {
                return None;
            }
            let item = self.build();
            self.advance();
            if item.is_some() {
                return item;
            }
        }
    }
}

impl TrailPartitions {
    fn advance(&mut self) {
        // advance mixed-radix counter
        let mut i = 0;
        loop {
            if i == self.counter.len() {
                self.done = true;
                break;
            }
            self.counter[i] += 1;
            if self.counter[i] < self.matchings[i].len() {
                break;
            }
            self.counter[i] = 0;
            i += 1;
        }
    }
}

/// All partial matchings on `k` items, as index pairs.
fn partial_matchings(k: usize) -> Vec<Vec<(usize, usize)>> {
    fn rec(rest: &mut VecDeque<usize>, cur: &mut Vec<(usize, usize)>, out: &mut Vec<Vec<(usize, usize)>>) {
        let Some(first) = rest.pop_front() else {
            out.push(cur.clone());
            return;
        };
        // first unmatched
        rec(rest, cur, out);
        for i in 0..rest.len() {
            let other = rest.remove(i).unwrap();
            cur.push((first, other));
            rec(rest, cur, out);
            cur.pop();
            rest.insert(i, other);
        }
        rest.push_front(first);
    }
    let mut out = Vec::new();
    rec(&mut (0..k).collect(), &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::connectivity::{is_connected, is_strongly_connected};

    #[test]
    fn telephone_numbers() {
        let counts: Vec<usize> = (0..7).map(|k| partial_matchings(k).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 10, 26, 76]);
    }

    #[test]
    fn trail_partitions_of_triangle() {
        let g = cycle(3).graph;
        let all: Vec<_> = TrailPartitions::new(&g).collect();
        // three singletons, three (2+1) splits, one 3-trail
        assert_eq!(all.len(), 7);
        assert!(all.iter().all(|p| p.is_valid(&g)));
        let distinct: HashSet<_> = all.iter().map(|p| p.to_string()).collect();
        assert_eq!(distinct.len(), 7);
    }

    #[test]
    fn trail_partitions_with_loop_and_directed_edge() {
        let mut g = MultiGraph::from_edges(2, &[(0, 1), (1, 1), (0, 1)]).unwrap();
        g.add_fixed_edge(1, 0).unwrap();
        let all: Vec<_> = TrailPartitions::new(&g).collect();
        assert!(all.iter().all(|p| p.is_valid(&g)), "{all:?}");
    }

    #[test]
    fn exhaustive_small_graphs_include_cycles_and_parallel_pairs() {
        let graphs = connected_multigraphs(4, 5, true);
        let has = |n: usize, m: usize, pred: &dyn Fn(&MultiGraph) -> bool| {
            graphs
                .iter()
                .any(|g| g.vertex_count() == n && g.live_edge_count() == m && pred(g))
        };
        let all_deg2 = |g: &MultiGraph| (0..g.vertex_count()).all(|v| g.degree(v) == 2);
        assert!(has(3, 3, &all_deg2));
        assert!(has(4, 4, &all_deg2));
        assert!(has(2, 2, &all_deg2));
        assert!(graphs.iter().all(is_connected));
        // unlabeled connected multigraphs on 3 vertices with 2 edges: the path only
        assert_eq!(
            graphs
                .iter()
                .filter(|g| g.vertex_count() == 3 && g.live_edge_count() == 2)
                .count(),
            1
        );
        // labelled enumeration is larger
        assert!(connected_multigraphs(4, 5, false).len() > graphs.len());
    }

    #[test]
    fn isomorphism_classes_of_small_multigraphs() {
        // connected loopless multigraphs on 3 vertices with 3 edges:
        // triangle, and path with one doubled edge
        let graphs = connected_multigraphs(3, 3, true);
        let n3m3 = graphs
            .iter()
            .filter(|g| g.vertex_count() == 3 && g.live_edge_count() == 3)
            .count();
        assert_eq!(n3m3, 2);
    }

    #[test]
    fn exhaustive_spec_rejects_impossible_bounds() {
        let spec = InstanceSpec::Exhaustive {
            max_vertices: 5,
            max_edges: 2,
            directions: false,
            up_to_isomorphism: true,
        };
        assert!(gen_instances(&spec).is_err());
    }

    #[test]
    fn random_cubic_is_reproducible() {
        let spec = InstanceSpec::RandomCubic { n: 1000, seed: 7 };
        let a = gen_instances(&spec).unwrap().next().unwrap();
        let b = gen_instances(&spec).unwrap().next().unwrap();
        assert_eq!(a, b);
        assert_eq!(a.graph.vertex_count(), 1000);
        assert!((0..1000).all(|v| a.graph.degree(v) == 3));
        assert!(is_two_edge_connected(&a.graph));
        assert!(a.trails.is_valid(&a.graph));
    }

    #[test]
    fn random_two_edge_connected_instances_are_certified() {
        let spec = InstanceSpec::RandomTwoEdgeConnected {
            n: 9,
            extra_edges: 3,
            loops: true,
            count: 200,
            seed: 1,
        };
        for inst in gen_instances(&spec).unwrap() {
            assert!(is_two_edge_connected(&inst.graph));
            assert!(inst.trails.is_valid(&inst.graph));
        }
    }

    #[test]
    fn mixed_motifs_are_strongly_connected_gadgets() {
        let spec = InstanceSpec::MixedRandom {
            n: 6,
            extra_edges: 4,
            directed_percent: 0,
            motifs: true,
            count: 10,
            seed: 3,
        };
        let all: Vec<_> = gen_instances(&spec).unwrap().collect();
        for (i, inst) in all.iter().enumerate() {
            assert!(inst.trails.is_valid(&inst.graph));
            assert!(is_strongly_connected(&inst.graph));
            assert_eq!(inst.graph.has_directed_edges(), i % 2 == 1);
        }
    }

    #[test]
    fn gadgets() {
        let f = fig1();
        assert!(f.trails.is_valid(&f.graph));
        assert!(is_strongly_connected(&f.graph));
        let p = path(2);
        assert_eq!(p.graph.live_edge_count(), 2);
    }
}
