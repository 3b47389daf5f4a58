#![allow(dead_code)]

use rand::Rng;
use trail_orient::connectivity::{components, components_without, Cactus};
use trail_orient::oracle::verify::local_edge_connectivity;
use trail_orient::{MultiGraph, VertexId};

/// Random connected undirected multigraph: a random spanning tree plus
/// `extra` random edges, each a self-loop with probability 1/8.
pub fn random_connected<R: Rng>(n: usize, extra: usize, rng: &mut R) -> MultiGraph {
    let mut g = MultiGraph::new(n);
    for v in 1..n {
        let u = rng.gen_range(0..v);
        g.add_edge(u, v).unwrap();
    }
    for _ in 0..extra {
        let u = rng.gen_range(0..n);
        let v = if rng.gen_ratio(1, 8) { u } else { rng.gen_range(0..n) };
        g.add_edge(u, v).unwrap();
    }
    g
}

/// Structural checks on a cactus of a 2-edge-connected host graph. Returns
/// the first problem found.
pub fn check_cactus(g: &MultiGraph, cactus: &Cactus) -> Result<(), String> {
    let nodes = cactus.node_count();
    let node = &cactus.vertex_to_node;

    // members agree with vertex_to_node
    for c in 0..nodes {
        for &v in cactus.members(c) {
            if node[v] != c {
                return Err(format!("vertex {v} listed in node {c} but mapped to {}", node[v]));
            }
        }
    }
    let listed: usize = (0..nodes).map(|c| cactus.members(c).len()).sum();
    if listed != g.vertex_count() {
        return Err(format!("{listed} members listed for {} vertices", g.vertex_count()));
    }

    // m <= 2(n - 1)
    let m = cactus.edge_count();
    if nodes > 0 && m > 2 * (nodes - 1) {
        return Err(format!("{m} cactus edges on {nodes} nodes"));
    }

    // contracting every node class and dropping inner edges gives the cactus
    let mut mapped = 0;
    for (e, rec) in g.edges() {
        let (a, b) = (node[rec.tail], node[rec.head]);
        match cactus.cactus_edge_index(e) {
            None if a != b => return Err(format!("edge {e} joins nodes {a} and {b} but is not a cactus edge")),
            None => {}
            Some(i) => {
                let ce = cactus.cactus_edges[i];
                if ce.edge != e || (ce.a, ce.b) != (a, b) && (ce.a, ce.b) != (b, a) || a == b {
                    return Err(format!("edge {e} does not match cactus edge {ce:?}"));
                }
                mapped += 1;
            }
        }
    }
    if mapped != m {
        return Err(format!("{mapped} host edges map to {m} cactus edges"));
    }

    // every listed cycle is a simple closed walk, the cycles partition the
    // cactus edges, and their number is the cycle rank of the cactus; then
    // the node-cycle incidence graph is a tree, so no edge is on two cycles
    let mut cactus_graph = MultiGraph::new(nodes);
    let mut covered = 0;
    for (y, cycle) in cactus.cycles().enumerate() {
        let k = cycle.edges.len();
        if k < 2 {
            return Err(format!("cycle {y} has {k} edges"));
        }
        let mut seen = std::collections::HashSet::new();
        for i in 0..k {
            if !seen.insert(cycle.nodes[i]) {
                return Err(format!("cycle {y} repeats node {}", cycle.nodes[i]));
            }
            let (from, to) = (cycle.nodes[i], cycle.nodes[(i + 1) % k]);
            let ce = cactus.cactus_edges[cactus.cactus_edge_index(cycle.edges[i]).unwrap()];
            if (ce.a, ce.b) != (from, to) && (ce.a, ce.b) != (to, from) || ce.cycle != y {
                return Err(format!("cycle {y} step {i} does not follow its edge"));
            }
            cactus_graph.add_edge(from, to).unwrap();
        }
        covered += k;
    }
    if covered != m {
        return Err(format!("cycles cover {covered} of {m} cactus edges"));
    }
    let (parts, _) = components(&cactus_graph);
    if nodes > 0 && parts != 1 {
        return Err(format!("cactus has {parts} components"));
    }
    if nodes > 0 && m + 1 != nodes + cactus.cycle_count() {
        return Err(format!(
            "cycle rank {} but {} cycles",
            m + 1 - nodes,
            cactus.cycle_count()
        ));
    }

    // every reported pair really is a cut
    for cut in cactus.cut_pairs() {
        let mut skip = vec![false; g.edge_count()];
        skip[cut.e] = true;
        skip[cut.f] = true;
        if components_without(g, &skip).0 < 2 {
            return Err(format!("{cut:?} does not disconnect"));
        }
    }
    Ok(())
}

/// u and v share a node exactly when three edge-disjoint paths join them.
pub fn check_against_max_flow(g: &MultiGraph, cactus: &Cactus) -> Result<(), String> {
    let n = g.vertex_count();
    for u in 0..n {
        for v in u + 1..n {
            let same = cactus.vertex_to_node[u] == cactus.vertex_to_node[v];
            let flow = local_edge_connectivity(g, u, v, 3);
            if same != (flow >= 3) {
                return Err(format!("vertices {u}, {v}: same node = {same}, max flow = {flow}"));
            }
        }
    }
    Ok(())
}

pub fn degrees(g: &MultiGraph) -> Vec<usize> {
    (0..g.vertex_count() as VertexId).map(|v| g.degree(v)).collect()
}
