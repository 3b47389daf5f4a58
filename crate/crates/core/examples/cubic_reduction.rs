//! Replaces every vertex by a cycle so the graph becomes cubic, orients the
//! cubic graph, and reads the orientation back.

use trail_orient::linear::{orient_linear, reduce_to_cubic};
use trail_orient::oracle::verify::verify;
use trail_orient::{MultiGraph, TrailPartition};

fn main() -> trail_orient::Result<()> {
    // Two triangles sharing vertex 0, walked as one closed trail.
    let g = MultiGraph::from_edges(5, &[(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)])?;
    let p = TrailPartition::new(vec![vec![0, 1, 2, 3, 4, 5]]);
    let (h, q, map) = reduce_to_cubic(&g, &p)?;
    println!(
        "original: {} vertices, {} edges; cubic: {} vertices, {} edges, {} trails",
        g.vertex_count(),
        g.edge_count(),
        h.vertex_count(),
        h.edge_count(),
        q.len()
    );
    for (v, cycle) in map.cycle_of_vertex.iter().enumerate() {
        println!("  vertex {v} -> {cycle:?}");
    }
    let o = orient_linear(&h, &q)?.into_orientation().expect("feasible");
    let back = map.pull_back(&o);
    println!("pulled back: {:?}", verify(&g, &p, &back));
    Ok(())
}
