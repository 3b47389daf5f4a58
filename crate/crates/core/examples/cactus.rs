//! 3-edge-connected components and the cactus of 2-edge cuts.

use trail_orient::connectivity::three_edge_components;
use trail_orient::MultiGraph;

fn main() -> trail_orient::Result<()> {
    // Two triangles joined by two edges, and a third triangle with a doubled
    // edge hanging off vertex 0.
    let g = MultiGraph::from_edges(
        8,
        &[
            (0, 1), (1, 2), (2, 0),
            (3, 4), (4, 5), (5, 3),
            (0, 3), (2, 5),
            (0, 6), (6, 7), (7, 0), (6, 7),
        ],
    )?;
    let cactus = three_edge_components(&g)?;
    println!("{} components, {} cycles", cactus.node_count(), cactus.cycle_count());
    for c in 0..cactus.node_count() {
        println!("  node {c}: {:?}", cactus.members(c));
    }
    for (y, cycle) in cactus.cycles().enumerate() {
        println!("  cycle {y}: edges {:?} through nodes {:?}", cycle.edges, cycle.nodes);
    }
    for cut in cactus.cut_pairs() {
        println!("  2-edge cut {{{}, {}}}", cut.e, cut.f);
    }
    Ok(())
}
