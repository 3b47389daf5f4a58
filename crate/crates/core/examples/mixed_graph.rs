//! Mixed graphs: forced edges, the robustness test, and a strongly connected
//! bridgeless instance that still has no strong trail orientation.

use trail_orient::connectivity::{is_strongly_connected, is_two_edge_connected};
use trail_orient::mixed::{check_robust, extend_trail_orientation, forced_edges, orient_mixed};
use trail_orient::oracle::generate::fig1;
use trail_orient::oracle::verify::{brute_force_feasible, DEFAULT_TRAIL_CAP};
use trail_orient::{Direction, MultiGraph, TrailPartition};

fn main() -> trail_orient::Result<()> {
    let inst = fig1();
    let (g, p) = (&inst.graph, &inst.trails);
    println!(
        "gadget: strongly connected = {}, bridgeless = {}",
        is_strongly_connected(g),
        is_two_edge_connected(g)
    );
    for s in forced_edges(g) {
        println!("  edge {} forced: {:?}", s.edge, s.forced_direction);
    }
    println!("  orient_mixed: feasible = {}", orient_mixed(g, p)?.is_feasible());
    println!(
        "  brute force:  feasible = {}",
        brute_force_feasible(g, p, DEFAULT_TRAIL_CAP)?.is_feasible()
    );

    // A 4-cycle of undirected edges with an arc across: no edge is forced,
    // so either direction of either trail extends to a strong orientation.
    let mut g = MultiGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)])?;
    g.add_fixed_edge(0, 2)?;
    let p = TrailPartition::new(vec![vec![0, 1], vec![2, 3]]);
    println!("cycle with chord: robust = {}", check_robust(&g));
    for t in 0..p.len() {
        for dir in [Direction::Forward, Direction::Reversed] {
            let sol = extend_trail_orientation(&g, &p, t, dir)?;
            println!("  trail {t} {dir:?}: extends = {}", sol.is_feasible());
        }
    }
    Ok(())
}
