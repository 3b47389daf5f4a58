//! Orients the trails of a small undirected multigraph with both the
//! recursive splitter and the linear-time algorithm.

use trail_orient::oracle::verify::verify;
use trail_orient::{linear, naive, MultiGraph, TrailPartition};

fn main() -> trail_orient::Result<()> {
    // K4 with a doubled edge 0-1.
    let g = MultiGraph::from_edges(4, &[(0, 1), (1, 2), (2, 0), (0, 3), (3, 1), (2, 3), (1, 0)])?;
    // 0-1-2-0-3 and 3-1-0, then the single edge 2-3.
    let p = TrailPartition::new(vec![vec![0, 1, 2, 3], vec![4, 6], vec![5]]);

    for (name, sol) in [
        ("naive", naive::orient_trails(&g, &p)?),
        ("linear", linear::orient_linear(&g, &p)?),
    ] {
        let o = sol.orientation().expect("2-edge-connected, so feasible");
        println!("{name}: {:?}", verify(&g, &p, o));
        for (e, d) in o.iter() {
            let (u, v) = g.edge(e).endpoints_along(d);
            println!("  edge {e}: {u} -> {v}");
        }
    }

    // A bridge makes every trail partition infeasible.
    let path = MultiGraph::from_edges(3, &[(0, 1), (1, 2)])?;
    let sol = linear::orient_linear(&path, &TrailPartition::new(vec![vec![0, 1]]))?;
    println!("path: feasible = {}", sol.is_feasible());
    Ok(())
}
