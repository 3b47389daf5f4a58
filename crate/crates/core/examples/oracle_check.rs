//! Exhaustive cross-check of the orienters against brute force on every
//! connected multigraph with up to 4 vertices and 5 edges.

use trail_orient::connectivity::is_two_edge_connected;
use trail_orient::oracle::generate::{gen_instances, InstanceSpec};
use trail_orient::oracle::verify::{brute_force_feasible, verify, DEFAULT_TRAIL_CAP};
use trail_orient::{linear, naive};

fn main() -> trail_orient::Result<()> {
    let spec = InstanceSpec::Exhaustive {
        max_vertices: 4,
        max_edges: 5,
        directions: false,
        up_to_isomorphism: false,
    };
    let (mut total, mut feasible) = (0, 0);
    for inst in gen_instances(&spec)? {
        let (g, p) = (&inst.graph, &inst.trails);
        let expected = brute_force_feasible(g, p, DEFAULT_TRAIL_CAP)?.is_feasible();
        assert_eq!(expected, is_two_edge_connected(g));
        for sol in [naive::orient_trails(g, p)?, linear::orient_linear(g, p)?] {
            assert_eq!(sol.is_feasible(), expected);
            if let Some(o) = sol.orientation() {
                assert!(verify(g, p, o).is_pass());
            }
        }
        total += 1;
        feasible += usize::from(expected);
    }
    println!("{total} instances, {feasible} feasible, all agree");
    Ok(())
}
