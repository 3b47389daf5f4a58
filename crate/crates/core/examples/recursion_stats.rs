//! Per-level statistics of the linear algorithm on a random cubic graph:
//! how many 3-edge-connected components each level produces and how much
//! of the graph stays in large ones.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use trail_orient::linear::{orient_linear_with_stats, LinearOptions};
use trail_orient::oracle::generate::{random_cubic, random_trail_partition};

fn main() -> trail_orient::Result<()> {
    let n: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(20_000);
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let g = random_cubic(n, &mut rng)?;
    let p = random_trail_partition(&g, &mut rng);
    let options = LinearOptions { check_invariants: true };
    let (sol, stats) = orient_linear_with_stats(&g, &p, options)?;
    println!("feasible = {}, depth = {}", sol.is_feasible(), stats.depth());
    println!("level\tcalls\tvertices\tnon_tree\tcomponents\tlarge_fraction");
    for (i, l) in stats.levels.iter().enumerate() {
        println!(
            "{i}\t{}\t{}\t{}\t{}\t{:.3}",
            l.calls,
            l.vertices,
            l.non_tree,
            l.components,
            l.large_fraction()
        );
    }
    println!("bound violations: {}", stats.bound_violations());
    println!("invariant failures: {}", stats.invariant_failures.len());
    Ok(())
}
