//! Times the linear algorithm on random cubic graphs of growing size.
//!
//! cargo run --release --example scaling -- 10000 100000 1000000

#[global_allocator]
static GLOBAL: mimalloc::MiMalloc = mimalloc::MiMalloc;

use trail_orient::bench::{format_report, per_edge_spread, run_bench, Algo};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut sizes: Vec<usize> = std::env::args().skip(1).map(|a| a.parse()).collect::<Result<_, _>>()?;
    if sizes.is_empty() {
        sizes = vec![10_000, 100_000, 1_000_000];
    }
    let rows = run_bench(&sizes, 1, Algo::Linear, 3, 1)?;
    print!("{}", format_report(&rows));
    println!("per-edge time spread: {:.2}x", per_edge_spread(&rows));
    Ok(())
}
