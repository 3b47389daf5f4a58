//! Timing runs on random cubic instances.

use std::fmt::Write as _;
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::instance::Solution;
use crate::linear::{orient_linear_with_stats, LinearOptions, LinearStats};
use crate::oracle::generate::{random_cubic, random_trail_partition};
use crate::oracle::verify::verify;
use crate::{mixed, naive};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Algo {
    Naive,
    Linear,
    Mixed,
}

impl std::str::FromStr for Algo {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "naive" => Ok(Algo::Naive),
            "linear" => Ok(Algo::Linear),
            "mixed" => Ok(Algo::Mixed),
            _ => Err(Error::Precondition(format!("unknown algorithm {s:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct BenchRow {
    pub n: usize,
    pub m: usize,
    pub seconds: f64,
    /// Recursion depth of the linear algorithm, 0 for the others.
    pub depth: usize,
    /// Per level, the fraction of vertices in components of at least ten
    /// vertices.
    pub large_fractions: Vec<f64>,
    pub verified: bool,
}

impl BenchRow {
    pub fn ns_per_edge(&self) -> f64 {
        self.seconds * 1e9 / self.m.max(1) as f64
    }

    pub fn max_large_fraction(&self) -> f64 {
        self.large_fractions.iter().copied().fold(0.0, f64::max)
    }

    /// `log_{9/8}(n) + 3`.
    pub fn depth_bound(&self) -> f64 {
        (self.n as f64).ln() / (9.0f64 / 8.0).ln() + 3.0
    }
}

/// One timed run. The instance is a random 2-edge-connected cubic graph on
/// `n` vertices with a random trail partition, both drawn from `seed`.
pub fn bench_one(n: usize, seed: u64, algo: Algo) -> Result<BenchRow> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let g = random_cubic(n, &mut rng)?;
    let p = random_trail_partition(&g, &mut rng);
    let start = Instant::now();
    let (sol, stats) = match algo {
        Algo::Linear => orient_linear_with_stats(&g, &p, LinearOptions::default())?,
        Algo::Naive => (naive::orient_trails(&g, &p)?, LinearStats::default()),
        Algo::Mixed => (mixed::orient_mixed(&g, &p)?, LinearStats::default()),
    };
    let seconds = start.elapsed().as_secs_f64();
    let verified = match &sol {
        Solution::Feasible(o) => verify(&g, &p, o).is_pass(),
        Solution::Infeasible => false,
    };
    Ok(BenchRow {
        n,
        m: g.live_edge_count(),
        seconds,
        depth: stats.depth(),
        large_fractions: stats.levels.iter().map(|l| l.large_fraction()).collect(),
        verified,
    })
}

/// `repeats` runs on independent instances of size `n`. Reports the run
/// with the median time, with `depth` and the large fractions maximised and
/// `verified` required over all runs.
pub fn bench_median(n: usize, seed: u64, algo: Algo, repeats: usize) -> Result<BenchRow> {
    let mut runs = (0..repeats.max(1) as u64)
        .map(|k| bench_one(n, seed ^ n as u64 ^ (k << 40), algo))
        .collect::<Result<Vec<_>>>()?;
    runs.sort_by(|a, b| a.seconds.total_cmp(&b.seconds));
    let mut row = runs[runs.len() / 2].clone();
    for r in &runs {
        row.depth = row.depth.max(r.depth);
        row.verified &= r.verified;
        if row.large_fractions.len() < r.large_fractions.len() {
            row.large_fractions.resize(r.large_fractions.len(), 0.0);
        }
        for (a, &b) in row.large_fractions.iter_mut().zip(&r.large_fractions) {
            *a = a.max(b);
        }
    }
    Ok(row)
}

/// Runs every size, at most `threads` sizes at a time. Rows come back in
/// the order of `sizes`.
pub fn run_bench(
    sizes: &[usize],
    seed: u64,
    algo: Algo,
    repeats: usize,
    threads: usize,
) -> Result<Vec<BenchRow>> {
    if sizes.windows(2).any(|w| w[0] > w[1]) {
        return Err(Error::Precondition("sizes must be ascending".into()));
    }
    let threads = threads.max(1);
    let mut rows = Vec::with_capacity(sizes.len());
    for chunk in sizes.chunks(threads) {
        let results: Vec<Result<BenchRow>> = std::thread::scope(|s| {
            let handles: Vec<_> = chunk
                .iter()
                .map(|&n| s.spawn(move || bench_median(n, seed, algo, repeats)))
                .collect();
            handles.into_iter().map(|h| h.join().expect("bench thread")).collect()
        });
        for r in results {
            rows.push(r?);
        }
    }
    Ok(rows)
}

/// Tab-separated report with a header line.
pub fn format_report(rows: &[BenchRow]) -> String {
    let mut out = String::from("n\tm\tseconds\tns_per_edge\tdepth\tdepth_bound\tmax_large_fraction\tverified\tlarge_fractions\n");
    for r in rows {
        let fractions: Vec<String> = r.large_fractions.iter().map(|f| format!("{f:.4}")).collect();
        let _ = writeln!(
            out,
            "{}\t{}\t{:.6}\t{:.1}\t{}\t{:.1}\t{:.4}\t{}\t{}",
            r.n,
            r.m,
            r.seconds,
            r.ns_per_edge(),
            r.depth,
            r.depth_bound(),
            r.max_large_fraction(),
            r.verified,
            fractions.join(",")
        );
    }
    out
}

/// Largest ratio between the per-edge times of any two rows.
pub fn per_edge_spread(rows: &[BenchRow]) -> f64 {
    let v: Vec<f64> = rows.iter().map(BenchRow::ns_per_edge).collect();
    let max = v.iter().copied().fold(f64::MIN, f64::max);
    let min = v.iter().copied().fold(f64::MAX, f64::min);
    if v.is_empty() || min <= 0.0 {
        1.0
    } else {
        max / min
    }
}
