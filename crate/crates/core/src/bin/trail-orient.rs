use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use trail_orient::bench::{format_report, run_bench, Algo};
use trail_orient::io::{format_instance, format_solution, parse_instance, parse_solution};
use trail_orient::oracle::generate::{fig1, path, random_cubic, random_trail_partition};
use trail_orient::oracle::verify::{brute_force_feasible, verify, Verdict, DEFAULT_TRAIL_CAP};
use trail_orient::{linear, mixed, naive, Instance, Solution};

#[global_allocator]
static GLOBAL: mimalloc::MiMalloc = mimalloc::MiMalloc;

const EXIT_INFEASIBLE: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_INTERNAL: u8 = 3;

#[derive(Parser)]
#[command(name = "trail-orient", version, about = "Strong trail orientations of multigraphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Orient the trails of an instance. Exit 0 feasible, 1 infeasible,
    /// 2 bad input, 3 internal self-check failure.
    Orient {
        /// Instance file, `-` for stdin.
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = AlgoArg::Linear)]
        algo: AlgoArg,
        /// Most trails the brute-force search accepts.
        #[arg(long, default_value_t = DEFAULT_TRAIL_CAP)]
        cap_trails: usize,
        /// Write the orientation here instead of stdout.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Check an orientation file against an instance. Exit 0 if it is a
    /// strong trail orientation.
    Verify { instance: PathBuf, orientation: PathBuf },
    /// Time an algorithm on random cubic instances and print a TSV report.
    Bench {
        /// Vertex counts, ascending.
        #[arg(long, value_delimiter = ',', default_values_t = [10_000usize, 100_000, 1_000_000])]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = AlgoArg::Linear)]
        algo: AlgoArg,
        /// Independent instances per size; the median time is reported.
        #[arg(long, default_value_t = 1)]
        repeats: usize,
    },
    /// Write a generated instance.
    Gen(GenArgs),
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct GenKind {
    /// Random 2-edge-connected cubic graph with a random trail partition.
    #[arg(long, requires = "n")]
    cubic: bool,
    /// The mixed gadget that is strongly connected and bridgeless yet has no
    /// strong trail orientation.
    #[arg(long)]
    fig1: bool,
    /// Path with this many edges.
    #[arg(long, value_name = "K")]
    path: Option<usize>,
}

#[derive(Args)]
struct GenArgs {
    #[command(flatten)]
    kind: GenKind,
    #[arg(short)]
    n: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum AlgoArg {
    Naive,
    Linear,
    Mixed,
    /// Exhaustive search over trail directions.
    Brute,
}

struct Failure {
    code: u8,
    message: String,
}

fn input_error(message: impl std::fmt::Display) -> Failure {
    Failure {
        code: EXIT_INPUT,
        message: message.to_string(),
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    if path == Path::new("-") {
        std::io::read_to_string(std::io::stdin()).map_err(|e| input_error(format!("stdin: {e}")))
    } else {
        std::fs::read_to_string(path).map_err(|e| input_error(format!("{}: {e}", path.display())))
    }
}

fn write(output: Option<&Path>, text: &str) -> Result<(), Failure> {
    match output {
        None => {
            print!("{text}");
            Ok(())
        }
        Some(p) => std::fs::write(p, text).map_err(|e| input_error(format!("{}: {e}", p.display()))),
    }
}

fn load_instance(path: &Path) -> Result<Instance, Failure> {
    parse_instance(&read(path)?).map_err(|e| input_error(format!("{}: {e}", path.display())))
}

fn orient(input: &Path, algo: AlgoArg, cap: usize, output: Option<&Path>) -> Result<u8, Failure> {
    let inst = load_instance(input)?;
    let (g, p) = (&inst.graph, &inst.trails);
    if g.has_directed_edges() && matches!(algo, AlgoArg::Naive | AlgoArg::Linear) {
        return Err(input_error("instance has directed edges; use --algo mixed"));
    }
    let sol = match algo {
        AlgoArg::Naive => naive::orient_trails(g, p),
        AlgoArg::Linear => linear::orient_linear(g, p),
        AlgoArg::Mixed => mixed::orient_mixed(g, p),
        AlgoArg::Brute => brute_force_feasible(g, p, cap),
    }
    .map_err(input_error)?;
    if let Solution::Feasible(o) = &sol {
        if let Verdict::Fail(v) = verify(g, p, o) {
            return Err(Failure {
                code: EXIT_INTERNAL,
                message: format!("self-check failed: {v}"),
            });
        }
    }
    let text = format_solution(g, &sol).map_err(|e| Failure {
        code: EXIT_INTERNAL,
        message: format!("self-check failed: {e}"),
    })?;
    write(output, &text)?;
    Ok(if sol.is_feasible() { 0 } else { EXIT_INFEASIBLE })
}

fn check(instance: &Path, orientation: &Path) -> Result<u8, Failure> {
    let inst = load_instance(instance)?;
    let sol = parse_solution(&read(orientation)?, &inst.graph)
        .map_err(|e| input_error(format!("{}: {e}", orientation.display())))?;
    let Solution::Feasible(o) = sol else {
        println!("orientation file declares INFEASIBLE");
        return Ok(EXIT_INFEASIBLE);
    };
    match verify(&inst.graph, &inst.trails, &o) {
        Verdict::Pass => {
            println!("ok");
            Ok(0)
        }
        Verdict::Fail(v) => {
            println!("{v}");
            Ok(EXIT_INFEASIBLE)
        }
    }
}

fn bench(sizes: &[usize], seed: u64, algo: AlgoArg, repeats: usize) -> Result<u8, Failure> {
    let algo = match algo {
        AlgoArg::Naive => Algo::Naive,
        AlgoArg::Linear => Algo::Linear,
        AlgoArg::Mixed => Algo::Mixed,
        AlgoArg::Brute => return Err(input_error("brute force is not benchmarked")),
    };
    let threads = match std::env::var("TRAIL_ORIENT_THREADS") {
        Ok(v) => v
            .parse()
            .map_err(|_| input_error(format!("TRAIL_ORIENT_THREADS: not a number: {v:?}")))?,
        Err(_) => 1,
    };
    let rows = run_bench(sizes, seed, algo, repeats, threads).map_err(input_error)?;
    print!("{}", format_report(&rows));
    Ok(0)
}

fn gen(args: &GenArgs) -> Result<u8, Failure> {
    let inst = if args.kind.fig1 {
        fig1()
    } else if let Some(k) = args.kind.path {
        path(k)
    } else {
        let n = args.n.ok_or_else(|| input_error("--cubic needs -n"))?;
        let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
        let g = random_cubic(n, &mut rng).map_err(input_error)?;
        let trails = random_trail_partition(&g, &mut rng);
        Instance { graph: g, trails }
    };
    write(args.output.as_deref(), &format_instance(&inst))?;
    Ok(0)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Orient {
            input,
            algo,
            cap_trails,
            output,
        } => orient(input, *algo, *cap_trails, output.as_deref()),
        Command::Verify {
            instance,
            orientation,
        } => check(instance, orientation),
        Command::Bench {
            sizes,
            seed,
            algo,
            repeats,
        } => bench(sizes, *seed, *algo, *repeats),
        Command::Gen(args) => gen(args),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
