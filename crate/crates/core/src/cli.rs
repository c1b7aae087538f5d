//! The `boxroute` command-line tool.
//!
//! Exit codes: 0 on success, 1 on usage errors, 2 on data errors (unreadable
//! or malformed input, no route).

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::bench::{boxcount_suite, timing_suite, write_csv, TimingConfig};
use crate::cover::{cover_with, Algorithm, GcMode};
use crate::graph::{gen_random_graph, gen_ternary_tree, parse_edge_list, write_edge_list, Graph};
use crate::routing::{bcr_route, build_supergraph, compute_stretch, dijkstra_route, Route};

#[derive(Debug, Parser)]
#[command(name = "boxroute", version, about = "Box-covering based hierarchical routing")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Generate a graph as an edge list
    Gen(GenArgs),
    /// Partition a graph into boxes and print the cover as JSON
    Cover(CoverArgs),
    /// Route between two nodes and print the route as JSON
    Route(RouteArgs),
    /// Run the box-count or timing experiment and write CSV
    Bench(BenchArgs),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Topology {
    TernaryTree,
    Er,
}

#[derive(Debug, Args)]
struct GenArgs {
    #[arg(long, value_enum)]
    topology: Topology,
    /// Tree depth (ternary-tree)
    #[arg(long)]
    depth: Option<u32>,
    /// Node count (er)
    #[arg(long = "n")]
    n: Option<usize>,
    /// Edge probability (er)
    #[arg(long = "p")]
    p: Option<f64>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(short = 'o')]
    output: PathBuf,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum CoverAlg {
    Gc,
    Memb,
    Ciea,
}

impl From<CoverAlg> for Algorithm {
    fn from(a: CoverAlg) -> Self {
        match a {
            CoverAlg::Gc => Algorithm::Gc,
            CoverAlg::Memb => Algorithm::Memb,
            CoverAlg::Ciea => Algorithm::Ciea,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum RouteAlg {
    Dijkstra,
    Gc,
    Memb,
    Ciea,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Mode {
    Strict,
    Song,
}

impl From<Mode> for GcMode {
    fn from(m: Mode) -> Self {
        match m {
            Mode::Strict => GcMode::Strict,
            Mode::Song => GcMode::Song,
        }
    }
}

fn parse_rb(s: &str) -> Result<u32, String> {
    match s.parse::<u32>() {
        Ok(r) if r >= 1 => Ok(r),
        _ => Err("rb must be ≥ 1".into()),
    }
}

#[derive(Debug, Args)]
struct CoverArgs {
    #[arg(long, value_enum)]
    alg: CoverAlg,
    #[arg(long, value_parser = parse_rb)]
    rb: u32,
    #[arg(long, value_enum, default_value = "strict")]
    gc_mode: Mode,
    /// Shuffle the GC coloring order with this seed (ascending ids otherwise)
    #[arg(long)]
    seed: Option<u64>,
    #[arg(short = 'i')]
    input: PathBuf,
    #[arg(short = 'o')]
    output: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct RouteArgs {
    #[arg(long, value_enum)]
    alg: RouteAlg,
    #[arg(long, value_parser = parse_rb, default_value = "1")]
    rb: u32,
    #[arg(long, value_enum, default_value = "strict")]
    gc_mode: Mode,
    /// Source node, as labelled in the input file
    #[arg(short = 's')]
    source: u64,
    /// Target node, as labelled in the input file
    #[arg(short = 't')]
    target: u64,
    #[arg(short = 'i')]
    input: PathBuf,
    #[arg(short = 'o')]
    output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Experiment {
    Boxcount,
    Timing,
}

#[derive(Debug, Args)]
struct BenchArgs {
    #[arg(value_enum)]
    experiment: Experiment,
    #[arg(long, value_delimiter = ',', default_value = "2,3,4,5,6,7")]
    depths: Vec<u32>,
    #[arg(long, value_parser = parse_rb, default_value = "1")]
    rb: u32,
    #[arg(long, default_value_t = 100)]
    reps: u32,
    #[arg(long, default_value_t = 32)]
    pairs: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum, default_value = "strict")]
    gc_mode: Mode,
    #[arg(long)]
    out: PathBuf,
}

enum Failure {
    Usage(String),
    Data(String),
}

impl From<crate::Error> for Failure {
    fn from(e: crate::Error) -> Self {
        Failure::Data(e.to_string())
    }
}

/// Runs the tool with `argv` (program name first), writing results to
/// `stdout` when no output file is given and diagnostics to `stderr`.
/// Returns the process exit code.
pub fn run_cli<I, T>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(stdout, "{rendered}");
                    0
                }
                _ => {
                    let _ = write!(stderr, "{rendered}");
                    1
                }
            };
        }
    };
    let result = match cli.command {
        Command::Gen(a) => run_gen(a),
        Command::Cover(a) => run_cover(a, stdout),
        Command::Route(a) => run_route(a, stdout),
        Command::Bench(a) => run_bench(a),
    };
    match result {
        Ok(()) => 0,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            1
        }
        Err(Failure::Data(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            2
        }
    }
}

fn read_graph(path: &Path) -> Result<Graph, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::Data(format!("cannot read {}: {e}", path.display())))?;
    parse_edge_list(&text)
        .map_err(|e| Failure::Data(format!("{}: {e}", path.display())))
}

fn emit(text: &str, output: Option<&Path>, stdout: &mut dyn Write) -> Result<(), Failure> {
    let io = |e: std::io::Error| Failure::Data(e.to_string());
    match output {
        Some(path) => fs::write(path, text).map_err(io),
        None => stdout.write_all(text.as_bytes()).map_err(io),
    }
}

fn run_gen(a: GenArgs) -> Result<(), Failure> {
    let g = match a.topology {
        Topology::TernaryTree => {
            let depth = a
                .depth
                .ok_or_else(|| Failure::Usage("--depth is required for ternary-tree".into()))?;
            gen_ternary_tree(depth)?
        }
        Topology::Er => {
            let (Some(n), Some(p)) = (a.n, a.p) else {
                return Err(Failure::Usage("--n and --p are required for er".into()));
            };
            if !(0.0..=1.0).contains(&p) {
                return Err(Failure::Usage("p must lie in [0, 1]".into()));
            }
            gen_random_graph(n, p, a.seed)?
        }
    };
    fs::write(&a.output, write_edge_list(&g))
        .map_err(|e| Failure::Data(format!("cannot write {}: {e}", a.output.display())))
}

fn run_cover(a: CoverArgs, stdout: &mut dyn Write) -> Result<(), Failure> {
    let g = read_graph(&a.input)?;
    let cover = cover_with(&g, a.alg.into(), a.rb, a.gc_mode.into(), a.seed)?;
    emit(&(cover.to_json() + "\n"), a.output.as_deref(), stdout)
}

fn run_route(a: RouteArgs, stdout: &mut dyn Write) -> Result<(), Failure> {
    let g = read_graph(&a.input)?;
    let node = |label: u64| {
        g.node_by_label(label)
            .ok_or_else(|| Failure::Data(format!("node {label} not in graph")))
    };
    let (s, t) = (node(a.source)?, node(a.target)?);
    let route = match a.alg {
        RouteAlg::Dijkstra => dijkstra_route(&g, s, t)?,
        RouteAlg::Gc | RouteAlg::Memb | RouteAlg::Ciea => {
            let algorithm = match a.alg {
                RouteAlg::Gc => Algorithm::Gc,
                RouteAlg::Memb => Algorithm::Memb,
                _ => Algorithm::Ciea,
            };
            let cover = cover_with(&g, algorithm, a.rb, a.gc_mode.into(), None)?;
            let sg = build_supergraph(&g, &cover)?;
            bcr_route(&sg, s, t)?
        }
    };
    let route = relabel(&g, compute_stretch(&g, &route)?);
    emit(&(route.to_json() + "\n"), a.output.as_deref(), stdout)
}

/// Reports node ids as the input file labelled them.
fn relabel(g: &Graph, mut route: Route) -> Route {
    let label = |v: usize| g.label(v) as usize;
    route.s = label(route.s);
    route.t = label(route.t);
    for v in &mut route.nodes {
        *v = label(*v);
    }
    route
}

fn run_bench(a: BenchArgs) -> Result<(), Failure> {
    if a.reps == 0 || a.pairs == 0 {
        return Err(Failure::Usage("reps and pairs must be at least 1".into()));
    }
    let (records, name) = match a.experiment {
        Experiment::Boxcount => (boxcount_suite(&a.depths, a.rb, a.gc_mode.into())?, "boxcount.csv"),
        Experiment::Timing => {
            let cfg = TimingConfig {
                depths: a.depths.clone(),
                r_b: a.rb,
                reps: a.reps,
                pairs: a.pairs,
                seed: a.seed,
                gc_mode: a.gc_mode.into(),
            };
            (timing_suite(&cfg)?, "timing.csv")
        }
    };
    fs::create_dir_all(&a.out)
        .map_err(|e| Failure::Data(format!("cannot create {}: {e}", a.out.display())))?;
    let path = a.out.join(name);
    let file = fs::File::create(&path)
        .map_err(|e| Failure::Data(format!("cannot create {}: {e}", path.display())))?;
    write_csv(&records, std::io::BufWriter::new(file))?;
    Ok(())
}
