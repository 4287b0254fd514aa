//! `pmst`: construct, sweep and check parametric spanning tree instances.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use parametric_mst::bicriterion::{optimize, BiWeightedGraph, Objective};
use parametric_mst::construct::{
    check_triangle_lemma, complete_2tree, lower_bound_value, pack, recursive_weights,
    theorem_instance,
};
use parametric_mst::format::{read_graph, write_graph};
use parametric_mst::oracle::oracle_sequence;
use parametric_mst::random::{random_connected_graph, seeded};
use parametric_mst::rational::format_rational;
use parametric_mst::sweep::{enumerate_by_midpoints, enumerate_by_swaps};
use parametric_mst::{Endpoint, ParametricGraph, TreeSequence};

#[derive(Parser)]
#[command(name = "pmst", version, about = "Parametric minimum spanning tree toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build the recursive lower-bound construction at a given level.
    Construct {
        /// Recursion level (0 is a single edge). Size and cost grow as
        /// 3^level; levels beyond 6 take a long time.
        #[arg(long)]
        level: usize,
        /// Output file; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Pack k reweighted copies of a graph into a denser instance.
    Pack {
        /// Input graph file.
        #[arg(long = "in")]
        input: PathBuf,
        /// Number of copies to pack.
        #[arg(long)]
        k: usize,
        /// Output file; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build an n-vertex, m-edge instance with a guaranteed sequence length.
    Theorem {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        /// Output file for the instance; only the summary is printed without it.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Sweep a graph and summarize its tree sequence.
    Enumerate {
        /// Input graph file.
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = Method::Midpoint)]
        method: Method,
        /// Emit the full sequence as JSON instead of the text summary.
        #[arg(long)]
        json: bool,
    },
    /// Check construction sizes and sweep lengths against their bounds.
    Verify {
        /// Highest recursion level to check.
        #[arg(long)]
        level_max: usize,
    },
    /// Differential-test the sweep against the brute-force oracle.
    OracleCheck {
        #[arg(long)]
        trials: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 6)]
        max_vertices: usize,
    },
    /// Property-test bottleneck triangle contraction.
    Lemma2Check {
        #[arg(long)]
        trials: usize,
        #[arg(long)]
        seed: u64,
    },
    /// Optimize a two-weight objective over spanning trees. Edge records
    /// carry the cost in `a` and the profit in `b`.
    Bicriterion {
        /// Input graph file.
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, value_enum)]
        objective: ObjectiveArg,
    },
    /// Render a graph's weight lines and breakpoints as SVG.
    Plot {
        /// Input graph file.
        #[arg(long = "in")]
        input: PathBuf,
        /// Output SVG file.
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Midpoint,
    Swap,
}

#[derive(Clone, Copy, ValueEnum)]
enum ObjectiveArg {
    Ratio,
    MinCost,
    MaxProfit,
}

/// How a run can end short of success: bad input or I/O (exit 2), or a
/// checked property failing to hold (exit 1).
enum Failure {
    Input(String),
    Verification(String),
}

impl Failure {
    fn report(&self) -> ExitCode {
        match self {
            Failure::Verification(msg) => {
                eprintln!("verification failed: {msg}");
                ExitCode::from(1)
            }
            Failure::Input(msg) => {
                eprintln!("error: {msg}");
                ExitCode::from(2)
            }
        }
    }
}

impl From<parametric_mst::Error> for Failure {
    fn from(e: parametric_mst::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

fn main() -> ExitCode {
    // Die quietly when a pipe consumer closes early, like other filters.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => f.report(),
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Construct { level, out } => emit_graph(&recursive_weights(level), out.as_deref()),
        Command::Pack { input, k, out } => {
            let g = load_graph(&input)?;
            emit_graph(&pack(&g, k)?, out.as_deref())
        }
        Command::Theorem { n, m, out } => {
            let inst = theorem_instance(n, m)?;
            println!("vertices: {}", inst.graph.vertex_count());
            println!("edges: {}", inst.graph.edge_count());
            println!("guaranteed bound: {}", inst.bound);
            match out {
                Some(path) => write_file(&path, &write_graph(&inst.graph)),
                None => Ok(()),
            }
        }
        Command::Enumerate { input, method, json } => {
            let g = load_graph(&input)?;
            let seq = match method {
                Method::Midpoint => enumerate_by_midpoints(&g)?,
                Method::Swap => enumerate_by_swaps(&g)?,
            };
            if json {
                println!("{}", sequence_json(&seq));
            } else {
                print_sequence(&seq);
            }
            Ok(())
        }
        Command::Verify { level_max } => verify(level_max),
        Command::OracleCheck { trials, seed, max_vertices } => {
            oracle_check(trials, seed, max_vertices)
        }
        Command::Lemma2Check { trials, seed } => {
            let report = check_triangle_lemma(trials, seed);
            if !report.passed() {
                return Err(Failure::Verification(format!(
                    "{} of {} trials failed; first: {}",
                    report.failures.len(),
                    report.trials,
                    report.failures[0]
                )));
            }
            println!("lemma2-check: {} trials, all passed", report.trials);
            Ok(())
        }
        Command::Bicriterion { input, objective } => bicriterion(&input, objective),
        Command::Plot { input, out } => {
            let g = load_graph(&input)?;
            let seq = enumerate_by_midpoints(&g)?;
            write_file(&out, &parametric_mst::svg::plot(&g, &seq))
        }
    }
}

fn load_graph(path: &Path) -> Result<ParametricGraph, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    Ok(read_graph(&text)?)
}

fn write_file(path: &Path, contents: &str) -> Result<(), Failure> {
    fs::write(path, contents).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn emit_graph(g: &ParametricGraph, out: Option<&Path>) -> Result<(), Failure> {
    let text = write_graph(g);
    match out {
        Some(path) => write_file(path, &text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn endpoint_str(e: &Endpoint) -> String {
    match e {
        Endpoint::NegInf => "-inf".into(),
        Endpoint::PosInf => "+inf".into(),
        Endpoint::Finite(x) => format_rational(x),
    }
}

fn print_sequence(seq: &TreeSequence) {
    println!("sequence length: {}", seq.sequence_length());
    println!("distinct trees: {}", seq.distinct_tree_count());
    let bps = seq.breakpoints();
    if bps.is_empty() {
        println!("breakpoints: none");
    } else {
        let list: Vec<String> = bps.iter().map(|b| format_rational(b)).collect();
        println!("breakpoints: {}", list.join(" "));
    }
}

fn sequence_json(seq: &TreeSequence) -> String {
    let intervals: Vec<serde_json::Value> = seq
        .intervals()
        .iter()
        .map(|i| {
            serde_json::json!({
                "lo": endpoint_str(&i.lo),
                "hi": endpoint_str(&i.hi),
                "tree": i.tree.edge_ids(),
            })
        })
        .collect();
    let bps: Vec<String> = seq.breakpoints().iter().map(|b| format_rational(b)).collect();
    serde_json::json!({
        "sequence_length": seq.sequence_length(),
        "distinct_trees": seq.distinct_tree_count(),
        "breakpoints": bps,
        "intervals": intervals,
    })
    .to_string()
}

fn verify(level_max: usize) -> Result<(), Failure> {
    let mut bad = Vec::new();
    println!("level  vertices  edges  bound  observed");
    for i in 0..=level_max {
        let shape = complete_2tree(i);
        let want_edges = 3usize.pow(i as u32);
        let want_vertices = (want_edges + 3) / 2;
        let g = recursive_weights(i);
        let bound = lower_bound_value(i as u32);
        let observed = enumerate_by_midpoints(&g)?.sequence_length();
        println!(
            "{i:>5}  {:>8}  {:>5}  {bound:>5}  {observed:>8}",
            shape.vertex_count(),
            shape.edge_count(),
        );
        if shape.vertex_count() != want_vertices || shape.edge_count() != want_edges {
            bad.push(format!("level {i}: expected {want_vertices} vertices, {want_edges} edges"));
        }
        if (observed as u64) < bound {
            bad.push(format!("level {i}: sequence length {observed} below bound {bound}"));
        }
    }
    if let Some(first) = bad.first() {
        return Err(Failure::Verification(first.clone()));
    }
    println!("all bounds hold");
    Ok(())
}

fn oracle_check(trials: usize, seed: u64, max_vertices: usize) -> Result<(), Failure> {
    if max_vertices < 2 {
        return Err(Failure::Input("--max-vertices must be at least 2".into()));
    }
    let mut rng = seeded(seed);
    for t in 0..trials {
        let g = random_connected_graph(&mut rng, max_vertices, max_vertices + 4, 20);
        let sweep = enumerate_by_midpoints(&g)?;
        let oracle = oracle_sequence(&g, 1_000_000)?;
        if sweep != oracle {
            return Err(Failure::Verification(format!(
                "trial {t}: sweep disagrees with oracle on a {}-vertex, {}-edge graph (seed {seed})",
                g.vertex_count(),
                g.edge_count()
            )));
        }
    }
    println!("oracle-check: {trials} trials, sweep matches oracle");
    Ok(())
}

fn bicriterion(input: &Path, objective: ObjectiveArg) -> Result<(), Failure> {
    let g = load_graph(input)?;
    let mut bg = BiWeightedGraph::new(g.vertex_count());
    for e in g.edges() {
        bg.add_edge(e.u, e.v, e.weight.slope.clone(), e.weight.intercept.clone());
    }
    let objective = match objective {
        ObjectiveArg::Ratio => Objective::MaxRatio,
        ObjectiveArg::MinCost => Objective::MinCost,
        ObjectiveArg::MaxProfit => Objective::MaxProfit,
    };
    let point = optimize(&bg, objective)?;
    let ids: Vec<String> = point.tree.edge_ids().iter().map(|id| id.to_string()).collect();
    println!("tree: {}", ids.join(" "));
    println!("cost: {}", format_rational(&point.total_cost));
    println!("profit: {}", format_rational(&point.total_profit));
    if matches!(objective, Objective::MaxRatio) {
        println!("ratio: {}", format_rational(&(&point.total_profit / &point.total_cost)));
    }
    Ok(())
}
