//! `connenum`: enumerate connectors or components of an attributed graph.

mod graph_file;
mod selftest;

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use connenum::{
    build_system, enumerate_components, enumerate_solutions, spanning_volume, AllOf, CoreGuard, ElementSet,
    Instance, SizeThreshold, SystemMode, TraversalStats, VolumeFunction,
};
use thiserror::Error;

use crate::graph_file::{GraphFile, ParseError};

#[derive(Parser)]
#[command(name = "connenum", version, about = "Enumerate connectors and components of attributed mixed graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Maximal vertex sets for each common item set, one per line.
    Connectors(RunArgs),
    /// Every component of the chosen system, one per line.
    Components(RunArgs),
    /// Compare the enumerators with exhaustive search on random graphs.
    Selftest(SelftestArgs),
}

#[derive(Args)]
struct SystemArgs {
    /// connected, global-k-edge, global-k-vertex, induced-k-edge,
    /// induced-k-vertex, edge-induced-k-edge or edge-induced-k-vertex.
    #[arg(long, default_value = "connected")]
    mode: SystemMode,
    /// Connectivity threshold (ignored by `connected`).
    #[arg(long, default_value_t = 1)]
    k: u64,
    /// Largest k accepted by the k-vertex modes.
    #[arg(long, default_value_t = 3)]
    max_k: u64,
    /// Largest number of candidate cores the k-vertex modes may scan.
    #[arg(long, default_value_t = 1_000_000)]
    max_core_budget: u64,
}

impl SystemArgs {
    fn guard(&self) -> CoreGuard {
        CoreGuard {
            max_k: self.max_k,
            max_cores: self.max_core_budget,
        }
    }
}

#[derive(Args)]
struct RunArgs {
    #[command(flatten)]
    system: SystemArgs,
    /// Only report sets with at least this many elements.
    #[arg(long)]
    min_size: Option<usize>,
    /// Only report edge sets touching every vertex (edge modes).
    #[arg(long)]
    spanning: bool,
    /// Print traversal statistics as JSON on standard error.
    #[arg(long)]
    stats: bool,
    file: PathBuf,
}

#[derive(Args)]
struct SelftestArgs {
    #[command(flatten)]
    system: SystemArgs,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    #[arg(long, default_value_t = 50)]
    trials: usize,
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{path}: {source}")]
    Parse { path: String, source: ParseError },
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] connenum::Error),
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error("self-test failed")]
    SelftestFailed,
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Parse { .. } | CliError::Usage(_) => 2,
            CliError::Core(connenum::Error::Guard(_)) => 2,
            _ => 1,
        }
    }
}

fn load(path: &PathBuf) -> Result<GraphFile, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
    graph_file::parse(&text).map_err(|source| CliError::Parse {
        path: path.display().to_string(),
        source,
    })
}

fn join<I: IntoIterator<Item = String>>(parts: I) -> String {
    parts.into_iter().collect::<Vec<_>>().join(",")
}

fn volume(args: &RunArgs, file: &GraphFile) -> Result<Option<Arc<dyn VolumeFunction>>, CliError> {
    let mut parts: Vec<Arc<dyn VolumeFunction>> = Vec::new();
    if let Some(size) = args.min_size {
        parts.push(Arc::new(SizeThreshold::at_least(size)));
    }
    if args.spanning {
        if !args.system.mode.edge_ground() {
            return Err(CliError::Usage(format!(
                "--spanning needs an edge-induced mode, not {}",
                args.system.mode
            )));
        }
        parts.push(Arc::new(spanning_volume(&file.graph)));
    }
    Ok(match parts.len() {
        0 => None,
        1 => parts.pop(),
        _ => Some(Arc::new(AllOf(parts))),
    })
}

fn report(stats: &TraversalStats, started: Instant) {
    let json = serde_json::json!({
        "solutions": stats.outputs,
        "max_oracle_gap": stats.max_oracle_gap,
        "mean_oracle_gap": stats.mean_oracle_gap(),
        "max_descendants_gap": stats.max_descendants_gap,
        "max_stack_depth": stats.max_stack_depth,
        "depth_violations": stats.depth_violations,
        "l1_calls": stats.l1_calls,
        "l2_calls": stats.l2_calls,
        "descendants_calls": stats.descendants_calls,
        "wall_ms": started.elapsed().as_secs_f64() * 1e3,
    });
    eprintln!("{json}");
}

/// Writes one line, treating a closed pipe as a request to stop.
fn emit(out: &mut impl Write, line: &str) -> Result<bool, CliError> {
    match writeln!(out, "{line}").and_then(|_| out.flush()) {
        Ok(()) => Ok(true),
        Err(e) if e.kind() == io::ErrorKind::BrokenPipe => Ok(false),
        Err(e) => Err(e.into()),
    }
}

fn connectors(args: &RunArgs) -> Result<(), CliError> {
    let started = Instant::now();
    let file = load(&args.file)?;
    let mode = args.system.mode;
    if mode.edge_ground() {
        return Err(CliError::Usage(format!("connectors are defined on vertex sets; {mode} is an edge mode")));
    }
    if file.q() == 0 {
        return Err(CliError::Usage("no vertex carries an item".into()));
    }
    if file.graph.n() == 0 {
        return Err(CliError::Usage("the graph has no vertices".into()));
    }
    let system = build_system(&file.graph, mode, args.system.k, args.system.guard())?;
    let mut inst = Instance::from_item_lists(system, file.q(), &file.items)?;
    if let Some(f) = volume(args, &file)? {
        inst = inst.with_volume(f);
    }
    let mut run = enumerate_solutions(&inst);
    let mut out = io::stdout().lock();
    for rec in run.by_ref() {
        let mut ids: Vec<u64> = rec.elements.iter().map(|v| file.vertex_ids[v]).collect();
        ids.sort_unstable();
        let items = if rec.items.is_empty() {
            "-".to_string()
        } else {
            join(rec.items.iter().map(|i| file.item_labels[i - 1].to_string()))
        };
        let line = format!("{}\t{items}", join(ids.iter().map(u64::to_string)));
        if !emit(&mut out, &line)? {
            break;
        }
    }
    if args.stats {
        report(run.stats(), started);
    }
    Ok(())
}

fn components(args: &RunArgs) -> Result<(), CliError> {
    let started = Instant::now();
    let file = load(&args.file)?;
    let mode = args.system.mode;
    let system = build_system(&file.graph, mode, args.system.k, args.system.guard())?;
    let mut run = enumerate_components(system, volume(args, &file)?)?;
    let mut out = io::stdout().lock();
    let label = |c: &ElementSet| -> String {
        if mode.edge_ground() {
            join(c.iter().map(|e| e.to_string()))
        } else {
            let mut ids: Vec<u64> = c.iter().map(|v| file.vertex_ids[v]).collect();
            ids.sort_unstable();
            join(ids.iter().map(u64::to_string))
        }
    };
    for c in run.by_ref() {
        if !emit(&mut out, &label(&c))? {
            break;
        }
    }
    if args.stats {
        report(run.stats(), started);
    }
    Ok(())
}

fn run_selftest(args: &SelftestArgs) -> Result<(), CliError> {
    let tally = selftest::run(args.seed, args.trials, args.system.mode, args.system.k)?;
    let mode = args.system.mode;
    for (name, (ok, all)) in [
        ("solutions", tally.solutions),
        ("components", tally.components),
        ("cuts", tally.cuts),
    ] {
        let verdict = if ok == all { "pass" } else { "FAIL" };
        println!("{verdict} {name} mode={mode} k={} {ok}/{all}", args.system.k);
    }
    if tally.passed() {
        Ok(())
    } else {
        Err(CliError::SelftestFailed)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Connectors(args) => connectors(args),
        Command::Components(args) => components(args),
        Command::Selftest(args) => run_selftest(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("connenum: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
