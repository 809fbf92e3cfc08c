//! `clawtrace` command-line front end.

mod analyze;

use std::io::{self, BufRead, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use clawtrace::enumerate::{self, EnumSpec, Mode, Predicate};
use clawtrace::families::{FamilyKind, FamilySpec};
use clawtrace::spectral;
use clawtrace::structure;
use clawtrace::verify::{self, Corpus, TheoremId, Tolerances, VerifyOptions};
use clawtrace::{Error, Graph};
use serde_json::json;

#[derive(Parser, Debug)]
#[command(name = "clawtrace", version, about = "Spectral traceability toolkit for claw-free graphs")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    /// Worker threads for enumeration and verification (default: all cores).
    #[arg(long, global = true)]
    workers: Option<usize>,

    /// Power-iteration residual tolerance.
    #[arg(long, env = "SPECTRAL_TOL", global = true, default_value_t = spectral::DEFAULT_TOL)]
    spectral_tol: f64,

    /// Half-width of the band in which a spectral value counts as equal to a threshold.
    #[arg(long, env = "CMP_TOL", global = true, default_value_t = spectral::DEFAULT_CMP_TOL)]
    cmp_tol: f64,

    /// Report elapsed_ms as 0 so identical runs give identical bytes.
    #[arg(long, global = true)]
    no_timing: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum RunMode {
    Exhaustive,
    Sample,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Structural and spectral summary of a graph (graph6, or - for stdin).
    Analyze { graph: String },
    /// Closure of a claw-free graph with its step trace.
    Closure { graph: String },
    /// Build a named graph and print its graph6 string.
    Construct {
        /// One of: complete, star, complete-split, n-graph, net, m-graph,
        /// l-graph, claw, apex-clique, brousek, brousek-blown, clique-plus-isolated.
        family: String,
        /// Family parameters; Brousek links take T or a path order.
        params: Vec<String>,
    },
    /// Spectral radius of a graph or of its complement.
    Spectral {
        graph: String,
        #[arg(long)]
        complement: bool,
    },
    /// Stream every graph of order K as graph6 lines.
    Enumerate {
        #[arg(long = "n")]
        n: usize,
        /// Comma-separated predicates: claw-free, n-free, m-free, closed,
        /// 2-connected, block-chain. Default: claw-free.
        #[arg(long, value_delimiter = ',')]
        predicates: Option<Vec<String>>,
        /// Include disconnected graphs.
        #[arg(long)]
        disconnected: bool,
        /// Resume from / record progress in this file.
        #[arg(long)]
        checkpoint: Option<PathBuf>,
    },
    /// Verify a theorem over a range of orders.
    Verify {
        theorem: String,
        #[arg(long)]
        n_min: usize,
        #[arg(long)]
        n_max: usize,
        #[arg(long, value_enum, default_value_t = RunMode::Exhaustive)]
        mode: RunMode,
        #[arg(long)]
        count: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Sampled counterexample search reporting the nearest misses.
    Hunt {
        #[arg(long)]
        theorem: String,
        #[arg(long = "n")]
        n: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        count: usize,
    },
}

/// Exit status 1: a verifier found an unmatched exception.
struct Unmatched;

enum Failure {
    Usage(String),
    Unmatched,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        Failure::Usage(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Failure {
        Failure::Usage(e.to_string())
    }
}

impl From<Unmatched> for Failure {
    fn from(_: Unmatched) -> Failure {
        Failure::Unmatched
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Unmatched) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn read_graphs(arg: &str) -> Result<Vec<Graph>, Failure> {
    if arg != "-" {
        return Ok(vec![Graph::from_graph6(arg)?]);
    }
    let mut out = Vec::new();
    for line in io::stdin().lock().lines() {
        let line = line?;
        let line = line.trim();
        if !line.is_empty() {
            out.push(Graph::from_graph6(line)?);
        }
    }
    if out.is_empty() {
        return Err(Failure::Usage("no graph on standard input".into()));
    }
    Ok(out)
}

fn emit_json(v: &serde_json::Value) -> Result<(), Failure> {
    let mut out = io::stdout().lock();
    serde_json::to_writer(&mut out, v).map_err(|e| Failure::Usage(e.to_string()))?;
    writeln!(out)?;
    Ok(())
}

fn tolerances(cli: &Cli) -> Result<Tolerances, Failure> {
    if !(cli.spectral_tol > 0.0) || !(cli.cmp_tol >= 0.0) {
        return Err(Failure::Usage("tolerances must be positive".into()));
    }
    Ok(Tolerances {
        spectral_tol: cli.spectral_tol,
        max_iter: spectral::DEFAULT_MAX_ITER,
        cmp_tol: cli.cmp_tol,
    })
}

fn run(cli: &Cli) -> Result<(), Failure> {
    let tol = tolerances(cli)?;
    if cli.workers == Some(0) {
        return Err(Failure::Usage("--workers must be at least 1".into()));
    }
    let opts = VerifyOptions {
        workers: cli.workers,
        tol,
    };
    match &cli.command {
        Command::Analyze { graph } => {
            for g in read_graphs(graph)? {
                let a = analyze::analyze(&g, &tol);
                match cli.format {
                    Format::Json => emit_json(&serde_json::to_value(&a).expect("serializable"))?,
                    Format::Text => print!("{}", a.to_text()),
                }
            }
        }
        Command::Closure { graph } => {
            for g in read_graphs(graph)? {
                let r = structure::closure(&g)?;
                match cli.format {
                    Format::Json => emit_json(&json!({
                        "input": g.to_graph6(),
                        "closed": r.closed.to_graph6(),
                        "added_edges": r.closed.m() - g.m(),
                        "steps": r.steps,
                    }))?,
                    Format::Text => {
                        println!("{}", r.closed.to_graph6());
                        for s in &r.steps {
                            let pairs: Vec<String> =
                                s.added.iter().map(|(u, v)| format!("{u}-{v}")).collect();
                            println!("  complete at {}: {}", s.vertex, pairs.join(" "));
                        }
                    }
                }
            }
        }
        Command::Construct { family, params } => {
            let kind: FamilyKind = family.parse()?;
            let refs: Vec<&str> = params.iter().map(String::as_str).collect();
            let spec = FamilySpec::parse(kind, &refs).map_err(|e| {
                Failure::Usage(format!("{e} (parameters: {})", kind.param_names().join(" ")))
            })?;
            let g = spec.make()?;
            match cli.format {
                Format::Json => emit_json(&json!({
                    "family": spec.to_string(),
                    "n": g.n(),
                    "m": g.m(),
                    "graph6": g.to_graph6(),
                }))?,
                Format::Text => println!("{}", g.to_graph6()),
            }
        }
        Command::Spectral { graph, complement } => {
            for g in read_graphs(graph)? {
                let target = if *complement { g.complement() } else { g.clone() };
                let est = spectral::spectral_radius(&target, tol.spectral_tol, tol.max_iter);
                match cli.format {
                    Format::Json => emit_json(&json!({
                        "graph6": g.to_graph6(),
                        "complement": complement,
                        "mu": est.value,
                        "iterations": est.iterations,
                        "residual": est.residual,
                        "converged": est.converged,
                    }))?,
                    Format::Text => println!(
                        "{:.12}{}",
                        est.value,
                        if est.converged { "" } else { " (not converged)" }
                    ),
                }
            }
        }
        Command::Enumerate {
            n,
            predicates,
            disconnected,
            checkpoint,
        } => enumerate_cmd(cli, *n, predicates.as_deref(), *disconnected, checkpoint.as_ref())?,
        Command::Verify {
            theorem,
            n_min,
            n_max,
            mode,
            count,
            seed,
        } => {
            let theorem: TheoremId = theorem.parse()?;
            let corpus = match mode {
                RunMode::Exhaustive => Corpus::Exhaustive,
                RunMode::Sample => Corpus::Sampled {
                    count: count.ok_or_else(|| Failure::Usage("--count is required with --mode sample".into()))?,
                    seed: seed.ok_or_else(|| Failure::Usage("--seed is required with --mode sample".into()))?,
                },
            };
            let mut r = verify::verify(theorem, *n_min, *n_max, corpus, &opts)?;
            if cli.no_timing {
                r.elapsed_ms = 0;
            }
            match cli.format {
                Format::Json => emit_json(&serde_json::to_value(&r).expect("serializable"))?,
                Format::Text => print_report(&r),
            }
            if !r.passed {
                return Err(Unmatched.into());
            }
        }
        Command::Hunt {
            theorem,
            n,
            seed,
            count,
        } => {
            let theorem: TheoremId = theorem.parse()?;
            let mut r = verify::hunt(theorem, *n, *seed, *count, &opts)?;
            if cli.no_timing {
                r.elapsed_ms = 0;
            }
            match cli.format {
                Format::Json => emit_json(&serde_json::to_value(&r).expect("serializable"))?,
                Format::Text => {
                    println!(
                        "{} n={} seed={}: {} sampled, {} meet the hypothesis, {}",
                        r.theorem,
                        r.n,
                        r.seed,
                        r.checked,
                        r.hypothesis_met,
                        if r.passed { "PASS" } else { "FAIL" }
                    );
                    for e in &r.exceptions {
                        println!("  exception {} -> {}", e.graph6, e.matched);
                    }
                    for m in &r.nearest_misses {
                        println!(
                            "  near miss {} margin {:+.6e} conclusion {}",
                            m.graph6,
                            m.margin,
                            if m.conclusion_holds { "holds" } else { "fails" }
                        );
                    }
                }
            }
            if !r.passed {
                return Err(Unmatched.into());
            }
        }
    }
    Ok(())
}

fn enumerate_cmd(
    cli: &Cli,
    n: usize,
    predicates: Option<&[String]>,
    disconnected: bool,
    checkpoint: Option<&PathBuf>,
) -> Result<(), Failure> {
    let predicates = match predicates {
        None => vec![Predicate::ClawFree],
        Some(names) => names
            .iter()
            .filter(|s| !s.is_empty())
            .map(|s| Predicate::parse(s))
            .collect::<Result<Vec<_>, _>>()?,
    };
    let spec = EnumSpec {
        n,
        predicates,
        connected: !disconnected,
        mode: Mode::Exhaustive,
    };
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let json = cli.format == Format::Json;
    let mut write_err = None;
    let mut emit = |g: &Graph| {
        let line = if json {
            json!({ "graph6": g.to_graph6() }).to_string()
        } else {
            g.to_graph6()
        };
        if let Err(e) = writeln!(out, "{line}") {
            write_err.get_or_insert(e);
        }
    };
    let count = match checkpoint {
        Some(path) => enumerate::enumerate_with_checkpoint(&spec, path, &mut emit)?,
        None => {
            let graphs = enumerate::enumerate_parallel(&spec, cli.workers)?;
            for g in &graphs {
                emit(g);
            }
            graphs.len() as u64
        }
    };
    if let Some(e) = write_err {
        // A closed pipe downstream is not an error for a stream.
        if e.kind() != io::ErrorKind::BrokenPipe {
            return Err(e.into());
        }
        return Ok(());
    }
    out.flush()?;
    eprintln!("{count} graphs");
    Ok(())
}

fn print_report(r: &verify::VerificationReport) {
    println!(
        "{} n={}..{} ({}): {}",
        r.theorem,
        r.n_range[0],
        r.n_range[1],
        format!("{:?}", r.mode).to_lowercase(),
        if r.passed { "PASS" } else { "FAIL" }
    );
    println!("  {}", r.statement);
    println!(
        "  checked {}, hypothesis met {}, borderline {}, {} ms",
        r.checked,
        r.hypothesis_met,
        r.borderline.len(),
        r.elapsed_ms
    );
    if let Some(seed) = r.seed {
        println!("  seed {seed}");
    }
    for e in &r.exceptions {
        println!("  exception {} -> {}", e.graph6, e.matched);
    }
    for b in &r.borderline {
        println!("  borderline {b}");
    }
    for note in &r.notes {
        println!("  note: {note}");
    }
}
