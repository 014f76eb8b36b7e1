//! The `sparsekit` command line.
//!
//! Exit codes: 0 success, 1 disagreement (verify) or invalid certificate
//! (check), 2 usage or input error, 3 oracle refusal (verify). `solve` uses
//! 10 for YES, 20 for NO and 30 for timeout or refusal.

use std::ffi::OsString;
use std::fs;
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use clap::{Args, Parser, Subcommand, ValueEnum};
use sparsekit_core::compose::{
    compose_dominating_set, compose_four_coloring, compose_four_list_coloring, compose_hamiltonicity,
    pad_batch,
};
use sparsekit_core::exactrank::RankMode;
use sparsekit_core::gen::{
    random_bipartite_ham, random_cnf, random_digraph, random_eq_col_rbds, random_hypergraph, random_tsd,
    CnfParams, HypergraphParams, RbdsParams, TsdParams,
};
use sparsekit_core::kernel::{sparsify_hypergraph, sparsify_nae_sat};
use sparsekit_core::model::{check_certificate, DecisionInstance};
use sparsekit_core::oracle::{solve, Limits, Verdict};
use sparsekit_core::reduce::{
    cnfsat_to_naesat, directed_hc_to_undirected, naesat3_to_tsd, naesat_to_hypergraph,
};
use sparsekit_core::rng::SplitMix64;
use sparsekit_core::ReductionTrace;

use crate::formats::{self, Document, Structured};
use crate::harness::{self, HarnessConfig, Transformation};
use crate::stats;

#[derive(Debug, Parser)]
#[command(name = "sparsekit", version, about = "Hypergraph sparsification, reductions, compositions and exact oracles")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Kernelize a hypergraph (`p hyp`) or NAE formula (`p cnf`).
    Sparsify {
        input: PathBuf,
        output: PathBuf,
        /// Fraction-free rational elimination instead of a random prime.
        #[arg(long)]
        exact: bool,
        /// Seed for the random prime.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Write the kernel report (JSON) here.
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Apply a stand-alone reduction.
    Reduce {
        name: Reduction,
        input: PathBuf,
        output: PathBuf,
        /// Write the trace (JSON) here instead of stderr.
        #[arg(long)]
        trace: Option<PathBuf>,
    },
    /// OR-compose a batch of structured instances.
    Compose {
        kind: Composition,
        /// A directory (files taken in name order) or a list of files.
        #[arg(long, required = true, num_args = 1.., value_delimiter = ',')]
        inputs: Vec<PathBuf>,
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        trace: Option<PathBuf>,
    },
    /// Decide an instance exactly. Exit 10 yes, 20 no, 30 timeout/refused.
    Solve {
        problem: Problem,
        file: PathBuf,
        /// Dominating-set budget; defaults to a `c budget B` comment.
        #[arg(long)]
        budget: Option<usize>,
        /// Write the certificate (JSON) here on YES.
        #[arg(long)]
        cert: Option<PathBuf>,
        #[command(flatten)]
        limits: LimitArgs,
    },
    /// Check a certificate. Exit 0 valid, 1 invalid.
    Check {
        problem: Problem,
        instance: PathBuf,
        cert: PathBuf,
        #[arg(long)]
        budget: Option<usize>,
    },
    /// Generate a seeded random instance.
    Gen(GenArgs),
    /// Randomized oracle verification of a transformation.
    Verify(VerifyArgs),
    /// Size summary and kernel headroom of an instance file.
    Stats {
        file: PathBuf,
        #[arg(long)]
        exact: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Reduction {
    CnfToNae,
    NaeToHyp,
    Nae3ToTsd,
    DhcToHc,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Composition {
    #[value(name = "4col")]
    FourCol,
    #[value(name = "4listcol")]
    FourListCol,
    Hamcycle,
    Domset,
    ConnDomset,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Problem {
    Sat,
    Nae,
    #[value(name = "2col")]
    TwoCol,
    #[value(name = "4col")]
    FourCol,
    Hc,
    Dhc,
    Ds,
    Cds,
    Tsd,
    Bipham,
    Colrbds,
    Listcol,
}

#[derive(Debug, Args)]
struct LimitArgs {
    #[arg(long, default_value_t = 100_000_000)]
    node_budget: u64,
    /// Wall-clock limit in seconds.
    #[arg(long, default_value_t = 60)]
    time_limit: u64,
    #[arg(long, default_value_t = 24)]
    var_cap: u32,
    #[arg(long, default_value_t = 6)]
    budget_cap: usize,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum GenKind {
    Cnf,
    Hyp,
    Digraph,
    Tsd,
    Bipham,
    Colrbds,
}

#[derive(Debug, Args)]
struct GenArgs {
    kind: GenKind,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Variables, vertices, triangles (tsd), |B| (bipham) or blue vertices.
    #[arg(long)]
    n: Option<u32>,
    /// Clauses, edges, |X| (tsd) or |A| (bipham).
    #[arg(long)]
    m: Option<u32>,
    /// Color classes (colrbds).
    #[arg(long, default_value_t = 2)]
    k: u32,
    /// Maximum clause or edge size.
    #[arg(long, default_value_t = 3)]
    d: u32,
    #[arg(long, default_value_t = 3)]
    class_size: u32,
    /// Edge probability in thousandths.
    #[arg(long, default_value_t = 300)]
    density: u32,
    /// Plant a YES solution.
    #[arg(long)]
    plant: bool,
    /// Output file; stdout when absent.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    transformation: Transformation,
    #[arg(long)]
    trials: Option<u64>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    n: Option<u32>,
    #[arg(long)]
    m: Option<u32>,
    #[arg(long)]
    k: Option<u32>,
    #[arg(long)]
    d: Option<u32>,
    #[arg(long)]
    t: Option<u32>,
    /// Edge probability in thousandths.
    #[arg(long)]
    density: Option<u32>,
    /// Probability in [0, 1] of planting a YES input.
    #[arg(long)]
    yes_bias: Option<f64>,
    #[arg(long)]
    exact: bool,
    #[arg(long)]
    node_budget: Option<u64>,
    /// Wall-clock limit per oracle call, in seconds.
    #[arg(long, default_value_t = 60)]
    time_limit: u64,
    /// Run one trial from this trial seed.
    #[arg(long)]
    replay: Option<u64>,
    /// Write the JSON report here.
    #[arg(long)]
    report: Option<PathBuf>,
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{path}: {source}")]
    Format { path: PathBuf, source: formats::FormatError },
    #[error("{0}")]
    Usage(String),
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io { path: path.into(), source })
}

fn write(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|source| CliError::Io { path: path.into(), source })
}

fn load(path: &Path) -> Result<Document, CliError> {
    formats::parse_document(&read(path)?).map_err(|source| CliError::Format { path: path.into(), source })
}

/// Parses `args` (including the program name) and runs the command,
/// returning the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match execute(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

fn execute(command: Command) -> Result<i32, CliError> {
    match command {
        Command::Sparsify { input, output, exact, seed, report } => {
            let mode = if exact { RankMode::Exact } else { RankMode::Modular { seed } };
            let (text, rep) = match load(&input)? {
                Document::Hypergraph(h) => {
                    let (k, r) = sparsify_hypergraph(&h, mode);
                    (formats::write_hypergraph(&k), r)
                }
                Document::Cnf(f) => {
                    let (k, r) = sparsify_nae_sat(&f, mode);
                    (formats::write_cnf(&k), r)
                }
                other => return Err(usage(format!("sparsify takes hyp or cnf input, got {}", other.kind()))),
            };
            write(&output, &text)?;
            if let Some(path) = report {
                write(&path, &formats::write_kernel_report(&rep))?;
            }
            eprintln!("kept {} of {} (bound {})", rep.output_total(), rep.input_total(), rep.total_bound);
            Ok(0)
        }
        Command::Reduce { name, input, output, trace } => {
            let doc = load(&input)?;
            let (text, tr) = match (name, doc) {
                (Reduction::CnfToNae, Document::Cnf(f)) => {
                    let g = cnfsat_to_naesat(&f);
                    let mut tr = ReductionTrace::new("cnf-to-nae");
                    tr.input_size = f.num_clauses();
                    tr.output_vertices = g.num_vars();
                    tr.output_edges = g.num_clauses();
                    (formats::write_cnf(&g), tr)
                }
                (Reduction::NaeToHyp, Document::Cnf(f)) => {
                    let (h, tr) = naesat_to_hypergraph(&f);
                    (formats::write_hypergraph(&h), tr)
                }
                (Reduction::Nae3ToTsd, Document::Cnf(f)) => {
                    let (t, tr) = naesat3_to_tsd(&f).map_err(|e| usage(e.to_string()))?;
                    (formats::write_structured(&Structured::Tsd(t)), tr)
                }
                (Reduction::DhcToHc, Document::Digraph(d)) => {
                    let (g, tr) = directed_hc_to_undirected(&d);
                    (formats::write_graph(&g), tr)
                }
                (r, doc) => return Err(usage(format!("reduction {r:?} cannot take {} input", doc.kind()))),
            };
            write(&output, &text)?;
            let trace_json = formats::write_trace(&tr);
            match trace {
                Some(path) => write(&path, &trace_json)?,
                None => eprint!("{trace_json}"),
            }
            Ok(0)
        }
        Command::Compose { kind, inputs, out, trace } => compose(kind, &inputs, &out, trace.as_deref()),
        Command::Solve { problem, file, budget, cert, limits } => {
            let inst = decision_instance(problem, &file, budget)?;
            let deadline = Instant::now() + Duration::from_secs(limits.time_limit);
            let stop = move || Instant::now() >= deadline;
            let lim = Limits {
                node_budget: limits.node_budget,
                var_cap: limits.var_cap,
                budget_cap: limits.budget_cap,
                interrupt: Some(&stop),
            };
            match solve(&inst, &lim) {
                Ok(ans) => {
                    println!("{}", ans.verdict);
                    println!("nodes {}", ans.nodes);
                    if let (Some(path), Some(c)) = (cert, &ans.certificate) {
                        write(&path, &formats::write_certificate(c))?;
                    }
                    Ok(match ans.verdict {
                        Verdict::Yes => 10,
                        Verdict::No => 20,
                        Verdict::Timeout => 30,
                    })
                }
                Err(e) => {
                    println!("refused: {e}");
                    Ok(30)
                }
            }
        }
        Command::Check { problem, instance, cert, budget } => {
            let inst = decision_instance(problem, &instance, budget)?;
            let c = formats::parse_certificate(&read(&cert)?)
                .map_err(|source| CliError::Format { path: cert.clone(), source })?;
            match check_certificate(&inst, &c) {
                Ok(true) => {
                    println!("valid");
                    Ok(0)
                }
                Ok(false) => {
                    println!("invalid");
                    Ok(1)
                }
                Err(e) => Err(usage(e.to_string())),
            }
        }
        Command::Gen(args) => generate(&args),
        Command::Verify(args) => verify(&args),
        Command::Stats { file, exact, seed } => {
            let mode = if exact { RankMode::Exact } else { RankMode::Modular { seed } };
            print!("{}", stats::summarize(&load(&file)?, mode));
            Ok(0)
        }
    }
}

fn budget_comment(path: &Path) -> Result<Option<usize>, CliError> {
    Ok(formats::comments(&read(path)?)
        .iter()
        .find_map(|c| c.strip_prefix("budget ").and_then(|b| b.trim().parse().ok())))
}

fn decision_instance(problem: Problem, path: &Path, budget: Option<usize>) -> Result<DecisionInstance, CliError> {
    use DecisionInstance as D;
    let doc = load(path)?;
    let kind = doc.kind();
    let mismatch = || usage(format!("problem {problem:?} cannot be asked of a {kind} file"));
    let budget = || -> Result<usize, CliError> {
        match budget {
            Some(b) => Ok(b),
            None => budget_comment(path)?.ok_or_else(|| usage("dominating set needs --budget")),
        }
    };
    Ok(match (problem, doc) {
        (Problem::Sat, Document::Cnf(f)) => D::Sat(f),
        (Problem::Nae, Document::Cnf(f)) => D::Nae(f),
        (Problem::TwoCol, Document::Hypergraph(h)) => D::TwoColor(h),
        (Problem::FourCol, Document::Graph(g)) => D::FourColor(g),
        (Problem::Hc, Document::Graph(g)) => D::HamCycle(g),
        (Problem::Dhc, Document::Digraph(d)) => D::DirectedHamCycle(d),
        (Problem::Ds, Document::Graph(graph)) => D::DomSet { graph, budget: budget()? },
        (Problem::Cds, Document::Graph(graph)) => D::ConnectedDomSet { graph, budget: budget()? },
        (Problem::Tsd, Document::Structured(Structured::Tsd(t))) => D::Tsd(t),
        (Problem::Bipham, Document::Structured(Structured::BipartiteHam(b))) => D::BipartiteHam(b),
        (Problem::Colrbds, Document::Structured(Structured::ColRbds(r))) => D::ColRbds(r),
        (Problem::Listcol, Document::Structured(Structured::ListColoring(l))) => D::ListColoring(l),
        _ => return Err(mismatch()),
    })
}

fn input_files(inputs: &[PathBuf]) -> Result<Vec<PathBuf>, CliError> {
    if let [dir] = inputs {
        if dir.is_dir() {
            let entries = fs::read_dir(dir).map_err(|source| CliError::Io { path: dir.clone(), source })?;
            let mut files: Vec<PathBuf> = entries
                .filter_map(|e| e.ok().map(|e| e.path()))
                .filter(|p| p.is_file())
                .collect();
            files.sort();
            return Ok(files);
        }
    }
    Ok(inputs.to_vec())
}

fn compose(kind: Composition, inputs: &[PathBuf], out: &Path, trace: Option<&Path>) -> Result<i32, CliError> {
    let files = input_files(inputs)?;
    let docs = files.iter().map(|p| load(p)).collect::<Result<Vec<_>, _>>()?;
    let bad = |i: usize| usage(format!("{}: wrong instance kind for {kind:?}", files[i].display()));
    let compose_err = |e: sparsekit_core::compose::ComposeError| usage(e.to_string());
    let (text, tr) = match kind {
        Composition::FourCol | Composition::FourListCol => {
            let mut batch = Vec::new();
            for (i, d) in docs.into_iter().enumerate() {
                match d {
                    Document::Structured(Structured::Tsd(t)) => batch.push(t),
                    _ => return Err(bad(i)),
                }
            }
            let batch = pad_batch(batch).map_err(compose_err)?;
            if kind == Composition::FourCol {
                let (g, _, tr) = compose_four_coloring(&batch).map_err(compose_err)?;
                (formats::write_graph(&g), tr)
            } else {
                let (l, _, tr) = compose_four_list_coloring(&batch).map_err(compose_err)?;
                (formats::write_structured(&Structured::ListColoring(l)), tr)
            }
        }
        Composition::Hamcycle => {
            let mut batch = Vec::new();
            for (i, d) in docs.into_iter().enumerate() {
                match d {
                    Document::Structured(Structured::BipartiteHam(b)) => batch.push(b),
                    _ => return Err(bad(i)),
                }
            }
            let batch = pad_batch(batch).map_err(compose_err)?;
            let (d, _, tr) = compose_hamiltonicity(&batch).map_err(compose_err)?;
            (formats::write_digraph(&d), tr)
        }
        Composition::Domset | Composition::ConnDomset => {
            let mut batch = Vec::new();
            for (i, d) in docs.into_iter().enumerate() {
                match d {
                    Document::Structured(Structured::ColRbds(r)) => batch.push(r),
                    _ => return Err(bad(i)),
                }
            }
            let batch = pad_batch(batch).map_err(compose_err)?;
            let (g, budget, _, tr) = compose_dominating_set(&batch).map_err(compose_err)?;
            let problem = if kind == Composition::Domset { "ds" } else { "cds" };
            let comments = [format!("budget {budget}"), format!("problem {problem}")];
            (formats::write_graph_with_comments(&g, &comments), tr)
        }
    };
    write(out, &text)?;
    if let Some(path) = trace {
        write(path, &formats::write_trace(&tr))?;
    }
    eprintln!("composed {} inputs into {} vertices", files.len(), tr.output_vertices);
    Ok(0)
}

fn generate(a: &GenArgs) -> Result<i32, CliError> {
    let mut rng = SplitMix64::new(a.seed);
    let gen_err = |e: sparsekit_core::gen::GenError| usage(e.to_string());
    let text = match a.kind {
        GenKind::Cnf => {
            let p = CnfParams {
                num_vars: a.n.unwrap_or(8),
                num_clauses: a.m.unwrap_or(20) as usize,
                min_width: 1,
                max_width: a.d as usize,
            };
            formats::write_cnf(&random_cnf(&mut rng, &p).map_err(gen_err)?)
        }
        GenKind::Hyp => {
            let p = HypergraphParams {
                num_vertices: a.n.unwrap_or(10),
                num_edges: a.m.unwrap_or(30) as usize,
                min_edge_size: 2,
                max_edge_size: a.d as usize,
            };
            formats::write_hypergraph(&random_hypergraph(&mut rng, &p).map_err(gen_err)?)
        }
        GenKind::Digraph => formats::write_digraph(&random_digraph(&mut rng, a.n.unwrap_or(8), a.density, a.plant)),
        GenKind::Tsd => {
            let p = TsdParams { m: a.m.unwrap_or(4) as usize, n: a.n.unwrap_or(2) as usize, density: a.density };
            formats::write_structured(&Structured::Tsd(random_tsd(&mut rng, &p, a.plant).map_err(gen_err)?))
        }
        GenKind::Bipham => {
            let m = a.m.unwrap_or(2);
            if a.n.is_some_and(|n| n != m + 1) {
                return Err(usage("bipartite Hamiltonian path instances need n = m + 1"));
            }
            let inst = random_bipartite_ham(&mut rng, m as usize, a.density, a.plant).map_err(gen_err)?;
            formats::write_structured(&Structured::BipartiteHam(inst))
        }
        GenKind::Colrbds => {
            let p = RbdsParams {
                k: a.k as usize,
                class_size: a.class_size as usize,
                blue: a.n.unwrap_or(4) as usize,
                density: a.density,
            };
            formats::write_structured(&Structured::ColRbds(random_eq_col_rbds(&mut rng, &p, a.plant).map_err(gen_err)?))
        }
    };
    match &a.out {
        Some(path) => write(path, &text)?,
        None => print!("{text}"),
    }
    Ok(0)
}

fn verify(a: &VerifyArgs) -> Result<i32, CliError> {
    let mut cfg = HarnessConfig::new(a.transformation);
    cfg.seed = a.seed;
    cfg.exact = a.exact;
    cfg.replay = a.replay;
    cfg.time_limit = Some(Duration::from_secs(a.time_limit));
    macro_rules! set {
        ($($field:ident),*) => { $( if let Some(v) = a.$field { cfg.$field = v; } )* };
    }
    set!(trials, n, m, k, d, t, density, node_budget);
    if let Some(p) = a.yes_bias {
        if !(0.0..=1.0).contains(&p) {
            return Err(usage("--yes-bias must lie in [0, 1]"));
        }
        cfg.yes_bias = (p * 1000.0).round() as u32;
    }
    let report = harness::verify(&cfg).map_err(|e| usage(e.to_string()))?;
    println!("{}", report.summary());
    for d in &report.disagreements {
        println!("disagreement in trial {} (seed {}): {}", d.trial, d.trial_seed, d.detail);
        println!("  replay: {}", d.replay);
    }
    for r in &report.refusals {
        println!("refused in trial {} (seed {}): {}", r.trial, r.trial_seed, r.message);
    }
    if let Some(path) = &a.report {
        write(path, &report.to_json())?;
    }
    Ok(report.exit_code())
}
