//! Command-line frontend: parse module spec files, build and export
//! graphs, and run the claim suite over the corpus.
//!
//! Exit codes: 0 success, 1 verification failures, 2 usage errors.

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use specgraph_core::corpus::CorpusParams;
use specgraph_core::suite::ClaimFilter;
use specgraph_core::{claims, graph, GraphKind, Lattice, SpecGraph, DEFAULT_MAX_ORDER};

pub mod doc;
pub mod out;
pub mod report;
pub mod spec;
pub mod subset;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("cannot read {path}: {detail}")]
    ReadFile { path: String, detail: String },
    #[error("malformed module spec {path}: {detail}")]
    MalformedSpec { path: String, detail: String },
    #[error("subset index {index} is out of range: the module has {count} submodules")]
    IndexOutOfRange { index: u32, count: usize },
    #[error("bad subset token '{token}': {detail}")]
    BadSubsetToken { token: String, detail: String },
    #[error("submodule #{index} is not {family}; --kind {kind} takes T inside the {family} spectrum")]
    NotInFamily { index: u32, family: &'static str, kind: &'static str },
    #[error("the subset T must be non-empty: {detail}")]
    EmptySubset { detail: String },
    #[error("unknown claim id '{id}'; pass --claims all or ids from the verify report")]
    UnknownClaim { id: String },
    #[error("SPECGRAPH_MAX_ORDER must be a positive integer, got '{value}'")]
    BadMaxOrder { value: String },
    #[error("enumeration bound {bound} is below the corpus max order {needed}; raise SPECGRAPH_MAX_ORDER")]
    BoundBelowCorpus { bound: u64, needed: u64 },
    #[error("cannot write {path}: {detail}")]
    WriteFile { path: String, detail: String },
    #[error("{0}")]
    Core(specgraph_core::Error),
}

#[derive(Parser)]
#[command(
    name = "specgraph",
    version,
    about = "Zariski topology-graphs on the maximal spectrum of a finite module",
    disable_help_subcommand = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Print progress to stderr while long commands run.
    #[arg(short, long, global = true, action = clap::ArgAction::Count)]
    verbose: u8,
}

#[derive(Subcommand)]
enum Command {
    /// Describe a module: invariants, submodule lattice, spectra.
    Inspect(InspectArgs),
    /// Build one graph and print it (JSON by default).
    Graph(GraphArgs),
    /// Run the claim suite over the corpus and report per-claim counts.
    Verify(VerifyArgs),
    /// Scan the corpus for graphs whose T misses the vertex set.
    Explore(ExploreArgs),
    /// Write one graph to a file (DOT by default).
    Export(ExportArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum KindArg {
    Zmax,
    Zspec,
    ZmaxDisjoint,
    Ag,
}

impl KindArg {
    fn kind(self) -> GraphKind {
        match self {
            KindArg::Zmax => GraphKind::ZariskiMax,
            KindArg::Zspec => GraphKind::ZariskiSpec,
            KindArg::ZmaxDisjoint => GraphKind::ZariskiMaxDisjoint,
            KindArg::Ag => GraphKind::Annihilating,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GraphFormat {
    Json,
    Dot,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ReportFormat {
    Json,
    Text,
}

#[derive(Args)]
struct InspectArgs {
    /// Module spec file: {"ring":{"modulus":N},"module":{"invariant_factors":[..]}}.
    #[arg(long, value_name = "FILE")]
    module: PathBuf,
    #[arg(long, value_enum, default_value = "json")]
    format: ReportFormat,
    /// Write here instead of stdout (atomic: temp file + rename).
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct GraphArgs {
    /// Module spec file: {"ring":{"modulus":N},"module":{"invariant_factors":[..]}}.
    #[arg(long, value_name = "FILE")]
    module: PathBuf,
    #[arg(long, value_enum, default_value = "zmax")]
    kind: KindArg,
    /// "max", "spec", or comma-separated submodule indices / g= aliases.
    #[arg(long, default_value = "max")]
    subset: String,
    #[arg(long, value_enum, default_value = "json")]
    export: GraphFormat,
    /// Write here instead of stdout (atomic: temp file + rename).
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ExportArgs {
    /// Module spec file: {"ring":{"modulus":N},"module":{"invariant_factors":[..]}}.
    #[arg(long, value_name = "FILE")]
    module: PathBuf,
    #[arg(long, value_enum, default_value = "zmax")]
    kind: KindArg,
    /// "max", "spec", or comma-separated submodule indices / g= aliases.
    #[arg(long, default_value = "max")]
    subset: String,
    #[arg(long, value_enum, default_value = "dot")]
    export: GraphFormat,
    /// Destination file (atomic: temp file + rename).
    #[arg(long, value_name = "FILE")]
    out: PathBuf,
}

#[derive(Args)]
struct VerifyArgs {
    /// Largest group order in the corpus.
    #[arg(long, default_value_t = 200)]
    corpus_max_order: u64,
    /// Most invariant factors per module in the corpus.
    #[arg(long, default_value_t = 3)]
    corpus_max_rank: usize,
    /// Comma-separated claim ids, or "all".
    #[arg(long, default_value = "all")]
    claims: String,
    #[arg(long, value_enum, default_value = "text")]
    format: ReportFormat,
    /// Write here instead of stdout (atomic: temp file + rename).
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
    /// Worker threads; the report is identical for every value.
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// Include a wall-clock timestamp (off by default so runs are byte-identical).
    #[arg(long)]
    stamp: bool,
}

#[derive(Args)]
struct ExploreArgs {
    /// Largest group order in the corpus.
    #[arg(long, default_value_t = 200)]
    corpus_max_order: u64,
    /// Most invariant factors per module in the corpus.
    #[arg(long, default_value_t = 3)]
    corpus_max_rank: usize,
    #[arg(long, value_enum, default_value = "text")]
    format: ReportFormat,
    /// Write here instead of stdout (atomic: temp file + rename).
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
    /// Worker threads; the report is identical for every value.
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// Include a wall-clock timestamp (off by default so runs are byte-identical).
    #[arg(long)]
    stamp: bool,
}

/// The enumeration bound: SPECGRAPH_MAX_ORDER when set, else the
/// library default.
fn enumeration_bound() -> Result<u64, CliError> {
    match std::env::var("SPECGRAPH_MAX_ORDER") {
        Ok(v) => match v.trim().parse::<u64>() {
            Ok(n) if n >= 1 => Ok(n),
            _ => Err(CliError::BadMaxOrder { value: v }),
        },
        Err(std::env::VarError::NotPresent) => Ok(DEFAULT_MAX_ORDER),
        Err(std::env::VarError::NotUnicode(_)) => {
            Err(CliError::BadMaxOrder { value: "<non-unicode>".to_string() })
        }
    }
}

fn build_graph(lat: &Lattice, kind: GraphKind, t: &[u32]) -> Result<SpecGraph, CliError> {
    let g = match kind {
        GraphKind::ZariskiMax => graph::build_zariski_max(lat, t),
        GraphKind::ZariskiSpec => graph::build_zariski_spec(lat, t),
        GraphKind::ZariskiMaxDisjoint => graph::build_zariski_max_disjoint(lat, t),
        GraphKind::Annihilating => Ok(graph::build_annihilating(lat)),
    };
    g.map_err(CliError::Core)
}

fn render_graph(
    module: &Path,
    kind: KindArg,
    selector: &str,
    format: GraphFormat,
) -> Result<String, CliError> {
    let bound = enumeration_bound()?;
    let (_m, lat) = spec::load_module(module, bound)?;
    let kind = kind.kind();
    let t = subset::resolve(&lat, selector, kind)?;
    let g = build_graph(&lat, kind, &t)?;
    Ok(match format {
        GraphFormat::Json => doc::graph_json(&lat, &g),
        GraphFormat::Dot => doc::graph_dot(&lat, &g),
    })
}

fn parse_claims(raw: &str) -> Result<ClaimFilter, CliError> {
    let raw = raw.trim();
    if raw == "all" || raw.is_empty() {
        return Ok(ClaimFilter::all());
    }
    let ids: Vec<String> = raw
        .split(',')
        .map(|s| s.trim().to_string())
        .filter(|s| !s.is_empty())
        .collect();
    for id in &ids {
        if claims::claim_info(id).is_none() {
            return Err(CliError::UnknownClaim { id: id.clone() });
        }
    }
    Ok(ClaimFilter::new(&ids))
}

fn corpus_setup(max_order: u64, max_rank: usize) -> Result<(CorpusParams, u64), CliError> {
    let bound = enumeration_bound()?;
    if bound < max_order {
        return Err(CliError::BoundBelowCorpus { bound, needed: max_order });
    }
    Ok((CorpusParams { max_order, max_rank }, bound))
}

fn cmd_inspect(a: &InspectArgs) -> Result<i32, CliError> {
    let bound = enumeration_bound()?;
    let (_m, lat) = spec::load_module(&a.module, bound)?;
    let body = match a.format {
        ReportFormat::Json => doc::inspect_json(&lat),
        ReportFormat::Text => doc::inspect_text(&lat),
    };
    out::emit(a.out.as_deref(), &body)?;
    Ok(0)
}

fn cmd_graph(a: &GraphArgs) -> Result<i32, CliError> {
    let body = render_graph(&a.module, a.kind, &a.subset, a.export)?;
    out::emit(a.out.as_deref(), &body)?;
    Ok(0)
}

fn cmd_export(a: &ExportArgs) -> Result<i32, CliError> {
    let body = render_graph(&a.module, a.kind, &a.subset, a.export)?;
    out::emit(Some(&a.out), &body)?;
    Ok(0)
}

fn cmd_verify(a: &VerifyArgs, verbose: bool) -> Result<i32, CliError> {
    let (params, bound) = corpus_setup(a.corpus_max_order, a.corpus_max_rank)?;
    let filter = parse_claims(&a.claims)?;
    let (suite, _) = report::run_suite_jobs(&params, bound, &filter, a.jobs, verbose)
        .map_err(CliError::Core)?;
    let stamp = a.stamp.then(report::stamp_now);
    let body = match a.format {
        ReportFormat::Json => report::verify_json(&suite, stamp),
        ReportFormat::Text => report::verify_text(&suite, stamp),
    };
    out::emit(a.out.as_deref(), &body)?;
    Ok(if suite.any_fail() { 1 } else { 0 })
}

fn cmd_explore(a: &ExploreArgs, verbose: bool) -> Result<i32, CliError> {
    let (params, bound) = corpus_setup(a.corpus_max_order, a.corpus_max_rank)?;
    let (_, explore) =
        report::run_suite_jobs(&params, bound, &ClaimFilter::none(), a.jobs, verbose)
            .map_err(CliError::Core)?;
    let stamp = a.stamp.then(report::stamp_now);
    let body = match a.format {
        ReportFormat::Json => report::explore_json(&explore, stamp),
        ReportFormat::Text => report::explore_text(&explore, stamp),
    };
    out::emit(a.out.as_deref(), &body)?;
    Ok(0)
}

fn dispatch(cli: &Cli) -> Result<i32, CliError> {
    let verbose = cli.verbose > 0;
    match &cli.command {
        Command::Inspect(a) => cmd_inspect(a),
        Command::Graph(a) => cmd_graph(a),
        Command::Verify(a) => cmd_verify(a, verbose),
        Command::Explore(a) => cmd_explore(a, verbose),
        Command::Export(a) => cmd_export(a),
    }
}

/// Entry point used by the binary; returns the process exit code.
pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // clap writes help/version to stdout and usage errors to
            // stderr on print(); keep its exit-code convention.
            let code = match e.kind() {
                clap::error::ErrorKind::DisplayHelp
                | clap::error::ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            e.print().ok();
            return code;
        }
    };
    match dispatch(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}
