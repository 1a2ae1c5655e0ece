//! `ehrhart-roots`: enumerate graphs, compute Ehrhart polynomials and roots
//! into a JSON-lines cache, run root-location checks, export scatter data.

mod cache;
mod compute;
mod corpus;
mod export;

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use ehrhart_core::graphs;
use ehrhart_core::roots::{Check, ConjectureReport, Status, DEFAULT_TOL};
use ehrhart_core::PolytopeKind;

use cache::{Cache, CacheRecord, VERSION};
use compute::Method;
use corpus::Entry;

#[derive(Debug)]
pub enum Failure {
    /// Bad arguments or input; exit code 2.
    Usage(String),
    /// A computation or IO step failed; exit code 3.
    Compute(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Compute(_) => 3,
        }
    }
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Failure::Usage(m) | Failure::Compute(m) => f.write_str(m),
        }
    }
}

#[derive(Parser)]
#[command(name = "ehrhart-roots", version, about = "Ehrhart polynomials and roots of graph polytopes")]
struct Cli {
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Result cache (JSON lines).
    #[arg(long, global = true, env = "EHRHART_CACHE", default_value = "ehrhart-cache.jsonl")]
    cache: PathBuf,
    /// Tolerance for root-location checks.
    #[arg(long, global = true, default_value_t = DEFAULT_TOL)]
    tol: f64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Kind {
    Edge,
    Symmetric,
}

impl From<Kind> for PolytopeKind {
    fn from(k: Kind) -> Self {
        match k {
            Kind::Edge => PolytopeKind::Edge,
            Kind::Symmetric => PolytopeKind::Symmetric,
        }
    }
}

#[derive(Args)]
struct CorpusArgs {
    /// Graph file (one `d=..;E=..;L=..` per line) or family spec such as
    /// `multipartite:3,2,2`, `gamma:12,7`, `tree:path:6`.
    input: Option<String>,
    /// All connected simple graphs of this order instead of an input.
    #[arg(long)]
    order: Option<usize>,
    #[arg(long, value_enum, default_value = "edge")]
    kind: Kind,
    #[arg(long, value_enum, default_value = "auto")]
    method: Method,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ComputeFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ExportFormat {
    Csv,
    Svg,
}

#[derive(Subcommand)]
enum Command {
    /// Write every connected simple graph of an order, one per line.
    Enumerate {
        #[arg(long)]
        order: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compute and cache Ehrhart polynomials, δ-vectors and roots.
    Compute {
        #[command(flatten)]
        corpus: CorpusArgs,
        #[arg(long, value_enum, default_value = "text")]
        format: ComputeFormat,
        /// Recompute even when a current record exists.
        #[arg(long)]
        force: bool,
    },
    /// Run root-location checks over a corpus.
    Check {
        #[command(flatten)]
        corpus: CorpusArgs,
        #[arg(long, value_delimiter = ',', value_parser = parse_check,
              default_value = "strip,stability,circle,narrow-strip,half-line")]
        checks: Vec<Check>,
        /// Fail instead of computing records missing from the cache.
        #[arg(long)]
        no_compute: bool,
        /// Per-graph verdict CSV.
        #[arg(long, default_value = "ehrhart-report.csv")]
        report: PathBuf,
    },
    /// Export the roots of a corpus as CSV or SVG.
    Export {
        #[command(flatten)]
        corpus: CorpusArgs,
        #[arg(long, value_enum, default_value = "csv")]
        format: ExportFormat,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        no_compute: bool,
    },
}

fn parse_check(s: &str) -> Result<Check, String> {
    s.parse().map_err(|e: ehrhart_core::Error| e.to_string())
}

fn write_output(out: Option<&Path>, text: &str) -> Result<(), Failure> {
    match out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| Failure::Compute(format!("cannot write {}: {e}", path.display()))),
        None => std::io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| Failure::Compute(format!("stdout: {e}"))),
    }
}

/// Cached records for `entries`, computing (in parallel) the ones that are
/// missing or stale and appending them in key order.
fn records(
    cache: &mut Cache,
    entries: &[Entry],
    kind: PolytopeKind,
    method: Method,
    tol: f64,
    compute_missing: bool,
    force: bool,
) -> Result<Vec<CacheRecord>, Failure> {
    let usable = |rec: &CacheRecord| {
        rec.version == VERSION && (method == Method::Auto || rec.method == method.name())
    };
    let missing: Vec<&Entry> = entries
        .iter()
        .filter(|e| force || !cache.get(kind.name(), &e.key.to_string()).is_some_and(usable))
        .collect();
    if !missing.is_empty() && !compute_missing {
        return Err(Failure::Compute(format!(
            "{} of {} records missing from {}",
            missing.len(),
            entries.len(),
            if cache.exists() { "the cache" } else { "a nonexistent cache" }
        )));
    }
    let fresh: Vec<Result<CacheRecord, Failure>> = missing
        .par_iter()
        .map(|e| compute::compute(e, kind, method, tol))
        .collect();
    let fresh: Vec<CacheRecord> = fresh.into_iter().collect::<Result<_, _>>()?;
    let computed = fresh.len();
    cache.append(fresh)?;
    if computed > 0 {
        eprintln!("computed {computed} record(s), {} from cache", entries.len() - computed);
    }
    Ok(entries
        .iter()
        .map(|e| cache.get(kind.name(), &e.key.to_string()).expect("just stored").clone())
        .collect())
}

fn load(c: &CorpusArgs) -> Result<(Vec<Entry>, PolytopeKind), Failure> {
    let kind = PolytopeKind::from(c.kind);
    Ok((corpus::load(c.input.as_deref(), c.order, kind)?, kind))
}

fn run(cli: Cli) -> Result<bool, Failure> {
    let tol = cli.tol;
    if !(tol >= 0.0 && tol.is_finite()) {
        return Err(Failure::Usage(format!("--tol must be a nonnegative number, got {tol}")));
    }
    match cli.command {
        Command::Enumerate { order, out } => {
            let graphs = graphs::enumerate_connected_simple(order).map_err(|e| Failure::Usage(e.to_string()))?;
            let text: String = graphs.iter().map(|g| format!("{g}\n")).collect();
            write_output(out.as_deref(), &text)?;
            if out.is_some() {
                println!("{}", graphs.len());
            } else {
                eprintln!("{}", graphs.len());
            }
            Ok(true)
        }
        Command::Compute { corpus, format, force } => {
            let (entries, kind) = load(&corpus)?;
            let mut cache = Cache::open(&cli.cache)?;
            let recs = records(&mut cache, &entries, kind, corpus.method, tol, true, force)?;
            let mut text = String::new();
            for rec in &recs {
                match format {
                    ComputeFormat::Json => text.push_str(&serde_json::to_string(rec).expect("serializable")),
                    ComputeFormat::Text => {
                        let roots: Vec<String> = rec.root_set()?.roots.iter().map(|r| r.to_string()).collect();
                        text.push_str(&format!(
                            "{}\t{}\t{}\tD={}\tehrhart=[{}]\tdelta=[{}]\troots=[{}]",
                            rec.graph_key,
                            rec.kind,
                            rec.graph,
                            rec.dim,
                            rec.polynomial()?,
                            rec.delta.join(","),
                            roots.join(", ")
                        ));
                    }
                }
                text.push('\n');
            }
            write_output(None, &text)?;
            Ok(true)
        }
        Command::Check {
            corpus,
            checks,
            no_compute,
            report,
        } => {
            let (entries, kind) = load(&corpus)?;
            let mut cache = Cache::open(&cli.cache)?;
            let recs = records(&mut cache, &entries, kind, corpus.method, tol, !no_compute, false)?;
            let mut csv = String::from(ConjectureReport::CSV_HEADER);
            csv.push('\n');
            let mut tally = vec![[0usize; 3]; checks.len()];
            for rec in &recs {
                let rs = rec.root_set()?;
                let r = ConjectureReport::evaluate(&rec.graph_key, compute::context(rec, kind), &rs, &checks, tol);
                for (i, (_, v)) in r.verdicts.iter().enumerate() {
                    tally[i][match v.status {
                        Status::Pass => 0,
                        Status::Fail => 1,
                        Status::NotApplicable => 2,
                    }] += 1;
                }
                for row in r.csv_rows() {
                    csv.push_str(&row);
                    csv.push('\n');
                }
            }
            write_output(Some(&report), &csv)?;
            println!("{} {} graph(s), tol {tol:e}", recs.len(), kind.name());
            let mut ok = true;
            for (c, [pass, fail, na]) in checks.iter().zip(&tally) {
                let gate = if c.gated() { "gated" } else { "observational" };
                println!("{:<13} pass {pass:>6}  fail {fail:>6}  n/a {na:>6}  ({gate})", c.name());
                ok &= !(c.gated() && *fail > 0);
            }
            Ok(ok)
        }
        Command::Export {
            corpus,
            format,
            out,
            no_compute,
        } => {
            let (entries, kind) = load(&corpus)?;
            let mut cache = Cache::open(&cli.cache)?;
            let recs = records(&mut cache, &entries, kind, corpus.method, tol, !no_compute, false)?;
            let refs: Vec<&CacheRecord> = recs.iter().collect();
            let text = match format {
                ExportFormat::Csv => export::csv(&refs)?,
                ExportFormat::Svg => {
                    let title = format!("roots of {} polytopes, {} graph(s)", kind.name(), recs.len());
                    export::svg(&refs, &title, kind == PolytopeKind::Symmetric)?
                }
            };
            write_output(out.as_deref(), &text)?;
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let pool = match cli.jobs {
        Some(0) => {
            eprintln!("error: --jobs must be at least 1");
            return ExitCode::from(2);
        }
        Some(n) => rayon::ThreadPoolBuilder::new().num_threads(n).build(),
        None => rayon::ThreadPoolBuilder::new().build(),
    }
    .expect("thread pool");
    match pool.install(|| run(cli)) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code())
        }
    }
}
