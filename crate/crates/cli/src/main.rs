//! `dspectra` — command-line harness for distance-spectrum analysis.
//!
//! Exit codes: 0 on success, 1 when a bound violation is found or an
//! extremal claim fails to verify, 2 on usage or input errors.

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use dspectra::{
    all_connected_graphs, all_graphs, all_trees, certify, certify_graph, decode_graph6,
    encode_graph6, format_real, parse_edge_list, verify_extremal, write_certificates_csv,
    write_certificates_json, BoundId, CertificateRow, ExtremalClaim, FamilySpec, Graph,
    GraphAnalysis, GraphFilter, ScanSummary,
};
use rayon::prelude::*;
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::str::FromStr;

#[derive(Parser)]
#[command(
    name = "dspectra",
    version,
    about = "Distance spectra of connected graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print structural and distance-spectral invariants of one graph.
    Analyze {
        #[command(flatten)]
        source: GraphSource,
        /// Default seed for random family specs that omit one.
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, value_enum, default_value_t = TextFormat::Text)]
        format: TextFormat,
    },
    /// Evaluate every bound on one graph and emit the certificates.
    Certify {
        #[command(flatten)]
        source: GraphSource,
        /// Default seed for random family specs that omit one.
        #[arg(long)]
        seed: Option<u64>,
        /// Identifier for the report rows (defaults to one derived from
        /// the input).
        #[arg(long)]
        id: Option<String>,
        #[arg(long, value_enum, default_value_t = ReportFormat::Csv)]
        format: ReportFormat,
        /// Write the report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Certify every graph in a graph6 corpus file and summarize.
    Scan {
        /// File with one graph6 string per line (`#` starts a comment).
        #[arg(long)]
        corpus: PathBuf,
        /// Keep only graphs in this class: bipartite, tqfree, or regular.
        #[arg(long)]
        filter: Option<GraphFilter>,
        #[arg(long, value_enum, default_value_t = ReportFormat::Csv)]
        format: ReportFormat,
        /// Write the report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check an extremal-graph claim exhaustively at a given order.
    Extremal {
        /// One of: min-rho-bipartite, max-rho-bipartite, max-rho-tree,
        /// max-rho-tree-maxdeg, min-de.
        claim: ExtremalClaim,
        /// Number of vertices to search at.
        #[arg(long)]
        n: usize,
        /// Maximum degree (required by max-rho-tree-maxdeg).
        #[arg(long)]
        max_degree: Option<usize>,
        /// Write the report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Evaluate the energy bound on a graph paired with its complement.
    Nordhaus {
        #[command(flatten)]
        source: GraphSource,
        /// Default seed for random family specs that omit one.
        #[arg(long)]
        seed: Option<u64>,
        /// Identifier for the report (defaults to one derived from the
        /// input).
        #[arg(long)]
        id: Option<String>,
        #[arg(long, value_enum, default_value_t = TextFormat::Text)]
        format: TextFormat,
    },
    /// List small graphs of a class as graph6 strings, one per line.
    Enumerate {
        /// Number of vertices.
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = GraphClass::Connected)]
        class: GraphClass,
        /// Write the list here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Exactly one way of naming the input graph.
#[derive(Args)]
#[group(required = true, multiple = false)]
struct GraphSource {
    /// Family spec such as `complete:4`, `kpq:2,3`, or `random_tree:9:7`.
    #[arg(long)]
    family: Option<String>,
    /// graph6-encoded graph.
    #[arg(long)]
    graph6: Option<String>,
    /// Path to an edge-list file (header line `n m`, then `u v` lines).
    #[arg(long)]
    edges: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TextFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ReportFormat {
    Csv,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GraphClass {
    All,
    Connected,
    Trees,
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Analyze {
            source,
            seed,
            format,
        } => {
            let (id, graph) = load_graph(&source, seed)?;
            analyze(&id, &graph, format)
        }
        Command::Certify {
            source,
            seed,
            id,
            format,
            out,
        } => {
            let (default_id, graph) = load_graph(&source, seed)?;
            let rows =
                certify_graph(&id.unwrap_or(default_id), &graph).context("analysis failed")?;
            emit_rows(&rows, format, out.as_deref())?;
            Ok(violation_code(&rows))
        }
        Command::Scan {
            corpus,
            filter,
            format,
            out,
        } => scan(&corpus, filter, format, out.as_deref()),
        Command::Extremal {
            claim,
            n,
            max_degree,
            out,
        } => {
            let report = verify_extremal(claim, n, max_degree)
                .with_context(|| format!("claim `{}` could not be checked", claim.as_str()))?;
            let mut text = serde_json::to_string_pretty(&report).expect("report serializes");
            text.push('\n');
            emit(&text, out.as_deref())?;
            Ok(if report.claim_verified {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Nordhaus {
            source,
            seed,
            id,
            format,
        } => {
            let (default_id, graph) = load_graph(&source, seed)?;
            nordhaus(&id.unwrap_or(default_id), &graph, format)
        }
        Command::Enumerate { n, class, out } => enumerate(n, class, out.as_deref()),
    }
}

/// Builds the input graph and a default row identifier for it.
fn load_graph(source: &GraphSource, seed: Option<u64>) -> Result<(String, Graph)> {
    if let Some(spec_text) = &source.family {
        let mut spec = FamilySpec::from_str(spec_text)?;
        if let Some(s) = seed {
            spec = spec.with_default_seed(s);
        }
        let graph = spec
            .build()
            .with_context(|| format!("cannot build `{spec_text}`"))?;
        return Ok((spec.id(), graph));
    }
    if let Some(text) = &source.graph6 {
        let graph = decode_graph6(text).context("invalid graph6 input")?;
        let id = text
            .trim()
            .strip_prefix(">>graph6<<")
            .unwrap_or(text.trim())
            .to_string();
        return Ok((id, graph));
    }
    let path = source.edges.as_ref().expect("clap enforces one source");
    let text =
        fs::read_to_string(path).with_context(|| format!("cannot read `{}`", path.display()))?;
    let graph =
        parse_edge_list(&text).with_context(|| format!("cannot parse `{}`", path.display()))?;
    let id = path
        .file_stem()
        .map(|stem| stem.to_string_lossy().into_owned())
        .unwrap_or_else(|| "edges".to_string());
    Ok((id, graph))
}

fn analyze(id: &str, graph: &Graph, format: TextFormat) -> Result<ExitCode> {
    let a = GraphAnalysis::new(graph).context("analysis failed")?;
    let spectrum: Vec<f64> = a.distance_spectrum().values().to_vec();
    match format {
        TextFormat::Json => {
            let value = serde_json::json!({
                "graph_id": id,
                "n": a.vertex_count(),
                "m": a.edge_count(),
                "degrees": a.degrees(),
                "diameter": a.diameter(),
                "bipartite_sides": a.bipartition().map(|b| [b.size_a, b.size_b]),
                "wiener_index": a.wiener(),
                "first_zagreb_index": a.zagreb_m1(),
                "distance_spectrum": spectrum,
                "distance_spectral_radius": a.rho(),
                "distance_energy": a.distance_energy(),
                "positive_distance_eigenvalues": a.distance_signs().positive,
            });
            println!(
                "{}",
                serde_json::to_string_pretty(&value).expect("value serializes")
            );
        }
        TextFormat::Text => {
            let mut text = String::new();
            let _ = writeln!(text, "graph: {id}");
            let _ = writeln!(text, "vertices: {}", a.vertex_count());
            let _ = writeln!(text, "edges: {}", a.edge_count());
            let _ = writeln!(text, "degrees: {}", join(a.degrees().iter()));
            let _ = writeln!(text, "diameter: {}", a.diameter());
            match a.bipartition() {
                Some(b) => {
                    let _ = writeln!(text, "bipartite: yes ({} + {})", b.size_a, b.size_b);
                }
                None => {
                    let _ = writeln!(text, "bipartite: no");
                }
            }
            let _ = writeln!(text, "wiener index: {}", a.wiener());
            let _ = writeln!(text, "first zagreb index: {}", a.zagreb_m1());
            let _ = writeln!(
                text,
                "distance spectrum: {}",
                join(spectrum.iter().map(|&x| format_real(x)))
            );
            let _ = writeln!(text, "distance spectral radius: {}", format_real(a.rho()));
            let _ = writeln!(
                text,
                "distance energy: {}",
                format_real(a.distance_energy())
            );
            let _ = writeln!(
                text,
                "positive distance eigenvalues: {}",
                a.distance_signs().positive
            );
            print!("{text}");
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn scan(
    corpus: &Path,
    filter: Option<GraphFilter>,
    format: ReportFormat,
    out: Option<&Path>,
) -> Result<ExitCode> {
    let text = fs::read_to_string(corpus)
        .with_context(|| format!("cannot read `{}`", corpus.display()))?;
    let mut graphs = Vec::new();
    for (index, line) in text.lines().enumerate() {
        let entry = line.trim();
        if entry.is_empty() || entry.starts_with('#') {
            continue;
        }
        let graph = decode_graph6(entry)
            .with_context(|| format!("line {} of `{}`", index + 1, corpus.display()))?;
        let id = entry
            .strip_prefix(">>graph6<<")
            .unwrap_or(entry)
            .to_string();
        if filter.map_or(true, |f| f.accepts(&graph)) {
            graphs.push((id, graph));
        }
    }

    let per_graph: Result<Vec<Vec<CertificateRow>>, _> = graphs
        .par_iter()
        .map(|(id, graph)| certify_graph(id, graph))
        .collect();
    let per_graph = per_graph.context("analysis failed")?;

    let mut summary = ScanSummary::default();
    let mut rows = Vec::new();
    for group in per_graph {
        summary.absorb_rows(&group);
        rows.extend(group);
    }

    emit_rows(&rows, format, out)?;
    eprintln!(
        "scanned {} graphs: {} certificates, {} applicable, {} violations, \
         {} equality mismatches, {} boundary flags",
        summary.graphs,
        summary.certificates,
        summary.applicable,
        summary.violations,
        summary.equality_mismatches,
        summary.boundary_flags,
    );
    Ok(if summary.violations == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn nordhaus(id: &str, graph: &Graph, format: TextFormat) -> Result<ExitCode> {
    let a = GraphAnalysis::new(graph).context("analysis failed")?;
    let cert = certify(&a, BoundId::DeNordhausGaddum);
    let row = CertificateRow::new(id, &a, cert);
    let cert = &row.certificate;
    match format {
        TextFormat::Json => {
            println!(
                "{}",
                serde_json::to_string_pretty(&row).expect("row serializes")
            );
        }
        TextFormat::Text => {
            let mut text = String::new();
            let _ = writeln!(text, "graph: {id} (n={}, m={})", row.n, row.m);
            if cert.applicable {
                let _ = writeln!(text, "complement: connected");
                let _ = writeln!(
                    text,
                    "energy sum over graph and complement: {}",
                    format_real(cert.observed_value.unwrap_or(f64::NAN))
                );
                let _ = writeln!(
                    text,
                    "lower bound: {}",
                    format_real(cert.bound_value.unwrap_or(f64::NAN))
                );
                let _ = writeln!(
                    text,
                    "slack: {}",
                    format_real(cert.slack.unwrap_or(f64::NAN))
                );
                let _ = writeln!(
                    text,
                    "equality: predicted {}, observed {}",
                    cert.equality_predicted
                        .map_or("-".to_string(), |b| b.to_string()),
                    cert.equality_observed
                        .map_or("-".to_string(), |b| b.to_string()),
                );
            } else {
                let _ = writeln!(
                    text,
                    "not applicable: {}",
                    cert.reason.as_deref().unwrap_or("unknown")
                );
            }
            print!("{text}");
        }
    }
    Ok(if cert.is_violation() {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    })
}

fn enumerate(n: usize, class: GraphClass, out: Option<&Path>) -> Result<ExitCode> {
    let graphs = match class {
        GraphClass::All => all_graphs(n),
        GraphClass::Connected => all_connected_graphs(n),
        GraphClass::Trees => all_trees(n),
    }
    .context("enumeration failed")?;
    let mut text = String::new();
    for graph in &graphs {
        let encoded = encode_graph6(graph).context("graph6 encoding failed")?;
        text.push_str(&encoded);
        text.push('\n');
    }
    emit(&text, out)?;
    eprintln!("enumerated {} graphs on {n} vertices", graphs.len());
    Ok(ExitCode::SUCCESS)
}

fn emit_rows(rows: &[CertificateRow], format: ReportFormat, out: Option<&Path>) -> Result<()> {
    let text = match format {
        ReportFormat::Csv => write_certificates_csv(rows),
        ReportFormat::Json => write_certificates_json(rows),
    };
    emit(&text, out)
}

fn emit(text: &str, out: Option<&Path>) -> Result<()> {
    match out {
        Some(path) => {
            fs::write(path, text).with_context(|| format!("cannot write `{}`", path.display()))?
        }
        None => print!("{text}"),
    }
    Ok(())
}

fn violation_code(rows: &[CertificateRow]) -> ExitCode {
    if rows.iter().any(|row| row.certificate.is_violation()) {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}

fn join<I, T>(items: I) -> String
where
    I: IntoIterator<Item = T>,
    T: ToString,
{
    let parts: Vec<String> = items.into_iter().map(|x| x.to_string()).collect();
    parts.join(" ")
}
