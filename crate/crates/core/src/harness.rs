//! Scan and verification plumbing shared by the command-line front end and
//! the integration suite: per-graph certification with aggregate counters,
//! structural corpus filters, and exhaustive extremal-claim verification
//! over enumerated graph classes.

use crate::analysis::GraphAnalysis;
use crate::bounds::{certificate_tolerance, certify_all};
use crate::enumerate::{all_connected_graphs, all_trees, is_isomorphic, EnumerateError};
use crate::families::{self, FamilyError};
use crate::graph::Graph;
use crate::io::{encode_graph6, CertificateRow, Graph6Error};
use crate::spectral::SpectralError;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;
use std::time::Instant;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error(transparent)]
    Spectral(#[from] SpectralError),
    #[error(transparent)]
    Enumerate(#[from] EnumerateError),
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error(transparent)]
    Graph6(#[from] Graph6Error),
    #[error("claim `{0}` needs a maximum degree between 2 and n-1")]
    MissingMaxDegree(&'static str),
    #[error("no graphs on {n} vertices satisfy the constraints of claim `{claim}`")]
    NoCandidates { claim: &'static str, n: usize },
}

/// Structural corpus filters, applied before any spectral work.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GraphFilter {
    Bipartite,
    TqFree,
    Regular,
}

impl GraphFilter {
    pub fn as_str(self) -> &'static str {
        match self {
            GraphFilter::Bipartite => "bipartite",
            GraphFilter::TqFree => "tqfree",
            GraphFilter::Regular => "regular",
        }
    }

    pub fn accepts(self, g: &Graph) -> bool {
        match self {
            GraphFilter::Bipartite => g.bipartition().is_some(),
            GraphFilter::TqFree => g.is_triangle_and_quadrangle_free(),
            GraphFilter::Regular => g.is_regular(),
        }
    }
}

impl fmt::Display for GraphFilter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("unknown filter `{0}`; expected bipartite, tqfree, or regular")]
pub struct UnknownFilter(pub String);

impl FromStr for GraphFilter {
    type Err = UnknownFilter;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "bipartite" => Ok(GraphFilter::Bipartite),
            "tqfree" => Ok(GraphFilter::TqFree),
            "regular" => Ok(GraphFilter::Regular),
            other => Err(UnknownFilter(other.to_string())),
        }
    }
}

/// Aggregate counters over a set of certificates.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanSummary {
    pub graphs: usize,
    pub certificates: usize,
    pub applicable: usize,
    pub violations: usize,
    pub equality_mismatches: usize,
    pub boundary_flags: usize,
}

impl ScanSummary {
    pub fn absorb_rows(&mut self, rows: &[CertificateRow]) {
        self.graphs += 1;
        for row in rows {
            let c = &row.certificate;
            self.certificates += 1;
            self.applicable += usize::from(c.applicable);
            self.violations += usize::from(c.is_violation());
            self.equality_mismatches += usize::from(c.is_equality_mismatch());
            self.boundary_flags += usize::from(c.boundary);
        }
    }

    pub fn merge(&mut self, other: &ScanSummary) {
        self.graphs += other.graphs;
        self.certificates += other.certificates;
        self.applicable += other.applicable;
        self.violations += other.violations;
        self.equality_mismatches += other.equality_mismatches;
        self.boundary_flags += other.boundary_flags;
    }

    /// A scan is clean when nothing was violated and every equality
    /// characterization matched observation.
    pub fn clean(&self) -> bool {
        self.violations == 0 && self.equality_mismatches == 0
    }
}

/// Certifies one graph, producing the full row set for reporting.
pub fn certify_graph(graph_id: &str, g: &Graph) -> Result<Vec<CertificateRow>, SpectralError> {
    let a = GraphAnalysis::new(g)?;
    Ok(certify_all(&a)
        .into_iter()
        .map(|c| CertificateRow::new(graph_id, &a, c))
        .collect())
}

/// Result of scanning a sequence of graphs.
#[derive(Debug, Clone, PartialEq)]
pub struct ScanOutcome {
    pub rows: Vec<CertificateRow>,
    pub summary: ScanSummary,
}

/// Certifies a sequence of `(id, graph)` pairs in order.
pub fn scan_graphs<I>(inputs: I) -> Result<ScanOutcome, SpectralError>
where
    I: IntoIterator<Item = (String, Graph)>,
{
    let mut rows = Vec::new();
    let mut summary = ScanSummary::default();
    for (id, g) in inputs {
        let graph_rows = certify_graph(&id, &g)?;
        summary.absorb_rows(&graph_rows);
        rows.extend(graph_rows);
    }
    Ok(ScanOutcome { rows, summary })
}

/// The exhaustively checkable extremal claims.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ExtremalClaim {
    /// The balanced complete bipartite graph minimizes the distance
    /// spectral radius among connected bipartite graphs.
    MinRhoBipartite,
    /// The path maximizes the distance spectral radius among connected
    /// bipartite graphs.
    MaxRhoBipartite,
    /// The path maximizes the distance spectral radius among trees.
    MaxRhoTree,
    /// The broom maximizes the distance spectral radius among trees with a
    /// given maximum degree.
    MaxRhoTreeMaxDegree,
    /// The complete graph is the unique minimizer of distance energy among
    /// connected graphs.
    MinDistanceEnergy,
}

impl ExtremalClaim {
    pub const ALL: [ExtremalClaim; 5] = [
        ExtremalClaim::MinRhoBipartite,
        ExtremalClaim::MaxRhoBipartite,
        ExtremalClaim::MaxRhoTree,
        ExtremalClaim::MaxRhoTreeMaxDegree,
        ExtremalClaim::MinDistanceEnergy,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            ExtremalClaim::MinRhoBipartite => "min-rho-bipartite",
            ExtremalClaim::MaxRhoBipartite => "max-rho-bipartite",
            ExtremalClaim::MaxRhoTree => "max-rho-tree",
            ExtremalClaim::MaxRhoTreeMaxDegree => "max-rho-tree-maxdeg",
            ExtremalClaim::MinDistanceEnergy => "min-de",
        }
    }
}

impl fmt::Display for ExtremalClaim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("unknown extremal claim `{0}`")]
pub struct UnknownClaim(pub String);

impl FromStr for ExtremalClaim {
    type Err = UnknownClaim;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        ExtremalClaim::ALL
            .into_iter()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| UnknownClaim(s.to_string()))
    }
}

/// Outcome of exhaustively checking one extremal claim at one size.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExtremalReport {
    pub claim_id: String,
    pub n: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub max_degree: Option<usize>,
    /// Graphs examined after filtering.
    pub candidate_count: usize,
    pub extremal_value: f64,
    /// graph6 strings of every candidate attaining the extremal value
    /// within tolerance.
    pub extremal_graphs: Vec<String>,
    /// True when the attaining set is exactly the predicted graph, up to
    /// isomorphism.
    pub claim_verified: bool,
    pub runtime_ms: u64,
}

/// Exhaustively verifies an extremal claim on all candidates of the given
/// size. `max_degree` is consumed only by [`ExtremalClaim::MaxRhoTreeMaxDegree`].
pub fn verify_extremal(
    claim: ExtremalClaim,
    n: usize,
    max_degree: Option<usize>,
) -> Result<ExtremalReport, HarnessError> {
    let start = Instant::now();

    let bipartite_candidates = || -> Result<Vec<Graph>, HarnessError> {
        Ok(all_connected_graphs(n)?
            .into_iter()
            .filter(|g| g.bipartition().is_some())
            .collect())
    };

    let (candidates, minimize, predicted): (Vec<Graph>, bool, Graph) = match claim {
        ExtremalClaim::MinRhoBipartite => (
            bipartite_candidates()?,
            true,
            families::complete_bipartite(n / 2, n.div_ceil(2))?,
        ),
        ExtremalClaim::MaxRhoBipartite => (bipartite_candidates()?, false, families::path(n)?),
        ExtremalClaim::MaxRhoTree => (all_trees(n)?, false, families::path(n)?),
        ExtremalClaim::MaxRhoTreeMaxDegree => {
            let delta = max_degree
                .filter(|&d| (2..n).contains(&d))
                .ok_or(HarnessError::MissingMaxDegree("max-rho-tree-maxdeg"))?;
            let trees = all_trees(n)?
                .into_iter()
                .filter(|t| t.degrees().into_iter().max() == Some(delta))
                .collect();
            (trees, false, families::broom(n, delta)?)
        }
        ExtremalClaim::MinDistanceEnergy => {
            (all_connected_graphs(n)?, true, families::complete(n)?)
        }
    };
    if candidates.is_empty() {
        return Err(HarnessError::NoCandidates {
            claim: claim.as_str(),
            n,
        });
    }

    let mut scored: Vec<(f64, &Graph)> = Vec::with_capacity(candidates.len());
    for g in &candidates {
        let a = GraphAnalysis::new(g)?;
        let value = match claim {
            ExtremalClaim::MinDistanceEnergy => a.distance_energy(),
            _ => a.rho(),
        };
        scored.push((value, g));
    }
    let extremal_value = scored
        .iter()
        .map(|(v, _)| *v)
        .reduce(|best, v| if minimize { best.min(v) } else { best.max(v) })
        .expect("nonempty candidates");

    let tolerance = certificate_tolerance(extremal_value);
    let attaining: Vec<&Graph> = scored
        .iter()
        .filter(|(v, _)| (v - extremal_value).abs() <= tolerance)
        .map(|(_, g)| *g)
        .collect();

    let claim_verified =
        attaining.len() == 1 && is_isomorphic(attaining[0], &predicted).unwrap_or(false);

    let extremal_graphs = attaining
        .iter()
        .map(|g| encode_graph6(g))
        .collect::<Result<Vec<_>, _>>()?;

    Ok(ExtremalReport {
        claim_id: claim.as_str().to_string(),
        n,
        max_degree: if claim == ExtremalClaim::MaxRhoTreeMaxDegree {
            max_degree
        } else {
            None
        },
        candidate_count: candidates.len(),
        extremal_value,
        extremal_graphs,
        claim_verified,
        runtime_ms: start.elapsed().as_millis() as u64,
    })
}
