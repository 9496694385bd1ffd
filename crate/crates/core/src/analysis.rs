//! A per-graph cache of everything the bound certificates consume: the
//! distance matrix, both spectra, exact sign counts, and the structural
//! flags (regularity, bipartition, free-ness conditions) that drive
//! equality predictions.

use crate::graph::{Bipartition, DegreeSummary, DistanceMatrix, Graph};
use crate::spectral::{
    self, DistanceSignCounts, SpectralError, Spectrum, SymmetricMatrix, ThresholdDecision,
};

/// Precomputed invariants of one connected graph.
///
/// Construction runs every eigensolve up front, so all accessors are cheap
/// and infallible afterwards.
#[derive(Debug, Clone)]
pub struct GraphAnalysis {
    graph: Graph,
    distance: DistanceMatrix,
    distance_spectrum: Spectrum,
    distance_signs: DistanceSignCounts,
    adjacency_spectrum: Spectrum,
    degrees: Vec<usize>,
    degree_summary: Option<DegreeSummary>,
    bipartition: Option<Bipartition>,
    diameter: u32,
    wiener: u64,
    zagreb: u64,
    regular: bool,
    semiregular: bool,
    complete: bool,
    complete_bipartite: bool,
    equal_row_sums: bool,
    tq_free: bool,
}

impl GraphAnalysis {
    /// Analyzes a connected graph. Errors if the graph is disconnected or
    /// an eigensolve fails to converge.
    pub fn new(g: &Graph) -> Result<Self, SpectralError> {
        let distance = g.distance_matrix()?;
        let distance_spectrum = SymmetricMatrix::from_distance_matrix(&distance).eigenvalues()?;
        let distance_signs = spectral::distance_sign_counts(&distance, &distance_spectrum);
        let adjacency_spectrum = spectral::adjacency_spectrum(g)?;
        Ok(GraphAnalysis {
            degrees: g.degrees(),
            degree_summary: g.degree_summary().ok(),
            bipartition: g.bipartition(),
            diameter: distance.diameter(),
            wiener: distance.wiener(),
            zagreb: g.zagreb_m1(),
            regular: g.is_regular(),
            semiregular: g.is_semiregular(),
            complete: g.is_complete(),
            complete_bipartite: g.is_complete_bipartite(),
            equal_row_sums: distance.equal_row_sums(),
            tq_free: g.is_triangle_and_quadrangle_free(),
            graph: g.clone(),
            distance,
            distance_spectrum,
            distance_signs,
            adjacency_spectrum,
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn distance_matrix(&self) -> &DistanceMatrix {
        &self.distance
    }

    pub fn distance_spectrum(&self) -> &Spectrum {
        &self.distance_spectrum
    }

    pub fn adjacency_spectrum(&self) -> &Spectrum {
        &self.adjacency_spectrum
    }

    /// Exact sign counts of the distance spectrum.
    pub fn distance_signs(&self) -> DistanceSignCounts {
        self.distance_signs
    }

    /// Distance spectral radius.
    pub fn rho(&self) -> f64 {
        self.distance_spectrum.largest()
    }

    /// Distance energy.
    pub fn distance_energy(&self) -> f64 {
        self.distance_spectrum.abs_sum()
    }

    pub fn vertex_count(&self) -> usize {
        self.graph.vertex_count()
    }

    pub fn edge_count(&self) -> usize {
        self.graph.edge_count()
    }

    pub fn diameter(&self) -> u32 {
        self.diameter
    }

    pub fn wiener(&self) -> u64 {
        self.wiener
    }

    /// First Zagreb index: the sum of squared degrees.
    pub fn zagreb_m1(&self) -> u64 {
        self.zagreb
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    /// Largest/second-largest/smallest/second-smallest degrees as a
    /// multiset; `None` on a single vertex.
    pub fn degree_summary(&self) -> Option<&DegreeSummary> {
        self.degree_summary.as_ref()
    }

    pub fn bipartition(&self) -> Option<&Bipartition> {
        self.bipartition.as_ref()
    }

    pub fn is_regular(&self) -> bool {
        self.regular
    }

    pub fn is_semiregular(&self) -> bool {
        self.semiregular
    }

    pub fn is_complete(&self) -> bool {
        self.complete
    }

    pub fn is_complete_bipartite(&self) -> bool {
        self.complete_bipartite
    }

    /// True when all distance-matrix row sums agree (transmission regular).
    pub fn has_equal_row_sums(&self) -> bool {
        self.equal_row_sums
    }

    /// True when the graph contains neither a triangle nor a quadrangle.
    pub fn is_tq_free(&self) -> bool {
        self.tq_free
    }

    /// Whether the smallest adjacency eigenvalue is at least `t`, resolved
    /// exactly when floating point cannot decide.
    pub fn smallest_adjacency_at_least(&self, t: i64) -> ThresholdDecision {
        spectral::smallest_adjacency_eigenvalue_at_least(&self.graph, &self.adjacency_spectrum, t)
    }
}
