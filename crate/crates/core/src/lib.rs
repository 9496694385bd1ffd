//! Distance spectra of connected graphs: exact graph invariants, a
//! deterministic symmetric eigensolver, eigenvalue-based bounds with
//! machine-checkable certificates, graph family generators, exhaustive
//! enumeration of small graphs, and interchange formats.
//!
//! ```
//! use dspectra::{certify_all, families, GraphAnalysis};
//!
//! let g = families::cycle(5).unwrap();
//! let a = GraphAnalysis::new(&g).unwrap();
//!
//! assert!((a.rho() - 6.0).abs() < 1e-9); // distance spectral radius
//! assert!((a.distance_energy() - 12.0).abs() < 1e-9);
//!
//! for cert in certify_all(&a) {
//!     if cert.applicable && cert.equality_observed == Some(true) {
//!         println!("{} is tight on C5", cert.bound_id);
//!     }
//! }
//! ```

pub mod analysis;
pub mod bounds;
pub mod enumerate;
pub mod families;
pub mod graph;
pub mod harness;
pub mod io;
pub mod spectral;

pub use analysis::GraphAnalysis;
pub use bounds::{
    certificate_tolerance, certify, certify_all, BoundCertificate, BoundId, BoundKind,
    UnknownBoundId, EQUALITY_TOLERANCE,
};
pub use enumerate::{
    all_connected_graphs, all_graphs, all_trees, canonical_form, is_isomorphic, EnumerateError,
};
pub use families::{FamilyError, FamilyParseError, FamilySpec};

pub use graph::{Bipartition, DegreeSummary, DistanceMatrix, Graph, GraphError, Side};
pub use harness::{
    certify_graph, scan_graphs, verify_extremal, ExtremalClaim, ExtremalReport, GraphFilter,
    HarnessError, ScanOutcome, ScanSummary, UnknownClaim, UnknownFilter,
};
pub use io::{
    decode_graph6, encode_graph6, format_real, parse_edge_list, read_certificates_json,
    write_certificates_csv, write_certificates_json, write_edge_list, CertificateRow,
    EdgeListError, Graph6Error, CSV_HEADER, MAX_GRAPH6_VERTICES,
};
pub use spectral::{
    adjacency_spectrum, complete_bipartite_distance_spectrum, distance_energy,
    distance_perron_vector, distance_sign_counts, distance_spectral_radius, distance_spectrum,
    graph_energy, regular_small_diameter_distance_spectrum, singular_value_sum,
    smallest_adjacency_eigenvalue_at_least, DistanceSignCounts, EigenDecomposition, SpectralError,
    Spectrum, SymmetricMatrix, ThresholdDecision, EIGENVALUE_ACCURACY, SIGN_TOLERANCE,
};
