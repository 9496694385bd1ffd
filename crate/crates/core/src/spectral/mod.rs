//! Spectra of symmetric integer matrices attached to graphs: eigenvalues,
//! spectral radius, energies, Perron vectors, and exact sign certification.
//!
//! Floating-point eigenvalues carry a documented tolerance; whenever a sign
//! or multiplicity question lands inside that tolerance, the integer
//! structure of the underlying matrix is used to settle it exactly (see
//! [`distance_sign_counts`] and [`smallest_adjacency_eigenvalue_at_least`]).

mod eigen;
mod exact;

use crate::graph::{DistanceMatrix, Graph, GraphError};
use std::collections::HashSet;
use thiserror::Error;

/// Relative eigenvalue accuracy of the solver, as a multiple of
/// `n * max|entry|`.
pub const EIGENVALUE_ACCURACY: f64 = 1e-9;

/// Relative tolerance used when classifying eigenvalue signs and
/// multiplicities, as a multiple of `n * max|eigenvalue|`.
pub const SIGN_TOLERANCE: f64 = 1e-8;

/// Errors from spectral computations.
#[derive(Debug, Error)]
pub enum SpectralError {
    /// The QL iteration exceeded its budget for one eigenvalue. This is not
    /// expected for symmetric input and usually indicates NaN/Inf entries.
    #[error("eigenvalue {index} failed to converge after {iterations} iterations (n = {n})")]
    Convergence {
        index: usize,
        iterations: usize,
        n: usize,
    },
    #[error("matrix must have at least one row")]
    Empty,
    #[error("row {row} has length {len}, expected {expected}")]
    RowLength {
        row: usize,
        len: usize,
        expected: usize,
    },
    #[error("entry ({i}, {j}) is not finite")]
    NotFinite { i: usize, j: usize },
    #[error("entries ({i}, {j}) and ({j}, {i}) differ; matrix must be symmetric")]
    NotSymmetric { i: usize, j: usize },
    #[error("graph is not regular")]
    NotRegular,
    #[error("graph has diameter {0}, but at most 2 is required")]
    DiameterExceedsTwo(u32),
    #[error("computed Perron vector has non-positive entry at vertex {0}")]
    PerronSign(usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// A dense symmetric matrix with finite entries.
#[derive(Debug, Clone)]
pub struct SymmetricMatrix {
    n: usize,
    a: Vec<f64>,
}

impl SymmetricMatrix {
    /// Builds a matrix from explicit rows, validating shape, finiteness,
    /// and exact symmetry.
    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self, SpectralError> {
        let n = rows.len();
        if n == 0 {
            return Err(SpectralError::Empty);
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(SpectralError::RowLength {
                    row: i,
                    len: row.len(),
                    expected: n,
                });
            }
        }
        let mut a = vec![0.0; n * n];
        for i in 0..n {
            for j in 0..n {
                let x = rows[i][j];
                if !x.is_finite() {
                    return Err(SpectralError::NotFinite { i, j });
                }
                if x != rows[j][i] {
                    return Err(SpectralError::NotSymmetric { i, j });
                }
                a[i * n + j] = x;
            }
        }
        Ok(SymmetricMatrix { n, a })
    }

    /// The distance matrix of a connected graph, as a real matrix.
    pub fn from_distance_matrix(dm: &DistanceMatrix) -> Self {
        let n = dm.vertex_count();
        let mut a = vec![0.0; n * n];
        for i in 0..n {
            for j in 0..n {
                a[i * n + j] = f64::from(dm.entry(i, j));
            }
        }
        SymmetricMatrix { n, a }
    }

    /// The 0/1 adjacency matrix of a graph.
    pub fn from_adjacency(g: &Graph) -> Self {
        let n = g.vertex_count();
        let mut a = vec![0.0; n * n];
        for (u, v) in g.edges() {
            a[u * n + v] = 1.0;
            a[v * n + u] = 1.0;
        }
        SymmetricMatrix { n, a }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn entry(&self, i: usize, j: usize) -> f64 {
        self.a[i * self.n + j]
    }

    pub fn max_abs_entry(&self) -> f64 {
        self.a.iter().fold(0.0_f64, |acc, x| acc.max(x.abs()))
    }

    /// All eigenvalues, sorted in non-increasing order.
    pub fn eigenvalues(&self) -> Result<Spectrum, SpectralError> {
        let out = eigen::decompose(self.n, &self.a, false)?;
        Ok(Spectrum { values: out.values })
    }

    /// Eigenvalues together with an orthonormal eigenbasis.
    pub fn eigen_decomposition(&self) -> Result<EigenDecomposition, SpectralError> {
        let out = eigen::decompose(self.n, &self.a, true)?;
        let cols = out.vectors.expect("vectors were requested");
        let n = self.n;
        // Store eigenvectors as rows so each can be borrowed as a slice.
        let mut vectors = vec![0.0; n * n];
        for k in 0..n {
            for i in 0..n {
                vectors[k * n + i] = cols[i * n + k];
            }
        }
        Ok(EigenDecomposition {
            spectrum: Spectrum { values: out.values },
            vectors,
            n,
        })
    }
}

/// Eigenvalues of a symmetric matrix, sorted in non-increasing order.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    values: Vec<f64>,
}

impl Spectrum {
    fn from_unsorted(mut values: Vec<f64>) -> Self {
        values.sort_by(|a, b| b.total_cmp(a));
        Spectrum { values }
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Largest eigenvalue. Panics on an empty spectrum, which cannot be
    /// produced by this crate's constructors.
    pub fn largest(&self) -> f64 {
        self.values[0]
    }

    /// Smallest eigenvalue.
    pub fn smallest(&self) -> f64 {
        *self.values.last().expect("spectrum is nonempty")
    }

    /// Sum of absolute values of all eigenvalues.
    pub fn abs_sum(&self) -> f64 {
        self.values.iter().map(|v| v.abs()).sum()
    }

    /// Absolute tolerance for sign and multiplicity decisions on this
    /// spectrum: [`SIGN_TOLERANCE`] `* n * max|eigenvalue|`.
    pub fn tolerance(&self) -> f64 {
        let max_abs = self.values.iter().fold(0.0_f64, |acc, v| acc.max(v.abs()));
        SIGN_TOLERANCE * self.values.len() as f64 * max_abs
    }

    /// Groups numerically coincident eigenvalues, returning one `(value,
    /// multiplicity)` pair per cluster in non-increasing order.
    pub fn multiplicity_clusters(&self) -> Vec<(f64, usize)> {
        let mut out: Vec<(f64, usize)> = Vec::new();
        let mut anchor = 0.0_f64;
        for &v in &self.values {
            match out.last_mut() {
                Some((_, count)) if (v - anchor).abs() <= 1e-7 * anchor.abs().max(1.0) => {
                    *count += 1;
                }
                _ => {
                    anchor = v;
                    out.push((v, 1));
                }
            }
        }
        out
    }
}

/// A spectrum plus an orthonormal eigenbasis.
#[derive(Debug, Clone)]
pub struct EigenDecomposition {
    spectrum: Spectrum,
    vectors: Vec<f64>,
    n: usize,
}

impl EigenDecomposition {
    pub fn spectrum(&self) -> &Spectrum {
        &self.spectrum
    }

    /// Unit eigenvector for the `k`-th largest eigenvalue.
    pub fn eigenvector(&self, k: usize) -> &[f64] {
        &self.vectors[k * self.n..(k + 1) * self.n]
    }
}

/// Eigenvalues of the distance matrix of a connected graph.
pub fn distance_spectrum(g: &Graph) -> Result<Spectrum, SpectralError> {
    let dm = g.distance_matrix()?;
    SymmetricMatrix::from_distance_matrix(&dm).eigenvalues()
}

/// Eigenvalues of the adjacency matrix (any graph).
pub fn adjacency_spectrum(g: &Graph) -> Result<Spectrum, SpectralError> {
    SymmetricMatrix::from_adjacency(g).eigenvalues()
}

/// Distance spectral radius: the largest distance eigenvalue, which for a
/// connected graph is also the largest in absolute value.
pub fn distance_spectral_radius(g: &Graph) -> Result<f64, SpectralError> {
    Ok(distance_spectrum(g)?.largest())
}

/// Distance energy: the sum of absolute values of distance eigenvalues.
pub fn distance_energy(g: &Graph) -> Result<f64, SpectralError> {
    Ok(distance_spectrum(g)?.abs_sum())
}

/// Graph (adjacency) energy: the sum of absolute values of adjacency
/// eigenvalues. Defined for disconnected graphs as well.
pub fn graph_energy(g: &Graph) -> Result<f64, SpectralError> {
    Ok(adjacency_spectrum(g)?.abs_sum())
}

/// Sum of singular values of a symmetric matrix (its trace norm), which
/// equals the sum of absolute eigenvalues.
pub fn singular_value_sum(m: &SymmetricMatrix) -> Result<f64, SpectralError> {
    Ok(m.eigenvalues()?.abs_sum())
}

/// Unit Perron vector of the distance matrix of a connected graph: the
/// eigenvector for the spectral radius, oriented to be entrywise positive.
pub fn distance_perron_vector(g: &Graph) -> Result<Vec<f64>, SpectralError> {
    let dm = g.distance_matrix()?;
    let dec = SymmetricMatrix::from_distance_matrix(&dm).eigen_decomposition()?;
    let mut v = dec.eigenvector(0).to_vec();
    let mut arg = 0;
    for (i, x) in v.iter().enumerate() {
        if x.abs() > v[arg].abs() {
            arg = i;
        }
    }
    if v[arg] < 0.0 {
        for x in &mut v {
            *x = -*x;
        }
    }
    if g.vertex_count() > 1 {
        if let Some(bad) = v.iter().position(|&x| x <= 0.0) {
            return Err(SpectralError::PerronSign(bad));
        }
    }
    Ok(v)
}

/// Closed-form distance spectrum of the complete bipartite graph with parts
/// of sizes `p` and `q`: the two roots `p + q - 2 ± sqrt(p^2 - pq + q^2)`
/// together with `-2` repeated `p + q - 2` times.
pub fn complete_bipartite_distance_spectrum(p: usize, q: usize) -> Result<Spectrum, SpectralError> {
    if p == 0 || q == 0 {
        return Err(GraphError::NoVertices.into());
    }
    let (pf, qf) = (p as f64, q as f64);
    let root = (pf * pf - pf * qf + qf * qf).sqrt();
    let mut values = Vec::with_capacity(p + q);
    values.push(pf + qf - 2.0 + root);
    values.push(pf + qf - 2.0 - root);
    values.extend(std::iter::repeat(-2.0).take(p + q - 2));
    Ok(Spectrum::from_unsorted(values))
}

/// Distance spectrum of a regular graph of diameter at most 2, derived from
/// its adjacency spectrum: here `D = 2(J - I) - A`, so the spectrum is
/// `2n - r - 2` together with `-2 - lambda` for each non-principal
/// adjacency eigenvalue `lambda`.
pub fn regular_small_diameter_distance_spectrum(g: &Graph) -> Result<Spectrum, SpectralError> {
    if !g.is_regular() {
        return Err(SpectralError::NotRegular);
    }
    let dm = g.distance_matrix()?;
    let diam = dm.diameter();
    if diam > 2 {
        return Err(SpectralError::DiameterExceedsTwo(diam));
    }
    let n = g.vertex_count();
    let r = g.degree(0);
    let adjacency = adjacency_spectrum(g)?;
    let mut values = Vec::with_capacity(n);
    values.push(2.0 * n as f64 - r as f64 - 2.0);
    values.extend(adjacency.values()[1..].iter().map(|lam| -lam - 2.0));
    Ok(Spectrum::from_unsorted(values))
}

/// Inertia-style counts for a distance spectrum, with exact resolution of
/// eigenvalues that are numerically near zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DistanceSignCounts {
    pub positive: usize,
    pub negative: usize,
    pub zero: usize,
    /// True when some eigenvalue lies within tolerance of zero yet is not
    /// an exact zero of the integer matrix, so the floating-point sign
    /// classification could not be certified.
    pub boundary: bool,
}

/// Classifies the signs of distance eigenvalues. Values within tolerance of
/// zero are checked against the exact multiplicity of the eigenvalue 0 of
/// the integer distance matrix; only genuinely ambiguous cases set
/// `boundary`.
pub fn distance_sign_counts(dm: &DistanceMatrix, spectrum: &Spectrum) -> DistanceSignCounts {
    let n = spectrum.len();
    debug_assert_eq!(n, dm.vertex_count());
    let tol = spectrum.tolerance();
    let vals = spectrum.values();
    let near: Vec<usize> = (0..n).filter(|&i| vals[i].abs() <= tol).collect();
    if near.is_empty() {
        return DistanceSignCounts {
            positive: vals.iter().filter(|&&x| x > 0.0).count(),
            negative: vals.iter().filter(|&&x| x < 0.0).count(),
            zero: 0,
            boundary: false,
        };
    }
    let zero = exact::integer_eigenvalue_multiplicity(n, |i, j| i64::from(dm.entry(i, j)), 0);
    // The `zero` smallest-magnitude values are the numerical images of the
    // exact kernel; any other value near zero is a boundary case.
    let mut by_abs: Vec<usize> = (0..n).collect();
    by_abs.sort_by(|&a, &b| vals[a].abs().total_cmp(&vals[b].abs()));
    let zero_set: HashSet<usize> = by_abs.iter().take(zero).copied().collect();
    let boundary = zero > near.len() || near.iter().any(|i| !zero_set.contains(i));
    let positive = (0..n)
        .filter(|i| !zero_set.contains(i) && vals[*i] > 0.0)
        .count();
    DistanceSignCounts {
        positive,
        negative: n - positive - zero,
        zero,
        boundary,
    }
}

/// Outcome of a threshold test on an eigenvalue, with a flag for decisions
/// that could not be certified either numerically or exactly.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ThresholdDecision {
    pub holds: bool,
    pub boundary: bool,
}

/// Decides whether the smallest adjacency eigenvalue is `>= t` for integer
/// `t`. Clear numerical separations are accepted directly; otherwise the
/// exact multiplicity of `t` in the integer adjacency matrix is consulted.
pub fn smallest_adjacency_eigenvalue_at_least(
    g: &Graph,
    adjacency: &Spectrum,
    t: i64,
) -> ThresholdDecision {
    let tol = adjacency.tolerance();
    let lam = adjacency.smallest();
    let tf = t as f64;
    if lam > tf + tol {
        return ThresholdDecision {
            holds: true,
            boundary: false,
        };
    }
    if lam < tf - tol {
        return ThresholdDecision {
            holds: false,
            boundary: false,
        };
    }
    let n = g.vertex_count();
    let mult = exact::integer_eigenvalue_multiplicity(n, |i, j| i64::from(g.has_edge(i, j)), t);
    let vals = adjacency.values();
    let near = vals.iter().filter(|&&x| (x - tf).abs() <= tol).count();
    let below = vals.iter().filter(|&&x| x < tf - tol).count();
    if mult >= 1 && below == 0 && near == mult {
        // The bottom cluster is exactly the eigenvalue t.
        ThresholdDecision {
            holds: true,
            boundary: false,
        }
    } else {
        ThresholdDecision {
            holds: lam >= tf,
            boundary: true,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    fn path(n: usize) -> Graph {
        let edges: Vec<(usize, usize)> = (0..n - 1).map(|i| (i, i + 1)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        let edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    fn complete(n: usize) -> Graph {
        let mut edges = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                edges.push((i, j));
            }
        }
        Graph::from_edges(n, &edges).unwrap()
    }

    fn complete_bipartite(p: usize, q: usize) -> Graph {
        let mut edges = Vec::new();
        for i in 0..p {
            for j in 0..q {
                edges.push((i, p + j));
            }
        }
        Graph::from_edges(p + q, &edges).unwrap()
    }

    fn assert_close(a: f64, b: f64, tol: f64) {
        assert!(
            (a - b).abs() <= tol,
            "{a} and {b} differ by more than {tol}"
        );
    }

    #[test]
    fn path_four_distance_spectrum_in_closed_form() {
        let s = distance_spectrum(&path(4)).unwrap();
        let want = [
            2.0 + 10.0_f64.sqrt(),
            -2.0 + 2.0_f64.sqrt(),
            2.0 - 10.0_f64.sqrt(),
            -2.0 - 2.0_f64.sqrt(),
        ];
        let mut want = want.to_vec();
        want.sort_by(|a, b| b.total_cmp(a));
        for (got, want) in s.values().iter().zip(&want) {
            assert_close(*got, *want, 1e-12);
        }
        assert_close(
            distance_spectral_radius(&path(4)).unwrap(),
            2.0 + 10.0_f64.sqrt(),
            1e-12,
        );
        assert_close(
            distance_energy(&path(4)).unwrap(),
            4.0 + 2.0 * 10.0_f64.sqrt(),
            1e-12,
        );
    }

    #[test]
    fn five_cycle_distance_invariants() {
        let g = cycle(5);
        let s = distance_spectrum(&g).unwrap();
        assert_close(s.largest(), 6.0, 1e-12);
        assert_close(s.abs_sum(), 12.0, 1e-12);
        let clusters = s.multiplicity_clusters();
        assert_eq!(clusters.len(), 3);
        assert_eq!(clusters[0].1, 1);
        assert_eq!(clusters[1].1, 2);
        assert_eq!(clusters[2].1, 2);
        assert_close(clusters[1].0, -(3.0 - 5.0_f64.sqrt()) / 2.0, 1e-9);
        assert_close(clusters[2].0, -(3.0 + 5.0_f64.sqrt()) / 2.0, 1e-9);
    }

    #[test]
    fn complete_graph_energies() {
        // K_n has distance spectrum {n - 1, -1^(n-1)}.
        for n in [2usize, 3, 7, 20] {
            let g = complete(n);
            assert_close(distance_spectral_radius(&g).unwrap(), (n - 1) as f64, 1e-9);
            assert_close(distance_energy(&g).unwrap(), 2.0 * (n - 1) as f64, 1e-9);
            assert_close(graph_energy(&g).unwrap(), 2.0 * (n - 1) as f64, 1e-9);
        }
    }

    #[test]
    fn complete_bipartite_closed_form_matches_numeric() {
        for (p, q) in [(1usize, 1usize), (1, 5), (2, 3), (3, 3), (4, 7)] {
            let formula = complete_bipartite_distance_spectrum(p, q).unwrap();
            let numeric = distance_spectrum(&complete_bipartite(p, q)).unwrap();
            assert_eq!(formula.len(), numeric.len());
            for (a, b) in formula.values().iter().zip(numeric.values()) {
                assert_close(*a, *b, 1e-9 * (p + q) as f64);
            }
        }
        assert!(complete_bipartite_distance_spectrum(0, 3).is_err());
    }

    #[test]
    fn regular_small_diameter_shortcut_matches_numeric() {
        // Petersen graph.
        let petersen = Graph::from_edges(
            10,
            &[
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 4),
                (4, 0),
                (5, 7),
                (7, 9),
                (9, 6),
                (6, 8),
                (8, 5),
                (0, 5),
                (1, 6),
                (2, 7),
                (3, 8),
                (4, 9),
            ],
        )
        .unwrap();
        for g in [cycle(5), complete(4), complete_bipartite(3, 3), petersen] {
            let fast = regular_small_diameter_distance_spectrum(&g).unwrap();
            let slow = distance_spectrum(&g).unwrap();
            for (a, b) in fast.values().iter().zip(slow.values()) {
                assert_close(*a, *b, 1e-8 * g.vertex_count() as f64);
            }
        }
        assert!(matches!(
            regular_small_diameter_distance_spectrum(&path(3)),
            Err(SpectralError::NotRegular)
        ));
        assert!(matches!(
            regular_small_diameter_distance_spectrum(&cycle(6)),
            Err(SpectralError::DiameterExceedsTwo(3))
        ));
    }

    #[test]
    fn sign_counts_resolve_exact_zeros() {
        // C_4 distance spectrum {4, 0, -2, -2}.
        let g = cycle(4);
        let dm = g.distance_matrix().unwrap();
        let s = SymmetricMatrix::from_distance_matrix(&dm)
            .eigenvalues()
            .unwrap();
        let counts = distance_sign_counts(&dm, &s);
        assert_eq!(
            counts,
            DistanceSignCounts {
                positive: 1,
                negative: 2,
                zero: 1,
                boundary: false
            }
        );

        // C_6 distance spectrum {9, 0, 0, -1, -4, -4}.
        let g = cycle(6);
        let dm = g.distance_matrix().unwrap();
        let s = SymmetricMatrix::from_distance_matrix(&dm)
            .eigenvalues()
            .unwrap();
        let counts = distance_sign_counts(&dm, &s);
        assert_eq!(
            counts,
            DistanceSignCounts {
                positive: 1,
                negative: 3,
                zero: 2,
                boundary: false
            }
        );

        // Trees have exactly one positive distance eigenvalue and no zeros.
        let g = path(7);
        let dm = g.distance_matrix().unwrap();
        let s = SymmetricMatrix::from_distance_matrix(&dm)
            .eigenvalues()
            .unwrap();
        let counts = distance_sign_counts(&dm, &s);
        assert_eq!(
            counts,
            DistanceSignCounts {
                positive: 1,
                negative: 6,
                zero: 0,
                boundary: false
            }
        );

        // Single vertex: spectrum {0}.
        let g = Graph::empty(1).unwrap();
        let dm = g.distance_matrix().unwrap();
        let s = SymmetricMatrix::from_distance_matrix(&dm)
            .eigenvalues()
            .unwrap();
        let counts = distance_sign_counts(&dm, &s);
        assert_eq!(
            counts,
            DistanceSignCounts {
                positive: 0,
                negative: 0,
                zero: 1,
                boundary: false
            }
        );
    }

    #[test]
    fn adjacency_threshold_decisions() {
        // C_4 has smallest adjacency eigenvalue exactly -2.
        let g = cycle(4);
        let s = adjacency_spectrum(&g).unwrap();
        assert_eq!(
            smallest_adjacency_eigenvalue_at_least(&g, &s, -2),
            ThresholdDecision {
                holds: true,
                boundary: false
            }
        );
        // P_4 has smallest adjacency eigenvalue -(1 + sqrt 5)/2 > -2.
        let g = path(4);
        let s = adjacency_spectrum(&g).unwrap();
        assert_eq!(
            smallest_adjacency_eigenvalue_at_least(&g, &s, -2),
            ThresholdDecision {
                holds: true,
                boundary: false
            }
        );
        // The star on 6 vertices has smallest eigenvalue -sqrt(5) < -2.
        let g = complete_bipartite(1, 5);
        let s = adjacency_spectrum(&g).unwrap();
        assert_eq!(
            smallest_adjacency_eigenvalue_at_least(&g, &s, -2),
            ThresholdDecision {
                holds: false,
                boundary: false
            }
        );
    }

    #[test]
    fn perron_vector_of_paths() {
        // P_3: ratio of middle to end entry is sqrt(3) - 1.
        let v = distance_perron_vector(&path(3)).unwrap();
        assert_close(v[1] / v[0], 3.0_f64.sqrt() - 1.0, 1e-10);
        assert_close(v[0], v[2], 1e-10);
        let norm: f64 = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        assert_close(norm, 1.0, 1e-12);
        // Single vertex.
        let v = distance_perron_vector(&Graph::empty(1).unwrap()).unwrap();
        assert_eq!(v, vec![1.0]);
    }

    #[test]
    fn symmetric_matrix_validation() {
        assert!(matches!(
            SymmetricMatrix::from_rows(&[]),
            Err(SpectralError::Empty)
        ));
        assert!(matches!(
            SymmetricMatrix::from_rows(&[vec![0.0, 1.0]]),
            Err(SpectralError::RowLength {
                row: 0,
                len: 2,
                expected: 1
            })
        ));
        assert!(matches!(
            SymmetricMatrix::from_rows(&[vec![0.0, 1.0], vec![2.0, 0.0]]),
            Err(SpectralError::NotSymmetric { .. })
        ));
        assert!(matches!(
            SymmetricMatrix::from_rows(&[vec![f64::NAN]]),
            Err(SpectralError::NotFinite { i: 0, j: 0 })
        ));
        let m = SymmetricMatrix::from_rows(&[vec![3.0, -1.0], vec![-1.0, 3.0]]).unwrap();
        assert_eq!(m.entry(0, 1), -1.0);
        assert_eq!(m.max_abs_entry(), 3.0);
        assert_close(singular_value_sum(&m).unwrap(), 6.0, 1e-12);
    }

    #[test]
    fn trace_identities_hold() {
        // Sum of distance eigenvalues is 0; sum of squares is the sum of
        // squared entries of the distance matrix.
        for g in [path(6), cycle(7), complete_bipartite(2, 4)] {
            let dm = g.distance_matrix().unwrap();
            let s = SymmetricMatrix::from_distance_matrix(&dm)
                .eigenvalues()
                .unwrap();
            let sum: f64 = s.values().iter().sum();
            assert_close(sum, 0.0, 1e-9 * g.vertex_count() as f64);
            let sq: f64 = s.values().iter().map(|v| v * v).sum();
            let n = g.vertex_count();
            let mut want = 0.0;
            for i in 0..n {
                for j in 0..n {
                    want += f64::from(dm.entry(i, j)).powi(2);
                }
            }
            assert_close(sq, want, 1e-8 * want.max(1.0));
        }
    }
}
