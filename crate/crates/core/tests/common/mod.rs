//! Shared test oracles, implemented independently of the library's own
//! eigensolver so the two can check each other.
//!
//! The oracle finds eigenvalues of a symmetric matrix by bisection on
//! inertia counts: by Sylvester's law of inertia, the number of negative
//! pivots in an (unpivoted) LDL^T elimination of `A - x I` equals the
//! number of eigenvalues below `x`. No similarity transforms, no QL
//! iteration — a completely different failure surface from the library.

/// Number of eigenvalues of the symmetric matrix `a` (row-major, `n x n`)
/// that are strictly below `x`. Breakdown of the unpivoted elimination is
/// handled by nudging the shift, which cannot move the count across the
/// target eigenvalue by more than the nudge.
fn count_below(n: usize, a: &[f64], x: f64) -> usize {
    let mut shift = x;
    'retry: loop {
        let mut m = a.to_vec();
        for i in 0..n {
            m[i * n + i] -= shift;
        }
        let mut negatives = 0;
        for k in 0..n {
            let pivot = m[k * n + k];
            if pivot.abs() < 1e-280 {
                // Unlucky exact breakdown; nudge the shift and retry.
                shift += (x.abs() + 1.0) * 1e-13;
                continue 'retry;
            }
            if pivot < 0.0 {
                negatives += 1;
            }
            for i in (k + 1)..n {
                let factor = m[i * n + k] / pivot;
                for j in (k + 1)..n {
                    m[i * n + j] -= factor * m[k * n + j];
                }
            }
        }
        return negatives;
    }
}

/// All eigenvalues of a symmetric matrix, sorted descending, accurate to
/// roughly `1e-11 * scale`.
pub fn oracle_eigenvalues(n: usize, a: &[f64]) -> Vec<f64> {
    assert_eq!(a.len(), n * n);
    let scale = a.iter().fold(1.0_f64, |s, &v| s.max(v.abs()));
    let radius = scale * n as f64 + 1.0;

    let mut ascending = Vec::with_capacity(n);
    for k in 1..=n {
        // Invariant: count_below(lo) < k <= count_below(hi).
        let (mut lo, mut hi) = (-radius, radius);
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if count_below(n, a, mid) < k {
                lo = mid;
            } else {
                hi = mid;
            }
            if hi - lo < 1e-13 * radius {
                break;
            }
        }
        ascending.push(0.5 * (lo + hi));
    }
    ascending.reverse();
    ascending
}

/// Convenience: oracle eigenvalues of a graph's distance matrix.
pub fn oracle_distance_eigenvalues(g: &dspectra::Graph) -> Vec<f64> {
    let dm = g.distance_matrix().expect("connected graph");
    let n = g.vertex_count();
    let mut a = vec![0.0; n * n];
    for i in 0..n {
        for j in 0..n {
            a[i * n + j] = f64::from(dm.entry(i, j));
        }
    }
    oracle_eigenvalues(n, &a)
}

/// Convenience: oracle eigenvalues of a graph's adjacency matrix.
pub fn oracle_adjacency_eigenvalues(g: &dspectra::Graph) -> Vec<f64> {
    let n = g.vertex_count();
    let mut a = vec![0.0; n * n];
    for (u, v) in g.edges() {
        a[u * n + v] = 1.0;
        a[v * n + u] = 1.0;
    }
    oracle_eigenvalues(n, &a)
}

#[allow(dead_code)]
pub fn max_abs_diff(a: &[f64], b: &[f64]) -> f64 {
    assert_eq!(a.len(), b.len());
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).abs())
        .fold(0.0, f64::max)
}
