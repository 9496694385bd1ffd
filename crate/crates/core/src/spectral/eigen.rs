//! Dense symmetric eigensolver: Householder reduction to tridiagonal form
//! followed by implicitly shifted QL iteration, in the classic EISPACK
//! `tred2`/`tql2` arrangement. Fully deterministic: no randomization, fixed
//! sweep order, and an explicit iteration budget per eigenvalue.

use super::SpectralError;

const MAX_QL_ITERATIONS: usize = 64;

pub(crate) struct EigenOutput {
    /// Eigenvalues sorted in non-increasing order.
    pub values: Vec<f64>,
    /// Row-major matrix whose column `j` is a unit eigenvector for
    /// `values[j]`; present only when requested.
    pub vectors: Option<Vec<f64>>,
}

/// Computes the spectrum (and optionally an orthonormal eigenbasis) of a
/// symmetric matrix given in row-major order.
pub(crate) fn decompose(
    n: usize,
    matrix: &[f64],
    want_vectors: bool,
) -> Result<EigenOutput, SpectralError> {
    debug_assert_eq!(matrix.len(), n * n);
    let mut v = matrix.to_vec();
    let mut d = vec![0.0; n];
    let mut e = vec![0.0; n];
    tridiagonalize(n, &mut v, &mut d, &mut e, want_vectors);
    ql_implicit_shift(n, &mut d, &mut e, want_vectors.then_some(&mut v))?;

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| d[b].total_cmp(&d[a]));
    let values: Vec<f64> = order.iter().map(|&i| d[i]).collect();
    let vectors = want_vectors.then(|| {
        let mut out = vec![0.0; n * n];
        for (col, &src) in order.iter().enumerate() {
            for row in 0..n {
                out[row * n + col] = v[row * n + src];
            }
        }
        out
    });
    Ok(EigenOutput { values, vectors })
}

/// Householder reduction of `v` to tridiagonal form (diagonal in `d`,
/// subdiagonal in `e[1..]`). With `accumulate` the orthogonal basis ends up
/// in `v`; otherwise `v` is working storage only.
fn tridiagonalize(n: usize, v: &mut [f64], d: &mut [f64], e: &mut [f64], accumulate: bool) {
    let at = |i: usize, j: usize| i * n + j;
    d.copy_from_slice(&v[at(n - 1, 0)..at(n - 1, 0) + n]);

    for i in (1..n).rev() {
        let l = i - 1;
        let mut h = 0.0;
        let mut scale = 0.0;
        for item in d.iter().take(i) {
            scale += item.abs();
        }
        if scale == 0.0 {
            e[i] = d[l];
            for j in 0..i {
                d[j] = v[at(l, j)];
                v[at(i, j)] = 0.0;
                v[at(j, i)] = 0.0;
            }
        } else {
            for item in d.iter_mut().take(i) {
                *item /= scale;
                h += *item * *item;
            }
            let f = d[l];
            let mut g = h.sqrt();
            if f > 0.0 {
                g = -g;
            }
            e[i] = scale * g;
            h -= f * g;
            d[l] = f - g;
            for item in e.iter_mut().take(i) {
                *item = 0.0;
            }
            // Apply the similarity transformation to the remaining block.
            for j in 0..i {
                let f = d[j];
                v[at(j, i)] = f;
                let mut g = e[j] + v[at(j, j)] * f;
                for k in (j + 1)..i {
                    g += v[at(k, j)] * d[k];
                    e[k] += v[at(k, j)] * f;
                }
                e[j] = g;
            }
            let mut f = 0.0;
            for j in 0..i {
                e[j] /= h;
                f += e[j] * d[j];
            }
            let hh = f / (h + h);
            for j in 0..i {
                e[j] -= hh * d[j];
            }
            for j in 0..i {
                let f = d[j];
                let g = e[j];
                for k in j..i {
                    v[at(k, j)] -= f * e[k] + g * d[k];
                }
                d[j] = v[at(l, j)];
                v[at(i, j)] = 0.0;
            }
        }
        d[i] = h;
    }

    if accumulate {
        for i in 0..(n - 1) {
            v[at(n - 1, i)] = v[at(i, i)];
            v[at(i, i)] = 1.0;
            let h = d[i + 1];
            if h != 0.0 {
                for k in 0..=i {
                    d[k] = v[at(k, i + 1)] / h;
                }
                for j in 0..=i {
                    let mut g = 0.0;
                    for k in 0..=i {
                        g += v[at(k, i + 1)] * v[at(k, j)];
                    }
                    for k in 0..=i {
                        v[at(k, j)] -= g * d[k];
                    }
                }
            }
            for k in 0..=i {
                v[at(k, i + 1)] = 0.0;
            }
        }
        for j in 0..n {
            d[j] = v[at(n - 1, j)];
            v[at(n - 1, j)] = 0.0;
        }
        v[at(n - 1, n - 1)] = 1.0;
    } else {
        for j in 0..n {
            d[j] = v[at(j, j)];
        }
    }
    e[0] = 0.0;
}

/// Implicitly shifted QL iteration on a symmetric tridiagonal matrix.
/// Eigenvalues land in `d`; if `v` is supplied, its columns are rotated so
/// they end up as eigenvectors of the original matrix.
fn ql_implicit_shift(
    n: usize,
    d: &mut [f64],
    e: &mut [f64],
    mut v: Option<&mut Vec<f64>>,
) -> Result<(), SpectralError> {
    let eps = 2.0_f64.powi(-52);
    for i in 1..n {
        e[i - 1] = e[i];
    }
    e[n - 1] = 0.0;

    let mut f = 0.0;
    let mut tst1: f64 = 0.0;
    for l in 0..n {
        tst1 = tst1.max(d[l].abs() + e[l].abs());
        let mut m = l;
        while m < n {
            if e[m].abs() <= eps * tst1 {
                break;
            }
            m += 1;
        }
        if m > l {
            let mut iterations = 0;
            loop {
                iterations += 1;
                if iterations > MAX_QL_ITERATIONS {
                    return Err(SpectralError::Convergence {
                        index: l,
                        iterations,
                        n,
                    });
                }
                // Form the implicit shift.
                let g = d[l];
                let mut p = (d[l + 1] - g) / (2.0 * e[l]);
                let mut r = p.hypot(1.0);
                if p < 0.0 {
                    r = -r;
                }
                d[l] = e[l] / (p + r);
                d[l + 1] = e[l] * (p + r);
                let dl1 = d[l + 1];
                let mut h = g - d[l];
                for item in d.iter_mut().skip(l + 2) {
                    *item -= h;
                }
                f += h;
                // One QL sweep.
                p = d[m];
                let mut c = 1.0;
                let mut c2 = c;
                let mut c3 = c;
                let el1 = e[l + 1];
                let mut s = 0.0;
                let mut s2 = 0.0;
                for i in (l..m).rev() {
                    c3 = c2;
                    c2 = c;
                    s2 = s;
                    let g = c * e[i];
                    h = c * p;
                    r = p.hypot(e[i]);
                    e[i + 1] = s * r;
                    s = e[i] / r;
                    c = p / r;
                    p = c * d[i] - s * g;
                    d[i + 1] = h + s * (c * g + s * d[i]);
                    if let Some(v) = v.as_deref_mut() {
                        for k in 0..n {
                            let h = v[k * n + i + 1];
                            v[k * n + i + 1] = s * v[k * n + i] + c * h;
                            v[k * n + i] = c * v[k * n + i] - s * h;
                        }
                    }
                }
                p = -s * s2 * c3 * el1 * e[l] / dl1;
                e[l] = s * p;
                d[l] = c * p;
                if e[l].abs() <= eps * tst1 {
                    break;
                }
            }
        }
        d[l] += f;
        e[l] = 0.0;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check_decomposition(n: usize, m: &[f64]) {
        let out = decompose(n, m, true).unwrap();
        let vals = &out.values;
        let vecs = out.vectors.as_ref().unwrap();
        let scale = m.iter().fold(0.0_f64, |acc, x| acc.max(x.abs())).max(1.0);
        // Residual check: M x = lambda x for every eigenpair.
        for j in 0..n {
            for i in 0..n {
                let mut mx = 0.0;
                for k in 0..n {
                    mx += m[i * n + k] * vecs[k * n + j];
                }
                assert!(
                    (mx - vals[j] * vecs[i * n + j]).abs() <= 1e-10 * n as f64 * scale,
                    "residual too large for eigenpair {j}"
                );
            }
        }
        // Orthonormality of the eigenbasis.
        for a in 0..n {
            for b in 0..n {
                let dot: f64 = (0..n).map(|k| vecs[k * n + a] * vecs[k * n + b]).sum();
                let want = if a == b { 1.0 } else { 0.0 };
                assert!((dot - want).abs() <= 1e-10 * n as f64);
            }
        }
        // Sorted non-increasing.
        assert!(vals.windows(2).all(|w| w[0] >= w[1]));
        // Values-only path must agree with the full decomposition.
        let only = decompose(n, m, false).unwrap();
        for (a, b) in vals.iter().zip(&only.values) {
            assert!((a - b).abs() <= 1e-12 * scale * n as f64);
        }
    }

    #[test]
    fn two_by_two_closed_form() {
        let m = [1.0, 2.0, 2.0, 4.0];
        let out = decompose(2, &m, false).unwrap();
        assert!((out.values[0] - 5.0).abs() < 1e-12);
        assert!(out.values[1].abs() < 1e-12);
    }

    #[test]
    fn identity_and_zero_matrices() {
        let id = [1.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 1.0];
        let out = decompose(3, &id, true).unwrap();
        assert_eq!(out.values, vec![1.0, 1.0, 1.0]);
        let zero = [0.0; 9];
        let out = decompose(3, &zero, false).unwrap();
        assert_eq!(out.values, vec![0.0, 0.0, 0.0]);
    }

    #[test]
    fn single_entry_matrix() {
        let out = decompose(1, &[-7.5], true).unwrap();
        assert_eq!(out.values, vec![-7.5]);
        assert_eq!(out.vectors.unwrap(), vec![1.0]);
    }

    #[test]
    fn random_symmetric_matrices_decompose() {
        // Small deterministic LCG so the test needs no external RNG.
        let mut state = 0x2545F4914F6CDD1D_u64;
        let mut next = move || {
            state = state
                .wrapping_mul(6364136223846793005)
                .wrapping_add(1442695040888963407);
            ((state >> 33) as f64 / (1u64 << 31) as f64) - 1.0
        };
        for n in [2usize, 3, 5, 8, 13] {
            let mut m = vec![0.0; n * n];
            for i in 0..n {
                for j in 0..=i {
                    let x = 10.0 * next();
                    m[i * n + j] = x;
                    m[j * n + i] = x;
                }
            }
            check_decomposition(n, &m);
        }
    }

    #[test]
    fn clustered_eigenvalues_converge() {
        // diag(1, 1, 1 + 1e-12, 4) embedded with small couplings.
        let n = 4;
        let mut m = vec![0.0; 16];
        let diag = [1.0, 1.0, 1.0 + 1e-12, 4.0];
        for i in 0..n {
            m[i * n + i] = diag[i];
        }
        m[1] = 1e-9;
        m[n] = 1e-9;
        check_decomposition(n, &m);
    }
}
