//! Exact integer linear algebra used to certify spectral sign counts.
//!
//! Distance and adjacency matrices have integer entries, so the multiplicity
//! of an integer eigenvalue `t` equals `n - rank(M - tI)`, and the rank can
//! be computed exactly over the integers. This lets sign classification
//! resolve eigenvalues that floating point puts within tolerance of zero.

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Exact rank of an integer matrix, via Bareiss fraction-free elimination.
///
/// All intermediate entries are minors of the input matrix, so every
/// division below is exact; arithmetic is over `BigInt` and cannot overflow.
pub(crate) fn integer_rank(n: usize, entry: impl Fn(usize, usize) -> i64) -> usize {
    let mut m: Vec<Vec<BigInt>> = (0..n)
        .map(|i| (0..n).map(|j| BigInt::from(entry(i, j))).collect())
        .collect();
    let mut rank = 0;
    let mut prev = BigInt::one();
    for col in 0..n {
        if rank == n {
            break;
        }
        let Some(pivot_row) = (rank..n).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot_row);
        for i in (rank + 1)..n {
            for j in (col + 1)..n {
                let num = &m[i][j] * &m[rank][col] - &m[i][col] * &m[rank][j];
                debug_assert!(
                    (&num % &prev).is_zero(),
                    "fraction-free step must divide exactly"
                );
                m[i][j] = num / &prev;
            }
            m[i][col] = BigInt::zero();
        }
        prev = m[rank][col].clone();
        rank += 1;
    }
    rank
}

/// Exact multiplicity of the integer eigenvalue `t` in the symmetric integer
/// matrix given entrywise by `entry`.
pub(crate) fn integer_eigenvalue_multiplicity(
    n: usize,
    entry: impl Fn(usize, usize) -> i64,
    t: i64,
) -> usize {
    n - integer_rank(n, |i, j| entry(i, j) - if i == j { t } else { 0 })
}
