//! Cross-checks the library eigensolver against an independent
//! inertia-bisection oracle, plus structural spectral identities.

mod common;

use common::{
    max_abs_diff, oracle_adjacency_eigenvalues, oracle_distance_eigenvalues, oracle_eigenvalues,
};
use dspectra::{
    adjacency_spectrum, all_connected_graphs, distance_energy, distance_perron_vector,
    distance_spectrum, families, singular_value_sum, Graph, SymmetricMatrix,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[allow(clippy::needless_range_loop)] // symmetric fill needs both indices
fn random_symmetric(rng: &mut ChaCha8Rng, n: usize) -> Vec<Vec<f64>> {
    let mut rows = vec![vec![0.0; n]; n];
    for i in 0..n {
        for j in 0..=i {
            let v = rng.gen_range(-5.0..5.0);
            rows[i][j] = v;
            rows[j][i] = v;
        }
    }
    rows
}

#[test]
fn solver_matches_inertia_oracle_on_all_small_graphs() {
    for n in 2..=6 {
        for g in all_connected_graphs(n).unwrap() {
            let spectrum = distance_spectrum(&g).unwrap();
            let oracle = oracle_distance_eigenvalues(&g);
            let scale = oracle[0].abs().max(1.0);
            assert!(
                max_abs_diff(spectrum.values(), &oracle) <= 1e-8 * scale,
                "distance spectrum disagrees with oracle on n={n}, edges={:?}",
                g.edges()
            );

            let adjacency = adjacency_spectrum(&g).unwrap();
            let oracle = oracle_adjacency_eigenvalues(&g);
            assert!(
                max_abs_diff(adjacency.values(), &oracle) <= 1e-8 * (n as f64),
                "adjacency spectrum disagrees with oracle on n={n}, edges={:?}",
                g.edges()
            );
        }
    }
}

#[test]
fn solver_matches_oracle_on_random_dense_matrices() {
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    for n in [2, 3, 5, 8, 11, 14] {
        for _ in 0..6 {
            let rows = random_symmetric(&mut rng, n);
            let m = SymmetricMatrix::from_rows(&rows).unwrap();
            let spectrum = m.eigenvalues().unwrap();
            let flat: Vec<f64> = rows.iter().flatten().copied().collect();
            let oracle = oracle_eigenvalues(n, &flat);
            assert!(
                max_abs_diff(spectrum.values(), &oracle) <= 1e-8 * n as f64 * 5.0,
                "solver/oracle disagreement at n={n}"
            );
        }
    }
}

#[test]
fn eigenvector_residuals_are_tiny() {
    let mut rng = ChaCha8Rng::seed_from_u64(77);
    for n in [3, 6, 9] {
        let rows = random_symmetric(&mut rng, n);
        let m = SymmetricMatrix::from_rows(&rows).unwrap();
        let decomposition = m.eigen_decomposition().unwrap();
        for (k, &lambda) in decomposition.spectrum().values().iter().enumerate() {
            let v = decomposition.eigenvector(k);
            for i in 0..n {
                let mv: f64 = (0..n).map(|j| rows[i][j] * v[j]).sum();
                assert!(
                    (mv - lambda * v[i]).abs() <= 1e-9 * n as f64 * 5.0,
                    "residual too large at n={n}, eigenpair {k}"
                );
            }
        }
    }
}

#[test]
fn singular_value_sum_is_subadditive() {
    // The trace norm obeys the triangle inequality; this is the matrix
    // fact behind the complement-sum energy bound.
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..20 {
        let n = rng.gen_range(2..=8);
        let b = random_symmetric(&mut rng, n);
        let c = random_symmetric(&mut rng, n);
        let sum: Vec<Vec<f64>> = (0..n)
            .map(|i| (0..n).map(|j| b[i][j] + c[i][j]).collect())
            .collect();
        let svs = |rows: &Vec<Vec<f64>>| {
            singular_value_sum(&SymmetricMatrix::from_rows(rows).unwrap()).unwrap()
        };
        assert!(svs(&sum) <= svs(&b) + svs(&c) + 1e-9);
    }
}

#[test]
fn distance_energy_is_the_distance_trace_norm() {
    for n in 2..=6 {
        for g in all_connected_graphs(n).unwrap() {
            let dm = g.distance_matrix().unwrap();
            let trace_norm =
                singular_value_sum(&SymmetricMatrix::from_distance_matrix(&dm)).unwrap();
            assert!((distance_energy(&g).unwrap() - trace_norm).abs() <= 1e-9 * n as f64);
        }
    }
}

#[test]
fn perron_vector_solves_the_eigenproblem_on_random_trees() {
    for seed in 0..10 {
        let t = families::random_tree(6 + (seed as usize % 5), seed).unwrap();
        let n = t.vertex_count();
        let dm = t.distance_matrix().unwrap();
        let rho = distance_spectrum(&t).unwrap().largest();
        let x = distance_perron_vector(&t).unwrap();
        assert!(
            x.iter().all(|&v| v > 0.0),
            "Perron entries must be positive"
        );
        for i in 0..n {
            let dx: f64 = (0..n).map(|j| f64::from(dm.entry(i, j)) * x[j]).sum();
            assert!(
                (dx - rho * x[i]).abs() <= 1e-8 * rho,
                "Perron residual too large on seed {seed}"
            );
        }
    }
}

#[test]
fn six_cycle_distance_spectrum_is_exact() {
    let spectrum = distance_spectrum(&families::cycle(6).unwrap()).unwrap();
    let expected = [9.0, 0.0, 0.0, -1.0, -4.0, -4.0];
    assert!(max_abs_diff(spectrum.values(), &expected) <= 1e-9);
}

#[test]
fn path_four_distance_spectrum_closed_form() {
    let spectrum = distance_spectrum(&families::path(4).unwrap()).unwrap();
    let s2 = 2.0_f64.sqrt();
    let s10 = 10.0_f64.sqrt();
    let expected = [2.0 + s10, -2.0 + s2, 2.0 - s10, -2.0 - s2];
    assert!(max_abs_diff(spectrum.values(), &expected) <= 1e-9);
}

#[test]
fn oracle_agrees_with_itself_on_known_spectra() {
    // Guards the oracle: the complete graph's distance matrix is J - I
    // with spectrum {n-1, (-1)^(n-1)}.
    for n in 2..=7 {
        let g: Graph = families::complete(n).unwrap();
        let eigen = oracle_distance_eigenvalues(&g);
        assert!((eigen[0] - (n as f64 - 1.0)).abs() <= 1e-10);
        for &v in &eigen[1..] {
            assert!((v + 1.0).abs() <= 1e-10);
        }
    }
}
