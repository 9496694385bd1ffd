//! Property tests for the graph family generators.

use dspectra::{adjacency_spectrum, families, is_isomorphic, FamilySpec, Graph};
use proptest::prelude::*;

fn small_base(index: usize) -> Graph {
    match index % 6 {
        0 => families::path(3).unwrap(),
        1 => families::path(4).unwrap(),
        2 => families::cycle(4).unwrap(),
        3 => families::cycle(5).unwrap(),
        4 => families::complete(4).unwrap(),
        _ => families::star(5).unwrap(),
    }
}

proptest! {
    #[test]
    fn random_trees_are_trees(n in 2usize..=40, seed in any::<u64>()) {
        let t = families::random_tree(n, seed).unwrap();
        prop_assert_eq!(t.vertex_count(), n);
        prop_assert_eq!(t.edge_count(), n - 1);
        prop_assert!(t.is_connected());
    }

    #[test]
    fn random_generators_are_deterministic(
        n in 2usize..=12,
        p in 0.3f64..=1.0,
        seed in any::<u64>(),
    ) {
        let a = families::random_connected(n, p, seed).unwrap();
        let b = families::random_connected(n, p, seed).unwrap();
        prop_assert_eq!(a.edges(), b.edges());
        prop_assert!(a.is_connected());

        let s = families::random_tree(n, seed).unwrap();
        let t = families::random_tree(n, seed).unwrap();
        prop_assert_eq!(s.edges(), t.edges());
    }

    #[test]
    fn generalized_line_graphs_stay_above_minus_two(
        base_index in 0usize..6,
        counts in proptest::collection::vec(0usize..=2, 6),
        ) {
        let base = small_base(base_index);
        let counts = &counts[..base.vertex_count().min(counts.len())];
        let mut padded = counts.to_vec();
        padded.resize(base.vertex_count(), 0);
        let glg = families::generalized_line_graph(&base, &padded).unwrap();
        let spectrum = adjacency_spectrum(&glg).unwrap();
        prop_assert!(
            spectrum.smallest() >= -2.0 - 1e-8,
            "least adjacency eigenvalue {} below -2",
            spectrum.smallest()
        );
    }

    #[test]
    fn parsed_specs_build_valid_graphs(n in 2usize..=9) {
        for text in [
            format!("complete:{n}"),
            format!("path:{n}"),
            format!("star:{n}"),
            format!("random_tree:{n},7"),
        ] {
            let spec: FamilySpec = text.parse().unwrap();
            let g = spec.build().unwrap();
            prop_assert_eq!(g.vertex_count(), n);
            prop_assert!(g.is_connected());
        }
    }
}

#[test]
fn dense_random_graph_is_complete() {
    for seed in 0..5 {
        let g = families::random_connected(10, 1.0, seed).unwrap();
        assert!(g.is_complete());
    }
}

#[test]
fn cocktail_party_is_regular_of_known_degree() {
    for a in 2..=6 {
        let g = families::cocktail_party(a).unwrap();
        assert_eq!(g.vertex_count(), 2 * a);
        assert!(g.is_regular());
        assert!(g.degrees().iter().all(|&d| d == 2 * a - 2));
        assert_eq!(g.diameter().unwrap(), 2);
    }
}

#[test]
fn line_graph_of_regular_graph_is_regular() {
    // An r-regular base yields a (2r-2)-regular line graph.
    for (base, r) in [
        (families::cycle(5).unwrap(), 2),
        (families::cycle(8).unwrap(), 2),
        (families::complete(4).unwrap(), 3),
        (families::complete(5).unwrap(), 4),
        (families::complete_bipartite(3, 3).unwrap(), 3),
    ] {
        let line = families::line_graph(&base).unwrap();
        assert_eq!(line.vertex_count(), base.edge_count());
        assert!(line.is_regular());
        assert!(line.degrees().iter().all(|&d| d == 2 * r - 2));
    }
}

#[test]
fn line_graph_known_isomorphisms() {
    let line_of_k4 = families::line_graph(&families::complete(4).unwrap()).unwrap();
    assert!(is_isomorphic(&line_of_k4, &families::cocktail_party(3).unwrap()).unwrap());

    let line_of_c6 = families::line_graph(&families::cycle(6).unwrap()).unwrap();
    assert!(is_isomorphic(&line_of_c6, &families::cycle(6).unwrap()).unwrap());
}

#[test]
fn broom_shape() {
    for (n, delta) in [(6, 3), (7, 4), (8, 2), (9, 8)] {
        let b = families::broom(n, delta).unwrap();
        assert_eq!(b.vertex_count(), n);
        assert_eq!(b.edge_count(), n - 1);
        assert!(b.is_connected());
        assert_eq!(b.degrees().into_iter().max(), Some(delta));
    }
    // Degenerate corners collapse to the path and the star.
    assert!(is_isomorphic(&families::broom(7, 2).unwrap(), &families::path(7).unwrap()).unwrap());
    assert!(is_isomorphic(&families::broom(7, 6).unwrap(), &families::star(7).unwrap()).unwrap());
}
