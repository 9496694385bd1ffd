//! Exhaustive enumeration of small graphs up to isomorphism, plus an exact
//! isomorphism test.
//!
//! The canonical form of a graph is the lexicographically smallest
//! upper-triangle bit string (read column by column, as in the graph6
//! encoding) over all vertex orderings with non-decreasing degrees. The
//! search is a depth-first scan over such orderings with prefix pruning, so
//! only orderings that can still beat the current best are explored.

use crate::graph::Graph;
use std::collections::BTreeSet;
use thiserror::Error;

/// Enumeration and isomorphism work on at most this many vertices.
pub const MAX_CANONICAL_VERTICES: usize = 16;
/// Exhaustive graph enumeration is capped here by running time.
pub const MAX_ENUMERATION_VERTICES: usize = 8;
/// Exhaustive tree enumeration is cheaper and reaches a little further.
pub const MAX_TREE_VERTICES: usize = 12;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EnumerateError {
    #[error("{what} supports 1 through {max} vertices, got {n}")]
    OutOfRange {
        what: &'static str,
        n: usize,
        max: usize,
    },
}

/// Canonical label of a graph on at most 16 vertices: the vertex count and
/// the minimal upper-triangle bit string, first bit most significant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub(crate) struct CanonKey {
    n: u8,
    bits: u128,
}

struct CanonSearch {
    n: usize,
    adj: Vec<u16>,
    /// Vertices grouped so that positions must take vertices from fixed
    /// degree classes, in non-decreasing degree order.
    class_of_position: Vec<usize>,
    classes: Vec<Vec<usize>>,
    total_bits: u32,
    perm: Vec<usize>,
    used: u16,
    best: u128,
}

impl CanonSearch {
    fn run(g: &Graph) -> CanonKey {
        let n = g.vertex_count();
        let mut adj = vec![0u16; n];
        for (u, v) in g.edges() {
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        let degrees = g.degrees();
        let mut by_degree: Vec<usize> = (0..n).collect();
        by_degree.sort_by_key(|&v| degrees[v]);
        let mut classes: Vec<Vec<usize>> = Vec::new();
        let mut class_of_position = Vec::with_capacity(n);
        for &v in &by_degree {
            match classes.last_mut() {
                Some(class) if degrees[class[0]] == degrees[v] => class.push(v),
                _ => classes.push(vec![v]),
            }
            class_of_position.push(classes.len() - 1);
        }
        let mut search = CanonSearch {
            n,
            adj,
            class_of_position,
            classes,
            total_bits: (n * (n - 1) / 2) as u32,
            perm: vec![0; n],
            used: 0,
            best: u128::MAX,
        };
        search.descend(0, 0, 0);
        CanonKey {
            n: n as u8,
            bits: search.best,
        }
    }

    fn descend(&mut self, k: usize, acc: u128, bits: u32) {
        if k == self.n {
            if acc < self.best {
                self.best = acc;
            }
            return;
        }
        let class = self.class_of_position[k];
        for idx in 0..self.classes[class].len() {
            let v = self.classes[class][idx];
            if self.used & (1 << v) != 0 {
                continue;
            }
            // Append column k: adjacency of v to the already placed vertices.
            let mut acc2 = acc;
            for i in 0..k {
                acc2 = (acc2 << 1) | u128::from(self.adj[v] >> self.perm[i] & 1);
            }
            let bits2 = bits + k as u32;
            if acc2 > self.best >> (self.total_bits - bits2) {
                continue;
            }
            self.perm[k] = v;
            self.used |= 1 << v;
            self.descend(k + 1, acc2, bits2);
            self.used &= !(1 << v);
        }
    }
}

pub(crate) fn canonical_key(g: &Graph) -> Result<CanonKey, EnumerateError> {
    let n = g.vertex_count();
    if n > MAX_CANONICAL_VERTICES {
        return Err(EnumerateError::OutOfRange {
            what: "canonical labelling",
            n,
            max: MAX_CANONICAL_VERTICES,
        });
    }
    Ok(CanonSearch::run(g))
}

fn graph_from_key(key: CanonKey) -> Graph {
    let n = key.n as usize;
    let total = (n * (n - 1) / 2) as u32;
    let mut edges = Vec::new();
    let mut t = 0;
    for j in 1..n {
        for i in 0..j {
            if (key.bits >> (total - 1 - t)) & 1 == 1 {
                edges.push((i, j));
            }
            t += 1;
        }
    }
    Graph::from_edges(n, &edges).expect("canonical keys describe valid graphs")
}

/// The canonical representative of the isomorphism class of `g`: a
/// relabelled copy on which equal-as-labelled means isomorphic.
pub fn canonical_form(g: &Graph) -> Result<Graph, EnumerateError> {
    Ok(graph_from_key(canonical_key(g)?))
}

/// Exact isomorphism test for graphs on at most 16 vertices.
pub fn is_isomorphic(a: &Graph, b: &Graph) -> Result<bool, EnumerateError> {
    if a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count() {
        return Ok(false);
    }
    let mut da = a.degrees();
    let mut db = b.degrees();
    da.sort_unstable();
    db.sort_unstable();
    if da != db {
        return Ok(false);
    }
    Ok(canonical_key(a)? == canonical_key(b)?)
}

/// All graphs on `n` vertices up to isomorphism (connected or not), as
/// canonical representatives in a deterministic order.
pub fn all_graphs(n: usize) -> Result<Vec<Graph>, EnumerateError> {
    enumerate(
        n,
        "graph enumeration",
        MAX_ENUMERATION_VERTICES,
        Extension::AllSubsets,
    )
}

/// All connected graphs on `n` vertices up to isomorphism.
pub fn all_connected_graphs(n: usize) -> Result<Vec<Graph>, EnumerateError> {
    enumerate(
        n,
        "graph enumeration",
        MAX_ENUMERATION_VERTICES,
        Extension::NonEmptySubsets,
    )
}

/// All trees on `n` vertices up to isomorphism.
pub fn all_trees(n: usize) -> Result<Vec<Graph>, EnumerateError> {
    enumerate(
        n,
        "tree enumeration",
        MAX_TREE_VERTICES,
        Extension::SingleLeaf,
    )
}

enum Extension {
    /// New vertex with any neighborhood: generates all graphs from all
    /// graphs one vertex smaller.
    AllSubsets,
    /// New vertex with a nonempty neighborhood: every connected graph has a
    /// vertex whose removal keeps it connected (any non-cut vertex of a
    /// spanning tree), so this generates all connected graphs from the
    /// connected ones one vertex smaller.
    NonEmptySubsets,
    /// New vertex attached to exactly one old vertex: every tree arises
    /// from a tree one vertex smaller by adding a leaf.
    SingleLeaf,
}

fn enumerate(
    n: usize,
    what: &'static str,
    max: usize,
    extension: Extension,
) -> Result<Vec<Graph>, EnumerateError> {
    if n == 0 || n > max {
        return Err(EnumerateError::OutOfRange { what, n, max });
    }
    let single = Graph::empty(1).expect("one vertex is valid");
    let mut current: BTreeSet<CanonKey> = BTreeSet::new();
    current.insert(canonical_key(&single)?);
    for k in 1..n {
        let mut next = BTreeSet::new();
        for &key in &current {
            let g = graph_from_key(key);
            let base_edges = g.edges();
            let masks: Box<dyn Iterator<Item = u32>> = match extension {
                Extension::AllSubsets => Box::new(0..(1u32 << k)),
                Extension::NonEmptySubsets => Box::new(1..(1u32 << k)),
                Extension::SingleLeaf => Box::new((0..k as u32).map(|v| 1 << v)),
            };
            for mask in masks {
                let mut edges = base_edges.clone();
                for v in 0..k {
                    if mask >> v & 1 == 1 {
                        edges.push((v, k));
                    }
                }
                let extended =
                    Graph::from_edges(k + 1, &edges).expect("extension edges are in range");
                if matches!(extension, Extension::NonEmptySubsets) && !extended.is_connected() {
                    // Parents are connected, so this cannot happen; keep the
                    // guard as cheap insurance for the invariant.
                    continue;
                }
                next.insert(canonical_key(&extended)?);
            }
        }
        current = next;
    }
    Ok(current.into_iter().map(graph_from_key).collect())
}
