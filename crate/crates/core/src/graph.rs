//! Simple undirected graphs with packed-bitset adjacency.
//!
//! Vertices are `0..n` with `n >= 1`. Graphs are immutable after
//! construction; edge edits return modified copies so callers can compare
//! spectral quantities before and after an edit.

use std::collections::VecDeque;
use std::fmt;

use thiserror::Error;

/// Errors raised by graph construction and graph queries.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    /// Graphs must have at least one vertex.
    #[error("graph must have at least one vertex")]
    NoVertices,
    /// An endpoint was not in `0..n`.
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    /// Self-loops are not representable.
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    /// The edge to add is already present.
    #[error("edge ({0}, {1}) already present")]
    EdgeExists(usize, usize),
    /// The edge to delete is not present.
    #[error("edge ({0}, {1}) not present")]
    EdgeMissing(usize, usize),
    /// An all-pairs or distance query found an unreachable pair.
    #[error("graph is disconnected: no path from vertex {from} to vertex {to}")]
    Disconnected { from: usize, to: usize },
    /// The operation needs more vertices than the graph has.
    #[error("operation requires at least {required} vertices, graph has {actual}")]
    TooSmall { required: usize, actual: usize },
}

const WORD_BITS: usize = 64;

/// An undirected simple graph on `n >= 1` vertices.
///
/// Adjacency is stored as one bitset per vertex, packed into `u64` words,
/// which keeps neighborhood intersections and exhaustive enumeration cheap.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    bits: Vec<u64>,
    m: usize,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

impl Graph {
    /// Builds the edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::NoVertices);
        }
        let words = n.div_ceil(WORD_BITS);
        Ok(Graph {
            n,
            words,
            bits: vec![0; n * words],
            m: 0,
        })
    }

    /// Builds a graph from an edge list. Duplicate edges collapse; self-loops
    /// and out-of-range endpoints are rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Self::empty(n)?;
        for &(u, v) in edges {
            if u >= n {
                return Err(GraphError::VertexOutOfRange { vertex: u, n });
            }
            if v >= n {
                return Err(GraphError::VertexOutOfRange { vertex: v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            if !g.has_edge(u, v) {
                g.set_edge(u, v);
                g.m += 1;
            }
        }
        Ok(g)
    }

    fn set_edge(&mut self, u: usize, v: usize) {
        self.bits[u * self.words + v / WORD_BITS] |= 1 << (v % WORD_BITS);
        self.bits[v * self.words + u / WORD_BITS] |= 1 << (u % WORD_BITS);
    }

    fn clear_edge(&mut self, u: usize, v: usize) {
        self.bits[u * self.words + v / WORD_BITS] &= !(1 << (v % WORD_BITS));
        self.bits[v * self.words + u / WORD_BITS] &= !(1 << (u % WORD_BITS));
    }

    /// Number of vertices.
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn edge_count(&self) -> usize {
        self.m
    }

    /// Whether `{u, v}` is an edge. Out-of-range arguments are simply absent.
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        if u >= self.n || v >= self.n {
            return false;
        }
        self.bits[u * self.words + v / WORD_BITS] >> (v % WORD_BITS) & 1 == 1
    }

    /// The adjacency row of `v` as packed words (little-endian bit order).
    pub(crate) fn row_words(&self, v: usize) -> &[u64] {
        &self.bits[v * self.words..(v + 1) * self.words]
    }

    /// Degree of vertex `v`.
    pub fn degree(&self, v: usize) -> usize {
        self.row_words(v)
            .iter()
            .map(|w| w.count_ones() as usize)
            .sum()
    }

    /// All vertex degrees in vertex order.
    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    /// Iterator over the neighbors of `v` in increasing order.
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.row_words(v).iter().enumerate().flat_map(|(wi, &w)| {
            let mut word = w;
            std::iter::from_fn(move || {
                if word == 0 {
                    None
                } else {
                    let b = word.trailing_zeros() as usize;
                    word &= word - 1;
                    Some(wi * WORD_BITS + b)
                }
            })
        })
    }

    /// All edges `(u, v)` with `u < v` in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m);
        for u in 0..self.n {
            for v in self.neighbors(u) {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Number of common neighbors of `u` and `v`.
    pub fn common_neighbors(&self, u: usize, v: usize) -> usize {
        self.row_words(u)
            .iter()
            .zip(self.row_words(v))
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    /// Returns a copy with edge `{u, v}` added.
    pub fn add_edge(&self, u: usize, v: usize) -> Result<Self, GraphError> {
        self.check_pair(u, v)?;
        if self.has_edge(u, v) {
            return Err(GraphError::EdgeExists(u.min(v), u.max(v)));
        }
        let mut g = self.clone();
        g.set_edge(u, v);
        g.m += 1;
        Ok(g)
    }

    /// Returns a copy with edge `{u, v}` deleted.
    pub fn delete_edge(&self, u: usize, v: usize) -> Result<Self, GraphError> {
        self.check_pair(u, v)?;
        if !self.has_edge(u, v) {
            return Err(GraphError::EdgeMissing(u.min(v), u.max(v)));
        }
        let mut g = self.clone();
        g.clear_edge(u, v);
        g.m -= 1;
        Ok(g)
    }

    fn check_pair(&self, u: usize, v: usize) -> Result<(), GraphError> {
        if u >= self.n {
            return Err(GraphError::VertexOutOfRange {
                vertex: u,
                n: self.n,
            });
        }
        if v >= self.n {
            return Err(GraphError::VertexOutOfRange {
                vertex: v,
                n: self.n,
            });
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        Ok(())
    }

    /// The complement graph on the same vertex set.
    pub fn complement(&self) -> Self {
        let mut g = Self::empty(self.n).expect("n >= 1 by invariant");
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if !self.has_edge(u, v) {
                    g.set_edge(u, v);
                    g.m += 1;
                }
            }
        }
        g
    }

    /// Breadth-first distances from `start`; unreachable vertices are `None`.
    pub fn bfs_distances(&self, start: usize) -> Vec<Option<u32>> {
        let mut dist = vec![None; self.n];
        dist[start] = Some(0);
        let mut queue = VecDeque::with_capacity(self.n);
        queue.push_back(start);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].expect("queued vertices have distances");
            for v in self.neighbors(u) {
                if dist[v].is_none() {
                    dist[v] = Some(du + 1);
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    /// Whether the graph is connected (single-vertex graphs are).
    pub fn is_connected(&self) -> bool {
        self.bfs_distances(0).iter().all(|d| d.is_some())
    }

    /// All-pairs shortest path matrix; errors on disconnected input naming an
    /// unreachable pair.
    pub fn distance_matrix(&self) -> Result<DistanceMatrix, GraphError> {
        let mut d = vec![0u32; self.n * self.n];
        let mut row_sums = vec![0u64; self.n];
        for u in 0..self.n {
            let from_u = self.bfs_distances(u);
            for v in 0..self.n {
                match from_u[v] {
                    Some(duv) => {
                        d[u * self.n + v] = duv;
                        row_sums[u] += u64::from(duv);
                    }
                    None => return Err(GraphError::Disconnected { from: u, to: v }),
                }
            }
        }
        Ok(DistanceMatrix {
            n: self.n,
            d,
            row_sums,
        })
    }

    /// Diameter (maximum eccentricity). Errors on disconnected input.
    pub fn diameter(&self) -> Result<u32, GraphError> {
        Ok(self.distance_matrix()?.diameter())
    }

    /// Whether every vertex has the same degree.
    pub fn is_regular(&self) -> bool {
        let d0 = self.degree(0);
        (1..self.n).all(|v| self.degree(v) == d0)
    }

    /// A proper two-coloring, or `None` when the graph contains an odd cycle.
    ///
    /// Each component is rooted at its smallest vertex, which lands in side A,
    /// so the partition reported for a connected graph always has vertex 0 in
    /// side A. Side sizes and per-side degree extrema are included because the
    /// bipartite eigenvalue bounds consume them directly.
    pub fn bipartition(&self) -> Option<Bipartition> {
        let mut side: Vec<Option<Side>> = vec![None; self.n];
        for root in 0..self.n {
            if side[root].is_some() {
                continue;
            }
            side[root] = Some(Side::A);
            let mut queue = VecDeque::new();
            queue.push_back(root);
            while let Some(u) = queue.pop_front() {
                let su = side[u].expect("queued vertices are colored");
                for v in self.neighbors(u) {
                    match side[v] {
                        None => {
                            side[v] = Some(su.other());
                            queue.push_back(v);
                        }
                        Some(sv) if sv == su => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        let side: Vec<Side> = side.into_iter().map(|s| s.expect("all colored")).collect();
        let mut part = Bipartition {
            side,
            size_a: 0,
            size_b: 0,
            max_deg_a: 0,
            min_deg_a: usize::MAX,
            max_deg_b: 0,
            min_deg_b: usize::MAX,
        };
        for v in 0..self.n {
            let deg = self.degree(v);
            match part.side[v] {
                Side::A => {
                    part.size_a += 1;
                    part.max_deg_a = part.max_deg_a.max(deg);
                    part.min_deg_a = part.min_deg_a.min(deg);
                }
                Side::B => {
                    part.size_b += 1;
                    part.max_deg_b = part.max_deg_b.max(deg);
                    part.min_deg_b = part.min_deg_b.min(deg);
                }
            }
        }
        if part.size_b == 0 {
            // A single vertex has an empty B side; report degree extrema as 0.
            part.min_deg_b = 0;
        }
        if part.size_a > 0 && part.min_deg_a == usize::MAX {
            part.min_deg_a = 0;
        }
        Some(part)
    }

    /// Whether the graph is bipartite with constant degrees inside each side.
    /// Regular bipartite graphs qualify.
    pub fn is_semiregular(&self) -> bool {
        let Some(part) = self.bipartition() else {
            return false;
        };
        part.size_a > 0
            && part.size_b > 0
            && part.max_deg_a == part.min_deg_a
            && part.max_deg_b == part.min_deg_b
    }

    /// Whether the graph is complete.
    pub fn is_complete(&self) -> bool {
        self.m == self.n * (self.n - 1) / 2
    }

    /// Whether the graph is complete bipartite (every cross pair adjacent).
    pub fn is_complete_bipartite(&self) -> bool {
        match self.bipartition() {
            Some(part) => self.m == part.size_a * part.size_b,
            None => false,
        }
    }

    /// Largest and second-largest, smallest and second-smallest degrees,
    /// counted with multiplicity (the second value may equal the first).
    pub fn degree_summary(&self) -> Result<DegreeSummary, GraphError> {
        if self.n < 2 {
            return Err(GraphError::TooSmall {
                required: 2,
                actual: self.n,
            });
        }
        let mut degs = self.degrees();
        degs.sort_unstable();
        Ok(DegreeSummary {
            max: degs[self.n - 1],
            second_max: degs[self.n - 2],
            min: degs[0],
            second_min: degs[1],
        })
    }

    /// First Zagreb index: the sum of squared vertex degrees.
    pub fn zagreb_m1(&self) -> u64 {
        self.degrees()
            .iter()
            .map(|&d| (d as u64) * (d as u64))
            .sum()
    }

    /// Wiener index (sum of distances over unordered pairs). Errors on
    /// disconnected input.
    pub fn wiener_index(&self) -> Result<u64, GraphError> {
        Ok(self.distance_matrix()?.wiener())
    }

    /// Whether the graph contains neither a triangle nor a quadrangle.
    ///
    /// A triangle exists iff some adjacent pair has a common neighbor; a
    /// quadrangle exists iff some pair has two common neighbors.
    pub fn is_triangle_and_quadrangle_free(&self) -> bool {
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                let common = self.common_neighbors(u, v);
                if common >= 2 {
                    return false;
                }
                if common >= 1 && self.has_edge(u, v) {
                    return false;
                }
            }
        }
        true
    }
}

/// Which side of a bipartition a vertex belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    A,
    B,
}

impl Side {
    fn other(self) -> Side {
        match self {
            Side::A => Side::B,
            Side::B => Side::A,
        }
    }
}

/// A proper two-coloring of a bipartite graph, with vertex 0 in side A,
/// plus the per-side sizes and degree extrema used by the bipartite bounds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bipartition {
    /// Side of each vertex.
    pub side: Vec<Side>,
    /// Number of vertices in side A.
    pub size_a: usize,
    /// Number of vertices in side B.
    pub size_b: usize,
    /// Maximum degree over side A.
    pub max_deg_a: usize,
    /// Minimum degree over side A.
    pub min_deg_a: usize,
    /// Maximum degree over side B.
    pub max_deg_b: usize,
    /// Minimum degree over side B.
    pub min_deg_b: usize,
}

/// Degree extremes counted with multiplicity: `second_max` is the largest
/// degree after removing one occurrence of the maximum, so it may equal
/// `max` (and similarly for `second_min`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DegreeSummary {
    pub max: usize,
    pub second_max: usize,
    pub min: usize,
    pub second_min: usize,
}

/// All-pairs shortest-path distances of a connected graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u32>,
    row_sums: Vec<u64>,
}

impl DistanceMatrix {
    /// Number of vertices.
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// Distance between `u` and `v`.
    pub fn entry(&self, u: usize, v: usize) -> u32 {
        self.d[u * self.n + v]
    }

    /// Sum of row `v` (the transmission of vertex `v`).
    pub fn row_sum(&self, v: usize) -> u64 {
        self.row_sums[v]
    }

    /// All row sums in vertex order.
    pub fn row_sums(&self) -> &[u64] {
        &self.row_sums
    }

    /// Whether all row sums coincide (transmission-regular graph).
    pub fn equal_row_sums(&self) -> bool {
        self.row_sums.windows(2).all(|w| w[0] == w[1])
    }

    /// Eccentricity of vertex `v`.
    pub fn eccentricity(&self, v: usize) -> u32 {
        (0..self.n).map(|u| self.entry(v, u)).max().unwrap_or(0)
    }

    /// All eccentricities in vertex order.
    pub fn eccentricities(&self) -> Vec<u32> {
        (0..self.n).map(|v| self.eccentricity(v)).collect()
    }

    /// Diameter (maximum entry).
    pub fn diameter(&self) -> u32 {
        self.d.iter().copied().max().unwrap_or(0)
    }

    /// Wiener index: half the sum of all entries.
    pub fn wiener(&self) -> u64 {
        self.row_sums.iter().sum::<u64>() / 2
    }

    /// Sum of squared distances over unordered pairs.
    pub fn sum_squared_distances(&self) -> u64 {
        self.d
            .iter()
            .map(|&x| u64::from(x) * u64::from(x))
            .sum::<u64>()
            / 2
    }
}
