//! Constructors for named graph families, plus a parseable [`FamilySpec`]
//! so families can be requested from command lines and config files.

use crate::graph::{Graph, GraphError};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::cmp::Reverse;
use std::collections::BinaryHeap;
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

/// Errors from family constructors.
#[derive(Debug, Error)]
pub enum FamilyError {
    #[error("family parameter out of range: {0}")]
    Parameter(String),
    #[error("gave up sampling a connected graph after {attempts} attempts (n = {n}, p = {p})")]
    SamplingExhausted { n: usize, p: f64, attempts: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Complete graph on `n >= 1` vertices.
pub fn complete(n: usize) -> Result<Graph, FamilyError> {
    let mut edges = Vec::with_capacity(n * (n.saturating_sub(1)) / 2);
    for i in 0..n {
        for j in (i + 1)..n {
            edges.push((i, j));
        }
    }
    Ok(Graph::from_edges(n, &edges)?)
}

/// Path on `n >= 1` vertices, with edges `(i, i+1)`.
pub fn path(n: usize) -> Result<Graph, FamilyError> {
    let edges: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
    Ok(Graph::from_edges(n, &edges)?)
}

/// Cycle on `n >= 3` vertices.
pub fn cycle(n: usize) -> Result<Graph, FamilyError> {
    if n < 3 {
        return Err(FamilyError::Parameter(format!(
            "cycle needs n >= 3, got {n}"
        )));
    }
    let edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Ok(Graph::from_edges(n, &edges)?)
}

/// Complete bipartite graph with parts `{0..p}` and `{p..p+q}`, `p, q >= 1`.
pub fn complete_bipartite(p: usize, q: usize) -> Result<Graph, FamilyError> {
    if p == 0 || q == 0 {
        return Err(FamilyError::Parameter(format!(
            "complete bipartite parts must be nonempty, got ({p}, {q})"
        )));
    }
    let mut edges = Vec::with_capacity(p * q);
    for i in 0..p {
        for j in 0..q {
            edges.push((i, p + j));
        }
    }
    Ok(Graph::from_edges(p + q, &edges)?)
}

/// Star on `n >= 2` vertices: vertex 0 joined to all others.
pub fn star(n: usize) -> Result<Graph, FamilyError> {
    if n < 2 {
        return Err(FamilyError::Parameter(format!(
            "star needs n >= 2, got {n}"
        )));
    }
    let edges: Vec<(usize, usize)> = (1..n).map(|i| (0, i)).collect();
    Ok(Graph::from_edges(n, &edges)?)
}

/// Broom on `n` vertices with maximum degree `delta`: the path
/// `0, 1, ..., n - delta` with `delta - 1` pendant vertices attached to its
/// last vertex. Requires `2 <= delta <= n - 1`; `delta = 2` gives the path.
pub fn broom(n: usize, delta: usize) -> Result<Graph, FamilyError> {
    if delta < 2 || delta + 1 > n {
        return Err(FamilyError::Parameter(format!(
            "broom needs 2 <= delta <= n - 1, got (n = {n}, delta = {delta})"
        )));
    }
    let hub = n - delta;
    let mut edges: Vec<(usize, usize)> = (0..hub).map(|i| (i, i + 1)).collect();
    edges.extend((hub + 1..n).map(|leaf| (hub, leaf)));
    Ok(Graph::from_edges(n, &edges)?)
}

/// Cocktail-party graph on `2a` vertices (`a >= 2`): the complete graph
/// minus the perfect matching `(2i, 2i + 1)`.
pub fn cocktail_party(a: usize) -> Result<Graph, FamilyError> {
    if a < 2 {
        return Err(FamilyError::Parameter(format!(
            "cocktail party needs a >= 2, got {a}"
        )));
    }
    let n = 2 * a;
    let mut edges = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            if i / 2 != j / 2 {
                edges.push((i, j));
            }
        }
    }
    Ok(Graph::from_edges(n, &edges)?)
}

/// Line graph: one vertex per edge of `g` (in lexicographic edge order),
/// adjacent when the underlying edges share an endpoint. Errors when `g`
/// has no edges.
pub fn line_graph(g: &Graph) -> Result<Graph, FamilyError> {
    let base_edges = g.edges();
    let m = base_edges.len();
    if m == 0 {
        return Err(FamilyError::Parameter(
            "line graph needs a base graph with at least one edge".into(),
        ));
    }
    let mut edges = Vec::new();
    for i in 0..m {
        for j in (i + 1)..m {
            let (a, b) = base_edges[i];
            let (c, d) = base_edges[j];
            if a == c || a == d || b == c || b == d {
                edges.push((i, j));
            }
        }
    }
    Ok(Graph::from_edges(m, &edges)?)
}

/// Generalized line graph `L(g; a_1, ..., a_n)`: the line graph of `g`
/// together with one cocktail-party block `CP(a_i)` per base vertex `i`,
/// every block vertex joined to every line vertex whose underlying edge is
/// incident with `i`. `pendant_counts` must have one entry per vertex of
/// `g`; zero entries contribute nothing.
pub fn generalized_line_graph(g: &Graph, pendant_counts: &[usize]) -> Result<Graph, FamilyError> {
    let n = g.vertex_count();
    if pendant_counts.len() != n {
        return Err(FamilyError::Parameter(format!(
            "expected {n} pendant counts, got {}",
            pendant_counts.len()
        )));
    }
    let base_edges = g.edges();
    let m = base_edges.len();
    let total: usize = m + 2 * pendant_counts.iter().sum::<usize>();
    if total == 0 {
        return Err(FamilyError::Parameter(
            "generalized line graph needs an edge or a positive pendant count".into(),
        ));
    }
    let mut edges = Vec::new();
    for i in 0..m {
        for j in (i + 1)..m {
            let (a, b) = base_edges[i];
            let (c, d) = base_edges[j];
            if a == c || a == d || b == c || b == d {
                edges.push((i, j));
            }
        }
    }
    let mut offset = m;
    for (v, &a) in pendant_counts.iter().enumerate() {
        let block: Vec<usize> = (offset..offset + 2 * a).collect();
        for (s, &x) in block.iter().enumerate() {
            for &y in &block[s + 1..] {
                // Complete within the block, minus the perfect matching.
                if (x - offset) / 2 != (y - offset) / 2 {
                    edges.push((x, y));
                }
            }
            for (e, &(p, q)) in base_edges.iter().enumerate() {
                if p == v || q == v {
                    edges.push((e, x));
                }
            }
        }
        offset += 2 * a;
    }
    Ok(Graph::from_edges(total, &edges)?)
}

const MAX_SAMPLING_ATTEMPTS: usize = 10_000;

/// Samples an Erdős–Rényi graph `G(n, p)` repeatedly until it is connected,
/// using a fixed-seed deterministic generator. Errors after
/// 10,000 rejected samples (certain for `p = 0`, `n > 1`).
pub fn random_connected(n: usize, p: f64, seed: u64) -> Result<Graph, FamilyError> {
    if n == 0 {
        return Err(FamilyError::Graph(GraphError::NoVertices));
    }
    if !(0.0..=1.0).contains(&p) {
        return Err(FamilyError::Parameter(format!(
            "edge probability must be in [0, 1], got {p}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..MAX_SAMPLING_ATTEMPTS {
        let mut edges = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                if rng.gen_bool(p) {
                    edges.push((i, j));
                }
            }
        }
        let g = Graph::from_edges(n, &edges)?;
        if g.is_connected() {
            return Ok(g);
        }
    }
    Err(FamilyError::SamplingExhausted {
        n,
        p,
        attempts: MAX_SAMPLING_ATTEMPTS,
    })
}

/// Samples a uniformly random labelled tree on `n >= 1` vertices via a
/// random Prüfer sequence, with a fixed-seed deterministic generator.
pub fn random_tree(n: usize, seed: u64) -> Result<Graph, FamilyError> {
    if n == 0 {
        return Err(FamilyError::Graph(GraphError::NoVertices));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    if n == 1 {
        return Ok(Graph::empty(1)?);
    }
    let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    Ok(tree_from_pruefer(n, &seq)?)
}

/// Decodes a Prüfer sequence of length `n - 2` into its tree.
fn tree_from_pruefer(n: usize, seq: &[usize]) -> Result<Graph, GraphError> {
    debug_assert_eq!(seq.len(), n - 2);
    let mut degree = vec![1usize; n];
    for &s in seq {
        degree[s] += 1;
    }
    let mut leaves: BinaryHeap<Reverse<usize>> =
        (0..n).filter(|&v| degree[v] == 1).map(Reverse).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &s in seq {
        let Reverse(leaf) = leaves.pop().expect("a tree always has a leaf");
        edges.push((leaf, s));
        degree[s] -= 1;
        if degree[s] == 1 {
            leaves.push(Reverse(s));
        }
    }
    let Reverse(u) = leaves.pop().expect("two vertices remain");
    let Reverse(v) = leaves.pop().expect("two vertices remain");
    edges.push((u, v));
    Graph::from_edges(n, &edges)
}

/// A parsed description of a graph family member.
///
/// The text syntax is `name:params`:
///
/// * `complete:5`, `path:4`, `cycle:6`, `star:5`, `cocktail_party:3`
/// * `complete_bipartite:2,3`, `broom:7,3`
/// * `line:<base>` — line graph of a nested spec, e.g. `line:complete:5`
/// * `glg:<base>;a1,a2,...` — generalized line graph (counts follow the
///   last `;`)
/// * `random_connected:n,p[,seed]`, `random_tree:n[,seed]` — the seed
///   defaults to 0 when omitted
#[derive(Debug, Clone, PartialEq)]
pub enum FamilySpec {
    Complete(usize),
    Path(usize),
    Cycle(usize),
    CompleteBipartite(usize, usize),
    Star(usize),
    Broom(usize, usize),
    CocktailParty(usize),
    LineOf(Box<FamilySpec>),
    GeneralizedLine(Box<FamilySpec>, Vec<usize>),
    RandomConnected { n: usize, p: f64, seed: Option<u64> },
    RandomTree { n: usize, seed: Option<u64> },
}

impl FamilySpec {
    /// Builds the graph this spec describes.
    pub fn build(&self) -> Result<Graph, FamilyError> {
        match self {
            FamilySpec::Complete(n) => complete(*n),
            FamilySpec::Path(n) => path(*n),
            FamilySpec::Cycle(n) => cycle(*n),
            FamilySpec::CompleteBipartite(p, q) => complete_bipartite(*p, *q),
            FamilySpec::Star(n) => star(*n),
            FamilySpec::Broom(n, d) => broom(*n, *d),
            FamilySpec::CocktailParty(a) => cocktail_party(*a),
            FamilySpec::LineOf(base) => line_graph(&base.build()?),
            FamilySpec::GeneralizedLine(base, counts) => {
                generalized_line_graph(&base.build()?, counts)
            }
            FamilySpec::RandomConnected { n, p, seed } => {
                random_connected(*n, *p, seed.unwrap_or(0))
            }
            FamilySpec::RandomTree { n, seed } => random_tree(*n, seed.unwrap_or(0)),
        }
    }

    /// Fills in any missing random seeds (recursively) with `seed`.
    pub fn with_default_seed(self, seed: u64) -> Self {
        match self {
            FamilySpec::LineOf(base) => FamilySpec::LineOf(Box::new(base.with_default_seed(seed))),
            FamilySpec::GeneralizedLine(base, counts) => {
                FamilySpec::GeneralizedLine(Box::new(base.with_default_seed(seed)), counts)
            }
            FamilySpec::RandomConnected { n, p, seed: s } => FamilySpec::RandomConnected {
                n,
                p,
                seed: Some(s.unwrap_or(seed)),
            },
            FamilySpec::RandomTree { n, seed: s } => FamilySpec::RandomTree {
                n,
                seed: Some(s.unwrap_or(seed)),
            },
            other => other,
        }
    }

    /// A short identifier suitable for report rows (contains no commas).
    pub fn id(&self) -> String {
        match self {
            FamilySpec::Complete(n) => format!("K{n}"),
            FamilySpec::Path(n) => format!("P{n}"),
            FamilySpec::Cycle(n) => format!("C{n}"),
            FamilySpec::CompleteBipartite(p, q) => format!("K{p}_{q}"),
            FamilySpec::Star(n) => format!("S{n}"),
            FamilySpec::Broom(n, d) => format!("B{n}_{d}"),
            FamilySpec::CocktailParty(a) => format!("CP{a}"),
            FamilySpec::LineOf(base) => format!("L({})", base.id()),
            FamilySpec::GeneralizedLine(base, counts) => {
                let joined: Vec<String> = counts.iter().map(|c| c.to_string()).collect();
                format!("GLG({};{})", base.id(), joined.join("_"))
            }
            FamilySpec::RandomConnected { n, p, seed } => {
                format!("RC{n}_p{p}_s{}", seed.unwrap_or(0))
            }
            FamilySpec::RandomTree { n, seed } => format!("RT{n}_s{}", seed.unwrap_or(0)),
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Complete(n) => write!(f, "complete:{n}"),
            FamilySpec::Path(n) => write!(f, "path:{n}"),
            FamilySpec::Cycle(n) => write!(f, "cycle:{n}"),
            FamilySpec::CompleteBipartite(p, q) => write!(f, "complete_bipartite:{p},{q}"),
            FamilySpec::Star(n) => write!(f, "star:{n}"),
            FamilySpec::Broom(n, d) => write!(f, "broom:{n},{d}"),
            FamilySpec::CocktailParty(a) => write!(f, "cocktail_party:{a}"),
            FamilySpec::LineOf(base) => write!(f, "line:{base}"),
            FamilySpec::GeneralizedLine(base, counts) => {
                let joined: Vec<String> = counts.iter().map(|c| c.to_string()).collect();
                write!(f, "glg:{base};{}", joined.join(","))
            }
            FamilySpec::RandomConnected { n, p, seed } => {
                write!(f, "random_connected:{n},{p}")?;
                if let Some(s) = seed {
                    write!(f, ",{s}")?;
                }
                Ok(())
            }
            FamilySpec::RandomTree { n, seed } => {
                write!(f, "random_tree:{n}")?;
                if let Some(s) = seed {
                    write!(f, ",{s}")?;
                }
                Ok(())
            }
        }
    }
}

/// Error from parsing a [`FamilySpec`] string.
#[derive(Debug, Error, PartialEq, Eq)]
#[error("invalid family spec `{spec}`: {reason}")]
pub struct FamilyParseError {
    pub spec: String,
    pub reason: String,
}

impl FamilyParseError {
    fn new(spec: &str, reason: impl Into<String>) -> Self {
        FamilyParseError {
            spec: spec.to_string(),
            reason: reason.into(),
        }
    }
}

fn parse_usizes(spec: &str, rest: &str, want: usize) -> Result<Vec<usize>, FamilyParseError> {
    let parts: Vec<&str> = if rest.is_empty() {
        Vec::new()
    } else {
        rest.split(',').collect()
    };
    if parts.len() != want {
        return Err(FamilyParseError::new(
            spec,
            format!("expected {want} integer parameter(s), got {}", parts.len()),
        ));
    }
    parts
        .iter()
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|e| FamilyParseError::new(spec, format!("bad integer `{t}`: {e}")))
        })
        .collect()
}

impl FromStr for FamilySpec {
    type Err = FamilyParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let trimmed = s.trim();
        let (name, rest) = trimmed.split_once(':').unwrap_or((trimmed, ""));
        match name {
            "complete" => Ok(FamilySpec::Complete(parse_usizes(s, rest, 1)?[0])),
            "path" => Ok(FamilySpec::Path(parse_usizes(s, rest, 1)?[0])),
            "cycle" => Ok(FamilySpec::Cycle(parse_usizes(s, rest, 1)?[0])),
            "star" => Ok(FamilySpec::Star(parse_usizes(s, rest, 1)?[0])),
            "cocktail_party" => Ok(FamilySpec::CocktailParty(parse_usizes(s, rest, 1)?[0])),
            "complete_bipartite" | "kpq" => {
                let v = parse_usizes(s, rest, 2)?;
                Ok(FamilySpec::CompleteBipartite(v[0], v[1]))
            }
            "broom" => {
                let v = parse_usizes(s, rest, 2)?;
                Ok(FamilySpec::Broom(v[0], v[1]))
            }
            "line" => {
                if rest.is_empty() {
                    return Err(FamilyParseError::new(s, "line needs a nested base spec"));
                }
                Ok(FamilySpec::LineOf(Box::new(rest.parse()?)))
            }
            "glg" => {
                let (base, counts) = rest.rsplit_once(';').ok_or_else(|| {
                    FamilyParseError::new(s, "glg needs `;` separating base spec from counts")
                })?;
                let counts: Vec<usize> = counts
                    .split(',')
                    .map(|t| {
                        t.trim().parse::<usize>().map_err(|e| {
                            FamilyParseError::new(s, format!("bad pendant count `{t}`: {e}"))
                        })
                    })
                    .collect::<Result<_, _>>()?;
                Ok(FamilySpec::GeneralizedLine(Box::new(base.parse()?), counts))
            }
            "random_connected" => {
                // Seed may trail after a second colon (`n,p:seed`) or as a
                // third comma-separated value.
                let (params, colon_seed) = match rest.split_once(':') {
                    Some((params, seed)) => (params, Some(seed)),
                    None => (rest, None),
                };
                let mut parts: Vec<&str> = params.split(',').collect();
                if let Some(seed) = colon_seed {
                    parts.push(seed);
                }
                if parts.len() < 2 || parts.len() > 3 {
                    return Err(FamilyParseError::new(s, "expected n,p or n,p,seed"));
                }
                let n = parts[0]
                    .trim()
                    .parse::<usize>()
                    .map_err(|e| FamilyParseError::new(s, format!("bad n: {e}")))?;
                let p = parts[1]
                    .trim()
                    .parse::<f64>()
                    .map_err(|e| FamilyParseError::new(s, format!("bad p: {e}")))?;
                let seed = match parts.get(2) {
                    Some(t) => Some(
                        t.trim()
                            .parse::<u64>()
                            .map_err(|e| FamilyParseError::new(s, format!("bad seed: {e}")))?,
                    ),
                    None => None,
                };
                Ok(FamilySpec::RandomConnected { n, p, seed })
            }
            "random_tree" => {
                let (params, colon_seed) = match rest.split_once(':') {
                    Some((params, seed)) => (params, Some(seed)),
                    None => (rest, None),
                };
                let mut parts: Vec<&str> = params.split(',').collect();
                if let Some(seed) = colon_seed {
                    parts.push(seed);
                }
                if parts.is_empty() || parts.len() > 2 || parts[0].is_empty() {
                    return Err(FamilyParseError::new(s, "expected n or n,seed"));
                }
                let n = parts[0]
                    .trim()
                    .parse::<usize>()
                    .map_err(|e| FamilyParseError::new(s, format!("bad n: {e}")))?;
                let seed = match parts.get(1) {
                    Some(t) => Some(
                        t.trim()
                            .parse::<u64>()
                            .map_err(|e| FamilyParseError::new(s, format!("bad seed: {e}")))?,
                    ),
                    None => None,
                };
                Ok(FamilySpec::RandomTree { n, seed })
            }
            other => Err(FamilyParseError::new(
                s,
                format!("unknown family `{other}`"),
            )),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_family_shapes() {
        let g = complete(5).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (5, 10));
        assert!(g.is_regular());

        let g = path(4).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (4, 3));
        assert_eq!(g.diameter().unwrap(), 3);

        let g = cycle(6).unwrap();
        assert!(g.is_regular());
        assert_eq!(g.degree(0), 2);
        assert!(cycle(2).is_err());

        let g = complete_bipartite(2, 3).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (5, 6));
        assert!(g.is_complete_bipartite());
        assert!(complete_bipartite(0, 3).is_err());

        let g = star(6).unwrap();
        assert_eq!(g.degree(0), 5);
        assert!(g.is_complete_bipartite());
    }

    #[test]
    fn broom_shape_and_degenerate_cases() {
        let g = broom(7, 3).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (7, 6));
        assert!(g.is_connected());
        assert_eq!(g.degrees().into_iter().max(), Some(3));

        // delta = 2 gives the path, delta = n - 1 the star.
        let b = broom(5, 2).unwrap();
        let p = path(5).unwrap();
        assert_eq!(b.edges(), p.edges());
        let b = broom(5, 4).unwrap();
        assert_eq!(b.degrees().into_iter().max(), Some(4));
        assert!(broom(5, 5).is_err());
        assert!(broom(5, 1).is_err());
    }

    #[test]
    fn cocktail_party_is_regular_with_diameter_two() {
        let g = cocktail_party(3).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (6, 12));
        assert!(g.is_regular());
        assert_eq!(g.degree(0), 4);
        assert_eq!(g.diameter().unwrap(), 2);
        assert!(cocktail_party(1).is_err());
    }

    #[test]
    fn line_graph_shapes() {
        // L(C_5) is again a 5-cycle.
        let l = line_graph(&cycle(5).unwrap()).unwrap();
        assert_eq!((l.vertex_count(), l.edge_count()), (5, 5));
        assert!(l.is_regular());

        // L(K_4) is the 4-regular octahedron (cocktail party on 6 vertices).
        let l = line_graph(&complete(4).unwrap()).unwrap();
        assert_eq!((l.vertex_count(), l.edge_count()), (6, 12));
        assert!(l.is_regular());

        // L(star on n) is a complete graph on n - 1 vertices.
        let l = line_graph(&star(5).unwrap()).unwrap();
        assert!(l.is_complete());

        assert!(line_graph(&Graph::empty(3).unwrap()).is_err());
    }

    #[test]
    fn generalized_line_graph_small_cases() {
        // L(K_2; 1, 0) is a path on three vertices.
        let g = generalized_line_graph(&complete(2).unwrap(), &[1, 0]).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (3, 2));
        assert_eq!(g.degree(0), 2);

        // With all-zero counts it reduces to the plain line graph.
        let base = cycle(4).unwrap();
        let plain = line_graph(&base).unwrap();
        let glg = generalized_line_graph(&base, &[0, 0, 0, 0]).unwrap();
        assert_eq!(plain.edges(), glg.edges());

        assert!(generalized_line_graph(&base, &[0, 0]).is_err());
    }

    #[test]
    fn random_families_are_deterministic_and_valid() {
        let a = random_connected(8, 0.4, 7).unwrap();
        let b = random_connected(8, 0.4, 7).unwrap();
        assert_eq!(a.edges(), b.edges());
        assert!(a.is_connected());
        let c = random_connected(8, 0.4, 8).unwrap();
        assert!(
            a.edges() != c.edges(),
            "different seeds should give different graphs"
        );

        // p = 1 always yields the complete graph on the first draw.
        let k = random_connected(5, 1.0, 0).unwrap();
        assert!(k.is_complete());
        // p = 0 with n > 1 can never be connected.
        assert!(matches!(
            random_connected(3, 0.0, 0),
            Err(FamilyError::SamplingExhausted { .. })
        ));
        assert!(random_connected(4, 1.5, 0).is_err());

        for n in [1usize, 2, 3, 9] {
            let t = random_tree(n, 3).unwrap();
            assert!(t.is_connected());
            assert_eq!(t.edge_count(), n - 1);
        }
        let t1 = random_tree(9, 3).unwrap();
        let t2 = random_tree(9, 3).unwrap();
        assert_eq!(t1.edges(), t2.edges());
    }

    #[test]
    fn pruefer_decoding_matches_known_sequences() {
        // Sequence (2, 2) on 4 vertices is the star centered at 2.
        let t = tree_from_pruefer(4, &[2, 2]).unwrap();
        assert_eq!(t.degree(2), 3);
        // Empty sequence on 2 vertices is the single edge.
        let t = tree_from_pruefer(2, &[]).unwrap();
        assert_eq!(t.edges(), vec![(0, 1)]);
    }

    #[test]
    fn spec_strings_round_trip() {
        let cases = [
            "complete:4",
            "path:7",
            "cycle:5",
            "complete_bipartite:2,3",
            "star:6",
            "broom:7,3",
            "cocktail_party:3",
            "line:complete:5",
            "glg:complete:2;1,0",
            "glg:line:cycle:4;0,0,0,0",
            "random_connected:6,0.35,42",
            "random_connected:6,0.35",
            "random_tree:9,7",
            "random_tree:9",
        ];
        for case in cases {
            let spec: FamilySpec = case.parse().unwrap();
            assert_eq!(spec.to_string(), case, "display must round-trip the input");
            let reparsed: FamilySpec = spec.to_string().parse().unwrap();
            assert_eq!(reparsed, spec);
        }
    }

    #[test]
    fn spec_aliases_and_colon_seeds() {
        let spec: FamilySpec = "kpq:2,3".parse().unwrap();
        assert_eq!(spec, FamilySpec::CompleteBipartite(2, 3));

        let spec: FamilySpec = "random_tree:9:7".parse().unwrap();
        assert_eq!(
            spec,
            FamilySpec::RandomTree {
                n: 9,
                seed: Some(7)
            }
        );

        let spec: FamilySpec = "random_connected:6,0.35:42".parse().unwrap();
        assert_eq!(
            spec,
            FamilySpec::RandomConnected {
                n: 6,
                p: 0.35,
                seed: Some(42)
            }
        );
        assert!("random_connected:6,0.5,1:2".parse::<FamilySpec>().is_err());
    }

    #[test]
    fn spec_ids_and_build() {
        let spec: FamilySpec = "complete_bipartite:2,3".parse().unwrap();
        assert_eq!(spec.id(), "K2_3");
        assert!(spec.build().unwrap().is_complete_bipartite());

        let spec: FamilySpec = "glg:complete:2;1,0".parse().unwrap();
        assert_eq!(spec.id(), "GLG(K2;1_0)");
        assert_eq!(spec.build().unwrap().vertex_count(), 3);

        let spec: FamilySpec = "broom:6,3".parse().unwrap();
        assert_eq!(spec.id(), "B6_3");

        let spec: FamilySpec = "random_tree:9".parse().unwrap();
        let seeded = spec.with_default_seed(11);
        assert_eq!(
            seeded,
            FamilySpec::RandomTree {
                n: 9,
                seed: Some(11)
            }
        );
        // An explicit seed is kept.
        let spec: FamilySpec = "random_tree:9,2".parse().unwrap();
        let seeded = spec.with_default_seed(11);
        assert_eq!(
            seeded,
            FamilySpec::RandomTree {
                n: 9,
                seed: Some(2)
            }
        );
    }

    #[test]
    fn spec_parse_errors_are_informative() {
        for bad in [
            "unknown:3",
            "complete",
            "complete:x",
            "complete:3,4",
            "cycle:",
            "broom:5",
            "line:",
            "glg:complete:2",
            "random_connected:5",
            "random_connected:5,0.5,1,2",
        ] {
            let err = bad.parse::<FamilySpec>().unwrap_err();
            assert_eq!(err.spec, bad);
        }
    }
}
