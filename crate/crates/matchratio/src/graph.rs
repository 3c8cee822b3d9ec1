//! Simple undirected graphs and vertex sets.
//!
//! Vertices are `0..n`. Edges are stored as a sorted, duplicate-free list of
//! pairs `(u, v)` with `u < v`, so two graphs compare equal exactly when they
//! are identical labeled graphs.

use crate::error::{GraphError, ParseError};
use std::fmt;

/// A set of vertices of a graph of known order, backed by a bit vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    universe: usize,
    words: Vec<u64>,
}

impl VertexSet {
    /// The empty set over `0..universe`.
    pub fn new(universe: usize) -> Self {
        VertexSet {
            universe,
            words: vec![0; universe.div_ceil(64)],
        }
    }

    /// The full set `{0, .., universe-1}`.
    pub fn full(universe: usize) -> Self {
        let mut s = VertexSet::new(universe);
        for v in 0..universe {
            s.insert(v);
        }
        s
    }

    pub fn from_iter<I: IntoIterator<Item = usize>>(universe: usize, vs: I) -> Self {
        let mut s = VertexSet::new(universe);
        for v in vs {
            s.insert(v);
        }
        s
    }

    /// Size of the underlying universe (not the cardinality).
    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn insert(&mut self, v: usize) {
        assert!(v < self.universe, "vertex {v} outside universe {}", self.universe);
        self.words[v / 64] |= 1 << (v % 64);
    }

    pub fn remove(&mut self, v: usize) {
        assert!(v < self.universe, "vertex {v} outside universe {}", self.universe);
        self.words[v / 64] &= !(1 << (v % 64));
    }

    pub fn contains(&self, v: usize) -> bool {
        v < self.universe && self.words[v / 64] >> (v % 64) & 1 == 1
    }

    /// Cardinality.
    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Complement within the universe.
    pub fn complement(&self) -> Self {
        let mut out = self.clone();
        for (i, w) in out.words.iter_mut().enumerate() {
            *w = !*w;
            // mask tail bits beyond the universe
            let base = i * 64;
            if base + 64 > self.universe {
                let keep = self.universe - base;
                *w &= if keep == 64 { !0 } else { (1u64 << keep) - 1 };
            }
        }
        out
    }

    pub fn union(&self, other: &Self) -> Self {
        assert_eq!(self.universe, other.universe);
        let mut out = self.clone();
        for (w, o) in out.words.iter_mut().zip(&other.words) {
            *w |= o;
        }
        out
    }

    pub fn intersection(&self, other: &Self) -> Self {
        assert_eq!(self.universe, other.universe);
        let mut out = self.clone();
        for (w, o) in out.words.iter_mut().zip(&other.words) {
            *w &= o;
        }
        out
    }

    /// Iterate members in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.universe).filter(move |&v| self.contains(v))
    }
}

/// An undirected simple graph.
///
/// Invariants: every stored edge `(u, v)` satisfies `u < v < n`; the edge list
/// is strictly increasing in lexicographic order; adjacency sets mirror the
/// edge list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(u32, u32)>,
    adj: Vec<VertexSet>,
}

impl Graph {
    /// Build a graph on `n` vertices from an edge list.
    ///
    /// Edges may appear in any order and orientation; duplicates collapse.
    /// Self-loops and out-of-range endpoints are rejected.
    pub fn new<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut es: Vec<(u32, u32)> = Vec::new();
        for (a, b) in edges {
            if a == b {
                return Err(GraphError::SelfLoop { vertex: a });
            }
            if a >= n || b >= n {
                return Err(GraphError::EdgeOutOfRange { u: a, v: b, order: n });
            }
            let (u, v) = if a < b { (a, b) } else { (b, a) };
            es.push((u as u32, v as u32));
        }
        es.sort_unstable();
        es.dedup();
        let mut adj = vec![VertexSet::new(n); n];
        for &(u, v) in &es {
            adj[u as usize].insert(v as usize);
            adj[v as usize].insert(u as usize);
        }
        Ok(Graph { n, edges: es, adj })
    }

    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph::new(n, std::iter::empty()).expect("edgeless graph is always valid")
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.edges.len()
    }

    /// Sorted edge list with `u < v`.
    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].contains(v)
    }

    /// Neighbourhood of `v` as a vertex set.
    pub fn adjacency(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// The thorn graph: one new pendant vertex `n + v` attached to each
    /// vertex `v`, original edges kept. The result has `2n` vertices.
    pub fn thorn(&self) -> Graph {
        let n = self.n;
        let edges = self
            .edges
            .iter()
            .map(|&(u, v)| (u as usize, v as usize))
            .chain((0..n).map(|v| (v, n + v)));
        Graph::new(2 * n, edges).expect("thorn of a valid graph is valid")
    }

    /// Delete the vertices in `drop`, re-indexing the survivors in increasing
    /// order. Returns the subgraph together with the index map `new -> old`.
    pub fn remove_vertices(&self, drop: &VertexSet) -> (Graph, Vec<usize>) {
        assert_eq!(drop.universe(), self.n, "vertex set universe mismatch");
        let keep: Vec<usize> = (0..self.n).filter(|&v| !drop.contains(v)).collect();
        let mut new_of = vec![usize::MAX; self.n];
        for (new, &old) in keep.iter().enumerate() {
            new_of[old] = new;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(u, v)| !drop.contains(u as usize) && !drop.contains(v as usize))
            .map(|&(u, v)| (new_of[u as usize], new_of[v as usize]));
        let g = Graph::new(keep.len(), edges).expect("subgraph of a valid graph is valid");
        (g, keep)
    }

    /// Does `set` span no edge of the graph?
    pub fn is_independent(&self, set: &VertexSet) -> bool {
        assert_eq!(set.universe(), self.n, "vertex set universe mismatch");
        self.edges
            .iter()
            .all(|&(u, v)| !(set.contains(u as usize) && set.contains(v as usize)))
    }

    /// Is the graph connected? The empty graph counts as connected.
    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let mut seen = VertexSet::new(self.n);
        seen.insert(0);
        let mut stack = vec![0usize];
        while let Some(v) = stack.pop() {
            for u in self.adj[v].iter() {
                if !seen.contains(u) {
                    seen.insert(u);
                    stack.push(u);
                }
            }
        }
        seen.len() == self.n
    }

    /// Is the graph a tree (connected and acyclic)?
    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.edges.len() == self.n - 1 && self.is_connected()
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, m={})", self.n, self.edges.len())
    }
}

/// Parse the plain-text edge-list format.
///
/// The first non-comment, non-blank line holds the vertex count `n`; every
/// following such line holds one edge as two whitespace-separated indices in
/// `0..n`. Lines whose first non-blank character is `#` are comments.
pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut order: Option<usize> = None;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = trimmed.split_whitespace().collect();
        match order {
            None => {
                if tokens.len() != 1 {
                    return Err(ParseError::BadOrder {
                        line,
                        token: trimmed.to_string(),
                    });
                }
                let n: usize = tokens[0].parse().map_err(|_| ParseError::BadOrder {
                    line,
                    token: tokens[0].to_string(),
                })?;
                order = Some(n);
            }
            Some(n) => {
                if tokens.len() != 2 {
                    return Err(ParseError::WrongArity {
                        line,
                        found: tokens.len(),
                    });
                }
                let mut pair = [0usize; 2];
                for (slot, tok) in pair.iter_mut().zip(&tokens) {
                    *slot = tok.parse().map_err(|_| ParseError::BadToken {
                        line,
                        token: tok.to_string(),
                    })?;
                }
                let (u, v) = (pair[0], pair[1]);
                if u == v {
                    return Err(ParseError::SelfLoop { line, vertex: u });
                }
                for &x in &[u, v] {
                    if x >= n {
                        return Err(ParseError::VertexOutOfRange {
                            line,
                            index: x,
                            order: n,
                        });
                    }
                }
                edges.push((u, v));
            }
        }
    }
    let n = order.ok_or(ParseError::MissingOrder)?;
    Ok(Graph::new(n, edges).expect("all edges validated during parsing"))
}
