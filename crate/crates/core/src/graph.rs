//! Simple undirected graphs on dense vertex ids, the edge-list text format,
//! and the structural queries the rest of the crate is built on.

use std::collections::VecDeque;
use std::fmt;

use serde::{Serialize, Serializer};
use thiserror::Error;

pub type Vertex = usize;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for graph with {n} vertices")]
    VertexOutOfRange { vertex: Vertex, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(Vertex, Vertex),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}: malformed header, expected \"<n> <m>\"")]
    MalformedHeader { line: usize },
    #[error("missing header line")]
    MissingHeader,
    #[error("line {line}: malformed edge line, expected \"<u> <v>\"")]
    MalformedEdge { line: usize },
    #[error("line {line}: endpoint {vertex} out of range [0, {n})")]
    EndpointOutOfRange { line: usize, vertex: Vertex, n: usize },
    #[error("line {line}: self-loop at vertex {vertex}")]
    SelfLoop { line: usize, vertex: Vertex },
    #[error("line {line}: duplicate edge {u} {v}")]
    DuplicateEdge { line: usize, u: Vertex, v: Vertex },
    #[error("header declares {expected} edges but {found} edge lines were read")]
    EdgeCountMismatch { expected: usize, found: usize },
}

/// A simple undirected graph with vertices `0..n`.
///
/// Edges are stored once, normalized to `(u, v)` with `u < v` and sorted
/// lexicographically; adjacency lists are sorted ascending.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
    adj: Vec<Vec<Vertex>>,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Self {
            n,
            edges: Vec::new(),
            adj: vec![Vec::new(); n],
        }
    }

    /// Builds a graph from an edge list, rejecting loops, duplicates and
    /// out-of-range endpoints. Edge orientation in the input does not matter.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut normalized = Vec::new();
        for (u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            normalized.push((u.min(v), u.max(v)));
        }
        normalized.sort_unstable();
        if let Some(w) = normalized.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateEdge(w[0].0, w[0].1));
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &normalized {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Self {
            n,
            edges: normalized,
            adj,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n && v < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.n
    }

    /// `N[v]` in ascending order.
    pub fn closed_neighborhood(&self, v: Vertex) -> Vec<Vertex> {
        let mut out = Vec::with_capacity(self.adj[v].len() + 1);
        let pos = self.adj[v].partition_point(|&w| w < v);
        out.extend_from_slice(&self.adj[v][..pos]);
        out.push(v);
        out.extend_from_slice(&self.adj[v][pos..]);
        out
    }

    pub fn check_vertex(&self, v: Vertex) -> Result<(), GraphError> {
        if v < self.n {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange { vertex: v, n: self.n })
        }
    }
}

/// Reads the edge-list format: a `<n> <m>` header followed by exactly `m`
/// `<u> <v>` lines. Lines starting with `#` and blank lines are skipped.
pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (header_line, header) = lines.next().ok_or(ParseError::MissingHeader)?;
    let (n, m) = parse_pair(header).ok_or(ParseError::MalformedHeader { line: header_line })?;

    let mut seen = std::collections::HashSet::with_capacity(m);
    let mut edges = Vec::with_capacity(m);
    for (line, body) in lines {
        let (u, v) = parse_pair(body).ok_or(ParseError::MalformedEdge { line })?;
        for vertex in [u, v] {
            if vertex >= n {
                return Err(ParseError::EndpointOutOfRange { line, vertex, n });
            }
        }
        if u == v {
            return Err(ParseError::SelfLoop { line, vertex: u });
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(ParseError::DuplicateEdge { line, u, v });
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(ParseError::EdgeCountMismatch {
            expected: m,
            found: edges.len(),
        });
    }
    Ok(Graph::from_edges(n, edges).expect("edges validated while parsing"))
}

fn parse_pair(line: &str) -> Option<(usize, usize)> {
    let mut tokens = line.split_whitespace();
    let a = tokens.next()?.parse().ok()?;
    let b = tokens.next()?.parse().ok()?;
    tokens.next().is_none().then_some((a, b))
}

/// Canonical edge-list text: header, then `u v` lines with `u < v` in
/// lexicographic order, newline-terminated.
pub fn emit_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n, g.m());
    for &(u, v) in &g.edges {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&emit_edge_list(self))
    }
}

/// Length of a shortest cycle. `Acyclic` sorts above every finite girth,
/// so "girth at least g" holds vacuously for forests.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Girth {
    Finite(usize),
    Acyclic,
}

impl Girth {
    pub fn finite(self) -> Option<usize> {
        match self {
            Girth::Finite(g) => Some(g),
            Girth::Acyclic => None,
        }
    }

    pub fn at_least(self, g: usize) -> bool {
        self >= Girth::Finite(g)
    }
}

impl fmt::Display for Girth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Girth::Finite(g) => write!(f, "{g}"),
            Girth::Acyclic => f.write_str("acyclic"),
        }
    }
}

impl Serialize for Girth {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            Girth::Finite(g) => serializer.serialize_u64(*g as u64),
            Girth::Acyclic => serializer.serialize_str("acyclic"),
        }
    }
}

/// Exact girth by a breadth-first search from every root.
///
/// From a root, every non-tree edge `(u, w)` closes a walk of length
/// `depth(u) + depth(w) + 1` that contains a cycle; over a root lying on a
/// shortest cycle the minimum of these equals the girth.
pub fn girth(g: &Graph) -> Girth {
    let n = g.n();
    let mut best = usize::MAX;
    let mut depth = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut queue = VecDeque::new();

    for root in g.vertices() {
        depth.fill(usize::MAX);
        depth[root] = 0;
        parent[root] = root;
        queue.clear();
        queue.push_back(root);
        while let Some(u) = queue.pop_front() {
            // nothing shorter can be closed from this depth on
            if 2 * depth[u] + 1 >= best {
                break;
            }
            for &w in g.neighbors(u) {
                if depth[w] == usize::MAX {
                    depth[w] = depth[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if parent[u] != w {
                    best = best.min(depth[u] + depth[w] + 1);
                }
            }
        }
    }

    if best == usize::MAX {
        Girth::Acyclic
    } else {
        Girth::Finite(best)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct StructureSummary {
    pub min_degree: usize,
    pub max_degree: usize,
    pub connected: bool,
    pub has_universal_vertex: bool,
}

/// Degree extremes, connectivity and whether some vertex has degree `n - 1`.
/// The graph with no vertices is reported as disconnected.
pub fn structure_summary(g: &Graph) -> StructureSummary {
    let degrees = g.vertices().map(|v| g.degree(v));
    let min_degree = degrees.clone().min().unwrap_or(0);
    let max_degree = degrees.clone().max().unwrap_or(0);
    let connected = g.n() > 0 && distances_from_unchecked(g, 0).iter().all(Option::is_some);
    let has_universal_vertex = g.n() > 0 && max_degree == g.n() - 1;
    StructureSummary {
        min_degree,
        max_degree,
        connected,
        has_universal_vertex,
    }
}

/// A star `K_{1,k}` (including `K_1` and `K_2`): a tree with a universal vertex.
pub fn is_star(g: &Graph) -> bool {
    let s = structure_summary(g);
    s.connected && s.has_universal_vertex && g.m() + 1 == g.n()
}

/// Hop distances from `source`; `None` marks unreachable vertices.
pub fn distances_from(g: &Graph, source: Vertex) -> Result<Vec<Option<usize>>, GraphError> {
    g.check_vertex(source)?;
    Ok(distances_from_unchecked(g, source))
}

fn distances_from_unchecked(g: &Graph, source: Vertex) -> Vec<Option<usize>> {
    let mut dist = vec![None; g.n()];
    let mut queue = VecDeque::from([source]);
    dist[source] = Some(0);
    while let Some(u) = queue.pop_front() {
        let next = dist[u].map(|d| d + 1);
        for &w in g.neighbors(u) {
            if dist[w].is_none() {
                dist[w] = next;
                queue.push_back(w);
            }
        }
    }
    dist
}
