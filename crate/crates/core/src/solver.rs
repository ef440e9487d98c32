//! Dominating sets: checking, a greedy upper bound, a brute-force oracle and
//! the branch-and-bound exact solver.

use serde::Serialize;
use thiserror::Error;

use crate::bounds;
use crate::graph::{Graph, GraphError, Vertex};

/// Largest vertex count the brute-force enumeration accepts by default.
pub const BRUTE_FORCE_MAX_VERTICES: usize = 20;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SolverError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("brute force limited to {limit} vertices, graph has {n}")]
    GuardExceeded { n: usize, limit: usize },
    #[error("no dominating set with at most {cap} vertices")]
    NoSetWithinCap { cap: usize },
    #[error("size cap must be at least 1")]
    ZeroCap,
}

/// A dominating set. `verified_minimum` is only ever set by the exact solvers.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DominationCertificate {
    members: Vec<Vertex>,
    verified_minimum: bool,
}

impl DominationCertificate {
    pub(crate) fn new(mut members: Vec<Vertex>, verified_minimum: bool) -> Self {
        members.sort_unstable();
        members.dedup();
        Self {
            members,
            verified_minimum,
        }
    }

    pub fn members(&self) -> &[Vertex] {
        &self.members
    }

    pub fn size(&self) -> usize {
        self.members.len()
    }

    pub fn verified_minimum(&self) -> bool {
        self.verified_minimum
    }
}

/// True iff every vertex outside `set` has a neighbor in it.
pub fn is_dominating(g: &Graph, set: &[Vertex]) -> Result<bool, SolverError> {
    let mut dominated = vec![false; g.n()];
    for &u in set {
        g.check_vertex(u)?;
        dominated[u] = true;
        for &w in g.neighbors(u) {
            dominated[w] = true;
        }
    }
    Ok(dominated.into_iter().all(|d| d))
}

/// Repeatedly takes the vertex covering the most undominated vertices,
/// lowest id on ties.
pub fn greedy_upper_bound(g: &Graph) -> DominationCertificate {
    let n = g.n();
    let mut dominated = vec![false; n];
    let mut remaining = n;
    let mut chosen = Vec::new();
    while remaining > 0 {
        let gain = |v: Vertex| {
            usize::from(!dominated[v]) + g.neighbors(v).iter().filter(|&&w| !dominated[w]).count()
        };
        let mut best = 0;
        let mut best_gain = gain(0);
        for v in 1..n {
            let c = gain(v);
            if c > best_gain {
                best = v;
                best_gain = c;
            }
        }
        chosen.push(best);
        for w in g.closed_neighborhood(best) {
            if !dominated[w] {
                dominated[w] = true;
                remaining -= 1;
            }
        }
    }
    DominationCertificate::new(chosen, false)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BruteForceOptions {
    pub max_vertices: usize,
    /// Largest cardinality tried; defaults to the greedy solution's size.
    pub size_cap: Option<usize>,
}

impl Default for BruteForceOptions {
    fn default() -> Self {
        Self {
            max_vertices: BRUTE_FORCE_MAX_VERTICES,
            size_cap: None,
        }
    }
}

/// Enumerates subsets by increasing size, lexicographically within a size,
/// and returns the first dominating one.
pub fn gamma_brute(g: &Graph, options: &BruteForceOptions) -> Result<DominationCertificate, SolverError> {
    let n = g.n();
    if n > options.max_vertices || n > 63 {
        return Err(SolverError::GuardExceeded {
            n,
            limit: options.max_vertices.min(63),
        });
    }
    let cap = match options.size_cap {
        Some(0) => return Err(SolverError::ZeroCap),
        Some(c) => c,
        None => greedy_upper_bound(g).size().max(1),
    };
    if n == 0 {
        return Ok(DominationCertificate::new(Vec::new(), true));
    }

    let full: u64 = (1u64 << n) - 1;
    let closed: Vec<u64> = g
        .vertices()
        .map(|v| g.neighbors(v).iter().fold(1u64 << v, |acc, &w| acc | 1u64 << w))
        .collect();

    for k in 1..=cap.min(n) {
        let mut combo: Vec<usize> = (0..k).collect();
        loop {
            let covered = combo.iter().fold(0u64, |acc, &v| acc | closed[v]);
            if covered == full {
                return Ok(DominationCertificate::new(combo, true));
            }
            // next k-combination of 0..n in lexicographic order
            let Some(i) = (0..k).rev().find(|&i| combo[i] < n - k + i) else {
                break;
            };
            combo[i] += 1;
            for j in i + 1..k {
                combo[j] = combo[j - 1] + 1;
            }
        }
    }
    Err(SolverError::NoSetWithinCap { cap })
}

/// Counters from one branch-and-bound run.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SearchStats {
    pub nodes: u64,
    pub root_lower_bound: usize,
    pub initial_upper_bound: usize,
}

/// Exact minimum dominating set by branch and bound.
pub fn gamma_exact(g: &Graph) -> DominationCertificate {
    gamma_exact_with_stats(g).0
}

/// Branches on the closed neighborhood of the lowest-id undominated vertex
/// and prunes with `ceil(undominated / (max_degree + 1))`. The applicable
/// whole-graph lower bounds only cap the search at the root: once the
/// incumbent meets them, it is optimal.
pub fn gamma_exact_with_stats(g: &Graph) -> (DominationCertificate, SearchStats) {
    let greedy = greedy_upper_bound(g);
    let root_lb = bounds::root_lower_bound(g);
    let mut stats = SearchStats {
        nodes: 0,
        root_lower_bound: root_lb,
        initial_upper_bound: greedy.size(),
    };
    if greedy.size() <= root_lb {
        return (DominationCertificate::new(greedy.members, true), stats);
    }

    let mut search = Search {
        closed: g.vertices().map(|v| g.closed_neighborhood(v)).collect(),
        cover: vec![0; g.n()],
        undominated: g.n(),
        max_closed: g.vertices().map(|v| g.degree(v) + 1).max().unwrap_or(1),
        chosen: Vec::new(),
        best: greedy.members,
        root_lb,
        nodes: 0,
    };
    search.run();
    stats.nodes = search.nodes;
    (DominationCertificate::new(search.best, true), stats)
}

struct Search {
    closed: Vec<Vec<Vertex>>,
    /// Number of chosen vertices in each closed neighborhood.
    cover: Vec<u32>,
    undominated: usize,
    max_closed: usize,
    chosen: Vec<Vertex>,
    best: Vec<Vertex>,
    root_lb: usize,
    nodes: u64,
}

impl Search {
    /// Returns true once the incumbent is known to be optimal.
    fn run(&mut self) -> bool {
        self.nodes += 1;
        if self.undominated == 0 {
            if self.chosen.len() < self.best.len() {
                self.best = self.chosen.clone();
            }
            return self.best.len() <= self.root_lb;
        }
        let lower = self.undominated.div_ceil(self.max_closed);
        if self.chosen.len() + lower >= self.best.len() {
            return false;
        }
        let v = self
            .cover
            .iter()
            .position(|&c| c == 0)
            .expect("undominated count is positive");
        for idx in 0..self.closed[v].len() {
            let w = self.closed[v][idx];
            self.add(w);
            let done = self.run();
            self.remove(w);
            if done {
                return true;
            }
        }
        false
    }

    fn add(&mut self, w: Vertex) {
        self.chosen.push(w);
        for &x in &self.closed[w] {
            if self.cover[x] == 0 {
                self.undominated -= 1;
            }
            self.cover[x] += 1;
        }
    }

    fn remove(&mut self, w: Vertex) {
        self.chosen.pop();
        for &x in &self.closed[w] {
            self.cover[x] -= 1;
            if self.cover[x] == 0 {
                self.undominated += 1;
            }
        }
    }
}
