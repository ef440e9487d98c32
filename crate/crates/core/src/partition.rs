//! Partitioning a graph around a minimum dominating set into subsets that are
//! not outer-dominated, plus the structural checks and the quotient graph
//! built on top of such a partition.
//!
//! [`build_partition`] runs the assignment and move procedure on any
//! dominating set. A move that minimality rules out (moving a member of the
//! set, or moving a vertex a second time) is turned into a concrete smaller
//! dominating set instead, so the procedure always terminates and a
//! non-minimum input is refuted with a checkable witness.

use std::collections::BTreeSet;
use std::fmt::{self, Write as _};

use serde::Serialize;
use thiserror::Error;

use crate::graph::{girth, Girth, Graph, GraphError, Vertex};
use crate::solver::{is_dominating, DominationCertificate, SolverError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PartitionError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("vertex {0} listed more than once")]
    DuplicateVertex(Vertex),
    #[error("the supplied set does not dominate the graph")]
    NotDominating,
    #[error("vertex set is empty")]
    EmptySet,
}

impl From<SolverError> for PartitionError {
    fn from(e: SolverError) -> Self {
        match e {
            SolverError::Graph(g) => PartitionError::Graph(g),
            _ => unreachable!("is_dominating only reports range errors"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Color {
    Red,
    Green,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Move {
    pub vertex: Vertex,
    pub from: usize,
    pub to: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Partition {
    /// Sorted members of each subset.
    pub subsets: Vec<Vec<Vertex>>,
    /// The dominating vertex each subset was seeded with.
    pub centers: Vec<Vertex>,
    pub colors: Vec<Color>,
    pub moves: Vec<Move>,
}

impl Partition {
    pub fn len(&self) -> usize {
        self.subsets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subsets.is_empty()
    }

    /// Subset index of each vertex; `None` if a vertex is in no subset.
    pub fn subset_of(&self, n: usize) -> Vec<Option<usize>> {
        let mut owner = vec![None; n];
        for (i, s) in self.subsets.iter().enumerate() {
            for &v in s {
                if v < n {
                    owner[v] = Some(i);
                }
            }
        }
        owner
    }

    fn greens(&self, i: usize) -> Vec<Vertex> {
        self.subsets[i]
            .iter()
            .copied()
            .filter(|&v| self.colors.get(v) == Some(&Color::Green))
            .collect()
    }

    /// One `i: center=<u> members=<ids> greens=<ids>` line per subset.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for (i, members) in self.subsets.iter().enumerate() {
            writeln!(
                out,
                "{i}: center={} members={} greens={}",
                self.centers[i],
                join_ids(members),
                join_ids(&self.greens(i))
            )
            .unwrap();
        }
        out
    }

    /// One `move v: i->j` line per move, in execution order.
    pub fn render_moves(&self) -> String {
        self.moves
            .iter()
            .map(|m| format!("move {}: {}->{}\n", m.vertex, m.from, m.to))
            .collect()
    }
}

fn join_ids(ids: &[Vertex]) -> String {
    ids.iter().map(Vertex::to_string).collect::<Vec<_>>().join(",")
}

/// Which forbidden move produced a [`SmallerSetCertificate`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Refutation {
    /// A seed vertex adjacent to every vertex of another subset: that
    /// subset's center is redundant.
    CenterCoversSubset { center: Vertex, from: usize, to: usize },
    /// A moved vertex adjacent to its whole subset and to every vertex of
    /// another subset replaces both centers.
    GreenCoversTwoSubsets { vertex: Vertex, from: usize, to: usize },
}

/// A dominating set strictly smaller than the set a partition was seeded with.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SmallerSetCertificate {
    pub certificate: DominationCertificate,
    pub original_size: usize,
    pub witness: Refutation,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum PartitionOutcome {
    Partition(Partition),
    Refuted(SmallerSetCertificate),
}

impl PartitionOutcome {
    pub fn partition(self) -> Option<Partition> {
        match self {
            PartitionOutcome::Partition(p) => Some(p),
            PartitionOutcome::Refuted(_) => None,
        }
    }
}

/// Partitions the vertices around the dominating set `dominating`.
///
/// Subset `i` is seeded with the `i`-th smallest vertex of the set. Every
/// other vertex joins the lowest-index subset whose center it neighbors.
/// Then, scanning vertices ascending and target subsets ascending, the first
/// vertex adjacent to every vertex of a subset other than its own is moved
/// there and colored green, and the scan restarts; it stops when no move
/// applies.
pub fn build_partition(g: &Graph, dominating: &[Vertex]) -> Result<PartitionOutcome, PartitionError> {
    let n = g.n();
    let mut centers = dominating.to_vec();
    centers.sort_unstable();
    if let Some(w) = centers.windows(2).find(|w| w[0] == w[1]) {
        return Err(PartitionError::DuplicateVertex(w[0]));
    }
    if !is_dominating(g, &centers)? {
        return Err(PartitionError::NotDominating);
    }

    let mut owner = vec![usize::MAX; n];
    let mut subsets: Vec<BTreeSet<Vertex>> = centers.iter().map(|&c| BTreeSet::from([c])).collect();
    for (i, &c) in centers.iter().enumerate() {
        owner[c] = i;
    }
    for (v, slot) in owner.iter_mut().enumerate() {
        if *slot != usize::MAX {
            continue;
        }
        let i = centers
            .iter()
            .position(|&c| g.has_edge(v, c))
            .expect("dominating set covers every vertex");
        *slot = i;
        subsets[i].insert(v);
    }

    let mut colors = vec![Color::Red; n];
    let mut moves = Vec::new();
    while let Some((v, to)) = find_move(g, &owner, &subsets) {
        let from = owner[v];
        if centers[from] == v {
            let removed = centers[to];
            let members = centers.iter().copied().filter(|&c| c != removed).collect();
            return refute(
                g,
                members,
                centers.len(),
                Refutation::CenterCoversSubset { center: v, from, to },
            );
        }
        if colors[v] == Color::Green {
            let (a, b) = (centers[from], centers[to]);
            let members = centers
                .iter()
                .copied()
                .filter(|&c| c != a && c != b)
                .chain([v])
                .collect();
            return refute(
                g,
                members,
                centers.len(),
                Refutation::GreenCoversTwoSubsets { vertex: v, from, to },
            );
        }
        subsets[from].remove(&v);
        subsets[to].insert(v);
        owner[v] = to;
        colors[v] = Color::Green;
        moves.push(Move { vertex: v, from, to });
    }

    Ok(PartitionOutcome::Partition(Partition {
        subsets: subsets.into_iter().map(|s| s.into_iter().collect()).collect(),
        centers,
        colors,
        moves,
    }))
}

fn find_move(g: &Graph, owner: &[usize], subsets: &[BTreeSet<Vertex>]) -> Option<(Vertex, usize)> {
    g.vertices().find_map(|v| {
        (0..subsets.len())
            .filter(|&j| j != owner[v])
            .find(|&j| subsets[j].iter().all(|&w| g.has_edge(v, w)))
            .map(|j| (v, j))
    })
}

fn refute(
    g: &Graph,
    members: Vec<Vertex>,
    original_size: usize,
    witness: Refutation,
) -> Result<PartitionOutcome, PartitionError> {
    debug_assert!(is_dominating(g, &members)?, "refutation set must dominate");
    Ok(PartitionOutcome::Refuted(SmallerSetCertificate {
        certificate: DominationCertificate::new(members, false),
        original_size,
        witness,
    }))
}

/// Lowest-id vertex outside `set` adjacent to every vertex of `set`.
pub fn is_outer_dominated(g: &Graph, set: &[Vertex]) -> Result<Option<Vertex>, PartitionError> {
    if set.is_empty() {
        return Err(PartitionError::EmptySet);
    }
    for &v in set {
        g.check_vertex(v)?;
    }
    Ok(g.vertices()
        .find(|&u| !set.contains(&u) && set.iter().all(|&v| g.has_edge(u, v))))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    VertexOutOfRange { subset: usize, vertex: Vertex },
    Overlap { vertex: Vertex, subsets: (usize, usize) },
    Uncovered { vertex: Vertex },
    CenterCount { expected: usize, found: usize },
    CenterNotInSubset { subset: usize, center: Vertex },
    ExtraCenter { subset: usize, center: Vertex },
    NotAdjacentToCenter { subset: usize, vertex: Vertex },
    OuterDominated { subset: usize, witness: Vertex },
    NotAStar { subset: usize, edge: (Vertex, Vertex) },
    MultipleIntraEdges { subsets: (usize, usize), count: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::VertexOutOfRange { subset, vertex } => {
                write!(f, "subset {subset}: vertex {vertex} out of range")
            }
            Violation::Overlap {
                vertex,
                subsets: (a, b),
            } => {
                write!(f, "vertex {vertex} in subsets {a} and {b}")
            }
            Violation::Uncovered { vertex } => write!(f, "vertex {vertex} in no subset"),
            Violation::CenterCount { expected, found } => {
                write!(f, "{found} centers for {expected} subsets")
            }
            Violation::CenterNotInSubset { subset, center } => {
                write!(f, "subset {subset}: center {center} not a member")
            }
            Violation::ExtraCenter { subset, center } => {
                write!(f, "subset {subset}: also contains center {center}")
            }
            Violation::NotAdjacentToCenter { subset, vertex } => {
                write!(f, "subset {subset}: vertex {vertex} not adjacent to center")
            }
            Violation::OuterDominated { subset, witness } => {
                write!(f, "subset {subset}: outer-dominated by {witness}")
            }
            Violation::NotAStar { subset, edge: (u, v) } => {
                write!(f, "subset {subset}: edge {u}-{v} between non-center members")
            }
            Violation::MultipleIntraEdges {
                subsets: (a, b),
                count,
            } => {
                write!(f, "subsets {a} and {b}: {count} edges between them")
            }
        }
    }
}

/// Checks every structural property a partition from [`build_partition`]
/// must have. Star structure is checked from girth 4 up, the single edge
/// between subset pairs from girth 7 up. Empty result means valid.
pub fn validate_partition(g: &Graph, p: &Partition) -> Vec<Violation> {
    let n = g.n();
    let mut out = Vec::new();

    let mut owner: Vec<Option<usize>> = vec![None; n];
    for (i, s) in p.subsets.iter().enumerate() {
        for &v in s {
            if v >= n {
                out.push(Violation::VertexOutOfRange { subset: i, vertex: v });
                continue;
            }
            match owner[v] {
                Some(j) => out.push(Violation::Overlap {
                    vertex: v,
                    subsets: (j, i),
                }),
                None => owner[v] = Some(i),
            }
        }
    }
    for (v, slot) in owner.iter().enumerate() {
        if slot.is_none() {
            out.push(Violation::Uncovered { vertex: v });
        }
    }
    if p.centers.len() != p.subsets.len() {
        out.push(Violation::CenterCount {
            expected: p.subsets.len(),
            found: p.centers.len(),
        });
        return out;
    }

    for (i, s) in p.subsets.iter().enumerate() {
        let c = p.centers[i];
        if !s.contains(&c) {
            out.push(Violation::CenterNotInSubset { subset: i, center: c });
        }
        for (j, &other) in p.centers.iter().enumerate() {
            if j != i && s.contains(&other) {
                out.push(Violation::ExtraCenter {
                    subset: i,
                    center: other,
                });
            }
        }
        for &v in s {
            if v != c && !g.has_edge(v, c) {
                out.push(Violation::NotAdjacentToCenter { subset: i, vertex: v });
            }
        }
        let in_range: Vec<Vertex> = s.iter().copied().filter(|&v| v < n).collect();
        if !in_range.is_empty() {
            if let Ok(Some(w)) = is_outer_dominated(g, &in_range) {
                out.push(Violation::OuterDominated {
                    subset: i,
                    witness: w,
                });
            }
        }
    }

    let gi = girth(g);
    if gi.at_least(4) {
        for &(u, v) in g.edges() {
            if let (Some(a), Some(b)) = (owner[u], owner[v]) {
                if a == b && u != p.centers[a] && v != p.centers[a] {
                    out.push(Violation::NotAStar {
                        subset: a,
                        edge: (u, v),
                    });
                }
            }
        }
    }
    if gi.at_least(7) {
        let mut counts = std::collections::BTreeMap::new();
        for &(u, v) in g.edges() {
            if let (Some(a), Some(b)) = (owner[u], owner[v]) {
                if a != b {
                    *counts.entry((a.min(b), a.max(b))).or_insert(0usize) += 1;
                }
            }
        }
        for (pair, count) in counts {
            if count > 1 {
                out.push(Violation::MultipleIntraEdges { subsets: pair, count });
            }
        }
    }
    out
}

/// Edges inside one subset (`inner`) and between subsets (`intra`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EdgeSplit {
    pub inner: Vec<(Vertex, Vertex)>,
    pub intra: Vec<(Vertex, Vertex)>,
}

pub fn split_edges(g: &Graph, p: &Partition) -> EdgeSplit {
    let owner = p.subset_of(g.n());
    let (inner, intra) = g
        .edges()
        .iter()
        .partition(|&&(u, v)| owner[u].is_some() && owner[u] == owner[v]);
    EdgeSplit { inner, intra }
}

/// The graph on subsets, joining two subsets when some edge runs between them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientGraph {
    pub graph: Graph,
}

impl QuotientGraph {
    pub fn degrees(&self) -> Vec<usize> {
        self.graph.vertices().map(|v| self.graph.degree(v)).collect()
    }

    pub fn edge_count(&self) -> usize {
        self.graph.m()
    }

    pub fn girth(&self) -> Girth {
        girth(&self.graph)
    }
}

pub fn quotient_graph(g: &Graph, p: &Partition) -> QuotientGraph {
    let owner = p.subset_of(g.n());
    let pairs: BTreeSet<(usize, usize)> = g
        .edges()
        .iter()
        .filter_map(|&(u, v)| match (owner[u], owner[v]) {
            (Some(a), Some(b)) if a != b => Some((a.min(b), a.max(b))),
            _ => None,
        })
        .collect();
    QuotientGraph {
        graph: Graph::from_edges(p.len(), pairs).expect("subset pairs are distinct and in range"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn star(k: usize) -> Graph {
        Graph::from_edges(k + 1, (1..=k).map(|i| (0, i))).unwrap()
    }

    fn partition(g: &Graph, d: &[Vertex]) -> Partition {
        build_partition(g, d).unwrap().partition().expect("not refuted")
    }

    #[test]
    fn c7_trace() {
        let g = cycle(7);
        let p = partition(&g, &[0, 3, 5]);
        assert_eq!(p.subsets, vec![vec![0, 1, 6], vec![2, 3], vec![4, 5]]);
        assert_eq!(p.centers, vec![0, 3, 5]);
        assert_eq!(
            p.moves,
            vec![Move {
                vertex: 4,
                from: 1,
                to: 2
            }]
        );
        let greens: Vec<_> = (0..7).filter(|&v| p.colors[v] == Color::Green).collect();
        assert_eq!(greens, vec![4]);
        assert!(validate_partition(&g, &p).is_empty());
        assert_eq!(
            p.render(),
            "0: center=0 members=0,1,6 greens=\n1: center=3 members=2,3 greens=\n2: center=5 members=4,5 greens=4\n"
        );
        assert_eq!(p.render_moves(), "move 4: 1->2\n");
    }

    #[test]
    fn star_is_one_subset() {
        let p = partition(&star(4), &[0]);
        assert_eq!(p.subsets, vec![vec![0, 1, 2, 3, 4]]);
        assert!(p.colors.iter().all(|&c| c == Color::Red));
        assert!(p.moves.is_empty());
    }

    #[test]
    fn c6_partition_is_valid() {
        let g = cycle(6);
        let p = partition(&g, &[0, 2, 4]);
        assert_eq!(p.len(), 3);
        assert!(validate_partition(&g, &p).is_empty());
        for (i, s) in p.subsets.iter().enumerate() {
            assert_eq!(
                s.iter().filter(|v| [0, 2, 4].contains(v)).count(),
                1,
                "subset {i}"
            );
        }
    }

    #[test]
    fn input_errors() {
        let g = cycle(7);
        assert_eq!(
            build_partition(&g, &[0, 0, 3, 5]),
            Err(PartitionError::DuplicateVertex(0))
        );
        assert_eq!(build_partition(&g, &[0]), Err(PartitionError::NotDominating));
        assert!(matches!(build_partition(&g, &[9]), Err(PartitionError::Graph(_))));
    }

    #[test]
    fn center_move_is_refuted() {
        // path 0-1-2 with {0, 1}: center 1 neighbors all of S0 = {0}
        let g = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        let out = build_partition(&g, &[0, 1]).unwrap();
        let PartitionOutcome::Refuted(cert) = out else {
            panic!("expected refutation, got {out:?}");
        };
        assert_eq!(cert.certificate.members(), &[1]);
        assert_eq!(cert.original_size, 2);
        assert_eq!(
            cert.witness,
            Refutation::CenterCoversSubset {
                center: 1,
                from: 1,
                to: 0
            }
        );
        assert!(is_dominating(&g, cert.certificate.members()).unwrap());
    }

    #[test]
    fn second_move_is_refuted() {
        // star with center 0 and leaves 1, 2, seeded with the leaves: 0 joins
        // S0, moves to S1 = {2}, then would move back to S0 = {1}
        let g = star(2);
        let out = build_partition(&g, &[1, 2]).unwrap();
        let PartitionOutcome::Refuted(cert) = out else {
            panic!("expected refutation, got {out:?}");
        };
        assert_eq!(cert.certificate.members(), &[0]);
        assert_eq!(
            cert.witness,
            Refutation::GreenCoversTwoSubsets {
                vertex: 0,
                from: 1,
                to: 0
            }
        );
        assert!(is_dominating(&g, cert.certificate.members()).unwrap());
    }

    #[test]
    fn refutation_after_a_legal_move() {
        // path 0-1-2-3-4 with {0, 2, 4}: 3 moves from S1 to S2 = {4}, then 1
        // moves from S0 to S1 = {2}, then 1 neighbors all of S0 = {0}, so
        // {1, 4} replaces {0, 2}
        let g = Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        let out = build_partition(&g, &[0, 2, 4]).unwrap();
        let PartitionOutcome::Refuted(cert) = out else {
            panic!("expected refutation, got {out:?}");
        };
        assert_eq!(cert.certificate.members(), &[1, 4]);
        assert_eq!(
            cert.witness,
            Refutation::GreenCoversTwoSubsets {
                vertex: 1,
                from: 1,
                to: 0
            }
        );
        assert!(is_dominating(&g, cert.certificate.members()).unwrap());
    }

    #[test]
    fn outer_domination_examples() {
        assert_eq!(is_outer_dominated(&cycle(7), &[2, 3]).unwrap(), None);
        assert_eq!(is_outer_dominated(&star(3), &[1, 2, 3]).unwrap(), Some(0));
        let all: Vec<_> = (0..7).collect();
        assert_eq!(is_outer_dominated(&cycle(7), &all).unwrap(), None);
        assert_eq!(is_outer_dominated(&cycle(7), &[]), Err(PartitionError::EmptySet));
    }

    #[test]
    fn hand_built_c7_partition() {
        // {0,1} has common outside neighbor? N(0) ∩ N(1) outside = none.
        // {2,3}: none. {4,5,6}: none. 6 neighbors its center 5.
        let p = Partition {
            subsets: vec![vec![0, 1], vec![2, 3], vec![4, 5, 6]],
            centers: vec![0, 3, 5],
            colors: vec![Color::Red; 7],
            moves: vec![],
        };
        let g = cycle(7);
        let expected: Vec<Violation> = brute_force_violations(&g, &p);
        assert_eq!(validate_partition(&g, &p), expected);
        assert!(expected.is_empty());
    }

    /// Independent recomputation of the center and outer-domination checks.
    fn brute_force_violations(g: &Graph, p: &Partition) -> Vec<Violation> {
        let mut out = Vec::new();
        for (i, s) in p.subsets.iter().enumerate() {
            for u in 0..g.n() {
                if !s.contains(&u) && s.iter().all(|&v| g.neighbors(u).contains(&v)) {
                    out.push(Violation::OuterDominated {
                        subset: i,
                        witness: u,
                    });
                    break;
                }
            }
        }
        out
    }

    #[test]
    fn overlap_and_cover_violations() {
        let g = cycle(7);
        let p = Partition {
            subsets: vec![vec![0, 1, 6], vec![0, 1, 6], vec![4, 5]],
            centers: vec![0, 3, 5],
            colors: vec![Color::Red; 7],
            moves: vec![],
        };
        let v = validate_partition(&g, &p);
        assert!(v.contains(&Violation::Overlap {
            vertex: 0,
            subsets: (0, 1)
        }));
        assert!(v.contains(&Violation::Uncovered { vertex: 2 }));
        assert!(v.contains(&Violation::CenterNotInSubset { subset: 1, center: 3 }));
    }

    #[test]
    fn star_and_pair_violations() {
        // C8 split as {0,1,2}, {3,4,5,6,7}? use a partition whose subset
        // holds an edge between two leaves.
        let g = cycle(8);
        let p = Partition {
            subsets: vec![vec![0, 1, 2, 7], vec![3, 4, 5, 6]],
            centers: vec![0, 4],
            colors: vec![Color::Red; 8],
            moves: vec![],
        };
        let v = validate_partition(&g, &p);
        assert!(v.contains(&Violation::NotAStar {
            subset: 0,
            edge: (1, 2)
        }));
        assert!(v.contains(&Violation::NotAdjacentToCenter { subset: 0, vertex: 2 }));
        assert!(v.contains(&Violation::MultipleIntraEdges {
            subsets: (0, 1),
            count: 2
        }));
    }

    #[test]
    fn c7_edge_split_and_quotient() {
        let g = cycle(7);
        let p = partition(&g, &[0, 3, 5]);
        let s = split_edges(&g, &p);
        assert_eq!(s.inner, vec![(0, 1), (0, 6), (2, 3), (4, 5)]);
        assert_eq!(s.intra, vec![(1, 2), (3, 4), (5, 6)]);
        let h = quotient_graph(&g, &p);
        assert_eq!(h.graph, cycle(3));
        assert_eq!(h.edge_count(), 3);
        assert_eq!(h.degrees(), vec![2, 2, 2]);
    }

    #[test]
    fn c12_quotient_is_c4() {
        let g = cycle(12);
        let p = partition(&g, &[0, 3, 6, 9]);
        assert!(validate_partition(&g, &p).is_empty());
        let h = quotient_graph(&g, &p);
        assert_eq!(h.edge_count(), 4);
        assert_eq!(h.girth(), Girth::Finite(4));
        assert_eq!(h.degrees(), vec![2; 4]);
    }

    #[test]
    fn degenerate_splits() {
        let g = cycle(5);
        let whole = Partition {
            subsets: vec![(0..5).collect()],
            centers: vec![0],
            colors: vec![Color::Red; 5],
            moves: vec![],
        };
        assert_eq!(split_edges(&g, &whole).inner.len(), 5);
        assert_eq!(quotient_graph(&g, &whole).edge_count(), 0);
        let singles = Partition {
            subsets: (0..5).map(|v| vec![v]).collect(),
            centers: (0..5).collect(),
            colors: vec![Color::Red; 5],
            moves: vec![],
        };
        assert_eq!(split_edges(&g, &singles).intra.len(), 5);
    }
}
