//! Graph families used as the verification corpus: cycles, paths, stars,
//! the small cubic cages, seeded girth-constrained random graphs, and edge
//! subdivision.

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use thiserror::Error;

use crate::graph::{distances_from, girth, Girth, Graph, Vertex};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GeneratorError {
    #[error("{kind}: {message}")]
    Parameter { kind: &'static str, message: String },
    #[error("unknown cage {0:?}; expected petersen, heawood, mcgee or tutte_coxeter")]
    UnknownCage(String),
    #[error("cage {name} failed validation: {message}")]
    CageValidation { name: &'static str, message: String },
    #[error("malformed generator spec {spec:?}: {message}")]
    Spec { spec: String, message: String },
}

fn param_err(kind: &'static str, message: impl Into<String>) -> GeneratorError {
    GeneratorError::Parameter {
        kind,
        message: message.into(),
    }
}

pub fn gen_cycle(n: usize) -> Result<Graph, GeneratorError> {
    if n < 3 {
        return Err(param_err("cycle", format!("n = {n}, need n >= 3")));
    }
    Ok(Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).expect("cycle edges are simple"))
}

pub fn gen_path(n: usize) -> Result<Graph, GeneratorError> {
    if n < 1 {
        return Err(param_err("path", "need n >= 1"));
    }
    Ok(Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).expect("path edges are simple"))
}

/// `K_{1,k}` with center 0.
pub fn gen_star(k: usize) -> Result<Graph, GeneratorError> {
    if k < 1 {
        return Err(param_err("star", "need k >= 1"));
    }
    Ok(Graph::from_edges(k + 1, (1..=k).map(|i| (0, i))).expect("star edges are simple"))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Cage {
    Petersen,
    Heawood,
    McGee,
    TutteCoxeter,
}

impl Cage {
    pub const ALL: [Cage; 4] = [Cage::Petersen, Cage::Heawood, Cage::McGee, Cage::TutteCoxeter];

    pub fn name(self) -> &'static str {
        match self {
            Cage::Petersen => "petersen",
            Cage::Heawood => "heawood",
            Cage::McGee => "mcgee",
            Cage::TutteCoxeter => "tutte_coxeter",
        }
    }

    /// (n, m, girth); every cage here is 3-regular.
    pub fn expected(self) -> (usize, usize, usize) {
        match self {
            Cage::Petersen => (10, 15, 5),
            Cage::Heawood => (14, 21, 6),
            Cage::McGee => (24, 36, 7),
            Cage::TutteCoxeter => (30, 45, 8),
        }
    }

    fn edges(self) -> Vec<(Vertex, Vertex)> {
        match self {
            Cage::Petersen => (0..5)
                .flat_map(|i| [(i, (i + 1) % 5), (i, i + 5), (i + 5, (i + 2) % 5 + 5)])
                .collect(),
            Cage::Heawood => lcf(14, &[5, -5]),
            Cage::McGee => lcf(24, &[12, 7, -7]),
            Cage::TutteCoxeter => lcf(30, &[-13, -9, 7, -7, 9, 13]),
        }
    }
}

impl FromStr for Cage {
    type Err = GeneratorError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().replace('-', "_").as_str() {
            "petersen" => Ok(Cage::Petersen),
            "heawood" => Ok(Cage::Heawood),
            "mcgee" => Ok(Cage::McGee),
            "tutte_coxeter" | "tuttecoxeter" => Ok(Cage::TutteCoxeter),
            _ => Err(GeneratorError::UnknownCage(s.to_string())),
        }
    }
}

/// Hamiltonian cubic graph from LCF notation: a Hamiltonian cycle on `n`
/// vertices plus chords `i -- i + shifts[i mod len]`.
fn lcf(n: usize, shifts: &[i64]) -> Vec<(Vertex, Vertex)> {
    let mut edges: Vec<(Vertex, Vertex)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    for i in 0..n {
        let j = (i as i64 + shifts[i % shifts.len()]).rem_euclid(n as i64) as usize;
        if i < j {
            edges.push((i, j));
        }
    }
    edges
}

/// Builds an embedded cage and checks its vertex count, edge count, girth and
/// 3-regularity before returning it.
pub fn gen_cage(cage: Cage) -> Result<Graph, GeneratorError> {
    let name = cage.name();
    let (n, m, g) = cage.expected();
    let graph = Graph::from_edges(n, cage.edges()).map_err(|e| GeneratorError::CageValidation {
        name,
        message: e.to_string(),
    })?;
    let fail = |message: String| Err(GeneratorError::CageValidation { name, message });
    if graph.m() != m {
        return fail(format!("{} edges, expected {m}", graph.m()));
    }
    if let Some(v) = graph.vertices().find(|&v| graph.degree(v) != 3) {
        return fail(format!("vertex {v} has degree {}", graph.degree(v)));
    }
    let actual = girth(&graph);
    if actual != Girth::Finite(g) {
        return fail(format!("girth {actual}, expected {g}"));
    }
    Ok(graph)
}

pub fn gen_cage_by_name(name: &str) -> Result<Graph, GeneratorError> {
    gen_cage(name.parse()?)
}

/// SplitMix64. Each step adds `0x9E3779B97F4A7C15` to the state and returns
/// the state mixed by `z ^= z >> 30; z *= 0xBF58476D1CE4E5B9;
/// z ^= z >> 27; z *= 0x94D049BB133111EB; z ^= z >> 31` (wrapping).
#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        Self { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// `next_u64() % bound`; the modulo bias is accepted.
    pub fn below(&mut self, bound: u64) -> u64 {
        assert!(bound > 0, "empty range");
        self.next_u64() % bound
    }
}

/// Seeded connected graph with minimum degree 2 and girth exactly `g_min`.
///
/// Starts from the cycle `C_{g_min}`. Each round draws `u = below(n)` and
/// `v = below(n - 1)` (shifted up by one when `v >= u`), sets
/// `l_min = max(1, g_min - dist(u, v))`, draws the ear length
/// `l = l_min + below(g_min + 1)`, and joins `u` to `v` by a path of `l`
/// edges through `l - 1` fresh vertices. Any new cycle uses the ear and a
/// `u`-`v` path, so it has length at least `dist(u, v) + l >= g_min`.
/// Stops once the vertex count reaches `n_target`.
pub fn gen_random_girth(n_target: usize, g_min: usize, seed: u64) -> Result<Graph, GeneratorError> {
    if g_min < 3 {
        return Err(param_err("random_girth", format!("girth {g_min} below 3")));
    }
    if n_target < g_min {
        return Err(param_err(
            "random_girth",
            format!("n = {n_target} below girth {g_min}"),
        ));
    }
    let mut rng = SplitMix64::new(seed);
    let mut n = g_min;
    let mut edges: Vec<(Vertex, Vertex)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    let mut graph = Graph::from_edges(n, edges.iter().copied()).expect("seed cycle");

    while n < n_target {
        let u = rng.below(n as u64) as usize;
        let mut v = rng.below(n as u64 - 1) as usize;
        if v >= u {
            v += 1;
        }
        let dist = distances_from(&graph, u).expect("u in range")[v].expect("graph is connected");
        let l_min = g_min.saturating_sub(dist).max(1);
        let len = l_min + rng.below(g_min as u64 + 1) as usize;

        let mut prev = u;
        for _ in 1..len {
            edges.push((prev, n));
            prev = n;
            n += 1;
        }
        edges.push((prev, v));
        graph = Graph::from_edges(n, edges.iter().copied()).expect("ears keep the graph simple");
    }
    Ok(graph)
}

/// Replaces every edge by a path with `k` interior vertices. Edge number `e`
/// (in sorted order) `(u, v)` gets the fresh vertices `n + e*k .. n + (e+1)*k`
/// from `u` to `v`.
pub fn gen_subdivide(g: &Graph, k: usize) -> Result<Graph, GeneratorError> {
    if k < 1 {
        return Err(param_err("subdivide", "need k >= 1"));
    }
    let n = g.n();
    let mut edges = Vec::with_capacity((k + 1) * g.m());
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        let first = n + e * k;
        edges.push((u, first));
        for t in 1..k {
            edges.push((first + t - 1, first + t));
        }
        edges.push((first + k - 1, v));
    }
    Ok(Graph::from_edges(n + k * g.m(), edges).expect("subdivision is simple"))
}

/// Where a generator's base graph comes from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphSource {
    File(PathBuf),
    Spec(Box<GeneratorSpec>),
}

/// A textual generator description, e.g. `cycle:n=7`, `star:k=5`,
/// `cage:name=mcgee`, `random-girth:n=30,girth=7,seed=42`,
/// `subdivide:k=2,of=cage:name=petersen` or `subdivide:k=1,input=g.txt`.
/// `of=` consumes the rest of the string.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GeneratorSpec {
    Cycle { n: usize },
    Path { n: usize },
    Star { k: usize },
    Cage(Cage),
    RandomGirth { n: usize, girth: usize, seed: u64 },
    Subdivide { k: usize, base: GraphSource },
}

impl GeneratorSpec {
    pub fn generate(&self) -> Result<Graph, crate::Error> {
        Ok(match self {
            GeneratorSpec::Cycle { n } => gen_cycle(*n)?,
            GeneratorSpec::Path { n } => gen_path(*n)?,
            GeneratorSpec::Star { k } => gen_star(*k)?,
            GeneratorSpec::Cage(c) => gen_cage(*c)?,
            GeneratorSpec::RandomGirth { n, girth, seed } => gen_random_girth(*n, *girth, *seed)?,
            GeneratorSpec::Subdivide { k, base } => {
                let g = match base {
                    GraphSource::File(path) => crate::read_graph_file(path)?,
                    GraphSource::Spec(spec) => spec.generate()?,
                };
                gen_subdivide(&g, *k)?
            }
        })
    }
}

impl fmt::Display for GeneratorSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeneratorSpec::Cycle { n } => write!(f, "cycle:n={n}"),
            GeneratorSpec::Path { n } => write!(f, "path:n={n}"),
            GeneratorSpec::Star { k } => write!(f, "star:k={k}"),
            GeneratorSpec::Cage(c) => write!(f, "cage:name={}", c.name()),
            GeneratorSpec::RandomGirth { n, girth, seed } => {
                write!(f, "random-girth:n={n},girth={girth},seed={seed}")
            }
            GeneratorSpec::Subdivide { k, base } => match base {
                GraphSource::File(p) => write!(f, "subdivide:k={k},input={}", p.display()),
                GraphSource::Spec(s) => write!(f, "subdivide:k={k},of={s}"),
            },
        }
    }
}

impl FromStr for GeneratorSpec {
    type Err = GeneratorError;

    fn from_str(spec: &str) -> Result<Self, Self::Err> {
        let err = |message: &str| GeneratorError::Spec {
            spec: spec.to_string(),
            message: message.to_string(),
        };
        let (kind, mut rest) = spec.split_once(':').unwrap_or((spec, ""));
        let mut params: Vec<(&str, &str)> = Vec::new();
        let mut nested = None;
        while !rest.is_empty() {
            let (item, tail) = rest.split_once(',').unwrap_or((rest, ""));
            let (key, value) = item.split_once('=').ok_or_else(|| err("expected key=value"))?;
            if key == "of" {
                nested = Some(&rest[3..]);
                break;
            }
            params.push((key, value));
            rest = tail;
        }
        let get = |key: &str| params.iter().find(|(k, _)| *k == key).map(|(_, v)| *v);
        let num = |key: &str| -> Result<u64, GeneratorError> {
            get(key)
                .ok_or_else(|| err(&format!("missing {key}")))?
                .parse()
                .map_err(|_| err(&format!("{key} is not a non-negative integer")))
        };
        let known: &[&str] = match kind {
            "cycle" | "path" => &["n"],
            "star" => &["k"],
            "cage" => &["name"],
            "random-girth" | "random_girth" => &["n", "girth", "seed"],
            "subdivide" => &["k", "input"],
            _ => return Err(err("unknown generator kind")),
        };
        if let Some((k, _)) = params.iter().find(|(k, _)| !known.contains(k)) {
            return Err(err(&format!("unexpected parameter {k}")));
        }
        Ok(match kind {
            "cycle" => GeneratorSpec::Cycle {
                n: num("n")? as usize,
            },
            "path" => GeneratorSpec::Path {
                n: num("n")? as usize,
            },
            "star" => GeneratorSpec::Star {
                k: num("k")? as usize,
            },
            "cage" => GeneratorSpec::Cage(get("name").ok_or_else(|| err("missing name"))?.parse()?),
            "subdivide" => {
                let base = match (get("input"), nested) {
                    (Some(path), None) => GraphSource::File(PathBuf::from(path)),
                    (None, Some(inner)) => GraphSource::Spec(Box::new(inner.parse()?)),
                    _ => return Err(err("subdivide needs exactly one of input= or of=")),
                };
                GeneratorSpec::Subdivide {
                    k: num("k")? as usize,
                    base,
                }
            }
            _ => GeneratorSpec::RandomGirth {
                n: num("n")? as usize,
                girth: num("girth")? as usize,
                seed: num("seed")?,
            },
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{emit_edge_list, parse_edge_list, structure_summary};
    use proptest::prelude::*;

    #[test]
    fn family_examples() {
        let c7 = gen_cycle(7).unwrap();
        assert_eq!((c7.n(), c7.m(), girth(&c7)), (7, 7, Girth::Finite(7)));
        assert_eq!(structure_summary(&c7).min_degree, 2);
        let s = gen_star(5).unwrap();
        assert_eq!(s.degree(0), 5);
        assert!(structure_summary(&s).has_universal_vertex);
        assert_eq!(girth(&gen_path(4).unwrap()), Girth::Acyclic);
        assert!(gen_cycle(2).is_err());
        assert!(gen_path(0).is_err());
        assert!(gen_star(0).is_err());
    }

    #[test]
    fn cages_validate() {
        for cage in Cage::ALL {
            let g = gen_cage(cage).unwrap();
            let (n, m, gi) = cage.expected();
            assert_eq!((g.n(), g.m(), girth(&g)), (n, m, Girth::Finite(gi)), "{cage:?}");
            assert!(structure_summary(&g).connected);
        }
        assert!(matches!(
            gen_cage_by_name("dodecahedron"),
            Err(GeneratorError::UnknownCage(_))
        ));
        assert_eq!(gen_cage_by_name("Tutte-Coxeter").unwrap().n(), 30);
    }

    #[test]
    fn splitmix_reference_values() {
        // first outputs for seed 0 (published SplitMix64 test vector)
        let mut rng = SplitMix64::new(0);
        assert_eq!(rng.next_u64(), 0xE220_A839_7B1D_CDAF);
        assert_eq!(rng.next_u64(), 0x6E78_9E6A_A1B9_65F4);
        assert_eq!(rng.next_u64(), 0x06C4_5D18_8009_454F);
    }

    #[test]
    fn random_girth_seed_cycle_only() {
        assert_eq!(gen_random_girth(7, 7, 1).unwrap(), gen_cycle(7).unwrap());
    }

    #[test]
    fn random_girth_examples() {
        let g = gen_random_girth(30, 7, 42).unwrap();
        let s = structure_summary(&g);
        assert!(g.n() >= 30 && s.connected && s.min_degree >= 2);
        assert_eq!(girth(&g), Girth::Finite(7));
        assert_eq!(g, gen_random_girth(30, 7, 42).unwrap());

        let g = gen_random_girth(25, 12, 7).unwrap();
        assert_eq!(girth(&g), Girth::Finite(12));
        assert!(structure_summary(&g).min_degree >= 2);
    }

    #[test]
    fn random_girth_rejects_bad_parameters() {
        assert!(gen_random_girth(10, 2, 0).is_err());
        assert!(gen_random_girth(5, 7, 0).is_err());
    }

    #[test]
    fn subdivide_examples() {
        let p = gen_cage(Cage::Petersen).unwrap();
        let s = gen_subdivide(&p, 2).unwrap();
        assert_eq!((s.n(), s.m(), girth(&s)), (40, 45, Girth::Finite(15)));
        let c8 = gen_subdivide(&gen_cycle(4).unwrap(), 1).unwrap();
        assert_eq!(girth(&c8), Girth::Finite(8));
        assert_eq!(c8.n(), 8);
        assert!(c8.vertices().all(|v| c8.degree(v) == 2));
        assert!(structure_summary(&c8).connected);
        let tree = gen_subdivide(&gen_star(3).unwrap(), 3).unwrap();
        assert_eq!(girth(&tree), Girth::Acyclic);
        assert!(gen_subdivide(&p, 0).is_err());
    }

    #[test]
    fn spec_strings_round_trip() {
        for s in [
            "cycle:n=7",
            "path:n=4",
            "star:k=5",
            "cage:name=mcgee",
            "random-girth:n=30,girth=7,seed=42",
            "subdivide:k=2,of=cage:name=petersen",
            "subdivide:k=1,of=subdivide:k=1,of=cycle:n=3",
            "subdivide:k=1,input=some/file.txt",
        ] {
            let spec: GeneratorSpec = s.parse().unwrap();
            assert_eq!(spec.to_string(), s);
        }
        let g = "subdivide:k=2,of=cage:name=petersen"
            .parse::<GeneratorSpec>()
            .unwrap()
            .generate()
            .unwrap();
        assert_eq!((g.n(), g.m()), (40, 45));
        for bad in [
            "",
            "cycle",
            "cycle:n=x",
            "cage:name=k4",
            "wheel:n=5",
            "cycle:n=5,k=2",
            "subdivide:k=1",
        ] {
            assert!(bad.parse::<GeneratorSpec>().is_err(), "{bad}");
        }
    }

    proptest! {
        #[test]
        fn random_girth_properties(n in 3usize..60, g in 3usize..14, seed in any::<u64>()) {
            prop_assume!(n >= g);
            let graph = gen_random_girth(n, g, seed).unwrap();
            let s = structure_summary(&graph);
            prop_assert!(graph.n() >= n);
            prop_assert!(s.connected);
            prop_assert!(s.min_degree >= 2);
            prop_assert_eq!(girth(&graph), Girth::Finite(g));
            prop_assert_eq!(parse_edge_list(&emit_edge_list(&graph)).unwrap(), graph);
        }

        #[test]
        fn subdivision_multiplies_girth(n in 7usize..25, g in 3usize..7, seed in any::<u64>(), k in 1usize..4) {
            let base = gen_random_girth(n, g, seed).unwrap();
            let sub = gen_subdivide(&base, k).unwrap();
            prop_assert_eq!(sub.n(), base.n() + k * base.m());
            prop_assert_eq!(sub.m(), (k + 1) * base.m());
            prop_assert_eq!(girth(&sub), Girth::Finite((k + 1) * g));
        }
    }
}
