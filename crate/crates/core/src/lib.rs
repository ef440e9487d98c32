//! Lower bounds on the domination number of graphs without short cycles,
//! checked against exact minimum dominating sets.
//!
//! The crate pairs the girth-based lower bounds (and the partition argument
//! behind them) with an exact branch-and-bound solver, so every bound and
//! every structural claim of the partition can be checked on concrete graphs:
//!
//! - [`graph`]: graphs, the edge-list format, girth and structure queries.
//! - [`solver`]: domination checks, greedy, brute force and exact solvers.
//! - [`partition`]: the partition around a minimum dominating set and its validators.
//! - [`bounds`]: the lower bounds, the edge bound, and per-graph reports.
//! - [`generators`]: cycles, paths, stars, cages, random girth graphs, subdivision.
//! - [`verify`]: the corpus runner and the tight-instance search.

pub mod bounds;
pub mod generators;
pub mod graph;
pub mod partition;
pub mod solver;
pub mod verify;

use std::path::{Path, PathBuf};

use thiserror::Error;

pub use bounds::{evaluate_all, BoundReport};
pub use graph::{emit_edge_list, girth, parse_edge_list, Girth, Graph, Vertex};
pub use partition::{build_partition, validate_partition, Partition, PartitionOutcome};
pub use solver::{gamma_brute, gamma_exact, greedy_upper_bound, is_dominating, DominationCertificate};

#[derive(Debug, Error)]
pub enum Error {
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{}: {source}", path.display())]
    Parse {
        path: PathBuf,
        #[source]
        source: graph::ParseError,
    },
    #[error(transparent)]
    Graph(#[from] graph::GraphError),
    #[error(transparent)]
    Solver(#[from] solver::SolverError),
    #[error(transparent)]
    Partition(#[from] partition::PartitionError),
    #[error(transparent)]
    Bound(#[from] bounds::BoundError),
    #[error(transparent)]
    Generator(#[from] generators::GeneratorError),
    #[error("configuration: {0}")]
    Config(String),
    #[error("{0}")]
    Precondition(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub fn read_graph_file(path: impl AsRef<Path>) -> Result<Graph> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })?;
    parse_edge_list(&text).map_err(|source| Error::Parse {
        path: path.to_path_buf(),
        source,
    })
}
