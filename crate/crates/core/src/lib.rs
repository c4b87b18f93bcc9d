//! Exact graph pebbling.
//!
//! * [`graph`]: simple graphs, distances, Menger-style disjoint paths and
//!   separators, brute-force isomorphism and enumeration.
//! * [`generators`]: named graphs, path blow-ups and seeded `G(n, p)`.
//! * [`solver`]: pebbling moves and the exact reachability search.
//! * [`number`]: pebbling numbers, Class 0 decisions, small-graph classification.
//! * [`proof`]: separator and path-family audits of unreachable distributions.
//! * [`threshold`]: Monte Carlo sweeps of graph properties over `G(n, p)`.

pub mod error;
pub mod generators;
pub mod graph;
pub mod number;
pub mod proof;
pub mod solver;
pub mod threshold;

pub use error::{Error, Result};
pub use graph::{Graph, PathInGraph};
pub use solver::{Distribution, Move, MoveCertificate};
