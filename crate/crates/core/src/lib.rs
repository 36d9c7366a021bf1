//! Node-influence ranking for undirected, unweighted networks.
//!
//! The crate computes a global similarity centrality from shortest-path
//! distance distributions, a set of standard comparison centralities, a
//! seeded Monte-Carlo SIR simulator that measures each node's real spreading
//! capability, and the metrics used to score rankings against it
//! (monotonicity, Kendall correlation, CDF resolution, top-k agreement).
//! Classic benchmark networks ship with the crate behind a verified
//! manifest.

pub mod baselines;
pub mod datasets;
pub mod distance;
pub mod error;
pub mod eval;
pub mod graph;
pub mod gsc;
pub mod io;
pub mod ranking;
pub mod sir;
pub mod stats;

pub use error::{GraphError, Result};
pub use graph::{generate_watts_strogatz, Graph, NodeId};
