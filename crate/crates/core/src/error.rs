//! Error types shared across the library.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum GraphError {
    #[error("line {line}: expected two tokens, found {found}")]
    MalformedLine { line: usize, found: usize },

    #[error("input contains no edges")]
    EmptyGraph,

    #[error("graph is disconnected ({components} components); pass a connected graph or extract the largest component")]
    Disconnected { components: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("unknown dataset '{name}'; bundled datasets: {available}")]
    UnknownDataset { name: String, available: String },

    #[error("dataset '{name}' failed manifest verification: {reason}")]
    ManifestMismatch { name: String, reason: String },

    #[error("malformed manifest record at line {line}")]
    MalformedManifest { line: usize },

    #[error("power iteration did not converge after {iterations} iterations")]
    NonConvergence { iterations: usize },

    #[error("GML input: {0}")]
    Gml(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, GraphError>;
