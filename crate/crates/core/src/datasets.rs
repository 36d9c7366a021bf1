//! Bundled benchmark networks, embedded at compile time and verified against
//! the manifest on every load.
//!
//! `karate` is the canonical Zachary club network. `dolphins` is a
//! reconstruction of the classic Doubtful Sound social network; its fine
//! structure may deviate slightly from the canonical file (see README).
//! `polbooks`, `football`, `jazz`, `usair`, `email` and `yeast` are
//! size-matched stand-in graphs, and `lfr2000` is an externally generated
//! LFR benchmark instance. `ws` is not a file: it is produced by the
//! small-world generator with fixed parameters.

use crate::error::{GraphError, Result};
use crate::graph::{generate_watts_strogatz, Graph};
use crate::io::{parse_edge_list, parse_manifest, sha256_hex};

const MANIFEST: &str = include_str!("../data/manifest.tsv");

const FILES: &[(&str, &str)] = &[
    ("karate", include_str!("../data/karate.txt")),
    ("dolphins", include_str!("../data/dolphins.txt")),
    ("polbooks", include_str!("../data/polbooks.txt")),
    ("football", include_str!("../data/football.txt")),
    ("jazz", include_str!("../data/jazz.txt")),
    ("usair", include_str!("../data/usair.txt")),
    ("email", include_str!("../data/email.txt")),
    ("lfr2000", include_str!("../data/lfr2000.txt")),
    ("yeast", include_str!("../data/yeast.txt")),
];

/// Seed for the `ws` dataset so that every run sees the same instance.
pub const WS_SEED: u64 = 20_000_606;
pub const WS_NODES: usize = 2000;
pub const WS_NEIGHBORS: usize = 6;
pub const WS_REWIRE_P: f64 = 0.1;

/// Dataset names accepted by `load_dataset`, in reporting order.
pub fn dataset_names() -> Vec<&'static str> {
    let mut names: Vec<&str> = FILES.iter().map(|(n, _)| *n).collect();
    names.insert(7, "ws"); // between email and lfr2000, matching the reporting order
    names
}

/// Per-dataset infection rate used for simulation tables (the β column).
pub fn dataset_default_beta(name: &str) -> Option<f64> {
    Some(match name {
        "karate" => 0.13,
        "dolphins" => 0.15,
        "polbooks" => 0.09,
        "football" => 0.10,
        "jazz" => 0.03,
        "usair" => 0.03,
        "email" => 0.06,
        "ws" => 0.16,
        "lfr2000" => 0.05,
        "yeast" => 0.07,
        _ => return None,
    })
}

fn unknown(name: &str) -> GraphError {
    GraphError::UnknownDataset {
        name: name.to_string(),
        available: dataset_names().join(", "),
    }
}

/// Load a bundled dataset by name, verifying node/edge counts and the
/// content digest recorded in the manifest.
pub fn load_dataset(name: &str) -> Result<Graph> {
    if name == "ws" {
        return generate_watts_strogatz(WS_NODES, WS_NEIGHBORS, WS_REWIRE_P, WS_SEED);
    }
    let (_, text) = FILES
        .iter()
        .find(|(n, _)| *n == name)
        .ok_or_else(|| unknown(name))?;
    let entry = parse_manifest(MANIFEST)?
        .into_iter()
        .find(|e| e.name == name)
        .ok_or_else(|| GraphError::ManifestMismatch {
            name: name.to_string(),
            reason: "no manifest record".into(),
        })?;

    let digest = sha256_hex(text.as_bytes());
    if digest != entry.sha256 {
        return Err(GraphError::ManifestMismatch {
            name: name.to_string(),
            reason: format!("digest {digest} != manifest {}", entry.sha256),
        });
    }
    let (graph, _) = parse_edge_list(text.as_bytes())?;
    if graph.node_count() != entry.nodes || graph.edge_count() != entry.edges {
        return Err(GraphError::ManifestMismatch {
            name: name.to_string(),
            reason: format!(
                "loaded {}x{} but manifest says {}x{}",
                graph.node_count(),
                graph.edge_count(),
                entry.nodes,
                entry.edges
            ),
        });
    }
    Ok(graph)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn karate_counts() {
        let g = load_dataset("karate").unwrap();
        assert_eq!(g.node_count(), 34);
        assert_eq!(g.edge_count(), 78);
    }

    #[test]
    fn karate_is_connected() {
        let g = load_dataset("karate").unwrap();
        assert_eq!(crate::distance::connected_components(&g).len(), 1);
    }

    #[test]
    fn unknown_dataset_lists_names() {
        match load_dataset("nope") {
            Err(GraphError::UnknownDataset { available, .. }) => {
                assert!(available.contains("karate"));
                assert!(available.contains("ws"));
            }
            other => panic!("unexpected: {other:?}"),
        }
    }

    #[test]
    fn all_bundled_datasets_verify_and_connect() {
        for name in dataset_names() {
            let g = load_dataset(name).unwrap_or_else(|e| panic!("{name}: {e}"));
            assert_eq!(
                crate::distance::connected_components(&g).len(),
                1,
                "{name} must be connected"
            );
            assert!(dataset_default_beta(name).is_some());
        }
    }
}
