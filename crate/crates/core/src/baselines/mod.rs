//! Comparison centralities: degree, k-shell and its neighborhood variant,
//! H-index variants, gravity models, shortest-path measures, and the two
//! spectral rankings.

mod gravity;
mod hindex;
mod kshell;
mod paths;
mod spectral;

pub use gravity::{gravity, Mass};
pub use hindex::{h_index, local_h_index};
pub use kshell::{kshell, kshell_indices, neighborhood_coreness};
pub use paths::{betweenness, closeness};
pub use spectral::{eigenvector, pagerank};

use crate::distance::DistanceMatrix;
use crate::error::{GraphError, Result};
use crate::graph::Graph;
use crate::ranking::Ranking;

/// The ranking methods exposed by name.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MethodId {
    Degree,
    KShell,
    NeighborhoodCoreness,
    HIndex,
    LocalHIndex,
    Gravity,
    ImprovedGravity,
    Betweenness,
    Closeness,
    Eigenvector,
    PageRank,
    Gsc,
}

impl MethodId {
    pub const ALL: [MethodId; 12] = [
        MethodId::Degree,
        MethodId::KShell,
        MethodId::NeighborhoodCoreness,
        MethodId::HIndex,
        MethodId::LocalHIndex,
        MethodId::Gravity,
        MethodId::ImprovedGravity,
        MethodId::Betweenness,
        MethodId::Closeness,
        MethodId::Eigenvector,
        MethodId::PageRank,
        MethodId::Gsc,
    ];

    /// Methods compared in the summary tables, in column order.
    pub const TABLE_COLUMNS: [MethodId; 11] = [
        MethodId::KShell,
        MethodId::NeighborhoodCoreness,
        MethodId::HIndex,
        MethodId::LocalHIndex,
        MethodId::Gravity,
        MethodId::ImprovedGravity,
        MethodId::Betweenness,
        MethodId::Closeness,
        MethodId::Eigenvector,
        MethodId::PageRank,
        MethodId::Gsc,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            MethodId::Degree => "degree",
            MethodId::KShell => "ks",
            MethodId::NeighborhoodCoreness => "cn",
            MethodId::HIndex => "h",
            MethodId::LocalHIndex => "lh",
            MethodId::Gravity => "gravity",
            MethodId::ImprovedGravity => "igc",
            MethodId::Betweenness => "bc",
            MethodId::Closeness => "cc",
            MethodId::Eigenvector => "ec",
            MethodId::PageRank => "pagerank",
            MethodId::Gsc => "gsc",
        }
    }

    /// Short column header used in report tables.
    pub fn column(self) -> &'static str {
        match self {
            MethodId::Degree => "DC",
            MethodId::KShell => "KS",
            MethodId::NeighborhoodCoreness => "cn",
            MethodId::HIndex => "H",
            MethodId::LocalHIndex => "LH",
            MethodId::Gravity => "G",
            MethodId::ImprovedGravity => "IGC",
            MethodId::Betweenness => "BC",
            MethodId::Closeness => "CC",
            MethodId::Eigenvector => "EC",
            MethodId::PageRank => "PA",
            MethodId::Gsc => "GSC",
        }
    }

    pub fn parse(tag: &str) -> Result<MethodId> {
        MethodId::ALL
            .into_iter()
            .find(|m| m.tag() == tag)
            .ok_or_else(|| {
                let valid: Vec<&str> = MethodId::ALL.iter().map(|m| m.tag()).collect();
                GraphError::InvalidParameter(format!(
                    "unknown method '{tag}'; valid: {}",
                    valid.join(", ")
                ))
            })
    }

    /// Score the graph with this method. `dm` is required by the methods
    /// that read pairwise distances.
    pub fn rank(self, g: &Graph, dm: &DistanceMatrix) -> Result<Ranking> {
        Ok(match self {
            MethodId::Degree => degree(g),
            MethodId::KShell => kshell(g),
            MethodId::NeighborhoodCoreness => neighborhood_coreness(g),
            MethodId::HIndex => h_index(g),
            MethodId::LocalHIndex => local_h_index(g),
            MethodId::Gravity => gravity(g, dm, 3, Mass::Degree),
            MethodId::ImprovedGravity => gravity(g, dm, 3, Mass::KShell),
            MethodId::Betweenness => betweenness(g),
            MethodId::Closeness => closeness(g, dm),
            MethodId::Eigenvector => eigenvector(g, 1e-10, 10_000)?,
            MethodId::PageRank => pagerank(g, 0.85, 1e-12),
            MethodId::Gsc => crate::gsc::gsc_scores(g, dm),
        })
    }
}

/// Degree centrality: the neighbor count.
pub fn degree(g: &Graph) -> Ranking {
    let scores = (0..g.node_count()).map(|v| g.degree(v) as f64).collect();
    Ranking::from_scores("degree", scores)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::datasets::load_dataset;

    #[test]
    fn method_tags_round_trip() {
        for m in MethodId::ALL {
            assert_eq!(MethodId::parse(m.tag()).unwrap(), m);
        }
        assert!(MethodId::parse("nope").is_err());
    }

    #[test]
    fn degree_examples() {
        let g = load_dataset("karate").unwrap();
        let r = degree(&g);
        assert_eq!(r.entries()[0].1, 17.0);

        let k5 = crate::graph::Graph::from_edges(
            5,
            &[(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)],
        )
        .unwrap();
        assert!(degree(&k5).entries().iter().all(|&(_, s)| s == 4.0));

        let ws = crate::graph::generate_watts_strogatz(12, 4, 0.0, 3).unwrap();
        assert!(degree(&ws).entries().iter().all(|&(_, s)| s == 4.0));
    }
}
