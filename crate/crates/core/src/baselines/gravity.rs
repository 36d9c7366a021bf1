//! Gravity-model centralities: mass times mass over squared distance, summed
//! over all nodes within a truncation radius.

use crate::distance::DistanceMatrix;
use crate::graph::Graph;
use crate::ranking::Ranking;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mass {
    Degree,
    KShell,
}

pub fn gravity(g: &Graph, dm: &DistanceMatrix, radius: u32, mass: Mass) -> Ranking {
    assert!(radius >= 1, "truncation radius must be at least 1");
    let n = g.node_count();
    let m: Vec<f64> = match mass {
        Mass::Degree => (0..n).map(|v| g.degree(v) as f64).collect(),
        Mass::KShell => super::kshell_indices(g).into_iter().map(|s| s as f64).collect(),
    };
    let tag = match mass {
        Mass::Degree => "gravity",
        Mass::KShell => "igc",
    };
    let scores = (0..n)
        .map(|i| {
            dm.row(i)
                .iter()
                .enumerate()
                .filter(|&(j, &d)| j != i && d as u32 >= 1 && d as u32 <= radius)
                .map(|(j, &d)| m[i] * m[j] / (d as f64 * d as f64))
                .sum()
        })
        .collect();
    Ranking::from_scores(tag, scores)
}
