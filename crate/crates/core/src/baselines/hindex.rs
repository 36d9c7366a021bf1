//! H-index style centralities.

use crate::graph::Graph;
use crate::ranking::Ranking;

fn h_values(g: &Graph) -> Vec<u32> {
    (0..g.node_count())
        .map(|v| {
            let mut degs: Vec<usize> = g.neighbors(v).iter().map(|&u| g.degree(u)).collect();
            degs.sort_unstable_by(|a, b| b.cmp(a));
            let mut h = 0u32;
            for (idx, &d) in degs.iter().enumerate() {
                if d > idx {
                    h = (idx + 1) as u32;
                } else {
                    break;
                }
            }
            h
        })
        .collect()
}

/// h(v): the largest h such that at least h neighbors of v have degree >= h.
pub fn h_index(g: &Graph) -> Ranking {
    let scores = h_values(g).into_iter().map(|h| h as f64).collect();
    Ranking::from_scores("h", scores)
}

/// h(v) plus the h-indices of v's neighbors.
pub fn local_h_index(g: &Graph) -> Ranking {
    let h = h_values(g);
    let scores = (0..g.node_count())
        .map(|v| h[v] as f64 + g.neighbors(v).iter().map(|&u| h[u] as f64).sum::<f64>())
        .collect();
    Ranking::from_scores("lh", scores)
}
