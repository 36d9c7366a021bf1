//! Power-iteration rankings: eigenvector centrality and PageRank.

use crate::error::{GraphError, Result};
use crate::graph::Graph;
use crate::ranking::Ranking;

/// Principal eigenvector of the adjacency matrix, L2-normalized and
/// entrywise non-negative. Converges when the max entry difference between
/// successive iterates drops below `tol`.
///
/// On bipartite graphs plain power iteration oscillates with period two;
/// when that is detected the two iterates are averaged once and iteration
/// continues, which lands the vector in the dominant eigenspace.
pub fn eigenvector(g: &Graph, tol: f64, max_iter: usize) -> Result<Ranking> {
    let n = g.node_count();
    let mut x = vec![1.0 / (n as f64).sqrt(); n];
    let mut prev = x.clone();

    for _ in 0..max_iter {
        let mut next = vec![0.0f64; n];
        for v in 0..n {
            let mut acc = 0.0;
            for &u in g.neighbors(v) {
                acc += x[u];
            }
            next[v] = acc;
        }
        normalize_l2(&mut next);

        let step = max_diff(&next, &x);
        if step < tol {
            return Ok(Ranking::from_scores("ec", next));
        }
        // period-2 oscillation: next is (almost) prev while not (almost) x
        if max_diff(&next, &prev) < tol {
            for v in 0..n {
                next[v] = 0.5 * (next[v] + x[v]);
            }
            normalize_l2(&mut next);
        }
        prev = std::mem::replace(&mut x, next);
    }
    Err(GraphError::NonConvergence {
        iterations: max_iter,
    })
}

/// PageRank over the undirected graph (every edge walked in both
/// directions), damped power iteration until the L1 residual is below `tol`.
/// Scores sum to 1.
pub fn pagerank(g: &Graph, damping: f64, tol: f64) -> Ranking {
    let n = g.node_count();
    let uniform = 1.0 / n as f64;
    let mut x = vec![uniform; n];
    let degrees: Vec<f64> = (0..n).map(|v| g.degree(v) as f64).collect();

    loop {
        let mut dangling = 0.0;
        for v in 0..n {
            if degrees[v] == 0.0 {
                dangling += x[v];
            }
        }
        let base = (1.0 - damping) * uniform + damping * dangling * uniform;
        let mut next = vec![base; n];
        for v in 0..n {
            if degrees[v] > 0.0 {
                let share = damping * x[v] / degrees[v];
                for &u in g.neighbors(v) {
                    next[u] += share;
                }
            }
        }
        let residual: f64 = next.iter().zip(&x).map(|(a, b)| (a - b).abs()).sum();
        x = next;
        if residual < tol {
            break;
        }
    }
    Ranking::from_scores("pagerank", x)
}

fn normalize_l2(v: &mut [f64]) {
    let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
    if norm > 0.0 {
        for x in v.iter_mut() {
            *x /= norm;
        }
    }
}

fn max_diff(a: &[f64], b: &[f64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).abs())
        .fold(0.0, f64::max)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::datasets::load_dataset;
    use crate::graph::Graph;
    use approx::assert_abs_diff_eq;

    #[test]
    fn complete_k4_is_uniform() {
        let edges = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
        let g = Graph::from_edges(4, &edges).unwrap();
        let scores = eigenvector(&g, 1e-10, 10_000).unwrap().scores_by_node();
        for s in scores {
            assert_abs_diff_eq!(s, 0.5, epsilon = 1e-8);
        }
    }

    #[test]
    fn star_center_leaf_ratio_is_sqrt_n_minus_1() {
        // bipartite, so this also exercises the oscillation damping
        let edges: Vec<_> = (1..5).map(|v| (0, v)).collect();
        let g = Graph::from_edges(5, &edges).unwrap();
        let scores = eigenvector(&g, 1e-10, 10_000).unwrap().scores_by_node();
        assert_abs_diff_eq!(scores[0] / scores[1], 2.0, epsilon = 1e-6);
    }

    #[test]
    fn eigenvector_unit_norm_and_karate_argmax() {
        let g = load_dataset("karate").unwrap();
        let r = eigenvector(&g, 1e-10, 10_000).unwrap();
        let norm: f64 = r.entries().iter().map(|&(_, s)| s * s).sum();
        assert_abs_diff_eq!(norm, 1.0, epsilon = 1e-9);
        assert_eq!(g.label(r.entries()[0].0), "34");
    }

    #[test]
    fn pagerank_cycle_and_pair() {
        let c4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        for (_, s) in pagerank(&c4, 0.85, 1e-12).entries() {
            assert_abs_diff_eq!(*s, 0.25, epsilon = 1e-9);
        }
        let pair = Graph::from_edges(2, &[(0, 1)]).unwrap();
        for (_, s) in pagerank(&pair, 0.85, 1e-12).entries() {
            assert_abs_diff_eq!(*s, 0.5, epsilon = 1e-9);
        }
    }

    #[test]
    fn pagerank_sums_to_one_and_karate_argmax() {
        let g = load_dataset("karate").unwrap();
        let r = pagerank(&g, 0.85, 1e-12);
        let total: f64 = r.entries().iter().map(|&(_, s)| s).sum();
        assert_abs_diff_eq!(total, 1.0, epsilon = 1e-9);
        assert_eq!(g.label(r.entries()[0].0), "34");
    }
}
