//! Shortest-path centralities: Brandes betweenness and closeness.

use rayon::prelude::*;

use crate::distance::DistanceMatrix;
use crate::graph::{Graph, NodeId};
use crate::ranking::Ranking;

/// Exact shortest-path betweenness. Dependencies are accumulated per source
/// over the shortest-path DAG; each unordered pair is counted once. Partial
/// sums are combined in fixed chunk order so the result is bitwise stable
/// under any thread count.
pub fn betweenness(g: &Graph) -> Ranking {
    let n = g.node_count();
    let chunk = usize::max(1, n / 16);
    let sources: Vec<usize> = (0..n).collect();
    let partials: Vec<Vec<f64>> = sources
        .par_chunks(chunk)
        .map(|chunk_sources| {
            let mut acc = vec![0.0f64; n];
            for &s in chunk_sources {
                accumulate_source(g, s, &mut acc);
            }
            acc
        })
        .collect();

    let mut scores = vec![0.0f64; n];
    for partial in partials {
        for (v, x) in partial.into_iter().enumerate() {
            scores[v] += x;
        }
    }
    for s in &mut scores {
        *s /= 2.0;
    }
    Ranking::from_scores("bc", scores)
}

fn accumulate_source(g: &Graph, s: NodeId, acc: &mut [f64]) {
    let n = g.node_count();
    let mut stack: Vec<NodeId> = Vec::with_capacity(n);
    let mut preds: Vec<Vec<NodeId>> = vec![Vec::new(); n];
    let mut sigma = vec![0.0f64; n];
    let mut dist = vec![-1i64; n];
    let mut delta = vec![0.0f64; n];

    sigma[s] = 1.0;
    dist[s] = 0;
    let mut queue = std::collections::VecDeque::new();
    queue.push_back(s);
    while let Some(v) = queue.pop_front() {
        stack.push(v);
        for &w in g.neighbors(v) {
            if dist[w] < 0 {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
            if dist[w] == dist[v] + 1 {
                sigma[w] += sigma[v];
                preds[w].push(v);
            }
        }
    }
    while let Some(w) = stack.pop() {
        for &v in &preds[w] {
            delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w]);
        }
        if w != s {
            acc[w] += delta[w];
        }
    }
}

/// Closeness: (N-1) divided by the node's total distance.
pub fn closeness(g: &Graph, dm: &DistanceMatrix) -> Ranking {
    let n = g.node_count();
    let scores = (0..n)
        .map(|i| (n as f64 - 1.0) / dm.total_distance(i) as f64)
        .collect();
    Ranking::from_scores("cc", scores)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::datasets::load_dataset;
    use crate::distance::apsp;
    use crate::graph::Graph;
    use approx::assert_abs_diff_eq;

    #[test]
    fn path3_betweenness() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let scores = betweenness(&g).scores_by_node();
        assert_eq!(scores, vec![0.0, 1.0, 0.0]);
    }

    #[test]
    fn star_center_counts_all_pairs() {
        let edges: Vec<_> = (1..6).map(|v| (0, v)).collect();
        let g = Graph::from_edges(6, &edges).unwrap();
        let scores = betweenness(&g).scores_by_node();
        assert_abs_diff_eq!(scores[0], 10.0, epsilon = 1e-12); // C(5,2)
        assert!(scores[1..].iter().all(|&s| s == 0.0));
    }

    #[test]
    fn tree_betweenness_equals_pair_splitting() {
        // on a tree, BC(v) = number of pairs whose unique path passes v
        let edges = [(0, 1), (1, 2), (1, 3), (3, 4), (3, 5), (5, 6)];
        let g = Graph::from_edges(7, &edges).unwrap();
        let scores = betweenness(&g).scores_by_node();
        let n = g.node_count();
        let dm = apsp(&g).unwrap();
        for v in 0..n {
            let mut pairs = 0.0;
            for s in 0..n {
                for t in (s + 1)..n {
                    if s != v && t != v && dm.get(s, v) + dm.get(v, t) == dm.get(s, t) {
                        pairs += 1.0;
                    }
                }
            }
            assert_abs_diff_eq!(scores[v], pairs, epsilon = 1e-9);
        }
    }

    #[test]
    fn closeness_examples() {
        let edges: Vec<_> = (1..6).map(|v| (0, v)).collect();
        let g = Graph::from_edges(6, &edges).unwrap();
        let dm = apsp(&g).unwrap();
        let scores = closeness(&g, &dm).scores_by_node();
        assert_abs_diff_eq!(scores[0], 1.0, epsilon = 1e-12);

        let p = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let pdm = apsp(&p).unwrap();
        let ps = closeness(&p, &pdm).scores_by_node();
        assert_abs_diff_eq!(ps[0], 2.0 / 3.0, epsilon = 1e-12);
    }

    #[test]
    fn karate_closeness_argmax_is_1() {
        let g = load_dataset("karate").unwrap();
        let dm = apsp(&g).unwrap();
        let r = closeness(&g, &dm);
        assert_eq!(g.label(r.entries()[0].0), "1");
    }

    #[test]
    fn betweenness_stable_across_thread_counts() {
        let g = load_dataset("karate").unwrap();
        let single = rayon::ThreadPoolBuilder::new()
            .num_threads(1)
            .build()
            .unwrap()
            .install(|| betweenness(&g).scores_by_node());
        let multi = betweenness(&g).scores_by_node();
        assert_eq!(single, multi);
    }
}
