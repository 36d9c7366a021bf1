//! k-shell decomposition and neighborhood coreness.

use crate::graph::Graph;
use crate::ranking::Ranking;

/// Shell index per node via iterative peeling: at level k, repeatedly remove
/// every node whose remaining degree is at most k.
pub fn kshell_indices(g: &Graph) -> Vec<u32> {
    let n = g.node_count();
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut shell = vec![0u32; n];
    let mut removed = vec![false; n];
    let mut remaining = n;
    let mut k = 0u32;

    while remaining > 0 {
        k += 1;
        loop {
            let peel: Vec<usize> = (0..n)
                .filter(|&v| !removed[v] && deg[v] <= k as usize)
                .collect();
            if peel.is_empty() {
                break;
            }
            for v in peel {
                removed[v] = true;
                shell[v] = k;
                remaining -= 1;
                for &u in g.neighbors(v) {
                    if !removed[u] {
                        deg[u] -= 1;
                    }
                }
            }
        }
    }
    shell
}

pub fn kshell(g: &Graph) -> Ranking {
    let scores = kshell_indices(g).into_iter().map(|s| s as f64).collect();
    Ranking::from_scores("ks", scores)
}

/// Sum of the shell indices over the node's neighbors.
pub fn neighborhood_coreness(g: &Graph) -> Ranking {
    let shells = kshell_indices(g);
    let scores = (0..g.node_count())
        .map(|v| g.neighbors(v).iter().map(|&u| shells[u] as f64).sum())
        .collect();
    Ranking::from_scores("cn", scores)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::datasets::load_dataset;
    use crate::graph::Graph;

    #[test]
    fn cycle_is_all_shell_two() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        assert!(kshell_indices(&g).iter().all(|&s| s == 2));
    }

    #[test]
    fn star_peels_entirely_at_one() {
        let edges: Vec<_> = (1..6).map(|v| (0, v)).collect();
        let g = Graph::from_edges(6, &edges).unwrap();
        assert!(kshell_indices(&g).iter().all(|&s| s == 1));
    }

    #[test]
    fn karate_max_shell_and_top_node() {
        let g = load_dataset("karate").unwrap();
        let shells = kshell_indices(&g);
        assert_eq!(shells.iter().copied().max(), Some(4));
        let n34 = g.node_by_label("34").unwrap();
        assert_eq!(shells[n34], 4);
        assert_eq!(g.label(kshell(&g).entries()[0].0), "34");
    }

    #[test]
    fn shell_never_exceeds_degree() {
        let g = crate::graph::generate_watts_strogatz(40, 4, 0.4, 8).unwrap();
        let shells = kshell_indices(&g);
        for v in 0..g.node_count() {
            assert!(shells[v] as usize <= g.degree(v));
        }
    }

    #[test]
    fn coreness_matches_direct_sum_and_karate_top() {
        let g = load_dataset("karate").unwrap();
        let shells = kshell_indices(&g);
        let r = neighborhood_coreness(&g);
        let scores = r.scores_by_node();
        for v in 0..g.node_count() {
            let direct: f64 = g.neighbors(v).iter().map(|&u| shells[u] as f64).sum();
            assert_eq!(scores[v], direct);
        }
        assert_eq!(g.label(r.entries()[0].0), "1");
    }

    #[test]
    fn regular_ring_coreness_is_uniform() {
        let g = crate::graph::generate_watts_strogatz(10, 4, 0.0, 1).unwrap();
        let r = neighborhood_coreness(&g);
        let first = r.entries()[0].1;
        assert!(r.entries().iter().all(|&(_, s)| s == first));
    }
}
