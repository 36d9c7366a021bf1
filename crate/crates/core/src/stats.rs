//! Whole-network statistics: degree summary, epidemic threshold, assortativity.

use serde::Serialize;

use crate::graph::Graph;

#[derive(Debug, Clone, Serialize)]
pub struct NetworkStats {
    pub nodes: usize,
    pub edges: usize,
    pub avg_degree: f64,
    pub max_degree: usize,
    /// Heterogeneous mean-field epidemic threshold <k>/<k^2>.
    pub beta_th: f64,
    /// Degree-degree Pearson correlation over edge endpoint pairs, counting
    /// each undirected edge in both orientations. NaN on degree-regular
    /// graphs, where it is undefined.
    pub assortativity: f64,
}

pub fn network_stats(g: &Graph) -> NetworkStats {
    let n = g.node_count();
    let m = g.edge_count();
    let degrees: Vec<f64> = (0..n).map(|v| g.degree(v) as f64).collect();
    let mean_k = degrees.iter().sum::<f64>() / n as f64;
    let mean_k2 = degrees.iter().map(|k| k * k).sum::<f64>() / n as f64;

    NetworkStats {
        nodes: n,
        edges: m,
        avg_degree: 2.0 * m as f64 / n as f64,
        max_degree: (0..n).map(|v| g.degree(v)).max().unwrap_or(0),
        beta_th: mean_k / mean_k2,
        assortativity: assortativity(g, &degrees),
    }
}

fn assortativity(g: &Graph, degrees: &[f64]) -> f64 {
    // Pearson correlation over the 2m directed stubs (x, y) = (deg u, deg v).
    let mut sx = 0.0;
    let mut sxx = 0.0;
    let mut sxy = 0.0;
    let mut count = 0.0;
    for (u, v) in g.edges() {
        let (a, b) = (degrees[u], degrees[v]);
        sx += a + b;
        sxx += a * a + b * b;
        sxy += 2.0 * a * b;
        count += 2.0;
    }
    let mean = sx / count;
    let var = sxx / count - mean * mean;
    if var <= 0.0 {
        return f64::NAN;
    }
    (sxy / count - mean * mean) / var
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use approx::assert_abs_diff_eq;

    #[test]
    fn complete_k4_threshold() {
        let edges = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
        let g = Graph::from_edges(4, &edges).unwrap();
        let s = network_stats(&g);
        assert_abs_diff_eq!(s.beta_th, 1.0 / 3.0, epsilon = 1e-12);
        assert!(s.assortativity.is_nan());
        assert_eq!(s.avg_degree * s.nodes as f64, 2.0 * s.edges as f64);
    }

    #[test]
    fn star_is_disassortative() {
        let edges: Vec<_> = (1..6).map(|v| (0, v)).collect();
        let g = Graph::from_edges(6, &edges).unwrap();
        let s = network_stats(&g);
        assert!(s.assortativity < 0.0);
        assert_abs_diff_eq!(s.assortativity, -1.0, epsilon = 1e-12);
    }

    #[test]
    fn karate_matches_published_statistics() {
        let g = crate::datasets::load_dataset("karate").unwrap();
        let s = network_stats(&g);
        assert_eq!((s.nodes, s.edges, s.max_degree), (34, 78, 17));
        assert_abs_diff_eq!(s.avg_degree, 4.588, epsilon = 5e-4);
        assert_abs_diff_eq!(s.beta_th, 0.129, epsilon = 1e-3);
        assert_abs_diff_eq!(s.assortativity, -0.4756, epsilon = 1e-3);
    }
}
