//! Global similarity centrality: distance-distribution vectors, pairwise
//! correlation scores, and the whole-network ranking built from them.

use rayon::prelude::*;

use crate::distance::DistanceMatrix;
use crate::graph::{Graph, NodeId};
use crate::ranking::Ranking;

/// Per-node distance histogram. `ndv[k-1]` counts the nodes at hop distance
/// exactly `k`; `dv[k-1] = k * ndv[k-1]`. Both vectors have the network
/// diameter as their length, so entries beyond the node's eccentricity are 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NodeVectors {
    ndv: Vec<u64>,
    dv: Vec<u64>,
}

impl NodeVectors {
    /// Build from a distance-count histogram; the distance vector is derived.
    pub fn from_counts(ndv: Vec<u64>) -> NodeVectors {
        let dv = ndv
            .iter()
            .enumerate()
            .map(|(idx, &c)| (idx as u64 + 1) * c)
            .collect();
        NodeVectors { ndv, dv }
    }

    pub fn ndv(&self) -> &[u64] {
        &self.ndv
    }

    pub fn dv(&self) -> &[u64] {
        &self.dv
    }

    pub fn len(&self) -> usize {
        self.ndv.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ndv.is_empty()
    }

    /// Number of other nodes counted; N-1 on a connected graph.
    pub fn reachable(&self) -> u64 {
        self.ndv.iter().sum()
    }

    /// Sum of distances to every other node.
    pub fn total_distance(&self) -> u64 {
        self.dv.iter().sum()
    }

    /// Average distance to the other nodes.
    pub fn avg_distance(&self) -> f64 {
        self.total_distance() as f64 / self.reachable() as f64
    }
}

/// Distance histogram of node `i`, with bins 1..=diameter.
pub fn node_vectors(dm: &DistanceMatrix, i: NodeId) -> NodeVectors {
    let mut ndv = vec![0u64; dm.diameter() as usize];
    for (j, &d) in dm.row(i).iter().enumerate() {
        if j != i {
            ndv[d as usize - 1] += 1;
        }
    }
    NodeVectors::from_counts(ndv)
}

/// Pearson correlation of the two distance histograms. `None` when either
/// histogram is constant (zero variance), where the coefficient is undefined.
pub fn pearson_p(a: &NodeVectors, b: &NodeVectors) -> Option<f64> {
    pearson(&to_f64(&a.ndv), &to_f64(&b.ndv))
}

/// Correlation of the distance-centered vectors
/// `t[k] = dv[k] - ndv[k] * avg_dist` (the k-th bin's deviation from a flat
/// profile at the node's average distance). `None` when a centered vector is
/// identically zero.
pub fn distance_corr(a: &NodeVectors, b: &NodeVectors, avg_dist_a: f64, avg_dist_b: f64) -> Option<f64> {
    let ta: Vec<f64> = a
        .dv
        .iter()
        .zip(&a.ndv)
        .map(|(&dvk, &nk)| dvk as f64 - nk as f64 * avg_dist_a)
        .collect();
    let tb: Vec<f64> = b
        .dv
        .iter()
        .zip(&b.ndv)
        .map(|(&dvk, &nk)| dvk as f64 - nk as f64 * avg_dist_b)
        .collect();
    cosine(&ta, &tb)
}

/// Cosine similarity of the raw distance histograms. This is the pair
/// similarity the global ranking uses; it reproduces the published worked
/// values for the reference fixtures.
pub fn ndv_cosine(a: &NodeVectors, b: &NodeVectors) -> Option<f64> {
    cosine(&to_f64(&a.ndv), &to_f64(&b.ndv))
}

/// Pair score in its branch form: a correlation term `(1 -/+ p)/d` picked by
/// the sign of `p`, plus `1 + dcorr/d`. Undefined inputs are mapped to 0
/// first, which selects the `p = 0` branch `1 + dcorr/d`.
pub fn nc_score(p: Option<f64>, dcorr: Option<f64>, d: u32) -> f64 {
    assert!(d >= 1, "pair distance must be positive");
    let p = p.unwrap_or(0.0);
    let dc = dcorr.unwrap_or(0.0);
    let d = d as f64;
    if p > 0.0 {
        (1.0 - p) / d + 1.0 + dc / d
    } else if p < 0.0 {
        (1.0 + p) / d + 1.0 + dc / d
    } else {
        1.0 + dc / d
    }
}

/// Global similarity centrality. Every ordered pair (i, j), i != j,
/// contributes `(2 + |P| + C) / d(i,j)` where `P` is the Pearson correlation
/// of the two distance histograms (0 when undefined) and `C` their cosine
/// similarity; a node's score is the sum over all other nodes. Higher means
/// the node sits close to many nodes with similar distance profiles.
pub fn gsc_scores(g: &Graph, dm: &DistanceMatrix) -> Ranking {
    let n = g.node_count();
    assert!(n >= 2, "need at least two nodes");
    let diameter = dm.diameter() as usize;

    // flat histogram matrix plus per-node moments
    let mut hist = vec![0.0f64; n * diameter];
    for i in 0..n {
        for (j, &d) in dm.row(i).iter().enumerate() {
            if j != i {
                hist[i * diameter + d as usize - 1] += 1.0;
            }
        }
    }
    let mean: Vec<f64> = (0..n)
        .map(|i| hist[i * diameter..(i + 1) * diameter].iter().sum::<f64>() / diameter as f64)
        .collect();
    let raw_norm: Vec<f64> = (0..n)
        .map(|i| {
            hist[i * diameter..(i + 1) * diameter]
                .iter()
                .map(|x| x * x)
                .sum::<f64>()
                .sqrt()
        })
        .collect();
    let centered_norm: Vec<f64> = (0..n)
        .map(|i| {
            hist[i * diameter..(i + 1) * diameter]
                .iter()
                .map(|x| {
                    let c = x - mean[i];
                    c * c
                })
                .sum::<f64>()
                .sqrt()
        })
        .collect();

    let scores: Vec<f64> = (0..n)
        .into_par_iter()
        .map(|i| {
            let hi = &hist[i * diameter..(i + 1) * diameter];
            let mut total = 0.0;
            for j in 0..n {
                if j == i {
                    continue;
                }
                let hj = &hist[j * diameter..(j + 1) * diameter];
                let dot: f64 = hi.iter().zip(hj).map(|(a, b)| a * b).sum();
                let p = if centered_norm[i] > 0.0 && centered_norm[j] > 0.0 {
                    let cov = dot - diameter as f64 * mean[i] * mean[j];
                    (cov / (centered_norm[i] * centered_norm[j])).clamp(-1.0, 1.0)
                } else {
                    0.0
                };
                let c = if raw_norm[i] > 0.0 && raw_norm[j] > 0.0 {
                    (dot / (raw_norm[i] * raw_norm[j])).clamp(-1.0, 1.0)
                } else {
                    0.0
                };
                let d = dm.get(i, j) as f64;
                total += (2.0 + p.abs() + c) / d;
            }
            total
        })
        .collect();

    Ranking::from_scores("gsc", scores)
}

fn to_f64(v: &[u64]) -> Vec<f64> {
    v.iter().map(|&x| x as f64).collect()
}

fn pearson(a: &[f64], b: &[f64]) -> Option<f64> {
    assert_eq!(a.len(), b.len(), "vectors must share the diameter length");
    let n = a.len() as f64;
    let ma = a.iter().sum::<f64>() / n;
    let mb = b.iter().sum::<f64>() / n;
    let mut cov = 0.0;
    let mut va = 0.0;
    let mut vb = 0.0;
    for (&x, &y) in a.iter().zip(b) {
        cov += (x - ma) * (y - mb);
        va += (x - ma) * (x - ma);
        vb += (y - mb) * (y - mb);
    }
    if va == 0.0 || vb == 0.0 {
        return None;
    }
    Some((cov / (va.sqrt() * vb.sqrt())).clamp(-1.0, 1.0))
}

fn cosine(a: &[f64], b: &[f64]) -> Option<f64> {
    assert_eq!(a.len(), b.len(), "vectors must share the diameter length");
    let na = a.iter().map(|x| x * x).sum::<f64>().sqrt();
    let nb = b.iter().map(|x| x * x).sum::<f64>().sqrt();
    if na == 0.0 || nb == 0.0 {
        return None;
    }
    let dot: f64 = a.iter().zip(b).map(|(x, y)| x * y).sum();
    Some((dot / (na * nb)).clamp(-1.0, 1.0))
}
