//! All-pairs shortest paths and connectivity.
//!
//! Distances come from one breadth-first search per source; rows are
//! independent and computed in parallel with a fixed placement, so the
//! assembled matrix does not depend on scheduling.

use rayon::prelude::*;

use crate::error::{GraphError, Result};
use crate::graph::{Graph, NodeId};

/// Hop-count distance matrix with per-node eccentricities and the diameter.
#[derive(Debug, Clone)]
pub struct DistanceMatrix {
    n: usize,
    dist: Vec<u16>,
    ecc: Vec<u16>,
    diameter: u16,
}

impl DistanceMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: NodeId, j: NodeId) -> u32 {
        self.dist[i * self.n + j] as u32
    }

    pub fn row(&self, i: NodeId) -> &[u16] {
        &self.dist[i * self.n..(i + 1) * self.n]
    }

    pub fn eccentricity(&self, i: NodeId) -> u32 {
        self.ecc[i] as u32
    }

    pub fn diameter(&self) -> u32 {
        self.diameter as u32
    }

    /// Sum of distances from `i` to every other node.
    pub fn total_distance(&self, i: NodeId) -> u64 {
        self.row(i).iter().map(|&d| d as u64).sum()
    }
}

fn bfs_row(g: &Graph, source: NodeId, row: &mut [u16]) {
    const UNSEEN: u16 = u16::MAX;
    row.fill(UNSEEN);
    row[source] = 0;
    let mut frontier = vec![source];
    let mut next = Vec::new();
    let mut depth: u16 = 0;
    while !frontier.is_empty() {
        depth += 1;
        for &u in &frontier {
            for &v in g.neighbors(u) {
                if row[v] == UNSEEN {
                    row[v] = depth;
                    next.push(v);
                }
            }
        }
        std::mem::swap(&mut frontier, &mut next);
        next.clear();
    }
}

/// Exact all-pairs hop distances. Fails on disconnected input, naming the
/// component count.
pub fn apsp(g: &Graph) -> Result<DistanceMatrix> {
    let n = g.node_count();
    let components = connected_components(g);
    if components.len() != 1 {
        return Err(GraphError::Disconnected {
            components: components.len(),
        });
    }

    let mut dist = vec![0u16; n * n];
    dist.par_chunks_mut(n)
        .enumerate()
        .for_each(|(source, row)| bfs_row(g, source, row));

    let ecc: Vec<u16> = dist
        .chunks(n)
        .map(|row| row.iter().copied().max().unwrap_or(0))
        .collect();
    let diameter = ecc.iter().copied().max().unwrap_or(0);

    Ok(DistanceMatrix {
        n,
        dist,
        ecc,
        diameter,
    })
}

/// Partition of node ids into maximal connected components, each sorted,
/// ordered by their smallest member.
pub fn connected_components(g: &Graph) -> Vec<Vec<NodeId>> {
    let n = g.node_count();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut comp = vec![start];
        seen[start] = true;
        let mut head = 0;
        while head < comp.len() {
            let u = comp[head];
            head += 1;
            for &v in g.neighbors(u) {
                if !seen[v] {
                    seen[v] = true;
                    comp.push(v);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// Largest connected component as an induced subgraph (ties broken by the
/// component containing the smallest node id).
pub fn largest_component(g: &Graph) -> Result<Graph> {
    let comps = connected_components(g);
    let largest = comps
        .iter()
        .max_by(|a, b| a.len().cmp(&b.len()).then(b[0].cmp(&a[0])))
        .expect("at least one component");
    g.induced_subgraph(largest)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    fn path3() -> Graph {
        Graph::from_label_pairs([("a", "b"), ("b", "c")]).unwrap().0
    }

    #[test]
    fn path_distances() {
        let g = path3();
        let dm = apsp(&g).unwrap();
        let a = g.node_by_label("a").unwrap();
        let b = g.node_by_label("b").unwrap();
        let c = g.node_by_label("c").unwrap();
        assert_eq!(dm.get(a, c), 2);
        assert_eq!(dm.diameter(), 2);
        assert_eq!(dm.eccentricity(b), 1);
    }

    #[test]
    fn star_distances() {
        let edges: Vec<(String, String)> =
            (1..=5).map(|i| ("hub".to_string(), format!("leaf{i}"))).collect();
        let (g, _) = Graph::from_label_pairs(edges).unwrap();
        let dm = apsp(&g).unwrap();
        assert_eq!(dm.diameter(), 2);
        assert_eq!(dm.eccentricity(g.node_by_label("hub").unwrap()), 1);
    }

    #[test]
    fn disconnected_rejected_with_component_count() {
        let (g, _) = Graph::from_label_pairs([("a", "b"), ("c", "d")]).unwrap();
        match apsp(&g) {
            Err(GraphError::Disconnected { components }) => assert_eq!(components, 2),
            other => panic!("expected Disconnected, got {other:?}"),
        }
    }

    #[test]
    fn components_examples() {
        let (tri, _) = Graph::from_label_pairs([("1", "2"), ("2", "3"), ("3", "1")]).unwrap();
        assert_eq!(connected_components(&tri), vec![vec![0, 1, 2]]);

        let (two, _) = Graph::from_label_pairs([("a", "b"), ("c", "d")]).unwrap();
        let comps = connected_components(&two);
        assert_eq!(comps.len(), 2);
        assert!(comps.iter().all(|c| c.len() == 2));
    }

    #[test]
    fn ecc_is_row_max_and_diameter_is_global_max() {
        let g = crate::graph::generate_watts_strogatz(60, 4, 0.2, 9).unwrap();
        let dm = apsp(&g).unwrap();
        let mut global = 0;
        for i in 0..g.node_count() {
            let row_max = dm.row(i).iter().copied().max().unwrap() as u32;
            assert_eq!(row_max, dm.eccentricity(i));
            global = global.max(row_max);
        }
        assert_eq!(global, dm.diameter());
    }

    #[test]
    fn largest_component_extraction() {
        let (g, _) =
            Graph::from_label_pairs([("a", "b"), ("b", "c"), ("x", "y")]).unwrap();
        let lc = largest_component(&g).unwrap();
        assert_eq!(lc.node_count(), 3);
        assert!(lc.node_by_label("x").is_none());
    }
}
