//! Simple undirected graph with contiguous internal ids and external labels.

use std::collections::HashMap;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;
use sha2::{Digest, Sha256};

use crate::error::{GraphError, Result};

pub type NodeId = usize;

/// Undirected simple graph. Internal ids are 0..N-1; the label map is a
/// bijection between ids and the external label strings found in the input.
#[derive(Debug, Clone)]
pub struct Graph {
    adjacency: Vec<Vec<NodeId>>,
    labels: Vec<String>,
    label_index: HashMap<String, NodeId>,
    edge_count: usize,
}

/// What the loader dropped while building a simple graph.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct LoadSummary {
    pub self_loops_dropped: usize,
    pub duplicates_collapsed: usize,
}

impl Graph {
    /// Build from labelled pairs, assigning internal ids in first-appearance
    /// order. Self-loops are dropped and duplicate edges collapsed; both are
    /// counted in the returned summary.
    pub fn from_label_pairs<I, S>(pairs: I) -> Result<(Graph, LoadSummary)>
    where
        I: IntoIterator<Item = (S, S)>,
        S: Into<String>,
    {
        let mut labels: Vec<String> = Vec::new();
        let mut label_index: HashMap<String, NodeId> = HashMap::new();
        let mut edges: Vec<(NodeId, NodeId)> = Vec::new();
        let mut summary = LoadSummary::default();

        let intern = |label: String, labels: &mut Vec<String>, idx: &mut HashMap<String, NodeId>| {
            if let Some(&id) = idx.get(&label) {
                id
            } else {
                let id = labels.len();
                idx.insert(label.clone(), id);
                labels.push(label);
                id
            }
        };

        for (a, b) in pairs {
            let (a, b): (String, String) = (a.into(), b.into());
            if a == b {
                summary.self_loops_dropped += 1;
                // still intern the label so an isolated self-loop node keeps its id
                intern(a, &mut labels, &mut label_index);
                continue;
            }
            let u = intern(a, &mut labels, &mut label_index);
            let v = intern(b, &mut labels, &mut label_index);
            edges.push((u.min(v), u.max(v)));
        }

        if edges.is_empty() {
            return Err(GraphError::EmptyGraph);
        }

        edges.sort_unstable();
        let before = edges.len();
        edges.dedup();
        summary.duplicates_collapsed = before - edges.len();

        let mut adjacency = vec![Vec::new(); labels.len()];
        for &(u, v) in &edges {
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }

        Ok((
            Graph {
                adjacency,
                labels,
                label_index,
                edge_count: edges.len(),
            },
            summary,
        ))
    }

    /// Build from internal-id pairs over exactly `n` nodes, labelling nodes
    /// "1".."n". Intended for generators and tests.
    pub fn from_edges(n: usize, edges: &[(NodeId, NodeId)]) -> Result<Graph> {
        if n == 0 || edges.is_empty() {
            return Err(GraphError::EmptyGraph);
        }
        let mut dedup: Vec<(NodeId, NodeId)> = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            if u == v {
                return Err(GraphError::InvalidParameter(format!("self-loop at node {u}")));
            }
            if u >= n || v >= n {
                return Err(GraphError::InvalidParameter(format!(
                    "edge ({u},{v}) out of range for n={n}"
                )));
            }
            dedup.push((u.min(v), u.max(v)));
        }
        dedup.sort_unstable();
        dedup.dedup();

        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in &dedup {
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        let labels: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
        let label_index = labels
            .iter()
            .enumerate()
            .map(|(i, l)| (l.clone(), i))
            .collect();
        Ok(Graph {
            adjacency,
            labels,
            label_index,
            edge_count: dedup.len(),
        })
    }

    pub fn node_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn neighbors(&self, v: NodeId) -> &[NodeId] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: NodeId) -> usize {
        self.adjacency[v].len()
    }

    pub fn label(&self, v: NodeId) -> &str {
        &self.labels[v]
    }

    pub fn node_by_label(&self, label: &str) -> Option<NodeId> {
        self.label_index.get(label).copied()
    }

    pub fn has_edge(&self, u: NodeId, v: NodeId) -> bool {
        self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Each undirected edge once, as (u, v) with u < v, ascending.
    pub fn edges(&self) -> impl Iterator<Item = (NodeId, NodeId)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, nbrs)| nbrs.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// Canonical edge-list serialization: one "labelA labelB" line per edge,
    /// in internal-id order. Loading the output reproduces this graph.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        for (u, v) in self.edges() {
            out.push_str(&self.labels[u]);
            out.push(' ');
            out.push_str(&self.labels[v]);
            out.push('\n');
        }
        out
    }

    /// SHA-256 over the label-canonical edge set (lines sorted by label, not
    /// by internal id), so any load order of the same labelled graph hashes
    /// identically. Used to join rankings and simulation reports produced
    /// from the same graph.
    pub fn digest(&self) -> String {
        let mut lines: Vec<String> = self
            .edges()
            .map(|(u, v)| {
                let (a, b) = (&self.labels[u], &self.labels[v]);
                if a <= b {
                    format!("{a} {b}")
                } else {
                    format!("{b} {a}")
                }
            })
            .collect();
        lines.sort_unstable();
        let mut hasher = Sha256::new();
        for line in &lines {
            hasher.update(line.as_bytes());
            hasher.update(b"\n");
        }
        hex_lower(&hasher.finalize())
    }

    /// Subgraph induced by `nodes`, relabelled with the original labels.
    pub fn induced_subgraph(&self, nodes: &[NodeId]) -> Result<Graph> {
        let mut keep = vec![false; self.node_count()];
        for &v in nodes {
            keep[v] = true;
        }
        let pairs = self.edges().filter(|&(u, v)| keep[u] && keep[v]).map(|(u, v)| {
            (self.labels[u].clone(), self.labels[v].clone())
        });
        Ok(Graph::from_label_pairs(pairs)?.0)
    }
}

pub(crate) fn hex_lower(bytes: &[u8]) -> String {
    let mut s = String::with_capacity(bytes.len() * 2);
    for b in bytes {
        s.push_str(&format!("{b:02x}"));
    }
    s
}

/// Watts-Strogatz small-world graph: ring lattice over `n` nodes with `k`
/// nearest neighbours, each lattice edge rewired with probability `p`.
/// Rewires that would create a self-loop or duplicate edge are redrawn, so
/// the result stays simple. Deterministic for a fixed seed.
pub fn generate_watts_strogatz(n: usize, k: usize, p: f64, seed: u64) -> Result<Graph> {
    if k < 2 || k % 2 != 0 {
        return Err(GraphError::InvalidParameter(format!(
            "k must be even and >= 2, got {k}"
        )));
    }
    if n <= k {
        return Err(GraphError::InvalidParameter(format!("need n > k, got n={n}, k={k}")));
    }
    if !(0.0..=1.0).contains(&p) {
        return Err(GraphError::InvalidParameter(format!("p must be in [0,1], got {p}")));
    }

    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    let mut adjacency: Vec<Vec<NodeId>> = vec![Vec::new(); n];
    let mut edges: Vec<(NodeId, NodeId)> = Vec::with_capacity(n * k / 2);
    for i in 0..n {
        for off in 1..=k / 2 {
            let j = (i + off) % n;
            edges.push((i, j));
            adjacency[i].push(j);
            adjacency[j].push(i);
        }
    }

    let has = |adj: &[Vec<NodeId>], u: NodeId, v: NodeId| adj[u].contains(&v);

    for idx in 0..edges.len() {
        if p == 0.0 || !rng.random_bool(p) {
            continue;
        }
        let (u, old_v) = edges[idx];
        if adjacency[u].len() >= n - 1 {
            continue; // u already adjacent to everyone else
        }
        let new_v = loop {
            let w = rng.random_range(0..n);
            if w != u && !has(&adjacency, u, w) {
                break w;
            }
        };
        adjacency[u].retain(|&x| x != old_v);
        adjacency[old_v].retain(|&x| x != u);
        adjacency[u].push(new_v);
        adjacency[new_v].push(u);
        edges[idx] = (u, new_v);
    }

    let pairs: Vec<(NodeId, NodeId)> = edges.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
    Graph::from_edges(n, &pairs)
}
