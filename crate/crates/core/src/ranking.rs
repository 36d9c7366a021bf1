//! Score vectors ordered into rankings, plus their CSV/JSON serializations.

use serde_json::json;

use crate::graph::{Graph, NodeId};

/// Nodes ordered by descending score. Ties are broken by descending node id,
/// which reproduces the published top-k orderings for the bundled networks.
#[derive(Debug, Clone)]
pub struct Ranking {
    method: String,
    entries: Vec<(NodeId, f64)>,
}

impl Ranking {
    pub fn from_scores(method: impl Into<String>, scores: Vec<f64>) -> Ranking {
        let mut entries: Vec<(NodeId, f64)> = scores.into_iter().enumerate().collect();
        entries.sort_by(|a, b| {
            b.1.partial_cmp(&a.1)
                .expect("scores must be finite")
                .then(b.0.cmp(&a.0))
        });
        Ranking {
            method: method.into(),
            entries,
        }
    }

    pub fn method(&self) -> &str {
        &self.method
    }

    pub fn entries(&self) -> &[(NodeId, f64)] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Node ids of the first `k` entries.
    pub fn top_ids(&self, k: usize) -> Vec<NodeId> {
        self.entries.iter().take(k).map(|&(id, _)| id).collect()
    }

    /// Scores indexed by node id.
    pub fn scores_by_node(&self) -> Vec<f64> {
        let mut scores = vec![0.0; self.entries.len()];
        for &(id, s) in &self.entries {
            scores[id] = s;
        }
        scores
    }

    /// CSV with header `node,score,rank`; scores carry 10 significant digits.
    pub fn to_csv(&self, g: &Graph) -> String {
        let mut out = String::from("node,score,rank\n");
        for (rank, &(id, score)) in self.entries.iter().enumerate() {
            out.push_str(&format!("{},{},{}\n", g.label(id), fmt_sig10(score), rank + 1));
        }
        out
    }

    pub fn to_json(&self, g: &Graph, params: serde_json::Value) -> serde_json::Value {
        json!({
            "method": self.method,
            "graph_digest": g.digest(),
            "params": params,
            "ranking": self.entries.iter().enumerate().map(|(rank, &(id, score))| {
                json!({"node": g.label(id), "score": score, "rank": rank + 1})
            }).collect::<Vec<_>>(),
        })
    }
}

/// Format with 10 significant digits, plain notation for ordinary magnitudes.
pub fn fmt_sig10(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return if x.is_nan() { "nan".into() } else if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    let exp = x.abs().log10().floor() as i32;
    if (-4..10).contains(&exp) {
        let decimals = (9 - exp).max(0) as usize;
        let s = format!("{x:.decimals$}");
        trim_zeros(s)
    } else {
        format!("{x:.9e}")
    }
}

fn trim_zeros(s: String) -> String {
    if !s.contains('.') {
        return s;
    }
    let t = s.trim_end_matches('0');
    t.trim_end_matches('.').to_string()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    #[test]
    fn descending_with_descending_id_ties() {
        let r = Ranking::from_scores("t", vec![1.0, 3.0, 3.0, 0.5]);
        let order: Vec<NodeId> = r.entries().iter().map(|&(id, _)| id).collect();
        assert_eq!(order, vec![2, 1, 0, 3]);
    }

    #[test]
    fn permutation_of_all_ids() {
        let r = Ranking::from_scores("t", vec![0.0; 7]);
        let mut ids = r.top_ids(7);
        ids.sort_unstable();
        assert_eq!(ids, (0..7).collect::<Vec<_>>());
    }

    #[test]
    fn csv_shape_and_significant_digits() {
        let (g, _) = Graph::from_label_pairs([("a", "b")]).unwrap();
        let r = Ranking::from_scores("deg", vec![1.0, 2.0 / 3.0]);
        let csv = r.to_csv(&g);
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], "node,score,rank");
        assert_eq!(lines[1], "a,1,1");
        assert_eq!(lines[2], "b,0.6666666667,2");
    }

    #[test]
    fn sig10_formatting() {
        assert_eq!(fmt_sig10(0.0), "0");
        assert_eq!(fmt_sig10(123.456), "123.456");
        assert_eq!(fmt_sig10(1.0 / 3.0), "0.3333333333");
        assert_eq!(fmt_sig10(12345678901.0), "1.234567890e10");
    }
}
