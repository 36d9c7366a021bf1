//! File ingestion: whitespace/comma edge lists, a minimal GML subset, and the
//! dataset manifest format.

use std::io::Read;

use sha2::{Digest, Sha256};

use crate::error::{GraphError, Result};
use crate::graph::{hex_lower, Graph, LoadSummary};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    EdgeList,
    GmlSubset,
}

impl Format {
    pub fn parse(tag: &str) -> Result<Format> {
        match tag {
            "edge-list" => Ok(Format::EdgeList),
            "gml-subset" => Ok(Format::GmlSubset),
            other => Err(GraphError::InvalidParameter(format!(
                "unknown format '{other}' (expected edge-list or gml-subset)"
            ))),
        }
    }
}

/// Load a graph from a byte stream in the given format.
pub fn load_edge_list<R: Read>(mut source: R, format: Format) -> Result<(Graph, LoadSummary)> {
    let mut text = String::new();
    source.read_to_string(&mut text)?;
    match format {
        Format::EdgeList => parse_edge_list(text.as_bytes()),
        Format::GmlSubset => parse_gml_subset(&text),
    }
}

/// Edge-list lines are "labelA labelB", whitespace- or comma-separated;
/// lines starting with '#' or '%' are comments.
pub fn parse_edge_list(bytes: &[u8]) -> Result<(Graph, LoadSummary)> {
    let text = std::str::from_utf8(bytes)
        .map_err(|e| GraphError::InvalidParameter(format!("input is not text: {e}")))?;
    let mut pairs: Vec<(String, String)> = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') || line.starts_with('%') {
            continue;
        }
        let tokens: Vec<&str> = line
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .collect();
        if tokens.len() != 2 {
            return Err(GraphError::MalformedLine {
                line: lineno + 1,
                found: tokens.len(),
            });
        }
        pairs.push((tokens[0].to_string(), tokens[1].to_string()));
    }
    Graph::from_label_pairs(pairs)
}

/// Minimal GML reader: only `node [ id ... ]` and
/// `edge [ source ... target ... ]` blocks are interpreted.
pub fn parse_gml_subset(text: &str) -> Result<(Graph, LoadSummary)> {
    let tokens = gml_tokens(text);
    let mut nodes: Vec<String> = Vec::new();
    let mut pairs: Vec<(String, String)> = Vec::new();

    let mut i = 0;
    while i < tokens.len() {
        match tokens[i].as_str() {
            "node" | "edge" => {
                let kind = tokens[i].clone();
                i += 1;
                if tokens.get(i).map(String::as_str) != Some("[") {
                    return Err(GraphError::Gml(format!("expected '[' after {kind}")));
                }
                i += 1;
                let mut id = None;
                let mut source = None;
                let mut target = None;
                let mut depth = 1usize;
                while i < tokens.len() && depth > 0 {
                    match tokens[i].as_str() {
                        "[" => depth += 1,
                        "]" => depth -= 1,
                        "id" if depth == 1 => {
                            id = tokens.get(i + 1).cloned();
                            i += 1;
                        }
                        "source" if depth == 1 => {
                            source = tokens.get(i + 1).cloned();
                            i += 1;
                        }
                        "target" if depth == 1 => {
                            target = tokens.get(i + 1).cloned();
                            i += 1;
                        }
                        _ => {}
                    }
                    i += 1;
                }
                if depth > 0 {
                    return Err(GraphError::Gml("unterminated block".into()));
                }
                match kind.as_str() {
                    "node" => {
                        nodes.push(id.ok_or_else(|| GraphError::Gml("node block without id".into()))?)
                    }
                    _ => {
                        let s = source.ok_or_else(|| GraphError::Gml("edge block without source".into()))?;
                        let t = target.ok_or_else(|| GraphError::Gml("edge block without target".into()))?;
                        pairs.push((s, t));
                    }
                }
            }
            _ => i += 1,
        }
    }

    if pairs.is_empty() {
        return Err(GraphError::EmptyGraph);
    }
    // declared isolated nodes are kept by seeding them before the edges
    let declared: Vec<(String, String)> = nodes.iter().map(|n| (n.clone(), n.clone())).collect();
    let (graph, mut summary) = Graph::from_label_pairs(declared.into_iter().chain(pairs))?;
    summary.self_loops_dropped = summary.self_loops_dropped.saturating_sub(nodes.len());
    Ok((graph, summary))
}

fn gml_tokens(text: &str) -> Vec<String> {
    let mut tokens = Vec::new();
    let mut chars = text.chars().peekable();
    while let Some(&c) = chars.peek() {
        if c.is_whitespace() {
            chars.next();
        } else if c == '"' {
            chars.next();
            let mut s = String::new();
            for ch in chars.by_ref() {
                if ch == '"' {
                    break;
                }
                s.push(ch);
            }
            tokens.push(s);
        } else if c == '[' || c == ']' {
            chars.next();
            tokens.push(c.to_string());
        } else {
            let mut s = String::new();
            while let Some(&ch) = chars.peek() {
                if ch.is_whitespace() || ch == '[' || ch == ']' {
                    break;
                }
                s.push(ch);
                chars.next();
            }
            tokens.push(s);
        }
    }
    tokens
}

/// One bundled-dataset manifest record.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ManifestEntry {
    pub name: String,
    pub nodes: usize,
    pub edges: usize,
    pub sha256: String,
}

/// Parse "name<TAB>nodes<TAB>edges<TAB>sha256" records.
pub fn parse_manifest(text: &str) -> Result<Vec<ManifestEntry>> {
    let mut out = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split('\t').collect();
        if fields.len() != 4 {
            return Err(GraphError::MalformedManifest { line: lineno + 1 });
        }
        let nodes = fields[1]
            .parse()
            .map_err(|_| GraphError::MalformedManifest { line: lineno + 1 })?;
        let edges = fields[2]
            .parse()
            .map_err(|_| GraphError::MalformedManifest { line: lineno + 1 })?;
        out.push(ManifestEntry {
            name: fields[0].to_string(),
            nodes,
            edges,
            sha256: fields[3].to_string(),
        });
    }
    Ok(out)
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    let mut hasher = Sha256::new();
    hasher.update(bytes);
    hex_lower(&hasher.finalize())
}
