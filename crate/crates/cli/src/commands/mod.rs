//! Subcommand implementations.

pub mod rank;
pub mod reproduce;
pub mod sir;
pub mod stats;

use std::fs;
use std::path::{Path, PathBuf};

use gsc_core::datasets;
use gsc_core::distance::largest_component;
use gsc_core::graph::Graph;
use gsc_core::io::{load_edge_list, Format};

use crate::args::CommonArgs;
use crate::errors::{CliError, CliResult};

/// Resolved input: the graph plus a short name used in output files.
pub struct Input {
    pub graph: Graph,
    pub name: String,
    /// Set when the input came from the bundled collection.
    pub dataset: Option<String>,
}

pub fn resolve_input(common: &CommonArgs) -> CliResult<Input> {
    let mut input = match (&common.dataset, &common.input) {
        (Some(_), Some(_)) => {
            return Err(CliError::Usage(
                "pass either --dataset or --input, not both".into(),
            ))
        }
        (Some(name), None) => Input {
            graph: datasets::load_dataset(name)?,
            name: name.clone(),
            dataset: Some(name.clone()),
        },
        (None, Some(path)) => {
            let format = match common.format.as_deref() {
                None | Some("edge-list") => Format::EdgeList,
                Some("gml-subset") => Format::GmlSubset,
                Some(other) => {
                    return Err(CliError::Usage(format!(
                        "unknown format '{other}' (expected edge-list or gml-subset)"
                    )))
                }
            };
            let file = fs::File::open(path)
                .map_err(|e| CliError::Data(format!("{}: {e}", path.display())))?;
            let (graph, summary) = load_edge_list(file, format)?;
            if summary.self_loops_dropped > 0 || summary.duplicates_collapsed > 0 {
                eprintln!(
                    "warning: dropped {} self-loop(s), collapsed {} duplicate edge(s)",
                    summary.self_loops_dropped, summary.duplicates_collapsed
                );
            }
            let name = path
                .file_stem()
                .map(|s| s.to_string_lossy().into_owned())
                .unwrap_or_else(|| "input".into());
            Input {
                graph,
                name,
                dataset: None,
            }
        }
        (None, None) => {
            return Err(CliError::Usage(
                "an input is required: --dataset NAME or --input PATH".into(),
            ))
        }
    };

    if common.largest_component {
        input.graph = largest_component(&input.graph)?;
    }
    Ok(input)
}

pub fn out_dir(common: &CommonArgs, default: &str) -> PathBuf {
    common.out.clone().unwrap_or_else(|| PathBuf::from(default))
}

pub fn ensure_dir(dir: &Path) -> CliResult<()> {
    fs::create_dir_all(dir).map_err(|e| CliError::Data(format!("{}: {e}", dir.display())))?;
    Ok(())
}

pub fn write_file(path: &Path, contents: &str) -> CliResult<()> {
    if let Some(parent) = path.parent() {
        ensure_dir(parent)?;
    }
    fs::write(path, contents).map_err(|e| CliError::Data(format!("{}: {e}", path.display())))?;
    Ok(())
}

/// Format a float for a report table: fixed 4 decimals, `nan` marker kept.
pub fn cell(x: f64) -> String {
    if x.is_nan() {
        "nan".to_string()
    } else {
        format!("{x:.4}")
    }
}
