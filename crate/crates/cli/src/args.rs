//! Flag definitions and the key=value config file that mirrors them.
//! Command-line values take precedence over config-file values.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::errors::{CliError, CliResult};

#[derive(Parser, Debug)]
#[command(
    name = "gsc",
    version,
    about = "Node-influence ranking and SIR spreading evaluation for undirected networks"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Network statistics (size, degrees, epidemic threshold, assortativity)
    Stats(StatsArgs),
    /// Rank nodes with one or more methods, one CSV per method
    Rank(RankArgs),
    /// Monte-Carlo SIR spreading capability per node
    Sir(SirArgs),
    /// Rebuild the summary tables, curves and deviation report for the bundled datasets
    Reproduce(ReproduceArgs),
}

#[derive(Args, Debug, Clone)]
pub struct CommonArgs {
    /// Bundled dataset name (see README for the list)
    #[arg(long)]
    pub dataset: Option<String>,

    /// Input file path (alternative to --dataset)
    #[arg(long)]
    pub input: Option<PathBuf>,

    /// Input format: edge-list | gml-subset
    #[arg(long)]
    pub format: Option<String>,

    /// Extract the largest connected component before analysis
    #[arg(long)]
    pub largest_component: bool,

    /// Output directory
    #[arg(long)]
    pub out: Option<PathBuf>,

    /// Overwrite existing outputs
    #[arg(long)]
    pub force: bool,

    /// key=value file providing defaults for any flag
    #[arg(long)]
    pub config: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct StatsArgs {
    #[command(flatten)]
    pub common: CommonArgs,
}

#[derive(Args, Debug)]
pub struct RankArgs {
    #[command(flatten)]
    pub common: CommonArgs,

    /// Comma-separated method tags (degree, ks, cn, h, lh, gravity, igc, bc, cc, ec, pagerank, gsc)
    #[arg(long)]
    pub method: Option<String>,
}

#[derive(Args, Debug)]
pub struct SirArgs {
    #[command(flatten)]
    pub common: CommonArgs,

    /// Per-edge per-step infection probability (defaults to the dataset's table value)
    #[arg(long)]
    pub beta: Option<f64>,

    /// Per-step recovery probability
    #[arg(long)]
    pub gamma: Option<f64>,

    /// Monte-Carlo repetitions per source node
    #[arg(long)]
    pub runs: Option<u32>,

    /// Base seed for the run
    #[arg(long)]
    pub seed: Option<u64>,
}

#[derive(Args, Debug)]
pub struct ReproduceArgs {
    #[command(flatten)]
    pub common: CommonArgs,

    /// Comma-separated subset of datasets (default: all)
    #[arg(long)]
    pub datasets: Option<String>,

    /// Monte-Carlo repetitions per source node
    #[arg(long)]
    pub runs: Option<u32>,

    /// Base seed
    #[arg(long)]
    pub seed: Option<u64>,

    /// Top-k size for the ranking comparison table
    #[arg(long)]
    pub k: Option<usize>,

    /// Infection-rate grid "start:stop:step" for the sweep figures
    #[arg(long)]
    pub beta_grid: Option<String>,

    /// Skip the CDF and sweep figure outputs
    #[arg(long)]
    pub tables_only: bool,
}

/// Parsed key=value config file.
#[derive(Debug, Default, Clone)]
pub struct ConfigFile {
    entries: std::collections::HashMap<String, String>,
}

impl ConfigFile {
    pub fn load(path: &std::path::Path) -> CliResult<ConfigFile> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Data(format!("config {}: {e}", path.display())))?;
        let mut entries = std::collections::HashMap::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let Some((key, value)) = line.split_once('=') else {
                return Err(CliError::Data(format!(
                    "config {} line {}: expected key=value",
                    path.display(),
                    lineno + 1
                )));
            };
            entries.insert(key.trim().to_string(), value.trim().to_string());
        }
        Ok(ConfigFile { entries })
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.entries.get(key).map(String::as_str)
    }

    pub fn get_parsed<T: std::str::FromStr>(&self, key: &str) -> CliResult<Option<T>> {
        match self.entries.get(key) {
            None => Ok(None),
            Some(raw) => raw.parse::<T>().map(Some).map_err(|_| {
                CliError::Data(format!("config key '{key}': cannot parse '{raw}'"))
            }),
        }
    }

    pub fn get_bool(&self, key: &str) -> CliResult<bool> {
        match self.entries.get(key).map(String::as_str) {
            None => Ok(false),
            Some("true") | Some("1") => Ok(true),
            Some("false") | Some("0") => Ok(false),
            Some(other) => Err(CliError::Data(format!(
                "config key '{key}': expected true/false, got '{other}'"
            ))),
        }
    }
}

/// Fold config-file defaults into the common flags.
pub fn merge_common(common: &mut CommonArgs) -> CliResult<ConfigFile> {
    let config = match &common.config {
        Some(path) => ConfigFile::load(path)?,
        None => ConfigFile::default(),
    };
    if common.dataset.is_none() {
        common.dataset = config.get("dataset").map(String::from);
    }
    if common.input.is_none() {
        common.input = config.get("input").map(PathBuf::from);
    }
    if common.format.is_none() {
        common.format = config.get("format").map(String::from);
    }
    if common.out.is_none() {
        common.out = config.get("out").map(PathBuf::from);
    }
    common.largest_component |= config.get_bool("largest-component")?;
    common.force |= config.get_bool("force")?;
    Ok(config)
}

/// Parse "start:stop:step" into an inclusive grid.
pub fn parse_beta_grid(text: &str) -> CliResult<Vec<f64>> {
    let parts: Vec<&str> = text.split(':').collect();
    if parts.len() != 3 {
        return Err(CliError::Usage(format!(
            "--beta-grid expects start:stop:step, got '{text}'"
        )));
    }
    let parse = |s: &str| -> CliResult<f64> {
        s.parse()
            .map_err(|_| CliError::Usage(format!("--beta-grid: '{s}' is not a number")))
    };
    let (start, stop, step) = (parse(parts[0])?, parse(parts[1])?, parse(parts[2])?);
    if step <= 0.0 || stop < start || start < 0.0 || stop > 1.0 {
        return Err(CliError::Usage(format!(
            "--beta-grid: need 0 <= start <= stop <= 1 and step > 0, got '{text}'"
        )));
    }
    let mut grid = Vec::new();
    let mut x = start;
    while x <= stop + 1e-12 {
        grid.push((x * 1e12).round() / 1e12);
        x += step;
    }
    Ok(grid)
}
