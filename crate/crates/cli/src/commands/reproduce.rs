//! `reproduce`: rebuild the summary tables, resolution curves, infection-rate
//! sweeps, and the deviation report against the published reference values.

use std::path::Path;
use std::time::Instant;

use gsc_core::baselines::MethodId;
use gsc_core::datasets::{dataset_default_beta, dataset_names, load_dataset};
use gsc_core::distance::apsp;
use gsc_core::eval::{accuracy_sweep, cdf_curve, kendall_tau_b, monotonicity, topk_overlap};
use gsc_core::graph::Graph;
use gsc_core::gsc::NodeVectors;
use gsc_core::ranking::Ranking;
use gsc_core::sir::{spreading_capability, SirParams};
use gsc_core::stats::network_stats;

use crate::args::{parse_beta_grid, ReproduceArgs};
use crate::commands::{cell, ensure_dir, out_dir, write_file};
use crate::errors::{CliError, CliResult};
use crate::reference;
use crate::svg::{render_svg, Series};

const CDF_DATASETS: [&str; 4] = ["dolphins", "football", "usair", "ws"];
const SWEEP_DATASETS: [&str; 4] = ["jazz", "email", "lfr2000", "yeast"];
const SWEEP_MULTIPLIERS: [f64; 6] = [0.5, 0.75, 1.0, 1.25, 1.5, 2.0];

struct DevRow {
    table: &'static str,
    dataset: String,
    cell: String,
    computed: f64,
    reference: f64,
    tolerance: f64,
    status: String,
}

impl DevRow {
    fn csv(&self) -> String {
        let diff = (self.computed - self.reference).abs();
        format!(
            "{},{},{},{},{},{},{},{}\n",
            self.table,
            self.dataset,
            self.cell,
            cell(self.computed),
            cell(self.reference),
            self.tolerance,
            if diff.is_nan() { "nan".into() } else { format!("{diff:.4}") },
            self.status
        )
    }
}

fn status_for(dataset: &str, within: bool, informational: bool) -> String {
    if within {
        return "ok".into();
    }
    if informational {
        return "informational".into();
    }
    match reference::dataset_status(dataset) {
        "canonical" => "deviates".into(),
        other => other.into(),
    }
}

pub fn run(mut args: ReproduceArgs) -> CliResult<()> {
    let config = crate::args::merge_common(&mut args.common)?;
    let runs = args.runs.or(config.get_parsed("runs")?).unwrap_or(1000);
    let seed = args.seed.or(config.get_parsed("seed")?).unwrap_or(42);
    let k = args.k.or(config.get_parsed("k")?).unwrap_or(10);
    let grid_spec = args.beta_grid.or_else(|| config.get("beta-grid").map(String::from));

    let all_names = dataset_names();
    let selected: Vec<String> = match args.datasets.or_else(|| config.get("datasets").map(String::from)) {
        None => all_names.iter().map(|s| s.to_string()).collect(),
        Some(list) => {
            let picked: Vec<String> = list
                .split(',')
                .map(|s| s.trim().to_string())
                .filter(|s| !s.is_empty())
                .collect();
            for name in &picked {
                if !all_names.contains(&name.as_str()) {
                    return Err(CliError::Usage(format!(
                        "unknown dataset '{name}'; bundled: {}",
                        all_names.join(", ")
                    )));
                }
            }
            picked
        }
    };

    let dir = out_dir(&args.common, "reproduce-out");
    if dir.join("table1.csv").exists() && !args.common.force {
        return Err(CliError::Data(format!(
            "{} already holds a report; pass --force to overwrite",
            dir.display()
        )));
    }
    ensure_dir(&dir)?;

    let columns = MethodId::TABLE_COLUMNS;
    let header: String = columns.iter().map(|m| m.column()).collect::<Vec<_>>().join(",");
    let mut table1 = String::from("dataset,nodes,edges,avg_degree,max_degree,beta_th,beta,assortativity\n");
    let mut table2 = format!("dataset,{header}\n");
    let mut table3 = format!("dataset,{header}\n");
    let mut table4 = String::from("dataset,rank,KS,cn,H,LH,GSC\n");
    let mut topk = String::from("dataset,method,overlap_with_gsc,k\n");
    let mut deviations: Vec<DevRow> = Vec::new();

    for name in &selected {
        let started = Instant::now();
        eprintln!("[{name}] loading");
        let g = load_dataset(name)?;
        let dm = apsp(&g)?;
        let beta = dataset_default_beta(name).expect("bundled datasets have a table beta");

        // ---- table 1 ----
        let s = network_stats(&g);
        table1.push_str(&format!(
            "{name},{},{},{},{},{},{},{}\n",
            s.nodes,
            s.edges,
            cell(s.avg_degree),
            s.max_degree,
            cell(s.beta_th),
            beta,
            cell(s.assortativity)
        ));
        if let Some(r) = reference::TABLE1.iter().find(|r| r.dataset == name) {
            let cells: [(&str, f64, f64, f64); 7] = [
                ("nodes", s.nodes as f64, r.nodes as f64, 0.0),
                ("edges", s.edges as f64, r.edges as f64, 0.0),
                ("avg_degree", s.avg_degree, r.avg_degree, 5e-4),
                ("max_degree", s.max_degree as f64, r.max_degree as f64, 0.0),
                ("beta_th", s.beta_th, r.beta_th, 1e-3),
                ("beta", beta, r.beta, 0.0),
                ("assortativity", s.assortativity, r.assortativity, 1e-3),
            ];
            for (label, computed, reference_v, tol) in cells {
                let within = (computed - reference_v).abs() <= tol;
                deviations.push(DevRow {
                    table: "table1",
                    dataset: name.clone(),
                    cell: label.into(),
                    computed,
                    reference: reference_v,
                    tolerance: tol,
                    status: status_for(name, within, false),
                });
            }
        }

        // ---- rankings ----
        eprintln!("[{name}] ranking ({} methods)", columns.len());
        let rankings: Vec<Option<Ranking>> = columns
            .iter()
            .map(|m| match m.rank(&g, &dm) {
                Ok(r) => Some(r),
                Err(e) => {
                    eprintln!("[{name}] {}: {e}", m.tag());
                    None
                }
            })
            .collect();

        // ---- table 2: monotonicity ----
        let m_values: Vec<f64> = rankings
            .iter()
            .map(|r| {
                r.as_ref()
                    .and_then(|r| monotonicity(r).ok())
                    .unwrap_or(f64::NAN)
            })
            .collect();
        table2.push_str(&format!(
            "{name},{}\n",
            m_values.iter().map(|&v| cell(v)).collect::<Vec<_>>().join(",")
        ));
        if let Some((_, refs)) = reference::TABLE2.iter().find(|(d, _)| d == name) {
            for (idx, method) in columns.iter().enumerate() {
                let informational = *method == MethodId::Gsc;
                let within = (m_values[idx] - refs[idx]).abs() <= 1e-3;
                deviations.push(DevRow {
                    table: "table2",
                    dataset: name.clone(),
                    cell: format!("M({})", method.column()),
                    computed: m_values[idx],
                    reference: refs[idx],
                    tolerance: 1e-3,
                    status: status_for(name, within, informational),
                });
            }
        }

        // ---- table 3: tau against simulated spreading ----
        eprintln!("[{name}] simulating (beta={beta}, runs={runs})");
        let params = SirParams {
            beta,
            gamma: 1.0,
            runs,
            seed,
        };
        let report = spreading_capability(&g, &params);
        let taus: Vec<f64> = rankings
            .iter()
            .map(|r| {
                r.as_ref()
                    .and_then(|r| kendall_tau_b(&r.scores_by_node(), &report.mean))
                    .unwrap_or(f64::NAN)
            })
            .collect();
        table3.push_str(&format!(
            "{name},{}\n",
            taus.iter().map(|&v| cell(v)).collect::<Vec<_>>().join(",")
        ));
        if let Some((_, refs)) = reference::TABLE3.iter().find(|(d, _)| d == name) {
            for (idx, method) in columns.iter().enumerate() {
                let informational = *method == MethodId::Gsc;
                let within = (taus[idx] - refs[idx]).abs() <= 0.05;
                deviations.push(DevRow {
                    table: "table3",
                    dataset: name.clone(),
                    cell: format!("tau({})", method.column()),
                    computed: taus[idx],
                    reference: refs[idx],
                    tolerance: 0.05,
                    status: status_for(name, within, informational),
                });
            }
        }

        // ---- table 4 + top-k agreement ----
        let labels = |m: MethodId| -> Vec<String> {
            let idx = columns.iter().position(|&c| c == m).expect("table method");
            match &rankings[idx] {
                Some(r) => r.top_ids(k).iter().map(|&id| g.label(id).to_string()).collect(),
                None => Vec::new(),
            }
        };
        let t4_methods = [
            MethodId::KShell,
            MethodId::NeighborhoodCoreness,
            MethodId::HIndex,
            MethodId::LocalHIndex,
            MethodId::Gsc,
        ];
        let lists: Vec<Vec<String>> = t4_methods.iter().map(|&m| labels(m)).collect();
        for row in 0..k {
            table4.push_str(&format!(
                "{name},{},{}\n",
                row + 1,
                lists
                    .iter()
                    .map(|l| l.get(row).cloned().unwrap_or_default())
                    .collect::<Vec<_>>()
                    .join(",")
            ));
        }

        let gsc_idx = columns.iter().position(|&c| c == MethodId::Gsc).expect("gsc column");
        if let Some(gsc_ranking) = &rankings[gsc_idx] {
            let published = reference::TOPK_VS_GSC.iter().find(|(d, _)| d == name);
            for (pos, m) in [
                MethodId::KShell,
                MethodId::NeighborhoodCoreness,
                MethodId::HIndex,
                MethodId::LocalHIndex,
            ]
            .iter()
            .enumerate()
            {
                let idx = columns.iter().position(|c| c == m).expect("table method");
                if let Some(r) = &rankings[idx] {
                    let overlap = topk_overlap(r, gsc_ranking, k);
                    topk.push_str(&format!("{name},{},{overlap},{k}\n", m.tag()));
                    if k == 10 {
                        if let Some((_, counts)) = published {
                            let within = overlap.abs_diff(counts[pos]) <= 1;
                            deviations.push(DevRow {
                                table: "topk",
                                dataset: name.clone(),
                                cell: format!("overlap({},GSC)", m.column()),
                                computed: overlap as f64,
                                reference: counts[pos] as f64,
                                tolerance: 1.0,
                                status: status_for(name, within, true),
                            });
                        }
                    }
                }
            }
        }
        if k == 10 {
            if let Some((_, published_lists)) = reference::TABLE4.iter().find(|(d, _)| d == name) {
                for (li, m) in t4_methods.iter().enumerate() {
                    let ours = &lists[li];
                    let matched = published_lists[li]
                        .iter()
                        .filter(|l| ours.iter().any(|o| o == *l))
                        .count();
                    let informational = *m == MethodId::Gsc;
                    deviations.push(DevRow {
                        table: "table4",
                        dataset: name.clone(),
                        cell: format!("top10_set_overlap({})", m.column()),
                        computed: matched as f64,
                        reference: 10.0,
                        tolerance: 2.0,
                        status: status_for(name, matched >= 8, informational),
                    });
                }
            }
        }

        // ---- figures ----
        if !args.tables_only {
            if CDF_DATASETS.contains(&name.as_str()) {
                write_cdf(&dir, name, &g, &columns, &rankings)?;
            }
            if SWEEP_DATASETS.contains(&name.as_str()) {
                let grid = match &grid_spec {
                    Some(spec) => parse_beta_grid(spec)?,
                    None => SWEEP_MULTIPLIERS
                        .iter()
                        .map(|m| ((m * beta) * 1e6).round() / 1e6)
                        .filter(|&b| b <= 1.0)
                        .collect(),
                };
                write_sweep(&dir, name, &g, &columns, &rankings, &grid, runs, seed)?;
            }
        }

        eprintln!("[{name}] done in {:?}", started.elapsed());
    }

    // ---- worked fixture values ----
    let fix7 = NodeVectors::from_counts(vec![5, 7, 0, 0]);
    let fix8 = NodeVectors::from_counts(vec![3, 4, 5, 0]);
    let fix13 = NodeVectors::from_counts(vec![3, 3, 4, 2]);
    let p78 = gsc_core::gsc::pearson_p(&fix7, &fix8).unwrap_or(f64::NAN);
    let p713 = gsc_core::gsc::pearson_p(&fix7, &fix13).unwrap_or(f64::NAN);
    let pinned78 =
        gsc_core::gsc::distance_corr(&fix7, &fix8, fix7.avg_distance(), fix8.avg_distance())
            .unwrap_or(f64::NAN);
    let cos78 = gsc_core::gsc::ndv_cosine(&fix7, &fix8).unwrap_or(f64::NAN);
    let cos713 = gsc_core::gsc::ndv_cosine(&fix7, &fix13).unwrap_or(f64::NAN);
    let fixture_rows = [
        ("pearson(7,8)", p78, reference::FIXTURE_P_7_8, 5e-4, None),
        ("pearson(7,13)", p713, reference::FIXTURE_P_7_13, 5e-4, None),
        (
            "distance_corr_pinned(7,8)",
            pinned78,
            reference::FIXTURE_D_7_8,
            5e-4,
            Some("published-value-not-reproduced-by-pinned-form"),
        ),
        ("ndv_cosine(7,8)", cos78, reference::FIXTURE_D_7_8, 5e-4, None),
        ("ndv_cosine(7,13)", cos713, reference::FIXTURE_D_7_13, 5e-4, None),
    ];
    for (label, computed, reference_v, tol, forced) in fixture_rows {
        let within = (computed - reference_v).abs() <= tol;
        deviations.push(DevRow {
            table: "fixtures",
            dataset: "example".into(),
            cell: label.into(),
            computed,
            reference: reference_v,
            tolerance: tol,
            status: forced
                .map(String::from)
                .unwrap_or_else(|| if within { "ok".into() } else { "deviates".into() }),
        });
    }

    write_file(&dir.join("table1.csv"), &table1)?;
    write_file(&dir.join("table2.csv"), &table2)?;
    write_file(&dir.join("table3.csv"), &table3)?;
    write_file(&dir.join("table4.csv"), &table4)?;
    write_file(&dir.join("topk.csv"), &topk)?;
    let mut dev_csv =
        String::from("table,dataset,cell,computed,reference,tolerance,abs_diff,status\n");
    for row in &deviations {
        dev_csv.push_str(&row.csv());
    }
    write_file(&dir.join("deviation.csv"), &dev_csv)?;

    let flagged = deviations.iter().filter(|d| d.status != "ok").count();
    println!(
        "reproduce: {} datasets, {} deviation cells flagged (of {}); outputs in {}",
        selected.len(),
        flagged,
        deviations.len(),
        dir.display()
    );
    Ok(())
}

fn write_cdf(
    dir: &Path,
    name: &str,
    _g: &Graph,
    columns: &[MethodId],
    rankings: &[Option<Ranking>],
) -> CliResult<()> {
    let mut csv = String::from("method,score_quantile,cumulative_fraction\n");
    let mut series = Vec::new();
    for (idx, method) in columns.iter().enumerate() {
        if let Some(r) = &rankings[idx] {
            let points = cdf_curve(r);
            for &(x, y) in &points {
                csv.push_str(&format!("{},{x:.6},{y:.6}\n", method.column()));
            }
            series.push(Series {
                label: method.column().to_string(),
                points,
                step: true,
            });
        }
    }
    write_file(&dir.join("cdf").join(format!("{name}.csv")), &csv)?;
    let svg = render_svg(
        &series,
        "normalized score",
        "cumulative fraction of nodes",
        &format!("Ranking resolution on {name}"),
    )?;
    write_file(&dir.join("cdf").join(format!("{name}.svg")), &svg)?;
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn write_sweep(
    dir: &Path,
    name: &str,
    g: &Graph,
    columns: &[MethodId],
    rankings: &[Option<Ranking>],
    grid: &[f64],
    runs: u32,
    seed: u64,
) -> CliResult<()> {
    let present: Vec<Ranking> = rankings.iter().flatten().cloned().collect();
    let params = SirParams {
        beta: 0.0,
        gamma: 1.0,
        runs,
        seed,
    };
    let rows = accuracy_sweep(g, &present, grid, &params)?;
    let mut csv = String::from("method,beta,tau,runs,seed\n");
    for row in &rows {
        csv.push_str(&format!("{},{},{},{runs},{seed}\n", row.method, row.beta, cell(row.tau)));
    }
    write_file(&dir.join("sweep").join(format!("{name}.csv")), &csv)?;

    let mut series = Vec::new();
    for method in columns {
        let points: Vec<(f64, f64)> = rows
            .iter()
            .filter(|r| r.method == method.tag() && r.tau.is_finite())
            .map(|r| (r.beta, r.tau))
            .collect();
        if !points.is_empty() {
            series.push(Series {
                label: method.column().to_string(),
                points,
                step: false,
            });
        }
    }
    let svg = render_svg(
        &series,
        "infection rate",
        "Kendall tau vs simulated spreading",
        &format!("Ranking accuracy across infection rates on {name}"),
    )?;
    write_file(&dir.join("sweep").join(format!("{name}.svg")), &svg)?;
    Ok(())
}
