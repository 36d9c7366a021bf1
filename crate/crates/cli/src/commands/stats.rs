//! `stats`: network statistics as CSV on stdout, optionally written to files.

use gsc_core::stats::network_stats;

use crate::args::StatsArgs;
use crate::commands::{cell, out_dir, resolve_input, write_file};
use crate::errors::CliResult;

pub fn run(mut args: StatsArgs) -> CliResult<()> {
    crate::args::merge_common(&mut args.common)?;
    let input = resolve_input(&args.common)?;
    let s = network_stats(&input.graph);

    let header = "dataset,nodes,edges,avg_degree,max_degree,beta_th,assortativity";
    let row = format!(
        "{},{},{},{},{},{},{}",
        input.name,
        s.nodes,
        s.edges,
        cell(s.avg_degree),
        s.max_degree,
        cell(s.beta_th),
        cell(s.assortativity)
    );
    println!("{header}");
    println!("{row}");

    if args.common.out.is_some() {
        let dir = out_dir(&args.common, "gsc-out");
        write_file(&dir.join("stats.csv"), &format!("{header}\n{row}\n"))?;
        let json = serde_json::json!({
            "dataset": input.name,
            "graph_digest": input.graph.digest(),
            "stats": s,
        });
        write_file(
            &dir.join("stats.json"),
            &format!("{}\n", serde_json::to_string_pretty(&json).expect("serializable")),
        )?;
    }
    Ok(())
}
