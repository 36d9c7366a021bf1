//! `rank`: score nodes with the requested methods, one CSV (and JSON) each.

use gsc_core::baselines::MethodId;
use gsc_core::distance::apsp;

use crate::args::RankArgs;
use crate::commands::{out_dir, resolve_input, write_file};
use crate::errors::{CliError, CliResult};

pub fn run(mut args: RankArgs) -> CliResult<()> {
    let config = crate::args::merge_common(&mut args.common)?;
    let method_list = args
        .method
        .or_else(|| config.get("method").map(String::from))
        .unwrap_or_else(|| "gsc".to_string());

    let methods: Vec<MethodId> = method_list
        .split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(MethodId::parse)
        .collect::<Result<_, _>>()
        .map_err(|e| CliError::Usage(e.to_string()))?;
    if methods.is_empty() {
        return Err(CliError::Usage("--method: no methods given".into()));
    }

    let input = resolve_input(&args.common)?;
    let dm = apsp(&input.graph)?;
    let dir = out_dir(&args.common, "gsc-out");

    for method in methods {
        let ranking = method.rank(&input.graph, &dm)?;
        let base = format!("rank_{}_{}", input.name, method.tag());
        write_file(&dir.join(format!("{base}.csv")), &ranking.to_csv(&input.graph))?;
        let json = ranking.to_json(
            &input.graph,
            serde_json::json!({ "dataset": input.dataset, "method": method.tag() }),
        );
        write_file(
            &dir.join(format!("{base}.json")),
            &format!("{}\n", serde_json::to_string_pretty(&json).expect("serializable")),
        )?;
        let (top, score) = {
            let (id, s) = ranking.entries()[0];
            (input.graph.label(id).to_string(), s)
        };
        println!(
            "{}: wrote {}.csv (top node {} score {:.6})",
            method.tag(),
            dir.join(&base).display(),
            top,
            score
        );
    }
    Ok(())
}
