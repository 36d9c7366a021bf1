//! Black-box behavior of the `gsc` binary: flags, formats, exit codes,
//! output files.

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn gsc(args: &[&str], cwd: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gsc"))
        .args(args)
        .current_dir(cwd)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

#[test]
fn stats_karate_row() {
    let dir = tempfile::tempdir().unwrap();
    let out = gsc(&["stats", "--dataset", "karate"], dir.path());
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("karate,34,78,4.5882,17,"), "{text}");
}

#[test]
fn stats_requires_an_input() {
    let dir = tempfile::tempdir().unwrap();
    let out = gsc(&["stats"], dir.path());
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("--dataset"));
}

#[test]
fn stats_rejects_empty_file_with_data_exit() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("empty.txt"), "# nothing here\n").unwrap();
    let out = gsc(&["stats", "--input", "empty.txt"], dir.path());
    assert_eq!(out.status.code(), Some(3));
    assert!(stderr(&out).contains("no edges"));
}

#[test]
fn stats_reads_gml_subset() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(
        dir.path().join("tiny.gml"),
        "graph [ node [ id 1 ] node [ id 2 ] node [ id 3 ]\n edge [ source 1 target 2 ]\n edge [ source 2 target 3 ] ]",
    )
    .unwrap();
    let out = gsc(
        &["stats", "--input", "tiny.gml", "--format", "gml-subset"],
        dir.path(),
    );
    assert!(out.status.success(), "{}", stderr(&out));
    assert!(stdout(&out).contains("tiny,3,2,"));
}

#[test]
fn unknown_dataset_lists_bundled_names() {
    let dir = tempfile::tempdir().unwrap();
    let out = gsc(&["stats", "--dataset", "nope"], dir.path());
    assert_eq!(out.status.code(), Some(2));
    let err = stderr(&out);
    assert!(err.contains("karate") && err.contains("yeast"), "{err}");
}

#[test]
fn unknown_method_lists_valid_tags() {
    let dir = tempfile::tempdir().unwrap();
    let out = gsc(&["rank", "--dataset", "karate", "--method", "zzz"], dir.path());
    assert_eq!(out.status.code(), Some(2));
    let err = stderr(&out);
    assert!(err.contains("pagerank") && err.contains("gsc"), "{err}");
}

#[test]
fn rank_writes_one_csv_per_method_with_n_rows() {
    let dir = tempfile::tempdir().unwrap();
    let out = gsc(
        &["rank", "--dataset", "karate", "--method", "gsc,ks", "--out", "r"],
        dir.path(),
    );
    assert!(out.status.success(), "{}", stderr(&out));
    for method in ["gsc", "ks"] {
        let csv = fs::read_to_string(dir.path().join("r").join(format!("rank_karate_{method}.csv"))).unwrap();
        assert_eq!(csv.lines().count(), 35); // header + 34 nodes
        assert!(csv.starts_with("node,score,rank\n"));
    }
}

#[test]
fn rank_ks_top_node_is_34() {
    let dir = tempfile::tempdir().unwrap();
    gsc(
        &["rank", "--dataset", "karate", "--method", "ks", "--out", "r"],
        dir.path(),
    );
    let csv = fs::read_to_string(dir.path().join("r/rank_karate_ks.csv")).unwrap();
    assert!(csv.lines().nth(1).unwrap().starts_with("34,"), "{csv}");
}

#[test]
fn rank_rejects_disconnected_unless_largest_component() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("two.txt"), "a b\nb c\nx y\n").unwrap();
    let out = gsc(&["rank", "--input", "two.txt", "--method", "degree"], dir.path());
    assert_eq!(out.status.code(), Some(3));
    assert!(stderr(&out).contains("2 components"));

    let out = gsc(
        &["rank", "--input", "two.txt", "--method", "degree", "--largest-component", "--out", "r"],
        dir.path(),
    );
    assert!(out.status.success(), "{}", stderr(&out));
    let csv = fs::read_to_string(dir.path().join("r/rank_two_degree.csv")).unwrap();
    assert_eq!(csv.lines().count(), 4); // header + the 3-node component
}

#[test]
fn sir_flags_and_bounds() {
    let dir = tempfile::tempdir().unwrap();
    let out = gsc(
        &["sir", "--dataset", "karate", "--beta", "1.5"],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(2));

    let out = gsc(
        &["sir", "--dataset", "karate", "--beta", "0", "--runs", "20", "--seed", "1", "--out", "s"],
        dir.path(),
    );
    assert!(out.status.success());
    let csv = fs::read_to_string(dir.path().join("s/sir_karate.csv")).unwrap();
    for line in csv.lines().skip(1) {
        assert_eq!(line.split(',').nth(1).unwrap(), "1"); // beta=0: every mean is 1
    }
}

#[test]
fn sir_same_seed_same_bytes() {
    let dir = tempfile::tempdir().unwrap();
    let args = |out: &str| {
        [
            "sir", "--dataset", "karate", "--beta", "0.13", "--runs", "50", "--seed", "7", "--out", out,
        ]
        .map(String::from)
    };
    let a = args("a");
    let b = args("b");
    gsc(&a.iter().map(String::as_str).collect::<Vec<_>>(), dir.path());
    gsc(&b.iter().map(String::as_str).collect::<Vec<_>>(), dir.path());
    let csv_a = fs::read(dir.path().join("a/sir_karate.csv")).unwrap();
    let csv_b = fs::read(dir.path().join("b/sir_karate.csv")).unwrap();
    assert_eq!(csv_a, csv_b);
}

#[test]
fn config_file_supplies_defaults_and_flags_override() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("run.conf"), "dataset=karate\nmethod=ks\nout=fromconf\n").unwrap();
    let out = gsc(&["rank", "--config", "run.conf"], dir.path());
    assert!(out.status.success(), "{}", stderr(&out));
    assert!(dir.path().join("fromconf/rank_karate_ks.csv").exists());

    // CLI --method overrides the config value
    let out = gsc(
        &["rank", "--config", "run.conf", "--method", "degree", "--out", "cli"],
        dir.path(),
    );
    assert!(out.status.success());
    assert!(dir.path().join("cli/rank_karate_degree.csv").exists());
    assert!(!dir.path().join("cli/rank_karate_ks.csv").exists());
}

#[test]
fn reproduce_refuses_overwrite_without_force() {
    let dir = tempfile::tempdir().unwrap();
    let base = [
        "reproduce", "--datasets", "karate", "--runs", "10", "--seed", "1", "--tables-only", "--out", "rep",
    ];
    let out = gsc(&base, dir.path());
    assert!(out.status.success(), "{}", stderr(&out));
    assert!(dir.path().join("rep/table1.csv").exists());
    assert!(dir.path().join("rep/deviation.csv").exists());

    let out = gsc(&base, dir.path());
    assert_eq!(out.status.code(), Some(3));
    assert!(stderr(&out).contains("--force"));

    let mut forced: Vec<&str> = base.to_vec();
    forced.push("--force");
    let out = gsc(&forced, dir.path());
    assert!(out.status.success());
}

#[test]
fn reproduce_emits_figures_for_cdf_and_sweep_datasets() {
    let dir = tempfile::tempdir().unwrap();
    let out = gsc(
        &[
            "reproduce", "--datasets", "dolphins,jazz", "--runs", "30", "--seed", "2", "--out", "rep",
        ],
        dir.path(),
    );
    assert!(out.status.success(), "{}", stderr(&out));
    assert!(dir.path().join("rep/cdf/dolphins.svg").exists());
    assert!(dir.path().join("rep/cdf/dolphins.csv").exists());
    assert!(dir.path().join("rep/sweep/jazz.svg").exists());
    let sweep = fs::read_to_string(dir.path().join("rep/sweep/jazz.csv")).unwrap();
    assert!(sweep.starts_with("method,beta,tau,runs,seed\n"));
    let svg = fs::read_to_string(dir.path().join("rep/sweep/jazz.svg")).unwrap();
    assert!(svg.contains("<polyline"));
}

#[test]
fn reproduce_beta_grid_flag() {
    let dir = tempfile::tempdir().unwrap();
    let out = gsc(
        &[
            "reproduce", "--datasets", "jazz", "--runs", "10", "--seed", "3",
            "--beta-grid", "0.02:0.04:0.01", "--out", "rep",
        ],
        dir.path(),
    );
    assert!(out.status.success(), "{}", stderr(&out));
    let sweep = fs::read_to_string(dir.path().join("rep/sweep/jazz.csv")).unwrap();
    let betas: std::collections::BTreeSet<&str> = sweep
        .lines()
        .skip(1)
        .map(|l| l.split(',').nth(1).unwrap())
        .collect();
    assert_eq!(betas.len(), 3, "{betas:?}");

    let out = gsc(
        &["reproduce", "--datasets", "jazz", "--beta-grid", "bogus", "--out", "x"],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(2));
}
