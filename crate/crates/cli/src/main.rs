//! `gsc`: rank nodes of undirected networks, simulate spreading, and rebuild
//! the benchmark report tables.

mod args;
mod commands;
mod errors;
mod reference;
mod svg;

use clap::Parser;

use args::{Cli, Command};

fn main() {
    let cli = Cli::parse(); // usage errors exit with code 2
    let result = match cli.command {
        Command::Stats(a) => commands::stats::run(a),
        Command::Rank(a) => commands::rank::run(a),
        Command::Sir(a) => commands::sir::run(a),
        Command::Reproduce(a) => commands::reproduce::run(a),
    };
    if let Err(e) = result {
        eprintln!("error: {e}");
        std::process::exit(e.exit_code());
    }
}
