use std::io::Write;

use lmax::cli::{run, RunConfig};

fn main() {
    let outcome = match RunConfig::from_args(std::env::args_os()) {
        Ok(config) => run(&config, &mut std::io::stdin().lock()),
        Err(outcome) => outcome,
    };
    let _ = std::io::stdout().write_all(outcome.stdout.as_bytes());
    let _ = std::io::stderr().write_all(outcome.stderr.as_bytes());
    std::process::exit(outcome.code);
}
