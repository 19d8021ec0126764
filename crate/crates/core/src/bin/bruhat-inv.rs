use std::process::ExitCode;
use std::time::Instant;

use bruhat_involutions::cli::{run, Cli};
use clap::Parser;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let started = Instant::now();
    match run(&cli.command) {
        Ok(outcome) => {
            print!("{}", outcome.output);
            eprintln!("elapsed: {:.3}s", started.elapsed().as_secs_f64());
            if outcome.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
