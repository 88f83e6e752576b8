use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use hurwitz_cli::{run, RunConfig};

fn main() -> ExitCode {
    let cfg = RunConfig::parse();
    match run(&cfg) {
        Ok(out) => {
            print!("{}", out.stdout);
            std::io::stdout().flush().ok();
            match out.failure {
                None => ExitCode::SUCCESS,
                Some(e) => {
                    eprintln!("mhurwitz: {e}");
                    ExitCode::from(e.exit_code())
                }
            }
        }
        Err(e) => {
            eprintln!("mhurwitz: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
