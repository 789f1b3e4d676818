use std::process::ExitCode;

use clap::Parser;
use legortho::cli::{exit_code_for, run, RunConfig};

fn main() -> ExitCode {
    let cfg = RunConfig::parse();
    let outcome = match run(&cfg) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("legortho: {e}");
            return ExitCode::from(exit_code_for(&e) as u8);
        }
    };
    let written = match &cfg.output_path {
        Some(path) => std::fs::write(path, &outcome.artifact),
        None => {
            use std::io::Write;
            std::io::stdout().write_all(outcome.artifact.as_bytes())
        }
    };
    if let Err(e) = written {
        eprintln!("legortho: {e}");
        return ExitCode::from(2);
    }
    ExitCode::from(outcome.exit_code as u8)
}
