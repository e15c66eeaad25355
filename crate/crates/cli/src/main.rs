use std::process::ExitCode;

use clap::error::ErrorKind;
use latquot_cli::run_args;
use serde_json::json;

fn main() -> ExitCode {
    let (outcome, output) = match run_args(std::env::args_os()) {
        Ok(parsed) => parsed,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            print!("{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            eprint!("{e}");
            let doc = json!({"error": {"kind": "UsageError", "message": e.kind().to_string(), "input": null}});
            println!("{doc}");
            return ExitCode::from(2);
        }
    };
    let text = outcome.render();
    match output {
        Some(path) => {
            if let Err(e) = std::fs::write(&path, &text) {
                eprintln!("cannot write {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{text}"),
    }
    ExitCode::from(outcome.exit_code as u8)
}
