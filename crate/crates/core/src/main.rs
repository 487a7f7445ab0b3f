use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use weighted_blowup::cli::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = run(&cli.command);
    let text = if cli.json {
        outcome.document.to_json() + "\n"
    } else {
        outcome.document.render()
    };
    // a closed pipe is not worth a panic
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
    ExitCode::from(outcome.exit_code(cli.strict) as u8)
}
