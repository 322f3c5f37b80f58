use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use revring_cli::commands::{execute, Cli, CliError};

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(cli) {
        Ok(out) => {
            // a closed pipe (`| head`) is not worth a panic
            if !out.stdout.is_empty() {
                let _ = writeln!(std::io::stdout().lock(), "{}", out.stdout.trim_end());
            }
            if !out.stderr.is_empty() {
                let _ = writeln!(std::io::stderr().lock(), "{}", out.stderr.trim_end());
            }
            ExitCode::from(out.code as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if matches!(e, CliError::UnknownSuite(_)) {
                2
            } else {
                1
            })
        }
    }
}
