use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use pathtt_cli::{run, Cli, CliError};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            // --help and --version
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let first = e.to_string().lines().next().unwrap_or("").trim_start_matches("error: ").to_string();
            eprintln!("{}", CliError::Usage(first).diagnostic());
            return ExitCode::from(1);
        }
    };
    match run(&cli) {
        Ok(out) => {
            let body = if cli.json {
                serde_json::to_string_pretty(&out.json).expect("json values serialize") + "\n"
            } else {
                out.text
            };
            let _ = std::io::stdout().write_all(body.as_bytes());
            if out.exit == 3 {
                eprintln!("{}", CliError::VerifyFailed("some invariant cases failed".into()).diagnostic());
            }
            ExitCode::from(out.exit as u8)
        }
        Err(e) => {
            eprintln!("{}", e.diagnostic());
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
