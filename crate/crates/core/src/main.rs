use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use dftn::cli::{run, Cli};

fn main() -> anyhow::Result<ExitCode> {
    let cli = Cli::parse();
    match run(cli) {
        Ok(outcome) => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(outcome.stdout.as_bytes())?;
            stdout.flush()?;
            Ok(ExitCode::from(outcome.exit_code as u8))
        }
        Err(e) => {
            eprintln!("dftn: {e}");
            Ok(ExitCode::from(1))
        }
    }
}
