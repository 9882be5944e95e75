use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use gramkern_cli::{run_to, Cli, USAGE_EXIT};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = std::io::stdout();
    let mut lock = stdout.lock();
    let result = run_to(&cli, &mut lock);
    let _ = lock.flush();
    match result {
        Ok(status) => ExitCode::from(status.code() as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(USAGE_EXIT as u8)
        }
    }
}
