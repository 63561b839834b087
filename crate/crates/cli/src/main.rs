use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use nmsa_cli::args::Cli;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match nmsa_cli::run(&cli) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            if stdout
                .write_all(out.as_bytes())
                .and_then(|_| stdout.flush())
                .is_err()
            {
                return ExitCode::from(1);
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
