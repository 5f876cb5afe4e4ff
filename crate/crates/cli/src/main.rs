use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use fatcut::Tolerance;
use fatcut_cli::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = Tolerance::from_env()
        .map_err(anyhow::Error::from)
        .and_then(|tol| run(cli, tol));
    match result {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(out.stdout.as_bytes());
            ExitCode::from(out.code as u8)
        }
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}
