use std::io::{self, Write};
use std::process::ExitCode;

use clap::Parser;
use locc_cli::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let stderr = io::stderr();
    let mut out = stdout.lock();
    let mut err = stderr.lock();
    let result = run(cli, &mut out, &mut err).and_then(|()| {
        out.flush().map_err(|e| locc_cli::CliError::Write {
            path: "<stdout>".into(),
            source: e,
        })
    });
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            let _ = writeln!(err, "locc: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
