use std::io::Write;
use std::process::ExitCode;

use apiground_cli::{run, Cli, Io};
use clap::Parser;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    let mut out = std::io::BufWriter::new(stdout.lock());
    let mut err = stderr.lock();
    let code = run(&cli, &mut Io { out: &mut out, err: &mut err });
    if out.flush().is_err() {
        return ExitCode::FAILURE;
    }
    ExitCode::from(code as u8)
}
