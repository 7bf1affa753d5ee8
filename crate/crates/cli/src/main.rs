use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use prym_cli::{exit_for, run, Cli, Exit};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { Exit::Usage as u8 } else { 0 });
        }
    };
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    let code = match run(&cli, &mut out) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            exit_for(&e)
        }
    };
    let _ = out.flush();
    ExitCode::from(code as u8)
}
