use std::io::{self, Write};
use std::process::ExitCode;

use clap::Parser;
use rainbow_wheels::cli::{error_exit_code, error_record, run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let level = match cli.verbose {
        0 => "warn",
        1 => "info",
        _ => "debug",
    };
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or(level)).init();

    let stdout = io::stdout();
    let mut out = stdout.lock();
    let code = match run(&cli, &mut out) {
        Ok(status) => {
            if let Some(record) = status.record() {
                eprintln!("{record}");
            }
            status.exit_code()
        }
        Err(e) => {
            eprintln!("{}", error_record(&e));
            error_exit_code(&e)
        }
    };
    let _ = out.flush();
    ExitCode::from(code)
}
