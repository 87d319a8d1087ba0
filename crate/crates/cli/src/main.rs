use std::io;
use std::process::ExitCode;

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let stdout = io::stdout();
    let mut stdout = stdout.lock();
    let mut stderr = io::stderr();
    let outcome = scemb_cli::run(std::env::args_os().skip(1), &mut stdout, &mut stderr);
    ExitCode::from(outcome.exit_code as u8)
}
