use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let result = powersum::cli::run(std::env::args_os());
    // stdout and stderr are each written once
    let _ = std::io::stdout().lock().write_all(result.stdout.as_bytes());
    let _ = std::io::stderr().lock().write_all(result.stderr.as_bytes());
    ExitCode::from(result.exit_code as u8)
}
