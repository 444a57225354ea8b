use std::io::Write;
use std::process::ExitCode;
use std::time::Instant;

fn main() -> ExitCode {
    let start = Instant::now();
    let result = match summand_lab_cli::dispatch(std::env::args_os()) {
        Ok(r) => r,
        Err(e) => e.exit(),
    };
    // A closed pipe on stdout is not worth a panic.
    let _ = writeln!(std::io::stdout().lock(), "{}", result.to_json());
    let _ = writeln!(std::io::stderr(), "{} ({} ms)", result.summary().trim_end(), start.elapsed().as_millis());
    ExitCode::from(result.status.exit_code() as u8)
}
