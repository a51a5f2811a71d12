use std::io::Write;
use std::process::ExitCode;

use copula_ot::cli::{run, TOLERANCE_ENV};

fn main() -> ExitCode {
    let env = std::env::var(TOLERANCE_ENV).ok();
    let out = run(std::env::args_os(), env.as_deref());
    let _ = std::io::stdout().write_all(out.stdout.as_bytes());
    let _ = std::io::stderr().write_all(out.stderr.as_bytes());
    ExitCode::from(out.code as u8)
}
