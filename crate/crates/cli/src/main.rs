use std::io::Write;
use std::process::ExitCode;

use rncbetti_cli::{run_args, RunError};

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().collect();
    match run_args(&args) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(out.as_bytes()).is_err() {
                return ExitCode::from(1);
            }
            ExitCode::SUCCESS
        }
        Err(RunError::Usage(e)) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            ExitCode::from(code)
        }
        Err(RunError::Command(e)) => {
            eprintln!("{}", e.to_json());
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
