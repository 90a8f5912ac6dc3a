use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let (code, out) = dimeq_cli::run(std::env::args_os());
    if !out.is_empty() {
        // a closed pipe downstream is not an error worth reporting
        let _ = if code == 2 {
            writeln!(std::io::stderr(), "{out}")
        } else {
            writeln!(std::io::stdout(), "{out}")
        };
    }
    ExitCode::from(code as u8)
}
