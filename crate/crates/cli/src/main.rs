use std::process::ExitCode;

fn main() -> ExitCode {
    let result = vactab_cli::run(std::env::args());
    if let Some(payload) = &result.payload {
        println!("{payload}");
    }
    for line in &result.diagnostics {
        eprintln!("{line}");
    }
    ExitCode::from(result.status.exit_code() as u8)
}
