use std::io::Write;
use std::process::ExitCode;

use apolar_cli::{run, summary, Cli};
use clap::Parser;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let report = run(&cli.command, &cli.global);
    let code = report.exit_code();
    match cli.global.json.as_deref() {
        Some("-") => print!("{}", report.to_json()),
        other => {
            let text = summary::render(&report);
            if report.error.is_some() {
                eprint!("{text}");
            } else {
                print!("{text}");
            }
            if let Some(path) = other {
                if let Err(e) = std::fs::File::create(path).and_then(|mut f| f.write_all(report.to_json().as_bytes())) {
                    eprintln!("error: cannot write {path}: {e}");
                    return ExitCode::from(1);
                }
            }
        }
    }
    ExitCode::from(code as u8)
}
