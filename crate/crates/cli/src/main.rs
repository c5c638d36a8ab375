mod args;
mod commands;

use std::process::ExitCode;
use std::time::Instant;

use clap::Parser;
use repcalc_core::{Config, Error};
use serde_json::json;

use args::Cli;

fn load_config(cli: &Cli) -> Result<Config, Error> {
    match &cli.config {
        None => Ok(Config::default()),
        Some(path) => {
            let text = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
            Config::from_json(&text)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // help and version go to stdout with success; everything else is a usage error
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let argv: Vec<String> = std::env::args().skip(1).collect();
    let start = Instant::now();
    let result = load_config(&cli).and_then(|config| commands::run(&cli.command, &config));
    let wall_time_ms = start.elapsed().as_millis() as u64;
    let version = env!("CARGO_PKG_VERSION");
    let (body, code) = match result {
        Ok(out) => (
            json!({ "command": argv, "payload": out.payload, "wall_time_ms": wall_time_ms, "version": version }),
            u8::from(!out.ok),
        ),
        Err(e) => (
            json!({
                "command": argv,
                "error": { "kind": e.kind(), "message": e.to_string() },
                "wall_time_ms": wall_time_ms,
                "version": version,
            }),
            1,
        ),
    };
    println!("{}", serde_json::to_string_pretty(&body).expect("JSON values serialize"));
    ExitCode::from(code)
}
