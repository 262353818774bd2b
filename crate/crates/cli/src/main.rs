mod args;
mod commands;

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;

use args::Cli;

const EXIT_FAILED_CHECK: u8 = 1;
const EXIT_USAGE: u8 = 2;

fn destination(cli: &Cli, stem: &str, ext: &str) -> Option<PathBuf> {
    match (&cli.output, &cli.out_dir) {
        (Some(path), Some(dir)) if path.is_relative() => Some(dir.join(path)),
        (Some(path), _) => Some(path.clone()),
        (None, Some(dir)) => Some(dir.join(format!("{stem}.{ext}"))),
        (None, None) => None,
    }
}

fn emit(path: Option<PathBuf>, body: &str) -> std::io::Result<()> {
    match path {
        Some(path) => {
            if let Some(parent) = path.parent().filter(|p| !p.as_os_str().is_empty()) {
                fs::create_dir_all(parent)?;
            }
            fs::write(&path, body)?;
            eprintln!("wrote {}", path.display());
            Ok(())
        }
        None => std::io::stdout().lock().write_all(body.as_bytes()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(workers) = cli.workers {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(workers.max(1)).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_USAGE);
        }
    }
    let format = cli.format.unwrap_or_else(|| cli.command.default_format());
    let outcome = match commands::run(&cli.command, format, cli.budget) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_USAGE);
        }
    };
    if let Err(e) = emit(destination(&cli, &outcome.stem, format.extension()), &outcome.body) {
        eprintln!("error: {e}");
        return ExitCode::from(EXIT_USAGE);
    }
    if outcome.ok {
        ExitCode::SUCCESS
    } else {
        eprintln!("verification failed");
        ExitCode::from(EXIT_FAILED_CHECK)
    }
}
