mod args;
mod commands;
mod csv;
mod grid;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use anyhow::{anyhow, Context, Result};
use clap::Parser;

use args::{Cli, Command, ConfigFile};
use commands::{DepthConfig, QuenchConfig, SyncConfig, TransportConfig};

fn run(cli: Cli) -> Result<()> {
    let file = match &cli.config {
        Some(path) => {
            let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
            ConfigFile::parse(&text, &path.display().to_string()).map_err(|e| anyhow!(e))?
        }
        None => ConfigFile::default(),
    };
    let name = cli.command.name();
    let (table, resolved) = match cli.command {
        Command::DepthSweep(a) => {
            let cfg = DepthConfig::resolve(a.overlay(file.depth_sweep));
            (commands::depth_sweep(&cfg)?, serde_json::to_value(&cfg)?)
        }
        Command::SyncSweep(a) => {
            let cfg = SyncConfig::resolve(a.overlay(file.sync_sweep));
            (commands::sync_sweep(&cfg)?, serde_json::to_value(&cfg)?)
        }
        Command::Quench(a) => {
            let cfg = QuenchConfig::resolve(a.overlay(file.quench));
            (commands::quench(&cfg)?, serde_json::to_value(&cfg)?)
        }
        Command::Transport(a) => {
            let cfg = TransportConfig::resolve(a.overlay(file.transport));
            (commands::transport(&cfg)?, serde_json::to_value(&cfg)?)
        }
    };
    let mut sink: Box<dyn Write> = match &cli.output {
        Some(path) => Box::new(BufWriter::new(
            File::create(path).with_context(|| format!("creating {}", path.display()))?,
        )),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    };
    table.write(name, &resolved, &mut sink)?;
    sink.flush()?;
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) if e.downcast_ref::<io::Error>().is_some_and(|e| e.kind() == io::ErrorKind::BrokenPipe) => {
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("oscinfo: {e:#}");
            ExitCode::from(2)
        }
    }
}
