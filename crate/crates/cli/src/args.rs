use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::grid::GridSpec;

#[derive(Debug, Parser)]
#[command(name = "oscinfo", version, about = "Sweeps and time series for coupled and transported oscillators")]
pub struct Cli {
    /// TOML file with one optional table per subcommand.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,

    /// Write CSV here instead of stdout.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Steady-state circuit depth against g, ω_c or detuning.
    #[command(allow_negative_numbers = true)]
    DepthSweep(DepthArgs),
    /// Synchronization, mutual information and depth after a quench.
    #[command(allow_negative_numbers = true)]
    Quench(QuenchArgs),
    /// Coherent amplitude, fidelity, complexity and Q for transport protocols.
    #[command(allow_negative_numbers = true)]
    Transport(TransportArgs),
    /// Steady-state synchronization and mutual information against detuning.
    #[command(allow_negative_numbers = true)]
    SyncSweep(SyncArgs),
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::DepthSweep(_) => "depth-sweep",
            Command::Quench(_) => "quench",
            Command::Transport(_) => "transport",
            Command::SyncSweep(_) => "sync-sweep",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SweepVar {
    G,
    OmegaC,
    Detuning,
}

impl SweepVar {
    pub fn column(&self) -> &'static str {
        match self {
            SweepVar::G => "g",
            SweepVar::OmegaC => "omega_c",
            SweepVar::Detuning => "detuning",
        }
    }
}

/// Fills unset fields of `$flags` from `$file`.
macro_rules! overlay {
    ($flags:ident, $file:ident; $($field:ident),+) => {
        $( if $flags.$field.is_none() { $flags.$field = $file.$field; } )+
    };
}

#[derive(Debug, Clone, Default, Args, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DepthArgs {
    #[arg(long)]
    pub omega1: Option<f64>,
    #[arg(long)]
    pub omega2: Option<f64>,
    #[arg(long)]
    pub g: Option<f64>,
    #[arg(long)]
    pub omega_c: Option<f64>,
    #[arg(long)]
    pub omega_r: Option<f64>,
    #[arg(long, value_enum)]
    pub sweep: Option<SweepVar>,
    /// Sweep values as start:stop:count.
    #[arg(long)]
    pub grid: Option<GridSpec>,
}

impl DepthArgs {
    pub fn overlay(mut self, file: Self) -> Self {
        overlay!(self, file; omega1, omega2, g, omega_c, omega_r, sweep, grid);
        self
    }
}

#[derive(Debug, Clone, Default, Args, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SyncArgs {
    #[arg(long)]
    pub omega1: Option<f64>,
    #[arg(long)]
    pub g: Option<f64>,
    #[arg(long)]
    pub omega_c: Option<f64>,
    /// Detuning values ω₂ − ω₁ as start:stop:count.
    #[arg(long)]
    pub grid: Option<GridSpec>,
}

impl SyncArgs {
    pub fn overlay(mut self, file: Self) -> Self {
        overlay!(self, file; omega1, g, omega_c, grid);
        self
    }
}

#[derive(Debug, Clone, Default, Args, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QuenchArgs {
    #[arg(long)]
    pub omega_i1: Option<f64>,
    #[arg(long)]
    pub omega_i2: Option<f64>,
    #[arg(long)]
    pub omega_f1: Option<f64>,
    #[arg(long)]
    pub omega_f2: Option<f64>,
    /// Coupling after the quench.
    #[arg(long)]
    pub g: Option<f64>,
    #[arg(long)]
    pub omega_c: Option<f64>,
    #[arg(long)]
    pub omega_r: Option<f64>,
    /// Mixing angle at t = 0; defaults to the post-quench decoupling angle.
    #[arg(long)]
    pub theta: Option<f64>,
    /// Largest integration step.
    #[arg(long)]
    pub max_step: Option<f64>,
    /// Output times as 0:stop:count.
    #[arg(long)]
    pub grid: Option<GridSpec>,
}

impl QuenchArgs {
    pub fn overlay(mut self, file: Self) -> Self {
        overlay!(self, file; omega_i1, omega_i2, omega_f1, omega_f2, g, omega_c, omega_r, theta, max_step, grid);
        self
    }
}

#[derive(Debug, Clone, Default, Args, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TransportArgs {
    /// Comma-separated protocol names.
    #[arg(long, value_delimiter = ',')]
    pub protocol: Option<Vec<String>>,
    #[arg(long)]
    pub mass: Option<f64>,
    #[arg(long)]
    pub omega: Option<f64>,
    #[arg(long)]
    pub beta: Option<f64>,
    #[arg(long)]
    pub d0: Option<f64>,
    #[arg(long)]
    pub length: Option<f64>,
    #[arg(long)]
    pub duration: Option<f64>,
    /// Two-column `t d` file for the tabulated protocol.
    #[arg(long)]
    pub table: Option<PathBuf>,
    #[arg(long)]
    pub max_step: Option<f64>,
    /// Output times as 0:stop:count.
    #[arg(long)]
    pub grid: Option<GridSpec>,
}

impl TransportArgs {
    pub fn overlay(mut self, file: Self) -> Self {
        overlay!(self, file; protocol, mass, omega, beta, d0, length, duration, table, max_step, grid);
        self
    }
}

/// Contents of a `--config` file.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields, rename_all = "kebab-case")]
pub struct ConfigFile {
    #[serde(default)]
    pub depth_sweep: DepthArgs,
    #[serde(default)]
    pub quench: QuenchArgs,
    #[serde(default)]
    pub transport: TransportArgs,
    #[serde(default)]
    pub sync_sweep: SyncArgs,
}

impl ConfigFile {
    /// Parses TOML, reporting the first error as `path:line: message`.
    pub fn parse(text: &str, origin: &str) -> Result<Self, String> {
        toml::from_str(text).map_err(|e| {
            let line = e.span().map(|s| text[..s.start].matches('\n').count() + 1);
            let msg = e.message().replace('\n', " ");
            match line {
                Some(l) => format!("{origin}:{l}: {}", msg.trim()),
                None => format!("{origin}: {}", msg.trim()),
            }
        })
    }
}
