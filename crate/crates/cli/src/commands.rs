use std::path::PathBuf;

use anyhow::{bail, ensure, Context, Result};
use oscinfo::coupled::{steady_state_exponent, CoupledParams, QuenchSpec};
use oscinfo::gaussian::exponent_to_covariance;
use oscinfo::metrics::{circuit_depth, depth_report, mutual_information, synchronization};
use oscinfo::transport::{alpha_of_t, coherent_complexity, read_table, ProtocolRegistry, ProtocolSpec, TransportParams};
use oscinfo::TimeGrid;
use rayon::prelude::*;
use serde::Serialize;

use crate::args::{DepthArgs, QuenchArgs, SweepVar, SyncArgs, TransportArgs};
use crate::csv::Table;
use crate::grid::GridSpec;

const DEFAULT_MAX_STEP: f64 = 1e-3;

fn grid_or(grid: Option<GridSpec>, default: &str) -> GridSpec {
    grid.unwrap_or_else(|| default.parse().expect("default grid"))
}

/// Integration grid refining `out` so that every output time is a node.
fn fine_grid(out: &GridSpec, max_step: f64) -> Result<(TimeGrid, usize)> {
    ensure!(out.start == 0.0, "time grids must start at 0, got {}", out.start);
    ensure!(max_step > 0.0 && max_step.is_finite(), "max_step must be positive, got {max_step}");
    let sub = (out.step() / max_step).ceil().max(1.0) as usize;
    let grid = TimeGrid::new(out.step() / sub as f64, (out.count - 1) * sub + 1)?;
    Ok((grid, sub))
}

#[derive(Debug, Clone, Serialize)]
pub struct DepthConfig {
    pub omega1: f64,
    pub omega2: f64,
    pub g: f64,
    pub omega_c: f64,
    pub omega_r: f64,
    pub sweep: SweepVar,
    pub grid: GridSpec,
}

impl DepthConfig {
    pub fn resolve(a: DepthArgs) -> Self {
        let sweep = a.sweep.unwrap_or(SweepVar::G);
        let (grid, omega_c) = match sweep {
            SweepVar::G => ("0:0.5:51", 1.5),
            SweepVar::OmegaC => ("1:100:100", 1.5),
            SweepVar::Detuning => ("0:2:41", 1.0),
        };
        Self {
            omega1: a.omega1.unwrap_or(1.0),
            omega2: a.omega2.unwrap_or(1.2),
            g: a.g.unwrap_or(0.5),
            omega_c: a.omega_c.unwrap_or(omega_c),
            omega_r: a.omega_r.unwrap_or(1.0),
            sweep,
            grid: grid_or(a.grid, grid),
        }
    }

    fn params_at(&self, x: f64) -> oscinfo::Result<CoupledParams> {
        let (mut w2, mut g, mut wc) = (self.omega2, self.g, self.omega_c);
        match self.sweep {
            SweepVar::G => g = x,
            SweepVar::OmegaC => wc = x,
            SweepVar::Detuning => w2 = self.omega1 + x,
        }
        CoupledParams::new(self.omega1, w2, g, wc, self.omega_r)
    }
}

pub fn depth_sweep(cfg: &DepthConfig) -> Result<Table> {
    let rows: Vec<oscinfo::Result<Vec<f64>>> = cfg
        .grid
        .points()
        .into_par_iter()
        .map(|x| {
            let p = cfg.params_at(x)?;
            let (exp, _) = steady_state_exponent(&p)?;
            let r = depth_report(&exp, p.omega_r, p.omega_c)?;
            Ok(vec![x, r.depth, r.weak_coupling, r.field_dominated.unwrap_or(f64::NAN)])
        })
        .collect();
    let mut table = Table::new(
        [cfg.sweep.column(), "depth", "weak_limit_diag", "field_limit_diag"].map(String::from).to_vec(),
    );
    for (x, row) in cfg.grid.points().into_iter().zip(rows) {
        table.rows.push(row.with_context(|| format!("at {} = {x}", cfg.sweep.column()))?);
    }
    Ok(table)
}

#[derive(Debug, Clone, Serialize)]
pub struct SyncConfig {
    pub omega1: f64,
    pub g: f64,
    pub omega_c: f64,
    pub grid: GridSpec,
}

impl SyncConfig {
    pub fn resolve(a: SyncArgs) -> Self {
        Self {
            omega1: a.omega1.unwrap_or(1.0),
            g: a.g.unwrap_or(0.5),
            omega_c: a.omega_c.unwrap_or(1.0),
            grid: grid_or(a.grid, "0:2:41"),
        }
    }
}

pub fn sync_sweep(cfg: &SyncConfig) -> Result<Table> {
    let rows: Vec<oscinfo::Result<Vec<f64>>> = cfg
        .grid
        .points()
        .into_par_iter()
        .map(|delta| {
            let w2 = cfg.omega1 + delta;
            let p = CoupledParams::new(cfg.omega1, w2, cfg.g, cfg.omega_c, 1.0)?;
            let sigma = exponent_to_covariance(&steady_state_exponent(&p)?.0)?;
            Ok(vec![delta, w2, synchronization(&sigma)?, mutual_information(&sigma)?])
        })
        .collect();
    let mut table = Table::new(["detuning", "omega2", "S_c", "I"].map(String::from).to_vec());
    for (x, row) in cfg.grid.points().into_iter().zip(rows) {
        table.rows.push(row.with_context(|| format!("at detuning = {x}"))?);
    }
    Ok(table)
}

#[derive(Debug, Clone, Serialize)]
pub struct QuenchConfig {
    pub omega_i1: f64,
    pub omega_i2: f64,
    pub omega_f1: f64,
    pub omega_f2: f64,
    pub g: f64,
    pub omega_c: f64,
    pub omega_r: f64,
    pub theta: Option<f64>,
    pub max_step: f64,
    pub grid: GridSpec,
}

impl QuenchConfig {
    pub fn resolve(a: QuenchArgs) -> Self {
        Self {
            omega_i1: a.omega_i1.unwrap_or(1.0),
            omega_i2: a.omega_i2.unwrap_or(1.0),
            omega_f1: a.omega_f1.unwrap_or(1.0),
            omega_f2: a.omega_f2.unwrap_or(1.0),
            g: a.g.unwrap_or(1.0),
            omega_c: a.omega_c.unwrap_or(1.0),
            omega_r: a.omega_r.unwrap_or(1.0),
            theta: a.theta,
            max_step: a.max_step.unwrap_or(DEFAULT_MAX_STEP),
            grid: grid_or(a.grid, "0:20:401"),
        }
    }

    fn spec(&self) -> QuenchSpec {
        QuenchSpec {
            omega_i1: self.omega_i1,
            omega_i2: self.omega_i2,
            omega_f1: self.omega_f1,
            omega_f2: self.omega_f2,
            g_f: self.g,
            omega_c: self.omega_c,
            omega_r: self.omega_r,
            theta: self.theta,
        }
    }
}

pub fn quench(cfg: &QuenchConfig) -> Result<Table> {
    let described = || format!("quench parameters {}", serde_json::to_string(cfg).unwrap_or_default());
    let (grid, sub) = fine_grid(&cfg.grid, cfg.max_step)?;
    let evo = cfg.spec().evolve(grid).with_context(described)?;
    let times = cfg.grid.points();
    let rows: Vec<oscinfo::Result<Vec<f64>>> = (0..times.len())
        .into_par_iter()
        .map(|k| {
            let i = k * sub;
            let exp = evo.exponent_at_index(i)?;
            let sigma = exponent_to_covariance(&exp)?;
            Ok(vec![
                times[k],
                synchronization(&sigma)?,
                mutual_information(&sigma)?,
                circuit_depth(&exp, cfg.omega_r)?,
                evo.pair.mode1.h[i],
                evo.pair.mode2.h[i],
            ])
        })
        .collect();
    let mut table = Table::new(["t", "S_c", "I", "depth", "h1", "h2"].map(String::from).to_vec());
    for (t, row) in times.iter().zip(rows) {
        table.rows.push(row.with_context(|| format!("at t = {t}")).with_context(described)?);
    }
    let span = cfg.grid.stop - cfg.grid.start;
    for (col, name) in [(1, "mean_S_c"), (2, "mean_I")] {
        let avg = table.rows.windows(2).map(|w| 0.5 * (w[0][col] + w[1][col]) * (w[1][0] - w[0][0])).sum::<f64>() / span;
        table.trailer.push((name.to_string(), avg));
    }
    Ok(table)
}

#[derive(Debug, Clone, Serialize)]
pub struct TransportConfig {
    pub protocol: Vec<String>,
    pub mass: f64,
    pub omega: f64,
    pub beta: f64,
    pub d0: f64,
    pub length: f64,
    pub duration: f64,
    pub table: Option<PathBuf>,
    pub max_step: f64,
    pub grid: GridSpec,
}

impl TransportConfig {
    pub fn resolve(a: TransportArgs) -> Self {
        Self {
            protocol: a.protocol.unwrap_or_else(|| vec!["sudden".into(), "smooth".into()]),
            mass: a.mass.unwrap_or(1.0),
            omega: a.omega.unwrap_or(2.0),
            beta: a.beta.unwrap_or(1.0),
            d0: a.d0.unwrap_or(1.0),
            length: a.length.unwrap_or(1.0),
            duration: a.duration.unwrap_or(2.0),
            table: a.table,
            max_step: a.max_step.unwrap_or(DEFAULT_MAX_STEP),
            grid: grid_or(a.grid, "0:10:1001"),
        }
    }
}

pub fn transport(cfg: &TransportConfig) -> Result<Table> {
    if cfg.protocol.is_empty() {
        bail!("no protocol selected");
    }
    let params = TransportParams::new(cfg.mass, cfg.omega, cfg.beta)?;
    let theta = params.theta()?;
    let table = match &cfg.table {
        Some(path) => Some(read_table(path)?),
        None => None,
    };
    let spec = ProtocolSpec { d0: cfg.d0, length: cfg.length, duration: cfg.duration, table };
    let registry = ProtocolRegistry::default();
    let protocols = cfg
        .protocol
        .iter()
        .map(|name| {
            registry.build(name, &spec).with_context(|| {
                format!("protocol `{name}` (known: {})", registry.names().collect::<Vec<_>>().join(", "))
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let (grid, sub) = fine_grid(&cfg.grid, cfg.max_step)?;
    let trajectories: Vec<_> = protocols.par_iter().map(|p| alpha_of_t(&params, p.as_ref(), grid)).collect();

    let mut columns = vec!["t".to_string()];
    for name in &cfg.protocol {
        for col in ["re_alpha", "im_alpha", "F", "C", "Q"] {
            columns.push(format!("{name}_{col}"));
        }
    }
    let mut out = Table::new(columns);
    for (k, t) in cfg.grid.points().into_iter().enumerate() {
        let mut row = vec![t];
        for traj in &trajectories {
            let a = traj.alpha[k * sub];
            row.extend([a.re, a.im, traj.fidelity_at(k * sub), coherent_complexity(a, theta), 2.0 * a.norm_sqr()]);
        }
        out.rows.push(row);
    }
    Ok(out)
}
