use crate::grid::TimeGrid;
use crate::{Error, Result};

/// Scale factor `h(t)` of one normal mode, solving
/// `ḧ + Ω²(t) h = Ω₀² / h³` with `h(0) = 1`, `ḣ(0) = 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct ErmakovSolution {
    pub grid: TimeGrid,
    pub h: Vec<f64>,
    pub hdot: Vec<f64>,
    /// `Ω(0)`, the frequency the initial state is the ground state of.
    pub omega0: f64,
    /// Max over interior grid points of `|ḧ + Ω²h − Ω₀²/h³|`, with `ḧ`
    /// estimated by a fourth-order central difference of `ḣ`.
    pub residual: f64,
}

impl ErmakovSolution {
    pub fn len(&self) -> usize {
        self.h.len()
    }

    pub fn is_empty(&self) -> bool {
        self.h.is_empty()
    }

    pub fn h_squared(&self) -> impl Iterator<Item = f64> + '_ {
        self.h.iter().map(|h| h * h)
    }
}

/// Both normal modes on a shared grid.
#[derive(Debug, Clone, PartialEq)]
pub struct ErmakovPair {
    pub mode1: ErmakovSolution,
    pub mode2: ErmakovSolution,
}

impl ErmakovPair {
    pub fn grid(&self) -> TimeGrid {
        self.mode1.grid
    }

    pub fn residual(&self) -> f64 {
        self.mode1.residual.max(self.mode2.residual)
    }
}

fn rhs(omega_sq: f64, omega0_sq: f64, h: f64, v: f64) -> (f64, f64) {
    (v, -omega_sq * h + omega0_sq / (h * h * h))
}

/// Fixed-step classical Runge-Kutta integration on `grid`.
pub fn solve_ermakov<F>(omega_sq: F, omega0: f64, grid: TimeGrid) -> Result<ErmakovSolution>
where
    F: Fn(f64) -> f64,
{
    if !(omega0 > 0.0 && omega0.is_finite()) {
        return Err(Error::param("omega0", format!("must be positive, got {omega0}")));
    }
    let n = grid.len();
    let dt = grid.step();
    let w0 = omega0 * omega0;
    let mut h = Vec::with_capacity(n);
    let mut hdot = Vec::with_capacity(n);
    let (mut y, mut v) = (1.0, 0.0);
    h.push(y);
    hdot.push(v);

    for k in 0..n - 1 {
        let t = grid.at(k);
        let w_start = omega_sq(t);
        let w_mid = omega_sq(t + 0.5 * dt);
        let w_end = omega_sq(t + dt);
        if !(w_start.is_finite() && w_mid.is_finite() && w_end.is_finite()) {
            return Err(Error::param("omega_sq", format!("non-finite near t = {t}")));
        }
        let (k1y, k1v) = rhs(w_start, w0, y, v);
        let (k2y, k2v) = rhs(w_mid, w0, y + 0.5 * dt * k1y, v + 0.5 * dt * k1v);
        let (k3y, k3v) = rhs(w_mid, w0, y + 0.5 * dt * k2y, v + 0.5 * dt * k2v);
        let (k4y, k4v) = rhs(w_end, w0, y + dt * k3y, v + dt * k3v);
        y += dt / 6.0 * (k1y + 2.0 * k2y + 2.0 * k3y + k4y);
        v += dt / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v);
        if !(y > 0.0 && y.is_finite() && v.is_finite()) {
            return Err(Error::ErmakovCollapse { t: grid.at(k + 1), h: y });
        }
        h.push(y);
        hdot.push(v);
    }

    let mut residual = 0.0f64;
    for k in 2..n.saturating_sub(2) {
        let hddot = (-hdot[k + 2] + 8.0 * hdot[k + 1] - 8.0 * hdot[k - 1] + hdot[k - 2]) / (12.0 * dt);
        let r = hddot + omega_sq(grid.at(k)) * h[k] - w0 / h[k].powi(3);
        residual = residual.max(r.abs());
    }

    Ok(ErmakovSolution { grid, h, hdot, omega0, residual })
}

/// Closed-form `h²(t)` after a sudden change `Ω_i → Ω_f` at `t = 0`.
pub fn quench_ermakov_analytic(omega_i: f64, omega_f: f64, t: f64) -> f64 {
    let wi = omega_i * omega_i;
    let wf = omega_f * omega_f;
    (wf - wi) / (2.0 * wf) * (2.0 * omega_f * t).cos() + (wf + wi) / (2.0 * wf)
}
