//! A single ion carried by a moving harmonic trap.
//!
//! Starting from the motional ground state, the ion stays in a coherent
//! state `|α(t)⟩` relative to the instantaneous trap minimum, with
//! `α(t) = √(mω/2) (d(t) − e^{−iωt} ∫₀ᵗ ḋ(s) e^{iωs} ds)`.

mod protocol;
mod table;

pub use protocol::{ProtocolRegistry, ProtocolSpec, Smooth, Sudden, Tabulated, TransportProtocol};
pub use table::{parse_table, read_table};

use num_complex::Complex64;

use crate::grid::TimeGrid;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TransportParams {
    pub mass: f64,
    pub omega: f64,
    /// Inverse temperature of the thermofield-double purification;
    /// `f64::INFINITY` for zero temperature.
    pub beta: f64,
}

impl TransportParams {
    pub fn new(mass: f64, omega: f64, beta: f64) -> Result<Self> {
        for (name, v) in [("mass", mass), ("omega", omega)] {
            if !(v > 0.0 && v.is_finite()) {
                return Err(Error::param(name, format!("must be positive, got {v}")));
            }
        }
        if !(beta > 0.0) {
            return Err(Error::param("beta", format!("must be positive, got {beta}")));
        }
        Ok(Self { mass, omega, beta })
    }

    /// `√(mω/2)` with `ħ = 1`.
    pub fn amplitude_scale(&self) -> f64 {
        (0.5 * self.mass * self.omega).sqrt()
    }

    pub fn theta(&self) -> Result<f64> {
        tfd_theta(self.beta, self.omega)
    }
}

impl Default for TransportParams {
    fn default() -> Self {
        Self { mass: 1.0, omega: 2.0, beta: 1.0 }
    }
}

/// Coherent amplitude sampled on a grid.
#[derive(Debug, Clone, PartialEq)]
pub struct AmplitudeTrajectory {
    pub grid: TimeGrid,
    pub alpha: Vec<Complex64>,
}

impl AmplitudeTrajectory {
    pub fn fidelity_at(&self, k: usize) -> f64 {
        (-(self.alpha[k] - self.alpha[0]).norm_sqr()).exp()
    }

    pub fn fidelities(&self) -> Vec<f64> {
        (0..self.alpha.len()).map(|k| self.fidelity_at(k)).collect()
    }

    pub fn nonadiabaticities(&self) -> Vec<f64> {
        self.alpha.iter().map(|&a| nonadiabaticity(a)).collect()
    }

    pub fn at(&self, t: f64) -> Result<Complex64> {
        Ok(self.alpha[self.grid.index_of(t)?])
    }
}

/// Evaluates `α(t)` on `grid`.
///
/// Protocols with a closed form use it; the rest integrate `ḋ e^{iωs}`
/// with Simpson's rule on each grid interval (midpoint sampled).
pub fn alpha_of_t(
    params: &TransportParams,
    protocol: &dyn TransportProtocol,
    grid: TimeGrid,
) -> AmplitudeTrajectory {
    let scale = params.amplitude_scale();
    let w = params.omega;
    if protocol.closed_form_alpha(params, 0.0).is_some() {
        let alpha = grid
            .times()
            .map(|t| protocol.closed_form_alpha(params, t).unwrap())
            .collect();
        return AmplitudeTrajectory { grid, alpha };
    }

    let integrand = |t: f64| Complex64::from_polar(protocol.velocity(t), w * t);
    let dt = grid.step();
    let mut integral = Complex64::new(0.0, 0.0);
    let mut alpha = Vec::with_capacity(grid.len());
    let mut f_left = integrand(0.0);
    for (k, t) in grid.times().enumerate() {
        if k > 0 {
            let t0 = t - dt;
            let f_right = integrand(t);
            integral += (f_left + 4.0 * integrand(t0 + 0.5 * dt) + f_right) * (dt / 6.0);
            f_left = f_right;
        }
        let value = Complex64::from(protocol.displacement(t)) - Complex64::from_polar(1.0, -w * t) * integral;
        alpha.push(scale * value);
    }
    AmplitudeTrajectory { grid, alpha }
}

/// `exp(−|α(t) − α(0)|²)` at grid time `t`.
pub fn fidelity(traj: &AmplitudeTrajectory, t: f64) -> Result<f64> {
    Ok(traj.fidelity_at(traj.grid.index_of(t)?))
}

/// Two-mode squeezing `ϑ = atanh(e^{−βω/2})` of the thermofield double.
pub fn tfd_theta(beta: f64, omega: f64) -> Result<f64> {
    let x = beta * omega;
    if x.is_nan() || x <= 0.0 {
        return Err(Error::param("beta", format!("beta*omega must be positive, got {x}")));
    }
    if x.is_infinite() {
        return Ok(0.0);
    }
    Ok((-0.5 * x).exp().atanh())
}

const SERIES_BELOW: f64 = 1e-4;

fn x_over_sinh(x: f64) -> f64 {
    if x.abs() < SERIES_BELOW {
        let x2 = x * x;
        1.0 - x2 / 6.0 + 7.0 * x2 * x2 / 360.0
    } else {
        x / x.sinh()
    }
}

/// Complexity of a coherent state of amplitude `alpha` purified at
/// squeezing `theta`: `ϑ csch(ϑ/2) √((|α|²+2) cosh ϑ − 2)`.
///
/// Evaluated in the cancellation-free form
/// `2·(x/sinh x)·√(|α|² cosh ϑ + 4 sinh² x)` with `x = ϑ/2`; the `ϑ → 0`
/// limit is `2|α|`.
pub fn coherent_complexity(alpha: Complex64, theta: f64) -> f64 {
    let x = 0.5 * theta;
    let radicand = alpha.norm_sqr() * theta.cosh() + 4.0 * x.sinh().powi(2);
    2.0 * x_over_sinh(x) * radicand.sqrt()
}

/// The formula exactly as written; loses precision as `ϑ → 0` and is
/// undefined at `ϑ = 0`.
pub fn coherent_complexity_literal(alpha: Complex64, theta: f64) -> f64 {
    theta / (0.5 * theta).sinh() * ((alpha.norm_sqr() + 2.0) * theta.cosh() - 2.0).sqrt()
}

/// `(⟨H⟩ − E₀)/E₀ = 2|α|²`.
pub fn nonadiabaticity(alpha: Complex64) -> f64 {
    2.0 * alpha.norm_sqr()
}

/// `⟨H⟩ = ω(|α|² + ½)` with `ħ = 1`.
pub fn expectation_energy(alpha: Complex64, omega: f64) -> f64 {
    omega * (alpha.norm_sqr() + 0.5)
}
