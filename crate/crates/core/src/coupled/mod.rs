//! Two coupled oscillators in a magnetic field.
//!
//! The bare Hamiltonian is rotated by the mixing angle `φ(t) = ω_c t + θ`,
//! after which each normal coordinate is an oscillator with squared
//! frequency `Ω_j²(t)` plus a residual coupling `Ω₁₂²(t)`.

mod ermakov;
mod quench;

pub use ermakov::{quench_ermakov_analytic, solve_ermakov, ErmakovPair, ErmakovSolution};
pub use quench::{gaussian_exponent_at, QuenchEvolution, QuenchSpec};

use crate::gaussian::GaussianExponent;
use crate::{Error, Result};

/// Physical constants of the two-oscillator model (`ħ = m = 1`).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoupledParams {
    pub omega1: f64,
    pub omega2: f64,
    /// Position-position coupling, units of frequency².
    pub g: f64,
    /// Cyclotron frequency `eB/2c`.
    pub omega_c: f64,
    /// Integration constant of the mixing angle.
    pub theta: f64,
    /// Frequency of the factorized reference state.
    pub omega_r: f64,
}

impl CoupledParams {
    /// Parameters with `θ` set to the decoupling angle.
    pub fn new(omega1: f64, omega2: f64, g: f64, omega_c: f64, omega_r: f64) -> Result<Self> {
        let p = Self {
            omega1,
            omega2,
            g,
            omega_c,
            theta: decoupling_angle(g, omega1, omega2),
            omega_r,
        };
        p.validate()?;
        Ok(p)
    }

    pub fn with_theta(mut self, theta: f64) -> Self {
        self.theta = theta;
        self
    }

    pub fn validate(&self) -> Result<()> {
        for (name, v) in [("omega1", self.omega1), ("omega2", self.omega2), ("omega_r", self.omega_r)] {
            if !(v > 0.0 && v.is_finite()) {
                return Err(Error::param(name, format!("must be positive, got {v}")));
            }
        }
        if !(self.omega_c >= 0.0 && self.omega_c.is_finite()) {
            return Err(Error::param("omega_c", format!("must be non-negative, got {}", self.omega_c)));
        }
        if !self.g.is_finite() || !self.theta.is_finite() {
            return Err(Error::param("g", "coupling and theta must be finite"));
        }
        Ok(())
    }

    /// Mixing angle at time `t`.
    pub fn phi(&self, t: f64) -> f64 {
        self.omega_c * t + self.theta
    }
}

/// Normal-mode squared frequencies and residual coupling at a given angle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModeFrequencies {
    pub omega1_sq: f64,
    pub omega2_sq: f64,
    pub omega12_sq: f64,
}

impl ModeFrequencies {
    /// Rejects inverted (non-positive) modes.
    pub fn check(&self) -> Result<()> {
        if self.omega1_sq <= 0.0 {
            return Err(Error::InvertedMode { mode: 1, omega_sq: self.omega1_sq });
        }
        if self.omega2_sq <= 0.0 {
            return Err(Error::InvertedMode { mode: 2, omega_sq: self.omega2_sq });
        }
        Ok(())
    }

    pub fn is_inverted(&self) -> bool {
        self.check().is_err()
    }

    /// `(Ω₁, Ω₂)`.
    pub fn frequencies(&self) -> Result<(f64, f64)> {
        self.check()?;
        Ok((self.omega1_sq.sqrt(), self.omega2_sq.sqrt()))
    }
}

/// Angle zeroing the residual coupling, `½ atan2(2g, ω₁² − ω₂²)`.
///
/// Lies in `(−π/2, π/2]`; the fully degenerate case `g = 0, ω₁ = ω₂`
/// returns 0.
pub fn decoupling_angle(g: f64, omega1: f64, omega2: f64) -> f64 {
    0.5 * (2.0 * g).atan2(omega1 * omega1 - omega2 * omega2)
}

pub fn mode_frequencies(p: &CoupledParams, phi: f64) -> ModeFrequencies {
    let (s, c) = phi.sin_cos();
    let (s2, c2) = (2.0 * phi).sin_cos();
    let w1 = p.omega1 * p.omega1;
    let w2 = p.omega2 * p.omega2;
    let wc = p.omega_c * p.omega_c;
    ModeFrequencies {
        omega1_sq: w1 * c * c + w2 * s * s + wc + p.g * s2,
        omega2_sq: w1 * s * s + w2 * c * c + wc - p.g * s2,
        omega12_sq: 0.5 * (w1 - w2) * s2 - p.g * c2,
    }
}

/// Exponent of the rotated product ground state with normal-mode
/// frequencies `Ω₁, Ω₂` at angle `θ`, with normal-mode chirps `κ_j`
/// (`κ_j = ḣ_j/h_j` in the time-dependent case).
pub(crate) fn rotated_exponent(
    omega1: f64,
    omega2: f64,
    chirp1: f64,
    chirp2: f64,
    phi: f64,
) -> GaussianExponent {
    use num_complex::Complex64;
    let (s, c) = phi.sin_cos();
    let z1 = Complex64::new(omega1, -chirp1);
    let z2 = Complex64::new(omega2, -chirp2);
    GaussianExponent {
        a1: z1 * (c * c) + z2 * (s * s),
        a2: z2 * (c * c) + z1 * (s * s),
        a12: (z1 - z2) * (s * c),
    }
}

/// Time-independent exponent at angle `θ` and its normalization
/// `(Ω₁Ω₂/π²)^¼`.
pub fn steady_state_exponent(p: &CoupledParams) -> Result<(GaussianExponent, f64)> {
    p.validate()?;
    let (o1, o2) = mode_frequencies(p, p.theta).frequencies()?;
    let exp = rotated_exponent(o1, o2, 0.0, 0.0, p.theta);
    exp.validate()?;
    let norm = (o1 * o2 / (std::f64::consts::PI * std::f64::consts::PI)).powf(0.25);
    Ok((exp, norm))
}
