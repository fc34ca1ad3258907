use super::{decoupling_angle, mode_frequencies, rotated_exponent, CoupledParams, ErmakovPair};
use super::ermakov::solve_ermakov;
use crate::gaussian::GaussianExponent;
use crate::grid::TimeGrid;
use crate::{Error, Result};

/// Sudden change at `t = 0` of both frequencies and of the coupling
/// (which is zero beforehand). The field `ω_c` is the same on both sides.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuenchSpec {
    pub omega_i1: f64,
    pub omega_i2: f64,
    pub omega_f1: f64,
    pub omega_f2: f64,
    pub g_f: f64,
    pub omega_c: f64,
    pub omega_r: f64,
    /// Overrides the decoupling angle of the post-quench parameters.
    pub theta: Option<f64>,
}

impl QuenchSpec {
    pub fn validate(&self) -> Result<()> {
        for (name, v) in [
            ("omega_i1", self.omega_i1),
            ("omega_i2", self.omega_i2),
            ("omega_f1", self.omega_f1),
            ("omega_f2", self.omega_f2),
        ] {
            if !(v > 0.0 && v.is_finite()) {
                return Err(Error::param(name, format!("must be positive, got {v}")));
            }
        }
        self.post_params().map(|_| ())
    }

    pub fn theta(&self) -> f64 {
        self.theta
            .unwrap_or_else(|| decoupling_angle(self.g_f, self.omega_f1, self.omega_f2))
    }

    /// Parameters governing the evolution for `t > 0`.
    pub fn post_params(&self) -> Result<CoupledParams> {
        let p = CoupledParams {
            omega1: self.omega_f1,
            omega2: self.omega_f2,
            g: self.g_f,
            omega_c: self.omega_c,
            theta: self.theta(),
            omega_r: self.omega_r,
        };
        p.validate()?;
        Ok(p)
    }

    pub fn pre_params(&self) -> Result<CoupledParams> {
        let p = CoupledParams {
            omega1: self.omega_i1,
            omega2: self.omega_i2,
            g: 0.0,
            ..self.post_params()?
        };
        p.validate()?;
        Ok(p)
    }

    /// `(Ω_{i1}, Ω_{i2})`, evaluated at `φ = θ`.
    pub fn initial_frequencies(&self) -> Result<(f64, f64)> {
        let pre = self.pre_params()?;
        mode_frequencies(&pre, pre.theta).frequencies()
    }

    /// `(Ω_{f1}, Ω_{f2})`, evaluated at `φ = θ`.
    pub fn final_frequencies(&self) -> Result<(f64, f64)> {
        let post = self.post_params()?;
        mode_frequencies(&post, post.theta).frequencies()
    }

    /// Integrates both Ermakov equations over `grid`.
    pub fn evolve(&self, grid: TimeGrid) -> Result<QuenchEvolution> {
        self.validate()?;
        let post = self.post_params()?;
        let (o1, o2) = self.initial_frequencies()?;
        self.final_frequencies()?;
        let mode1 = solve_ermakov(|t| mode_frequencies(&post, post.phi(t)).omega1_sq, o1, grid)?;
        let mode2 = solve_ermakov(|t| mode_frequencies(&post, post.phi(t)).omega2_sq, o2, grid)?;
        Ok(QuenchEvolution { spec: *self, params: post, pair: ErmakovPair { mode1, mode2 } })
    }
}

/// Solved quench: post-quench parameters with both scale factors.
#[derive(Debug, Clone, PartialEq)]
pub struct QuenchEvolution {
    pub spec: QuenchSpec,
    pub params: CoupledParams,
    pub pair: ErmakovPair,
}

impl QuenchEvolution {
    pub fn grid(&self) -> TimeGrid {
        self.pair.grid()
    }

    pub fn exponent_at_index(&self, k: usize) -> Result<GaussianExponent> {
        exponent_at_index(&self.params, &self.pair, k)
    }

    pub fn exponent_at(&self, t: f64) -> Result<GaussianExponent> {
        gaussian_exponent_at(&self.params, &self.pair, t)
    }

    /// Closed-form `h_j²(t)`; exact only when `Ω_j` is constant after the
    /// quench, i.e. for `ω_c = 0`.
    pub fn analytic_h_squared(&self, mode: usize, t: f64) -> Result<f64> {
        let (i1, i2) = self.spec.initial_frequencies()?;
        let (f1, f2) = self.spec.final_frequencies()?;
        Ok(match mode {
            1 => super::quench_ermakov_analytic(i1, f1, t),
            2 => super::quench_ermakov_analytic(i2, f2, t),
            _ => return Err(Error::param("mode", format!("expected 1 or 2, got {mode}"))),
        })
    }
}

fn exponent_at_index(p: &CoupledParams, pair: &ErmakovPair, k: usize) -> Result<GaussianExponent> {
    let (m1, m2) = (&pair.mode1, &pair.mode2);
    if k >= m1.len() || k >= m2.len() {
        return Err(Error::OffGrid(pair.grid().at(k)));
    }
    let t = pair.grid().at(k);
    let (h1, h2) = (m1.h[k], m2.h[k]);
    if !(h1 > 0.0 && h2 > 0.0) {
        return Err(Error::ErmakovCollapse { t, h: h1.min(h2) });
    }
    let exp = rotated_exponent(
        m1.omega0 / h1,
        m2.omega0 / h2,
        m1.hdot[k] / h1,
        m2.hdot[k] / h2,
        p.phi(t),
    );
    exp.validate()?;
    Ok(exp)
}

/// Time-dependent exponent built from the Ermakov scale factors at `t`,
/// which must be a grid point of `pair`.
pub fn gaussian_exponent_at(p: &CoupledParams, pair: &ErmakovPair, t: f64) -> Result<GaussianExponent> {
    let k = pair.grid().index_of(t)?;
    exponent_at_index(p, pair, k)
}
