use crate::{Error, Result};

/// Uniform time grid `t_k = k * step`, `k = 0..count`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TimeGrid {
    step: f64,
    count: usize,
}

impl TimeGrid {
    pub fn new(step: f64, count: usize) -> Result<Self> {
        if !(step > 0.0 && step.is_finite()) {
            return Err(Error::param("step", format!("must be positive, got {step}")));
        }
        if count < 2 {
            return Err(Error::param("count", format!("need at least 2 points, got {count}")));
        }
        Ok(Self { step, count })
    }

    /// Grid covering `[0, stop]` with `count` points.
    pub fn span(stop: f64, count: usize) -> Result<Self> {
        if !(stop > 0.0) {
            return Err(Error::param("stop", format!("must be positive, got {stop}")));
        }
        if count < 2 {
            return Err(Error::param("count", format!("need at least 2 points, got {count}")));
        }
        Self::new(stop / (count - 1) as f64, count)
    }

    /// Smallest grid over `[0, stop]` whose step does not exceed `max_step`.
    pub fn with_max_step(stop: f64, max_step: f64) -> Result<Self> {
        if !(max_step > 0.0) {
            return Err(Error::param("max_step", format!("must be positive, got {max_step}")));
        }
        let intervals = (stop / max_step).ceil().max(1.0) as usize;
        Self::span(stop, intervals + 1)
    }

    pub fn step(&self) -> f64 {
        self.step
    }

    pub fn len(&self) -> usize {
        self.count
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn stop(&self) -> f64 {
        self.at(self.count - 1)
    }

    pub fn at(&self, k: usize) -> f64 {
        k as f64 * self.step
    }

    pub fn times(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.count).map(move |k| self.at(k))
    }

    /// Index of `t` if it lies on the grid (to a relative tolerance of 1e-9 of the step).
    pub fn index_of(&self, t: f64) -> Result<usize> {
        let x = t / self.step;
        let k = x.round();
        if k < 0.0 || k as usize >= self.count || (x - k).abs() > 1e-9 {
            return Err(Error::OffGrid(t));
        }
        Ok(k as usize)
    }
}
