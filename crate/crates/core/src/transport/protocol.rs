use std::collections::BTreeMap;
use std::f64::consts::PI;
use std::fmt;

use num_complex::Complex64;

use super::TransportParams;
use crate::{Error, Result};

/// A trajectory `d(t)` of the trap minimum, starting at `d(0) = 0`.
pub trait TransportProtocol: fmt::Debug + Send + Sync {
    fn name(&self) -> &str;

    fn displacement(&self, t: f64) -> f64;

    /// `ḋ(t)`, excluding any delta contribution at a jump.
    fn velocity(&self, t: f64) -> f64;

    /// Exact `α(t)` for protocols whose quadrature is ill-posed (jumps).
    fn closed_form_alpha(&self, _params: &TransportParams, _t: f64) -> Option<Complex64> {
        None
    }
}

/// Trap jumps to `d0` immediately after `t = 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Sudden {
    pub d0: f64,
}

impl TransportProtocol for Sudden {
    fn name(&self) -> &str {
        "sudden"
    }

    fn displacement(&self, t: f64) -> f64 {
        if t > 0.0 {
            self.d0
        } else {
            0.0
        }
    }

    fn velocity(&self, _t: f64) -> f64 {
        0.0
    }

    fn closed_form_alpha(&self, params: &TransportParams, t: f64) -> Option<Complex64> {
        let phase = Complex64::from_polar(1.0, -params.omega * t);
        Some(params.amplitude_scale() * self.d0 * (Complex64::from(1.0) - phase))
    }
}

/// `d(t) = L sin²(πt / 2T)` up to `T`, then held at `L`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Smooth {
    pub length: f64,
    pub duration: f64,
}

impl Smooth {
    pub fn new(length: f64, duration: f64) -> Result<Self> {
        if !(duration > 0.0 && duration.is_finite()) {
            return Err(Error::param("duration", format!("must be positive, got {duration}")));
        }
        if !length.is_finite() {
            return Err(Error::param("length", "must be finite"));
        }
        Ok(Self { length, duration })
    }
}

impl TransportProtocol for Smooth {
    fn name(&self) -> &str {
        "smooth"
    }

    fn displacement(&self, t: f64) -> f64 {
        if t >= self.duration {
            self.length
        } else {
            self.length * (PI * t / (2.0 * self.duration)).sin().powi(2)
        }
    }

    fn velocity(&self, t: f64) -> f64 {
        if t >= self.duration || t < 0.0 {
            0.0
        } else {
            self.length * PI / (2.0 * self.duration) * (PI * t / self.duration).sin()
        }
    }
}

/// Piecewise-linear `d(t)` through tabulated points; velocities are
/// centered differences at the nodes, interpolated linearly between them.
/// Past the last point the trap rests.
#[derive(Debug, Clone, PartialEq)]
pub struct Tabulated {
    times: Vec<f64>,
    positions: Vec<f64>,
    velocities: Vec<f64>,
}

impl Tabulated {
    pub fn new(points: &[(f64, f64)]) -> Result<Self> {
        if points.len() < 2 {
            return Err(Error::param("table", "need at least two points"));
        }
        if points[0].0 != 0.0 || points[0].1 != 0.0 {
            return Err(Error::param("table", format!("must start at (0, 0), got {:?}", points[0])));
        }
        if points.iter().any(|(t, d)| !t.is_finite() || !d.is_finite()) {
            return Err(Error::param("table", "non-finite entry"));
        }
        if let Some(w) = points.windows(2).find(|w| w[1].0 <= w[0].0) {
            return Err(Error::param("table", format!("times not increasing at t = {}", w[1].0)));
        }
        let times: Vec<f64> = points.iter().map(|p| p.0).collect();
        let positions: Vec<f64> = points.iter().map(|p| p.1).collect();
        let n = times.len();
        let velocities = (0..n)
            .map(|i| {
                let (a, b) = (i.saturating_sub(1), (i + 1).min(n - 1));
                (positions[b] - positions[a]) / (times[b] - times[a])
            })
            .collect();
        Ok(Self { times, positions, velocities })
    }

    fn interpolate(&self, values: &[f64], t: f64) -> Option<f64> {
        let last = *self.times.last()?;
        if t < 0.0 || t > last {
            return None;
        }
        let i = self.times.partition_point(|&x| x <= t).clamp(1, self.times.len() - 1);
        let (t0, t1) = (self.times[i - 1], self.times[i]);
        let w = (t - t0) / (t1 - t0);
        Some(values[i - 1] * (1.0 - w) + values[i] * w)
    }
}

impl TransportProtocol for Tabulated {
    fn name(&self) -> &str {
        "tabulated"
    }

    fn displacement(&self, t: f64) -> f64 {
        match self.interpolate(&self.positions, t) {
            Some(d) => d,
            None if t < 0.0 => 0.0,
            None => *self.positions.last().unwrap(),
        }
    }

    fn velocity(&self, t: f64) -> f64 {
        self.interpolate(&self.velocities, t).unwrap_or(0.0)
    }
}

/// Parameters a protocol factory may draw from.
#[derive(Debug, Clone, PartialEq)]
pub struct ProtocolSpec {
    pub d0: f64,
    pub length: f64,
    pub duration: f64,
    pub table: Option<Vec<(f64, f64)>>,
}

impl Default for ProtocolSpec {
    fn default() -> Self {
        Self { d0: 1.0, length: 1.0, duration: 2.0, table: None }
    }
}

type Factory = Box<dyn Fn(&ProtocolSpec) -> Result<Box<dyn TransportProtocol>> + Send + Sync>;

/// Protocols selectable by name.
pub struct ProtocolRegistry {
    factories: BTreeMap<String, Factory>,
}

impl ProtocolRegistry {
    pub fn empty() -> Self {
        Self { factories: BTreeMap::new() }
    }

    pub fn register<F>(&mut self, name: &str, factory: F)
    where
        F: Fn(&ProtocolSpec) -> Result<Box<dyn TransportProtocol>> + Send + Sync + 'static,
    {
        self.factories.insert(name.to_string(), Box::new(factory));
    }

    pub fn build(&self, name: &str, spec: &ProtocolSpec) -> Result<Box<dyn TransportProtocol>> {
        let factory = self
            .factories
            .get(name)
            .ok_or_else(|| Error::UnknownProtocol(name.to_string()))?;
        factory(spec)
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.factories.keys().map(String::as_str)
    }

    pub fn contains(&self, name: &str) -> bool {
        self.factories.contains_key(name)
    }
}

impl Default for ProtocolRegistry {
    fn default() -> Self {
        let mut reg = Self::empty();
        reg.register("sudden", |s| {
            if !s.d0.is_finite() {
                return Err(Error::param("d0", "must be finite"));
            }
            Ok(Box::new(Sudden { d0: s.d0 }))
        });
        reg.register("smooth", |s| Ok(Box::new(Smooth::new(s.length, s.duration)?)));
        reg.register("tabulated", |s| {
            let table = s
                .table
                .as_deref()
                .ok_or_else(|| Error::param("table", "tabulated protocol needs a table"))?;
            Ok(Box::new(Tabulated::new(table)?))
        });
        reg
    }
}

impl fmt::Debug for ProtocolRegistry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.names()).finish()
    }
}
