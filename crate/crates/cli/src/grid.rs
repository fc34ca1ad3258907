use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

/// `start:stop:count`, inclusive at both ends.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct GridSpec {
    pub start: f64,
    pub stop: f64,
    pub count: usize,
}

impl GridSpec {
    pub fn new(start: f64, stop: f64, count: usize) -> Result<Self, String> {
        if !start.is_finite() || !stop.is_finite() {
            return Err(format!("grid bounds must be finite, got {start}:{stop}"));
        }
        if start >= stop {
            return Err(format!("grid start {start} must be below stop {stop}"));
        }
        if count < 2 {
            return Err(format!("grid count must be at least 2, got {count}"));
        }
        Ok(Self { start, stop, count })
    }

    pub fn step(&self) -> f64 {
        (self.stop - self.start) / (self.count - 1) as f64
    }

    pub fn points(&self) -> Vec<f64> {
        let last = self.count - 1;
        (0..self.count)
            .map(|k| if k == last { self.stop } else { self.start + k as f64 * self.step() })
            .collect()
    }
}

impl FromStr for GridSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts: Vec<&str> = s.split(':').collect();
        let [start, stop, count] = parts[..] else {
            return Err(format!("expected start:stop:count, got `{s}`"));
        };
        let num = |v: &str| v.trim().parse::<f64>().map_err(|e| format!("`{v}`: {e}"));
        let count = count.trim().parse::<usize>().map_err(|e| format!("count `{count}`: {e}"))?;
        Self::new(num(start)?, num(stop)?, count)
    }
}

impl TryFrom<String> for GridSpec {
    type Error = String;

    fn try_from(s: String) -> Result<Self, Self::Error> {
        s.parse()
    }
}

impl From<GridSpec> for String {
    fn from(g: GridSpec) -> Self {
        g.to_string()
    }
}

impl fmt::Display for GridSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}:{}", self.start, self.stop, self.count)
    }
}
