use std::fmt;
use std::str::FromStr;

use fadeber_core::modulation::linear_grid;

/// An inclusive, evenly spaced grid written as `start:stop:step`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    pub start: f64,
    pub stop: f64,
    pub step: f64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridError(String);

impl fmt::Display for GridError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for GridError {}

impl GridSpec {
    pub fn points(&self) -> Vec<f64> {
        linear_grid(self.start, self.stop, self.step).expect("validated at parse time")
    }
}

impl FromStr for GridSpec {
    type Err = GridError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts: Vec<&str> = s.split(':').collect();
        let [start, stop, step] = parts.as_slice() else {
            return Err(GridError(format!("expected start:stop:step, got `{s}`")));
        };
        let num = |field: &str, name: &str| {
            field
                .trim()
                .parse::<f64>()
                .ok()
                .filter(|v| v.is_finite())
                .ok_or_else(|| GridError(format!("grid {name} `{field}` is not a finite number")))
        };
        let g = GridSpec {
            start: num(start, "start")?,
            stop: num(stop, "stop")?,
            step: num(step, "step")?,
        };
        if g.step <= 0.0 {
            return Err(GridError("grid step must be positive".into()));
        }
        if g.stop < g.start {
            return Err(GridError(format!(
                "grid is descending: {} > {}",
                g.start, g.stop
            )));
        }
        Ok(g)
    }
}

impl fmt::Display for GridSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}:{}", self.start, self.stop, self.step)
    }
}
