use crate::error::{invalid, Result};
use crate::numcore::TimeSeries;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CircularMotionParams {
    radius: f64,
    omega: f64,
}

impl CircularMotionParams {
    pub fn new(radius: f64, omega: f64) -> Result<Self> {
        if !(radius > 0.0 && radius.is_finite()) {
            return Err(invalid("radius", format!("must be positive, got {radius}")));
        }
        if omega == 0.0 || !omega.is_finite() {
            return Err(invalid(
                "omega",
                format!("must be finite and non-zero, got {omega}"),
            ));
        }
        Ok(Self { radius, omega })
    }

    pub fn radius(&self) -> f64 {
        self.radius
    }

    pub fn omega(&self) -> f64 {
        self.omega
    }

    pub fn period(&self) -> f64 {
        2.0 * std::f64::consts::PI / self.omega.abs()
    }
}

/// `(R cos wt, R sin wt)`.
pub fn circular_position(p: &CircularMotionParams, t: f64) -> (f64, f64) {
    let (s, c) = (p.omega * t).sin_cos();
    (p.radius * c, p.radius * s)
}

/// `samples` uniformly spaced positions from `t0` to `t1` inclusive.
pub fn circular_trajectory(
    p: &CircularMotionParams,
    t0: f64,
    t1: f64,
    samples: usize,
) -> Result<TimeSeries> {
    if !(t1 > t0) || !t0.is_finite() || !t1.is_finite() {
        return Err(invalid("t1", format!("must exceed t0 ({t1} <= {t0})")));
    }
    if samples < 2 {
        return Err(invalid(
            "samples",
            format!("need at least 2, got {samples}"),
        ));
    }
    let mut series = TimeSeries::new(["x", "y"])?;
    let step = (t1 - t0) / (samples - 1) as f64;
    for i in 0..samples {
        let t = if i + 1 == samples {
            t1
        } else {
            t0 + i as f64 * step
        };
        let (x, y) = circular_position(p, t);
        series.push(t, &[x, y])?;
    }
    Ok(series)
}
