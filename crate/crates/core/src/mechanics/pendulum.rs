use super::step_count;
use crate::error::{invalid, Result};
use crate::numcore::{rk4_step, TimeSeries};

/// Standard gravity, m/s².
pub const STANDARD_GRAVITY: f64 = 9.80665;

/// Simple pendulum `theta'' = -(g/L) sin(theta)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PendulumParams {
    pub length: f64,
    pub g: f64,
    pub theta0: f64,
    pub omega0: f64,
}

impl PendulumParams {
    pub fn new(length: f64, g: f64, theta0: f64, omega0: f64) -> Result<Self> {
        if !(length > 0.0 && length.is_finite()) {
            return Err(invalid("length", format!("must be positive, got {length}")));
        }
        if !(g > 0.0 && g.is_finite()) {
            return Err(invalid("g", format!("must be positive, got {g}")));
        }
        if !theta0.is_finite() || !omega0.is_finite() {
            return Err(invalid("theta0/omega0", "must be finite"));
        }
        Ok(Self {
            length,
            g,
            theta0,
            omega0,
        })
    }

    /// Small-angle angular frequency `sqrt(g/L)`.
    pub fn small_angle_omega(&self) -> f64 {
        (self.g / self.length).sqrt()
    }

    pub fn small_angle_period(&self) -> f64 {
        2.0 * std::f64::consts::PI / self.small_angle_omega()
    }

    pub fn small_angle_theta(&self, t: f64) -> f64 {
        let w = self.small_angle_omega();
        self.theta0 * (w * t).cos() + self.omega0 / w * (w * t).sin()
    }
}

/// Energy per unit mass, `L^2 w^2 / 2 + g L (1 - cos theta)`.
pub fn pendulum_energy(p: &PendulumParams, theta: f64, omega: f64) -> f64 {
    0.5 * p.length * p.length * omega * omega + p.g * p.length * (1.0 - theta.cos())
}

/// RK4 on the nonlinear equation; columns `t, theta, omega, theta_small_angle`.
pub fn simulate_pendulum(p: &PendulumParams, dt: f64, t_max: f64) -> Result<TimeSeries> {
    if !(dt > 0.0) || !(t_max >= dt) {
        return Err(invalid(
            "dt",
            format!("need 0 < dt <= t_max (dt = {dt}, t_max = {t_max})"),
        ));
    }
    let w2 = p.g / p.length;
    let mut f = |_: f64, y: &[f64]| vec![y[1], -w2 * y[0].sin()];
    let mut series = TimeSeries::new(["theta", "omega", "theta_small_angle"])?;
    let mut y = vec![p.theta0, p.omega0];
    for i in 0..=step_count(dt, t_max) {
        let t = i as f64 * dt;
        if i > 0 {
            y = rk4_step(&mut f, (i - 1) as f64 * dt, &y, dt)?;
        }
        series.push(t, &[y[0], y[1], p.small_angle_theta(t)])?;
    }
    Ok(series)
}

/// Mean period from zero crossings of the angular velocity column,
/// located by linear interpolation. Needs at least three crossings.
pub fn measured_period(series: &TimeSeries) -> Option<f64> {
    let t = series.times();
    let w = series.column("omega")?;
    let crossings: Vec<f64> = (1..w.len())
        .filter(|&i| (w[i - 1] < 0.0 && w[i] >= 0.0) || (w[i - 1] > 0.0 && w[i] <= 0.0))
        .map(|i| t[i - 1] + (t[i] - t[i - 1]) * w[i - 1] / (w[i - 1] - w[i]))
        .collect();
    if crossings.len() < 3 {
        return None;
    }
    // crossings alternate direction; a full period spans two of them
    let spans: Vec<f64> = crossings.windows(3).map(|c| c[2] - c[0]).collect();
    Some(spans.iter().sum::<f64>() / spans.len() as f64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn small_angle_limit() {
        let p = PendulumParams::new(1.0, STANDARD_GRAVITY, 1e-4, 0.0).unwrap();
        let s = simulate_pendulum(&p, 1e-3, p.small_angle_period()).unwrap();
        for row in s.rows() {
            assert!((row[1] - row[3]).abs() < 1e-9);
        }
    }

    #[test]
    fn small_angle_error_is_cubic() {
        let err = |theta0: f64| {
            let p = PendulumParams::new(1.0, 1.0, theta0, 0.0).unwrap();
            let s = simulate_pendulum(&p, 1e-3, p.small_angle_period()).unwrap();
            s.rows()
                .iter()
                .map(|r| (r[1] - r[3]).abs())
                .fold(0.0, f64::max)
        };
        let ratio = err(0.2) / err(0.1);
        assert!((ratio - 8.0).abs() < 0.3 * 8.0, "ratio {ratio}");
    }

    #[test]
    fn energy_conserved() {
        let p = PendulumParams::new(1.0, 1.0, 1.0, 0.0).unwrap();
        let s = simulate_pendulum(&p, 1e-4, 10.0 * 2.0 * PI).unwrap();
        let e0 = pendulum_energy(&p, p.theta0, p.omega0);
        let worst = s
            .rows()
            .iter()
            .map(|r| (pendulum_energy(&p, r[1], r[2]) - e0).abs() / e0)
            .fold(0.0, f64::max);
        assert!(worst < 1e-8, "{worst}");
    }

    #[test]
    fn period_of_small_swing() {
        let p = PendulumParams::new(2.0, STANDARD_GRAVITY, 0.01, 0.0).unwrap();
        let s = simulate_pendulum(&p, 1e-3, 5.0 * p.small_angle_period()).unwrap();
        let period = measured_period(&s).unwrap();
        assert!((period / p.small_angle_period() - 1.0).abs() < 1e-4);
    }

    #[test]
    fn rejects_bad_params() {
        assert!(PendulumParams::new(0.0, 9.8, 0.1, 0.0).is_err());
        assert!(PendulumParams::new(1.0, -9.8, 0.1, 0.0).is_err());
    }
}
