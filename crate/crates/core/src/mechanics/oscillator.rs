//! `m x'' + r x' + k x = F0 cos(omega_d t)`.

use std::f64::consts::PI;

use super::step_count;
use crate::error::{invalid, Error, Result};
use crate::numcore::{rk4_step, TimeSeries};

/// Mass, damping, stiffness, drive and initial state of a linear oscillator.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OscillatorParams {
    pub m: f64,
    pub r: f64,
    pub k: f64,
    pub f0: f64,
    pub omega_d: f64,
    pub x0: f64,
    pub v0: f64,
}

impl OscillatorParams {
    pub fn new(m: f64, r: f64, k: f64, f0: f64, omega_d: f64, x0: f64, v0: f64) -> Result<Self> {
        let p = Self {
            m,
            r,
            k,
            f0,
            omega_d,
            x0,
            v0,
        };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        let finite = [
            self.m,
            self.r,
            self.k,
            self.f0,
            self.omega_d,
            self.x0,
            self.v0,
        ];
        if finite.iter().any(|v| !v.is_finite()) {
            return Err(invalid("oscillator", "parameters must be finite"));
        }
        if !(self.m > 0.0) {
            return Err(invalid(
                "m",
                format!("mass must be positive, got {}", self.m),
            ));
        }
        if !(self.k > 0.0) {
            return Err(invalid(
                "k",
                format!("spring constant must be positive, got {}", self.k),
            ));
        }
        if self.r < 0.0 {
            return Err(invalid(
                "r",
                format!("damping must be >= 0, got {}", self.r),
            ));
        }
        if self.f0 < 0.0 {
            return Err(invalid(
                "f0",
                format!("drive amplitude must be >= 0, got {}", self.f0),
            ));
        }
        if self.omega_d < 0.0 {
            return Err(invalid(
                "omega_d",
                format!("drive frequency must be >= 0, got {}", self.omega_d),
            ));
        }
        Ok(())
    }

    /// Undamped natural frequency `sqrt(k/m)`.
    pub fn natural_omega(&self) -> f64 {
        (self.k / self.m).sqrt()
    }

    pub fn acceleration(&self, t: f64, x: f64, v: f64) -> f64 {
        (self.f0 * (self.omega_d * t).cos() - self.r * v - self.k * x) / self.m
    }

    fn is_undamped_resonance(&self) -> bool {
        self.r == 0.0 && (self.k - self.m * self.omega_d * self.omega_d).abs() <= 1e-12 * self.k
    }
}

/// One thousandth of the shortest period among the natural and drive frequencies.
pub fn default_time_step(p: &OscillatorParams) -> f64 {
    2.0 * PI / p.natural_omega().max(p.omega_d) / 1000.0
}

/// RK4 trajectory with columns `t, x, v, a`.
pub fn simulate_oscillator(p: &OscillatorParams, dt: f64, t_max: f64) -> Result<TimeSeries> {
    p.validate()?;
    if !(dt > 0.0) || !(t_max >= dt) {
        return Err(invalid(
            "dt",
            format!("need 0 < dt <= t_max (dt = {dt}, t_max = {t_max})"),
        ));
    }
    let mut f = |t: f64, y: &[f64]| vec![y[1], p.acceleration(t, y[0], y[1])];
    let mut series = TimeSeries::new(["x", "v", "a"])?;
    let mut y = vec![p.x0, p.v0];
    for i in 0..=step_count(dt, t_max) {
        let t = i as f64 * dt;
        if i > 0 {
            y = rk4_step(&mut f, (i - 1) as f64 * dt, &y, dt)?;
        }
        series.push(t, &[y[0], y[1], p.acceleration(t, y[0], y[1])])?;
    }
    Ok(series)
}

/// Steady-state amplitude `F0 / sqrt((k - m w^2)^2 + (r w)^2)`.
pub fn steady_state_amplitude(p: &OscillatorParams) -> Result<f64> {
    if p.is_undamped_resonance() {
        return Err(Error::UndampedResonance);
    }
    let detune = p.k - p.m * p.omega_d * p.omega_d;
    Ok(p.f0 / detune.hypot(p.r * p.omega_d))
}

/// Phase lag `phi` of the steady state `A cos(w t - phi)`, in `[0, pi]`.
pub fn steady_state_phase(p: &OscillatorParams) -> Result<f64> {
    if p.is_undamped_resonance() {
        return Err(Error::UndampedResonance);
    }
    Ok((p.r * p.omega_d).atan2(p.k - p.m * p.omega_d * p.omega_d))
}

/// Homogeneous part of the linear solution, as a function of time.
enum Transient {
    Under {
        gamma: f64,
        omega: f64,
        c1: f64,
        c2: f64,
    },
    Critical {
        gamma: f64,
        c1: f64,
        c2: f64,
    },
    Over {
        s1: f64,
        s2: f64,
        c1: f64,
        c2: f64,
    },
}

impl Transient {
    fn new(p: &OscillatorParams, x_h0: f64, v_h0: f64) -> Self {
        let gamma = p.r / (2.0 * p.m);
        let w0_sq = p.k / p.m;
        let disc = p.r * p.r - 4.0 * p.m * p.k;
        if disc.abs() < 1e-9 * (p.r * p.r + 4.0 * p.m * p.k) {
            Self::Critical {
                gamma,
                c1: x_h0,
                c2: v_h0 + gamma * x_h0,
            }
        } else if disc < 0.0 {
            let omega = (w0_sq - gamma * gamma).sqrt();
            Self::Under {
                gamma,
                omega,
                c1: x_h0,
                c2: (v_h0 + gamma * x_h0) / omega,
            }
        } else {
            let root = (gamma * gamma - w0_sq).sqrt();
            let s2 = -gamma - root;
            // s1 * s2 = w0^2 avoids cancellation in -gamma + root.
            let s1 = w0_sq / s2;
            let c1 = (v_h0 - s2 * x_h0) / (s1 - s2);
            Self::Over {
                s1,
                s2,
                c1,
                c2: x_h0 - c1,
            }
        }
    }

    fn at(&self, t: f64) -> f64 {
        match *self {
            Self::Under {
                gamma,
                omega,
                c1,
                c2,
            } => {
                let (s, c) = (omega * t).sin_cos();
                (-gamma * t).exp() * (c1 * c + c2 * s)
            }
            Self::Critical { gamma, c1, c2 } => (-gamma * t).exp() * (c1 + c2 * t),
            Self::Over { s1, s2, c1, c2 } => c1 * (s1 * t).exp() + c2 * (s2 * t).exp(),
        }
    }
}

/// Closed-form solution of the linear equation matched to `x0, v0`:
/// the steady state plus the decaying homogeneous part.
pub fn analytic_displacement(p: &OscillatorParams) -> Result<impl Fn(f64) -> f64> {
    let amp = steady_state_amplitude(p)?;
    let phase = steady_state_phase(p)?;
    let w = p.omega_d;
    let x_h0 = p.x0 - amp * phase.cos();
    let v_h0 = p.v0 - amp * w * phase.sin();
    let transient = Transient::new(p, x_h0, v_h0);
    Ok(move |t: f64| amp * (w * t - phase).cos() + transient.at(t))
}

/// Numeric and closed-form trajectories side by side.
#[derive(Debug, Clone, PartialEq)]
pub struct OscillatorComparison {
    /// Columns `t, x_numeric, x_analytic, abs_error`.
    pub series: TimeSeries,
    /// Largest `abs_error` over the last 20% of rows.
    pub tail_max_error: f64,
}

pub fn compare_analytic_numeric(
    p: &OscillatorParams,
    dt: f64,
    t_max: f64,
) -> Result<OscillatorComparison> {
    let exact = analytic_displacement(p)?;
    let numeric = simulate_oscillator(p, dt, t_max)?;
    let mut series = TimeSeries::new(["x_numeric", "x_analytic", "abs_error"])?;
    for row in numeric.rows() {
        let (t, xn) = (row[0], row[1]);
        let xa = exact(t);
        series.push(t, &[xn, xa, (xn - xa).abs()])?;
    }
    let n = series.len();
    let tail_start = n - (n / 5).max(1);
    let tail_max_error = series.rows()[tail_start..]
        .iter()
        .map(|r| r[3])
        .fold(0.0, f64::max);
    Ok(OscillatorComparison {
        series,
        tail_max_error,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(m: f64, r: f64, k: f64, f0: f64, w: f64, x0: f64, v0: f64) -> OscillatorParams {
        OscillatorParams::new(m, r, k, f0, w, x0, v0).unwrap()
    }

    #[test]
    fn free_undamped_is_cosine() {
        let p = params(1.0, 0.0, 1.0, 0.0, 0.0, 1.0, 0.0);
        let s = simulate_oscillator(&p, 1e-3, 2.0 * PI).unwrap();
        // the horizon is not a whole number of steps; step to 2*pi exactly
        let last = s.last().unwrap();
        let mut y = vec![last[1], last[2]];
        let rest = 2.0 * PI - last[0];
        if rest > 0.0 {
            y = rk4_step(&mut |_, y: &[f64]| vec![y[1], -y[0]], last[0], &y, rest).unwrap();
        }
        assert!((y[0] - 1.0).abs() < 1e-6);
    }

    #[test]
    fn overdamped_decays_monotonically() {
        // slow root -1/(5 + sqrt(24)) ~ -0.101, so x(20) is still ~0.135
        let p = params(1.0, 10.0, 1.0, 0.0, 0.0, 1.0, 0.0);
        let s = simulate_oscillator(&p, 1e-3, 80.0).unwrap();
        let x = s.column("x").unwrap();
        assert!(x.windows(2).skip(1).all(|w| w[1].abs() <= w[0].abs()));
        let exact = analytic_displacement(&p).unwrap();
        assert!((x[20_000] - exact(20.0)).abs() < 1e-9);
        assert!(x.last().unwrap().abs() < 1e-3);
    }

    #[test]
    fn acceleration_column_is_rhs() {
        let p = params(2.0, 0.3, 5.0, 1.5, 1.7, 0.2, -0.4);
        let s = simulate_oscillator(&p, 0.01, 3.0).unwrap();
        for row in s.rows() {
            let expect = (p.f0 * (p.omega_d * row[0]).cos() - p.r * row[2] - p.k * row[1]) / p.m;
            assert_eq!(row[3], expect);
        }
    }

    #[test]
    fn static_and_resonant_steady_states() {
        let p = params(1.0, 0.5, 4.0, 2.0, 0.0, 0.0, 0.0);
        assert_eq!(steady_state_amplitude(&p).unwrap(), 0.5);
        assert_eq!(steady_state_phase(&p).unwrap(), 0.0);
        let p = params(1.0, 0.1, 1.0, 1.0, 1.0, 0.0, 0.0);
        assert!((steady_state_amplitude(&p).unwrap() - 10.0).abs() < 1e-12);
        assert!((steady_state_phase(&p).unwrap() - PI / 2.0).abs() < 1e-15);
        let p = params(1.0, 0.0, 1.0, 1.0, 1.0, 0.0, 0.0);
        assert_eq!(steady_state_amplitude(&p), Err(Error::UndampedResonance));
        assert!(compare_analytic_numeric(&p, 0.01, 1.0).is_err());
    }

    #[test]
    fn undamped_closed_form() {
        let p = params(2.0, 0.0, 8.0, 0.0, 0.0, 0.3, 0.7);
        let x = analytic_displacement(&p).unwrap();
        let w: f64 = 2.0;
        for t in [0.0, 0.4, 1.3, 7.9] {
            let expect = 0.3 * (w * t).cos() + 0.7 / w * (w * t).sin();
            assert!((x(t) - expect).abs() < 1e-12);
        }
    }

    #[test]
    fn all_damping_regimes_match_numerics() {
        // under, critical (r^2 = 4mk), over
        for r in [0.2, 2.0, 6.0] {
            let p = params(1.0, r, 1.0, 1.0, 0.5, 0.4, -0.3);
            let cmp = compare_analytic_numeric(&p, 1e-3, 30.0).unwrap();
            let worst = cmp
                .series
                .column("abs_error")
                .unwrap()
                .into_iter()
                .fold(0.0, f64::max);
            assert!(worst < 1e-6, "r = {r}: {worst}");
            for row in cmp.series.rows() {
                assert_eq!(row[3], (row[1] - row[2]).abs());
            }
        }
    }

    #[test]
    fn resonance_peak_location() {
        let (m, k, r) = (1.0, 4.0, 0.5);
        let h = 1e-4;
        let (best, _) = (1..40_000)
            .map(|i| {
                let w = i as f64 * h;
                let p = params(m, r, k, 1.0, w, 0.0, 0.0);
                (w, steady_state_amplitude(&p).unwrap())
            })
            .fold((0.0, 0.0), |acc, x| if x.1 > acc.1 { x } else { acc });
        let expect = (k / m - r * r / (2.0 * m * m)).sqrt();
        assert!((best - expect).abs() <= h);
    }

    #[test]
    fn invalid_parameters() {
        assert!(OscillatorParams::new(0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0).is_err());
        assert!(OscillatorParams::new(1.0, -0.1, 1.0, 0.0, 0.0, 0.0, 0.0).is_err());
        assert!(OscillatorParams::new(1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0).is_err());
    }
}
