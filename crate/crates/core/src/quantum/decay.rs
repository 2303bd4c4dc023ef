use rayon::prelude::*;

use crate::error::{invalid, Result};
use crate::numcore::{RngStream, TimeSeries};

/// Single-species exponential decay with a fixed simulation step.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DecayModel {
    n0: u64,
    lambda: f64,
    dt: f64,
    t_max: f64,
}

impl DecayModel {
    pub fn with_lambda(n0: u64, lambda: f64, dt: f64, t_max: f64) -> Result<Self> {
        if n0 < 1 {
            return Err(invalid("n0", "initial count must be >= 1"));
        }
        if !(lambda >= 0.0 && lambda.is_finite()) {
            return Err(invalid(
                "lambda",
                format!("decay constant must be finite and >= 0, got {lambda}"),
            ));
        }
        if !(dt > 0.0 && dt.is_finite()) {
            return Err(invalid("dt", format!("step must be positive, got {dt}")));
        }
        if !(t_max >= dt && t_max.is_finite()) {
            return Err(invalid(
                "t_max",
                format!("horizon must be finite and >= dt, got {t_max}"),
            ));
        }
        Ok(Self {
            n0,
            lambda,
            dt,
            t_max,
        })
    }

    /// `lambda = ln 2 / half_life`.
    pub fn with_half_life(n0: u64, half_life: f64, dt: f64, t_max: f64) -> Result<Self> {
        if !(half_life > 0.0) {
            return Err(invalid(
                "half_life",
                format!("must be positive, got {half_life}"),
            ));
        }
        Self::with_lambda(n0, std::f64::consts::LN_2 / half_life, dt, t_max)
    }

    pub fn n0(&self) -> u64 {
        self.n0
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    /// Infinite when `lambda == 0`.
    pub fn half_life(&self) -> f64 {
        std::f64::consts::LN_2 / self.lambda
    }

    pub fn dt(&self) -> f64 {
        self.dt
    }

    pub fn t_max(&self) -> f64 {
        self.t_max
    }

    /// Number of whole steps that fit in the horizon.
    pub fn steps(&self) -> usize {
        (self.t_max / self.dt * (1.0 + 1e-12)).floor() as usize
    }

    /// Probability that one nucleus decays during one step, `1 - exp(-lambda dt)`.
    pub fn step_decay_probability(&self) -> f64 {
        -(-self.lambda * self.dt).exp_m1()
    }
}

/// Expected count `N0 exp(-lambda t)`, not rounded.
pub fn decay_analytic(model: &DecayModel, t: f64) -> f64 {
    model.n0 as f64 * (-model.lambda * t).exp()
}

/// Monte Carlo decay with columns `t, n_remaining, n_analytic`.
///
/// Every surviving nucleus draws one uniform number per step from a
/// [`RngStream`] seeded with `seed`, in nucleus order, and decays when the
/// draw falls below [`DecayModel::step_decay_probability`].
pub fn decay_simulate(model: &DecayModel, seed: u64) -> TimeSeries {
    let mut rng = RngStream::new(seed);
    let p = model.step_decay_probability();
    let mut series = TimeSeries::new(["n_remaining", "n_analytic"]).expect("static labels");
    let mut remaining = model.n0;
    for i in 0..=model.steps() {
        let t = i as f64 * model.dt;
        if i > 0 && p > 0.0 {
            let decayed = (0..remaining).filter(|_| rng.uniform() < p).count() as u64;
            remaining -= decayed;
        }
        series
            .push(t, &[remaining as f64, decay_analytic(model, t)])
            .expect("finite, increasing rows");
    }
    series
}

/// Runs [`decay_simulate`] once per seed in parallel; output order follows `seeds`.
pub fn decay_ensemble(model: &DecayModel, seeds: &[u64]) -> Vec<TimeSeries> {
    seeds
        .par_iter()
        .map(|&s| decay_simulate(model, s))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn analytic_values() {
        let m = DecayModel::with_half_life(1000, 1220.0, 10.0, 5000.0).unwrap();
        assert_eq!(decay_analytic(&m, 0.0), 1000.0);
        assert!((decay_analytic(&m, 1220.0) - 500.0).abs() < 1e-12 * 1000.0);
        let frozen = DecayModel::with_lambda(77, 0.0, 1.0, 10.0).unwrap();
        assert_eq!(decay_analytic(&frozen, 1e9), 77.0);
    }

    #[test]
    fn invariants_rejected() {
        assert!(DecayModel::with_lambda(0, 1.0, 1.0, 2.0).is_err());
        assert!(DecayModel::with_lambda(10, -1.0, 1.0, 2.0).is_err());
        assert!(DecayModel::with_lambda(10, 1.0, 0.0, 2.0).is_err());
        assert!(DecayModel::with_lambda(10, 1.0, 2.0, 1.0).is_err());
    }

    #[test]
    fn no_decay_when_lambda_zero() {
        let m = DecayModel::with_lambda(100, 0.0, 1.0, 5.0).unwrap();
        let s = decay_simulate(&m, 7);
        assert_eq!(s.len(), 6);
        assert!(s.column("n_remaining").unwrap().iter().all(|&n| n == 100.0));
    }

    #[test]
    fn huge_rate_empties_quickly() {
        let m = DecayModel::with_lambda(1000, 5.0, 10.0, 50.0).unwrap();
        for seed in 0..20 {
            let n = decay_simulate(&m, seed).column("n_remaining").unwrap();
            assert_eq!(n[2], 0.0);
        }
    }

    #[test]
    fn counts_are_integer_and_non_increasing() {
        let m = DecayModel::with_half_life(5000, 100.0, 5.0, 600.0).unwrap();
        let s = decay_simulate(&m, 3);
        let n = s.column("n_remaining").unwrap();
        assert!(n.windows(2).all(|w| w[1] <= w[0]));
        assert!(n.iter().all(|v| v.fract() == 0.0 && *v >= 0.0));
        assert_eq!(s.times().last().copied(), Some(600.0));
    }

    #[test]
    fn ensemble_matches_sequential() {
        let m = DecayModel::with_half_life(500, 50.0, 5.0, 100.0).unwrap();
        let seeds: Vec<u64> = (10..26).collect();
        let par = decay_ensemble(&m, &seeds);
        for (s, series) in seeds.iter().zip(&par) {
            assert_eq!(series, &decay_simulate(&m, *s));
        }
    }
}
