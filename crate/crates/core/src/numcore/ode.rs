use super::series::TimeSeries;
use crate::error::{invalid, Error, Result};

/// One classical fourth-order Runge–Kutta step of `y' = f(t, y)`.
pub fn rk4_step<F>(f: &mut F, t: f64, y: &[f64], dt: f64) -> Result<Vec<f64>>
where
    F: FnMut(f64, &[f64]) -> Vec<f64>,
{
    if !(dt > 0.0) {
        return Err(invalid("dt", format!("step must be positive, got {dt}")));
    }
    let half = 0.5 * dt;
    let axpy =
        |a: f64, k: &[f64]| -> Vec<f64> { y.iter().zip(k).map(|(yi, ki)| yi + a * ki).collect() };
    let check = |k: Vec<f64>, at: f64| -> Result<Vec<f64>> {
        if k.len() != y.len() {
            return Err(invalid(
                "f",
                format!("returned {} components for a state of {}", k.len(), y.len()),
            ));
        }
        if k.iter().all(|v| v.is_finite()) {
            Ok(k)
        } else {
            Err(Error::IntegrationDiverged { t: at })
        }
    };

    let k1 = check(f(t, y), t)?;
    let k2 = check(f(t + half, &axpy(half, &k1)), t + half)?;
    let k3 = check(f(t + half, &axpy(half, &k2)), t + half)?;
    let k4 = check(f(t + dt, &axpy(dt, &k3)), t + dt)?;

    let next: Vec<f64> = (0..y.len())
        .map(|i| y[i] + dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]))
        .collect();
    if next.iter().all(|v| v.is_finite()) {
        Ok(next)
    } else {
        Err(Error::IntegrationDiverged { t: t + dt })
    }
}

/// Integrates `steps` fixed RK4 steps from `(t0, y0)`.
///
/// Row `i` sits at `t0 + i*dt`; state columns are labelled `y0, y1, ...`.
pub fn integrate_fixed<F>(
    mut f: F,
    t0: f64,
    y0: &[f64],
    dt: f64,
    steps: usize,
) -> Result<TimeSeries>
where
    F: FnMut(f64, &[f64]) -> Vec<f64>,
{
    if steps == 0 {
        return Err(invalid("steps", "need at least one step"));
    }
    if !(dt > 0.0) {
        return Err(invalid("dt", format!("step must be positive, got {dt}")));
    }
    let mut series = TimeSeries::new((0..y0.len()).map(|i| format!("y{i}")))?;
    series.push(t0, y0)?;
    let mut y = y0.to_vec();
    for i in 0..steps {
        let t = t0 + i as f64 * dt;
        y = rk4_step(&mut f, t, &y, dt)?;
        series.push(t0 + (i + 1) as f64 * dt, &y)?;
    }
    Ok(series)
}
