//! Temperature conversion and factorial-vs-Stirling comparison tables.

use std::f64::consts::{E, PI};

use crate::error::{invalid, Result};
use crate::numcore::Table;

/// Largest `n` whose factorial is finite in double precision.
pub const MAX_FACTORIAL_N: u32 = 170;

pub fn celsius_to_fahrenheit(c: f64) -> f64 {
    9.0 * c / 5.0 + 32.0
}

/// Rows `celsius, fahrenheit` for `celsius = start, start + step, ...` up to `stop`.
pub fn fahrenheit_celsius_table(start: f64, stop: f64, step: f64) -> Result<Table> {
    if !(step > 0.0 && step.is_finite()) {
        return Err(invalid("step", format!("must be positive, got {step}")));
    }
    if !start.is_finite() || !stop.is_finite() || stop < start {
        return Err(invalid(
            "stop",
            format!("need finite start <= stop ({start} > {stop})"),
        ));
    }
    let count = ((stop - start) / step * (1.0 + 1e-12)).floor() as usize + 1;
    let mut table = Table::new(["celsius", "fahrenheit"])?;
    for i in 0..count {
        let c = start + i as f64 * step;
        table.push(vec![c, celsius_to_fahrenheit(c)])?;
    }
    Ok(table)
}

/// `sqrt(2 pi n) (n/e)^n`.
pub fn stirling(n: u32) -> f64 {
    let n = n as f64;
    (2.0 * PI * n).sqrt() * (n / E).powf(n)
}

/// Rows `n, factorial, stirling, relative_error` for `n = 1..=n_max`.
pub fn stirling_table(n_max: u32) -> Result<Table> {
    if !(1..=MAX_FACTORIAL_N).contains(&n_max) {
        return Err(invalid(
            "n_max",
            format!("must lie in 1..={MAX_FACTORIAL_N}, got {n_max}"),
        ));
    }
    let mut table = Table::new(["n", "factorial", "stirling", "relative_error"])?;
    let mut factorial = 1.0;
    for n in 1..=n_max {
        factorial *= n as f64;
        let approx = stirling(n);
        table.push(vec![
            n as f64,
            factorial,
            approx,
            (factorial - approx) / factorial,
        ])?;
    }
    Ok(table)
}
