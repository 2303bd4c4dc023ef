use crate::error::{invalid, Result};

/// Composite trapezoid rule over equally spaced samples.
pub fn trapezoid(values: &[f64], dx: f64) -> Result<f64> {
    if values.len() < 2 {
        return Err(invalid("values", "need at least two samples"));
    }
    if !(dx > 0.0) {
        return Err(invalid("dx", format!("spacing must be positive, got {dx}")));
    }
    let n = values.len();
    let interior: f64 = values[1..n - 1].iter().sum();
    Ok(dx * (0.5 * (values[0] + values[n - 1]) + interior))
}
