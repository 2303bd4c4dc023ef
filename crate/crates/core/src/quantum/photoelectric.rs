use super::constants::PhysicalConstants;
use crate::error::{invalid, Error, Result};

/// Incident light frequency and the surface's threshold frequency, both in Hz.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhotoelectricInput {
    f: f64,
    f0: f64,
}

impl PhotoelectricInput {
    pub fn new(f: f64, f0: f64) -> Result<Self> {
        if !(f > 0.0 && f.is_finite()) {
            return Err(invalid("f", format!("frequency must be positive, got {f}")));
        }
        if !(f0 > 0.0 && f0.is_finite()) {
            return Err(invalid(
                "f0",
                format!("threshold frequency must be positive, got {f0}"),
            ));
        }
        Ok(Self { f, f0 })
    }

    pub fn f(&self) -> f64 {
        self.f
    }

    pub fn f0(&self) -> f64 {
        self.f0
    }

    fn excess(&self) -> Result<f64> {
        if self.f < self.f0 {
            Err(Error::BelowThreshold {
                f: self.f,
                f0: self.f0,
            })
        } else {
            Ok(self.f - self.f0)
        }
    }
}

/// Kinetic energy of the fastest photoelectron, `h (f - f0)`, in J.
pub fn max_kinetic_energy(inp: &PhotoelectricInput, consts: &PhysicalConstants) -> Result<f64> {
    Ok(consts.h * inp.excess()?)
}

/// Speed of the fastest photoelectron, `sqrt(2 E_k / m_e)`, in m/s.
pub fn max_speed(inp: &PhotoelectricInput, consts: &PhysicalConstants) -> Result<f64> {
    Ok((2.0 * max_kinetic_energy(inp, consts)? / consts.m_e).sqrt())
}

/// Reverse voltage at which the photocurrent vanishes, `h (f - f0) / e`.
pub fn stopping_voltage(inp: &PhotoelectricInput, consts: &PhysicalConstants) -> Result<f64> {
    Ok(max_kinetic_energy(inp, consts)? / consts.e)
}
