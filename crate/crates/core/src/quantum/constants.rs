use std::f64::consts::PI;

/// Physical constants in SI units.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhysicalConstants {
    /// Planck constant, J·s.
    pub h: f64,
    /// Elementary charge, C.
    pub e: f64,
    /// Electron mass, kg.
    pub m_e: f64,
    /// Reduced Planck constant, J·s.
    pub hbar: f64,
}

impl PhysicalConstants {
    /// CODATA 2018 values (h and e are exact by SI definition).
    pub const CODATA_2018: Self = Self {
        h: 6.626_070_15e-34,
        e: 1.602_176_634e-19,
        m_e: 9.109_383_701_5e-31,
        hbar: 6.626_070_15e-34 / (2.0 * PI),
    };
}

impl Default for PhysicalConstants {
    fn default() -> Self {
        Self::CODATA_2018
    }
}
